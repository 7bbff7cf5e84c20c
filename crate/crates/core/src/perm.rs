//! Permutations on `{0, …, n-1}`.
//!
//! Products are applied left to right: `p.compose(q)` sends `i` to `q(p(i))`.
//! Every equality in the crate assumes this convention. Points are 0-based in
//! memory and 1-based in cycle notation.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-based cycles. Cycles are applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::Parse(format!(
                        "point {} out of range 1..={degree}",
                        a + 1
                    )));
                }
                if cycle[..k].contains(&a) {
                    return Err(Error::Parse(format!("point {} repeated in a cycle", a + 1)));
                }
                images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
            p = p.compose(&Permutation { images })?;
        }
        Ok(p)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Least moved point, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &j)| i as u32 != j)
            .map(|(i, _)| i)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.mul(other))
    }

    /// Unchecked product used in hot loops; panics on a degree mismatch.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `p⁻¹ q⁻¹ p q`.
    pub fn commutator(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self
            .inverse()
            .mul(&other.inverse())
            .mul(self)
            .mul(other))
    }

    /// `g⁻¹ p g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        self.check_degree(g)?;
        Ok(self.conj(g))
    }

    #[inline]
    pub(crate) fn conj(&self, g: &Permutation) -> Permutation {
        // (g⁻¹ p g)(g(i)) = g(p(i))
        let mut images = vec![0u32; self.degree()];
        for (i, &pi) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[pi as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// least point and ordered by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.apply(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `m ≥ 1` with `p^m = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        parse_cycles(text, degree)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Parses 1-based cycle notation such as `"(1 2 3)(4 5)"`.
///
/// Points are separated by whitespace or commas. When the degree is at most
/// nine, a cycle written without separators (`"(23)(45)"`) is read digit by
/// digit. Overlapping cycles multiply left to right. `"()"`, `"e"` and the
/// empty string denote the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::Parse("degree must be at least 1".into()));
    }
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "e" {
        return Ok(Permutation::identity(degree));
    }
    let mut cycles = Vec::new();
    let mut rest = trimmed;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' in {text:?}")));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::Parse(format!("unclosed cycle in {text:?}")));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::Parse(format!("nested '(' in {text:?}")));
        }
        let cycle = parse_cycle_body(inner, degree)?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}

fn parse_cycle_body(inner: &str, degree: usize) -> Result<Vec<usize>> {
    let tokens: Vec<&str> = inner
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let tokens: Vec<String> = if tokens.len() == 1 && degree <= 9 && tokens[0].len() > 1 {
        tokens[0].chars().map(|c| c.to_string()).collect()
    } else {
        tokens.into_iter().map(str::to_string).collect()
    };
    let mut cycle = Vec::with_capacity(tokens.len());
    for t in &tokens {
        let point: usize = t
            .parse()
            .map_err(|_| Error::Parse(format!("bad point {t:?}")))?;
        if point == 0 || point > degree {
            return Err(Error::Parse(format!(
                "point {point} out of range 1..={degree}"
            )));
        }
        if cycle.contains(&(point - 1)) {
            return Err(Error::Parse(format!("point {point} repeated in a cycle")));
        }
        cycle.push(point - 1);
    }
    Ok(cycle)
}

/// Canonical cycle notation: disjoint cycles, 1-based, each starting at its
/// least point, ordered by least point, fixed points omitted; `()` for the
/// identity.
pub fn print_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut s = String::new();
    for c in cycles {
        s.push('(');
        for (k, a) in c.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            s.push_str(&(a + 1).to_string());
        }
        s.push(')');
    }
    s
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_cycles(self))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", print_cycles(self), self.degree())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&print_cycles(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // 1→2→3, 2→1→1, 3→3→2
        assert_eq!(p("(1 2)", 3).compose(&p("(2 3)", 3)).unwrap(), p("(1 3 2)", 3));
        let q = p("(1 2 3)(4 5)", 5);
        assert_eq!(Permutation::identity(5).compose(&q).unwrap(), q);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_mismatched_degrees() {
        let err = p("(1 2)", 3).compose(&p("(1 2)", 4)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { expected: 3, found: 4 });
    }

    #[test]
    fn inverses() {
        assert!(Permutation::identity(4).inverse().is_identity());
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert_eq!(p("(1 2)", 3).inverse(), p("(1 2)", 3));
    }

    #[test]
    fn element_orders() {
        assert_eq!(Permutation::identity(3).order(), 1);
        assert_eq!(p("(1 2)(3 4 5)", 5).order(), 6);
        let prod = p("(2 3)(4 5)", 5).compose(&p("(1 3)(4 5)", 5)).unwrap();
        assert_eq!(prod.order(), 3);
        assert!(prod.pow(3).is_identity());
    }

    #[test]
    fn parsing_and_printing() {
        let x1 = p("(2 3)(4 5)", 5);
        assert_eq!(x1.images(), &[0, 2, 1, 4, 3]);
        assert_eq!(p("(23)(45)", 5), x1);
        assert_eq!(p(" ( 2,3 ) (4 5) ", 5), x1);
        assert!(p("()", 4).is_identity());
        assert!(p("e", 4).is_identity());
        assert_eq!(print_cycles(&p("(1 3 2)", 3)), "(1 3 2)");
        assert_eq!(print_cycles(&p("(3 2 1)", 3)), "(1 3 2)");
        assert_eq!(print_cycles(&p("(4 5)(2 3)", 5)), "(2 3)(4 5)");
        assert_eq!(print_cycles(&Permutation::identity(7)), "()");
        // overlapping cycles multiply left to right
        assert_eq!(p("(1 2)(2 3)", 3), p("(1 3 2)", 3));
        assert_eq!(print_cycles(&p("(10 11 12)", 12)), "(10 11 12)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_cycles("(1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("1 2)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 x)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 4)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(0 1)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 2 1)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("((1 2))", 3), Err(Error::Parse(_))));
    }

    #[test]
    fn commutator_and_conjugate() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        let c = a.commutator(&b).unwrap();
        let expected = a
            .inverse()
            .compose(&b.inverse())
            .unwrap()
            .compose(&a)
            .unwrap()
            .compose(&b)
            .unwrap();
        assert_eq!(c, expected);
        let g = p("(1 2 3)", 3);
        let conj = a.conjugate(&g).unwrap();
        assert_eq!(conj, g.inverse().compose(&a).unwrap().compose(&g).unwrap());
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(vec![1, 0, 2]).is_ok());
        assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }
}

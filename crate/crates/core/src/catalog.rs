//! Fixed-generator constructors for the benchmark groups, and the name
//! grammar used on the command line.
//!
//! Generator choices (1-based cycle notation):
//!
//! | group | generators |
//! |---|---|
//! | `S_n` | `(1 2)`, `(1 2 … n)` |
//! | `A_n`, n odd | `(1 2 3)`, `(1 2 … n)` |
//! | `A_n`, n even | `(1 2 3)`, `(2 3 … n)` |
//! | `C_n` | `(1 2 … n)` |
//! | `D_n` | `(1 2 … n)`, `i ↦ n+1−i` (order `2n`, degree `n`) |
//! | `PSL(2,p)` | `z ↦ z+1`, `z ↦ −1/z` on `{0, …, p−1, ∞}` (∞ is point `p+1`) |
//!
//! Names: `S5`, `A6`, `C12`, `D8`, `PSL(2,7)`, products joined by `x`
//! (`A5xC3`), and a `wr2` suffix for the wreath product with `C2`
//! (`A5wr2`).

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

fn cycle_on(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let cycle: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[cycle]).expect("catalog cycle is valid")
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("S_n needs n >= 1".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_on(n, [0, 1]));
        gens.push(cycle_on(n, 0..n));
    }
    PermGroup::from_generators(n, &gens)
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("A_n needs n >= 1".into()));
    }
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle_on(n, [0, 1, 2]));
        if n % 2 == 1 {
            gens.push(cycle_on(n, 0..n));
        } else {
            gens.push(cycle_on(n, 1..n));
        }
    }
    PermGroup::from_generators(n, &gens)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("C_n needs n >= 1".into()));
    }
    let gens = if n >= 2 { vec![cycle_on(n, 0..n)] } else { vec![] };
    PermGroup::from_generators(n, &gens)
}

/// Symmetries of the regular `n`-gon acting on its vertices.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(invalid("D_n needs n >= 3".into()));
    }
    let reflection: Vec<u32> = (0..n as u32).map(|i| n as u32 - 1 - i).collect();
    let gens = vec![cycle_on(n, 0..n), Permutation::from_images(reflection)?];
    PermGroup::from_generators(n, &gens)
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// `PSL(2, p)` acting on the projective line; degree `p + 1`.
pub fn psl2(p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(invalid(format!("PSL(2,p) needs p prime, got {p}")));
    }
    let degree = (p + 1) as usize;
    let inf = p as u32;
    let translate: Vec<u32> = (0..p)
        .map(|z| ((z + 1) % p) as u32)
        .chain(std::iter::once(inf))
        .collect();
    let invert: Vec<u32> = (0..p)
        .map(|z| {
            if z == 0 {
                inf
            } else {
                ((p - mod_inverse(z, p)) % p) as u32
            }
        })
        .chain(std::iter::once(0))
        .collect();
    let gens = vec![
        Permutation::from_images(translate)?,
        Permutation::from_images(invert)?,
    ];
    PermGroup::from_generators(degree, &gens)
}

/// Shifts `g` onto the points `offset..offset+g.degree()` of a larger set.
fn embed(g: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in 0..g.degree() {
        images[offset + i] = (offset + g.apply(i)) as u32;
    }
    Permutation::from_images(images).expect("embedding preserves bijectivity")
}

/// `G × H` on the disjoint union of the two point sets, `G` first.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let degree = g.degree() + h.degree();
    let mut gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|x| embed(x, 0, degree))
        .collect();
    gens.extend(h.generators().iter().map(|x| embed(x, g.degree(), degree)));
    PermGroup::from_generators(degree, &gens).expect("degrees agree by construction")
}

/// `G ≀ C2 = (G × G) ⋊ ⟨swap⟩` on two disjoint copies of `G`'s points.
#[derive(Clone, Debug)]
pub struct WreathSwap {
    pub group: PermGroup,
    /// The base subgroup `G × G`.
    pub base: PermGroup,
    /// The involution exchanging the two copies pointwise.
    pub block_swap: Permutation,
}

pub fn wreath_swap(g: &PermGroup) -> WreathSwap {
    let n = g.degree();
    let base = direct_product(g, g);
    let swap: Vec<u32> = (0..2 * n).map(|i| ((i + n) % (2 * n)) as u32).collect();
    let block_swap = Permutation::from_images(swap).expect("swap is a bijection");
    let mut group = base.clone();
    group.adjoin(block_swap.clone());
    WreathSwap {
        group,
        base,
        block_swap,
    }
}

/// Names accepted by [`parse_group_name`], with a short description.
pub const CATALOG_EXAMPLES: &[(&str, &str)] = &[
    ("Sn", "symmetric group on n points"),
    ("An", "alternating group on n points"),
    ("Cn", "cyclic group generated by an n-cycle"),
    ("Dn", "dihedral group of order 2n on n points (n >= 3)"),
    ("PSL(2,p)", "PSL(2,p) on the p+1 points of the projective line"),
    ("GxH", "direct product on disjoint point sets, e.g. A5xC3"),
    ("Gwr2", "wreath product with C2, e.g. A5wr2"),
];

/// Parses a catalog name such as `S4xS3`, `PSL(2,7)` or `A5wr2`.
pub fn parse_group_name(name: &str) -> Result<PermGroup> {
    let name: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let factors = split_product(&name)?;
    let mut acc: Option<PermGroup> = None;
    for f in factors {
        let g = parse_factor(f)?;
        acc = Some(match acc {
            None => g,
            Some(a) => direct_product(&a, &g),
        });
    }
    acc.ok_or_else(|| invalid(format!("empty group name {name:?}")))
}

fn split_product(name: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in name.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' | '×' if depth == 0 => {
                parts.push(&name[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
        if depth < 0 {
            return Err(invalid(format!("unbalanced parentheses in {name:?}")));
        }
    }
    parts.push(&name[start..]);
    if parts.iter().any(|p| p.is_empty()) {
        return Err(invalid(format!("malformed product {name:?}")));
    }
    Ok(parts)
}

fn parse_factor(factor: &str) -> Result<PermGroup> {
    if let Some(inner) = factor.strip_suffix("wr2") {
        let g = parse_factor(inner)?;
        return Ok(wreath_swap(&g).group);
    }
    if let Some(rest) = factor.strip_prefix("PSL(2,") {
        let p = rest
            .strip_suffix(')')
            .and_then(|d| d.parse::<u64>().ok())
            .ok_or_else(|| invalid(format!("malformed {factor:?}")))?;
        return psl2(p);
    }
    let mut chars = factor.chars();
    let kind = chars.next().ok_or_else(|| invalid("empty factor".into()))?;
    let n: usize = chars
        .as_str()
        .parse()
        .map_err(|_| invalid(format!("unknown group {factor:?}")))?;
    match kind {
        'S' => symmetric(n),
        'A' => alternating(n),
        'C' => cyclic(n),
        'D' => dihedral(n),
        _ => Err(invalid(format!("unknown group {factor:?}"))),
    }
}

/// Reads the text group format: a `degree N` line, then one generator in
/// cycle notation per nonblank line. Lines starting with `#` are comments.
pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("group file is empty".into()))?;
    let degree: usize = header
        .strip_prefix("degree")
        .and_then(|d| d.trim().parse().ok())
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Parse(format!("expected 'degree N', found {header:?}")))?;
    let gens = lines
        .map(|l| crate::perm::parse_cycles(l, degree))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(degree, &gens)
}

/// A catalog name, or `@path` for a group file.
pub fn resolve_group(spec: &str) -> Result<PermGroup> {
    match spec.strip_prefix('@') {
        Some(path) => parse_group_file(&std::fs::read_to_string(path)?),
        None => parse_group_name(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> u64 {
        (1..=n).product()
    }

    #[test]
    fn closed_form_orders() {
        for n in 1..=7u64 {
            assert_eq!(symmetric(n as usize).unwrap().order(), factorial(n));
            let a = if n >= 2 { factorial(n) / 2 } else { 1 };
            assert_eq!(alternating(n as usize).unwrap().order(), a);
            assert_eq!(cyclic(n as usize).unwrap().order(), n);
        }
        for n in 3..=10u64 {
            assert_eq!(dihedral(n as usize).unwrap().order(), 2 * n);
        }
        assert!(cyclic(1).unwrap().is_trivial());
    }

    #[test]
    fn invalid_parameters() {
        assert!(symmetric(0).is_err());
        assert!(dihedral(2).is_err());
        assert!(psl2(4).is_err());
        assert!(psl2(1).is_err());
    }

    #[test]
    fn psl2_orders() {
        assert_eq!(psl2(2).unwrap().order(), 6);
        assert_eq!(psl2(3).unwrap().order(), 12);
        for p in [5u64, 7, 11, 13] {
            let g = psl2(p).unwrap();
            assert_eq!(g.degree(), (p + 1) as usize);
            assert_eq!(g.order(), p * (p * p - 1) / 2);
        }
        assert!(psl2(3).unwrap().is_solvable());
    }

    #[test]
    fn products_and_wreaths() {
        let a5 = alternating(5).unwrap();
        let c3 = cyclic(3).unwrap();
        assert_eq!(direct_product(&a5, &c3).order(), 180);
        assert_eq!(direct_product(&a5, &PermGroup::trivial(1)).order(), 60);
        let w = wreath_swap(&a5);
        assert_eq!(w.group.degree(), 10);
        assert_eq!(w.group.order(), 7200);
        assert_eq!(w.base.order(), 3600);
        assert_eq!(w.block_swap.to_string(), "(1 6)(2 7)(3 8)(4 9)(5 10)");
    }

    #[test]
    fn name_grammar() {
        assert_eq!(parse_group_name("S5").unwrap().order(), 120);
        assert_eq!(parse_group_name("A6").unwrap().order(), 360);
        assert_eq!(parse_group_name("C12").unwrap().order(), 12);
        assert_eq!(parse_group_name("D8").unwrap().order(), 16);
        assert_eq!(parse_group_name("PSL(2,7)").unwrap().order(), 168);
        assert_eq!(parse_group_name("A5xC3").unwrap().order(), 180);
        assert_eq!(parse_group_name("A5wr2").unwrap().order(), 7200);
        assert_eq!(parse_group_name("S4xS3").unwrap().order(), 144);
        assert_eq!(parse_group_name("PSL(2,5)xC2").unwrap().order(), 120);
        for bad in ["", "X5", "S", "A5x", "PSL(2,8)", "PSL(2,7"] {
            assert!(parse_group_name(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn group_files() {
        let g = parse_group_file("# A5\ndegree 5\n\n(1 2 3 4 5)\n(3 4 5)\n").unwrap();
        assert_eq!(g.order(), 60);
        assert!(parse_group_file("degree 3\n").unwrap().is_trivial());
        assert!(parse_group_file("").is_err());
        assert!(parse_group_file("deg 3\n(1 2)").is_err());
        assert!(parse_group_file("degree 3\n(1 4)").is_err());
    }
}

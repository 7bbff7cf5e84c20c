//! Permutation groups backed by a deterministic Schreier–Sims stabilizer chain.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Enumeration cap applied to every element-listing operation unless the
/// caller overrides it.
pub const DEFAULT_CAP: u64 = 10_000;

/// One level of the stabilizer chain: the strong generators fixing all
/// earlier base points, and the orbit of this level's base point under them.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`; paired with its inverse.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn extend_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let img = s.apply(b);
                if self.transversal[img].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().0.mul(s);
                    let u_inv = u.inverse();
                    self.transversal[img] = Some((u, u_inv));
                    self.orbit.push(img);
                }
            }
            i += 1;
        }
    }

    fn rep(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref().map(|(u, _)| u)
    }

    fn rep_inv(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref().map(|(_, v)| v)
    }
}

/// A finite permutation group with an eagerly built base and strong
/// generating set.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        assert!(degree >= 1, "group degree must be at least 1");
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Runs Schreier–Sims on the given generators. The base is chosen
    /// greedily as the least point moved by the element that opens a new
    /// level, so identical input yields an identical chain.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be at least 1".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut group = PermGroup::trivial(degree);
        for g in gens {
            group.adjoin(g.clone());
        }
        Ok(group)
    }

    /// Adds `g` as a generator, extending the chain if `g` is new. Returns
    /// whether the group grew.
    pub(crate) fn adjoin(&mut self, g: Permutation) -> bool {
        if g.is_identity() || self.contains(&g) {
            return false;
        }
        self.generators.push(g.clone());
        add_strong_generator(&mut self.levels, 0, g, self.degree);
        true
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Lengths of the fundamental orbits, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Sifts `p` through the chain; `p ∈ G` iff the residue is the identity.
    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && sift(&self.levels, 0, p.clone()).is_identity()
    }

    pub fn check_member(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        if !self.contains(p) {
            return Err(Error::NotMember(p.to_string()));
        }
        Ok(())
    }

    /// Every element exactly once. Level 0 varies slowest; the identity
    /// comes first.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        let mut out = vec![self.identity()];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &b in &level.orbit {
                let u = level.rep(b).unwrap();
                for h in &out {
                    next.push(h.mul(u));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Uniformly random element, drawn as a product of random coset
    /// representatives.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = self.identity();
        for level in self.levels.iter().rev() {
            let b = level.orbit[rng.random_range(0..level.orbit.len())];
            g = g.mul(level.rep(b).unwrap());
        }
        g
    }

    /// `self ≤ other`, tested on generators.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Equal order plus mutual generator membership.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    /// Closed under conjugation by the generators of `ambient`.
    pub fn is_normalized_by(&self, ambient: &PermGroup) -> bool {
        self.generators
            .iter()
            .all(|h| ambient.generators.iter().all(|a| self.contains(&h.conj(a))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut out = self.clone();
        for g in &other.generators {
            out.adjoin(g.clone());
        }
        out
    }

    /// Least subgroup containing `seeds` and normalized by `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            self.check_member(s)?;
        }
        Ok(self.normal_closure_unchecked(seeds))
    }

    fn normal_closure_unchecked(&self, seeds: &[Permutation]) -> PermGroup {
        let mut closure = PermGroup::trivial(self.degree);
        let mut pending: Vec<Permutation> = Vec::new();
        for s in seeds {
            if closure.adjoin(s.clone()) {
                pending.push(s.clone());
            }
        }
        while let Some(h) = pending.pop() {
            for a in &self.generators {
                let c = h.conj(a);
                if closure.adjoin(c.clone()) {
                    pending.push(c);
                }
            }
        }
        closure
    }

    /// `[G, G]`, as the normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = &self.generators;
        let mut seeds = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure_unchecked(&seeds)
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut terms = vec![self.clone()];
        loop {
            let last = terms.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            terms.push(next);
        }
        DerivedSeries { terms }
    }

    pub fn is_solvable(&self) -> bool {
        let mut current = self.clone();
        while !current.is_trivial() {
            let next = current.derived_subgroup();
            if next.order() == current.order() {
                return false;
            }
            current = next;
        }
        true
    }

    /// `⟨x, y⟩` after checking both lie in `self`.
    pub fn two_generated(&self, x: &Permutation, y: &Permutation) -> Result<PermGroup> {
        self.check_member(x)?;
        self.check_member(y)?;
        PermGroup::from_generators(self.degree, &[x.clone(), y.clone()])
    }
}

/// Solvability of `⟨x, y⟩` without membership checks. For a two-generated
/// group the derived subgroup is the normal closure of `[x, y]`.
pub(crate) fn generates_solvable(x: &Permutation, y: &Permutation) -> bool {
    let c = x.inverse().mul(&y.inverse()).mul(x).mul(y);
    if c.is_identity() {
        return true;
    }
    let ambient = PermGroup::from_generators(x.degree(), &[x.clone(), y.clone()]).unwrap();
    let derived = ambient.normal_closure_unchecked(&[c]);
    if derived.order() == ambient.order() {
        return false;
    }
    derived.is_solvable()
}

fn sift(levels: &[Level], start: usize, mut g: Permutation) -> Permutation {
    for level in &levels[start..] {
        let b = g.apply(level.base);
        match level.rep_inv(b) {
            Some(u_inv) => g = g.mul(u_inv),
            None => return g,
        }
    }
    g
}

/// Adds `g` (known not to lie in the group of level `l`) to the strong
/// generators of level `l`, then sifts every new Schreier generator into
/// the deeper levels, recursing on nontrivial residues.
fn add_strong_generator(levels: &mut Vec<Level>, l: usize, g: Permutation, degree: usize) {
    if l == levels.len() {
        let base = g.first_moved().expect("strong generator must be nontrivial");
        levels.push(Level::new(base, degree));
    }
    let pairs = {
        let level = &mut levels[l];
        let k = level.gens.len();
        level.gens.push(g);
        let old_len = level.orbit.len();
        level.extend_orbit();
        let mut pairs: Vec<(usize, usize)> = (0..old_len).map(|i| (level.orbit[i], k)).collect();
        for i in old_len..level.orbit.len() {
            for s in 0..=k {
                pairs.push((level.orbit[i], s));
            }
        }
        pairs
    };
    for (b, s) in pairs {
        let schreier = {
            let level = &levels[l];
            let gen = &level.gens[s];
            let u = level.rep(b).unwrap();
            let v_inv = level.rep_inv(gen.apply(b)).unwrap();
            u.mul(gen).mul(v_inv)
        };
        if schreier.is_identity() {
            continue;
        }
        let residue = sift(levels, l + 1, schreier);
        if !residue.is_identity() {
            add_strong_generator(levels, l + 1, residue, degree);
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// `G = G⁽⁰⁾ ⊵ G⁽¹⁾ ⊵ …`, stopping at the first term equal to its
/// derived subgroup.
#[derive(Clone, Debug)]
pub struct DerivedSeries {
    pub terms: Vec<PermGroup>,
}

impl DerivedSeries {
    pub fn orders(&self) -> Vec<u64> {
        self.terms.iter().map(PermGroup::order).collect()
    }

    pub fn is_solvable(&self) -> bool {
        self.terms.last().is_none_or(PermGroup::is_trivial)
    }

    /// Number of steps down to the trivial group, if the group is solvable.
    pub fn derived_length(&self) -> Option<usize> {
        self.is_solvable().then(|| self.terms.len() - 1)
    }
}

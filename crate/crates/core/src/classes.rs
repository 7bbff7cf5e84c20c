//! Element tables, conjugacy classes, minimal normal subgroups and socles.

use std::collections::HashMap;

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A conjugacy class, recorded by indices into [`ClassTable::elements`].
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Full enumeration of a group together with its conjugacy classes.
///
/// For every element `elements[i]` the table stores a conjugator `g` with
/// `elements[i] = g⁻¹ · rep · g`, where `rep` is the representative of its
/// class. Representatives are the least members in enumeration order.
#[derive(Clone, Debug)]
pub struct ClassTable {
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    pub class_of: Vec<usize>,
    pub conjugators: Vec<Permutation>,
    pub classes: Vec<ConjugacyClass>,
}

impl ClassTable {
    pub fn new(group: &PermGroup, cap: u64) -> Result<Self> {
        let elements = group.elements(cap)?;
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let n = elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut conjugators = vec![group.identity(); n];
        let mut classes = Vec::new();
        for seed in 0..n {
            if class_of[seed] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            class_of[seed] = cid;
            let mut members = vec![seed];
            let mut i = 0;
            while i < members.len() {
                let e = members[i];
                for a in group.generators() {
                    let c = index[&elements[e].conj(a)];
                    if class_of[c] == usize::MAX {
                        class_of[c] = cid;
                        conjugators[c] = conjugators[e].mul(a);
                        members.push(c);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: seed,
                members,
            });
        }
        Ok(ClassTable {
            elements,
            index,
            class_of,
            conjugators,
            classes,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn representative(&self, class: usize) -> &Permutation {
        &self.elements[self.classes[class].representative]
    }

    /// Representatives with class sizes, in class order.
    pub fn summary(&self) -> Vec<(Permutation, usize)> {
        self.classes
            .iter()
            .map(|c| (self.elements[c.representative].clone(), c.size()))
            .collect()
    }

    /// Index of `g s g⁻¹` where `g` is the conjugator stored for `element`.
    ///
    /// If `element = g⁻¹ r g` then `⟨element, s⟩ = g⁻¹ ⟨r, g s g⁻¹⟩ g`, so
    /// any conjugation-invariant property of `⟨element, s⟩` can be read off
    /// the pair `(r, g s g⁻¹)`.
    pub fn transport(&self, element: usize, s: usize) -> usize {
        let g = &self.conjugators[element];
        self.index[&self.elements[s].conj(&g.inverse())]
    }
}

/// Representatives (enumeration-least members) with class sizes.
pub fn conjugacy_classes(group: &PermGroup, cap: u64) -> Result<Vec<(Permutation, usize)>> {
    Ok(ClassTable::new(group, cap)?.summary())
}

/// Inclusion-minimal normal closures of nonidentity class representatives.
///
/// A minimal normal subgroup `N` equals `⟨g^G⟩` for each nonidentity
/// `g ∈ N`, so scanning one representative per class finds all of them.
pub fn minimal_normal_subgroups(group: &PermGroup, cap: u64) -> Result<Vec<PermGroup>> {
    let table = ClassTable::new(group, cap)?;
    minimal_normal_from_table(group, &table)
}

pub(crate) fn minimal_normal_from_table(
    group: &PermGroup,
    table: &ClassTable,
) -> Result<Vec<PermGroup>> {
    let mut candidates: Vec<PermGroup> = Vec::new();
    for class in &table.classes {
        let rep = &table.elements[class.representative];
        if rep.is_identity() {
            continue;
        }
        let closure = group.normal_closure(std::slice::from_ref(rep))?;
        if !candidates.iter().any(|c| c.same_group(&closure)) {
            candidates.push(closure);
        }
    }
    let minimal = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.order() < c.order() && d.is_subgroup_of(c))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

/// Subgroup generated by all minimal normal subgroups.
pub fn socle(group: &PermGroup, cap: u64) -> Result<PermGroup> {
    let minimal = minimal_normal_subgroups(group, cap)?;
    Ok(join_all(group.degree(), &minimal))
}

pub(crate) fn join_all(degree: usize, groups: &[PermGroup]) -> PermGroup {
    groups
        .iter()
        .fold(PermGroup::trivial(degree), |acc, g| acc.join(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<_> = gens.iter().map(|g| parse_cycles(g, n).unwrap()).collect();
        PermGroup::from_generators(n, &gens).unwrap()
    }

    #[test]
    fn classes_of_a5() {
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let classes = conjugacy_classes(&a5, 100).unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.1).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert!(classes[0].0.is_identity());
    }

    #[test]
    fn classes_trivial_and_abelian() {
        assert_eq!(conjugacy_classes(&PermGroup::trivial(3), 10).unwrap().len(), 1);
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        let classes = conjugacy_classes(&c6, 10).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.1 == 1));
    }

    #[test]
    fn conjugators_and_transport() {
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        let t = ClassTable::new(&s4, 100).unwrap();
        for (i, e) in t.elements.iter().enumerate() {
            let rep = t.representative(t.class_of[i]);
            assert_eq!(&rep.conj(&t.conjugators[i]), e);
            // representative is the enumeration-least member
            assert!(t.classes[t.class_of[i]].representative <= i);
        }
        let total: usize = t.classes.iter().map(|c| c.size()).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn socles() {
        let s5 = group(5, &["(1 2)", "(1 2 3 4 5)"]);
        let soc = socle(&s5, 1000).unwrap();
        assert_eq!(soc.order(), 60);
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let mins = minimal_normal_subgroups(&a5, 100).unwrap();
        assert_eq!(mins.len(), 1);
        assert!(mins[0].same_group(&a5));
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        let mins = minimal_normal_subgroups(&s4, 100).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
        assert!(mins[0].is_abelian());
    }
}

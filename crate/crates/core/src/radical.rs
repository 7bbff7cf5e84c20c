//! Radical elements versus the solvable radical.
//!
//! An element `y` is *radical* when `⟨x, y⟩` is solvable for every `x` in
//! the group. The set of radical elements is computed by exhaustive scan and
//! compared with the solvable radical produced by an unrelated algorithm:
//! the subgroup generated by all `y` whose normal closure is solvable.

use rayon::prelude::*;
use serde::Serialize;

use crate::classes::ClassTable;
use crate::error::{Error, Result};
use crate::group::{generates_solvable, PermGroup};
use crate::perm::Permutation;

/// A pair certifying that `y` is not radical: `⟨x, y⟩` is not solvable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub y: Permutation,
    pub x: Permutation,
}

impl Witness {
    /// Rebuilds `⟨x, y⟩` from scratch and checks it is not solvable.
    pub fn recheck(&self) -> bool {
        PermGroup::from_generators(self.y.degree(), &[self.x.clone(), self.y.clone()])
            .map(|g| !g.is_solvable())
            .unwrap_or(false)
    }
}

/// First `x` in enumeration order with `⟨x, y⟩` not solvable.
fn first_nonsolvable_mate<'a>(elements: &'a [Permutation], y: &Permutation) -> Option<&'a Permutation> {
    elements.iter().find(|x| !generates_solvable(x, y))
}

/// Returns `None` when `y` is radical, otherwise the first `x` (in
/// enumeration order) with `⟨x, y⟩` not solvable.
pub fn is_radical_element(
    group: &PermGroup,
    y: &Permutation,
    cap: u64,
) -> Result<Option<Permutation>> {
    group.check_member(y)?;
    let elements = group.elements(cap)?;
    Ok(first_nonsolvable_mate(&elements, y).cloned())
}

/// The radical-element set as a union of conjugacy classes.
#[derive(Clone, Debug)]
pub struct RadicalElements {
    /// Indices into the class table of the radical classes.
    pub classes: Vec<usize>,
    /// Representative and size of each radical class.
    pub class_summary: Vec<(Permutation, usize)>,
    pub members: Vec<Permutation>,
    /// One witness per nonradical class representative.
    pub witnesses: Vec<Witness>,
}

impl RadicalElements {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Tests one representative per conjugacy class. The set of radical
/// elements is closed under conjugation since `⟨x, y^g⟩ = ⟨x^{g⁻¹}, y⟩^g`.
pub fn radical_elements(group: &PermGroup, cap: u64) -> Result<RadicalElements> {
    let table = ClassTable::new(group, cap)?;
    Ok(radical_elements_from_table(&table))
}

pub(crate) fn radical_elements_from_table(table: &ClassTable) -> RadicalElements {
    let verdicts: Vec<Option<Permutation>> = table
        .classes
        .par_iter()
        .map(|c| {
            let y = &table.elements[c.representative];
            first_nonsolvable_mate(&table.elements, y).cloned()
        })
        .collect();
    let mut out = RadicalElements {
        classes: Vec::new(),
        class_summary: Vec::new(),
        members: Vec::new(),
        witnesses: Vec::new(),
    };
    for (cid, verdict) in verdicts.into_iter().enumerate() {
        let class = &table.classes[cid];
        let y = table.elements[class.representative].clone();
        match verdict {
            None => {
                out.classes.push(cid);
                out.class_summary.push((y, class.size()));
                out.members
                    .extend(class.members.iter().map(|&i| table.elements[i].clone()));
            }
            Some(x) => out.witnesses.push(Witness { y, x }),
        }
    }
    out
}

/// For each conjugacy class, whether the normal closure of its
/// representative is solvable.
pub fn normal_closure_solvability(group: &PermGroup, table: &ClassTable) -> Vec<bool> {
    table
        .classes
        .par_iter()
        .map(|c| {
            let y = &table.elements[c.representative];
            group
                .normal_closure(std::slice::from_ref(y))
                .map(|n| n.is_solvable())
                .unwrap_or(false)
        })
        .collect()
}

/// Solvable radical: the normal subgroup generated by every element whose
/// normal closure is solvable. The result is checked to be normal and
/// solvable.
pub fn oracle_solvable_radical(group: &PermGroup, cap: u64) -> Result<PermGroup> {
    let table = ClassTable::new(group, cap)?;
    oracle_from_table(group, &table)
}

pub(crate) fn oracle_from_table(group: &PermGroup, table: &ClassTable) -> Result<PermGroup> {
    let solvable = normal_closure_solvability(group, table);
    let seeds: Vec<Permutation> = table
        .classes
        .iter()
        .zip(&solvable)
        .filter(|(_, &s)| s)
        .map(|(c, _)| table.elements[c.representative].clone())
        .collect();
    let radical = group.normal_closure(&seeds)?;
    if !radical.is_normalized_by(group) {
        return Err(Error::InternalInconsistency(
            "oracle radical is not normal".into(),
        ));
    }
    if !radical.is_solvable() {
        return Err(Error::InternalInconsistency(
            "oracle radical is not solvable".into(),
        ));
    }
    Ok(radical)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Mismatch,
}

/// Radical-element set against the oracle radical for one group.
#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub order: u64,
    pub class_count: usize,
    pub s_set_size: usize,
    /// Subgroup generated by the radical elements.
    pub s_group: PermGroup,
    pub oracle_radical: PermGroup,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    order: u64,
    classes: usize,
    s_size: usize,
    radical_order: u64,
    verdict: Verdict,
    witnesses: &'a [Witness],
}

impl RadicalReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            order: self.order,
            classes: self.class_count,
            s_size: self.s_set_size,
            radical_order: self.oracle_radical.order(),
            verdict: self.verdict,
            witnesses: &self.witnesses,
        })
        .expect("report serializes")
    }
}

/// Computes both sides and compares them as sets of elements.
pub fn verify_thompson(group: &PermGroup, cap: u64) -> Result<RadicalReport> {
    let table = ClassTable::new(group, cap)?;
    let s = radical_elements_from_table(&table);
    let oracle = oracle_from_table(group, &table)?;
    let mut s_group = PermGroup::trivial(group.degree());
    for m in &s.members {
        s_group.adjoin(m.clone());
    }
    let equal = s.size() as u64 == oracle.order() && s.members.iter().all(|m| oracle.contains(m));
    Ok(RadicalReport {
        order: group.order(),
        class_count: table.classes.len(),
        s_set_size: s.size(),
        s_group,
        oracle_radical: oracle,
        verdict: if equal { Verdict::Equal } else { Verdict::Mismatch },
        witnesses: s.witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::perm::parse_cycles;

    #[test]
    fn radical_elements_of_solvable_group() {
        let s4 = symmetric(4).unwrap();
        for y in s4.elements(100).unwrap() {
            assert_eq!(is_radical_element(&s4, &y, 100).unwrap(), None);
        }
        assert_eq!(radical_elements(&s4, 100).unwrap().size(), 24);
    }

    #[test]
    fn nonidentity_elements_of_a5_are_not_radical() {
        let a5 = alternating(5).unwrap();
        assert_eq!(is_radical_element(&a5, &a5.identity(), 100).unwrap(), None);
        let y = parse_cycles("(1 2 3)", 5).unwrap();
        let x = is_radical_element(&a5, &y, 100).unwrap().unwrap();
        assert!(Witness { y, x }.recheck());
        let r = radical_elements(&a5, 100).unwrap();
        assert_eq!(r.size(), 1);
        assert_eq!(r.witnesses.len(), 4);
        assert!(r.witnesses.iter().all(Witness::recheck));
    }

    #[test]
    fn errors() {
        let a5 = alternating(5).unwrap();
        let y = parse_cycles("(1 2)", 5).unwrap();
        assert!(matches!(is_radical_element(&a5, &y, 100), Err(Error::NotMember(_))));
        let y = parse_cycles("(1 2 3)", 5).unwrap();
        assert!(matches!(
            is_radical_element(&a5, &y, 10),
            Err(Error::CapExceeded { order: 60, cap: 10 })
        ));
    }

    #[test]
    fn oracle_examples() {
        let s4 = symmetric(4).unwrap();
        assert!(oracle_solvable_radical(&s4, 100).unwrap().same_group(&s4));
        let a5 = alternating(5).unwrap();
        assert!(oracle_solvable_radical(&a5, 100).unwrap().is_trivial());
        let g = direct_product(&a5, &cyclic(3).unwrap());
        let r = oracle_solvable_radical(&g, 1000).unwrap();
        assert_eq!(r.order(), 3);
        let re = radical_elements(&g, 1000).unwrap();
        assert_eq!(re.size(), 3);
        assert!(re.members.iter().all(|m| r.contains(m)));
    }

    #[test]
    fn thompson_small() {
        for g in [symmetric(4).unwrap(), alternating(5).unwrap(), dihedral(5).unwrap()] {
            let rep = verify_thompson(&g, 1000).unwrap();
            assert_eq!(rep.verdict, Verdict::Equal);
            assert!(rep.s_group.same_group(&rep.oracle_radical));
        }
        let rep = verify_thompson(&alternating(5).unwrap(), 100).unwrap();
        let json = rep.to_json();
        assert_eq!(json["verdict"], "equal");
        assert_eq!(json["radical_order"], 1);
        assert_eq!(json["classes"], 5);
        assert_eq!(json["order"], 60);
    }
}

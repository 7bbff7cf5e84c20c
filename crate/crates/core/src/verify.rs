//! Exhaustive checks of the generation results behind the radical
//! characterization, with re-checkable certificates.
//!
//! Every search walks its domain in enumeration order and stops at the first
//! certificate. A bounded random search that comes up empty is reported as
//! [`Status::BudgetExhausted`], never as a refutation.

use std::collections::{BTreeMap, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{minimal_normal_from_table, ClassTable};
use crate::error::{Error, Result};
use crate::group::{generates_solvable, PermGroup};
use crate::perm::{parse_cycles, Permutation};
use crate::radical::oracle_from_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Refuted,
    BudgetExhausted,
}

impl Status {
    /// Process exit code: 0 verified, 2 refuted, 3 budget exhausted.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Refuted => 2,
            Status::BudgetExhausted => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// Every nonidentity `y` of an almost simple group has a mate `x` with
    /// the socle inside `⟨x, y⟩`.
    OneAndHalf,
    /// A minimal normal `N` with `⟨N, y⟩ = G` contains `x` with `⟨x, y⟩ = G`.
    MinimalNormalMate,
    /// Any two nonidentity `x, y` of an almost simple group share an `s` in
    /// the socle `S` with `S` inside both `⟨x, s⟩` and `⟨y, s⟩`.
    CommonMate,
    /// Any two elements outside the radical share an `s` with both
    /// `⟨x, s⟩` and `⟨y, s⟩` nonsolvable.
    Pairs,
    /// Three elements for which every `y` makes some `⟨x_i, y⟩` solvable.
    TripleCounterexample,
}

pub type Bindings = BTreeMap<String, Permutation>;

fn bind(pairs: &[(&str, &Permutation)]) -> Bindings {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), (*v).clone()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub inputs: Bindings,
    pub witnesses: Bindings,
}

/// Quantitative side claims for the three-involution example in `A5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleSubclaims {
    /// Orders of `x_i x_j` for the six ordered pairs `i ≠ j`.
    pub product_orders: Vec<u64>,
    pub products_have_order_three: bool,
    pub order_five_elements: usize,
    /// For each `y` of order 5, how many `i` give `|⟨x_i, y⟩| = 10`.
    pub dihedral_ten_counts: Vec<usize>,
    pub exactly_one_dihedral_ten: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub group: String,
    pub status: Status,
    /// Size of the quantified domain that was covered.
    pub checked: u64,
    pub certificates: Vec<Certificate>,
    pub counterexamples: Vec<Bindings>,
    /// Candidates examined by a sampled search, when one was used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subclaims: Option<TripleSubclaims>,
    /// Socle or normal subgroup the certificates refer to.
    #[serde(skip)]
    pub reference: Option<PermGroup>,
}

impl TheoremReport {
    fn new(theorem: Theorem, group: &PermGroup) -> Self {
        TheoremReport {
            theorem,
            group: describe(group),
            status: Status::Verified,
            checked: 0,
            certificates: Vec::new(),
            counterexamples: Vec::new(),
            trials: None,
            subclaims: None,
            reference: None,
        }
    }

    fn settle(&mut self) {
        if !self.counterexamples.is_empty() {
            self.status = Status::Refuted;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Re-runs the containment and solvability checks on every certificate
    /// with freshly built subgroups.
    pub fn revalidate(&self, group: &PermGroup) -> bool {
        let degree = group.degree();
        let gen2 = |a: &Permutation, b: &Permutation| {
            PermGroup::from_generators(degree, &[a.clone(), b.clone()]).unwrap()
        };
        self.certificates.iter().all(|c| {
            let get = |k: &str| c.inputs.get(k).or_else(|| c.witnesses.get(k));
            match self.theorem {
                Theorem::OneAndHalf => {
                    let socle = self.reference.as_ref().unwrap();
                    socle.is_subgroup_of(&gen2(get("x").unwrap(), get("y").unwrap()))
                }
                Theorem::MinimalNormalMate => {
                    let n = self.reference.as_ref().unwrap();
                    let x = get("x").unwrap();
                    n.contains(x) && gen2(x, get("y").unwrap()).same_group(group)
                }
                Theorem::CommonMate => {
                    let socle = self.reference.as_ref().unwrap();
                    let s = get("s").unwrap();
                    socle.contains(s)
                        && socle.is_subgroup_of(&gen2(get("x").unwrap(), s))
                        && socle.is_subgroup_of(&gen2(get("y").unwrap(), s))
                }
                Theorem::Pairs => {
                    let s = get("s").unwrap();
                    !gen2(get("x").unwrap(), s).is_solvable()
                        && !gen2(get("y").unwrap(), s).is_solvable()
                }
                Theorem::TripleCounterexample => {
                    gen2(get("x").unwrap(), get("y").unwrap()).is_solvable()
                }
            }
        })
    }
}

fn describe(group: &PermGroup) -> String {
    format!("degree {}, order {}", group.degree(), group.order())
}

/// The socle of an almost simple group: the unique minimal normal subgroup,
/// which must be simple, nonabelian and have trivial centralizer.
pub fn almost_simple_socle(group: &PermGroup, cap: u64) -> Result<PermGroup> {
    let table = ClassTable::new(group, cap)?;
    socle_from_table(group, &table, cap)
}

fn socle_from_table(group: &PermGroup, table: &ClassTable, cap: u64) -> Result<PermGroup> {
    let minimal = minimal_normal_from_table(group, table)?;
    if minimal.len() != 1 {
        return Err(Error::Precondition(format!(
            "not almost simple: {} minimal normal subgroups",
            minimal.len()
        )));
    }
    let socle = minimal.into_iter().next().unwrap();
    if socle.is_abelian() {
        return Err(Error::Precondition(format!(
            "not almost simple: socle of order {} is abelian",
            socle.order()
        )));
    }
    let socle_table = ClassTable::new(&socle, cap)?;
    for class in &socle_table.classes {
        let rep = &socle_table.elements[class.representative];
        if !rep.is_identity() && socle.normal_closure(std::slice::from_ref(rep))?.order() != socle.order()
        {
            return Err(Error::Precondition(format!(
                "not almost simple: socle of order {} is not simple",
                socle.order()
            )));
        }
    }
    // the centralizer is normal, so it is trivial iff no class rep lies in it
    for class in &table.classes {
        let rep = &table.elements[class.representative];
        if !rep.is_identity() && socle.generators().iter().all(|t| t.mul(rep) == rep.mul(t)) {
            return Err(Error::Precondition(format!(
                "not almost simple: {rep} centralizes the socle"
            )));
        }
    }
    Ok(socle)
}

/// For every nonidentity class representative `y`, the first `x` with the
/// socle inside `⟨x, y⟩`.
pub fn verify_one_and_half(group: &PermGroup, cap: u64) -> Result<TheoremReport> {
    let table = ClassTable::new(group, cap)?;
    let socle = socle_from_table(group, &table, cap)?;
    let degree = group.degree();
    let found: Vec<(Permutation, Option<Permutation>)> = table
        .classes
        .par_iter()
        .map(|c| &table.elements[c.representative])
        .filter(|y| !y.is_identity())
        .map(|y| {
            let x = table.elements.iter().find(|x| {
                let h = PermGroup::from_generators(degree, &[(*x).clone(), y.clone()]).unwrap();
                h.order().is_multiple_of(socle.order()) && socle.is_subgroup_of(&h)
            });
            (y.clone(), x.cloned())
        })
        .collect();
    let mut report = TheoremReport::new(Theorem::OneAndHalf, group);
    report.checked = found.len() as u64;
    for (y, x) in found {
        match x {
            Some(x) => report.certificates.push(Certificate {
                inputs: bind(&[("y", &y)]),
                witnesses: bind(&[("x", &x)]),
            }),
            None => report.counterexamples.push(bind(&[("y", &y)])),
        }
    }
    report.reference = Some(socle);
    report.settle();
    Ok(report)
}

#[derive(Clone, Copy, Debug)]
pub struct LemmaOptions {
    /// Cap on `|G|` for the minimality check.
    pub cap: u64,
    /// Largest `|N|` searched exhaustively; larger `N` are sampled.
    pub exhaustive_limit: u64,
    pub trials: u64,
    pub seed: u64,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions {
            cap: crate::group::DEFAULT_CAP,
            exhaustive_limit: crate::group::DEFAULT_CAP,
            trials: 100_000,
            seed: 0,
        }
    }
}

/// Searches `x ∈ N` with `⟨x, y⟩ = G`, given `N` minimal normal in `G`,
/// `⟨N, y⟩ = G` and `y` not centralizing `N`.
pub fn verify_lemma_minimal_normal(
    group: &PermGroup,
    normal: &PermGroup,
    y: &Permutation,
    opts: LemmaOptions,
) -> Result<TheoremReport> {
    group.check_member(y)?;
    if !normal.is_subgroup_of(group) {
        return Err(Error::Precondition("N is not a subgroup of G".into()));
    }
    let table = ClassTable::new(group, opts.cap)?;
    let minimal = minimal_normal_from_table(group, &table)?;
    if !minimal.iter().any(|m| m.same_group(normal)) {
        return Err(Error::Precondition(
            "N is not a minimal normal subgroup of G".into(),
        ));
    }
    let mut with_y = normal.clone();
    with_y.adjoin(y.clone());
    if with_y.order() != group.order() {
        return Err(Error::Precondition("N together with y does not generate G".into()));
    }
    if normal.generators().iter().all(|t| t.mul(y) == y.mul(t)) {
        return Err(Error::Precondition(format!("{y} centralizes N")));
    }

    let target = group.order();
    let generates = |x: &Permutation| {
        PermGroup::from_generators(group.degree(), &[x.clone(), y.clone()])
            .unwrap()
            .order()
            == target
    };
    let mut report = TheoremReport::new(Theorem::MinimalNormalMate, group);
    report.reference = Some(normal.clone());
    let found = if normal.order() <= opts.exhaustive_limit {
        let elements = normal.elements(opts.exhaustive_limit)?;
        let hit = elements.iter().position(generates);
        report.checked = hit.map_or(elements.len(), |i| i + 1) as u64;
        if hit.is_none() {
            report.status = Status::Refuted;
        }
        hit.map(|i| elements[i].clone())
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut hit = None;
        let mut used = 0;
        while used < opts.trials {
            used += 1;
            let x = normal.random_element(&mut rng);
            if generates(&x) {
                hit = Some(x);
                break;
            }
        }
        report.checked = used;
        report.trials = Some(used);
        if hit.is_none() {
            report.status = Status::BudgetExhausted;
        }
        hit
    };
    match found {
        Some(x) => report.certificates.push(Certificate {
            inputs: bind(&[("y", y)]),
            witnesses: bind(&[("x", &x)]),
        }),
        None if report.status == Status::Refuted => {
            report.counterexamples.push(bind(&[("y", y)]));
        }
        None => {}
    }
    Ok(report)
}

/// For `x` over nonidentity class representatives and `y` over all
/// nonidentity elements, a common `s` in the socle `S` with `S` inside both
/// `⟨x, s⟩` and `⟨y, s⟩`. Conjugating the pair `(y, s)` simultaneously
/// moves `y` to its class representative, so one table per class suffices.
pub fn verify_bgk_common_mate(group: &PermGroup, cap: u64) -> Result<TheoremReport> {
    let table = ClassTable::new(group, cap)?;
    let socle = socle_from_table(group, &table, cap)?;
    let socle_elements = socle.elements(cap)?;
    let socle_index: HashMap<&Permutation, usize> =
        socle_elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let degree = group.degree();
    // contains[c][s]: socle ⊆ ⟨rep_c, s⟩
    let contains: Vec<Vec<bool>> = table
        .classes
        .par_iter()
        .map(|c| {
            let r = &table.elements[c.representative];
            socle_elements
                .iter()
                .map(|s| {
                    let h = PermGroup::from_generators(degree, &[r.clone(), s.clone()]).unwrap();
                    h.order().is_multiple_of(socle.order()) && socle.is_subgroup_of(&h)
                })
                .collect()
        })
        .collect();
    let holds = |element: usize, s: usize| -> bool {
        let c = table.class_of[element];
        let g = &table.conjugators[element];
        let moved = socle_elements[s].conj(&g.inverse());
        contains[c][socle_index[&moved]]
    };
    let reps: Vec<usize> = table
        .classes
        .iter()
        .map(|c| c.representative)
        .filter(|&i| !table.elements[i].is_identity())
        .collect();
    let ys: Vec<usize> = (0..table.order())
        .filter(|&i| !table.elements[i].is_identity())
        .collect();
    let results: Vec<Vec<(usize, usize, Option<usize>)>> = reps
        .par_iter()
        .map(|&x| {
            ys.iter()
                .map(|&y| {
                    let s = (0..socle_elements.len()).find(|&s| holds(x, s) && holds(y, s));
                    (x, y, s)
                })
                .collect()
        })
        .collect();
    let mut report = TheoremReport::new(Theorem::CommonMate, group);
    for (x, y, s) in results.into_iter().flatten() {
        report.checked += 1;
        let (xe, ye) = (&table.elements[x], &table.elements[y]);
        match s {
            Some(s) => report.certificates.push(Certificate {
                inputs: bind(&[("x", xe), ("y", ye)]),
                witnesses: bind(&[("s", &socle_elements[s])]),
            }),
            None => report.counterexamples.push(bind(&[("x", xe), ("y", ye)])),
        }
    }
    report.reference = Some(socle);
    report.settle();
    Ok(report)
}

/// For `x` over class representatives outside the solvable radical and `y`
/// over all elements outside it, an `s` with `⟨x, s⟩` and `⟨y, s⟩` both
/// nonsolvable.
pub fn verify_pairs(group: &PermGroup, cap: u64) -> Result<TheoremReport> {
    let table = ClassTable::new(group, cap)?;
    let radical = oracle_from_table(group, &table)?;
    let outside_class: Vec<bool> = table
        .classes
        .iter()
        .map(|c| !radical.contains(&table.elements[c.representative]))
        .collect();
    // nonsolvable[c][s]: ⟨rep_c, s⟩ is not solvable (only for classes outside R)
    let nonsolvable: Vec<Vec<bool>> = table
        .classes
        .par_iter()
        .zip(&outside_class)
        .map(|(c, &outside)| {
            if !outside {
                return Vec::new();
            }
            let r = &table.elements[c.representative];
            table
                .elements
                .iter()
                .map(|s| !generates_solvable(r, s))
                .collect()
        })
        .collect();
    let holds = |element: usize, s: usize| -> bool {
        let c = table.class_of[element];
        nonsolvable[c][table.transport(element, s)]
    };
    let reps: Vec<usize> = table
        .classes
        .iter()
        .zip(&outside_class)
        .filter(|(_, &o)| o)
        .map(|(c, _)| c.representative)
        .collect();
    let ys: Vec<usize> = (0..table.order())
        .filter(|&i| outside_class[table.class_of[i]])
        .collect();
    let results: Vec<Vec<(usize, usize, Option<usize>)>> = reps
        .par_iter()
        .map(|&x| {
            ys.iter()
                .map(|&y| {
                    let s = (0..table.order()).find(|&s| holds(x, s) && holds(y, s));
                    (x, y, s)
                })
                .collect()
        })
        .collect();
    let mut report = TheoremReport::new(Theorem::Pairs, group);
    for (x, y, s) in results.into_iter().flatten() {
        report.checked += 1;
        let (xe, ye) = (&table.elements[x], &table.elements[y]);
        match s {
            Some(s) => report.certificates.push(Certificate {
                inputs: bind(&[("x", xe), ("y", ye)]),
                witnesses: bind(&[("s", &table.elements[s])]),
            }),
            None => report.counterexamples.push(bind(&[("x", xe), ("y", ye)])),
        }
    }
    report.reference = Some(radical);
    report.settle();
    Ok(report)
}

/// The three involutions of `A5` used as the standard example.
pub fn standard_triple() -> [Permutation; 3] {
    ["(2 3)(4 5)", "(1 3)(4 5)", "(1 2)(4 5)"].map(|s| parse_cycles(s, 5).unwrap())
}

fn is_a5_on_five_points(group: &PermGroup) -> bool {
    group.degree() == 5
        && group.order() == 60
        && group.generators().iter().all(|g| {
            // even permutations only
            g.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
        })
}

/// Scans every `y` and reports whether some `⟨x_i, y⟩` is solvable.
/// `Verified` means the three elements admit no common nonsolvable mate.
pub fn verify_triple_counterexample(
    group: &PermGroup,
    xs: &[Permutation; 3],
    cap: u64,
) -> Result<TheoremReport> {
    for x in xs {
        group.check_member(x)?;
    }
    let elements = group.elements(cap)?;
    let mut report = TheoremReport::new(Theorem::TripleCounterexample, group);
    for y in &elements {
        report.checked += 1;
        match xs.iter().position(|x| generates_solvable(x, y)) {
            Some(i) => report.certificates.push(Certificate {
                inputs: bind(&[("y", y)]),
                witnesses: bind(&[("x", &xs[i])]),
            }),
            None => report.counterexamples.push(bind(&[("y", y)])),
        }
    }
    if is_a5_on_five_points(group) && *xs == standard_triple() {
        report.subclaims = Some(triple_subclaims(xs, &elements));
    }
    report.settle();
    Ok(report)
}

fn triple_subclaims(xs: &[Permutation; 3], elements: &[Permutation]) -> TripleSubclaims {
    let mut product_orders = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                product_orders.push(xs[i].mul(&xs[j]).order());
            }
        }
    }
    let degree = xs[0].degree();
    let dihedral_ten_counts: Vec<usize> = elements
        .iter()
        .filter(|y| y.order() == 5)
        .map(|y| {
            xs.iter()
                .filter(|x| {
                    let h = PermGroup::from_generators(degree, &[(*x).clone(), y.clone()]).unwrap();
                    h.order() == 10 && h.is_solvable()
                })
                .count()
        })
        .collect();
    TripleSubclaims {
        products_have_order_three: product_orders.iter().all(|&o| o == 3),
        product_orders,
        order_five_elements: dihedral_ten_counts.len(),
        exactly_one_dihedral_ten: dihedral_ten_counts.iter().all(|&c| c == 1),
        dihedral_ten_counts,
    }
}

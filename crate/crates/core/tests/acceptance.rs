//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use solrad::catalog::{alternating, parse_group_name, symmetric, wreath_swap};
use solrad::lie::{
    pairs_witness_search, parse_algebra_name, radical_membership_vtest, random_element,
    v_vanishing_index, LieAlgebra, PairsSearch, Subspace, VTEST_SAMPLES,
};
use solrad::linalg::rref;
use solrad::radical::{oracle_solvable_radical, verify_thompson, Verdict};
use solrad::verify::{
    standard_triple, verify_bgk_common_mate, verify_lemma_minimal_normal, verify_one_and_half,
    verify_pairs, verify_triple_counterexample, LemmaOptions, Status,
};
use solrad::{parse_cycles, PermGroup, Permutation, DEFAULT_CAP};

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group(name: &str) -> PermGroup {
    parse_group_name(name).unwrap()
}

/// Closure of the generators under right multiplication, computed on raw
/// image vectors without the stabilizer chain.
fn brute_force_order(g: &PermGroup) -> usize {
    let n = g.degree();
    let gens: Vec<Vec<u32>> = g.generators().iter().map(|p| p.images().to_vec()).collect();
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for s in &gens {
            let prod: Vec<u32> = p.iter().map(|&i| s[i as usize]).collect();
            if seen.insert(prod.clone()) {
                frontier.push(prod);
            }
        }
    }
    seen.len()
}

fn criterion_1() -> Outcome {
    let suite: &[(&str, u64)] = &[
        ("C6", 6),
        ("S3", 6),
        ("D8", 16),
        ("A4", 12),
        ("S4", 24),
        ("S4xS3", 144),
        ("A5", 1),
        ("S5", 1),
        ("A6", 1),
        ("PSL(2,7)", 1),
        ("A5xC3", 3),
        ("S4xA5", 24),
        ("A5wr2", 1),
    ];
    for &(name, expected) in suite {
        let g = group(name);
        let report = verify_thompson(&g, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.verdict == Verdict::Equal, || format!("{name}: mismatch"))?;
        let oracle = oracle_solvable_radical(&g, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(oracle.order() == expected, || {
            format!("{name}: radical order {} != {expected}", oracle.order())
        })?;
        ensure(report.s_set_size as u64 == expected, || {
            format!("{name}: {} radical elements", report.s_set_size)
        })?;
        ensure(report.s_group.same_group(&oracle), || format!("{name}: groups differ"))?;
        for w in &report.witnesses {
            ensure(w.recheck(), || format!("{name}: witness {:?} fails", w))?;
        }
    }
    Ok(format!("{} groups, verdict equal", suite.len()))
}

fn criterion_2() -> Outcome {
    let a5 = alternating(5).unwrap();
    let xs = standard_triple();
    let expected = ["(2 3)(4 5)", "(1 3)(4 5)", "(1 2)(4 5)"].map(|s| parse_cycles(s, 5).unwrap());
    ensure(xs == expected, || "unexpected triple".into())?;
    let report = verify_triple_counterexample(&a5, &xs, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure(report.status == Status::Verified && report.checked == 60, || {
        format!("status {:?}, checked {}", report.status, report.checked)
    })?;
    let sub = report.subclaims.clone().ok_or("no subclaims")?;
    ensure(sub.products_have_order_three, || format!("{:?}", sub.product_orders))?;
    ensure(sub.order_five_elements == 24 && sub.exactly_one_dihedral_ten, || {
        format!("{:?}", sub.dihedral_ten_counts)
    })?;

    // independent recount from scratch
    let two = |a: &Permutation, b: &Permutation| {
        PermGroup::from_generators(5, &[a.clone(), b.clone()]).unwrap()
    };
    let elements = a5.elements(DEFAULT_CAP).unwrap();
    for y in &elements {
        ensure(xs.iter().any(|x| two(x, y).is_solvable()), || {
            format!("y = {y} has no solvable partner")
        })?;
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let o = xs[i].compose(&xs[j]).unwrap().order();
                ensure(o == 3, || format!("x{}x{} has order {o}", i + 1, j + 1))?;
            }
        }
    }
    let fives: Vec<_> = elements.iter().filter(|y| y.order() == 5).collect();
    ensure(fives.len() == 24, || format!("{} elements of order 5", fives.len()))?;
    for y in fives {
        let c = xs.iter().filter(|x| two(x, y).order() == 10).count();
        ensure(c == 1, || format!("y = {y}: {c} dihedral subgroups of order 10"))?;
    }
    Ok("60/60 y covered, products of order 3, 24 order-5 y with one D10 each".into())
}

fn criterion_3() -> Outcome {
    let mut total = 0;
    for name in ["A5", "S5", "A5xA5", "A5xC3"] {
        let g = group(name);
        let r = verify_pairs(&g, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.status == Status::Verified, || format!("{name}: {:?}", r.status))?;
        ensure(r.revalidate(&g), || format!("{name}: certificates fail revalidation"))?;
        total += r.checked;
    }
    Ok(format!("{total} reduced pairs checked"))
}

fn criterion_4() -> Outcome {
    for name in ["A5", "A6", "S5", "S6", "PSL(2,7)"] {
        let g = group(name);
        let r = verify_one_and_half(&g, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.status == Status::Verified, || format!("{name}: {:?}", r.status))?;
        ensure(r.certificates.len() as u64 == r.checked, || format!("{name}: missing witness"))?;
        ensure(r.revalidate(&g), || format!("{name}: certificates fail revalidation"))?;
    }
    Ok("5 almost simple groups".into())
}

fn criterion_5() -> Outcome {
    for name in ["A5", "S5"] {
        let g = group(name);
        let r = verify_bgk_common_mate(&g, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.status == Status::Verified, || format!("{name}: {:?}", r.status))?;
        ensure(r.revalidate(&g), || format!("{name}: certificates fail revalidation"))?;
    }
    Ok("A5, S5".into())
}

fn criterion_6() -> Outcome {
    let w = wreath_swap(&alternating(5).unwrap());
    let opts = LemmaOptions {
        exhaustive_limit: 0,
        trials: 100_000,
        seed: 0,
        ..LemmaOptions::default()
    };
    let r = verify_lemma_minimal_normal(&w.group, &w.base, &w.block_swap, opts)
        .map_err(|e| e.to_string())?;
    ensure(r.status == Status::Verified, || format!("wreath: {:?}", r.status))?;
    let trials = r.trials.ok_or("sampled path not taken")?;
    let x = r.certificates[0].witnesses["x"].clone();
    ensure(w.base.contains(&x), || "witness outside N".into())?;
    let h = PermGroup::from_generators(10, &[x, w.block_swap.clone()]).unwrap();
    ensure(h.order() == 7200, || format!("<x, y> has order {}", h.order()))?;

    let s5 = symmetric(5).unwrap();
    let a5 = alternating(5).unwrap();
    let y = parse_cycles("(1 2)", 5).unwrap();
    let r = verify_lemma_minimal_normal(&s5, &a5, &y, LemmaOptions::default())
        .map_err(|e| e.to_string())?;
    ensure(r.status == Status::Verified && r.trials.is_none(), || {
        format!("S5: {:?}", r.status)
    })?;
    let x = r.certificates[0].witnesses["x"].clone();
    let h = PermGroup::from_generators(5, &[x, y]).unwrap();
    ensure(h.order() == 120, || "S5 witness does not generate".into())?;
    Ok(format!("wreath witness after {trials} trials, S5 exhaustive"))
}

const LIE_SUITE: &[&str] = &["abelian3", "nonab2", "h3", "borel", "sl2", "gl2", "sl2+h3"];

fn expected_radical(name: &str, l: &LieAlgebra) -> Subspace {
    match name {
        "sl2" => Subspace::zero(3),
        "gl2" => Subspace::span(4, vec![l.e(3)]),
        "sl2+h3" => Subspace::span(6, vec![l.e(3), l.e(4), l.e(5)]),
        _ => l.whole(),
    }
}

fn rank(m: Vec<Vec<solrad::linalg::Q>>, ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for &name in LIE_SUITE {
        let l = parse_algebra_name(name).unwrap();
        let r = l.killing_radical().map_err(|e| e.to_string())?;
        ensure(r == expected_radical(name, &l), || format!("{name}: radical dim {}", r.dim()))?;
        // a solvable ideal with semisimple quotient is the radical
        ensure(l.is_ideal(&r), || format!("{name}: not an ideal"))?;
        ensure(l.is_solvable_subalgebra(&r).unwrap(), || format!("{name}: not solvable"))?;
        let quotient = l.quotient_algebra(&r).map_err(|e| e.to_string())?;
        let qd = quotient.dim();
        ensure(rank(quotient.killing_matrix(), qd) == qd, || {
            format!("{name}: quotient Killing form is degenerate")
        })?;

        for y in r.basis() {
            for _ in 0..100 {
                let x = random_element(l.dim(), &mut rng);
                let c = l.subalgebra_closure(&[x.clone(), y.clone()]).unwrap();
                ensure(l.is_solvable_subalgebra(&c).unwrap(), || {
                    format!("{name}: <{x}, {y}> not solvable")
                })?;
            }
        }
        for y in l.basis().into_iter().filter(|y| !r.contains(y)) {
            let t = radical_membership_vtest(&l, &y, 10 * l.dim(), VTEST_SAMPLES, 0)
                .map_err(|e| e.to_string())?;
            ensure(t.is_certified_out(), || format!("{name}: {y} not certified out"))?;
        }
    }
    Ok(format!("{} algebras", LIE_SUITE.len()))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for &name in LIE_SUITE {
        let l = parse_algebra_name(name).unwrap();
        let d = l.dim();
        let x = random_element(d, &mut rng);
        let y = random_element(d, &mut rng);
        ensure(l.v_word(&x, &y, 1).unwrap() == x, || format!("{name}: v_1 != x"))?;
        ensure(l.v_word(&x, &x, 2).unwrap().is_zero(), || format!("{name}: v_2(x, x) != 0"))?;
        for y in l.killing_radical().unwrap().basis() {
            for _ in 0..100 {
                let x = random_element(d, &mut rng);
                let n = v_vanishing_index(&l, &x, &y, 10 * d).unwrap();
                ensure(n.is_some(), || format!("{name}: v_n({x}, {y}) never vanishes"))?;
            }
        }
    }
    Ok("v_1, v_2 identities and radical vanishing".into())
}

fn criterion_9() -> Outcome {
    let mut used = Vec::new();
    for name in ["sl2", "gl2"] {
        let l = parse_algebra_name(name).unwrap();
        let xs = vec![l.e(0), l.e(1), l.e(2)];
        match pairs_witness_search(&l, &xs, 1000, 0).map_err(|e| e.to_string())? {
            PairsSearch::Witness { y, samples_used } => {
                for x in &xs {
                    let c = l.subalgebra_closure(&[x.clone(), y.clone()]).unwrap();
                    ensure(!l.is_solvable_subalgebra(&c).unwrap(), || {
                        format!("{name}: <{x}, {y}> solvable")
                    })?;
                }
                used.push(format!("{name} {samples_used}"));
            }
            PairsSearch::BudgetExhausted { .. } => return Err(format!("{name}: no witness")),
        }
    }
    Ok(format!("samples used: {}", used.join(", ")))
}

fn criterion_10() -> Outcome {
    let names = [
        "C6", "C12", "S3", "D5", "D8", "A4", "S4", "S4xS3", "A5", "S5", "A6", "S6", "A7",
        "PSL(2,5)", "PSL(2,7)", "PSL(2,11)", "PSL(2,13)", "A5xC3", "S4xA5", "S3wr2", "S4wr2",
    ];
    let mut checked = 0;
    for name in names {
        let g = group(name);
        if g.order() > 5000 {
            continue;
        }
        let brute = brute_force_order(&g) as u64;
        ensure(brute == g.order(), || format!("{name}: {} vs closure {brute}", g.order()))?;
        checked += 1;
    }
    for (name, order) in [("S6", 720), ("A6", 360), ("PSL(2,7)", 168)] {
        ensure(group(name).order() == order, || format!("|{name}| != {order}"))?;
    }
    Ok(format!("{checked} catalog groups match closure sizes"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("radical elements equal the solvable radical", criterion_1),
        ("three involutions in A5", criterion_2),
        ("nonsolvable pairs", criterion_3),
        ("one-and-a-half generation", criterion_4),
        ("common nonsolvable mate", criterion_5),
        ("minimal normal subgroup lemma", criterion_6),
        ("Lie radical oracle agreement", criterion_7),
        ("v_n word mechanics", criterion_8),
        ("Lie simultaneous witness", criterion_9),
        ("engine self-consistency", criterion_10),
    ];
    let mut failures = 0;
    let mut total = Duration::ZERO;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        total += elapsed;
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {label}: {detail} ({:.2?})",
                i + 1,
                elapsed
            ),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {label}: {why} ({:.2?})", i + 1, elapsed)
            }
        }
    }
    println!("total {total:.2?}");
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}

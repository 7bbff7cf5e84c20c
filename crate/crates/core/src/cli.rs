//! Batch command-line front end.
//!
//! Exit codes: 0 success or verified, 1 usage or input error, 2 refuted,
//! 3 budget exhausted.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{resolve_group, CATALOG_EXAMPLES};
use crate::classes::{conjugacy_classes, minimal_normal_subgroups};
use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_CAP};
use crate::lie::{
    algebra_from_json, pairs_witness_search, parse_algebra_name, radical_membership_vtest,
    LieAlgebra, LieElement, PairsSearch, VTEST_SAMPLES, LIE_CATALOG,
};
use crate::perm::{parse_cycles, Permutation};
use crate::radical::{oracle_solvable_radical, radical_elements, verify_thompson, Verdict};
use crate::verify::{
    verify_bgk_common_mate, verify_lemma_minimal_normal, verify_one_and_half, verify_pairs,
    verify_triple_counterexample, LemmaOptions, TheoremReport,
};

#[derive(Parser, Debug)]
#[command(name = "solrad", version, about = "Solvable radicals and radical elements")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sampling budget (default: 100000 for lemma34, 1000 for lie pairs).
    #[arg(long, global = true)]
    trials: Option<u64>,
    /// Longest v_n word to try (default: 10 * dimension).
    #[arg(long, global = true)]
    nmax: Option<usize>,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, solvability, derived series and classes of a group.
    Group {
        action: GroupAction,
        spec: String,
    },
    /// Radical elements, the solvable radical, and their comparison.
    Radical {
        action: RadicalAction,
        spec: String,
    },
    /// Exhaustive checks of the generation results.
    Verify {
        action: VerifyAction,
        spec: String,
        /// Elements in cycle notation.
        elements: Vec<String>,
    },
    /// Lie algebras from a catalog name or a JSON file.
    Lie {
        action: LieAction,
        algebra: String,
        /// Elements as comma-separated rationals.
        #[arg(allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Catalog names.
    Catalog { action: CatalogAction },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GroupAction {
    Order,
    Solvable,
    DerivedSeries,
    Classes,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RadicalAction {
    Elements,
    Oracle,
    Thompson,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VerifyAction {
    Onehalf,
    Bgk,
    Pairs,
    Lemma34,
    Triple,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LieAction {
    Radical,
    Solvable,
    Vword,
    Pairs,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CatalogAction {
    List,
}

/// Result of one command: a JSON document, a human rendering, an exit code.
struct Output {
    json: Value,
    text: String,
    code: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, code: 0 }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return 1;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            if cli.opts.json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&output.json).expect("json renders")
                );
            } else {
                let _ = writeln!(out, "{}", output.text.trim_end());
            }
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let o = &cli.opts;
    match &cli.command {
        Command::Group { action, spec } => group_command(*action, spec, o),
        Command::Radical { action, spec } => radical_command(*action, spec, o),
        Command::Verify {
            action,
            spec,
            elements,
        } => verify_command(*action, spec, elements, o),
        Command::Lie {
            action,
            algebra,
            elements,
        } => lie_command(*action, algebra, elements, o),
        Command::Catalog { .. } => Ok(catalog_list()),
    }
}

fn group_command(action: GroupAction, spec: &str, o: &GlobalOpts) -> Result<Output> {
    let g = resolve_group(spec)?;
    Ok(match action {
        GroupAction::Order => Output::ok(
            json!({"group": spec, "degree": g.degree(), "order": g.order()}),
            g.order().to_string(),
        ),
        GroupAction::Solvable => {
            let s = g.is_solvable();
            Output::ok(json!({"group": spec, "solvable": s}), s.to_string())
        }
        GroupAction::DerivedSeries => {
            let ds = g.derived_series();
            let orders = ds.orders();
            let text = orders
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            Output::ok(
                json!({"group": spec, "orders": orders, "solvable": ds.is_solvable()}),
                text,
            )
        }
        GroupAction::Classes => {
            let classes = conjugacy_classes(&g, o.cap)?;
            let text = classes
                .iter()
                .map(|(r, n)| format!("{n}\t{r}"))
                .collect::<Vec<_>>()
                .join("\n");
            let list: Vec<Value> = classes
                .iter()
                .map(|(r, n)| json!({"representative": r, "size": n}))
                .collect();
            Output::ok(json!({"group": spec, "order": g.order(), "classes": list}), text)
        }
    })
}

fn radical_command(action: RadicalAction, spec: &str, o: &GlobalOpts) -> Result<Output> {
    let g = resolve_group(spec)?;
    Ok(match action {
        RadicalAction::Elements => {
            let s = radical_elements(&g, o.cap)?;
            let classes: Vec<Value> = s
                .class_summary
                .iter()
                .map(|(r, n)| json!({"representative": r, "size": n}))
                .collect();
            let mut text = format!("radical elements: {}\n", s.size());
            for (r, n) in &s.class_summary {
                text.push_str(&format!("{n}\t{r}\n"));
            }
            Output::ok(
                json!({"group": spec, "order": g.order(), "s_size": s.size(),
                       "classes": classes, "witnesses": s.witnesses}),
                text,
            )
        }
        RadicalAction::Oracle => {
            let r = oracle_solvable_radical(&g, o.cap)?;
            Output::ok(
                json!({"group": spec, "order": g.order(), "radical_order": r.order(),
                       "generators": r.generators()}),
                format!("solvable radical order: {}", r.order()),
            )
        }
        RadicalAction::Thompson => {
            let report = verify_thompson(&g, o.cap)?;
            let code = match report.verdict {
                Verdict::Equal => 0,
                Verdict::Mismatch => 2,
            };
            let text = format!(
                "verdict: {:?}\norder: {}\nclasses: {}\nradical elements: {}\nradical order: {}",
                report.verdict,
                report.order,
                report.class_count,
                report.s_set_size,
                report.oracle_radical.order()
            )
            .to_lowercase();
            Output {
                json: report.to_json(),
                text,
                code,
            }
        }
    })
}

fn parse_elements(texts: &[String], degree: usize) -> Result<Vec<Permutation>> {
    texts.iter().map(|t| parse_cycles(t, degree)).collect()
}

fn theorem_output(report: TheoremReport) -> Output {
    let code = report.status.exit_code();
    let mut text = format!(
        "group: {}\nstatus: {}\nchecked: {}\ncertificates: {}\ncounterexamples: {}",
        report.group,
        serde_json::to_value(report.status).unwrap().as_str().unwrap(),
        report.checked,
        report.certificates.len(),
        report.counterexamples.len()
    );
    if let Some(t) = report.trials {
        text.push_str(&format!("\ntrials: {t}"));
    }
    if let Some(s) = &report.subclaims {
        text.push_str(&format!(
            "\nproducts of order 3: {}\nexactly one dihedral of order 10 per order-5 element: {}",
            s.products_have_order_three, s.exactly_one_dihedral_ten
        ));
    }
    Output {
        json: report.to_json(),
        text,
        code,
    }
}

fn verify_command(
    action: VerifyAction,
    spec: &str,
    elements: &[String],
    o: &GlobalOpts,
) -> Result<Output> {
    let g = resolve_group(spec)?;
    let els = parse_elements(elements, g.degree())?;
    let expect_none = || {
        if els.is_empty() {
            Ok(())
        } else {
            Err(Error::Parse("this check takes no element arguments".into()))
        }
    };
    let report = match action {
        VerifyAction::Onehalf => {
            expect_none()?;
            verify_one_and_half(&g, o.cap)?
        }
        VerifyAction::Bgk => {
            expect_none()?;
            verify_bgk_common_mate(&g, o.cap)?
        }
        VerifyAction::Pairs => {
            expect_none()?;
            verify_pairs(&g, o.cap)?
        }
        VerifyAction::Triple => {
            let xs: [Permutation; 3] = els
                .try_into()
                .map_err(|_| Error::Parse("triple needs exactly three elements".into()))?;
            verify_triple_counterexample(&g, &xs, o.cap)?
        }
        VerifyAction::Lemma34 => {
            let (y, n_gens) = els
                .split_first()
                .ok_or_else(|| Error::Parse("lemma34 needs y, optionally followed by generators of N".into()))?;
            let normal = if n_gens.is_empty() {
                let mut minimal = minimal_normal_subgroups(&g, o.cap)?;
                if minimal.len() != 1 {
                    return Err(Error::Precondition(format!(
                        "{} minimal normal subgroups; pass generators of N after y",
                        minimal.len()
                    )));
                }
                minimal.remove(0)
            } else {
                PermGroup::from_generators(g.degree(), n_gens)?
            };
            let opts = LemmaOptions {
                cap: o.cap,
                exhaustive_limit: o.cap,
                trials: o.trials.unwrap_or(100_000),
                seed: o.seed,
            };
            verify_lemma_minimal_normal(&g, &normal, y, opts)?
        }
    };
    Ok(theorem_output(report))
}

fn resolve_algebra(spec: &str) -> Result<LieAlgebra> {
    let path = spec.strip_prefix('@').unwrap_or(spec);
    if spec.starts_with('@') || std::path::Path::new(path).is_file() {
        algebra_from_json(&std::fs::read_to_string(path)?)
    } else {
        parse_algebra_name(spec)
    }
}

fn lie_command(
    action: LieAction,
    spec: &str,
    elements: &[String],
    o: &GlobalOpts,
) -> Result<Output> {
    let alg = resolve_algebra(spec)?;
    let els = elements
        .iter()
        .map(|t| {
            let e = LieElement::parse(t)?;
            alg.check(&e)?;
            Ok(e)
        })
        .collect::<Result<Vec<_>>>()?;
    let nmax = o.nmax.unwrap_or(10 * alg.dim()).max(1);
    match action {
        LieAction::Radical => {
            let radical = alg.killing_radical()?;
            let mut text = format!("radical dimension: {}\n", radical.dim());
            for b in radical.basis() {
                text.push_str(&format!("  {b}\n"));
            }
            let mut tests = Vec::new();
            for y in &els {
                let t = radical_membership_vtest(&alg, y, nmax, VTEST_SAMPLES, o.seed)?;
                let exact = radical.contains(y);
                text.push_str(&format!(
                    "{y}: {} (exact membership: {exact})\n",
                    if t.is_certified_out() { "certified out" } else { "consistent with in" }
                ));
                tests.push(json!({"y": y, "in_radical": exact, "vtest": t}));
            }
            Ok(Output::ok(
                json!({"algebra": spec, "dim": alg.dim(), "radical": radical.basis(),
                       "vtests": tests}),
                text,
            ))
        }
        LieAction::Solvable => {
            let sub = if els.is_empty() {
                alg.whole()
            } else {
                alg.subalgebra_closure(&els)?
            };
            let solvable = alg.is_solvable_subalgebra(&sub)?;
            Ok(Output::ok(
                json!({"algebra": spec, "subalgebra_dim": sub.dim(), "solvable": solvable}),
                format!("subalgebra dimension: {}\nsolvable: {solvable}", sub.dim()),
            ))
        }
        LieAction::Vword => {
            let [x, y] = els.as_slice() else {
                return Err(Error::Parse("vword needs exactly two elements x y".into()));
            };
            let seq = alg.v_sequence(x, y, nmax)?;
            let vanish = seq.iter().position(LieElement::is_zero).map(|i| i + 1);
            let mut text = String::new();
            for (i, v) in seq.iter().enumerate() {
                text.push_str(&format!("v_{} = {v}\n", i + 1));
            }
            text.push_str(&match vanish {
                Some(n) => format!("vanishes at n = {n}"),
                None => format!("nonzero up to n = {nmax}"),
            });
            Ok(Output::ok(
                json!({"algebra": spec, "sequence": seq, "vanishes_at": vanish, "nmax": nmax}),
                text,
            ))
        }
        LieAction::Pairs => {
            let samples = o.trials.unwrap_or(1000) as usize;
            let result = pairs_witness_search(&alg, &els, samples, o.seed)?;
            let (code, text) = match &result {
                PairsSearch::Witness { y, samples_used } => {
                    (0, format!("witness y = {y} after {samples_used} samples"))
                }
                PairsSearch::BudgetExhausted { samples } => {
                    (3, format!("budget exhausted after {samples} samples"))
                }
            };
            Ok(Output {
                json: json!({"algebra": spec, "search": result}),
                text,
                code,
            })
        }
    }
}

fn catalog_list() -> Output {
    let mut text = String::from("groups:\n");
    for (n, d) in CATALOG_EXAMPLES {
        text.push_str(&format!("  {n:<10} {d}\n"));
    }
    text.push_str("lie algebras:\n");
    for (n, d) in LIE_CATALOG {
        text.push_str(&format!("  {n:<10} {d}\n"));
    }
    let groups: Vec<Value> = CATALOG_EXAMPLES
        .iter()
        .map(|(n, d)| json!({"name": n, "description": d}))
        .collect();
    let algebras: Vec<Value> = LIE_CATALOG
        .iter()
        .map(|(n, d)| json!({"name": n, "description": d}))
        .collect();
    Output::ok(json!({"groups": groups, "lie_algebras": algebras}), text)
}

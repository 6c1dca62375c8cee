//! Command-line front end.
//!
//! [`run`] parses an argument vector and executes one subcommand, returning
//! a [`CommandOutcome`] with both renderings of the result and the exit
//! code. Exit codes follow one contract everywhere: 0 when the requested
//! property holds (or the command is a pure computation that succeeded),
//! 1 when the property fails, always with a printed witness, and 2 for
//! input or capacity errors, with a one-line diagnosis.

pub mod formats;

use crate::approximation::Partition;
use crate::error::Result;
use crate::functors::{induced_space, to_rough_closure, to_rough_interior, upper_operator};
use crate::infosys::{
    finest_space_arrow, hprime_h_counterexample, is_non_expansive, is_oad_homomorphism,
    single_attribute_arrow, single_attribute_system,
};
use crate::morphisms::{continuity_suite, is_aprs_isomorphism, is_relation_preserving};
use crate::operators::{rough_closure_census, AxiomReport, TopologyReport};
use crate::sets::{Subset, TotalMap};
use crate::verify::{Verdict, VerifyConfig, DEFAULT_SEED, DEFAULT_TRIALS};
use clap::{Parser, Subcommand, ValueEnum};
use formats::{HomFile, MapFile, OperatorFile, SpaceFile};
use serde_json::{json, Value};
use std::fmt;
use std::path::PathBuf;

/// Result of one CLI invocation: the same verdict in both renderings,
/// plus the process exit code.
#[derive(Debug)]
pub struct CommandOutcome {
    /// Human-readable report.
    pub human: String,
    /// Machine-readable equivalent, printed under `--json`.
    pub machine: Value,
    /// 0 holds/success, 1 property fails (witness included), 2 bad input.
    pub exit_code: i32,
    json_mode: bool,
}

impl CommandOutcome {
    /// The text this invocation should print, honoring `--json`.
    pub fn rendered(&self) -> String {
        if self.json_mode {
            serde_json::to_string_pretty(&self.machine)
                .expect("machine output is built from JSON-safe values")
        } else {
            self.human.clone()
        }
    }
}

#[derive(Parser)]
#[command(
    name = "clopen",
    version,
    about = "Finite rough-set approximation spaces, their operators, and the maps between them"
)]
struct Cli {
    /// Print machine-readable JSON instead of the human report.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled verification sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Trial count for sampled verification sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower, upper, and boundary approximations of a set.
    Approximate {
        /// Space file (JSON).
        #[arg(long)]
        space: PathBuf,
        /// Comma-separated element names; omit for the empty set.
        #[arg(long, value_delimiter = ',', default_value = "")]
        set: Vec<String>,
    },
    /// The clopen topology of a space: opens, verdicts, minimal base.
    Topology {
        #[arg(long)]
        space: PathBuf,
    },
    /// Classify an operator against the closure and interior axioms.
    ClassifyOperator {
        /// Operator file (JSON).
        #[arg(long)]
        operator: PathBuf,
    },
    /// Check a map between spaces for relation preservation.
    CheckMap {
        /// Source space file.
        #[arg(long)]
        from: PathBuf,
        /// Target space file.
        #[arg(long)]
        to: PathBuf,
        /// Map file (JSON).
        #[arg(long)]
        map: PathBuf,
        /// Evaluate all six continuity conditions independently.
        #[arg(long)]
        suite: bool,
    },
    /// Check a map for being an isomorphism of spaces.
    CheckIso {
        /// Source space file.
        #[arg(long)]
        from: PathBuf,
        /// Target space file.
        #[arg(long)]
        to: PathBuf,
        /// Map file (JSON).
        #[arg(long)]
        map: PathBuf,
    },
    /// Replay a round-trip identity on one space.
    Functor {
        /// Which pair of constructions to round-trip.
        #[arg(long, value_enum)]
        roundtrip: RoundtripKind,
        /// Space file (JSON).
        #[arg(long)]
        space: PathBuf,
    },
    /// Count rough closure operators among all tables on n elements.
    Census {
        /// Universe size (at most 3).
        #[arg(long)]
        size: usize,
    },
    /// Information-system queries over a CSV table.
    Infosys {
        /// CSV file with header `object,<attr1>,...`.
        #[arg(long)]
        csv: PathBuf,
        #[command(subcommand)]
        action: InfosysAction,
    },
    /// Check a triple of maps for the homomorphism condition.
    CheckOad {
        /// Source system (CSV).
        #[arg(long)]
        source: PathBuf,
        /// Target system (CSV).
        #[arg(long)]
        target: PathBuf,
        /// Homomorphism file (JSON).
        #[arg(long)]
        hom: PathBuf,
    },
    /// Print a stored counterexample.
    Counterexample {
        #[command(subcommand)]
        which: StoredWitness,
    },
}

#[derive(Subcommand)]
enum InfosysAction {
    /// Indiscernibility partition over the given attributes.
    Ind {
        /// Comma-separated attribute names; omit for the empty set.
        #[arg(long, value_delimiter = ',', default_value = "")]
        attrs: Vec<String>,
    },
    /// Indiscernibility partition over the full attribute set.
    Finest,
    /// All minimal attribute subsets with the full indiscernibility.
    Reduct,
    /// The finest space, printed in space-file form.
    AsSpace,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoundtripKind {
    /// Space to upper operator and back.
    AprsRcls,
    /// Rough closure to dual interior and back.
    RclsRint,
    /// Space to single-attribute system and back.
    AprsNeis,
}

#[derive(Subcommand)]
enum StoredWitness {
    /// The two-attribute system the reverse round-trip fails on.
    HprimeH,
}

/// Parses `argv` and executes the selected subcommand. Never panics on
/// bad input: parse failures become exit code 2 (or 0 for help/version).
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { 2 } else { 0 };
            return CommandOutcome {
                human: e.to_string(),
                machine: json!({ "error": e.to_string() }),
                exit_code,
                json_mode: false,
            };
        }
    };
    let cfg = VerifyConfig {
        seed: cli.seed,
        trials: cli.trials,
    };
    match dispatch(cli.command, &cfg) {
        Ok((human, machine, exit_code)) => CommandOutcome {
            human,
            machine,
            exit_code,
            json_mode: cli.json,
        },
        Err(e) => CommandOutcome {
            human: format!("error: {e}"),
            machine: json!({ "error": e.to_string() }),
            exit_code: 2,
            json_mode: cli.json,
        },
    }
}

fn dispatch(command: Command, cfg: &VerifyConfig) -> Result<(String, Value, i32)> {
    match command {
        Command::Approximate { space, set } => approximate(&space, &set),
        Command::Topology { space } => topology(&space),
        Command::ClassifyOperator { operator } => classify_operator(&operator, cfg),
        Command::CheckMap {
            from,
            to,
            map,
            suite,
        } => check_map(&from, &to, &map, suite, cfg),
        Command::CheckIso { from, to, map } => check_iso(&from, &to, &map),
        Command::Functor { roundtrip, space } => functor_roundtrip(roundtrip, &space, cfg),
        Command::Census { size } => census(size),
        Command::Infosys { csv, action } => infosys(&csv, action),
        Command::CheckOad {
            source,
            target,
            hom,
        } => check_oad(&source, &target, &hom),
        Command::Counterexample {
            which: StoredWitness::HprimeH,
        } => counterexample_hprime_h(),
    }
}

fn names_of(subset: &Subset) -> Value {
    json!(subset.names())
}

fn blocks_of(partition: &Partition) -> Value {
    json!(partition
        .blocks()
        .iter()
        .map(Subset::names)
        .collect::<Vec<_>>())
}

fn verdict_json<W: fmt::Display>(v: &Verdict<W>) -> Value {
    json!({
        "holds": v.holds,
        "witness": v.witness.as_ref().map(|w| w.to_string()),
        "mode": serde_json::to_value(v.mode).expect("mode serializes"),
    })
}

fn verification_json(cfg: &VerifyConfig) -> Value {
    json!({ "seed": cfg.seed, "trials": cfg.trials })
}

fn axiom_report_json(report: &AxiomReport) -> Value {
    let axioms: Vec<Value> = report
        .axioms
        .iter()
        .chain(std::iter::once(&report.rough))
        .map(|a| {
            json!({
                "name": a.axiom.name(),
                "statement": a.axiom.statement(),
                "verdict": verdict_json(&a.verdict),
            })
        })
        .collect();
    json!({
        "conditions": axioms,
        "is_operator": report.is_operator(),
        "is_rough": report.is_rough(),
        "summary": report.summary(),
    })
}

fn pass_fail(all_hold: bool) -> i32 {
    if all_hold {
        0
    } else {
        1
    }
}

fn approximate(space_path: &PathBuf, set: &[String]) -> Result<(String, Value, i32)> {
    let space = SpaceFile::load(space_path)?;
    let names: Vec<&str> = set
        .iter()
        .map(String::as_str)
        .filter(|s| !s.is_empty())
        .collect();
    let x = Subset::from_names(space.universe(), names)?;
    let lower = space.lower(&x)?;
    let upper = space.upper(&x)?;
    let boundary = space.boundary(&x)?;
    let human = format!(
        "space: {}\nset: {}\nlower: {}\nupper: {}\nboundary: {}",
        space.partition(),
        x,
        lower,
        upper,
        boundary
    );
    let machine = json!({
        "command": "approximate",
        "space": blocks_of(space.partition()),
        "set": names_of(&x),
        "lower": names_of(&lower),
        "upper": names_of(&upper),
        "boundary": names_of(&boundary),
    });
    Ok((human, machine, 0))
}

fn topology_report_json(report: &TopologyReport) -> Value {
    json!({
        "is_topology": report.is_topology,
        "violation": report.violation.as_ref().map(|v| v.to_string()),
        "is_clopen": report.is_clopen,
        "clopen_witness": report.clopen_witness.as_ref().map(|w| w.to_string()),
        "is_alexandroff": report.is_alexandroff,
        "minimal_base": report.minimal_base.as_ref().map(|base| {
            base.iter().map(Subset::names).collect::<Vec<_>>()
        }),
    })
}

fn topology(space_path: &PathBuf) -> Result<(String, Value, i32)> {
    let space = SpaceFile::load(space_path)?;
    let topology = space.clopen_topology()?;
    let report = topology.analyze();
    let listing: Vec<String> = topology.opens().iter().map(Subset::to_string).collect();
    let human = format!(
        "opens ({}): {}\n{}",
        listing.len(),
        listing.join(", "),
        report
    );
    let machine = json!({
        "command": "topology",
        "space": blocks_of(space.partition()),
        "opens": topology.opens().iter().map(Subset::names).collect::<Vec<_>>(),
        "report": topology_report_json(&report),
    });
    let ok = report.is_topology && report.is_clopen;
    Ok((human, machine, pass_fail(ok)))
}

fn classify_operator(path: &PathBuf, cfg: &VerifyConfig) -> Result<(String, Value, i32)> {
    let op = OperatorFile::load(path)?;
    let closure = op.classify_closure(cfg).clone();
    let interior = op.classify_interior(cfg).clone();
    let human = format!(
        "closure side:\n{closure}\n\ninterior side:\n{interior}\n\nverification: seed {}, {} trials",
        cfg.seed, cfg.trials
    );
    let machine = json!({
        "command": "classify-operator",
        "closure": axiom_report_json(&closure),
        "interior": axiom_report_json(&interior),
        "verification": verification_json(cfg),
    });
    let ok = closure.is_rough() || interior.is_rough();
    Ok((human, machine, pass_fail(ok)))
}

fn check_map(
    from: &PathBuf,
    to: &PathBuf,
    map: &PathBuf,
    suite: bool,
    cfg: &VerifyConfig,
) -> Result<(String, Value, i32)> {
    let source = SpaceFile::load(from)?;
    let target = SpaceFile::load(to)?;
    let f = MapFile::load(map, source.universe(), target.universe())?;
    if suite {
        let report = continuity_suite(&f, &source, &target, cfg)?;
        let human = format!(
            "{report}\nverification: seed {}, {} trials",
            cfg.seed, cfg.trials
        );
        let conditions: Vec<Value> = report
            .conditions
            .iter()
            .map(|c| {
                json!({
                    "name": c.condition.name(),
                    "statement": c.condition.statement(),
                    "verdict": verdict_json(&c.verdict),
                })
            })
            .collect();
        let machine = json!({
            "command": "check-map",
            "suite": true,
            "conditions": conditions,
            "all_hold": report.all_hold(),
            "unanimous": report.unanimous(),
            "verification": verification_json(cfg),
        });
        Ok((human, machine, pass_fail(report.all_hold())))
    } else {
        let verdict = is_relation_preserving(&f, &source, &target)?;
        let human = format!("relation-preserving: {verdict}");
        let machine = json!({
            "command": "check-map",
            "suite": false,
            "relation_preserving": verdict_json(&verdict),
        });
        Ok((human, machine, pass_fail(verdict.holds)))
    }
}

fn check_iso(from: &PathBuf, to: &PathBuf, map: &PathBuf) -> Result<(String, Value, i32)> {
    let source = SpaceFile::load(from)?;
    let target = SpaceFile::load(to)?;
    let f = MapFile::load(map, source.universe(), target.universe())?;
    let verdict = is_aprs_isomorphism(&f, &source, &target)?;
    let human = format!("isomorphism: {verdict}");
    let machine = json!({
        "command": "check-iso",
        "isomorphism": verdict_json(&verdict),
    });
    Ok((human, machine, pass_fail(verdict.holds)))
}

fn functor_roundtrip(
    kind: RoundtripKind,
    space_path: &PathBuf,
    cfg: &VerifyConfig,
) -> Result<(String, Value, i32)> {
    let space = SpaceFile::load(space_path)?;
    let mut checks: Vec<(String, Verdict<String>)> = Vec::new();
    let exhaustive = crate::verify::VerifyMode::Exhaustive { checked: 1 };

    match kind {
        RoundtripKind::AprsRcls => {
            let op = upper_operator(&space, cfg);
            let rebuilt = induced_space(&op)?;
            checks.push((
                "rebuild after upper operator is identity".to_string(),
                if rebuilt == space {
                    Verdict::pass(exhaustive)
                } else {
                    Verdict::fail(format!("rebuilt as {}", rebuilt.partition()), exhaustive)
                },
            ));
            let reupper = upper_operator(&rebuilt, cfg);
            checks.push((
                "upper operator after rebuild is identity".to_string(),
                op.extensionally_equal(&reupper, cfg)?
                    .map_witness(|w| w.to_string()),
            ));
        }
        RoundtripKind::RclsRint => {
            let op = upper_operator(&space, cfg);
            let interior = to_rough_interior(&op, cfg)?;
            let back = to_rough_closure(&interior, cfg)?;
            checks.push((
                "dual closure after dual interior is identity".to_string(),
                op.extensionally_equal(&back, cfg)?
                    .map_witness(|w| w.to_string()),
            ));
            let re_interior = to_rough_interior(&back, cfg)?;
            checks.push((
                "dual interior after dual closure is identity".to_string(),
                interior
                    .extensionally_equal(&re_interior, cfg)?
                    .map_witness(|w| w.to_string()),
            ));
        }
        RoundtripKind::AprsNeis => {
            let system = single_attribute_system(&space);
            let back = system.finest_space();
            checks.push((
                "finest space after single-attribute presentation is identity".to_string(),
                if back == space {
                    Verdict::pass(exhaustive)
                } else {
                    Verdict::fail(format!("came back as {}", back.partition()), exhaustive)
                },
            ));
            let id = TotalMap::identity(space.universe());
            let hom = single_attribute_arrow(&id, &space, &space)?;
            checks.push((
                "identity arrow survives the round trip".to_string(),
                if finest_space_arrow(&hom)? == id {
                    Verdict::pass(exhaustive)
                } else {
                    Verdict::fail("came back as a different map".to_string(), exhaustive)
                },
            ));
        }
    }

    let all_hold = checks.iter().all(|(_, v)| v.holds);
    let mut lines: Vec<String> = checks
        .iter()
        .map(|(label, verdict)| format!("{label}: {verdict}"))
        .collect();
    lines.push(format!(
        "round-trip: {}",
        if all_hold { "PASS" } else { "FAIL" }
    ));
    lines.push(format!("verification: seed {}, {} trials", cfg.seed, cfg.trials));
    let machine = json!({
        "command": "functor",
        "space": blocks_of(space.partition()),
        "checks": checks
            .iter()
            .map(|(label, verdict)| json!({ "label": label, "verdict": verdict_json(verdict) }))
            .collect::<Vec<_>>(),
        "all_hold": all_hold,
        "verification": verification_json(cfg),
    });
    Ok((lines.join("\n"), machine, pass_fail(all_hold)))
}

fn census(size: usize) -> Result<(String, Value, i32)> {
    let report = rough_closure_census(size)?;
    let machine = json!({
        "command": "census",
        "universe_size": report.universe_size,
        "tables_total": report.tables_total,
        "rough_closure_operators": report.rough_closure_count,
        "partitions": report.partition_count,
        "matches": report.matches(),
    });
    Ok((report.to_string(), machine, pass_fail(report.matches())))
}

fn infosys(csv: &PathBuf, action: InfosysAction) -> Result<(String, Value, i32)> {
    let system = formats::load_csv_system(csv)?;
    match action {
        InfosysAction::Ind { attrs } => {
            let names: Vec<&str> = attrs
                .iter()
                .map(String::as_str)
                .filter(|s| !s.is_empty())
                .collect();
            let partition = system.indiscernibility(names.iter().copied())?;
            let human = format!("ind({{{}}}) = {}", names.join(","), partition);
            let machine = json!({
                "command": "infosys ind",
                "attributes": names,
                "partition": blocks_of(&partition),
            });
            Ok((human, machine, 0))
        }
        InfosysAction::Finest => {
            let space = system.finest_space();
            let human = format!("finest partition: {}", space.partition());
            let machine = json!({
                "command": "infosys finest",
                "partition": blocks_of(space.partition()),
            });
            Ok((human, machine, 0))
        }
        InfosysAction::Reduct => {
            let reducts = system.find_reducts()?;
            let lines: Vec<String> = reducts
                .iter()
                .map(|b| format!("reduct: {{{}}}", b.join(",")))
                .collect();
            let machine = json!({
                "command": "infosys reduct",
                "reducts": reducts,
            });
            Ok((lines.join("\n"), machine, 0))
        }
        InfosysAction::AsSpace => {
            let space = system.finest_space();
            let file = SpaceFile::from_space(&space);
            let human = format!(
                "universe: {}\npartition: {}",
                space.universe(),
                space.partition()
            );
            let machine = serde_json::to_value(&file)
                .expect("space files are JSON-safe");
            Ok((human, machine, 0))
        }
    }
}

fn check_oad(source: &PathBuf, target: &PathBuf, hom: &PathBuf) -> Result<(String, Value, i32)> {
    let source_system = formats::load_csv_system(source)?;
    let target_system = formats::load_csv_system(target)?;
    let hom = HomFile::load(hom, &source_system, &target_system)?;
    let hom_verdict = is_oad_homomorphism(&hom);
    let onto_verdict = is_non_expansive(&hom);
    let human = format!(
        "homomorphism: {hom_verdict}\nnon-expansive: {onto_verdict}"
    );
    let machine = json!({
        "command": "check-oad",
        "homomorphism": verdict_json(&hom_verdict),
        "non_expansive": verdict_json(&onto_verdict),
    });
    Ok((
        human,
        machine,
        pass_fail(hom_verdict.holds && onto_verdict.holds),
    ))
}

fn counterexample_hprime_h() -> Result<(String, Value, i32)> {
    let (system, roundtripped) = hprime_h_counterexample();
    let human = format!(
        "original system:\n{system}\n\nround-tripped system:\n{roundtripped}\n\n\
         structurally different: {} attributes against {}; \
         finest partitions agree: {}",
        system.attributes().len(),
        roundtripped.attributes().len(),
        system.finest_space().partition()
    );
    let to_json = |s: &crate::infosys::InfoSystem| {
        json!({
            "objects": s.objects().elements(),
            "attributes": s.attributes(),
            "rows": (0..s.objects().len())
                .map(|o| {
                    (0..s.attributes().len())
                        .map(|a| s.value_at(o, a).to_string())
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        })
    };
    let machine = json!({
        "command": "counterexample hprime-h",
        "original": to_json(&system),
        "roundtripped": to_json(&roundtripped),
        "structurally_equal": system == roundtripped,
    });
    Ok((human, machine, 0))
}

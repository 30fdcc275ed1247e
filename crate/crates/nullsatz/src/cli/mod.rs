//! Command-line front end: argument parsing, instance loading, and
//! canonical reporting for the `nullsatz` binary.
//!
//! Machine output is single-line JSON with a fixed key order, so identical
//! inputs and seeds produce byte-identical bytes; `--pretty` switches to a
//! plain-text rendering. Errors never panic: every failure is mapped to an
//! exit code — 1 for a mathematical disagreement or internal fault, 2 for
//! bad input, 3 for a regime the exact algorithms refuse to enter.

mod instance;
mod report;

pub use instance::{algebra_from_source, ideal_from_file, parse_generator_lines, InstanceSpec};

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::findim::{radical, wedderburn_seeded, xi_preimage, FinDimAlgebra, WedderburnData};
use crate::leftideal::{generate, LeftIdeal};
use crate::polymod::standard_pairs;
use crate::radical::{geometric_oracle, nonmaximal_directional_demo, rad_pipeline};
use crate::weyl::{certificate_check, simplicity_smoke};
use report::{algebra_block, certificate_value, ideal_strings, pretty_lines, string_array};

#[derive(Parser)]
#[command(name = "nullsatz", about = "Exact radicals of left ideals over finite-dimensional algebras", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Preset name (e.g. M2(3), dual_numbers(5), F5[u]/u^2+3, group:C2(5),
    /// upper_triangular:2(5), M2(Q)) or path to an algebra JSON file.
    #[arg(long)]
    algebra: String,

    /// Path to the generator file, one polynomial per line.
    #[arg(long)]
    ideal: PathBuf,

    /// Number of polynomial variables.
    #[arg(long, default_value_t = 1)]
    nvars: usize,

    /// Seed for all randomized subroutines.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Human-readable output instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the radical of a left ideal with its point certificate.
    Radical {
        #[command(flatten)]
        common: InstanceArgs,
        /// Cap on the extension degree scanned per factor.
        #[arg(long)]
        dmax: Option<u32>,
        /// Write the certificate points to this JSON file.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Recompute the radical with the independent geometric oracle.
    Oracle {
        #[command(flatten)]
        common: InstanceArgs,
        /// Cap on the extension degree scanned per factor.
        #[arg(long)]
        dmax: u32,
    },
    /// Run both radical routes and compare their reduced bases.
    Check {
        #[command(flatten)]
        common: InstanceArgs,
        /// Cap on the extension degree scanned per factor.
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Report the structure of an algebra: radical, factors, dual bases.
    AlgebraInfo {
        /// Preset name or path to an algebra JSON file.
        #[arg(long)]
        algebra: String,
        /// Seed for all randomized subroutines.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Human-readable output instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Built-in demonstrations.
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// A directional ideal over the rational 2x2 matrices that is strictly
    /// between a maximal one and the full ring.
    Sqrt2 {
        /// Human-readable output instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// The Weyl-algebra identity certificate and simplicity smoke test.
    Weyl {
        /// Largest index for the identity families and the section bound
        /// for the membership refutation.
        #[arg(long = "max-degree", default_value_t = 8)]
        max_degree: u32,
        /// Seed for the random sample elements.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Human-readable output instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
}

/// Run the command line and return the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            return 2;
        }
    };
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        Err(_) => {
            eprintln!("error: cli::run: unexpected panic");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Radical { common, dmax, certificate } => cmd_radical(common, dmax, certificate),
        Command::Oracle { common, dmax } => cmd_oracle(common, dmax),
        Command::Check { common, dmax } => cmd_check(common, dmax),
        Command::AlgebraInfo { algebra, seed, pretty } => cmd_info(&algebra, seed, pretty),
        Command::Demo { which } => match which {
            DemoCommand::Sqrt2 { pretty } => cmd_demo_sqrt2(pretty),
            DemoCommand::Weyl { max_degree, seed, pretty } => {
                cmd_demo_weyl(max_degree, seed, pretty)
            }
        },
    }
}

struct Loaded {
    alg: FinDimAlgebra,
    w: WedderburnData,
    ideal: LeftIdeal,
    spec: InstanceSpec,
}

fn load(common: &InstanceArgs, dmax: Option<u32>) -> Result<Loaded> {
    let alg = algebra_from_source(&common.algebra)?;
    let w = wedderburn_seeded(&alg, common.seed)?;
    let gens = ideal_from_file(&alg, common.nvars, &common.ideal.to_string_lossy())?;
    let ideal = generate(&alg, common.nvars, &gens)?;
    let spec = InstanceSpec {
        algebra: common.algebra.clone(),
        nvars: common.nvars,
        generators: gens.iter().map(|g| g.render(&alg)).collect(),
        dmax,
        seed: common.seed,
    };
    Ok(Loaded { alg, w, ideal, spec })
}

fn emit(value: Value) {
    println!("{value}");
}

fn codimension_value(ideal: &LeftIdeal) -> Result<Value> {
    Ok(standard_pairs(ideal.backing())?.map_or(Value::Null, |p| Value::from(p.len())))
}

fn cmd_radical(
    common: InstanceArgs,
    dmax: Option<u32>,
    certificate: Option<PathBuf>,
) -> Result<i32> {
    let l = load(&common, dmax)?;
    let r = rad_pipeline(&l.alg, &l.w, &l.ideal)?;
    let rad = ideal_strings(&l.alg, &r.output);
    if let Some(path) = &certificate {
        let v = certificate_value(l.alg.field(), &r.certificate);
        let text = format!("{v}\n");
        std::fs::write(path, text).map_err(|e| Error::Io {
            path: path.to_string_lossy().into_owned(),
            why: e.to_string(),
        })?;
    }
    if common.pretty {
        print!(
            "{}",
            pretty_lines(&[
                ("algebra", vec![format!("{} (dim {})", l.spec.algebra, l.alg.dim())]),
                ("input", l.spec.generators.clone()),
                ("radical", rad.clone()),
                (
                    "codimension",
                    vec![match codimension_value(&r.output)? {
                        Value::Null => "infinite".into(),
                        v => v.to_string(),
                    }],
                ),
                ("certificate points", vec![r.certificate.len().to_string()]),
            ])
        );
    } else {
        let mut m = Map::new();
        m.insert("command".into(), Value::String("radical".into()));
        m.insert("instance".into(), l.spec.to_json());
        m.insert("algebra".into(), algebra_block(&l.alg, &l.w));
        m.insert("radical".into(), string_array(&rad));
        m.insert("codimension".into(), codimension_value(&r.output)?);
        m.insert("certificate_points".into(), Value::from(r.certificate.len()));
        emit(Value::Object(m));
    }
    Ok(0)
}

fn cmd_oracle(common: InstanceArgs, dmax: u32) -> Result<i32> {
    let l = load(&common, Some(dmax))?;
    let o = geometric_oracle(&l.alg, &l.w, &l.ideal, Some(dmax))?;
    let rad = ideal_strings(&l.alg, &o);
    if common.pretty {
        print!(
            "{}",
            pretty_lines(&[
                ("algebra", vec![format!("{} (dim {})", l.spec.algebra, l.alg.dim())]),
                ("input", l.spec.generators.clone()),
                ("radical", rad.clone()),
            ])
        );
    } else {
        let mut m = Map::new();
        m.insert("command".into(), Value::String("oracle".into()));
        m.insert("instance".into(), l.spec.to_json());
        m.insert("algebra".into(), algebra_block(&l.alg, &l.w));
        m.insert("radical".into(), string_array(&rad));
        emit(Value::Object(m));
    }
    Ok(0)
}

fn cmd_check(common: InstanceArgs, dmax: Option<u32>) -> Result<i32> {
    let l = load(&common, dmax)?;
    let r = rad_pipeline(&l.alg, &l.w, &l.ideal)?;
    let o = geometric_oracle(&l.alg, &l.w, &l.ideal, dmax)?;
    let agree = o.same_ideal(&r.output);
    let rad = ideal_strings(&l.alg, &r.output);
    let orad = ideal_strings(&l.alg, &o);
    if common.pretty {
        print!(
            "{}",
            pretty_lines(&[
                ("algebra", vec![format!("{} (dim {})", l.spec.algebra, l.alg.dim())]),
                ("input", l.spec.generators.clone()),
                ("pipeline radical", rad.clone()),
                ("oracle radical", orad.clone()),
                ("agree", vec![agree.to_string()]),
            ])
        );
    } else {
        let mut m = Map::new();
        m.insert("command".into(), Value::String("check".into()));
        m.insert("instance".into(), l.spec.to_json());
        m.insert("algebra".into(), algebra_block(&l.alg, &l.w));
        m.insert("agree".into(), Value::Bool(agree));
        m.insert("radical".into(), string_array(&rad));
        m.insert("oracle".into(), string_array(&orad));
        emit(Value::Object(m));
    }
    Ok(if agree { 0 } else { 1 })
}

fn cmd_info(algebra: &str, seed: u64, pretty: bool) -> Result<i32> {
    let alg = algebra_from_source(algebra)?;
    let rad = radical(&alg)?;
    let w = wedderburn_seeded(&alg, seed)?;
    let rad_strings: Vec<String> = rad.iter().map(|v| alg.elem_to_string(v)).collect();
    let dual = if rad.is_empty() { Some(xi_preimage(&alg)?) } else { None };
    if pretty {
        let mut sections = vec![
            ("algebra", vec![format!("{} (dim {})", algebra, alg.dim())]),
            ("basis", vec![alg.names().join(", ")]),
            ("radical dimension", vec![rad.len().to_string()]),
        ];
        if !rad_strings.is_empty() {
            sections.push(("radical basis", rad_strings.clone()));
        }
        let factors: Vec<String> = w
            .factors
            .iter()
            .map(|f| format!("{}x{} matrices over a degree-{} center", f.k, f.k, f.center_dim))
            .collect();
        sections.push(("factors", factors));
        if let Some(d) = &dual {
            sections.push((
                "dual basis identities",
                vec![format!(
                    "{} generators, {} sandwiching pairs",
                    d.generators.len(),
                    d.pairs.iter().map(Vec::len).sum::<usize>()
                )],
            ));
        }
        print!("{}", pretty_lines(&sections));
    } else {
        let mut m = Map::new();
        m.insert("command".into(), Value::String("algebra-info".into()));
        m.insert("algebra".into(), Value::String(algebra.into()));
        m.insert("dim".into(), Value::from(alg.dim()));
        m.insert(
            "names".into(),
            Value::Array(alg.names().iter().cloned().map(Value::String).collect()),
        );
        m.insert("radical_dim".into(), Value::from(rad.len()));
        m.insert("radical_basis".into(), string_array(&rad_strings));
        m.insert("structure".into(), algebra_block(&alg, &w));
        m.insert(
            "xi".into(),
            dual.map_or(Value::Null, |d| {
                let mut xm = Map::new();
                xm.insert("generators".into(), Value::from(d.generators.len()));
                xm.insert(
                    "pairs".into(),
                    Value::Array(d.pairs.iter().map(|ps| Value::from(ps.len())).collect()),
                );
                xm.insert("center_dim".into(), Value::from(d.center_basis.len()));
                Value::Object(xm)
            }),
        );
        emit(Value::Object(m));
    }
    Ok(0)
}

fn cmd_demo_sqrt2(pretty: bool) -> Result<i32> {
    let demo = nonmaximal_directional_demo()?;
    let alg = &demo.algebra;
    let narrow = ideal_strings(alg, &demo.narrow);
    let wide = ideal_strings(alg, &demo.wide);
    let witness = demo.witness.render(alg);
    let shared = demo.shared.render(alg);
    if pretty {
        print!(
            "{}",
            pretty_lines(&[
                ("algebra", vec!["M2(Q)".into()]),
                ("direction (1, r) with r^2 = 2 gives the ideal", narrow.clone()),
                ("direction (1, 0) gives the ideal", wide.clone()),
                ("codimensions", vec![format!("{} > {}", demo.narrow_codim, demo.wide_codim)]),
                ("separating witness", vec![witness.clone()]),
                ("shared member", vec![shared.clone()]),
                ("strict chain", vec!["narrow < wide < full ring".into()]),
            ])
        );
    } else {
        let mut m = Map::new();
        m.insert("command".into(), Value::String("demo".into()));
        m.insert("name".into(), Value::String("sqrt2".into()));
        m.insert("algebra".into(), Value::String("M2(Q)".into()));
        m.insert("narrow".into(), string_array(&narrow));
        m.insert("narrow_codimension".into(), Value::from(demo.narrow_codim));
        m.insert("wide".into(), string_array(&wide));
        m.insert("wide_codimension".into(), Value::from(demo.wide_codim));
        m.insert("witness".into(), Value::String(witness));
        m.insert("shared".into(), Value::String(shared));
        m.insert("strict_chain".into(), Value::Bool(true));
        emit(Value::Object(m));
    }
    Ok(0)
}

fn cmd_demo_weyl(max_degree: u32, seed: u64, pretty: bool) -> Result<i32> {
    let report = certificate_check(max_degree, 200, seed)?;
    let smoke = simplicity_smoke(50, 16, seed);
    if pretty {
        let mut sections = vec![(
            "certificate",
            vec![format!("max degree {}, {} sampled elements", report.rmax, report.r_samples)],
        )];
        let lines: Vec<String> = report
            .identities
            .iter()
            .map(|i| format!("pass ({} cases): {}", i.cases, i.label))
            .collect();
        sections.push(("identities", lines));
        sections.push((
            "simplicity smoke test",
            vec![format!(
                "{} of {} trials reached a scalar, {} inconclusive",
                smoke.reached, smoke.trials, smoke.inconclusive
            )],
        ));
        print!("{}", pretty_lines(&sections));
    } else {
        let mut m = Map::new();
        m.insert("command".into(), Value::String("demo".into()));
        m.insert("name".into(), Value::String("weyl".into()));
        m.insert("max_degree".into(), Value::from(report.rmax));
        m.insert("seed".into(), Value::from(seed));
        m.insert("r_samples".into(), Value::from(report.r_samples));
        let identities: Vec<Value> = report
            .identities
            .iter()
            .map(|i| {
                let mut im = Map::new();
                im.insert("identity".into(), Value::String(i.label.into()));
                im.insert("cases".into(), Value::from(i.cases));
                im.insert("passed".into(), Value::Bool(true));
                Value::Object(im)
            })
            .collect();
        m.insert("identities".into(), Value::Array(identities));
        let mut sm = Map::new();
        sm.insert("trials".into(), Value::from(smoke.trials));
        sm.insert("reached".into(), Value::from(smoke.reached));
        sm.insert("inconclusive".into(), Value::from(smoke.inconclusive));
        m.insert("smoke".into(), Value::Object(sm));
        emit(Value::Object(m));
    }
    Ok(0)
}

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use dexter::config::{Caps, CapsPreset, Format, RunConfig};
use dexter::hochschild::{self, TernaryWord};
use dexter::intervals::series::{self, SeriesKind};
use dexter::invariants;
use dexter::related::{self, Order};
use dexter::suites::{self, Suite};
use dexter::{export, intervals, meet, monoid, DyckPath, Interval, Poset, Result};

/// The dexter order on Dyck paths.
#[derive(Parser)]
#[command(name = "dexter", version)]
struct Cli {
    /// Output format: text, json, csv or dot.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = RunConfig::default().seed)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hasse diagram of D_n under the dexter, Tamari or comb order.
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "dexter")]
        order: Order,
    },
    /// Runs a verification suite; exits with 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value = "small")]
        caps: CapsPreset,
    },
    /// Meet of two paths of the same size, with the lowering steps.
    Meet {
        #[arg(long)]
        path1: DyckPath,
        #[arg(long)]
        path2: DyckPath,
    },
    /// The rho bijection, Z-sets and the termwise-order experiment on F_n.
    #[command(subcommand)]
    Hochschild(HochschildCmd),
    /// Interval counts and catalytic series tables.
    #[command(subcommand)]
    Intervals(IntervalsCmd),
    /// Factorization into monoid generators.
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Coxeter and zeta polynomials, lattice properties, h-polynomials.
    #[command(subcommand)]
    Invariants(InvariantsCmd),
}

#[derive(Subcommand)]
enum HochschildCmd {
    /// The ternary word of a path of F_n.
    Rho {
        #[arg(long)]
        path: DyckPath,
    },
    /// The path of F_n with the given ternary word.
    RhoInv {
        #[arg(long)]
        word: TernaryWord,
    },
    /// The sets Z_n of ternary words, split by first and last letter.
    Zsets {
        #[arg(long)]
        n: usize,
    },
    /// Compares the order on F_n with the termwise order on words.
    Termwise {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum IntervalsCmd {
    /// Number of intervals of D_n, by enumeration and by formula.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Series of all (A), reduced (R) or core (C) intervals through t^max.
    Series {
        #[arg(long, default_value = "A")]
        kind: SeriesKind,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
}

#[derive(Subcommand)]
enum MonoidCmd {
    /// Factors a path into generators of M1, or an interval into generators of M2.
    Factor {
        #[arg(long)]
        path: Option<DyckPath>,
        #[arg(long, requires = "top")]
        bottom: Option<DyckPath>,
        #[arg(long, requires = "bottom")]
        top: Option<DyckPath>,
    },
}

/// Selects the poset an invariant is computed on.
#[derive(Args)]
struct PosetArg {
    /// The whole of D_n.
    #[arg(long)]
    n: Option<usize>,
    /// The interval [bottom, top].
    #[arg(long, requires = "top")]
    bottom: Option<DyckPath>,
    #[arg(long, requires = "bottom")]
    top: Option<DyckPath>,
    /// The interval J(w).
    #[arg(long)]
    j: Option<DyckPath>,
    /// The Hochschild interval F_n.
    #[arg(long)]
    hochschild: Option<usize>,
}

impl PosetArg {
    fn build(&self) -> Result<(String, Poset<DyckPath>)> {
        if let Some(n) = self.hochschild {
            return Ok((format!("F_{n}"), hochschild::f_poset(n)?));
        }
        if let Some(w) = self.j {
            return Ok((format!("J({w})"), dexter::dexter::j_interval(w)));
        }
        if let (Some(b), Some(t)) = (self.bottom, self.top) {
            return Ok((format!("[{b}, {t}]"), Interval::new(b, t)?.poset()));
        }
        let n = self.n.unwrap_or(3);
        Ok((format!("D_{n}"), dexter::dexter::hasse(n)?))
    }
}

#[derive(Subcommand)]
enum InvariantsCmd {
    /// Coxeter polynomial and its cyclotomic factorization.
    Coxeter(PosetArg),
    /// Zeta polynomial and its values at -1 and -2.
    Zeta(PosetArg),
    /// Colored h-polynomial A_n(r, b) of D_n.
    Hpoly {
        #[arg(long)]
        n: usize,
    },
    /// Longest chains of D_1, ..., D_max.
    Chains {
        #[arg(long, default_value_t = 7)]
        max: usize,
    },
    /// Lattice properties of a poset.
    Lattice(PosetArg),
}

fn print_json(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("serialisable"));
}

fn run(cli: Cli) -> Result<ExitCode> {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Hasse { n, order } => {
            let p = related::hasse(n, order)?;
            match fmt {
                Format::Dot => print!("{}", export::to_dot(&p, &format!("{order} D_{n}"))),
                Format::Json => println!("{}", export::to_json(&p)),
                Format::Csv => print!("{}", export::to_csv(&p)),
                Format::Text => print!("{}", export::to_text(&p)),
            }
        }
        Cmd::Verify { suite, caps } => {
            let report = suites::run_suite(suite, &Caps::preset(caps), cli.seed)?;
            match fmt {
                Format::Json => println!("{}", report.to_json()),
                _ => {
                    print!("{report}");
                    let failed = report.failures().count();
                    println!("{} checks, {failed} failed", report.checks.len());
                }
            }
            if !report.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::Meet { path1, path2 } => {
            let (m, trace) = meet::meet_with_trace(path1, path2)?;
            if fmt == Format::Json {
                let steps: Vec<_> = trace.iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect();
                print_json(json!({ "meet": m.to_string(), "trace": steps }));
            } else {
                for (a, b) in &trace {
                    println!("{a} {b}");
                }
                println!("meet {m}");
            }
        }
        Cmd::Hochschild(c) => hochschild_cmd(c, fmt)?,
        Cmd::Intervals(IntervalsCmd::Count { n }) => {
            let c = intervals::count_intervals(n)?;
            let f = intervals::interval_count_formula(n);
            if fmt == Format::Json {
                print_json(json!({ "n": n, "count": c, "formula": f.to_string() }));
            } else {
                println!("{c}");
            }
        }
        Cmd::Intervals(IntervalsCmd::Series { kind, max }) => {
            let table = series::series(kind, max)?;
            match fmt {
                Format::Json => print_json(json!({
                    "coeffs": table.coeffs.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
                })),
                Format::Csv => {
                    println!("n,blocks,count");
                    for (n, row) in table.coeffs.iter().enumerate() {
                        for (j, c) in row.iter().enumerate() {
                            println!("{n},{j},{c}");
                        }
                    }
                }
                _ => println!("{}", table.to_poly()),
            }
        }
        Cmd::Monoid(MonoidCmd::Factor { path, bottom, top }) => {
            let parts: Vec<String> = match (path, bottom, top) {
                (Some(w), _, _) => monoid::m1_factor(w)?.iter().map(|g| g.to_string()).collect(),
                (None, Some(b), Some(t)) => monoid::m2_factor(Interval::new(b, t)?)?
                    .iter()
                    .map(|g| format!("[{}, {}]", g.bottom, g.top))
                    .collect(),
                _ => {
                    return Err(dexter::Error::InvalidArgument("give --path or --bottom and --top".into()));
                }
            };
            if fmt == Format::Json {
                print_json(json!(parts));
            } else {
                println!("{}", parts.join(" # "));
            }
        }
        Cmd::Invariants(c) => invariants_cmd(c, fmt)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn hochschild_cmd(c: HochschildCmd, fmt: Format) -> Result<()> {
    match c {
        HochschildCmd::Rho { path } => println!("{}", hochschild::rho(path)?),
        HochschildCmd::RhoInv { word } => println!("{}", hochschild::rho_inv(&word)?),
        HochschildCmd::Zsets { n } => {
            let z = hochschild::z_sets(n)?;
            let strs = |s: &std::collections::BTreeSet<TernaryWord>| s.iter().map(|w| w.to_string()).collect::<Vec<_>>();
            if fmt == Format::Json {
                print_json(json!({ "n": n, "zero": strs(&z.zero), "one": strs(&z.one), "b": strs(&z.b) }));
            } else {
                println!("zero: {}", strs(&z.zero).join(" "));
                println!("one: {}", strs(&z.one).join(" "));
                println!("b: {}", strs(&z.b).join(" "));
            }
        }
        HochschildCmd::Termwise { n } => match hochschild::termwise_experiment(n)? {
            (true, _) => println!("F_{n}: the dexter order equals the termwise order"),
            (false, Some((a, b))) => println!("F_{n}: the orders differ at {a}, {b}"),
            (false, None) => println!("F_{n}: the orders differ"),
        },
    }
    Ok(())
}

fn invariants_cmd(c: InvariantsCmd, fmt: Format) -> Result<()> {
    match c {
        InvariantsCmd::Coxeter(p) => {
            let (name, poset) = p.build()?;
            let poly = invariants::coxeter_polynomial(&poset)?;
            let f = invariants::coxeter_factorization(&poset)?;
            let on = invariants::roots_on_unit_circle(&f.expand(), invariants::DEFAULT_ROOT_TOL);
            if fmt == Format::Json {
                print_json(json!({
                    "poset": name, "elements": poset.len(), "polynomial": poly.to_string(),
                    "factorization": f.to_notation(), "roots_on_unit_circle": on
                }));
            } else {
                println!("{name}: {} elements", poset.len());
                println!("{poly}");
                println!("{}", f.to_notation());
                println!("roots on the unit circle: {on}");
            }
        }
        InvariantsCmd::Zeta(p) => {
            let (name, poset) = p.build()?;
            let z = invariants::zeta_polynomial(&poset)?;
            if fmt == Format::Json {
                print_json(json!({
                    "poset": name, "zeta": z.to_string(),
                    "at_minus_one": z.eval(-1).to_string(), "at_minus_two": z.eval(-2).to_string()
                }));
            } else {
                println!("{name}: Z(k) = {z}");
                println!("Z(-1) = {}, Z(-2) = {}", z.eval(-1), z.eval(-2));
            }
        }
        InvariantsCmd::Hpoly { n } => println!("{}", invariants::colored_h_polynomial(n)?),
        InvariantsCmd::Chains { max } => {
            let rows = suites::longest_chain_report(max)?;
            if fmt == Format::Json {
                print_json(json!(rows
                    .iter()
                    .map(|(n, l, q)| json!({ "n": n, "longest_chain_elements": l, "quarter_squares_plus_one": q }))
                    .collect::<Vec<_>>()));
            } else {
                println!("n elements_of_longest_chain floor(n^2/4)+1");
                for (n, l, q) in rows {
                    println!("{n} {l} {q}");
                }
            }
        }
        InvariantsCmd::Lattice(p) => {
            let (name, poset) = p.build()?;
            let lattice = invariants::is_lattice(&poset);
            let (sd, ex) = if lattice {
                (Some(invariants::is_semidistributive(&poset)?), Some(invariants::is_extremal(&poset)?))
            } else {
                (None, None)
            };
            if fmt == Format::Json {
                print_json(json!({
                    "poset": name, "lattice": lattice, "semidistributive": sd, "extremal": ex,
                    "longest_chain": invariants::longest_chain(&poset)
                }));
            } else {
                println!("{name}: lattice {lattice}, semidistributive {sd:?}, extremal {ex:?}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig { threads: cli.threads, format: cli.format, seed: cli.seed, ..RunConfig::default() };
    let pool = match cfg.thread_pool() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

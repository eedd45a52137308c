use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use diagram_monoids::algebra::{gram_matrix, parse_rational, semisimple_check, twist};
use diagram_monoids::combinatorics::{
    a_seq, dclass_size, family_size, hclass_size, ideal_size, motzkin, motzkin_m, rank_of_ideal,
    rank_of_idempotent_generated, rclass_count, riordan, riordan_mprime,
};
use diagram_monoids::monoid::{closure, egg_box, for_each_diagram, ideal, DEFAULT_LIMIT};
use diagram_monoids::structure::{dr_membership, in_idempotent_generated, normal_form, Generator, Scope};
use diagram_monoids::{Diagram, Error, Family};
use num_rational::BigRational;
use serde_json::json;

use crate::report::VerificationReport;
use crate::suites::{self, compute_table, Suite, SuiteOptions, TableKind, DEFAULT_SEED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "dmon", version, about = "Partial Brauer and Motzkin diagram monoids")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Largest set any command may materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

fn family_arg(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Product of two diagrams with its floating components.
    Mul {
        #[arg(long, value_parser = family_arg, default_value = "pb")]
        family: Family,
        #[arg(short)]
        n: Option<usize>,
        a: String,
        b: String,
    },
    Star {
        #[arg(short)]
        n: Option<usize>,
        a: String,
    },
    Stats {
        #[arg(short)]
        n: Option<usize>,
        a: String,
    },
    /// A named generator: lambda, rho, id (with --set), sigma, tau (-i, -j),
    /// eps, mu (-k), tau-adj, alpha (-j) or beta.
    Gen {
        #[arg(long)]
        kind: String,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        i: Option<usize>,
        #[arg(short)]
        j: Option<usize>,
        #[arg(short)]
        k: Option<usize>,
        /// Comma-separated points.
        #[arg(long)]
        set: Option<String>,
    },
    Enumerate {
        #[arg(long, value_parser = family_arg)]
        family: Family,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: Option<usize>,
    },
    /// A single count: m, mprime, motzkin, riordan, a, rclass, hclass, dclass,
    /// ideal or size.
    Count {
        #[arg(long)]
        kind: String,
        #[arg(long, value_parser = family_arg, default_value = "m")]
        family: Family,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: Option<usize>,
    },
    /// Emit a table (m, mprime, ideal-size, rank, idempotent-rank), or compare
    /// it with the embedded reference values.
    Tables {
        #[arg(long)]
        kind: String,
        #[arg(long, value_parser = family_arg, default_value = "m")]
        family: Family,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, value_parser = ["golden", "paper"])]
        expect: Option<String>,
    },
    Rank {
        #[arg(long, value_parser = family_arg)]
        family: Family,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: Option<usize>,
        /// Rank of the idempotent-generated part instead.
        #[arg(long)]
        idempotent_generated: bool,
    },
    /// Closure of the generators in a JSON file (an array of diagram objects
    /// or of text forms, the latter needing -n).
    Closure {
        #[arg(long)]
        gens_file: PathBuf,
        #[arg(short)]
        n: Option<usize>,
        #[arg(long)]
        list: bool,
    },
    Ideal {
        #[arg(long, value_parser = family_arg)]
        family: Family,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[arg(long)]
        list: bool,
    },
    Eggbox {
        #[arg(long, value_parser = family_arg)]
        family: Family,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[arg(long)]
        dot: bool,
    },
    NormalForm {
        #[arg(short)]
        n: Option<usize>,
        a: String,
    },
    /// Membership in <D_r>, or with --idempotent-generated in the
    /// idempotent-generated part of the monoid (or of I_r when -r is given).
    Member {
        #[arg(long, value_parser = family_arg, default_value = "m")]
        family: Family,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        r: Option<usize>,
        #[arg(long)]
        idempotent_generated: bool,
        a: String,
    },
    Gram {
        #[arg(long, value_parser = family_arg, default_value = "m")]
        family: Family,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[arg(long, value_parser = rational_arg)]
        x: Option<BigRational>,
        #[arg(long, value_parser = rational_arg)]
        y: Option<BigRational>,
    },
    Semisimple {
        #[arg(short)]
        n: usize,
        #[arg(long, value_parser = rational_arg)]
        x: BigRational,
        #[arg(long, value_parser = rational_arg)]
        y: BigRational,
    },
    Verify {
        #[arg(long, value_parser = ["all", "tables", "enumeration", "green", "closure", "membership", "minimality", "normal-form", "identities", "gram", "unfold"])]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_parser = family_arg)]
        family: Option<Family>,
        #[arg(short)]
        n: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

/// Runs the command line, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let msg = e.render().to_string();
            let _ = write!(err, "{msg}");
            if !msg.contains("Usage:") {
                let _ = writeln!(err, "\n{}", Cli::command().render_usage());
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn diagram(s: &str, n: Option<usize>) -> Result<Diagram, Failure> {
    Ok(Diagram::parse(s, n)?)
}

fn in_family(family: Family, d: &Diagram) -> Result<(), Failure> {
    if family.contains(d) {
        Ok(())
    } else {
        Err(Error::FamilyMismatch(format!("{d} is not in {family}_{}", d.degree())).into())
    }
}

fn emit_diagram(out: Out, format: Format, d: &Diagram) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", d.to_json()),
        _ => writeln!(out, "{d}"),
    }
}

fn emit_report(out: Out, format: Format, rep: &VerificationReport) -> Result<(), Failure> {
    match format {
        Format::Json => writeln!(out, "{}", rep.to_json())?,
        _ => write!(out, "{rep}")?,
    }
    if rep.pass {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn points(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("bad point {t:?}"))))
        .collect()
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("this generator needs {flag}")))
}

fn generator(
    kind: &str,
    i: Option<usize>,
    j: Option<usize>,
    k: Option<usize>,
    set: Option<&str>,
) -> Result<Generator, Failure> {
    let set = || -> Result<Vec<usize>, Failure> {
        points(set.ok_or_else(|| Failure::Usage("this generator needs --set".into()))?)
    };
    Ok(match kind {
        "lambda" => Generator::Lambda(set()?),
        "rho" => Generator::Rho(set()?),
        "id" => Generator::Id(set()?),
        "sigma" | "sigma_ij" => Generator::Sigma(need(i, "-i")?, need(j, "-j")?),
        "tau" | "tau_ij" => Generator::Tau(need(i, "-i")?, need(j, "-j")?),
        "eps" | "epsilon" => Generator::Eps(need(k.or(i), "-k")?),
        "tau-adj" | "tau_adj" => Generator::TauAdj(need(j.or(i), "-j")?),
        "mu" => Generator::Mu(need(k.or(i), "-k")?),
        "alpha" => Generator::Alpha(need(j.or(i), "-j")?),
        "beta" | "shift" => Generator::Beta,
        _ => return Err(Failure::Usage(format!("unknown generator {kind:?}"))),
    })
}

fn count(kind: &str, family: Family, n: usize, r: Option<usize>) -> Result<String, Failure> {
    let rank = || r.ok_or_else(|| Failure::Usage(format!("count --kind {kind} needs -r")));
    let ni = n as i64;
    Ok(match kind {
        "m" => match r {
            Some(r) => motzkin_m(ni, r as i64),
            None => motzkin(n),
        },
        "mprime" => match r {
            Some(r) => riordan_mprime(ni, r as i64),
            None => riordan(n),
        },
        "motzkin" => motzkin(n),
        "riordan" => riordan(n),
        "a" => a_seq(n),
        "rclass" => rclass_count(family, n, rank()?)?,
        "hclass" => hclass_size(family, rank()?),
        "dclass" => dclass_size(family, n, rank()?)?,
        "ideal" => ideal_size(family, n, rank()?)?,
        "size" => family_size(family, n),
        _ => return Err(Failure::Usage(format!("unknown count {kind:?}"))),
    }
    .to_string())
}

/// Names the closure when it is a whole family or one of its ideals.
fn identify(set: &BTreeSet<Diagram>, n: usize) -> String {
    let order = [Family::S, Family::O, Family::I, Family::J, Family::M, Family::B, Family::PB];
    let top = set.iter().map(Diagram::rank).max().unwrap_or(0);
    for family in order {
        let Ok(size) = ideal_size(family, n, top) else { continue };
        if size != set.len().into() || !set.iter().all(|d| family.contains(d)) {
            continue;
        }
        return if top == n { format!("{family}_{n}") } else { format!("I_{top}({family}_{n})") };
    }
    "none".into()
}

fn read_gens(path: &PathBuf, n: Option<usize>) -> Result<Vec<Diagram>, Failure> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let items = value.as_array().ok_or_else(|| Failure::Usage("expected a JSON array of diagrams".into()))?;
    items
        .iter()
        .map(|v| match v {
            serde_json::Value::String(s) => diagram(s, n),
            other => diagram(&other.to_string(), n),
        })
        .collect()
}

fn poly_rows(entries: &[Vec<diagram_monoids::Polynomial2>]) -> Vec<Vec<String>> {
    entries.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect()
}

fn dispatch(cli: &Cli, out: Out) -> Result<(), Failure> {
    let fmt = cli.format;
    match &cli.cmd {
        Cmd::Mul { family, n, a, b } => {
            let (a, b) = (diagram(a, *n)?, diagram(b, *n)?);
            in_family(*family, &a)?;
            in_family(*family, &b)?;
            let p = a.multiply(&b)?;
            let t = twist(&a, &b)?;
            match fmt {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"product": p.product.to_string(), "loops": p.loops, "paths": p.paths, "twist": t.to_string()})
                )?,
                _ => writeln!(out, "{}\nloops={} paths={} twist={}", p.product, p.loops, p.paths, t)?,
            }
        }
        Cmd::Star { n, a } => emit_diagram(out, fmt, &diagram(a, *n)?.star())?,
        Cmd::Stats { n, a } => {
            let d = diagram(a, *n)?;
            let s = d.stats();
            match fmt {
                Format::Json => writeln!(out, "{}", json!({"stats": s, "families": d.families()}))?,
                _ => {
                    writeln!(
                        out,
                        "rank={} dom={:?} codom={:?} ker={:?} coker={:?}",
                        s.rank, s.dom, s.codom, s.ker, s.coker
                    )?;
                    let names: Vec<&str> = Family::ALL.iter().filter(|f| f.contains(&d)).map(|f| f.name()).collect();
                    writeln!(out, "families={}", names.join(","))?;
                }
            }
        }
        Cmd::Gen { kind, n, i, j, k, set } => {
            let g = generator(kind, *i, *j, *k, set.as_deref())?;
            emit_diagram(out, fmt, &g.build(*n)?)?;
        }
        Cmd::Enumerate { family, n, r } => {
            let size = match r {
                Some(r) => dclass_size(*family, *n, *r)?,
                None => family_size(*family, *n),
            };
            if size > cli.limit.into() {
                return Err(Error::TooLarge {
                    what: format!("{family}_{n}"),
                    size: size.to_string(),
                    limit: cli.limit,
                }
                .into());
            }
            let mut res = Ok(());
            for_each_diagram(*family, *n, *r, |d| {
                if res.is_ok() {
                    res = match fmt {
                        Format::Json => writeln!(out, "{}", serde_json::Value::String(d.to_string())),
                        _ => writeln!(out, "{d}"),
                    };
                }
            })?;
            res?;
        }
        Cmd::Count { kind, family, n, r } => writeln!(out, "{}", count(kind, *family, *n, *r)?)?,
        Cmd::Tables { kind, family, max_n, expect } => {
            let kind: TableKind = kind.parse()?;
            if expect.is_some() {
                let mut rep = VerificationReport::new(format!("tables/{kind:?}/{family}"));
                suites::compare_table(&mut rep, kind, *family, *max_n)?;
                return emit_report(out, fmt, &rep);
            }
            let rows = compute_table(kind, *family, *max_n)?;
            match fmt {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&rows).expect("rows"))?,
                _ => {
                    writeln!(out, "n,r,value")?;
                    for row in rows {
                        let r = row.r.map(|r| r.to_string()).unwrap_or_default();
                        writeln!(out, "{},{},{}", row.n, r, row.value)?;
                    }
                }
            }
        }
        Cmd::Rank { family, n, r, idempotent_generated } => {
            if *idempotent_generated {
                writeln!(out, "rank={}", rank_of_idempotent_generated(*family, *n, *r)?)?;
            } else {
                let res = rank_of_ideal(*family, *n, r.unwrap_or(*n))?;
                match fmt {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({
                            "rank": res.rank.to_string(),
                            "idrank": res.idrank.as_ref().map(|v| v.to_string()),
                            "idempotent_generated": res.idempotent_generated,
                        })
                    )?,
                    _ => {
                        write!(out, "rank={} idempotent_generated={}", res.rank, res.idempotent_generated)?;
                        if let Some(idr) = &res.idrank {
                            write!(out, " idrank={idr}")?;
                        }
                        writeln!(out)?;
                    }
                }
            }
        }
        Cmd::Closure { gens_file, n, list } => {
            let gens = read_gens(gens_file, *n)?;
            let degree = gens.first().map(Diagram::degree).unwrap_or(0);
            if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
                return Err(Error::DegreeMismatch(degree, g.degree()).into());
            }
            let set = closure(&gens, cli.limit)?;
            let equals = identify(&set, degree);
            match fmt {
                Format::Json => {
                    let elems: Option<Vec<String>> = list.then(|| set.iter().map(|d| d.to_string()).collect());
                    writeln!(out, "{}", json!({"size": set.len(), "equals": equals, "elements": elems}))?
                }
                _ => {
                    writeln!(out, "size={} equals={}", set.len(), equals)?;
                    if *list {
                        for d in &set {
                            writeln!(out, "{d}")?;
                        }
                    }
                }
            }
        }
        Cmd::Ideal { family, n, r, list } => {
            let size = ideal_size(*family, *n, *r)?;
            if *list {
                for d in ideal(*family, *n, *r)? {
                    emit_diagram(out, fmt, &d)?;
                }
            } else {
                writeln!(out, "size={size}")?;
            }
        }
        Cmd::Eggbox { family, n, r, dot } => {
            let eb = egg_box(*family, *n, *r)?;
            if *dot || fmt == Format::Dot {
                write!(out, "{}", eb.to_dot())?;
            } else if fmt == Format::Json {
                writeln!(out, "{}", serde_json::to_string(&eb).expect("egg-box json"))?;
            } else {
                let h = eb.hclass_sizes().into_iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
                writeln!(out, "D_{r}({family}_{n}): {} x {} H-classes of size {h}", eb.rows.len(), eb.cols.len())?;
                for (i, row) in eb.cells.iter().enumerate() {
                    let cells: Vec<String> = row
                        .iter()
                        .enumerate()
                        .map(|(j, c)| format!("{}{}", if eb.idempotent[i][j] { "*" } else { " " }, c[0]))
                        .collect();
                    writeln!(out, "{}", cells.join(" | "))?;
                }
            }
        }
        Cmd::NormalForm { n, a } => {
            let nf = normal_form(&diagram(a, *n)?);
            let parts =
                [("beta", &nf.beta), ("lambda", &nf.lam), ("gamma", &nf.gam), ("rho", &nf.rho), ("delta", &nf.delta)];
            match fmt {
                Format::Text => {
                    for (k, d) in parts {
                        writeln!(out, "{k}={d}")?;
                    }
                }
                _ => {
                    let obj: serde_json::Map<String, serde_json::Value> =
                        parts.iter().map(|(k, d)| (k.to_string(), d.to_string().into())).collect();
                    writeln!(out, "{}", serde_json::Value::Object(obj))?;
                }
            }
        }
        Cmd::Member { family, n, r, idempotent_generated, a } => {
            let d = diagram(a, *n)?;
            if *idempotent_generated {
                let scope = match (family, r) {
                    (Family::PB, None) => Scope::PbWhole,
                    (Family::PB, Some(r)) => Scope::PbIdeal(*r),
                    (Family::M, None) => Scope::MWhole,
                    (Family::M, Some(r)) => Scope::MIdeal(*r),
                    _ => return Err(Error::FamilyMismatch(format!("no characterization for {family}")).into()),
                };
                writeln!(out, "member={}", in_idempotent_generated(&d, scope)?)?;
            } else {
                let r = r.ok_or_else(|| Failure::Usage("member needs -r".into()))?;
                let m = dr_membership(&d, *family, r)?;
                let basis = format!("{:?}", m.basis).to_lowercase();
                match fmt {
                    Format::Json => writeln!(out, "{}", json!({"member": m.member, "basis": basis}))?,
                    _ => writeln!(out, "member={} basis={basis}", m.member)?,
                }
            }
        }
        Cmd::Gram { family, n, r, x, y } => {
            if *family != Family::M {
                return Err(Error::FamilyMismatch("Gram matrices are defined for the Motzkin family".into()).into());
            }
            let g = gram_matrix(*n, *r)?;
            let at = match (x, y) {
                (Some(x), Some(y)) => Some(g.rank_at(x, y)),
                (None, None) => None,
                _ => return Err(Failure::Usage("--x and --y go together".into())),
            };
            match fmt {
                Format::Json => {
                    let basis: Vec<String> = g.basis.iter().map(|d| d.to_string()).collect();
                    writeln!(
                        out,
                        "{}",
                        json!({"n": n, "r": r, "basis": basis, "entries": poly_rows(&g.entries), "rank": at})
                    )?
                }
                _ => {
                    for (b, row) in g.basis.iter().zip(poly_rows(&g.entries)) {
                        writeln!(out, "{b}: [{}]", row.join(", "))?;
                    }
                    if let Some(k) = at {
                        writeln!(out, "matrix_rank={} radical_dim={} dim_L={}", k.matrix_rank, k.radical_dim, k.dim_l)?;
                    }
                }
            }
        }
        Cmd::Semisimple { n, x, y } => writeln!(out, "semisimple={}", semisimple_check(*n, x, y)?)?,
        Cmd::Verify { suite, max_n, family, n } => {
            let opts = SuiteOptions { max_n: *max_n, seed: cli.seed, limit: cli.limit, family: *family, n: *n };
            let chosen: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse::<Suite>()?] };
            let mut all_pass = true;
            for s in chosen {
                let rep = suites::run_suite(s, &opts)?;
                all_pass &= emit_report(out, fmt, &rep).is_ok();
            }
            if !all_pass {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

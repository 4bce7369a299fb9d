mod config;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use reciprocity::qforms::STRUCTURE_BOUND;
use reciprocity::tables::{class_table, example_table, Example, Family};
use reciprocity::{
    compose, enumerate_classes, fundamental_unit, group_structure, normalize_sign, order_of,
    prime_to_class, unit_symbol, verify_dirichlet, verify_kronecker, verify_quartic,
    verify_quartic_with_sign, verify_scholz, FormClass, SweepConfig, VerificationReport,
};

use config::{Format, Overrides, RunConfig, Threads};

#[derive(Parser)]
#[command(
    name = "reciprocity",
    version,
    about = "Residue symbols of quadratic units against form class groups"
)]
struct Cli {
    /// File of `key = value` lines (sweep_max, bruteforce_cap, threads, format, output)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest prime considered by `verify` sweeps [default: 50000]
    #[arg(long, global = true)]
    sweep_max: Option<u64>,
    /// Largest integer searched for by brute-force representation [default: 100000000]
    #[arg(long, global = true)]
    bruteforce_cap: Option<u64>,
    /// Worker threads, or `auto`
    #[arg(long, global = true)]
    threads: Option<Threads>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fundamental unit of Q(sqrt d)
    Unit {
        #[arg(allow_negative_numbers = true)]
        d: BigInt,
    },
    /// Reduced forms, class number and structure of a negative discriminant
    Classgroup {
        #[arg(allow_negative_numbers = true)]
        disc: i64,
    },
    /// Class of a prime above l in discriminant D
    PrimeClass {
        l: BigInt,
        #[arg(allow_negative_numbers = true)]
        disc: BigInt,
    },
    /// Power residue symbol (sign * eps / l)_h of the fundamental unit of Q(sqrt d)
    Symbol {
        #[arg(long)]
        d: BigInt,
        #[arg(long)]
        prime: BigInt,
        #[arg(long)]
        order: u32,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        sign: i8,
    },
    /// Sweep primes and compare symbols with classes
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Recompute a table
    Table {
        #[command(subcommand)]
        which: Table,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Quadratic character of eps_p, p = 1 mod 8, against discriminant -4p
    Dirichlet {
        #[arg(long)]
        p: BigInt,
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// (eps_p / q) against (q/p)_4 (p/q)_4
    Scholz {
        #[arg(long)]
        p: BigInt,
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Cubic character of eps_m, m in {69, 93}
    Kronecker {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Quartic character of s * eps_pq against discriminant -pq
    Quartic {
        #[arg(long)]
        p: BigInt,
        #[arg(long)]
        q: BigInt,
        /// Force the sign instead of normalizing
        #[arg(long, allow_negative_numbers = true)]
        sign: Option<i8>,
        /// Lines `prime symbol` the sweep must reproduce
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Table {
    /// Class numbers of -(27b^2 -+ 4)
    Class {
        #[arg(long, value_parser = ["minus4", "plus4"])]
        family: String,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        b: Vec<i64>,
    },
    /// Primes represented by x^2 + 39y^2 and 3x^2 + 13y^2
    Example1,
    /// Primes represented by x^2 + 111y^2, 3x^2 + 37y^2, 4x^2 +- xy + 7y^2
    Example2,
}

/// What a command produced: rendered output, and whether every check passed.
struct Done {
    text: String,
    passed: bool,
}

fn passed(text: String) -> Result<Done, String> {
    Ok(Done { text, passed: true })
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sign(s: i8) -> String {
    format!("{s:+}")
}

fn render<T: Serialize>(
    cfg: &RunConfig,
    value: &T,
    rows: impl FnOnce() -> Result<String, String>,
    text: String,
) -> Result<String, String> {
    match cfg.format {
        Format::Text => Ok(text),
        Format::Json => output::json(value),
        Format::Csv => rows(),
    }
}

#[derive(Serialize)]
struct UnitOut {
    d: String,
    unit: String,
    t: String,
    u: String,
    norm: i8,
    s: Option<i8>,
}

fn cmd_unit(cfg: &RunConfig, d: &BigInt) -> Result<Done, String> {
    let eps = fundamental_unit(d).map_err(err)?;
    let out = UnitOut {
        d: d.to_string(),
        unit: eps.to_string(),
        t: eps.t().to_string(),
        u: eps.u().to_string(),
        norm: eps.norm(),
        s: normalize_sign(&eps).ok(),
    };
    let text = format!(
        "d = {}\nunit = {}\nt = {}\nu = {}\nnorm = {}\ns = {}\n",
        out.d,
        out.unit,
        out.t,
        out.u,
        sign(out.norm),
        out.s
            .map_or("undefined (unit is not +-1 mod 4)".to_string(), sign)
    );
    passed(render(
        cfg,
        &out,
        || output::csv_rows(std::slice::from_ref(&out)),
        text,
    )?)
}

#[derive(Serialize)]
struct FormRow {
    form: String,
    a: i64,
    b: i64,
    c: i64,
    order: Option<u64>,
}

#[derive(Serialize)]
struct GroupOut {
    disc: i64,
    class_number: u64,
    structure: Option<Vec<u64>>,
    forms: Vec<FormRow>,
}

fn structure_name(s: &[u64]) -> String {
    if s.is_empty() {
        "trivial".to_string()
    } else {
        s.iter()
            .map(|n| format!("C{n}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

fn cmd_classgroup(cfg: &RunConfig, disc: i64) -> Result<Done, String> {
    let g = enumerate_classes(&disc).map_err(err)?;
    let small = g.class_number() <= STRUCTURE_BOUND;
    let structure = if small {
        Some(group_structure(&g).map_err(err)?)
    } else {
        None
    };
    let forms: Vec<FormRow> = g
        .classes()
        .iter()
        .map(|c| FormRow {
            form: c.to_string(),
            a: *c.rep().a(),
            b: *c.rep().b(),
            c: *c.rep().c(),
            order: small.then(|| order_of(c, &g)),
        })
        .collect();
    let out = GroupOut {
        disc,
        class_number: g.class_number(),
        structure,
        forms,
    };
    let mut text = format!(
        "discriminant = {disc}\nclass number = {}\n",
        out.class_number
    );
    if let Some(s) = &out.structure {
        text.push_str(&format!("structure = {}\n", structure_name(s)));
    }
    text.push_str("forms:\n");
    for f in &out.forms {
        match f.order {
            Some(o) => text.push_str(&format!("  {} order {o}\n", f.form)),
            None => text.push_str(&format!("  {}\n", f.form)),
        }
    }
    passed(render(cfg, &out, || output::csv_rows(&out.forms), text)?)
}

/// Order of `c` if it is at most `cap`.
fn small_order(c: &FormClass<BigInt>, cap: u64) -> Result<Option<u64>, String> {
    let mut acc = c.clone();
    for k in 1..=cap {
        if acc.is_principal() {
            return Ok(Some(k));
        }
        acc = compose(&acc, c).map_err(err)?;
    }
    Ok(None)
}

#[derive(Serialize)]
struct PrimeClassOut {
    prime: String,
    disc: String,
    class: String,
    principal: bool,
    order: Option<u64>,
}

fn cmd_prime_class(cfg: &RunConfig, l: &BigInt, disc: &BigInt) -> Result<Done, String> {
    let c = prime_to_class(l, disc).map_err(err)?;
    let out = PrimeClassOut {
        prime: l.to_string(),
        disc: disc.to_string(),
        class: c.to_string(),
        principal: c.is_principal(),
        order: small_order(&c, STRUCTURE_BOUND)?,
    };
    let order = out
        .order
        .map_or(format!("> {STRUCTURE_BOUND}"), |o| o.to_string());
    let text = format!(
        "prime = {}\ndiscriminant = {}\nclass = {}\nprincipal = {}\norder = {order}\n",
        out.prime, out.disc, out.class, out.principal
    );
    passed(render(
        cfg,
        &out,
        || output::csv_rows(std::slice::from_ref(&out)),
        text,
    )?)
}

#[derive(Serialize)]
struct SymbolOut {
    d: String,
    unit: String,
    prime: String,
    order: u32,
    sign: i8,
    value: String,
    exponent: u32,
    root_used: String,
}

fn cmd_symbol(cfg: &RunConfig, d: &BigInt, l: &BigInt, h: u32, s: i8) -> Result<Done, String> {
    let eps = fundamental_unit(d).map_err(err)?;
    let v = unit_symbol(&eps, l, h, s).map_err(err)?;
    let out = SymbolOut {
        d: d.to_string(),
        unit: eps.to_string(),
        prime: l.to_string(),
        order: h,
        sign: s,
        value: v.value.to_string(),
        exponent: v.value.exponent,
        root_used: v.root_used.to_string(),
    };
    let subject = if s < 0 {
        format!("-({})", out.unit)
    } else {
        format!("({})", out.unit)
    };
    let text = format!(
        "({subject} / {})_{h} = {}\nsqrt({}) -> {} mod {}\n",
        out.prime, out.value, out.d, out.root_used, out.prime
    );
    passed(render(
        cfg,
        &out,
        || output::csv_rows(std::slice::from_ref(&out)),
        text,
    )?)
}

fn read_golden(path: &Path) -> Result<Vec<(u64, String)>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(p), Some(s), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!(
                "{}: line {}: expected `prime symbol`",
                path.display(),
                i + 1
            ));
        };
        let p = p
            .parse()
            .map_err(|e| format!("{}: line {}: {e}", path.display(), i + 1))?;
        out.push((p, s.to_string()));
    }
    Ok(out)
}

fn cmd_verify(cfg: &RunConfig, which: &Verify) -> Result<Done, String> {
    let sweep = SweepConfig {
        bruteforce_cap: cfg.bruteforce_cap,
    };
    let n = cfg.sweep_max;
    let (mut report, golden): (VerificationReport, &Option<PathBuf>) = match which {
        Verify::Dirichlet { p, golden } => (verify_dirichlet(p, n, &sweep).map_err(err)?, golden),
        Verify::Scholz { p, golden } => (verify_scholz(p, n).map_err(err)?, golden),
        Verify::Kronecker { m, golden } => (
            verify_kronecker::<BigInt>(*m, n, &sweep).map_err(err)?,
            golden,
        ),
        Verify::Quartic { p, q, sign, golden } => {
            let r = match sign {
                Some(s) => verify_quartic_with_sign(p, q, n, *s, &sweep),
                None => verify_quartic(p, q, n, &sweep),
            };
            (r.map_err(err)?, golden)
        }
    };
    if let Some(path) = golden {
        report.check_expected(&read_golden(path)?);
    }
    Ok(Done {
        text: output::report(&report, cfg.format)?,
        passed: report.verified(),
    })
}

fn cmd_table(cfg: &RunConfig, which: &Table) -> Result<Done, String> {
    match which {
        Table::Class { family, b } => {
            let family: Family = family.parse().map_err(err)?;
            let rows = class_table(family, b).map_err(err)?;
            let mut text = format!("{:>6} {:>10} {:>6}\n", "b", "-m", "h");
            for r in &rows {
                let h = match (&r.class_number, &r.note) {
                    (Some(h), _) => h.to_string(),
                    (None, Some(note)) => format!("- ({note})"),
                    (None, None) => "-".to_string(),
                };
                text.push_str(&format!("{:>6} {:>10} {:>6}\n", r.b, r.disc, h));
            }
            passed(render(cfg, &rows, || output::csv_rows(&rows), text)?)
        }
        Table::Example1 | Table::Example2 => {
            let ex = if matches!(which, Table::Example1) {
                Example::One
            } else {
                Example::Two
            };
            let rows = example_table(ex).map_err(err)?;
            let mut text = format!(
                "{:>5}  {:<5} {:<12} {:>10}  {:>6} {:>8} {:>9}\n",
                "l", "form", "", "(x,y)", "symbol", "expected", "predicted"
            );
            for r in &rows {
                text.push_str(&format!(
                    "{:>5}  {:<5} {:<12} {:>10}  {:>6} {:>8} {:>9}{}\n",
                    r.prime,
                    r.label,
                    r.form,
                    format!("({},{})", r.x, r.y),
                    r.symbol,
                    r.expected,
                    r.predicted,
                    if r.agrees() { "" } else { "  MISMATCH" }
                ));
            }
            let ok = rows.iter().all(|r| r.agrees());
            Ok(Done {
                text: render(cfg, &rows, || output::csv_rows(&rows), text)?,
                passed: ok,
            })
        }
    }
}

fn dispatch(cfg: &RunConfig, command: &Command) -> Result<Done, String> {
    match command {
        Command::Unit { d } => cmd_unit(cfg, d),
        Command::Classgroup { disc } => cmd_classgroup(cfg, *disc),
        Command::PrimeClass { l, disc } => cmd_prime_class(cfg, l, disc),
        Command::Symbol {
            d,
            prime,
            order,
            sign,
        } => cmd_symbol(cfg, d, prime, *order, *sign),
        Command::Verify { which } => cmd_verify(cfg, which),
        Command::Table { which } => cmd_table(cfg, which),
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let flags = Overrides {
        sweep_max: cli.sweep_max,
        bruteforce_cap: cli.bruteforce_cap,
        threads: cli.threads,
        format: cli.format,
        output: cli.output.clone(),
    };
    let cfg = RunConfig::load(cli.config.as_deref(), &flags)?;
    let done = match cfg.threads {
        Threads::Auto => dispatch(&cfg, &cli.command)?,
        Threads::Fixed(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(err)?
            .install(|| dispatch(&cfg, &cli.command))?,
    };
    match &cfg.output {
        Some(path) => std::fs::write(path, &done.text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{}", done.text),
    }
    Ok(done.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

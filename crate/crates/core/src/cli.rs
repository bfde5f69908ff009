//! The `hyperideal` command line.
//!
//! ```text
//! hyperideal [--workers N] ring <FILE> [--emit]
//! hyperideal [--workers N] ideal <FILE> [--ideal SPEC]
//! hyperideal [--workers N] predicate <KIND> (--zt T=2,4 n=150 | --ring FILE --ideal SPEC) [--u U] --v V
//! hyperideal [--workers N] construct <product|matrix|poly|quotient|gamma|localize> <FILE>.. [options] [--out PATH]
//! hyperideal [--workers N] verify (--all | --id ID) [--spec FILE] [--seed N] [--report PATH]
//! ```
//!
//! `KIND` is one of `v-absorbing`, `uv-absorbing`, `ab-uv-absorbing` and
//! `uv-absorbing-prime`. Exit status: 0 when the predicate holds or the suite
//! passes, 1 when it fails (witnesses on stdout), 2 on usage or input errors.
//! Results go to stdout; progress and diagnostics go to stderr.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::absorbing::{abs_indices, check, AbsorbingQuery, Kind};
use crate::constructions::{
    direct_product, fundamental_ring, localization, matrix_hyperring, monomial_extension, quotient, Closure,
    DEFAULT_MATRIX_BUDGET,
};
use crate::element_set::ElementSet;
use crate::format::{parse_ideal, Ring, RingSpec};
use crate::harness::{self, Desk, DeskSpec, Status};
use crate::hyperring::{HyperStructure, Hyperring};
use crate::ideal::{
    enumerate_hyperideals, is_local, is_maximal, is_primary, is_prime, maximal_ideals, radical, CClassCache,
};
use crate::zt::{ZtContext, ZtKind};

#[derive(Debug, Parser)]
#[command(name = "hyperideal", version, about = "Absorbing-type hyperideals in finite multiplicative hyperrings")]
pub struct Cli {
    /// Worker threads for parallel scans (default: available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize a ring file.
    Ring {
        file: PathBuf,
        /// Print the canonical form of the file instead of a summary.
        #[arg(long)]
        emit: bool,
    },
    /// List the hyperideals of a finite ring with their properties.
    Ideal {
        file: PathBuf,
        /// Only this ideal: elements `0,3` or generators `gen:[2]`.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Decide an absorbing predicate.
    Predicate(PredicateArgs),
    /// Build a derived structure and print it as a ring file.
    Construct(ConstructArgs),
    /// Run the property suite on a desk.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PredicateKind {
    VAbsorbing,
    UvAbsorbing,
    AbUvAbsorbing,
    UvAbsorbingPrime,
}

#[derive(Debug, Args)]
pub struct PredicateArgs {
    pub kind: PredicateKind,
    /// A `ℤ_T` context as `T=2,4 n=150`.
    #[arg(long, num_args = 2, value_names = ["T=..", "n=.."], conflicts_with = "ring")]
    pub zt: Option<Vec<String>>,
    /// A ring file.
    #[arg(long, required_unless_present = "zt")]
    pub ring: Option<PathBuf>,
    /// The ideal in a finite ring; defaults to `{0}`.
    #[arg(long)]
    pub ideal: Option<String>,
    #[arg(long)]
    pub u: Option<usize>,
    #[arg(long)]
    pub v: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Product,
    Matrix,
    Poly,
    Quotient,
    Gamma,
    Localize,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: ConstructKind,
    /// Base ring file(s); `product` takes two.
    #[arg(required = true, num_args = 1..=2)]
    pub files: Vec<PathBuf>,
    /// The ideal to factor out (`quotient`).
    #[arg(long)]
    pub ideal: Option<String>,
    /// Denominators, e.g. `1,5` (`localize`).
    #[arg(long)]
    pub s: Option<String>,
    /// Only require `r ∘ r'` to meet `S` (`localize`).
    #[arg(long)]
    pub weak: bool,
    /// Highest monomial degree (`poly`).
    #[arg(long, default_value_t = 2)]
    pub degree: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["all", "id"])))]
pub struct VerifyArgs {
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub id: Option<String>,
    /// Desk spec (TOML); the default desk otherwise.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here; stdout then only gets the summary line.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

/// What a command produced: text for stdout and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

/// Input or usage problems; these exit with status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Lib(#[from] crate::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

pub fn execute(cli: &Cli) -> CliResult<Output> {
    if let Some(n) = cli.workers {
        if n == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        // A second call in the same process finds the pool already built,
        // which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match &cli.command {
        Command::Ring { file, emit } => ring_command(file, *emit),
        Command::Ideal { file, ideal } => ideal_command(file, ideal.as_deref()),
        Command::Predicate(args) => predicate_command(args),
        Command::Construct(args) => construct_command(args),
        Command::Verify(args) => verify_command(args),
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> CliResult<(RingSpec, Ring)> {
    let spec = RingSpec::parse(&read(path)?)?;
    let ring = spec.build()?;
    Ok((spec, ring))
}

fn load_finite(path: &Path) -> CliResult<Hyperring> {
    match load(path)?.1 {
        Ring::Finite(r) => Ok(r),
        _ => Err(CliError::Usage(format!(
            "{} must describe a finite hyperring with an addition table",
            path.display()
        ))),
    }
}

fn done(text: String) -> CliResult<Output> {
    Ok(Output { text, success: true })
}

fn list<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ring_command(file: &Path, emit: bool) -> CliResult<Output> {
    let (spec, ring) = load(file)?;
    if emit {
        return done(spec.emit());
    }
    let mut out = String::new();
    match ring {
        Ring::Finite(r) => {
            let ideals = enumerate_hyperideals(&r);
            let _ = writeln!(out, "order: {}", r.order());
            let _ = writeln!(out, "valid: {}", r.defect().map_or("yes".to_string(), |e| format!("no ({e})")));
            let _ = writeln!(out, "identity: {}", r.one().map_or("none".to_string(), |e| e.to_string()));
            let _ = writeln!(out, "units: {}", r.units());
            let _ = writeln!(out, "commutative: {}", yes(r.is_commutative()));
            let _ = writeln!(
                out,
                "strongly distributive: {}",
                yes(r.strong_distributivity_witness().is_none())
            );
            let _ = writeln!(out, "hyperideals: {}", ideals.len());
            let maximal = maximal_ideals(&r, &ideals);
            let _ = writeln!(out, "maximal: {}", list(&maximal));
            let _ = writeln!(out, "local: {}", yes(is_local(&r, &ideals)));
            match fundamental_ring(&r, &CClassCache::new(&r)) {
                Ok(f) => {
                    let classes: Vec<String> = f.classes().iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(out, "γ* classes: {}", classes.join(" "));
                }
                Err(e) => {
                    let _ = writeln!(out, "γ* classes: {e}");
                }
            }
        }
        Ring::Mul(t) => {
            let _ = writeln!(out, "order: {}", t.order());
            let _ = writeln!(out, "multiplication only (no addition table)");
            let _ = writeln!(out, "identities: {}", t.identities());
            let _ = writeln!(out, "units: {}", t.units());
            let _ = writeln!(out, "commutative: {}", yes(t.is_commutative()));
            let _ = writeln!(
                out,
                "associative: {}",
                t.associativity_defect().map_or("yes".to_string(), |d| format!("no, at {d:?}"))
            );
        }
        Ring::Zt(z) => {
            let _ = writeln!(out, "ZT context T={{{}}} n={}", list(z.t()), z.modulus());
            let _ = writeln!(out, "residues: {}", z.modulus());
        }
    }
    done(out)
}

fn ideal_command(file: &Path, ideal: Option<&str>) -> CliResult<Output> {
    let r = load_finite(file)?;
    let ideals = enumerate_hyperideals(&r);
    let selected = match ideal {
        Some(text) => vec![parse_ideal(&r, text)?],
        None => ideals.clone(),
    };
    let cache = CClassCache::new(&r);
    let mut out = String::new();
    for q in &selected {
        let proper = q.len() < r.order();
        let _ = writeln!(out, "{q}");
        if !proper {
            let _ = writeln!(out, "  the whole ring");
            continue;
        }
        let _ = writeln!(out, "  prime: {}", yes(is_prime(&r, q)?));
        let _ = writeln!(out, "  primary: {}", yes(is_primary(&r, q)?));
        let _ = writeln!(out, "  maximal: {}", yes(is_maximal(&r, &ideals, q)?));
        let _ = writeln!(out, "  C: {}", yes(cache.is_c_hyperideal(q)));
        let _ = writeln!(out, "  strong C: {}", yes(cache.is_strong_c_hyperideal(q)));
        let _ = writeln!(out, "  radical: {}", radical(&r, &ideals, q).members);
        let _ = writeln!(out, "  {}", abs_indices(&r, q)?);
    }
    done(out)
}

fn parse_zt(values: &[String]) -> CliResult<ZtContext> {
    let mut t = None;
    let mut n = None;
    for v in values {
        let bad = || CliError::Usage(format!("--zt expects `T=a,b,..` and `n=..`, got `{v}`"));
        let (key, value) = v.split_once('=').ok_or_else(bad)?;
        match key.trim() {
            "T" => {
                let parsed: Result<Vec<i64>, _> = value.split(',').map(|x| x.trim().parse::<i64>()).collect();
                t = Some(parsed.map_err(|_| bad())?);
            }
            "n" => n = Some(value.trim().parse::<u64>().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    match (t, n) {
        (Some(t), Some(n)) => Ok(ZtContext::new(&t, n)?),
        _ => Err(CliError::Usage("--zt needs both T=.. and n=..".into())),
    }
}

/// `(u, v)` for the kind; `v-absorbing` fixes `u = v + 1`.
fn query_shape(args: &PredicateArgs) -> CliResult<(usize, usize)> {
    let (u, v) = match args.kind {
        PredicateKind::VAbsorbing => match args.u {
            Some(u) if u != args.v + 1 => {
                return Err(CliError::Usage("v-absorbing takes only --v (u is v + 1)".into()));
            }
            _ => (args.v + 1, args.v),
        },
        _ => (
            args.u
                .ok_or_else(|| CliError::Usage(format!("{} needs --u", value_name(args.kind))))?,
            args.v,
        ),
    };
    if args.v == 0 || u <= args.v {
        return Err(CliError::Usage(format!("absorbing queries need u > v >= 1, got u={u} v={}", args.v)));
    }
    Ok((u, v))
}

fn value_name(kind: impl ValueEnum) -> String {
    kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn kind_label(kind: PredicateKind) -> &'static str {
    match kind {
        PredicateKind::VAbsorbing => "v-absorbing",
        PredicateKind::UvAbsorbing => "uv-absorbing",
        PredicateKind::AbUvAbsorbing => "ab-uv-absorbing",
        PredicateKind::UvAbsorbingPrime => "uv-absorbing-prime",
    }
}

fn predicate_command(args: &PredicateArgs) -> CliResult<Output> {
    let (u, v) = query_shape(args)?;
    let label = kind_label(args.kind);
    if let Some(values) = &args.zt {
        let z = parse_zt(values)?;
        return predicate_zt(&z, args.kind, u, v);
    }
    let path = args.ring.as_ref().expect("clap requires --ring without --zt");
    let mut out = String::new();
    let verdict = match load(path)?.1 {
        Ring::Zt(z) => return predicate_zt(&z, args.kind, u, v),
        Ring::Finite(r) => {
            let q = match &args.ideal {
                Some(text) => parse_ideal(&r, text)?,
                None => ElementSet::singleton(r.zero()),
            };
            let _ = writeln!(out, "Q = {q}");
            finite_verdict(&r, &q, args.kind, u, v)?
        }
        Ring::Mul(t) => {
            let text = args
                .ideal
                .as_deref()
                .ok_or_else(|| CliError::Usage("a multiplication-only file needs --ideal".into()))?;
            let q = parse_subset(text, t.order())?;
            let _ = writeln!(out, "Q = {q}");
            finite_verdict(&t, &q, args.kind, u, v)?
        }
    };
    let _ = writeln!(out, "query: {label}({u},{v})");
    let _ = writeln!(out, "verdict: {}", if verdict.holds { "holds" } else { "fails" });
    if let Some(w) = &verdict.witness {
        out.push_str(&w.to_string().replace(" ⊆ Q", "").replace(" ⊄ Q", ""));
    }
    Ok(Output {
        text: out,
        success: verdict.holds,
    })
}

fn parse_subset(text: &str, order: usize) -> CliResult<ElementSet> {
    let body = text.trim().trim_start_matches(['[', '{']).trim_end_matches([']', '}']);
    let mut set = ElementSet::empty();
    for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.parse::<usize>() {
            Ok(x) if x < order => set.insert(x),
            _ => return Err(CliError::Usage(format!("`{part}` is not an element of a carrier of order {order}"))),
        }
    }
    Ok(set)
}

fn finite_verdict<S: HyperStructure + ?Sized>(
    s: &S,
    q: &ElementSet,
    kind: PredicateKind,
    u: usize,
    v: usize,
) -> CliResult<crate::absorbing::Verdict> {
    let kind = match kind {
        PredicateKind::VAbsorbing | PredicateKind::AbUvAbsorbing => Kind::AB,
        PredicateKind::UvAbsorbing => Kind::Plain,
        PredicateKind::UvAbsorbingPrime => Kind::Prime,
    };
    Ok(check(s, q, &AbsorbingQuery::new(u, v, kind)?)?)
}

fn predicate_zt(z: &ZtContext, kind: PredicateKind, u: usize, v: usize) -> CliResult<Output> {
    // Every residue class holds non-units of ℤ, so the plain, AB and
    // v-absorbing scans coincide.
    let zk = match kind {
        PredicateKind::UvAbsorbingPrime => ZtKind::Prime,
        _ => ZtKind::Plain,
    };
    eprintln!("scanning residue multisets mod {} (u = {u})", z.modulus());
    let verdict = z.check(zk, u, v)?;
    let mut out = String::new();
    let _ = writeln!(out, "Q = <{}> in Z_T, T={{{}}}", z.modulus(), list(z.t()));
    let _ = writeln!(out, "query: {}({u},{v})", kind_label(kind));
    let _ = writeln!(out, "verdict: {}", if verdict.holds { "holds" } else { "fails" });
    if let Some(w) = &verdict.witness {
        out.push_str(&w.to_string());
    }
    Ok(Output {
        text: out,
        success: verdict.holds,
    })
}

fn construct_command(args: &ConstructArgs) -> CliResult<Output> {
    let want = if args.kind == ConstructKind::Product { 2 } else { 1 };
    if args.files.len() != want {
        return Err(CliError::Usage(format!("{} takes {want} ring file(s)", value_name(args.kind))));
    }
    let base = load_finite(&args.files[0])?;
    let spec = match args.kind {
        ConstructKind::Product => {
            let other = load_finite(&args.files[1])?;
            RingSpec::from_ring(&direct_product(&base, &other)?.ring)
        }
        ConstructKind::Matrix => RingSpec::from_ring(&matrix_hyperring(&base, DEFAULT_MATRIX_BUDGET)?.ring),
        ConstructKind::Poly => RingSpec::from_mul(&monomial_extension(&base, args.degree)?, base.one()),
        ConstructKind::Quotient => {
            let text = args
                .ideal
                .as_deref()
                .ok_or_else(|| CliError::Usage("quotient needs --ideal".into()))?;
            let q = quotient(&base, &parse_ideal(&base, text)?)?;
            if let Some((a, b)) = q.representative_defect() {
                eprintln!("warning: the coset operations depend on representatives at classes {a}, {b}");
            }
            RingSpec::from_ring(&q.ring)
        }
        ConstructKind::Gamma => RingSpec::from_ring(&fundamental_ring(&base, &CClassCache::new(&base))?.ring),
        ConstructKind::Localize => {
            let text = args
                .s
                .as_deref()
                .ok_or_else(|| CliError::Usage("localize needs --s".into()))?;
            let s = parse_subset(text, base.order())?;
            let closure = if args.weak { Closure::Weak } else { Closure::Strict };
            let loc = localization(&base, &s, closure)?;
            if let Some((a, b)) = loc.representative_defect() {
                eprintln!("warning: the fraction operations depend on representatives at classes {a}, {b}");
            }
            let one = base.one().map(|e| loc.fraction(e, e));
            RingSpec::from_mul(&loc, one)
        }
    };
    let text = spec.emit();
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            done(format!("wrote {}\n", path.display()))
        }
        None => done(text),
    }
}

fn verify_command(args: &VerifyArgs) -> CliResult<Output> {
    let spec = match &args.spec {
        Some(path) => DeskSpec::load(path)?,
        None => DeskSpec::default(),
    };
    let properties = match &args.id {
        Some(id) => vec![harness::find(id)?],
        None => harness::registry().to_vec(),
    };
    eprintln!("building desk (seed {})", args.seed);
    let desk = Desk::build(&spec, args.seed)?;
    eprintln!("running {} properties", properties.len());
    let verdicts = if args.all {
        harness::run_all(&desk)
    } else {
        properties.iter().map(|p| harness::run(p, &desk)).collect()
    };
    let report = harness::report(&desk, &verdicts);
    let success = verdicts
        .iter()
        .all(|v| !matches!(v.status(), Status::Fail | Status::Incomplete));
    let text = match &args.report {
        Some(path) => {
            std::fs::write(path, &report).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            report.lines().last().map(|l| format!("{l}\n")).unwrap_or_default()
        }
        None => report,
    };
    Ok(Output { text, success })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CliResult<Output> {
        let cli = Cli::try_parse_from(std::iter::once("hyperideal").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        execute(&cli)
    }

    #[test]
    fn query_shape_is_checked_before_work() {
        assert!(matches!(
            run(&["predicate", "uv-absorbing", "--zt", "T=2,4", "n=150", "--u", "2", "--v", "3"]),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run(&["predicate", "uv-absorbing", "--zt", "T=2,4", "n=150", "--v", "3"]),
            Err(CliError::Usage(_))
        ));
        assert!(run(&["predicate", "uv-absorbing", "--u", "3", "--v", "2"]).is_err());
    }

    #[test]
    fn zt_arguments() {
        assert!(parse_zt(&["T=2,4".into(), "n=15".into()]).is_ok());
        assert!(parse_zt(&["n=15".into(), "T=2,4".into()]).is_ok());
        assert!(parse_zt(&["T=2;4".into(), "n=15".into()]).is_err());
        assert!(parse_zt(&["T=2,4".into(), "m=15".into()]).is_err());
    }

    #[test]
    fn small_zt_predicate() {
        let out = run(&["predicate", "v-absorbing", "--zt", "T=2,4", "n=15", "--v", "2"]).unwrap();
        assert!(out.text.contains("verdict:"));
    }

    #[test]
    fn subsets() {
        assert_eq!(parse_subset("{1,5}", 6).unwrap().to_vec(), vec![1, 5]);
        assert!(parse_subset("1,6", 6).is_err());
    }
}

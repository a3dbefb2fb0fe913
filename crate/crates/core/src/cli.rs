//! The `knotcomm` command line.
//!
//! Exit codes: 0 no obstruction, 1 obstruction certified, 2 unknown knot,
//! 3 insufficient signature data, 4 inconclusive items, 5 b1 violation,
//! 6 any other error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rug::Rational;

use crate::catalog::Catalog;
use crate::covers::{admissible, cover_summary, growth_sequence_with_cap, DEFAULT_GROWTH_CAP};
use crate::error::{Error, Result};
use crate::knot::{KnotRecord, Turn};
use crate::numerics::DEFAULT_RADIUS;
use crate::obstruct::{
    cover_pair_test, multiset_power_test, orientation_for_ratio, ratio_scan, static_compare, Epsilon,
    ObstructionReport, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OBSTRUCTION: i32 = 1;
pub const EXIT_UNKNOWN_KNOT: i32 = 2;
pub const EXIT_INSUFFICIENT_DATA: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_B1_VIOLATION: i32 = 5;
pub const EXIT_OTHER: i32 = 6;

#[derive(Parser, Debug)]
#[command(name = "knotcomm", version, about = "Certified knot invariants and cyclic commensurability obstructions")]
pub struct Cli {
    /// Catalog file merged over the built-in knots.
    #[arg(long, global = true, env = "KNOTCOMM_CATALOG")]
    pub catalog: Option<PathBuf>,

    /// Certified radius for τ, ρ and jump angles.
    #[arg(long, global = true, default_value_t = DEFAULT_RADIUS)]
    pub radius: f64,

    /// Largest cover degree searched by scans.
    #[arg(long, global = true, default_value_t = 480)]
    pub nmax: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Δ, τ, ρ, signature and unit-circle zeros of a knot.
    Invariants { knot: String },
    /// Obstruction tests for a pair of knots.
    Compare {
        knot1: String,
        knot2: String,
        #[arg(long, requires = "n2")]
        n1: Option<u64>,
        #[arg(long, requires = "n1")]
        n2: Option<u64>,
        /// +1, -1 or both.
        #[arg(long, default_value = "both", allow_hyphen_values = true)]
        epsilon: Epsilon,
        /// Also print per-k orientation lines and other informational entries.
        #[arg(long)]
        verbose: bool,
    },
    /// CSV of the signature function on [0, 1/2] in turns.
    Signature {
        knot: String,
        #[arg(long, default_value_t = 64)]
        samples: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// b1 and torsion order of the n-fold cyclic covers.
    Covers {
        knot: String,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, default_value_t = 12)]
        to: u64,
    },
    /// CSV of (1/k) ln |Tor H_1| for k = 1..=kmax.
    Growth {
        knot: String,
        #[arg(long, default_value_t = 100)]
        kmax: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// List or export the catalog.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Export {
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Parses `args` and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_OTHER } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::UnknownKnot(_) => EXIT_UNKNOWN_KNOT,
        Error::InsufficientData(_) => EXIT_INSUFFICIENT_DATA,
        Error::B1Violation { .. } => EXIT_B1_VIOLATION,
        _ => EXIT_OTHER,
    }
}

pub fn exit_code_for_verdict(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_OBSTRUCTION,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    if !(cli.radius > 0.0 && cli.radius < 1.0) {
        return Err(Error::InvalidArgument(format!("--radius must lie in (0, 1), got {}", cli.radius)));
    }
    let mut catalog = Catalog::builtin_with(cli.catalog.as_deref())?;
    if cli.radius != DEFAULT_RADIUS {
        catalog = catalog.with_radius(cli.radius)?;
    }
    match &cli.command {
        Command::Invariants { knot } => invariants(&catalog.get(knot)?, out),
        Command::Compare { knot1, knot2, n1, n2, epsilon, verbose } => {
            let (k1, k2) = (catalog.get(knot1)?, catalog.get(knot2)?);
            match (n1, n2) {
                (Some(n1), Some(n2)) => compare_covers(&k1, *n1, &k2, *n2, *epsilon, *verbose, out),
                _ => compare_scan(&k1, &k2, cli.nmax, *verbose, out),
            }
        }
        Command::Signature { knot, samples, output } => {
            let csv = signature_csv(&catalog.get(knot)?, *samples)?;
            emit(&csv, output.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Covers { knot, from, to } => covers(&catalog.get(knot)?, *from, *to, out),
        Command::Growth { knot, kmax, output } => {
            let csv = growth_csv(&catalog.get(knot)?, *kmax)?;
            emit(&csv, output.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Catalog { action } => match action {
            None | Some(CatalogAction::List) => {
                for k in catalog.knots() {
                    writeln!(out, "{:<12} {}", k.name(), k.comment())?;
                }
                Ok(EXIT_OK)
            }
            Some(CatalogAction::Export { output }) => {
                emit(&catalog.to_json_string(), output.as_ref(), out)?;
                Ok(EXIT_OK)
            }
        },
    }
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Fixed decimal rendering with 15 significant digits.
pub fn format_sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (14 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.starts_with("-0") && s.trim_start_matches(['-', '0', '.']).is_empty() {
        s[1..].to_string()
    } else {
        s
    }
}

fn invariants(k: &KnotRecord, out: &mut dyn Write) -> Result<i32> {
    let p = k.alexander();
    writeln!(out, "knot: {}", k.name())?;
    if !k.comment().is_empty() {
        writeln!(out, "comment: {}", k.comment())?;
    }
    writeln!(out, "alexander: {p}")?;
    writeln!(out, "degree: {}", p.deg())?;
    writeln!(out, "monic: {}", p.lead().is_some_and(|c| c.clone().abs() == 1))?;
    writeln!(out, "admissible: {}", admissible(k))?;
    if let Some(g) = k.genus() {
        writeln!(out, "genus: {g}")?;
    }
    if let Some(f) = k.fibered() {
        writeln!(out, "fibered: {f}")?;
    }
    let tau = k.tau()?;
    writeln!(out, "mahler measure: {}", tau.exp())?;
    writeln!(out, "tau: {tau}")?;

    let mut missing = None;
    match k.signature() {
        Ok(s) => writeln!(out, "signature: {s}")?,
        Err(Error::InsufficientData(m)) => {
            writeln!(out, "signature: undetermined")?;
            missing = Some(m);
        }
        Err(e) => return Err(e),
    }
    match k.rho() {
        Ok(r) => writeln!(out, "rho: {r}")?,
        Err(Error::InsufficientData(m)) => {
            writeln!(out, "rho: undetermined ({m})")?;
            missing.get_or_insert(m);
        }
        Err(e) => return Err(e),
    }
    let profile = k.profile();
    match &profile {
        Ok(prof) if prof.jumps().is_empty() => writeln!(out, "unit-circle zeros with turn in (0, 1/2]: none")?,
        Ok(prof) => {
            writeln!(out, "unit-circle zeros with turn in (0, 1/2]:")?;
            for j in prof.jumps() {
                let after = j.value.map_or("?".to_string(), |v| v.to_string());
                writeln!(
                    out,
                    "  turn {} (angle {} rad), multiplicity {}, signature after {after}",
                    j.turn(),
                    j.root.angle,
                    j.root.multiplicity
                )?;
            }
        }
        Err(Error::InsufficientData(m)) => {
            missing.get_or_insert(m.clone());
        }
        Err(e) => return Err(e.clone()),
    }
    Ok(if missing.is_some() { EXIT_INSUFFICIENT_DATA } else { EXIT_OK })
}

fn print_report(title: &str, r: &ObstructionReport, verbose: bool, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "{title}: {}", r.verdict())?;
    for c in &r.caveats {
        writeln!(out, "  caveat: {c}")?;
    }
    for e in r.entries.iter().filter(|e| verbose || e.decisive || !e.id.contains(" k=")) {
        let tag = if e.decisive { "" } else { " (informational)" };
        write!(out, "  {}: {}{tag}", e.id, e.verdict)?;
        if let Some(n) = &e.note {
            write!(out, "  {n}")?;
        }
        writeln!(out)?;
        for q in &e.quantities {
            writeln!(out, "    {} = {}", q.label, q.value)?;
        }
        for w in &e.witnesses {
            writeln!(out, "    {w}")?;
        }
    }
    Ok(())
}

fn orientation_summary(r: &ObstructionReport) -> Option<&'static str> {
    let pass = |id: &str| r.entry(id).is_some_and(|e| e.verdict == Verdict::Pass);
    match (pass("rho[+1]"), pass("rho[-1]")) {
        (true, true) => Some("either orientation"),
        (true, false) => Some("orientation-preserving"),
        (false, true) => Some("orientation-reversing"),
        (false, false) => None,
    }
}

fn compare_covers(
    k1: &KnotRecord,
    n1: u64,
    k2: &KnotRecord,
    n2: u64,
    epsilon: Epsilon,
    verbose: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let pair = cover_pair_test(k1, n1, k2, n2, epsilon)?;
    let multiset = multiset_power_test(k1, n1, k2, n2);
    let title = format!("cover pair test {} ({n1}-fold) vs {} ({n2}-fold), epsilon {epsilon}", k1.name(), k2.name());
    print_report(&title, &pair, verbose, out)?;
    print_report("exact root-power test", &multiset, verbose, out)?;
    let verdict = pair.verdict().worst(multiset.verdict());
    if verdict != Verdict::Fail {
        if let Some(o) = orientation_summary(&pair) {
            writeln!(out, "consistent with an {o} diffeomorphism of the covers")?;
        }
    }
    writeln!(out, "overall: {verdict}")?;
    Ok(exit_code_for_verdict(verdict))
}

fn compare_scan(k1: &KnotRecord, k2: &KnotRecord, n_max: u64, verbose: bool, out: &mut dyn Write) -> Result<i32> {
    let stat = static_compare(k1, k2);
    print_report(&format!("static comparison {} vs {}", k1.name(), k2.name()), &stat, verbose, out)?;
    let mut verdict = stat.verdict();

    let scan = ratio_scan(k1, k2, n_max)?;
    writeln!(out, "ratio scan up to n_max = {n_max}: {} surviving", scan.ratios.len())?;
    for c in &scan.caveats {
        writeln!(out, "  caveat: {c}")?;
    }
    for r in &scan.ratios {
        let check = match &r.validation {
            Ok(rep) => rep.verdict().to_string(),
            Err(e) => format!("not evaluated ({e})"),
        };
        writeln!(
            out,
            "  {}:{}  first exact pass at covers {} and {}; cover pair test there: {check}",
            r.a,
            r.b,
            r.k * r.a,
            r.k * r.b
        )?;
        writeln!(out, "    common power transform = {}", r.witness.display_with("s"))?;
    }
    match scan.ratios.as_slice() {
        [] => {
            writeln!(out, "  no pair of covers up to n_max passes the exact root-power test")?;
            verdict = verdict.worst(Verdict::Fail);
        }
        [r] => {
            let orient = orientation_for_ratio(k1, k2, r.a, r.b, n_max)?;
            print_report("orientation analysis", &orient, verbose, out)?;
            verdict = verdict.worst(orient.verdict());
        }
        _ => {
            writeln!(out, "  several ratios survive; orientation analysis skipped")?;
            verdict = verdict.worst(Verdict::Inconclusive);
        }
    }
    writeln!(out, "overall: {verdict}")?;
    Ok(exit_code_for_verdict(verdict))
}

/// Rows `turn,sigma` at `samples` uniform turns in `[0, 1/2]` and at every
/// jump; singular points get `jump` in place of a value.
pub fn signature_csv(k: &KnotRecord, samples: u64) -> Result<String> {
    if samples < 2 {
        return Err(Error::InvalidArgument("at least 2 samples are required".into()));
    }
    let mut rows: Vec<(f64, String)> = Vec::new();
    let mut singular_samples = Vec::new();
    for i in 0..samples {
        let turn = Rational::from((i, 2 * (samples - 1)));
        let t = turn.to_f64();
        match k.signature_at(&Turn::Exact(turn.clone())) {
            Ok(v) => rows.push((t, v.to_string())),
            Err(Error::SingularAtZ { .. }) => {
                rows.push((t, "jump".into()));
                singular_samples.push(turn);
            }
            Err(e) => return Err(e),
        }
    }
    for j in k.jump_roots()? {
        let ball = j.turn();
        let seen = singular_samples.iter().any(|r| ball.contains(&crate::numerics::CertifiedReal::from_rational(r, 128)));
        if !seen {
            rows.push((ball.mid_f64(), "jump".into()));
        }
    }
    rows.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut csv = String::from("turn,sigma\n");
    for (t, v) in rows {
        csv.push_str(&format!("{},{v}\n", format_sig15(t)));
    }
    Ok(csv)
}

pub fn growth_csv(k: &KnotRecord, k_max: u64) -> Result<String> {
    let seq = growth_sequence_with_cap(k, k_max, DEFAULT_GROWTH_CAP)?;
    let mut csv = String::from("k,value\n");
    for p in seq {
        csv.push_str(&format!("{},{}\n", p.k, format_sig15(p.value.mid_f64())));
    }
    Ok(csv)
}

fn covers(k: &KnotRecord, from: u64, to: u64, out: &mut dyn Write) -> Result<i32> {
    if from == 0 || from > to {
        return Err(Error::InvalidArgument(format!("invalid cover range {from}..={to}")));
    }
    writeln!(out, "n,b1,torsion_order,infinite")?;
    for n in from..=to {
        let s = cover_summary(k, n);
        writeln!(out, "{},{},{},{}", s.n, s.b1, s.torsion_order, s.torsion_order == 0)?;
    }
    Ok(EXIT_OK)
}

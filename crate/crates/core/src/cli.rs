//! The `lensdual` command line.
//!
//! Exit codes: 0 when everything checked out, 1 when a sweep or
//! classification found a violation, 2 on usage or parameter errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::braid;
use crate::families::{self, BergeDualRecord, Family, TypeIIIVParams};
use crate::front::{self, FrontData};
use crate::modmath::{self, Residue};
use crate::verify::output::{summary_block, Format, ReportWriter};
use crate::verify::{self, Classification, ParamRanges, Registry, Span, Summary, SweepPlan};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lensdual",
    version,
    about = "Self-linking congruence checks for duals of Berge knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one record and print it as a record line.
    Family(FamilyArgs),
    /// Classify every record of one or more families over parameter ranges.
    Sweep(SweepArgs),
    /// Toroidal fronts and their classical invariants.
    #[command(subcommand)]
    Front(FrontCmd),
    /// Berge braids and Euler characteristics of positive closures.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Residues and the quadratic forms x² + xy + y², x² + xy − y².
    #[command(subcommand)]
    Qf(QfCmd),
    /// Bound on the fractional Dehn twist coefficient.
    Fdtc {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
    },
}

fn parse_sign(s: &str) -> std::result::Result<i64, String> {
    match s {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// One of I, II, III, IV, V, VII, VIII, IX, X.
    family: Family,
    #[arg(long, allow_negative_numbers = true)]
    i: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    sign: Option<i64>,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    delta: Option<i64>,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    eps: Option<i64>,
    #[arg(long = "A", allow_negative_numbers = true)]
    big_a: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    t: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    s: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    j: Option<i64>,
    /// Print the congruence report instead of the bare record.
    #[arg(long)]
    classify: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Comma-separated families, swept in the given order.
    #[arg(long, value_delimiter = ',', required = true)]
    family: Vec<Family>,
    #[arg(long, allow_hyphen_values = true)]
    i: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<Span>,
    #[arg(long = "A", allow_hyphen_values = true)]
    big_a: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<Span>,
    /// jsonl, csv or lines.
    #[arg(long, default_value = "jsonl")]
    format: Format,
    /// Write reports here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Registry of explained holds to use instead of the built-in one.
    #[arg(long)]
    registry: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum FrontCmd {
    /// Grid number one front of the dual of T(i, k) in L(ik+1, −i²).
    TorusDual {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// tb, rot and sl from front data.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        w: i64,
        #[arg(long = "cu", allow_negative_numbers = true)]
        c_u: i64,
        #[arg(long = "cd", allow_negative_numbers = true)]
        c_d: i64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
    },
    /// Grid number one front of the class a in L(p, q).
    Canonical {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
    },
}

#[derive(Debug, Args)]
struct BraidParams {
    #[arg(long = "A", allow_negative_numbers = true)]
    big_a: i64,
    #[arg(long = "B", allow_negative_numbers = true)]
    big_b: i64,
    #[arg(long = "b", allow_negative_numbers = true)]
    b: i64,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
    delta: i64,
    #[arg(long = "a", allow_negative_numbers = true)]
    a_param: i64,
}

#[derive(Debug, Subcommand)]
enum BraidCmd {
    /// −χ of the closure of W(B)^b · W(A+1−a)^δ.
    Chi(BraidParams),
    /// The word and its positive normal form.
    Word(BraidParams),
}

#[derive(Debug, Subcommand)]
enum QfCmd {
    /// Primitive representations p = r² + rs + s² and roots of x² + x + 1.
    Eisenstein {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
    },
    /// Move (a, b) to c > d > 0 with c² + cd − d² = |b² − ab − a²|.
    Gamma {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
    },
    /// a⁻¹ mod p.
    Inverse {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
    },
    /// −1 − a + a⁻¹ mod p.
    SlClass {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
    },
}

/// Runs the command line on `args` (including the program name) with the
/// process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn wr(e: std::io::Error) -> Error {
    Error::param(format!("write failed: {e}"))
}

fn need(v: Option<i64>, name: &str, family: Family) -> Result<i64> {
    v.ok_or_else(|| Error::param(format!("family {family} needs --{name}")))
}

fn build_record(a: &FamilyArgs) -> Result<BergeDualRecord> {
    let f = a.family;
    match f {
        Family::I => families::type_i(need(a.i, "i", f)?, need(a.k, "k", f)?, a.sign.unwrap_or(1)),
        Family::II => {
            families::type_ii(need(a.i, "i", f)?, need(a.k, "k", f)?, a.sign.unwrap_or(1))
        }
        Family::III | Family::IV | Family::V => {
            let pr = TypeIIIVParams::new(
                f,
                need(a.delta, "delta", f)?,
                need(a.eps, "eps", f)?,
                need(a.big_a, "A", f)?,
                need(a.k, "k", f)?,
                need(a.t, "t", f)?,
            )?;
            families::type_iii_v(&pr)
        }
        Family::VII => families::type_vii(need(a.r, "r", f)?, need(a.s, "s", f)?),
        Family::VIII => families::type_viii(need(a.r, "r", f)?, need(a.s, "s", f)?),
        Family::IX | Family::X => families::type_ix_x(f, need(a.j, "j", f)?),
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Family(args) => {
            let rec = build_record(&args)?;
            if !args.classify {
                writeln!(out, "{rec}").map_err(wr)?;
                return Ok(EXIT_OK);
            }
            let report = verify::classify(&rec)?;
            writeln!(out, "{}", verify::output::report_line(&report)).map_err(wr)?;
            Ok(if report.classification == Classification::Violation {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            })
        }
        Command::Sweep(args) => cmd_sweep(args, out, err),
        Command::Front(f) => cmd_front(f, out),
        Command::Braid(b) => cmd_braid(b, out),
        Command::Qf(q) => cmd_qf(q, out),
        Command::Fdtc { p, g } => {
            let (bound, strict) = verify::fdtc_bound(p, g)?;
            writeln!(out, "bound = {bound}, strict = {strict}").map_err(wr)?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_sweep(args: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let ranges = ParamRanges {
        i: args.i,
        k: args.k,
        sign: args.sign,
        delta: args.delta,
        eps: args.eps,
        big_a: args.big_a,
        t: args.t,
        r: args.r,
        s: args.s,
        j: args.j,
    };
    if args.jobs == 0 {
        return Err(Error::param("--jobs must be at least 1"));
    }
    let custom = match &args.registry {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::param(format!("cannot read {}: {e}", path.display())))?;
            Some(Registry::parse(&text)?)
        }
        None => None,
    };
    let registry = custom.as_ref().unwrap_or_else(|| Registry::builtin());
    let plans: Vec<SweepPlan> = args
        .family
        .iter()
        .map(|&f| SweepPlan::new(f, &ranges))
        .collect();
    let sink: Box<dyn Write + '_> = match &args.output {
        Some(path) => Box::new(
            File::create(path)
                .map_err(|e| Error::param(format!("cannot create {}: {e}", path.display())))?,
        ),
        None => Box::new(out),
    };
    let mut writer = ReportWriter::new(args.format, BufWriter::new(sink))?;
    let mut summary = Summary::default();
    for plan in &plans {
        let s = verify::sweep_with(plan, args.jobs, registry, |r| writer.write(r))?;
        summary.merge(&s);
    }
    if !writer.finish(&summary)? {
        write!(err, "{}", summary_block(&summary)).map_err(wr)?;
    }
    Ok(if summary.violations > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

fn print_front_data(out: &mut dyn Write, fd: &FrontData) -> Result<()> {
    let sl = front::sl_push(fd);
    writeln!(
        out,
        "w = {}, c_u = {}, c_d = {}, a = {}, b = {}, p = {}",
        fd.w, fd.c_u, fd.c_d, fd.a, fd.b, fd.p
    )
    .map_err(wr)?;
    writeln!(
        out,
        "tb = {}, rot = {}, sl = {}, p*sl = {}, sl- = {}",
        front::tb(fd),
        front::rot(fd),
        sl,
        sl * fd.p as i128,
        front::sl_push_negative(fd)
    )
    .map_err(wr)
}

fn cmd_front(cmd: FrontCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        FrontCmd::TorusDual { i, k } => {
            let (_, fd) = front::torus_dual_front(i, k)?;
            let sl = front::sl_push(&fd);
            writeln!(
                out,
                "sl = {}, p*sl = {}, w = {}",
                sl,
                sl * fd.p as i128,
                fd.w
            )
            .map_err(wr)?;
        }
        FrontCmd::Eval {
            w,
            c_u,
            c_d,
            a,
            b,
            p,
        } => {
            let fd = FrontData::new(w, c_u, c_d, a, b, p)?;
            print_front_data(out, &fd)?;
        }
        FrontCmd::Canonical { p, q, a } => {
            let (_, fd) = front::canonical_front(p, q, Residue::new(a, p)?)?;
            print_front_data(out, &fd)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_braid(cmd: BraidCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        BraidCmd::Chi(bp) => {
            let n = braid::normalize_berge(bp.big_a, bp.big_b, bp.b, bp.delta, bp.a_param)?;
            let chi = braid::chi_positive_closure(&n.word()?)?;
            writeln!(out, "-chi = {}", -chi).map_err(wr)?;
        }
        BraidCmd::Word(bp) => {
            let w = braid::berge_braid(bp.big_a, bp.big_b, bp.b, bp.delta, bp.a_param)?;
            let n = braid::normalize_berge(bp.big_a, bp.big_b, bp.b, bp.delta, bp.a_param)?;
            writeln!(out, "word: {w}").map_err(wr)?;
            writeln!(
                out,
                "positive: W({})^{} W({}) on {} strands, mirrored = {}, rewrites = {}",
                n.n1, n.m, n.n2, n.n1, n.mirrored, n.rewrites
            )
            .map_err(wr)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_qf(cmd: QfCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        QfCmd::Eisenstein { p } => {
            if p < 2 {
                return Err(Error::InvalidModulus(p));
            }
            let reps: Vec<String> = modmath::primitive_reps_eisenstein(p)
                .iter()
                .map(|r| format!("({},{})", r.r, r.s))
                .collect();
            let roots: Vec<String> = modmath::roots_x2_x_1(p)
                .iter()
                .map(|r| r.value().to_string())
                .collect();
            let show = |v: Vec<String>| {
                if v.is_empty() {
                    "none".to_owned()
                } else {
                    v.join(" ")
                }
            };
            writeln!(out, "{}; roots {}", show(reps), show(roots)).map_err(wr)?;
        }
        QfCmd::Gamma { a, b } => {
            let g = modmath::gamma_normalize(a, b)?;
            writeln!(out, "({},{}) after {} steps", g.c, g.d, g.trace.len()).map_err(wr)?;
        }
        QfCmd::Inverse { a, p } => {
            writeln!(out, "{}", modmath::mod_inverse(a, p)?).map_err(wr)?;
        }
        QfCmd::SlClass { a, p } => {
            writeln!(out, "{}", modmath::sl_class(Residue::new(a, p)?)?).map_err(wr)?;
        }
    }
    Ok(EXIT_OK)
}

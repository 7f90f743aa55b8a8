//! `ordgap`: parse, compare, translate and enumerate terms, and run the property suites.
//!
//! Exit status is 0 on success, 1 when a suite finds counterexamples, and 2 on any
//! parse or validation error.

use std::cmp::Ordering;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ordgap_core::cnf::cnf_compare;
use ordgap_core::gapseq::{gap_leq, h_split, seq_of_term};
use ordgap_core::harness::{self, Bounds, EnumSpec, System, SUITES};
use ordgap_core::maps::{chi, chi_std, psi_map, psi_prime, tau};
use ordgap_core::pi::pi_compare;
use ordgap_core::theta1::{theta_compare, theta_validate};
use ordgap_core::theta2::{btheta_compare, embed_seq, o_value};
use ordgap_core::veblen::veblen_compare;
use ordgap_core::{
    BinSystem, BinThetaTerm, CnfOrdinal, Error, GapMode, GapSequence, PiTerm, ThetaSystem,
    ThetaTerm, VeblenTerm,
};

#[derive(Parser)]
#[command(name = "ordgap", version, about = "Ordinal notation systems and gap orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a term, or where it fails to parse.
    Parse {
        #[arg(long)]
        system: SystemArg,
        #[command(flatten)]
        params: Params,
        term: String,
    },
    /// Print `<`, `=` or `>`. Sequences may also be `incomparable`.
    Compare {
        #[arg(long)]
        system: SystemArg,
        #[command(flatten)]
        params: Params,
        /// Embedding mode for sequences.
        #[arg(long, default_value = "strong")]
        mode: ModeArg,
        left: String,
        right: String,
    },
    /// Print the image of a term under a map.
    Translate {
        #[arg(long)]
        map: MapArg,
        #[command(flatten)]
        params: Params,
        term: String,
    },
    /// Print every term within the size bound, one per line.
    Enumerate {
        #[arg(long)]
        system: SystemArg,
        #[command(flatten)]
        params: Params,
        /// lh for unary terms, length for sequences, node count otherwise.
        #[arg(long = "max-size", visible_aliases = ["max-lh", "max-len"])]
        max_size: usize,
    },
    /// Print whether the first sequence gap-embeds into the second.
    Embed {
        #[arg(long, default_value = "strong")]
        mode: ModeArg,
        /// Alphabet size; defaults to one more than the largest label.
        #[arg(long)]
        n: Option<usize>,
        left: String,
        right: String,
    },
    /// Run property suites; one JSON record per suite on stdout, a summary on stderr.
    Check {
        /// Suite to run; repeatable. All suites when omitted.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Override each suite's index bound.
        #[arg(long)]
        n: Option<usize>,
        /// Override each suite's size bound.
        #[arg(long = "max-size", visible_aliases = ["max-lh", "max-len"])]
        max_size: Option<usize>,
        /// Record zero duration so reports are byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args, Clone, Copy)]
struct Params {
    /// Index bound (alphabet size for sequences, subscript bound for veblen, level for
    /// o-value).
    #[arg(long)]
    n: Option<usize>,
    /// Level bound `S ≤ m` for unary terms, first-label bound for sequences, `m` for tau.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    variant: Option<Variant>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum SystemArg {
    Cnf,
    Veblen,
    Pi,
    Theta,
    Gapseq,
    Btheta,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Variant {
    /// `T_n`, `S_n`.
    Plain,
    /// `T'_n`.
    Prime,
    /// `S̄_n`.
    Bar,
    /// `OT_n`.
    Ot,
    /// `OT_n[0]`.
    Ot0,
}

#[derive(ValueEnum, Clone, Copy)]
enum ModeArg {
    Weak,
    Strong,
}

impl From<ModeArg> for GapMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Weak => GapMode::Weak,
            ModeArg::Strong => GapMode::Strong,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum MapArg {
    Chi,
    ChiStd,
    Psi,
    PsiPrime,
    Tau,
    E,
    H,
    FEmbed,
    OValue,
}

/// An error together with the text it refers to, for the caret line.
struct Failure {
    error: Error,
    input: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, input: None }
    }
}

type Outcome<T> = Result<T, Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Error::Precondition(msg.into()).into()
}

fn with_input<T>(text: &str, r: ordgap_core::Result<T>) -> Outcome<T> {
    r.map_err(|error| Failure {
        error,
        input: Some(text.to_string()),
    })
}

/// A parsed term of any system.
enum Parsed {
    Cnf(CnfOrdinal),
    Veblen(VeblenTerm<usize>),
    Pi(PiTerm),
    Theta(ThetaTerm),
    Seq(GapSequence),
    Bin(BinThetaTerm),
}

impl std::fmt::Display for Parsed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parsed::Cnf(t) => t.fmt(f),
            Parsed::Veblen(t) => t.fmt(f),
            Parsed::Pi(t) => t.fmt(f),
            Parsed::Theta(t) => t.fmt(f),
            Parsed::Seq(t) => t.fmt(f),
            Parsed::Bin(t) => t.fmt(f),
        }
    }
}

fn theta_system(p: Params) -> Outcome<ThetaSystem> {
    let restricted = match p.variant {
        None | Some(Variant::Plain) => false,
        Some(Variant::Prime) => true,
        Some(_) => return Err(invalid("theta takes --variant plain or prime")),
    };
    if restricted && p.n.is_none() {
        return Err(invalid("--variant prime needs --n"));
    }
    Ok(ThetaSystem {
        bound: p.n,
        max_level: p.m,
        restricted,
    })
}

fn bin_system(p: Params) -> Outcome<Option<BinSystem>> {
    let Some(n) = p.n else {
        return match p.variant {
            None => Ok(None),
            Some(_) => Err(invalid("--variant needs --n")),
        };
    };
    Ok(Some(match p.variant {
        None | Some(Variant::Plain) => BinSystem::T(n),
        Some(Variant::Ot) => BinSystem::Ot(n),
        Some(Variant::Ot0) => BinSystem::Ot0(n),
        Some(_) => return Err(invalid("btheta takes --variant plain, ot or ot0")),
    }))
}

fn no_variant(p: Params, system: &str) -> Outcome<()> {
    match p.variant {
        None => Ok(()),
        Some(_) => Err(invalid(format!("{system} takes no --variant"))),
    }
}

fn parse_theta(text: &str, p: Params) -> Outcome<ThetaTerm> {
    let sys = theta_system(p)?;
    let a: ThetaTerm = with_input(text, text.parse())?;
    if !theta_validate(a.indices(), &sys) {
        return Err(Error::NotMember {
            system: sys.to_string(),
            term: a.to_string(),
        }
        .into());
    }
    Ok(a)
}

/// Parses sequences over a shared alphabet, inferring its size when `--n` is absent.
fn parse_seqs(texts: &[&str], p: Params) -> Outcome<Vec<GapSequence>> {
    let raw = texts
        .iter()
        .map(|t| with_input(t, GapSequence::parse(t, p.n.unwrap_or(usize::MAX))))
        .collect::<Outcome<Vec<_>>>()?;
    let n = p.n.unwrap_or_else(|| {
        raw.iter()
            .flat_map(|s| s.labels().iter().map(|l| l + 1))
            .max()
            .unwrap_or(1)
    });
    let seqs = raw
        .into_iter()
        .map(|s| GapSequence::new(s.labels().to_vec(), n))
        .collect::<ordgap_core::Result<Vec<_>>>()?;
    for s in &seqs {
        let bad = match p.variant {
            None | Some(Variant::Plain) => false,
            Some(Variant::Bar) => !s.is_sbar(),
            Some(_) => return Err(invalid("gapseq takes --variant plain or bar")),
        } || p.m.is_some_and(|i| !s.starts_at_most(i));
        if bad {
            return Err(Error::NotMember {
                system: format!("the requested family of sequences over {n} labels"),
                term: s.to_string(),
            }
            .into());
        }
    }
    Ok(seqs)
}

fn parse_term(system: SystemArg, text: &str, p: Params) -> Outcome<Parsed> {
    Ok(match system {
        SystemArg::Cnf => {
            no_variant(p, "cnf")?;
            Parsed::Cnf(with_input(text, text.parse())?)
        }
        SystemArg::Veblen => {
            no_variant(p, "veblen")?;
            let a: VeblenTerm<usize> = with_input(text, text.parse())?;
            if let Some(n) = p.n {
                if a.subscripts().iter().any(|&s| s >= n) {
                    return Err(invalid(format!("{a} has a subscript not below {n}")));
                }
            }
            Parsed::Veblen(a)
        }
        SystemArg::Pi => {
            no_variant(p, "pi")?;
            let a: PiTerm = with_input(text, text.parse())?;
            if let Some(n) = p.n {
                if !a.fits(n) {
                    return Err(Error::NotMember {
                        system: format!("pi({n})"),
                        term: a.to_string(),
                    }
                    .into());
                }
            }
            Parsed::Pi(a)
        }
        SystemArg::Theta => Parsed::Theta(parse_theta(text, p)?),
        SystemArg::Gapseq => Parsed::Seq(parse_seqs(&[text], p)?.remove(0)),
        SystemArg::Btheta => {
            let a: BinThetaTerm = with_input(text, text.parse())?;
            if let Some(sys) = bin_system(p)? {
                if !a.is_member(sys) {
                    return Err(Error::NotMember {
                        system: sys.to_string(),
                        term: a.to_string(),
                    }
                    .into());
                }
            }
            Parsed::Bin(a)
        }
    })
}

fn symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn compare(system: SystemArg, p: Params, mode: GapMode, l: &str, r: &str) -> Outcome<String> {
    if system == SystemArg::Gapseq {
        let s = parse_seqs(&[l, r], p)?;
        let (le, ge) = (gap_leq(&s[0], &s[1], mode), gap_leq(&s[1], &s[0], mode));
        return Ok(match (le, ge) {
            (true, true) => "=",
            (true, false) => "<",
            (false, true) => ">",
            (false, false) => "incomparable",
        }
        .to_string());
    }
    let o = match (parse_term(system, l, p)?, parse_term(system, r, p)?) {
        (Parsed::Cnf(a), Parsed::Cnf(b)) => cnf_compare(&a, &b),
        (Parsed::Veblen(a), Parsed::Veblen(b)) => veblen_compare(&a, &b, &mut |x, y| x.cmp(y)),
        (Parsed::Pi(a), Parsed::Pi(b)) => pi_compare(&a, &b),
        (Parsed::Theta(a), Parsed::Theta(b)) => theta_compare(&a, &b),
        (Parsed::Bin(a), Parsed::Bin(b)) => btheta_compare(&a, &b),
        _ => return Err(Error::Internal("mismatched systems".into()).into()),
    };
    Ok(symbol(o).to_string())
}

/// One more than the largest index, and at least `min`.
fn inferred_n(a: &ThetaTerm, min: usize) -> usize {
    a.indices().iter().map(|i| i + 1).max().unwrap_or(0).max(min)
}

fn translate(map: MapArg, p: Params, text: &str) -> Outcome<String> {
    let theta = |p: Params| parse_theta(text, p);
    Ok(match map {
        MapArg::Chi => {
            let a: VeblenTerm<usize> = with_input(text, text.parse())?;
            chi(&a).to_string()
        }
        MapArg::ChiStd => {
            let a: CnfOrdinal = with_input(text, text.parse())?;
            chi_std(&a)?.to_string()
        }
        MapArg::Psi => {
            let a: VeblenTerm<PiTerm> = with_input(text, text.parse())?;
            psi_map(&a)?.to_string()
        }
        MapArg::PsiPrime => {
            let a = theta(Params { variant: None, ..p })?;
            psi_prime(&a, p.n.unwrap_or_else(|| inferred_n(&a, 1)))?.to_string()
        }
        MapArg::Tau => {
            let n = p.n.ok_or_else(|| invalid("tau needs --n"))?;
            let a = theta(Params {
                n: None,
                m: None,
                variant: None,
            })?;
            tau(p.m.unwrap_or(0), &a, n)?.to_string()
        }
        MapArg::E => {
            let a = theta(Params { variant: None, ..p })?;
            seq_of_term(&a, p.n.unwrap_or_else(|| inferred_n(&a, 1)))?.to_string()
        }
        MapArg::H => {
            let mut s = parse_seqs(&[text], Params { m: None, ..p })?.remove(0);
            if s.bound() < 2 {
                s = GapSequence::new(s.labels().to_vec(), 2)?;
            }
            let (head, parts) = h_split(&s)?;
            let parts: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
            format!("({head}, [{}])", parts.join(", "))
        }
        MapArg::FEmbed => {
            let s = parse_seqs(&[text], Params { m: None, ..p })?.remove(0);
            embed_seq(&s)?.to_string()
        }
        MapArg::OValue => {
            let n = p.n.ok_or_else(|| invalid("o-value needs --n"))?;
            let a: BinThetaTerm = with_input(text, text.parse())?;
            o_value(&a, n)?.to_string()
        }
    })
}

fn enum_system(system: SystemArg, p: Params) -> Outcome<System> {
    let need_n = || p.n.ok_or_else(|| invalid("enumeration needs --n"));
    Ok(match system {
        SystemArg::Cnf => {
            no_variant(p, "cnf")?;
            System::Cnf
        }
        SystemArg::Veblen => {
            no_variant(p, "veblen")?;
            System::Veblen {
                subscripts: need_n()?,
            }
        }
        SystemArg::Pi => {
            no_variant(p, "pi")?;
            System::Pi { n: need_n()? }
        }
        SystemArg::Theta => {
            need_n()?;
            System::Theta(theta_system(p)?)
        }
        SystemArg::Gapseq => {
            let bar = match p.variant {
                None | Some(Variant::Plain) => false,
                Some(Variant::Bar) => true,
                Some(_) => return Err(invalid("gapseq takes --variant plain or bar")),
            };
            System::GapSeq {
                n: need_n()?,
                family: ordgap_core::gapseq::SeqFamily {
                    bar,
                    first_at_most: p.m,
                },
            }
        }
        SystemArg::Btheta => {
            need_n()?;
            System::BinTheta(bin_system(p)?.expect("n is present"))
        }
    })
}

fn enumerate(system: SystemArg, p: Params, size: usize) -> Outcome<()> {
    let spec = EnumSpec {
        system: enum_system(system, p)?,
        size,
    };
    let terms = harness::enumerate(&spec)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for t in &terms {
        if writeln!(out, "{t}").is_err() {
            return Ok(());
        }
    }
    let _ = out.flush();
    Ok(())
}

fn check(
    names: &[String],
    n: Option<usize>,
    size: Option<usize>,
    timing: bool,
) -> Outcome<ExitCode> {
    let names: Vec<&str> = if names.is_empty() {
        SUITES.iter().map(|s| s.name).collect()
    } else {
        names.iter().map(String::as_str).collect()
    };
    let mut plan = Vec::new();
    for name in names {
        let info = harness::suite_info(name)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown suite `{name}`")))?;
        plan.push((
            name,
            Bounds {
                n: n.unwrap_or(info.default.n),
                size: size.unwrap_or(info.default.size),
            },
        ));
    }
    let mut reports = Vec::new();
    for (name, bounds) in plan {
        let r = harness::check_suite(name, bounds)?;
        println!("{}", r.to_json_line(timing));
        reports.push(r);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for r in &reports {
        eprintln!("{r}");
    }
    eprintln!("{} of {} suites passed", reports.len() - failed, reports.len());
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Outcome<ExitCode> {
    match cli.command {
        Command::Parse {
            system,
            params,
            term,
        } => println!("{}", parse_term(system, &term, params)?),
        Command::Compare {
            system,
            params,
            mode,
            left,
            right,
        } => println!("{}", compare(system, params, mode.into(), &left, &right)?),
        Command::Translate { map, params, term } => println!("{}", translate(map, params, &term)?),
        Command::Enumerate {
            system,
            params,
            max_size,
        } => enumerate(system, params, max_size)?,
        Command::Embed {
            mode,
            n,
            left,
            right,
        } => {
            let p = Params {
                n,
                m: None,
                variant: None,
            };
            let s = parse_seqs(&[&left, &right], p)?;
            println!("{}", gap_leq(&s[0], &s[1], mode.into()));
        }
        Command::Check {
            suites,
            n,
            max_size,
            no_timing,
            list,
        } => {
            if list {
                for s in SUITES {
                    println!("{:<20} {}", s.name, s.property);
                }
                return Ok(ExitCode::SUCCESS);
            }
            return check(&suites, n, max_size, !no_timing);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report(f: &Failure) {
    eprintln!("error: {}", f.error);
    if let (Error::Parse { pos, .. }, Some(input)) = (&f.error, &f.input) {
        let col = input.get(..*pos).map_or(*pos, |s| s.chars().count());
        eprintln!("  {input}");
        eprintln!("  {}^", " ".repeat(col));
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            report(&f);
            ExitCode::from(2)
        }
    }
}

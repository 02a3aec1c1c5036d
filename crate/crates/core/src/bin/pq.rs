use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pq_core::centralizer::{commutant_report, verify_brauer_centralizer, verify_double_centralizer, CommutantProblem, SolveMode};
use pq_core::qbrauer::{format_brauer_word, parse_brauer_word, BrauerRep};
use pq_core::report::VerificationReport;
use pq_core::smatrix::Mode;
use pq_core::suite::{cached_relations, run_suite, Cache, Check, OutputFormat, RunConfig};
use pq_core::scalar::Frac;
use pq_core::uqpn::{parse_word, AlgebraElement, Straightener};

macro_rules! say {
    ($($t:tt)*) => {
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0)
        }
    };
}

#[derive(Parser)]
#[command(name = "pq", version, about = "Exact checks for the periplectic quantum superalgebra and q-Brauer algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks for every n' <= n (and l' <= l where legs matter).
    Verify(VerifyArgs),
    /// Commutant dimensions on the l-fold tensor space.
    Centralizer(CentralizerArgs),
    /// Print the relations extracted from the RTT presentation.
    Relations {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Straighten a word such as "t(1,-2) t(2,2)" into ordered monomials.
    Pbw {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        word: String,
    },
    /// Work with words in the q-Brauer generators.
    Brauer {
        #[command(subcommand)]
        command: BrauerCommand,
    },
}

#[derive(Subcommand)]
enum BrauerCommand {
    /// Evaluate a word such as "t1 c2 t1" on tensor space.
    Eval {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Uqpn,
    Brauer,
    Classical,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of manin, cybe, cobracket, qybe, decomposition, lemmas, relations,
    /// representations, pbw, classical-limit, cobracket-limit, brauer, module-homs, ps-formula, all.
    #[arg(value_parser = |s: &str| s.parse::<Check>().map_err(|e| e.to_string()))]
    check: Check,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    l: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    mode: ModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Record wall-clock time in each report.
    #[arg(long)]
    timings: bool,
    /// Directory receiving one JSON file per report.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CentralizerArgs {
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    l: usize,
    #[arg(long, value_enum, default_value_t = SideArg::Uqpn)]
    side: SideArg,
    /// Also measure the double centralizer.
    #[arg(long)]
    double: bool,
    /// Symbolic solve, or a sampled upper bound met by exactly verified candidates.
    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    mode: ModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print_reports(reports: &[VerificationReport], format: Format) -> ExitCode {
    match format {
        Format::Json => say!("{}", serde_json::to_string_pretty(reports).expect("reports serialize")),
        Format::Text => reports.iter().for_each(|r| say!("{}", r.text_line())),
    }
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify(a: VerifyArgs) -> ExitCode {
    let cfg = RunConfig {
        n: a.n,
        l: a.l,
        mode: match a.mode {
            ModeArg::Symbolic => Mode::Symbolic,
            ModeArg::Sampled => Mode::Sampled,
        },
        seed: a.seed,
        format: a.format.into(),
        cache_dir: Cache::from_env().map(|c| c.dir().to_path_buf()),
        out_dir: a.out,
        timings: a.timings,
    };
    match run_suite(&cfg, &[a.check]) {
        Ok(outcome) => {
            say!("{}", outcome.render(cfg.format));
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => usage(e),
    }
}

fn centralizer(a: CentralizerArgs) -> ExitCode {
    if a.n == 0 || a.l < 2 {
        return usage("need n >= 1 and l >= 2");
    }
    let mode = match a.mode {
        ModeArg::Symbolic => SolveMode::Symbolic,
        ModeArg::Sampled => SolveMode::EvaluationVerified,
    };
    let mut reports = Vec::new();
    match a.side {
        SideArg::Uqpn => reports.push(verify_brauer_centralizer(a.n, a.l, mode, a.seed)),
        SideArg::Brauer => match CommutantProblem::brauer(a.n, a.l) {
            Ok(p) => reports.push(commutant_report(&p)),
            Err(e) => return usage(e),
        },
        SideArg::Classical => match CommutantProblem::classical(a.n, a.l) {
            Ok(p) => reports.push(commutant_report(&p)),
            Err(e) => return usage(e),
        },
    }
    if a.double {
        reports.push(verify_double_centralizer(a.n, a.l));
    }
    print_reports(&reports, a.format)
}

fn relations(n: usize, format: Format) -> ExitCode {
    if n == 0 {
        return usage("n must be at least 1");
    }
    let cache = Cache::from_env();
    let rels = cached_relations(cache.as_ref(), n);
    match format {
        Format::Json => say!("{}", serde_json::to_string_pretty(&rels.to_json()).expect("relations serialize")),
        Format::Text => {
            say!("{} relations for n={n}", rels.len());
            for r in &rels.relations {
                say!("{:?}: {} = 0", r.index, r.element);
            }
        }
    }
    ExitCode::SUCCESS
}

fn pbw(n: usize, word: &str) -> ExitCode {
    if n == 0 {
        return usage("n must be at least 1");
    }
    let w = match parse_word(n, word) {
        Ok(w) => w,
        Err(e) => return usage(e),
    };
    let Some(w) = w else {
        say!("0");
        return ExitCode::SUCCESS;
    };
    let cache = Cache::from_env();
    let st = match Straightener::from_relations(&cached_relations(cache.as_ref(), n)) {
        Ok(st) => st,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match st.straighten(&AlgebraElement::from_word(w, Frac::one())) {
        Ok(e) => {
            say!("{e}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn brauer_eval(n: usize, l: usize, word: &str, format: Format) -> ExitCode {
    let w = match parse_brauer_word(l, word) {
        Ok(w) => w,
        Err(e) => return usage(e),
    };
    let rep = match BrauerRep::new(n, l) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let op = rep.evaluate_word(&w).expect("tokens checked against l");
    match format {
        Format::Json => say!("{}", serde_json::to_string_pretty(&op.to_json()).expect("operator serializes")),
        Format::Text => {
            say!("{} on n={n}, l={l}: {} nonzero entries", format_brauer_word(&w), op.nnz());
            let sp = op.space();
            for (&(r, c), v) in op.entries() {
                say!("  {:?} <- {:?}: {v}", sp.decode(r, l), sp.decode(c, l));
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(a) => verify(a),
        Command::Centralizer(a) => centralizer(a),
        Command::Relations { n, format } => relations(n, format),
        Command::Pbw { n, word } => pbw(n, &word),
        Command::Brauer { command: BrauerCommand::Eval { n, l, word, format } } => brauer_eval(n, l, &word, format),
    }
}

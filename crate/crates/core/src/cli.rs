//! The `wcnest` command line.
//!
//! Exit codes: 0 success (or "equivalent", or at least one answer set), 1
//! negative outcome, 2 usage, parse or cap errors, 3 refusal of a non-tight
//! completion.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::completion::{completion_dimacs, completion_input, is_nonnested, prepare, verify_completion};
use crate::error::Error;
use crate::ht::{strong_eq_nested, strong_eq_weight, HtVerdict, DEFAULT_HT_CAP};
use crate::nsem::answer_sets_n;
use crate::parser::{parse_nested_program, parse_weight_program, print_nested_program};
use crate::syntax::{Interpretation, NProgram, WProgram};
use crate::translate::{tr_basic_with, tr_nd_with, tr_nn, TranslateOptions, TranslationReport};
use crate::universe::DEFAULT_CAP;
use crate::verify::{run_check, Check, VerifyConfig};
use crate::wsem::answer_sets_w;

pub const CAP_ENV: &str = "WCNEST_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_NOT_TIGHT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "wcnest", version, about = "Weight-constraint and nested-expression logic programs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate the answer sets of a program.
    AnswerSets {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Translate a weight program into a program with nested expressions.
    Translate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Basic)]
        mode: Mode,
        /// Minimize threshold formulas and absorb constants (basic and nd).
        #[arg(long)]
        simplify: bool,
        /// Append Q_Ω and size metrics as comment lines.
        #[arg(long)]
        report: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Decide weak or strong equivalence of two programs.
    CheckEquiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, conflicts_with = "weak")]
        strong: bool,
        #[arg(long)]
        weak: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Export the completion of the nonnested translation as DIMACS.
    Completion {
        file: PathBuf,
        /// Write the CNF here instead of standard output.
        #[arg(long)]
        dimacs: Option<PathBuf>,
        /// Compare the completion's models with the answer sets.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run the randomized cross-checks.
    Verify {
        #[arg(long)]
        theorem: Option<u32>,
        #[arg(long)]
        proposition: Option<u32>,
        #[arg(long)]
        lemma: Option<u32>,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input language; by default `.lp` files are nested and all others are
    /// weight programs.
    #[arg(long, value_enum)]
    pub semantics: Option<Semantics>,
    /// Enumeration cap on signature size (default 16, or $WCNEST_CAP).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub cap: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Semantics {
    Weight,
    Nested,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Basic,
    Nd,
    Nn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

/// A failure that ends the command with the given exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::NotTight) { EXIT_NOT_TIGHT } else { EXIT_ERROR };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

enum Program {
    Weight(WProgram),
    Nested(NProgram),
}

impl Common {
    fn cap(&self) -> std::result::Result<usize, Failure> {
        if let Some(c) = self.cap {
            return Ok(c as usize);
        }
        match std::env::var(CAP_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(Failure {
                    code: EXIT_ERROR,
                    message: format!("{CAP_ENV} must be a positive integer, got `{v}`"),
                }),
            },
            Err(_) => Ok(DEFAULT_CAP),
        }
    }

    fn semantics_for(&self, path: &Path) -> Semantics {
        self.semantics.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
            Some("lp") => Semantics::Nested,
            _ => Semantics::Weight,
        })
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_ERROR,
        message: format!("{}: {e}", path.display()),
    })
}

fn load(path: &Path, semantics: Semantics) -> std::result::Result<Program, Failure> {
    let text = read(path)?;
    let parsed = match semantics {
        Semantics::Weight => parse_weight_program(&text).map(Program::Weight),
        Semantics::Nested => parse_nested_program(&text).map(Program::Nested),
    };
    parsed.map_err(|e| Failure {
        code: EXIT_ERROR,
        message: format!("{}:{e}", path.display()),
    })
}

fn load_weight(path: &Path, common: &Common) -> std::result::Result<WProgram, Failure> {
    match load(path, common.semantics_for(path))? {
        Program::Weight(p) => Ok(p),
        Program::Nested(_) => Err(Failure {
            code: EXIT_ERROR,
            message: "this command needs a weight program".into(),
        }),
    }
}

fn literals_field(z: &Interpretation) -> String {
    z.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}

/// Run the command line on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = String::new();
    let result = dispatch(cli.command, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut String) -> Outcome {
    match cmd {
        Command::AnswerSets { file, common } => cmd_answer_sets(&file, &common, out),
        Command::Translate {
            file,
            mode,
            simplify,
            report,
            common,
        } => cmd_translate(&file, mode, simplify, report, &common, out),
        Command::CheckEquiv {
            file1,
            file2,
            weak,
            common,
            ..
        } => cmd_check_equiv(&file1, &file2, !weak, &common, out),
        Command::Completion {
            file,
            dimacs,
            verify,
            common,
        } => cmd_completion(&file, dimacs.as_deref(), verify, &common, out),
        Command::Verify {
            theorem,
            proposition,
            lemma,
            cases,
            seed,
            common,
        } => cmd_verify(theorem, proposition, lemma, cases, seed, &common, out),
    }
}

fn answer_sets(p: &Program, cap: usize) -> crate::Result<Vec<Interpretation>> {
    match p {
        Program::Weight(w) => answer_sets_w(w, cap),
        Program::Nested(n) => answer_sets_n(n, cap),
    }
}

pub fn format_answer_sets(sets: &[Interpretation], format: Format) -> String {
    let mut out = String::new();
    for (i, z) in sets.iter().enumerate() {
        match format {
            Format::Text => {
                let _ = writeln!(out, "{z}");
            }
            Format::Records => {
                let _ = writeln!(out, "type=answer_set index={i} size={} literals={}", z.len(), literals_field(z));
            }
        }
    }
    if format == Format::Records {
        let _ = writeln!(out, "type=summary count={}", sets.len());
    }
    out
}

fn cmd_answer_sets(file: &Path, common: &Common, out: &mut String) -> Outcome {
    let p = load(file, common.semantics_for(file))?;
    let sets = answer_sets(&p, common.cap()?)?;
    out.push_str(&format_answer_sets(&sets, common.format));
    Ok(if sets.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
}

fn write_report(r: &TranslationReport, format: Format, out: &mut String) {
    let q: Vec<String> = r.q_omega.iter().map(|a| a.to_string()).collect();
    match format {
        Format::Text => {
            let _ = writeln!(out, "% Q_Omega: {}", if q.is_empty() { "(none)".to_string() } else { q.join(" ") });
            let _ = writeln!(out, "% rules: {}", r.rule_count);
            let _ = writeln!(out, "% weight atoms: {}", r.weight_atom_count);
            for (i, m) in r.constraints.iter().enumerate() {
                let _ = writeln!(out, "% constraint {}: L={} W={}", i + 1, m.length, m.weight);
            }
        }
        Format::Records => {
            let _ = writeln!(
                out,
                "type=report rules={} weight_atoms={} q_omega={}",
                r.rule_count,
                r.weight_atom_count,
                q.join(",")
            );
            for (i, m) in r.constraints.iter().enumerate() {
                let _ = writeln!(out, "type=constraint index={i} length={} weight={}", m.length, m.weight);
            }
        }
    }
}

fn cmd_translate(file: &Path, mode: Mode, simplify: bool, report: bool, common: &Common, out: &mut String) -> Outcome {
    let p = load_weight(file, common)?;
    let opts = TranslateOptions {
        simplify,
        check_cap: DEFAULT_HT_CAP,
    };
    let r = match mode {
        Mode::Basic => tr_basic_with(&p, &opts)?,
        Mode::Nd => tr_nd_with(&p, &opts)?,
        Mode::Nn => tr_nn(&p)?,
    };
    match common.format {
        Format::Text => out.push_str(&print_nested_program(&r.output)),
        Format::Records => {
            for (i, rule) in r.output.rules.iter().enumerate() {
                let _ = writeln!(out, "type=rule index={i} text={rule}");
            }
        }
    }
    if report {
        write_report(&r, common.format, out);
    }
    Ok(EXIT_OK)
}

fn write_verdict(equivalent: bool, strength: &str, witness: Option<String>, format: Format, out: &mut String) {
    match format {
        Format::Text => {
            let _ = writeln!(out, "{}", if equivalent { "equivalent" } else { "not equivalent" });
            if let Some(w) = witness {
                let _ = writeln!(out, "counterexample: {w}");
            }
        }
        Format::Records => {
            let _ = write!(out, "type=verdict strength={strength} equivalent={equivalent}");
            if let Some(w) = witness {
                let _ = write!(out, " counterexample={w}");
            }
            out.push('\n');
        }
    }
}

fn ht_witness(v: &HtVerdict) -> Option<String> {
    match v {
        HtVerdict::Equivalent => None,
        HtVerdict::Counterexample { model, first_satisfies } => Some(format!(
            "{model} satisfies the {} program only",
            if *first_satisfies { "first" } else { "second" }
        )),
    }
}

fn cmd_check_equiv(f1: &Path, f2: &Path, strong: bool, common: &Common, out: &mut String) -> Outcome {
    let p1 = load(f1, common.semantics_for(f1))?;
    let p2 = load(f2, common.semantics_for(f2))?;
    let cap = common.cap()?;
    let (equivalent, witness) = if strong {
        let v = match (&p1, &p2) {
            (Program::Weight(a), Program::Weight(b)) => strong_eq_weight(a, b, cap.min(DEFAULT_HT_CAP))?,
            (Program::Nested(a), Program::Nested(b)) => strong_eq_nested(a, b, cap.min(DEFAULT_HT_CAP))?,
            _ => {
                return Err(Failure {
                    code: EXIT_ERROR,
                    message: "strong equivalence needs two programs in the same language".into(),
                })
            }
        };
        (v.is_equivalent(), ht_witness(&v))
    } else {
        let a = answer_sets(&p1, cap)?;
        let b = answer_sets(&p2, cap)?;
        let witness = a
            .iter()
            .find(|z| !b.contains(z))
            .map(|z| format!("{z} is an answer set of the first program only"))
            .or_else(|| b.iter().find(|z| !a.contains(z)).map(|z| format!("{z} is an answer set of the second program only")));
        (a == b, witness)
    };
    write_verdict(equivalent, if strong { "strong" } else { "weak" }, witness, common.format, out);
    Ok(if equivalent { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_completion(file: &Path, dimacs: Option<&Path>, verify: bool, common: &Common, out: &mut String) -> Outcome {
    let (input, weight) = match load(file, common.semantics_for(file))? {
        Program::Weight(p) => (completion_input(&p)?, Some(p)),
        Program::Nested(p) => {
            if !is_nonnested(&p) {
                return Err(Error::NotNonnested.into());
            }
            let aux = p.aux_atoms.clone();
            (prepare(&p, aux), None)
        }
    };
    let doc = completion_dimacs(&input)?;
    let text = doc.render();
    match dimacs {
        Some(path) => std::fs::write(path, &text).map_err(|e| Failure {
            code: EXIT_ERROR,
            message: format!("{}: {e}", path.display()),
        })?,
        None => out.push_str(&text),
    }
    if !verify {
        return Ok(EXIT_OK);
    }
    let Some(omega) = weight else {
        return Err(Failure {
            code: EXIT_ERROR,
            message: "--verify needs a weight program".into(),
        });
    };
    let report = verify_completion(&omega, common.cap()?)?;
    let prefix = if dimacs.is_none() { "c " } else { "" };
    let show = |s: &[Interpretation]| s.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(" ");
    match common.format {
        Format::Text => {
            let _ = writeln!(
                out,
                "{prefix}verify {}: {} models, {} answer sets",
                if report.passed() { "pass" } else { "FAIL" },
                report.models.len(),
                report.answer_sets.len()
            );
            if !report.passed() {
                let _ = writeln!(out, "{prefix}models: {}", show(&report.models));
                let _ = writeln!(out, "{prefix}answer sets: {}", show(&report.answer_sets));
            }
        }
        Format::Records => {
            let _ = writeln!(
                out,
                "{prefix}type=completion_check passed={} models={} answer_sets={}",
                report.passed(),
                report.models.len(),
                report.answer_sets.len()
            );
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_verify(
    theorem: Option<u32>,
    proposition: Option<u32>,
    lemma: Option<u32>,
    cases: usize,
    seed: u64,
    common: &Common,
    out: &mut String,
) -> Outcome {
    let unknown = |kind: &str, n: u32| Failure {
        code: EXIT_ERROR,
        message: format!("no randomized check for {kind} {n}"),
    };
    let mut checks = Vec::new();
    if let Some(n) = theorem {
        checks.push(Check::theorem(n).ok_or_else(|| unknown("theorem", n))?);
    }
    if let Some(n) = proposition {
        checks.push(Check::proposition(n).ok_or_else(|| unknown("proposition", n))?);
    }
    if let Some(n) = lemma {
        checks.push(Check::lemma(n).ok_or_else(|| unknown("lemma", n))?);
    }
    if checks.is_empty() {
        checks = Check::ALL.to_vec();
    }
    let cfg = VerifyConfig {
        cases,
        seed,
        cap: common.cap()?,
        ..VerifyConfig::default()
    };
    let mut all_ok = true;
    for c in checks {
        let s = run_check(c, &cfg);
        all_ok &= s.ok();
        match common.format {
            Format::Text => {
                let _ = writeln!(
                    out,
                    "{c}: {} passed, {} failed, {} skipped (seed {seed})",
                    s.passed, s.failed, s.skipped
                );
                if let Some(f) = &s.first_failure {
                    let _ = writeln!(out, "first failure, {f}");
                }
            }
            Format::Records => {
                let _ = writeln!(
                    out,
                    "type=check name={c} seed={seed} cases={cases} passed={} failed={} skipped={}",
                    s.passed, s.failed, s.skipped
                );
                if let Some(f) = &s.first_failure {
                    let _ = writeln!(out, "type=failure name={c} detail={}", f.replace('\n', " | "));
                }
            }
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_NEGATIVE })
}

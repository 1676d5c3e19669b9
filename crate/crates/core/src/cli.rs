//! The `jumpq` command line.
//!
//! [`execute`] does all the work and returns a [`CommandReport`]; the binary
//! only prints it. Results go to stdout in the declared format, diagnostics
//! to stderr.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification mismatch,
//! 4 bound exceeded.

use std::collections::BTreeSet;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::enumeration::{
    catalan, f_bruteforce, f_dp, f_series_dp, f_series_recurrence, ExportFormat,
};
use crate::error::Error;
use crate::machine::{
    forbidden_patterns, frontal_outputs_with, producible_set_exhaustive, recognize, replay,
    Discipline, RecognitionResult, Witness,
};
use crate::perm::{
    contains_pattern, is_231_avoiding, parse_permutation, permutations_of, Permutation,
};
use crate::{BigCount, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandReport {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandReport {
    fn ok(stdout: String) -> Self {
        CommandReport {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn json(value: &Value) -> Self {
        Self::ok(format!("{value}\n"))
    }

    fn failure(exit_code: i32, stderr: String) -> Self {
        CommandReport {
            exit_code,
            stdout: String::new(),
            stderr,
        }
    }
}

impl From<Error> for CommandReport {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::BoundExceeded { .. } => EXIT_BOUND,
            _ => EXIT_INVALID,
        };
        let hint = match err {
            Error::BoundExceeded { .. } => " (pass --force to lift the bound)",
            _ => "",
        };
        CommandReport::failure(code, format!("error: {err}{hint}\n"))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "jumpq",
    about = "Jump-queue recognition and enumeration of Av(4231, 42513)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DisciplineArg {
    Loose,
    Strict,
}

impl From<DisciplineArg> for Discipline {
    fn from(d: DisciplineArg) -> Self {
        match d {
            DisciplineArg::Loose => Discipline::Loose,
            DisciplineArg::Strict => Discipline::Strict,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Bruteforce,
    Dp,
    Recurrence,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesMethod {
    Dp,
    Recurrence,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
    Csv,
}

impl From<FormatArg> for ExportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => ExportFormat::Plain,
            FormatArg::Json => ExportFormat::Json,
            FormatArg::Csv => ExportFormat::Csv,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a permutation is producible.
    Check {
        #[arg(long, value_enum, default_value = "loose")]
        discipline: DisciplineArg,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Print the operation trace producing a permutation, or a witness.
    Trace {
        #[arg(long, value_enum, default_value = "loose")]
        discipline: DisciplineArg,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Print f_N, the number of {4231, 42513}-avoiders of length N.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: CountMethod,
        /// Lift the brute-force bound.
        #[arg(long)]
        force: bool,
    },
    /// Print f_0 .. f_N.
    Series {
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: SeriesMethod,
    },
    /// Run the cross-method invariant suite.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = Limits::DEFAULT_EXHAUSTIVE)]
        exhaustive_n: usize,
        /// Largest index for the dp-versus-recurrence comparison.
        #[arg(long, default_value_t = 200)]
        series_n: usize,
        #[arg(long)]
        force: bool,
    },
    /// Output orders of a queue preloaded with 1..M (no locks, no input).
    Frontal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        force: bool,
    },
}

fn limits(force: bool) -> Limits {
    if force {
        Limits::unbounded()
    } else {
        Limits::default()
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn execute<I, S>(argv: I) -> CommandReport
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandReport::ok(err.to_string())
                }
                _ => CommandReport::failure(EXIT_INVALID, err.render().to_string()),
            };
        }
    };
    let result = match cli.command {
        Command::Check { discipline, perm } => check(&perm, discipline.into(), false),
        Command::Trace { discipline, perm } => check(&perm, discipline.into(), true),
        Command::Count { n, method, force } => count(n, method, force),
        Command::Series {
            terms,
            format,
            method,
        } => Ok(series(terms, format.into(), method)),
        Command::Verify {
            max_n,
            exhaustive_n,
            series_n,
            force,
        } => verify(max_n, exhaustive_n, series_n, force),
        Command::Frontal { m, force } => frontal(m, force),
    };
    result.unwrap_or_else(CommandReport::from)
}

fn witness_json(witness: &Option<Witness>) -> Value {
    serde_json::to_value(witness).expect("witness serializes")
}

fn check(text: &str, discipline: Discipline, with_trace: bool) -> Result<CommandReport, Error> {
    let perm = parse_permutation(text)?;
    let value = match recognize(&perm, discipline) {
        RecognitionResult::Producible(trace) if with_trace => json!({
            "producible": true,
            "trace": trace.records(),
        }),
        RecognitionResult::Producible(_) => json!({ "producible": true }),
        RecognitionResult::NotProducible {
            blocked_at,
            witness,
        } => json!({
            "producible": false,
            "blocked_at": blocked_at,
            "witness": witness_json(&witness),
        }),
    };
    Ok(CommandReport::json(&value))
}

fn count(n: usize, method: CountMethod, force: bool) -> Result<CommandReport, Error> {
    let value: BigCount = match method {
        CountMethod::Bruteforce => f_bruteforce(n, &limits(force))?,
        CountMethod::Dp => f_dp(n),
        CountMethod::Recurrence => f_series_recurrence::<BigCount>(n)[n].clone(),
    };
    Ok(CommandReport::ok(format!("{value}\n")))
}

fn series(terms: usize, format: ExportFormat, method: SeriesMethod) -> CommandReport {
    let table = match method {
        SeriesMethod::Recurrence => f_series_recurrence::<BigCount>(terms),
        SeriesMethod::Dp => f_series_dp::<BigCount>(terms),
    };
    CommandReport::ok(table.export(format))
}

fn frontal(m: usize, force: bool) -> Result<CommandReport, Error> {
    let outputs = frontal_outputs_with(m, Discipline::Loose, &limits(force))?;
    let value = json!({
        "m": m,
        "count": outputs.len(),
        "catalan": catalan::<BigCount>(m).to_string(),
        "outputs": outputs.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    });
    Ok(CommandReport::json(&value))
}

/// Outcome of one invariant in `verify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    /// Counterexample description, `None` when the check passed.
    pub failure: Option<String>,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Renders a list of outcomes; exit code 3 if any failed.
pub fn verify_report(outcomes: &[CheckOutcome]) -> CommandReport {
    let all = outcomes.iter().all(CheckOutcome::passed);
    let checks: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "name": o.name, "passed": o.passed(), "counterexample": o.failure }))
        .collect();
    let mut report = CommandReport::json(&json!({ "passed": all, "checks": checks }));
    for o in outcomes {
        report.stderr.push_str(&format!(
            "{} {}{}\n",
            if o.passed() { "PASS" } else { "FAIL" },
            o.name,
            o.failure
                .as_deref()
                .map(|f| format!(": {f}"))
                .unwrap_or_default()
        ));
    }
    if !all {
        report.exit_code = EXIT_MISMATCH;
    }
    report
}

/// Smallest element of the symmetric difference, described.
fn set_mismatch(
    left_name: &str,
    left: &BTreeSet<Permutation>,
    right_name: &str,
    right: &BTreeSet<Permutation>,
) -> Option<String> {
    let only_left = left.difference(right).next();
    let only_right = right.difference(left).next();
    match (only_left, only_right) {
        (None, None) => None,
        (Some(p), r) if r.is_none_or(|r| p < r) => {
            Some(format!("{p} in {left_name} but not in {right_name}"))
        }
        (_, Some(p)) => Some(format!("{p} in {right_name} but not in {left_name}")),
        _ => unreachable!(),
    }
}

fn first_failure(iter: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    iter.into_iter().flatten().next()
}

fn verify(
    max_n: usize,
    exhaustive_n: usize,
    series_n: usize,
    force: bool,
) -> Result<CommandReport, Error> {
    let limits = limits(force);
    Limits::check(limits.brute_force, max_n, "verify --max-n")?;
    Limits::check(limits.exhaustive, exhaustive_n, "verify --exhaustive-n")?;
    let frontal_max = max_n.min(limits.frontal);

    let mut per_n = Vec::new();
    for n in 0..=max_n {
        let perms: Vec<Permutation> = permutations_of(n, &limits)?.collect();
        let results: Vec<[RecognitionResult; 2]> = perms
            .par_iter()
            .map(|p| Discipline::ALL.map(|d| recognize(p, d)))
            .collect();
        per_n.push((perms, results));
    }

    let producible = |n: usize, d: usize| -> BTreeSet<Permutation> {
        let (perms, results) = &per_n[n];
        perms
            .iter()
            .zip(results)
            .filter(|(_, r)| r[d].is_producible())
            .map(|(p, _)| p.clone())
            .collect()
    };
    let avoiders = |n: usize, d: Discipline| -> BTreeSet<Permutation> {
        let patterns = forbidden_patterns(d);
        per_n[n]
            .0
            .iter()
            .filter(|p| {
                patterns
                    .iter()
                    .all(|pat| contains_pattern(p, pat).is_none())
            })
            .cloned()
            .collect()
    };

    let mut outcomes = Vec::new();
    for (index, d) in Discipline::ALL.into_iter().enumerate() {
        let failure = first_failure((0..=max_n).map(|n| {
            set_mismatch(
                "producible",
                &producible(n, index),
                "avoiders",
                &avoiders(n, d),
            )
            .map(|m| format!("n={n}: {m}"))
        }));
        outcomes.push(CheckOutcome::new(
            format!("characterization/{d} n<={max_n}"),
            failure,
        ));
    }

    let failure = first_failure((0..=max_n).map(|n| {
        let (strict, loose) = (producible(n, 1), producible(n, 0));
        strict
            .difference(&loose)
            .next()
            .map(|p| format!("n={n}: {p} strict-producible but not loose-producible"))
    }));
    outcomes.push(CheckOutcome::new(
        format!("strict within loose n<={max_n}"),
        failure,
    ));

    for (index, d) in Discipline::ALL.into_iter().enumerate() {
        let mut failure = None;
        for n in 0..=exhaustive_n {
            let greedy = if n <= max_n {
                producible(n, index)
            } else {
                crate::machine::producible_set(n, d, &limits)?
            };
            let exhaustive = producible_set_exhaustive(n, d, &limits)?;
            if let Some(m) = set_mismatch("greedy", &greedy, "exhaustive", &exhaustive) {
                failure = Some(format!("n={n}: {m}"));
                break;
            }
        }
        outcomes.push(CheckOutcome::new(
            format!("greedy adequacy/{d} n<={exhaustive_n}"),
            failure,
        ));
    }

    let mut failure = None;
    'lemma: for m in 0..=frontal_max {
        let expected: BTreeSet<Permutation> = permutations_of(m, &limits)?
            .filter(|p| {
                contains_pattern(p, &Permutation::from_digits("231").expect("valid")).is_none()
            })
            .collect();
        for d in Discipline::ALL {
            let got = frontal_outputs_with(m, d, &limits)?;
            if let Some(mm) = set_mismatch("frontal", &got, "231-avoiders", &expected) {
                failure = Some(format!("m={m} {d}: {mm}"));
                break 'lemma;
            }
            if BigCount::from(got.len()) != catalan::<BigCount>(m) {
                failure = Some(format!(
                    "m={m}: {} outputs but catalan is {}",
                    got.len(),
                    catalan::<BigCount>(m)
                ));
                break 'lemma;
            }
        }
        if let Some(p) = expected.iter().find(|p| !is_231_avoiding(p)) {
            failure = Some(format!("m={m}: linear 231 test disagrees on {p}"));
            break;
        }
    }
    outcomes.push(CheckOutcome::new(
        format!("frontal outputs m<={frontal_max}"),
        failure,
    ));

    let recurrence = f_series_recurrence::<BigCount>(series_n.max(max_n));
    let dp = f_series_dp::<BigCount>(series_n.max(max_n));
    let failure = first_failure((0..=max_n).map(|n| {
        let brute = BigCount::from(producible(n, 1).len());
        (brute != dp[n] || brute != recurrence[n]).then(|| {
            format!(
                "n={n}: bruteforce {brute}, dp {}, recurrence {}",
                dp[n], recurrence[n]
            )
        })
    }));
    outcomes.push(CheckOutcome::new(
        format!("triple agreement n<={max_n}"),
        failure,
    ));

    let failure = first_failure((0..=series_n).map(|n| {
        (dp[n] != recurrence[n])
            .then(|| format!("n={n}: dp {} vs recurrence {}", dp[n], recurrence[n]))
    }));
    outcomes.push(CheckOutcome::new(
        format!("dp = recurrence n<={series_n}"),
        failure,
    ));

    let mut witness_failure = None;
    let mut replay_failure = None;
    for (perms, results) in &per_n {
        for (perm, pair) in perms.iter().zip(results) {
            for (d, result) in Discipline::ALL.into_iter().zip(pair) {
                match result {
                    RecognitionResult::NotProducible { witness, .. }
                        if witness_failure.is_none() =>
                    {
                        let legal = forbidden_patterns(d);
                        let ok = witness.as_ref().is_some_and(|w| {
                            legal.contains(&w.pattern)
                                && w.occurrence.is_occurrence_of(perm, &w.pattern)
                        });
                        if !ok {
                            witness_failure = Some(format!("{perm} ({d}): witness {witness:?}"));
                        }
                    }
                    RecognitionResult::Producible(trace) if replay_failure.is_none() => {
                        let ok = replay(perm.len(), d, &trace.records())
                            .is_ok_and(|s| s.is_terminal() && s.output() == perm.values());
                        if !ok {
                            replay_failure = Some(format!("{perm} ({d}): trace does not replay"));
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    outcomes.push(CheckOutcome::new(
        format!("witness soundness n<={max_n}"),
        witness_failure,
    ));
    outcomes.push(CheckOutcome::new(
        format!("trace replay n<={max_n}"),
        replay_failure,
    ));

    Ok(verify_report(&outcomes))
}

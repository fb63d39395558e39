//! Command dispatch for the `ncf` executable.
//!
//! Each command produces a [`CommandOutcome`]: the text for standard output,
//! an optional diagnostic for standard error and the process exit code.
//! Negative verdicts exit with 1, parse and usage errors with 2, capacity
//! errors with 3.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use ncf_core::ncf::{count_strongly_asymmetric, count_strongly_asymmetric_by_layers};
use ncf_core::{
    reduce, verify_claims, CnfFormula, Error, Limits, NcfRepr, Oracle, SymTable, SymmetryPartition,
    Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ncf",
    version,
    about = "Nested canalyzing functions: symmetry analysis, recognition and enumeration"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the default-normalized representation of an NCF file.
    Normalize {
        file: PathBuf,
        /// Also sort rules inside each layer.
        #[arg(long)]
        canonical: bool,
    },
    /// Report layers, symmetry groups, level and strong asymmetry.
    Analyze { file: PathBuf },
    /// Evaluate an NCF on one assignment index (bit j-1 holds x_j).
    Eval { file: PathBuf, index: u64 },
    /// Print the truth table of an NCF in hex.
    ToTable { file: PathBuf },
    /// Recognize an NCF from a count table over contiguous groups.
    Recognize { file: PathBuf },
    /// Enumerate all NCFs on n variables.
    Enumerate {
        n: usize,
        /// Compare the strongly asymmetric count with n! * 2^(n-1).
        #[arg(long)]
        check: bool,
        /// Worker threads for the enumeration.
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
        /// Largest n accepted.
        #[arg(long = "max-n", value_name = "CAP")]
        max_n: Option<usize>,
    },
    /// Gap instances for the symmetry level of CNF formulas.
    Hardness {
        #[command(subcommand)]
        action: HardnessAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum HardnessAction {
    /// Write the reduced formula for a base DIMACS formula.
    Gen {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        rho: usize,
    },
    /// Reduce a base formula and check the level gap with the oracle.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        rho: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub report: String,
    pub diagnostic: Option<String>,
}

impl CommandOutcome {
    fn ok(report: String) -> Self {
        CommandOutcome {
            exit_code: EXIT_OK,
            report,
            diagnostic: None,
        }
    }

    fn verdict(holds: bool, report: String) -> Self {
        CommandOutcome {
            exit_code: if holds { EXIT_OK } else { EXIT_NEGATIVE },
            report,
            diagnostic: None,
        }
    }

    fn failure(context: &Path, err: &Error) -> Self {
        CommandOutcome {
            exit_code: if err.is_capacity() {
                EXIT_CAPACITY
            } else {
                EXIT_USAGE
            },
            report: String::new(),
            diagnostic: Some(format!("error: {}: {err}", context.display())),
        }
    }

    fn io_failure(path: &Path, err: &std::io::Error) -> Self {
        CommandOutcome {
            exit_code: EXIT_USAGE,
            report: String::new(),
            diagnostic: Some(format!("error: {}: {err}", path.display())),
        }
    }
}

fn read_input(path: &Path) -> Result<String, CommandOutcome> {
    let result = if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map(|_| text)
    } else {
        fs::read_to_string(path)
    };
    result.map_err(|e| CommandOutcome::io_failure(path, &e))
}

fn load<T>(path: &Path) -> Result<T, CommandOutcome>
where
    T: std::str::FromStr<Err = Error>,
{
    read_input(path)?
        .parse()
        .map_err(|e| CommandOutcome::failure(path, &e))
}

pub fn run(cli: Cli) -> CommandOutcome {
    let result = match cli.command {
        Command::Normalize { file, canonical } => normalize(&file, canonical),
        Command::Analyze { file } => analyze(&file),
        Command::Eval { file, index } => eval(&file, index),
        Command::ToTable { file } => to_table(&file),
        Command::Recognize { file } => recognize(&file),
        Command::Enumerate {
            n,
            check,
            jobs,
            max_n,
        } => enumerate(n, check, jobs, max_n),
        Command::Hardness { action } => match action {
            HardnessAction::Gen { file, rho } => hardness_gen(&file, rho),
            HardnessAction::Verify { file, rho } => hardness_verify(&file, rho),
        },
    };
    result.unwrap_or_else(|outcome| outcome)
}

type Outcome = Result<CommandOutcome, CommandOutcome>;

fn normalize(file: &Path, canonical: bool) -> Outcome {
    let f: NcfRepr = load(file)?;
    let out = if canonical {
        f.canonicalize()
    } else {
        f.normalize()
    };
    Ok(CommandOutcome::ok(out.to_string()))
}

fn join_vars(vars: &[usize]) -> String {
    vars.iter()
        .map(|v| format!("x{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn analyze(file: &Path) -> Outcome {
    let f: NcfRepr = load(file)?;
    let norm = f.normalize();
    let layers = norm.layers();
    let partition = norm
        .symmetry_partition()
        .map_err(|e| CommandOutcome::failure(file, &e))?;
    let level = partition.level();
    let n = norm.num_vars();
    let strong = level == n;

    let mut out = String::new();
    writeln!(out, "normalized:").unwrap();
    for line in norm.to_string().lines() {
        writeln!(out, "  {line}").unwrap();
    }
    writeln!(out, "layers:").unwrap();
    for (k, layer) in layers.layers.iter().enumerate() {
        let vars: Vec<usize> = norm.rules()[layer.rules.clone()]
            .iter()
            .map(|r| r.variable)
            .collect();
        writeln!(
            out,
            "  L{} -> {}: {} ({} canalyzing value{})",
            k + 1,
            u8::from(layer.canalyzed),
            join_vars(&vars),
            layer.distinct_canalyzing_values(),
            if layer.distinct_canalyzing_values() == 1 {
                ""
            } else {
                "s"
            }
        )
        .unwrap();
    }
    writeln!(out, "groups: {partition}").unwrap();
    writeln!(out, "level: {level}").unwrap();
    writeln!(
        out,
        "strongly asymmetric: {}",
        if strong { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(out, "table: {}", norm.to_truth_table()).unwrap();
    writeln!(
        out,
        "n={n} q={} r1={} r2={} level={level} strong={}",
        layers.q(),
        layers.r1(),
        layers.r2(),
        u8::from(strong)
    )
    .unwrap();
    Ok(CommandOutcome::ok(out))
}

fn eval(file: &Path, index: u64) -> Outcome {
    let f: NcfRepr = load(file)?;
    let value = f
        .to_truth_table()
        .evaluate(index)
        .map_err(|e| CommandOutcome::failure(file, &e))?;
    let bits: String = (1..=f.num_vars())
        .map(|j| format!("x{j}={}", (index >> (j - 1)) & 1))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(CommandOutcome::ok(format!(
        "assignment: {bits}\nindex={index} value={}\n",
        u8::from(value)
    )))
}

fn to_table(file: &Path) -> Outcome {
    let f: NcfRepr = load(file)?;
    Ok(CommandOutcome::ok(format!("{}\n", f.to_truth_table())))
}

fn recognize(file: &Path) -> Outcome {
    let table: SymTable = load(file)?;
    let partition = SymmetryPartition::contiguous(table.group_sizes())
        .and_then(|p| table.recognize_ncf(&p).map(|r| (p, r)));
    let (partition, recognition) = partition.map_err(|e| CommandOutcome::failure(file, &e))?;
    let mu = recognition
        .mu_trace
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(match recognition.verdict {
        Verdict::Ncf(f) => CommandOutcome::ok(format!(
            "# groups {partition}, rows per iteration {mu}\n{f}"
        )),
        Verdict::NotNcf(reason) => CommandOutcome::verdict(false, format!("NOT-NCF {reason}\n")),
    })
}

fn enumerate(n: usize, check: bool, jobs: Option<usize>, max_n: Option<usize>) -> Outcome {
    let here = Path::new("enumerate");
    let mut limits = Limits::default();
    if let Some(cap) = max_n {
        limits.enumeration_max_vars = cap;
    }
    let oracle = Oracle::new(limits);
    let report = match jobs {
        Some(0) => {
            let err = Error::Domain("--jobs must be at least 1".into());
            return Err(CommandOutcome::failure(here, &err));
        }
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| CommandOutcome::failure(here, &Error::Domain(e.to_string())))?
            .install(|| oracle.enumerate_ncfs(n)),
        None => oracle.enumerate_ncfs(n),
    }
    .map_err(|e| CommandOutcome::failure(here, &e))?;

    let mut out = report.to_string();
    let mut machine = report.machine_line();
    let mut holds = true;
    if check {
        let expected =
            count_strongly_asymmetric(n).map_err(|e| CommandOutcome::failure(here, &e))?;
        let by_layers = count_strongly_asymmetric_by_layers(n)
            .map_err(|e| CommandOutcome::failure(here, &e))?;
        holds = expected == report.strongly_asymmetric_count.into();
        writeln!(out, "closed form n!*2^(n-1): {expected}").unwrap();
        writeln!(out, "sum over layer shapes:  {by_layers}").unwrap();
        writeln!(out, "check: {}", if holds { "match" } else { "MISMATCH" }).unwrap();
        write!(machine, " expected={expected} check={}", u8::from(holds)).unwrap();
    }
    writeln!(out, "{machine}").unwrap();
    Ok(CommandOutcome::verdict(holds, out))
}

fn hardness_gen(file: &Path, rho: usize) -> Outcome {
    let g: CnfFormula = load(file)?;
    let inst = reduce(&g, rho).map_err(|e| CommandOutcome::failure(file, &e))?;
    let block = |r: std::ops::RangeInclusive<usize>| format!("{}..{}", r.start(), r.end());
    let x = if g.num_vars() == 0 {
        "none".to_string()
    } else {
        block(inst.x_block())
    };
    Ok(CommandOutcome::ok(format!(
        "c reduced with rho={rho}\nc x={x} y={} z={}\n{}",
        block(inst.y_block()),
        block(inst.z_block()),
        inst.result
    )))
}

fn hardness_verify(file: &Path, rho: usize) -> Outcome {
    let g: CnfFormula = load(file)?;
    let verdict = reduce(&g, rho)
        .and_then(|inst| verify_claims(&inst))
        .map_err(|e| CommandOutcome::failure(file, &e))?;
    let expectation = if verdict.g_satisfiable {
        format!("level >= {}", rho + 1)
    } else {
        "level = 1".to_string()
    };
    let out = format!(
        "base formula: {}satisfiable\nexpected: {expectation}\nobserved: level = {}\n{verdict}\n",
        if verdict.g_satisfiable { "" } else { "un" },
        verdict.level_of_f,
    );
    Ok(CommandOutcome::verdict(verdict.claims_hold, out))
}

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use audioactive::chemistry::{
    atomic_factorization_with, derive_n, growth_rate, split_oracle, ChemistryError, IntWord, Oracle,
    PeriodicTable, SplitTest,
};
use audioactive::fst::io::{to_dot, to_json};
use audioactive::fst::{transduce, FstError, Word};
use audioactive::machines::{alphabet_a, alphabet_b, build_audio, MachineId, MARK};
use audioactive::theorems::{
    atomicf_transducer, audit_audio_src, cosmology_gates, cosmology_report_json, prove_cosmological,
    prove_splitting, splitting_gates, splitting_report_json, verify_periodic_table, Gate, Recognizers,
    TheoremError, COSMOLOGY_FIXED_POINT, SPLITTING_FIXED_POINT,
};
use clap::{Parser, Subcommand, ValueEnum};

const GOLDEN_ENV: &str = "AUDIOACTIVE_GOLDEN";

#[derive(Parser)]
#[command(name = "audioactive", version, about = "Audioactive decay with finite-state transducers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Directory of golden report files checked by `prove`.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Splitting,
    Cosmological,
}

#[derive(Subcommand)]
enum Command {
    /// Print the derivation chain of a sequence of digits 1-9.
    Derive {
        word: String,
        #[arg(short = 'n', long = "steps", default_value_t = 1)]
        steps: usize,
    },
    /// Run a word over {1,2,3,d} through the audioactive transducer.
    Audio {
        word: String,
        #[arg(short = 'n', long = "steps", default_value_t = 1)]
        steps: usize,
    },
    /// Decide whether a word with one mark (`*`) is a splitting.
    Split {
        word: String,
        /// Depth used to locate the first failing derivation.
        #[arg(long, default_value_t = 30)]
        depth: usize,
    },
    /// Factor a day-one word into atoms.
    Factorize {
        word: String,
        /// Use the brute-force oracle at this depth instead of the recognizers.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// List the 94 elements.
    Elements,
    /// Growth rate of the decay system.
    Growth,
    /// Run a proof pipeline and check its gates.
    Prove {
        #[arg(value_enum)]
        which: Theorem,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Export a machine as JSON or DOT.
    Export { machine: MachineId },
    /// Check the enumerated elements and decays against the periodic table.
    VerifyTable {
        #[arg(long, default_value_t = 25)]
        max_n: usize,
    },
    /// State counts of the minimized `Audio^n∘Src`.
    AuditAudioSrc {
        #[arg(short = 'n', long = "steps", default_value_t = 25)]
        steps: usize,
        #[arg(long, default_value_t = 1_000_000)]
        limit_states: usize,
    },
}

enum Failure {
    Usage(String),
    Gate(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Gate(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Gate(m) | Failure::Resource(m) => m,
        }
    }
}

impl From<FstError> for Failure {
    fn from(e: FstError) -> Self {
        match e {
            FstError::LimitExceeded { .. } => Failure::Resource(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ChemistryError> for Failure {
    fn from(e: ChemistryError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<TheoremError> for Failure {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            TheoremError::Fst(e) => e.into(),
            TheoremError::InvariantViolation(_) => Failure::Gate(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Derive { word, steps } => derive(word, *steps, format),
        Command::Audio { word, steps } => audio(word, *steps),
        Command::Split { word, depth } => split(word, *depth),
        Command::Factorize { word, depth } => factorize(word, *depth),
        Command::Elements => elements(format),
        Command::Growth => growth(format),
        Command::Prove { which, max_n } => prove(*which, *max_n, format, golden_dir(cli)),
        Command::Export { machine } => export(*machine, format),
        Command::VerifyTable { max_n } => verify_table(*max_n, format),
        Command::AuditAudioSrc { steps, limit_states } => audit(*steps, *limit_states, format),
    }
}

fn golden_dir(cli: &Cli) -> Option<PathBuf> {
    cli.golden.clone().or_else(|| std::env::var_os(GOLDEN_ENV).map(PathBuf::from))
}

fn unsupported(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage("output format not supported by this command".into()))
    }
}

fn parse_a(word: &str) -> Result<Word, Failure> {
    Ok(alphabet_a().parse(word)?)
}

fn derive(word: &str, steps: usize, format: Format) -> Outcome {
    unsupported(format, &[Format::Human, Format::Json])?;
    let mut cur = IntWord::from_digits(word)?;
    let mut chain = Vec::with_capacity(steps);
    for _ in 0..steps {
        cur = derive_n(&cur, 1);
        chain.push(cur.to_string());
    }
    if format == Format::Json {
        return Ok(format!("{}\n", serde_json::json!({ "word": word, "chain": chain })));
    }
    Ok(chain.iter().map(|s| format!("{s}\n")).collect())
}

fn audio(word: &str, steps: usize) -> Outcome {
    let a = alphabet_a();
    let audio = build_audio();
    let mut cur = parse_a(word)?;
    let mut out = String::new();
    for _ in 0..steps {
        let next = transduce(&audio, &cur, 2)?;
        let [v] = next.as_slice() else {
            return Err(Failure::Usage(format!("{} is not a day-one word", a.format(&cur))));
        };
        cur = v.clone();
        let _ = writeln!(out, "{}", a.format(&cur));
    }
    Ok(out)
}

fn split(word: &str, depth: usize) -> Outcome {
    let b = alphabet_b();
    let marked = b.parse(word)?;
    let marks: Vec<usize> = marked.iter().enumerate().filter(|(_, &s)| s == MARK).map(|(i, _)| i).collect();
    let &[at] = marks.as_slice() else {
        return Err(Failure::Usage("the word must contain exactly one mark `*`".into()));
    };
    let (u, v) = (Word::from(&marked[..at]), Word::from(&marked[at + 1..]));
    let rec = Recognizers::get();
    if rec.splits(&u, &v) {
        return Ok("valid splitting\n".into());
    }
    if !split_oracle(&u, &v, 0) {
        return Ok("not a splitting (not a day-one word)\n".into());
    }
    match (1..=depth).find(|&d| !split_oracle(&u, &v, d)) {
        Some(d) => Ok(format!("not a splitting (fails at depth {d})\n")),
        None => Ok(format!("not a splitting (no failure found up to depth {depth})\n")),
    }
}

fn factorize(word: &str, depth: Option<usize>) -> Outcome {
    let a = alphabet_a();
    let w = parse_a(word)?;
    let factors = match depth {
        Some(d) => atomic_factorization_with(&w, &Oracle { depth: d })?,
        None => atomic_factorization_with(&w, &Recognizers::get())?,
    };
    let table = PeriodicTable::get();
    let name = |f: &Word| table.lookup(f).ok().map(|e| e.name.clone());
    if let [only] = factors.as_slice() {
        return Ok(match name(only) {
            Some(n) => format!("{word} = {n}\n"),
            None => format!("{word} (atom)\n"),
        });
    }
    let parts: Vec<String> = factors.iter().map(|f| a.format(f)).collect();
    let mut out = format!("{word} = {}\n", parts.join(" · "));
    let names: Vec<String> = factors.iter().map(|f| name(f).unwrap_or_else(|| "?".into())).collect();
    let _ = writeln!(out, "{} = {}", " ".repeat(word.chars().count()), names.join(" · "));
    Ok(out)
}

fn elements(format: Format) -> Outcome {
    unsupported(format, &[Format::Human, Format::Json, Format::Csv])?;
    let table = PeriodicTable::get();
    let mut out = String::new();
    match format {
        Format::Json => {
            out = table.to_json();
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("number,name,word,decay\n");
            for e in table.elements() {
                let _ = writeln!(out, "{},{},{},{}", e.number, e.name, e.word_text(), e.decay.join(" "));
            }
        }
        _ => {
            for e in table.elements() {
                let _ = writeln!(out, "{:>3} {:<3} {:<44} {}", e.number, e.name, e.word_text(), e.decay.join(" "));
            }
        }
    }
    Ok(out)
}

fn growth(format: Format) -> Outcome {
    unsupported(format, &[Format::Human, Format::Json])?;
    let r = growth_rate(PeriodicTable::get())?;
    if format == Format::Json {
        return Ok(format!("{}\n", serde_json::to_string_pretty(&r).expect("report serializes")));
    }
    Ok(format!(
        "lambda = {:.10}\nresidual = {:.3e} after {} iterations\ncharacteristic root = {:.10}\nwith transuranics = {:.10}\n",
        r.lambda, r.residual, r.iterations, r.characteristic_root, r.lambda_all
    ))
}

fn render_gates(gates: &[Gate]) -> String {
    let mut out = String::new();
    for g in gates {
        let _ = writeln!(out, "[{}] {}: {}", if g.passed { "PASS" } else { "FAIL" }, g.name, g.detail);
    }
    out
}

fn size_lines(sizes: &[usize], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("n,states\n");
    }
    for (i, s) in sizes.iter().enumerate() {
        if format == Format::Csv {
            let _ = writeln!(out, "{},{s}", i + 1);
        } else {
            let _ = writeln!(out, "n={:<3} {s}", i + 1);
        }
    }
    out
}

/// Compares the stable fields of a report with the golden file of the same name.
fn golden_gate(dir: &std::path::Path, name: &str, report: &str) -> Gate {
    let path = dir.join(format!("{name}.json"));
    let result = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: {e}", path.display()))
        .and_then(|text| serde_json::from_str::<serde_json::Value>(&text).map_err(|e| e.to_string()))
        .and_then(|golden| {
            let current: serde_json::Value = serde_json::from_str(report).expect("report is JSON");
            let differing: Vec<&str> = ["sizes", "fixed_point_n", "elements", "named"]
                .into_iter()
                .filter(|k| golden.get(k) != current.get(k))
                .collect();
            if differing.is_empty() {
                Ok(())
            } else {
                Err(format!("differs in {}", differing.join(", ")))
            }
        });
    Gate {
        name: format!("golden {name}.json"),
        passed: result.is_ok(),
        detail: result.err().unwrap_or_else(|| "matches".into()),
    }
}

fn prove(which: Theorem, max_n: Option<usize>, format: Format, golden: Option<PathBuf>) -> Outcome {
    unsupported(format, &[Format::Human, Format::Json, Format::Csv])?;
    let (name, mut gates, sizes, json, summary) = match which {
        Theorem::Splitting => {
            let report = prove_splitting(max_n.unwrap_or(SPLITTING_FIXED_POINT + 1))?;
            let gates = splitting_gates(&report);
            let summary = match report.fixed_point_n {
                Some(n) => format!("fixed point n={n}\n"),
                None => "no fixed point within bound\n".into(),
            };
            let json = splitting_report_json(&report, &gates);
            ("splitting", gates, report.sizes, json, summary)
        }
        Theorem::Cosmological => {
            let report = prove_cosmological(&atomicf_transducer(), max_n.unwrap_or(COSMOLOGY_FIXED_POINT + 1))?;
            let verdict = verify_periodic_table(&report, PeriodicTable::get());
            let gates = cosmology_gates(&report, &verdict);
            let summary = match report.fixed_point_n {
                Some(n) => format!("E stabilizes at n={n} with {} elements\n", report.elements.len()),
                None => "no fixed point within bound\n".into(),
            };
            let json = cosmology_report_json(&report, &gates);
            ("cosmological", gates, report.sizes, json, summary)
        }
    };
    if let Some(dir) = golden {
        gates.push(golden_gate(&dir, name, &json));
    }
    let json = {
        let mut v: serde_json::Value = serde_json::from_str(&json).expect("report is JSON");
        v["verdict"]["passed"] = gates.iter().all(|g| g.passed).into();
        v["verdict"]["gates"] = serde_json::to_value(&gates).expect("gates serialize");
        format!("{}\n", serde_json::to_string_pretty(&v).expect("report serializes"))
    };
    let out = match format {
        Format::Json => json,
        Format::Csv => size_lines(&sizes, Format::Csv),
        _ => format!("{}{}{summary}", size_lines(&sizes, Format::Human), render_gates(&gates)),
    };
    if gates.iter().all(|g| g.passed) {
        Ok(out)
    } else {
        print!("{out}");
        let failed: Vec<&str> = gates.iter().filter(|g| !g.passed).map(|g| g.name.as_str()).collect();
        Err(Failure::Gate(format!("gates failed: {}", failed.join(", "))))
    }
}

fn export(machine: MachineId, format: Format) -> Outcome {
    let t = machine.build();
    match format {
        Format::Json => Ok(to_json(&t)),
        Format::Dot => Ok(to_dot(&t, &machine.to_string())),
        _ => Err(Failure::Usage("export supports --format json or --format dot".into())),
    }
}

fn verify_table(max_n: usize, format: Format) -> Outcome {
    unsupported(format, &[Format::Human, Format::Json])?;
    let report = prove_cosmological(&atomicf_transducer(), max_n)?;
    let verdict = verify_periodic_table(&report, PeriodicTable::get());
    let out = if format == Format::Json {
        format!("{}\n", serde_json::to_string_pretty(&verdict).expect("verdict serializes"))
    } else {
        let mut out = String::new();
        for w in &verdict.missing {
            let _ = writeln!(out, "missing: {w}");
        }
        for w in &verdict.extra {
            let _ = writeln!(out, "extra: {w}");
        }
        for (name, want, got) in &verdict.decay_mismatches {
            let _ = writeln!(out, "decay of {name}: expected {}, found {}", want.join(" "), got.join(" "));
        }
        for p in &verdict.not_closed {
            let _ = writeln!(out, "not an element: {p}");
        }
        let _ = writeln!(
            out,
            "{} elements enumerated, table {}",
            report.elements.len(),
            if verdict.passed() { "verified" } else { "NOT verified" }
        );
        out
    };
    if verdict.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Gate("periodic table verification failed".into()))
    }
}

fn audit(steps: usize, limit_states: usize, format: Format) -> Outcome {
    unsupported(format, &[Format::Human, Format::Json, Format::Csv])?;
    let sizes = audit_audio_src(steps, limit_states)?;
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::json!({ "sizes": sizes })),
        f => size_lines(&sizes, f),
    })
}

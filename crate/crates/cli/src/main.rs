use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use unmixed_core::braidspace::{diagonal_subspace, maximal_abelian_subracks, BraidError, Subrack, YDModule};
use unmixed_core::permgroup::UnmixedClass;
use unmixed_core::reps::{enumerate_irreps, RepChoice, RepSpec};
use unmixed_core::verdict::{decide, theorem1_oracle, EngineConfig, Outcome, Report, Verdict, SCHEMA};

const EXIT_UNDECIDED: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_INTERNAL: u8 = 70;

/// Decide infinite-dimensional Nichols algebras versus negative braidings
/// over unmixed conjugacy classes of symmetric groups.
#[derive(Parser, Debug)]
#[command(name = "unmixed", version)]
struct Cli {
    /// Worker threads; 0 lets the pool decide.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Cap on maximal abelian subracks examined by the clique search.
    #[arg(long, global = true, env = "UNMIXED_MAX_SUBRACKS", default_value_t = 2000)]
    max_subracks: usize,
    /// Largest class the unreduced checks will enumerate.
    #[arg(long, global = true, env = "UNMIXED_MAX_CLASS", default_value_t = 10_000_000)]
    max_class: u128,
    /// Check every commuting pair instead of one per centralizer orbit.
    #[arg(long, global = true)]
    no_symmetry: bool,
    /// Suppress timing on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Case {
    /// Cycle length.
    #[arg(long)]
    k: u32,
    /// Number of cycles.
    #[arg(long)]
    n: u32,
    /// Representation, e.g. "chi=k:3;mu=trivial" or "chi=(1,1);mu=sign".
    #[arg(long)]
    rep: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one representation.
    Classify {
        #[command(flatten)]
        case: Case,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify every irrep of the centralizer and compare with the closed form.
    Table {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generalized Dynkin diagram of a diagonal subspace, as DOT.
    Diagram {
        #[command(flatten)]
        case: Case,
        /// witness | powers | canonical | inversion | triple:i,j | quadruple:i,j
        #[arg(long, default_value = "witness")]
        subrack: String,
    },
}

enum Failure {
    Usage(String),
    Undecided(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Undecided(_) => EXIT_UNDECIDED,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Undecided(m) | Failure::Internal(m) => m,
        }
    }
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn resolve(k: u32, n: u32, rep: &str) -> Result<(UnmixedClass, RepChoice), Failure> {
    let class = UnmixedClass::new(k, n).map_err(|e| Failure::Usage(e.to_string()))?;
    let spec: RepSpec = rep
        .parse()
        .map_err(|e: unmixed_core::reps::RepError| Failure::Usage(e.to_string()))?;
    let choice = spec.resolve(k, n).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((class, choice))
}

fn text_report(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "class     ({}^{}) in S_{}", r.k, r.n, r.k * r.n);
    let _ = writeln!(s, "rep       {}", r.rep);
    let _ = writeln!(s, "degree    {}", r.degree);
    let _ = writeln!(s, "q_pi      {}", r.q_pi);
    let _ = writeln!(s, "outcome   {}", r.outcome);
    let _ = writeln!(s, "rule      {}", r.rule);
    let _ = writeln!(s, "detail    {}", r.detail);
    if let Some(c) = &r.negative {
        let _ = writeln!(
            s,
            "pairs     {} covered, {} checked{}",
            c.pairs_covered,
            c.pairs_checked,
            if c.reduced { " (reduced)" } else { "" }
        );
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "subrack   {}", w.label);
        for (t, g) in w.subrack.iter().zip(&w.transporters) {
            let _ = writeln!(s, "  {t}  via {g}");
        }
        let _ = writeln!(s, "basis     {}", w.basis.join(" "));
        let _ = writeln!(s, "Q");
        for row in &w.q {
            let _ = writeln!(s, "  {}", row.join(" "));
        }
        let verts: Vec<String> = w.vertices.iter().map(|v| w.basis[*v].clone()).collect();
        let _ = writeln!(s, "fires on  {}", verts.join(" "));
        if let Some(name) = &w.name {
            let _ = writeln!(s, "name      {name}");
        }
    }
    s
}

fn exit_for(outcome: Outcome) -> u8 {
    if outcome == Outcome::Undecided {
        EXIT_UNDECIDED
    } else {
        0
    }
}

fn classify(cfg: &EngineConfig, case: &Case, format: Format) -> Result<(String, u8), Failure> {
    let (_, choice) = resolve(case.k, case.n, &case.rep)?;
    let v = decide(case.k, case.n, &choice, cfg).map_err(internal)?;
    let report = Report::new(case.k, case.n, &choice, &v);
    let out = match format {
        Format::Text => text_report(&report),
        Format::Json => report.to_json() + "\n",
        Format::Dot => match &report.witness {
            Some(w) => w.diagram.clone(),
            None => {
                return Err(Failure::Usage(format!(
                    "outcome {} by {} carries no diagram; use the diagram command",
                    report.outcome, report.rule
                )))
            }
        },
    };
    Ok((out, exit_for(v.outcome)))
}

fn table(cfg: &EngineConfig, k: u32, n: u32, format: Format) -> Result<(String, u8), Failure> {
    UnmixedClass::new(k, n).map_err(|e| Failure::Usage(e.to_string()))?;
    let entries = enumerate_irreps(k, n);
    let rows: Vec<(RepChoice, Verdict, Option<Outcome>)> = entries
        .iter()
        .map(|e| {
            let v = decide(k, n, &e.choice, cfg).map_err(internal)?;
            Ok((e.choice.clone(), v, theorem1_oracle(k, n, &e.choice)))
        })
        .collect::<Result<_, Failure>>()?;
    let disagreements: Vec<usize> = rows
        .iter()
        .enumerate()
        .filter(|(_, (_, v, o))| v.outcome != Outcome::Undecided && o.is_some_and(|o| o != v.outcome))
        .map(|(i, _)| i + 1)
        .collect();
    let undecided = rows.iter().filter(|(_, v, _)| v.outcome == Outcome::Undecided).count();
    let out = match format {
        Format::Json => {
            let reports: Vec<serde_json::Value> = rows
                .iter()
                .map(|(c, v, o)| {
                    let mut r = serde_json::to_value(Report::new(k, n, c, v)).expect("report");
                    r["oracle"] = json!(o.map(|o| o.to_string()));
                    r
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "k": k,
                "n": n,
                "rows": reports,
                "undecided": undecided,
                "disagreements": disagreements,
            });
            serde_json::to_string_pretty(&doc).expect("table") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "# ({k}^{n}) in S_{}: {} irreps", k * n, rows.len());
            let _ = writeln!(s, "#  rep  degree  q_pi  outcome  rule  oracle");
            for (i, (c, v, o)) in rows.iter().enumerate() {
                let oracle = o.map_or("-".to_string(), |o| o.to_string());
                let _ = writeln!(
                    s,
                    "{:<3} {}  {}  {}  {}  {}  {}",
                    i + 1,
                    c,
                    c.degree(),
                    c.pi_root().reduced(),
                    v.outcome,
                    v.rule,
                    oracle
                );
            }
            let _ = writeln!(s, "# undecided {undecided}, disagreements {}", disagreements.len());
            s
        }
        Format::Dot => return Err(Failure::Usage("table has no DOT form".into())),
    };
    if !disagreements.is_empty() {
        let rows: Vec<String> = disagreements.iter().map(usize::to_string).collect();
        return Err(Failure::Internal(format!(
            "{out}closed form disagrees on rows {}",
            rows.join(", ")
        )));
    }
    Ok((out, if undecided > 0 { EXIT_UNDECIDED } else { 0 }))
}

fn pair(s: &str) -> Result<(u32, u32), Failure> {
    let bad = || Failure::Usage(format!("expected i,j in {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn named_subrack(class: &UnmixedClass, sel: &str) -> Result<Subrack, Failure> {
    let usage = |e: BraidError| Failure::Usage(e.to_string());
    match sel.split_once(':') {
        Some(("triple", ij)) => {
            let (i, j) = pair(ij)?;
            Subrack::block_pair_triple(class, i, j).map_err(usage)
        }
        Some(("quadruple", ij)) => {
            let (i, j) = pair(ij)?;
            Subrack::quadruple(class, i, j).map_err(usage)
        }
        _ => match sel {
            "powers" => Subrack::powers(class).map_err(usage),
            "canonical" => Subrack::canonical(class).map_err(usage),
            "inversion" => Subrack::inversion_quadruple(class).map_err(usage),
            _ => Err(Failure::Usage(format!("unknown subrack selector {sel:?}"))),
        },
    }
}

fn diagram(cfg: &EngineConfig, case: &Case, sel: &str) -> Result<(String, u8), Failure> {
    let (class, choice) = resolve(case.k, case.n, &case.rep)?;
    if sel == "witness" {
        let v = decide(case.k, case.n, &choice, cfg).map_err(internal)?;
        if let Some(w) = v.witness {
            return Ok((w.subspace.diagram().to_dot(), 0));
        }
    }
    if !choice.is_cataloged() {
        return Err(Failure::Undecided(format!("{choice} is outside the built-in catalog")));
    }
    let yd = YDModule::new(choice.build(&class).map_err(internal)?);
    let t = if sel == "witness" {
        // no witness: show the largest maximal abelian subrack through π
        let inv = maximal_abelian_subracks(&yd, cfg.symmetry_reduction, cfg.max_subracks)
            .map_err(|e| Failure::Undecided(e.to_string()))?;
        inv.orbits[0].subrack.clone()
    } else {
        named_subrack(&class, sel)?
    };
    match diagonal_subspace(&yd, &t) {
        Ok(w) => Ok((w.diagram().to_dot(), 0)),
        Err(e @ BraidError::NonSimultaneous { .. }) => Err(Failure::Undecided(e.to_string())),
        Err(e) => Err(internal(e)),
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let cfg = EngineConfig {
        max_class_size: cli.max_class,
        max_subracks: cli.max_subracks,
        symmetry_reduction: !cli.no_symmetry,
        ..EngineConfig::default()
    };
    match &cli.command {
        Command::Classify { case, format } => classify(&cfg, case, *format),
        Command::Table { k, n, format } => table(&cfg, *k, *n, *format),
        Command::Diagram { case, subrack } => diagram(&cfg, case, subrack),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("unmixed: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    }
    let start = Instant::now();
    let result = run(&cli);
    if !cli.quiet {
        eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("unmixed: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

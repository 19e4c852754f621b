//! Batch interface for moment-angle complex cohomology: Betti tables, ring
//! presentations, bigraded tables, the polytopal ring, and the verification
//! suites, over simplicial-complex JSON input.
//!
//! Exit codes: 0 success, 2 malformed input, 3 illegal flag combination,
//! 4 truncation/degree-range violation, 5 verification failure.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use macx_core::hochster::{self, BettiTable};
use macx_core::homology::{CoefficientRing, CohomologyGroup};
use macx_core::models::{build_model, Arena, Family, ModelVariant};
use macx_core::polytope;
use macx_core::ring::{cohomology_ring, RingPresentation};
use macx_core::simplicial::SimplicialComplex;
use macx_core::verify::{self, SuiteOutcome};
use macx_core::vertex_set::VertexSet;
use macx_core::Error;

#[derive(Parser)]
#[command(
    name = "macx",
    version,
    about = "Cohomology rings of moment-angle complexes from simplicial input"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Total cohomology of the moment-angle complex, degree by degree.
    Betti {
        /// Input complex as JSON: {"m": 4, "facets": [[1,2],[3]]}.
        input: PathBuf,
        /// Arena: complex, real, or disk:n.
        #[arg(long, default_value = "complex")]
        arena: String,
        /// Write the artifact here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Presentation of the cohomology ring of an algebra-side model.
    Ring {
        input: PathBuf,
        #[arg(long, default_value = "complex")]
        arena: String,
        /// Model family: b (finite) or a (truncated; with --arena real this
        /// is the mod-2 model and needs --coeff zp:2).
        #[arg(long, default_value = "b")]
        model: String,
        /// Coefficients: z, q, or zp:p.
        #[arg(long, default_value = "z")]
        coeff: String,
        /// Largest degree reported; mandatory for the truncated families.
        #[arg(long)]
        maxdeg: Option<i64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bigraded Betti table with the model-vs-topological comparison.
    Hochster {
        input: PathBuf,
        #[arg(long, default_value = "complex")]
        arena: String,
        /// Restrict rows to one support, e.g. --alpha 1,3.
        #[arg(long)]
        alpha: Option<String>,
        /// Output format: json or csv.
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Ring of the polytopal model; the input is read as the boundary
    /// complex dual to a simple polytope.
    Glm {
        input: PathBuf,
        #[arg(long)]
        maxdeg: Option<i64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the invariant suites on a complex and exit nonzero on failure.
    Verify {
        /// Input complex; omitted means a seeded random complex.
        input: Option<PathBuf>,
        /// Seed for the random complex and all sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ground-set size of the random complex (ignored with an input).
        #[arg(long = "random-m", default_value_t = 5)]
        random_m: usize,
    },
}

/// One fully resolved batch job.
struct JobSpec {
    command: Command,
    input: Option<PathBuf>,
    arena: Arena,
    family: Family,
    coeff: CoefficientRing,
    maxdeg: Option<i64>,
    alpha: Option<VertexSet>,
    format: OutputFormat,
    output: Option<PathBuf>,
    seed: u64,
    random_m: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Command {
    Betti,
    Ring,
    Hochster,
    Glm,
    Verify,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Json,
    Csv,
}

/// A failure annotated with its process exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::Parse(_) | Error::VertexOutOfRange { .. } | Error::NotASubcomplex(_) => 2,
            Error::InvalidVariant(_) | Error::ModulusNotPrime(_) | Error::WrongComponent(_) => 3,
            Error::TruncationRequired(_)
            | Error::OutsideTrustedRange { .. }
            | Error::MaxDegreeUntrusted(_) => 4,
            Error::Verification(_) | Error::LiftFailure(_) => 5,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn flags(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

fn io_failure(message: String) -> Failure {
    Failure { code: 2, message }
}

fn parse_arena(text: &str) -> Result<Arena, Failure> {
    match text {
        "complex" => Ok(Arena::Complex { n: 2 }),
        "real" => Ok(Arena::Real),
        other => match other.strip_prefix("disk:") {
            Some(rest) => {
                let n: i64 = rest
                    .parse()
                    .map_err(|_| flags(format!("disk parameter `{rest}` is not an integer")))?;
                Arena::disk(n).map_err(Failure::from)
            }
            None => Err(flags(format!(
                "unknown arena `{other}`; use complex, real, or disk:n"
            ))),
        },
    }
}

fn parse_coeff(text: &str) -> Result<CoefficientRing, Failure> {
    match text {
        "z" => Ok(CoefficientRing::Z),
        "q" => Ok(CoefficientRing::Q),
        other => match other.strip_prefix("zp:") {
            Some(rest) => {
                let p: u64 = rest
                    .parse()
                    .map_err(|_| flags(format!("modulus `{rest}` is not an integer")))?;
                Ok(CoefficientRing::Zp(p))
            }
            None => Err(flags(format!(
                "unknown coefficient ring `{other}`; use z, q, or zp:p"
            ))),
        },
    }
}

fn parse_alpha(text: &str) -> Result<VertexSet, Failure> {
    let mut out = VertexSet::empty();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: usize = part
            .parse()
            .map_err(|_| flags(format!("support element `{part}` is not an integer")))?;
        if !(1..=macx_core::vertex_set::MAX_VERTICES).contains(&v) {
            return Err(flags(format!("support element {v} is out of range")));
        }
        out = out.insert(v);
    }
    Ok(out)
}

fn parse_format(text: &str) -> Result<OutputFormat, Failure> {
    match text {
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        other => Err(flags(format!("unknown format `{other}`; use json or csv"))),
    }
}

impl JobSpec {
    fn from_cli(cli: Cli) -> Result<JobSpec, Failure> {
        let mut job = JobSpec {
            command: Command::Verify,
            input: None,
            arena: Arena::Complex { n: 2 },
            family: Family::B,
            coeff: CoefficientRing::Z,
            maxdeg: None,
            alpha: None,
            format: OutputFormat::Json,
            output: None,
            seed: 0,
            random_m: 5,
        };
        match cli.command {
            CliCommand::Betti {
                input,
                arena,
                output,
            } => {
                job.command = Command::Betti;
                job.input = Some(input);
                job.arena = parse_arena(&arena)?;
                job.output = output;
            }
            CliCommand::Ring {
                input,
                arena,
                model,
                coeff,
                maxdeg,
                output,
            } => {
                job.command = Command::Ring;
                job.input = Some(input);
                job.arena = parse_arena(&arena)?;
                job.family = Family::parse(&model).map_err(Failure::from)?;
                job.coeff = parse_coeff(&coeff)?;
                job.maxdeg = maxdeg;
                job.output = output;
            }
            CliCommand::Hochster {
                input,
                arena,
                alpha,
                format,
                output,
            } => {
                job.command = Command::Hochster;
                job.input = Some(input);
                job.arena = parse_arena(&arena)?;
                job.alpha = alpha.as_deref().map(parse_alpha).transpose()?;
                job.format = parse_format(&format)?;
                job.output = output;
            }
            CliCommand::Glm {
                input,
                maxdeg,
                output,
            } => {
                job.command = Command::Glm;
                job.input = Some(input);
                job.arena = Arena::Real;
                job.maxdeg = maxdeg;
                job.output = output;
            }
            CliCommand::Verify {
                input,
                seed,
                random_m,
            } => {
                job.command = Command::Verify;
                job.input = input;
                job.seed = seed;
                job.random_m = random_m;
            }
        }
        Ok(job)
    }
}

#[derive(Deserialize)]
struct ComplexInput {
    m: usize,
    facets: Vec<Vec<usize>>,
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| io_failure(format!("cannot read {}: {e}", path.display())))?;
    let input: ComplexInput = serde_json::from_str(&text)
        .map_err(|e| io_failure(format!("{}: {e}", path.display())))?;
    let refs: Vec<&[usize]> = input.facets.iter().map(|f| f.as_slice()).collect();
    SimplicialComplex::from_facet_lists(input.m, &refs).map_err(Failure::from)
}

#[derive(Serialize)]
struct GroupOut {
    degree: i64,
    rank: usize,
    torsion: Vec<String>,
}

fn group_out(g: &CohomologyGroup) -> GroupOut {
    GroupOut {
        degree: g.degree,
        rank: g.free_rank,
        torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
    }
}

#[derive(Serialize)]
struct BettiOut {
    m: usize,
    arena: String,
    groups: Vec<GroupOut>,
}

#[derive(Serialize)]
struct RowOut {
    alpha: Vec<usize>,
    degree: i64,
    rank: usize,
    torsion: Vec<String>,
}

#[derive(Serialize)]
struct TableOut {
    m: usize,
    arena: String,
    agrees_with_topological: bool,
    rows: Vec<RowOut>,
}

#[derive(Serialize)]
struct GeneratorOut {
    name: String,
    degree: i64,
    /// "0" for a free generator, the torsion order otherwise.
    order: String,
}

#[derive(Serialize)]
struct RingOut {
    m: usize,
    arena: String,
    model: String,
    coefficients: String,
    maxdeg: i64,
    groups: Vec<GroupOut>,
    generators: Vec<GeneratorOut>,
    /// (left, right, target, coefficient) for every stored nonzero
    /// structure constant.
    products: Vec<(usize, usize, usize, String)>,
}

fn arena_label(arena: Arena) -> String {
    match arena {
        Arena::Complex { n: 2 } => "complex".to_string(),
        Arena::Complex { n } | Arena::Odd { n } => format!("disk:{n}"),
        Arena::Real => "real".to_string(),
        Arena::RealMod2 => "real-mod2".to_string(),
    }
}

fn coeff_label(coeff: CoefficientRing) -> String {
    match coeff {
        CoefficientRing::Z => "z".to_string(),
        CoefficientRing::Q => "q".to_string(),
        CoefficientRing::Zp(p) => format!("zp:{p}"),
    }
}

fn ring_out(
    m: usize,
    arena_name: String,
    model_name: String,
    ring: &RingPresentation,
) -> RingOut {
    let groups = (0..=ring.maxdeg)
        .map(|k| group_out(&ring.group_in_degree(k)))
        .collect();
    let generators = ring
        .generators
        .iter()
        .map(|g| GeneratorOut {
            name: g.name.clone(),
            degree: g.degree,
            order: g.order.to_string(),
        })
        .collect();
    let mut products = Vec::new();
    for (&(i, j), terms) in &ring.products {
        for (t, c) in terms {
            products.push((i, j, *t, c.to_string()));
        }
    }
    RingOut {
        m,
        arena: arena_name,
        model: model_name,
        coefficients: coeff_label(ring.coefficients),
        maxdeg: ring.maxdeg,
        groups,
        generators,
        products,
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let body = serde_json::to_string_pretty(value)
        .map_err(|e| io_failure(format!("serialization failed: {e}")))?;
    Ok(format!("{body}\n"))
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| io_failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run_betti(job: &JobSpec, sigma: &SimplicialComplex) -> Result<(), Failure> {
    let table = hochster::hochster_table_model(sigma, job.arena)?;
    let groups = hochster::assemble_poincare(sigma, job.arena, &table)?;
    let out = BettiOut {
        m: sigma.m(),
        arena: arena_label(job.arena),
        groups: groups.iter().map(group_out).collect(),
    };
    emit(&job.output, &to_json(&out)?)
}

fn run_ring(job: &JobSpec, sigma: &SimplicialComplex) -> Result<(), Failure> {
    if !job.family.has_product() {
        return Err(flags(format!(
            "family {} carries a coproduct, not a product; choose a or b",
            job.family
        )));
    }
    let mut arena = job.arena;
    if job.family == Family::A && arena == Arena::Real {
        arena = Arena::RealMod2;
    }
    if arena == Arena::RealMod2 && job.coeff != CoefficientRing::Zp(2) {
        return Err(flags(
            "the mod-2 real algebra model is only defined over zp:2".to_string(),
        ));
    }
    let variant = if job.family.is_infinite() {
        match job.maxdeg {
            Some(d) => ModelVariant::truncated(job.family, arena, d),
            None => {
                return Err(Failure {
                    code: 4,
                    message: format!(
                        "family {} has infinite rank; --maxdeg is required",
                        job.family
                    ),
                })
            }
        }
    } else {
        ModelVariant::new(job.family, arena)
    };
    let model = build_model(sigma, variant)?;
    let top = model.complex().degrees().last().copied().unwrap_or(0);
    let default_cutoff = top.min(2 * sigma.m() as i64 * arena.poly_degree());
    let maxdeg = job.maxdeg.unwrap_or(default_cutoff);
    let ring = cohomology_ring(&model, maxdeg, job.coeff)?;
    let out = ring_out(
        sigma.m(),
        arena_label(arena),
        job.family.to_string(),
        &ring,
    );
    emit(&job.output, &to_json(&out)?)
}

fn table_rows(table: &BettiTable, alpha: Option<VertexSet>) -> Vec<RowOut> {
    table
        .rows()
        .into_iter()
        .filter(|row| alpha.is_none_or(|a| row.0 == a))
        .map(|(a, degree, rank, torsion)| RowOut {
            alpha: a.iter().collect(),
            degree,
            rank,
            torsion: torsion.iter().map(|t| t.to_string()).collect(),
        })
        .collect()
}

fn rows_to_csv(rows: &[RowOut]) -> String {
    let mut out = String::from("alpha,degree,rank,torsion\n");
    for row in rows {
        let alpha = row
            .alpha
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{alpha},{},{},{}\n",
            row.degree,
            row.rank,
            row.torsion.join(";")
        ));
    }
    out
}

fn run_hochster(job: &JobSpec, sigma: &SimplicialComplex) -> Result<(), Failure> {
    if let Some(alpha) = job.alpha {
        if !alpha.is_subset_of(VertexSet::full(sigma.m())) {
            return Err(flags(format!(
                "--alpha {alpha} is not a subset of the ground set 1..={}",
                sigma.m()
            )));
        }
    }
    let model = hochster::hochster_table_model(sigma, job.arena)?;
    let topological = hochster::hochster_table_topological(sigma)?;
    let rows = table_rows(&model, job.alpha);
    let content = match job.format {
        OutputFormat::Json => to_json(&TableOut {
            m: sigma.m(),
            arena: arena_label(job.arena),
            agrees_with_topological: model == topological,
            rows,
        })?,
        OutputFormat::Csv => rows_to_csv(&rows),
    };
    emit(&job.output, &content)
}

fn run_glm(job: &JobSpec, sigma: &SimplicialComplex) -> Result<(), Failure> {
    let maxdeg = job.maxdeg.unwrap_or(sigma.m() as i64);
    let ring = polytope::glm_ring(sigma, maxdeg)?;
    let out = ring_out(sigma.m(), "real".to_string(), "glm".to_string(), &ring);
    emit(&job.output, &to_json(&out)?)
}

fn run_suites(sigma: &SimplicialComplex, seed: u64) -> Vec<SuiteOutcome> {
    type Suite<'a> = Box<dyn Fn() -> macx_core::error::Result<()> + Send + Sync + 'a>;
    let suites: Vec<(&'static str, Suite)> = vec![
        ("d-squared", Box::new(move || verify::d_squared_suite(sigma))),
        ("leibniz", Box::new(move || verify::leibniz_suite(sigma))),
        ("duality", Box::new(move || verify::duality_suite(sigma))),
        (
            "mayer-vietoris",
            Box::new(move || verify::mayer_vietoris_suite(sigma, seed)),
        ),
        (
            "quasi-isomorphisms",
            Box::new(move || verify::quasi_iso_suite(sigma)),
        ),
        ("hochster", Box::new(move || verify::hochster_suite(sigma))),
        (
            "overlap-vanishing",
            Box::new(move || verify::overlap_suite(sigma, seed)),
        ),
        (
            "graded-commutativity",
            Box::new(move || verify::commutativity_suite(sigma)),
        ),
        (
            "idempotency",
            Box::new(move || verify::idempotency_suite(sigma.m())),
        ),
        (
            "polytope-diagrams",
            Box::new(move || verify::polytope_suite(sigma, seed)),
        ),
    ];
    suites
        .par_iter()
        .map(|(name, suite)| match suite() {
            Ok(()) => SuiteOutcome {
                name,
                passed: true,
                detail: "ok".to_string(),
            },
            Err(e) => SuiteOutcome {
                name,
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect()
}

fn run_verify(job: &JobSpec) -> Result<(), Failure> {
    let (sigma, source) = match &job.input {
        Some(path) => (load_complex(path)?, format!("file {}", path.display())),
        None => (
            verify::random_complex(job.seed, job.random_m),
            "seeded random".to_string(),
        ),
    };
    let facets = sigma
        .facets()
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    println!("# seed: {}", job.seed);
    println!("# complex: {source}; m={}; facets: {facets}", sigma.m());
    let outcomes = run_suites(&sigma, job.seed);
    let mut failed = 0;
    for outcome in &outcomes {
        if outcome.passed {
            println!("{}: pass", outcome.name);
        } else {
            failed += 1;
            println!("{}: FAIL — {}", outcome.name, outcome.detail);
        }
    }
    if failed == 0 {
        println!("result: ok ({} suites)", outcomes.len());
        Ok(())
    } else {
        println!("result: {failed} of {} suites failed", outcomes.len());
        Err(Failure {
            code: 5,
            message: format!("{failed} verification suite(s) failed"),
        })
    }
}

fn run(job: &JobSpec) -> Result<(), Failure> {
    if job.command == Command::Verify {
        return run_verify(job);
    }
    let path = job.input.as_ref().expect("non-verify commands take input");
    let sigma = load_complex(path)?;
    match job.command {
        Command::Betti => run_betti(job, &sigma),
        Command::Ring => run_ring(job, &sigma),
        Command::Hochster => run_hochster(job, &sigma),
        Command::Glm => run_glm(job, &sigma),
        Command::Verify => unreachable!("handled above"),
    }
}

fn init_threads() {
    if let Ok(value) = std::env::var("MACX_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring MACX_THREADS={value} (expected a positive integer)"),
        }
    }
}

fn main() {
    init_threads();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let job = match JobSpec::from_cli(cli) {
        Ok(job) => job,
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    };
    if let Err(f) = run(&job) {
        eprintln!("error: {}", f.message);
        std::process::exit(f.code);
    }
}

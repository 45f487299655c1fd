//! `kount`: generate complexes, emit their matrices, spectra and zeta grids, and run the
//! verification suite.
//!
//! Exit codes: 0 success, 1 a theorem check failed, 2 bad input or flags.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use kount::complex::{
    barycentric_refinement, random_complex, standard_complex, suspension, whitney_complex, StandardKind,
};
use kount::io::{complex_to_json, matrix_to_csv, matrix_to_json, parse_complex, parse_graph};
use kount::matrices::{
    connection_green_inverse, connection_matrix, counting_family, counting_family_green, counting_matrix,
    green_star_inverse, parametrized_green, parametrized_matrix, require_simplicial, supercharge,
};
use kount::ring::{disjoint_union, kronecker, representation_check};
use kount::spectra::{eigenvalues_sym, Region, ZetaFunction, DEFAULT_TOL};
use kount::verify::{verify, VerifyOptions};
use kount::{AnyComplex, CwComplex, Error, Matrix, SimplicialComplex};

#[derive(Parser)]
#[command(name = "kount", version, about = "Counting matrices of simplicial and CW complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a complex and write it as canonical JSON.
    Gen {
        #[command(flatten)]
        source: Source,
        /// Output file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit one of the exact matrices of a complex.
    Matrix {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "k")]
        which: Which,
        /// Parameter `p/q` for the parametrized matrices.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem suite; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Functional-equation samples.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed of the functional-equation sample points.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Functional-equation tolerance, multiplied by n.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Reciprocal-pairing tolerance, multiplied by the condition number.
        #[arg(long, default_value_t = 1e-7)]
        pairing_tol: f64,
        /// Sample points for the parametrized family (repeatable); default 2, -2, 1/3.
        #[arg(long = "t", allow_hyphen_values = true)]
        t_values: Vec<String>,
        /// Also assert the literal L_t inverse and determinant identities.
        #[arg(long)]
        literal_lt: bool,
        /// Record per-check timings.
        #[arg(long)]
        timings: bool,
        /// Write the report as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Output file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample |ζ| and arg ζ on a rectangle; CSV `re,im,abs,arg`.
    Zeta {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = -4.0, allow_hyphen_values = true)]
        re_min: f64,
        #[arg(long, default_value_t = 4.0, allow_hyphen_values = true)]
        re_max: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        im_min: f64,
        #[arg(long, default_value_t = 30.0, allow_hyphen_values = true)]
        im_max: f64,
        /// Lattice step along both axes.
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        /// Output file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues of K (or L, Q) as JSON.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "k")]
        which: SpectrumOf,
        /// Jacobi rotation threshold, relative to the diagonal entries.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Output file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Disjoint union and product of two simplicial complexes.
    Ring {
        #[command(flatten)]
        op: RingOp,
        /// Complex file of the left factor.
        left: PathBuf,
        /// Complex file of the right factor.
        right: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct RingOp {
    /// K(G + H) of the disjoint union.
    #[arg(long)]
    sum: bool,
    /// K(G) ⊗ K(H).
    #[arg(long)]
    kronecker: bool,
    /// Representation report, including the pair-entry product formula against K(G) ⊗ K(H).
    #[arg(long)]
    product: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Complex file (generators, sets or cells).
    #[arg(long = "in", value_name = "FILE")]
    path: Option<PathBuf>,
    /// Complex file, as a positional argument.
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
    /// Whitney complex of the star graph with N spikes.
    #[arg(long, value_name = "N")]
    star: Option<usize>,
    /// Cyclic complex C_N.
    #[arg(long, value_name = "N")]
    cycle: Option<usize>,
    /// All nonempty subsets of {1..N}.
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    /// Boundary of the cross polytope, a D-sphere.
    #[arg(long, value_name = "D")]
    cross_polytope: Option<usize>,
    /// Random complex on N vertices from M generators.
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    random: Option<Vec<u32>>,
    /// Whitney complex of a graph file.
    #[arg(long, value_name = "FILE")]
    whitney: Option<PathBuf>,
}

#[derive(Args)]
struct Source {
    #[command(flatten)]
    input: Input,
    /// Seed for `--random`.
    #[arg(long = "complex-seed", default_value_t = 0)]
    complex_seed: u64,
    /// Suspend the complex (applied before refinement).
    #[arg(long)]
    suspend: bool,
    /// Barycentric refinement.
    #[arg(long)]
    refine: bool,
    /// Attach one more cell to every cell, giving a CW complex.
    #[arg(long)]
    cone: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    K,
    Kinv,
    L,
    Linv,
    Lt,
    Gt,
    Kt,
    Ktinv,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumOf {
    K,
    L,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_input_error() { 2 } else { 1 }, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure { code: 1, message: format!("cannot write to stdout: {e}") }),
    }
}

fn parse_t(s: &str) -> Result<BigRational, Failure> {
    s.trim().parse::<BigRational>().map_err(|_| input_error(format!("t must be p/q, got {s:?}")))
}

struct Loaded {
    complex: AnyComplex,
    names: Option<Vec<String>>,
}

fn load(src: &Source) -> Result<Loaded, Failure> {
    let i = &src.input;
    let simplicial = |g: SimplicialComplex| Loaded { complex: g.into(), names: None };
    let mut loaded = if let Some(p) = i.path.as_ref().or(i.file.as_ref()) {
        let l = parse_complex(&read(p)?)?;
        Loaded { complex: l.complex, names: l.vertex_names }
    } else if let Some(n) = i.star {
        simplicial(standard_complex(StandardKind::Star, n)?)
    } else if let Some(n) = i.cycle {
        simplicial(standard_complex(StandardKind::Cycle, n)?)
    } else if let Some(n) = i.complete {
        simplicial(standard_complex(StandardKind::Complete, n)?)
    } else if let Some(d) = i.cross_polytope {
        simplicial(standard_complex(StandardKind::CrossPolytope, d)?)
    } else if let Some(nm) = &i.random {
        simplicial(random_complex(nm[0], nm[1], src.complex_seed)?)
    } else if let Some(p) = &i.whitney {
        simplicial(whitney_complex(&parse_graph(&read(p)?)?))
    } else {
        return Err(input_error("no complex given"));
    };
    if src.suspend || src.refine {
        let g = require_simplicial(&loaded.complex)?.clone();
        let g = if src.suspend { suspension(&g) } else { g };
        let g = if src.refine { barycentric_refinement(&g) } else { g };
        loaded = Loaded { complex: g.into(), names: None };
    }
    if src.cone {
        let cw = match &loaded.complex {
            AnyComplex::Simplicial(g) => CwComplex::from(g),
            AnyComplex::Cw(c) => c.clone(),
        };
        loaded = Loaded { complex: cw.cone_cell()?.into(), names: None };
    }
    Ok(loaded)
}

fn simplicial_file(path: &Path) -> Result<SimplicialComplex, Failure> {
    let l = parse_complex(&read(path)?)?;
    Ok(require_simplicial(&l.complex)?.clone())
}

fn render<T: std::fmt::Display>(m: &Matrix<T>, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => matrix_to_json(m),
        Format::Csv => matrix_to_csv(m)?,
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { source, out } => {
            let l = load(&source)?;
            let json = complex_to_json(&l.complex, l.names.as_deref());
            let c = &l.complex;
            let summary = format!(
                "n={} f={:?} chi={}",
                kount::CellComplex::cell_count(c),
                c.f_vector().counts(),
                c.euler_characteristic()
            );
            match out {
                Some(p) => {
                    emit(Some(&p), &json)?;
                    println!("{summary}");
                }
                None => {
                    emit(None, &json)?;
                    eprintln!("{summary}");
                }
            }
            Ok(0)
        }
        Command::Matrix { source, which, t, format, out } => {
            let l = load(&source)?;
            let c = &l.complex;
            let t = t.as_deref().map(parse_t).transpose()?;
            let need_t = || t.clone().ok_or_else(|| input_error("this matrix needs --t p/q"));
            let text = match which {
                Which::K => render(&counting_matrix(c), format)?,
                Which::Kinv => render(&green_star_inverse(c), format)?,
                Which::Q => render(&supercharge(c), format)?,
                Which::L => render(&connection_matrix(require_simplicial(c)?), format)?,
                Which::Linv => render(&connection_green_inverse(require_simplicial(c)?), format)?,
                Which::Lt => render(&parametrized_matrix(require_simplicial(c)?, &need_t()?)?, format)?,
                Which::Gt => render(&parametrized_green(require_simplicial(c)?, &need_t()?)?, format)?,
                Which::Kt => render(&counting_family(require_simplicial(c)?, &need_t()?)?, format)?,
                Which::Ktinv => render(&counting_family_green(require_simplicial(c)?, &need_t()?)?, format)?,
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify {
            source,
            samples,
            seed,
            tol,
            pairing_tol,
            t_values,
            literal_lt,
            timings,
            json,
            out,
        } => {
            let l = load(&source)?;
            let mut opts = VerifyOptions {
                samples,
                seed,
                fe_tol: tol,
                pairing_tol,
                literal_lt,
                record_timings: timings,
                ..VerifyOptions::default()
            };
            if !t_values.is_empty() {
                opts.t_values = t_values.iter().map(|s| parse_t(s)).collect::<Result<_, _>>()?;
            }
            let report = verify(&l.complex, &opts)?;
            let text = if json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.to_text()
            };
            emit(out.as_deref(), &text)?;
            match report.first_failure() {
                None => Ok(0),
                Some(f) => {
                    eprintln!("first failing check: {}", f.name);
                    Ok(1)
                }
            }
        }
        Command::Zeta { source, re_min, re_max, im_min, im_max, step, out } => {
            let l = load(&source)?;
            let zeta = ZetaFunction::for_matrix(&counting_matrix(&l.complex), DEFAULT_TOL)?;
            let grid = zeta.grid(Region { re_min, re_max, im_min, im_max }, step, step)?;
            emit(out.as_deref(), &grid.to_csv_string()?)?;
            Ok(0)
        }
        Command::Spectrum { source, which, tol, out } => {
            if !(tol > 0.0) {
                return Err(input_error("--tol must be positive"));
            }
            let l = load(&source)?;
            let c = &l.complex;
            let m = match which {
                SpectrumOf::K => counting_matrix(c),
                SpectrumOf::L => connection_matrix(require_simplicial(c)?),
                SpectrumOf::Q => supercharge(c),
            };
            let spec = eigenvalues_sym(&m, tol)?;
            emit(out.as_deref(), &(serde_json::to_string_pretty(&spec).expect("spectrum serializes") + "\n"))?;
            Ok(0)
        }
        Command::Ring { op, left, right, format, out } => {
            let g = simplicial_file(&left)?;
            let h = simplicial_file(&right)?;
            if op.sum {
                emit(out.as_deref(), &render(&disjoint_union(&g, &h).counting_matrix(), format)?)?;
                return Ok(0);
            }
            if op.kronecker {
                let k = kronecker(&counting_matrix(&g), &counting_matrix(&h));
                emit(out.as_deref(), &render(&k, format)?)?;
                return Ok(0);
            }
            let names = [left.display().to_string(), right.display().to_string()];
            let report = representation_check([&names[0], &names[1]], &g, &h);
            emit(out.as_deref(), &(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"))?;
            Ok(if report.pass { 0 } else { 1 })
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("KOUNT_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| input_error(format!("KOUNT_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure { code: 1, message: format!("cannot start thread pool: {e}") })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match configure_threads().and_then(|()| run(cli)) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

//! Command-line front end: load algebras, connections, representations and
//! symplectic forms from JSON files, run every check, build the catalog
//! families, and emit reports.
//!
//! Exit codes: 0 = all checks passed (or a verdict was computed), 1 = a
//! mathematical check failed (the report is still written), 2 = usage or
//! input error. All numeric options are exact rationals `p/q`; output is
//! deterministic given the inputs and `--seed`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use affine_lie::catalog::{
    heisenberg_connection, ln_connection, ln_representation, verify_paper_seeded, LnFamilyParams,
};
use affine_lie::connection::{symplectic_connection, AffineConnection, SymplecticForm};
use affine_lie::io::{
    read_json_file, to_canonical_json, write_file, AlgebraFile, ConnectionFile, IoError, RepFile,
    ReportFile, ThetaFile,
};
use affine_lie::lie::LieAlgebra;
use affine_lie::rep::Representation;
use affine_lie::scalar::Scalar;

#[derive(Parser)]
#[command(
    name = "affine-lie",
    version,
    about = "Exact verification of affine (left-symmetric) structures on nilpotent Lie algebras"
)]
struct Cli {
    /// Output format for verdicts and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the deterministic witness-search sweep.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file (antisymmetry and Jacobi identity).
    CheckAlgebra { file: PathBuf },
    /// Validate a connection file (torsion and flatness) over an algebra.
    CheckConnection {
        #[arg(long)]
        algebra: PathBuf,
        file: PathBuf,
    },
    /// Validate a representation file (homomorphism identity) over an algebra.
    CheckRep {
        #[arg(long)]
        algebra: PathBuf,
        file: PathBuf,
    },
    /// Build the induced (n+1)-dimensional faithful representation of a
    /// connection.
    BuildRho {
        #[arg(long)]
        algebra: PathBuf,
        connection: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extract the connection from an affine-shaped representation.
    ExtractConnection {
        #[arg(long)]
        algebra: PathBuf,
        rep: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide completeness (R_X nilpotent for all X) of a connection.
    Completeness {
        #[arg(long)]
        algebra: PathBuf,
        connection: PathBuf,
    },
    /// Twist a faithful representation into a faithful nilpotent one.
    Nilpotentize {
        #[arg(long)]
        algebra: PathBuf,
        rep: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the generalized weight decomposition of a representation.
    Weights {
        #[arg(long)]
        algebra: PathBuf,
        rep: PathBuf,
    },
    /// Validate a symplectic form and build its induced connection.
    Symplectic {
        #[arg(long)]
        algebra: PathBuf,
        theta: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a catalog family as a file (connection, representation or algebra).
    Catalog {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "0", value_parser = parse_scalar_arg)]
        a: Scalar,
        #[arg(long, default_value = "0", value_parser = parse_scalar_arg)]
        alpha: Scalar,
        #[arg(long, default_value = "0", value_parser = parse_scalar_arg)]
        beta: Scalar,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the underlying algebra file.
        #[arg(long)]
        algebra_output: Option<PathBuf>,
    },
    /// Run every family check at one parameter point and report.
    VerifyPaper {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0", value_parser = parse_scalar_arg)]
        a: Scalar,
        #[arg(long, default_value = "0", value_parser = parse_scalar_arg)]
        alpha: Scalar,
        #[arg(long, default_value = "0", value_parser = parse_scalar_arg)]
        beta: Scalar,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Dimension-3 connection family on the Heisenberg algebra.
    Heisenberg,
    /// Connection family on the n-dimensional filiform model algebra.
    LnConnection,
    /// (n+1)-dimensional representation family on the filiform model algebra.
    LnRep,
    /// The filiform model algebra itself.
    ModelFiliform,
    /// The abelian algebra.
    Abelian,
}

fn parse_scalar_arg(s: &str) -> Result<Scalar, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// A command failure with its exit code: 1 = mathematical check failed,
/// 2 = usage or input error.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn math(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Math(err) => Failure::math(err.to_string()),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<affine_lie::Error> for Failure {
    fn from(e: affine_lie::Error) -> Self {
        Failure::math(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_algebra(path: &Path) -> Result<LieAlgebra, Failure> {
    let file: AlgebraFile = read_json_file(path)?;
    Ok(file.into_algebra()?)
}

fn load_connection(path: &Path, algebra: &LieAlgebra) -> Result<AffineConnection, Failure> {
    let file: ConnectionFile = read_json_file(path)?;
    Ok(file.into_connection(algebra)?)
}

fn load_rep(path: &Path, algebra: &LieAlgebra) -> Result<Representation, Failure> {
    let file: RepFile = read_json_file(path)?;
    Ok(file.into_representation(algebra)?)
}

fn emit(output: Option<&Path>, contents: &str) -> CmdResult {
    match output {
        Some(path) => {
            write_file(path, contents)?;
            Ok(())
        }
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn scalar_vec_string(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

fn run(cli: Cli) -> CmdResult {
    let format = cli.format;
    let seed = cli.seed;
    match cli.command {
        Command::CheckAlgebra { file } => {
            let g = load_algebra(&file)?;
            let index = g.nilpotency_index();
            match format {
                Format::Text => {
                    let nil = match index {
                        Some(k) => format!("nilpotent (index {k})"),
                        None => "not nilpotent".to_string(),
                    };
                    println!(
                        "algebra valid: dim {}, {}, filiform: {}",
                        g.dim(),
                        nil,
                        g.is_filiform()
                    );
                }
                Format::Structured => {
                    println!(
                        "{}",
                        json!({
                            "valid": true,
                            "dim": g.dim(),
                            "nilpotency_index": index,
                            "filiform": g.is_filiform(),
                        })
                    );
                }
            }
            Ok(())
        }
        Command::CheckConnection { algebra, file } => {
            let g = load_algebra(&algebra)?;
            let c = load_connection(&file, &g)?;
            match format {
                Format::Text => println!(
                    "connection valid: torsion and flatness hold on dim {}",
                    c.algebra().dim()
                ),
                Format::Structured => {
                    println!("{}", json!({"valid": true, "dim": c.algebra().dim()}))
                }
            }
            Ok(())
        }
        Command::CheckRep { algebra, file } => {
            let g = load_algebra(&algebra)?;
            let rep = load_rep(&file, &g)?;
            let faithful = rep.is_faithful();
            let kernel_dim = rep.kernel().dim();
            let center_criterion = if g.is_nilpotent() {
                Some(rep.faithful_by_center().expect("algebra is nilpotent"))
            } else {
                None
            };
            match format {
                Format::Text => {
                    println!(
                        "representation valid: module dim {}, kernel dim {kernel_dim}, faithful: {faithful}",
                        rep.module_dim()
                    );
                    if let Some(cc) = center_criterion {
                        println!("center criterion agrees: {}", cc == faithful);
                    }
                }
                Format::Structured => println!(
                    "{}",
                    json!({
                        "valid": true,
                        "module_dim": rep.module_dim(),
                        "kernel_dim": kernel_dim,
                        "faithful": faithful,
                        "faithful_by_center": center_criterion,
                    })
                ),
            }
            Ok(())
        }
        Command::BuildRho {
            algebra,
            connection,
            output,
        } => {
            let g = load_algebra(&algebra)?;
            let c = load_connection(&connection, &g)?;
            let rho = c.affine_rep();
            emit(
                output.as_deref(),
                &to_canonical_json(&RepFile::from_representation(&rho)),
            )
        }
        Command::ExtractConnection {
            algebra,
            rep,
            output,
        } => {
            let g = load_algebra(&algebra)?;
            let rho = load_rep(&rep, &g)?;
            let c = AffineConnection::from_affine_rep(&rho)?;
            emit(
                output.as_deref(),
                &to_canonical_json(&ConnectionFile::from_connection(&c)),
            )
        }
        Command::Completeness { algebra, connection } => {
            let g = load_algebra(&algebra)?;
            let c = load_connection(&connection, &g)?;
            let verdict = c.is_complete_seeded(seed)?;
            match format {
                Format::Text => match &verdict.witness {
                    Some(w) => println!(
                        "complete: false\nwitness: x = {}, char-poly coefficient {} at t^{}",
                        scalar_vec_string(&w.element),
                        w.coeff_value,
                        w.coeff_power
                    ),
                    None => println!("complete: true"),
                },
                Format::Structured => {
                    let witness = verdict.witness.as_ref().map(|w| {
                        json!({
                            "element": w.element.iter().map(Scalar::to_string).collect::<Vec<_>>(),
                            "coeff_power": w.coeff_power,
                            "coeff_value": w.coeff_value.to_string(),
                        })
                    });
                    println!(
                        "{}",
                        json!({"complete": verdict.complete, "witness": witness})
                    );
                }
            }
            Ok(())
        }
        Command::Nilpotentize {
            algebra,
            rep,
            output,
        } => {
            let g = load_algebra(&algebra)?;
            let rho = load_rep(&rep, &g)?;
            let out = rho.nilpotentize()?;
            let rep_doc = to_canonical_json(&RepFile::from_representation(&out.rep));
            match &output {
                Some(path) => {
                    write_file(path, &rep_doc)?;
                    match format {
                        Format::Text => {
                            println!("nilpotent faithful representation written to {}", path.display());
                            println!("block dims: {:?}", out.decomposition.block_dims());
                            println!("change of basis (columns = adapted basis):");
                            println!("{}", out.change_of_basis);
                        }
                        Format::Structured => println!(
                            "{}",
                            json!({
                                "output": path.display().to_string(),
                                "block_dims": out.decomposition.block_dims(),
                                "weights": out.decomposition.weights().iter()
                                    .map(|w| w.iter().map(Scalar::to_string).collect::<Vec<_>>())
                                    .collect::<Vec<_>>(),
                            })
                        ),
                    }
                }
                None => print!("{rep_doc}"),
            }
            Ok(())
        }
        Command::Weights { algebra, rep } => {
            let g = load_algebra(&algebra)?;
            let rho = load_rep(&rep, &g)?;
            let wd = rho.weight_decomposition()?;
            match format {
                Format::Text => {
                    for (w, b) in wd.weights().iter().zip(wd.blocks()) {
                        println!(
                            "weight {}  block dim {}",
                            scalar_vec_string(w),
                            b.dim()
                        );
                    }
                }
                Format::Structured => {
                    let entries: Vec<_> = wd
                        .weights()
                        .iter()
                        .zip(wd.blocks())
                        .map(|(w, b)| {
                            json!({
                                "weight": w.iter().map(Scalar::to_string).collect::<Vec<_>>(),
                                "block_dim": b.dim(),
                            })
                        })
                        .collect();
                    println!("{}", json!({"weights": entries}));
                }
            }
            Ok(())
        }
        Command::Symplectic {
            algebra,
            theta,
            output,
        } => {
            let g = load_algebra(&algebra)?;
            let theta_file: ThetaFile = read_json_file(&theta)?;
            let theta = theta_file.into_matrix()?;
            let form = SymplecticForm::new(g.clone(), theta)?;
            let outcome = symplectic_connection(&form)?;
            let doc = to_canonical_json(&ConnectionFile::from_connection(&outcome.connection));
            let completeness = if g.is_nilpotent() {
                Some(
                    outcome
                        .connection
                        .is_complete_seeded(seed)
                        .expect("algebra is nilpotent")
                        .complete,
                )
            } else {
                None
            };
            match &output {
                Some(path) => {
                    write_file(path, &doc)?;
                    match format {
                        Format::Text => {
                            println!("symplectic form valid; connection written to {}", path.display());
                            println!("sign convention: {}", outcome.convention);
                            match completeness {
                                Some(v) => println!("completeness verdict (recorded): {v}"),
                                None => println!("completeness not computed (algebra not nilpotent)"),
                            }
                        }
                        Format::Structured => println!(
                            "{}",
                            json!({
                                "output": path.display().to_string(),
                                "convention": outcome.convention.to_string(),
                                "complete": completeness,
                            })
                        ),
                    }
                }
                None => print!("{doc}"),
            }
            Ok(())
        }
        Command::Catalog {
            family,
            n,
            a,
            alpha,
            beta,
            output,
            algebra_output,
        } => {
            let require_n = || -> Result<usize, Failure> {
                n.ok_or_else(|| Failure::usage("--n is required for this family"))
            };
            match family {
                Family::Abelian => {
                    let n = require_n()?;
                    let g = LieAlgebra::abelian(n)?;
                    emit(
                        output.as_deref(),
                        &to_canonical_json(&AlgebraFile::from_algebra(&g)),
                    )
                }
                Family::ModelFiliform => {
                    let n = require_n()?;
                    let g = LieAlgebra::model_filiform(n)?;
                    emit(
                        output.as_deref(),
                        &to_canonical_json(&AlgebraFile::from_algebra(&g)),
                    )
                }
                Family::Heisenberg => {
                    if let Some(n) = n {
                        if n != 3 {
                            return Err(Failure::usage("the heisenberg family has n = 3"));
                        }
                    }
                    let p = LnFamilyParams::new(3, a, alpha, beta)?;
                    let c = heisenberg_connection(&p)?;
                    if let Some(path) = &algebra_output {
                        write_file(
                            path,
                            &to_canonical_json(&AlgebraFile::from_algebra(c.algebra())),
                        )?;
                    }
                    emit(
                        output.as_deref(),
                        &to_canonical_json(&ConnectionFile::from_connection(&c)),
                    )
                }
                Family::LnConnection => {
                    let n = require_n()?;
                    let p = LnFamilyParams::new(n, a, alpha, beta)?;
                    let c = ln_connection(&p)?;
                    if let Some(path) = &algebra_output {
                        write_file(
                            path,
                            &to_canonical_json(&AlgebraFile::from_algebra(c.algebra())),
                        )?;
                    }
                    emit(
                        output.as_deref(),
                        &to_canonical_json(&ConnectionFile::from_connection(&c)),
                    )
                }
                Family::LnRep => {
                    let n = require_n()?;
                    let p = LnFamilyParams::new(n, a, alpha, beta)?;
                    let rep = ln_representation(&p)?;
                    if let Some(path) = &algebra_output {
                        write_file(
                            path,
                            &to_canonical_json(&AlgebraFile::from_algebra(rep.algebra())),
                        )?;
                    }
                    emit(
                        output.as_deref(),
                        &to_canonical_json(&RepFile::from_representation(&rep)),
                    )
                }
            }
        }
        Command::VerifyPaper {
            n,
            a,
            alpha,
            beta,
            output,
        } => {
            let params = LnFamilyParams::new(n, a, alpha, beta)
                .map_err(|e| Failure::usage(e.to_string()))?;
            let report = verify_paper_seeded(&params, seed);
            let doc = to_canonical_json(&ReportFile::from_report(&report));
            if let Some(path) = &output {
                write_file(path, &doc)?;
            }
            match format {
                Format::Text => print!("{}", report.to_text_table()),
                Format::Structured => print!("{doc}"),
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::math("verification report has failing checks"))
            }
        }
    }
}

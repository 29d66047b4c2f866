//! `qfl` — certify Fano quiver moduli spaces from the command line.
//!
//! Every subcommand prints a single JSON document on stdout. Exit codes:
//! 0 = certified (or check passed), 2 = not coprime, 3 = inconclusive,
//! 4 = enumeration budget exceeded, 1 = invalid input or failed check.

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use quiver_fano::families::{
    kronecker_min_dim_check, kronecker_predict, kronecker_quiver, mukai_scan, subspace_dim,
    subspace_predict, subspace_quiver, thickened_dim, thickened_predict, thickened_quiver,
};
use quiver_fano::{
    certify_fano, enumerate_toric_fano, fixture, in_chamber_interior, same_chamber, sign_vector,
    subdim_count, DimVector, Error, FanoCertificate, FanoStatus, LinearForm, Quiver, Stability,
    DEFAULT_BUDGET, FIXTURE_NAMES,
};

#[derive(Parser)]
#[command(
    name = "qfl",
    version,
    about = "Certify Fano quiver moduli spaces and explore their invariants",
    propagate_version = true
)]
struct Cli {
    /// Cap on enumerated sub-dimension vectors or multiplicity assignments.
    #[arg(long, global = true, env = "QFL_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Worker threads for parallel scans; 0 uses one per core. Output is
    /// byte-identical for any value.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify one quiver moduli space and print the certificate.
    Certify {
        /// Quiver JSON file (fields "n" and "arrows", one src,dst,mult
        /// triple per arrow), or @name for a bundled toric fixture.
        quiver: String,

        /// Dimension vector, comma-separated (e.g. 1,1,1,2).
        #[arg(short, long, value_delimiter = ',', required = true)]
        dim: Vec<i64>,
    },

    /// Compare a family's closed-form predictions with live certification.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },

    /// List all toric Fano specs on n vertices, one per relabeling class.
    ToricEnumerate {
        /// Number of vertices.
        #[arg(short = 'n', long = "vertices")]
        n: usize,

        /// Largest total arrow multiplicity to consider.
        #[arg(long)]
        max_arrows: u32,
    },

    /// Chamber membership for a stability weighting, and optionally whether
    /// a second weighting shares its chamber.
    Chambers {
        /// Quiver JSON file or @fixture (used only to validate vertices).
        quiver: String,

        /// Dimension vector, comma-separated.
        #[arg(short, long, value_delimiter = ',', required = true)]
        dim: Vec<i64>,

        /// Weighting to test, comma-separated; must vanish on the
        /// dimension vector.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        theta: Vec<i64>,

        /// Optional second weighting for a same-chamber comparison.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        theta2: Option<Vec<i64>>,
    },

    /// Exhaustive numeric validations of the closed-form bounds.
    Checks {
        #[command(subcommand)]
        check: CheckCommand,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// m one-dimensional sources feeding a d-dimensional sink: stable
    /// configurations of m points in projective (d-1)-space.
    Subspace {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        m: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        d: u32,
    },

    /// Two vertices joined by m parallel arrows, dimension vector (d, e).
    Kronecker {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        m: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        d: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        e: u32,
    },

    /// The subspace quiver with every arrow thickened k-fold.
    Thickened {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        m: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        k: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        d: u32,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Scan the reduced Kronecker range for dimensions below m - 1.
    KroneckerMinDim {
        #[arg(short, value_parser = clap::value_parser!(i64).range(3..=100_000))]
        m: i64,

        /// Largest d (and e) to scan.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(i64).range(1..=20_000))]
        bound: i64,
    },

    /// Scan thickened families for rank/index/dimension violations.
    Mukai {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=300))]
        max_m: i64,

        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=300))]
        max_k: i64,
    },
}

#[derive(Serialize)]
struct FamilyReport<P: Serialize> {
    family: &'static str,
    params: serde_json::Value,
    prediction: P,
    certificate: FanoCertificate,
    /// Whether the closed-form prediction and the live certificate agree on
    /// everything the family predicts.
    agree: bool,
}

#[derive(Serialize)]
struct ChamberReport {
    subdim_vectors: u128,
    in_interior: bool,
    /// Run-length encoded signs of the weighting over all proper nonzero
    /// sub-dimension vectors in ascending lexicographic order.
    signs: Vec<(i8, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta2_in_interior: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    same_chamber: Option<bool>,
}

fn main() {
    // Clap's default error exit code (2) is reserved here for NotCoprime, so
    // argument errors map to the generic failure code instead.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(pool) => pool,
        Err(err) => return fail(&err.to_string()),
    };
    let budget = cli.budget;
    pool.install(|| match cli.command {
        Command::Certify { quiver, dim } => certify(&quiver, dim, budget),
        Command::Family { family } => run_family(family, budget),
        Command::ToricEnumerate { n, max_arrows } => toric_enumerate(n, max_arrows, budget),
        Command::Chambers {
            quiver,
            dim,
            theta,
            theta2,
        } => chambers(&quiver, dim, theta, theta2, budget),
        Command::Checks { check } => run_check(check),
    })
}

fn fail(message: &str) -> i32 {
    eprintln!("error: {message}");
    1
}

fn error_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => {
            eprintln!("error: {err}");
            4
        }
        _ => fail(&err.to_string()),
    }
}

fn status_code(status: FanoStatus) -> i32 {
    match status {
        FanoStatus::Certified => 0,
        FanoStatus::NotCoprime => 2,
        FanoStatus::Inconclusive => 3,
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize to JSON")
    );
}

/// Loads a quiver from a JSON file, or from the fixture table when the
/// specifier starts with `@`.
fn load_quiver(specifier: &str) -> Result<Quiver, String> {
    if let Some(name) = specifier.strip_prefix('@') {
        match fixture(name) {
            Some(spec) => Ok(spec.to_quiver()),
            None => Err(format!(
                "unknown fixture '{name}' (available: {})",
                FIXTURE_NAMES.join(", ")
            )),
        }
    } else {
        let text = std::fs::read_to_string(specifier)
            .map_err(|err| format!("cannot read '{specifier}': {err}"))?;
        Quiver::from_json_str(&text)
    }
}

fn certify(quiver: &str, dim: Vec<i64>, budget: u64) -> i32 {
    let q = match load_quiver(quiver) {
        Ok(q) => q,
        Err(message) => return fail(&message),
    };
    let d = match DimVector::new(dim) {
        Ok(d) => d,
        Err(err) => return fail(&err.to_string()),
    };
    match certify_fano(&q, &d, budget) {
        Ok(cert) => {
            print_json(&cert);
            status_code(cert.status)
        }
        Err(err) => error_code(&err),
    }
}

fn run_family(family: FamilyCommand, budget: u64) -> i32 {
    match family {
        FamilyCommand::Subspace { m, d } => {
            let (m, d) = (m as usize, d as i64);
            let prediction = subspace_predict(m, d);
            let cert =
                match certify_fano(&subspace_quiver(m), &subspace_dim(m, d), budget) {
                    Ok(cert) => cert,
                    Err(err) => return error_code(&err),
                };
            let agree = prediction.theta == *cert.canonical_theta.theta()
                && prediction.dim == cert.dimension
                && prediction.rank == cert.picard_rank
                && prediction.coprime_iff == (cert.status != FanoStatus::NotCoprime)
                && prediction.certified_iff(d) == (cert.status == FanoStatus::Certified)
                && (cert.status != FanoStatus::Certified || prediction.index == cert.index);
            let report = FamilyReport {
                family: "subspace",
                params: json!({ "m": m, "d": d }),
                prediction,
                certificate: cert,
                agree,
            };
            print_json(&report);
            family_code(report.agree, report.certificate.status)
        }
        FamilyCommand::Kronecker { m, d, e } => {
            let (m, d, e) = (m as i64, d as i64, e as i64);
            let prediction = kronecker_predict(m, d, e);
            let dvec = DimVector::new(vec![d, e]).expect("positive entries");
            let cert = match certify_fano(&kronecker_quiver(m), &dvec, budget) {
                Ok(cert) => cert,
                Err(err) => return error_code(&err),
            };
            let agree = prediction.theta == *cert.canonical_theta.theta()
                && prediction.dim == cert.dimension
                && prediction.rank == cert.picard_rank
                && (cert.status != FanoStatus::Certified || prediction.index == cert.index);
            let report = FamilyReport {
                family: "kronecker",
                params: json!({ "m": m, "d": d, "e": e }),
                prediction,
                certificate: cert,
                agree,
            };
            print_json(&report);
            family_code(report.agree, report.certificate.status)
        }
        FamilyCommand::Thickened { m, k, d } => {
            let (m, k, d) = (m as usize, k as i64, d as i64);
            let prediction = thickened_predict(m, k, d);
            let cert =
                match certify_fano(&thickened_quiver(m, k), &thickened_dim(m, d), budget) {
                    Ok(cert) => cert,
                    Err(err) => return error_code(&err),
                };
            let certified = cert.status == FanoStatus::Certified;
            let agree = prediction.theta == *cert.canonical_theta.theta()
                && !prediction.excluded == certified
                && (!certified
                    || (prediction.dim == cert.dimension
                        && prediction.rank == cert.picard_rank
                        && prediction.index == cert.index));
            let report = FamilyReport {
                family: "thickened",
                params: json!({ "m": m, "k": k, "d": d }),
                prediction,
                certificate: cert,
                agree,
            };
            print_json(&report);
            family_code(report.agree, report.certificate.status)
        }
    }
}

fn family_code(agree: bool, status: FanoStatus) -> i32 {
    if !agree {
        eprintln!("error: prediction and certificate disagree");
        return 1;
    }
    status_code(status)
}

fn toric_enumerate(n: usize, max_arrows: u32, budget: u64) -> i32 {
    if !(1..=62).contains(&n) {
        return fail("vertex count must be between 1 and 62");
    }
    match enumerate_toric_fano(n, max_arrows, budget) {
        Ok(entries) => {
            print_json(&entries);
            0
        }
        Err(err) => error_code(&err),
    }
}

fn chambers(
    quiver: &str,
    dim: Vec<i64>,
    theta: Vec<i64>,
    theta2: Option<Vec<i64>>,
    budget: u64,
) -> i32 {
    let q = match load_quiver(quiver) {
        Ok(q) => q,
        Err(message) => return fail(&message),
    };
    let d = match DimVector::new(dim) {
        Ok(d) => d,
        Err(err) => return fail(&err.to_string()),
    };
    if d.len() != q.vertex_count() {
        return fail(&format!(
            "dimension vector has {} entries but the quiver has {} vertices",
            d.len(),
            q.vertex_count()
        ));
    }
    let stab = |entries: Vec<i64>| -> Result<Stability, Error> {
        Stability::new(LinearForm::new(entries), d.clone())
    };
    let result = (|| -> Result<ChamberReport, Error> {
        let theta = stab(theta)?;
        let signs = sign_vector(&theta, budget)?;
        let mut report = ChamberReport {
            subdim_vectors: subdim_count(&d),
            in_interior: in_chamber_interior(&theta, budget)?,
            signs: signs.runs().to_vec(),
            theta2_in_interior: None,
            same_chamber: None,
        };
        if let Some(entries) = theta2 {
            let theta2 = stab(entries)?;
            report.theta2_in_interior = Some(in_chamber_interior(&theta2, budget)?);
            report.same_chamber = Some(same_chamber(&theta, &theta2, budget)?);
        }
        Ok(report)
    })();
    match result {
        Ok(report) => {
            print_json(&report);
            0
        }
        Err(err) => error_code(&err),
    }
}

fn run_check(check: CheckCommand) -> i32 {
    let pass = match check {
        CheckCommand::KroneckerMinDim { m, bound } => {
            let report = kronecker_min_dim_check(m, bound);
            print_json(&report);
            report.pass
        }
        CheckCommand::Mukai { max_m, max_k } => {
            let report = mukai_scan(max_m, max_k);
            print_json(&report);
            report.pass
        }
    };
    if pass {
        0
    } else {
        eprintln!("error: check failed");
        1
    }
}

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use conf4::braid::{
    braid_eq, dfg, ferrari_star, pullback_lift, semidirect_decompose, BraidWord,
};
use conf4::curve::{
    ferrari_resolvent, forward_map, inverse_map, j_from_cross_ratio, j_from_invariants,
    quartic_from_config, quartic_invariants,
};
use conf4::json::{self, JsonScalar};
use conf4::lattice::{aj_verify, period_lattice, tau_reduce};
use conf4::verify::{run_all, Counts};
use conf4::{ComplexFloat, Error, ExactRational, GaussianRational, Polynomial};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "conf4", version, about = "Four-point configurations, marked elliptic curves and braid groups")]
struct Cli {
    /// Relative tolerance for float comparisons
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    /// Seed for `verify all`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Trial budget for `verify all`; 200 runs the acceptance counts
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,
    /// Scalar domain for curve and configuration commands
    #[arg(long, global = true, value_enum, default_value_t = Domain::Gaussian)]
    scalar_domain: Domain,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Domain {
    Rational,
    Gaussian,
    Float,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Configuration to canonical marked triple
    Forward {
        #[arg(long)]
        points: String,
    },
    /// Marked triple to barycenter-zero configuration
    Inverse {
        #[arg(long)]
        triple: String,
    },
    /// Ferrari resolvent roots and discriminant comparison
    Resolvent {
        #[arg(long)]
        points: String,
    },
    /// j-invariant from quartic invariants and from the cross-ratio
    J {
        #[arg(long)]
        points: String,
    },
    /// Period lattice, reduced tau and Abel-Jacobi report of a triple
    Periods {
        #[arg(long)]
        triple: String,
    },
    /// Braid-group operations
    Braid {
        #[command(subcommand)]
        op: BraidOp,
    },
    /// Seeded property suites
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
}

#[derive(Subcommand, Debug)]
enum BraidOp {
    /// Image of a 4-strand braid in B3
    Ferrari {
        #[arg(long)]
        word: String,
    },
    /// Conjugation action of a 4-strand braid on the free kernel
    Dfg {
        #[arg(long)]
        word: String,
    },
    /// Equality of two braids
    Eq {
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
    },
    /// Kernel and section coordinates of a 4-strand braid
    Decompose {
        #[arg(long)]
        word: String,
    },
    /// The 4-strand braid with given conjugation action and Ferrari image
    Lift {
        #[arg(long)]
        aut: String,
        #[arg(long)]
        b3: String,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyOp {
    /// Every property suite
    All,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
enum Failure {
    /// A verification ran and did not pass; the document is still printed.
    Verification(Value),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<Value, Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Tolerance { .. } => 1,
        Error::TableIncomplete(_) | Error::LiftVerification(_) | Error::AgmNonConvergence(_) => 3,
        _ => 2,
    }
}

/// Inline JSON, or the contents of a file when the argument is not JSON.
fn read_json(arg: &str) -> Result<Value, Error> {
    if let Ok(v) = serde_json::from_str(arg) {
        return Ok(v);
    }
    let path = Path::new(arg);
    if !path.is_file() {
        return Err(Error::InvalidInput(format!("{arg:?} is neither JSON nor a readable file")));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {arg:?}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{arg:?}: {e}")))
}

fn checked(doc: Value, pass: bool) -> Outcome {
    if pass {
        Ok(doc)
    } else {
        Err(Failure::Verification(doc))
    }
}

fn forward<S: JsonScalar>(points: &str) -> Outcome {
    let cfg = json::config_from_json::<S>(&read_json(points)?)?;
    Ok(json::triple_to_json(&forward_map(&cfg)?))
}

fn inverse<S: JsonScalar>(triple: &str) -> Outcome {
    let t = json::triple_from_json::<S>(&read_json(triple)?)?;
    Ok(json::config_to_json(&inverse_map(&t)?))
}

fn resolvent<S: JsonScalar>(points: &str) -> Outcome {
    let cfg = json::config_from_json::<S>(&read_json(points)?)?;
    let roots = ferrari_resolvent(&cfg);
    let dq = cfg.polynomial().discriminant()?;
    let dr = Polynomial::from_roots(&roots).discriminant()?;
    let equal = dq.near(&dr, 0.0);
    let doc = json!({
        "roots": json::scalars_to_json(&roots),
        "disc_quartic": dq.to_json(),
        "disc_resolvent": dr.to_json(),
        "equal": equal,
    });
    checked(doc, equal)
}

fn j_both<S: JsonScalar>(points: &str) -> Outcome {
    let cfg = json::config_from_json::<S>(&read_json(points)?)?;
    let (i, j) = quartic_invariants(&quartic_from_config(&cfg)?);
    let from_inv = j_from_invariants(&i, &j)?;
    let from_cr = j_from_cross_ratio(&cfg);
    let agree = from_inv.near(&from_cr, 1.0);
    let doc = json!({
        "j_invariants": from_inv.to_json(),
        "j_cross_ratio": from_cr.to_json(),
        "agree": agree,
    });
    checked(doc, agree)
}

fn periods<S: JsonScalar>(triple: &str, tol: f64) -> Outcome {
    let t = json::triple_from_json::<S>(&read_json(triple)?)?;
    let lattice = period_lattice(t.curve(), t.c())?;
    let (tau, m) = tau_reduce(&lattice);
    let report = aj_verify(&t, tol)?;
    let doc = json!({
        "lattice": json::lattice_to_json(&lattice, lattice.tau()),
        "reduced_tau": json::complex_to_json(tau),
        "M": json::mat2_to_json(&m),
        "aj_verify": json::report_to_json(&report),
    });
    checked(doc, report.all_pass())
}

fn braid_arg(arg: &str, strands: usize) -> Result<BraidWord, Error> {
    json::braid_from_json(&read_json(arg)?, strands)
}

fn braid(op: &BraidOp) -> Outcome {
    match op {
        BraidOp::Ferrari { word } => Ok(json::braid_to_json(&ferrari_star(&braid_arg(word, 4)?)?)),
        BraidOp::Dfg { word } => Ok(json::free_aut_to_json(&dfg(&braid_arg(word, 4)?)?)),
        BraidOp::Eq { w1, w2 } => {
            let (v1, v2) = (read_json(w1)?, read_json(w2)?);
            let strands = match (json::braid_declared_strands(&v1), json::braid_declared_strands(&v2)) {
                (Some(n), _) | (None, Some(n)) => n,
                (None, None) => json::braid_min_strands(&v1)?.max(json::braid_min_strands(&v2)?),
            };
            let (b1, b2) = (json::braid_from_json(&v1, strands)?, json::braid_from_json(&v2, strands)?);
            Ok(json!(braid_eq(&b1, &b2)?))
        }
        BraidOp::Decompose { word } => {
            Ok(json::semidirect_to_json(&semidirect_decompose(&braid_arg(word, 4)?)?))
        }
        BraidOp::Lift { aut, b3 } => {
            let phi = json::free_aut_from_json(&read_json(aut)?)?;
            let b3 = braid_arg(b3, 3)?;
            Ok(json::braid_to_json(&pullback_lift(&phi, &b3)?))
        }
    }
}

fn verify_all(seed: u64, trials: usize) -> Outcome {
    let report = run_all(seed, &Counts::scaled(trials));
    let mut doc = json::report_to_json(&report);
    doc["seed"] = json!(seed);
    doc["trials"] = json!(trials);
    doc["pass"] = json!(report.all_pass());
    checked(doc, report.all_pass())
}

fn by_domain(cli: &Cli) -> Outcome {
    macro_rules! dispatch {
        ($f:ident ( $($arg:expr),* )) => {
            match cli.scalar_domain {
                Domain::Rational => $f::<ExactRational>($($arg),*),
                Domain::Gaussian => $f::<GaussianRational>($($arg),*),
                Domain::Float => $f::<ComplexFloat>($($arg),*),
            }
        };
    }
    match &cli.command {
        Command::Forward { points } => dispatch!(forward(points)),
        Command::Inverse { triple } => dispatch!(inverse(triple)),
        Command::Resolvent { points } => dispatch!(resolvent(points)),
        Command::J { points } => dispatch!(j_both(points)),
        Command::Periods { triple } => dispatch!(periods(triple, cli.tolerance)),
        Command::Braid { op } => braid(op),
        Command::Verify { op: VerifyOp::All } => verify_all(cli.seed, cli.trials),
    }
}

fn run(cli: &Cli) -> Outcome {
    if !(cli.tolerance > 0.0 && cli.tolerance.is_finite()) {
        return Err(Error::InvalidInput("--tolerance must be positive".into()).into());
    }
    if cli.trials == 0 {
        return Err(Error::InvalidInput("--trials must be at least 1".into()).into());
    }
    by_domain(cli)
}

fn print(doc: &Value) {
    println!("{}", serde_json::to_string(doc).expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            print(&doc);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(doc)) => {
            print(&doc);
            eprintln!("conf4: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Library(e)) => {
            eprintln!("conf4: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

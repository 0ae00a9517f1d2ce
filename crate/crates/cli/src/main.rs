//! Batch command-line front end for the qintop exact-arithmetic library.
//!
//! Every subcommand reads exact rational parameters, computes exactly, and
//! renders deterministically (text, CSV, or JSON) so outputs can serve as
//! regression snapshots. Exit codes: 0 success, 1 usage/parse error,
//! 2 domain error (singular matrix, invalid parameter range, unwritable
//! output), 3 verification failure (an identity sweep found a
//! counterexample).

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qintop::combinatorics::{
    array_polynomial, bernoulli_number_determinant, bernoulli_numbers, bernoulli_polynomials,
    complete_bell, stirling1, stirling2,
};
use qintop::gaussian::GaussianRational;
use qintop::matrix::FieldMatrix;
use qintop::operator::{
    bernoulli_numbers_via_y, bernoulli_via_operator, derivative_e, family_h, family_q, matrix_m_e,
    matrix_m_y, y_polynomial, OperatorParams,
};
use qintop::poly::DensePolynomial;
use qintop::rational::Rational;
use qintop::zeta::{
    hurwitz_zeta_reference, identity_af_i01, identity_af_i2, identity_ey1,
    reciprocal_square_series, stirling1_bernoulli_sum, zeta2_asymptotic, zeta_k_asymptotic,
};
use qintop::Error;

#[derive(Parser)]
#[command(
    name = "qintop",
    version,
    about = "Exact rational computations: Bernoulli/Stirling/Bell numbers, an integral operator on Q[x] with its matrices and inverse families, and asymptotic zeta series",
    after_help = "Exit codes: 0 success, 1 usage/parse error, 2 domain error, 3 verification failure."
)]
struct Cli {
    /// Output format (the zeta subcommand always prints JSON)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Fractional digits for the decimal fields of zeta reports (>= 1)
    #[arg(long, global = true, default_value_t = 12)]
    digits: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BernoulliMethod {
    /// Triangular recurrence (default)
    Recurrence,
    /// Hessenberg determinant
    Determinant,
    /// Inverse-operator polynomial family evaluated at 0
    Operator,
    /// First column of the inverted Y-coefficient matrix
    YMatrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum StirlingKind {
    /// Signed Stirling numbers of the first kind
    First,
    /// Stirling numbers of the second kind
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    /// Operator matrix: row j holds the image coefficients of x^j
    E,
    /// Coefficient matrix of the difference polynomials Y_0..Y_m
    Y,
}

#[derive(Clone, Copy, ValueEnum)]
enum InverseAlgorithm {
    /// Gauss-Jordan elimination (the reference)
    Gauss,
    /// Trace form from the characteristic polynomial
    CayleyHamilton,
    /// Complete-Bell-polynomial form
    Bell,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    /// Inverse-operator family: E[Q_k] = x^k
    Q,
    /// Unit-width family: Q at parameters (a, b, a, b+1)
    H,
    /// Bernoulli polynomials via the operator at (1, 0, 1, 1)
    Bernoulli,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Identity {
    /// B_m(a) through Stirling numbers of the second kind
    Ey1,
    /// Array-polynomial sum against the Bernoulli evaluation
    #[value(name = "af-i2")]
    AfI2,
    /// Double sum over both Stirling kinds
    #[value(name = "af-i01")]
    AfI01,
    /// Weighted Stirling/Bernoulli sum equals (-1)^n n!/(n+1)
    Dn2,
    /// B_n'(x) = n B_{n-1}(x)
    Derivative,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    /// Expansion of zeta(2, a) in Bernoulli evaluations at a - ib
    Bx13,
    /// Expansion of zeta(k+2, y) from the k-th derivative; x = i*b
    Bnx4,
    /// Expansion targeting 1/a^2
    #[value(name = "af-i0a")]
    AfI0a,
}

#[derive(Subcommand)]
enum Command {
    /// Print B_0..B_n computed by the chosen route
    Bernoulli {
        /// Largest index to print
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BernoulliMethod::Recurrence)]
        method: BernoulliMethod,
    },
    /// Print a Stirling number or the row k = 0..n
    Stirling {
        #[arg(long, value_enum)]
        kind: StirlingKind,
        #[arg(long)]
        n: usize,
        /// Print the single entry (n, k) instead of the whole row
        #[arg(long)]
        k: Option<usize>,
    },
    /// Complete exponential Bell polynomial B_n(w_1, ..., w_n)
    Bell {
        /// Comma-separated rational arguments w_1,...,w_n (empty for B_0)
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Array polynomial S_v^m(x), optionally evaluated at x
    Array {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        m: usize,
        /// Evaluate at this rational instead of printing the polynomial
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Print an operator or Y coefficient matrix
    Matrix {
        #[arg(long, value_enum, ignore_case = true)]
        kind: MatrixKind,
        /// Kind E: number of rows (images of 1..x^(m-1)); kind Y: rows are Y_0..Y_m
        #[arg(long)]
        m: usize,
        /// Rational parameters a,b,c,d
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// Drop the vanishing last column (requires c = a)
        #[arg(long)]
        square: bool,
    },
    /// Invert a matrix built by --kind or read from a JSON file
    Inverse {
        #[arg(long, value_enum, default_value_t = InverseAlgorithm::Gauss)]
        algorithm: InverseAlgorithm,
        #[arg(long, value_enum, ignore_case = true, conflicts_with = "input")]
        kind: Option<MatrixKind>,
        #[arg(long, requires = "kind")]
        m: Option<usize>,
        #[arg(long, requires = "kind", allow_hyphen_values = true)]
        params: Option<String>,
        #[arg(long, requires = "kind")]
        square: bool,
        /// Path to a matrix in the JSON schema {"rows":…,"cols":…,"entries":[["p/q",…],…]}
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print a polynomial family Q_0..Q_{n-1}, H_0..H_{n-1}, or B_0..B_{n-1}
    Family {
        #[arg(long, value_enum, ignore_case = true)]
        kind: FamilyKind,
        /// Family size (number of polynomials)
        #[arg(long)]
        n: usize,
        /// Q: a,b,c,d with c = a; H: a,b; bernoulli: none
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// Print the difference polynomial Y_n = (cx+d)^(n+1) - (ax+b)^(n+1)
    Ypoly {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Apply the operator to a polynomial and differentiate the image
    Derivative {
        /// Comma-separated coefficients c0,c1,... of the input polynomial
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Run an exact identity sweep; exit 3 if any case fails
    Verify {
        #[arg(long, value_enum)]
        identity: Identity,
        /// Largest index in the sweep
        #[arg(long)]
        max_m: usize,
        /// Random sample points per index, where the identity has free variables
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Seed for the deterministic sample generator
        #[arg(long, default_value_t = 912)]
        seed: u64,
    },
    /// Evaluate a divergent zeta-type series by optimal truncation (JSON report)
    Zeta {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// bx13: a of zeta(2, a); bnx4: y of zeta(k+2, y); af-i0a: the target is 1/a^2
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// bx13: expansion parameter b > 0; bnx4/af-i0a: sets x = i*b
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Derivative order (bnx4 only)
        #[arg(long)]
        k: Option<usize>,
        /// Number of series terms to generate (>= 1)
        #[arg(long)]
        max_terms: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    /// Carries the full sweep report; printed to stdout with exit code 3.
    Verification(String),
}

impl Failure {
    fn from_lib(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Json(_) | Error::RaggedRows => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let rendered = match execute(&cli) {
        Ok(s) => s,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            return ExitCode::from(3);
        }
    };
    if let Some(path) = &cli.output {
        if let Err(e) = fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }
    ExitCode::SUCCESS
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    s.trim().parse::<Rational>().map_err(Failure::from_lib)
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>, Failure> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed.split(',').map(parse_rational).collect()
}

fn parse_params(s: &str) -> Result<OperatorParams, Failure> {
    OperatorParams::parse_list(s).map_err(Failure::from_lib)
}

fn require_positive(x: &Rational, what: &str) -> Result<(), Failure> {
    if x.is_zero() || x.is_negative() {
        return Err(Failure::Domain(format!("{what} must be positive, got {x}")));
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Bernoulli { n, method } => {
            let values = match method {
                BernoulliMethod::Recurrence => bernoulli_numbers(*n),
                BernoulliMethod::Determinant => {
                    (0..=*n).map(bernoulli_number_determinant).collect()
                }
                BernoulliMethod::Operator => bernoulli_via_operator(*n + 1)
                    .map_err(Failure::from_lib)?
                    .iter()
                    .map(|p| p.eval(&Rational::from_int(0)))
                    .collect(),
                BernoulliMethod::YMatrix => bernoulli_numbers_via_y(*n),
            };
            Ok(render_numbers(&values, cli.format))
        }
        Command::Stirling { kind, n, k } => {
            let at = |k: usize| match kind {
                StirlingKind::First => Rational::from_bigint(stirling1(*n, k)),
                StirlingKind::Second => Rational::from_bigint(stirling2(*n, k)),
            };
            let values: Vec<Rational> = match k {
                Some(k) => vec![at(*k)],
                None => (0..=*n).map(at).collect(),
            };
            Ok(render_numbers(&values, cli.format))
        }
        Command::Bell { w } => {
            let args = parse_rational_list(w)?;
            let value = complete_bell(&args);
            Ok(render_numbers(&[value], cli.format))
        }
        Command::Array { v, m, x } => {
            let poly = array_polynomial(*v, *m);
            match x {
                Some(x) => {
                    let x = parse_rational(x)?;
                    Ok(render_numbers(&[poly.eval(&x)], cli.format))
                }
                None => Ok(render_polynomial(&poly, cli.format)),
            }
        }
        Command::Matrix {
            kind,
            m,
            params,
            square,
        } => {
            let p = parse_params(params)?;
            let matrix = build_matrix(*kind, *m, &p, *square)?;
            Ok(render_matrix(&matrix, cli.format))
        }
        Command::Inverse {
            algorithm,
            kind,
            m,
            params,
            square,
            input,
        } => {
            let matrix =
                match (kind, input) {
                    (Some(kind), None) => {
                        let m = m.ok_or_else(|| {
                            Failure::Usage("--kind needs --m and --params".to_string())
                        })?;
                        let params = params.as_deref().ok_or_else(|| {
                            Failure::Usage("--kind needs --m and --params".to_string())
                        })?;
                        build_matrix(*kind, m, &parse_params(params)?, *square)?
                    }
                    (None, Some(path)) => {
                        let body = fs::read_to_string(path).map_err(|e| {
                            Failure::Domain(format!("cannot read {}: {e}", path.display()))
                        })?;
                        FieldMatrix::from_json(&body).map_err(Failure::from_lib)?
                    }
                    _ => return Err(Failure::Usage(
                        "provide a matrix source: either --kind (with --m, --params) or --input"
                            .to_string(),
                    )),
                };
            let inverse = match algorithm {
                InverseAlgorithm::Gauss => matrix.inverse_gauss(),
                InverseAlgorithm::CayleyHamilton => matrix.inverse_cayley_hamilton(),
                InverseAlgorithm::Bell => matrix.inverse_bell(),
            }
            .map_err(Failure::from_lib)?;
            Ok(render_matrix(&inverse, cli.format))
        }
        Command::Family { kind, n, params } => {
            let (label, polys) = match kind {
                FamilyKind::Q => {
                    let params = params.as_deref().ok_or_else(|| {
                        Failure::Usage("kind q needs --params a,b,c,d".to_string())
                    })?;
                    let p = parse_params(params)?;
                    ("Q", family_q(*n, &p).map_err(Failure::from_lib)?)
                }
                FamilyKind::H => {
                    let params = params
                        .as_deref()
                        .ok_or_else(|| Failure::Usage("kind h needs --params a,b".to_string()))?;
                    let list = parse_rational_list(params)?;
                    let [a, b] = list.as_slice() else {
                        return Err(Failure::Usage(format!(
                            "kind h needs exactly two parameters a,b, got {}",
                            list.len()
                        )));
                    };
                    ("H", family_h(*n, a, b).map_err(Failure::from_lib)?)
                }
                FamilyKind::Bernoulli => {
                    if params.is_some() {
                        return Err(Failure::Usage(
                            "kind bernoulli takes no --params".to_string(),
                        ));
                    }
                    ("B", bernoulli_via_operator(*n).map_err(Failure::from_lib)?)
                }
            };
            Ok(render_family(label, &polys, cli.format))
        }
        Command::Ypoly { n, params } => {
            let p = parse_params(params)?;
            Ok(render_polynomial(&y_polynomial(*n, &p), cli.format))
        }
        Command::Derivative { coeffs, params } => {
            let p = parse_params(params)?;
            let poly = DensePolynomial::new(parse_rational_list(coeffs)?);
            Ok(render_polynomial(&derivative_e(&poly, &p), cli.format))
        }
        Command::Verify {
            identity,
            max_m,
            samples,
            seed,
        } => run_verify(*identity, *max_m, *samples, *seed),
        Command::Zeta {
            theorem,
            a,
            b,
            k,
            max_terms,
        } => run_zeta(*theorem, a, b, *k, *max_terms, cli.digits),
    }
}

fn build_matrix(
    kind: MatrixKind,
    m: usize,
    p: &OperatorParams,
    square: bool,
) -> Result<FieldMatrix<Rational>, Failure> {
    match kind {
        MatrixKind::E => matrix_m_e(m, p, square),
        MatrixKind::Y => matrix_m_y(m, p, square),
    }
    .map_err(Failure::from_lib)
}

fn render_numbers(values: &[Rational], format: Format) -> String {
    let strings: Vec<String> = values.iter().map(Rational::to_string).collect();
    match format {
        Format::Text => strings.join(", ") + "\n",
        Format::Csv => strings.join(",") + "\n",
        Format::Json => serde_json::to_string(&strings).expect("string arrays serialize") + "\n",
    }
}

fn polynomial_csv(p: &DensePolynomial<Rational>) -> String {
    if p.coeffs().is_empty() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn render_polynomial(p: &DensePolynomial<Rational>, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Csv => polynomial_csv(p) + "\n",
        Format::Json => p.to_json() + "\n",
    }
}

fn render_family(label: &str, polys: &[DensePolynomial<Rational>], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (k, p) in polys.iter().enumerate() {
                let _ = writeln!(out, "{label}_{k} = {p}");
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for p in polys {
                let _ = writeln!(out, "{}", polynomial_csv(p));
            }
            out
        }
        Format::Json => {
            let values: Vec<serde_json::Value> =
                polys.iter().map(DensePolynomial::to_json_value).collect();
            serde_json::to_string(&values).expect("value arrays serialize") + "\n"
        }
    }
}

fn render_matrix(m: &FieldMatrix<Rational>, format: Format) -> String {
    match format {
        Format::Text => m.to_text(),
        Format::Csv => m.to_csv(),
        Format::Json => m.to_json() + "\n",
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn run_verify(
    identity: Identity,
    max_m: usize,
    samples: usize,
    seed: u64,
) -> Result<String, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = match identity {
        Identity::Ey1 => "ey1",
        Identity::AfI2 => "af-i2",
        Identity::AfI01 => "af-i01",
        Identity::Dn2 => "dn2",
        Identity::Derivative => "derivative",
    };
    let mut failures: Vec<String> = Vec::new();
    let mut total = 0usize;

    match identity {
        Identity::Dn2 => {
            for n in 0..=max_m {
                total += 1;
                let (lhs, rhs) = stirling1_bernoulli_sum(n);
                if lhs != rhs {
                    failures.push(format!("n = {n}: {lhs} != {rhs}"));
                }
            }
        }
        Identity::Derivative => {
            let polys = bernoulli_polynomials(max_m.max(1));
            for n in 1..=max_m.max(1) {
                total += 1;
                let lhs = polys[n].derivative();
                let rhs = polys[n - 1].scale(&Rational::from_int(n as i64));
                if lhs != rhs {
                    failures.push(format!("n = {n}: {lhs} != {rhs}"));
                }
            }
        }
        Identity::Ey1 | Identity::AfI2 | Identity::AfI01 => {
            for m in 0..=max_m {
                total += 1;
                let mut bad: Option<String> = None;
                for _ in 0..samples.max(1) {
                    let a = random_rational(&mut rng);
                    match identity {
                        Identity::Ey1 => {
                            let (lhs, rhs) = identity_ey1(m, &a);
                            if lhs != rhs {
                                bad = Some(format!("m = {m}, a = {a}: {lhs} != {rhs}"));
                            }
                        }
                        Identity::AfI01 => {
                            let (lhs, rhs) = identity_af_i01(m, &a);
                            if lhs != rhs {
                                bad = Some(format!("m = {m}, a = {a}: {lhs} != {rhs}"));
                            }
                        }
                        Identity::AfI2 => {
                            let b = random_rational(&mut rng);
                            let (lhs, rhs) = identity_af_i2(m, &a, &b);
                            if lhs != rhs {
                                bad = Some(format!("m = {m}, a = {a}, b = {b}: {lhs} != {rhs}"));
                            }
                        }
                        _ => unreachable!("outer match covers the sweep identities"),
                    }
                    if bad.is_some() {
                        break;
                    }
                }
                if let Some(msg) = bad {
                    failures.push(msg);
                }
            }
        }
    }

    Ok(sweep_report(name, total, &failures)?)
}

/// Formats the sweep outcome; a failing sweep becomes the exit-3 variant
/// carrying the same report.
fn sweep_report(name: &str, total: usize, failures: &[String]) -> Result<String, Failure> {
    if failures.is_empty() {
        Ok(format!("{name}: {total}/{total} exact\n"))
    } else {
        let mut report = format!("{name}: {}/{total} exact\n", total - failures.len());
        for f in failures {
            let _ = writeln!(report, "  counterexample: {f}");
        }
        Err(Failure::Verification(report))
    }
}

fn run_zeta(
    theorem: Theorem,
    a: &str,
    b: &str,
    k: Option<usize>,
    max_terms: usize,
    digits: usize,
) -> Result<String, Failure> {
    if digits < 1 {
        return Err(Failure::Domain("--digits must be at least 1".to_string()));
    }
    if max_terms < 1 {
        return Err(Failure::Domain(
            "--max-terms must be at least 1".to_string(),
        ));
    }
    let a = parse_rational(a)?;
    let b = parse_rational(b)?;
    if k.is_some() && !matches!(theorem, Theorem::Bnx4) {
        return Err(Failure::Usage(
            "--k only applies to --theorem bnx4".to_string(),
        ));
    }
    let (eval, reference) = match theorem {
        Theorem::Bx13 => {
            require_positive(&a, "a")?;
            require_positive(&b, "b")?;
            let eval = zeta2_asymptotic(&a, &b, max_terms);
            let reference = zeta_reference(2, &a, digits)?;
            (eval, reference)
        }
        Theorem::Bnx4 => {
            let k = k.unwrap_or(0);
            require_positive(&a, "a")?;
            if b.is_zero() {
                return Err(Failure::Domain("b must be nonzero".to_string()));
            }
            let x = GaussianRational::new(Rational::from_int(0), b.clone());
            let eval = zeta_k_asymptotic(k, &a, &x, max_terms);
            let s =
                u32::try_from(k + 2).map_err(|_| Failure::Domain("k is too large".to_string()))?;
            let reference = zeta_reference(s, &a, digits)?;
            (eval, reference)
        }
        Theorem::AfI0a => {
            require_positive(&a, "a")?;
            let b_minus_one = &b - &Rational::from_int(1);
            if b_minus_one.is_zero() || b_minus_one.is_negative() {
                return Err(Failure::Domain(format!("b must exceed 1, got {b}")));
            }
            let eval = reciprocal_square_series(&a, &b, max_terms);
            let reference = Rational::from_int(1)
                .checked_div(&(&a * &a))
                .expect("a is positive");
            (eval, reference)
        }
    };
    let report = eval.to_json_value(&reference, digits);
    Ok(serde_json::to_string(&report).expect("report serializes") + "\n")
}

/// Rational reference for zeta(s, a) accurate to the rendered digit count.
fn zeta_reference(s: u32, a: &Rational, digits: usize) -> Result<Rational, Failure> {
    let rendered = hurwitz_zeta_reference(s, a, digits).map_err(Failure::from_lib)?;
    Rational::from_decimal(&rendered).map_err(Failure::from_lib)
}

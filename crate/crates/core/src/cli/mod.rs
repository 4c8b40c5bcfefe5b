//! Command-line surface: argument parsing, orchestration of the library and
//! serialization of results.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (bad mathematical
//! input, e.g. non-coprime rank and degree for the closed method), 3
//! internal invariant violation. Nothing is printed to standard output on
//! failure.
//!
//! Rationals on the command line use `p/q` syntax; vectors are
//! comma-separated with no spaces. There are no configuration files or
//! environment variables: every input is a flag, so invocations are
//! reproducible verbatim.

mod render;

pub use render::{parse_poly_json, poly_json, render_poly, Format};

use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::error::Error;
use crate::exactalg::LaurentPoly;
use crate::genus::{euler_pgl, pgl_hy, Method, PglInput};
use crate::stability::{
    enumerate_admissible_degrees, find_walls, higgs_index_set, necessary_conditions, ChainDatum,
    Witness,
};
use render::{csv_field, rational_str, vec_json, vec_str};

/// Outcome of a failed invocation, carrying the exit code and the stream
/// the message belongs on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CliError {
    /// Help or version text explicitly requested; exits 0 on stdout.
    Help(String),
    Usage(String),
    Domain(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Help(_) => 0,
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Help(m)
            | CliError::Usage(m)
            | CliError::Domain(m)
            | CliError::Internal(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(m) => CliError::Domain(format!("domain error: {m}")),
            Error::Internal(m) => CliError::Internal(format!("internal invariant violation: {m}")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum MethodArg {
    Closed,
    Direct,
    Rootsum,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FormatArg {
    Human,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Human => Format::Human,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "higgsy",
    about = "Exact y-genera of PGL_n-Higgs moduli and chain stability combinatorics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compactly supported y-genus of the semistable PGL_n-Higgs moduli space
    Ygenus {
        /// Rank n >= 1
        #[arg(long)]
        n: i64,
        /// Degree (any integer; the closed method needs gcd(n, d) = 1)
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// Curve genus g >= 2
        #[arg(long)]
        g: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
    /// Euler characteristic of the PGL_n-Higgs moduli space
    Euler {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        g: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
    /// Chain-level queries
    Chains {
        #[command(subcommand)]
        command: ChainsCommand,
    },
    /// The finite set of chain data contributing to rank-n degree-d Higgs moduli
    IndexSet {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        g: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
    /// Walls of the stability ray alpha + t*delta on (0, t-max]
    Walls {
        /// Comma-separated positive integers, e.g. 1,1
        #[arg(long, allow_hyphen_values = true)]
        ranks: String,
        /// Comma-separated integers, e.g. 1,0
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        /// Comma-separated rationals p/q, e.g. 0,2
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Comma-separated integers, e.g. 0,1
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        /// Positive rational p/q
        #[arg(long = "t-max", allow_hyphen_values = true)]
        t_max: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
    /// One row per rank up to n-max: degree, half-dimension, Euler number, y-genus
    Table {
        #[arg(long = "n-max")]
        n_max: i64,
        #[arg(long)]
        g: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
enum ChainsCommand {
    /// Evaluate the necessary existence conditions for a chain datum
    Conditions {
        #[arg(long, allow_hyphen_values = true)]
        ranks: String,
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
    /// Enumerate all admissible degree vectors with the given total
    Degrees {
        #[arg(long, allow_hyphen_values = true)]
        ranks: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_negative_numbers = true)]
        total: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
}

fn parse_int_vec(s: &str, what: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|part| {
            part.trim().parse::<i64>().map_err(|_| {
                CliError::Usage(format!("invalid {what} entry {part:?}: expected an integer"))
            })
        })
        .collect()
}

fn parse_rational_vec(s: &str, what: &str) -> Result<Vec<BigRational>, CliError> {
    s.split(',')
        .map(|part| {
            BigRational::from_str(part.trim()).map_err(|_| {
                CliError::Usage(format!(
                    "invalid {what} entry {part:?}: expected an integer or p/q"
                ))
            })
        })
        .collect()
}

fn parse_rational(s: &str, what: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(s.trim())
        .map_err(|_| CliError::Usage(format!("invalid {what} {s:?}: expected an integer or p/q")))
}

/// Parse and run an invocation, returning the full standard-output text.
/// `argv` includes the program name. No output is produced on failure.
pub fn dispatch<I, S>(argv: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&argv).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Help(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    })?;
    match cli.command {
        Command::Ygenus {
            n,
            d,
            g,
            method,
            format,
        } => run_ygenus(n, d, g, method, format.into()),
        Command::Euler { n, g, format } => run_euler(n, g, format.into()),
        Command::Chains { command } => match command {
            ChainsCommand::Conditions {
                ranks,
                degrees,
                alpha,
                format,
            } => run_conditions(&ranks, &degrees, &alpha, format.into()),
            ChainsCommand::Degrees {
                ranks,
                alpha,
                total,
                format,
            } => run_degrees(&ranks, &alpha, total, format.into()),
        },
        Command::IndexSet { n, d, g, format } => run_index_set(n, d, g, format.into()),
        Command::Walls {
            ranks,
            degrees,
            alpha,
            delta,
            t_max,
            format,
        } => run_walls(&ranks, &degrees, &alpha, &delta, &t_max, format.into()),
        Command::Table { n_max, g, format } => run_table(n_max, g, format.into()),
    }
}

/// Run an invocation and print the outcome; returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    match dispatch(argv) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(CliError::Help(text)) => {
            println!("{text}");
            0
        }
        Err(e) => {
            eprintln!("{}", e.message());
            e.exit_code()
        }
    }
}

fn run_ygenus(
    n: i64,
    d: i64,
    g: i64,
    method: MethodArg,
    format: Format,
) -> Result<String, CliError> {
    let input = PglInput::new(n, d, g)?;
    let single = |m: Method| -> Result<LaurentPoly, CliError> { Ok(pgl_hy(&input, m)?) };
    match method {
        MethodArg::Closed => Ok(render_poly(&single(Method::Closed)?, format) + line_end(format)),
        MethodArg::Direct => Ok(render_poly(&single(Method::Direct)?, format) + line_end(format)),
        MethodArg::Rootsum => {
            Ok(render_poly(&single(Method::RootSum)?, format) + line_end(format))
        }
        MethodArg::All => {
            let closed = single(Method::Closed)?;
            let direct = single(Method::Direct)?;
            let rootsum = single(Method::RootSum)?;
            let out = match format {
                Format::Human => format!(
                    "closed: {closed}\ndirect: {direct}\nrootsum: {rootsum}\n"
                ),
                Format::Json => format!(
                    "{{\"closed\":{},\"direct\":{},\"rootsum\":{}}}",
                    poly_json(&closed),
                    poly_json(&direct),
                    poly_json(&rootsum)
                ),
                Format::Csv => {
                    let mut out = String::from("method,exp,coeff\n");
                    for (name, poly) in
                        [("closed", &closed), ("direct", &direct), ("rootsum", &rootsum)]
                    {
                        for (e, c) in poly.terms() {
                            out.push_str(&format!("{name},{e},{c}\n"));
                        }
                    }
                    out
                }
            };
            Ok(out)
        }
    }
}

fn line_end(format: Format) -> &'static str {
    match format {
        Format::Human => "\n",
        Format::Json => "",
        Format::Csv => "",
    }
}

fn run_euler(n: i64, g: i64, format: Format) -> Result<String, CliError> {
    let value = euler_pgl(n, g)?;
    Ok(match format {
        Format::Human => format!("{value}\n"),
        Format::Json => format!("{{\"n\":{n},\"g\":{g},\"euler\":\"{value}\"}}"),
        Format::Csv => format!("n,g,euler\n{n},{g},{value}\n"),
    })
}

fn witness_indices(w: &Witness) -> Vec<i64> {
    match w {
        Witness::Index(j) => vec![*j as i64],
        Witness::Pair(k, j) => vec![*k as i64, *j as i64],
    }
}

fn run_conditions(
    ranks: &str,
    degrees: &str,
    alpha: &str,
    format: Format,
) -> Result<String, CliError> {
    let ranks = parse_int_vec(ranks, "ranks")?;
    let degrees = parse_int_vec(degrees, "degrees")?;
    let alpha = parse_rational_vec(alpha, "alpha")?;
    let datum = ChainDatum::new(ranks, degrees, alpha)?;
    let report = necessary_conditions(&datum)?;
    Ok(match format {
        Format::Human => {
            if report.passed() {
                "passed\n".to_string()
            } else {
                let mut out = String::from("failed\n");
                for f in &report.failures {
                    out.push_str(&format!(
                        "{} at ({}): {} > {}\n",
                        f.condition.as_str(),
                        vec_str(&witness_indices(&f.witness)),
                        rational_str(&f.lhs),
                        rational_str(&f.rhs),
                    ));
                }
                out
            }
        }
        Format::Json => {
            let failures: Vec<String> = report
                .failures
                .iter()
                .map(|f| {
                    format!(
                        "{{\"condition\":\"{}\",\"witness\":{},\"lhs\":\"{}\",\"rhs\":\"{}\"}}",
                        f.condition.as_str(),
                        vec_json(&witness_indices(&f.witness)),
                        rational_str(&f.lhs),
                        rational_str(&f.rhs),
                    )
                })
                .collect();
            format!(
                "{{\"passed\":{},\"failures\":[{}]}}",
                report.passed(),
                failures.join(",")
            )
        }
        Format::Csv => {
            let mut out = String::from("condition,witness,lhs,rhs\n");
            for f in &report.failures {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    f.condition.as_str(),
                    csv_field(&vec_str(&witness_indices(&f.witness))),
                    csv_field(&rational_str(&f.lhs)),
                    csv_field(&rational_str(&f.rhs)),
                ));
            }
            out
        }
    })
}

fn run_degrees(ranks: &str, alpha: &str, total: i64, format: Format) -> Result<String, CliError> {
    let ranks = parse_int_vec(ranks, "ranks")?;
    let alpha = parse_rational_vec(alpha, "alpha")?;
    let degrees = enumerate_admissible_degrees(&ranks, &alpha, total)?;
    Ok(match format {
        Format::Human => {
            let mut out = String::new();
            for d in &degrees {
                out.push_str(&vec_str(d));
                out.push('\n');
            }
            out
        }
        Format::Json => format!(
            "[{}]",
            degrees.iter().map(|d| vec_json(d)).collect::<Vec<_>>().join(",")
        ),
        Format::Csv => {
            let header: Vec<String> = (0..ranks.len()).map(|i| format!("d{i}")).collect();
            let mut out = header.join(",");
            out.push('\n');
            for d in &degrees {
                out.push_str(&vec_str(d));
                out.push('\n');
            }
            out
        }
    })
}

fn run_index_set(n: i64, d: i64, g: i64, format: Format) -> Result<String, CliError> {
    let entries = higgs_index_set(n, d, g)?;
    Ok(match format {
        Format::Human => {
            let mut out = String::new();
            for (ranks, degrees) in &entries {
                out.push_str(&format!(
                    "ranks=({}) degrees=({})\n",
                    vec_str(ranks),
                    vec_str(degrees)
                ));
            }
            out
        }
        Format::Json => format!(
            "[{}]",
            entries
                .iter()
                .map(|(r, d)| format!("[{},{}]", vec_json(r), vec_json(d)))
                .collect::<Vec<_>>()
                .join(",")
        ),
        Format::Csv => {
            let mut out = String::from("ranks,degrees\n");
            for (ranks, degrees) in &entries {
                out.push_str(&format!(
                    "{},{}\n",
                    csv_field(&vec_str(ranks)),
                    csv_field(&vec_str(degrees))
                ));
            }
            out
        }
    })
}

fn run_walls(
    ranks: &str,
    degrees: &str,
    alpha: &str,
    delta: &str,
    t_max: &str,
    format: Format,
) -> Result<String, CliError> {
    let ranks = parse_int_vec(ranks, "ranks")?;
    let degrees = parse_int_vec(degrees, "degrees")?;
    let alpha = parse_rational_vec(alpha, "alpha")?;
    let delta = parse_int_vec(delta, "delta")?;
    let t_max = parse_rational(t_max, "t-max")?;
    let report = find_walls(&ranks, &degrees, &alpha, &delta, &t_max)?;
    Ok(match format {
        Format::Human => {
            let mut out = String::new();
            for wall in &report.walls {
                out.push_str(&format!("t = {}\n", rational_str(&wall.t)));
                for (m, e) in &wall.witnesses {
                    out.push_str(&format!(
                        "  ranks=({}) degrees=({})\n",
                        vec_str(m),
                        vec_str(e)
                    ));
                }
            }
            out
        }
        Format::Json => format!(
            "[{}]",
            report
                .walls
                .iter()
                .map(|wall| {
                    let witnesses: Vec<String> = wall
                        .witnesses
                        .iter()
                        .map(|(m, e)| format!("[{},{}]", vec_json(m), vec_json(e)))
                        .collect();
                    format!(
                        "{{\"t\":\"{}\",\"witnesses\":[{}]}}",
                        rational_str(&wall.t),
                        witnesses.join(",")
                    )
                })
                .collect::<Vec<_>>()
                .join(",")
        ),
        Format::Csv => {
            let mut out = String::from("t,ranks,degrees\n");
            for wall in &report.walls {
                for (m, e) in &wall.witnesses {
                    out.push_str(&format!(
                        "{},{},{}\n",
                        csv_field(&rational_str(&wall.t)),
                        csv_field(&vec_str(m)),
                        csv_field(&vec_str(e))
                    ));
                }
            }
            out
        }
    })
}

/// Smallest nonnegative degree coprime to `n`: 0 for `n = 1`, else 1.
fn smallest_coprime_degree(n: i64) -> i64 {
    i64::from(n != 1)
}

fn run_table(n_max: i64, g: i64, format: Format) -> Result<String, CliError> {
    if n_max < 1 {
        return Err(CliError::Domain(format!(
            "domain error: n-max must be >= 1, got {n_max}"
        )));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let d = smallest_coprime_degree(n);
        let input = PglInput::new(n, d, g)?;
        let poly = pgl_hy(&input, Method::Closed)?;
        let euler = poly.eval_one();
        rows.push((n, d, g, input.half_dim(), euler, poly));
    }
    Ok(match format {
        Format::Human | Format::Csv => {
            let mut out = String::from("n,d,g,N,euler,poly\n");
            for (n, d, g, half_dim, euler, poly) in &rows {
                out.push_str(&format!(
                    "{n},{d},{g},{half_dim},{euler},{}\n",
                    csv_field(&poly.to_string())
                ));
            }
            out
        }
        Format::Json => format!(
            "[{}]",
            rows.iter()
                .map(|(n, d, g, half_dim, euler, poly)| {
                    format!(
                        "{{\"n\":{n},\"d\":{d},\"g\":{g},\"N\":{half_dim},\"euler\":\"{euler}\",\"poly\":{}}}",
                        poly_json(poly)
                    )
                })
                .collect::<Vec<_>>()
                .join(",")
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(rest: &[&str]) -> Vec<String> {
        std::iter::once("higgsy")
            .chain(rest.iter().copied())
            .map(String::from)
            .collect()
    }

    #[test]
    fn ygenus_trivial_case_prints_one() {
        let out = dispatch(args(&[
            "ygenus", "--n", "1", "--d", "0", "--g", "2", "--method", "closed", "--format",
            "human",
        ]))
        .unwrap();
        assert_eq!(out, "1\n");
    }

    #[test]
    fn ygenus_non_coprime_closed_is_a_domain_error() {
        let err = dispatch(args(&["ygenus", "--n", "2", "--d", "2", "--g", "2"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.message().contains("coprime"), "{}", err.message());
    }

    #[test]
    fn ygenus_all_methods_agree_in_json() {
        let out = dispatch(args(&[
            "ygenus", "--n", "2", "--d", "1", "--g", "2", "--method", "all", "--format", "json",
        ]))
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let closed = v.get("closed").unwrap();
        assert_eq!(closed, v.get("direct").unwrap());
        assert_eq!(closed, v.get("rootsum").unwrap());
        let p = parse_poly_json(&closed.to_string()).unwrap();
        assert_eq!(p.to_string(), "-2*y^4 - y^5 + y^6");
    }

    #[test]
    fn usage_errors_exit_one() {
        let err = dispatch(args(&["ygenus", "--n", "two"])).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        let err = dispatch(args(&["no-such-command"])).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        let err = dispatch(args(&["ygenus", "--n", "1", "--d", "0", "--g", "2", "--bogus", "1"]))
            .unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn help_exits_zero() {
        let err = dispatch(args(&["--help"])).unwrap_err();
        assert_eq!(err.exit_code(), 0);
    }

    #[test]
    fn chains_conditions_reports_failure() {
        let out = dispatch(args(&[
            "chains",
            "conditions",
            "--ranks",
            "1,1",
            "--degrees",
            "0,1",
            "--alpha",
            "0,2",
            "--format",
            "json",
        ]))
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["passed"], serde_json::Value::Bool(false));
        assert_eq!(v["failures"][0]["condition"], "C2");
        assert_eq!(v["failures"][0]["witness"][0], 1);
    }

    #[test]
    fn chains_degrees_lists_vectors() {
        let out = dispatch(args(&[
            "chains", "degrees", "--ranks", "2,1", "--alpha", "0,2", "--total", "1",
        ]))
        .unwrap();
        assert_eq!(out, "1,0\n2,-1\n");
        let json = dispatch(args(&[
            "chains", "degrees", "--ranks", "2,1", "--alpha", "0,2", "--total", "1", "--format",
            "json",
        ]))
        .unwrap();
        assert_eq!(json, "[[1,0],[2,-1]]");
    }

    #[test]
    fn index_set_output() {
        let out = dispatch(args(&[
            "index-set", "--n", "2", "--d", "1", "--g", "2", "--format", "json",
        ]))
        .unwrap();
        assert_eq!(out, "[[[2],[1]],[[1,1],[0,-1]]]");
    }

    #[test]
    fn walls_worked_instance() {
        let out = dispatch(args(&[
            "walls", "--ranks", "1,1", "--degrees", "1,0", "--alpha", "0,2", "--delta", "0,1",
            "--t-max", "10", "--format", "json",
        ]))
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let ts: Vec<&str> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|w| w["t"].as_str().unwrap())
            .collect();
        assert_eq!(ts, vec!["1", "3", "5", "7", "9"]);
    }

    #[test]
    fn table_columns_are_consistent() {
        let out = dispatch(args(&["table", "--n-max", "4", "--g", "2"])).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), "n,d,g,N,euler,poly");
        assert_eq!(out.lines().count(), 5);
        // euler column equals the poly column at y = 1 (n = 2 row)
        let row: Vec<&str> = out.lines().nth(2).unwrap().splitn(6, ',').collect();
        assert_eq!(row[0], "2");
        assert_eq!(row[4], "-2");
        assert_eq!(row[5], "-2*y^4 - y^5 + y^6");
    }

    #[test]
    fn identical_invocations_are_byte_identical() {
        let argv = args(&["ygenus", "--n", "3", "--d", "2", "--g", "2", "--format", "json"]);
        assert_eq!(dispatch(argv.clone()).unwrap(), dispatch(argv).unwrap());
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ctwork_bench::fit::{default_samples, fit_pn};
use ctwork_bench::suites::{run_suite, Suite, SuiteOutcome};
use ctwork_bench::verify::{verify, Settings};
use ctwork_bench::VerifyReport;
use ctwork_core::arith::{parse_rational, Rational};
use ctwork_core::closed::{macdonald_equal, PnFamily};
use ctwork_core::combin::{det, pfaffian_by_definition, pfaffian_by_elimination, SkewMatrix, MAX_DEFINITION_SIZE};
use ctwork_core::hyper::{d4_multisum, verify_certificate};
use ctwork_core::kernels::{KernelFamily, KernelParams};
use ctwork_core::Error;
use serde_json::json;

#[derive(Parser)]
#[command(name = "ctwork", about = "Check constant term identities exactly or by truncation", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Allow runs beyond desk scale (A-family fitting at n >= 7, complex BC at n >= 5).
    #[arg(long, global = true)]
    unbounded: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compare one kernel's constant term with its closed form.
    Verify {
        /// Family id, e.g. dyson, log-dyson, complex-morris.
        id: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// One value, or one per variable for dyson (comma separated).
        #[arg(long, value_delimiter = ',', default_value = "0")]
        a: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        b: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, value_parser = rational)]
        u: Option<Rational>,
        #[arg(long, value_parser = rational)]
        v: Option<Rational>,
        /// Truncation order of the formal binomial series.
        #[arg(long)]
        trunc: Option<u32>,
        #[arg(long, default_value_t = 128)]
        prec: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Run an acceptance block by name or number, or `all`.
    Suite { name: String },
    /// Fit the correction polynomial from truncated complex constant terms.
    FitPn {
        #[arg(long, default_value = "a")]
        family: PnFamily,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, value_delimiter = ',', value_parser = rational)]
        samples: Vec<Rational>,
        #[arg(long, default_value_t = 24)]
        trunc: u32,
        #[arg(long, default_value_t = 128)]
        prec: usize,
    },
    /// Pfaffian and determinant of a skew-symmetric matrix read from a JSON file.
    Pfaffian {
        #[arg(long)]
        file: PathBuf,
    },
    /// Check the telescoping certificate as a polynomial identity.
    Certificate,
    /// Evaluate the D4 multisum.
    D4 {
        #[arg(long)]
        u: u32,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational number: {s}"))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(v).expect("serialisable"));
}

fn print_suite(o: &SuiteOutcome, format: Format) {
    match format {
        Format::Json => print_json(o),
        Format::Csv => {
            for c in &o.checks {
                println!("{},{},{},{},{}", o.criterion, o.suite, csv_field(&c.label), c.passed, csv_field(&c.detail));
            }
        }
    }
    eprintln!("{}", o.summary());
}

fn run(cli: Cli) -> Result<bool, Error> {
    let format = cli.format;
    match cli.command {
        Command::Verify { id, n, a, b, k, m, u, v, trunc, prec, tol } => {
            let family: KernelFamily = id.parse()?;
            if family == KernelFamily::BcComplex && n >= 5 && !cli.unbounded {
                return Err(Error::Guard("complex BC at n >= 5 needs --unbounded".into()));
            }
            let p = KernelParams { n, a, b, k, m, u, v, order: trunc };
            let s = Settings { prec, tol, ..Settings::default() };
            let r = verify(family, &p, &s)?;
            match format {
                Format::Json => print_json(&r),
                Format::Csv => println!("{}\n{}", VerifyReport::CSV_HEADER, r.csv_row()),
            }
            Ok(r.passed())
        }
        Command::Suite { name } => {
            let suites: Vec<Suite> = if name == "all" { Suite::ALL.to_vec() } else { vec![name.parse()?] };
            if format == Format::Csv {
                println!("criterion,suite,check,passed,detail");
            }
            let s = Settings::default();
            let mut ok = true;
            for suite in suites {
                let o = run_suite(suite, &s);
                print_suite(&o, format);
                ok &= o.passed();
            }
            Ok(ok)
        }
        Command::FitPn { family, n, samples, trunc, prec } => {
            let samples = if samples.is_empty() { default_samples(2) } else { samples };
            let r = fit_pn(family, n, &samples, trunc, prec, cli.unbounded)?;
            match format {
                Format::Json => print_json(&r),
                Format::Csv => {
                    println!("u,s,lhs,tail,reduced");
                    for x in &r.samples {
                        println!("{},{:e},{:e},{:e},{:e}", x.u, x.s, x.lhs, x.tail, x.reduced);
                    }
                    let coeffs: Vec<String> = r.fitted.iter().map(|c| format!("{c:e}")).collect();
                    println!("fitted,{}", coeffs.join(" "));
                }
            }
            Ok(r.residuals.iter().all(|x| x.is_finite()))
        }
        Command::Pfaffian { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::InvalidParams(format!("cannot read {}: {e}", file.display())))?;
            let a = parse_matrix(&text)?;
            let pf = pfaffian_by_elimination(&a)?;
            let by_def = (a.size() <= MAX_DEFINITION_SIZE).then(|| pfaffian_by_definition(&a)).transpose()?;
            let d = det(a.rows())?;
            let square_ok = &pf * &pf == d;
            let def_ok = by_def.as_ref().is_none_or(|x| *x == pf);
            let out = json!({
                "size": a.size(),
                "pfaffian": pf.to_string(),
                "definition": by_def.map(|x| x.to_string()),
                "det": d.to_string(),
                "square_equals_det": square_ok,
            });
            emit_pairs(&out, format);
            Ok(square_ok && def_ok)
        }
        Command::Certificate => {
            let r = verify_certificate();
            match format {
                Format::Json => print_json(&r),
                Format::Csv => {
                    println!("verified,difference_terms,total_degree,denominator_factors");
                    println!("{},{},{},{}", r.verified, r.difference_terms, r.total_degree, r.denominator_factors);
                }
            }
            Ok(r.verified)
        }
        Command::D4 { u } => {
            let value = d4_multisum(u)?;
            let mut out = json!({ "u": u, "value": value.to_string() });
            if u == 2 {
                out["macdonald"] = json!(macdonald_equal(&[2, 4, 4, 6], 1).to_string());
            }
            emit_pairs(&out, format);
            Ok(true)
        }
    }
}

/// A flat JSON object, or `key,value` lines.
fn emit_pairs(v: &serde_json::Value, format: Format) {
    match format {
        Format::Json => print_json(v),
        Format::Csv => {
            for (k, x) in v.as_object().expect("object") {
                let s = match x {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                println!("{k},{}", csv_field(&s));
            }
        }
    }
}

/// Rows of numbers or `p/q` strings, either bare or under a `rows` key.
fn parse_matrix(text: &str) -> Result<SkewMatrix<Rational>, Error> {
    let bad = |m: &str| Error::InvalidParams(format!("matrix file: {m}"));
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let rows = v.get("rows").unwrap_or(&v).as_array().ok_or_else(|| bad("expected an array of rows"))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("row is not an array"))?
                .iter()
                .map(|x| {
                    let s = match x {
                        serde_json::Value::String(s) => s.clone(),
                        serde_json::Value::Number(n) => n.to_string(),
                        _ => return Err(bad("entries must be numbers or strings")),
                    };
                    parse_rational(&s).ok_or_else(|| bad(&format!("bad entry {s}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SkewMatrix::from_rows(rows)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

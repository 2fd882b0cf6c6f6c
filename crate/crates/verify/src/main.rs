use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use daha_core::ncalg::{embed_aw, Alphabet, DahaAlgebra};
use daha_core::polyrep::BasicRep;
use daha_verify::config::params_from;
use daha_verify::{catalog_table, emit_report, parse_expression_with, run_checks, Config, Settings};

#[derive(Parser)]
#[command(name = "verify", version, about = "Exact checks for the rank-one DAHA, AW(3) and Askey-Wilson polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks from the catalog and write a report.
    Run(RunArgs),
    /// Print the normal form of an expression, one basis monomial per line.
    Reduce {
        expr: String,
        #[arg(long, value_enum, default_value = "daha")]
        alphabet: AlphabetArg,
        /// `q=Q,a=A,b=B,c=C,d=D`; symbolic when omitted.
        #[arg(long)]
        params: Option<String>,
    },
    /// Print the coefficients of P_n (or Q_n) as `k: coef` lines.
    AwPoly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        shifted: bool,
        #[arg(long)]
        params: Option<String>,
    },
    /// Print the check catalog.
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Daha,
    Aw,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: Option<String>,
    /// Comma-separated ids, `prefix.*` patterns, or `all`.
    #[arg(long)]
    checks: Option<String>,
    /// `exact` or `prob`.
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    trials: Option<String>,
    #[arg(long)]
    max_mn: Option<String>,
    #[arg(long)]
    max_degree: Option<String>,
    #[arg(long)]
    max_n: Option<String>,
    #[arg(long, conflicts_with = "symbolic")]
    params: Option<String>,
    #[arg(long)]
    symbolic: bool,
    #[arg(long)]
    out: Option<String>,
    /// `json` or `text`.
    #[arg(long)]
    format: Option<String>,
}

impl RunArgs {
    fn settings(&self) -> Settings {
        Settings {
            checks: self.checks.clone(),
            mode: self.mode.clone(),
            seed: self.seed.clone(),
            trials: self.trials.clone(),
            max_mn: self.max_mn.clone(),
            max_degree: self.max_degree.clone(),
            max_n: self.max_n.clone(),
            params: self.params.clone(),
            symbolic: self.symbolic.then_some(true),
            out: self.out.clone(),
            format: self.format.clone(),
        }
    }
}

fn run(args: &RunArgs) -> Result<bool, String> {
    let file = match &args.config {
        Some(path) => Settings::from_file(path).map_err(|e| e.to_string())?,
        None => Settings::default(),
    };
    let config = Config::from_settings(&args.settings().over(file)).map_err(|e| e.to_string())?;
    let report = run_checks(&config).map_err(|e| e.to_string())?;
    match &config.out {
        Some(path) => emit_report(&report, path, config.format).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{}", report.render(config.format)),
    }
    for r in report.results.iter().filter(|r| !r.residual_summary.is_empty()) {
        eprintln!("{} {}: {}", r.id, r.verdict.as_str(), r.residual_summary);
    }
    eprintln!("overall: {}", if report.passed() { "pass" } else { "fail" });
    Ok(report.passed())
}

fn reduce(expr: &str, alphabet: AlphabetArg, params: Option<&str>) -> Result<(), String> {
    let params = params_from(params).map_err(|e| e.to_string())?;
    let alphabet = match alphabet {
        AlphabetArg::Daha => Alphabet::Daha,
        AlphabetArg::Aw => Alphabet::Aw,
    };
    let e = parse_expression_with(expr, alphabet, params.values()).map_err(|e| e.to_string())?;
    let h = DahaAlgebra::new(params.values().clone());
    let nf = match alphabet {
        Alphabet::Daha => h.reduce(&e),
        Alphabet::Aw => embed_aw(&h, &e),
    }
    .map_err(|e| e.to_string())?;
    if nf.is_zero() {
        println!("0");
    }
    for line in nf.to_lines() {
        println!("{line}");
    }
    Ok(())
}

fn aw_poly(n: u32, shifted: bool, params: Option<&str>) -> Result<(), String> {
    let params = params_from(params).map_err(|e| e.to_string())?;
    let rep = BasicRep::new(params.values());
    let p = if shifted { rep.shifted_qn(n) } else { rep.askey_wilson(n) }.map_err(|e| e.to_string())?;
    let n = n as i32;
    for k in -n..=n {
        println!("{k}: {}", p.coeff(k));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(args) => run(args),
        Command::Reduce { expr, alphabet, params } => reduce(expr, *alphabet, params.as_deref()).map(|_| true),
        Command::AwPoly { n, shifted, params } => aw_poly(*n, *shifted, params.as_deref()).map(|_| true),
        Command::Catalog => {
            print!("{}", catalog_table());
            Ok(true)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

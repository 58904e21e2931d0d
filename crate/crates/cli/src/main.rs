use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vwb_core::H1Mode;

mod commands;

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "vwb", version, about = "Exact dimension counts for rank-two wild Vafa-Witten pairs on P2")]
struct Cli {
    /// Emit the JSON report instead of a table
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to FILE
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chern classes of a bundle
    #[command(subcommand)]
    Chern(BundleKind),
    /// Line bundle cohomology
    #[command(subcommand)]
    Cohom(CohomKind),
    /// Stability tests
    #[command(subcommand)]
    Stability(BundleKind),
    /// h^i(End_0 E(d)) for a type-1 Schwarzenberger bundle
    #[command(name = "end0-dims", allow_negative_numbers = true)]
    End0Dims(ModeArgs),
    /// Tangent and obstruction dimensions of the moduli space
    #[command(allow_negative_numbers = true)]
    Moduli(ModeArgs),
    /// Higgs fields on O + O(m)
    #[command(allow_negative_numbers = true)]
    Split(SplitArgs),
    /// Components of the C*-fixed locus
    #[command(name = "fixed-points", allow_negative_numbers = true)]
    FixedPoints(FixedArgs),
    /// Run the invariant suite over a grid
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum BundleKind {
    /// f_* O(r, s) from the quadric
    #[command(allow_negative_numbers = true)]
    L1 {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
    },
    /// g_* L^{p,t} from the seven-point blow-up
    #[command(allow_negative_numbers = true)]
    L2 {
        #[arg(long)]
        p: i64,
        /// seven comma-separated integers
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        t: Vec<i64>,
    },
    /// O(m1) + O(m2), optionally with a Higgs twist d
    #[command(allow_negative_numbers = true)]
    Split {
        #[arg(long)]
        m1: i64,
        #[arg(long)]
        m2: i64,
        #[arg(long, default_value_t = 1)]
        d: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CohomKind {
    /// O(k) on P2
    #[command(allow_negative_numbers = true)]
    P2 {
        #[arg(long)]
        k: i64,
    },
    /// O(a, b) on P1 x P1
    #[command(allow_negative_numbers = true)]
    Quadric {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// L^{p,t} on the seven-point blow-up
    #[command(allow_negative_numbers = true)]
    Blowup7 {
        #[arg(long)]
        p: i64,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        t: Vec<i64>,
    },
}

#[derive(Args, Debug)]
pub struct ModeArgs {
    #[arg(long)]
    pub r: i64,
    #[arg(long)]
    pub s: i64,
    #[arg(long)]
    pub d: u64,
    /// Source for h^1(End_0 E(d))
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ModeArg {
    Paper,
    Derived,
}

impl From<ModeArg> for H1Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Paper => H1Mode::Paper,
            ModeArg::Derived => H1Mode::Derived,
        }
    }
}

#[derive(Args, Debug)]
pub struct SplitArgs {
    #[arg(long)]
    pub m: i64,
    #[arg(long)]
    pub d: i64,
    /// Sample a field and run the brute-force conjugation count
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct FixedArgs {
    #[arg(long)]
    pub c1: i64,
    #[arg(long)]
    pub c2: i64,
    #[arg(long)]
    pub d: u64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    pub grid_dmax: u64,
    #[arg(long, default_value_t = 6)]
    pub grid_kmax: i64,
    #[arg(long, default_value_t = 3)]
    pub seeds: u64,
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Chern(kind) => commands::chern(kind),
        Command::Cohom(kind) => commands::cohom(kind),
        Command::Stability(kind) => commands::stability(kind),
        Command::End0Dims(args) => commands::end0_dims(args),
        Command::Moduli(args) => commands::moduli(args),
        Command::Split(args) => commands::split(args),
        Command::FixedPoints(args) => commands::fixed_points(args),
        Command::Verify(args) => commands::verify(args),
    }
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
    let report = match dispatch(cli.command) {
        Outcome::Report(report) => report,
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let json = report.to_json();
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &json) {
            eprintln!("error: cannot write {path}: {e}");
            return ExitCode::from(2);
        }
    }
    if cli.json {
        print!("{json}");
    } else {
        print!("{}", commands::render_table(&report));
    }
    ExitCode::from(report.status.exit_code() as u8)
}

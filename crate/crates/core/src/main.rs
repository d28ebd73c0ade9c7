use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use phdual::bench::{run_bench, torus, uniform_cube, DEFAULT_CELL_LIMIT};
use phdual::complex::FilteredComplex;
use phdual::error::{Error, Result};
use phdual::field::Field;
use phdual::io::{read_complex, read_points, InputFormat};
use phdual::oracle::oracle_diagram;
use phdual::persistence::ModuleKind;
use phdual::pipeline::{compute_barcode, compute_generators, Algorithm};
use phdual::simplicial::{rips_filtration, PointCloud};

/// Persistent homology and cohomology barcodes by matrix reduction.
#[derive(Parser)]
#[command(name = "phdual", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the barcode of one persistence module.
    Barcode(BarcodeArgs),
    /// Print a generator for every interval of one module.
    Generators(GeneratorArgs),
    /// Compare phcol and pcoh on a Rips filtration.
    Bench(BenchArgs),
    /// Check every algorithm and module against the rank oracle.
    OracleCheck(InputArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file.
    input: PathBuf,
    /// Input format: cells, simplicial or points.
    #[arg(long, default_value = "cells")]
    format: InputFormat,
    /// Prime modulus of the coefficient field.
    #[arg(long, default_value_t = 2)]
    field: u64,
    /// Rips radius for point input (default: the diameter).
    #[arg(long)]
    rmax: Option<f64>,
    /// Top simplex dimension for point input.
    #[arg(long, default_value_t = 2)]
    maxdim: usize,
}

#[derive(Args)]
struct BarcodeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// abs_hom, abs_coh, rel_hom or rel_coh.
    #[arg(long, default_value = "abs_hom")]
    module: ModuleKind,
    /// phcol, phrow or pcoh.
    #[arg(long, default_value = "phcol")]
    algorithm: Algorithm,
    /// Cross-check against the rank oracle; exit 1 on mismatch.
    #[arg(long)]
    oracle: bool,
    /// Print `<dim> <p> <q>` index pairs instead of values.
    #[arg(long)]
    indices: bool,
    /// Keep intervals whose endpoints carry equal values.
    #[arg(long)]
    keep_zero_length: bool,
}

#[derive(Args)]
struct GeneratorArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "abs_hom")]
    module: ModuleKind,
    #[arg(long, default_value = "phcol")]
    algorithm: Algorithm,
    #[arg(long)]
    keep_zero_length: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Point-cloud file; omit to sample points with --random.
    input: Option<PathBuf>,
    /// Sample this many random points instead of reading a file.
    #[arg(long)]
    random: Option<usize>,
    /// Ambient dimension of sampled cube points.
    #[arg(long, default_value_t = 4)]
    ambient: usize,
    /// Sample on a torus in R^3 instead of the unit cube.
    #[arg(long)]
    torus: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rips radius (default: the diameter).
    #[arg(long)]
    rmax: Option<f64>,
    #[arg(long, default_value_t = 2)]
    maxdim: usize,
    #[arg(long, default_value_t = 2)]
    field: u64,
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    /// Refuse complexes with more cells than this.
    #[arg(long, default_value_t = DEFAULT_CELL_LIMIT)]
    limit: usize,
    /// Also write the stats as CSV to this path (`-` for stdout).
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn load(args: &InputArgs) -> Result<FilteredComplex> {
    let field = Field::new(args.field)?;
    match args.format {
        InputFormat::Points => {
            let cloud = read_points(&args.input)?;
            let r = args.rmax.unwrap_or_else(|| cloud.diameter());
            rips_filtration(&cloud, r, args.maxdim, field)
        }
        format => read_complex(&args.input, format, field),
    }
}

fn barcode(args: &BarcodeArgs) -> Result<()> {
    let k = load(&args.input)?;
    let diagram = compute_barcode(&k, args.module, args.algorithm, !args.keep_zero_length)?;
    print!("{}", diagram.to_text(args.indices));
    if args.oracle {
        let full = compute_barcode(&k, args.module, args.algorithm, false)?;
        let expected = oracle_diagram(&k, args.module)?;
        if full.index_triples() != expected.index_triples() {
            return Err(Error::Mismatch(format!(
                "{} by {} differs from the oracle:\n{}",
                args.module,
                args.algorithm,
                expected.to_text(true)
            )));
        }
        eprintln!("oracle: ok");
    }
    Ok(())
}

fn generators(args: &GeneratorArgs) -> Result<()> {
    let k = load(&args.input)?;
    print!(
        "{}",
        compute_generators(&k, args.module, args.algorithm, !args.keep_zero_length)?
    );
    Ok(())
}

fn bench(args: &BenchArgs) -> Result<()> {
    let cloud: PointCloud = match (&args.input, args.random) {
        (Some(path), None) => read_points(path)?,
        (None, Some(count)) if args.torus => torus(count, args.seed),
        (None, Some(count)) => uniform_cube(count, args.ambient, args.seed),
        _ => {
            return Err(Error::Unavailable(
                "give either a point file or --random <count>".into(),
            ))
        }
    };
    let r = args.rmax.unwrap_or_else(|| cloud.diameter());
    let report = run_bench(
        &cloud,
        r,
        args.maxdim,
        Field::new(args.field)?,
        args.repeat,
        args.limit,
    )?;
    print!("{}", report.to_table());
    match &args.csv {
        Some(path) if path.as_os_str() == "-" => print!("{}", report.to_csv()),
        Some(path) => std::fs::write(path, report.to_csv())?,
        None => {}
    }
    Ok(())
}

fn oracle_check(args: &InputArgs) -> Result<()> {
    let k = load(args)?;
    let mut failures = 0;
    for kind in ModuleKind::ALL {
        let expected = oracle_diagram(&k, kind)?.index_triples();
        for algorithm in Algorithm::ALL {
            let got = compute_barcode(&k, kind, algorithm, false)?.index_triples();
            let ok = got == expected;
            failures += usize::from(!ok);
            println!(
                "{kind:<8} {algorithm:<6} {}",
                if ok { "ok" } else { "MISMATCH" }
            );
        }
    }
    if failures > 0 {
        return Err(Error::Mismatch(format!("{failures} of 12 combinations")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Barcode(a) => barcode(a),
        Command::Generators(a) => generators(a),
        Command::Bench(a) => bench(a),
        Command::OracleCheck(a) => oracle_check(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Mismatch(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! `ncrook`: enumerate, convert, multiply, factor and verify set partitions,
//! triangular rooks and noncommutative symmetric functions.
//!
//! Exit status: 0 on success, 1 on a semantic failure (non-extendable rook,
//! failed verification), 2 on usage or parse errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use ncrook_cli::{parse_as, render, Format};
use ncrook_core::rook::{extension_obstruction, Obstruction};
use ncrook_core::verify::{
    count_table, verify_corner_rooks, verify_counts, verify_extendable_atomic,
    verify_free_factorization, verify_isomorphism, verify_power_sum_products, CountTable,
    VerificationReport,
};
use ncrook_core::{
    atomic_factor, edsum, expand_m, expand_p, extend, is_atomic, is_extendable, is_unsplitable,
    mu_matrix, partition_to_rook, slash, split, unsplitable_factor, zeta_matrix, BasisMatrix,
    Partitions, RookPlacement, SetPartition,
};

#[derive(Parser)]
#[command(name = "ncrook", version, about)]
struct Cli {
    /// Emit canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of [n] in RGF-lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
    },
    /// Convert between partition, RGF and rook notation.
    Convert {
        value: String,
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        /// Also draw rooks as an ASCII grid (text mode only).
        #[arg(long)]
        grid: bool,
    },
    /// Slash or split product of partitions, or extended direct sum of rooks.
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        a: String,
        b: String,
    },
    /// Factor a nontrivial partition into atomic or unsplitable pieces.
    Factor {
        #[arg(long, value_enum)]
        op: FactorOp,
        value: String,
    },
    /// Complete a rook on T_n to a permutation matrix.
    Extend { rook: String },
    /// Expand p_π or m_π in k noncommuting variables.
    Expand {
        #[arg(long, value_enum)]
        basis: BasisArg,
        #[arg(long)]
        k: usize,
        value: String,
    },
    /// Print the p-to-m (zeta) or m-to-p (mu) change-of-basis matrix.
    BasisMatrix {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MatrixKind::Zeta)]
        matrix: MatrixKind,
    },
    /// Run an exhaustive verification suite.
    Verify(VerifyArgs),
    /// Tabulate Bell, atomic, extendable and unsplitable counts.
    Count {
        #[arg(long)]
        max: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    max: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    All,
    Atomic,
    Extendable,
    Unsplitable,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Slash,
    Split,
    Edsum,
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorOp {
    Atomic,
    Unsplitable,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    P,
    M,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Zeta,
    Mu,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    #[value(name = "thm1")]
    ExtendableAtomic,
    #[value(name = "corollary")]
    CornerRooks,
    #[value(name = "eq2")]
    PowerSumProducts,
    Iso,
    Factorization,
    Counts,
}

#[derive(Serialize)]
struct EnumerateOutput<'a> {
    n: usize,
    filter: &'a str,
    partitions: &'a [SetPartition],
    count: usize,
}

#[derive(Serialize)]
struct ExtendOutput<'a> {
    extendable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    column_of: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Obstruction>,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<&'a CountTable>,
}

enum Failure {
    /// Semantic failure; the certificate has already been printed.
    Semantic,
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(err: impl std::fmt::Display) -> Failure {
    Failure::Usage(err.to_string())
}

fn print_json<T: Serialize + ?Sized>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("JSON serializes"));
}

fn parse_partition(text: &str) -> Result<SetPartition, Failure> {
    ncrook_cli::parse_partition(text).map_err(Failure::Usage)
}

fn parse_rook(text: &str) -> Result<RookPlacement, Failure> {
    ncrook_cli::parse_rook(text).map_err(Failure::Usage)
}

fn check_range(what: &str, got: usize, min: usize, max: usize) -> Outcome {
    if (min..=max).contains(&got) {
        Ok(())
    } else {
        Err(usage(format!(
            "{what} must lie in [{min}, {max}], got {got}"
        )))
    }
}

fn enumerate(n: usize, filter: Filter, json: bool) -> Outcome {
    check_range("--n", n, 0, 12)?;
    let keep = |p: &SetPartition| match filter {
        Filter::All => true,
        Filter::Atomic => is_atomic(p),
        Filter::Extendable => !p.is_trivial() && is_extendable(&partition_to_rook(p)).unwrap(),
        Filter::Unsplitable => is_unsplitable(p),
    };
    let selected: Vec<SetPartition> = Partitions::new(n).filter(keep).collect();
    if json {
        let filter = filter.to_possible_value().expect("no skipped variants");
        print_json(&EnumerateOutput {
            n,
            filter: filter.get_name(),
            partitions: &selected,
            count: selected.len(),
        });
    } else {
        for p in &selected {
            println!("{p}");
        }
        println!("count: {}", selected.len());
    }
    Ok(())
}

fn convert(value: &str, from: Format, to: Format, grid: bool, json: bool) -> Outcome {
    let partition = parse_as(value, from).map_err(Failure::Usage)?;
    let (text, value) = render(&partition, to);
    if json {
        print_json(&value);
    } else {
        println!("{text}");
        if grid && to == Format::Rook {
            print!("{}", partition_to_rook(&partition).grid());
        }
    }
    Ok(())
}

fn product(op: ProductOp, a: &str, b: &str, json: bool) -> Outcome {
    let (text, value) = match op {
        ProductOp::Slash | ProductOp::Split => {
            let (x, y) = (parse_partition(a)?, parse_partition(b)?);
            let p = match op {
                ProductOp::Slash => slash(&x, &y),
                _ => split(&x, &y),
            };
            (p.to_string(), Value::String(p.to_string()))
        }
        ProductOp::Edsum => {
            let r = edsum(&parse_rook(a)?, &parse_rook(b)?);
            (r.to_json(), serde_json::to_value(&r).unwrap())
        }
    };
    if json {
        print_json(&value);
    } else {
        println!("{text}");
    }
    Ok(())
}

fn factor(op: FactorOp, value: &str, json: bool) -> Outcome {
    let p = parse_partition(value)?;
    let factors = match op {
        FactorOp::Atomic => atomic_factor(&p),
        FactorOp::Unsplitable => unsplitable_factor(&p),
    }
    .map_err(usage)?;
    if json {
        print_json(&factors);
    } else {
        for f in &factors {
            println!("{f}");
        }
    }
    Ok(())
}

fn extend_rook(text: &str, json: bool) -> Outcome {
    let rook = parse_rook(text)?;
    match extension_obstruction(&rook).map_err(usage)? {
        None => {
            let perm = extend(&rook).expect("no obstruction");
            if json {
                print_json(&ExtendOutput {
                    extendable: true,
                    column_of: Some(perm.column_of()),
                    certificate: None,
                });
            } else {
                println!("{}", serde_json::to_string(perm.column_of()).unwrap());
            }
            Ok(())
        }
        Some(cert) => {
            if json {
                print_json(&ExtendOutput {
                    extendable: false,
                    column_of: None,
                    certificate: Some(cert),
                });
            } else {
                println!(
                    "not extendable: i_{k} = {row}, j_{k} = {column}",
                    k = cert.k,
                    row = cert.row,
                    column = cert.column
                );
            }
            Err(Failure::Semantic)
        }
    }
}

fn expand(basis: BasisArg, k: usize, value: &str, json: bool) -> Outcome {
    if k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    let p = parse_partition(value)?;
    let f = match basis {
        BasisArg::P => expand_p(&p, k),
        BasisArg::M => expand_m(&p, k),
    };
    if json {
        println!("{}", f.to_json());
    } else {
        println!("{f}");
        println!("terms: {}", f.len());
    }
    Ok(())
}

fn basis_matrix(n: usize, kind: MatrixKind, json: bool) -> Outcome {
    check_range("--n", n, 1, 8)?;
    let matrix: BasisMatrix = match kind {
        MatrixKind::Zeta => zeta_matrix(n),
        MatrixKind::Mu => mu_matrix(n),
    };
    if json {
        print_json(&matrix);
        return Ok(());
    }
    let labels: Vec<String> = matrix.order().iter().map(|p| p.to_string()).collect();
    println!("order: {}", labels.join(" "));
    for row in matrix.entries() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        println!("{}", cells.join(""));
    }
    Ok(())
}

fn print_table_text(table: &CountTable) {
    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>11}",
        "n", "bell", "atomic", "extendable", "unsplitable"
    );
    for r in &table.rows {
        println!(
            "{:>3} {:>10} {:>10} {:>10} {:>11}",
            r.n, r.bell, r.atomic, r.extendable, r.unsplitable
        );
    }
}

fn print_report_text(report: &VerificationReport) {
    let [lo, hi] = report.n_range;
    println!(
        "suite {} over [{lo}, {hi}] (empty ground set excluded)",
        report.suite
    );
    println!("checked: {}", report.checked);
    println!("failures: {}", report.failures.len());
    for f in &report.failures {
        println!("  {f}");
    }
    println!("elapsed_ms: {}", report.elapsed_ms);
}

fn verify(args: &VerifyArgs, json: bool) -> Outcome {
    let (report, table) = match args.suite {
        Suite::ExtendableAtomic => (verify_extendable_atomic(args.max), None),
        Suite::CornerRooks => (verify_corner_rooks(args.max), None),
        Suite::PowerSumProducts => (verify_power_sum_products(args.max), None),
        Suite::Iso => (verify_isomorphism(args.max), None),
        Suite::Factorization => (verify_free_factorization(args.max), None),
        Suite::Counts => match verify_counts(args.max) {
            Ok((table, report)) => (Ok(report), Some(table)),
            Err(e) => (Err(e), None),
        },
    };
    let report = report.map_err(usage)?;
    if json {
        print_json(&VerifyOutput {
            report: &report,
            table: table.as_ref(),
        });
    } else {
        print_report_text(&report);
        if let Some(table) = &table {
            print_table_text(table);
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Semantic)
    }
}

fn count(max: usize, json: bool) -> Outcome {
    let table = count_table(max).map_err(usage)?;
    if json {
        print_json(&table);
    } else {
        print_table_text(&table);
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Enumerate { n, filter } => enumerate(*n, *filter, json),
        Command::Convert {
            value,
            from,
            to,
            grid,
        } => convert(value, *from, *to, *grid, json),
        Command::Product { op, a, b } => product(*op, a, b, json),
        Command::Factor { op, value } => factor(*op, value, json),
        Command::Extend { rook } => extend_rook(rook, json),
        Command::Expand { basis, k, value } => expand(*basis, *k, value, json),
        Command::BasisMatrix { n, matrix } => basis_matrix(*n, *matrix, json),
        Command::Verify(args) => verify(args, json),
        Command::Count { max } => count(*max, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Semantic) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

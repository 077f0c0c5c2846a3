//! Command-line interface.
//!
//! Exit codes: 0 success, 1 failed verification or count mismatch,
//! 2 usage error, 3 parse or validation error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::peterson::{homology_transport, phi_index, transport_product, PetersonContext};
use crate::rootdata::RootSystemC;
use crate::shapes::enumerate_pc;
use crate::textio::{
    diagram, load_relation, parse_partition, print_homology, print_phi_image, print_transported,
    relation_to_combo, transported_to_json, TextError,
};
use crate::verify::{run_all, run_suite, render_text, VerifyBounds, SUITE_NAMES};
use crate::weyl::{bfs_enumerate, default_bfs_cap};

#[derive(Parser)]
#[command(
    name = "lgk",
    version,
    about = "Affine Weyl group combinatorics of type C and quantum K-ring transport"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn rank_parser() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(1..=64)
}

#[derive(Subcommand)]
enum Command {
    /// Print the affine Weyl group element attached to a partition.
    Element {
        /// Rank of the root system.
        #[arg(long, value_parser = rank_parser())]
        n: u64,
        /// Partition, e.g. "3,2" or "[]".
        #[arg(long)]
        partition: String,
    },
    /// Print the quantum-side image of a class.
    Map {
        /// Rank of the root system.
        #[arg(long, value_parser = rank_parser())]
        n: u64,
        /// Partition, e.g. "3,2" or "[]".
        #[arg(long)]
        partition: String,
        /// Localization exponent d on the source class.
        #[arg(long, default_value_t = 0, conflicts_with = "homology")]
        loc_exp: i64,
        /// Use the homology-limit map instead.
        #[arg(long)]
        homology: bool,
        /// Degree parameter for --homology.
        #[arg(long, default_value_t = 0, requires = "homology")]
        k: i64,
        /// Also draw the target class as a shifted Young diagram.
        #[arg(long)]
        diagram: bool,
    },
    /// Transport a stored affine product relation to the quantum side.
    Transport {
        /// Relation file (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Output format.
        #[arg(long, value_parser = ["text", "json"], default_value = "text")]
        format: String,
    },
    /// Run brute-force verification suites.
    Verify {
        /// Rank of the root system.
        #[arg(long, value_parser = rank_parser())]
        n: u64,
        /// Partition-weight bound for the suites.
        #[arg(long)]
        max_weight: Option<usize>,
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// List partitions, optionally cross-counting against BFS.
    Enumerate {
        /// Rank of the root system.
        #[arg(long, value_parser = rank_parser())]
        n: u64,
        /// Largest partition weight to list.
        #[arg(long)]
        max_weight: usize,
        /// Compare per-length counts with a BFS over the affine group.
        #[arg(long)]
        grassmannian_count: bool,
    },
}

/// Parses and runs a full command line (first element is the program
/// name) and returns the process exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}

fn run(command: Command) -> Result<i32, TextError> {
    match command {
        Command::Element { n, partition } => element(n as usize, &partition),
        Command::Map {
            n,
            partition,
            loc_exp,
            homology,
            k,
            diagram,
        } => map(n as usize, &partition, loc_exp, homology, k, diagram),
        Command::Transport { input, format } => transport(&input, &format),
        Command::Verify { n, max_weight, suite } => Ok(verify(n as usize, max_weight, &suite)),
        Command::Enumerate {
            n,
            max_weight,
            grassmannian_count,
        } => Ok(enumerate(n as usize, max_weight, grassmannian_count)),
    }
}

fn element(n: usize, partition: &str) -> Result<i32, TextError> {
    let lambda = parse_partition(n, partition)?;
    let x = crate::shapes::x_of(&lambda);
    let word = x.reduced_word();
    let word_text = if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("element: {x}");
    println!("length: {}", x.length());
    println!("word: {word_text}");
    println!("grassmannian: {}", x.is_grassmannian());
    println!("peterson: {}", x.is_peterson_rep());
    Ok(0)
}

fn map(
    n: usize,
    partition: &str,
    loc_exp: i64,
    homology: bool,
    k: i64,
    draw: bool,
) -> Result<i32, TextError> {
    let lambda = parse_partition(n, partition)?;
    let ctx = PetersonContext::new(RootSystemC::new(n));
    if homology {
        println!("{}", print_homology(&homology_transport(&ctx, &lambda, k)));
        return Ok(0);
    }
    let (q_exp, mu) = phi_index(&ctx, &lambda, -loc_exp);
    println!("{}", print_phi_image(q_exp, &mu));
    if draw && !mu.is_empty() {
        print!("{}", diagram(&mu));
    }
    Ok(0)
}

fn transport(input: &std::path::Path, format: &str) -> Result<i32, TextError> {
    let file = load_relation(input)?;
    let (lambda, mu, combo) = relation_to_combo(&file)?;
    let ctx = PetersonContext::new(RootSystemC::new(file.n));
    let rel = transport_product(&ctx, &lambda, &mu, &combo);
    match format {
        "json" => {
            let value = transported_to_json(file.n, &rel);
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
        _ => {
            println!("{}", print_transported(&rel));
            for w in &rel.warnings {
                eprintln!("warning: {w}");
            }
        }
    }
    Ok(0)
}

fn verify(n: usize, max_weight: Option<usize>, suite: &str) -> i32 {
    let mut bounds = VerifyBounds::default();
    if let Some(w) = max_weight {
        bounds.max_weight = w;
    }
    let reports = if suite == "all" {
        run_all(n, bounds)
    } else {
        match run_suite(suite, n, bounds) {
            Some(report) => vec![report],
            None => {
                eprintln!(
                    "error: unknown suite '{suite}'; expected one of: all, {}",
                    SUITE_NAMES.join(", ")
                );
                return 2;
            }
        }
    };
    print!("{}", render_text(&reports));
    if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

fn enumerate(n: usize, max_weight: usize, grassmannian_count: bool) -> i32 {
    let sys = RootSystemC::new(n);
    let partitions = enumerate_pc(sys, max_weight);
    for lambda in &partitions {
        println!("{lambda}");
    }
    if !grassmannian_count {
        return 0;
    }
    let elements = match bfs_enumerate(sys, max_weight, default_bfs_cap()) {
        Ok(elements) => elements,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let mut partition_counts = vec![0usize; max_weight + 1];
    for lambda in &partitions {
        partition_counts[lambda.weight()] += 1;
    }
    let mut bfs_counts = vec![0usize; max_weight + 1];
    for (x, len) in &elements {
        if *len <= max_weight && x.is_grassmannian() {
            bfs_counts[*len] += 1;
        }
    }
    let mut mismatch = false;
    for len in 0..=max_weight {
        let tag = if partition_counts[len] == bfs_counts[len] {
            ""
        } else {
            mismatch = true;
            " MISMATCH"
        };
        println!(
            "length {len}: partitions {}, grassmannian {}{tag}",
            partition_counts[len], bfs_counts[len]
        );
    }
    if mismatch {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> i32 {
        cli_main(args.iter().copied())
    }

    #[test]
    fn map_golden_exit() {
        assert_eq!(run_args(&["lgk", "map", "--n", "2", "--partition", "3"]), 0);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["lgk", "nonsense"]), 2);
        assert_eq!(run_args(&["lgk", "map", "--n", "2"]), 2);
        assert_eq!(run_args(&["lgk", "map", "--n", "0", "--partition", "1"]), 2);
        assert_eq!(
            run_args(&["lgk", "map", "--n", "2", "--partition", "1", "--k", "1"]),
            2
        );
        assert_eq!(run_args(&["lgk", "verify", "--n", "2", "--suite", "bogus"]), 2);
    }

    #[test]
    fn parse_errors_exit_3() {
        assert_eq!(run_args(&["lgk", "element", "--n", "2", "--partition", "x"]), 3);
        assert_eq!(run_args(&["lgk", "element", "--n", "2", "--partition", "2,2"]), 3);
        assert_eq!(
            run_args(&["lgk", "transport", "--input", "/nonexistent.json"]),
            3
        );
    }

    #[test]
    fn small_verify_passes() {
        assert_eq!(
            run_args(&["lgk", "verify", "--n", "1", "--max-weight", "4", "--suite", "bijection"]),
            0
        );
    }

    #[test]
    fn enumerate_counts_match() {
        assert_eq!(
            run_args(&["lgk", "enumerate", "--n", "2", "--max-weight", "3", "--grassmannian-count"]),
            0
        );
    }

    #[test]
    fn help_exits_0() {
        assert_eq!(run_args(&["lgk", "--help"]), 0);
    }
}

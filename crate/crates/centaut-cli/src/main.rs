//! Command-line surface for the central-automorphism library.
//!
//! Exit codes: 0 all checks pass, 1 a verification row failed, 2 input
//! error (bad spec, bad Cayley file, bad corpus).

use centaut::corpus::Corpus;
use centaut::group::make_group;
use centaut::oracle::Budget;
use centaut::report::{to_sorted_json, GroupRecord, VerifyReport};
use centaut::verify::{search_question, verify_corpus, GroupAnalysis, Status};
use clap::{Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "centaut",
    about = "Central automorphism groups of finite groups via the adjoint group of Hom(G, Z(G))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of the rendered table.
    #[arg(long, global = true)]
    json: bool,
    /// Order cap for the brute-force oracles (default 128; the env var
    /// CENTAUT_BUDGET overrides the default).
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Restrict the corpus to p-groups for this prime.
    #[arg(long, global = true)]
    prime_filter: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group spec and print its record.
    Analyze { spec: String },
    /// Run the whole verification matrix over a corpus.
    Verify {
        /// Path to a JSON array of group specs (defaults to the built-in
        /// corpus).
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Search a corpus for groups with d₂ = d·d₁ and non-cyclic center.
    SearchQuestion {
        #[arg(long)]
        corpus: Option<String>,
    },
}

fn budget_from(cli: &Cli) -> Budget {
    let env_cap = std::env::var("CENTAUT_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok());
    match cli.budget.or(env_cap) {
        Some(n) => Budget::with_order_cap(n),
        None => Budget::default(),
    }
}

fn load_corpus(path: &Option<String>, prime_filter: Option<u32>) -> centaut::Result<Corpus> {
    let corpus = match path {
        Some(p) => Corpus::from_json_file(p)?,
        None => Corpus::default_corpus(),
    };
    Ok(match prime_filter {
        Some(p) => corpus.filter_prime(p),
        None => corpus,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> centaut::Result<ExitCode> {
    let budget = budget_from(cli);
    match &cli.command {
        Command::Analyze { spec } => {
            let group = make_group(spec)?;
            let analysis = GroupAnalysis::build(spec, group, &budget)?;
            let record = GroupRecord::from_analysis(&analysis, &budget);
            if cli.json {
                println!("{}", to_sorted_json(&record)?);
            } else {
                render_record(&record);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { corpus } => {
            let corpus = load_corpus(corpus, cli.prime_filter)?;
            let matrix = verify_corpus(&corpus, &budget)?;
            let report = VerifyReport::from_matrix(&matrix, &budget);
            if cli.json {
                println!("{}", to_sorted_json(&report)?);
            } else {
                for row in &report.rows {
                    let status = match row.status {
                        Status::Pass => "pass",
                        Status::Fail => "FAIL",
                        Status::Skip => "skip",
                        Status::Inapplicable => "n/a ",
                    };
                    println!("{status}  {:<38} checked {:>3}", row.name, row.checked);
                    for s in &row.skipped {
                        println!("      skipped: {s}");
                    }
                    for f in &row.failures {
                        println!("      FAIL: {f}");
                    }
                }
            }
            if matrix.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::SearchQuestion { corpus } => {
            let corpus = load_corpus(corpus, cli.prime_filter)?;
            let hits = search_question(&corpus)?;
            if cli.json {
                println!("{}", to_sorted_json(&hits)?);
            } else if hits.is_empty() {
                println!("no candidates: every corpus group with d2 = d·d1 has a cyclic center");
            } else {
                for h in &hits {
                    println!("{h}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn render_record(r: &GroupRecord) {
    println!("group            {}", r.group);
    println!("order            {}", r.order);
    match r.prime {
        Some(p) => println!("prime            {p}"),
        None => println!("prime            (not a p-group)"),
    }
    println!(
        "subgroup orders  Z = {}, G' = {}, Phi = {}, Z2 = {}",
        r.center_order,
        r.derived_order,
        r.frattini_order
            .map_or("n/a".to_string(), |v| v.to_string()),
        r.second_center_order
    );
    println!(
        "d-invariants     d = {}, d1 = {}, d2 = {}{}",
        opt(r.d),
        opt(r.d1),
        opt(r.d2),
        if r.d2_defined {
            ""
        } else {
            " (d2 undefined: abelian group)"
        }
    );
    println!(
        "purely non-ab.   {}",
        r.purely_non_abelian
            .map_or("skipped".to_string(), |v| v.to_string())
    );
    println!(
        "hom ring         size {}, radical {}, class {}, left/right p-nil {}/{}",
        r.hom_ring.size,
        r.hom_ring.radical,
        opt(r.hom_ring.class),
        opt_b(r.hom_ring.left_p_nil),
        opt_b(r.hom_ring.right_p_nil)
    );
    println!(
        "adjoint group    order {}, class {}, abelian {}, rank {}",
        r.adjoint.adjoint_order,
        opt(r.adjoint.class),
        r.adjoint.abelian,
        match &r.adjoint.rank {
            centaut::report::RankValue::Value(v) => v.to_string(),
            centaut::report::RankValue::Skipped(_) => "skipped".to_string(),
        }
    );
    println!(
        "Aut_c            order {}, class {}",
        r.autc_order,
        opt(r.autc_class)
    );
    match &r.criterion {
        centaut::report::CriterionValue::Decided(b) => {
            println!("order-p witness  criterion (d2 != d·d1): {b}")
        }
        centaut::report::CriterionValue::Inapplicable(why) => {
            println!("order-p witness  criterion not applicable: {why}")
        }
    }
    if let Some(w) = &r.witness {
        println!(
            "                 witness order {}, inner {}",
            w.order, w.inner
        );
    }
}

fn opt(v: Option<u32>) -> String {
    v.map_or("n/a".to_string(), |x| x.to_string())
}

fn opt_b(v: Option<bool>) -> String {
    v.map_or("n/a".to_string(), |x| x.to_string())
}

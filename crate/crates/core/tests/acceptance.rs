//! Runs every acceptance criterion and prints one line per criterion.

use hopf_baxter::regression::{criterion_count, run_all};

fn main() {
    let results = run_all();
    assert_eq!(results.len(), criterion_count());
    println!("acceptance criteria (exact arithmetic, tolerance 0):");
    for r in &results {
        println!("{}", r);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} passed, {} failed", results.len() - failed, failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

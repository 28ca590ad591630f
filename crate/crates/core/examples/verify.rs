//! Runs every verification suite and prints a one-line tally.

use quadwalk::classify::{run_suite, tally, Suite};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let recs = run_suite(Suite::All, n);
    for r in recs.iter().filter(|r| !r.status.is_pass()) {
        println!("{} {} {}: {}", r.tag, r.check, r.model, r.status);
    }
    let (pass, fail, skipped) = tally(&recs);
    println!("N={}: {} pass, {} fail, {} skipped", n, pass, fail, skipped);
}

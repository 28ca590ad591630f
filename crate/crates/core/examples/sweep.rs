//! Sweeps all 30307 classes and writes the sorted JSONL report.

use std::path::PathBuf;

use quadwalk::classify::{sweep, SweepOptions};

fn main() {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("quadwalk-sweep.jsonl"));
    let o = sweep(&SweepOptions {
        out: Some(out.clone()),
        resume: true,
        ..Default::default()
    })
    .unwrap();
    println!("{}", o.summary);
    println!("wrote {} ({} records reused)", out.display(), o.reused);
}

//! Counts interesting canonical classes for multiplicities up to 3.

use quadwalk::classify::census;

fn main() {
    for k in 0..=3 {
        println!("{}", census(k));
    }
}

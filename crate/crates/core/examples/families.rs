//! Family membership and the positive-part formulas for the orbit-sum families.

use quadwalk::families::{classify_family, table_model, verify_orbit_formula, FamilyTag};

fn main() {
    for tag in FamilyTag::ALL {
        let m = table_model(tag).unwrap();
        let tags: Vec<String> = classify_family(&m).tags().iter().map(|t| t.to_string()).collect();
        print!("{:<9} {:<30} tags {}", tag, m.to_string(), tags.join(","));
        if matches!(tag, FamilyTag::F0 | FamilyTag::F1a | FamilyTag::F2a | FamilyTag::F3a | FamilyTag::F4a) {
            print!("  orbit formula to t^10: {}", verify_orbit_formula(&m, tag, 10).status);
        }
        println!();
    }
}

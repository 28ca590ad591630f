//! Substitutions and algebraic closed forms of families 1b, 2b, 4b and the D10 models.

use quadwalk::algebra::rat::{rat, ratio};
use quadwalk::families::{
    verify_d10_closed_forms, verify_family1b_lambda, verify_family2b, verify_gessel_substitution,
    verify_kernel_roots_1b, verify_kreweras_substitution, z_d10, FamilyTag,
};
use quadwalk::model::Model;

fn main() {
    let n = 12;
    let k = Model::kreweras().with(0, -1, rat(8));
    println!("scaled Kreweras {}: {}", k, verify_kreweras_substitution(&k, n));
    let g = Model::from_ints([4, 2, 0, 0, 0, 0, 8, 4]);
    println!("scaled Gessel {}: {}", g, verify_gessel_substitution(&g, n));
    for l in [rat(1), rat(2), ratio(1, 2)] {
        println!("family 1b lambda={}: {}", l, verify_family1b_lambda(&l, n));
    }
    println!("kernel roots lambda=1: {}", verify_kernel_roots_1b(&rat(1), 8));
    for l in [rat(0), rat(1), rat(2)] {
        println!("family 2b lambda={}: {}", l, verify_family2b(&l, n));
    }
    println!("Z = {}", z_d10(6).unwrap());
    for t in [FamilyTag::D10Left, FamilyTag::D10Mid, FamilyTag::D10Right] {
        println!("{}: {}", t, verify_d10_closed_forms(t, 20));
    }
}

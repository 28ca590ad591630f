//! Exact counts, generating-function truncations and the functional-equation residual.

use std::io::stdout;

use quadwalk::enumerate::{check_functional_equation, count_walks};
use quadwalk::model::Model;

fn main() {
    let m: Model = "1,1/2,0,2,3,0,-1,1".parse().unwrap();
    let ct = count_walks(&m, 8);
    println!("model {}", m);
    println!("f(0,0,t) = {}", ct.series_f00());
    println!("walks of length 8: {}", ct.total(8));
    println!("residual zero: {}", check_functional_equation(&m, &ct).is_zero());
    let small = count_walks(&Model::kreweras(), 3);
    small.write_csv(stdout()).unwrap();
}

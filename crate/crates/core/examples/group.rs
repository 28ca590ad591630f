//! Group orders and orbit sums of a few classical models.

use quadwalk::group::{group_order, orbit_sum, DEFAULT_BOUND, DEFAULT_DEGREE_CAP};
use quadwalk::model::Model;

fn main() {
    let models = [
        ("simple", Model::simple()),
        ("kreweras", Model::kreweras()),
        ("gessel", Model::gessel()),
        ("d10 left", "0,1,1,1,2,1,2,1".parse().unwrap()),
        ("infinite", Model::from_steps(&[(1, 1), (1, 0), (0, -1), (-1, 1)])),
    ];
    for (name, m) in models {
        let g = group_order(&m, DEFAULT_BOUND, DEFAULT_DEGREE_CAP).unwrap();
        match g.order() {
            Some(o) => {
                let zero = orbit_sum(&g).unwrap().is_zero();
                println!("{:<9} {}  D{}, orbit sum {}", name, m, o, if zero { "zero" } else { "nonzero" });
            }
            None => println!("{:<9} {}  {}", name, m, g.status),
        }
    }
}

//! Guessing equations for excursion series and checking them on more terms.

use quadwalk::enumerate::count_walks;
use quadwalk::families::{d10_guess, FamilyTag};
use quadwalk::guess::{guess_algebraic, guess_ode, guess_recurrence, verify_fit};
use quadwalk::model::Model;

fn main() {
    let k = count_walks(&Model::kreweras(), 75).series_f00();
    let eq = guess_algebraic(&k.truncate(59), 3, 6).unwrap().unwrap();
    println!("Kreweras: {}  (fit {})", eq, verify_fit(&eq, k.coeffs()));

    let s = count_walks(&Model::simple(), 150).series_f00();
    let eq = guess_recurrence(&s.coeffs()[..120], 2, 2).unwrap().unwrap();
    println!("simple: {}  (fit {})", eq, verify_fit(&eq, s.coeffs()));

    let g = count_walks(&Model::gessel(), 125).series_f00();
    let eq = guess_ode(&g.truncate(99), 3, 8).unwrap().unwrap();
    println!("Gessel: {}  (fit {})", eq, verify_fit(&eq, g.coeffs()));

    let r = d10_guess(FamilyTag::D10Right, 100).unwrap();
    match &r.algebraic {
        Some(e) => println!("D10 right algebraic: {}", e),
        None => println!("D10 right: no algebraic equation for f(0,0,t) within the searched degrees"),
    }
    if let Some(e) = &r.recurrence {
        println!("D10 right recurrence: {}  (confirmed {})", e, r.confirmed);
    }
}

//! Root valuations from the Newton polygon, checked against polynomials
//! built from roots of known valuation.

use tropint::oracle::{known_root_instance, np1d};
use tropint::rational::{fmt_rat, rat, ratio};

fn main() {
    for (vals, p) in [(vec![rat(1), rat(1), rat(0)], 3), (vec![ratio(1, 2), rat(-2)], 2), (vec![rat(2)], 5)] {
        let inst = known_root_instance(&vals, p).unwrap();
        let found = np1d(&inst.poly.to_tropical().unwrap()).unwrap();
        let show = |e: &[(tropint::rational::Rat, u64)]| {
            e.iter().map(|(v, l)| format!("{}x{l}", fmt_rat(v))).collect::<Vec<_>>().join(" ")
        };
        println!(
            "p={p} degree {}: newton polygon [{}], expected [{}]",
            inst.poly.terms().keys().last().unwrap()[0],
            show(&found),
            show(&inst.expected)
        );
    }
}

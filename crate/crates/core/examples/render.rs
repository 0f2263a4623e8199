//! Writes an SVG picture of the hypersurface of 1 + x + y + λxy (val λ = 2)
//! to the path given as the first argument, or to standard output.

use tropint::cli::svg::{render, SvgOptions};
use tropint::rational::rat;
use tropint::tropical::TropicalPolynomial;

fn main() {
    let f = TropicalPolynomial::new(
        2,
        [(vec![0, 0], rat(0)), (vec![1, 0], rat(0)), (vec![0, 1], rat(0)), (vec![1, 1], rat(2))],
    )
    .unwrap();
    let svg = render(f.hypersurface().cells(), &SvgOptions::default());
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(&path, svg).expect("writable path"),
        None => print!("{svg}"),
    }
}

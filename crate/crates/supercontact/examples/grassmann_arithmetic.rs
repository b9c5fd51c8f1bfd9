//! Exact arithmetic in the superalgebra of polynomial superfunctions on
//! R^{2l+1|n}: the Grassmann sign rule, parity, degree, derivatives, and
//! the expression grammar.
//!
//! Run with: cargo run --example grassmann_arithmetic

use supercontact::{parse_expr, CoordId, Dims, Superfunction};

fn main() {
    let dims = Dims::new(1, 2); // coordinates z, x1, y1, th1, th2

    // the expression grammar: rationals, + - * ^, variables z, x<k>, y<k>, th<j>
    let f = parse_expr("z^2 + 2*x1*y1 - 1/2*th1*th2", dims).unwrap();
    let g = parse_expr("z + th1", dims).unwrap();
    println!("f       = {f}");
    println!("g       = {g}");
    println!("f + g   = {}", &f + &g);
    println!("f * g   = {}", &f * &g);

    // anticommutativity: th2*th1 normalizes to -th1*th2, th1*th1 to 0
    let th1 = Superfunction::var(CoordId::Theta(1), dims);
    let th2 = Superfunction::var(CoordId::Theta(2), dims);
    println!("th2*th1 = {}", &th2 * &th1);
    println!("th1*th1 = {}", &th1 * &th1);

    // (z + th1 th2)(z - th1 th2) = z^2: the nilpotent parts cancel exactly
    let a = parse_expr("z + th1*th2", dims).unwrap();
    let b = parse_expr("z - th1*th2", dims).unwrap();
    println!("(z + th1*th2)(z - th1*th2) = {}", &a * &b);

    // parity split and total degree
    let (even, odd) = g.parity_parts();
    println!("even part of g = {even}, odd part = {odd}");
    println!(
        "deg f = {:?}, deg 0 = {:?}",
        f.degree(),
        Superfunction::zero(dims).degree()
    );

    // derivatives: ordinary in even variables, left derivative in odd ones
    println!("d/dz f   = {}", f.partial(CoordId::Z));
    println!("d/dth2 f = {}", f.partial(CoordId::Theta(2)));
    let word = parse_expr("th1*th2", dims).unwrap();
    println!(
        "d/dth2 (th1*th2) = {} (one transposition, hence the sign)",
        word.partial(CoordId::Theta(2))
    );

    // printing is canonical and parses back to the same value
    let text = f.to_string();
    assert_eq!(parse_expr(&text, dims).unwrap(), f);
    println!("round-trip through {text:?} is exact");
}

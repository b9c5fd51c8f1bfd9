//! Super vector fields as superderivations: application to superfunctions,
//! the Lie superbracket, and the pairing with differential 1-superforms.
//!
//! Run with: cargo run --example vector_fields

use supercontact::{parse_expr, CoordId, Dims, SuperOneForm, SuperVectorField, Superfunction};

fn main() {
    let dims = Dims::new(1, 1); // z, x1, y1, th1

    // X = th1 d/dz + d/dth1, an odd field
    let x = SuperVectorField::from_coeffs(
        dims,
        [
            (CoordId::Z, Superfunction::var(CoordId::Theta(1), dims)),
            (CoordId::Theta(1), Superfunction::one(dims)),
        ],
    );
    println!("X = {x}");

    // applying a superderivation
    let f = parse_expr("z*th1", dims).unwrap();
    println!("X(z*th1) = {}", x.apply(&f));

    // odd-odd brackets are anticommutators: [X, X] = 2 X^2 need not vanish
    println!("[X, X] = {}", x.bracket(&x));

    // an even field with polynomial coefficients
    let y = SuperVectorField::from_coeffs(
        dims,
        [
            (CoordId::X(1), parse_expr("z", dims).unwrap()),
            (CoordId::Z, parse_expr("x1^2", dims).unwrap()),
        ],
    );
    println!("Y = {y}");
    println!("[X, Y] = {}", x.bracket(&y));
    println!("[Y, Y] = {}", y.bracket(&y));

    // the bracket is the graded commutator of derivations
    let g = parse_expr("x1*th1 + z^2", dims).unwrap();
    let via_bracket = x.bracket(&y).apply(&g);
    let via_operators = &x.apply(&y.apply(&g)) - &y.apply(&x.apply(&g));
    assert_eq!(via_bracket, via_operators);
    println!("[X,Y](g) agrees with X(Y(g)) - Y(X(g)) for g = {g}");

    // pairing with 1-superforms: <d/dth1, dth1> = -1 comes out of the same
    // closed formula that makes the contact frame isotropic
    let dth1 = SuperOneForm::differential(CoordId::Theta(1), dims);
    println!(
        "<d/dth1, dth1> = {}",
        dth1.pairing(&SuperVectorField::partial(CoordId::Theta(1), dims))
    );
    let alpha = SuperOneForm::from_coeffs(
        dims,
        [
            (CoordId::Z, Superfunction::one(dims)),
            (CoordId::X(1), -Superfunction::var(CoordId::Y(1), dims)),
            (CoordId::Y(1), Superfunction::var(CoordId::X(1), dims)),
            (
                CoordId::Theta(1),
                Superfunction::var(CoordId::Theta(1), dims),
            ),
        ],
    );
    println!("alpha = {alpha}");
    println!("alpha(X) = {}", alpha.eval(&x));
}

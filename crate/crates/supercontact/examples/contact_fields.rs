//! Contact vector fields and the Lagrange bracket: X_f from a Hamiltonian
//! superfunction f, exact recovery f = alpha(X_f), and the homomorphism
//! [X_f, X_g] = X_{f,g}.
//!
//! Run with: cargo run --example contact_fields

use supercontact::contact::quadratic_monomial_basis;
use supercontact::{parse_expr, ContactContext, Dims};

fn main() {
    let ctx = ContactContext::new(Dims::new(1, 2));
    let dims = ctx.dims();

    for src in ["1", "z", "th1", "z^2", "x1*y1", "z*th2 - 3*th1*th2"] {
        let f = parse_expr(src, dims).unwrap();
        let xf = ctx.contact_field(&f);
        println!("f = {src}");
        println!("  X_f = {xf}");
        println!("  contact: {}", ctx.is_contact(&xf));
        println!("  alpha(X_f) = {}", ctx.hamiltonian_of(&xf).unwrap());
    }
    println!();

    // the Lagrange bracket drives the bracket of contact fields
    let f = parse_expr("z*x1", dims).unwrap();
    let g = parse_expr("y1*th1 + th1*th2", dims).unwrap();
    let bracket = ctx.lagrange_bracket(&f, &g);
    println!("{{ {f}, {g} }} = {bracket}");
    let lhs = ctx.contact_field(&f).bracket(&ctx.contact_field(&g));
    let rhs = ctx.contact_field(&bracket);
    assert_eq!(lhs, rhs);
    println!("[X_f, X_g] = X_{{f,g}} holds exactly");
    println!();

    // degree <= 2 superfunctions close under the bracket; their span is the
    // finite-dimensional subalgebra the matrix realization hits
    let basis = quadratic_monomial_basis(dims);
    println!("quadratic monomial basis ({} elements):", basis.len());
    let names: Vec<String> = basis.iter().map(|f| f.to_string()).collect();
    println!("  {}", names.join(", "));
    let mut max_degree = 0;
    for f in &basis {
        for g in &basis {
            if let Some(d) = ctx.lagrange_bracket(f, g).degree() {
                max_degree = max_degree.max(d);
            }
        }
    }
    println!(
        "max degree over all {0}x{0} brackets: {max_degree}",
        basis.len()
    );

    // a field that fails the contact condition is rejected with a witness
    let t1 = ctx.frame_element(1);
    match ctx.hamiltonian_of(t1) {
        Err(e) => println!("hamiltonian_of(T_1): {e}"),
        Ok(_) => unreachable!("T_1 is not contact"),
    }
}

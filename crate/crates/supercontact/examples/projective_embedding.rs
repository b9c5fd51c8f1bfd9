//! The projective embedding spo(2l+2|n) -> Vect(R^{2l+1|n}): every basis
//! matrix lands on a contact field whose Hamiltonian has degree at most
//! two, and the map is a Lie superalgebra homomorphism.
//!
//! Run with: cargo run --example projective_embedding

use supercontact::embedding::{correspondence_table, embed_spo, normalize_rep};
use supercontact::spo::{spo_basis, spo_dim, GradedMatrix};
use supercontact::{ContactContext, Dims, Rat};

fn main() {
    let ctx = ContactContext::new(Dims::new(1, 2));
    let dims = ctx.dims();

    // representatives in pgl have a zero corner; scalars embed to nothing
    let id = GradedMatrix::identity(dims);
    println!(
        "normalize(Id) = zero matrix: {}",
        normalize_rep(&id).matrix().is_zero()
    );

    // the full correspondence table
    println!("\nbasis element -> contact field -> hamiltonian (l=1, n=2):");
    let table = correspondence_table(&ctx).unwrap();
    for row in &table {
        println!(
            "  {:10}  f = {:12}  X_f = {}",
            row.label.to_string(),
            row.hamiltonian.to_string(),
            row.field
        );
    }

    // the embedding intertwines the matrix superbracket with the field
    // bracket, hence phi(A) = alpha(embed(A)) intertwines it with the
    // Lagrange bracket
    let basis = spo_basis(dims);
    let (la, a) = &basis[2];
    let (lb, b) = &basis[12];
    let lhs = embed_spo(&ctx, &a.bracket(b)).unwrap();
    let rhs = embed_spo(&ctx, a)
        .unwrap()
        .bracket(&embed_spo(&ctx, b).unwrap());
    assert_eq!(lhs, rhs);
    println!("\nembed([{la}, {lb}]) = [embed {la}, embed {lb}] = {lhs}");

    let phi = |m: &GradedMatrix| ctx.hamiltonian_of(&embed_spo(&ctx, m).unwrap()).unwrap();
    let direct = phi(&a.bracket(b));
    let via_lagrange = ctx.lagrange_bracket(&phi(a), &phi(b));
    assert_eq!(direct, via_lagrange);
    println!("phi([{la}, {lb}]) = {{phi({la}), phi({lb})}} = {direct}");

    // adding scalars does not change the embedded field
    let shifted = a.add(&GradedMatrix::identity(dims).scale(&Rat::new(5, 3)));
    assert_eq!(
        embed_spo(&ctx, a).unwrap(),
        supercontact::embedding::projective_embed(
            &normalize_rep(&shifted),
            &supercontact::embedding::CoordMap::standard(dims)
        )
    );
    println!("embedding is constant on classes modulo scalars");

    println!(
        "\ndim spo = {} = number of degree-<=2 monomials = {}",
        spo_dim(dims),
        supercontact::contact::quadratic_dim(dims)
    );
}

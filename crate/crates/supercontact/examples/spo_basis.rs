//! The matrix Lie superalgebra spo(2l+2|n): the superskewsymmetric form,
//! the two equivalent membership tests, the basis families and bracket
//! closure.
//!
//! Run with: cargo run --example spo_basis

use supercontact::spo::{
    is_spo_blocks, matrix_rank, spo_basis, spo_dim, GradedMatrix, OmegaStructure,
};
use supercontact::{Dims, Rat};

fn print_matrix(m: &GradedMatrix) {
    for i in 1..=m.size() {
        let row: Vec<String> = (1..=m.size()).map(|j| m.entry(i, j).to_string()).collect();
        println!("    [{}]", row.join(", "));
    }
}

fn main() {
    let dims = Dims::new(1, 2);
    let omega = OmegaStructure::new(dims);

    println!("G (defining omega(U,V) = V^t G U):");
    print_matrix(omega.g());
    println!();

    let basis = spo_basis(dims);
    println!(
        "spo(2l+2|n) at l=1, n=2 has dimension {} = {} basis elements:",
        spo_dim(dims),
        basis.len()
    );
    for (label, _) in &basis {
        print!("{label}  ");
    }
    println!("\n");

    // one element per family in full
    for family in [
        "Sp1(1,2)",
        "Sp2(1,1)",
        "Sp3(1,1)",
        "OddA(3,1)",
        "OddB(1,1)",
        "O(1,2)",
    ] {
        let (label, matrix) = basis
            .iter()
            .find(|(l, _)| l.to_string() == family)
            .expect("family present");
        println!("{label}:");
        print_matrix(matrix);
    }
    println!();

    // membership: form preservation and the block conditions agree
    let id = GradedMatrix::identity(dims);
    println!("identity preserves omega: {}", omega.preserves_omega(&id));
    println!("identity satisfies blocks: {}", is_spo_blocks(&id));
    let member = basis[0].1.add(&basis[7].1.scale(&Rat::new(3, 2)));
    println!(
        "a combination of basis elements: omega {}, blocks {}",
        omega.preserves_omega(&member),
        is_spo_blocks(&member)
    );
    println!();

    // the basis is linearly independent and closed under the superbracket
    let matrices: Vec<GradedMatrix> = basis.iter().map(|(_, m)| m.clone()).collect();
    println!("rank of the flattened basis: {}", matrix_rank(&matrices));
    let mut closed = true;
    for (_, a) in &basis {
        for (_, b) in &basis {
            if !is_spo_blocks(&a.bracket(b)) {
                closed = false;
            }
        }
    }
    println!(
        "bracket closure over all {0}x{0} pairs: {closed}",
        basis.len()
    );
}

//! Seeded random generators for superfunctions, fields and matrices.
//!
//! The verification suite draws all of its randomized cases from here
//! through a `ChaCha8` stream cipher seeded from a single `u64`, so a run is
//! reproducible byte for byte from its seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dims::{CoordId, Dims, Parity};
use crate::rat::Rat;
use crate::spo::{spo_basis, GradedMatrix};
use crate::superfn::{Monomial, Superfunction};

/// The deterministic RNG used throughout the suite.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small nonzero rational with numerator in `-9..=9` and denominator in
/// `1..=4`.
pub fn rat(rng: &mut impl Rng) -> Rat {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-9..=9);
    }
    Rat::new(p, rng.gen_range(1..=4))
}

/// A random monomial of total degree at most `max_degree`.
pub fn monomial(dims: Dims, max_degree: usize, rng: &mut impl Rng) -> Monomial {
    let coords = CoordId::all(dims);
    'retry: for _ in 0..32 {
        let degree = rng.gen_range(0..=max_degree);
        let mut even = vec![0u32; dims.even_count()];
        let mut word = Vec::new();
        for _ in 0..degree {
            match coords[rng.gen_range(0..coords.len())] {
                CoordId::Theta(j) => {
                    if word.contains(&j) {
                        continue 'retry; // th_j^2 = 0, draw a fresh monomial
                    }
                    word.push(j);
                }
                c => even[c.canonical_index(dims)] += 1,
            }
        }
        let (sign, m) =
            Monomial::from_parts(even, &word, dims).expect("no repeats by construction");
        debug_assert_eq!(sign.abs(), 1);
        return m;
    }
    Monomial::one(dims)
}

/// A random superfunction with up to `max_terms` monomials of degree at most
/// `max_degree`. May be zero when terms collide and cancel.
pub fn superfunction(
    dims: Dims,
    max_degree: usize,
    max_terms: usize,
    rng: &mut impl Rng,
) -> Superfunction {
    let mut f = Superfunction::zero(dims);
    for _ in 0..rng.gen_range(1..=max_terms) {
        f = &f + &Superfunction::monomial(monomial(dims, max_degree, rng), rat(rng), dims);
    }
    f
}

/// A random nonzero parity-homogeneous superfunction.
pub fn homogeneous_superfunction(
    dims: Dims,
    max_degree: usize,
    parity: Parity,
    rng: &mut impl Rng,
) -> Superfunction {
    loop {
        let f = superfunction(dims, max_degree, 4, rng);
        let (even, odd) = f.parity_parts();
        let part = match parity {
            Parity::Even => even,
            Parity::Odd => odd,
        };
        if !part.is_zero() {
            return part;
        }
    }
}

/// A random vector field with coefficients of degree at most `max_degree`.
pub fn vector_field(dims: Dims, max_degree: usize, rng: &mut impl Rng) -> super::SuperVectorField {
    let coords = CoordId::all(dims);
    let count = rng.gen_range(1..=coords.len());
    super::SuperVectorField::from_coeffs(
        dims,
        (0..count).map(|_| {
            (
                coords[rng.gen_range(0..coords.len())],
                superfunction(dims, max_degree, 3, rng),
            )
        }),
    )
}

/// A random nonzero parity-homogeneous vector field.
pub fn homogeneous_vector_field(
    dims: Dims,
    max_degree: usize,
    parity: Parity,
    rng: &mut impl Rng,
) -> super::SuperVectorField {
    loop {
        let x = vector_field(dims, max_degree, rng);
        let (even, odd) = x.parity_parts();
        let part = match parity {
            Parity::Even => even,
            Parity::Odd => odd,
        };
        if !part.is_zero() {
            return part;
        }
    }
}

/// A dense random graded matrix; almost surely not in `spo`.
pub fn graded_matrix(dims: Dims, rng: &mut impl Rng) -> GradedMatrix {
    let mut m = GradedMatrix::zeros(dims);
    for i in 1..=dims.matrix_size() {
        for j in 1..=dims.matrix_size() {
            if rng.gen_bool(0.4) {
                *m.entry_mut(i, j) = rat(rng);
            }
        }
    }
    m
}

/// A random member of `spo(2l+2|n)`: a rational linear combination of the
/// basis.
pub fn spo_member(dims: Dims, rng: &mut impl Rng) -> GradedMatrix {
    let mut m = GradedMatrix::zeros(dims);
    for (_, basis) in spo_basis(dims) {
        if rng.gen_bool(0.5) {
            m = m.add(&basis.scale(&rat(rng)));
        }
    }
    m
}

/// A matrix just outside `spo`: a member plus a single violating unit.
pub fn spo_perturbed(dims: Dims, rng: &mut impl Rng) -> GradedMatrix {
    let member = spo_member(dims, rng);
    loop {
        let i = rng.gen_range(1..=dims.matrix_size());
        let j = rng.gen_range(1..=dims.matrix_size());
        let perturbed = member.add(&GradedMatrix::unit(i, j, dims).scale(&rat(rng)));
        if !crate::spo::is_spo_blocks(&perturbed) {
            return perturbed;
        }
    }
}

//! Property tests for the algebraic laws the kernel must satisfy, plus the
//! exhaustive small-dimension sweeps that are cheap enough to run every
//! time. Strategies build values from raw term data; everything compares
//! with exact rational equality.

use proptest::prelude::*;

use supercontact::contact::quadratic_monomial_basis;
use supercontact::embedding::{embed_spo, normalize_rep, projective_embed, CoordMap};
use supercontact::sample;
use supercontact::spo::{is_spo_blocks, spo_basis, GradedMatrix, OmegaStructure};
use supercontact::{
    parse_expr, ContactContext, CoordId, Dims, Monomial, Parity, Rat, SuperOneForm,
    SuperVectorField, Superfunction,
};

fn arb_dims() -> impl Strategy<Value = Dims> {
    (0usize..=2, 1usize..=3).prop_map(|(l, n)| Dims::new(l, n))
}

/// A superfunction of degree at most `max_deg` assembled from raw term
/// picks; repeated odd picks annihilate the term, mirroring `th^2 = 0`.
fn arb_superfunction(dims: Dims, max_deg: usize) -> impl Strategy<Value = Superfunction> {
    prop::collection::vec(
        (
            prop::collection::vec(0..dims.coord_count(), 0..=max_deg),
            -9i64..=9,
            1i64..=4,
        ),
        0..=4,
    )
    .prop_map(move |terms| {
        let coords = CoordId::all(dims);
        let mut f = Superfunction::zero(dims);
        for (picks, p, q) in terms {
            if p == 0 {
                continue;
            }
            let mut even = vec![0u32; dims.even_count()];
            let mut word = Vec::new();
            for idx in picks {
                match coords[idx] {
                    CoordId::Theta(j) => word.push(j),
                    c => even[c.canonical_index(dims)] += 1,
                }
            }
            if let Some((sign, m)) = Monomial::from_parts(even, &word, dims) {
                let mut c = Rat::new(p, q);
                if sign < 0 {
                    c = -c;
                }
                f = &f + &Superfunction::monomial(m, c, dims);
            }
        }
        f
    })
}

fn arb_field(dims: Dims, max_deg: usize) -> impl Strategy<Value = SuperVectorField> {
    let coords = CoordId::all(dims);
    prop::collection::vec((0..coords.len(), arb_superfunction(dims, max_deg)), 0..=3).prop_map(
        move |entries| {
            SuperVectorField::from_coeffs(dims, entries.into_iter().map(|(i, f)| (coords[i], f)))
        },
    )
}

fn arb_form(dims: Dims, max_deg: usize) -> impl Strategy<Value = SuperOneForm> {
    let coords = CoordId::all(dims);
    prop::collection::vec((0..coords.len(), arb_superfunction(dims, max_deg)), 0..=3).prop_map(
        move |entries| {
            SuperOneForm::from_coeffs(dims, entries.into_iter().map(|(i, f)| (coords[i], f)))
        },
    )
}

fn part(f: &Superfunction, parity: Parity) -> Superfunction {
    let (even, odd) = f.parity_parts();
    match parity {
        Parity::Even => even,
        Parity::Odd => odd,
    }
}

fn field_part(x: &SuperVectorField, parity: Parity) -> SuperVectorField {
    let (even, odd) = x.parity_parts();
    match parity {
        Parity::Even => even,
        Parity::Odd => odd,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn supercommutativity(
        (dims, f, g) in arb_dims().prop_flat_map(|d| {
            (Just(d), arb_superfunction(d, 3), arb_superfunction(d, 3))
        })
    ) {
        let _ = dims;
        for pf in [Parity::Even, Parity::Odd] {
            for pg in [Parity::Even, Parity::Odd] {
                let fh = part(&f, pf);
                let gh = part(&g, pg);
                let fg = &fh * &gh;
                let gf = &gh * &fh;
                let expect = if pf.koszul_sign(pg) < 0 { -&gf } else { gf };
                prop_assert_eq!(fg, expect);
            }
        }
    }

    #[test]
    fn associativity(
        (f, g, h) in arb_dims().prop_flat_map(|d| {
            (arb_superfunction(d, 3), arb_superfunction(d, 3), arb_superfunction(d, 3))
        })
    ) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn derivatives_commute_with_grading(
        f in arb_dims().prop_flat_map(|d| arb_superfunction(d, 3))
    ) {
        let dims = f.dims();
        for a in CoordId::all(dims) {
            for b in CoordId::all(dims) {
                let ab = f.partial(b).partial(a);
                let ba = f.partial(a).partial(b);
                let expect = if a.parity().is_odd() && b.parity().is_odd() { -&ba } else { ba };
                prop_assert_eq!(ab, expect);
            }
            if a.parity().is_odd() {
                prop_assert!(f.partial(a).partial(a).is_zero());
            }
        }
    }

    #[test]
    fn parse_format_round_trip(
        f in arb_dims().prop_flat_map(|d| arb_superfunction(d, 3))
    ) {
        let text = f.to_string();
        let back = parse_expr(&text, f.dims()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn graded_leibniz(
        (x, f, g) in arb_dims().prop_flat_map(|d| {
            (arb_field(d, 2), arb_superfunction(d, 2), arb_superfunction(d, 2))
        })
    ) {
        for px in [Parity::Even, Parity::Odd] {
            for pf in [Parity::Even, Parity::Odd] {
                let xh = field_part(&x, px);
                let fh = part(&f, pf);
                let lhs = xh.apply(&(&fh * &g));
                let cross = &fh * &xh.apply(&g);
                let rhs = if px.koszul_sign(pf) < 0 {
                    &(&xh.apply(&fh) * &g) - &cross
                } else {
                    &(&xh.apply(&fh) * &g) + &cross
                };
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bracket_graded_antisymmetry(
        (x, y) in arb_dims().prop_flat_map(|d| (arb_field(d, 2), arb_field(d, 2)))
    ) {
        for px in [Parity::Even, Parity::Odd] {
            for py in [Parity::Even, Parity::Odd] {
                let xh = field_part(&x, px);
                let yh = field_part(&y, py);
                let xy = xh.bracket(&yh);
                let yx = yh.bracket(&xh);
                let expect = if px.koszul_sign(py) < 0 { yx } else { -&yx };
                prop_assert_eq!(xy, expect);
            }
        }
    }

    #[test]
    fn bracket_super_jacobi(
        (x, y, z, px, py, pz) in arb_dims().prop_flat_map(|d| {
            (
                arb_field(d, 2),
                arb_field(d, 2),
                arb_field(d, 2),
                prop::bool::ANY,
                prop::bool::ANY,
                prop::bool::ANY,
            )
        })
    ) {
        let parity = |b: bool| if b { Parity::Odd } else { Parity::Even };
        let (px, py, pz) = (parity(px), parity(py), parity(pz));
        let x = field_part(&x, px);
        let y = field_part(&y, py);
        let z = field_part(&z, pz);
        let mut acc = SuperVectorField::zero(x.dims());
        for (a, b, c, pa, pc) in [
            (&x, &y, &z, px, pz),
            (&y, &z, &x, py, px),
            (&z, &x, &y, pz, py),
        ] {
            let term = a.bracket(&b.bracket(c));
            acc = if pa.koszul_sign(pc) < 0 { &acc - &term } else { &acc + &term };
        }
        prop_assert!(acc.is_zero(), "Jacobi sum = {}", acc);
    }

    #[test]
    fn bracket_acts_as_commutator(
        (x, y, f) in arb_dims().prop_flat_map(|d| {
            (arb_field(d, 2), arb_field(d, 2), arb_superfunction(d, 2))
        })
    ) {
        for px in [Parity::Even, Parity::Odd] {
            for py in [Parity::Even, Parity::Odd] {
                let xh = field_part(&x, px);
                let yh = field_part(&y, py);
                let lhs = xh.bracket(&yh).apply(&f);
                let xyf = xh.apply(&yh.apply(&f));
                let yxf = yh.apply(&xh.apply(&f));
                let rhs = if px.koszul_sign(py) < 0 { &xyf + &yxf } else { &xyf - &yxf };
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn pairing_is_additive_and_scalar_linear(
        (x, y, a, b, p, q) in arb_dims().prop_flat_map(|d| {
            (
                arb_field(d, 2),
                arb_field(d, 2),
                arb_form(d, 2),
                arb_form(d, 2),
                -5i64..=5,
                1i64..=3,
            )
        })
    ) {
        let c = Rat::new(p, q);
        // additive in the field and in the form
        prop_assert_eq!(a.pairing(&(&x + &y)), &a.pairing(&x) + &a.pairing(&y));
        let sum_form = SuperOneForm::from_coeffs(
            x.dims(),
            a.coeffs()
                .map(|(k, v)| (*k, v.clone()))
                .chain(b.coeffs().map(|(k, v)| (*k, v.clone()))),
        );
        prop_assert_eq!(sum_form.pairing(&x), &a.pairing(&x) + &b.pairing(&x));
        // scalar-linear in the field
        let scaled = x.scaled(&Superfunction::constant(c.clone(), x.dims()));
        prop_assert_eq!(a.pairing(&scaled), a.pairing(&x).scale(&c));
    }

    #[test]
    fn hamiltonian_isomorphism_round_trip(
        f in arb_dims().prop_flat_map(|d| arb_superfunction(d, 2))
    ) {
        let ctx = ContactContext::new(f.dims());
        let xf = ctx.contact_field(&f);
        let back = ctx.hamiltonian_of(&xf).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(ctx.contact_field(&back), xf);
    }

    #[test]
    fn lagrange_bracket_matches_field_bracket(
        (f, g) in arb_dims().prop_flat_map(|d| {
            (arb_superfunction(d, 2), arb_superfunction(d, 2))
        })
    ) {
        let ctx = ContactContext::new(f.dims());
        let lhs = ctx.contact_field(&f).bracket(&ctx.contact_field(&g));
        let rhs = ctx.contact_field(&ctx.lagrange_bracket(&f, &g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lagrange_bracket_graded_antisymmetry(
        (f, g) in arb_dims().prop_flat_map(|d| {
            (arb_superfunction(d, 2), arb_superfunction(d, 2))
        })
    ) {
        let ctx = ContactContext::new(f.dims());
        for pf in [Parity::Even, Parity::Odd] {
            for pg in [Parity::Even, Parity::Odd] {
                let fh = part(&f, pf);
                let gh = part(&g, pg);
                let fg = ctx.lagrange_bracket(&fh, &gh);
                let gf = ctx.lagrange_bracket(&gh, &fh);
                let expect = if pf.koszul_sign(pg) < 0 { gf } else { -&gf };
                prop_assert_eq!(fg, expect);
            }
        }
    }

    #[test]
    fn matrix_bracket_super_jacobi(
        (dims, seed, pa, pb, pc) in arb_dims().prop_flat_map(|d| {
            (Just(d), any::<u64>(), prop::bool::ANY, prop::bool::ANY, prop::bool::ANY)
        })
    ) {
        let parity = |b: bool| if b { Parity::Odd } else { Parity::Even };
        let (pa, pb, pc) = (parity(pa), parity(pb), parity(pc));
        let mut rng = sample::rng(seed);
        let mut pick = |p: Parity| {
            let (even, odd) = sample::graded_matrix(dims, &mut rng).parity_parts();
            match p {
                Parity::Even => even,
                Parity::Odd => odd,
            }
        };
        let a = pick(pa);
        let b = pick(pb);
        let c = pick(pc);
        let mut acc = GradedMatrix::zeros(dims);
        for (x, y, z, px, pz) in [
            (&a, &b, &c, pa, pc),
            (&b, &c, &a, pb, pa),
            (&c, &a, &b, pc, pb),
        ] {
            let term = x.bracket(&y.bracket(z));
            acc = if px.koszul_sign(pz) < 0 { acc.sub(&term) } else { acc.add(&term) };
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn embedding_scalar_invariance(
        (dims, coeffs, p, q) in arb_dims().prop_flat_map(|d| {
            let len = spo_basis(d).len();
            (
                Just(d),
                prop::collection::vec((0..len, -5i64..=5, 1i64..=3), 1..=4),
                -7i64..=7,
                1i64..=3,
            )
        })
    ) {
        let basis = spo_basis(dims);
        let mut a = GradedMatrix::zeros(dims);
        for (idx, p, q) in coeffs {
            a = a.add(&basis[idx].1.scale(&Rat::new(p, q)));
        }
        let c = Rat::new(p, q);
        let shifted = a.add(&GradedMatrix::identity(dims).scale(&c));
        let cmap = CoordMap::standard(dims);
        prop_assert_eq!(
            projective_embed(&normalize_rep(&a), &cmap),
            projective_embed(&normalize_rep(&shifted), &cmap)
        );
    }
}

/// Frame annihilation over the wider sweep `l <= 3, n <= 4`.
#[test]
fn frame_annihilation_small_dimensions() {
    for l in 0..=3 {
        for n in 1..=4 {
            let ctx = ContactContext::new(Dims::new(l, n));
            for (r, t) in ctx.frame().iter().enumerate() {
                assert!(
                    ctx.alpha().eval(t).is_zero(),
                    "alpha(T_{}) != 0 at ({l},{n})",
                    r + 1
                );
            }
            assert_eq!(
                ctx.alpha().eval(ctx.reeb()),
                Superfunction::one(ctx.dims()),
                "alpha(reeb) != 1 at ({l},{n})"
            );
        }
    }
}

/// Super Jacobi for the Lagrange bracket, exhaustive over degree-<=2
/// monomial triples at (1,2).
#[test]
fn lagrange_jacobi_exhaustive_monomial_triples() {
    let dims = Dims::new(1, 2);
    let ctx = ContactContext::new(dims);
    let monomials = quadratic_monomial_basis(dims);
    let parities: Vec<Parity> = monomials
        .iter()
        .map(|m| m.homogeneous_parity().expect("monomials are homogeneous"))
        .collect();
    for (i, f) in monomials.iter().enumerate() {
        for (j, g) in monomials.iter().enumerate() {
            for (k, h) in monomials.iter().enumerate() {
                let mut acc = Superfunction::zero(dims);
                for (a, b, c, pa, pc) in [
                    (f, g, h, parities[i], parities[k]),
                    (g, h, f, parities[j], parities[i]),
                    (h, f, g, parities[k], parities[j]),
                ] {
                    let term = ctx.lagrange_bracket(a, &ctx.lagrange_bracket(b, c));
                    acc = if pa.koszul_sign(pc) < 0 {
                        &acc - &term
                    } else {
                        &acc + &term
                    };
                }
                assert!(
                    acc.is_zero(),
                    "Jacobi fails for f = {f}, g = {g}, h = {h}: sum = {acc}"
                );
            }
        }
    }
}

/// The embedding is a Lie superalgebra homomorphism: exhaustive over basis
/// pairs at (1,2), seeded random pairs at (2,3).
#[test]
fn embedding_bracket_homomorphism() {
    let dims = Dims::new(1, 2);
    let ctx = ContactContext::new(dims);
    let basis = spo_basis(dims);
    let embedded: Vec<SuperVectorField> = basis
        .iter()
        .map(|(_, m)| embed_spo(&ctx, m).unwrap())
        .collect();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let lhs = embed_spo(&ctx, &basis[i].1.bracket(&basis[j].1)).unwrap();
            assert_eq!(
                lhs,
                embedded[i].bracket(&embedded[j]),
                "homomorphism fails for [{}, {}]",
                basis[i].0,
                basis[j].0
            );
        }
    }

    let dims = Dims::new(2, 3);
    let ctx = ContactContext::new(dims);
    let basis = spo_basis(dims);
    let mut rng = sample::rng(1);
    for _ in 0..120 {
        let i = rand::Rng::gen_range(&mut rng, 0..basis.len());
        let j = rand::Rng::gen_range(&mut rng, 0..basis.len());
        let lhs = embed_spo(&ctx, &basis[i].1.bracket(&basis[j].1)).unwrap();
        let rhs = embed_spo(&ctx, &basis[i].1)
            .unwrap()
            .bracket(&embed_spo(&ctx, &basis[j].1).unwrap());
        assert_eq!(
            lhs, rhs,
            "homomorphism fails for [{}, {}]",
            basis[i].0, basis[j].0
        );
    }
}

/// Every embedded basis element is contact at all (l,n) with l <= 2,
/// n <= 3.
#[test]
fn embedded_basis_is_contact_small_dimensions() {
    for l in 0..=2 {
        for n in 1..=3 {
            let ctx = ContactContext::new(Dims::new(l, n));
            for (label, matrix) in spo_basis(ctx.dims()) {
                let field = embed_spo(&ctx, &matrix).unwrap();
                assert!(ctx.is_contact(&field), "{label} not contact at ({l},{n})");
            }
        }
    }
}

/// Form preservation and the block conditions agree on random matrices at
/// all (l,n) with l <= 2, n <= 3.
#[test]
fn spo_membership_routes_agree_small_dimensions() {
    let mut rng = sample::rng(7);
    for l in 0..=2 {
        for n in 1..=3 {
            let dims = Dims::new(l, n);
            let omega = OmegaStructure::new(dims);
            for case in 0..200 {
                let a = match case % 3 {
                    0 => sample::spo_member(dims, &mut rng),
                    1 => sample::spo_perturbed(dims, &mut rng),
                    _ => sample::graded_matrix(dims, &mut rng),
                };
                assert_eq!(
                    omega.preserves_omega(&a),
                    is_spo_blocks(&a),
                    "disagreement at ({l},{n}) case {case}"
                );
            }
        }
    }
}

/// The kernel of alpha is a module over superfunctions: superfunction
/// combinations of frame elements stay tangent.
#[test]
fn tangent_module_closure() {
    let dims = Dims::new(2, 2);
    let ctx = ContactContext::new(dims);
    let mut rng = sample::rng(3);
    for _ in 0..50 {
        let mut combo = SuperVectorField::zero(dims);
        for t in ctx.frame() {
            combo = &combo + &t.scaled(&sample::superfunction(dims, 2, 3, &mut rng));
        }
        assert!(ctx.is_tangent(&combo));
    }
}

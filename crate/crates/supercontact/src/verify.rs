//! The theorem-verification suite.
//!
//! [`run_suite`] executes, at the requested dimensions and in a fixed order,
//! the property suites for the Grassmann algebra, vector fields, the contact
//! structure, `spo(2l+2|n)` and the projective embedding, and returns a
//! machine-readable [`Report`]. Randomized checks draw from a seeded
//! deterministic stream, so two runs with the same seed produce identical
//! reports (up to the per-check timings).
//!
//! Pair sweeps over a basis are exhaustive while the basis stays small and
//! fall back to a fixed number of seeded random pairs above
//! [`EXHAUSTIVE_LIMIT`] elements.

use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::contact::{quadratic_dim, quadratic_monomial_basis, ContactContext};
use crate::dims::{CoordId, Dims, Parity};
use crate::embedding::{embed_spo, normalize_rep, projective_embed, CoordMap};
use crate::error::{Error, Result};
use crate::fields::SuperVectorField;
use crate::parse::parse_expr;
use crate::rat::{Rat, RatMatrix};
use crate::sample;
use crate::spo::{
    is_spo_blocks, matrix_rank, spo_basis, spo_dim, GradedMatrix, OmegaStructure, SpoBasisLabel,
    SpoFamily,
};
use crate::superfn::Superfunction;

/// Default size caps for the suite; beyond these the quadratic basis-pair
/// sweeps get expensive.
pub const MAX_L: usize = 6;
pub const MAX_N: usize = 8;

/// Basis sizes up to this bound are swept exhaustively in pair checks.
pub const EXHAUSTIVE_LIMIT: usize = 60;

/// Number of seeded random pairs used above [`EXHAUSTIVE_LIMIT`].
const SAMPLED_PAIRS: usize = 300;

/// Cases per randomized property check.
const PROPERTY_CASES: usize = 100;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// First counterexample in canonical expression format; empty on pass.
    pub details: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub l: usize,
    pub n: usize,
    pub dim_spo: usize,
    pub dim_quadratic: usize,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Ignore the `MAX_L`/`MAX_N` caps.
    pub force: bool,
}

type Outcome = std::result::Result<(), String>;

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn run(&mut self, name: &str, body: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = body();
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed: outcome.is_ok(),
            details: outcome.err().unwrap_or_default(),
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
}

/// Index pairs for a sweep over `count` basis elements: the full square up
/// to [`EXHAUSTIVE_LIMIT`], otherwise [`SAMPLED_PAIRS`] seeded draws.
fn pair_indices(count: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if count <= EXHAUSTIVE_LIMIT {
        (0..count)
            .flat_map(|i| (0..count).map(move |j| (i, j)))
            .collect()
    } else {
        (0..SAMPLED_PAIRS)
            .map(|_| (rng.gen_range(0..count), rng.gen_range(0..count)))
            .collect()
    }
}

/// Runs every check of the suite at the given dimensions.
pub fn run_suite(dims: Dims, opts: &SuiteOptions) -> Result<Report> {
    if !opts.force && (dims.l > MAX_L || dims.n > MAX_N) {
        return Err(Error::ResourceLimit {
            l: dims.l,
            n: dims.n,
            max_l: MAX_L,
            max_n: MAX_N,
        });
    }

    let mut rng = sample::rng(opts.seed);
    let mut runner = Runner { checks: Vec::new() };
    let ctx = ContactContext::new(dims);

    grassmann_checks(&mut runner, dims, &mut rng);
    field_checks(&mut runner, dims, &mut rng);
    contact_checks(&mut runner, &ctx, &mut rng);
    spo_checks(&mut runner, dims, &mut rng);
    embedding_checks(&mut runner, &ctx, &mut rng);

    let all_passed = runner.checks.iter().all(|c| c.passed);
    Ok(Report {
        l: dims.l,
        n: dims.n,
        dim_spo: spo_dim(dims),
        dim_quadratic: quadratic_dim(dims),
        checks: runner.checks,
        all_passed,
    })
}

fn grassmann_checks(runner: &mut Runner, dims: Dims, rng: &mut ChaCha8Rng) {
    runner.run("grassmann/supercommutativity", || {
        for _ in 0..PROPERTY_CASES {
            for (pf, pg) in [
                (Parity::Even, Parity::Even),
                (Parity::Even, Parity::Odd),
                (Parity::Odd, Parity::Even),
                (Parity::Odd, Parity::Odd),
            ] {
                let f = sample::homogeneous_superfunction(dims, 3, pf, rng);
                let g = sample::homogeneous_superfunction(dims, 3, pg, rng);
                let fg = &f * &g;
                let gf = &g * &f;
                let expect = if pf.koszul_sign(pg) < 0 { -&gf } else { gf };
                if fg != expect {
                    return Err(format!(
                        "f = {f}, g = {g}: f*g = {fg} but sign rule gives {expect}"
                    ));
                }
            }
        }
        Ok(())
    });

    runner.run("grassmann/associativity", || {
        for _ in 0..PROPERTY_CASES {
            let f = sample::superfunction(dims, 3, 4, rng);
            let g = sample::superfunction(dims, 3, 4, rng);
            let h = sample::superfunction(dims, 3, 4, rng);
            let lhs = &(&f * &g) * &h;
            let rhs = &f * &(&g * &h);
            if lhs != rhs {
                return Err(format!(
                    "f = {f}, g = {g}, h = {h}: (fg)h = {lhs} != f(gh) = {rhs}"
                ));
            }
        }
        Ok(())
    });

    runner.run("grassmann/derivative-commutation", || {
        let coords = CoordId::all(dims);
        for _ in 0..PROPERTY_CASES / 2 {
            let f = sample::superfunction(dims, 3, 4, rng);
            for &a in &coords {
                for &b in &coords {
                    let ab = f.partial(b).partial(a);
                    let ba = f.partial(a).partial(b);
                    let odd_pair = a.parity().is_odd() && b.parity().is_odd();
                    let expect = if odd_pair { -&ba } else { ba };
                    if ab != expect {
                        return Err(format!(
                            "f = {f}: d_{a} d_{b} f = {ab} but graded commutation gives {expect}"
                        ));
                    }
                }
                if a.parity().is_odd() && !f.partial(a).partial(a).is_zero() {
                    return Err(format!("f = {f}: d_{a}^2 f != 0"));
                }
            }
        }
        Ok(())
    });

    runner.run("grassmann/parse-format-roundtrip", || {
        for _ in 0..PROPERTY_CASES {
            let f = sample::superfunction(dims, 3, 5, rng);
            let text = f.to_string();
            match parse_expr(&text, dims) {
                Ok(back) if back == f => {}
                Ok(back) => return Err(format!("{text} reparsed as {back}")),
                Err(e) => return Err(format!("{text} failed to reparse: {e}")),
            }
        }
        Ok(())
    });
}

fn field_checks(runner: &mut Runner, dims: Dims, rng: &mut ChaCha8Rng) {
    let parities = [Parity::Even, Parity::Odd];

    runner.run("fields/graded-leibniz", || {
        for _ in 0..PROPERTY_CASES / 2 {
            for px in parities {
                for pf in parities {
                    let x = sample::homogeneous_vector_field(dims, 2, px, rng);
                    let f = sample::homogeneous_superfunction(dims, 2, pf, rng);
                    let g = sample::superfunction(dims, 2, 3, rng);
                    let lhs = x.apply(&(&f * &g));
                    let mut rhs = &x.apply(&f) * &g;
                    let cross = &f * &x.apply(&g);
                    rhs = if px.koszul_sign(pf) < 0 {
                        &rhs - &cross
                    } else {
                        &rhs + &cross
                    };
                    if lhs != rhs {
                        return Err(format!(
                            "X = {x}, f = {f}, g = {g}: X(fg) = {lhs} but Leibniz gives {rhs}"
                        ));
                    }
                }
            }
        }
        Ok(())
    });

    runner.run("fields/bracket-antisymmetry", || {
        for _ in 0..PROPERTY_CASES / 2 {
            for px in parities {
                for py in parities {
                    let x = sample::homogeneous_vector_field(dims, 2, px, rng);
                    let y = sample::homogeneous_vector_field(dims, 2, py, rng);
                    let xy = x.bracket(&y);
                    let yx = y.bracket(&x);
                    let expect = if px.koszul_sign(py) < 0 { yx } else { -&yx };
                    if xy != expect {
                        return Err(format!("X = {x}, Y = {y}: [X,Y] = {xy} != -(-1)^(xy)[Y,X]"));
                    }
                }
            }
        }
        Ok(())
    });

    runner.run("fields/super-jacobi", || {
        for _ in 0..PROPERTY_CASES / 4 {
            for px in parities {
                for py in parities {
                    for pz in parities {
                        let x = sample::homogeneous_vector_field(dims, 2, px, rng);
                        let y = sample::homogeneous_vector_field(dims, 2, py, rng);
                        let z = sample::homogeneous_vector_field(dims, 2, pz, rng);
                        let mut acc = SuperVectorField::zero(dims);
                        for (a, b, c, pa, pc) in [
                            (&x, &y, &z, px, pz),
                            (&y, &z, &x, py, px),
                            (&z, &x, &y, pz, py),
                        ] {
                            let term = a.bracket(&b.bracket(c));
                            acc = if pa.koszul_sign(pc) < 0 {
                                &acc - &term
                            } else {
                                &acc + &term
                            };
                        }
                        if !acc.is_zero() {
                            return Err(format!(
                                "X = {x}, Y = {y}, Z = {z}: graded Jacobi sum = {acc}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    });

    runner.run("fields/bracket-as-commutator", || {
        for _ in 0..PROPERTY_CASES / 2 {
            for px in parities {
                for py in parities {
                    let x = sample::homogeneous_vector_field(dims, 2, px, rng);
                    let y = sample::homogeneous_vector_field(dims, 2, py, rng);
                    let f = sample::superfunction(dims, 2, 3, rng);
                    let lhs = x.bracket(&y).apply(&f);
                    let xyf = x.apply(&y.apply(&f));
                    let yxf = y.apply(&x.apply(&f));
                    let rhs = if px.koszul_sign(py) < 0 {
                        &xyf + &yxf
                    } else {
                        &xyf - &yxf
                    };
                    if lhs != rhs {
                        return Err(format!(
                            "X = {x}, Y = {y}, f = {f}: [X,Y](f) = {lhs} != {rhs}"
                        ));
                    }
                }
            }
        }
        Ok(())
    });
}

fn contact_checks(runner: &mut Runner, ctx: &ContactContext, rng: &mut ChaCha8Rng) {
    let dims = ctx.dims();
    let m = dims.gen_count();

    runner.run("contact/frame-annihilation", || {
        for r in 1..=m {
            let value = ctx.alpha().eval(ctx.frame_element(r));
            if !value.is_zero() {
                return Err(format!("alpha(T_{r}) = {value}"));
            }
        }
        let reeb = ctx.alpha().eval(ctx.reeb());
        if reeb != Superfunction::one(dims) {
            return Err(format!("alpha(T_0) = {reeb}"));
        }
        Ok(())
    });

    runner.run("contact/tangdist-identities", || {
        let z = Superfunction::var(CoordId::Z, dims);
        for r in 1..=m {
            let t = ctx.frame_element(r);
            for k in 1..=m {
                let got = t.apply(&ctx.gen_coord(k));
                let expect = if r == k {
                    Superfunction::one(dims)
                } else {
                    Superfunction::zero(dims)
                };
                if got != expect {
                    return Err(format!("T_{r}(q^{k}) = {got}"));
                }
            }
            let mut tz = Superfunction::zero(dims);
            for k in 1..=m {
                tz = &tz - &ctx.gen_coord(k).scale(ctx.omega_lower(k, r));
            }
            if t.apply(&z) != tz {
                return Err(format!("T_{r}(z) = {} != {tz}", t.apply(&z)));
            }
            let tz2 = &z.scale(&Rat::from_int(2)) * &tz;
            if t.apply(&z.pow(2)) != tz2 {
                return Err(format!("T_{r}(z^2) = {} != {tz2}", t.apply(&z.pow(2))));
            }
            for j in 1..=m {
                let got = t.bracket(ctx.frame_element(j));
                let expect = SuperVectorField::from_coeffs(
                    dims,
                    [(
                        CoordId::Z,
                        Superfunction::constant(ctx.omega_lower(r, j) * &Rat::from_int(-2), dims),
                    )],
                );
                if got != expect {
                    return Err(format!("[T_{r}, T_{j}] = {got} != {expect}"));
                }
            }
        }
        Ok(())
    });

    runner.run("contact/contact-field-correctness", || {
        for _ in 0..PROPERTY_CASES {
            let f = sample::superfunction(dims, 2, 4, rng);
            let xf = ctx.contact_field(&f);
            if let Some((r, value)) = ctx.contact_obstruction(&xf) {
                return Err(format!("f = {f}: alpha([X_f, T_{r}]) = {value}"));
            }
            let recovered = ctx.alpha().eval(&xf);
            if recovered != f {
                return Err(format!("f = {f}: alpha(X_f) = {recovered}"));
            }
        }
        Ok(())
    });

    runner.run("contact/hamiltonian-roundtrip", || {
        for _ in 0..PROPERTY_CASES {
            let f = sample::superfunction(dims, 2, 4, rng);
            let xf = ctx.contact_field(&f);
            let back = ctx
                .hamiltonian_of(&xf)
                .map_err(|e| format!("f = {f}: {e}"))?;
            if back != f {
                return Err(format!("f = {f} recovered as {back}"));
            }
            if ctx.contact_field(&back) != xf {
                return Err(format!("f = {f}: contact field changed after recovery"));
            }
        }
        Ok(())
    });

    let monomials = quadratic_monomial_basis(dims);
    let pairs = pair_indices(monomials.len(), rng);

    runner.run("contact/lagrange-homomorphism", || {
        let fields: Vec<SuperVectorField> =
            monomials.iter().map(|f| ctx.contact_field(f)).collect();
        for &(i, j) in &pairs {
            let bracket = ctx.lagrange_bracket(&monomials[i], &monomials[j]);
            let lhs = fields[i].bracket(&fields[j]);
            let rhs = ctx.contact_field(&bracket);
            if lhs != rhs {
                return Err(format!(
                    "f = {}, g = {}: [X_f, X_g] = {lhs} != X_(f,g) = {rhs}",
                    monomials[i], monomials[j]
                ));
            }
        }
        Ok(())
    });

    runner.run("contact/degree-two-closure", || {
        for &(i, j) in &pairs {
            let bracket = ctx.lagrange_bracket(&monomials[i], &monomials[j]);
            if bracket.degree().unwrap_or(0) > 2 {
                return Err(format!(
                    "f = {}, g = {}: deg {{f,g}} = {} with {{f,g}} = {bracket}",
                    monomials[i],
                    monomials[j],
                    bracket.degree().unwrap_or(0)
                ));
            }
        }
        Ok(())
    });

    runner.run("contact/lagrange-antisymmetry", || {
        for _ in 0..PROPERTY_CASES {
            for (pf, pg) in [
                (Parity::Even, Parity::Even),
                (Parity::Even, Parity::Odd),
                (Parity::Odd, Parity::Odd),
            ] {
                let f = sample::homogeneous_superfunction(dims, 2, pf, rng);
                let g = sample::homogeneous_superfunction(dims, 2, pg, rng);
                let fg = ctx.lagrange_bracket(&f, &g);
                let gf = ctx.lagrange_bracket(&g, &f);
                let expect = if pf.koszul_sign(pg) < 0 { gf } else { -&gf };
                if fg != expect {
                    return Err(format!("f = {f}, g = {g}: {{f,g}} = {fg} != {expect}"));
                }
            }
        }
        Ok(())
    });

    runner.run("contact/lagrange-jacobi", || {
        let count = monomials.len();
        for _ in 0..PROPERTY_CASES {
            let f = &monomials[rng.gen_range(0..count)];
            let g = &monomials[rng.gen_range(0..count)];
            let h = &monomials[rng.gen_range(0..count)];
            let pf = f.homogeneous_parity().expect("monomial");
            let pg = g.homogeneous_parity().expect("monomial");
            let ph = h.homogeneous_parity().expect("monomial");
            let mut acc = Superfunction::zero(dims);
            for (a, b, c, pa, pc) in [(f, g, h, pf, ph), (g, h, f, pg, pf), (h, f, g, ph, pg)] {
                let term = ctx.lagrange_bracket(a, &ctx.lagrange_bracket(b, c));
                acc = if pa.koszul_sign(pc) < 0 {
                    &acc - &term
                } else {
                    &acc + &term
                };
            }
            if !acc.is_zero() {
                return Err(format!("f = {f}, g = {g}, h = {h}: Jacobi sum = {acc}"));
            }
        }
        Ok(())
    });
}

fn spo_checks(runner: &mut Runner, dims: Dims, rng: &mut ChaCha8Rng) {
    let omega = OmegaStructure::new(dims);
    let basis = spo_basis(dims);

    runner.run("spo/membership-agreement", || {
        for case in 0..200 {
            let a = match case % 3 {
                0 => sample::spo_member(dims, rng),
                1 => sample::spo_perturbed(dims, rng),
                _ => sample::graded_matrix(dims, rng),
            };
            if omega.preserves_omega(&a) != is_spo_blocks(&a) {
                return Err(format!(
                    "preserves-omega and block conditions disagree on {}",
                    serde_json::to_string(&a).unwrap_or_default()
                ));
            }
        }
        Ok(())
    });

    runner.run("spo/basis-membership", || {
        for (label, matrix) in &basis {
            if !omega.preserves_omega(matrix) {
                return Err(format!("{label} does not preserve omega"));
            }
            if !is_spo_blocks(matrix) {
                return Err(format!("{label} violates the block conditions"));
            }
        }
        if omega.preserves_omega(&GradedMatrix::identity(dims)) {
            return Err("identity matrix must not preserve omega".to_string());
        }
        Ok(())
    });

    runner.run("spo/basis-rank", || {
        let matrices: Vec<GradedMatrix> = basis.iter().map(|(_, m)| m.clone()).collect();
        let rank = matrix_rank(&matrices);
        let expect = spo_dim(dims);
        if rank != expect || basis.len() != expect {
            return Err(format!(
                "rank {rank}, basis length {}, expected dimension {expect}",
                basis.len()
            ));
        }
        Ok(())
    });

    runner.run("spo/bracket-closure", || {
        let pairs = pair_indices(basis.len(), rng);
        for (i, j) in pairs {
            let bracket = basis[i].1.bracket(&basis[j].1);
            if !is_spo_blocks(&bracket) || !omega.preserves_omega(&bracket) {
                return Err(format!(
                    "[{}, {}] leaves spo(2l+2|n)",
                    basis[i].0, basis[j].0
                ));
            }
        }
        Ok(())
    });

    runner.run("spo/super-jacobi", || {
        let parities = [Parity::Even, Parity::Odd];
        for _ in 0..PROPERTY_CASES / 4 {
            for pa in parities {
                for pb in parities {
                    for pc in parities {
                        let part = |p: Parity, rng: &mut ChaCha8Rng| {
                            let m = sample::graded_matrix(dims, rng);
                            let (even, odd) = m.parity_parts();
                            match p {
                                Parity::Even => even,
                                Parity::Odd => odd,
                            }
                        };
                        let a = part(pa, rng);
                        let b = part(pb, rng);
                        let c = part(pc, rng);
                        let mut acc = GradedMatrix::zeros(dims);
                        for (x, y, z, px, pz) in [
                            (&a, &b, &c, pa, pc),
                            (&b, &c, &a, pb, pa),
                            (&c, &a, &b, pc, pb),
                        ] {
                            let term = x.bracket(&y.bracket(z));
                            acc = if px.koszul_sign(pz) < 0 {
                                acc.sub(&term)
                            } else {
                                acc.add(&term)
                            };
                        }
                        if !acc.is_zero() {
                            return Err("graded Jacobi fails for matrix triple".to_string());
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

/// The Hamiltonian each basis element must produce, from the explicit case
/// analysis of the generators: e.g. `Sp1(1,1) -> 2z`, `Sp3(1,1) -> -1`,
/// `OddA(l+2,j) -> 2 th_j`, `O(i,j) -> 2 th_i th_j`.
fn golden_hamiltonian(label: &SpoBasisLabel, dims: Dims) -> Superfunction {
    let var = |c: CoordId| Superfunction::var(c, dims);
    let two = Rat::from_int(2);
    let (i, j) = (label.i, label.j);
    match label.family {
        SpoFamily::Sp1 => match (i, j) {
            (1, 1) => var(CoordId::Z).scale(&two),
            (1, j) => (&var(CoordId::Z) * &var(CoordId::X(j - 1))).scale(&two),
            (i, 1) => var(CoordId::Y(i - 1)).scale(&two),
            (i, j) => (&var(CoordId::X(j - 1)) * &var(CoordId::Y(i - 1))).scale(&two),
        },
        SpoFamily::Sp2 => match (i, j) {
            (1, 1) => var(CoordId::Z).pow(2),
            (i, j) if i == j => var(CoordId::Y(i - 1)).pow(2),
            (1, j) => (&var(CoordId::Z) * &var(CoordId::Y(j - 1))).scale(&two),
            (i, j) => (&var(CoordId::Y(i - 1)) * &var(CoordId::Y(j - 1))).scale(&two),
        },
        SpoFamily::Sp3 => match (i, j) {
            (1, 1) => -Superfunction::one(dims),
            (i, j) if i == j => -var(CoordId::X(i - 1)).pow(2),
            (1, j) => var(CoordId::X(j - 1)).scale(&-&two),
            (i, j) => (&var(CoordId::X(i - 1)) * &var(CoordId::X(j - 1))).scale(&-&two),
        },
        SpoFamily::OddA => {
            if i == dims.l + 2 {
                var(CoordId::Theta(j)).scale(&two)
            } else {
                (&var(CoordId::X(i - dims.l - 2)) * &var(CoordId::Theta(j))).scale(&two)
            }
        }
        SpoFamily::OddB => {
            if i == 1 {
                (&var(CoordId::Z) * &var(CoordId::Theta(j))).scale(&-&two)
            } else {
                (&var(CoordId::Y(i - 1)) * &var(CoordId::Theta(j))).scale(&-&two)
            }
        }
        SpoFamily::O => (&var(CoordId::Theta(i)) * &var(CoordId::Theta(j))).scale(&two),
    }
}

fn embedding_checks(runner: &mut Runner, ctx: &ContactContext, rng: &mut ChaCha8Rng) {
    let dims = ctx.dims();
    let basis = spo_basis(dims);
    let embedded: Vec<SuperVectorField> = basis
        .iter()
        .map(|(_, m)| embed_spo(ctx, m).expect("basis element is in spo"))
        .collect();

    runner.run("embedding/golden-table", || {
        // every basis element reproduces the explicit Hamiltonian
        for ((label, _), field) in basis.iter().zip(&embedded) {
            let got = ctx
                .hamiltonian_of(field)
                .map_err(|e| format!("{label}: {e}"))?;
            let expect = golden_hamiltonian(label, dims);
            if got != expect {
                return Err(format!("{label}: hamiltonian {got} != {expect}"));
            }
        }
        // headline fields, bit for bit
        let unit = Superfunction::one(dims);
        let euler = SuperVectorField::from_coeffs(
            dims,
            CoordId::all(dims)
                .into_iter()
                .map(|c| (c, Superfunction::var(c, dims))),
        );
        let z = Superfunction::var(CoordId::Z, dims);
        let golden_fields = [
            (
                SpoBasisLabel {
                    family: SpoFamily::Sp1,
                    i: 1,
                    j: 1,
                },
                &euler + &SuperVectorField::from_coeffs(dims, [(CoordId::Z, z.clone())]),
            ),
            (
                SpoBasisLabel {
                    family: SpoFamily::Sp2,
                    i: 1,
                    j: 1,
                },
                euler.scaled(&z),
            ),
            (
                SpoBasisLabel {
                    family: SpoFamily::Sp3,
                    i: 1,
                    j: 1,
                },
                -&SuperVectorField::partial(CoordId::Z, dims),
            ),
            (
                SpoBasisLabel {
                    family: SpoFamily::OddA,
                    i: dims.l + 2,
                    j: 1,
                },
                SuperVectorField::from_coeffs(
                    dims,
                    [
                        (CoordId::Z, Superfunction::var(CoordId::Theta(1), dims)),
                        (CoordId::Theta(1), unit.clone()),
                    ],
                ),
            ),
        ];
        for (label, expect) in golden_fields {
            let got = embed_spo(ctx, &label.matrix(dims)).expect("in spo");
            if got != expect {
                return Err(format!("{label}: field {got} != {expect}"));
            }
        }
        Ok(())
    });

    runner.run("embedding/contactness", || {
        for ((label, _), field) in basis.iter().zip(&embedded) {
            if let Some((r, value)) = ctx.contact_obstruction(field) {
                return Err(format!("{label}: alpha([X, T_{r}]) = {value}"));
            }
        }
        Ok(())
    });

    runner.run("embedding/scalar-invariance", || {
        let cmap = CoordMap::standard(dims);
        for (label, matrix) in basis.iter().take(6) {
            let c = sample::rat(rng);
            let shifted = matrix.add(&GradedMatrix::identity(dims).scale(&c));
            let direct = projective_embed(&normalize_rep(matrix), &cmap);
            let via_shift = projective_embed(&normalize_rep(&shifted), &cmap);
            if direct != via_shift {
                return Err(format!("{label}: embedding changed under A + ({c})*Id"));
            }
        }
        Ok(())
    });

    let pairs = pair_indices(basis.len(), rng);

    runner.run("embedding/bracket-homomorphism", || {
        for &(i, j) in &pairs {
            let matrix_bracket = basis[i].1.bracket(&basis[j].1);
            let lhs = embed_spo(ctx, &matrix_bracket)
                .map_err(|e| format!("[{}, {}]: {e}", basis[i].0, basis[j].0))?;
            let rhs = embedded[i].bracket(&embedded[j]);
            if lhs != rhs {
                return Err(format!(
                    "[{}, {}]: embed([A,B]) = {lhs} != [embed A, embed B] = {rhs}",
                    basis[i].0, basis[j].0
                ));
            }
        }
        Ok(())
    });

    runner.run("embedding/isomorphism-onto-quadratic", || {
        let hams: Vec<Superfunction> = embedded
            .iter()
            .map(|f| ctx.hamiltonian_of(f).expect("embedded fields are contact"))
            .collect();
        for (label, h) in basis.iter().map(|(l, _)| l).zip(&hams) {
            if h.degree().unwrap_or(0) > 2 {
                return Err(format!("{label}: hamiltonian {h} has degree > 2"));
            }
        }
        // phi([A,B]) = {phi(A), phi(B)}
        for &(i, j) in &pairs {
            let matrix_bracket = basis[i].1.bracket(&basis[j].1);
            let lhs = ctx
                .hamiltonian_of(&embed_spo(ctx, &matrix_bracket).expect("closure"))
                .expect("contact");
            let rhs = ctx.lagrange_bracket(&hams[i], &hams[j]);
            if lhs != rhs {
                return Err(format!(
                    "phi([{}, {}]) = {lhs} != {{phi, phi}} = {rhs}",
                    basis[i].0, basis[j].0
                ));
            }
        }
        // rank of the phi-image equals dim spo = dim of the quadratic space
        let monomials = crate::contact::quadratic_monomials(dims);
        let rows: Vec<Vec<Rat>> = hams
            .iter()
            .map(|h| monomials.iter().map(|m| h.coefficient(m)).collect())
            .collect();
        let rank = RatMatrix::from_rows(rows).rank();
        if rank != spo_dim(dims) || rank != monomials.len() {
            return Err(format!(
                "phi-image rank {rank}, dim spo {}, quadratic dimension {}",
                spo_dim(dims),
                monomials.len()
            ));
        }
        Ok(())
    });
}

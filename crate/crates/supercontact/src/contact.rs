//! The standard contact structure on `R^{2l+1|n}`.
//!
//! In Darboux coordinates the contact form is
//! `alpha = dz + sum_i (x_i dy_i - y_i dx_i) + sum_j th_j dth_j`,
//! equivalently `alpha = dz + omega_{rs} q^r dq^s` over the generalized
//! coordinates `q^1..q^{2l+n}`. The kernel of `alpha` is framed by
//! `T_r = d/dq^r - omega_{kr} q^k d/dz`, and a field is a contact field when
//! bracketing with every `T_r` stays in the kernel. Every contact field is
//! `X_f` for a unique Hamiltonian superfunction `f = alpha(X_f)`, and the
//! bracket of contact fields is governed by the Lagrange bracket `{f,g}`.

use crate::dims::{CoordId, Dims, Parity};
use crate::error::{Error, Result};
use crate::fields::{SuperOneForm, SuperVectorField};
use crate::rat::{Rat, RatMatrix};
use crate::superfn::{Monomial, Superfunction};

/// The ambient configuration for all contact-geometric operations: the
/// contact form, the `omega` matrices, the tangent frame and the Reeb field.
/// Immutable after construction; all invariants are asserted by
/// [`ContactContext::new`].
#[derive(Clone, Debug)]
pub struct ContactContext {
    dims: Dims,
    alpha: SuperOneForm,
    /// `T_1..T_{2l+n}`, index 0 holding `T_1`.
    frame: Vec<SuperVectorField>,
    omega_lower: RatMatrix,
    omega_upper: RatMatrix,
    reeb: SuperVectorField,
}

impl ContactContext {
    /// Builds the standard contact structure at the given dimensions.
    pub fn new(dims: Dims) -> Self {
        let m = dims.gen_count();
        let l = dims.l;

        // omega_{rs} = [[0, id_l, 0], [-id_l, 0, 0], [0, 0, id_n]]
        let mut omega_lower = RatMatrix::zeros(m, m);
        // omega^{rs} = [[0, -id_l, 0], [id_l, 0, 0], [0, 0, id_n]]
        let mut omega_upper = RatMatrix::zeros(m, m);
        for i in 0..l {
            omega_lower[(i, l + i)] = Rat::one();
            omega_lower[(l + i, i)] = -Rat::one();
            omega_upper[(i, l + i)] = -Rat::one();
            omega_upper[(l + i, i)] = Rat::one();
        }
        for j in 0..dims.n {
            omega_lower[(2 * l + j, 2 * l + j)] = Rat::one();
            omega_upper[(2 * l + j, 2 * l + j)] = Rat::one();
        }

        // alpha = dz + omega_{rs} q^r dq^s
        let mut alpha_coeffs = vec![(CoordId::Z, Superfunction::one(dims))];
        for s in 1..=m {
            let mut coeff = Superfunction::zero(dims);
            for r in 1..=m {
                let w = &omega_lower[(r - 1, s - 1)];
                if w.is_zero() {
                    continue;
                }
                coeff = &coeff + &Superfunction::var(CoordId::gen(r, dims), dims).scale(w);
            }
            alpha_coeffs.push((CoordId::gen(s, dims), coeff));
        }
        let alpha = SuperOneForm::from_coeffs(dims, alpha_coeffs);

        // T_r = d/dq^r - omega_{kr} q^k d/dz
        let frame: Vec<SuperVectorField> = (1..=m)
            .map(|r| {
                let mut z_coeff = Superfunction::zero(dims);
                for k in 1..=m {
                    let w = &omega_lower[(k - 1, r - 1)];
                    if w.is_zero() {
                        continue;
                    }
                    z_coeff = &z_coeff - &Superfunction::var(CoordId::gen(k, dims), dims).scale(w);
                }
                SuperVectorField::from_coeffs(
                    dims,
                    [
                        (CoordId::gen(r, dims), Superfunction::one(dims)),
                        (CoordId::Z, z_coeff),
                    ],
                )
            })
            .collect();

        let reeb = SuperVectorField::partial(CoordId::Z, dims);

        let ctx = ContactContext {
            dims,
            alpha,
            frame,
            omega_lower,
            omega_upper,
            reeb,
        };
        ctx.assert_invariants();
        ctx
    }

    fn assert_invariants(&self) {
        let m = self.dims.gen_count();
        assert_eq!(
            self.omega_lower.mul(&self.omega_upper),
            RatMatrix::identity(m),
            "omega_lower * omega_upper must be the identity"
        );
        for r in 1..=m {
            for s in 1..=m {
                let sign = CoordId::gen(r, self.dims)
                    .parity()
                    .koszul_sign(CoordId::gen(s, self.dims).parity());
                let mut expect = -self.omega_upper[(s - 1, r - 1)].clone();
                if sign < 0 {
                    expect = -expect;
                }
                assert_eq!(
                    self.omega_upper[(r - 1, s - 1)],
                    expect,
                    "omega^rs must be super-skew"
                );
            }
            assert!(
                self.alpha.eval(&self.frame[r - 1]).is_zero(),
                "frame element T_{r} must lie in ker alpha"
            );
        }
        assert_eq!(
            self.alpha.eval(&self.reeb),
            Superfunction::one(self.dims),
            "alpha(T_0) must be 1"
        );
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn alpha(&self) -> &SuperOneForm {
        &self.alpha
    }

    /// The frame `T_1..T_{2l+n}` of the contact distribution.
    pub fn frame(&self) -> &[SuperVectorField] {
        &self.frame
    }

    /// `T_r` with the 1-based index of the generalized coordinates.
    pub fn frame_element(&self, r: usize) -> &SuperVectorField {
        &self.frame[r - 1]
    }

    /// The Reeb field `T_0 = d/dz`.
    pub fn reeb(&self) -> &SuperVectorField {
        &self.reeb
    }

    /// `omega_{rs}`, 1-based.
    pub fn omega_lower(&self, r: usize, s: usize) -> &Rat {
        &self.omega_lower[(r - 1, s - 1)]
    }

    /// `omega^{rs}`, 1-based.
    pub fn omega_upper(&self, r: usize, s: usize) -> &Rat {
        &self.omega_upper[(r - 1, s - 1)]
    }

    /// The generalized coordinate `q^r` as a superfunction.
    pub fn gen_coord(&self, r: usize) -> Superfunction {
        Superfunction::var(CoordId::gen(r, self.dims), self.dims)
    }

    /// Whether `X` lies in the contact distribution `ker alpha`.
    pub fn is_tangent(&self, field: &SuperVectorField) -> bool {
        self.alpha.eval(field).is_zero()
    }

    /// Whether `X` preserves the contact structure: `[X, T_r]` tangent for
    /// every frame element. The frame generates the kernel of `alpha` as a
    /// module over superfunctions, so this is the full contact condition.
    pub fn is_contact(&self, field: &SuperVectorField) -> bool {
        self.contact_obstruction(field).is_none()
    }

    /// The first frame index `r` whose bracket with `X` leaves the contact
    /// distribution, together with the value `alpha([X, T_r])`.
    pub fn contact_obstruction(&self, field: &SuperVectorField) -> Option<(usize, Superfunction)> {
        for (idx, t) in self.frame.iter().enumerate() {
            let value = self.alpha.eval(&field.bracket(t));
            if !value.is_zero() {
                return Some((idx + 1, value));
            }
        }
        None
    }

    /// The contact field of a Hamiltonian superfunction:
    /// `X_f = f d/dz - 1/2 (-1)^{f~ T_r~} omega^{rs} T_r(f) T_s`,
    /// extended linearly over the parity parts of `f`.
    pub fn contact_field(&self, f: &Superfunction) -> SuperVectorField {
        assert_eq!(
            self.dims,
            f.dims(),
            "hamiltonian lives on a different superspace"
        );
        let m = self.dims.gen_count();
        let mut out = SuperVectorField::from_coeffs(self.dims, [(CoordId::Z, f.clone())]);
        let (fe, fo) = f.parity_parts();
        for (fh, fp) in [(fe, Parity::Even), (fo, Parity::Odd)] {
            if fh.is_zero() {
                continue;
            }
            let applied: Vec<Superfunction> = self.frame.iter().map(|t| t.apply(&fh)).collect();
            for r in 1..=m {
                if applied[r - 1].is_zero() {
                    continue;
                }
                let r_parity = CoordId::gen(r, self.dims).parity();
                for s in 1..=m {
                    let w = self.omega_upper(r, s);
                    if w.is_zero() {
                        continue;
                    }
                    let mut c = w * &Rat::new(-1, 2);
                    if fp.koszul_sign(r_parity) < 0 {
                        c = -c;
                    }
                    let coeff = applied[r - 1].scale(&c);
                    out = &out + &self.frame[s - 1].scaled(&coeff);
                }
            }
        }
        out
    }

    /// Recovers the Hamiltonian of a contact field: `f = alpha(X)`, with
    /// `contact_field(f) == X` guaranteed. Fails when `X` is not contact,
    /// reporting the frame element that witnesses it.
    pub fn hamiltonian_of(&self, field: &SuperVectorField) -> Result<Superfunction> {
        if let Some((frame_index, obstruction)) = self.contact_obstruction(field) {
            return Err(Error::NotContact {
                frame_index,
                obstruction: obstruction.to_string(),
            });
        }
        Ok(self.alpha.eval(field))
    }

    /// The Lagrange bracket
    /// `{f,g} = f g' - f' g - 1/2 (-1)^{T_r~ f~} omega^{rs} T_r(f) T_s(g)`
    /// with `h' = dh/dz`, extended bilinearly over parity parts. It satisfies
    /// `[X_f, X_g] = X_{{f,g}}`.
    pub fn lagrange_bracket(&self, f: &Superfunction, g: &Superfunction) -> Superfunction {
        assert_eq!(self.dims, f.dims(), "f lives on a different superspace");
        assert_eq!(self.dims, g.dims(), "g lives on a different superspace");
        let m = self.dims.gen_count();
        let mut out = &(f * &g.d_z()) - &(&f.d_z() * g);
        let applied_g: Vec<Superfunction> = self.frame.iter().map(|t| t.apply(g)).collect();
        let (fe, fo) = f.parity_parts();
        for (fh, fp) in [(fe, Parity::Even), (fo, Parity::Odd)] {
            if fh.is_zero() {
                continue;
            }
            let applied_f: Vec<Superfunction> = self.frame.iter().map(|t| t.apply(&fh)).collect();
            for r in 1..=m {
                if applied_f[r - 1].is_zero() {
                    continue;
                }
                let r_parity = CoordId::gen(r, self.dims).parity();
                for s in 1..=m {
                    let w = self.omega_upper(r, s);
                    if w.is_zero() || applied_g[s - 1].is_zero() {
                        continue;
                    }
                    let mut c = w * &Rat::new(-1, 2);
                    if r_parity.koszul_sign(fp) < 0 {
                        c = -c;
                    }
                    let product = &applied_f[r - 1] * &applied_g[s - 1];
                    out = &out + &product.scale(&c);
                }
            }
        }
        out
    }
}

/// All monomials of total degree at most two, in the canonical graded term
/// order. These span the quadratic subalgebra: the image of `spo(2l+2|n)`
/// under Hamiltonian recovery.
pub fn quadratic_monomials(dims: Dims) -> Vec<Monomial> {
    let coords = CoordId::all(dims);
    let mut monomials = vec![Monomial::one(dims)];
    for (i, &a) in coords.iter().enumerate() {
        monomials.push(Monomial::var(a, dims));
        for &b in &coords[i..] {
            let fa = Monomial::var(a, dims);
            let fb = Monomial::var(b, dims);
            if let Some((sign, m)) = Monomial::from_parts(
                fa.even_exponents()
                    .iter()
                    .zip(fb.even_exponents())
                    .map(|(x, y)| x + y)
                    .collect(),
                &[fa.odd_indices(), fb.odd_indices()].concat(),
                dims,
            ) {
                debug_assert_eq!(sign, 1);
                monomials.push(m);
            }
        }
    }
    monomials.sort();
    monomials.dedup();
    monomials
}

/// [`quadratic_monomials`] packaged as unit-coefficient superfunctions.
pub fn quadratic_monomial_basis(dims: Dims) -> Vec<Superfunction> {
    quadratic_monomials(dims)
        .into_iter()
        .map(|m| Superfunction::monomial(m, Rat::one(), dims))
        .collect()
}

/// Closed form for the number of degree-two-or-less monomials:
/// `1 + (2l+1+n) + (2l+1)(2l+2)/2 + (2l+1)n + n(n-1)/2`.
pub fn quadratic_dim(dims: Dims) -> usize {
    let e = dims.even_count();
    let n = dims.n;
    1 + e + n + e * (e + 1) / 2 + e * n + n * (n - 1) / 2
}

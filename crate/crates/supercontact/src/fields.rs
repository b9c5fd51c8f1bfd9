//! Super vector fields and differential 1-superforms.
//!
//! A vector field `X = sum_i X^i d/dz_i` acts on superfunctions as a
//! superderivation; the coordinate `z_i` runs over `z, x_1..x_l, y_1..y_l,
//! th_1..th_n`. A 1-superform `a = sum_i a_i dz_i` keeps its coefficients on
//! the left. The pairing `<X, a> = sum_i (-1)^{i~(a_i~ + i~)} X^i a_i` is the
//! single source of truth for all evaluation signs; in particular it already
//! encodes `<d/dth_j, dth_i> = -delta^i_j`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::dims::{CoordId, Dims, Parity};
use crate::superfn::Superfunction;

/// A super vector field, stored as its nonzero coordinate coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperVectorField {
    dims: Dims,
    coeffs: BTreeMap<CoordId, Superfunction>,
}

/// A differential 1-superform, stored as its nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperOneForm {
    dims: Dims,
    coeffs: BTreeMap<CoordId, Superfunction>,
}

impl SuperVectorField {
    pub fn zero(dims: Dims) -> Self {
        SuperVectorField {
            dims,
            coeffs: BTreeMap::new(),
        }
    }

    /// The coordinate field `d/dcoord`.
    pub fn partial(coord: CoordId, dims: Dims) -> Self {
        let mut x = Self::zero(dims);
        x.add_coeff(coord, Superfunction::one(dims));
        x
    }

    pub fn from_coeffs(
        dims: Dims,
        coeffs: impl IntoIterator<Item = (CoordId, Superfunction)>,
    ) -> Self {
        let mut x = Self::zero(dims);
        for (coord, f) in coeffs {
            x.add_coeff(coord, f);
        }
        x
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, coord: CoordId) -> Option<&Superfunction> {
        self.coeffs.get(&coord)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&CoordId, &Superfunction)> {
        self.coeffs.iter()
    }

    fn add_coeff(&mut self, coord: CoordId, f: Superfunction) {
        assert!(
            coord.in_range(self.dims),
            "coordinate {coord} out of range for {}",
            self.dims
        );
        assert_eq!(
            f.dims(),
            self.dims,
            "coefficient lives on a different superspace"
        );
        if f.is_zero() {
            return;
        }
        match self.coeffs.entry(coord) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &f;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_dims(&self, other: &SuperVectorField) {
        assert_eq!(
            self.dims, other.dims,
            "vector fields live on different superspaces"
        );
    }

    /// Applies the field to a superfunction: `X(f) = sum_i X^i d f/d z_i`.
    pub fn apply(&self, f: &Superfunction) -> Superfunction {
        assert_eq!(
            self.dims,
            f.dims(),
            "argument lives on a different superspace"
        );
        let mut out = Superfunction::zero(self.dims);
        for (&coord, xi) in &self.coeffs {
            out = &out + &(xi * &f.partial(coord));
        }
        out
    }

    /// Splits into (even field, odd field); the parity of the term
    /// `X^i d/dz_i` is the coefficient parity plus the coordinate parity.
    pub fn parity_parts(&self) -> (SuperVectorField, SuperVectorField) {
        let mut even = Self::zero(self.dims);
        let mut odd = Self::zero(self.dims);
        for (&coord, xi) in &self.coeffs {
            let (ce, co) = xi.parity_parts();
            match coord.parity() {
                Parity::Even => {
                    even.add_coeff(coord, ce);
                    odd.add_coeff(coord, co);
                }
                Parity::Odd => {
                    even.add_coeff(coord, co);
                    odd.add_coeff(coord, ce);
                }
            }
        }
        (even, odd)
    }

    /// The parity of a homogeneous field; `None` when parities mix. The zero
    /// field counts as even.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut parity = None;
        for (&coord, xi) in &self.coeffs {
            let cp = xi.homogeneous_parity()?;
            let p = cp.combine(coord.parity());
            match parity {
                None => parity = Some(p),
                Some(q) if q == p => {}
                Some(_) => return None,
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    /// Left multiplication by a superfunction: `(f X)^i = f X^i`.
    pub fn scaled(&self, f: &Superfunction) -> SuperVectorField {
        let mut out = Self::zero(self.dims);
        for (&coord, xi) in &self.coeffs {
            out.add_coeff(coord, f * xi);
        }
        out
    }

    /// Lie superbracket `[X,Y] = XY - (-1)^{X~Y~} YX`, computed
    /// coordinate-wise per homogeneous parts:
    /// `[X,Y]^i = X(Y^i) - (-1)^{X~Y~} Y(X^i)`.
    pub fn bracket(&self, other: &SuperVectorField) -> SuperVectorField {
        self.assert_same_dims(other);
        let mut out = Self::zero(self.dims);
        let (xe, xo) = self.parity_parts();
        let (ye, yo) = other.parity_parts();
        for (xh, xp) in [(&xe, Parity::Even), (&xo, Parity::Odd)] {
            for (yh, yp) in [(&ye, Parity::Even), (&yo, Parity::Odd)] {
                for (&coord, yi) in &yh.coeffs {
                    out.add_coeff(coord, xh.apply(yi));
                }
                let negate = xp.koszul_sign(yp) > 0;
                for (&coord, xi) in &xh.coeffs {
                    let applied = yh.apply(xi);
                    out.add_coeff(coord, if negate { -applied } else { applied });
                }
            }
        }
        out
    }
}

impl SuperOneForm {
    pub fn zero(dims: Dims) -> Self {
        SuperOneForm {
            dims,
            coeffs: BTreeMap::new(),
        }
    }

    /// The coordinate differential `dcoord`.
    pub fn differential(coord: CoordId, dims: Dims) -> Self {
        let mut a = Self::zero(dims);
        a.add_coeff(coord, Superfunction::one(dims));
        a
    }

    pub fn from_coeffs(
        dims: Dims,
        coeffs: impl IntoIterator<Item = (CoordId, Superfunction)>,
    ) -> Self {
        let mut a = Self::zero(dims);
        for (coord, f) in coeffs {
            a.add_coeff(coord, f);
        }
        a
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, coord: CoordId) -> Option<&Superfunction> {
        self.coeffs.get(&coord)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&CoordId, &Superfunction)> {
        self.coeffs.iter()
    }

    fn add_coeff(&mut self, coord: CoordId, f: Superfunction) {
        assert!(
            coord.in_range(self.dims),
            "coordinate {coord} out of range for {}",
            self.dims
        );
        assert_eq!(
            f.dims(),
            self.dims,
            "coefficient lives on a different superspace"
        );
        if f.is_zero() {
            return;
        }
        match self.coeffs.entry(coord) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &f;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// The pairing `<X, a> = i(X) a`, per the closed per-coordinate formula:
    /// the term at coordinate `i` contributes `X^i a_i` with sign
    /// `(-1)^{i~ (a_i~ + i~)}`, i.e. a minus exactly on odd coordinates whose
    /// coefficient part is even.
    pub fn pairing(&self, field: &SuperVectorField) -> Superfunction {
        assert_eq!(
            self.dims,
            field.dims(),
            "form and field live on different superspaces"
        );
        let mut out = Superfunction::zero(self.dims);
        for (&coord, ai) in &self.coeffs {
            let Some(xi) = field.coeff(coord) else {
                continue;
            };
            let adjusted = match coord.parity() {
                Parity::Even => ai.clone(),
                Parity::Odd => {
                    let (ae, ao) = ai.parity_parts();
                    &ao - &ae
                }
            };
            out = &out + &(xi * &adjusted);
        }
        out
    }

    /// Form evaluation `a(X) = (-1)^{X~ a~} <X, a>`, extended bilinearly
    /// over the parity parts of both arguments.
    pub fn eval(&self, field: &SuperVectorField) -> Superfunction {
        assert_eq!(
            self.dims,
            field.dims(),
            "form and field live on different superspaces"
        );
        let mut out = Superfunction::zero(self.dims);
        for (&coord, ai) in &self.coeffs {
            let Some(xi) = field.coeff(coord) else {
                continue;
            };
            // Per coefficient monomials the total sign is
            // (-1)^{x~ (a~ + i~)} for field-part parity x~ and form
            // coefficient parity a~ at coordinate i.
            let (xe, xo) = xi.parity_parts();
            let (ae, ao) = ai.parity_parts();
            out = &out + &(&xe * ai);
            let odd_contribution = match coord.parity() {
                Parity::Even => &(&xo * &ae) - &(&xo * &ao),
                Parity::Odd => &(&xo * &ao) - &(&xo * &ae),
            };
            out = &out + &odd_contribution;
        }
        out
    }
}

impl Add for &SuperVectorField {
    type Output = SuperVectorField;
    fn add(self, rhs: &SuperVectorField) -> SuperVectorField {
        self.assert_same_dims(rhs);
        let mut out = self.clone();
        for (&coord, f) in &rhs.coeffs {
            out.add_coeff(coord, f.clone());
        }
        out
    }
}

impl Sub for &SuperVectorField {
    type Output = SuperVectorField;
    fn sub(self, rhs: &SuperVectorField) -> SuperVectorField {
        self + &-rhs
    }
}

impl Neg for &SuperVectorField {
    type Output = SuperVectorField;
    fn neg(self) -> SuperVectorField {
        let mut out = SuperVectorField::zero(self.dims);
        for (&coord, f) in &self.coeffs {
            out.add_coeff(coord, -f);
        }
        out
    }
}

impl Neg for SuperVectorField {
    type Output = SuperVectorField;
    fn neg(self) -> SuperVectorField {
        -&self
    }
}

impl Add for SuperVectorField {
    type Output = SuperVectorField;
    fn add(self, rhs: SuperVectorField) -> SuperVectorField {
        &self + &rhs
    }
}

impl Sub for SuperVectorField {
    type Output = SuperVectorField;
    fn sub(self, rhs: SuperVectorField) -> SuperVectorField {
        &self - &rhs
    }
}

/// `f * X` is left multiplication of the field by a superfunction.
impl Mul<&SuperVectorField> for &Superfunction {
    type Output = SuperVectorField;
    fn mul(self, rhs: &SuperVectorField) -> SuperVectorField {
        rhs.scaled(self)
    }
}

/// Canonical text: `(coefficient)*d/dcoord` terms in coordinate order.
impl fmt::Display for SuperVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, coord) in CoordId::all(self.dims)
            .into_iter()
            .filter(|c| self.coeffs.contains_key(c))
            .enumerate()
        {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*d/d{coord}", self.coeffs[&coord])?;
        }
        Ok(())
    }
}

impl fmt::Display for SuperOneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, coord) in CoordId::all(self.dims)
            .into_iter()
            .filter(|c| self.coeffs.contains_key(c))
            .enumerate()
        {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*d{coord}", self.coeffs[&coord])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;

    fn dims() -> Dims {
        Dims::new(1, 1)
    }

    fn var(c: CoordId) -> Superfunction {
        Superfunction::var(c, dims())
    }

    /// alpha = dz + x1 dy1 - y1 dx1 + th1 dth1 at (l, n) = (1, 1).
    fn alpha() -> SuperOneForm {
        SuperOneForm::from_coeffs(
            dims(),
            [
                (CoordId::Z, Superfunction::one(dims())),
                (CoordId::Y(1), var(CoordId::X(1))),
                (CoordId::X(1), -var(CoordId::Y(1))),
                (CoordId::Theta(1), var(CoordId::Theta(1))),
            ],
        )
    }

    /// The tangent frame T_1, T_2, T_3 at (1, 1).
    fn frame() -> Vec<SuperVectorField> {
        let d = dims();
        vec![
            SuperVectorField::from_coeffs(
                d,
                [
                    (CoordId::X(1), Superfunction::one(d)),
                    (CoordId::Z, var(CoordId::Y(1))),
                ],
            ),
            SuperVectorField::from_coeffs(
                d,
                [
                    (CoordId::Y(1), Superfunction::one(d)),
                    (CoordId::Z, -var(CoordId::X(1))),
                ],
            ),
            SuperVectorField::from_coeffs(
                d,
                [
                    (CoordId::Theta(1), Superfunction::one(d)),
                    (CoordId::Z, -var(CoordId::Theta(1))),
                ],
            ),
        ]
    }

    #[test]
    fn apply_is_a_derivation_on_examples() {
        let d = dims();
        let dz = SuperVectorField::partial(CoordId::Z, d);
        assert_eq!(
            dz.apply(&var(CoordId::Z).pow(2)),
            var(CoordId::Z).scale(&Rat::from_int(2))
        );

        // (th1 d/dz + d/dth1)(z th1) = th1 th1 + z = z
        let x = SuperVectorField::from_coeffs(
            d,
            [
                (CoordId::Z, var(CoordId::Theta(1))),
                (CoordId::Theta(1), Superfunction::one(d)),
            ],
        );
        let zth = &var(CoordId::Z) * &var(CoordId::Theta(1));
        assert_eq!(x.apply(&zth), var(CoordId::Z));

        assert!(x.apply(&Superfunction::one(d)).is_zero());
    }

    #[test]
    fn odd_odd_bracket_is_an_anticommutator() {
        // [d/dth1 - th1 d/dz, same] = -2 d/dz
        let d = dims();
        let t = SuperVectorField::from_coeffs(
            d,
            [
                (CoordId::Theta(1), Superfunction::one(d)),
                (CoordId::Z, -var(CoordId::Theta(1))),
            ],
        );
        let expect = SuperVectorField::from_coeffs(
            d,
            [(CoordId::Z, Superfunction::constant(Rat::from_int(-2), d))],
        );
        assert_eq!(t.bracket(&t), expect);
    }

    #[test]
    fn even_self_bracket_vanishes() {
        let d = dims();
        let x = SuperVectorField::from_coeffs(
            d,
            [
                (CoordId::X(1), var(CoordId::Z)),
                (CoordId::Z, var(CoordId::X(1)).pow(2)),
            ],
        );
        assert!(x.bracket(&x).is_zero());
    }

    #[test]
    fn pairing_examples() {
        let d = dims();
        let dz = SuperOneForm::differential(CoordId::Z, d);
        assert_eq!(
            dz.pairing(&SuperVectorField::partial(CoordId::Z, d)),
            Superfunction::one(d)
        );

        // <d/dth_j, alpha> = th_j: the odd-odd sign in the pairing is +1
        let pairing = alpha().pairing(&SuperVectorField::partial(CoordId::Theta(1), d));
        assert_eq!(pairing, var(CoordId::Theta(1)));

        // <d/dth_j, dth_i> = -delta^i_j comes out of the same formula
        let dth = SuperOneForm::differential(CoordId::Theta(1), d);
        assert_eq!(
            dth.pairing(&SuperVectorField::partial(CoordId::Theta(1), d)),
            -Superfunction::one(d)
        );

        // the frame lies in the kernel of alpha
        for t in frame() {
            assert!(alpha().pairing(&t).is_zero());
        }
    }

    #[test]
    fn eval_examples() {
        let d = dims();
        let a = alpha();
        assert_eq!(
            a.eval(&SuperVectorField::partial(CoordId::Z, d)),
            Superfunction::one(d)
        );
        for t in frame() {
            assert!(a.eval(&t).is_zero());
        }
        // alpha(f d/dz) = f, any parity of f
        let f = &(&var(CoordId::Z) + &var(CoordId::Theta(1))) + &var(CoordId::X(1)).pow(2);
        let fdz = SuperVectorField::from_coeffs(d, [(CoordId::Z, f.clone())]);
        assert_eq!(a.eval(&fdz), f);
    }

    #[test]
    fn bracket_matches_operator_commutator() {
        // vfApply([X,Y], f) = X(Y(f)) - (-1)^{X~Y~} Y(X(f)) on a mixed example
        let d = dims();
        let x = SuperVectorField::from_coeffs(
            d,
            [
                (CoordId::Theta(1), var(CoordId::X(1))),
                (CoordId::Z, var(CoordId::Theta(1))),
            ],
        ); // odd field
        let y = SuperVectorField::from_coeffs(
            d,
            [
                (CoordId::X(1), var(CoordId::Z)),
                (CoordId::Theta(1), var(CoordId::Theta(1))),
            ],
        ); // even field
        let f = &(&var(CoordId::Z) * &var(CoordId::Theta(1))) + &var(CoordId::X(1)).pow(2);
        let lhs = x.bracket(&y).apply(&f);
        let rhs = &x.apply(&y.apply(&f)) - &y.apply(&x.apply(&f));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_canonical_order() {
        let d = dims();
        let x = SuperVectorField::from_coeffs(
            d,
            [
                (
                    CoordId::Theta(1),
                    Superfunction::constant(Rat::new(1, 2), d),
                ),
                (CoordId::Z, var(CoordId::Theta(1)).scale(&Rat::new(1, 2))),
            ],
        );
        assert_eq!(x.to_string(), "(1/2*th1)*d/dz + (1/2)*d/dth1");
        assert_eq!(SuperVectorField::zero(d).to_string(), "0");
    }
}

//! Polynomial superfunctions on `R^{2l+1|n}`.
//!
//! A superfunction is a finite sum `sum_I f_I(z,x,y) th_I` where each
//! `f_I` is a polynomial with exact rational coefficients and `th_I` is a
//! word in the anticommuting Grassmann coordinates, `th_i th_j = -th_j th_i`
//! and `th_i^2 = 0`. Every value is kept in a canonical normal form: Grassmann
//! words are stored with strictly ascending indices (all signs absorbed into
//! the coefficients) and zero coefficients are never stored, so structural
//! equality is semantic equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::dims::{CoordId, Dims, Parity};
use crate::rat::Rat;

/// A monomial `z^a x^b y^c th_{i_1}..th_{i_p}` with `i_1 < ... < i_p`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    /// Exponents of the even coordinates in order `z, x_1..x_l, y_1..y_l`.
    even: Vec<u32>,
    /// Strictly ascending odd indices in `1..=n`.
    odd: Vec<usize>,
}

impl Monomial {
    pub fn one(dims: Dims) -> Self {
        Monomial {
            even: vec![0; dims.even_count()],
            odd: Vec::new(),
        }
    }

    pub fn var(coord: CoordId, dims: Dims) -> Self {
        assert!(
            coord.in_range(dims),
            "coordinate {coord} out of range for {dims}"
        );
        let mut m = Monomial::one(dims);
        match coord {
            CoordId::Theta(j) => m.odd.push(j),
            even => m.even[even.canonical_index(dims)] += 1,
        }
        m
    }

    /// Builds a monomial from raw exponents and an arbitrary Grassmann word.
    /// Returns `None` (the zero term) when the word repeats an index, else
    /// the canonical monomial together with the sorting sign.
    pub fn from_parts(even: Vec<u32>, odd_word: &[usize], dims: Dims) -> Option<(i64, Monomial)> {
        assert_eq!(even.len(), dims.even_count(), "even exponent vector length");
        let mut sign = 1i64;
        let mut sorted: Vec<usize> = Vec::with_capacity(odd_word.len());
        for &j in odd_word {
            assert!(
                1 <= j && j <= dims.n,
                "odd index {j} out of range for {dims}"
            );
            // insertion with a sign flip per transposition
            let pos = sorted.partition_point(|&k| k < j);
            if sorted.get(pos) == Some(&j) {
                return None;
            }
            if (sorted.len() - pos) % 2 == 1 {
                sign = -sign;
            }
            sorted.insert(pos, j);
        }
        Some((sign, Monomial { even, odd: sorted }))
    }

    /// Total degree: even exponents plus the Grassmann word length.
    pub fn degree(&self) -> usize {
        self.even.iter().map(|&e| e as usize).sum::<usize>() + self.odd.len()
    }

    pub fn parity(&self) -> Parity {
        if self.odd.len() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn even_exponents(&self) -> &[u32] {
        &self.even
    }

    pub fn odd_indices(&self) -> &[usize] {
        &self.odd
    }

    /// Product of two canonical monomials: `None` when a Grassmann index
    /// repeats, otherwise the sign collected from sorting the concatenated
    /// word and the canonical result.
    fn mul(&self, other: &Monomial) -> Option<(i64, Monomial)> {
        debug_assert_eq!(self.even.len(), other.even.len());
        let even = self
            .even
            .iter()
            .zip(&other.even)
            .map(|(a, b)| a + b)
            .collect();
        let mut odd = Vec::with_capacity(self.odd.len() + other.odd.len());
        let mut inversions = 0usize;
        let (mut i, mut j) = (0, 0);
        while i < self.odd.len() && j < other.odd.len() {
            match self.odd[i].cmp(&other.odd[j]) {
                Ordering::Less => {
                    odd.push(self.odd[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    // other.odd[j] crosses everything left in self.odd
                    inversions += self.odd.len() - i;
                    odd.push(other.odd[j]);
                    j += 1;
                }
                Ordering::Equal => return None,
            }
        }
        odd.extend_from_slice(&self.odd[i..]);
        odd.extend_from_slice(&other.odd[j..]);
        let sign = if inversions % 2 == 1 { -1 } else { 1 };
        Some((sign, Monomial { even, odd }))
    }
}

/// Graded order: ascending total degree, then earliest coordinate with the
/// larger exponent first. This is the term order used by the canonical
/// printer, so `z` sorts before `x1`, and `z^2` before `x1*y1`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                for (a, b) in self.even.iter().zip(&other.even) {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.odd.cmp(&other.odd))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A superfunction in canonical form: a term map with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Superfunction {
    dims: Dims,
    terms: BTreeMap<Monomial, Rat>,
}

impl Superfunction {
    pub fn zero(dims: Dims) -> Self {
        Superfunction {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dims: Dims) -> Self {
        Superfunction::constant(Rat::one(), dims)
    }

    pub fn constant(c: Rat, dims: Dims) -> Self {
        let mut f = Superfunction::zero(dims);
        f.add_term(Monomial::one(dims), c);
        f
    }

    pub fn var(coord: CoordId, dims: Dims) -> Self {
        let mut f = Superfunction::zero(dims);
        f.add_term(Monomial::var(coord, dims), Rat::one());
        f
    }

    pub fn monomial(mono: Monomial, coeff: Rat, dims: Dims) -> Self {
        let mut f = Superfunction::zero(dims);
        f.add_term(mono, coeff);
        f
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of a monomial, zero when absent.
    pub fn coefficient(&self, mono: &Monomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_dims(&self, other: &Superfunction) {
        assert_eq!(
            self.dims, other.dims,
            "superfunctions live on different superspaces"
        );
    }

    pub fn scale(&self, c: &Rat) -> Superfunction {
        if c.is_zero() {
            return Superfunction::zero(self.dims);
        }
        let mut out = Superfunction::zero(self.dims);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Total degree over all terms, counting `z`, `x_i`, `y_i` and `th_i`
    /// each with weight one; `None` for the zero superfunction.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Splits into (even part, odd part) by Grassmann word length mod 2.
    pub fn parity_parts(&self) -> (Superfunction, Superfunction) {
        let mut even = Superfunction::zero(self.dims);
        let mut odd = Superfunction::zero(self.dims);
        for (m, c) in &self.terms {
            let target = match m.parity() {
                Parity::Even => &mut even,
                Parity::Odd => &mut odd,
            };
            target.add_term(m.clone(), c.clone());
        }
        (even, odd)
    }

    /// The parity of a homogeneous superfunction; `None` when the value
    /// mixes parities. Zero counts as even.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut parity = None;
        for m in self.terms.keys() {
            match parity {
                None => parity = Some(m.parity()),
                Some(p) if p == m.parity() => {}
                Some(_) => return None,
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    /// Partial derivative along any coordinate. Even coordinates get the
    /// ordinary polynomial derivative; odd coordinates get the left Grassmann
    /// derivative: on `th_{i_1}..th_{i_p}` with `i_k = j` the result is
    /// `(-1)^{k-1}` times the word with `th_{i_k}` removed.
    pub fn partial(&self, coord: CoordId) -> Superfunction {
        assert!(
            coord.in_range(self.dims),
            "coordinate {coord} out of range for {}",
            self.dims
        );
        let mut out = Superfunction::zero(self.dims);
        match coord {
            CoordId::Theta(j) => {
                for (m, c) in &self.terms {
                    let Some(k) = m.odd.iter().position(|&i| i == j) else {
                        continue;
                    };
                    let mut odd = m.odd.clone();
                    odd.remove(k);
                    let coeff = if k % 2 == 1 { -c.clone() } else { c.clone() };
                    out.add_term(
                        Monomial {
                            even: m.even.clone(),
                            odd,
                        },
                        coeff,
                    );
                }
            }
            even => {
                let idx = even.canonical_index(self.dims);
                for (m, c) in &self.terms {
                    let e = m.even[idx];
                    if e == 0 {
                        continue;
                    }
                    let mut ev = m.even.clone();
                    ev[idx] -= 1;
                    out.add_term(
                        Monomial {
                            even: ev,
                            odd: m.odd.clone(),
                        },
                        c * &Rat::from_int(e as i64),
                    );
                }
            }
        }
        out
    }

    /// `d/dz`, the derivative written `f'` in the Lagrange bracket.
    pub fn d_z(&self) -> Superfunction {
        self.partial(CoordId::Z)
    }

    pub fn pow(&self, exp: u32) -> Superfunction {
        let mut out = Superfunction::one(self.dims);
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }
}

impl Add for &Superfunction {
    type Output = Superfunction;
    fn add(self, rhs: &Superfunction) -> Superfunction {
        self.assert_same_dims(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Superfunction {
    type Output = Superfunction;
    fn sub(self, rhs: &Superfunction) -> Superfunction {
        self.assert_same_dims(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Superfunction {
    type Output = Superfunction;
    fn neg(self) -> Superfunction {
        let mut out = Superfunction::zero(self.dims);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Superfunction {
    type Output = Superfunction;
    fn mul(self, rhs: &Superfunction) -> Superfunction {
        self.assert_same_dims(rhs);
        let mut out = Superfunction::zero(self.dims);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let Some((sign, m)) = ma.mul(mb) else {
                    continue;
                };
                let mut c = ca * cb;
                if sign < 0 {
                    c = -c;
                }
                out.add_term(m, c);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Superfunction {
            type Output = Superfunction;
            fn $method(self, rhs: Superfunction) -> Superfunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Superfunction> for Superfunction {
            type Output = Superfunction;
            fn $method(self, rhs: &Superfunction) -> Superfunction {
                (&self).$method(rhs)
            }
        }
        impl $trait<Superfunction> for &Superfunction {
            type Output = Superfunction;
            fn $method(self, rhs: Superfunction) -> Superfunction {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Superfunction {
    type Output = Superfunction;
    fn neg(self) -> Superfunction {
        -&self
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut factor = |f: &mut fmt::Formatter<'_>, name: String, exp: u32| -> fmt::Result {
            if exp == 0 {
                return Ok(());
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{name}^{exp}")
            }
        };
        let l = (self.even.len() - 1) / 2;
        factor(f, "z".to_string(), self.even[0])?;
        for k in 1..=l {
            factor(f, format!("x{k}"), self.even[k])?;
        }
        for k in 1..=l {
            factor(f, format!("y{k}"), self.even[l + k])?;
        }
        for &j in &self.odd {
            factor(f, format!("th{j}"), 1)?;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Canonical deterministic text: terms in the graded order of [`Monomial`],
/// coefficients `1`/`-1` elided in front of variables. Parsing the output
/// reproduces the value exactly.
impl fmt::Display for Superfunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims() -> Dims {
        Dims::new(1, 2)
    }

    fn var(c: CoordId) -> Superfunction {
        Superfunction::var(c, dims())
    }

    #[test]
    fn addition_cancels_and_prunes() {
        let d = dims();
        let z = var(CoordId::Z);
        let th1 = var(CoordId::Theta(1));
        // (z + th1) + (-th1) = z
        let sum = &(&z + &th1) + &(-&th1);
        assert_eq!(sum, z);
        // f + 0 = f
        let f = &z * &th1;
        assert_eq!(&f + &Superfunction::zero(d), f);
        // doubling
        let xy = &var(CoordId::X(1)) * &var(CoordId::Y(1));
        assert_eq!(&xy + &xy, xy.scale(&Rat::from_int(2)));
    }

    #[test]
    fn grassmann_sign_rule() {
        let th1 = var(CoordId::Theta(1));
        let th2 = var(CoordId::Theta(2));
        let t12 = &th1 * &th2;
        let t21 = &th2 * &th1;
        assert_eq!(t21, -&t12);
        assert!((&th1 * &th1).is_zero());
    }

    #[test]
    fn nilpotent_cross_terms_vanish() {
        // (z + th1*th2)(z - th1*th2) = z^2 since (th1*th2)^2 = 0
        let z = var(CoordId::Z);
        let t12 = &var(CoordId::Theta(1)) * &var(CoordId::Theta(2));
        let prod = &(&z + &t12) * &(&z - &t12);
        assert_eq!(prod, z.pow(2));
    }

    #[test]
    fn parity_parts_split() {
        let z = var(CoordId::Z);
        let th1 = var(CoordId::Theta(1));
        let (even, odd) = (&z + &th1).parity_parts();
        assert_eq!(even, z);
        assert_eq!(odd, th1);

        let t12 = &var(CoordId::Theta(1)) * &var(CoordId::Theta(2));
        let (even, odd) = t12.parity_parts();
        assert_eq!(even, t12);
        assert!(odd.is_zero());

        let (even, odd) = Superfunction::zero(dims()).parity_parts();
        assert!(even.is_zero() && odd.is_zero());
    }

    #[test]
    fn degree_counts_all_variables_with_weight_one() {
        let z = var(CoordId::Z);
        let x1 = var(CoordId::X(1));
        assert_eq!((&z * &x1).degree(), Some(2));
        let xtt = &(&x1 * &var(CoordId::Theta(1))) * &var(CoordId::Theta(2));
        assert_eq!(xtt.degree(), Some(3));
        assert_eq!(
            Superfunction::constant(Rat::from_int(5), dims()).degree(),
            Some(0)
        );
        assert_eq!(Superfunction::zero(dims()).degree(), None);
    }

    #[test]
    fn even_partials() {
        let z = var(CoordId::Z);
        assert_eq!(z.pow(2).partial(CoordId::Z), z.scale(&Rat::from_int(2)));
        let x1 = var(CoordId::X(1));
        let th1 = var(CoordId::Theta(1));
        assert_eq!((&x1 * &th1).partial(CoordId::X(1)), th1);
        assert!(x1.partial(CoordId::Y(1)).is_zero());
    }

    #[test]
    fn left_odd_derivative() {
        let th1 = var(CoordId::Theta(1));
        let th2 = var(CoordId::Theta(2));
        let t12 = &th1 * &th2;
        // first position: sign +
        assert_eq!(t12.partial(CoordId::Theta(1)), th2);
        // second position: one transposition, sign -
        assert_eq!(t12.partial(CoordId::Theta(2)), -&th1);
        assert!(var(CoordId::Z).partial(CoordId::Theta(1)).is_zero());
    }

    #[test]
    fn odd_derivatives_anticommute() {
        let d = dims();
        let f = {
            let th1 = var(CoordId::Theta(1));
            let th2 = var(CoordId::Theta(2));
            let z = var(CoordId::Z);
            &(&th1 * &th2) * &z + &th1 + Superfunction::one(d)
        };
        let d12 = f.partial(CoordId::Theta(1)).partial(CoordId::Theta(2));
        let d21 = f.partial(CoordId::Theta(2)).partial(CoordId::Theta(1));
        assert_eq!(d12, -&d21);
        assert!(f
            .partial(CoordId::Theta(1))
            .partial(CoordId::Theta(1))
            .is_zero());
    }

    #[test]
    fn monomial_word_construction_counts_transpositions() {
        let d = dims();
        // th2 th1 -> -th1 th2
        let (sign, m) = Monomial::from_parts(vec![0, 0, 0], &[2, 1], d).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(m.odd_indices(), &[1, 2]);
        // repeated index annihilates
        assert!(Monomial::from_parts(vec![0, 0, 0], &[1, 1], d).is_none());
    }

    #[test]
    fn canonical_printing() {
        let d = dims();
        let z = var(CoordId::Z);
        assert_eq!(z.to_string(), "z");
        let t12 = &var(CoordId::Theta(1)) * &var(CoordId::Theta(2));
        assert_eq!((-&t12).to_string(), "-th1*th2");
        assert_eq!(Superfunction::zero(d).to_string(), "0");
        // graded order: degree first, then z before x1 before y1
        let f = &(&z.pow(2)
            + &(&var(CoordId::X(1)) * &var(CoordId::Y(1))).scale(&Rat::from_int(2)))
            + &var(CoordId::Y(1));
        assert_eq!(f.to_string(), "y1 + z^2 + 2*x1*y1");
        let half_th1 = var(CoordId::Theta(1)).scale(&Rat::new(1, 2));
        assert_eq!(half_th1.to_string(), "1/2*th1");
    }

    #[test]
    #[should_panic(expected = "different superspaces")]
    fn dimension_mismatch_panics() {
        let a = Superfunction::one(Dims::new(1, 2));
        let b = Superfunction::one(Dims::new(1, 3));
        let _ = &a + &b;
    }

    /// Brute-force oracle for Grassmann multiplication: multiply basis words
    /// by literally bubble-sorting the concatenation, flipping the sign on
    /// every adjacent swap and annihilating on equal neighbours.
    fn bubble_mul(a: &[usize], b: &[usize]) -> Option<(i64, Vec<usize>)> {
        let mut word: Vec<usize> = a.iter().chain(b).copied().collect();
        let mut sign = 1i64;
        loop {
            let mut swapped = false;
            for i in 1..word.len() {
                if word[i - 1] == word[i] {
                    return None;
                }
                if word[i - 1] > word[i] {
                    word.swap(i - 1, i);
                    sign = -sign;
                    swapped = true;
                }
            }
            if !swapped {
                return Some((sign, word));
            }
        }
    }

    #[test]
    fn multiplication_matches_bubble_sort_oracle_up_to_n3() {
        for n in 1..=3usize {
            let d = Dims::new(0, n);
            // all 2^n ascending basis words
            let words: Vec<Vec<usize>> = (0u8..1 << n)
                .map(|bits| (1..=n).filter(|j| bits & (1 << (j - 1)) != 0).collect())
                .collect();
            for a in &words {
                for b in &words {
                    let fa = Superfunction::monomial(
                        Monomial::from_parts(vec![0], a, d).unwrap().1,
                        Rat::one(),
                        d,
                    );
                    let fb = Superfunction::monomial(
                        Monomial::from_parts(vec![0], b, d).unwrap().1,
                        Rat::one(),
                        d,
                    );
                    let got = &fa * &fb;
                    match bubble_mul(a, b) {
                        None => assert!(got.is_zero(), "{a:?} * {b:?} should vanish"),
                        Some((sign, word)) => {
                            let expect = Superfunction::monomial(
                                Monomial::from_parts(vec![0], &word, d).unwrap().1,
                                Rat::from_int(sign),
                                d,
                            );
                            assert_eq!(got, expect, "{a:?} * {b:?}");
                        }
                    }
                }
            }
        }
    }
}

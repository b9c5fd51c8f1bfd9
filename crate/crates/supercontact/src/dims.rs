//! Dimensions, parities and coordinate identifiers for `R^{2l+1|n}`.
//!
//! The superspace carries `2l+1` even coordinates `z, x_1..x_l, y_1..y_l`
//! and `n` odd Grassmann coordinates `th_1..th_n`. The `2l+n` coordinates
//! other than `z` are the generalized coordinates `q^1..q^{2l+n}`, indexed
//! as `x` first, then `y`, then `th`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Z/2 grading. Products add parities; odd/odd swaps cost a sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Parity of a product of two homogeneous factors.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^{self * other}` as a sign: -1 only when both factors are odd.
    pub fn koszul_sign(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

/// Superspace dimensions: `l >= 0` symplectic pairs and `n >= 1` odd
/// coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub struct Dims {
    pub l: usize,
    pub n: usize,
}

impl Dims {
    pub fn new(l: usize, n: usize) -> Self {
        assert!(n >= 1, "need at least one odd coordinate (n >= 1)");
        Dims { l, n }
    }

    /// Number of even coordinates, `2l+1`.
    pub fn even_count(self) -> usize {
        2 * self.l + 1
    }

    /// Number of generalized coordinates `q^r` (everything except `z`),
    /// `2l+n`.
    pub fn gen_count(self) -> usize {
        2 * self.l + self.n
    }

    /// Total coordinate count, `2l+1+n`.
    pub fn coord_count(self) -> usize {
        self.even_count() + self.n
    }

    /// Side length of the matrices of `spo(2l+2|n)`, `2l+2+n`.
    pub fn matrix_size(self) -> usize {
        2 * self.l + 2 + self.n
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R^({}|{})", 2 * self.l + 1, self.n)
    }
}

/// A coordinate of `R^{2l+1|n}`. Indices are 1-based, matching the usual
/// subscripts `x_1..x_l`, `y_1..y_l`, `th_1..th_n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum CoordId {
    Z,
    X(usize),
    Y(usize),
    Theta(usize),
}

impl CoordId {
    pub fn parity(self) -> Parity {
        match self {
            CoordId::Theta(_) => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Whether the coordinate exists at the given dimensions.
    pub fn in_range(self, dims: Dims) -> bool {
        match self {
            CoordId::Z => true,
            CoordId::X(k) | CoordId::Y(k) => 1 <= k && k <= dims.l,
            CoordId::Theta(j) => 1 <= j && j <= dims.n,
        }
    }

    /// All coordinates in canonical order `z, x_1..x_l, y_1..y_l,
    /// th_1..th_n`.
    pub fn all(dims: Dims) -> Vec<CoordId> {
        let mut out = Vec::with_capacity(dims.coord_count());
        out.push(CoordId::Z);
        out.extend((1..=dims.l).map(CoordId::X));
        out.extend((1..=dims.l).map(CoordId::Y));
        out.extend((1..=dims.n).map(CoordId::Theta));
        out
    }

    /// The generalized coordinate `q^r`, `1 <= r <= 2l+n`.
    pub fn gen(r: usize, dims: Dims) -> CoordId {
        assert!(
            1 <= r && r <= dims.gen_count(),
            "generalized index {r} out of range 1..={}",
            dims.gen_count()
        );
        if r <= dims.l {
            CoordId::X(r)
        } else if r <= 2 * dims.l {
            CoordId::Y(r - dims.l)
        } else {
            CoordId::Theta(r - 2 * dims.l)
        }
    }

    /// Inverse of [`CoordId::gen`]: the index `r` with `q^r == self`, or
    /// `None` for `z`.
    pub fn gen_index(self, dims: Dims) -> Option<usize> {
        debug_assert!(self.in_range(dims));
        match self {
            CoordId::Z => None,
            CoordId::X(k) => Some(k),
            CoordId::Y(k) => Some(dims.l + k),
            CoordId::Theta(j) => Some(2 * dims.l + j),
        }
    }

    /// Position in the canonical order of [`CoordId::all`].
    pub fn canonical_index(self, dims: Dims) -> usize {
        match self {
            CoordId::Z => 0,
            CoordId::X(k) => k,
            CoordId::Y(k) => dims.l + k,
            CoordId::Theta(j) => 2 * dims.l + j,
        }
    }
}

impl fmt::Display for CoordId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordId::Z => write!(f, "z"),
            CoordId::X(k) => write!(f, "x{k}"),
            CoordId::Y(k) => write!(f, "y{k}"),
            CoordId::Theta(j) => write!(f, "th{j}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_coordinates_partition() {
        let dims = Dims::new(2, 3);
        let got: Vec<CoordId> = (1..=dims.gen_count())
            .map(|r| CoordId::gen(r, dims))
            .collect();
        assert_eq!(
            got,
            vec![
                CoordId::X(1),
                CoordId::X(2),
                CoordId::Y(1),
                CoordId::Y(2),
                CoordId::Theta(1),
                CoordId::Theta(2),
                CoordId::Theta(3),
            ]
        );
        for (i, c) in got.iter().enumerate() {
            assert_eq!(c.gen_index(dims), Some(i + 1));
        }
        assert_eq!(CoordId::Z.gen_index(dims), None);
    }

    #[test]
    fn canonical_order_is_z_x_y_theta() {
        let dims = Dims::new(1, 2);
        let all = CoordId::all(dims);
        assert_eq!(
            all,
            vec![
                CoordId::Z,
                CoordId::X(1),
                CoordId::Y(1),
                CoordId::Theta(1),
                CoordId::Theta(2),
            ]
        );
        for (i, c) in all.iter().enumerate() {
            assert_eq!(c.canonical_index(dims), i);
        }
        // CoordId's derived Ord agrees with the canonical order
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn parity_signs() {
        assert_eq!(Parity::Odd.koszul_sign(Parity::Odd), -1);
        assert_eq!(Parity::Odd.koszul_sign(Parity::Even), 1);
        assert_eq!(Parity::Even.combine(Parity::Odd), Parity::Odd);
        assert_eq!(Parity::Odd.combine(Parity::Odd), Parity::Even);
        assert!(CoordId::Theta(1).parity().is_odd());
        assert!(!CoordId::Y(1).parity().is_odd());
    }

    #[test]
    fn counts() {
        let dims = Dims::new(1, 2);
        assert_eq!(dims.even_count(), 3);
        assert_eq!(dims.gen_count(), 4);
        assert_eq!(dims.coord_count(), 5);
        assert_eq!(dims.matrix_size(), 6);
    }
}

//! The orthosymplectic matrix Lie superalgebra `spo(2l+2|n)`.
//!
//! Matrices act on `R^{2l+2|n}`; rows and columns `1..=2l+2` are even,
//! `2l+3..=2l+2+n` odd. The superskewsymmetric form is `omega(U,V) = V^t G U`
//! with `G = [[J, 0], [0, id_n]]` and `J = [[0, -id_{l+1}], [id_{l+1}, 0]]`.
//! `spo` consists of the matrices `A` with
//! `omega(AU,V) + (-1)^{A~U~} omega(U,AV) = 0`, equivalently (block form
//! `A = [[A_1, A_2], [A_3, A_4]]`):
//!
//! 1. `A_1^t J + J A_1 = 0` (symplectic block),
//! 2. `A_4^t + A_4 = 0` (orthogonal block),
//! 3. `A_3 = -A_2^t J`.
//!
//! Both characterizations are implemented independently and cross-validated.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dims::{Dims, Parity};
use crate::rat::{Rat, RatMatrix};

/// A square rational matrix of size `2l+2+n` with the even/odd index
/// grading of `gl(2l+2|n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMatrix {
    dims: Dims,
    /// Row-major `(2l+2+n)^2` entries.
    entries: Vec<Rat>,
}

impl GradedMatrix {
    pub fn zeros(dims: Dims) -> Self {
        let size = dims.matrix_size();
        GradedMatrix {
            dims,
            entries: vec![Rat::zero(); size * size],
        }
    }

    pub fn identity(dims: Dims) -> Self {
        let mut m = Self::zeros(dims);
        for i in 1..=dims.matrix_size() {
            *m.entry_mut(i, i) = Rat::one();
        }
        m
    }

    /// The matrix unit `E_{i,j}`, 1-based.
    pub fn unit(i: usize, j: usize, dims: Dims) -> Self {
        let mut m = Self::zeros(dims);
        *m.entry_mut(i, j) = Rat::one();
        m
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn size(&self) -> usize {
        self.dims.matrix_size()
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[(i - 1) * self.size() + (j - 1)]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        let size = self.size();
        &mut self.entries[(i - 1) * size + (j - 1)]
    }

    /// Parity of the 1-based row/column index.
    pub fn index_parity(&self, i: usize) -> Parity {
        if i <= 2 * self.dims.l + 2 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    fn assert_same_dims(&self, other: &GradedMatrix) {
        assert_eq!(self.dims, other.dims, "matrices have different gradings");
    }

    pub fn add(&self, other: &GradedMatrix) -> GradedMatrix {
        self.assert_same_dims(other);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &GradedMatrix) -> GradedMatrix {
        self.assert_same_dims(other);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
        out
    }

    pub fn neg(&self) -> GradedMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = -&*a;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> GradedMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn matmul(&self, other: &GradedMatrix) -> GradedMatrix {
        self.assert_same_dims(other);
        let size = self.size();
        let mut out = Self::zeros(self.dims);
        for i in 1..=size {
            for k in 1..=size {
                if self.entry(i, k).is_zero() {
                    continue;
                }
                for j in 1..=size {
                    if other.entry(k, j).is_zero() {
                        continue;
                    }
                    let p = self.entry(i, k) * other.entry(k, j);
                    *out.entry_mut(i, j) += &p;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> GradedMatrix {
        let size = self.size();
        let mut out = Self::zeros(self.dims);
        for i in 1..=size {
            for j in 1..=size {
                *out.entry_mut(j, i) = self.entry(i, j).clone();
            }
        }
        out
    }

    /// Splits into (even part, odd part): the even part keeps the diagonal
    /// blocks `A_1, A_4`, the odd part the off-diagonal blocks `A_2, A_3`.
    pub fn parity_parts(&self) -> (GradedMatrix, GradedMatrix) {
        let size = self.size();
        let mut even = Self::zeros(self.dims);
        let mut odd = Self::zeros(self.dims);
        for i in 1..=size {
            for j in 1..=size {
                let target = if self.index_parity(i) == self.index_parity(j) {
                    &mut even
                } else {
                    &mut odd
                };
                *target.entry_mut(i, j) = self.entry(i, j).clone();
            }
        }
        (even, odd)
    }

    /// The matrix superbracket `[A,B] = AB - (-1)^{A~B~} BA`, computed per
    /// homogeneous parts; odd-odd pairs anticommute.
    pub fn bracket(&self, other: &GradedMatrix) -> GradedMatrix {
        self.assert_same_dims(other);
        let (ae, ao) = self.parity_parts();
        let (be, bo) = other.parity_parts();
        let mut out = Self::zeros(self.dims);
        for (ah, ap) in [(&ae, Parity::Even), (&ao, Parity::Odd)] {
            for (bh, bp) in [(&be, Parity::Even), (&bo, Parity::Odd)] {
                let direct = ah.matmul(bh);
                let swapped = bh.matmul(ah);
                out = out.add(&direct);
                out = if ap.koszul_sign(bp) > 0 {
                    out.sub(&swapped)
                } else {
                    out.add(&swapped)
                };
            }
        }
        out
    }

    /// Flattens to a row-major rational vector, for rank computations.
    pub fn flatten(&self) -> Vec<Rat> {
        self.entries.clone()
    }
}

/// JSON form of a [`GradedMatrix`]:
/// `{"l": .., "n": .., "entries": [["p/q", ..], ..]}` row-major.
impl Serialize for GradedMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let size = self.size();
        let rows: Vec<Vec<&Rat>> = (1..=size)
            .map(|i| (1..=size).map(|j| self.entry(i, j)).collect())
            .collect();
        let mut state = serde_json::Map::new();
        state.insert("l".into(), serde_json::json!(self.dims.l));
        state.insert("n".into(), serde_json::json!(self.dims.n));
        state.insert(
            "entries".into(),
            serde_json::to_value(rows).map_err(serde::ser::Error::custom)?,
        );
        serde_json::Value::Object(state).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            l: usize,
            n: usize,
            entries: Vec<Vec<Rat>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let dims = Dims::new(raw.l, raw.n);
        let size = dims.matrix_size();
        if raw.entries.len() != size || raw.entries.iter().any(|r| r.len() != size) {
            return Err(serde::de::Error::custom(format!(
                "expected a {size}x{size} matrix for l={}, n={}",
                raw.l, raw.n
            )));
        }
        Ok(GradedMatrix {
            dims,
            entries: raw.entries.into_iter().flatten().collect(),
        })
    }
}

/// The form data of `spo(2l+2|n)`: `G = [[J, 0], [0, id_n]]`.
#[derive(Clone, Debug)]
pub struct OmegaStructure {
    dims: Dims,
    g: GradedMatrix,
}

impl OmegaStructure {
    pub fn new(dims: Dims) -> Self {
        let half = dims.l + 1;
        let mut g = GradedMatrix::zeros(dims);
        for i in 1..=half {
            // J = [[0, -id_{l+1}], [id_{l+1}, 0]]
            *g.entry_mut(i, half + i) = -Rat::one();
            *g.entry_mut(half + i, i) = Rat::one();
        }
        for j in 1..=dims.n {
            *g.entry_mut(2 * half + j, 2 * half + j) = Rat::one();
        }
        OmegaStructure { dims, g }
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn g(&self) -> &GradedMatrix {
        &self.g
    }

    /// `omega(U, V) = V^t G U` on coordinate vectors of length `2l+2+n`.
    pub fn omega_form(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let size = self.dims.matrix_size();
        assert_eq!(u.len(), size, "vector length mismatch");
        assert_eq!(v.len(), size, "vector length mismatch");
        let mut acc = Rat::zero();
        for i in 1..=size {
            if v[i - 1].is_zero() {
                continue;
            }
            for j in 1..=size {
                let g = self.g.entry(i, j);
                if g.is_zero() || u[j - 1].is_zero() {
                    continue;
                }
                acc += &(&(&v[i - 1] * g) * &u[j - 1]);
            }
        }
        acc
    }

    /// Whether `A` preserves `omega`:
    /// `omega(A_h e_a, e_b) + (-1)^{A_h~ e_a~} omega(e_a, A_h e_b) = 0`
    /// for each homogeneous part `A_h` and all graded basis vectors; by
    /// bilinearity this is the full condition. At matrix level the two
    /// summands are `(G A_h)_{b,a}` and `(A_h^t G)_{b,a}`.
    pub fn preserves_omega(&self, a: &GradedMatrix) -> bool {
        assert_eq!(self.dims, a.dims(), "matrix has a different grading");
        let size = self.dims.matrix_size();
        let (even, odd) = a.parity_parts();
        for (part, parity) in [(&even, Parity::Even), (&odd, Parity::Odd)] {
            let ga = self.g.matmul(part);
            let atg = part.transpose().matmul(&self.g);
            for col in 1..=size {
                let sign = parity.koszul_sign(a.index_parity(col));
                for row in 1..=size {
                    let lhs = ga.entry(row, col);
                    let rhs = atg.entry(row, col);
                    let total = if sign > 0 { lhs + rhs } else { lhs - rhs };
                    if !total.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Extracts the four blocks of a graded matrix as plain rational matrices:
/// `A_1` is `(2l+2)`-square, `A_4` is `n`-square, `A_2` maps odd to even.
fn blocks(a: &GradedMatrix) -> (RatMatrix, RatMatrix, RatMatrix, RatMatrix) {
    let even = 2 * a.dims().l + 2;
    let odd = a.dims().n;
    let mut a1 = RatMatrix::zeros(even, even);
    let mut a2 = RatMatrix::zeros(even, odd);
    let mut a3 = RatMatrix::zeros(odd, even);
    let mut a4 = RatMatrix::zeros(odd, odd);
    for i in 1..=even {
        for j in 1..=even {
            a1[(i - 1, j - 1)] = a.entry(i, j).clone();
        }
        for j in 1..=odd {
            a2[(i - 1, j - 1)] = a.entry(i, even + j).clone();
        }
    }
    for i in 1..=odd {
        for j in 1..=even {
            a3[(i - 1, j - 1)] = a.entry(even + i, j).clone();
        }
        for j in 1..=odd {
            a4[(i - 1, j - 1)] = a.entry(even + i, even + j).clone();
        }
    }
    (a1, a2, a3, a4)
}

fn j_matrix(dims: Dims) -> RatMatrix {
    let half = dims.l + 1;
    let mut j = RatMatrix::zeros(2 * half, 2 * half);
    for i in 0..half {
        j[(i, half + i)] = -Rat::one();
        j[(half + i, i)] = Rat::one();
    }
    j
}

fn transpose(m: &RatMatrix) -> RatMatrix {
    let mut out = RatMatrix::zeros(m.cols(), m.rows());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out[(c, r)] = m[(r, c)].clone();
        }
    }
    out
}

fn add(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let mut out = a.clone();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            out[(r, c)] += &b[(r, c)];
        }
    }
    out
}

fn is_zero(m: &RatMatrix) -> bool {
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| m[(r, c)].is_zero()))
}

/// Membership in `spo(2l+2|n)` via the three block conditions. Agrees with
/// [`OmegaStructure::preserves_omega`] on every input; the two routes are
/// kept independent as a cross-check.
pub fn is_spo_blocks(a: &GradedMatrix) -> bool {
    let (a1, a2, a3, a4) = blocks(a);
    let j = j_matrix(a.dims());
    // A_1^t J + J A_1 = 0
    if !is_zero(&add(&transpose(&a1).mul(&j), &j.mul(&a1))) {
        return false;
    }
    // A_4^t + A_4 = 0
    if !is_zero(&add(&transpose(&a4), &a4)) {
        return false;
    }
    // A_3 + A_2^t J = 0
    if !is_zero(&add(&a3, &transpose(&a2).mul(&j))) {
        return false;
    }
    true
}

/// Human-readable reason a matrix fails the `spo` block conditions.
pub fn spo_violation(a: &GradedMatrix) -> Option<String> {
    let (a1, a2, a3, a4) = blocks(a);
    let j = j_matrix(a.dims());
    if !is_zero(&add(&transpose(&a1).mul(&j), &j.mul(&a1))) {
        return Some("A_1 is not symplectic (A_1^t J + J A_1 != 0)".to_string());
    }
    if !is_zero(&add(&transpose(&a4), &a4)) {
        return Some("A_4 is not antisymmetric (A_4^t + A_4 != 0)".to_string());
    }
    if !is_zero(&add(&a3, &transpose(&a2).mul(&j))) {
        return Some("A_3 != -A_2^t J".to_string());
    }
    None
}

/// The six basis families of `spo(2l+2|n)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SpoFamily {
    /// `E_{i,j} - E_{l+1+j, l+1+i}`, the gl(l+1) part of the symplectic
    /// block; `i, j` in `[1, l+1]`.
    Sp1,
    /// Upper-right symmetric part: `E_{i,l+1+j} + E_{j,l+1+i}` for `i < j`,
    /// `E_{i,l+1+i}` on the diagonal.
    Sp2,
    /// Lower-left symmetric part: `E_{l+1+i,j} + E_{l+1+j,i}` for `i < j`,
    /// `E_{l+1+i,i}` on the diagonal.
    Sp3,
    /// Odd family with even index in the second half: `E_{i,2l+2+j} -
    /// E_{2l+2+j, i-(l+1)}` for `i` in `[l+2, 2l+2]`, `j` in `[1, n]`.
    OddA,
    /// Odd family with even index in the first half: `E_{i,2l+2+j} +
    /// E_{2l+2+j, l+1+i}` for `i` in `[1, l+1]`, `j` in `[1, n]`.
    OddB,
    /// Orthogonal block: `E_{2l+2+i,2l+2+j} - E_{2l+2+j,2l+2+i}` for
    /// `i < j` in `[1, n]`.
    O,
}

impl fmt::Display for SpoFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SpoFamily::Sp1 => "Sp1",
            SpoFamily::Sp2 => "Sp2",
            SpoFamily::Sp3 => "Sp3",
            SpoFamily::OddA => "OddA",
            SpoFamily::OddB => "OddB",
            SpoFamily::O => "O",
        };
        write!(f, "{name}")
    }
}

impl FromStr for SpoFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sp1" => Ok(SpoFamily::Sp1),
            "sp2" => Ok(SpoFamily::Sp2),
            "sp3" => Ok(SpoFamily::Sp3),
            "odda" => Ok(SpoFamily::OddA),
            "oddb" => Ok(SpoFamily::OddB),
            "o" => Ok(SpoFamily::O),
            other => Err(format!(
                "unknown basis family {other:?} (expected Sp1, Sp2, Sp3, OddA, OddB or O)"
            )),
        }
    }
}

/// A basis element name: family plus its family-specific index pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpoBasisLabel {
    pub family: SpoFamily,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for SpoBasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family, self.i, self.j)
    }
}

impl SpoBasisLabel {
    /// Valid index ranges per family.
    pub fn in_range(&self, dims: Dims) -> bool {
        let half = dims.l + 1;
        let (i, j) = (self.i, self.j);
        match self.family {
            SpoFamily::Sp1 => (1..=half).contains(&i) && (1..=half).contains(&j),
            SpoFamily::Sp2 | SpoFamily::Sp3 => 1 <= i && i <= j && j <= half,
            SpoFamily::OddA => (half + 1..=2 * half).contains(&i) && (1..=dims.n).contains(&j),
            SpoFamily::OddB => (1..=half).contains(&i) && (1..=dims.n).contains(&j),
            SpoFamily::O => 1 <= i && i < j && j <= dims.n,
        }
    }

    /// The basis matrix for this label.
    pub fn matrix(&self, dims: Dims) -> GradedMatrix {
        assert!(self.in_range(dims), "label {self} out of range for {dims}");
        let half = dims.l + 1;
        let odd0 = 2 * half; // odd indices start at odd0 + 1
        let (i, j) = (self.i, self.j);
        let unit = |a, b| GradedMatrix::unit(a, b, dims);
        match self.family {
            SpoFamily::Sp1 => unit(i, j).sub(&unit(half + j, half + i)),
            SpoFamily::Sp2 => {
                if i == j {
                    unit(i, half + i)
                } else {
                    unit(i, half + j).add(&unit(j, half + i))
                }
            }
            SpoFamily::Sp3 => {
                if i == j {
                    unit(half + i, i)
                } else {
                    unit(half + i, j).add(&unit(half + j, i))
                }
            }
            SpoFamily::OddA => unit(i, odd0 + j).sub(&unit(odd0 + j, i - half)),
            SpoFamily::OddB => unit(i, odd0 + j).add(&unit(odd0 + j, half + i)),
            SpoFamily::O => unit(odd0 + i, odd0 + j).sub(&unit(odd0 + j, odd0 + i)),
        }
    }
}

/// The full basis in deterministic label order: `Sp1` row-major, `Sp2`/`Sp3`
/// over `i <= j`, `OddA`/`OddB` row-major, `O` over `i < j`.
pub fn spo_basis(dims: Dims) -> Vec<(SpoBasisLabel, GradedMatrix)> {
    let half = dims.l + 1;
    let mut labels = Vec::new();
    for i in 1..=half {
        for j in 1..=half {
            labels.push(SpoBasisLabel {
                family: SpoFamily::Sp1,
                i,
                j,
            });
        }
    }
    for family in [SpoFamily::Sp2, SpoFamily::Sp3] {
        for i in 1..=half {
            for j in i..=half {
                labels.push(SpoBasisLabel { family, i, j });
            }
        }
    }
    for i in half + 1..=2 * half {
        for j in 1..=dims.n {
            labels.push(SpoBasisLabel {
                family: SpoFamily::OddA,
                i,
                j,
            });
        }
    }
    for i in 1..=half {
        for j in 1..=dims.n {
            labels.push(SpoBasisLabel {
                family: SpoFamily::OddB,
                i,
                j,
            });
        }
    }
    for i in 1..=dims.n {
        for j in i + 1..=dims.n {
            labels.push(SpoBasisLabel {
                family: SpoFamily::O,
                i,
                j,
            });
        }
    }
    labels
        .into_iter()
        .map(|label| (label, label.matrix(dims)))
        .collect()
}

/// `dim spo(2l+2|n) = (l+1)(2l+3) + (2l+2)n + n(n-1)/2`.
pub fn spo_dim(dims: Dims) -> usize {
    let (l, n) = (dims.l, dims.n);
    (l + 1) * (2 * l + 3) + (2 * l + 2) * n + n * (n - 1) / 2
}

/// Exact rank of a family of graded matrices, flattened over the rationals.
pub fn matrix_rank(matrices: &[GradedMatrix]) -> usize {
    if matrices.is_empty() {
        return 0;
    }
    RatMatrix::from_rows(matrices.iter().map(GradedMatrix::flatten).collect()).rank()
}

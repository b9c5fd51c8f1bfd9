//! Projective embedding of `spo(2l+2|n)` into vector fields.
//!
//! A matrix class `[A]` in `pgl(2l+2|n)`, represented by the matrix with
//! vanishing upper-left corner, acts on `R^{2l+1|n}` through
//!
//! ```text
//! [[0, xi], [v, B]]  |->  - sum_i v^i d/dt^i
//!                         - sum_{i,j} (-1)^{j~ (i~+j~)} B^i_j t^j d/dt^i
//!                         + sum_{i,j} (-1)^{j~} xi_j t^j t^i d/dt^i
//! ```
//!
//! where the coordinates `t^1..t^{2l+1+n}` are `x_1..x_l, z, y_1..y_l,
//! th_1..th_n` in that order. Restricted to `spo(2l+2|n)` the image consists
//! of contact fields whose Hamiltonians have degree at most two; recovering
//! the Hamiltonian through `alpha` realizes the isomorphism onto the
//! quadratic subalgebra.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::contact::ContactContext;
use crate::dims::{CoordId, Dims, Parity};
use crate::error::{Error, Result};
use crate::fields::SuperVectorField;
use crate::spo::{is_spo_blocks, spo_basis, spo_violation, GradedMatrix, SpoBasisLabel};
use crate::superfn::Superfunction;

/// A representative of a class in `pgl(2l+2|n)`, normalized so that the
/// `(1,1)` entry vanishes. Two matrices normalize to the same representative
/// exactly when they differ by a rational multiple of the identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PglRep {
    matrix: GradedMatrix,
}

impl PglRep {
    pub fn matrix(&self) -> &GradedMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> Dims {
        self.matrix.dims()
    }
}

/// Normalizes a matrix to its zero-corner representative: `A - A_{1,1} Id`.
/// Idempotent, and constant on classes modulo the identity.
pub fn normalize_rep(a: &GradedMatrix) -> PglRep {
    let corner = a.entry(1, 1).clone();
    let matrix = if corner.is_zero() {
        a.clone()
    } else {
        a.sub(&GradedMatrix::identity(a.dims()).scale(&corner))
    };
    debug_assert!(matrix.entry(1, 1).is_zero());
    PglRep { matrix }
}

/// The bijection between the matrix indices `2..=2l+2+n` and the
/// coordinates of `R^{2l+1|n}`: `t^1..t^l` are `x_1..x_l`, `t^{l+1}` is `z`,
/// `t^{l+2}..t^{2l+1}` are `y_1..y_l` and the tail holds `th_1..th_n`.
#[derive(Clone, Debug)]
pub struct CoordMap {
    dims: Dims,
    table: Vec<CoordId>,
}

impl CoordMap {
    pub fn standard(dims: Dims) -> Self {
        let mut table = Vec::with_capacity(dims.coord_count());
        table.extend((1..=dims.l).map(CoordId::X));
        table.push(CoordId::Z);
        table.extend((1..=dims.l).map(CoordId::Y));
        table.extend((1..=dims.n).map(CoordId::Theta));
        CoordMap { dims, table }
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// The coordinate `t^i`, `1 <= i <= 2l+1+n`.
    pub fn coord(&self, i: usize) -> CoordId {
        self.table[i - 1]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.coord(i).parity()
    }
}

/// Evaluates the projective action of a zero-corner representative. The
/// result is linear in the representative and turns the matrix superbracket
/// into the vector-field bracket.
pub fn projective_embed(rep: &PglRep, cmap: &CoordMap) -> SuperVectorField {
    let dims = rep.dims();
    assert_eq!(dims, cmap.dims(), "coordinate map has different dimensions");
    assert!(
        rep.matrix.entry(1, 1).is_zero(),
        "representative corner must be 0"
    );
    let count = dims.coord_count();
    let m = &rep.matrix;

    let t = |i: usize| Superfunction::var(cmap.coord(i), dims);

    // s = sum_j (-1)^{j~} xi_j t^j, shared by every coefficient
    let mut s = Superfunction::zero(dims);
    for j in 1..=count {
        let xi = m.entry(1, 1 + j);
        if xi.is_zero() {
            continue;
        }
        let signed = if cmap.parity(j).is_odd() {
            -xi.clone()
        } else {
            xi.clone()
        };
        s = &s + &t(j).scale(&signed);
    }

    let mut coeffs = Vec::with_capacity(count);
    for i in 1..=count {
        // -v^i
        let mut coeff = Superfunction::constant(-m.entry(1 + i, 1).clone(), dims);
        // - (-1)^{j~ (i~+j~)} B^i_j t^j
        for j in 1..=count {
            let b = m.entry(1 + i, 1 + j);
            if b.is_zero() {
                continue;
            }
            let sign_negative =
                cmap.parity(j).is_odd() && cmap.parity(i).combine(cmap.parity(j)).is_odd();
            let c = if sign_negative { b.clone() } else { -b.clone() };
            coeff = &coeff + &t(j).scale(&c);
        }
        // + s t^i
        coeff = &coeff + &(&s * &t(i));
        coeffs.push((cmap.coord(i), coeff));
    }
    SuperVectorField::from_coeffs(dims, coeffs)
}

/// Embeds a matrix of `spo(2l+2|n)` as a vector field on `R^{2l+1|n}`:
/// normalize to the zero-corner representative, then apply the projective
/// action. Fails when the matrix violates the `spo` block conditions. The
/// image is always a contact field.
pub fn embed_spo(ctx: &ContactContext, a: &GradedMatrix) -> Result<SuperVectorField> {
    assert_eq!(
        ctx.dims(),
        a.dims(),
        "matrix grading does not match the context"
    );
    if let Some(reason) = spo_violation(a) {
        return Err(Error::NotInSpo(reason));
    }
    debug_assert!(is_spo_blocks(a));
    let cmap = CoordMap::standard(ctx.dims());
    Ok(projective_embed(&normalize_rep(a), &cmap))
}

/// One row of the correspondence table: a basis element of `spo(2l+2|n)`,
/// its embedded contact field, and the Hamiltonian recovered through
/// `alpha`.
#[derive(Clone, Debug)]
pub struct CorrespondenceRow {
    pub label: SpoBasisLabel,
    pub field: SuperVectorField,
    pub hamiltonian: Superfunction,
}

impl Serialize for CorrespondenceRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut row = serializer.serialize_struct("CorrespondenceRow", 5)?;
        row.serialize_field("family", &self.label.family)?;
        row.serialize_field("i", &self.label.i)?;
        row.serialize_field("j", &self.label.j)?;
        row.serialize_field("field", &self.field.to_string())?;
        row.serialize_field("hamiltonian", &self.hamiltonian.to_string())?;
        row.end()
    }
}

/// The full basis correspondence at the context's dimensions: for every
/// basis element `A`, the embedded field and its Hamiltonian
/// `alpha(embed(A))`. Every Hamiltonian has degree at most two, and
/// together they span the quadratic subalgebra.
pub fn correspondence_table(ctx: &ContactContext) -> Result<Vec<CorrespondenceRow>> {
    spo_basis(ctx.dims())
        .into_iter()
        .map(|(label, matrix)| {
            let field = embed_spo(ctx, &matrix)?;
            let hamiltonian = ctx.hamiltonian_of(&field)?;
            Ok(CorrespondenceRow {
                label,
                field,
                hamiltonian,
            })
        })
        .collect()
}

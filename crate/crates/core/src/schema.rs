//! JSON interchange formats for elements and structure-constant tables.
//!
//! Scalars travel as eight coordinate strings over the rational basis 1, i,
//! sqrt2, i*sqrt2, sqrt3, i*sqrt3, sqrt6, i*sqrt6, so files stay exact and
//! diffable.  Element files are tagged by algebra name and mirror the block
//! layout; parsing re-checks every block invariant, so a hand-edited file
//! that leaves the algebra is rejected with a diagnostic instead of being
//! bracketed blindly.

use crate::algebra::{Algebra, AlgebraElement};
use crate::e8::{DerivationOperator, E6Operator, E8Element, Op27};
use crate::error::{Error, Result};
use crate::exc::{ExcElement, InnerAlgebraElement};
use crate::g2::G2Element;
use crate::jordan::{JordanElement, OctMat3};
use crate::linalg::{Mat3, Vec3};
use crate::octonion::{CompositionTag, SplitOctonion};
use crate::scalar::ExactScalar;
use crate::structure::{pair_index, ScTable};
use serde::{Deserialize, Serialize};

pub type ScalarDto = [String; 8];

fn scalar_to(s: &ExactScalar) -> ScalarDto {
    s.to_strings()
}

fn scalar_from(d: &ScalarDto) -> Result<ExactScalar> {
    ExactScalar::from_strings(d)
}

fn vec3_to(v: &Vec3) -> [ScalarDto; 3] {
    std::array::from_fn(|k| scalar_to(&v.0[k]))
}

fn vec3_from(d: &[ScalarDto; 3]) -> Result<Vec3> {
    let mut v = Vec3::zero();
    for k in 0..3 {
        v.0[k] = scalar_from(&d[k])?;
    }
    Ok(v)
}

pub type Mat3Dto = [[ScalarDto; 3]; 3];

fn mat3_to(m: &Mat3) -> Mat3Dto {
    std::array::from_fn(|i| std::array::from_fn(|j| scalar_to(&m.0[i][j])))
}

fn mat3_from(d: &Mat3Dto) -> Result<Mat3> {
    let mut m = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            m.0[i][j] = scalar_from(&d[i][j])?;
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OctonionDto {
    pub ap: ScalarDto,
    pub am: ScalarDto,
    pub vp: [ScalarDto; 3],
    pub vm: [ScalarDto; 3],
}

fn oct_to(o: &SplitOctonion) -> OctonionDto {
    OctonionDto {
        ap: scalar_to(&o.ap),
        am: scalar_to(&o.am),
        vp: vec3_to(&o.vp),
        vm: vec3_to(&o.vm),
    }
}

fn oct_from(d: &OctonionDto) -> Result<SplitOctonion> {
    Ok(SplitOctonion {
        ap: scalar_from(&d.ap)?,
        am: scalar_from(&d.am)?,
        vp: vec3_from(&d.vp)?,
        vm: vec3_from(&d.vm)?,
    })
}

/// Hermitian element: three diagonal scalars and the three independent
/// off-diagonal entries at positions 12, 23, 31.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JordanDto {
    pub diag: [ScalarDto; 3],
    pub o12: OctonionDto,
    pub o23: OctonionDto,
    pub o31: OctonionDto,
}

fn jordan_to(x: &JordanElement) -> JordanDto {
    JordanDto {
        diag: std::array::from_fn(|k| scalar_to(&x.diag[k])),
        o12: oct_to(&x.o[0]),
        o23: oct_to(&x.o[1]),
        o31: oct_to(&x.o[2]),
    }
}

fn jordan_from(tag: CompositionTag, d: &JordanDto) -> Result<JordanElement> {
    let diag = [
        scalar_from(&d.diag[0])?,
        scalar_from(&d.diag[1])?,
        scalar_from(&d.diag[2])?,
    ];
    let o = [oct_from(&d.o12)?, oct_from(&d.o23)?, oct_from(&d.o31)?];
    for (entry, name) in o.iter().zip(["12", "23", "31"]) {
        if !tag.supports(entry) {
            return Err(Error::Invariant(format!(
                "off-diagonal entry {name} leaves the rank-{} coordinate algebra",
                tag.n()
            )));
        }
    }
    Ok(JordanElement { tag, diag, o })
}

fn octmat_to(m: &OctMat3) -> [[OctonionDto; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| oct_to(&m.0[i][j])))
}

fn octmat_from(d: &[[OctonionDto; 3]; 3]) -> Result<OctMat3> {
    let mut m = OctMat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            m.0[i][j] = oct_from(&d[i][j])?;
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct G2Dto {
    pub a: Mat3Dto,
    pub vp: [ScalarDto; 3],
    pub vm: [ScalarDto; 3],
}

/// Block element of one of the three matrix models built over a
/// composition subalgebra (the tag is implied by the algebra name).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlockDto {
    pub a: Mat3Dto,
    pub a1: [[OctonionDto; 3]; 3],
    pub xp: [JordanDto; 3],
    pub xm: [JordanDto; 3],
}

/// Operator form of the inner part: a traceless multiplication element and
/// a derivation given by its 27 coordinate columns.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorDto {
    pub z: JordanDto,
    /// Column c holds the coordinates of the image of basis element c.
    pub f: Vec<Vec<ScalarDto>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct E8Dto {
    pub a: Mat3Dto,
    pub a1: OperatorDto,
    pub xp: [JordanDto; 3],
    pub xm: [JordanDto; 3],
}

/// One element file: the `algebra` key selects the layout.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "algebra", rename_all = "lowercase")]
pub enum ElementDto {
    G2(G2Dto),
    F4(BlockDto),
    E6(BlockDto),
    E7(BlockDto),
    E8(E8Dto),
}

impl ElementDto {
    pub fn from_element(x: &AlgebraElement) -> ElementDto {
        match x {
            AlgebraElement::G2(g) => ElementDto::G2(G2Dto {
                a: mat3_to(&g.a),
                vp: vec3_to(&g.vp),
                vm: vec3_to(&g.vm),
            }),
            AlgebraElement::Exc(e) => {
                let dto = BlockDto {
                    a: mat3_to(e.outer()),
                    a1: octmat_to(e.inner().matrix()),
                    xp: std::array::from_fn(|k| jordan_to(&e.xp()[k])),
                    xm: std::array::from_fn(|k| jordan_to(&e.xm()[k])),
                };
                match e.tag() {
                    CompositionTag::N1 => ElementDto::F4(dto),
                    CompositionTag::N2 => ElementDto::E6(dto),
                    _ => ElementDto::E7(dto),
                }
            }
            AlgebraElement::E8(e) => {
                let f = (0..27)
                    .map(|c| {
                        e.inner()
                            .f()
                            .column(c)
                            .coords()
                            .iter()
                            .map(scalar_to)
                            .collect()
                    })
                    .collect();
                ElementDto::E8(E8Dto {
                    a: mat3_to(e.outer()),
                    a1: OperatorDto { z: jordan_to(e.inner().z()), f },
                    xp: std::array::from_fn(|k| jordan_to(&e.xp()[k])),
                    xm: std::array::from_fn(|k| jordan_to(&e.xm()[k])),
                })
            }
        }
    }

    pub fn algebra(&self) -> Algebra {
        match self {
            ElementDto::G2(_) => Algebra::G2,
            ElementDto::F4(_) => Algebra::F4,
            ElementDto::E6(_) => Algebra::E6,
            ElementDto::E7(_) => Algebra::E7,
            ElementDto::E8(_) => Algebra::E8,
        }
    }

    /// Rebuild the element, re-checking every block invariant.
    pub fn to_element(&self) -> Result<AlgebraElement> {
        match self {
            ElementDto::G2(d) => {
                let a = mat3_from(&d.a)?;
                if !a.is_traceless() {
                    return Err(Error::Invariant("outer matrix must be traceless".into()));
                }
                Ok(AlgebraElement::G2(G2Element {
                    a,
                    vp: vec3_from(&d.vp)?,
                    vm: vec3_from(&d.vm)?,
                }))
            }
            ElementDto::F4(d) => block_to_element(CompositionTag::N1, d),
            ElementDto::E6(d) => block_to_element(CompositionTag::N2, d),
            ElementDto::E7(d) => block_to_element(CompositionTag::N4, d),
            ElementDto::E8(d) => {
                let a = mat3_from(&d.a)?;
                let z = jordan_from(CompositionTag::N8, &d.a1.z)?;
                if d.a1.f.len() != 27 {
                    return Err(Error::Schema(format!(
                        "operator part needs 27 columns, found {}",
                        d.a1.f.len()
                    )));
                }
                let mut images = Vec::with_capacity(27);
                for (c, col) in d.a1.f.iter().enumerate() {
                    if col.len() != 27 {
                        return Err(Error::Schema(format!(
                            "operator column {c} needs 27 coordinates, found {}",
                            col.len()
                        )));
                    }
                    let coords: Vec<ExactScalar> =
                        col.iter().map(scalar_from).collect::<Result<_>>()?;
                    images.push(JordanElement::from_coords(CompositionTag::N8, &coords));
                }
                let f = Op27::from_images(&images);
                // the multiplication part is carried separately, so the
                // operator column must be a genuine derivation
                DerivationOperator::new(f.clone())?;
                let inner = E6Operator::new(z, f)?;
                let xp = jordan_triple(CompositionTag::N8, &d.xp)?;
                let xm = jordan_triple(CompositionTag::N8, &d.xm)?;
                Ok(AlgebraElement::E8(Box::new(E8Element::new(a, inner, xp, xm)?)))
            }
        }
    }
}

fn jordan_triple(tag: CompositionTag, d: &[JordanDto; 3]) -> Result<[JordanElement; 3]> {
    Ok([
        jordan_from(tag, &d[0])?,
        jordan_from(tag, &d[1])?,
        jordan_from(tag, &d[2])?,
    ])
}

fn block_to_element(tag: CompositionTag, d: &BlockDto) -> Result<AlgebraElement> {
    let a = mat3_from(&d.a)?;
    let inner = InnerAlgebraElement::new(tag, octmat_from(&d.a1)?)?;
    let xp = jordan_triple(tag, &d.xp)?;
    let xm = jordan_triple(tag, &d.xm)?;
    Ok(AlgebraElement::Exc(ExcElement::new(a, inner, xp, xm)?))
}

// ---------------------------------------------------------------------------
// structure-constant tables

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermDto {
    pub k: usize,
    pub c: ScalarDto,
}

/// Bracket of one unordered basis pair i < j as a sparse coordinate list.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairRowDto {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermDto>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScTableDto {
    pub algebra: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub rows: Vec<PairRowDto>,
}

pub fn table_to_dto(t: &ScTable) -> ScTableDto {
    let mut rows = Vec::with_capacity(t.rows.len());
    for i in 0..t.dim {
        for j in (i + 1)..t.dim {
            let terms = t.rows[pair_index(t.dim, i, j)]
                .iter()
                .map(|(k, c)| TermDto { k: *k, c: scalar_to(c) })
                .collect();
            rows.push(PairRowDto { i, j, terms });
        }
    }
    ScTableDto {
        algebra: t.algebra.name().to_string(),
        dim: t.dim,
        labels: t.labels.clone(),
        rows,
    }
}

pub fn table_from_dto(d: &ScTableDto) -> Result<ScTable> {
    let algebra = Algebra::from_name(&d.algebra)?;
    let dim = algebra.dim();
    if d.dim != dim {
        return Err(Error::Schema(format!(
            "dimension {} does not match {} (dim {dim})",
            d.dim,
            algebra.name()
        )));
    }
    if d.labels.len() != dim {
        return Err(Error::Schema(format!(
            "{} labels for dimension {dim}",
            d.labels.len()
        )));
    }
    let want_rows = dim * (dim - 1) / 2;
    if d.rows.len() != want_rows {
        return Err(Error::Schema(format!(
            "{} pair rows, want {want_rows}",
            d.rows.len()
        )));
    }
    let mut rows = vec![Vec::new(); want_rows];
    for (pos, row) in d.rows.iter().enumerate() {
        if row.i >= row.j || row.j >= dim {
            return Err(Error::Schema(format!(
                "pair ({}, {}) is not an ordered pair below {dim}",
                row.i, row.j
            )));
        }
        let idx = pair_index(dim, row.i, row.j);
        if idx != pos {
            return Err(Error::Schema(format!(
                "pair ({}, {}) is out of place in the row order",
                row.i, row.j
            )));
        }
        let mut terms = Vec::with_capacity(row.terms.len());
        for term in &row.terms {
            if term.k >= dim {
                return Err(Error::Schema(format!(
                    "coordinate index {} out of range in pair ({}, {})",
                    term.k, row.i, row.j
                )));
            }
            terms.push((term.k, scalar_from(&term.c)?));
        }
        rows[idx] = terms;
    }
    Ok(ScTable { algebra, dim, labels: d.labels.clone(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn elements_survive_the_json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for algebra in [Algebra::G2, Algebra::F4, Algebra::E6, Algebra::E7, Algebra::E8] {
            let x = AlgebraElement::random(algebra, &mut rng);
            let text = serde_json::to_string(&ElementDto::from_element(&x)).unwrap();
            let parsed: ElementDto = serde_json::from_str(&text).unwrap();
            assert_eq!(parsed.algebra(), algebra);
            let back = parsed.to_element().unwrap();
            assert_eq!(back, x, "{} element changed in transit", algebra.name());
        }
    }

    #[test]
    fn invariant_violations_are_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);

        // non-traceless outer block
        let g = AlgebraElement::random(Algebra::G2, &mut rng);
        let mut dto = match ElementDto::from_element(&g) {
            ElementDto::G2(d) => d,
            _ => unreachable!(),
        };
        dto.a[0][0] = scalar_to(&ExactScalar::int(5));
        assert!(ElementDto::G2(dto).to_element().is_err());

        // off-diagonal octonion outside the rank-1 coordinates
        let f = AlgebraElement::random(Algebra::F4, &mut rng);
        let mut dto = match ElementDto::from_element(&f) {
            ElementDto::F4(d) => d,
            _ => unreachable!(),
        };
        dto.xp[0].o12.vp[0] = scalar_to(&ExactScalar::one());
        assert!(ElementDto::F4(dto).to_element().is_err());

        // an operator column that is not a derivation
        let e = AlgebraElement::random(Algebra::E8, &mut rng);
        let mut dto = match ElementDto::from_element(&e) {
            ElementDto::E8(d) => d,
            _ => unreachable!(),
        };
        dto.a1.f[0][0] = scalar_to(&ExactScalar::int(3));
        assert!(ElementDto::E8(dto).to_element().is_err());
    }

    #[test]
    fn tables_survive_the_json_round_trip_and_bad_rows_are_caught() {
        let table = crate::structure::build(Algebra::G2);
        let dto = table_to_dto(&table);
        let text = serde_json::to_string(&dto).unwrap();
        let parsed: ScTableDto = serde_json::from_str(&text).unwrap();
        let back = table_from_dto(&parsed).unwrap();
        assert_eq!(back.rows, table.rows);
        assert_eq!(back.labels, table.labels);

        let mut bad = table_to_dto(&table);
        bad.rows[3].j = 99;
        assert!(table_from_dto(&bad).is_err());
        let mut swapped = table_to_dto(&table);
        swapped.rows.swap(0, 1);
        assert!(table_from_dto(&swapped).is_err());
    }
}

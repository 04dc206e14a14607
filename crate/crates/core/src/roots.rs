//! Root vectors, eigenvalue tables, and weight extraction by bracketing
//! against Cartan elements.
//!
//! Weights are never asserted from theory: `weight_of` brackets a candidate
//! eigenvector against a Cartan element and solves for the exact eigenvalue,
//! failing loudly when the bracket is not proportional to the input.  The
//! audit routines then compare three independent values per entry: the
//! tabulated number, the bracket eigenvalue, and the dot product of the root
//! with the axis attached to the Cartan element.

use crate::error::{Error, Result};
use crate::exc::{ExcElement, InnerAlgebraElement};
use crate::g2::{generator_labels, generators, G2Element};
use crate::jordan::{JordanElement, OctMat3};
use crate::linalg::Mat3;
use crate::octonion::{CompositionTag, SplitOctonion};
use crate::scalar::{ExactScalar, Rat};

/// Exact vector in the orthonormal root-space basis; length 6 for the
/// 78-dimensional algebra, length 2 for eigenvalue planes.
#[derive(Clone, Debug, PartialEq)]
pub struct RootVector {
    pub coords: Vec<ExactScalar>,
}

impl RootVector {
    pub fn new(coords: Vec<ExactScalar>) -> RootVector {
        RootVector { coords }
    }

    pub fn dot(&self, o: &RootVector) -> ExactScalar {
        assert_eq!(self.coords.len(), o.coords.len());
        let mut acc = ExactScalar::zero();
        for (a, b) in self.coords.iter().zip(&o.coords) {
            acc = acc.add(&a.mul(b));
        }
        acc
    }

    pub fn norm2(&self) -> ExactScalar {
        self.dot(self)
    }

    pub fn neg(&self) -> RootVector {
        RootVector { coords: self.coords.iter().map(|c| c.neg()).collect() }
    }
}

/// Exact eigenvalue of ad(h) on x: solves [h, x] = lambda x coordinatewise.
pub fn proportionality(cx: &[ExactScalar], cy: &[ExactScalar]) -> Result<ExactScalar> {
    assert_eq!(cx.len(), cy.len());
    let Some(i) = cx.iter().position(|c| !c.is_zero()) else {
        return Err(Error::NotEigenvector);
    };
    let lambda = cy[i].mul(&cx[i].inv()?);
    for (a, b) in cx.iter().zip(cy) {
        if &lambda.mul(a) != b {
            return Err(Error::NotEigenvector);
        }
    }
    Ok(lambda)
}

pub fn g2_weight_of(h: &G2Element, x: &G2Element) -> Result<ExactScalar> {
    proportionality(&x.coords(), &h.bracket(x).coords())
}

pub fn e6_weight_of(h: &ExcElement, x: &ExcElement) -> Result<ExactScalar> {
    proportionality(&x.coords(), &h.bracket(x).coords())
}

/// The two commuting diagonal generators H1, H2.
pub fn g2_cartans() -> (G2Element, G2Element) {
    let g = generators();
    (g[6].clone(), g[7].clone())
}

/// Tabulated eigenvalue pairs of the 14 generators under (H1, H2), in
/// generator order.
pub fn g2_expected_weights() -> Vec<(&'static str, [ExactScalar; 2])> {
    let r2 = |n: i64, d: i64| ExactScalar::basis(2, Rat::new(n, d));
    let r6 = |n: i64, d: i64| ExactScalar::basis(6, Rat::new(n, d));
    let z = ExactScalar::zero;
    vec![
        ("d1+", [r2(-1, 2), r6(1, 2)]),
        ("d2+", [r2(-1, 2), r6(-1, 2)]),
        ("d3+", [r2(1, 1), z()]),
        ("d1-", [r2(1, 2), r6(-1, 2)]),
        ("d2-", [r2(1, 2), r6(1, 2)]),
        ("d3-", [r2(-1, 1), z()]),
        ("H1", [z(), z()]),
        ("H2", [z(), z()]),
        ("g1+", [r2(1, 2), r6(1, 6)]),
        ("g2+", [r2(-1, 2), r6(1, 6)]),
        ("g3+", [z(), r6(-1, 3)]),
        ("g1-", [r2(-1, 2), r6(-1, 6)]),
        ("g2-", [r2(1, 2), r6(-1, 6)]),
        ("g3-", [z(), r6(1, 3)]),
    ]
}

/// Bracket-computed eigenvalue pairs of every generator under (H1, H2).
pub fn g2_weight_table() -> Result<Vec<(String, [ExactScalar; 2])>> {
    let (h1, h2) = g2_cartans();
    generator_labels()
        .iter()
        .zip(generators())
        .map(|(l, g)| Ok((l.to_string(), [g2_weight_of(&h1, &g)?, g2_weight_of(&h2, &g)?])))
        .collect()
}

/// The 72 roots in the six-coordinate orthonormal basis: 40 of the form
/// +-k_i +- k_j for i < j <= 5, and 2^5 = 32 half-integer vectors
/// (+-k1 ... +-k5 +- sqrt3 k6)/2 where the last sign is fixed by requiring
/// an odd number of plus signs overall.
pub fn e6_root_list() -> Vec<RootVector> {
    let mut out = Vec::with_capacity(72);
    for i in 0..5 {
        for j in i + 1..5 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c = vec![ExactScalar::zero(); 6];
                c[i] = ExactScalar::int(si);
                c[j] = ExactScalar::int(sj);
                out.push(RootVector::new(c));
            }
        }
    }
    for mask in 0..32u32 {
        let signs: Vec<i64> =
            (0..5).map(|b| if mask >> b & 1 == 1 { 1 } else { -1 }).collect();
        let plus = signs.iter().filter(|&&s| s == 1).count();
        let s6 = if plus % 2 == 0 { 1 } else { -1 };
        let mut c: Vec<ExactScalar> =
            signs.iter().map(|&s| ExactScalar::rational(s, 2)).collect();
        c.push(ExactScalar::basis(4, Rat::new(s6, 2)));
        out.push(RootVector::new(c));
    }
    out
}

/// Axes of the four Cartan directions in the six-coordinate basis, in the
/// order H1+, H2+, H1-, H2-: dotting a root against an axis reproduces the
/// bracket eigenvalue under the matching Cartan element.
pub fn e6_axes() -> [RootVector; 4] {
    let z = ExactScalar::zero;
    let r2h = ExactScalar::basis(2, Rat::new(1, 2));
    let r6s = ExactScalar::basis(6, Rat::new(-1, 6));
    [
        RootVector::new(vec![z(), z(), z(), r2h.clone(), r2h.clone(), z()]),
        RootVector::new(vec![r6s.clone(), r6s.clone(), r6s.clone(), z(), z(), r2h.clone()]),
        RootVector::new(vec![z(), z(), z(), r2h.clone(), r2h.neg(), z()]),
        RootVector::new(vec![r6s.clone(), r6s.clone(), r6s, z(), z(), r2h.neg()]),
    ]
}

fn rho_matrix(h: &Mat3, plus: bool) -> ExcElement {
    let mut m = OctMat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut o = SplitOctonion::zero();
            if plus {
                o.ap = h.0[i][j].clone();
            } else {
                o.am = h.0[i][j].clone();
            }
            m.0[i][j] = o;
        }
    }
    let a1 = InnerAlgebraElement::new(CompositionTag::N2, m).expect("traceless Cartan matrix");
    let zj = || JordanElement::zero(CompositionTag::N2);
    ExcElement::new(Mat3::zero(), a1, [zj(), zj(), zj()], [zj(), zj(), zj()])
        .expect("Cartan element")
}

/// The four inner Cartan elements H1+, H2+, H1-, H2-: the diagonal matrices
/// H1, H2 carried on one idempotent each.
pub fn e6_cartans() -> [ExcElement; 4] {
    let r2 = ExactScalar::basis(2, Rat::new(1, 2));
    let r6 = ExactScalar::basis(6, Rat::new(1, 6));
    let h1 = Mat3::diag(r2.clone(), r2.neg(), ExactScalar::zero());
    let h2 = Mat3::diag(r6.clone(), r6.clone(), r6.mul_int(-2));
    [
        rho_matrix(&h1, true),
        rho_matrix(&h2, true),
        rho_matrix(&h1, false),
        rho_matrix(&h2, false),
    ]
}

/// One tabulated weight row: a root, the Jordan generator carrying it, and
/// the tabulated eigenvalue pairs where the table prints them.
pub struct E6WeightRow {
    pub label: &'static str,
    pub root: RootVector,
    pub tabulated_plus: Option<[ExactScalar; 2]>,
    pub tabulated_minus: Option<[ExactScalar; 2]>,
}

/// Audit outcome for one row: the tabulated cells where present, the
/// bracket eigenvalues, and the root-axis dot products, with agreement
/// flags.
pub struct E6WeightAudit {
    pub label: &'static str,
    pub computed_plus: [ExactScalar; 2],
    pub computed_minus: [ExactScalar; 2],
    pub dot_plus: [ExactScalar; 2],
    pub dot_minus: [ExactScalar; 2],
    pub tabulated_plus: Option<[ExactScalar; 2]>,
    pub tabulated_minus: Option<[ExactScalar; 2]>,
    pub ok: bool,
}

fn half_root(s: [i64; 5], s6: i64) -> RootVector {
    let mut c: Vec<ExactScalar> = s.iter().map(|&v| ExactScalar::rational(v, 2)).collect();
    c.push(ExactScalar::basis(4, Rat::new(s6, 2)));
    RootVector::new(c)
}

fn pair_root(i: usize, si: i64, j: usize, sj: i64) -> RootVector {
    let mut c = vec![ExactScalar::zero(); 6];
    c[i] = ExactScalar::int(si);
    c[j] = ExactScalar::int(sj);
    RootVector::new(c)
}

/// The nine tabulated weight rows in table order.
pub fn e6_weight_rows() -> Vec<E6WeightRow> {
    let r2 = |n: i64, d: i64| ExactScalar::basis(2, Rat::new(n, d));
    let r6 = |n: i64, d: i64| ExactScalar::basis(6, Rat::new(n, d));
    let z = ExactScalar::zero;
    let pp = |a: ExactScalar, b: ExactScalar| Some([a, b]);
    vec![
        E6WeightRow {
            label: "X1",
            root: pair_root(0, -1, 3, 1),
            tabulated_plus: pp(r2(1, 2), r6(1, 6)),
            tabulated_minus: None,
        },
        E6WeightRow {
            label: "X31+",
            root: half_root([-1, 1, 1, 1, -1], -1),
            tabulated_plus: pp(z(), r6(-1, 3)),
            tabulated_minus: pp(r2(1, 2), r6(1, 6)),
        },
        E6WeightRow {
            label: "X12-",
            root: pair_root(0, -1, 4, -1),
            tabulated_plus: pp(r2(-1, 2), r6(1, 6)),
            tabulated_minus: None,
        },
        E6WeightRow {
            label: "X31-",
            root: half_root([-1, 1, 1, 1, 1], 1),
            tabulated_plus: pp(r2(1, 2), r6(1, 6)),
            tabulated_minus: None,
        },
        E6WeightRow {
            label: "X3",
            root: pair_root(1, 1, 2, 1),
            tabulated_plus: pp(z(), r6(-1, 3)),
            tabulated_minus: pp(z(), r6(-1, 3)),
        },
        E6WeightRow {
            label: "X23+",
            root: half_root([-1, 1, 1, -1, -1], 1),
            tabulated_plus: pp(r2(-1, 2), r6(1, 6)),
            tabulated_minus: None,
        },
        E6WeightRow {
            label: "X12+",
            root: pair_root(0, -1, 4, 1),
            tabulated_plus: pp(r2(1, 2), r6(1, 6)),
            tabulated_minus: None,
        },
        E6WeightRow {
            label: "X23-",
            root: half_root([-1, 1, 1, -1, 1], -1),
            tabulated_plus: pp(z(), r6(-1, 3)),
            tabulated_minus: pp(r2(-1, 2), r6(1, 6)),
        },
        E6WeightRow {
            label: "X2",
            root: pair_root(0, -1, 3, -1),
            tabulated_plus: pp(r2(-1, 2), r6(1, 6)),
            tabulated_minus: None,
        },
    ]
}

/// The Jordan generator named by a row label, placed in the first slot of
/// the plus vector.
pub fn e6_weight_generator(label: &str) -> ExcElement {
    let tag = CompositionTag::N2;
    let x = match label {
        "X1" => JordanElement::diag_unit(tag, 0),
        "X2" => JordanElement::diag_unit(tag, 1),
        "X3" => JordanElement::diag_unit(tag, 2),
        _ => {
            let pos = match &label[1..3] {
                "12" => 0,
                "23" => 1,
                "31" => 2,
                _ => panic!("unknown generator {label}"),
            };
            let u = match label.as_bytes()[3] {
                b'+' => SplitOctonion::rho_p(),
                b'-' => SplitOctonion::rho_m(),
                _ => panic!("unknown generator {label}"),
            };
            JordanElement::off_unit(tag, pos, &u)
        }
    };
    let zj = || JordanElement::zero(tag);
    ExcElement::new(Mat3::zero(), InnerAlgebraElement::zero(tag), [x, zj(), zj()], [
        zj(),
        zj(),
        zj(),
    ])
    .expect("generator element")
}

/// Computes every row's eigenvalue pairs by bracketing and checks all three
/// sources against each other: tabulated cells (where present), bracket
/// eigenvalues, and root-axis dot products.
pub fn e6_weight_audit() -> Result<Vec<E6WeightAudit>> {
    let cartans = e6_cartans();
    let axes = e6_axes();
    e6_weight_rows()
        .into_iter()
        .map(|row| {
            let g = e6_weight_generator(row.label);
            let w = |h: &ExcElement| e6_weight_of(h, &g);
            let computed_plus = [w(&cartans[0])?, w(&cartans[1])?];
            let computed_minus = [w(&cartans[2])?, w(&cartans[3])?];
            let dot_plus = [row.root.dot(&axes[0]), row.root.dot(&axes[1])];
            let dot_minus = [row.root.dot(&axes[2]), row.root.dot(&axes[3])];
            let mut ok = computed_plus == dot_plus && computed_minus == dot_minus;
            if let Some(p) = &row.tabulated_plus {
                ok &= p == &computed_plus;
            }
            if let Some(p) = &row.tabulated_minus {
                ok &= p == &computed_minus;
            }
            Ok(E6WeightAudit {
                label: row.label,
                computed_plus,
                computed_minus,
                dot_plus,
                dot_minus,
                tabulated_plus: row.tabulated_plus,
                tabulated_minus: row.tabulated_minus,
                ok,
            })
        })
        .collect()
}

/// CSV export of the root list: six exact coordinates per row followed by
/// the four axis projections (the plane coordinates of the root).
pub fn e6_roots_csv() -> String {
    let axes = e6_axes();
    let mut out = String::from("k1,k2,k3,k4,k5,k6,h1p,h2p,h1m,h2m\n");
    for r in e6_root_list() {
        let mut cells: Vec<String> = r.coords.iter().map(|c| c.to_string()).collect();
        for a in &axes {
            cells.push(r.dot(a).to_string());
        }
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// CSV export of the eigenvalue table of the 14 generators.
pub fn g2_weights_csv() -> Result<String> {
    let mut out = String::from("generator,w1,w2\n");
    for (l, [w1, w2]) in g2_weight_table()? {
        out.push_str(&format!("{l},{w1},{w2}\n"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proportionality_solves_and_rejects() {
        let lam = ExactScalar::sqrt2();
        let cx = vec![ExactScalar::int(2), ExactScalar::zero(), ExactScalar::int(-1)];
        let cy: Vec<ExactScalar> = cx.iter().map(|c| c.mul(&lam)).collect();
        assert_eq!(proportionality(&cx, &cy).unwrap(), lam);
        let mut bad = cy.clone();
        bad[1] = ExactScalar::one();
        assert!(matches!(proportionality(&cx, &bad), Err(Error::NotEigenvector)));
    }

    #[test]
    fn eigenvalue_table_matches_the_tabulated_values() {
        let got = g2_weight_table().unwrap();
        let want = g2_expected_weights();
        assert_eq!(got.len(), 14);
        for ((gl, gw), (wl, ww)) in got.iter().zip(&want) {
            assert_eq!(gl, wl);
            assert_eq!(gw, ww, "weights differ for {gl}");
        }
        // long roots have squared length 2, short ones 2/3
        let n2 = |w: &[ExactScalar; 2]| w[0].mul(&w[0]).add(&w[1].mul(&w[1]));
        for (l, w) in &got[..6] {
            assert_eq!(n2(w), ExactScalar::int(2), "{l}");
        }
        for (l, w) in &got[8..] {
            assert_eq!(n2(w), ExactScalar::rational(2, 3), "{l}");
        }
    }

    #[test]
    fn root_list_counts_negation_and_length() {
        let roots = e6_root_list();
        assert_eq!(roots.len(), 72);
        let integral = roots
            .iter()
            .filter(|r| r.coords[5].is_zero())
            .count();
        assert_eq!(integral, 40);
        for r in &roots {
            assert_eq!(r.norm2(), ExactScalar::int(2));
            assert!(roots.contains(&r.neg()), "negation missing");
        }
        // distinct
        for (i, r) in roots.iter().enumerate() {
            for s in &roots[i + 1..] {
                assert_ne!(r, s);
            }
        }
    }

    #[test]
    fn cartans_commute() {
        let h = e6_cartans();
        for a in &h {
            for b in &h {
                assert!(a.bracket(b).is_zero());
            }
        }
        let (h1, h2) = g2_cartans();
        assert!(h1.bracket(&h2).is_zero());
    }

    #[test]
    fn tabulated_weight_rows_audit_clean() {
        for row in e6_weight_audit().unwrap() {
            assert!(row.ok, "row {} disagrees", row.label);
        }
        let roots = e6_root_list();
        for row in e6_weight_rows() {
            assert!(roots.contains(&row.root), "root of {} missing from list", row.label);
        }
    }

    #[test]
    fn csv_exports_are_well_formed() {
        let csv = e6_roots_csv();
        assert_eq!(csv.lines().count(), 73);
        assert!(csv.lines().skip(1).all(|l| l.split(',').count() == 10));
        let g = g2_weights_csv().unwrap();
        assert_eq!(g.lines().count(), 15);
    }
}

//! The 52-dimensional algebra as derivations plus a matrix-tensor middle
//! layer, and the correspondence onto the block model.
//!
//! An element is a triple (D, sum_s u_s (x) m_s, E): a derivation of the
//! split octonions, seven symmetric traceless scalar matrices indexed by the
//! traceless octonion units, and one antisymmetric scalar matrix.  The
//! bracket mixes the three layers through the octonion product and the
//! inner-derivation map; `corr_map` carries it isomorphically onto the
//! scalar-entry block model.

use crate::error::{Error, Result};
use crate::exc::{ExcElement, InnerAlgebraElement};
use crate::g2::{dcd_matrix, generator_labels, generators, G2Element};
use crate::jordan::{JordanElement, OctMat3, OFF_POS};
use crate::linalg::Mat3;
use crate::octonion::{CompositionTag, SplitOctonion};
use crate::scalar::ExactScalar;
use rand::Rng;

pub const TITS_DIM: usize = 52;

/// Traceless octonion units indexing the middle slots: u1 = rho+ - rho-,
/// then the three plus nilpotents, then the three minus ones.
fn slot_unit(s: usize) -> SplitOctonion {
    match s {
        0 => SplitOctonion::rho_p().sub(&SplitOctonion::rho_m()),
        1..=3 => SplitOctonion::eps_p(s - 1),
        4..=6 => SplitOctonion::eps_m(s - 4),
        _ => unreachable!(),
    }
}

fn slot_names() -> [&'static str; 7] {
    ["u1", "eps1+", "eps2+", "eps3+", "eps1-", "eps2-", "eps3-"]
}

/// Slot coefficients of a traceless octonion.
fn slot_coords(c: &SplitOctonion) -> [ExactScalar; 7] {
    debug_assert!(c.is_traceless());
    [
        c.ap.clone(),
        c.vp.0[0].clone(),
        c.vp.0[1].clone(),
        c.vp.0[2].clone(),
        c.vm.0[0].clone(),
        c.vm.0[1].clone(),
        c.vm.0[2].clone(),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct TitsElement {
    pub d: G2Element,
    pub mid: [Mat3; 7],
    pub e: Mat3,
}

impl TitsElement {
    pub fn new(d: G2Element, mid: [Mat3; 7], e: Mat3) -> Result<TitsElement> {
        if mid.iter().any(|m| !m.is_symmetric() || !m.is_traceless()) {
            return Err(Error::Invariant(
                "middle matrices must be symmetric and traceless".into(),
            ));
        }
        if !e.is_antisymmetric() {
            return Err(Error::Invariant("rotation part must be antisymmetric".into()));
        }
        Ok(TitsElement { d, mid, e })
    }

    pub fn zero() -> TitsElement {
        TitsElement {
            d: G2Element::zero(),
            mid: std::array::from_fn(|_| Mat3::zero()),
            e: Mat3::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero() && self.mid.iter().all(|m| m.is_zero()) && self.e.is_zero()
    }

    pub fn add(&self, o: &TitsElement) -> TitsElement {
        TitsElement {
            d: self.d.add(&o.d),
            mid: std::array::from_fn(|s| self.mid[s].add(&o.mid[s])),
            e: self.e.add(&o.e),
        }
    }

    pub fn sub(&self, o: &TitsElement) -> TitsElement {
        TitsElement {
            d: self.d.sub(&o.d),
            mid: std::array::from_fn(|s| self.mid[s].sub(&o.mid[s])),
            e: self.e.sub(&o.e),
        }
    }

    pub fn neg(&self) -> TitsElement {
        TitsElement {
            d: self.d.neg(),
            mid: std::array::from_fn(|s| self.mid[s].neg()),
            e: self.e.neg(),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> TitsElement {
        TitsElement {
            d: self.d.scale(s),
            mid: std::array::from_fn(|k| self.mid[k].scale(s)),
            e: self.e.scale(s),
        }
    }

    /// Basis: the 14 derivation generators, then per slot the five symmetric
    /// traceless matrices D1, D2, S12, S23, S31, then the three rotations.
    pub fn basis() -> Vec<TitsElement> {
        let mut out = Vec::with_capacity(TITS_DIM);
        for g in generators() {
            let mut t = TitsElement::zero();
            t.d = g;
            out.push(t);
        }
        for s in 0..7 {
            for m in sym_basis() {
                let mut t = TitsElement::zero();
                t.mid[s] = m;
                out.push(t);
            }
        }
        for m in antisym_basis() {
            let mut t = TitsElement::zero();
            t.e = m;
            out.push(t);
        }
        debug_assert_eq!(out.len(), TITS_DIM);
        out
    }

    pub fn basis_labels() -> Vec<String> {
        let mut out: Vec<String> =
            generator_labels().iter().map(|l| format!("d:{l}")).collect();
        for s in slot_names() {
            for m in ["D1", "D2", "S12", "S23", "S31"] {
                out.push(format!("{s}*{m}"));
            }
        }
        for m in ["A12", "A23", "A31"] {
            out.push(format!("e:{m}"));
        }
        out
    }

    pub fn coords(&self) -> Vec<ExactScalar> {
        let mut out: Vec<ExactScalar> = self.d.coords().to_vec();
        for m in &self.mid {
            out.push(m.0[0][0].clone());
            out.push(m.0[2][2].neg());
            out.push(m.0[0][1].clone());
            out.push(m.0[1][2].clone());
            out.push(m.0[2][0].clone());
        }
        out.push(self.e.0[0][1].clone());
        out.push(self.e.0[1][2].clone());
        out.push(self.e.0[2][0].clone());
        out
    }

    pub fn from_coords(c: &[ExactScalar]) -> TitsElement {
        assert_eq!(c.len(), TITS_DIM);
        let d = G2Element::from_coords(&c[..14]);
        let mid: [Mat3; 7] = std::array::from_fn(|s| {
            let b = &c[14 + 5 * s..14 + 5 * s + 5];
            let mut m = Mat3::zero();
            m.0[0][0] = b[0].clone();
            m.0[1][1] = b[1].sub(&b[0]);
            m.0[2][2] = b[1].neg();
            for (v, &(i, j)) in b[2..].iter().zip(OFF_POS.iter()) {
                m.0[i][j] = v.clone();
                m.0[j][i] = v.clone();
            }
            m
        });
        let mut e = Mat3::zero();
        for (v, &(i, j)) in c[49..].iter().zip(OFF_POS.iter()) {
            e.0[i][j] = v.clone();
            e.0[j][i] = v.neg();
        }
        TitsElement { d, mid, e }
    }

    pub fn random<R: Rng>(rng: &mut R) -> TitsElement {
        let c: Vec<ExactScalar> = (0..TITS_DIM).map(|_| ExactScalar::random(rng)).collect();
        TitsElement::from_coords(&c)
    }
}

fn sym_basis() -> [Mat3; 5] {
    let one = ExactScalar::one;
    let mut s12 = Mat3::zero();
    s12.0[0][1] = one();
    s12.0[1][0] = one();
    let mut s23 = Mat3::zero();
    s23.0[1][2] = one();
    s23.0[2][1] = one();
    let mut s31 = Mat3::zero();
    s31.0[2][0] = one();
    s31.0[0][2] = one();
    [
        Mat3::diag(one(), one().neg(), ExactScalar::zero()),
        Mat3::diag(ExactScalar::zero(), one(), one().neg()),
        s12,
        s23,
        s31,
    ]
}

fn antisym_basis() -> [Mat3; 3] {
    std::array::from_fn(|k| {
        let (i, j) = OFF_POS[k];
        let mut m = Mat3::zero();
        m.0[i][j] = ExactScalar::one();
        m.0[j][i] = ExactScalar::one().neg();
        m
    })
}

/// The three-layer bracket.  Derivations bracket as derivations and act on
/// the octonion factor of the middle layer; rotations act on the matrix
/// factor and bracket as matrices; two middle elements split into a
/// derivation part through the inner-derivation map, a middle part through
/// the traceless halves of both products, and a rotation part through the
/// scalar trace of the octonion product.
pub fn tits_bracket(f: &TitsElement, g: &TitsElement) -> TitsElement {
    let mut d = f.d.bracket(&g.d);
    let mut mid: [Mat3; 7] = std::array::from_fn(|_| Mat3::zero());
    let mut e = f.e.commutator(&g.e);

    // derivations and rotations against the middle layer
    for s in 0..7 {
        let u = slot_unit(s);
        if !f.mid[s].is_zero() {
            for (r, w) in slot_coords(&g.d.act_on_octonion(&u).neg()).iter().enumerate() {
                if !w.is_zero() {
                    mid[r] = mid[r].add(&f.mid[s].scale(w));
                }
            }
            mid[s] = mid[s].sub(&g.e.commutator(&f.mid[s]));
        }
        if !g.mid[s].is_zero() {
            for (r, w) in slot_coords(&f.d.act_on_octonion(&u)).iter().enumerate() {
                if !w.is_zero() {
                    mid[r] = mid[r].add(&g.mid[s].scale(w));
                }
            }
            mid[s] = mid[s].add(&f.e.commutator(&g.mid[s]));
        }
    }

    // middle against middle
    let third = ExactScalar::rational(1, 3);
    let half = ExactScalar::rational(1, 2);
    for s in 0..7 {
        if f.mid[s].is_zero() {
            continue;
        }
        let cu = slot_unit(s);
        for r in 0..7 {
            if g.mid[r].is_zero() {
                continue;
            }
            let du = slot_unit(r);
            let xy = f.mid[s].mul(&g.mid[r]);
            let yx = g.mid[r].mul(&f.mid[s]);
            let t_xy = xy.trace();
            if !t_xy.is_zero() {
                d = d.add(&dcd_matrix(&cu, &du).scale(&t_xy));
            }
            let cd = cu.mul(&du);
            let t_cd = cd.trace();
            let star = cd.sub(&SplitOctonion::scalar(&t_cd.mul(&half)));
            if !star.is_zero() {
                let sym = xy
                    .add(&yx)
                    .scale(&half)
                    .sub(&Mat3::scalar(&t_xy.mul(&third)));
                for (k, w) in slot_coords(&star).iter().enumerate() {
                    if !w.is_zero() {
                        mid[k] = mid[k].add(&sym.scale(&w.mul_int(2)));
                    }
                }
            }
            if !t_cd.is_zero() {
                e = e.add(&xy.sub(&yx).scale(&t_cd.mul(&half)));
            }
        }
    }

    TitsElement::new(d, mid, e).expect("bracket preserves the layer invariants")
}

/// Symmetric scalar matrix as a Hermitian Jordan element.
fn jordan_from_sym(m: &Mat3) -> JordanElement {
    debug_assert!(m.is_symmetric());
    let mut x = JordanElement::zero(CompositionTag::N1);
    for i in 0..3 {
        x.diag[i] = m.0[i][i].clone();
    }
    for (pos, &(i, j)) in OFF_POS.iter().enumerate() {
        x.o[pos] = SplitOctonion::scalar(&m.0[i][j]);
    }
    x
}

fn sym_from_jordan(x: &JordanElement) -> Mat3 {
    let mut m = Mat3::zero();
    for i in 0..3 {
        m.0[i][i] = x.diag[i].clone();
    }
    for (pos, &(i, j)) in OFF_POS.iter().enumerate() {
        m.0[i][j] = x.o[pos].ap.clone();
        m.0[j][i] = x.o[pos].ap.clone();
    }
    m
}

/// Linear isomorphism onto the scalar-entry block model: the matrix part of
/// the derivation becomes the outer block, rotation plus u1-slot the inner
/// block, and the nilpotent slots (shifted by the derivation's vector
/// coefficients on the identity) the two Jordan vectors.
pub fn corr_map(f: &TitsElement) -> ExcElement {
    let a1m = f.e.add(&f.mid[0]);
    let mut inner = OctMat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            inner.0[i][j] = SplitOctonion::scalar(&a1m.0[i][j]);
        }
    }
    let a1 = InnerAlgebraElement::new(CompositionTag::N1, inner)
        .expect("rotation plus u1 slot is traceless");
    let with_id = |w: &ExactScalar, m: &Mat3| {
        jordan_from_sym(&m.add(&Mat3::scalar(w)))
    };
    let xp: [JordanElement; 3] =
        std::array::from_fn(|k| with_id(&f.d.vp.0[k], &f.mid[1 + k]));
    let xm: [JordanElement; 3] =
        std::array::from_fn(|k| with_id(&f.d.vm.0[k], &f.mid[4 + k]));
    ExcElement::new(f.d.a.clone(), a1, xp, xm).expect("derivation matrix part is traceless")
}

/// Inverse of `corr_map`.
pub fn corr_map_inv(f: &ExcElement) -> Result<TitsElement> {
    if f.tag() != CompositionTag::N1 {
        return Err(Error::Invariant("correspondence needs scalar entries".into()));
    }
    let third = ExactScalar::rational(1, 3);
    let mut mid: [Mat3; 7] = std::array::from_fn(|_| Mat3::zero());
    let mut vp = [ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero()];
    let mut vm = vp.clone();
    for k in 0..3 {
        let p = sym_from_jordan(&f.xp()[k]);
        let m = sym_from_jordan(&f.xm()[k]);
        vp[k] = p.trace().mul(&third);
        vm[k] = m.trace().mul(&third);
        mid[1 + k] = p.sub(&Mat3::scalar(&vp[k]));
        mid[4 + k] = m.sub(&Mat3::scalar(&vm[k]));
    }
    let a1 = rho_scalar_matrix(f.inner().matrix());
    let at = a1.transpose();
    mid[0] = a1.add(&at).scale(&ExactScalar::rational(1, 2));
    let e = a1.sub(&at).scale(&ExactScalar::rational(1, 2));
    let d = G2Element {
        a: f.outer().clone(),
        vp: crate::linalg::Vec3(vp),
        vm: crate::linalg::Vec3(vm),
    };
    TitsElement::new(d, mid, e)
}

fn rho_scalar_matrix(m: &OctMat3) -> Mat3 {
    let mut out = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            out.0[i][j] = m.0[i][j].ap.clone();
        }
    }
    out
}

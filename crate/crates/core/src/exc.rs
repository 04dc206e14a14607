//! Block models of the 52-, 78- and 133-dimensional exceptional algebras.
//!
//! One generic construction serves all three, switched by the composition
//! tag of the Jordan entries: scalar entries (n=1) give dimension 52,
//! bicomplex entries (n=2) give 78, quaternionic entries (n=4) give 133.
//! An element is the independent data of the block matrix
//!
//! ```text
//!   ( a (x) I + I (x) a1    x+ )
//!   ( x-                    -I (x) a1^dagger )
//! ```
//!
//! with `a` a traceless scalar 3x3 matrix, `a1` a traceless matrix over the
//! tagged composition algebra, and `x+`, `x-` three-vectors of Hermitian
//! Jordan matrices.  The lower-right block is determined by `a1` and is
//! never stored.

use crate::error::{Error, Result};
use crate::jordan::{JordanElement, OctMat3, Sign, OFF_POS};
use crate::linalg::Mat3;
use crate::octonion::{CompositionTag, SplitOctonion};
use crate::scalar::ExactScalar;
use rand::Rng;

/// Off-diagonal matrix positions in coordinate order: the three cyclic
/// positions first, then their mirrors.
const OFFD: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 0), (1, 0), (2, 1), (0, 2)];

/// Conventional name of the algebra built over the tagged entries.
pub fn algebra_label(tag: CompositionTag) -> &'static str {
    match tag {
        CompositionTag::N1 => "f4",
        CompositionTag::N2 => "e6",
        CompositionTag::N4 => "e7",
        CompositionTag::N8 => "e8",
    }
}

/// Traceless 3x3 matrix over the tagged composition algebra: the inner
/// (right-factor) summand of the upper-left block.
///
/// The trace constraint depends on the tag: for scalar and bicomplex entries
/// the full trace vanishes; for quaternionic entries only the coefficient of
/// the unit must vanish, leaving 35 independent parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct InnerAlgebraElement {
    tag: CompositionTag,
    m: OctMat3,
}

impl InnerAlgebraElement {
    pub fn new(tag: CompositionTag, m: OctMat3) -> Result<InnerAlgebraElement> {
        for i in 0..3 {
            for j in 0..3 {
                if !tag.supports(&m.0[i][j]) {
                    return Err(Error::Invariant(format!(
                        "inner entry ({i},{j}) leaves the rank-{} subalgebra",
                        tag.n()
                    )));
                }
            }
        }
        let tr = m.trace();
        let ok = match tag {
            CompositionTag::N1 | CompositionTag::N2 => tr.ap.is_zero() && tr.am.is_zero(),
            CompositionTag::N4 => tr.ap.add(&tr.am).is_zero(),
            CompositionTag::N8 => {
                return Err(Error::Invariant(
                    "rank-8 inner parts are operators, not matrices".into(),
                ))
            }
        };
        if !ok {
            return Err(Error::Invariant("inner matrix violates the trace constraint".into()));
        }
        Ok(InnerAlgebraElement { tag, m })
    }

    pub fn zero(tag: CompositionTag) -> InnerAlgebraElement {
        InnerAlgebraElement { tag, m: OctMat3::zero() }
    }

    pub fn tag(&self) -> CompositionTag {
        self.tag
    }

    pub fn matrix(&self) -> &OctMat3 {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn add(&self, o: &InnerAlgebraElement) -> InnerAlgebraElement {
        assert_eq!(self.tag, o.tag);
        InnerAlgebraElement { tag: self.tag, m: self.m.add(&o.m) }
    }

    pub fn sub(&self, o: &InnerAlgebraElement) -> InnerAlgebraElement {
        assert_eq!(self.tag, o.tag);
        InnerAlgebraElement { tag: self.tag, m: self.m.sub(&o.m) }
    }

    pub fn neg(&self) -> InnerAlgebraElement {
        InnerAlgebraElement { tag: self.tag, m: self.m.neg() }
    }

    pub fn scale(&self, s: &ExactScalar) -> InnerAlgebraElement {
        InnerAlgebraElement { tag: self.tag, m: self.m.scale(s) }
    }

    /// Hermitian conjugate: transpose plus entrywise conjugation.  For scalar
    /// entries this is the plain transpose.
    pub fn dagger(&self) -> InnerAlgebraElement {
        InnerAlgebraElement { tag: self.tag, m: self.m.dagger() }
    }

    pub fn commutator(&self, o: &InnerAlgebraElement) -> InnerAlgebraElement {
        assert_eq!(self.tag, o.tag);
        InnerAlgebraElement::new(self.tag, self.m.commutator(&o.m))
            .expect("inner commutator preserves the trace constraint")
    }

    /// a1 y + y a1^dagger.  Sends Hermitian matrices to Hermitian matrices
    /// because the tagged entries associate.
    pub fn act_on_jordan(&self, y: &JordanElement) -> JordanElement {
        assert_eq!(self.tag, y.tag);
        let raw = y.to_raw();
        let md = self.m.dagger();
        let s = self.m.mul(&raw).add(&raw.mul(&md));
        JordanElement::from_raw_hermitian(y.tag, &s).expect("inner action preserves Hermiticity")
    }

    /// a1^dagger y + y a1: the action on the opposite block.
    pub fn act_on_jordan_dagger(&self, y: &JordanElement) -> JordanElement {
        assert_eq!(self.tag, y.tag);
        let raw = y.to_raw();
        let md = self.m.dagger();
        let s = md.mul(&raw).add(&raw.mul(&self.m));
        JordanElement::from_raw_hermitian(y.tag, &s).expect("inner action preserves Hermiticity")
    }

    pub fn dim(tag: CompositionTag) -> usize {
        match tag {
            CompositionTag::N1 => 8,
            CompositionTag::N2 => 16,
            CompositionTag::N4 => 35,
            CompositionTag::N8 => unreachable!("rank-8 inner parts are operators"),
        }
    }

    pub fn basis(tag: CompositionTag) -> Vec<InnerAlgebraElement> {
        let mut out = Vec::new();
        let units = tag.units();
        let put = |entries: &[(usize, usize, &SplitOctonion)]| {
            let mut m = OctMat3::zero();
            for &(i, j, u) in entries {
                m.0[i][j] = u.clone();
            }
            InnerAlgebraElement { tag, m }
        };
        for &(i, j) in OFFD.iter() {
            for u in &units {
                out.push(put(&[(i, j, u)]));
            }
        }
        let diag = |u: &SplitOctonion, first: usize| {
            put(&[(first, first, u), (first + 1, first + 1, &u.neg())])
        };
        match tag {
            CompositionTag::N1 => {
                let one = SplitOctonion::one();
                out.push(diag(&one, 0));
                out.push(diag(&one, 1));
            }
            CompositionTag::N2 => {
                for u in &units {
                    out.push(diag(u, 0));
                    out.push(diag(u, 1));
                }
            }
            CompositionTag::N4 => {
                let (rp, rm) = (SplitOctonion::rho_p(), SplitOctonion::rho_m());
                for u in [&rp, &rm] {
                    out.push(diag(u, 0));
                    out.push(diag(u, 1));
                }
                // u1 I = (rho+ - rho-) I: the direction removed from the
                // full trace is only the coefficient of 1.
                let u1 = rp.sub(&rm);
                out.push(put(&[(0, 0, &u1), (1, 1, &u1), (2, 2, &u1)]));
                for u in [&SplitOctonion::eps_p(1), &SplitOctonion::eps_m(1)] {
                    for i in 0..3 {
                        out.push(put(&[(i, i, u)]));
                    }
                }
            }
            CompositionTag::N8 => unreachable!(),
        }
        debug_assert_eq!(out.len(), InnerAlgebraElement::dim(tag));
        out
    }

    pub fn basis_labels(tag: CompositionTag) -> Vec<String> {
        let mut out = Vec::new();
        let names = tag.unit_names();
        let tagged = |base: &str, unit: &str| {
            if unit == "1" {
                base.to_string()
            } else {
                format!("{base}*{unit}")
            }
        };
        for &(i, j) in OFFD.iter() {
            for u in &names {
                out.push(tagged(&format!("E{}{}", i + 1, j + 1), u));
            }
        }
        match tag {
            CompositionTag::N1 => {
                out.push("D1".into());
                out.push("D2".into());
            }
            CompositionTag::N2 => {
                for u in &names {
                    out.push(tagged("D1", u));
                    out.push(tagged("D2", u));
                }
            }
            CompositionTag::N4 => {
                for u in ["rho+", "rho-"] {
                    out.push(tagged("D1", u));
                    out.push(tagged("D2", u));
                }
                out.push("u1*I".into());
                for u in ["eps2+", "eps2-"] {
                    for i in 0..3 {
                        out.push(tagged(&format!("E{}{}", i + 1, i + 1), u));
                    }
                }
            }
            CompositionTag::N8 => unreachable!(),
        }
        out
    }

    /// Coordinates in the order of `basis`.
    pub fn coords(&self) -> Vec<ExactScalar> {
        let mut out = Vec::new();
        let comps = unit_comp_indices(self.tag);
        for &(i, j) in OFFD.iter() {
            for &c in &comps {
                out.push(self.m.0[i][j].comp(c).clone());
            }
        }
        let d = |i: usize| &self.m.0[i][i];
        match self.tag {
            CompositionTag::N1 => {
                out.push(d(0).ap.clone());
                out.push(d(2).ap.neg());
            }
            CompositionTag::N2 => {
                out.push(d(0).ap.clone());
                out.push(d(2).ap.neg());
                out.push(d(0).am.clone());
                out.push(d(2).am.neg());
            }
            CompositionTag::N4 => {
                let third = ExactScalar::rational(1, 3);
                let lam = d(0).ap.add(&d(1).ap).add(&d(2).ap).mul(&third);
                out.push(d(0).ap.sub(&lam));
                out.push(d(2).ap.sub(&lam).neg());
                out.push(d(0).am.add(&lam));
                out.push(d(2).am.add(&lam).neg());
                out.push(lam);
                for c in [3usize, 6] {
                    for i in 0..3 {
                        out.push(d(i).comp(c).clone());
                    }
                }
            }
            CompositionTag::N8 => unreachable!(),
        }
        out
    }

    pub fn from_coords(tag: CompositionTag, c: &[ExactScalar]) -> InnerAlgebraElement {
        let b = InnerAlgebraElement::basis(tag);
        assert_eq!(b.len(), c.len());
        let mut out = InnerAlgebraElement::zero(tag);
        for (e, s) in b.iter().zip(c) {
            out = out.add(&e.scale(s));
        }
        out
    }

    pub fn random<R: Rng>(tag: CompositionTag, rng: &mut R) -> InnerAlgebraElement {
        let c: Vec<ExactScalar> =
            (0..InnerAlgebraElement::dim(tag)).map(|_| ExactScalar::random(rng)).collect();
        InnerAlgebraElement::from_coords(tag, &c)
    }
}

/// Split-basis coordinate slots of the tag's units, in unit order.
fn unit_comp_indices(tag: CompositionTag) -> Vec<usize> {
    match tag {
        CompositionTag::N1 => vec![0],
        CompositionTag::N2 => vec![0, 1],
        CompositionTag::N4 => vec![0, 1, 3, 6],
        CompositionTag::N8 => (0..8).collect(),
    }
}

/// Element of the block algebra: outer traceless part, inner traceless part,
/// and the two Jordan-matrix three-vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct ExcElement {
    a: Mat3,
    a1: InnerAlgebraElement,
    xp: [JordanElement; 3],
    xm: [JordanElement; 3],
}

impl ExcElement {
    pub fn new(
        a: Mat3,
        a1: InnerAlgebraElement,
        xp: [JordanElement; 3],
        xm: [JordanElement; 3],
    ) -> Result<ExcElement> {
        if !a.is_traceless() {
            return Err(Error::Invariant("outer matrix must be traceless".into()));
        }
        let tag = a1.tag();
        if xp.iter().chain(xm.iter()).any(|x| x.tag != tag) {
            return Err(Error::Invariant("mixed composition tags".into()));
        }
        Ok(ExcElement { a, a1, xp, xm })
    }

    pub fn zero(tag: CompositionTag) -> ExcElement {
        ExcElement {
            a: Mat3::zero(),
            a1: InnerAlgebraElement::zero(tag),
            xp: std::array::from_fn(|_| JordanElement::zero(tag)),
            xm: std::array::from_fn(|_| JordanElement::zero(tag)),
        }
    }

    pub fn tag(&self) -> CompositionTag {
        self.a1.tag()
    }

    pub fn outer(&self) -> &Mat3 {
        &self.a
    }

    pub fn inner(&self) -> &InnerAlgebraElement {
        &self.a1
    }

    pub fn xp(&self) -> &[JordanElement; 3] {
        &self.xp
    }

    pub fn xm(&self) -> &[JordanElement; 3] {
        &self.xm
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
            && self.a1.is_zero()
            && self.xp.iter().all(|x| x.is_zero())
            && self.xm.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &ExcElement) -> ExcElement {
        ExcElement {
            a: self.a.add(&o.a),
            a1: self.a1.add(&o.a1),
            xp: std::array::from_fn(|i| self.xp[i].add(&o.xp[i])),
            xm: std::array::from_fn(|i| self.xm[i].add(&o.xm[i])),
        }
    }

    pub fn sub(&self, o: &ExcElement) -> ExcElement {
        ExcElement {
            a: self.a.sub(&o.a),
            a1: self.a1.sub(&o.a1),
            xp: std::array::from_fn(|i| self.xp[i].sub(&o.xp[i])),
            xm: std::array::from_fn(|i| self.xm[i].sub(&o.xm[i])),
        }
    }

    pub fn neg(&self) -> ExcElement {
        ExcElement {
            a: self.a.neg(),
            a1: self.a1.neg(),
            xp: std::array::from_fn(|i| self.xp[i].neg()),
            xm: std::array::from_fn(|i| self.xm[i].neg()),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> ExcElement {
        ExcElement {
            a: self.a.scale(s),
            a1: self.a1.scale(s),
            xp: std::array::from_fn(|i| self.xp[i].scale(s)),
            xm: std::array::from_fn(|i| self.xm[i].scale(s)),
        }
    }

    /// The block commutator.  The outer part collects the scalar halves of
    /// the diamond products, the inner part their matrix halves; the vector
    /// parts mix the scalar action, the sandwich action of the inner part,
    /// and the sharp cross product of the opposite-block vectors.
    pub fn bracket(&self, o: &ExcElement) -> ExcElement {
        let tag = self.tag();
        assert_eq!(tag, o.tag());
        let (ds, di) = diamond(&self.xp, &o.xm);
        let (es, ei) = diamond(&o.xp, &self.xm);
        let a = self.a.commutator(&o.a).add(&ds).sub(&es);
        let a1 = self.a1.commutator(&o.a1).add(&di).sub(&ei);
        let cp = cross(&self.xm, &o.xm);
        let cm = cross(&self.xp, &o.xp);
        let xp: [JordanElement; 3] = std::array::from_fn(|i| {
            let mut t = cp[i].clone();
            for j in 0..3 {
                t = t
                    .add(&o.xp[j].scale(&self.a.0[i][j]))
                    .sub(&self.xp[j].scale(&o.a.0[i][j]));
            }
            t.add(&self.a1.act_on_jordan(&o.xp[i]))
                .sub(&o.a1.act_on_jordan(&self.xp[i]))
        });
        let xm: [JordanElement; 3] = std::array::from_fn(|i| {
            let mut t = cm[i].clone();
            for j in 0..3 {
                t = t
                    .sub(&o.xm[j].scale(&self.a.0[j][i]))
                    .add(&self.xm[j].scale(&o.a.0[j][i]));
            }
            t.sub(&self.a1.act_on_jordan_dagger(&o.xm[i]))
                .add(&o.a1.act_on_jordan_dagger(&self.xm[i]))
        });
        ExcElement { a, a1, xp, xm }
    }

    pub fn dim(tag: CompositionTag) -> usize {
        8 + InnerAlgebraElement::dim(tag) + 6 * JordanElement::dim(tag)
    }

    pub fn basis(tag: CompositionTag) -> Vec<ExcElement> {
        let mut out = Vec::new();
        for m in outer_basis() {
            let mut e = ExcElement::zero(tag);
            e.a = m;
            out.push(e);
        }
        for b in InnerAlgebraElement::basis(tag) {
            let mut e = ExcElement::zero(tag);
            e.a1 = b;
            out.push(e);
        }
        for slot in 0..3 {
            for b in JordanElement::basis(tag) {
                let mut e = ExcElement::zero(tag);
                e.xp[slot] = b;
                out.push(e);
            }
        }
        for slot in 0..3 {
            for b in JordanElement::basis(tag) {
                let mut e = ExcElement::zero(tag);
                e.xm[slot] = b;
                out.push(e);
            }
        }
        debug_assert_eq!(out.len(), ExcElement::dim(tag));
        out
    }

    pub fn basis_labels(tag: CompositionTag) -> Vec<String> {
        let mut out: Vec<String> =
            outer_basis_labels().iter().map(|s| format!("a:{s}")).collect();
        for l in InnerAlgebraElement::basis_labels(tag) {
            out.push(format!("a1:{l}"));
        }
        for side in ["xp", "xm"] {
            for slot in 1..=3 {
                for l in JordanElement::basis_labels(tag) {
                    out.push(format!("{side}{slot}:{l}"));
                }
            }
        }
        out
    }

    pub fn coords(&self) -> Vec<ExactScalar> {
        let mut out = vec![
            self.a.0[0][1].clone(),
            self.a.0[1][2].clone(),
            self.a.0[2][0].clone(),
            self.a.0[1][0].clone(),
            self.a.0[2][1].clone(),
            self.a.0[0][2].clone(),
            self.a.0[0][0].clone(),
            self.a.0[2][2].neg(),
        ];
        out.extend(self.a1.coords());
        for x in self.xp.iter().chain(self.xm.iter()) {
            out.extend(x.coords());
        }
        out
    }

    pub fn from_coords(tag: CompositionTag, c: &[ExactScalar]) -> ExcElement {
        assert_eq!(c.len(), ExcElement::dim(tag));
        let jd = JordanElement::dim(tag);
        let id = InnerAlgebraElement::dim(tag);
        let mut a = Mat3::zero();
        for (k, &(i, j)) in OFFD.iter().enumerate() {
            a.0[i][j] = c[k].clone();
        }
        let (d1, d2) = (&c[6], &c[7]);
        a.0[0][0] = d1.clone();
        a.0[1][1] = d2.sub(d1);
        a.0[2][2] = d2.neg();
        let a1 = InnerAlgebraElement::from_coords(tag, &c[8..8 + id]);
        let mut at = 8 + id;
        let xp: [JordanElement; 3] = std::array::from_fn(|_| {
            let x = JordanElement::from_coords(tag, &c[at..at + jd]);
            at += jd;
            x
        });
        let xm: [JordanElement; 3] = std::array::from_fn(|_| {
            let x = JordanElement::from_coords(tag, &c[at..at + jd]);
            at += jd;
            x
        });
        ExcElement { a, a1, xp, xm }
    }

    pub fn random<R: Rng>(tag: CompositionTag, rng: &mut R) -> ExcElement {
        let c: Vec<ExactScalar> =
            (0..ExcElement::dim(tag)).map(|_| ExactScalar::random(rng)).collect();
        ExcElement::from_coords(tag, &c)
    }
}

/// Basis of the outer traceless factor, off-diagonal first.
fn outer_basis() -> Vec<Mat3> {
    let mut out: Vec<Mat3> = OFFD.iter().map(|&(i, j)| Mat3::unit(i, j)).collect();
    let one = ExactScalar::one();
    out.push(Mat3::diag(one.clone(), one.neg(), ExactScalar::zero()));
    out.push(Mat3::diag(ExactScalar::zero(), one.clone(), one.neg()));
    out
}

fn outer_basis_labels() -> [&'static str; 8] {
    ["E12", "E23", "E31", "E21", "E32", "E13", "D1", "D2"]
}

/// The diamond product of opposite-block vectors: a traceless scalar matrix
/// together with a traceless inner matrix,
///   S_ij = (1/3) delta_ij sum_k t(x_k, y_k) - t(x_i, y_j),
///   C    = (1/3) sum_k t(x_k, y_k) I - sum_k x_k y_k  (raw matrix products).
pub fn diamond(
    xp: &[JordanElement; 3],
    ym: &[JordanElement; 3],
) -> (Mat3, InnerAlgebraElement) {
    let tag = xp[0].tag;
    let third = ExactScalar::rational(1, 3);
    let mut tsum = ExactScalar::zero();
    for k in 0..3 {
        tsum = tsum.add(&xp[k].trace_form(&ym[k]));
    }
    let tdiag = tsum.mul(&third);
    let mut s = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut v = xp[i].trace_form(&ym[j]).neg();
            if i == j {
                v = v.add(&tdiag);
            }
            s.0[i][j] = v;
        }
    }
    let mut c = OctMat3::scalar(&tdiag);
    for k in 0..3 {
        c = c.sub(&xp[k].to_raw().mul(&ym[k].to_raw()));
    }
    let inner = InnerAlgebraElement::new(tag, c).expect("diamond inner part is traceless");
    (s, inner)
}

/// The bullet companion of `diamond`: only the inner matrix half,
///   (1/3) sum_k t(x_k, y_k) I - sum_k x_k y_k.
pub fn bullet(xm: &[JordanElement; 3], yp: &[JordanElement; 3]) -> InnerAlgebraElement {
    let tag = xm[0].tag;
    let third = ExactScalar::rational(1, 3);
    let mut tsum = ExactScalar::zero();
    for k in 0..3 {
        tsum = tsum.add(&xm[k].trace_form(&yp[k]));
    }
    let mut c = OctMat3::scalar(&tsum.mul(&third));
    for k in 0..3 {
        c = c.sub(&xm[k].to_raw().mul(&yp[k].to_raw()));
    }
    InnerAlgebraElement::new(tag, c).expect("bullet part is traceless")
}

/// Epsilon-contracted sharp product of same-block vectors:
/// (x X y)_i = x_{i+1} # y_{i+2} - x_{i+2} # y_{i+1}.
pub fn cross(x: &[JordanElement; 3], y: &[JordanElement; 3]) -> [JordanElement; 3] {
    std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        x[j].sharp_lin(&y[k]).sub(&x[k].sharp_lin(&y[j]))
    })
}

/// One summand of the 27-dimensional module in the quaternionic splitting:
/// a full 3x3 scalar matrix plus two skew-symmetric matrix three-vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Fund27 {
    pub eta: Mat3,
    pub zeta: [Mat3; 3],
    pub xi: [Mat3; 3],
    pub sign: Sign,
}

impl Fund27 {
    pub fn new(eta: Mat3, zeta: [Mat3; 3], xi: [Mat3; 3], sign: Sign) -> Result<Fund27> {
        if zeta.iter().chain(xi.iter()).any(|m| !m.is_antisymmetric()) {
            return Err(Error::Invariant("module vectors must be skew-symmetric".into()));
        }
        Ok(Fund27 { eta, zeta, xi, sign })
    }

    pub fn zero(sign: Sign) -> Fund27 {
        Fund27 {
            eta: Mat3::zero(),
            zeta: std::array::from_fn(|_| Mat3::zero()),
            xi: std::array::from_fn(|_| Mat3::zero()),
            sign,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.eta.is_zero()
            && self.zeta.iter().all(|m| m.is_zero())
            && self.xi.iter().all(|m| m.is_zero())
    }

    pub fn add(&self, o: &Fund27) -> Fund27 {
        assert_eq!(self.sign, o.sign);
        Fund27 {
            eta: self.eta.add(&o.eta),
            zeta: std::array::from_fn(|i| self.zeta[i].add(&o.zeta[i])),
            xi: std::array::from_fn(|i| self.xi[i].add(&o.xi[i])),
            sign: self.sign,
        }
    }

    pub fn sub(&self, o: &Fund27) -> Fund27 {
        self.add(&o.scale(&ExactScalar::int(-1)))
    }

    pub fn scale(&self, s: &ExactScalar) -> Fund27 {
        Fund27 {
            eta: self.eta.scale(s),
            zeta: std::array::from_fn(|i| self.zeta[i].scale(s)),
            xi: std::array::from_fn(|i| self.xi[i].scale(s)),
            sign: self.sign,
        }
    }

    pub fn random<R: Rng>(sign: Sign, rng: &mut R) -> Fund27 {
        let mut eta = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                eta.0[i][j] = ExactScalar::random(rng);
            }
        }
        let skew = |rng: &mut R| {
            let mut m = Mat3::zero();
            for &(i, j) in OFF_POS.iter() {
                let v = ExactScalar::random(rng);
                m.0[i][j] = v.clone();
                m.0[j][i] = v.neg();
            }
            m
        };
        Fund27 {
            eta,
            zeta: std::array::from_fn(|_| skew(rng)),
            xi: std::array::from_fn(|_| skew(rng)),
            sign,
        }
    }
}

/// The central direction complementing the 78 + 27 + 27 split of the
/// 133-dimensional algebra: the multiple of u1 I on the inner diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaGenerator {
    pub lambda: ExactScalar,
}

/// Scalar-coefficient matrix of a Hermitian element on the idempotent picked
/// by `plus`; the opposite idempotent carries its transpose.
fn rho_component(x: &JordanElement, plus: bool) -> Mat3 {
    let raw = x.to_raw();
    let mut m = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            m.0[i][j] =
                if plus { raw.0[i][j].ap.clone() } else { raw.0[i][j].am.clone() };
        }
    }
    m
}

/// Skew coefficient matrix of a Hermitian element on the nilpotent unit
/// picked by `plus`.
fn eps_component(x: &JordanElement, plus: bool) -> Mat3 {
    let mut m = Mat3::zero();
    for (pos, &(i, j)) in OFF_POS.iter().enumerate() {
        let v = if plus { x.o[pos].vp.0[1].clone() } else { x.o[pos].vm.0[1].clone() };
        m.0[j][i] = v.neg();
        m.0[i][j] = v;
    }
    m
}

/// Hermitian bicomplex element from its scalar coefficient matrix on the
/// plus idempotent.
fn jordan_from_rho(p: &Mat3) -> JordanElement {
    let mut x = JordanElement::zero(CompositionTag::N2);
    for i in 0..3 {
        x.diag[i] = p.0[i][i].clone();
    }
    for (pos, &(i, j)) in OFF_POS.iter().enumerate() {
        x.o[pos] = SplitOctonion {
            ap: p.0[i][j].clone(),
            am: p.0[j][i].clone(),
            ..SplitOctonion::zero()
        };
    }
    x
}

/// Split a quaternionic block element into its bicomplex subalgebra part,
/// the central coefficient, and the two module summands.
pub fn e7_decompose(
    f: &ExcElement,
) -> Result<(ExcElement, LambdaGenerator, Fund27, Fund27)> {
    if f.tag() != CompositionTag::N4 {
        return Err(Error::Invariant("decomposition needs quaternionic entries".into()));
    }
    let m = &f.a1.m;
    let third = ExactScalar::rational(1, 3);
    let lambda = m.0[0][0].ap.add(&m.0[1][1].ap).add(&m.0[2][2].ap).mul(&third);
    let mut inner = OctMat3::zero();
    let mut eta_p = Mat3::zero();
    let mut eta_m = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            inner.0[i][j] = SplitOctonion {
                ap: m.0[i][j].ap.clone(),
                am: m.0[i][j].am.clone(),
                ..SplitOctonion::zero()
            };
            eta_p.0[i][j] = m.0[i][j].vp.0[1].clone();
            eta_m.0[i][j] = m.0[i][j].vm.0[1].clone();
        }
        inner.0[i][i].ap = inner.0[i][i].ap.sub(&lambda);
        inner.0[i][i].am = inner.0[i][i].am.add(&lambda);
    }
    let narrow = |x: &JordanElement| jordan_from_rho(&rho_component(x, true));
    let e6 = ExcElement {
        a: f.a.clone(),
        a1: InnerAlgebraElement::new(CompositionTag::N2, inner)?,
        xp: std::array::from_fn(|i| narrow(&f.xp[i])),
        xm: std::array::from_fn(|i| narrow(&f.xm[i])),
    };
    let plus = Fund27 {
        eta: eta_p,
        zeta: std::array::from_fn(|i| eps_component(&f.xp[i], true)),
        xi: std::array::from_fn(|i| eps_component(&f.xm[i], true)),
        sign: Sign::Plus,
    };
    let minus = Fund27 {
        eta: eta_m,
        zeta: std::array::from_fn(|i| eps_component(&f.xp[i], false)),
        xi: std::array::from_fn(|i| eps_component(&f.xm[i], false)),
        sign: Sign::Minus,
    };
    Ok((e6, LambdaGenerator { lambda }, plus, minus))
}

/// Inverse of `e7_decompose`.
pub fn e7_recompose(
    e6: &ExcElement,
    lam: &LambdaGenerator,
    plus: &Fund27,
    minus: &Fund27,
) -> Result<ExcElement> {
    if e6.tag() != CompositionTag::N2 {
        return Err(Error::Invariant("subalgebra part must have bicomplex entries".into()));
    }
    if plus.sign != Sign::Plus || minus.sign != Sign::Minus {
        return Err(Error::SignMismatch("module parts must come as (+, -)".into()));
    }
    let mut inner = e6.a1.m.clone();
    for i in 0..3 {
        inner.0[i][i].ap = inner.0[i][i].ap.add(&lam.lambda);
        inner.0[i][i].am = inner.0[i][i].am.sub(&lam.lambda);
        for j in 0..3 {
            inner.0[i][j].vp.0[1] = plus.eta.0[i][j].clone();
            inner.0[i][j].vm.0[1] = minus.eta.0[i][j].clone();
        }
    }
    let widen = |x: &JordanElement, zp: &Mat3, zm: &Mat3| {
        let mut w = x.clone();
        w.tag = CompositionTag::N4;
        for (pos, &(i, j)) in OFF_POS.iter().enumerate() {
            w.o[pos].vp.0[1] = zp.0[i][j].clone();
            w.o[pos].vm.0[1] = zm.0[i][j].clone();
        }
        w
    };
    Ok(ExcElement {
        a: e6.a.clone(),
        a1: InnerAlgebraElement::new(CompositionTag::N4, inner)?,
        xp: std::array::from_fn(|i| widen(&e6.xp[i], &plus.zeta[i], &minus.zeta[i])),
        xm: std::array::from_fn(|i| widen(&e6.xm[i], &plus.xi[i], &minus.xi[i])),
    })
}

/// Action of the 78-dimensional subalgebra plus the central generator on one
/// module summand.  The central generator acts as +2 lambda on the plus
/// summand and -2 lambda on the minus summand.
pub fn e6_act_on_27(g: &ExcElement, lam: &LambdaGenerator, v: &Fund27) -> Result<Fund27> {
    if g.tag() != CompositionTag::N2 {
        return Err(Error::Invariant("acting element must have bicomplex entries".into()));
    }
    let plus = v.sign == Sign::Plus;
    // Component matrices of the acting element on the module's own
    // idempotent side; the minus summand sees all idempotent roles swapped
    // and the central coefficient negated.
    let ais = |want_plus: bool| -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = if want_plus {
                    g.a1.m.0[i][j].ap.clone()
                } else {
                    g.a1.m.0[i][j].am.clone()
                };
            }
        }
        m
    };
    let a_same = ais(plus);
    let a_opp = ais(!plus);
    let xp_same: [Mat3; 3] = std::array::from_fn(|i| rho_component(&g.xp[i], plus));
    let xp_opp: [Mat3; 3] = std::array::from_fn(|i| rho_component(&g.xp[i], !plus));
    let zm_same: [Mat3; 3] = std::array::from_fn(|i| rho_component(&g.xm[i], plus));
    let zm_opp: [Mat3; 3] = std::array::from_fn(|i| rho_component(&g.xm[i], !plus));
    let two_lam = if plus {
        lam.lambda.mul_int(2)
    } else {
        lam.lambda.mul_int(-2)
    };

    let mut eta = a_same
        .mul(&v.eta)
        .sub(&v.eta.mul(&a_opp))
        .add(&v.eta.scale(&two_lam));
    for i in 0..3 {
        eta = eta.sub(&xp_same[i].mul(&v.xi[i])).add(&v.zeta[i].mul(&zm_opp[i]));
    }

    // Sharp-linearization of a Hermitian element against a skew module
    // entry, projected on the module's unit.
    let sand = |same: &Mat3, opp: &Mat3, tr: &ExactScalar, s: &Mat3| {
        same.mul(s).add(&s.mul(opp)).sub(&s.scale(tr))
    };
    let ztr: [ExactScalar; 3] = std::array::from_fn(|i| g.xm[i].trace());
    let xtr: [ExactScalar; 3] = std::array::from_fn(|i| g.xp[i].trace());

    let zeta: [Mat3; 3] = std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mut t = a_same
            .mul(&v.zeta[i])
            .add(&v.zeta[i].mul(&a_same.transpose()))
            .add(&xp_same[i].mul(&v.eta.transpose()))
            .sub(&v.eta.mul(&xp_opp[i]))
            .add(&v.zeta[i].scale(&two_lam));
        for m in 0..3 {
            t = t.add(&v.zeta[m].scale(&g.a.0[i][m]));
        }
        t.add(&sand(&zm_same[j], &zm_opp[j], &ztr[j], &v.xi[k]))
            .sub(&sand(&zm_same[k], &zm_opp[k], &ztr[k], &v.xi[j]))
    });

    let xi: [Mat3; 3] = std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mut t = a_opp
            .transpose()
            .mul(&v.xi[i])
            .add(&v.xi[i].mul(&a_opp))
            .neg()
            .add(&zm_same[i].mul(&v.eta))
            .sub(&v.eta.transpose().mul(&zm_opp[i]))
            .add(&v.xi[i].scale(&two_lam));
        for m in 0..3 {
            t = t.sub(&v.xi[m].scale(&g.a.0[m][i]));
        }
        t.add(&sand(&xp_same[j], &xp_opp[j], &xtr[j], &v.zeta[k]))
            .sub(&sand(&xp_same[k], &xp_opp[k], &xtr[k], &v.zeta[j]))
    });

    Fund27::new(eta, zeta, xi, v.sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TAGS: [CompositionTag; 3] =
        [CompositionTag::N1, CompositionTag::N2, CompositionTag::N4];

    #[test]
    fn dimensions_and_coordinates_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (tag, want) in TAGS.iter().zip([52usize, 78, 133]) {
            assert_eq!(ExcElement::dim(*tag), want);
            let b = ExcElement::basis(*tag);
            assert_eq!(b.len(), want);
            assert_eq!(ExcElement::basis_labels(*tag).len(), want);
            for _ in 0..5 {
                let f = ExcElement::random(*tag, &mut rng);
                assert_eq!(ExcElement::from_coords(*tag, &f.coords()), f);
            }
            // basis/coords agree: basis element k has the k-th unit vector
            for (k, e) in b.iter().enumerate() {
                let c = e.coords();
                for (i, v) in c.iter().enumerate() {
                    assert_eq!(!v.is_zero(), i == k, "basis {k} coordinate {i}");
                }
            }
        }
    }

    #[test]
    fn dagger_is_an_involution_and_twists_commutators() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for tag in TAGS {
            for _ in 0..100 {
                let a = InnerAlgebraElement::random(tag, &mut rng);
                let b = InnerAlgebraElement::random(tag, &mut rng);
                assert_eq!(a.dagger().dagger(), a);
                assert_eq!(
                    a.dagger().commutator(&b.dagger()),
                    a.commutator(&b).dagger().neg()
                );
            }
        }
        // plain transpose on scalar entries
        let mut m = OctMat3::zero();
        m.0[0][1] = SplitOctonion::one();
        let e12 = InnerAlgebraElement::new(CompositionTag::N1, m).unwrap();
        let mut t = OctMat3::zero();
        t.0[1][0] = SplitOctonion::one();
        assert_eq!(e12.dagger().m, t);
    }

    #[test]
    fn diamond_outputs_are_traceless_and_bullet_is_its_dagger() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for tag in TAGS {
            for _ in 0..70 {
                let x: [JordanElement; 3] =
                    std::array::from_fn(|_| JordanElement::random(tag, &mut rng));
                let y: [JordanElement; 3] =
                    std::array::from_fn(|_| JordanElement::random(tag, &mut rng));
                let (s, c) = diamond(&x, &y);
                assert!(s.is_traceless());
                // traceless as a matrix over the composition algebra, which
                // the constructor already certifies; check the full trace too
                let tr = c.m.trace();
                assert!(tr.ap.add(&tr.am).is_zero());
                assert_eq!(bullet(&y, &x), c.dagger());
            }
            let zero: [JordanElement; 3] =
                std::array::from_fn(|_| JordanElement::zero(tag));
            let y: [JordanElement; 3] =
                std::array::from_fn(|_| JordanElement::random(tag, &mut rng));
            let (s, c) = diamond(&zero, &y);
            assert!(s.is_zero() && c.is_zero());
        }
    }

    #[test]
    fn cross_special_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for tag in TAGS {
            // equal components annihilate
            let t = JordanElement::random(tag, &mut rng);
            let x: [JordanElement; 3] = std::array::from_fn(|_| t.clone());
            assert!(cross(&x, &x).iter().all(|c| c.is_zero()));

            // scalar-multiple-of-identity vectors double the wedge
            let a: [ExactScalar; 3] = std::array::from_fn(|_| ExactScalar::random(&mut rng));
            let b: [ExactScalar; 3] = std::array::from_fn(|_| ExactScalar::random(&mut rng));
            let av: [JordanElement; 3] =
                std::array::from_fn(|i| JordanElement::identity(tag).scale(&a[i]));
            let bv: [JordanElement; 3] =
                std::array::from_fn(|i| JordanElement::identity(tag).scale(&b[i]));
            let got = cross(&av, &bv);
            for i in 0..3 {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                let w = a[j].mul(&b[k]).sub(&a[k].mul(&b[j]));
                let want = JordanElement::identity(tag).scale(&w.mul_int(2));
                assert_eq!(got[i], want);
            }

            // against a traceless tensor the wedge flips sign and loses the 2
            let mut z = JordanElement::random(tag, &mut rng);
            let third = ExactScalar::rational(1, 3);
            z = z.sub(&JordanElement::identity(tag).scale(&z.trace().mul(&third)));
            assert!(z.trace().is_zero());
            let zv: [JordanElement; 3] = std::array::from_fn(|i| z.scale(&b[i]));
            let got = cross(&av, &zv);
            for i in 0..3 {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                let w = a[j].mul(&b[k]).sub(&a[k].mul(&b[j]));
                assert_eq!(got[i], z.scale(&w.neg()));
            }
        }
    }

    #[test]
    fn bracket_pure_blocks() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for tag in TAGS {
            // two pure outer blocks commute into the outer block
            let f = ExcElement::random(tag, &mut rng);
            let g = ExcElement::random(tag, &mut rng);
            let mut fa = ExcElement::zero(tag);
            fa.a = f.a.clone();
            let mut ga = ExcElement::zero(tag);
            ga.a = g.a.clone();
            let br = fa.bracket(&ga);
            assert_eq!(br.a, f.a.commutator(&g.a));
            assert!(br.a1.is_zero());
            assert!(br.xp.iter().all(|x| x.is_zero()));
            assert!(br.xm.iter().all(|x| x.is_zero()));

            // pure inner against pure vector: the sandwich action
            let mut fi = ExcElement::zero(tag);
            fi.a1 = f.a1.clone();
            let mut gv = ExcElement::zero(tag);
            gv.xp = g.xp.clone();
            let br = fi.bracket(&gv);
            assert!(br.a.is_zero() && br.a1.is_zero());
            for i in 0..3 {
                assert_eq!(br.xp[i], f.a1.act_on_jordan(&g.xp[i]));
                assert!(br.xm[i].is_zero());
            }
        }
    }

    #[test]
    fn sandwich_action_is_hermitian_on_random_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for tag in TAGS {
            for _ in 0..70 {
                let a1 = InnerAlgebraElement::random(tag, &mut rng);
                let y = JordanElement::random(tag, &mut rng);
                // from_raw_hermitian inside the action re-checks Hermiticity;
                // verify the raw matrix against its dagger as well
                let got = a1.act_on_jordan(&y).to_raw();
                assert_eq!(got.dagger(), got);
                let got = a1.act_on_jordan_dagger(&y).to_raw();
                assert_eq!(got.dagger(), got);
            }
        }
    }

    #[test]
    fn inner_commutator_keeps_the_trace_constraint() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for tag in TAGS {
            for _ in 0..100 {
                let a = InnerAlgebraElement::random(tag, &mut rng);
                let b = InnerAlgebraElement::random(tag, &mut rng);
                // the constructor inside validates; also re-validate explicitly
                let c = a.commutator(&b);
                assert!(InnerAlgebraElement::new(tag, c.m.clone()).is_ok());
            }
        }
    }

    #[test]
    fn quaternionic_split_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..50 {
            let f = ExcElement::random(CompositionTag::N4, &mut rng);
            let (e6, lam, p, m) = e7_decompose(&f).unwrap();
            assert_eq!(e6.tag(), CompositionTag::N2);
            let back = e7_recompose(&e6, &lam, &p, &m).unwrap();
            assert_eq!(back, f);
        }
        // 78 + 1 + 27 + 27 = 133
        assert_eq!(
            ExcElement::dim(CompositionTag::N2) + 1 + 27 + 27,
            ExcElement::dim(CompositionTag::N4)
        );
    }

    #[test]
    fn central_coefficient_is_the_u1_multiple() {
        let lam = ExactScalar::sqrt2();
        let u1 = SplitOctonion::rho_p().sub(&SplitOctonion::rho_m());
        let mut m = OctMat3::zero();
        for i in 0..3 {
            m.0[i][i] = u1.scale(&lam);
        }
        let mut f = ExcElement::zero(CompositionTag::N4);
        f.a1 = InnerAlgebraElement::new(CompositionTag::N4, m).unwrap();
        let (e6, l, p, mm) = e7_decompose(&f).unwrap();
        assert_eq!(l.lambda, lam);
        assert!(e6.is_zero() && p.is_zero() && mm.is_zero());
    }

    #[test]
    fn central_generator_scales_the_modules() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let lam = LambdaGenerator { lambda: ExactScalar::random(&mut rng) };
        let g = ExcElement::zero(CompositionTag::N2);
        for (sign, factor) in [(Sign::Plus, 2), (Sign::Minus, -2)] {
            let v = Fund27::random(sign, &mut rng);
            let got = e6_act_on_27(&g, &lam, &v).unwrap();
            assert_eq!(got, v.scale(&lam.lambda.mul_int(factor)));
        }
    }

    /// The module action must agree with the quaternionic bracket under the
    /// embedding, and the bracket of a subalgebra element with a one-sided
    /// module element must stay one-sided.
    #[test]
    fn module_action_matches_the_embedded_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let z27 = |sign| Fund27::zero(sign);
        for _ in 0..40 {
            let g = {
                let mut g = ExcElement::random(CompositionTag::N2, &mut rng);
                // strip any accidental module mixing: g is a full random
                // bicomplex element already, nothing to strip; keep as is
                g.a1 = InnerAlgebraElement::from_coords(
                    CompositionTag::N2,
                    &g.a1.coords(),
                );
                g
            };
            let lam = LambdaGenerator { lambda: ExactScalar::random(&mut rng) };
            for sign in [Sign::Plus, Sign::Minus] {
                let v = Fund27::random(sign, &mut rng);
                let embedded_g =
                    e7_recompose(&g, &lam, &z27(Sign::Plus), &z27(Sign::Minus)).unwrap();
                let embedded_v = match sign {
                    Sign::Plus => e7_recompose(
                        &ExcElement::zero(CompositionTag::N2),
                        &LambdaGenerator { lambda: ExactScalar::zero() },
                        &v,
                        &z27(Sign::Minus),
                    )
                    .unwrap(),
                    Sign::Minus => e7_recompose(
                        &ExcElement::zero(CompositionTag::N2),
                        &LambdaGenerator { lambda: ExactScalar::zero() },
                        &z27(Sign::Plus),
                        &v,
                    )
                    .unwrap(),
                };
                let br = embedded_g.bracket(&embedded_v);
                let (e6_part, lam_part, p, m) = e7_decompose(&br).unwrap();
                assert!(e6_part.is_zero(), "bracket leaks into the subalgebra");
                assert!(lam_part.lambda.is_zero());
                let (same, other) = match sign {
                    Sign::Plus => (p, m),
                    Sign::Minus => (m, p),
                };
                assert!(other.is_zero(), "bracket flips the module side");
                let direct = e6_act_on_27(&g, &lam, &v).unwrap();
                assert_eq!(direct, same);
            }
        }
    }

    #[test]
    fn module_action_is_a_representation() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let zero_lam = LambdaGenerator { lambda: ExactScalar::zero() };
        for _ in 0..25 {
            let g = ExcElement::random(CompositionTag::N2, &mut rng);
            let h = ExcElement::random(CompositionTag::N2, &mut rng);
            let lg = LambdaGenerator { lambda: ExactScalar::random(&mut rng) };
            let lh = LambdaGenerator { lambda: ExactScalar::random(&mut rng) };
            for sign in [Sign::Plus, Sign::Minus] {
                let v = Fund27::random(sign, &mut rng);
                // the central generator commutes with everything, so the
                // bracket of g + lambda_g and h + lambda_h is [g, h] alone
                let lhs =
                    e6_act_on_27(&g.bracket(&h), &zero_lam, &v).unwrap();
                let rhs = e6_act_on_27(&g, &lg, &e6_act_on_27(&h, &lh, &v).unwrap())
                    .unwrap()
                    .sub(&e6_act_on_27(&h, &lh, &e6_act_on_27(&g, &lg, &v).unwrap()).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}

//! The 248-dimensional algebra over octonion-entry Jordan matrices.
//!
//! The block shape matches the smaller cases, but octonion entries stop
//! associating, so the inner part of the upper-left block is no longer a
//! matrix: it becomes an operator on the 27-dimensional Jordan algebra,
//! stored as a Jordan multiplication `L_z` by a traceless element plus a
//! derivation `F`.  The conjugate block carries `L_z - F`, and the vector
//! actions pick up a factor of two.

use crate::error::{Error, Result};
use crate::exc::cross;
use crate::jordan::JordanElement;
use crate::linalg::Mat3;
use crate::octonion::CompositionTag;
use crate::scalar::ExactScalar;
use rand::Rng;
use std::sync::OnceLock;

pub const E8_DIM: usize = 248;
const J27: usize = 27;
const TAG: CompositionTag = CompositionTag::N8;

/// Linear operator on the 27-dimensional Jordan algebra, stored by columns
/// in the canonical basis.  The zero operator carries no allocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Op27 {
    m: Option<Box<[[ExactScalar; J27]; J27]>>,
}

fn scalar_grid() -> Box<[[ExactScalar; J27]; J27]> {
    Box::new(std::array::from_fn(|_| std::array::from_fn(|_| ExactScalar::zero())))
}

impl Op27 {
    pub fn zero() -> Op27 {
        Op27 { m: None }
    }

    pub fn is_zero(&self) -> bool {
        match &self.m {
            None => true,
            Some(m) => m.iter().all(|row| row.iter().all(|v| v.is_zero())),
        }
    }

    /// Operator sending the k-th canonical basis element to `images[k]`.
    pub fn from_images(images: &[JordanElement]) -> Op27 {
        assert_eq!(images.len(), J27);
        let mut m = scalar_grid();
        for (c, img) in images.iter().enumerate() {
            assert_eq!(img.tag, TAG);
            for (r, v) in img.coords().into_iter().enumerate() {
                m[r][c] = v;
            }
        }
        Op27 { m: Some(m) }
    }

    /// Image of the k-th canonical basis element.
    pub fn column(&self, c: usize) -> JordanElement {
        match &self.m {
            None => JordanElement::zero(TAG),
            Some(m) => {
                let coords: Vec<ExactScalar> = (0..J27).map(|r| m[r][c].clone()).collect();
                JordanElement::from_coords(TAG, &coords)
            }
        }
    }

    pub fn apply(&self, x: &JordanElement) -> JordanElement {
        let Some(m) = &self.m else {
            return JordanElement::zero(TAG);
        };
        let cx = x.coords();
        let mut out = vec![ExactScalar::zero(); J27];
        for (c, v) in cx.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for r in 0..J27 {
                if !m[r][c].is_zero() {
                    out[r] = out[r].add(&m[r][c].mul(v));
                }
            }
        }
        JordanElement::from_coords(TAG, &out)
    }

    pub fn add(&self, o: &Op27) -> Op27 {
        match (&self.m, &o.m) {
            (None, _) => o.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => {
                let mut m = scalar_grid();
                for r in 0..J27 {
                    for c in 0..J27 {
                        m[r][c] = a[r][c].add(&b[r][c]);
                    }
                }
                Op27 { m: Some(m) }
            }
        }
    }

    pub fn sub(&self, o: &Op27) -> Op27 {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Op27 {
        match &self.m {
            None => Op27::zero(),
            Some(a) => {
                let mut m = scalar_grid();
                for r in 0..J27 {
                    for c in 0..J27 {
                        m[r][c] = a[r][c].neg();
                    }
                }
                Op27 { m: Some(m) }
            }
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Op27 {
        match &self.m {
            None => Op27::zero(),
            Some(a) => {
                let mut m = scalar_grid();
                for r in 0..J27 {
                    for c in 0..J27 {
                        if !a[r][c].is_zero() {
                            m[r][c] = a[r][c].mul(s);
                        }
                    }
                }
                Op27 { m: Some(m) }
            }
        }
    }

    /// self after o.
    pub fn compose(&self, o: &Op27) -> Op27 {
        let (Some(a), Some(b)) = (&self.m, &o.m) else {
            return Op27::zero();
        };
        let mut m = scalar_grid();
        for k in 0..J27 {
            for c in 0..J27 {
                if b[k][c].is_zero() {
                    continue;
                }
                for r in 0..J27 {
                    if !a[r][k].is_zero() {
                        m[r][c] = m[r][c].add(&a[r][k].mul(&b[k][c]));
                    }
                }
            }
        }
        Op27 { m: Some(m) }
    }

    pub fn commutator(&self, o: &Op27) -> Op27 {
        self.compose(o).sub(&o.compose(self))
    }

    /// Row-major flattening to a 729-vector.
    pub fn flatten(&self) -> Vec<ExactScalar> {
        match &self.m {
            None => vec![ExactScalar::zero(); J27 * J27],
            Some(m) => m.iter().flat_map(|row| row.iter().cloned()).collect(),
        }
    }
}

/// Jordan multiplication operator by `z`.
pub fn lmul(z: &JordanElement) -> Op27 {
    assert_eq!(z.tag, TAG);
    if z.is_zero() {
        return Op27::zero();
    }
    let images: Vec<JordanElement> =
        JordanElement::basis(TAG).iter().map(|b| z.jordan_mul(b)).collect();
    Op27::from_images(&images)
}

/// Operator certified to differentiate the Jordan product: it annihilates
/// the identity, produces traceless values, and satisfies the Leibniz rule
/// on every pair of canonical basis elements.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivationOperator(Op27);

impl DerivationOperator {
    pub fn new(op: Op27) -> Result<DerivationOperator> {
        if !op.apply(&JordanElement::identity(TAG)).is_zero() {
            return Err(Error::Invariant("derivation must annihilate the identity".into()));
        }
        let basis = JordanElement::basis(TAG);
        let images: Vec<JordanElement> = (0..J27).map(|c| op.column(c)).collect();
        for img in &images {
            if !img.trace().is_zero() {
                return Err(Error::Invariant("derivation must kill traces".into()));
            }
        }
        for i in 0..J27 {
            for j in i..J27 {
                let lhs = op.apply(&basis[i].jordan_mul(&basis[j]));
                let rhs = images[i].jordan_mul(&basis[j]).add(&basis[i].jordan_mul(&images[j]));
                if lhs != rhs {
                    return Err(Error::Invariant(format!(
                        "Leibniz rule fails on basis pair ({i},{j})"
                    )));
                }
            }
        }
        Ok(DerivationOperator(op))
    }

    pub fn op(&self) -> &Op27 {
        &self.0
    }

    pub fn into_op(self) -> Op27 {
        self.0
    }
}

/// Inner part of the upper-left block: multiplication by a traceless
/// element plus a derivation.  The conjugate block sees the derivation with
/// the opposite sign.
#[derive(Clone, Debug, PartialEq)]
pub struct E6Operator {
    z: JordanElement,
    f: Op27,
}

impl E6Operator {
    pub fn new(z: JordanElement, f: Op27) -> Result<E6Operator> {
        if z.tag != TAG {
            return Err(Error::Invariant("multiplication part must have octonion entries".into()));
        }
        if !z.trace().is_zero() {
            return Err(Error::Invariant("multiplication part must be traceless".into()));
        }
        Ok(E6Operator { z, f })
    }

    pub fn zero() -> E6Operator {
        E6Operator { z: JordanElement::zero(TAG), f: Op27::zero() }
    }

    pub fn z(&self) -> &JordanElement {
        &self.z
    }

    pub fn f(&self) -> &Op27 {
        &self.f
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.f.is_zero()
    }

    pub fn add(&self, o: &E6Operator) -> E6Operator {
        E6Operator { z: self.z.add(&o.z), f: self.f.add(&o.f) }
    }

    pub fn sub(&self, o: &E6Operator) -> E6Operator {
        E6Operator { z: self.z.sub(&o.z), f: self.f.sub(&o.f) }
    }

    pub fn neg(&self) -> E6Operator {
        E6Operator { z: self.z.neg(), f: self.f.neg() }
    }

    pub fn scale(&self, s: &ExactScalar) -> E6Operator {
        E6Operator { z: self.z.scale(s), f: self.f.scale(s) }
    }

    pub fn dagger(&self) -> E6Operator {
        E6Operator { z: self.z.clone(), f: self.f.neg() }
    }

    pub fn apply(&self, x: &JordanElement) -> JordanElement {
        self.z.jordan_mul(x).add(&self.f.apply(x))
    }

    pub fn apply_dagger(&self, x: &JordanElement) -> JordanElement {
        self.z.jordan_mul(x).sub(&self.f.apply(x))
    }

    /// [L_z + F, L_w + G] = L_{F(w) - G(z)} + [L_z, L_w] + [F, G].
    pub fn commutator(&self, o: &E6Operator) -> E6Operator {
        let z = self.f.apply(&o.z).sub(&o.f.apply(&self.z));
        let f = lmul(&self.z)
            .commutator(&lmul(&o.z))
            .add(&self.f.commutator(&o.f));
        E6Operator { z, f }
    }

    pub fn as_operator(&self) -> Op27 {
        lmul(&self.z).add(&self.f)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct E8Element {
    a: Mat3,
    a1: E6Operator,
    xp: [JordanElement; 3],
    xm: [JordanElement; 3],
}

impl E8Element {
    pub fn new(
        a: Mat3,
        a1: E6Operator,
        xp: [JordanElement; 3],
        xm: [JordanElement; 3],
    ) -> Result<E8Element> {
        if !a.is_traceless() {
            return Err(Error::Invariant("outer matrix must be traceless".into()));
        }
        if xp.iter().chain(xm.iter()).any(|x| x.tag != TAG) {
            return Err(Error::Invariant("vector entries must have octonion entries".into()));
        }
        Ok(E8Element { a, a1, xp, xm })
    }

    pub fn zero() -> E8Element {
        E8Element {
            a: Mat3::zero(),
            a1: E6Operator::zero(),
            xp: std::array::from_fn(|_| JordanElement::zero(TAG)),
            xm: std::array::from_fn(|_| JordanElement::zero(TAG)),
        }
    }

    pub fn outer(&self) -> &Mat3 {
        &self.a
    }

    pub fn inner(&self) -> &E6Operator {
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

    pub fn add(&self, o: &E8Element) -> E8Element {
        E8Element {
            a: self.a.add(&o.a),
            a1: self.a1.add(&o.a1),
            xp: std::array::from_fn(|i| self.xp[i].add(&o.xp[i])),
            xm: std::array::from_fn(|i| self.xm[i].add(&o.xm[i])),
        }
    }

    pub fn sub(&self, o: &E8Element) -> E8Element {
        E8Element {
            a: self.a.sub(&o.a),
            a1: self.a1.sub(&o.a1),
            xp: std::array::from_fn(|i| self.xp[i].sub(&o.xp[i])),
            xm: std::array::from_fn(|i| self.xm[i].sub(&o.xm[i])),
        }
    }

    pub fn neg(&self) -> E8Element {
        E8Element {
            a: self.a.neg(),
            a1: self.a1.neg(),
            xp: std::array::from_fn(|i| self.xp[i].neg()),
            xm: std::array::from_fn(|i| self.xm[i].neg()),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> E8Element {
        E8Element {
            a: self.a.scale(s),
            a1: self.a1.scale(s),
            xp: std::array::from_fn(|i| self.xp[i].scale(s)),
            xm: std::array::from_fn(|i| self.xm[i].scale(s)),
        }
    }

    pub fn bracket(&self, o: &E8Element) -> E8Element {
        let two = ExactScalar::int(2);
        let (ds, di) = diamond_e8(&self.xp, &o.xm);
        let (es, ei) = diamond_e8(&o.xp, &self.xm);
        let a = self.a.commutator(&o.a).add(&ds).sub(&es);
        let a1 = self.a1.commutator(&o.a1).scale(&two).add(&di).sub(&ei);
        let cp = cross(&self.xm, &o.xm);
        let cm = cross(&self.xp, &o.xp);
        let xp: [JordanElement; 3] = std::array::from_fn(|i| {
            let mut t = cp[i].clone();
            for j in 0..3 {
                t = t
                    .add(&o.xp[j].scale(&self.a.0[i][j]))
                    .sub(&self.xp[j].scale(&o.a.0[i][j]));
            }
            t.add(&self.a1.apply(&o.xp[i]).scale(&two))
                .sub(&o.a1.apply(&self.xp[i]).scale(&two))
        });
        let xm: [JordanElement; 3] = std::array::from_fn(|i| {
            let mut t = cm[i].clone();
            for j in 0..3 {
                t = t
                    .sub(&o.xm[j].scale(&self.a.0[j][i]))
                    .add(&self.xm[j].scale(&o.a.0[j][i]));
            }
            t.sub(&self.a1.apply_dagger(&o.xm[i]).scale(&two))
                .add(&o.a1.apply_dagger(&self.xm[i]).scale(&two))
        });
        E8Element { a, a1, xp, xm }
    }

    pub fn dim() -> usize {
        E8_DIM
    }

    pub fn basis() -> &'static [E8Element] {
        &basis_data().elements
    }

    pub fn basis_labels() -> Vec<String> {
        let mut out: Vec<String> = ["E12", "E23", "E31", "E21", "E32", "E13", "D1", "D2"]
            .iter()
            .map(|s| format!("a:{s}"))
            .collect();
        let jl = JordanElement::basis_labels(TAG);
        out.push("z:D1".into());
        out.push("z:D2".into());
        for l in &jl[3..] {
            out.push(format!("z:{l}"));
        }
        for &(i, j) in &basis_data().pivot_pairs {
            out.push(format!("F:[L({}),L({})]", jl[i], jl[j]));
        }
        for side in ["xp", "xm"] {
            for slot in 1..=3 {
                for l in &jl {
                    out.push(format!("{side}{slot}:{l}"));
                }
            }
        }
        out
    }

    pub fn coords(&self) -> Vec<ExactScalar> {
        let data = basis_data();
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
        let zc = self.a1.z.coords();
        out.push(zc[0].clone());
        out.push(zc[2].neg());
        out.extend(zc[3..].iter().cloned());
        let fc = data
            .solver
            .solve(&self.a1.f.flatten())
            .expect("derivation part must lie in the pivot span");
        out.extend(fc);
        for x in self.xp.iter().chain(self.xm.iter()) {
            out.extend(x.coords());
        }
        debug_assert_eq!(out.len(), E8_DIM);
        out
    }

    pub fn from_coords(c: &[ExactScalar]) -> E8Element {
        assert_eq!(c.len(), E8_DIM);
        let mut out = E8Element::zero();
        for (v, b) in c.iter().zip(E8Element::basis()) {
            if !v.is_zero() {
                out = out.add(&b.scale(v));
            }
        }
        out
    }

    pub fn random<R: Rng>(rng: &mut R) -> E8Element {
        let c: Vec<ExactScalar> = (0..E8_DIM).map(|_| ExactScalar::random(rng)).collect();
        E8Element::from_coords(&c)
    }

    /// Random element supported on `k` random basis directions.
    pub fn random_sparse<R: Rng>(k: usize, rng: &mut R) -> E8Element {
        let mut out = E8Element::zero();
        for _ in 0..k {
            let idx = rng.gen_range(0..E8_DIM);
            let v = ExactScalar::int(rng.gen_range(-2i64..=2));
            if !v.is_zero() {
                out = out.add(&E8Element::basis()[idx].scale(&v));
            }
        }
        out
    }
}

/// Scalar and operator halves of the product of opposite-block vectors.
/// The scalar half matches the smaller cases; the operator half is
/// multiplication by the traceless part of the Jordan products plus the
/// derivation -sum [L_x, L_y].
pub fn diamond_e8(xp: &[JordanElement; 3], ym: &[JordanElement; 3]) -> (Mat3, E6Operator) {
    let third = ExactScalar::rational(1, 3);
    let mut tsum = ExactScalar::zero();
    for k in 0..3 {
        if !xp[k].is_zero() && !ym[k].is_zero() {
            tsum = tsum.add(&xp[k].trace_form(&ym[k]));
        }
    }
    let tdiag = tsum.mul(&third);
    let mut s = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut v = if xp[i].is_zero() || ym[j].is_zero() {
                ExactScalar::zero()
            } else {
                xp[i].trace_form(&ym[j]).neg()
            };
            if i == j {
                v = v.add(&tdiag);
            }
            s.0[i][j] = v;
        }
    }
    let mut z = JordanElement::identity(TAG).scale(&tdiag);
    let mut f = Op27::zero();
    for k in 0..3 {
        if xp[k].is_zero() || ym[k].is_zero() {
            continue;
        }
        z = z.sub(&xp[k].jordan_mul(&ym[k]));
        f = f.sub(&lmul(&xp[k]).commutator(&lmul(&ym[k])));
    }
    let inner = E6Operator::new(z, f).expect("diamond multiplication part is traceless");
    (s, inner)
}

/// Operator half with the arguments in opposite-block order; equals the
/// dagger of the diamond operator half with the arguments swapped.
pub fn bullet_e8(xm: &[JordanElement; 3], yp: &[JordanElement; 3]) -> E6Operator {
    diamond_e8(yp, xm).1.dagger()
}

/// Lexicographic basis pairs whose bracket operators [L_i, L_j] span the
/// derivations; there are exactly 52.
pub fn derivation_pivot_pairs() -> &'static [(usize, usize)] {
    &basis_data().pivot_pairs
}

struct BasisData {
    elements: Vec<E8Element>,
    pivot_pairs: Vec<(usize, usize)>,
    solver: SpanSolver,
}

static BASIS_DATA: OnceLock<BasisData> = OnceLock::new();

fn basis_data() -> &'static BasisData {
    BASIS_DATA.get_or_init(build_basis)
}

fn build_basis() -> BasisData {
    let jb = JordanElement::basis(TAG);
    let mut elements = Vec::with_capacity(E8_DIM);
    // outer block
    let one = ExactScalar::one;
    let mut outer: Vec<Mat3> = [(0, 1), (1, 2), (2, 0), (1, 0), (2, 1), (0, 2)]
        .iter()
        .map(|&(i, j)| Mat3::unit(i, j))
        .collect();
    outer.push(Mat3::diag(one(), one().neg(), ExactScalar::zero()));
    outer.push(Mat3::diag(ExactScalar::zero(), one(), one().neg()));
    for a in outer {
        let mut e = E8Element::zero();
        e.a = a;
        elements.push(e);
    }
    // traceless multiplication directions
    let mut zdirs = vec![jb[0].sub(&jb[1]), jb[1].sub(&jb[2])];
    zdirs.extend(jb[3..].iter().cloned());
    for z in zdirs {
        let mut e = E8Element::zero();
        e.a1 = E6Operator::new(z, Op27::zero()).expect("traceless direction");
        elements.push(e);
    }
    // derivation pivots
    let mut solver = SpanSolver::new(J27 * J27);
    let mut pivot_pairs = Vec::new();
    let ops: Vec<Op27> = jb.iter().map(lmul).collect();
    for i in 0..J27 {
        for j in i + 1..J27 {
            let cand = ops[i].commutator(&ops[j]);
            if solver.insert(&cand.flatten()) {
                pivot_pairs.push((i, j));
                let f = DerivationOperator::new(cand)
                    .expect("bracket of multiplications is a derivation")
                    .into_op();
                let mut e = E8Element::zero();
                e.a1 = E6Operator::new(JordanElement::zero(TAG), f).expect("zero is traceless");
                elements.push(e);
            }
        }
    }
    assert_eq!(pivot_pairs.len(), 52, "derivation span must have rank 52");
    // vector blocks
    for slot in 0..3 {
        for b in &jb {
            let mut e = E8Element::zero();
            e.xp[slot] = b.clone();
            elements.push(e);
        }
    }
    for slot in 0..3 {
        for b in &jb {
            let mut e = E8Element::zero();
            e.xm[slot] = b.clone();
            elements.push(e);
        }
    }
    assert_eq!(elements.len(), E8_DIM);
    BasisData { elements, pivot_pairs, solver }
}

/// Row-echelon span that remembers how each reduced row combines the
/// retained generators, so membership comes with coordinates.
struct SpanSolver {
    width: usize,
    rows: Vec<Vec<ExactScalar>>,
    combos: Vec<Vec<ExactScalar>>,
    pivots: Vec<usize>,
    gens: usize,
}

impl SpanSolver {
    fn new(width: usize) -> SpanSolver {
        SpanSolver { width, rows: Vec::new(), combos: Vec::new(), pivots: Vec::new(), gens: 0 }
    }

    /// Adds a generator when it grows the span; rejected rows leave the
    /// solver untouched.
    fn insert(&mut self, row: &[ExactScalar]) -> bool {
        assert_eq!(row.len(), self.width);
        let mut rem = row.to_vec();
        let mut combo = vec![ExactScalar::zero(); self.gens + 1];
        combo[self.gens] = ExactScalar::one();
        for ((r, cb), &p) in self.rows.iter().zip(&self.combos).zip(&self.pivots) {
            if rem[p].is_zero() {
                continue;
            }
            let f = rem[p].clone();
            for k in 0..self.width {
                if !r[k].is_zero() {
                    rem[k] = rem[k].sub(&f.mul(&r[k]));
                }
            }
            for (k, v) in cb.iter().enumerate() {
                if !v.is_zero() {
                    combo[k] = combo[k].sub(&f.mul(v));
                }
            }
        }
        let Some(p) = rem.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = rem[p].inv().expect("nonzero pivot");
        for c in rem.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&inv);
            }
        }
        for c in combo.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&inv);
            }
        }
        self.rows.push(rem);
        self.combos.push(combo);
        self.pivots.push(p);
        self.gens += 1;
        true
    }

    /// Coordinates of `target` over the retained generators, if it lies in
    /// the span.
    fn solve(&self, target: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
        assert_eq!(target.len(), self.width);
        let mut rem = target.to_vec();
        let mut acc = vec![ExactScalar::zero(); self.gens];
        for ((r, cb), &p) in self.rows.iter().zip(&self.combos).zip(&self.pivots) {
            if rem[p].is_zero() {
                continue;
            }
            let f = rem[p].clone();
            for k in 0..self.width {
                if !r[k].is_zero() {
                    rem[k] = rem[k].sub(&f.mul(&r[k]));
                }
            }
            for (k, v) in cb.iter().enumerate() {
                if !v.is_zero() {
                    acc[k] = acc[k].add(&f.mul(v));
                }
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(acc)
    }
}

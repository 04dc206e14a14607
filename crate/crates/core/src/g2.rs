//! The 14-dimensional Lie algebra of octonion derivations, as 4x4 Zorn-type
//! matrices.
//!
//! Elements are blocks `[[a, A+], [A-, *]]` with `a` a 3x3 matrix and A+/A-
//! a column/row 3-vector; the (2,2) slot is the trace of `a` and is never
//! stored. The product couples the vector slots through the traceless
//! composition `A+ o B- = <A+,B-> I - 3 A+B-` and the vector cross product.
//! Restricting to traceless `a` and taking commutators gives the adjoint
//! representation; its action on octonions (as Zorn matrices) recovers the
//! derivations D_{a,b} c = [[a,b],c]/3 - (a,b,c).

use crate::linalg::{Mat3, Vec3};
use crate::octonion::SplitOctonion;
use crate::scalar::{ExactScalar, Rat};
use rand::Rng;

/// Traceless composition of a column and a row vector.
pub fn circ(ap: &Vec3, bm: &Vec3) -> Mat3 {
    Mat3::scalar(&ap.dot(bm)).sub(&Mat3::outer(ap, bm).scale(&ExactScalar::int(3)))
}

/// Zorn-type 4x4 block with unconstrained 3x3 part.
#[derive(Clone, Debug, PartialEq)]
pub struct Zorn4Element {
    pub a: Mat3,
    pub vp: Vec3,
    pub vm: Vec3,
}

impl Zorn4Element {
    pub fn zero() -> Zorn4Element {
        Zorn4Element { a: Mat3::zero(), vp: Vec3::zero(), vm: Vec3::zero() }
    }

    /// Block product: the 3x3 slots multiply as matrices plus the circ
    /// coupling; each vector picks up a matrix action and a cross product.
    pub fn mul(&self, o: &Zorn4Element) -> Zorn4Element {
        Zorn4Element {
            a: self.a.mul(&o.a).add(&circ(&self.vp, &o.vm)),
            vp: o.vp.mul_mat_left(&self.a).add(&self.vm.cross(&o.vm)),
            vm: self.vm.mul_mat(&o.a).add(&self.vp.cross(&o.vp)),
        }
    }
}

/// Element of the derivation algebra: traceless 3x3 part plus two 3-vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Element {
    pub a: Mat3,
    pub vp: Vec3,
    pub vm: Vec3,
}

pub const G2_DIM: usize = 14;

impl G2Element {
    pub fn zero() -> G2Element {
        G2Element { a: Mat3::zero(), vp: Vec3::zero(), vm: Vec3::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.vp.is_zero() && self.vm.is_zero()
    }

    pub fn add(&self, o: &G2Element) -> G2Element {
        G2Element { a: self.a.add(&o.a), vp: self.vp.add(&o.vp), vm: self.vm.add(&o.vm) }
    }

    pub fn sub(&self, o: &G2Element) -> G2Element {
        G2Element { a: self.a.sub(&o.a), vp: self.vp.sub(&o.vp), vm: self.vm.sub(&o.vm) }
    }

    pub fn neg(&self) -> G2Element {
        G2Element { a: self.a.neg(), vp: self.vp.neg(), vm: self.vm.neg() }
    }

    pub fn scale(&self, s: &ExactScalar) -> G2Element {
        G2Element { a: self.a.scale(s), vp: self.vp.scale(s), vm: self.vm.scale(s) }
    }

    /// Commutator; closed on traceless 3x3 parts.
    pub fn bracket(&self, o: &G2Element) -> G2Element {
        let two = ExactScalar::int(2);
        G2Element {
            a: self
                .a
                .commutator(&o.a)
                .add(&circ(&self.vp, &o.vm))
                .sub(&circ(&o.vp, &self.vm)),
            vp: o.vp
                .mul_mat_left(&self.a)
                .sub(&self.vp.mul_mat_left(&o.a))
                .add(&self.vm.cross(&o.vm).scale(&two)),
            vm: self
                .vm
                .mul_mat(&o.a)
                .sub(&o.vm.mul_mat(&self.a))
                .add(&self.vp.cross(&o.vp).scale(&two)),
        }
    }

    /// Adjoint action on an octonion in Zorn form.
    pub fn act_on_octonion(&self, o: &SplitOctonion) -> SplitOctonion {
        let diff = o.am.sub(&o.ap);
        let ap = self.vm.dot(&o.vp).sub(&o.vm.dot(&self.vp));
        SplitOctonion {
            am: ap.neg(),
            ap,
            vp: o.vp
                .mul_mat_left(&self.a)
                .add(&self.vp.scale(&diff))
                .sub(&self.vm.cross(&o.vm)),
            vm: o.vm
                .mul_mat(&self.a)
                .neg()
                .sub(&self.vm.scale(&diff))
                .sub(&self.vp.cross(&o.vp)),
        }
    }

    /// Coordinates in the canonical 14-generator basis.
    pub fn coords(&self) -> [ExactScalar; 14] {
        let a = &self.a.0;
        let h1 = a[0][0].sub(&a[1][1]).mul(&ExactScalar::basis(2, Rat::new(1, 2)));
        let h2 = a[0][0].add(&a[1][1]).mul(&ExactScalar::basis(6, Rat::new(1, 2)));
        [
            a[1][2].clone(),
            a[2][0].clone(),
            a[0][1].clone(),
            a[2][1].clone(),
            a[0][2].clone(),
            a[1][0].clone(),
            h1,
            h2,
            self.vp.0[0].clone(),
            self.vp.0[1].clone(),
            self.vp.0[2].clone(),
            self.vm.0[0].clone(),
            self.vm.0[1].clone(),
            self.vm.0[2].clone(),
        ]
    }

    pub fn from_coords(c: &[ExactScalar]) -> G2Element {
        assert_eq!(c.len(), G2_DIM);
        let mut x = G2Element::zero();
        for (i, g) in generators().iter().enumerate() {
            if !c[i].is_zero() {
                x = x.add(&g.scale(&c[i]));
            }
        }
        x
    }

    /// Seeded random element (traceless 3x3 part).
    pub fn random<R: Rng>(rng: &mut R) -> G2Element {
        let mut a = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                a.0[i][j] = ExactScalar::random(rng);
            }
        }
        a.0[2][2] = a.0[0][0].add(&a.0[1][1]).neg();
        let mut vp = Vec3::zero();
        let mut vm = Vec3::zero();
        for k in 0..3 {
            vp.0[k] = ExactScalar::random(rng);
            vm.0[k] = ExactScalar::random(rng);
        }
        G2Element { a, vp, vm }
    }
}

/// D_{a,b} c = [[a,b],c]/3 - (a,b,c): a derivation of the octonions.
pub fn derivation_d(a: &SplitOctonion, b: &SplitOctonion, c: &SplitOctonion) -> SplitOctonion {
    let third = ExactScalar::rational(1, 3);
    a.commutator(b)
        .commutator(c)
        .scale(&third)
        .sub(&SplitOctonion::associator(a, b, c))
}

/// Matrix form of the derivation D_{c,d}.
pub fn dcd_matrix(c: &SplitOctonion, d: &SplitOctonion) -> G2Element {
    let third = ExactScalar::rational(1, 3);
    let trace_coeff = c.vm.dot(&d.vp).sub(&c.vp.dot(&d.vm)).mul(&third).neg();
    let mut a = Mat3::scalar(&trace_coeff);
    for i in 0..3 {
        for j in 0..3 {
            let m = c.vm.0[j].mul(&d.vp.0[i]).sub(&c.vp.0[i].mul(&d.vm.0[j]));
            a.0[i][j] = a.0[i][j].add(&m);
        }
    }
    let dc = c.ap.sub(&c.am);
    let dd = d.ap.sub(&d.am);
    let vp = d
        .vp
        .scale(&dc)
        .sub(&c.vp.scale(&dd))
        .sub(&c.vm.cross(&d.vm))
        .scale(&third);
    let vm = d
        .vm
        .scale(&dc.neg())
        .sub(&c.vm.scale(&dd.neg()))
        .sub(&c.vp.cross(&d.vp))
        .scale(&third);
    G2Element { a, vp, vm }
}

/// Labels of the canonical generator basis, in export order.
pub fn generator_labels() -> [&'static str; 14] {
    [
        "d1+", "d2+", "d3+", "d1-", "d2-", "d3-", "H1", "H2", "g1+", "g2+", "g3+", "g1-",
        "g2-", "g3-",
    ]
}

/// The canonical 14 generators as matrices:
/// d1+..d3+ are E23, E31, E12; d1-..d3- are E32, E13, E21;
/// H1 = (sqrt2/2)(E11 - E22), H2 = (sqrt6/6)(E11 + E22 - 2 E33);
/// gk+ has A+ = e_k, gk- has A- = e_k.
pub fn generators() -> [G2Element; 14] {
    let mut gens: [G2Element; 14] = std::array::from_fn(|_| G2Element::zero());
    // d+: cyclic off-diagonal positions (2,3), (3,1), (1,2)
    let dp_pos = [(1, 2), (2, 0), (0, 1)];
    for k in 0..3 {
        let (i, j) = dp_pos[k];
        gens[k].a = Mat3::unit(i, j);
        gens[3 + k].a = Mat3::unit(j, i);
    }
    let r2 = ExactScalar::basis(2, Rat::new(1, 2));
    gens[6].a = Mat3::diag(r2.clone(), r2.neg(), ExactScalar::zero());
    let r6 = ExactScalar::basis(6, Rat::new(1, 6));
    gens[7].a = Mat3::diag(r6.clone(), r6.clone(), r6.mul_int(-2));
    for k in 0..3 {
        gens[8 + k].vp = Vec3::e(k);
        gens[11 + k].vm = Vec3::e(k);
    }
    gens
}

/// The same 14 generators built from octonion derivations:
/// dk+- = -+ D_{eps_{k+1}+-, eps_{k+2}-+}, H1 and H2 from the diagonal
/// derivations D_{eps_k-, eps_k+}, gk+- = 3 D_{rho+-, eps_k+-}.
pub fn generators_from_derivations() -> [G2Element; 14] {
    let ep = |k: usize| SplitOctonion::eps_p(k % 3);
    let em = |k: usize| SplitOctonion::eps_m(k % 3);
    let diag = |k: usize| dcd_matrix(&em(k), &ep(k));
    let mut gens: [G2Element; 14] = std::array::from_fn(|_| G2Element::zero());
    for k in 0..3 {
        gens[k] = dcd_matrix(&ep(k + 1), &em(k + 2)).neg();
        gens[3 + k] = dcd_matrix(&em(k + 1), &ep(k + 2));
    }
    gens[6] = diag(0).sub(&diag(1)).scale(&ExactScalar::basis(2, Rat::new(1, 2)));
    gens[7] = diag(0)
        .add(&diag(1))
        .sub(&diag(2).scale(&ExactScalar::int(2)))
        .scale(&ExactScalar::basis(6, Rat::new(1, 6)));
    let three = ExactScalar::int(3);
    for k in 0..3 {
        gens[8 + k] = dcd_matrix(&SplitOctonion::rho_p(), &SplitOctonion::eps_p(k)).scale(&three);
        gens[11 + k] = dcd_matrix(&SplitOctonion::rho_m(), &SplitOctonion::eps_m(k)).scale(&three);
    }
    gens
}

// generator indices in the canonical order
fn dp(k: usize) -> usize {
    k % 3
}
fn dm(k: usize) -> usize {
    3 + k % 3
}
const H1: usize = 6;
const H2: usize = 7;
fn gp(k: usize) -> usize {
    8 + k % 3
}
fn gm(k: usize) -> usize {
    11 + k % 3
}

/// The commutator [b_i, b_j] of two canonical generators as a sparse
/// combination of generators, from the closed-form commutation table. Pairs
/// not covered by the table (in either order) vanish.
pub fn tabulated_bracket(i: usize, j: usize) -> Vec<(usize, ExactScalar)> {
    if let Some(v) = tabulated_forward(i, j) {
        return v;
    }
    if let Some(v) = tabulated_forward(j, i) {
        return v.into_iter().map(|(k, c)| (k, c.neg())).collect();
    }
    Vec::new()
}

fn tabulated_forward(i: usize, j: usize) -> Option<Vec<(usize, ExactScalar)>> {
    let b = |idx: usize, num: i64, den: i64| ExactScalar::basis(idx, Rat::new(num, den));
    let sqrt2 = 2usize;
    let sqrt6 = 6usize;
    if (i, j) == (H1, H2) {
        return Some(Vec::new());
    }
    // Cartan eigenvalues: rows are (H1 eigenvalue, H2 eigenvalue) as (num, den)
    // pairs of sqrt2 and sqrt6 multiples, for k = 1, 2, 3.
    if i == H1 || i == H2 {
        for k in 0..3usize {
            let table: [(usize, (i64, i64), (i64, i64)); 4] = [
                (gp(k), [(1, 2), (-1, 2), (0, 1)][k], [(1, 6), (1, 6), (-1, 3)][k]),
                (gm(k), [(-1, 2), (1, 2), (0, 1)][k], [(-1, 6), (-1, 6), (1, 3)][k]),
                (dp(k), [(-1, 2), (-1, 2), (1, 1)][k], [(1, 2), (-1, 2), (0, 1)][k]),
                (dm(k), [(1, 2), (1, 2), (-1, 1)][k], [(-1, 2), (1, 2), (0, 1)][k]),
            ];
            for (gen, ev1, ev2) in table {
                if j == gen {
                    let (num, den) = if i == H1 { ev1 } else { ev2 };
                    let radical = if i == H1 { sqrt2 } else { sqrt6 };
                    if num == 0 {
                        return Some(Vec::new());
                    }
                    return Some(vec![(gen, b(radical, num, den))]);
                }
            }
        }
        return None;
    }
    for k in 0..3usize {
        // [dk+, d(k+1)+] = d(k+2)-  and  [dk-, d(k+1)-] = -d(k+2)+
        if (i, j) == (dp(k), dp(k + 1)) {
            return Some(vec![(dm(k + 2), ExactScalar::one())]);
        }
        if (i, j) == (dm(k), dm(k + 1)) {
            return Some(vec![(dp(k + 2), ExactScalar::one().neg())]);
        }
        // [dk+, g(k+1)-] = -g(k+2)-  and  [dk-, g(k+1)+] = g(k+2)+
        if (i, j) == (dp(k), gm(k + 1)) {
            return Some(vec![(gm(k + 2), ExactScalar::one().neg())]);
        }
        if (i, j) == (dm(k), gp(k + 1)) {
            return Some(vec![(gp(k + 2), ExactScalar::one())]);
        }
        // [d(k+1)+, gk+] = g(k+2)+  and  [d(k+1)-, gk-] = -g(k+2)-
        if (i, j) == (dp(k + 1), gp(k)) {
            return Some(vec![(gp(k + 2), ExactScalar::one())]);
        }
        if (i, j) == (dm(k + 1), gm(k)) {
            return Some(vec![(gm(k + 2), ExactScalar::one().neg())]);
        }
        // [gk+, g(k+1)-] = -3 d(k+2)+  and  [gk-, g(k+1)+] = 3 d(k+2)-
        if (i, j) == (gp(k), gm(k + 1)) {
            return Some(vec![(dp(k + 2), ExactScalar::int(-3))]);
        }
        if (i, j) == (gm(k), gp(k + 1)) {
            return Some(vec![(dm(k + 2), ExactScalar::int(3))]);
        }
        // [gk+, g(k+1)+] = 2 g(k+2)-  and  [gk-, g(k+1)-] = 2 g(k+2)+
        if (i, j) == (gp(k), gp(k + 1)) {
            return Some(vec![(gm(k + 2), ExactScalar::int(2))]);
        }
        if (i, j) == (gm(k), gm(k + 1)) {
            return Some(vec![(gp(k + 2), ExactScalar::int(2))]);
        }
    }
    // opposite-sign pairs landing back in the Cartan subalgebra
    if (i, j) == (dp(0), dm(0)) {
        return Some(vec![(H1, b(sqrt2, -1, 2)), (H2, b(sqrt6, 1, 2))]);
    }
    if (i, j) == (dp(1), dm(1)) {
        return Some(vec![(H1, b(sqrt2, -1, 2)), (H2, b(sqrt6, -1, 2))]);
    }
    if (i, j) == (dp(2), dm(2)) {
        return Some(vec![(H1, b(sqrt2, 1, 1))]);
    }
    if (i, j) == (gp(0), gm(0)) {
        return Some(vec![(H1, b(sqrt2, -3, 2)), (H2, b(sqrt6, -1, 2))]);
    }
    if (i, j) == (gp(1), gm(1)) {
        return Some(vec![(H1, b(sqrt2, 3, 2)), (H2, b(sqrt6, -1, 2))]);
    }
    if (i, j) == (gp(2), gm(2)) {
        return Some(vec![(H2, b(sqrt6, 1, 1))]);
    }
    None
}

/// Closed-form action of the canonical generator `idx` on an octonion,
/// written directly in split coordinates; independent of the matrix action.
pub fn tabulated_action(idx: usize, o: &SplitOctonion) -> SplitOctonion {
    let mut out = SplitOctonion::zero();
    match idx {
        // dk(s): a -> s(a_{k+2}(s) eps_{k+1}(s) - a_{k+1}(-s) eps_{k+2}(-s))
        0..=5 => {
            let k = idx % 3;
            let plus = idx < 3;
            let (same, other) = if plus { (&o.vp, &o.vm) } else { (&o.vm, &o.vp) };
            let (out_same, out_other) = if plus {
                (&mut out.vp, &mut out.vm)
            } else {
                (&mut out.vm, &mut out.vp)
            };
            let sign = if plus { 1 } else { -1 };
            out_same.0[(k + 1) % 3] = same.0[(k + 2) % 3].mul_int(sign);
            out_other.0[(k + 2) % 3] = other.0[(k + 1) % 3].mul_int(-sign);
        }
        H1 => {
            let c = ExactScalar::basis(2, Rat::new(1, 2));
            out.vp.0[0] = o.vp.0[0].mul(&c);
            out.vp.0[1] = o.vp.0[1].mul(&c).neg();
            out.vm.0[0] = o.vm.0[0].mul(&c).neg();
            out.vm.0[1] = o.vm.0[1].mul(&c);
        }
        H2 => {
            let c = ExactScalar::basis(6, Rat::new(1, 6));
            out.vp.0[0] = o.vp.0[0].mul(&c);
            out.vp.0[1] = o.vp.0[1].mul(&c);
            out.vp.0[2] = o.vp.0[2].mul(&c).mul_int(-2);
            out.vm.0[0] = o.vm.0[0].mul(&c).neg();
            out.vm.0[1] = o.vm.0[1].mul(&c).neg();
            out.vm.0[2] = o.vm.0[2].mul(&c).mul_int(2);
        }
        // gk(s): a -> -a_{k+1}(s) eps_{k+2}(-s) + a_{k+2}(s) eps_{k+1}(-s)
        //             - a_k(-s)(rho(s) - rho(-s)) - (a0(s) - a0(-s)) eps_k(s)
        8..=13 => {
            let k = (idx - 8) % 3;
            let plus = idx < 11;
            let (same, other) = if plus { (&o.vp, &o.vm) } else { (&o.vm, &o.vp) };
            let rho_coeff = other.0[k].neg();
            if plus {
                out.ap = rho_coeff.clone();
                out.am = rho_coeff.neg();
            } else {
                out.am = rho_coeff.clone();
                out.ap = rho_coeff.neg();
            }
            let scalar_diff = if plus { o.ap.sub(&o.am) } else { o.am.sub(&o.ap) };
            let out_opp = if plus { &mut out.vm } else { &mut out.vp };
            out_opp.0[(k + 2) % 3] = same.0[(k + 1) % 3].neg();
            out_opp.0[(k + 1) % 3] = same.0[(k + 2) % 3].clone();
            let out_same = if plus { &mut out.vp } else { &mut out.vm };
            out_same.0[k] = out_same.0[k].sub(&scalar_diff);
        }
        _ => panic!("generator index out of range"),
    }
    out
}

/// Expansion of the derivation D_{c,d} over the canonical generators and the
/// elementary derivations e_jk = D_{eps_k-, eps_j+}, assembled back into a
/// matrix. Agrees with `dcd_matrix` identically.
pub fn derivation_expansion(c: &SplitOctonion, d: &SplitOctonion) -> G2Element {
    let third = ExactScalar::rational(1, 3);
    let mut out = G2Element::zero();
    let dc = c.ap.sub(&c.am);
    let dd = d.ap.sub(&d.am);
    let cross_m = c.vm.cross(&d.vm);
    let cross_p = c.vp.cross(&d.vp);
    for k in 0..3 {
        // g-column coefficients
        let coeff_p = dc
            .mul(&d.vp.0[k])
            .sub(&dd.mul(&c.vp.0[k]))
            .sub(&cross_m.0[k])
            .mul(&third);
        let coeff_m = dc
            .neg()
            .mul(&d.vm.0[k])
            .sub(&dd.neg().mul(&c.vm.0[k]))
            .sub(&cross_p.0[k])
            .mul(&third);
        out.vp.0[k] = coeff_p;
        out.vm.0[k] = coeff_m;
    }
    for j in 0..3 {
        for k in 0..3 {
            let coeff = c.vm.0[k].mul(&d.vp.0[j]).sub(&c.vp.0[j].mul(&d.vm.0[k]));
            if !coeff.is_zero() {
                out.a = out.a.add(&elementary_image(j, k).scale(&coeff));
            }
        }
    }
    out
}

/// Matrix image of the elementary derivation e_jk = D_{eps_k-, eps_j+}:
/// E_jk off the diagonal; on the diagonal, the traceless projections
/// (2,-1,-1)/3, (-1,2,-1)/3, (-1,-1,2)/3.
pub fn elementary_image(j: usize, k: usize) -> Mat3 {
    if j != k {
        return Mat3::unit(j, k);
    }
    let third = ExactScalar::rational(1, 3);
    let mut m = Mat3::scalar(&third.neg());
    m.0[j][j] = ExactScalar::one().sub(&third);
    m
}

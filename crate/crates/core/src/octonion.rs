//! Split octonions in Zorn vector-matrix form.
//!
//! An element is a 2x2 array `[[ap, vp], [vm, am]]` with scalar diagonal and
//! 3-vector off-diagonal slots. The basis consists of the two idempotents
//! `rho+ = [[1,0],[0,0]]`, `rho- = [[0,0],[0,1]]` and the six nilpotents
//! `eps_k+ = [[0, e_k],[0, 0]]`, `eps_k- = [[0,0],[e_k,0]]` (k = 1,2,3), which
//! multiply by the rules
//!
//! ```text
//! rho+-^2 = rho+-          rho+- rho-+ = 0
//! rho+- eps_k+- = eps_k+- rho-+ = eps_k+-      (the other mixed products vanish)
//! eps_k+- eps_{k+1}+- = -eps_{k+1}+- eps_k+- = eps_{k+2}-+   (indices mod 3)
//! eps_j+- eps_k-+ = -delta_jk rho+-
//! ```
//!
//! The product realizing these rules combines each scalar-vector slot the way
//! 2x2 matrix multiplication would, with a *negative* dot product coupling the
//! two vector slots and the standard cross product within a slot.

use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::scalar::ExactScalar;
use rand::Rng;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct SplitOctonion {
    pub ap: ExactScalar,
    pub am: ExactScalar,
    pub vp: Vec3,
    pub vm: Vec3,
}

/// Number of scalar coordinates of an octonion (basis size).
pub const OCT_DIM: usize = 8;

impl SplitOctonion {
    pub fn zero() -> SplitOctonion {
        SplitOctonion {
            ap: ExactScalar::zero(),
            am: ExactScalar::zero(),
            vp: Vec3::zero(),
            vm: Vec3::zero(),
        }
    }

    /// The unit 1 = rho+ + rho-.
    pub fn one() -> SplitOctonion {
        SplitOctonion::scalar(&ExactScalar::one())
    }

    /// The scalar multiple s*1.
    pub fn scalar(s: &ExactScalar) -> SplitOctonion {
        SplitOctonion {
            ap: s.clone(),
            am: s.clone(),
            vp: Vec3::zero(),
            vm: Vec3::zero(),
        }
    }

    pub fn rho_p() -> SplitOctonion {
        SplitOctonion { ap: ExactScalar::one(), ..SplitOctonion::zero() }
    }

    pub fn rho_m() -> SplitOctonion {
        SplitOctonion { am: ExactScalar::one(), ..SplitOctonion::zero() }
    }

    /// eps_k+ for 0-based k.
    pub fn eps_p(k: usize) -> SplitOctonion {
        SplitOctonion { vp: Vec3::e(k), ..SplitOctonion::zero() }
    }

    /// eps_k- for 0-based k.
    pub fn eps_m(k: usize) -> SplitOctonion {
        SplitOctonion { vm: Vec3::e(k), ..SplitOctonion::zero() }
    }

    /// The split basis in canonical order:
    /// rho+, rho-, eps1+, eps2+, eps3+, eps1-, eps2-, eps3-.
    pub fn split_basis() -> [SplitOctonion; 8] {
        [
            SplitOctonion::rho_p(),
            SplitOctonion::rho_m(),
            SplitOctonion::eps_p(0),
            SplitOctonion::eps_p(1),
            SplitOctonion::eps_p(2),
            SplitOctonion::eps_m(0),
            SplitOctonion::eps_m(1),
            SplitOctonion::eps_m(2),
        ]
    }

    pub fn basis_name(idx: usize) -> &'static str {
        ["rho+", "rho-", "eps1+", "eps2+", "eps3+", "eps1-", "eps2-", "eps3-"][idx]
    }

    /// Classical imaginary unit u_k for k = 1, 2, 3: eps_k+ + eps_k-.
    pub fn u(k: usize) -> SplitOctonion {
        assert!((1..=3).contains(&k));
        SplitOctonion::eps_p(k - 1).add(&SplitOctonion::eps_m(k - 1))
    }

    /// Classical imaginary unit u7 = -i (rho+ - rho-), so that
    /// rho+- = (1 +- i u7)/2. Squares to -1.
    pub fn u7() -> SplitOctonion {
        let mi = ExactScalar::i().neg();
        SplitOctonion {
            ap: mi.clone(),
            am: mi.neg(),
            vp: Vec3::zero(),
            vm: Vec3::zero(),
        }
    }

    /// Coordinate in the split basis, same order as [`split_basis`].
    pub fn comp(&self, idx: usize) -> &ExactScalar {
        match idx {
            0 => &self.ap,
            1 => &self.am,
            2..=4 => &self.vp.0[idx - 2],
            5..=7 => &self.vm.0[idx - 5],
            _ => panic!("octonion coordinate out of range"),
        }
    }

    pub fn comp_mut(&mut self, idx: usize) -> &mut ExactScalar {
        match idx {
            0 => &mut self.ap,
            1 => &mut self.am,
            2..=4 => &mut self.vp.0[idx - 2],
            5..=7 => &mut self.vm.0[idx - 5],
            _ => panic!("octonion coordinate out of range"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.ap.is_zero() && self.am.is_zero() && self.vp.is_zero() && self.vm.is_zero()
    }

    pub fn add(&self, o: &SplitOctonion) -> SplitOctonion {
        SplitOctonion {
            ap: self.ap.add(&o.ap),
            am: self.am.add(&o.am),
            vp: self.vp.add(&o.vp),
            vm: self.vm.add(&o.vm),
        }
    }

    pub fn sub(&self, o: &SplitOctonion) -> SplitOctonion {
        SplitOctonion {
            ap: self.ap.sub(&o.ap),
            am: self.am.sub(&o.am),
            vp: self.vp.sub(&o.vp),
            vm: self.vm.sub(&o.vm),
        }
    }

    pub fn neg(&self) -> SplitOctonion {
        SplitOctonion {
            ap: self.ap.neg(),
            am: self.am.neg(),
            vp: self.vp.neg(),
            vm: self.vm.neg(),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> SplitOctonion {
        SplitOctonion {
            ap: self.ap.mul(s),
            am: self.am.mul(s),
            vp: self.vp.scale(s),
            vm: self.vm.scale(s),
        }
    }

    /// Zorn product.
    pub fn mul(&self, o: &SplitOctonion) -> SplitOctonion {
        // negative dot product coupling opposite vector slots
        let dot_pm = self.vp.dot(&o.vm).neg();
        let dot_mp = self.vm.dot(&o.vp).neg();
        SplitOctonion {
            ap: self.ap.mul(&o.ap).add(&dot_pm),
            am: self.am.mul(&o.am).add(&dot_mp),
            vp: o.vp.scale(&self.ap).add(&self.vp.scale(&o.am)).add(&self.vm.cross(&o.vm)),
            vm: o.vm.scale(&self.am).add(&self.vm.scale(&o.ap)).add(&self.vp.cross(&o.vp)),
        }
    }

    /// Scalar ("1") coordinate of the product self*o; cheaper than `mul` when
    /// only the trace part matters.
    pub fn mul_scalar_part(&self, o: &SplitOctonion) -> ExactScalar {
        // the product's diagonal is (ap*ap' - <vp,vm'>, am*am' - <vm,vp'>);
        // its 1-part is the half-sum.
        let d1 = self.ap.mul(&o.ap).sub(&self.vp.dot(&o.vm));
        let d2 = self.am.mul(&o.am).sub(&self.vm.dot(&o.vp));
        d1.add(&d2).half()
    }

    /// Octonion conjugation: swaps the idempotents and negates both vectors.
    /// Anti-automorphism: conj(ab) = conj(b) conj(a).
    pub fn conj(&self) -> SplitOctonion {
        SplitOctonion {
            ap: self.am.clone(),
            am: self.ap.clone(),
            vp: self.vp.neg(),
            vm: self.vm.neg(),
        }
    }

    /// Trace t(a) = a + conj(a) as a scalar: ap + am.
    pub fn trace(&self) -> ExactScalar {
        self.ap.add(&self.am)
    }

    pub fn is_traceless(&self) -> bool {
        self.trace().is_zero()
    }

    /// Norm N(a) = a*conj(a) as a scalar: ap*am + <vp, vm>.
    pub fn norm(&self) -> ExactScalar {
        self.ap.mul(&self.am).add(&self.vp.dot(&self.vm))
    }

    pub fn commutator(&self, o: &SplitOctonion) -> SplitOctonion {
        self.mul(o).sub(&o.mul(self))
    }

    /// Associator (a,b,c) = (ab)c - a(bc); alternating, nonzero in general.
    pub fn associator(a: &SplitOctonion, b: &SplitOctonion, c: &SplitOctonion) -> SplitOctonion {
        a.mul(b).mul(c).sub(&a.mul(&b.mul(c)))
    }

    /// Traceless product c*d = cd - t(cd)/2; both inputs must be traceless.
    pub fn star(&self, o: &SplitOctonion) -> Result<SplitOctonion> {
        if !self.is_traceless() || !o.is_traceless() {
            return Err(Error::Invariant(
                "star product requires traceless octonions".into(),
            ));
        }
        let p = self.mul(o);
        let t = p.trace().half();
        Ok(p.sub(&SplitOctonion::scalar(&t)))
    }
}

impl fmt::Display for SplitOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote = false;
        for k in 0..8 {
            let c = self.comp(k);
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{}", SplitOctonion::basis_name(k))?;
            wrote = true;
        }
        Ok(())
    }
}

/// Subalgebra tags: the unit span (n=1), the span of the idempotents (n=2),
/// the quaternion span adding eps2+- (n=4), and the full algebra (n=8).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionTag {
    N1,
    N2,
    N4,
    N8,
}

impl CompositionTag {
    pub fn n(self) -> usize {
        match self {
            CompositionTag::N1 => 1,
            CompositionTag::N2 => 2,
            CompositionTag::N4 => 4,
            CompositionTag::N8 => 8,
        }
    }

    /// Basis units of the tagged subalgebra as octonions, in canonical order.
    pub fn units(self) -> Vec<SplitOctonion> {
        match self {
            CompositionTag::N1 => vec![SplitOctonion::one()],
            CompositionTag::N2 => vec![SplitOctonion::rho_p(), SplitOctonion::rho_m()],
            CompositionTag::N4 => vec![
                SplitOctonion::rho_p(),
                SplitOctonion::rho_m(),
                SplitOctonion::eps_p(1),
                SplitOctonion::eps_m(1),
            ],
            CompositionTag::N8 => SplitOctonion::split_basis().to_vec(),
        }
    }

    pub fn unit_names(self) -> Vec<&'static str> {
        match self {
            CompositionTag::N1 => vec!["1"],
            CompositionTag::N2 => vec!["rho+", "rho-"],
            CompositionTag::N4 => vec!["rho+", "rho-", "eps2+", "eps2-"],
            CompositionTag::N8 => (0..8).map(SplitOctonion::basis_name).collect(),
        }
    }

    /// Does the element lie in the tagged subalgebra?
    pub fn supports(self, o: &SplitOctonion) -> bool {
        match self {
            CompositionTag::N1 => {
                o.ap == o.am && o.vp.is_zero() && o.vm.is_zero()
            }
            CompositionTag::N2 => o.vp.is_zero() && o.vm.is_zero(),
            CompositionTag::N4 => {
                o.vp.0[0].is_zero()
                    && o.vp.0[2].is_zero()
                    && o.vm.0[0].is_zero()
                    && o.vm.0[2].is_zero()
            }
            CompositionTag::N8 => true,
        }
    }

    /// Seeded random element of the tagged subalgebra (small coordinates).
    pub fn random<R: Rng>(self, rng: &mut R) -> SplitOctonion {
        let mut o = SplitOctonion::zero();
        match self {
            CompositionTag::N1 => {
                let s = ExactScalar::random(rng);
                o = SplitOctonion::scalar(&s);
            }
            CompositionTag::N2 => {
                o.ap = ExactScalar::random(rng);
                o.am = ExactScalar::random(rng);
            }
            CompositionTag::N4 => {
                o.ap = ExactScalar::random(rng);
                o.am = ExactScalar::random(rng);
                o.vp.0[1] = ExactScalar::random(rng);
                o.vm.0[1] = ExactScalar::random(rng);
            }
            CompositionTag::N8 => {
                for k in 0..8 {
                    *o.comp_mut(k) = ExactScalar::random(rng);
                }
            }
        }
        o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// The expected product of two split-basis units, straight from the
    /// multiplication rules quoted in the module docs.
    fn expected_basis_product(i: usize, j: usize) -> SplitOctonion {
        let zero = SplitOctonion::zero;
        match (i, j) {
            // idempotents
            (0, 0) => SplitOctonion::rho_p(),
            (1, 1) => SplitOctonion::rho_m(),
            (0, 1) | (1, 0) => zero(),
            // rho * eps
            (0, k @ 2..=4) => SplitOctonion::eps_p(k - 2), // rho+ eps+ = eps+
            (0, 5..=7) => zero(),                          // rho+ eps- = 0
            (1, 2..=4) => zero(),                          // rho- eps+ = 0
            (1, k @ 5..=7) => SplitOctonion::eps_m(k - 5), // rho- eps- = eps-
            // eps * rho
            (2..=4, 0) => zero(),                          // eps+ rho+ = 0
            (k @ 2..=4, 1) => SplitOctonion::eps_p(k - 2), // eps+ rho- = eps+
            (k @ 5..=7, 0) => SplitOctonion::eps_m(k - 5), // eps- rho+ = eps-
            (5..=7, 1) => zero(),                          // eps- rho- = 0
            // eps+ eps+
            (a @ 2..=4, b @ 2..=4) => {
                let (ka, kb) = (a - 2, b - 2);
                if ka == kb {
                    zero()
                } else if (ka + 1) % 3 == kb {
                    SplitOctonion::eps_m((ka + 2) % 3)
                } else {
                    SplitOctonion::eps_m((kb + 2) % 3).neg()
                }
            }
            // eps- eps-
            (a @ 5..=7, b @ 5..=7) => {
                let (ka, kb) = (a - 5, b - 5);
                if ka == kb {
                    zero()
                } else if (ka + 1) % 3 == kb {
                    SplitOctonion::eps_p((ka + 2) % 3)
                } else {
                    SplitOctonion::eps_p((kb + 2) % 3).neg()
                }
            }
            // eps+ eps- and eps- eps+
            (a @ 2..=4, b @ 5..=7) => {
                if a - 2 == b - 5 {
                    SplitOctonion::rho_p().neg()
                } else {
                    zero()
                }
            }
            (a @ 5..=7, b @ 2..=4) => {
                if a - 5 == b - 2 {
                    SplitOctonion::rho_m().neg()
                } else {
                    zero()
                }
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn full_basis_multiplication_table() {
        let basis = SplitOctonion::split_basis();
        for i in 0..8 {
            for j in 0..8 {
                let got = basis[i].mul(&basis[j]);
                let want = expected_basis_product(i, j);
                assert_eq!(
                    got,
                    want,
                    "{} * {} mismatch",
                    SplitOctonion::basis_name(i),
                    SplitOctonion::basis_name(j)
                );
            }
        }
    }

    #[test]
    fn unit_is_identity_and_classical_units_square_to_minus_one() {
        let one = SplitOctonion::one();
        let basis = SplitOctonion::split_basis();
        for b in &basis {
            assert_eq!(one.mul(b), *b);
            assert_eq!(b.mul(&one), *b);
        }
        for k in 1..=3 {
            let u = SplitOctonion::u(k);
            assert_eq!(u.mul(&u), one.neg());
        }
        let u7 = SplitOctonion::u7();
        assert_eq!(u7.mul(&u7), one.neg());
        // u1 u2 = u3: a quaternion triple
        assert_eq!(SplitOctonion::u(1).mul(&SplitOctonion::u(2)), SplitOctonion::u(3));
        // rho+- = (1 +- i u7)/2
        let i_u7 = u7.scale(&ExactScalar::i());
        assert_eq!(one.add(&i_u7).scale(&ExactScalar::rational(1, 2)), SplitOctonion::rho_p());
        assert_eq!(one.sub(&i_u7).scale(&ExactScalar::rational(1, 2)), SplitOctonion::rho_m());
    }

    #[test]
    fn alternativity_on_basis_and_random() {
        let basis = SplitOctonion::split_basis();
        for a in &basis {
            for b in &basis {
                assert!(SplitOctonion::associator(a, a, b).is_zero());
                assert!(SplitOctonion::associator(a, b, b).is_zero());
                assert!(SplitOctonion::associator(a, b, a).is_zero());
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let a = CompositionTag::N8.random(&mut rng);
            let b = CompositionTag::N8.random(&mut rng);
            assert!(SplitOctonion::associator(&a, &a, &b).is_zero());
            assert!(SplitOctonion::associator(&a, &b, &b).is_zero());
            assert!(SplitOctonion::associator(&a, &b, &a).is_zero());
        }
    }

    #[test]
    fn associator_witness() {
        // the algebra is not associative: scan the basis for a witness and pin
        // the first one as a regression value.
        let basis = SplitOctonion::split_basis();
        let mut witnesses = Vec::new();
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let assoc = SplitOctonion::associator(&basis[i], &basis[j], &basis[k]);
                    if !assoc.is_zero() {
                        witnesses.push((i, j, k, assoc));
                    }
                }
            }
        }
        assert!(!witnesses.is_empty(), "associator vanished everywhere");
        // (eps1+, eps2+, eps3+) associates to rho+ - rho-:
        // (eps1+ eps2+) eps3+ = eps3- eps3+ = -rho-,
        // eps1+ (eps2+ eps3+) = eps1+ eps1- = -rho+.
        let w = SplitOctonion::associator(
            &SplitOctonion::eps_p(0),
            &SplitOctonion::eps_p(1),
            &SplitOctonion::eps_p(2),
        );
        assert_eq!(w, SplitOctonion::rho_p().neg().add(&SplitOctonion::rho_m()).neg());
    }

    #[test]
    fn conjugation_and_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..300 {
            let a = CompositionTag::N8.random(&mut rng);
            let b = CompositionTag::N8.random(&mut rng);
            assert_eq!(a.conj().conj(), a);
            assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
            // t(ab) = t(ba)
            assert_eq!(a.mul(&b).trace(), b.mul(&a).trace());
            // a + conj(a) = t(a) * 1
            assert_eq!(a.add(&a.conj()), SplitOctonion::scalar(&a.trace()));
            // scalar part agrees with the full product
            assert_eq!(a.mul_scalar_part(&b), a.mul(&b).trace().half());
        }
    }

    #[test]
    fn norm_composes() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..500 {
            let a = CompositionTag::N8.random(&mut rng);
            let b = CompositionTag::N8.random(&mut rng);
            assert_eq!(a.mul(&b).norm(), a.norm().mul(&b.norm()));
            // norm as a * conj(a)
            assert_eq!(a.mul(&a.conj()), SplitOctonion::scalar(&a.norm()));
        }
    }

    #[test]
    fn star_product() {
        // star(eps1+, eps1-) = (rho- - rho+)/2
        let c = SplitOctonion::eps_p(0);
        let d = SplitOctonion::eps_m(0);
        let got = c.star(&d).unwrap();
        let want = SplitOctonion::rho_m().sub(&SplitOctonion::rho_p()).scale(&ExactScalar::rational(1, 2));
        assert_eq!(got, want);
        // non-traceless inputs are rejected
        assert!(SplitOctonion::rho_p().star(&d).is_err());
        // star output is always traceless
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..200 {
            let mut a = CompositionTag::N8.random(&mut rng);
            let mut b = CompositionTag::N8.random(&mut rng);
            // project away the traces
            let ta = a.trace().half();
            a = a.sub(&SplitOctonion::scalar(&ta));
            let tb = b.trace().half();
            b = b.sub(&SplitOctonion::scalar(&tb));
            let s = a.star(&b).unwrap();
            assert!(s.is_traceless());
        }
    }

    /// Closed form of the star product on traceless elements, in split
    /// coordinates: used as an independent oracle.
    #[test]
    fn star_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let alpha = ExactScalar::random(&mut rng);
            let beta = ExactScalar::random(&mut rng);
            let mut c = SplitOctonion::zero();
            c.ap = alpha.clone();
            c.am = alpha.neg();
            let mut d = SplitOctonion::zero();
            d.ap = beta.clone();
            d.am = beta.neg();
            for k in 0..3 {
                c.vp.0[k] = ExactScalar::random(&mut rng);
                c.vm.0[k] = ExactScalar::random(&mut rng);
                d.vp.0[k] = ExactScalar::random(&mut rng);
                d.vm.0[k] = ExactScalar::random(&mut rng);
            }
            let got = c.star(&d).unwrap();

            // rho part: (vm.wp - vp.wm)/2 * (rho+ - rho-)
            let rho_coeff = c.vm.dot(&d.vp).sub(&c.vp.dot(&d.vm)).half();
            // eps+ part: alpha w+ - beta v+ + vm x wm
            let ep = d.vp.scale(&alpha).sub(&c.vp.scale(&beta)).add(&c.vm.cross(&d.vm));
            // eps- part: -alpha w- + beta v- + vp x wp
            let em = d.vm.scale(&alpha.neg()).add(&c.vm.scale(&beta)).add(&c.vp.cross(&d.vp));
            let want = SplitOctonion {
                ap: rho_coeff.clone(),
                am: rho_coeff.neg(),
                vp: ep,
                vm: em,
            };
            assert_eq!(got, want);
        }
    }

    #[test]
    fn tags_close_under_product_and_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for tag in [CompositionTag::N1, CompositionTag::N2, CompositionTag::N4, CompositionTag::N8] {
            for _ in 0..200 {
                let a = tag.random(&mut rng);
                let b = tag.random(&mut rng);
                assert!(tag.supports(&a));
                assert!(tag.supports(&a.mul(&b)), "tag {tag:?} not closed under mul");
                assert!(tag.supports(&a.conj()), "tag {tag:?} not closed under conj");
            }
        }
        // and the unit lists match the tag dimension
        for tag in [CompositionTag::N1, CompositionTag::N2, CompositionTag::N4, CompositionTag::N8] {
            assert_eq!(tag.units().len(), tag.n());
            for u in tag.units() {
                assert!(tag.supports(&u));
            }
        }
    }

    #[test]
    fn quaternion_tag_matches_its_defining_units() {
        // the n=4 span is generated by rho+- and eps2+- = rho+- u2
        let e2p = SplitOctonion::rho_p().mul(&SplitOctonion::u(2));
        let e2m = SplitOctonion::rho_m().mul(&SplitOctonion::u(2));
        assert_eq!(e2p, SplitOctonion::eps_p(1));
        assert_eq!(e2m, SplitOctonion::eps_m(1));
    }
}

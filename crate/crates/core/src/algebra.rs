//! Uniform facade over the five algebras: name parsing, dimensions, bases,
//! branching by block, and a single element type the CLI and the scan
//! drivers can use without caring which construction sits underneath.

use crate::error::{Error, Result};
use crate::exc::ExcElement;
use crate::g2::{generator_labels, generators, G2Element};
use crate::e8::E8Element;
use crate::octonion::CompositionTag;
use crate::scalar::ExactScalar;
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Algebra {
    pub const ALL: [Algebra; 5] = [Algebra::G2, Algebra::F4, Algebra::E6, Algebra::E7, Algebra::E8];

    pub fn from_name(s: &str) -> Result<Algebra> {
        match s.to_ascii_lowercase().as_str() {
            "g2" => Ok(Algebra::G2),
            "f4" => Ok(Algebra::F4),
            "e6" => Ok(Algebra::E6),
            "e7" => Ok(Algebra::E7),
            "e8" => Ok(Algebra::E8),
            _ => Err(Error::UnknownAlgebra(s.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Algebra::G2 => "g2",
            Algebra::F4 => "f4",
            Algebra::E6 => "e6",
            Algebra::E7 => "e7",
            Algebra::E8 => "e8",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Algebra::G2 => 14,
            Algebra::F4 => 52,
            Algebra::E6 => 78,
            Algebra::E7 => 133,
            Algebra::E8 => 248,
        }
    }

    /// Composition tag of the coordinate algebra carried in the matrix
    /// blocks; the 14-dimensional algebra is not built that way.
    pub fn tag(&self) -> Option<CompositionTag> {
        match self {
            Algebra::G2 => None,
            Algebra::F4 => Some(CompositionTag::N1),
            Algebra::E6 => Some(CompositionTag::N2),
            Algebra::E7 => Some(CompositionTag::N4),
            Algebra::E8 => Some(CompositionTag::N8),
        }
    }

    pub fn basis_labels(&self) -> Vec<String> {
        match self {
            Algebra::G2 => generator_labels().iter().map(|l| l.to_string()).collect(),
            Algebra::E8 => E8Element::basis_labels(),
            _ => ExcElement::basis_labels(self.tag().unwrap()),
        }
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        match self {
            Algebra::G2 => generators().into_iter().map(AlgebraElement::G2).collect(),
            Algebra::E8 => E8Element::basis()
                .iter()
                .map(|e| AlgebraElement::E8(Box::new(e.clone())))
                .collect(),
            _ => ExcElement::basis(self.tag().unwrap())
                .into_iter()
                .map(AlgebraElement::Exc)
                .collect(),
        }
    }

    /// Dimension of each block of the grading, computed by classifying the
    /// basis elements by the block they live in (first-seen order).
    pub fn branching(&self) -> Vec<(String, usize)> {
        let mut out: Vec<(String, usize)> = Vec::new();
        for b in self.basis() {
            let label = b.block_label();
            match out.iter_mut().find(|(l, _)| *l == label) {
                Some((_, n)) => *n += 1,
                None => out.push((label, 1)),
            }
        }
        out
    }
}

/// Element of whichever algebra was named; wraps the three concrete element
/// types behind one arithmetic surface.
#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraElement {
    G2(G2Element),
    Exc(ExcElement),
    E8(Box<E8Element>),
}

macro_rules! zip {
    ($self:expr, $o:expr, $x:ident, $y:ident, $e:expr) => {
        match ($self, $o) {
            (AlgebraElement::G2($x), AlgebraElement::G2($y)) => AlgebraElement::G2($e),
            (AlgebraElement::Exc($x), AlgebraElement::Exc($y)) => AlgebraElement::Exc($e),
            (AlgebraElement::E8($x), AlgebraElement::E8($y)) => {
                AlgebraElement::E8(Box::new($e))
            }
            _ => panic!("mixed algebra elements"),
        }
    };
}

impl AlgebraElement {
    pub fn algebra(&self) -> Algebra {
        match self {
            AlgebraElement::G2(_) => Algebra::G2,
            AlgebraElement::Exc(x) => match x.xp()[0].tag {
                CompositionTag::N1 => Algebra::F4,
                CompositionTag::N2 => Algebra::E6,
                CompositionTag::N4 => Algebra::E7,
                CompositionTag::N8 => unreachable!("rank 8 entries use the operator model"),
            },
            AlgebraElement::E8(_) => Algebra::E8,
        }
    }

    pub fn zero(algebra: Algebra) -> AlgebraElement {
        match algebra {
            Algebra::G2 => AlgebraElement::G2(G2Element::zero()),
            Algebra::E8 => AlgebraElement::E8(Box::new(E8Element::zero())),
            _ => AlgebraElement::Exc(ExcElement::zero(algebra.tag().unwrap())),
        }
    }

    pub fn bracket(&self, o: &AlgebraElement) -> AlgebraElement {
        zip!(self, o, x, y, x.bracket(y))
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        zip!(self, o, x, y, x.add(y))
    }

    pub fn sub(&self, o: &AlgebraElement) -> AlgebraElement {
        zip!(self, o, x, y, x.sub(y))
    }

    pub fn neg(&self) -> AlgebraElement {
        match self {
            AlgebraElement::G2(x) => AlgebraElement::G2(x.neg()),
            AlgebraElement::Exc(x) => AlgebraElement::Exc(x.neg()),
            AlgebraElement::E8(x) => AlgebraElement::E8(Box::new(x.neg())),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> AlgebraElement {
        match self {
            AlgebraElement::G2(x) => AlgebraElement::G2(x.scale(s)),
            AlgebraElement::Exc(x) => AlgebraElement::Exc(x.scale(s)),
            AlgebraElement::E8(x) => AlgebraElement::E8(Box::new(x.scale(s))),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            AlgebraElement::G2(x) => x.is_zero(),
            AlgebraElement::Exc(x) => x.is_zero(),
            AlgebraElement::E8(x) => x.is_zero(),
        }
    }

    pub fn coords(&self) -> Vec<ExactScalar> {
        match self {
            AlgebraElement::G2(x) => x.coords().to_vec(),
            AlgebraElement::Exc(x) => x.coords(),
            AlgebraElement::E8(x) => x.coords(),
        }
    }

    pub fn from_coords(algebra: Algebra, c: &[ExactScalar]) -> AlgebraElement {
        match algebra {
            Algebra::G2 => AlgebraElement::G2(G2Element::from_coords(c)),
            Algebra::E8 => AlgebraElement::E8(Box::new(E8Element::from_coords(c))),
            _ => AlgebraElement::Exc(ExcElement::from_coords(algebra.tag().unwrap(), c)),
        }
    }

    pub fn random<R: Rng>(algebra: Algebra, rng: &mut R) -> AlgebraElement {
        match algebra {
            Algebra::G2 => AlgebraElement::G2(G2Element::random(rng)),
            Algebra::E8 => AlgebraElement::E8(Box::new(E8Element::random(rng))),
            _ => AlgebraElement::Exc(ExcElement::random(algebra.tag().unwrap(), rng)),
        }
    }

    /// Re-runs every constructor invariant on the current value: traceless
    /// outer part, inner trace constraint, entries inside the tagged
    /// subalgebra.
    pub fn validate(&self) -> crate::error::Result<()> {
        match self {
            AlgebraElement::G2(_) => Ok(()),
            AlgebraElement::Exc(x) => {
                let inner = crate::exc::InnerAlgebraElement::new(
                    x.inner().tag(),
                    x.inner().matrix().clone(),
                )?;
                ExcElement::new(x.outer().clone(), inner, x.xp().clone(), x.xm().clone())
                    .map(|_| ())
            }
            AlgebraElement::E8(x) => {
                let inner = crate::e8::E6Operator::new(
                    x.inner().z().clone(),
                    x.inner().f().clone(),
                )?;
                E8Element::new(x.outer().clone(), inner, x.xp().clone(), x.xm().clone())
                    .map(|_| ())
            }
        }
    }

    /// Which block of the grading a pure basis element lives in.
    fn block_label(&self) -> String {
        match self {
            AlgebraElement::G2(x) => {
                if !x.a.is_zero() {
                    "outer"
                } else if !x.vp.is_zero() {
                    "vector+"
                } else {
                    "vector-"
                }
            }
            AlgebraElement::Exc(x) => {
                if !x.outer().is_zero() {
                    "outer"
                } else if !x.inner().is_zero() {
                    if self.algebra() != Algebra::E6 {
                        "inner"
                    } else {
                        // the two idempotent halves of the rank-2 inner block
                        let m = x.inner().matrix();
                        let plus = (0..3).all(|i| (0..3).all(|j| m.0[i][j].am.is_zero()));
                        if plus {
                            "inner+"
                        } else {
                            "inner-"
                        }
                    }
                } else if x.xp().iter().any(|v| !v.is_zero()) {
                    "vector+"
                } else {
                    "vector-"
                }
            }
            AlgebraElement::E8(x) => {
                if !x.outer().is_zero() {
                    "outer"
                } else if !x.inner().is_zero() {
                    "inner"
                } else if x.xp().iter().any(|v| !v.is_zero()) {
                    "vector+"
                } else {
                    "vector-"
                }
            }
        }
        .to_string()
    }
}

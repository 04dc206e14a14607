//! Structure-constant tables and the bulk scans built on them.
//!
//! `build_with_report` computes [e_i, e_j] for every ordered basis pair,
//! checking antisymmetry directly ([e_i,e_j] + [e_j,e_i] = 0 as elements)
//! and closure (the coordinates of the bracket re-expand to the same
//! element, residual zero).  The resulting sparse table then drives the
//! Jacobi scans: for a bilinear antisymmetric bracket the Jacobiator is
//! alternating, so it vanishes identically on triples with a repeated
//! index and changes only by sign under permutation — scanning unordered
//! triples i < j < k covers all of them.

use crate::algebra::{Algebra, AlgebraElement};
use crate::scalar::ExactScalar;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Sparse table of structure constants over the canonical basis.
#[derive(Clone, Debug)]
pub struct ScTable {
    pub algebra: Algebra,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Row for each unordered pair i < j, indexed by `pair_index`; each row
    /// lists the nonzero coordinates of [e_i, e_j].
    pub rows: Vec<Vec<(usize, ExactScalar)>>,
}

/// Outcome of building a table: the table plus everything that was checked
/// on the way.
pub struct BuildReport {
    pub table: ScTable,
    pub ordered_pairs_checked: usize,
    pub antisymmetry_failures: Vec<String>,
    pub closure_failures: Vec<String>,
    pub invariant_failures: Vec<String>,
}

/// Outcome of a Jacobi scan.
pub struct JacobiReport {
    pub triples_checked: usize,
    pub failures: Vec<String>,
}

pub fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

pub fn build_with_report(algebra: Algebra) -> BuildReport {
    let basis = algebra.basis();
    let dim = basis.len();
    let pairs: Vec<(usize, usize)> =
        (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect();
    type PairOutcome =
        (Vec<(usize, ExactScalar)>, Option<String>, Option<String>, Option<String>);
    let results: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let b = basis[i].bracket(&basis[j]);
            let anti = if b.add(&basis[j].bracket(&basis[i])).is_zero() {
                None
            } else {
                Some(format!("[e{i},e{j}] + [e{j},e{i}] != 0"))
            };
            let invariant = b
                .validate()
                .err()
                .map(|e| format!("[e{i},e{j}] breaks a block invariant: {e}"));
            let c = b.coords();
            let closure = if AlgebraElement::from_coords(algebra, &c).sub(&b).is_zero() {
                None
            } else {
                Some(format!("[e{i},e{j}] does not re-expand over the basis"))
            };
            let row: Vec<(usize, ExactScalar)> =
                c.into_iter().enumerate().filter(|(_, s)| !s.is_zero()).collect();
            (row, anti, closure, invariant)
        })
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    let mut antisymmetry_failures = Vec::new();
    let mut closure_failures = Vec::new();
    let mut invariant_failures = Vec::new();
    for (row, anti, closure, invariant) in results {
        rows.push(row);
        antisymmetry_failures.extend(anti);
        closure_failures.extend(closure);
        invariant_failures.extend(invariant);
    }
    for (i, b) in basis.iter().enumerate() {
        if !b.bracket(b).is_zero() {
            antisymmetry_failures.push(format!("[e{i},e{i}] != 0"));
        }
    }
    BuildReport {
        table: ScTable { algebra, dim, labels: algebra.basis_labels(), rows },
        ordered_pairs_checked: dim * dim,
        antisymmetry_failures,
        closure_failures,
        invariant_failures,
    }
}

/// Builds the table, panicking on any antisymmetry or closure failure.
pub fn build(algebra: Algebra) -> ScTable {
    let rep = build_with_report(algebra);
    assert!(rep.antisymmetry_failures.is_empty(), "{:?}", rep.antisymmetry_failures);
    assert!(rep.closure_failures.is_empty(), "{:?}", rep.closure_failures);
    assert!(rep.invariant_failures.is_empty(), "{:?}", rep.invariant_failures);
    rep.table
}

/// Accumulator for sparse sums of coordinate vectors: a dense scratch plus
/// the list of indices touched, so clearing costs only the support size.
struct Scratch {
    vals: Vec<ExactScalar>,
    dirty: Vec<usize>,
}

impl Scratch {
    fn new(dim: usize) -> Scratch {
        Scratch { vals: vec![ExactScalar::zero(); dim], dirty: Vec::new() }
    }

    fn add(&mut self, idx: usize, s: &ExactScalar) {
        if self.vals[idx].is_zero() && !s.is_zero() {
            self.dirty.push(idx);
        }
        self.vals[idx] = self.vals[idx].add(s);
    }

    fn drain_nonzero(&mut self) -> Vec<usize> {
        let mut bad = Vec::new();
        for &idx in &self.dirty {
            if !self.vals[idx].is_zero() {
                bad.push(idx);
            }
            self.vals[idx] = ExactScalar::zero();
        }
        self.dirty.clear();
        bad
    }
}

impl ScTable {
    /// The row of [e_a, e_b] for any order of a, b: the stored row and
    /// whether it must be negated.  None when a == b.
    fn signed_row(&self, a: usize, b: usize) -> Option<(&[(usize, ExactScalar)], bool)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => {
                Some((&self.rows[pair_index(self.dim, a, b)], false))
            }
            std::cmp::Ordering::Greater => {
                Some((&self.rows[pair_index(self.dim, b, a)], true))
            }
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Adds c * [e_m, e_k] to the scratch.
    fn accumulate(&self, scratch: &mut Scratch, c: &ExactScalar, m: usize, k: usize, flip: bool) {
        let Some((row, neg)) = self.signed_row(m, k) else { return };
        for (t, d) in row {
            let term = c.mul(d);
            if neg != flip {
                scratch.add(*t, &term.neg());
            } else {
                scratch.add(*t, &term);
            }
        }
    }

    /// Jacobiator of (e_i, e_j, e_k) accumulated into the scratch; returns
    /// the coordinates where it fails to vanish.
    fn jacobi_triple(&self, scratch: &mut Scratch, i: usize, j: usize, k: usize) -> Vec<usize> {
        if let Some((row, neg)) = self.signed_row(i, j) {
            for (m, c) in row {
                self.accumulate(scratch, c, *m, k, neg);
            }
        }
        if let Some((row, neg)) = self.signed_row(j, k) {
            for (m, c) in row {
                self.accumulate(scratch, c, *m, i, neg);
            }
        }
        if let Some((row, neg)) = self.signed_row(k, i) {
            for (m, c) in row {
                self.accumulate(scratch, c, *m, j, neg);
            }
        }
        scratch.drain_nonzero()
    }

    /// Checks the Jacobi identity on every unordered basis triple.
    pub fn jacobi_scan(&self) -> JacobiReport {
        let dim = self.dim;
        let per_i: Vec<(usize, Vec<String>)> = (0..dim)
            .into_par_iter()
            .map(|i| {
                let mut scratch = Scratch::new(dim);
                let mut checked = 0;
                let mut failures = Vec::new();
                for j in i + 1..dim {
                    for k in j + 1..dim {
                        checked += 1;
                        let bad = self.jacobi_triple(&mut scratch, i, j, k);
                        if !bad.is_empty() {
                            failures
                                .push(format!("triple ({i},{j},{k}) residual at {bad:?}"));
                        }
                    }
                }
                (checked, failures)
            })
            .collect();
        let mut report = JacobiReport { triples_checked: 0, failures: Vec::new() };
        for (n, f) in per_i {
            report.triples_checked += n;
            report.failures.extend(f);
        }
        report
    }

    /// Checks the Jacobi identity on `n` random basis triples.
    pub fn jacobi_sample(&self, n: usize, seed: u64) -> JacobiReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut scratch = Scratch::new(self.dim);
        let mut report = JacobiReport { triples_checked: 0, failures: Vec::new() };
        while report.triples_checked < n {
            let mut idx = [0usize; 3];
            for v in idx.iter_mut() {
                *v = rng.gen_range(0..self.dim);
            }
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            if i == j || j == k || i == k {
                continue;
            }
            report.triples_checked += 1;
            let bad = self.jacobi_triple(&mut scratch, i, j, k);
            if !bad.is_empty() {
                report.failures.push(format!("triple ({i},{j},{k}) residual at {bad:?}"));
            }
        }
        report
    }

    /// Bracket of two coordinate vectors through the table.
    pub fn bracket_coords(&self, x: &[ExactScalar], y: &[ExactScalar]) -> Vec<ExactScalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![ExactScalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() && y[i].is_zero() {
                continue;
            }
            for j in i + 1..self.dim {
                // coefficient of [e_i, e_j] in [x, y]
                let c = x[i].mul(&y[j]).sub(&x[j].mul(&y[i]));
                if c.is_zero() {
                    continue;
                }
                for (t, d) in &self.rows[pair_index(self.dim, i, j)] {
                    out[*t] = out[*t].add(&c.mul(d));
                }
            }
        }
        out
    }

    /// Compares the table against the live bracket on random elements;
    /// returns mismatch descriptions.
    pub fn round_trip(&self, n: usize, seed: u64) -> Vec<String> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        for t in 0..n {
            let x = AlgebraElement::random(self.algebra, &mut rng);
            let y = AlgebraElement::random(self.algebra, &mut rng);
            let via_table = self.bracket_coords(&x.coords(), &y.coords());
            if via_table != x.bracket(&y).coords() {
                failures.push(format!("random pair {t} disagrees with the live bracket"));
            }
        }
        failures
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_a_bijection() {
        let dim = 9;
        let mut seen = vec![false; dim * (dim - 1) / 2];
        for i in 0..dim {
            for j in i + 1..dim {
                let idx = pair_index(dim, i, j);
                assert!(!seen[idx]);
                seen[idx] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn small_algebra_table_is_clean() {
        let rep = build_with_report(Algebra::G2);
        assert!(rep.antisymmetry_failures.is_empty());
        assert!(rep.closure_failures.is_empty());
        assert_eq!(rep.ordered_pairs_checked, 14 * 14);
        let scan = rep.table.jacobi_scan();
        assert_eq!(scan.triples_checked, 14 * 13 * 12 / 6);
        assert!(scan.failures.is_empty());
        assert!(rep.table.round_trip(25, 3).is_empty());
    }

    #[test]
    fn table_matches_live_bracket_on_midsize_algebra() {
        let table = build(Algebra::F4);
        assert!(table.round_trip(10, 5).is_empty());
        let sample = table.jacobi_sample(200, 7);
        assert_eq!(sample.triples_checked, 200);
        assert!(sample.failures.is_empty());
    }

    #[test]
    fn a_wrong_table_is_caught() {
        let mut table = build(Algebra::G2);
        // corrupt one entry and watch the scans object
        let idx = pair_index(table.dim, 6, 8);
        assert!(!table.rows[idx].is_empty());
        table.rows[idx][0].1 = table.rows[idx][0].1.mul_int(3);
        let scan = table.jacobi_scan();
        assert!(!scan.failures.is_empty());
        assert!(!table.round_trip(5, 3).is_empty());
    }
}

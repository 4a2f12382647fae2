//! Symmetric tensor storage by canonical multi-index, the dual homogeneous
//! polynomial view, multilinear evaluation and the basic spectral invariants.

use crate::error::{Result, TensorError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Sorted (canonical) multi-index with 1-based entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Canonicalize an arbitrary index tuple by sorting.
    pub fn new(indices: &[usize]) -> Self {
        let mut v = indices.to_vec();
        v.sort_unstable();
        MultiIndex(v)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the tuple was already non-decreasing.
    pub fn is_canonical(indices: &[usize]) -> bool {
        indices.windows(2).all(|w| w[0] <= w[1])
    }

    /// Occurrence count of each value 1..=n.
    pub fn counts(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0usize; n];
        for &i in &self.0 {
            c[i - 1] += 1;
        }
        c
    }

    fn validate(&self, m: usize, n: usize) -> Result<()> {
        if self.0.len() != m || self.0.iter().any(|&i| i < 1 || i > n) {
            return Err(TensorError::IndexOutOfRange {
                index: self.0.clone(),
                order: m,
                dim: n,
            });
        }
        Ok(())
    }
}

/// m! / (k_1! ... k_n!) for the occurrence counts of a multi-index.
pub fn multinomial(counts: &[usize]) -> u64 {
    let m: usize = counts.iter().sum();
    let mut num = 1u64;
    let mut k = 0usize;
    for &c in counts {
        for j in 1..=c {
            k += 1;
            num = num * k as u64 / j as u64;
        }
    }
    debug_assert_eq!(k, m);
    num
}

/// Entry value stored with a compensation term. The represented real number is
/// hi + lo; lo is zero for directly supplied entries and carries the rounding
/// remainder of orbit-size division after polynomial conversion, which is what
/// makes the tensor <-> polynomial round trip exact in both directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn exact(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }

    /// Multiply by a small positive integer, keeping the error term.
    fn mul_int(self, k: u64) -> Self {
        let kf = k as f64;
        let p = self.hi * kf;
        let e = self.hi.mul_add(kf, -p) + self.lo * kf;
        Dd::two_sum(p, e)
    }

    /// Divide by a small positive integer, keeping the error term.
    fn div_int(self, k: u64) -> Self {
        let kf = k as f64;
        let q1 = self.hi / kf;
        let r = (-q1).mul_add(kf, self.hi) + self.lo;
        Dd::two_sum(q1, r / kf)
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let t = s - a;
        let e = (a - (s - t)) + (b - t);
        Dd { hi: s, lo: e }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct Entry {
    value: Dd,
    orbit_size: u64,
}

/// Order-m, dimension-n real symmetric tensor stored sparsely by canonical
/// multi-index. Absent indices are zero. Immutable after construction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetricTensor {
    order: usize,
    dim: usize,
    entries: BTreeMap<MultiIndex, Entry>,
}

impl SymmetricTensor {
    /// Build from the unique (canonical-orbit) entries.
    pub fn from_unique_entries(m: usize, n: usize, entries: &[(Vec<usize>, f64)]) -> Result<Self> {
        if m < 2 {
            return Err(TensorError::DegreeTooSmall(m));
        }
        if n < 1 {
            return Err(TensorError::Validation(
                "dimension must be at least 1".into(),
            ));
        }
        let mut map = BTreeMap::new();
        for (raw, v) in entries {
            let idx = MultiIndex::new(raw);
            idx.validate(m, n)?;
            let orbit_size = multinomial(&idx.counts(n));
            let prev = map.insert(
                idx.clone(),
                Entry {
                    value: Dd::exact(*v),
                    orbit_size,
                },
            );
            if prev.is_some() {
                return Err(TensorError::DuplicateIndex {
                    index: idx.indices().to_vec(),
                });
            }
        }
        Ok(SymmetricTensor {
            order: m,
            dim: n,
            entries: map,
        })
    }

    /// Diagonal-ones tensor: apply(identity, x) = x^[m-1].
    pub fn identity(m: usize, n: usize) -> Self {
        let entries: Vec<(Vec<usize>, f64)> = (1..=n).map(|i| (vec![i; m], 1.0)).collect();
        SymmetricTensor::from_unique_entries(m, n, &entries).expect("identity construction")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry value for any permutation of a multi-index (0 when absent).
    pub fn value(&self, indices: &[usize]) -> Result<f64> {
        let idx = MultiIndex::new(indices);
        idx.validate(self.order, self.dim)?;
        Ok(self.entries.get(&idx).map_or(0.0, |e| e.value.value()))
    }

    /// Canonical entries as (index, value, orbit_size), sorted by index.
    pub fn unique_entries(&self) -> impl Iterator<Item = (&MultiIndex, f64, u64)> {
        self.entries
            .iter()
            .map(|(idx, e)| (idx, e.value.value(), e.orbit_size))
    }

    pub fn num_unique_entries(&self) -> usize {
        self.entries.len()
    }

    /// Largest entry magnitude; 0 for the zero tensor.
    pub fn max_abs_entry(&self) -> f64 {
        self.entries
            .values()
            .map(|e| e.value.value().abs())
            .fold(0.0, f64::max)
    }

    /// Sum of diagonal entries a_{ii...i}.
    pub fn trace(&self) -> f64 {
        (1..=self.dim)
            .map(|i| {
                let idx = MultiIndex(vec![i; self.order]);
                self.entries.get(&idx).map_or(0.0, |e| e.value.value())
            })
            .sum()
    }

    /// (A x^{m-1})_i = sum over i_2..i_m of a_{i i_2...i_m} x_{i_2}...x_{i_m}.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.dim {
            return Err(TensorError::LengthMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut out = vec![0.0; self.dim];
        for (idx, entry) in &self.entries {
            let counts = idx.counts(self.dim);
            let v = entry.value.value();
            for (i, &ki) in counts.iter().enumerate() {
                if ki == 0 {
                    continue;
                }
                // raw tuples of this orbit with first slot fixed to i+1
                let slice_count = entry.orbit_size * ki as u64 / self.order as u64;
                let mut mono = v * slice_count as f64;
                for (j, &kj) in counts.iter().enumerate() {
                    let p = if i == j { kj - 1 } else { kj };
                    mono *= x[j].powi(p as i32);
                }
                out[i] += mono;
            }
        }
        Ok(out)
    }

    /// A x^m, the value of the associated homogeneous form.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(TensorError::LengthMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut acc = 0.0;
        for (idx, entry) in &self.entries {
            let counts = idx.counts(self.dim);
            let mut mono = entry.value.value() * entry.orbit_size as f64;
            for (j, &kj) in counts.iter().enumerate() {
                mono *= x[j].powi(kj as i32);
            }
            acc += mono;
        }
        Ok(acc)
    }

    /// Dual polynomial: coeff(alpha) = orbit_size(alpha) * a_alpha.
    pub fn to_polynomial(&self) -> HomogeneousPolynomial {
        let coeffs = self
            .entries
            .iter()
            .map(|(idx, e)| (idx.counts(self.dim), e.value.mul_int(e.orbit_size)))
            .collect();
        HomogeneousPolynomial {
            degree: self.order,
            num_vars: self.dim,
            coeffs,
        }
    }

    /// Invariants of the eigenvalue problem; determinant is filled in by the
    /// caller (oracle for n = 2, external sources otherwise).
    pub fn spectral_invariants(&self, determinant: Option<f64>) -> SpectralInvariants {
        let factor = (self.order as u64 - 1).pow(self.dim as u32 - 1);
        SpectralInvariants {
            d: self.dim * factor as usize,
            trace: self.trace(),
            scaled_trace: factor as f64 * self.trace(),
            determinant,
        }
    }
}

/// Degree-m form in n variables keyed by exponent vector (|alpha| = m).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomogeneousPolynomial {
    degree: usize,
    num_vars: usize,
    coeffs: BTreeMap<Vec<usize>, Dd>,
}

impl HomogeneousPolynomial {
    /// Build from plain (exponent vector, coefficient) pairs.
    pub fn from_coeffs(
        degree: usize,
        num_vars: usize,
        coeffs: &[(Vec<usize>, f64)],
    ) -> Result<Self> {
        if degree < 2 {
            return Err(TensorError::DegreeTooSmall(degree));
        }
        let mut map = BTreeMap::new();
        for (alpha, c) in coeffs {
            if alpha.len() != num_vars || alpha.iter().sum::<usize>() != degree {
                return Err(TensorError::Validation(format!(
                    "exponent vector {:?} does not sum to degree {}",
                    alpha, degree
                )));
            }
            if map.insert(alpha.clone(), Dd::exact(*c)).is_some() {
                return Err(TensorError::Validation(format!(
                    "duplicate exponent vector {:?}",
                    alpha
                )));
            }
        }
        Ok(HomogeneousPolynomial {
            degree,
            num_vars,
            coeffs: map,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coefficient(&self, alpha: &[usize]) -> f64 {
        self.coeffs.get(alpha).map_or(0.0, |c| c.value())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, f64)> {
        self.coeffs.iter().map(|(a, c)| (a, c.value()))
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.num_vars {
            return Err(TensorError::LengthMismatch {
                expected: self.num_vars,
                got: x.len(),
            });
        }
        let mut acc = 0.0;
        for (alpha, c) in &self.coeffs {
            let mut mono = c.value();
            for (j, &p) in alpha.iter().enumerate() {
                mono *= x[j].powi(p as i32);
            }
            acc += mono;
        }
        Ok(acc)
    }

    /// Tensor with a_alpha = coeff(alpha) / orbit_size(alpha).
    pub fn to_tensor(&self) -> Result<SymmetricTensor> {
        if self.degree < 2 {
            return Err(TensorError::DegreeTooSmall(self.degree));
        }
        let mut entries = BTreeMap::new();
        for (alpha, c) in &self.coeffs {
            let mut raw = Vec::with_capacity(self.degree);
            for (j, &p) in alpha.iter().enumerate() {
                raw.extend(std::iter::repeat(j + 1).take(p));
            }
            let idx = MultiIndex(raw);
            let orbit_size = multinomial(alpha);
            entries.insert(
                idx,
                Entry {
                    value: c.div_int(orbit_size),
                    orbit_size,
                },
            );
        }
        Ok(SymmetricTensor {
            order: self.degree,
            dim: self.num_vars,
            entries,
        })
    }
}

/// Free-function forms of the duality maps.
pub fn from_polynomial(p: &HomogeneousPolynomial) -> Result<SymmetricTensor> {
    p.to_tensor()
}

pub fn to_polynomial(t: &SymmetricTensor) -> HomogeneousPolynomial {
    t.to_polynomial()
}

/// d = n(m-1)^{n-1} eigenvalues; S = (m-1)^{n-1} tr(A) is their sum and the
/// determinant (when known) their product.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SpectralInvariants {
    pub d: usize,
    pub trace: f64,
    pub scaled_trace: f64,
    pub determinant: Option<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn quartic_diag() -> SymmetricTensor {
        SymmetricTensor::from_unique_entries(
            4,
            2,
            &[(vec![1, 1, 1, 1], 1.1), (vec![2, 2, 2, 2], 1.0)],
        )
        .unwrap()
    }

    fn quartic_coupled() -> SymmetricTensor {
        SymmetricTensor::from_unique_entries(
            4,
            2,
            &[
                (vec![1, 1, 1, 1], 12.0),
                (vec![1, 1, 2, 2], -2.0),
                (vec![2, 2, 2, 2], 10.0),
            ],
        )
        .unwrap()
    }

    fn random_tensor(rng: &mut ChaCha8Rng, m: usize, n: usize) -> SymmetricTensor {
        let mut seen = std::collections::BTreeSet::new();
        let mut entries = Vec::new();
        for _ in 0..(2 * n * m) {
            let raw: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=n)).collect();
            let idx = MultiIndex::new(&raw);
            if seen.insert(idx.clone()) {
                entries.push((idx.indices().to_vec(), rng.gen_range(-5.0..5.0)));
            }
        }
        SymmetricTensor::from_unique_entries(m, n, &entries).unwrap()
    }

    #[test]
    fn construction_and_symmetry() {
        let t = quartic_coupled();
        assert_eq!(t.value(&[1, 1, 2, 2]).unwrap(), -2.0);
        assert_eq!(t.value(&[2, 1, 2, 1]).unwrap(), -2.0);
        assert_eq!(t.value(&[1, 2, 1, 2]).unwrap(), -2.0);
        assert_eq!(t.value(&[1, 1, 1, 2]).unwrap(), 0.0);
        assert_eq!(t.trace(), 22.0);
    }

    #[test]
    fn symmetry_random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let t = random_tensor(&mut rng, 4, 3);
            for _ in 0..100 {
                let raw: Vec<usize> = (0..4).map(|_| rng.gen_range(1..=3)).collect();
                let mut perm = raw.clone();
                perm.shuffle(&mut rng);
                assert_eq!(t.value(&raw).unwrap(), t.value(&perm).unwrap());
            }
        }
    }

    #[test]
    fn duplicate_index_rejected() {
        let r = SymmetricTensor::from_unique_entries(
            3,
            2,
            &[(vec![1, 1, 2], 1.0), (vec![1, 2, 1], 2.0)],
        );
        assert!(matches!(r, Err(TensorError::DuplicateIndex { .. })));
    }

    #[test]
    fn index_out_of_range_rejected() {
        let r = SymmetricTensor::from_unique_entries(3, 2, &[(vec![1, 1, 3], 1.0)]);
        assert!(matches!(r, Err(TensorError::IndexOutOfRange { .. })));
        let r = SymmetricTensor::from_unique_entries(3, 2, &[(vec![1, 1], 1.0)]);
        assert!(matches!(r, Err(TensorError::IndexOutOfRange { .. })));
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(multinomial(&[4, 0]), 1);
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(multinomial(&[3, 1]), 4);
        assert_eq!(multinomial(&[4, 2]), 15);
        assert_eq!(multinomial(&[1, 1, 1, 1]), 24);
        assert_eq!(multinomial(&[2, 3, 3]), 560);
    }

    #[test]
    fn orbit_counting_covers_all_tuples() {
        // sum of orbit sizes over all canonical indices = n^m
        for (m, n) in [(3usize, 2usize), (4, 2), (4, 3), (2, 5)] {
            let mut total = 0u64;
            let mut stack = vec![vec![]];
            let mut canonicals = std::collections::BTreeSet::new();
            while let Some(prefix) = stack.pop() {
                if prefix.len() == m {
                    canonicals.insert(MultiIndex::new(&prefix));
                    continue;
                }
                for i in 1..=n {
                    let mut nxt = prefix.clone();
                    nxt.push(i);
                    stack.push(nxt);
                }
            }
            for idx in canonicals {
                total += multinomial(&idx.counts(n));
            }
            assert_eq!(total, (n as u64).pow(m as u32));
        }
    }

    #[test]
    fn apply_quartic_diag() {
        let t = quartic_diag();
        let y = t.apply(&[1.0, 1.0]).unwrap();
        assert_eq!(y, vec![1.1, 1.0]);
        assert_eq!(t.apply(&[0.0, 0.0]).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn apply_identity_is_componentwise_power() {
        let id = SymmetricTensor::identity(4, 2);
        assert_eq!(id.apply(&[2.0, 3.0]).unwrap(), vec![8.0, 27.0]);
        let id = SymmetricTensor::identity(5, 3);
        let x = [1.5, -2.0, 0.5];
        let y = id.apply(&x).unwrap();
        for (yi, xi) in y.iter().zip(x.iter()) {
            assert!((yi - xi.powi(4)).abs() < 1e-15);
        }
    }

    #[test]
    fn evaluate_matches_examples() {
        let t = quartic_diag();
        assert!((t.evaluate(&[1.0, 1.0]).unwrap() - 2.1).abs() < 1e-15);
        let t = quartic_coupled();
        assert_eq!(t.evaluate(&[1.0, 0.0]).unwrap(), 12.0);
        assert_eq!(t.evaluate(&[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn euler_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (m, n) in [(3usize, 2usize), (4, 2), (4, 3), (6, 2), (2, 4)] {
            let t = random_tensor(&mut rng, m, n);
            for _ in 0..100 {
                let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
                let f = t.evaluate(&x).unwrap();
                let ax = t.apply(&x).unwrap();
                let dot: f64 = x.iter().zip(ax.iter()).map(|(a, b)| a * b).sum();
                assert!(
                    (dot - f).abs() <= 1e-12 * (1.0 + f.abs()),
                    "m={m} n={n}: {dot} vs {f}"
                );
            }
        }
    }

    #[test]
    fn homogeneity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let t = random_tensor(&mut rng, 4, 3);
        for _ in 0..20 {
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let c: f64 = rng.gen_range(0.1..3.0);
            let cx: Vec<f64> = x.iter().map(|v| c * v).collect();
            let f = t.evaluate(&x).unwrap();
            let fc = t.evaluate(&cx).unwrap();
            assert!((fc - c.powi(4) * f).abs() <= 1e-10 * (1.0 + fc.abs()));
            let ax = t.apply(&x).unwrap();
            let acx = t.apply(&cx).unwrap();
            for (a, b) in acx.iter().zip(ax.iter()) {
                assert!((a - c.powi(3) * b).abs() <= 1e-10 * (1.0 + a.abs()));
            }
        }
    }

    #[test]
    fn polynomial_view_of_examples() {
        let p = quartic_coupled().to_polynomial();
        assert_eq!(p.coefficient(&[4, 0]), 12.0);
        assert_eq!(p.coefficient(&[2, 2]), -12.0);
        assert_eq!(p.coefficient(&[0, 4]), 10.0);

        let p = HomogeneousPolynomial::from_coeffs(
            6,
            2,
            &[
                (vec![6, 0], 10.0),
                (vec![4, 2], 78.0),
                (vec![2, 4], -24.0),
                (vec![0, 6], 8.0),
            ],
        )
        .unwrap();
        let t = p.to_tensor().unwrap();
        assert_eq!(t.value(&[1, 1, 1, 1, 2, 2]).unwrap(), 5.2);
        assert_eq!(t.value(&[1, 1, 2, 2, 2, 2]).unwrap(), -1.6);
    }

    #[test]
    fn duality_round_trip_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (m, n) in [(3usize, 2usize), (4, 2), (6, 2), (4, 3), (8, 3)] {
            for _ in 0..40 {
                // tensor -> polynomial -> tensor
                let t = random_tensor(&mut rng, m, n);
                let back = t.to_polynomial().to_tensor().unwrap();
                for (idx, v, _) in t.unique_entries() {
                    assert_eq!(back.value(idx.indices()).unwrap(), v, "t->p->t m={m} n={n}");
                }
                // polynomial -> tensor -> polynomial
                let coeffs: Vec<(Vec<usize>, f64)> = t
                    .to_polynomial()
                    .terms()
                    .map(|(a, _)| (a.clone(), rng.gen_range(-7.0..7.0)))
                    .collect();
                let p = HomogeneousPolynomial::from_coeffs(m, n, &coeffs).unwrap();
                let back = p.to_tensor().unwrap().to_polynomial();
                for (alpha, c) in &coeffs {
                    assert_eq!(back.coefficient(alpha), *c, "p->t->p m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn polynomial_evaluation_matches_tensor() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let t = random_tensor(&mut rng, 6, 2);
        let p = t.to_polynomial();
        for _ in 0..50 {
            let x: Vec<f64> = (0..2).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let a = t.evaluate(&x).unwrap();
            let b = p.evaluate(&x).unwrap();
            assert!((a - b).abs() <= 1e-10 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn invariants_eigencount() {
        assert_eq!(quartic_diag().spectral_invariants(None).d, 6);
        let t = SymmetricTensor::identity(6, 2);
        assert_eq!(t.spectral_invariants(None).d, 10);
        let t = SymmetricTensor::identity(2, 5);
        let inv = t.spectral_invariants(None);
        assert_eq!(inv.d, 5);
        assert_eq!(inv.trace, 5.0);
        assert_eq!(inv.scaled_trace, 5.0);
    }

    #[test]
    fn scaled_trace_exact() {
        let t = quartic_diag();
        let inv = t.spectral_invariants(None);
        assert_eq!(inv.trace, 1.1 + 1.0);
        assert_eq!(inv.scaled_trace, 3.0 * (1.1 + 1.0));
    }

    #[test]
    fn zero_tensor() {
        let t = SymmetricTensor::from_unique_entries(2, 2, &[]).unwrap();
        assert_eq!(t.trace(), 0.0);
        assert_eq!(t.value(&[1, 2]).unwrap(), 0.0);
    }
}

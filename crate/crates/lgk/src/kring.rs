//! Exact coefficient arithmetic for both sides of the correspondence.
//!
//! [`LaurentCoeff`] is an integer Laurent polynomial in the torus
//! characters `e^{eps_1}, ..., e^{eps_n}`, stored sparsely by exponent
//! vector. [`NovikovCoeff`] additionally carries an integer power of the
//! Novikov variable `Q`. [`AffineCombo`] and [`QuantumCombo`] are finite
//! linear combinations of basis classes over these rings. All maps keep a
//! canonical form: zero coefficients are never stored.

use std::collections::BTreeMap;

use crate::rootdata::RootSystemC;
use crate::shapes::{PartitionPC, StrictPartition};

/// Integer Laurent polynomial in `e^{eps_1}, ..., e^{eps_n}`.
///
/// Keys are exponent vectors of length `n`; values are nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentCoeff {
    n: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentCoeff {
    pub fn zero(n: usize) -> Self {
        LaurentCoeff { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn constant(n: usize, c: i64) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    /// The single term `c * e^{eps}`.
    pub fn monomial(n: usize, eps: Vec<i64>, c: i64) -> Self {
        assert_eq!(eps.len(), n, "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(eps, c);
        }
        LaurentCoeff { n, terms }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&vec![0; self.n][..]) == Some(&1)
    }

    /// Terms in canonical (exponent-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &LaurentCoeff) -> LaurentCoeff {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut terms = self.terms.clone();
        for (e, &c) in &other.terms {
            merge(&mut terms, e.clone(), c);
        }
        LaurentCoeff { n: self.n, terms }
    }

    pub fn neg(&self) -> LaurentCoeff {
        LaurentCoeff {
            n: self.n,
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentCoeff) -> LaurentCoeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentCoeff) -> LaurentCoeff {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut terms = BTreeMap::new();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                merge(&mut terms, e, c1 * c2);
            }
        }
        LaurentCoeff { n: self.n, terms }
    }
}

/// Element of the localized ring: an integer Laurent polynomial in the
/// torus characters and the Novikov variable `Q` (whose exponent may be
/// negative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NovikovCoeff {
    n: usize,
    terms: BTreeMap<(i64, Vec<i64>), i64>,
}

impl NovikovCoeff {
    pub fn zero(n: usize) -> Self {
        NovikovCoeff { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, vec![0; n], 1)
    }

    /// The single term `c * Q^q * e^{eps}`.
    pub fn monomial(n: usize, q: i64, eps: Vec<i64>, c: i64) -> Self {
        assert_eq!(eps.len(), n, "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((q, eps), c);
        }
        NovikovCoeff { n, terms }
    }

    pub fn q_power(n: usize, q: i64) -> Self {
        Self::monomial(n, q, vec![0; n], 1)
    }

    pub fn from_laurent(x: &LaurentCoeff) -> Self {
        NovikovCoeff {
            n: x.n,
            terms: x.terms.iter().map(|(e, &c)| ((0, e.clone()), c)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, vec![0; self.n])) == Some(&1)
    }

    /// True iff no term involves `Q` (the coefficient lies in the plain
    /// character ring).
    pub fn is_laurent(&self) -> bool {
        self.terms.keys().all(|(q, _)| *q == 0)
    }

    /// Least `Q`-exponent appearing, if any.
    pub fn min_q_exponent(&self) -> Option<i64> {
        self.terms.keys().map(|(q, _)| *q).min()
    }

    /// Drops into the plain character ring; `None` if any term involves `Q`.
    pub fn to_laurent(&self) -> Option<LaurentCoeff> {
        if !self.is_laurent() {
            return None;
        }
        Some(LaurentCoeff {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((_, e), &c)| (e.clone(), c))
                .collect(),
        })
    }

    /// Terms in canonical order: by `Q`-exponent, then exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &[i64], i64)> {
        self.terms.iter().map(|((q, e), &c)| (*q, e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &NovikovCoeff) -> NovikovCoeff {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut terms = self.terms.clone();
        for (k, &c) in &other.terms {
            merge(&mut terms, k.clone(), c);
        }
        NovikovCoeff { n: self.n, terms }
    }

    pub fn neg(&self) -> NovikovCoeff {
        NovikovCoeff {
            n: self.n,
            terms: self.terms.iter().map(|(k, &c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &NovikovCoeff) -> NovikovCoeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &NovikovCoeff) -> NovikovCoeff {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut terms = BTreeMap::new();
        for ((q1, e1), &c1) in &self.terms {
            for ((q2, e2), &c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                merge(&mut terms, (q1 + q2, e), c1 * c2);
            }
        }
        NovikovCoeff { n: self.n, terms }
    }

    /// Multiplies by `Q^k`.
    pub fn mul_q_power(&self, k: i64) -> NovikovCoeff {
        NovikovCoeff {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((q, e), &c)| ((q + k, e.clone()), c))
                .collect(),
        }
    }
}

fn merge<K: Ord>(terms: &mut BTreeMap<K, i64>, key: K, c: i64) {
    if c == 0 {
        return;
    }
    let entry = terms.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get() + c;
            if sum == 0 {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Converts an integer combination of the simple roots `alpha_1..alpha_n`
/// to epsilon coordinates: `alpha_i = eps_i - eps_{i+1}` for `i < n` and
/// `alpha_n = 2 eps_n`.
pub fn root_expr_to_eps(sys: RootSystemC, coeffs: &[i64]) -> Vec<i64> {
    let n = sys.rank();
    assert_eq!(coeffs.len(), n, "rank mismatch");
    let mut eps = vec![0i64; n];
    for (i, &c) in coeffs.iter().enumerate() {
        if i + 1 < n {
            eps[i] += c;
            eps[i + 1] -= c;
        } else {
            eps[n - 1] += 2 * c;
        }
    }
    eps
}

/// Finite combination `sum c * O_lambda * (O_{(n+1)})^loc_exp` of affine
/// basis classes with [`LaurentCoeff`] coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCombo {
    n: usize,
    terms: BTreeMap<(PartitionPC, i64), LaurentCoeff>,
}

impl AffineCombo {
    pub fn zero(n: usize) -> Self {
        AffineCombo { n, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff * O_lambda * (O_{(n+1)})^loc_exp`, merging with any
    /// existing term on the same basis key.
    pub fn add_term(&mut self, lambda: PartitionPC, loc_exp: i64, coeff: &LaurentCoeff) {
        assert_eq!(lambda.rank(), self.n, "rank mismatch");
        assert_eq!(coeff.rank(), self.n, "rank mismatch");
        if coeff.is_zero() {
            return;
        }
        let key = (lambda, loc_exp);
        let merged = match self.terms.remove(&key) {
            Some(old) => old.add(coeff),
            None => coeff.clone(),
        };
        if !merged.is_zero() {
            self.terms.insert(key, merged);
        }
    }

    pub fn add(&self, other: &AffineCombo) -> AffineCombo {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = self.clone();
        for ((lambda, d), c) in &other.terms {
            out.add_term(lambda.clone(), *d, c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentCoeff) -> AffineCombo {
        assert_eq!(self.n, c.rank(), "rank mismatch");
        let mut out = AffineCombo::zero(self.n);
        for ((lambda, d), coeff) in &self.terms {
            out.add_term(lambda.clone(), *d, &coeff.mul(c));
        }
        out
    }

    /// Terms in canonical order: by (partition, localization exponent).
    pub fn terms(&self) -> impl Iterator<Item = (&PartitionPC, i64, &LaurentCoeff)> {
        self.terms.iter().map(|((l, d), c)| (l, *d, c))
    }
}

/// Finite combination `sum c * O^mu` of quantum basis classes with
/// [`NovikovCoeff`] coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumCombo {
    n: usize,
    terms: BTreeMap<StrictPartition, NovikovCoeff>,
}

impl QuantumCombo {
    pub fn zero(n: usize) -> Self {
        QuantumCombo { n, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, mu: StrictPartition, coeff: &NovikovCoeff) {
        assert_eq!(mu.rank(), self.n, "rank mismatch");
        assert_eq!(coeff.rank(), self.n, "rank mismatch");
        if coeff.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&mu) {
            Some(old) => old.add(coeff),
            None => coeff.clone(),
        };
        if !merged.is_zero() {
            self.terms.insert(mu, merged);
        }
    }

    pub fn add(&self, other: &QuantumCombo) -> QuantumCombo {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &NovikovCoeff) -> QuantumCombo {
        assert_eq!(self.n, c.rank(), "rank mismatch");
        let mut out = QuantumCombo::zero(self.n);
        for (mu, coeff) in &self.terms {
            out.add_term(mu.clone(), &coeff.mul(c));
        }
        out
    }

    /// Multiplies every coefficient by `Q^k`.
    pub fn mul_q_power(&self, k: i64) -> QuantumCombo {
        QuantumCombo {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu.clone(), c.mul_q_power(k)))
                .collect(),
        }
    }

    /// Terms in canonical order: by (weight, parts) of the basis partition.
    pub fn terms(&self) -> impl Iterator<Item = (&StrictPartition, &NovikovCoeff)> {
        self.terms.iter()
    }
}

//! Partition combinatorics indexing the Schubert bases on both sides of
//! the correspondence.
//!
//! `PartitionPC` is the index set of the affine side: parts at most `2n`,
//! weakly decreasing, where a part that is at most `n` must strictly
//! exceed the next part (only parts `>= n+1` may repeat). `StrictPartition`
//! is the index set of the finite side: strictly decreasing parts in
//! `1..=n`, of which there are exactly `2^n`.
//!
//! The module also builds the distinguished affine elements `rho_i`, the
//! finite elements `v_i` and `u_k`, and the partition-indexed products
//! `x_of`, `v_of`, `u_of` together with the translation vector `xi_of`.

use std::fmt;

use crate::rootdata::{LatticeVector, RootSystemC};
use crate::weyl::{AffineElement, SignedPermutation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("part {part} exceeds the maximum {max} for rank {n}")]
    PartTooLarge { part: usize, max: usize, n: usize },
    #[error("parts must be weakly decreasing, found {prev} before {next}")]
    NotDecreasing { prev: usize, next: usize },
    #[error("part {part} is at most the rank {n} and may not repeat, found next part {next}")]
    SmallPartRepeated { part: usize, next: usize, n: usize },
    #[error("strict partition requires strictly decreasing parts, found {prev} before {next}")]
    NotStrictlyDecreasing { prev: usize, next: usize },
    #[error("strict partition part {part} out of range 1..={n}")]
    StrictPartOutOfRange { part: usize, n: usize },
}

/// A partition indexing the affine Schubert basis at rank `n`.
///
/// Parts are stored largest first with trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionPC {
    n: usize,
    parts: Vec<usize>,
}

impl PartitionPC {
    pub fn new(n: usize, mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        assert!(n >= 1, "rank must be positive");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for k in 0..parts.len() {
            let p = parts[k];
            if p > 2 * n {
                return Err(PartitionError::PartTooLarge { part: p, max: 2 * n, n });
            }
            if k + 1 < parts.len() {
                let q = parts[k + 1];
                if q > p {
                    return Err(PartitionError::NotDecreasing { prev: p, next: q });
                }
                if p <= n && q == p {
                    return Err(PartitionError::SmallPartRepeated { part: p, next: q, n });
                }
            }
        }
        Ok(PartitionPC { n, parts })
    }

    pub fn empty(n: usize) -> Self {
        PartitionPC { n, parts: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Sum of parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first_part(&self) -> Option<usize> {
        self.parts.first().copied()
    }
}

impl PartialOrd for PartitionPC {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PartitionPC {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.weight(), &self.parts, self.n).cmp(&(other.weight(), &other.parts, other.n))
    }
}

impl fmt::Display for PartitionPC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

/// A strictly decreasing partition with parts in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictPartition {
    n: usize,
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(n: usize, mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        assert!(n >= 1, "rank must be positive");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for k in 0..parts.len() {
            let p = parts[k];
            if p < 1 || p > n {
                return Err(PartitionError::StrictPartOutOfRange { part: p, n });
            }
            if k + 1 < parts.len() && parts[k + 1] >= p {
                return Err(PartitionError::NotStrictlyDecreasing {
                    prev: p,
                    next: parts[k + 1],
                });
            }
        }
        Ok(StrictPartition { n, parts })
    }

    pub fn empty(n: usize) -> Self {
        StrictPartition { n, parts: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Every strict partition is in particular a valid `PartitionPC`.
    pub fn to_pc(&self) -> PartitionPC {
        PartitionPC {
            n: self.n,
            parts: self.parts.clone(),
        }
    }
}

impl PartialOrd for StrictPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StrictPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.weight(), &self.parts, self.n).cmp(&(other.weight(), &other.parts, other.n))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "[]");
    }
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// The Grassmannian element `rho_i` for `1 <= i <= 2n`:
/// `s_{i-1} ... s_1 s_0` for `i <= n`, and
/// `s_{2n-i+1} ... s_{n-1} s_n s_{n-1} ... s_1 s_0` for `i > n`;
/// its length is `i`.
pub fn rho(sys: RootSystemC, i: usize) -> AffineElement {
    let n = sys.rank();
    assert!((1..=2 * n).contains(&i), "rho index {i} out of range 1..={}", 2 * n);
    let mut word = Vec::with_capacity(i);
    if i <= n {
        word.extend((0..i).rev());
    } else {
        word.extend((2 * n - i + 1)..=(n - 1));
        word.push(n);
        word.extend((0..n).rev());
    }
    AffineElement::from_word(sys, &word)
}

/// `x_of(lambda) = rho_{lambda_l} ... rho_{lambda_1}` (smallest part leftmost).
pub fn x_of(lambda: &PartitionPC) -> AffineElement {
    let sys = RootSystemC::new(lambda.rank());
    let mut x = AffineElement::identity(lambda.rank());
    for &p in lambda.parts().iter().rev() {
        x = x.multiply(&rho(sys, p));
    }
    x
}

/// The finite element `v_i` for `1 <= i <= 2n`:
/// `s_i ... s_{n-1} s_n s_{n-1} ... s_2 s_1` for `i <= n`,
/// `s_{2n-i} ... s_2 s_1` for `n+1 <= i <= 2n-1`, and the identity for
/// `i = 2n`; its length is `2n - i`.
pub fn v_of_index(sys: RootSystemC, i: usize) -> SignedPermutation {
    let n = sys.rank();
    assert!((1..=2 * n).contains(&i), "v index {i} out of range 1..={}", 2 * n);
    let mut w = SignedPermutation::identity(n);
    let mut word: Vec<usize> = Vec::new();
    if i <= n {
        word.extend(i..n);
        word.push(n);
        word.extend((1..n).rev());
    } else if i < 2 * n {
        word.extend((1..=(2 * n - i)).rev());
    }
    for j in word {
        w = w.compose(&SignedPermutation::simple(n, j));
    }
    w
}

/// `v_of(lambda) = v_{lambda_l} ... v_{lambda_1}` (smallest part leftmost).
pub fn v_of(lambda: &PartitionPC) -> SignedPermutation {
    let sys = RootSystemC::new(lambda.rank());
    let mut w = SignedPermutation::identity(lambda.rank());
    for &p in lambda.parts().iter().rev() {
        w = w.compose(&v_of_index(sys, p));
    }
    w
}

/// The translation vector with `x_of(lambda) = v_of(lambda) t_{-xi_of(lambda)}`:
/// `xi = eps_1 + sum over 1 <= i <= l-1 of (v_{lambda_1}^{-1} ... v_{lambda_i}^{-1})(eps_1)`.
pub fn xi_of(lambda: &PartitionPC) -> LatticeVector {
    let n = lambda.rank();
    let sys = RootSystemC::new(n);
    if lambda.is_empty() {
        return LatticeVector::zero(n);
    }
    let eps1 = LatticeVector::eps(n, 1);
    let mut xi = eps1.clone();
    let mut prefix = SignedPermutation::identity(n);
    for &p in &lambda.parts()[..lambda.num_parts() - 1] {
        prefix = prefix.compose(&v_of_index(sys, p).inverse());
        xi = &xi + &prefix.apply(&eps1);
    }
    xi
}

/// The last coroot coordinate of `xi_of(lambda)`; always equals the number
/// of parts.
pub fn bracket_xi(lambda: &PartitionPC) -> i64 {
    RootSystemC::new(lambda.rank()).bracket_projection(&xi_of(lambda))
}

/// Removes the first (largest) row. Panics on the empty partition.
pub fn remove_first_row(lambda: &PartitionPC) -> PartitionPC {
    assert!(!lambda.is_empty(), "cannot remove the first row of the empty partition");
    PartitionPC {
        n: lambda.n,
        parts: lambda.parts[1..].to_vec(),
    }
}

/// Discards all parts greater than `n`; the remainder is strict.
pub fn truncate(lambda: &PartitionPC) -> StrictPartition {
    let n = lambda.rank();
    StrictPartition {
        n,
        parts: lambda.parts.iter().copied().filter(|&p| p <= n).collect(),
    }
}

/// The complement involution `(mu_1, ..., mu_l) -> (n+1-mu_l, ..., n+1-mu_1)`.
pub fn star(mu: &StrictPartition) -> StrictPartition {
    let n = mu.rank();
    StrictPartition {
        n,
        parts: mu.parts.iter().rev().map(|&p| n + 1 - p).collect(),
    }
}

/// The minimal coset representative `u_k = s_{n+1-k} ... s_{n-1} s_n`
/// for `1 <= k <= n`; its length is `k`.
pub fn u_of_index(sys: RootSystemC, k: usize) -> SignedPermutation {
    let n = sys.rank();
    assert!((1..=n).contains(&k), "u index {k} out of range 1..={n}");
    let mut w = SignedPermutation::identity(n);
    for j in (n + 1 - k)..=n {
        w = w.compose(&SignedPermutation::simple(n, j));
    }
    w
}

/// `u_of(mu) = u_{mu_l} ... u_{mu_1}` (smallest part leftmost); these are
/// exactly the minimal representatives of `W / W_P`.
pub fn u_of(mu: &StrictPartition) -> SignedPermutation {
    let sys = RootSystemC::new(mu.rank());
    let mut w = SignedPermutation::identity(mu.rank());
    for &p in mu.parts().iter().rev() {
        w = w.compose(&u_of_index(sys, p));
    }
    w
}

/// Number of parts `>= n+1`.
pub fn big_part_count(lambda: &PartitionPC) -> usize {
    let n = lambda.rank();
    lambda.parts.iter().filter(|&&p| p > n).count()
}

/// All partitions of weight at most `max_weight`, ordered by
/// (weight, parts lexicographic).
pub fn enumerate_pc(sys: RootSystemC, max_weight: usize) -> Vec<PartitionPC> {
    let n = sys.rank();
    let mut out = Vec::new();
    let mut parts: Vec<usize> = Vec::new();
    fn go(
        n: usize,
        max_part: usize,
        budget: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<PartitionPC>,
    ) {
        out.push(PartitionPC {
            n,
            parts: parts.clone(),
        });
        for p in 1..=max_part.min(budget) {
            // a part <= n may not repeat below itself
            let next_max = if p <= n { p - 1 } else { p };
            parts.push(p);
            go(n, next_max, budget - p, parts, out);
            parts.pop();
        }
    }
    go(n, 2 * n, max_weight, &mut parts, &mut out);
    out.sort();
    out
}

/// All `2^n` strict partitions, ordered by (weight, parts lexicographic).
pub fn enumerate_sp(sys: RootSystemC) -> Vec<StrictPartition> {
    let n = sys.rank();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let parts: Vec<usize> = (1..=n).rev().filter(|&p| mask & (1 << (p - 1)) != 0).collect();
        out.push(StrictPartition { n, parts });
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::min_coset_rep;

    fn pc(n: usize, parts: &[usize]) -> PartitionPC {
        PartitionPC::new(n, parts.to_vec()).unwrap()
    }

    fn sp(n: usize, parts: &[usize]) -> StrictPartition {
        StrictPartition::new(n, parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(PartitionPC::new(2, vec![3, 3]).is_ok());
        assert!(PartitionPC::new(2, vec![4, 4, 3]).is_ok());
        assert_eq!(
            PartitionPC::new(2, vec![2, 2]),
            Err(PartitionError::SmallPartRepeated { part: 2, next: 2, n: 2 })
        );
        assert_eq!(
            PartitionPC::new(2, vec![5]),
            Err(PartitionError::PartTooLarge { part: 5, max: 4, n: 2 })
        );
        assert_eq!(
            PartitionPC::new(2, vec![1, 2]),
            Err(PartitionError::NotDecreasing { prev: 1, next: 2 })
        );
        // trailing zeros are stripped
        assert_eq!(pc(2, &[2, 1, 0, 0]), pc(2, &[2, 1]));
    }

    #[test]
    fn strict_validation() {
        assert!(StrictPartition::new(3, vec![3, 1]).is_ok());
        assert!(StrictPartition::new(2, vec![3]).is_err());
        assert!(StrictPartition::new(2, vec![2, 2]).is_err());
        assert!(StrictPartition::new(2, vec![]).is_ok());
    }

    #[test]
    fn display_forms() {
        assert_eq!(pc(2, &[3, 3, 2, 1]).to_string(), "3,3,2,1");
        assert_eq!(PartitionPC::empty(2).to_string(), "[]");
        assert_eq!(sp(2, &[2, 1]).to_string(), "2,1");
    }

    #[test]
    fn rho_examples() {
        let sys = RootSystemC::new(2);
        assert_eq!(rho(sys, 1), AffineElement::from_word(sys, &[0]));
        assert_eq!(rho(sys, 3), AffineElement::from_word(sys, &[2, 1, 0]));
        assert_eq!(rho(sys, 4), AffineElement::from_word(sys, &[1, 2, 1, 0]));
        for i in 1..=4 {
            assert_eq!(rho(sys, i).length(), i);
            assert!(rho(sys, i).is_grassmannian());
        }
    }

    #[test]
    fn x_of_examples() {
        assert!(x_of(&PartitionPC::empty(2)).is_identity());
        let x21 = x_of(&pc(2, &[2, 1]));
        assert_eq!(x21.finite_part().images(), &[-2, -1]);
        assert_eq!(
            x21.translation_part(),
            &LatticeVector::from_ints(&[-1, -1])
        );
        let x3 = x_of(&pc(2, &[3]));
        assert_eq!(x3.finite_part().images(), &[2, 1]);
        assert_eq!(x3.translation_part(), &LatticeVector::from_ints(&[-1, 0]));
    }

    #[test]
    fn v_of_index_examples() {
        let sys = RootSystemC::new(2);
        assert!(v_of_index(sys, 4).is_identity());
        assert_eq!(v_of_index(sys, 3), SignedPermutation::simple(2, 1));
        assert_eq!(v_of_index(sys, 1).images(), &[-1, 2]);
        for i in 1..=4 {
            assert_eq!(v_of_index(sys, i).finite_length(), 4 - i);
        }
    }

    #[test]
    fn v_rho_is_translation() {
        for n in 1..=4 {
            let sys = RootSystemC::new(n);
            let t = AffineElement::translation(-&LatticeVector::eps(n, 1));
            for i in 1..=2 * n {
                let v = AffineElement::new(v_of_index(sys, i), LatticeVector::zero(n));
                assert_eq!(v.inverse().multiply(&rho(sys, i)), t, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn xi_of_examples() {
        assert_eq!(xi_of(&pc(2, &[2, 1])), LatticeVector::from_ints(&[1, 1]));
        assert_eq!(xi_of(&pc(2, &[3])), LatticeVector::eps(2, 1));
        assert_eq!(v_of(&pc(2, &[3])), v_of_index(RootSystemC::new(2), 3));
        assert!(xi_of(&PartitionPC::empty(3)).is_zero());
    }

    #[test]
    fn decomposition_holds() {
        for n in 1..=3 {
            let sys = RootSystemC::new(n);
            for lambda in enumerate_pc(sys, 6) {
                let lhs = x_of(&lambda);
                let v = AffineElement::new(v_of(&lambda), LatticeVector::zero(n));
                let rhs = v.multiply(&AffineElement::translation(-&xi_of(&lambda)));
                assert_eq!(lhs, rhs, "n={n} lambda={lambda}");
            }
        }
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket_xi(&pc(2, &[2, 1])), 2);
        assert_eq!(bracket_xi(&PartitionPC::empty(2)), 0);
        assert_eq!(bracket_xi(&pc(2, &[4, 2, 1])), 3);
    }

    #[test]
    fn row_maps() {
        assert_eq!(remove_first_row(&pc(2, &[3, 3, 2, 1])), pc(2, &[3, 2, 1]));
        assert_eq!(remove_first_row(&pc(2, &[4])), PartitionPC::empty(2));
        assert_eq!(remove_first_row(&pc(2, &[3, 2])), pc(2, &[2]));
        assert_eq!(truncate(&pc(2, &[3, 3, 2, 1])), sp(2, &[2, 1]));
        assert_eq!(truncate(&pc(2, &[2, 1])), sp(2, &[2, 1]));
        assert_eq!(truncate(&pc(2, &[4, 3, 3])), StrictPartition::empty(2));
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&sp(2, &[2, 1])), sp(2, &[2, 1]));
        assert_eq!(star(&sp(2, &[2])), sp(2, &[1]));
        assert_eq!(star(&StrictPartition::empty(2)), StrictPartition::empty(2));
        for n in 1..=5 {
            for mu in enumerate_sp(RootSystemC::new(n)) {
                assert_eq!(star(&star(&mu)), mu);
            }
        }
    }

    #[test]
    fn u_examples() {
        let sys = RootSystemC::new(2);
        let s1s2 = SignedPermutation::simple(2, 1).compose(&SignedPermutation::simple(2, 2));
        assert_eq!(u_of_index(sys, 2), s1s2);
        assert!(u_of(&StrictPartition::empty(2)).is_identity());
        assert_eq!(u_of(&sp(2, &[2, 1])).images(), &[-2, -1]);
    }

    #[test]
    fn u_of_is_minimal_and_injective() {
        for n in 1..=5 {
            let sys = RootSystemC::new(n);
            let mut seen = std::collections::HashSet::new();
            for mu in enumerate_sp(sys) {
                let u = u_of(&mu);
                assert_eq!(min_coset_rep(&u), u, "n={n} mu={mu}");
                assert_eq!(u.finite_length(), mu.weight(), "n={n} mu={mu}");
                assert!(seen.insert(u), "duplicate image at n={n} mu={mu}");
            }
        }
    }

    #[test]
    fn big_part_counts() {
        assert_eq!(big_part_count(&pc(2, &[3, 3, 2, 1])), 2);
        assert_eq!(big_part_count(&pc(2, &[2, 1])), 0);
        assert_eq!(big_part_count(&pc(2, &[4, 3])), 2);
    }

    #[test]
    fn enumerate_sp_examples() {
        let all = enumerate_sp(RootSystemC::new(2));
        assert_eq!(
            all,
            vec![
                StrictPartition::empty(2),
                sp(2, &[1]),
                sp(2, &[2]),
                sp(2, &[2, 1])
            ]
        );
        for n in 1..=8 {
            assert_eq!(enumerate_sp(RootSystemC::new(n)).len(), 1 << n);
        }
    }

    #[test]
    fn enumerate_pc_examples() {
        let n1 = enumerate_pc(RootSystemC::new(1), 3);
        assert_eq!(
            n1,
            vec![
                PartitionPC::empty(1),
                pc(1, &[1]),
                pc(1, &[2]),
                pc(1, &[2, 1])
            ]
        );
        let n2 = enumerate_pc(RootSystemC::new(2), 3);
        assert_eq!(
            n2,
            vec![
                PartitionPC::empty(2),
                pc(2, &[1]),
                pc(2, &[2]),
                pc(2, &[2, 1]),
                pc(2, &[3])
            ]
        );
    }

    #[test]
    fn enumerate_pc_no_duplicates() {
        for n in 1..=3 {
            let all = enumerate_pc(RootSystemC::new(n), 8);
            let set: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
        }
    }
}

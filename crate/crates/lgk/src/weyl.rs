//! The affine Weyl group of type `C_n^(1)` as signed permutations with a
//! translation part.
//!
//! Elements are kept in the normal form `w t_xi` with `w` a signed
//! permutation and `xi` an integral vector in the coroot lattice; words in
//! the generators `s_0, ..., s_n` are derived on demand. Length is computed
//! by a closed inversion-counting formula and cross-checked against a
//! breadth-first enumeration oracle in the test suites.

use std::collections::HashMap;
use std::fmt;

use crate::rootdata::{LatticeVector, RootSystemC};

/// An element of the hyperoctahedral group `W(C_n)`.
///
/// `images[j-1]` is the signed index of `w(eps_j)`: value `k > 0` means
/// `eps_k`, value `-k` means `-eps_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    /// Builds from explicit images, validating the signed-permutation
    /// property.
    pub fn from_images(images: Vec<i32>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &a in &images {
            let k = a.unsigned_abs() as usize;
            assert!(
                (1..=n).contains(&k) && !seen[k - 1],
                "images {images:?} are not a signed permutation"
            );
            seen[k - 1] = true;
        }
        SignedPermutation { images }
    }

    /// The finite generator `s_i`: for `i < n` swaps `eps_i, eps_{i+1}`,
    /// for `i = n` negates `eps_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "generator index {i} out of range 1..={n}");
        let mut images: Vec<i32> = (1..=n as i32).collect();
        if i < n {
            images.swap(i - 1, i);
        } else {
            images[n - 1] = -(n as i32);
        }
        SignedPermutation { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &a)| a == j as i32 + 1)
    }

    /// Signed image of `eps_j`, 1-based.
    pub fn image(&self, j: usize) -> i32 {
        self.images[j - 1]
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Group product: `(self * other)(eps_j) = self(other(eps_j))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let images = other
            .images
            .iter()
            .map(|&a| {
                if a > 0 {
                    self.images[a as usize - 1]
                } else {
                    -self.images[(-a) as usize - 1]
                }
            })
            .collect();
        SignedPermutation { images }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut images = vec![0i32; n];
        for j in 1..=n {
            let a = self.images[j - 1];
            let k = a.unsigned_abs() as usize;
            images[k - 1] = if a > 0 { j as i32 } else { -(j as i32) };
        }
        SignedPermutation { images }
    }

    /// Linear action on the epsilon coordinates.
    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        assert_eq!(self.rank(), v.rank(), "rank mismatch");
        let mut twice = vec![0i64; self.rank()];
        for (j, &t) in v.doubled().iter().enumerate() {
            let a = self.images[j];
            let k = a.unsigned_abs() as usize;
            twice[k - 1] += if a > 0 { t } else { -t };
        }
        LatticeVector::from_halves(twice)
    }

    /// Number of positive roots sent to negative roots.
    pub fn finite_length(&self) -> usize {
        let sys = RootSystemC::new(self.rank());
        sys.positive_roots()
            .iter()
            .filter(|alpha| self.apply(alpha).leading_sign() < 0)
            .count()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// An affine Weyl group element `w t_xi` with `xi` in the coroot lattice
/// (which for type `C_n` is all of `Z^n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    w: SignedPermutation,
    xi: LatticeVector,
}

impl AffineElement {
    pub fn new(w: SignedPermutation, xi: LatticeVector) -> Self {
        assert_eq!(w.rank(), xi.rank(), "rank mismatch");
        assert!(xi.is_integral(), "translation part must be integral");
        AffineElement { w, xi }
    }

    pub fn identity(n: usize) -> Self {
        AffineElement {
            w: SignedPermutation::identity(n),
            xi: LatticeVector::zero(n),
        }
    }

    /// The pure translation `t_xi`.
    pub fn translation(xi: LatticeVector) -> Self {
        let n = xi.rank();
        AffineElement::new(SignedPermutation::identity(n), xi)
    }

    /// Generator `s_i` for `0 <= i <= n`. For `i = 0` this is
    /// `s_theta t_{-theta^v}` where `theta = 2 eps_1` is the highest root,
    /// so `s_theta` negates `eps_1` and `theta^v = eps_1`.
    pub fn simple_reflection(sys: RootSystemC, i: usize) -> Self {
        let n = sys.rank();
        assert!(i <= n, "generator index {i} out of range 0..={n}");
        if i == 0 {
            let mut images: Vec<i32> = (1..=n as i32).collect();
            images[0] = -1;
            AffineElement {
                w: SignedPermutation { images },
                xi: -&LatticeVector::eps(n, 1),
            }
        } else {
            AffineElement {
                w: SignedPermutation::simple(n, i),
                xi: LatticeVector::zero(n),
            }
        }
    }

    /// Product of generators, leftmost factor first: `[2, 1, 0]` gives
    /// `s_2 s_1 s_0`.
    pub fn from_word(sys: RootSystemC, word: &[usize]) -> Self {
        let mut x = AffineElement::identity(sys.rank());
        for &i in word {
            x = x.multiply(&AffineElement::simple_reflection(sys, i));
        }
        x
    }

    pub fn rank(&self) -> usize {
        self.w.rank()
    }

    pub fn finite_part(&self) -> &SignedPermutation {
        &self.w
    }

    pub fn translation_part(&self) -> &LatticeVector {
        &self.xi
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.xi.is_zero()
    }

    /// Semidirect-product rule: `(w t_xi)(w' t_xi') = (w w') t_{w'^{-1} xi + xi'}`.
    pub fn multiply(&self, other: &AffineElement) -> AffineElement {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let w = self.w.compose(&other.w);
        let xi = &other.w.inverse().apply(&self.xi) + &other.xi;
        AffineElement { w, xi }
    }

    /// `(w t_xi)^{-1} = w^{-1} t_{-w xi}`.
    pub fn inverse(&self) -> AffineElement {
        let w = self.w.inverse();
        let xi = -&self.w.apply(&self.xi);
        AffineElement { w, xi }
    }

    /// Coxeter length, by inversion counting over the affine roots: the
    /// affine root `alpha + k delta` (`alpha` positive, `k >= 0`, plus
    /// `-alpha + k delta` for `k >= 1`) is inverted exactly when the
    /// displayed summand is nonzero, giving
    /// `l(w t_xi) = sum over positive alpha of |<xi, alpha> + [w alpha < 0]|`.
    pub fn length(&self) -> usize {
        let sys = RootSystemC::new(self.rank());
        let mut total = 0i64;
        for alpha in sys.positive_roots() {
            let mut term = self.xi.pair(&alpha);
            if self.w.apply(&alpha).leading_sign() < 0 {
                term += 1;
            }
            total += term.abs();
        }
        total as usize
    }

    /// True iff right multiplication by every finite generator increases
    /// length; such elements are the minimal representatives of
    /// `W_af / W`.
    pub fn is_grassmannian(&self) -> bool {
        let sys = RootSystemC::new(self.rank());
        let len = self.length();
        (1..=self.rank()).all(|i| {
            self.multiply(&AffineElement::simple_reflection(sys, i)).length() > len
        })
    }

    /// The coset criterion for `(W^P)_af` with `W_P = <s_1, ..., s_{n-1}>`:
    /// writing the element as `w t_xi`, every Levi positive root `alpha`
    /// must satisfy `<xi, alpha> = 0` when `w alpha > 0` and `= -1` when
    /// `w alpha < 0`.
    pub fn is_peterson_rep(&self) -> bool {
        let sys = RootSystemC::new(self.rank());
        sys.levi_positive_roots().iter().all(|alpha| {
            let p = self.xi.pair(alpha);
            if self.w.apply(alpha).leading_sign() > 0 {
                p == 0
            } else {
                p == -1
            }
        })
    }

    /// A reduced word in `0..=n`, leftmost factor first, by greedy descent
    /// extraction on the left.
    pub fn reduced_word(&self) -> Vec<usize> {
        let sys = RootSystemC::new(self.rank());
        let mut word = Vec::new();
        let mut x = self.clone();
        let mut len = x.length();
        while len > 0 {
            let mut found = false;
            for i in 0..=self.rank() {
                let y = AffineElement::simple_reflection(sys, i).multiply(&x);
                let ylen = y.length();
                if ylen < len {
                    word.push(i);
                    x = y;
                    len = ylen;
                    found = true;
                    break;
                }
            }
            assert!(found, "no left descent on a positive-length element");
        }
        word
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} t_{}", self.w, self.xi)
    }
}

/// Minimal-length representative of the coset `w W_P`,
/// `W_P = <s_1, ..., s_{n-1}>`: right-multiplies away descents among the
/// finite generators `s_1, ..., s_{n-1}` until none remain.
pub fn min_coset_rep(w: &SignedPermutation) -> SignedPermutation {
    let n = w.rank();
    let mut cur = w.clone();
    let mut len = cur.finite_length();
    loop {
        let mut descended = false;
        for i in 1..n {
            let next = cur.compose(&SignedPermutation::simple(n, i));
            let nlen = next.finite_length();
            if nlen < len {
                cur = next;
                len = nlen;
                descended = true;
                break;
            }
        }
        if !descended {
            return cur;
        }
    }
}

/// Breadth-first closure of the identity under left multiplication by
/// `s_0, ..., s_n` exceeded the configured state cap.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("BFS state cap of {cap} elements exceeded at length {reached_len}")]
pub struct BfsCapExceeded {
    pub cap: usize,
    pub reached_len: usize,
}

/// State cap for [`bfs_enumerate`]: the `PETERSON_BFS_CAP` environment
/// variable when set to a positive integer, otherwise five million.
pub fn default_bfs_cap() -> usize {
    std::env::var("PETERSON_BFS_CAP")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(5_000_000)
}

/// All elements of length at most `max_len`, with their exact lengths,
/// sorted by (length, element). Distances come from the breadth-first
/// search itself, so this is an oracle independent of [`AffineElement::length`].
pub fn bfs_enumerate(
    sys: RootSystemC,
    max_len: usize,
    cap: usize,
) -> Result<Vec<(AffineElement, usize)>, BfsCapExceeded> {
    let n = sys.rank();
    let gens: Vec<AffineElement> = (0..=n)
        .map(|i| AffineElement::simple_reflection(sys, i))
        .collect();
    let mut dist: HashMap<AffineElement, usize> = HashMap::new();
    let mut frontier = vec![AffineElement::identity(n)];
    dist.insert(AffineElement::identity(n), 0);
    for d in 0..max_len {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = g.multiply(x);
                if !dist.contains_key(&y) {
                    if dist.len() >= cap {
                        return Err(BfsCapExceeded {
                            cap,
                            reached_len: d + 1,
                        });
                    }
                    dist.insert(y.clone(), d + 1);
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut out: Vec<(AffineElement, usize)> = dist.into_iter().collect();
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(n: usize) -> RootSystemC {
        RootSystemC::new(n)
    }

    fn s(n: usize, i: usize) -> AffineElement {
        AffineElement::simple_reflection(sys(n), i)
    }

    #[test]
    fn generator_normal_forms() {
        let s2 = s(2, 2);
        assert_eq!(s2.finite_part().images(), &[1, -2]);
        assert!(s2.translation_part().is_zero());

        let s0 = s(2, 0);
        assert_eq!(s0.finite_part().images(), &[-1, 2]);
        assert_eq!(s0.translation_part(), &LatticeVector::from_ints(&[-1, 0]));

        let s1 = s(3, 1);
        assert_eq!(s1.finite_part().images(), &[2, 1, 3]);
        assert!(s1.translation_part().is_zero());
    }

    #[test]
    fn generators_are_involutions() {
        for n in 1..=4 {
            for i in 0..=n {
                let g = s(n, i);
                assert!(g.multiply(&g).is_identity(), "n={n} i={i}");
                assert_eq!(g.inverse(), g, "n={n} i={i}");
                assert_eq!(g.length(), 1, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn semidirect_product_example() {
        let x = s(2, 0).multiply(&s(2, 1)).multiply(&s(2, 0));
        assert_eq!(x.finite_part().images(), &[-2, -1]);
        assert_eq!(x.translation_part(), &LatticeVector::from_ints(&[-1, -1]));
        assert_eq!(x.length(), 3);
        assert!(x.is_grassmannian());
    }

    #[test]
    fn multiply_identity_and_inverse() {
        let x = AffineElement::from_word(sys(3), &[0, 2, 3, 1, 0]);
        assert_eq!(x.multiply(&AffineElement::identity(3)), x);
        assert!(x.multiply(&x.inverse()).is_identity());
        assert!(x.inverse().multiply(&x).is_identity());
    }

    #[test]
    fn multiply_associative() {
        let a = AffineElement::from_word(sys(2), &[0, 1]);
        let b = AffineElement::from_word(sys(2), &[2, 0]);
        let c = AffineElement::from_word(sys(2), &[1, 2, 1]);
        assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn translation_inverse() {
        let t = AffineElement::translation(LatticeVector::from_ints(&[2, -1, 0]));
        assert_eq!(
            t.inverse(),
            AffineElement::translation(LatticeVector::from_ints(&[-2, 1, 0]))
        );
    }

    #[test]
    fn length_examples() {
        assert_eq!(AffineElement::identity(2).length(), 0);
        // rho_3 = s_2 s_1 s_0 at n=2
        let rho3 = AffineElement::from_word(sys(2), &[2, 1, 0]);
        assert_eq!(rho3.finite_part().images(), &[2, 1]);
        assert_eq!(rho3.translation_part(), &LatticeVector::from_ints(&[-1, 0]));
        assert_eq!(rho3.length(), 3);
    }

    #[test]
    fn grassmannian_examples() {
        assert!(AffineElement::identity(2).is_grassmannian());
        assert!(!s(2, 1).is_grassmannian());
        assert!(s(2, 0).is_grassmannian());
    }

    #[test]
    fn min_coset_rep_examples() {
        let id = SignedPermutation::identity(3);
        assert_eq!(min_coset_rep(&id), id);
        // s_1 lies in W_P, so its coset representative is the identity
        assert_eq!(
            min_coset_rep(&SignedPermutation::simple(2, 1)),
            SignedPermutation::identity(2)
        );
        // [-2, -1] = s_2 s_1 s_2 has no descent in {s_1}
        let w = SignedPermutation::from_images(vec![-2, -1]);
        assert_eq!(min_coset_rep(&w), w);
    }

    #[test]
    fn min_coset_rep_idempotent_and_length_split() {
        for (x, _) in bfs_enumerate(sys(2), 4, 10_000).unwrap() {
            let w = x.finite_part();
            let m = min_coset_rep(w);
            assert_eq!(min_coset_rep(&m), m);
            // the discarded part u = m^{-1} w lies in W_P and lengths add
            let u = m.inverse().compose(w);
            assert_eq!(w.finite_length(), m.finite_length() + u.finite_length());
        }
    }

    #[test]
    fn peterson_rep_examples() {
        assert!(AffineElement::identity(2).is_peterson_rep());
        // x_{(3)} = rho_3 at n=2
        let rho3 = AffineElement::from_word(sys(2), &[2, 1, 0]);
        assert!(rho3.is_peterson_rep());
        // x_{(4)} = rho_4 = s_1 s_2 s_1 s_0 at n=2
        let rho4 = AffineElement::from_word(sys(2), &[1, 2, 1, 0]);
        assert!(!rho4.is_peterson_rep());
    }

    #[test]
    fn bfs_rank_one() {
        let elems = bfs_enumerate(sys(1), 2, 1000).unwrap();
        assert_eq!(elems.len(), 5);
        assert_eq!(bfs_enumerate(sys(1), 0, 1000).unwrap().len(), 1);
        // the infinite dihedral group has two elements of each positive length
        for l in 1..=2 {
            assert_eq!(elems.iter().filter(|(_, d)| *d == l).count(), 2);
        }
    }

    #[test]
    fn bfs_grassmannian_count_matches_partitions() {
        let elems = bfs_enumerate(sys(2), 3, 10_000).unwrap();
        let count = elems
            .iter()
            .filter(|(x, d)| *d == 3 && x.is_grassmannian())
            .count();
        assert_eq!(count, 2);
    }

    #[test]
    fn bfs_cap_is_enforced() {
        let err = bfs_enumerate(sys(2), 10, 7).unwrap_err();
        assert_eq!(err.cap, 7);
    }

    #[test]
    fn formula_length_matches_bfs() {
        for n in 1..=2 {
            for (x, d) in bfs_enumerate(sys(n), 5, 100_000).unwrap() {
                assert_eq!(x.length(), d, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn length_changes_by_one() {
        for (x, _) in bfs_enumerate(sys(2), 4, 10_000).unwrap() {
            let len = x.length();
            for i in 0..=2 {
                let y = x.multiply(&s(2, i));
                let diff = y.length() as i64 - len as i64;
                assert!(diff == 1 || diff == -1, "x={x} i={i} diff={diff}");
            }
        }
    }

    #[test]
    fn reduced_words() {
        assert!(AffineElement::identity(2).reduced_word().is_empty());
        assert_eq!(s(2, 0).reduced_word(), vec![0]);
        let x = AffineElement::from_word(sys(2), &[0, 1, 0]);
        let word = x.reduced_word();
        assert_eq!(word.len(), 3);
        assert_eq!(AffineElement::from_word(sys(2), &word), x);
    }

    #[test]
    fn reduced_word_round_trip_exhaustive() {
        for (x, d) in bfs_enumerate(sys(2), 5, 100_000).unwrap() {
            let word = x.reduced_word();
            assert_eq!(word.len(), d);
            assert_eq!(AffineElement::from_word(sys(2), &word), x);
        }
    }

    #[test]
    fn default_cap_env_override() {
        // no env set in tests: the default applies
        if std::env::var("PETERSON_BFS_CAP").is_err() {
            assert_eq!(default_bfs_cap(), 5_000_000);
        }
    }
}

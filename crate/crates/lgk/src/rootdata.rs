//! The type `C_n` root system in epsilon coordinates.
//!
//! All roots, coroots and coweights are expressed in the standard basis
//! `eps_1, ..., eps_n` of the cocharacter lattice. The only half-integral
//! vector in the whole theory is the last fundamental coweight, so
//! coordinates are stored as doubled integers rather than general
//! rationals.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// The root system of type `C_n`. Carries nothing but the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootSystemC {
    n: usize,
}

impl RootSystemC {
    /// Rank must be at least 1.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive, got {n}");
        RootSystemC { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Simple root `alpha_i`: `eps_i - eps_{i+1}` for `i < n`, `2 eps_n` for `i = n`.
    pub fn simple_root(&self, i: usize) -> LatticeVector {
        assert!(
            (1..=self.n).contains(&i),
            "simple root index {i} out of range 1..={}",
            self.n
        );
        let mut c = vec![0i64; self.n];
        if i < self.n {
            c[i - 1] = 1;
            c[i] = -1;
        } else {
            c[self.n - 1] = 2;
        }
        LatticeVector::from_ints(&c)
    }

    /// Simple coroot `alpha_i^v`: `eps_i - eps_{i+1}` for `i < n`, `eps_n` for `i = n`.
    pub fn simple_coroot(&self, i: usize) -> LatticeVector {
        assert!(
            (1..=self.n).contains(&i),
            "simple coroot index {i} out of range 1..={}",
            self.n
        );
        let mut c = vec![0i64; self.n];
        if i < self.n {
            c[i - 1] = 1;
            c[i] = -1;
        } else {
            c[self.n - 1] = 1;
        }
        LatticeVector::from_ints(&c)
    }

    /// Fundamental coweight `w_i^v`, with `w_0^v = 0` by convention.
    ///
    /// `w_i^v = eps_1 + ... + eps_i` for `1 <= i <= n-1`;
    /// `w_n^v = (eps_1 + ... + eps_n) / 2` is the single half-integral vector.
    pub fn fundamental_coweight(&self, i: usize) -> LatticeVector {
        assert!(
            i <= self.n,
            "fundamental coweight index {i} out of range 0..={}",
            self.n
        );
        let mut twice = vec![0i64; self.n];
        if i == self.n {
            for t in twice.iter_mut() {
                *t = 1;
            }
        } else {
            for t in twice.iter_mut().take(i) {
                *t = 2;
            }
        }
        LatticeVector::from_halves(twice)
    }

    /// All positive roots: `eps_i - eps_j` and `eps_i + eps_j` for `i < j`,
    /// and the long roots `2 eps_i`. There are `n^2` of them.
    pub fn positive_roots(&self) -> Vec<LatticeVector> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in (i + 1)..n {
                let mut c = vec![0i64; n];
                c[i] = 1;
                c[j] = -1;
                out.push(LatticeVector::from_ints(&c));
                c[j] = 1;
                out.push(LatticeVector::from_ints(&c));
            }
            let mut c = vec![0i64; n];
            c[i] = 2;
            out.push(LatticeVector::from_ints(&c));
        }
        out
    }

    /// Positive roots of the Levi generated by `s_1, ..., s_{n-1}`:
    /// the type `A_{n-1}` roots `eps_i - eps_j` with `i < j`.
    pub fn levi_positive_roots(&self) -> Vec<LatticeVector> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let mut c = vec![0i64; n];
                c[i] = 1;
                c[j] = -1;
                out.push(LatticeVector::from_ints(&c));
            }
        }
        out
    }

    /// Expansion coefficients of an integral `xi` in the simple coroots:
    /// `xi = sum_i c_i alpha_i^v` with `c_i = x_1 + ... + x_i`.
    ///
    /// Panics if `xi` is not integral (the coroot lattice is `Z^n` here).
    pub fn coroot_coordinates(&self, xi: &LatticeVector) -> Vec<i64> {
        let coords = xi
            .to_ints()
            .expect("coroot coordinates require an integral vector");
        assert_eq!(coords.len(), self.n, "rank mismatch");
        let mut acc = 0i64;
        coords
            .iter()
            .map(|&x| {
                acc += x;
                acc
            })
            .collect()
    }

    /// The `alpha_n^v` coordinate of `[xi]`, i.e. the last coroot
    /// coordinate `c_n = x_1 + ... + x_n`. The remaining coordinates span
    /// the Levi coroot lattice and are discarded.
    pub fn bracket_projection(&self, xi: &LatticeVector) -> i64 {
        let coords = xi
            .to_ints()
            .expect("bracket projection requires an integral vector");
        assert_eq!(coords.len(), self.n, "rank mismatch");
        coords.iter().sum()
    }
}

/// A vector in the epsilon basis with coordinates in `(1/2) Z`.
///
/// Coordinates are stored doubled, so every operation is exact integer
/// arithmetic. Vectors asserted to lie in the (co)root lattice are checked
/// integral where it matters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    twice: Vec<i64>,
}

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector { twice: vec![0; n] }
    }

    /// The basis vector `eps_i`, 1-based.
    pub fn eps(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "eps index {i} out of range 1..={n}");
        let mut twice = vec![0; n];
        twice[i - 1] = 2;
        LatticeVector { twice }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        LatticeVector {
            twice: coords.iter().map(|&c| 2 * c).collect(),
        }
    }

    /// Build from doubled coordinates; `from_halves(vec![1, 1])` is `(1/2, 1/2)`.
    pub fn from_halves(twice: Vec<i64>) -> Self {
        LatticeVector { twice }
    }

    pub fn rank(&self) -> usize {
        self.twice.len()
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|&t| t == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.twice.iter().all(|&t| t % 2 == 0)
    }

    /// Integer coordinates, or `None` if any coordinate is half-integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        if self.is_integral() {
            Some(self.twice.iter().map(|&t| t / 2).collect())
        } else {
            None
        }
    }

    /// Doubled coordinates (always exact).
    pub fn doubled(&self) -> &[i64] {
        &self.twice
    }

    /// The perfect pairing `<self, other>` with `<eps_i, eps_j> = delta_ij`.
    ///
    /// The value is integral for every pairing this crate performs (one of
    /// the two sides is always integral, or the half-integral coweight is
    /// paired against a root); panics if a genuinely non-integral value
    /// would be produced.
    pub fn pair(&self, other: &LatticeVector) -> i64 {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in pairing");
        let quadrupled: i64 = self
            .twice
            .iter()
            .zip(&other.twice)
            .map(|(&a, &b)| a * b)
            .sum();
        assert!(
            quadrupled % 4 == 0,
            "pairing value {}/4 is not an integer",
            quadrupled
        );
        quadrupled / 4
    }

    /// Sign of the first nonzero coordinate; 0 for the zero vector.
    /// For a root vector this decides positivity.
    pub fn leading_sign(&self) -> i64 {
        for &t in &self.twice {
            if t != 0 {
                return t.signum();
            }
        }
        0
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        LatticeVector {
            twice: self
                .twice
                .iter()
                .zip(&rhs.twice)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        LatticeVector {
            twice: self
                .twice
                .iter()
                .zip(&rhs.twice)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector {
            twice: self.twice.iter().map(|&a| -a).collect(),
        }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, &t) in self.twice.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if t % 2 == 0 {
                write!(f, "{}", t / 2)?;
            } else {
                write!(f, "{}/2", t)?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_ints(coords)
    }

    #[test]
    fn simple_roots() {
        let c2 = RootSystemC::new(2);
        assert_eq!(c2.simple_root(1), lv(&[1, -1]));
        assert_eq!(c2.simple_root(2), lv(&[0, 2]));
        let c4 = RootSystemC::new(4);
        assert_eq!(c4.simple_root(3), lv(&[0, 0, 1, -1]));
    }

    #[test]
    fn simple_coroots() {
        assert_eq!(RootSystemC::new(2).simple_coroot(2), lv(&[0, 1]));
        assert_eq!(RootSystemC::new(3).simple_coroot(1), lv(&[1, -1, 0]));
        assert_eq!(RootSystemC::new(1).simple_coroot(1), lv(&[1]));
    }

    #[test]
    fn fundamental_coweights() {
        let c2 = RootSystemC::new(2);
        assert_eq!(c2.fundamental_coweight(2), LatticeVector::from_halves(vec![1, 1]));
        assert_eq!(c2.fundamental_coweight(0), lv(&[0, 0]));
        assert_eq!(RootSystemC::new(3).fundamental_coweight(2), lv(&[1, 1, 0]));
    }

    #[test]
    fn last_coweight_doubles_into_coroot_lattice() {
        for n in 1..=6 {
            let sys = RootSystemC::new(n);
            let w = sys.fundamental_coweight(n);
            let doubled = &w + &w;
            assert!(doubled.is_integral());
            // re-expansion through coroot coordinates reproduces the vector
            let coords = sys.coroot_coordinates(&doubled);
            let mut acc = LatticeVector::zero(n);
            for (i, &c) in coords.iter().enumerate() {
                let coroot = sys.simple_coroot(i + 1);
                let scaled =
                    LatticeVector::from_halves(coroot.doubled().iter().map(|&t| t * c).collect());
                acc = &acc + &scaled;
            }
            assert_eq!(acc, doubled);
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(lv(&[1, 0]).pair(&lv(&[1, -1])), 1);
        assert_eq!(lv(&[1, 1]).pair(&lv(&[0, 2])), 2);
        assert_eq!(lv(&[1, 2]).pair(&lv(&[1, -1])), -1);
    }

    #[test]
    #[should_panic(expected = "rank mismatch")]
    fn pairing_rank_mismatch() {
        lv(&[1, 0]).pair(&lv(&[1, 0, 0]));
    }

    #[test]
    fn cartan_matrix() {
        for n in 1..=5 {
            let sys = RootSystemC::new(n);
            for i in 1..=n {
                for j in 1..=n {
                    let entry = sys.simple_coroot(j).pair(&sys.simple_root(i));
                    let expected = if i == j {
                        2
                    } else if j == n - 1 && i == n {
                        -2
                    } else if i.abs_diff(j) == 1 {
                        -1
                    } else {
                        0
                    };
                    assert_eq!(entry, expected, "n={n} <a_{j}^v, a_{i}>");
                }
            }
        }
    }

    #[test]
    fn coroot_coordinate_examples() {
        let c2 = RootSystemC::new(2);
        assert_eq!(c2.coroot_coordinates(&lv(&[1, 0])), vec![1, 1]);
        assert_eq!(c2.coroot_coordinates(&lv(&[1, 1])), vec![1, 2]);
        let c3 = RootSystemC::new(3);
        assert_eq!(c3.coroot_coordinates(&lv(&[0, 0, 0])), vec![0, 0, 0]);
    }

    // Independent oracle: re-expand sum c_i alpha_i^v and compare, over a box.
    #[test]
    fn coroot_coordinates_reexpansion_exhaustive() {
        for n in 1..=4usize {
            let sys = RootSystemC::new(n);
            let mut coords = vec![-3i64; n];
            loop {
                let xi = lv(&coords);
                let cs = sys.coroot_coordinates(&xi);
                let mut acc = LatticeVector::zero(n);
                for (i, &c) in cs.iter().enumerate() {
                    let coroot = sys.simple_coroot(i + 1);
                    let scaled =
                        LatticeVector::from_halves(coroot.doubled().iter().map(|&t| t * c).collect());
                    acc = &acc + &scaled;
                }
                assert_eq!(acc, xi, "re-expansion failed for {xi}");
                // odometer over {-3..3}^n
                let mut k = 0;
                loop {
                    if k == n {
                        break;
                    }
                    coords[k] += 1;
                    if coords[k] <= 3 {
                        break;
                    }
                    coords[k] = -3;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
    }

    #[test]
    fn bracket_projection_examples() {
        let c2 = RootSystemC::new(2);
        assert_eq!(c2.bracket_projection(&lv(&[1, 0])), 1);
        assert_eq!(c2.bracket_projection(&lv(&[1, 1])), 2);
        assert_eq!(c2.bracket_projection(&LatticeVector::zero(2)), 0);
        // consistency with the full coordinate expansion
        for coords in [[2, -1], [0, 3], [-2, -2]] {
            let xi = lv(&coords);
            assert_eq!(
                c2.bracket_projection(&xi),
                *c2.coroot_coordinates(&xi).last().unwrap()
            );
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(lv(&[1, -1]).to_string(), "(1, -1)");
        assert_eq!(
            RootSystemC::new(2).fundamental_coweight(2).to_string(),
            "(1/2, 1/2)"
        );
    }
}

//! The correspondence between the affine and quantum sides: reduction
//! modulo the first-row ideal, the basis-level map and its form on
//! Grassmannian elements, transport of product expansions, and the
//! homology limit with its degree bookkeeping.

use std::collections::HashMap;

use crate::kring::{AffineCombo, NovikovCoeff, QuantumCombo};
use crate::rootdata::RootSystemC;
use crate::shapes::{
    big_part_count, remove_first_row, star, truncate, x_of, PartitionPC, StrictPartition,
};
use crate::weyl::{min_coset_rep, AffineElement, SignedPermutation};

/// Shared lookup data for one rank: the coset-representative table
/// `u_of(mu) -> mu` over all `2^n` strict partitions, plus the
/// distinguished single-row partition `(n+1)` and the degree of `q`.
#[derive(Debug, Clone)]
pub struct PetersonContext {
    sys: RootSystemC,
    coset_table: HashMap<SignedPermutation, StrictPartition>,
}

impl PetersonContext {
    pub fn new(sys: RootSystemC) -> Self {
        let coset_table = crate::shapes::enumerate_sp(sys)
            .into_iter()
            .map(|mu| (crate::shapes::u_of(&mu), mu))
            .collect();
        PetersonContext { sys, coset_table }
    }

    pub fn sys(&self) -> RootSystemC {
        self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    /// The single-row partition `(n+1)` whose class generates the
    /// multiplicative system inverted on the affine side.
    pub fn distinguished_partition(&self) -> PartitionPC {
        PartitionPC::new(self.rank(), vec![self.rank() + 1]).expect("(n+1) is always valid")
    }

    /// Degree of the quantum parameter: `n + 1`.
    pub fn q_degree(&self) -> i64 {
        self.rank() as i64 + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PhiError {
    #[error("element is not Grassmannian: {element}")]
    NotGrassmannian { element: String },
    #[error("coset representative {rep} is not of the form u_mu; the table is inconsistent")]
    UnknownCosetRep { rep: String },
}

/// Image of an affine homology class in the quantum-cohomology limit:
/// either zero, or `q^{q_exp}` times the class of `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyImage {
    Zero,
    Class { q_exp: i64, mu: StrictPartition },
}

/// Reduction modulo the first-row ideal: `O_lambda` is congruent to
/// `(O_{(n+1)})^a O_mu` with `a` the number of parts `>= n+1` and `mu`
/// the truncation. Each step removes one first row of size `>= n+1`.
pub fn j_reduce(ctx: &PetersonContext, lambda: &PartitionPC) -> (usize, StrictPartition) {
    assert_eq!(lambda.rank(), ctx.rank(), "rank mismatch");
    let mut a = 0;
    let mut cur = lambda.clone();
    while cur.first_part().is_some_and(|p| p > ctx.rank()) {
        cur = remove_first_row(&cur);
        a += 1;
    }
    debug_assert_eq!(a, big_part_count(lambda));
    (a, truncate(lambda))
}

/// Basis-level map on `O_lambda (O_{(n+1)})^{-k}`: the image is
/// `Q^{k - l(lambda)}` times the class of `star(truncate(lambda))`.
pub fn phi_index(
    ctx: &PetersonContext,
    lambda: &PartitionPC,
    k: i64,
) -> (i64, StrictPartition) {
    assert_eq!(lambda.rank(), ctx.rank(), "rank mismatch");
    (k - lambda.num_parts() as i64, star(&truncate(lambda)))
}

/// Linear extension of [`phi_index`] to combinations; a term with
/// localization exponent `d` carries `k = -d`.
pub fn phi_combo(ctx: &PetersonContext, x: &AffineCombo) -> QuantumCombo {
    assert_eq!(x.rank(), ctx.rank(), "rank mismatch");
    let mut out = QuantumCombo::zero(ctx.rank());
    for (lambda, d, coeff) in x.terms() {
        let (q_exp, mu) = phi_index(ctx, lambda, -d);
        out.add_term(mu, &NovikovCoeff::from_laurent(coeff).mul_q_power(q_exp));
    }
    out
}

/// The map evaluated directly on a Grassmannian element `w t_xi`: the
/// `Q`-exponent is the last coroot coordinate of `xi` and the target class
/// is read off the coset representative of `w`.
pub fn phi_grassmannian(
    ctx: &PetersonContext,
    x: &AffineElement,
) -> Result<(i64, StrictPartition), PhiError> {
    assert_eq!(x.rank(), ctx.rank(), "rank mismatch");
    if !x.is_grassmannian() {
        return Err(PhiError::NotGrassmannian {
            element: x.to_string(),
        });
    }
    let q_exp = ctx.sys.bracket_projection(x.translation_part());
    let rep = min_coset_rep(x.finite_part());
    let mu = ctx
        .coset_table
        .get(&rep)
        .ok_or_else(|| PhiError::UnknownCosetRep {
            rep: rep.to_string(),
        })?;
    Ok((q_exp, mu.clone()))
}

/// A product relation carried across the correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportedRelation {
    /// The two factor classes on the quantum side.
    pub lhs: (StrictPartition, StrictPartition),
    /// Expansion of their product.
    pub rhs: QuantumCombo,
    /// One entry per output term whose coefficient has a negative
    /// `Q`-exponent; genuine product expansions never produce any.
    pub warnings: Vec<String>,
}

/// Transports an affine-side product expansion `O_lambda * O_mu = rhs`
/// to the quantum side: the result expands
/// `O^{star(truncate(lambda))} * O^{star(truncate(mu))}`, where an input
/// term `c * O_nu * (O_{(n+1)})^d` contributes
/// `c * Q^{l(lambda) + l(mu) - l(nu) - d}` on the class of
/// `star(truncate(nu))`.
pub fn transport_product(
    ctx: &PetersonContext,
    lambda: &PartitionPC,
    mu: &PartitionPC,
    rhs: &AffineCombo,
) -> TransportedRelation {
    assert_eq!(lambda.rank(), ctx.rank(), "rank mismatch");
    assert_eq!(mu.rank(), ctx.rank(), "rank mismatch");
    assert_eq!(rhs.rank(), ctx.rank(), "rank mismatch");
    let shift = (lambda.num_parts() + mu.num_parts()) as i64;
    let image = phi_combo(ctx, rhs).mul_q_power(shift);
    let mut warnings = Vec::new();
    for (target, coeff) in image.terms() {
        if let Some(q) = coeff.min_q_exponent() {
            if q < 0 {
                warnings.push(format!(
                    "coefficient of O^{target} has negative Q-exponent {q}"
                ));
            }
        }
    }
    TransportedRelation {
        lhs: (star(&truncate(lambda)), star(&truncate(mu))),
        rhs: image,
        warnings,
    }
}

/// The homology limit on basis elements: zero when the first part is at
/// least `n + 2`, otherwise `q^{k - l(lambda)}` times the class of
/// `star(truncate(lambda))`.
pub fn homology_transport(
    ctx: &PetersonContext,
    lambda: &PartitionPC,
    k: i64,
) -> HomologyImage {
    assert_eq!(lambda.rank(), ctx.rank(), "rank mismatch");
    if lambda.first_part().is_some_and(|p| p >= ctx.rank() + 2) {
        return HomologyImage::Zero;
    }
    HomologyImage::Class {
        q_exp: k - lambda.num_parts() as i64,
        mu: star(&truncate(lambda)),
    }
}

/// Degree bookkeeping for the homology limit: with `deg(q) = n + 1`,
/// source degree `|lambda| - k(n+1)` plus image degree
/// `(k - l(lambda))(n+1) + |star(truncate(lambda))|` must vanish.
/// Zero images pass vacuously.
pub fn degree_check(ctx: &PetersonContext, lambda: &PartitionPC, k: i64) -> bool {
    assert_eq!(lambda.rank(), ctx.rank(), "rank mismatch");
    match homology_transport(ctx, lambda, k) {
        HomologyImage::Zero => true,
        HomologyImage::Class { q_exp, mu } => {
            let d = ctx.q_degree();
            let source = lambda.weight() as i64 - k * d;
            let image = q_exp * d + mu.weight() as i64;
            source + image == 0
        }
    }
}

/// Documented cross-check used by the verification suites: the element
/// form and the index form of the map agree on `x_of(lambda)`.
pub fn phi_forms_agree(ctx: &PetersonContext, lambda: &PartitionPC) -> bool {
    match phi_grassmannian(ctx, &x_of(lambda)) {
        Ok(pair) => pair == phi_index(ctx, lambda, 0),
        Err(_) => false,
    }
}

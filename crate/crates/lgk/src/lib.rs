//! Exact combinatorics of the type `C_n^(1)` affine Weyl group and the
//! K-theoretic Peterson correspondence between the affine Grassmannian of
//! `Sp_{2n}` and the equivariant quantum K-ring of the Lagrangian
//! Grassmannian `LG(n)`.
//!
//! Everything is exact integer (or half-integer) arithmetic; there are no
//! floats anywhere. The crate is organised as:
//!
//! - [`rootdata`]: the type `C_n` root system in epsilon coordinates,
//!   pairings, and the coroot-coordinate projection `[xi]`.
//! - [`weyl`]: signed permutations, affine elements `w t_xi`, length,
//!   reduced words, Grassmannian / Peterson coset tests, and a BFS
//!   enumeration oracle.
//! - [`shapes`]: the partition index sets, the elements `rho_i`, `v_i`,
//!   `u_k`, and the maps between partitions and affine elements.
//! - [`kring`]: Laurent-polynomial coefficients over the torus characters,
//!   Novikov powers, and linear combinations of Schubert classes.
//! - [`peterson`]: ideal reduction, the class transport map and its
//!   Grassmannian-element form, product transport, and the homology limit.
//! - [`verify`]: exhaustive machine checks for every structural statement,
//!   with structured pass/fail reports.
//! - [`textio`]: the coefficient expression grammar, partition syntax,
//!   JSON relation files, and canonical printing.
//! - [`cli`]: the `lgk` command line tool.
//!
//! Preconditions on the core algebraic operations (index ranges, rank
//! agreement) panic when violated; everything that consumes user input
//! (partitions, expressions, relation files) returns `Result`.

pub mod cli;
pub mod kring;
pub mod peterson;
pub mod rootdata;
pub mod shapes;
pub mod textio;
pub mod verify;
pub mod weyl;

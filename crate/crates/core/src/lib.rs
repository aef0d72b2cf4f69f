//! Exact combinatorics of set partitions, rook placements on upper-triangular
//! boards, and the algebra of symmetric functions in noncommuting variables.
//!
//! The crate is organized around [`SetPartition`], which every other module
//! consumes or produces:
//!
//! * [`partition`]: standard form, enumeration, restricted growth functions,
//!   the slash and split products and their atomic/unsplitable factorizations.
//! * [`rook`]: rooks on `T_n`, the partition bijection, extended direct sum,
//!   extendability and the rook algebra.
//! * [`ncsym`]: truncated monomial and power-sum expansions, change of basis,
//!   and the map from the power-sum basis onto the rook algebra.
//! * [`verify`]: exhaustive checking suites with JSON reports.

pub mod error;
pub mod lincomb;
pub mod ncsym;
pub mod partition;
pub mod rook;
pub mod verify;

pub use error::{NcsymError, PartitionError, RookError, VerifyError};
pub use lincomb::{Coeff, LinComb};
pub use ncsym::{
    expand_m, expand_p, mu_matrix, multiply_nc, permute_variables, product_p, rook_image, to_basis,
    type_partition, zeta_matrix, Basis, BasisMatrix, NCMonomial, NCPolynomial, NCSymElement,
};
pub use partition::{
    atomic_factor, coarser_eq, enumerate_partitions, from_rgf, is_atomic, is_unsplitable,
    normalize, shift, slash, split, to_rgf, unsplitable_factor, Partitions, Rgf, SetPartition,
};
pub use rook::{
    edsum, enumerate_rooks, extend, is_extendable, is_extendable_bruteforce, partition_to_rook,
    rook_product, rook_to_partition, slash_decompositions, Obstruction, PermutationMatrix,
    RookAlgebraElement, RookPlacement,
};

pub use verify::{CountRow, CountTable, VerificationReport};

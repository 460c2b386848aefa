//! Verification engine for congruences of partitions whose odd parts come in
//! several colors.
//!
//! The counting function `a_k(n)` has generating function `f_2^{k-1} / f_1^k`
//! where `f_d = prod_{n >= 1} (1 - q^{dn})`. Everything here works with
//! truncated q-expansions reduced modulo a small prime:
//!
//! - [`series`]: truncated power series over `Z/mZ` and sparse eta-product kernels
//! - [`partitions`]: generating functions for `p`, `p_k`, `a_k` plus an exact
//!   enumeration oracle
//! - [`eta`]: eta quotients, the sufficient modularity conditions, Kronecker symbols
//! - [`hecke`]: the mod-p Hecke operator `T_p = U_p`
//! - [`prover`]: the mod 3 family pipeline (parameters, Sturm bounds, internal,
//!   base and lifted congruences)
//! - [`ramanujan`]: the `a_11` congruences modulo 5, 7 and 11
//! - [`report`]: serializable verification reports and congruence claims

pub mod error;
pub mod eta;
pub mod hecke;
pub mod par;
pub mod partitions;
pub mod prover;
pub mod ramanujan;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use eta::{check_modularity, cusp_order_sums, kronecker, CharacterKind, EtaQuotient, FormSpec};
pub use hecke::{u_p, u_p_iter, HeckeResult};
pub use par::Exec;
pub use partitions::{brute_force_a, gen_a, PartitionFamily, PartitionSeries};
pub use prover::{derive_params, sturm_bound, FamilyParams, THEOREM_ALPHAS};
pub use report::{CongruenceClaim, VerificationReport};
pub use series::{eta_product, frobenius_pow3, scale_exponents, TruncSeries};

//! Exact arithmetic for Noether–Lefschetz divisors on the moduli space `K_g` of
//! quasi-polarized K3 surfaces of genus `g`.
//!
//! * [`lattice`]: rank-two lattices `⟨L, β⟩`, discriminants, canonical divisor labels.
//! * [`rank`] and [`jacobi`]: the closed-form rank `ρ_g` of the span of NL divisors.
//! * [`nonbn`]: divisors covering the non-Brill–Noether-general locus.
//! * [`divisor`]: supports of curve-class loci, generator sets, relations, elliptic divisors.
//! * [`mukai`]: Mukai models and GIT parameter spaces, with dimension checks.
//! * [`report`], [`output`], [`cli`]: the consolidated report and the command-line surface.
//!
//! All integer arithmetic on lattice data is arbitrary precision; there is no floating point.

pub mod cli;
pub mod divisor;
pub mod error;
pub mod jacobi;
pub mod lattice;
pub mod mukai;
pub mod nonbn;
pub mod output;
pub mod rank;
pub mod reference;
pub mod report;

pub use divisor::{
    check_peterson_relation, check_relation, decompose, decompose_default, elliptic_divisors,
    generators, peterson_relation, Check, EllipticDivisors, GeneratorSet, LinearRelation,
    SupportSet,
};
pub use error::{Error, Result, Violation};
pub use jacobi::{jacobi, jacobi_i64};
pub use lattice::{equivalent, represent, represent_exhaustive, CanonicalDivisor, Genus, NlPair};
pub use mukai::{MukaiCatalog, MukaiModel};
pub use nonbn::{is_nonbn, nonbn_closed_form, nonbn_system, NonBnList};
pub use rank::{betti2, rho, RhoBreakdown};
pub use report::{build_report, Report};

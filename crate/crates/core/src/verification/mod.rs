//! Finite-horizon checks of the chaos conditions and constructive witnesses.
//!
//! Limit statements are only ever examined up to an explicit depth or step
//! horizon. A check that found nothing wrong but could not close the limit
//! reports [`Verdict::Inconclusive`] rather than passing.

mod conditions;
mod devaney;
mod report;
mod witnesses;

pub use conditions::{
    check_diameter_condition, check_separation, max_diameter_at, search_separation, DiameterMethod,
    SeparationCertificate, SeparationOutcome,
};
pub use devaney::{verify_devaney, DevaneyParams};
pub use report::{Verdict, VerificationReport};
pub use witnesses::{
    li_yorke_pair, periodic_approximation, poisson_return_check, sensitivity_witness,
    transitive_witness, transitive_witness_with, LiYorkePair, PeriodicApproximation,
    SensitivityWitness, TransitiveWitness,
};

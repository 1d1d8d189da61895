//! Isomorphism decision, witnesses and classification for the two families.

pub mod calibrate;
pub mod classify;
pub mod decide;
pub mod monomial;
pub mod orbit;
pub mod weights;
pub mod witness;

pub use calibrate::{calibrate_exponents, Calibration};
pub use classify::{branch_of, classify, fingerprint, Fingerprint};
pub use decide::{decide_iso, decide_iso_m1, decide_iso_m2, IsoDecision, TraceRecord};
pub use monomial::{monomial_solvable, solve_in_qi, MonomialSystem, MonomialVerdict, Residual};
pub use weights::{act, weight_table, Weight};
pub use witness::{apply_witness, read_params, verify_witness, IsoWitness};

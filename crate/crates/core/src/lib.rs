//! Gaussian EPR-steering monogamy of a two-mode squeezed state whose second
//! arm passes through a Hawking-radiation channel.
//!
//! The crate is organised bottom-up:
//!
//! - [`symplectic`]: covariance matrices, symplectic transforms, Schur
//!   complements, symplectic eigenvalues and the Renyi-2 entropy.
//! - [`hawking`]: temperature and squeezing conversions, the initial two-mode
//!   squeezed vacuum and the three-mode state after the channel.
//! - [`steering`]: directional Gaussian steering, monogamy deficits,
//!   monogamy asymmetry and the full CKW report.
//! - [`analytic`]: closed-form steering expressions and transition points,
//!   used as an independent check on the numeric pipeline.
//! - [`sweep`]: temperature sweeps, transition bisection and oracle
//!   verification.
//! - [`output`] and [`cli`]: CSV/JSON records and the `steerbh` command line.
//!
//! ## Examples
//!
//! ```text
//! cargo run --example symplectic_basics    # gates, spectra, entropy
//! cargo run --example hawking_channel      # T -> r and the three-mode state
//! cargo run --example steering_report -- 1 1   # full report at (s, T)
//! cargo run --example temperature_sweep    # CSV table on stdout
//! cargo run --example transitions          # sudden death / sudden birth
//! cargo run --example oracle_check         # numeric vs closed forms
//! cargo run --example asymmetry_peak       # asymmetry maxima vs T*
//! ```
//!
//! ```
//! use steerbh::{hawking, steering::ThreePartyState, Party};
//!
//! let params = hawking::HawkingParams::from_temperature(1.0, 1.0)?;
//! let cm = hawking::three_mode_state(1.0, &params)?;
//! let report = ThreePartyState::standard(cm)?.ckw_report()?;
//! assert!(report.monogamous);
//! assert_eq!(report.steering_of(&[Party::A], &[Party::Bbar]), Some(0.0));
//! # Ok::<(), steerbh::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod cli;
pub mod error;
pub mod hawking;
pub mod output;
pub mod party;
pub mod steering;
pub mod sweep;
pub mod symplectic;

pub use error::{Error, Result};
pub use party::{Party, PartyMap, PartySet};
pub use steering::{SteeringDirection, SteeringReport, ThreePartyState};
pub use symplectic::{CovarianceMatrix, SymplecticTransform};

//! Simulation of probabilistic quantum state sharing over partially entangled channels.
//!
//! A sender holding `α|0⟩ + β|1⟩` shares it with one of several parties
//! through either a partially entangled GHZ channel or a set of partially
//! entangled Bell pairs. By tuning the parameter `m` of her measurement basis
//! she can make selected outcomes transfer the state with unit fidelity; the
//! remaining outcomes fail gracefully. The crate enumerates every branch
//! exactly, checks the receiver's states against their closed forms, and
//! estimates the Haar-averaged protocol efficiency.
//!
//! ```
//! use qsts::bases::{BasisParameter, ChannelParameter};
//! use qsts::protocols::{run_protocol1, Receiver};
//! use qsts::qstate::InputQubit;
//!
//! let input = InputQubit::normalized((0.6).into(), (0.8).into()).unwrap();
//! let n = ChannelParameter::real(0.5).unwrap();
//! let m = BasisParameter::real(0.5).unwrap();
//! let run = run_protocol1(&input, n, m, Receiver::Charlie).unwrap();
//! assert_eq!(run.branches.len(), 8);
//! // m = n makes the PhiMinus and PsiPlus outcomes succeed
//! assert!(run.branch("PhiMinus", &["XPlus"]).unwrap().is_success());
//! ```

pub mod bases;
pub mod cli;
pub mod efficiency;
pub mod error;
pub mod format;
pub mod measurement;
pub mod protocols;
pub mod qstate;

pub use error::{QstsError, Result};

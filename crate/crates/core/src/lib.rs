//! Multiobjective discrete state transition search for single-machine
//! scheduling with job pairing.
//!
//! Jobs sharing a material can be paired when adjacent in the sequence,
//! earning a cost saving. The search maximizes total savings while
//! minimizing total tardiness and returns the Pareto front.
//!
//! ```
//! use dsta_core::{bench::random_instance, bench::InstanceRanges, oracle, solver};
//!
//! let instance = random_instance(5, 1, &InstanceRanges::default()).unwrap();
//! let result = solver::run(&instance, &solver::SolverConfig::default()).unwrap();
//! let exact = oracle::enumerate_front(&instance, oracle::DEFAULT_ENUMERATION_LIMIT).unwrap();
//! assert_eq!(result.archive.objective_points(), exact.objective_points);
//! ```

pub mod bench;
pub mod domain;
pub mod error;
pub mod operators;
pub mod oracle;
pub mod pairing;
pub mod pareto;
pub mod problem;
pub mod rng;
pub mod solver;

pub use domain::{JobInstance, ObjectiveVector, Solution};
pub use error::{Error, Result};
pub use pairing::Pairing;
pub use pareto::ParetoArchive;
pub use rng::RandomSource;

//! Configuration, the law registry and suite reports.

mod config;
mod suite;

pub use config::Config;
pub use suite::{
    all_laws, expected_discrepancies, is_expected, law, run_checks, suite_json, unexpected_failures, Discrepancy,
    Law, LAWS,
};

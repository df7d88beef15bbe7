pub mod algorithms;
pub mod bundle;
pub mod cli;
pub mod error;
pub mod fairness;
pub mod instance;
pub mod oracle;
pub mod valuation;
pub mod value;

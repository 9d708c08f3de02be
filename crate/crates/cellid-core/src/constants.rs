//! Physical constants.

/// Faraday constant, C/mol.
pub const FARADAY: f64 = 96485.33;

/// Universal gas constant, J/(mol·K).
pub const GAS_CONSTANT: f64 = 8.314;

/// Seconds per hour, for Ah ↔ As conversions.
pub const SECONDS_PER_HOUR: f64 = 3600.0;

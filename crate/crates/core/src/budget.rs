use std::time::Duration;

/// Guardrails for the operations whose cost grows with their input.
///
/// Every limit is inclusive: a request equal to the limit is accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of points `d^arity` the integer-valuedness check may visit.
    pub residue_box: u64,
    /// Largest `n` accepted by the four-square decomposer.
    pub four_square: u64,
    /// Largest box bound accepted by triple enumeration and the surjectivity sweeps.
    pub enumerate_bound: u64,
    /// Largest radius accepted by the image-box sweep.
    pub image_radius: u64,
    /// Largest `k` for the falling-factorial identity check.
    pub falling_factorial_k: u32,
    /// Wall-clock limit for a single sweep.
    pub sweep_time: Option<Duration>,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            residue_box: 1_000_000,
            four_square: 100_000_000,
            enumerate_bound: 10_000,
            image_radius: 30,
            falling_factorial_k: 20,
            sweep_time: None,
        }
    }
}

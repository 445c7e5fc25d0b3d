use std::ops::AddAssign;

/// Elementary operation tallies recorded while decomposing or
/// reconstructing a payload.
///
/// `comparisons` covers the histogram and substitution passes and the sign
/// tests, `division_steps` counts the subtractions a repeated-subtraction
/// divider needs for each DSF quotient, and `subtractions` covers the error
/// magnitudes (or the add/sub of reconstruction).
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounters {
    pub comparisons: u64,
    pub division_steps: u64,
    pub subtractions: u64,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    pub fn total(&self) -> u64 {
        self.comparisons + self.division_steps + self.subtractions
    }

    /// Upper bound `256·P + μ·P + 2·P` for a decomposition over `P` pixels.
    pub fn decomposition_bound(pixels: u64, mu: u32) -> u64 {
        (256 + u64::from(mu) + 2) * pixels
    }

    /// Upper bound `2·P` for a reconstruction over `P` pixels.
    pub fn reconstruction_bound(pixels: u64) -> u64 {
        2 * pixels
    }
}

impl AddAssign for OpCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.comparisons += rhs.comparisons;
        self.division_steps += rhs.division_steps;
        self.subtractions += rhs.subtractions;
    }
}

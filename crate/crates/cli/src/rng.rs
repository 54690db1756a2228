//! Seeded 64-bit multiplicative congruential generator. Fixed multiplier,
//! odd state; identical seeds give identical suites on every platform.

const MULTIPLIER: u64 = 6364136223846793005;

#[derive(Clone, Debug)]
pub struct Mcg64 {
    state: u64,
}

impl Mcg64 {
    pub fn new(seed: u64) -> Self {
        // force the state odd and nonzero
        Mcg64 { state: (seed << 1) | 1 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER);
        self.state
    }

    /// Uniform-ish draw below the bound (high bits are the good ones).
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        (self.next_u64() >> 32) % bound
    }
}

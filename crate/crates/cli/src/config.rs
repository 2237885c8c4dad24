use relspin::{Backend, GammaKind, TolerancePolicy};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 1000;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Factor between the base tolerance and the one used for checks that
/// multiply several matrices (Lorentz products, Dirac residuals).
pub const COMPOSITE_FACTOR: f64 = 100.0;

/// Settings for one `verify` run. The seed fixes every random trial.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub backend: Backend,
    pub seed: u64,
    pub trials: usize,
    pub policy: TolerancePolicy,
    pub gammas: GammaKind,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            backend: Backend::Float,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            policy: TolerancePolicy::uniform(DEFAULT_TOLERANCE).expect("valid default"),
            gammas: GammaKind::Standard,
        }
    }
}

impl RunConfig {
    pub fn tolerance(&self) -> f64 {
        self.policy.abs_eps()
    }

    pub fn composite_tolerance(&self) -> f64 {
        self.tolerance() * COMPOSITE_FACTOR
    }
}

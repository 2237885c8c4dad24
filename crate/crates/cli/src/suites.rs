//! Randomized property suites behind `verify`.
//!
//! Every check draws from its own ChaCha8 stream keyed by the run seed and
//! the check's position, so checks can be reordered or skipped without
//! changing each other's inputs.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relspin::dirac::{
    build_psi_at, dirac_residual, lowering_relation, normalization_check, p_reflect,
    p_reflect_metric, raising_relation,
};
use relspin::lorentz::{conformal_factor, homomorphism_defect};
use relspin::matrix::max_norm;
use relspin::momentum::boost_for_momentum;
use relspin::sampling::{random_gl2, random_hermitian, random_momentum, random_spinor, Sample};
use relspin::spin_tensor::{decompose, scalar_square};
use relspin::spinor::{fundamental_relation, rank33_determinant, symplectic};
use relspin::{
    lorentz_matrix, Backend, CoSpinorDotted, ComplexScalar, EnergySign, FourVector, GammaSet,
    RealScalar,
};

use crate::config::RunConfig;
use crate::report::{CheckResult, Status};

/// How a check's deviation is judged on the float backend. The exact backend
/// always requires zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Must be exactly zero.
    Zero,
    /// Base tolerance.
    Tight,
    /// Base tolerance times [`crate::config::COMPOSITE_FACTOR`].
    Composite,
}

struct Tracker<R> {
    worst: R,
    trials: usize,
    violations: usize,
}

impl<R: RealScalar> Tracker<R> {
    fn new() -> Self {
        Self {
            worst: R::zero(),
            trials: 0,
            violations: 0,
        }
    }

    fn record(&mut self, deviation: R) {
        self.worst = R::max_of(self.worst.clone(), deviation);
    }

    fn trial(&mut self) {
        self.trials += 1;
    }

    fn violate(&mut self) {
        self.violations += 1;
    }

    fn finish(self, backend: Backend, level: Level, cfg: &RunConfig) -> CheckResult {
        let tolerance = match (backend, level) {
            (Backend::Exact, _) | (_, Level::Zero) => 0.0,
            (_, Level::Tight) => cfg.tolerance(),
            (_, Level::Composite) => cfg.composite_tolerance(),
        };
        let within = if tolerance == 0.0 {
            self.worst.is_zero()
        } else {
            self.worst.to_f64() <= tolerance
        };
        let status = if within && self.violations == 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckResult {
            status,
            max_deviation: self.worst.to_f64(),
            tolerance,
            trials: self.trials,
            violations: self.violations,
        }
    }
}

type CheckFn<S> =
    fn(&mut ChaCha8Rng, &RunConfig, &GammaSet<S>) -> Tracker<<S as ComplexScalar>::Real>;

fn checks<S: Sample>() -> Vec<(&'static str, Level, CheckFn<S>)> {
    vec![
        ("rank33_law", Level::Tight, rank33_law::<S>),
        (
            "pairing_factorization",
            Level::Tight,
            pairing_factorization::<S>,
        ),
        ("metric_identity", Level::Tight, metric_identity::<S>),
        ("lorentz_group", Level::Composite, lorentz_group::<S>),
        (
            "lorentz_homomorphism",
            Level::Composite,
            lorentz_homomorphism::<S>,
        ),
        ("lorentz_kernel", Level::Zero, lorentz_kernel::<S>),
        ("conformal_factor", Level::Composite, conformal::<S>),
        ("unit_covector", Level::Tight, unit_covector::<S>),
        ("boost_round_trip", Level::Composite, boost_round_trip::<S>),
        ("clifford", Level::Zero, clifford::<S>),
        ("dirac_identity", Level::Composite, dirac_identity::<S>),
        ("p_reflection", Level::Zero, p_reflection::<S>),
        ("normalization", Level::Composite, normalization::<S>),
        ("negative_energy", Level::Composite, negative_energy::<S>),
    ]
}

/// Names of all checks in run order.
pub fn check_names() -> Vec<&'static str> {
    checks::<relspin::Float>()
        .into_iter()
        .map(|(name, _, _)| name)
        .collect()
}

/// Runs every check on backend `S`.
pub fn run_all<S: Sample>(cfg: &RunConfig) -> BTreeMap<String, CheckResult> {
    let gammas = GammaSet::<S>::of_kind(cfg.gammas);
    checks::<S>()
        .into_iter()
        .enumerate()
        .map(|(stream, entry)| (entry.0.to_string(), run_entry(stream, entry, cfg, &gammas)))
        .collect()
}

/// Runs the named check alone; its result matches the one in [`run_all`].
pub fn run_check<S: Sample>(name: &str, cfg: &RunConfig) -> Option<CheckResult> {
    let gammas = GammaSet::<S>::of_kind(cfg.gammas);
    checks::<S>()
        .into_iter()
        .enumerate()
        .find(|(_, (n, _, _))| *n == name)
        .map(|(stream, entry)| run_entry(stream, entry, cfg, &gammas))
}

fn run_entry<S: Sample>(
    stream: usize,
    (_, level, check): (&'static str, Level, CheckFn<S>),
    cfg: &RunConfig,
    gammas: &GammaSet<S>,
) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream as u64);
    check(&mut rng, cfg, gammas).finish(S::BACKEND, level, cfg)
}

fn rank33_law<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let m: [_; 3] = std::array::from_fn(|_| random_spinor::<S, _>(rng));
        let n: [_; 3] = std::array::from_fn(|_| random_spinor::<S, _>(rng));
        let det = rank33_determinant([&m[0], &m[1], &m[2]], [&n[0], &n[1], &n[2]]);
        t.record(det.max_abs_component());
        t.trial();
    }
    t
}

fn pairing_factorization<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let [i, k, a, b]: [_; 4] = std::array::from_fn(|_| random_spinor::<S, _>(rng));
        let minor = fundamental_relation(&i, &k, &a, &b);
        let product = symplectic(&i, &k) * symplectic(&a, &b).conj();
        t.record((minor - product).max_abs_component());

        let own = fundamental_relation(&i, &k, &i, &k);
        let square = symplectic(&i, &k).norm_sqr();
        t.record((own.clone() - S::from_real(square)).max_abs_component());
        if own.re() < S::Real::zero() && !own.re().is_negligible(&S::Real::one(), &cfg.policy) {
            t.violate();
        }
        t.trial();
    }
    t
}

fn metric_identity<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let v = random_hermitian::<S, _>(rng);
        t.record((v.det() - scalar_square(&decompose(&v))).abs());
        t.trial();
    }
    t
}

fn lorentz_group<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    let one = S::Real::one();
    for _ in 0..cfg.trials {
        let l = lorentz_matrix(&S::sample_sl2(rng));
        t.record(l.metric_defect());
        t.record((l.det() - one.clone()).abs());
        let l00 = l.l[0][0].clone();
        if l00 < one && !(one.clone() - l00).is_negligible(&one, &cfg.policy) {
            t.violate();
        }
        t.trial();
    }
    t
}

fn lorentz_homomorphism<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let c = S::sample_sl2(rng);
        let d = S::sample_sl2(rng);
        t.record(homomorphism_defect(&c, &d));
        t.trial();
    }
    t
}

fn lorentz_kernel<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let c = S::sample_sl2(rng);
        t.record(lorentz_matrix(&-c.clone()).max_deviation(&lorentz_matrix(&c)));
        t.trial();
    }
    t
}

fn conformal<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let c = random_gl2::<S, _>(rng);
        let v = FourVector {
            v: std::array::from_fn(|_| S::sample_real(rng)),
        };
        t.record(conformal_factor(&c, &v).deviation());
        t.trial();
    }
    t
}

fn unit_covector<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let state = S::sample_momentum(rng);
        let boost = boost_for_momentum::<S>(state.mass(), state.spatial()).expect("positive mass");
        let u = boost.metric().covector();
        t.record((scalar_square(&u) - S::Real::one()).abs());
        if !u.v[0].is_positive() {
            t.violate();
        }
        t.trial();
    }
    t
}

fn boost_round_trip<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let state = S::sample_momentum(rng);
        let boost = boost_for_momentum::<S>(state.mass(), state.spatial()).expect("positive mass");
        t.record(boost.metric().covector().max_deviation(&state.velocity()));
        t.trial();
    }
    t
}

fn clifford<S: Sample>(
    _: &mut ChaCha8Rng,
    _: &RunConfig,
    gammas: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    t.record(gammas.clifford_defect());
    t.trial();
    t
}

fn dirac_identity<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    gammas: &GammaSet<S>,
) -> Tracker<S::Real> {
    signed_residuals(rng, cfg, gammas, EnergySign::Positive)
}

fn negative_energy<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    gammas: &GammaSet<S>,
) -> Tracker<S::Real> {
    signed_residuals(rng, cfg, gammas, EnergySign::Negative)
}

fn signed_residuals<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    gammas: &GammaSet<S>,
    sign: EnergySign,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let state = random_momentum::<S, _>(rng, sign);
        let i = random_spinor::<S, _>(rng);
        t.record(dirac_residual(&build_psi_at(&i, &state), &state, gammas));
        t.trial();
    }
    t
}

fn p_reflection<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let u = S::sample_momentum(rng).metric::<S>();
        let (lower, upper) = (u.lower().clone(), u.upper());
        let i = random_spinor::<S, _>(rng);
        let beta = CoSpinorDotted::new(S::sample(rng), S::sample(rng));
        let (i_as_dotted, beta_as_undotted) = p_reflect((&i, &beta));
        let (lower_swap, upper_swap) = p_reflect_metric(&lower, &upper);
        let a = lowering_relation(&beta_as_undotted, &i_as_dotted, &lower_swap);
        let b = raising_relation(&i, &beta, &upper);
        let c = raising_relation(&beta_as_undotted, &i_as_dotted, &upper_swap);
        let d = lowering_relation(&i, &beta, &lower);
        let diff = [
            a[0].clone() - b[0].clone(),
            a[1].clone() - b[1].clone(),
            c[0].clone() - d[0].clone(),
            c[1].clone() - d[1].clone(),
        ];
        t.record(max_norm(&diff));
        t.trial();
    }
    t
}

fn normalization<S: Sample>(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    _: &GammaSet<S>,
) -> Tracker<S::Real> {
    let mut t = Tracker::new();
    for _ in 0..cfg.trials {
        let state = S::sample_momentum(rng);
        let i = loop {
            let i = random_spinor::<S, _>(rng);
            if !i.is_zero() {
                break i;
            }
        };
        match normalization_check(&i, &state) {
            Ok(check) => t.record(check.deviation()),
            Err(_) => t.violate(),
        }
        t.trial();
    }
    t
}

use std::time::{Instant, SystemTime};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relspin::dirac::{build_psi, dirac_residual, SpinorField};
use relspin::matrix::max_norm;
use relspin::sampling::{random_spinor, Sample};
use relspin::{
    boost_for_momentum, Backend, ComplexScalar, EnergySign, Error, Exact, Float, GammaSet, Matrix2,
    MomentumState, Rational, RealScalar, Spinor2,
};
use serde::Serialize;

use crate::config::{RunConfig, COMPOSITE_FACTOR};
use crate::grid::{ComplexNumber, Grid, Number};
use crate::report::{Report, Timing, SCHEMA_VERSION};
use crate::suites::run_all;

pub fn cmd_verify(cfg: &RunConfig) -> Report {
    let started = SystemTime::now();
    let clock = Instant::now();
    let checks = match cfg.backend {
        Backend::Exact => run_all::<Exact>(cfg),
        Backend::Float => run_all::<Float>(cfg),
    };
    let mut report = Report::new(
        cfg.backend,
        cfg.seed,
        cfg.trials,
        cfg.tolerance(),
        cfg.gammas,
        checks,
    );
    report.timing = Some(Timing::new(started, clock.elapsed()));
    report
}

/// `[re, im]`.
pub type JsonComplex = [f64; 2];

fn json_complex<S: ComplexScalar>(z: &S) -> JsonComplex {
    let f = z.to_float();
    [f.re, f.im]
}

fn json_matrix<S: ComplexScalar>(m: &Matrix2<S>) -> [[JsonComplex; 2]; 2] {
    m.map(json_complex)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoostOutput {
    pub schema: u32,
    pub backend: Backend,
    pub mass: f64,
    /// Covariant spatial components `p_k`.
    pub momentum: [f64; 3],
    pub energy: f64,
    /// The boost `C`.
    pub boost: [[JsonComplex; 2]; 2],
    /// `U_{rṡ}`.
    pub metric: [[JsonComplex; 2]; 2],
    /// `u_μ`.
    pub covector: [f64; 4],
    /// `L(C)^μ_ν`, row `μ`.
    pub lorentz: [[f64; 4]; 4],
}

/// Boost data for a positive-energy particle. Exact input whose energy is
/// rational is processed exactly; the boost matrix itself is then rounded
/// once at the end, since `C` generally involves `√(2(u₀ + 1))`.
pub fn cmd_boost(mass: &Number, p: &[Number; 3]) -> relspin::Result<BoostOutput> {
    if let Some((m, p)) = exact_inputs(mass, p) {
        if let Ok(state) = MomentumState::positive(m, p) {
            return boost_output::<Exact>(&state);
        }
    }
    let state = MomentumState::positive(mass.to_f64(), p.clone().map(|x| x.to_f64()))?;
    boost_output::<Float>(&state)
}

fn exact_inputs(mass: &Number, p: &[Number; 3]) -> Option<(Rational, [Rational; 3])> {
    Some((
        mass.as_exact()?.clone(),
        [
            p[0].as_exact()?.clone(),
            p[1].as_exact()?.clone(),
            p[2].as_exact()?.clone(),
        ],
    ))
}

fn boost_output<S: ComplexScalar>(state: &MomentumState<S::Real>) -> relspin::Result<BoostOutput> {
    let boost = boost_for_momentum::<S>(state.mass(), state.spatial())?;
    let root = boost.scale_squared().to_f64().sqrt();
    let c = boost.shifted().map(|z| {
        let f = z.to_float();
        [f.re / root, f.im / root]
    });
    Ok(BoostOutput {
        schema: SCHEMA_VERSION,
        backend: S::BACKEND,
        mass: state.mass().to_f64(),
        momentum: state.spatial().clone().map(|x| x.to_f64()),
        energy: state.energy().to_f64(),
        boost: c,
        metric: json_matrix(boost.metric().lower()),
        covector: boost.metric().covector().to_f64(),
        lorentz: boost.lorentz().to_f64(),
    })
}

/// How `î(p)` is chosen at each grid point.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldSpec {
    Constant(Box<[ComplexNumber; 2]>),
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WavePoint {
    pub momentum: [f64; 3],
    pub energy: f64,
    /// `(i¹, i², β₁̇, β₂̇)`.
    pub psi: [JsonComplex; 4],
    pub residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WaveOutput {
    pub schema: u32,
    pub backend: Backend,
    pub mass: f64,
    pub field: String,
    pub seed: Option<u64>,
    pub tolerance: f64,
    pub points: Vec<WavePoint>,
    pub passed: bool,
}

/// `ψ(p)` and its Dirac residual over a grid. Exact grid, mass and field
/// values run on the exact backend when every energy on the grid is
/// rational; otherwise the run is in floating point.
pub fn cmd_wavefunction(
    mass: &Number,
    grid: &Grid,
    field: &FieldSpec,
    tolerance: f64,
) -> relspin::Result<WaveOutput> {
    if mass.to_f64() <= 0.0 {
        return Err(Error::NonPositiveMass(mass.to_f64().to_string()));
    }
    if let (Grid::Exact(points), Some(m)) = (grid, mass.as_exact()) {
        let energies_rational = points
            .iter()
            .all(|p| MomentumState::positive(m.clone(), p.clone()).is_ok());
        let values = match field {
            FieldSpec::Constant(c) => c[0]
                .to_exact()
                .zip(c[1].to_exact())
                .map(|(a, b)| Values::Constant(Spinor2::new(a, b))),
            FieldSpec::Random { seed } => Some(Values::Random(*seed)),
        };
        if let (true, Some(values)) = (energies_rational, values) {
            return wave_output::<Exact>(m, values.over(points), field, tolerance);
        }
    }
    let values = match field {
        FieldSpec::Constant(c) => Values::Constant(Spinor2::new(c[0].to_float(), c[1].to_float())),
        FieldSpec::Random { seed } => Values::Random(*seed),
    };
    wave_output::<Float>(
        &mass.to_f64(),
        values.over(&grid.to_float()),
        field,
        tolerance,
    )
}

enum Values<S> {
    Constant(Spinor2<S>),
    Random(u64),
}

impl<S: Sample> Values<S> {
    fn over(self, points: &[[S::Real; 3]]) -> SpinorField<S> {
        match self {
            Values::Constant(value) => SpinorField::constant(points, &value),
            Values::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                SpinorField::new(
                    points
                        .iter()
                        .map(|p| (p.clone(), random_spinor(&mut rng)))
                        .collect(),
                )
            }
        }
    }
}

fn wave_output<S: ComplexScalar>(
    m: &S::Real,
    field: SpinorField<S>,
    source: &FieldSpec,
    tolerance: f64,
) -> relspin::Result<WaveOutput> {
    let gammas = GammaSet::<S>::standard();
    let built = build_psi(&field, m, EnergySign::Positive)?;
    let composite = tolerance * COMPOSITE_FACTOR;
    let points: Vec<WavePoint> = built
        .iter()
        .map(|(state, psi)| {
            let residual = dirac_residual(psi, state, &gammas);
            // residuals grow with p₀ |ψ|
            let scale = (state.energy().to_f64().abs() * max_norm(&psi.0).to_f64()).max(1.0);
            let passed = match S::BACKEND {
                Backend::Exact => residual.is_zero(),
                Backend::Float => residual.to_f64() <= composite * scale,
            };
            WavePoint {
                momentum: state.spatial().clone().map(|x| x.to_f64()),
                energy: state.energy().to_f64(),
                psi: psi.0.clone().map(|z| json_complex(&z)),
                residual: residual.to_f64(),
                passed,
            }
        })
        .collect();
    let (field_name, seed) = match source {
        FieldSpec::Constant(_) => ("constant", None),
        FieldSpec::Random { seed } => ("random", Some(*seed)),
    };
    Ok(WaveOutput {
        schema: SCHEMA_VERSION,
        backend: S::BACKEND,
        mass: m.to_f64(),
        field: field_name.to_string(),
        seed,
        tolerance: match S::BACKEND {
            Backend::Exact => 0.0,
            Backend::Float => composite,
        },
        passed: points.iter().all(|p| p.passed),
        points,
    })
}

/// One CSV row per grid point: momentum, energy, `ψ` as real/imaginary
/// pairs, residual and pass flag.
#[derive(Debug, Serialize)]
struct CsvRow {
    p1: f64,
    p2: f64,
    p3: f64,
    p0: f64,
    psi1_re: f64,
    psi1_im: f64,
    psi2_re: f64,
    psi2_im: f64,
    psi3_re: f64,
    psi3_im: f64,
    psi4_re: f64,
    psi4_im: f64,
    residual: f64,
    passed: bool,
}

/// Writes the grid points of `output` as CSV with a header row.
pub fn write_csv<W: std::io::Write>(output: &WaveOutput, sink: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    for point in &output.points {
        let [p1, p2, p3] = point.momentum;
        let [[psi1_re, psi1_im], [psi2_re, psi2_im], [psi3_re, psi3_im], [psi4_re, psi4_im]] =
            point.psi;
        writer.serialize(CsvRow {
            p1,
            p2,
            p3,
            p0: point.energy,
            psi1_re,
            psi1_im,
            psi2_re,
            psi2_im,
            psi3_re,
            psi3_im,
            psi4_re,
            psi4_im,
            residual: point.residual,
            passed: point.passed,
        })?;
    }
    writer.flush()?;
    Ok(())
}

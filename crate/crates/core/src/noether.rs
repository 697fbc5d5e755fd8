//! Lattice free scalar field (Klein-Gordon) with leapfrog time stepping,
//! the energy-momentum tensor, and the conserved charges of spacetime
//! symmetry: energy, momentum, orbital angular momentum (3D), and the
//! boost charge. Also the electromagnetic field-tensor assembler.
//!
//! The density is L = pi^2/2 - |grad phi|^2/2 - m^2 phi^2/2 with central
//! spatial differences and periodic boundaries, so boundary terms cancel
//! exactly and total momentum is conserved to roundoff by telescoping.

use serde::{Deserialize, Serialize};

use crate::cmatrix::ComplexMatrix;
use crate::error::Error;

/// Lattice and integrator parameters. Natural units; `extent` sites per
/// spatial dimension with periodic wrap-around.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LatticeConfig {
    pub spatial_dims: usize,
    pub extent: usize,
    pub dx: f64,
    pub dt: f64,
    pub mass: f64,
    pub steps: usize,
}

impl LatticeConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.spatial_dims != 1 && self.spatial_dims != 3 {
            return Err(Error::BadDims(self.spatial_dims));
        }
        if self.extent < 8 {
            return Err(Error::ExtentTooSmall(self.extent));
        }
        let ratio = self.dt / self.dx;
        if !(ratio.is_finite() && ratio <= 0.5 && ratio > 0.0) {
            return Err(Error::Unstable { ratio });
        }
        Ok(())
    }

    pub fn sites(&self) -> usize {
        self.extent.pow(self.spatial_dims as u32)
    }

    /// Volume element dx^d.
    pub fn dv(&self) -> f64 {
        self.dx.powi(self.spatial_dims as i32)
    }

    /// Signed coordinate of a site index along one dimension, measured
    /// from the center site so symmetric data has exactly zero odd
    /// moments.
    pub fn coordinate(&self, index: usize) -> f64 {
        (index as f64 - (self.extent / 2) as f64) * self.dx
    }
}

/// Field and conjugate momentum (pi = d phi/dt) on the lattice, flattened
/// row-major over the spatial dimensions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldState {
    pub phi: Vec<f64>,
    pub pi: Vec<f64>,
    pub t: f64,
}

/// Neighbor indices with periodic wrap, per dimension.
fn neighbors(config: &LatticeConfig, site: usize, dim: usize) -> (usize, usize) {
    let n = config.extent;
    let stride = n.pow((config.spatial_dims - 1 - dim) as u32);
    let coord = (site / stride) % n;
    let up = site + stride * ((coord + 1) % n) - stride * coord;
    let down = site + stride * ((coord + n - 1) % n) - stride * coord;
    (down, up)
}

/// Central-difference spatial gradient of phi at a site.
pub fn gradient(config: &LatticeConfig, phi: &[f64], site: usize) -> Vec<f64> {
    (0..config.spatial_dims)
        .map(|d| {
            let (down, up) = neighbors(config, site, d);
            (phi[up] - phi[down]) / (2.0 * config.dx)
        })
        .collect()
}

fn laplacian(config: &LatticeConfig, phi: &[f64], site: usize) -> f64 {
    let mut acc = 0.0;
    for d in 0..config.spatial_dims {
        let (down, up) = neighbors(config, site, d);
        acc += phi[up] - 2.0 * phi[site] + phi[down];
    }
    acc / (config.dx * config.dx)
}

/// L = pi^2/2 - |grad phi|^2/2 - m^2 phi^2/2 at a site.
pub fn lagrangian_density(config: &LatticeConfig, state: &FieldState, site: usize) -> f64 {
    let grad_sq: f64 = gradient(config, &state.phi, site).iter().map(|g| g * g).sum();
    let phi = state.phi[site];
    0.5 * state.pi[site] * state.pi[site] - 0.5 * grad_sq - 0.5 * config.mass * config.mass * phi * phi
}

/// The mixed tensor T^nu_mu at one site, indexed [nu][mu] with 0 = time.
/// T^0_0 is the (non-negative) energy density; T^0_i = pi d_i phi is the
/// momentum density.
pub fn stress_tensor_at(
    config: &LatticeConfig,
    state: &FieldState,
    site: usize,
) -> Vec<Vec<f64>> {
    let d = config.spatial_dims;
    let grad = gradient(config, &state.phi, site);
    let pi = state.pi[site];
    let lag = lagrangian_density(config, state, site);
    let mut t = vec![vec![0.0; d + 1]; d + 1];
    // dL/d(d_t phi) = pi; dL/d(d_i phi) = -d_i phi.
    t[0][0] = pi * pi - lag;
    for i in 0..d {
        t[0][i + 1] = pi * grad[i];
        t[i + 1][0] = -grad[i] * pi;
        for j in 0..d {
            t[i + 1][j + 1] = -grad[i] * grad[j];
        }
        t[i + 1][i + 1] -= lag;
    }
    t
}

/// Energy density T^0_0 at every site.
pub fn energy_density(config: &LatticeConfig, state: &FieldState) -> Vec<f64> {
    (0..config.sites())
        .map(|s| {
            let grad_sq: f64 = gradient(config, &state.phi, s).iter().map(|g| g * g).sum();
            let phi = state.phi[s];
            0.5 * state.pi[s] * state.pi[s]
                + 0.5 * grad_sq
                + 0.5 * config.mass * config.mass * phi * phi
        })
        .collect()
}

/// One leapfrog (kick-drift-kick) step of d^2 phi/dt^2 = lap phi - m^2 phi.
fn step(config: &LatticeConfig, state: &mut FieldState) {
    let n = config.sites();
    let m2 = config.mass * config.mass;
    let half = 0.5 * config.dt;
    let force: Vec<f64> = (0..n)
        .map(|s| laplacian(config, &state.phi, s) - m2 * state.phi[s])
        .collect();
    for s in 0..n {
        state.pi[s] += half * force[s];
    }
    for s in 0..n {
        state.phi[s] += config.dt * state.pi[s];
    }
    let force: Vec<f64> = (0..n)
        .map(|s| laplacian(config, &state.phi, s) - m2 * state.phi[s])
        .collect();
    for s in 0..n {
        state.pi[s] += half * force[s];
    }
    state.t += config.dt;
}

/// Advances the state by `steps` leapfrog steps. Errors before stepping
/// when the stability bound dt/dx <= 1/2 is violated.
pub fn evolve(config: &LatticeConfig, state: &FieldState, steps: usize) -> Result<FieldState, Error> {
    config.validate()?;
    if state.phi.len() != config.sites() || state.pi.len() != config.sites() {
        return Err(Error::DimensionMismatch {
            left: state.phi.len(),
            right: config.sites(),
        });
    }
    let mut out = state.clone();
    for _ in 0..steps {
        step(config, &mut out);
    }
    Ok(out)
}

/// The conserved charges at one instant: energy, momentum, orbital angular
/// momentum (3D only), and the boost charge
/// BO^i = sum(T^0_0 x^i) dV + t P^i.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChargeRecord {
    pub t: f64,
    pub e: f64,
    pub p: Vec<f64>,
    pub l: Option<[f64; 3]>,
    pub bo: Vec<f64>,
}

fn site_coords(config: &LatticeConfig, site: usize) -> Vec<f64> {
    let n = config.extent;
    let mut out = Vec::with_capacity(config.spatial_dims);
    let mut rem = site;
    for d in 0..config.spatial_dims {
        let stride = n.pow((config.spatial_dims - 1 - d) as u32);
        out.push(config.coordinate(rem / stride));
        rem %= stride;
    }
    out
}

pub fn charges(config: &LatticeConfig, state: &FieldState) -> ChargeRecord {
    let d = config.spatial_dims;
    let dv = config.dv();
    let e_density = energy_density(config, state);
    let mut e = 0.0;
    let mut p = vec![0.0; d];
    let mut l = [0.0; 3];
    let mut first_moment = vec![0.0; d];
    for s in 0..config.sites() {
        let grad = gradient(config, &state.phi, s);
        let pdens: Vec<f64> = grad.iter().map(|g| state.pi[s] * g).collect();
        let x = site_coords(config, s);
        e += e_density[s];
        for i in 0..d {
            p[i] += pdens[i];
            first_moment[i] += e_density[s] * x[i];
        }
        if d == 3 {
            for i in 0..3 {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                l[i] += pdens[j] * x[k] - pdens[k] * x[j];
            }
        }
    }
    let bo = (0..d)
        .map(|i| (first_moment[i] + state.t * p[i] / dv) * dv)
        .collect();
    ChargeRecord {
        t: state.t,
        e: e * dv,
        p: p.iter().map(|v| v * dv).collect(),
        l: (d == 3).then(|| l.map(|v| v * dv)),
        bo,
    }
}

/// Recognized initial data: a centered Gaussian bump in phi, a traveling
/// single Fourier mode, or explicit arrays loaded from a JSON file.
#[derive(Debug, Clone)]
pub enum InitialCondition {
    /// phi = amplitude * exp(-r^2 / (2 width^2)), pi = 0, centered on the
    /// middle site.
    Gaussian { amplitude: f64, width: f64 },
    /// Right-moving wave phi = cos(k x), pi = omega sin(k x) with
    /// k = 2 pi mode / (N dx) and the continuum omega.
    Mode { mode: usize },
    File { path: String },
}

impl InitialCondition {
    /// Parses "gaussian", "mode:K", or "file:PATH".
    pub fn parse(text: &str) -> Result<Self, Error> {
        if text == "gaussian" {
            return Ok(InitialCondition::Gaussian {
                amplitude: 1.0,
                width: 6.0,
            });
        }
        if let Some(k) = text.strip_prefix("mode:") {
            let mode: usize = k
                .parse()
                .map_err(|_| Error::BadInitialCondition(text.to_string()))?;
            return Ok(InitialCondition::Mode { mode });
        }
        if let Some(path) = text.strip_prefix("file:") {
            return Ok(InitialCondition::File {
                path: path.to_string(),
            });
        }
        Err(Error::BadInitialCondition(text.to_string()))
    }

    pub fn build(&self, config: &LatticeConfig) -> Result<FieldState, Error> {
        let n = config.sites();
        match self {
            InitialCondition::Gaussian { amplitude, width } => {
                let mut phi = vec![0.0; n];
                for s in 0..n {
                    let r2: f64 = site_coords(config, s).iter().map(|x| x * x).sum();
                    phi[s] = amplitude * (-r2 / (2.0 * width * width)).exp();
                }
                Ok(FieldState {
                    phi,
                    pi: vec![0.0; n],
                    t: 0.0,
                })
            }
            InitialCondition::Mode { mode } => {
                let k = 2.0 * std::f64::consts::PI * *mode as f64
                    / (config.extent as f64 * config.dx);
                let omega = (k * k + config.mass * config.mass).sqrt();
                let mut phi = vec![0.0; n];
                let mut pi = vec![0.0; n];
                for s in 0..n {
                    let x = site_coords(config, s)[0];
                    phi[s] = (k * x).cos();
                    pi[s] = omega * (k * x).sin();
                }
                Ok(FieldState { phi, pi, t: 0.0 })
            }
            InitialCondition::File { path } => {
                let text = std::fs::read_to_string(path)?;
                let state: FieldState = serde_json::from_str(&text)?;
                if state.phi.len() != n || state.pi.len() != n {
                    return Err(Error::DimensionMismatch {
                        left: state.phi.len(),
                        right: n,
                    });
                }
                Ok(state)
            }
        }
    }
}

/// Drift and residual summary of one conservation run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConservationReport {
    pub config: LatticeConfig,
    pub samples: Vec<ChargeRecord>,
    /// max_t |E(t) - E(0)| / |E(0)|.
    pub energy_max_rel_drift: f64,
    /// Energy drift normalized per unit simulated time.
    pub energy_drift_rate: f64,
    /// max_t max_i |P_i(t) - P_i(0)|.
    pub momentum_max_abs_drift: f64,
    /// max_t max_i |BO_i(t) - BO_i(0)| relative to the energy scale.
    pub boost_max_rel_drift: f64,
    /// max_t |L(t) - L(0)| (3D only).
    pub angular_momentum_max_drift: Option<f64>,
    /// Max interior residual of d_t T^0_mu + d_i T^i_mu over mu and sites,
    /// sampled mid-run with central time differences.
    pub divergence_residual: f64,
}

/// Runs the configured evolution, sampling charges every `sample_every`
/// steps, and summarizes drifts. All loops use a fixed order so the output
/// is deterministic.
pub fn conservation_report(
    config: &LatticeConfig,
    ic: &InitialCondition,
    sample_every: usize,
) -> Result<ConservationReport, Error> {
    config.validate()?;
    let sample_every = sample_every.max(1);
    let mut state = ic.build(config)?;
    let mut samples = vec![charges(config, &state)];
    let mut divergence_residual: f64 = 0.0;
    let mid = config.steps / 2;
    let mut done = 0;
    while done < config.steps {
        let n = sample_every.min(config.steps - done);
        // Measure the divergence residual around mid-run with one-step
        // central differences in time.
        if done <= mid && mid < done + n {
            let pre = evolve(config, &state, mid - done)?;
            divergence_residual = divergence_residual_at(config, &pre)?;
        }
        state = evolve(config, &state, n)?;
        done += n;
        samples.push(charges(config, &state));
    }

    let first = &samples[0];
    let e0 = first.e;
    let mut e_drift: f64 = 0.0;
    let mut p_drift: f64 = 0.0;
    let mut bo_drift: f64 = 0.0;
    let mut l_drift: f64 = 0.0;
    for rec in &samples[1..] {
        e_drift = e_drift.max((rec.e - e0).abs() / e0.abs().max(1e-300));
        for i in 0..config.spatial_dims {
            p_drift = p_drift.max((rec.p[i] - first.p[i]).abs());
            bo_drift = bo_drift
                .max((rec.bo[i] - first.bo[i]).abs() / e0.abs().max(1e-300));
        }
        if let (Some(l), Some(l0)) = (&rec.l, &first.l) {
            for i in 0..3 {
                l_drift = l_drift.max((l[i] - l0[i]).abs());
            }
        }
    }
    let total_time = config.steps as f64 * config.dt;
    Ok(ConservationReport {
        config: *config,
        energy_max_rel_drift: e_drift,
        energy_drift_rate: e_drift / total_time.max(1e-300),
        momentum_max_abs_drift: p_drift,
        boost_max_rel_drift: bo_drift,
        angular_momentum_max_drift: first.l.map(|_| l_drift),
        divergence_residual,
        samples,
    })
}

/// Max over interior sites and mu of the discrete conservation law
/// d_t T^0_mu + d_i T^i_mu, with central differences in both time and
/// space around the given state.
pub fn divergence_residual_at(config: &LatticeConfig, state: &FieldState) -> Result<f64, Error> {
    let minus = evolve_backward(config, state)?;
    let plus = evolve(config, state, 1)?;
    let d = config.spatial_dims;
    let n = config.sites();
    let t_minus: Vec<_> = (0..n).map(|s| stress_tensor_at(config, &minus, s)).collect();
    let t_plus: Vec<_> = (0..n).map(|s| stress_tensor_at(config, &plus, s)).collect();
    let t_now: Vec<_> = (0..n).map(|s| stress_tensor_at(config, state, s)).collect();
    let mut worst: f64 = 0.0;
    for s in 0..n {
        for mu in 0..=d {
            let mut div = (t_plus[s][0][mu] - t_minus[s][0][mu]) / (2.0 * config.dt);
            for i in 0..d {
                let (down, up) = neighbors(config, s, i);
                div += (t_now[up][i + 1][mu] - t_now[down][i + 1][mu]) / (2.0 * config.dx);
            }
            worst = worst.max(div.abs());
        }
    }
    Ok(worst)
}

/// One step backward in time (leapfrog is time-reversible).
fn evolve_backward(config: &LatticeConfig, state: &FieldState) -> Result<FieldState, Error> {
    let reversed = FieldState {
        phi: state.phi.clone(),
        pi: state.pi.iter().map(|v| -v).collect(),
        t: -state.t,
    };
    let stepped = evolve(config, &reversed, 1)?;
    Ok(FieldState {
        phi: stepped.phi,
        pi: stepped.pi.iter().map(|v| -v).collect(),
        t: -stepped.t,
    })
}

/// The field tensor F^{alpha beta} from E (per c) and B, antisymmetric by
/// construction.
pub fn assemble_em_tensor(e: [f64; 3], b: [f64; 3], c: f64) -> Result<ComplexMatrix, Error> {
    if !(c > 0.0 && c.is_finite())
        || e.iter().chain(b.iter()).any(|v| !v.is_finite())
    {
        return Err(Error::NonFinite { row: 0, col: 0 });
    }
    let (ex, ey, ez) = (e[0] / c, e[1] / c, e[2] / c);
    let (bx, by, bz) = (b[0], b[1], b[2]);
    ComplexMatrix::from_real_rows(&[
        vec![0.0, -ex, -ey, -ez],
        vec![ex, 0.0, -bz, by],
        vec![ey, bz, 0.0, -bx],
        vec![ez, -by, bx, 0.0],
    ])
    .map_err(Into::into)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config_1d() -> LatticeConfig {
        LatticeConfig {
            spatial_dims: 1,
            extent: 256,
            dx: 1.0,
            dt: 0.05,
            mass: 1.0,
            steps: 2000,
        }
    }

    #[test]
    fn config_validation() {
        assert!(config_1d().validate().is_ok());
        let mut bad = config_1d();
        bad.dt = 0.6;
        assert!(matches!(bad.validate(), Err(Error::Unstable { .. })));
        bad = config_1d();
        bad.extent = 4;
        assert!(matches!(bad.validate(), Err(Error::ExtentTooSmall(4))));
        bad = config_1d();
        bad.spatial_dims = 2;
        assert!(matches!(bad.validate(), Err(Error::BadDims(2))));
    }

    #[test]
    fn vacuum_is_trivial() {
        let config = config_1d();
        let vac = FieldState {
            phi: vec![0.0; config.sites()],
            pi: vec![0.0; config.sites()],
            t: 0.0,
        };
        assert_eq!(lagrangian_density(&config, &vac, 10), 0.0);
        let evolved = evolve(&config, &vac, 50).unwrap();
        assert!(evolved.phi.iter().all(|&v| v == 0.0));
        let rec = charges(&config, &vac);
        assert_eq!(rec.e, 0.0);
        assert_eq!(rec.p[0], 0.0);
    }

    #[test]
    fn constant_field_density() {
        let mut config = config_1d();
        let c = 0.7;
        let state = FieldState {
            phi: vec![c; config.sites()],
            pi: vec![0.0; config.sites()],
            t: 0.0,
        };
        config.mass = 0.0;
        assert_eq!(lagrangian_density(&config, &state, 3), 0.0);
        config.mass = 1.0;
        assert!((lagrangian_density(&config, &state, 3) + 0.5 * c * c).abs() < 1e-15);
    }

    #[test]
    fn standing_wave_energy_density() {
        let mut config = config_1d();
        config.mass = 0.0;
        let amp = 0.3;
        let k = 2.0 * std::f64::consts::PI * 4.0 / (config.extent as f64 * config.dx);
        let n = config.sites();
        let state = FieldState {
            phi: (0..n).map(|s| amp * (k * config.coordinate(s)).sin()).collect(),
            pi: vec![0.0; n],
            t: 0.0,
        };
        for s in 0..n {
            let want = 0.5 * amp * amp * k * k * (k * config.coordinate(s)).cos().powi(2);
            let got = energy_density(&config, &state)[s];
            // O(dx^2) discretization error scale; k dx ~ 0.1 here.
            assert!((got - want).abs() < 2e-3 * amp * amp * k * k + 1e-12);
        }
    }

    #[test]
    fn energy_density_nonnegative() {
        let config = config_1d();
        let mut rng = crate::random::rng(31);
        let n = config.sites();
        let state = FieldState {
            phi: (0..n).map(|_| crate::random::uniform(&mut rng, -1.0, 1.0)).collect(),
            pi: (0..n).map(|_| crate::random::uniform(&mut rng, -1.0, 1.0)).collect(),
            t: 0.0,
        };
        assert!(energy_density(&config, &state).iter().all(|&e| e >= 0.0));
        // Mixed tensor time-time slot agrees with the density.
        let t = stress_tensor_at(&config, &state, 17);
        assert!((t[0][0] - energy_density(&config, &state)[17]).abs() < 1e-14);
    }

    #[test]
    fn single_mode_oscillates_at_lattice_frequency() {
        let mut config = config_1d();
        config.mass = 0.0;
        config.extent = 64;
        config.steps = 0;
        let k = 2.0 * std::f64::consts::PI / (config.extent as f64 * config.dx);
        // Standing wave phi = cos(kx) cos(omega_lat t) under the discrete
        // dispersion omega = (2/dt) asin((dt/dx) sin(k dx / 2)).
        let n = config.sites();
        let init = FieldState {
            phi: (0..n).map(|s| (k * config.coordinate(s)).cos()).collect(),
            pi: vec![0.0; n],
            t: 0.0,
        };
        let omega = (2.0 / config.dt) * ((config.dt / config.dx) * (k * config.dx / 2.0).sin()).asin();
        let steps = 400;
        let out = evolve(&config, &init, steps).unwrap();
        let t = steps as f64 * config.dt;
        for s in (0..n).step_by(7) {
            let want = (k * config.coordinate(s)).cos() * (omega * t).cos();
            assert!((out.phi[s] - want).abs() < 1e-8, "site {s}");
        }
    }

    #[test]
    fn gaussian_charges_symmetry() {
        let config = config_1d();
        let ic = InitialCondition::Gaussian {
            amplitude: 1.0,
            width: 6.0,
        };
        let state = ic.build(&config).unwrap();
        let rec = charges(&config, &state);
        assert!(rec.e > 0.0);
        assert_eq!(rec.p[0], 0.0);
        assert!(rec.bo[0].abs() < 1e-12);
    }

    #[test]
    fn conservation_1d_gaussian() {
        let config = config_1d();
        let ic = InitialCondition::parse("gaussian").unwrap();
        let report = conservation_report(&config, &ic, 100).unwrap();
        // Second-order integrator: the peak relative deviation at dt=0.05
        // sits near 6e-4; per unit simulated time that is ~6e-6.
        assert!(report.energy_max_rel_drift < 2e-3, "{}", report.energy_max_rel_drift);
        assert!(report.energy_drift_rate < 1e-5, "{}", report.energy_drift_rate);
        assert!(report.momentum_max_abs_drift < 1e-10);
        assert!(report.boost_max_rel_drift < 2e-3);
    }

    #[test]
    fn energy_drift_converges_second_order() {
        let ic = InitialCondition::parse("gaussian").unwrap();
        let mut drifts = Vec::new();
        for dt in [0.1, 0.05, 0.025] {
            let config = LatticeConfig {
                spatial_dims: 1,
                extent: 256,
                dx: 1.0,
                dt,
                mass: 1.0,
                steps: 2000,
            };
            let report = conservation_report(&config, &ic, 50).unwrap();
            drifts.push(report.energy_max_rel_drift);
        }
        assert!(drifts[0] / drifts[1] > 3.0, "{drifts:?}");
        assert!(drifts[1] / drifts[2] > 3.0, "{drifts:?}");
    }

    #[test]
    fn traveling_mode_carries_conserved_momentum() {
        let mut config = config_1d();
        config.extent = 128;
        config.steps = 1000;
        let ic = InitialCondition::parse("mode:3").unwrap();
        let report = conservation_report(&config, &ic, 100).unwrap();
        let p0 = report.samples[0].p[0];
        assert!(p0.abs() > 0.1, "traveling mode must carry momentum, got {p0}");
        assert!(report.momentum_max_abs_drift < 1e-10);
    }

    #[test]
    fn divergence_residual_refines_at_second_order() {
        let ic = InitialCondition::Gaussian {
            amplitude: 1.0,
            width: 6.0,
        };
        let mut residuals = Vec::new();
        for level in 0..2 {
            let refine = 1 << level;
            let config = LatticeConfig {
                spatial_dims: 1,
                extent: 128 * refine,
                dx: 1.0 / refine as f64,
                dt: 0.25 / refine as f64,
                mass: 1.0,
                steps: 8 * refine,
            };
            let state = ic.build(&config).unwrap();
            let evolved = evolve(&config, &state, config.steps).unwrap();
            residuals.push(divergence_residual_at(&config, &evolved).unwrap());
        }
        assert!(residuals[0] / residuals[1] > 3.0, "{residuals:?}");
    }

    #[test]
    fn initial_condition_parsing() {
        assert!(matches!(
            InitialCondition::parse("gaussian"),
            Ok(InitialCondition::Gaussian { .. })
        ));
        assert!(matches!(
            InitialCondition::parse("mode:5"),
            Ok(InitialCondition::Mode { mode: 5 })
        ));
        assert!(matches!(
            InitialCondition::parse("nonsense"),
            Err(Error::BadInitialCondition(_))
        ));
        assert!(matches!(
            InitialCondition::parse("mode:x"),
            Err(Error::BadInitialCondition(_))
        ));
    }

    #[test]
    fn em_tensor_layout() {
        let zero = assemble_em_tensor([0.0; 3], [0.0; 3], 1.0).unwrap();
        assert_eq!(zero.max_abs(), 0.0);
        let f = assemble_em_tensor([1.0, 0.0, 0.0], [0.0; 3], 1.0).unwrap();
        assert_eq!(f[(0, 1)].re, -1.0);
        assert_eq!(f[(1, 0)].re, 1.0);
        assert_eq!(f.max_abs(), 1.0);
        let f = assemble_em_tensor([0.5, -1.0, 2.0], [3.0, 0.25, -0.7], 2.0).unwrap();
        assert!(f.add(&f.transpose()).max_abs() == 0.0);
        assert_eq!(f[(1, 2)].re, 0.7);
        assert!(assemble_em_tensor([f64::NAN, 0.0, 0.0], [0.0; 3], 1.0).is_err());
        assert!(assemble_em_tensor([0.0; 3], [0.0; 3], 0.0).is_err());
    }

    #[test]
    fn three_d_symmetric_bump_charges() {
        let config = LatticeConfig {
            spatial_dims: 3,
            extent: 16,
            dx: 1.0,
            dt: 0.25,
            mass: 1.0,
            steps: 40,
        };
        let ic = InitialCondition::Gaussian {
            amplitude: 1.0,
            width: 2.0,
        };
        let report = conservation_report(&config, &ic, 10).unwrap();
        let l = report.angular_momentum_max_drift.unwrap();
        assert!(l < 1e-6, "{l}");
        for rec in &report.samples {
            for v in rec.l.unwrap() {
                assert!(v.abs() < 1e-6);
            }
        }
        assert!(report.momentum_max_abs_drift < 1e-10);
    }

    #[test]
    fn file_initial_condition_round_trip() {
        let config = LatticeConfig {
            spatial_dims: 1,
            extent: 16,
            dx: 1.0,
            dt: 0.25,
            mass: 0.5,
            steps: 4,
        };
        let state = InitialCondition::Gaussian {
            amplitude: 0.5,
            width: 2.0,
        }
        .build(&config)
        .unwrap();
        let path = std::env::temp_dir().join("symlab_ic_test.json");
        std::fs::write(&path, serde_json::to_string(&state).unwrap()).unwrap();
        let ic = InitialCondition::parse(&format!("file:{}", path.display())).unwrap();
        let loaded = ic.build(&config).unwrap();
        assert_eq!(loaded.phi, state.phi);
        std::fs::remove_file(&path).ok();
    }
}

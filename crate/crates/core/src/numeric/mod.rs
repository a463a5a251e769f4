//! Floating-point checks along trajectories: conservation of first
//! integrals, the Darboux growth identity `d/dt log f = lambda`, and the Lax
//! pairs of the Kac-van Moerbeke systems.

pub mod lax;

use serde::{Deserialize, Serialize};

use num_traits::ToPrimitive;

use crate::lv::LVParams;
use crate::poly::{LinForm, Poly};
use crate::structure::casimir_exponents;
use crate::{Error, Result};

/// States beyond this magnitude abort the integration.
pub const BLOW_UP: f64 = 1e12;
/// Laurent invariants need every coordinate with a non-zero exponent to stay
/// at least this far from zero.
pub const LAURENT_FLOOR: f64 = 1e-9;
/// Smallest `|f|` accepted by [`darboux_flow_check`].
pub const DARBOUX_FLOOR: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub initial: [f64; 3],
    pub step: f64,
    pub t_end: f64,
}

impl SimConfig {
    pub fn new(initial: [f64; 3], step: f64, t_end: f64) -> Self {
        SimConfig { initial, step, t_end }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        if !self.initial.iter().all(|x| x.is_finite()) {
            return bad("initial state must be finite");
        }
        if !(self.step.is_finite() && self.step > 0.0) {
            return bad("step must be positive");
        }
        if !(self.t_end.is_finite() && self.t_end > 0.0) {
            return bad("t_end must be positive");
        }
        if self.step > self.t_end {
            return bad("step must not exceed t_end");
        }
        Ok(())
    }
}

/// Sampled solution. `times` is strictly increasing and starts at 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<[f64; 3]>,
    pub params: [f64; 3],
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn initial(&self) -> [f64; 3] {
        self.states[0]
    }

    pub fn last(&self) -> [f64; 3] {
        *self.states.last().expect("trajectory has at least one sample")
    }
}

pub fn field(params: [f64; 3], x: [f64; 3]) -> [f64; 3] {
    let [r, s, t] = params;
    let [x1, x2, x3] = x;
    [
        x1 * (r * x2 + s * x3),
        x2 * (-r * x1 + t * x3),
        x3 * (-s * x1 - t * x2),
    ]
}

fn axpy(x: [f64; 3], h: f64, k: [f64; 3]) -> [f64; 3] {
    [x[0] + h * k[0], x[1] + h * k[1], x[2] + h * k[2]]
}

fn rk4_step(params: [f64; 3], x: [f64; 3], h: f64) -> [f64; 3] {
    let k1 = field(params, x);
    let k2 = field(params, axpy(x, h / 2.0, k1));
    let k3 = field(params, axpy(x, h / 2.0, k2));
    let k4 = field(params, axpy(x, h, k3));
    std::array::from_fn(|i| x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

/// Classical fixed-step RK4. If `t_end` is not a whole number of steps the
/// last step is shortened to land on `t_end` exactly.
pub fn simulate(p: &LVParams, cfg: &SimConfig) -> Result<Trajectory> {
    cfg.validate()?;
    let params = p.to_f64();
    let ratio = cfg.t_end / cfg.step;
    let whole = ratio.round();
    let (full_steps, tail) = if (whole - ratio).abs() <= 1e-9 * ratio.max(1.0) {
        (whole as usize, 0.0)
    } else {
        let n = ratio.floor();
        (n as usize, cfg.t_end - n * cfg.step)
    };
    let mut times = Vec::with_capacity(full_steps + 2);
    let mut states = Vec::with_capacity(full_steps + 2);
    times.push(0.0);
    states.push(cfg.initial);
    let mut x = cfg.initial;
    let mut advance = |h: f64, t: f64, x: &mut [f64; 3]| -> Result<()> {
        *x = rk4_step(params, *x, h);
        if x.iter().any(|v| !v.is_finite() || v.abs() > BLOW_UP) {
            return Err(Error::BlowUp { time: t });
        }
        times.push(t);
        states.push(*x);
        Ok(())
    };
    for i in 1..=full_steps {
        let t = if tail == 0.0 && i == full_steps { cfg.t_end } else { i as f64 * cfg.step };
        advance(cfg.step, t, &mut x)?;
    }
    if tail > 0.0 {
        advance(tail, cfg.t_end, &mut x)?;
    }
    Ok(Trajectory { times, states, params })
}

/// A quantity whose conservation is checked along a trajectory.
#[derive(Clone, Debug, PartialEq)]
pub enum Invariant {
    Poly(Poly),
    /// `x1^a x2^b x3^c` with integer, possibly negative, exponents.
    Laurent([i64; 3]),
}

impl Invariant {
    /// The Casimir `x1^a x2^b x3^c` of [`casimir_exponents`], if any.
    pub fn casimir(p: &LVParams) -> Result<Option<Self>> {
        let Some(exps) = casimir_exponents(p) else {
            return Ok(None);
        };
        let mut out = [0i64; 3];
        for (slot, e) in out.iter_mut().zip(&exps) {
            *slot = e.to_i32().ok_or(Error::ExponentOverflow)?.into();
        }
        Ok(Some(Invariant::Laurent(out)))
    }

    pub fn evaluate(&self, x: [f64; 3], sample: usize) -> Result<f64> {
        match self {
            Invariant::Poly(f) => Ok(f.evaluate_f64(x)),
            Invariant::Laurent(e) => {
                let mut value = 1.0;
                for (axis, (&xi, &ei)) in x.iter().zip(e).enumerate() {
                    if ei == 0 {
                        continue;
                    }
                    if xi.abs() <= LAURENT_FLOOR {
                        return Err(Error::LaurentSingularity { axis: axis + 1, sample });
                    }
                    value *= xi.powi(ei as i32);
                }
                Ok(value)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DriftReport {
    pub initial: f64,
    pub final_value: f64,
    pub max_abs_drift: f64,
    /// `max_t |f(x(t)) - f(x(0))| / max(1, |f(x(0))|)`.
    pub max_rel_drift: f64,
}

pub fn conservation_report(traj: &Trajectory, f: &Invariant) -> Result<DriftReport> {
    let initial = f.evaluate(traj.initial(), 0)?;
    let mut max_abs_drift: f64 = 0.0;
    let mut final_value = initial;
    for (i, &x) in traj.states.iter().enumerate() {
        final_value = f.evaluate(x, i)?;
        max_abs_drift = max_abs_drift.max((final_value - initial).abs());
    }
    Ok(DriftReport {
        initial,
        final_value,
        max_abs_drift,
        max_rel_drift: max_abs_drift / initial.abs().max(1.0),
    })
}

/// `|log|f(x(T))| - log|f(x(0))| - int_0^T lambda(x(t)) dt|`, with the
/// integral taken by the trapezoid rule on the trajectory grid.
pub fn darboux_flow_check(f: &Poly, lambda: &LinForm, traj: &Trajectory) -> Result<f64> {
    let mut sign = 0.0;
    for (sample, &x) in traj.states.iter().enumerate() {
        let v = f.evaluate_f64(x);
        if !(v.abs() > DARBOUX_FLOOR) {
            return Err(Error::SignChange { sample });
        }
        if sample == 0 {
            sign = v.signum();
        } else if v.signum() != sign {
            return Err(Error::SignChange { sample });
        }
    }
    let mut integral = 0.0;
    for (w, dt) in traj.states.windows(2).zip(traj.times.windows(2)) {
        integral += 0.5 * (dt[1] - dt[0]) * (lambda.evaluate_f64(w[0]) + lambda.evaluate_f64(w[1]));
    }
    let log_ratio = (f.evaluate_f64(traj.last()).abs() / f.evaluate_f64(traj.initial()).abs()).ln();
    Ok((log_ratio - integral).abs())
}

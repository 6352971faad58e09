use crate::config::TimeControls;
use crate::error::{Error, Result};
use crate::evolution::rk::ssp_rk3_step_with;
use crate::state::StateVector;

/// A semi-discrete system `dq/dt = L(q)`.
pub trait SemiDiscrete {
    type State: StateVector;

    /// `L(q)` and the largest stable time step at unit Courant number
    /// (`None` when all wave speeds vanish).
    fn rhs(&self, q: &Self::State) -> Result<(Self::State, Option<f64>)>;

    /// Positivity check of a state produced by the time stepper.
    fn validate(&self, q: &Self::State) -> Result<()>;
}

#[derive(Debug, Clone)]
pub struct Trajectory<S> {
    /// `(t, state)` for the initial state and every requested output time
    pub snapshots: Vec<(f64, S)>,
    pub steps: usize,
}

impl<S> Trajectory<S> {
    pub fn last(&self) -> &S {
        &self.snapshots.last().expect("trajectory holds the initial state").1
    }

    pub fn at(&self, t: f64) -> Option<&S> {
        self.snapshots.iter().find(|(ts, _)| *ts == t).map(|(_, s)| s)
    }
}

/// Advances `initial` to `controls.t_final`, storing snapshots at
/// `snap_times` (those outside `(0, t_final]` are ignored) and at the end.
///
/// The time step comes from the wave speeds of the state at the start of
/// each step and is shortened to land exactly on every output time.
pub fn run<M: SemiDiscrete>(
    model: &M,
    initial: M::State,
    controls: &TimeControls,
    snap_times: &[f64],
) -> Result<Trajectory<M::State>> {
    controls.validate()?;
    let t_final = controls.t_final;
    let mut targets: Vec<f64> = snap_times.iter().copied().filter(|&t| t > 0.0 && t < t_final).collect();
    targets.sort_by(f64::total_cmp);
    targets.dedup();
    if t_final > 0.0 {
        targets.push(t_final);
    }

    let mut snapshots = vec![(0.0, initial.clone())];
    let mut q = initial;
    let mut t = 0.0;
    let mut step = 0;
    let abort = |t: f64, step: usize| move |e: Error| Error::Aborted { t, step, source: Box::new(e) };
    for target in targets {
        while t < target {
            if step >= controls.max_steps {
                return Err(Error::StepLimit { max_steps: controls.max_steps, t });
            }
            let (l0, unit_dt) = model.rhs(&q).map_err(abort(t, step))?;
            let remaining = target - t;
            let mut dt = unit_dt.map_or(remaining, |u| controls.cfl * u);
            // avoid a sliver step right before an output time
            let hit = dt >= remaining * (1.0 - 1e-12);
            if hit {
                dt = remaining;
            }
            q = ssp_rk3_step_with(&q, dt, l0, |s| model.rhs(s).map(|r| r.0)).map_err(abort(t, step))?;
            step += 1;
            t = if hit { target } else { t + dt };
            model.validate(&q).map_err(abort(t, step))?;
        }
        snapshots.push((t, q.clone()));
    }
    Ok(Trajectory { snapshots, steps: step })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Decay;

    impl SemiDiscrete for Decay {
        type State = f64;

        fn rhs(&self, q: &f64) -> Result<(f64, Option<f64>)> {
            Ok((-q, Some(0.25)))
        }

        fn validate(&self, _: &f64) -> Result<()> {
            Ok(())
        }
    }

    #[test]
    fn zero_final_time_returns_initial() {
        let c = TimeControls::new(0.4, 0.0).unwrap();
        let tr = run(&Decay, 1.0, &c, &[]).unwrap();
        assert_eq!(tr.snapshots, vec![(0.0, 1.0)]);
        assert_eq!(tr.steps, 0);
    }

    #[test]
    fn lands_on_output_times() {
        let c = TimeControls::new(0.4, 1.0).unwrap();
        let tr = run(&Decay, 1.0, &c, &[0.35, 2.0, 0.35, -1.0]).unwrap();
        let times: Vec<f64> = tr.snapshots.iter().map(|s| s.0).collect();
        assert_eq!(times, vec![0.0, 0.35, 1.0]);
        assert!((tr.last() - (-1.0f64).exp()).abs() < 1e-4);
    }

    #[test]
    fn step_cap() {
        let c = TimeControls { cfl: 0.4, t_final: 1.0, max_steps: 3 };
        assert!(matches!(run(&Decay, 1.0, &c, &[]), Err(Error::StepLimit { max_steps: 3, .. })));
    }
}

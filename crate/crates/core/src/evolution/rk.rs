use crate::error::Result;
use crate::state::StateVector;

/// One step of the three-stage third-order SSP Runge-Kutta method in
/// Shu-Osher form.
pub fn ssp_rk3_step<S, F>(q: &S, dt: f64, mut rhs: F) -> Result<S>
where
    S: StateVector,
    F: FnMut(&S) -> Result<S>,
{
    let l0 = rhs(q)?;
    ssp_rk3_step_with(q, dt, l0, rhs)
}

/// As [`ssp_rk3_step`], reusing an already evaluated first-stage RHS.
pub fn ssp_rk3_step_with<S, F>(q: &S, dt: f64, l0: S, mut rhs: F) -> Result<S>
where
    S: StateVector,
    F: FnMut(&S) -> Result<S>,
{
    let mut q1 = q.clone();
    q1.axpy(dt, &l0);
    let l1 = rhs(&q1)?;
    let mut q2 = q1;
    q2.axpy(dt, &l1);
    q2.blend(0.25, 0.75, q);
    let l2 = rhs(&q2)?;
    let mut q3 = q2;
    q3.axpy(dt, &l2);
    q3.blend(2.0 / 3.0, 1.0 / 3.0, q);
    Ok(q3)
}

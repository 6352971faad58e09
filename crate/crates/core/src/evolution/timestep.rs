/// `cfl * dy / max speed`, or `None` when nothing moves.
pub fn stable_dt_1d(max_speed: f64, dy: f64, cfl: f64) -> Option<f64> {
    (max_speed > 0.0).then(|| cfl * dy / max_speed)
}

/// `cfl * min(dx / max|a|, dy / max|b|)`, or `None` when nothing moves.
pub fn stable_dt_2d(max_a: f64, max_b: f64, dx: f64, dy: f64, cfl: f64) -> Option<f64> {
    let lim = |h: f64, s: f64| if s > 0.0 { h / s } else { f64::INFINITY };
    let m = lim(dx, max_a).min(lim(dy, max_b));
    m.is_finite().then_some(cfl * m)
}

use proptest::prelude::*;

use wbcu::evolution::{semidiscrete_rhs_1d, semidiscrete_rhs_2d, BoundaryKind, BoundarySpec, Solver1D, Solver2D};
use wbcu::gravity::{compute_qr_2d, steady_state_1d, steady_state_2d};
use wbcu::potential::{PotentialField1D, PotentialField2D};
use wbcu::{
    run, ConservedState1D, ConservedState2D, Execution, GasParams, Grid1D, Grid2D, Potential, Problem, Scheme,
    SolverConfig, TimeControls,
};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / (1.0 + a.abs().max(b.abs()))
}

fn potentials() -> impl Strategy<Value = Potential> {
    prop_oneof![
        (0.2f64..3.0).prop_map(|gy| Potential::Linear { gx: 0.0, gy }),
        Just(Potential::HalfSquare),
        Just(Potential::Sine),
    ]
}

/// A smooth positive state with some motion, for the conservation checks.
/// The background pressure keeps `L = p + R` positive, which the cutoff
/// indicator requires.
fn wavy_1d(grid: &Grid1D, phi: &[f64], gas: &GasParams, a: f64, k: f64) -> ConservedState1D {
    let mut q = ConservedState1D::zeros(grid);
    for s in grid.interior() {
        let y = grid.storage_center(s);
        q.rho[s] = 1.0 + a * (k * y).sin();
        q.mom[s] = a * (k * y).cos();
        q.etot[s] = gas.energy(q.rho[s], (q.mom[s] / q.rho[s]).powi(2), 4.0 + 0.5 * a * (k * y).cos())
            + q.rho[s] * phi[s];
    }
    q
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn steady_state_1d_has_constant_l(
        pot in potentials(),
        n in 4usize..80,
        l in 1.0f64..20.0,
        seed in proptest::collection::vec(0.2f64..1.0, 80),
    ) {
        let grid = Grid1D::new(0.0, 1.0, n).unwrap();
        let phi = PotentialField1D::sample(&pot, &grid);
        let gas = GasParams::default();
        let q = steady_state_1d(&seed[..n], l, &phi, &grid, &gas).unwrap();
        let solver = Solver1D::new(grid, &pot, BoundarySpec::uniform(BoundaryKind::Reflecting), SolverConfig::default()).unwrap();
        let eq = solver.equilibrium(&q).unwrap();
        for s in solver.grid.interior() {
            prop_assert!(rel(eq.l_center[s], l) < 1e-13, "L = {} vs {l}", eq.l_center[s]);
        }
    }

    #[test]
    fn steady_state_2d_is_separable(
        nx in 3usize..20,
        ny in 3usize..20,
        gx in 0.3f64..2.0,
        gy in 0.3f64..2.0,
        scale in 0.5f64..5.0,
    ) {
        let grid = Grid2D::new((0.0, 1.0), (0.0, 1.0), nx, ny).unwrap();
        let pot = Potential::Linear { gx, gy };
        let phi = PotentialField2D::sample(&pot, &grid);
        let l: Vec<f64> = (0..nx).map(|j| scale * (-gx * grid.xc(j as isize)).exp()).collect();
        let k: Vec<f64> = (0..ny).map(|k| scale * (-gx - gy * grid.yc(k as isize)).exp()).collect();
        let gas = GasParams::default();
        let q = steady_state_2d(&l, &k, &phi, &grid, &gas).unwrap();
        let mut eq = compute_qr_2d(&q.rho, &phi, &grid, Execution::Serial);
        let solver = Solver2D::new(grid, &pot, BoundarySpec::uniform(BoundaryKind::ZeroOrder), SolverConfig::default()).unwrap();
        eq.assemble_centers(&solver.pressures(&q).unwrap());
        for sj in 1..=nx {
            for sk in 1..=ny {
                prop_assert!(rel(eq.k_center[[sj, sk]], eq.k_center[[1, sk]]) < 1e-13);
                prop_assert!(rel(eq.l_center[[sj, sk]], eq.l_center[[sj, 1]]) < 1e-13);
            }
        }
    }

    #[test]
    fn rhs_1d_telescopes(
        pot in potentials(),
        n in 4usize..60,
        a in 0.0f64..0.3,
        k in 1.0f64..12.0,
        wb in any::<bool>(),
    ) {
        let grid = Grid1D::new(0.0, 1.0, n).unwrap();
        let scheme = if wb { Scheme::WellBalanced } else { Scheme::Baseline };
        let bc = BoundarySpec::uniform(BoundaryKind::ZeroOrder);
        let solver = Solver1D::new(grid, &pot, bc, SolverConfig::default().with_scheme(scheme)).unwrap();
        let q = wavy_1d(&solver.grid, &solver.phi.center, &solver.config.gas, a, k);
        let r = semidiscrete_rhs_1d(&q, &solver).unwrap();
        let dy = solver.grid.dy();
        for c in 0..3 {
            let comp = [&r.dqdt.rho, &r.dqdt.mom, &r.dqdt.etot][c];
            let total: f64 = comp.iter().sum::<f64>() * dy;
            let boundary = -(r.fluxes[n][c] - r.fluxes[0][c]);
            prop_assert!((total - boundary).abs() < 1e-11 * (1.0 + boundary.abs()), "component {c}");
        }
    }

    #[test]
    fn rhs_2d_telescopes(nx in 3usize..14, ny in 3usize..14, a in 0.0f64..0.3, wb in any::<bool>()) {
        let grid = Grid2D::new((0.0, 1.0), (0.0, 1.0), nx, ny).unwrap();
        let scheme = if wb { Scheme::WellBalanced } else { Scheme::Baseline };
        let pot = Potential::Linear { gx: 1.0, gy: 1.0 };
        let solver = Solver2D::new(grid, &pot, BoundarySpec::uniform(BoundaryKind::ZeroOrder), SolverConfig::default().with_scheme(scheme)).unwrap();
        let g = &solver.grid;
        let gas = solver.config.gas;
        let mut q = ConservedState2D::zeros(g);
        for sj in 1..=nx {
            for sk in 1..=ny {
                let (x, y) = (g.storage_xc(sj), g.storage_yc(sk));
                let c = [sj, sk];
                q.rho[c] = 1.0 + a * (5.0 * x + 3.0 * y).sin();
                q.mom_x[c] = a * (4.0 * y).cos();
                q.mom_y[c] = -a * (3.0 * x).sin();
                let m2 = q.mom_x[c].powi(2) + q.mom_y[c].powi(2);
                q.etot[c] = gas.energy(q.rho[c], m2 / q.rho[c].powi(2), 1.5) + q.rho[c] * solver.phi.center[c];
            }
        }
        let r = semidiscrete_rhs_2d(&q, &solver).unwrap();
        let (dx, dy) = (g.dx(), g.dy());
        for c in 0..4 {
            let total = r.dqdt.component(c).sum() * dx * dy;
            let mut boundary = 0.0;
            for k in 0..ny {
                boundary -= (r.flux_x[[nx, k]][c] - r.flux_x[[0, k]][c]) * dy;
            }
            for j in 0..nx {
                boundary -= (r.flux_y[[j, ny]][c] - r.flux_y[[j, 0]][c]) * dx;
            }
            prop_assert!((total - boundary).abs() < 1e-11 * (1.0 + boundary.abs()), "component {c}");
        }
    }

    #[test]
    fn fluxes_2d_are_translation_equivariant(shift in -2.0f64..2.0, a in 0.0f64..0.2) {
        // phi = x + y is unchanged by (x, y) -> (x + s, y - s)
        let pot = Potential::Linear { gx: 1.0, gy: 1.0 };
        let bc = BoundarySpec::uniform(BoundaryKind::ZeroOrder);
        let (nx, ny) = (7, 6);
        let make = |s: f64| {
            let grid = Grid2D::new((s, 1.0 + s), (-s, 1.0 - s), nx, ny).unwrap();
            Solver2D::new(grid, &pot, bc, SolverConfig::default()).unwrap()
        };
        let (s0, s1) = (make(0.0), make(shift));
        let mut q = ConservedState2D::zeros(&s0.grid);
        for sj in 1..=nx {
            for sk in 1..=ny {
                let c = [sj, sk];
                q.rho[c] = 1.0 + a * ((sj * 7 + sk * 3) % 5) as f64;
                q.mom_x[c] = a * ((sj + 2 * sk) % 3) as f64 - a;
                q.mom_y[c] = 0.5 * a;
                q.etot[c] = 4.0 + q.rho[c] * s0.phi.center[c];
            }
        }
        let r0 = semidiscrete_rhs_2d(&q, &s0).unwrap();
        let r1 = semidiscrete_rhs_2d(&q, &s1).unwrap();
        for (f0, f1) in r0.flux_x.iter().zip(r1.flux_x.iter()).chain(r0.flux_y.iter().zip(r1.flux_y.iter())) {
            for c in 0..4 {
                prop_assert!((f0[c] - f1[c]).abs() < 1e-11, "{f0:?} vs {f1:?}");
            }
        }
    }
}

#[test]
fn every_unperturbed_problem_is_preserved() {
    let steps = TimeControls::new(0.4, 0.1).unwrap();
    for name in ["isothermal-linear", "isothermal-quadratic", "isothermal-sine", "isothermal-2d"] {
        match Problem::by_name(name, Some(0.0)).unwrap() {
            Problem::OneD(p) => {
                let case = p.setup(64, SolverConfig::default()).unwrap();
                let traj = run(&case.solver, case.initial.clone(), &steps, &[]).unwrap();
                let q = traj.last();
                for s in case.solver.grid.interior() {
                    assert!(rel(q.rho[s], case.initial.rho[s]) < 1e-12, "{name}");
                    assert!(q.mom[s].abs() < 1e-12, "{name}");
                    assert!(rel(q.etot[s], case.initial.etot[s]) < 1e-12, "{name}");
                }
            }
            Problem::TwoD(p) => {
                let case = p.setup(24, 24, SolverConfig::default()).unwrap();
                let traj = run(&case.solver, case.initial.clone(), &steps, &[]).unwrap();
                let q = traj.last();
                for c in 0..4 {
                    for (x, y) in q.component(c).iter().zip(case.initial.component(c).iter()) {
                        assert!(rel(*x, *y) < 1e-12, "{name} component {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn wb_rhs_2d_vanishes_on_steady_states() {
    let Problem::TwoD(p) = Problem::by_name("isothermal-2d", Some(0.0)).unwrap() else { unreachable!() };
    for (nx, ny) in [(5, 9), (16, 16), (33, 20)] {
        for psi in [wbcu::PsiScale::Local, wbcu::PsiScale::Global] {
            let cfg = SolverConfig { psi_scale: psi, ..SolverConfig::default() };
            let case = p.setup(nx, ny, cfg).unwrap();
            let r = semidiscrete_rhs_2d(&case.initial, &case.solver).unwrap();
            for c in 0..4 {
                let worst = r.dqdt.component(c).iter().fold(0.0f64, |m, v| m.max(v.abs()));
                assert!(worst < 1e-11, "{nx}x{ny} {psi:?} component {c}: {worst:e}");
            }
        }
    }
}

#[test]
fn serial_and_parallel_runs_are_identical() {
    let Problem::TwoD(p) = Problem::by_name("explosion", None).unwrap() else { unreachable!() };
    let controls = TimeControls::new(0.4, 0.05).unwrap();
    let out: Vec<ConservedState2D> = [Execution::Serial, Execution::Parallel]
        .into_iter()
        .map(|exec| {
            let case = p.setup(21, 21, SolverConfig::default().with_exec(exec)).unwrap();
            run(&case.solver, case.initial, &controls, &[]).unwrap().last().clone()
        })
        .collect();
    assert_eq!(out[0], out[1]);
}

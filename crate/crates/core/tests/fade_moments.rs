//! Closed-form fade moments against independent oracles.

use num_complex::Complex;
use num_traits::ToPrimitive;
use std::f64::consts::PI;
use wienerlab::channel::{channel_transmit, ChannelConfig, SymbolBlock};
use wienerlab::fade::{
    decompose, mc_fade_oracle, mc_fade_refinement, mean_square_g_deviation, moment_f2,
    moment_f2_series, moment_f4, moment_f4_series, ms_g_limit_ratio, FadeMoments,
    M2_SERIES_CROSSOVER, M4_SERIES_CROSSOVER,
};
use wienerlab::rng::StreamSeed;
use wienerlab::stats::{run_trials, RunningStats};
use wienerlab_oracles::exact;
use wienerlab_oracles::fade::second_moment as m2_by_quadrature;

/// `(1/delta^2) int int exp(-pi beta |t1 - t2|)` over `[0, delta]^2`.
#[test]
fn second_moment_matches_double_integral() {
    for beta in [0.25, 1.0, 4.0] {
        for delta in [0.1, 0.01, 0.001] {
            let cfg = ChannelConfig::from_delta(beta, 1.0, delta, 1).unwrap();
            let closed = moment_f2(cfg.a()).unwrap();
            let oracle = m2_by_quadrature(beta, cfg.delta());
            let rel = (closed - oracle).abs() / oracle;
            assert!(
                rel < 1e-8,
                "beta {beta} delta {delta}: {closed} vs {oracle} ({rel:e})"
            );
        }
    }
}

#[test]
fn second_moment_at_reference_point() {
    let a = (-PI * 0.01).exp();
    let rel = (moment_f2(a).unwrap() - m2_by_quadrature(1.0, 0.01)).abs();
    assert!(rel < 1e-8);
}

#[test]
fn series_agree_with_exact_rational_evaluation() {
    let x2 = -M2_SERIES_CROSSOVER;
    let e2 = exact::relative_error(moment_f2_series(x2), &exact::moment_f2(x2));
    assert!(e2 < 1e-12, "m2 series at crossover: {e2:e}");
    for x4 in [-M4_SERIES_CROSSOVER, -M2_SERIES_CROSSOVER, -1e-4] {
        let e4 = exact::relative_error(moment_f4_series(x4), &exact::moment_f4(x4));
        assert!(e4 < 1e-10, "m4 series at {x4}: {e4:e}");
    }
}

#[test]
fn public_moments_are_accurate_everywhere() {
    // Dense scan of ln a, checked against exact rational evaluation.
    let mut x = -3.0f64;
    while x < -1e-6 {
        let a = x.exp();
        let xa = a.ln();
        let e2 = exact::relative_error(moment_f2(a).unwrap(), &exact::moment_f2(xa));
        let e4 = exact::relative_error(moment_f4(a).unwrap(), &exact::moment_f4(xa));
        assert!(e2 < 1e-12, "m2 at {xa}: {e2:e}");
        assert!(e4 < 1e-12, "m4 at {xa}: {e4:e}");
        x *= 0.8;
    }
}

#[test]
fn no_jump_across_series_crossovers() {
    for (cross, f) in [
        (
            M2_SERIES_CROSSOVER,
            moment_f2::<f64> as fn(f64) -> wienerlab::Result<f64>,
        ),
        (
            M4_SERIES_CROSSOVER,
            moment_f4::<f64> as fn(f64) -> wienerlab::Result<f64>,
        ),
    ] {
        let below = f((-cross * (1.0 - 1e-12)).exp()).unwrap();
        let above = f((-cross * (1.0 + 1e-12)).exp()).unwrap();
        let rel = (below - above).abs() / above;
        assert!(rel < 1e-10, "crossover {cross}: jump {rel:e}");
    }
}

#[test]
fn fourth_moment_limit_is_one() {
    let near = exact::moment_f4(-1e-12).to_f64().unwrap();
    assert!((near - 1.0).abs() < 1e-11);
    assert_eq!(moment_f4(1.0f64).unwrap(), 1.0);
    assert!((moment_f4((-1e-12f64).exp()).unwrap() - near).abs() < 1e-14);
}

#[test]
fn second_moment_decreases_with_delta() {
    for beta in [0.25, 1.0, 4.0] {
        let m: Vec<f64> = [1e-3, 1e-2, 1e-1]
            .iter()
            .map(|&d| moment_f2((-PI * beta * d).exp()).unwrap())
            .collect();
        assert!(m[0] > m[1] && m[1] > m[2], "beta {beta}: {m:?}");
    }
}

#[test]
fn mean_square_deviation_approaches_limit() {
    for beta in [0.25f64, 1.0, 4.0] {
        for (bd, tol) in [
            (1e-3, 0.01),
            (5e-4, 0.01),
            (1e-4, 0.01),
            (1e-2, 0.10),
            (5e-3, 0.10),
        ] {
            let cfg = ChannelConfig::from_delta(beta, 1.0, bd / beta, 1).unwrap();
            let ratio = mean_square_g_deviation(&cfg) / (cfg.delta() * cfg.delta());
            let lim = ms_g_limit_ratio(beta);
            assert!(
                (ratio / lim - 1.0).abs() < tol,
                "beta {beta} beta*delta {bd}: {ratio} vs {lim}"
            );
        }
    }
}

#[test]
fn ms_g_limit_values() {
    let cfg = ChannelConfig::<f64>::new(1.0, 1.0, 1000, 1).unwrap();
    let r = mean_square_g_deviation(&cfg) / 1e-6;
    assert!((r / 1.0966 - 1.0).abs() < 0.01);
    let cfg = ChannelConfig::from_delta(2.0, 1.0, 1e-3, 1).unwrap();
    let r = mean_square_g_deviation(&cfg) / 1e-6;
    assert!((r / (4.0 * PI * PI / 9.0) - 1.0).abs() < 0.01);
}

#[test]
fn moments_struct_invariants() {
    for beta in [0.25, 1.0, 4.0] {
        for l in [1, 10, 100, 1000] {
            let cfg = ChannelConfig::new(beta, 1.0, l, 1).unwrap();
            let m = FadeMoments::from_config(&cfg);
            assert!(m.m2 > 0.0 && m.m2 <= 1.0);
            assert!(m.m4 <= m.m2);
            assert!(m.var_f2 >= 0.0);
            let ms_g = m.var_f2 / l as f64 + (m.m2 - 1.0).powi(2);
            assert!((m.ms_g - ms_g).abs() <= 1e-15 * ms_g);
        }
    }
}

#[test]
fn closed_forms_agree_with_monte_carlo_on_grid() {
    let seed = StreamSeed::new(200);
    let mut idx = 0;
    for beta in [0.25, 1.0, 4.0] {
        for delta in [0.1, 0.01, 0.001] {
            idx += 1;
            let cfg = ChannelConfig::<f64>::from_delta(beta, 1.0, delta, 512).unwrap();
            let oracle = mc_fade_oracle(&cfg, 50_000, &seed.child(idx)).unwrap();
            // J-convergence: J = 64 and J = 512 differ by less than one standard error.
            let refine = mc_fade_refinement(&cfg, 8, 50_000, &seed.child(100 + idx)).unwrap();
            assert!(
                refine.d_m2.mean.abs() < oracle.m2.stderr,
                "J convergence m2 at {beta},{delta}: {refine:?}"
            );
            assert!(
                refine.d_m4.mean.abs() < oracle.m4.stderr,
                "J convergence m4 at {beta},{delta}: {refine:?}"
            );
            let m = FadeMoments::from_config(&cfg);
            assert!(
                oracle.m2.within(m.m2, 3.0),
                "m2 at {beta},{delta}: {:?} vs {}",
                oracle.m2,
                m.m2
            );
            assert!(
                oracle.m4.within(m.m4, 3.0),
                "m4 at {beta},{delta}: {:?} vs {}",
                oracle.m4,
                m.m4
            );
            assert!(
                oracle.ms_g.within(m.ms_g, 3.0),
                "msG at {beta},{delta}: {:?} vs {}",
                oracle.ms_g,
                m.ms_g
            );
        }
    }
}

#[test]
fn oracle_stderr_scales_with_trials() {
    let cfg = ChannelConfig::new(1.0, 1.0, 10, 32).unwrap();
    let seed = StreamSeed::new(201);
    let a = mc_fade_oracle(&cfg, 40_000, &seed).unwrap();
    let b = mc_fade_oracle(&cfg, 80_000, &seed).unwrap();
    let ratio = b.m2.stderr / a.m2.stderr;
    assert!(
        (ratio / std::f64::consts::FRAC_1_SQRT_2 - 1.0).abs() < 0.2,
        "{ratio}"
    );
}

#[test]
fn decomposition_noise_statistics() {
    // Cheap version of the second-order statistics (coarse J).
    let cfg = ChannelConfig::new(1.0, 1.0, 16, 8).unwrap();
    let x = Complex::new(10.0, 0.0);
    let seed = StreamSeed::new(202);
    let acc = run_trials(
        200_000,
        &seed,
        || [RunningStats::<f64>::new(); 4],
        |acc, rng, _| {
            let block = SymbolBlock::new(vec![x]).unwrap();
            let frames = channel_transmit(&block, &cfg, rng).unwrap();
            let d = decompose(&frames[0], x).unwrap();
            acc[0].push(d.z0);
            acc[1].push((d.z0 - 1.0).powi(2));
            acc[2].push(d.z1);
            acc[3].push(d.z1 * d.z1 - d.g / 2.0);
        },
    );
    assert!(
        acc[0].estimate().within(1.0, 3.0),
        "{:?}",
        acc[0].estimate()
    );
    assert!(
        acc[1].estimate().within(cfg.delta(), 3.0),
        "{:?}",
        acc[1].estimate()
    );
    assert!(
        acc[2].estimate().within(0.0, 3.0),
        "{:?}",
        acc[2].estimate()
    );
    assert!(
        acc[3].estimate().within(0.0, 3.0),
        "{:?}",
        acc[3].estimate()
    );
}

//! The acceptance suite: ten checks pinning the crate's numeric anchors
//! and property guarantees, with per-check time budgets. Run them all via
//! `confspace verify all` or the `acceptance` integration test.

use crate::balance::{contact_graph, is_balanced, search_balanced, SearchSettings};
use crate::exact::is_unimodular;
use crate::forests::kernel_ladder_n4;
use crate::geometry::{
    build_kn, build_qn, diameter_configuration, diameters, pack_disks, recover_qn_angles,
    segment_length, square_configuration, tau, DiskConfig,
};
use crate::pairing::{
    dual_basis_matrix, numeric_degree_oracle, pairing_forest_qn, perms_fixing_first,
    permuted_family, qn_family,
};
use crate::plane::Point;
use crate::segments::{hourglass_params, max_perpendicular_length, trap_certify_with, PoseGrid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub seconds: f64,
    pub budget_seconds: f64,
    pub details: String,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:2} [{}] {} — {} ({:.2}s, budget {:.0}s)",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.details,
            self.seconds,
            self.budget_seconds
        )
    }
}

pub const CRITERIA: &[(usize, &str, f64)] = &[
    (1, "dual-basis unimodularity", 10.0),
    (2, "pairing oracle agreement", 60.0),
    (3, "length recursion", 5.0),
    (4, "perpendicular threshold", 60.0),
    (5, "n = 4 kernel ladder", 1.0),
    (6, "balance witnesses", 10.0),
    (7, "balance nonexistence evidence", 300.0),
    (8, "packing bound", 30.0),
    (9, "trap certification", 300.0),
    (10, "construction validity", 60.0),
];

pub fn run_criterion(id: usize) -> CriterionOutcome {
    let (_, name, budget) = CRITERIA
        .iter()
        .find(|(cid, _, _)| *cid == id)
        .copied()
        .unwrap_or((id, "unknown", 0.0));
    let start = Instant::now();
    let (pass, details) = match id {
        1 => c1_unimodularity(),
        2 => c2_oracle_agreement(),
        3 => c3_length_recursion(),
        4 => c4_perpendicular(),
        5 => c5_kernel_ladder(),
        6 => c6_balance_witnesses(),
        7 => c7_nonexistence(),
        8 => c8_packing(),
        9 => c9_trap(),
        10 => c10_constructions(),
        _ => (false, "unknown criterion".into()),
    };
    let seconds = start.elapsed().as_secs_f64();
    CriterionOutcome {
        id,
        name,
        pass: pass && seconds <= budget,
        seconds,
        budget_seconds: budget,
        details,
    }
}

pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .map(|&(id, _, _)| run_criterion(id))
        .collect()
}

fn c1_unimodularity() -> (bool, String) {
    let mut sizes = Vec::new();
    for n in 2..=6 {
        let m = match dual_basis_matrix(n) {
            Ok(m) => m,
            Err(e) => return (false, format!("n={n}: {e}")),
        };
        sizes.push(m.size());
        if !is_unimodular(&m.entries) {
            return (false, format!("n={n}: |det| != 1"));
        }
    }
    if sizes != vec![1, 2, 6, 24, 120] {
        return (false, format!("unexpected sizes {sizes:?}"));
    }
    (
        true,
        "|det| = 1 for n = 2..6 (sizes 1, 2, 6, 24, 120)".into(),
    )
}

fn c2_oracle_agreement() -> (bool, String) {
    let mut cases = 0usize;
    for (n, grid) in [(3usize, 24usize), (4, 32)] {
        let forests = crate::forests::enumerate_forests(n, n - 1).unwrap();
        let family = qn_family(n);
        for g in &forests {
            for s in perms_fixing_first(n) {
                let expected = pairing_forest_qn(g, &s).unwrap();
                let fam = permuted_family(&s, &family);
                match numeric_degree_oracle(&fam, g, grid) {
                    Ok(deg) if deg == expected => cases += 1,
                    Ok(deg) => {
                        return (
                            false,
                            format!("n={n} G={g} sigma={s}: oracle {deg} != pairing {expected}"),
                        )
                    }
                    Err(e) => return (false, format!("n={n} G={g} sigma={s}: {e}")),
                }
            }
        }
    }
    (
        true,
        format!("numeric degree equals the pairing on all {cases} cases"),
    )
}

fn c3_length_recursion() -> (bool, String) {
    if segment_length(1) != 2.0 {
        return (false, "l_1 != 2".into());
    }
    if segment_length(2) != 1.6 {
        return (false, "l_2 != 1.6".into());
    }
    for (i, d) in diameters().take(1_000_000).enumerate() {
        let n = (i + 1) as f64;
        let d2 = d * d;
        if !(2.0 * (n + 1.0) <= d2 + 1e-9 && d2 <= 3.0 * (n + 1.0) + 1e-9) {
            return (false, format!("d_n^2 bound fails at n = {}", i + 1));
        }
        if ((4.0 / d) * d - 4.0).abs() >= 1e-12 {
            return (false, format!("l_n * d_n = 4 fails at n = {}", i + 1));
        }
    }
    for n in 2..=1000 {
        let rho = segment_length(n) / segment_length(n - 1);
        let closure = 4.0 * (rho * (1.0 - rho)).sqrt();
        if (segment_length(n) - closure).abs() >= 1e-10 {
            return (false, format!("tangent-chord closure fails at n = {n}"));
        }
    }
    (
        true,
        "l_1 = 2, l_2 = 1.6, 2(n+1) <= d_n^2 <= 3(n+1) to 1e6, closure to 1e-10".into(),
    )
}

fn c4_perpendicular() -> (bool, String) {
    let got = max_perpendicular_length(1e-6);
    let ok = (got - 1.6).abs() <= 1e-4;
    (
        ok,
        format!("max perpendicular length {got:.7} (target 1.6 +- 1e-4)"),
    )
}

fn c5_kernel_ladder() -> (bool, String) {
    let cases = [
        (0.2, [0usize, 0, 0, 0]),
        (0.3, [0, 0, 6, 6]),
        (0.4, [0, 5, 11, 6]),
        (0.5, [1, 6, 11, 6]),
    ];
    for (r, expected) in cases {
        let got = kernel_ladder_n4(r);
        if got != expected {
            return (
                false,
                format!("r = {r}: got {got:?}, expected {expected:?}"),
            );
        }
    }
    (
        true,
        "ladder (0,0,0,0)/(0,0,6,6)/(0,5,11,6)/(1,6,11,6) at r = .2/.3/.4/.5".into(),
    )
}

fn c6_balance_witnesses() -> (bool, String) {
    for n in 2..=8 {
        let cfg = diameter_configuration(n);
        let g = match contact_graph(&cfg, 1e-9) {
            Ok(g) => g,
            Err(e) => return (false, format!("n={n}: {e}")),
        };
        match is_balanced(&g) {
            Ok(res) if res.balanced && res.residual < 1e-8 => {}
            Ok(res) => {
                return (
                    false,
                    format!("diameter n={n} not balanced (residual {})", res.residual),
                )
            }
            Err(e) => return (false, format!("n={n}: {e}")),
        }
    }
    let sq = square_configuration();
    let g = contact_graph(&sq, 1e-9).unwrap();
    match is_balanced(&g) {
        Ok(res) if res.balanced => {}
        _ => return (false, "square configuration not balanced".into()),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for trial in 0..100 {
        let n = rng.gen_range(2..=6);
        let centers: Vec<Point> = (0..n)
            .map(|_| {
                let t = rng.gen::<f64>();
                let rad = 0.85 * rng.gen::<f64>().sqrt();
                crate::plane::unit(t) * rad
            })
            .collect();
        let Ok(t) = tau(&centers) else { continue };
        if t < 1e-3 {
            continue;
        }
        let cfg = DiskConfig::new(centers, 0.8 * t);
        let g = contact_graph(&cfg, 1e-9).unwrap();
        if g.edge_count() != 0 {
            return (
                false,
                format!("trial {trial}: contact-free config has contacts"),
            );
        }
    }
    (
        true,
        "diameters n = 2..8 and the square are balanced; 100 slack configs have empty graphs"
            .into(),
    )
}

fn c7_nonexistence() -> (bool, String) {
    for n in [3usize, 4, 5] {
        let r = 1.0 / n as f64 - 0.01;
        let hits = search_balanced(n, r, 10_000, &SearchSettings::default());
        if !hits.is_empty() {
            return (
                false,
                format!(
                    "n={n}, r={r:.4}: found {} claimed balanced configs",
                    hits.len()
                ),
            );
        }
    }
    (
        true,
        "no balanced configurations found below 1/n (n = 3, 4, 5; 10^4 trials each)".into(),
    )
}

fn c8_packing() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for trial in 0..100 {
        let k = rng.gen_range(1..=30);
        let mut radii: Vec<f64> = (0..k).map(|_| rng.gen_range(0.05..1.0)).collect();
        radii.sort_by(|a, b| b.total_cmp(a));
        let layout = pack_disks(&radii);
        if let Err(e) = layout.validate(1e-9) {
            return (false, format!("trial {trial}: {e}"));
        }
    }
    (
        true,
        "100 random multisets: disjoint, contained, R^2 <= 36 sum r_i^2".into(),
    )
}

fn c9_trap() -> (bool, String) {
    let params = match hourglass_params(1.5, 0.2) {
        Ok(p) => p,
        Err(e) => return (false, format!("{e}")),
    };
    if let Err(e) = params.check_invariants() {
        return (false, format!("{e}"));
    }
    let grid = PoseGrid::fine();
    let cert = match trap_certify_with(&params, &grid, None) {
        Ok(c) => c,
        Err(e) => return (false, format!("{e}")),
    };
    if !cert.confirms_trap() {
        return (false, format!("trap not confirmed: {cert:?}"));
    }
    let control = match trap_certify_with(&params, &grid, Some(vec![])) {
        Ok(c) => c,
        Err(e) => return (false, format!("negative control: {e}")),
    };
    if !control.reached_horizontal {
        return (
            false,
            "negative control failed to reach a horizontal pose".into(),
        );
    }
    (
        true,
        format!(
            "trapped within x extent [{:.4}, {:.4}], angles ({:.4}, {:.4}) turns; control reaches horizontal",
            cert.x_extent.0, cert.x_extent.1, cert.theta_extent.0, cert.theta_extent.1
        ),
    )
}

fn c10_constructions() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    // 10^4 random tuples per family, spread across n
    for n in 1..=5usize {
        for trial in 0..2000 {
            let angles: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
            let cfg = build_kn(&angles);
            if !cfg.is_valid(1e-9) {
                return (false, format!("k_{n} invalid at trial {trial}"));
            }
            if cfg.directions != angles {
                return (
                    false,
                    format!("k_{n} angle recovery failed at trial {trial}"),
                );
            }
        }
    }
    for n in 1..=8usize {
        for trial in 0..1250 {
            let angles: Vec<f64> = (0..n - 1).map(|_| rng.gen::<f64>()).collect();
            let cfg = build_qn(&angles);
            if !cfg.is_valid(1e-9) {
                return (false, format!("q_{n} invalid at trial {trial}"));
            }
            let t = tau(&cfg.centers).unwrap_or(f64::NAN);
            if (t - 1.0 / n as f64).abs() >= 1e-9 {
                return (
                    false,
                    format!("q_{n} tau off by {:.2e}", t - 1.0 / n as f64),
                );
            }
            let recovered = recover_qn_angles(&cfg);
            for (got, want) in recovered.iter().zip(&angles) {
                if crate::plane::wrap_signed(got - want).abs() >= 1e-9 {
                    return (false, format!("q_{n} angle recovery off at trial {trial}"));
                }
            }
        }
    }
    (
        true,
        "10^4 random tuples per construction: valid, exact angle recovery, tau = 1/n".into(),
    )
}

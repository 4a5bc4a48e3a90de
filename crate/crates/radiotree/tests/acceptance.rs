//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use radiotree::bounds::{liu_bound_even, liu_bound_odd};
use radiotree::families::{
    gen_caterpillar, gen_levelwise, gen_lmh, gen_path, gen_random_two_branch, rn_formula, Family,
};
use radiotree::labelling::jf_profile;
use radiotree::solver::{exact_rn, Limits};
use radiotree::{
    certify_tightness, lower_bound_basic, lower_bound_improved, strict_gap_predicate, FamilyInstance,
    Tree, TreeMetrics,
};

type Outcome = Result<String, String>;

fn exact(inst: &FamilyInstance) -> u64 {
    let solved = exact_rn(inst.tree(), &Limits::default()).expect("solver runs");
    assert!(solved.stats.completed, "solver timed out on {}", inst.family());
    solved.rn
}

fn path_numbers() -> Outcome {
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 4..=10 {
        let rn = exact(&gen_path(n).unwrap()) as i64;
        let formula = rn_formula(&Family::Path { n }).unwrap();
        ok &= rn == formula;
        rows.push(format!("P{n}={rn}/{formula}"));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(300);
    let msg = format!("exact/formula {} in {elapsed:.2?}", rows.join(" "));
    if ok { Ok(msg) } else { Err(msg) }
}

fn small_caterpillars() -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for (n, k, expected) in [(3, 1, 10), (3, 2, 13), (5, 1, 26)] {
        let inst = gen_caterpillar(n, k).unwrap();
        let rn = exact(&inst) as i64;
        ok &= inst.tree().order() <= 9 && rn == expected && inst.closed_form_rn() == Some(expected);
        rows.push(format!("C({n},{k}) exact {rn} closed form {:?}", inst.closed_form_rn()));
    }
    let msg = rows.join(", ");
    if ok { Ok(msg) } else { Err(msg) }
}

fn four_spine_caterpillars() -> Outcome {
    let c41 = gen_caterpillar(4, 1).unwrap();
    let rn1 = exact(&c41) as i64;
    let improved = lower_bound_improved(&c41.metrics().unwrap()).unwrap();
    let c42 = gen_caterpillar(4, 2).unwrap();
    let rn2 = exact(&c42) as i64;
    let msg = format!(
        "C(4,1) exact {rn1}, improved bound {improved}, 4k+11 gives 15; C(4,2) exact {rn2}, 4k+9 gives 17"
    );
    if rn1 == 13 && improved == 13 && rn1 != 15 && rn2 == 17 { Ok(msg) } else { Err(msg) }
}

fn levelwise_small() -> Outcome {
    let cases = [
        ("T1_{2,3}", gen_levelwise(1, &[2, 3]).unwrap(), 13),
        ("T2_{2,3}", gen_levelwise(2, &[2, 3]).unwrap(), 17),
        ("L2_{2,2}", gen_lmh(2, 2, 2).unwrap(), 18),
        ("L1_{2,2}", gen_lmh(1, 2, 2).unwrap(), 13),
    ];
    let binary = rn_formula(&Family::CompleteBinary { h: 2 }).unwrap();
    let mut ok = binary == 13;
    let mut rows = vec![format!("binary h=2 formula {binary}")];
    for (name, inst, expected) in cases {
        let rn = exact(&inst) as i64;
        ok &= rn == expected;
        rows.push(format!("{name} exact {rn} expected {expected}"));
    }
    let msg = rows.join(", ");
    if ok { Ok(msg) } else { Err(msg) }
}

fn certification_grid() -> Outcome {
    let start = Instant::now();
    let mut instances = Vec::new();
    for n in 3..=8 {
        for k in 1..=3 {
            instances.push(gen_caterpillar(n, k));
        }
    }
    for z in 1..=2 {
        for degrees in [&[2, 3][..], &[2, 4], &[2, 3, 3], &[2, 4, 4]] {
            instances.push(gen_levelwise(z, degrees));
        }
    }
    for z in 1..=2 {
        for m in 2..=4 {
            for h in 2..=4 {
                instances.push(gen_lmh(z, m, h));
            }
        }
    }
    let total = instances.len();
    let mut failures = Vec::new();
    for inst in instances {
        let inst = inst.unwrap();
        let family = inst.family().to_string();
        let closed = inst.closed_form_rn();
        let span = inst
            .with_proof_order()
            .map_err(|e| e.to_string())
            .and_then(|inst| {
                let metrics = inst.metrics().map_err(|e| e.to_string())?;
                let cert = certify_tightness(&metrics, inst.proof_order().unwrap()).map_err(|e| e.to_string())?;
                cert.labelling().map(|f| f.span() as i64).ok_or_else(|| format!("{:?}", cert.failure()))
            });
        match span {
            Ok(span) if Some(span) == closed => {}
            Ok(span) => failures.push(format!("{family}: certified {span}, closed form {closed:?}")),
            Err(e) => failures.push(format!("{family}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    if failures.is_empty() && elapsed < Duration::from_secs(60) {
        Ok(format!("{total} instances certified at their closed forms in {elapsed:.2?}"))
    } else {
        Err(format!(
            "{} of {total} instances off ({elapsed:.2?}): {}",
            failures.len(),
            failures.join("; ")
        ))
    }
}

fn three_path() -> Outcome {
    let inst = gen_path(3).unwrap();
    let m = inst.metrics().unwrap();
    let (rn, basic, improved) = (exact(&inst), lower_bound_basic(&m).unwrap(), lower_bound_improved(&m).unwrap());
    let msg = format!("exact {rn}, basic bound {basic}, improved bound {improved}");
    if (rn, basic, improved) == (3, 3, 4) { Ok(msg) } else { Err(msg) }
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..500 {
        let n = rng.gen_range(1..=60);
        let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let tree = if n == 1 { Tree::singleton() } else { Tree::from_edges(&edges).unwrap() };
        let m = TreeMetrics::new(&tree).unwrap();
        for u in 0..n {
            for v in 0..n {
                if m.distance_by_levels(u, v).unwrap() != m.distance(u, v).unwrap() {
                    return Err(format!("distance identity fails on random tree {trial} at ({u},{v})"));
                }
            }
        }
    }

    let mut checked = 0;
    let mut strict = 0;
    let mut seed = 0u64;
    while checked < 200 {
        let n = 5 + (seed % 5) as usize;
        let inst = gen_random_two_branch(n, seed).unwrap();
        seed += 1;
        let m = inst.metrics().unwrap();
        if m.diameter() < 4 {
            continue;
        }
        checked += 1;
        let solved = exact_rn(inst.tree(), &Limits::default()).unwrap();
        let rn = solved.rn as i64;
        let (basic, improved) = (lower_bound_basic(&m).unwrap(), lower_bound_improved(&m).unwrap());
        if rn < improved {
            return Err(format!("seed {}: exact {rn} below improved bound {improved}", seed - 1));
        }
        if strict_gap_predicate(&m).unwrap() {
            strict += 1;
            if rn <= basic {
                return Err(format!("seed {}: exact {rn} not above basic bound {basic}", seed - 1));
            }
        }
        let profile = jf_profile(&m, &solved.witness).unwrap();
        let floor = if m.weight_centers().len() == 1 { 0 } else { -(m.order() as i64 - 1) };
        if profile.sigma < floor || !profile.decomposition_holds() {
            return Err(format!("seed {}: sigma {} or span decomposition off", seed - 1, profile.sigma));
        }
    }
    Ok(format!(
        "500 distance checks; 200 two-branch trees ({strict} with a strict gap) respect both bounds and the span decomposition"
    ))
}

fn comparison_bounds() -> Outcome {
    let p9 = gen_path(9).unwrap();
    let m9 = p9.metrics().unwrap();
    let even = liu_bound_even(&m9, m9.weight_centers()[0]).unwrap().value;
    let mut rows = vec![format!("P9 even bound {even}")];
    let mut ok = even == 34;
    for (k, want, want_improved) in [(3, 47, 51), (2, 39, 41)] {
        let inst = gen_caterpillar(6, k).unwrap();
        let m = inst.metrics().unwrap();
        let odd = liu_bound_odd(&m, inst.id_of("v_3").unwrap()).unwrap().value;
        let improved = lower_bound_improved(&m).unwrap();
        ok &= odd == want && improved == want_improved;
        rows.push(format!("C(6,{k}) odd bound {odd}, improved {improved}, gap {}", improved - odd));
    }
    let msg = rows.join(", ");
    if ok { Ok(msg) } else { Err(msg) }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("path radio numbers", path_numbers),
        ("caterpillars", small_caterpillars),
        ("four-vertex-spine caterpillars", four_spine_caterpillars),
        ("level-wise families", levelwise_small),
        ("certification grid", certification_grid),
        ("three-vertex path", three_path),
        ("property suite", property_suite),
        ("comparison bounds", comparison_bounds),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(msg) => println!("PASS {} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}

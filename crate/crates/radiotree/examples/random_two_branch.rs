//! Random two-branch trees: exact radio number against the basic and improved bounds.

use radiotree::families::gen_random_two_branch;
use radiotree::solver::{exact_rn, Limits};
use radiotree::{lower_bound_basic, lower_bound_improved, strict_gap_predicate, Result};

pub fn main() -> Result<()> {
    let limits = Limits::default();
    let mut tight = 0;
    let trials = 40;
    for seed in 0..trials {
        let inst = gen_random_two_branch(9, seed)?;
        let m = inst.metrics()?;
        let rn = exact_rn(inst.tree(), &limits)?.rn as i64;
        let (basic, improved) = (lower_bound_basic(&m)?, lower_bound_improved(&m)?);
        assert!(rn >= improved);
        if strict_gap_predicate(&m)? {
            assert!(rn > basic);
        }
        if rn == improved {
            tight += 1;
        }
        println!("seed {seed:<3} d={} |W|={} basic={basic:<3} improved={improved:<3} rn={rn}", m.diameter(), m.weight_centers().len());
    }
    println!("improved bound attained on {tight} of {trials} trees");
    Ok(())
}

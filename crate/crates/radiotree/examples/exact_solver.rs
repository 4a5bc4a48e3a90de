//! Exact radio numbers of small family members, compared with their closed forms.

use radiotree::families::{gen_caterpillar, gen_levelwise, gen_lmh, gen_path};
use radiotree::solver::{exact_rn, Limits};
use radiotree::{lower_bound_improved, FamilyInstance, Result, TreeMetrics};

fn report(inst: &FamilyInstance) -> Result<()> {
    let metrics = TreeMetrics::new(inst.tree())?;
    let solved = exact_rn(inst.tree(), &Limits::default())?;
    let closed = inst
        .closed_form_rn()
        .map_or_else(|| "-".to_string(), |v| v.to_string());
    println!(
        "{:<28} p={:<3} rn={:<4} closed form={:<4} improved bound={:<4} nodes={:<10} {:.2?}",
        inst.family().to_string(),
        inst.tree().order(),
        solved.rn,
        closed,
        lower_bound_improved(&metrics)?,
        solved.stats.nodes,
        solved.stats.elapsed,
    );
    Ok(())
}

pub fn main() -> Result<()> {
    for n in 4..=10 {
        report(&gen_path(n)?)?;
    }
    for (n, k) in [(3, 1), (3, 2), (5, 1), (4, 1), (4, 2)] {
        report(&gen_caterpillar(n, k)?)?;
    }
    report(&gen_levelwise(1, &[2, 3])?)?;
    report(&gen_levelwise(2, &[2, 3])?)?;
    report(&gen_lmh(1, 2, 2)?)?;
    report(&gen_lmh(2, 2, 2)?)?;
    Ok(())
}

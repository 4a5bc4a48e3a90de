//! Comparison bound at a degree-2 weight center next to the improved bound.

use radiotree::bounds::{comparison_bound, default_comparison_center};
use radiotree::families::{gen_caterpillar, gen_path};
use radiotree::{lower_bound_improved, FamilyInstance, Result};

fn compare(inst: &FamilyInstance, center: Option<&str>) -> Result<()> {
    let metrics = inst.metrics()?;
    let x = match center {
        Some(name) => inst.id_of(name).expect("named vertex"),
        None => default_comparison_center(&metrics).expect("degree-2 center"),
    };
    let c = comparison_bound(&metrics, x)?;
    let improved = lower_bound_improved(&metrics)?;
    println!(
        "{:<22} at {:<6} comparison {:<4} ({:?})  improved {:<4} gap {}",
        inst.family().to_string(),
        inst.name_of(x).unwrap_or("?"),
        c.value,
        c.line,
        improved,
        improved - c.value
    );
    Ok(())
}

pub fn main() -> Result<()> {
    for n in [7, 9, 11] {
        compare(&gen_path(n)?, None)?;
    }
    compare(&gen_caterpillar(6, 3)?, Some("v_3"))?;
    compare(&gen_caterpillar(6, 2)?, Some("v_3"))?;
    compare(&gen_caterpillar(5, 2)?, None)?;
    Ok(())
}

//! Level-wise regular trees and the lmh trees: certified spans against the closed forms.

use radiotree::families::{gen_complete_binary, gen_levelwise, gen_lmh};
use radiotree::{certify_tightness, lower_bound_improved, FamilyInstance, Result};

fn row(inst: FamilyInstance) -> Result<()> {
    let inst = inst.with_proof_order()?;
    let metrics = inst.metrics()?;
    let cert = certify_tightness(&metrics, inst.proof_order().expect("order"))?;
    let span = cert.labelling().map(|f| f.span() as i64);
    let closed = inst.closed_form_rn();
    let mark = if span == closed { "" } else { "  <- differs from closed form" };
    println!(
        "{:<30} p={:<4} improved={:<5} certified={:<5} closed={:<5}{mark}",
        inst.family().to_string(),
        inst.tree().order(),
        lower_bound_improved(&metrics)?,
        span.map_or("-".into(), |s| s.to_string()),
        closed.map_or("-".into(), |s| s.to_string()),
    );
    Ok(())
}

pub fn main() -> Result<()> {
    for z in 1..=2 {
        for degrees in [&[2, 3][..], &[2, 4], &[2, 3, 3], &[2, 4, 4], &[2, 3, 4, 3]] {
            row(gen_levelwise(z, degrees)?)?;
        }
    }
    for h in 2..=6 {
        row(gen_complete_binary(h)?)?;
    }
    for z in 1..=2 {
        for m in 2..=4 {
            for h in 2..=4 {
                row(gen_lmh(z, m, h)?)?;
            }
        }
    }
    Ok(())
}

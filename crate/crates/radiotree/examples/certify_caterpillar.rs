//! Builds the optimal order of a caterpillar, certifies it and prints the labelling
//! by vertex name.

use radiotree::families::gen_caterpillar;
use radiotree::{certify_tightness, Result};

pub fn main() -> Result<()> {
    let (n, k) = (6, 2);
    let inst = gen_caterpillar(n, k)?.with_proof_order()?;
    let metrics = inst.metrics()?;
    let order = inst.proof_order().expect("caterpillars have proof orders");
    let cert = certify_tightness(&metrics, order)?;
    let labelling = cert.labelling().expect("proof orders certify");

    println!("{}: {} vertices, closed form {:?}", inst.family(), inst.tree().order(), inst.closed_form_rn());
    for &v in order.as_slice() {
        println!("  {:<10} level {}  label {}", inst.name_of(v).unwrap_or("?"), metrics.level(v), labelling.label(v));
    }
    println!("certified span {}", labelling.span());

    for n in 3..=10 {
        let spans: Vec<String> = (1..=4)
            .map(|k| -> Result<String> {
                let inst = gen_caterpillar(n, k)?.with_proof_order()?;
                let cert = certify_tightness(&inst.metrics()?, inst.proof_order().expect("order"))?;
                Ok(format!("{:>4}", cert.labelling().map_or(0, |f| f.span())))
            })
            .collect::<Result<_>>()?;
        println!("C({n},k) for k = 1..4: {}", spans.join(""));
    }
    Ok(())
}

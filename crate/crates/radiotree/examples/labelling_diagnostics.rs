//! What the certification pipeline reports for good and bad orders of the 5-path.

use radiotree::labelling::{greedy_label_from_order, jf_profile, order_of};
use radiotree::order::{a_sequence, a_sequence_literal, admissibility, is_feasible};
use radiotree::{certify_tightness, Result, Tree, TreeMetrics};

pub fn main() -> Result<()> {
    let tree = Tree::parse("0 1\n1 2\n2 3\n3 4\n")?;
    let m = TreeMetrics::new(&tree)?;
    for text in ["2 4 0 3 1", "2 0 4 1 3", "2 1 3 0 4", "0 1 2 3 4"] {
        let order = radiotree::LinearOrder::parse(text)?;
        println!("order {order}");
        println!("  feasible {}  admissible {}", is_feasible(&m, &order)?, admissibility(&m, &order)?.holds);
        println!("  a-sequence {:?}", a_sequence(&m, &order)?.as_slice());
        match a_sequence_literal(&m, &order) {
            Ok(a) => println!("  literal rule {:?}", a.as_slice()),
            Err(e) => println!("  literal rule: {e}"),
        }
        match certify_tightness(&m, &order)? {
            radiotree::Certification::Certified(f) => println!("  certified, labels {:?}", f.labels()),
            radiotree::Certification::Failed(e) => println!("  not certified: {e}"),
        }
        let greedy = greedy_label_from_order(&m, &order)?;
        let profile = jf_profile(&m, &greedy)?;
        println!(
            "  greedy span {}  jumps {:?}  sigma {}  decomposition holds {}",
            greedy.span(),
            profile.steps,
            profile.sigma,
            profile.decomposition_holds()
        );
        assert_eq!(order_of(&greedy)?, order);
    }
    Ok(())
}

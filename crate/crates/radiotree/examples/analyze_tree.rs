//! Weight centers, levels, branches and lower bounds of a tree given as edge lines.

use radiotree::{lower_bound_basic, lower_bound_improved, strict_gap_predicate, Result, Tree, TreeMetrics};

const TREE: &str = "\
# spine 0-1-2-3-4-5 with two leaves on vertex 1 and one on vertex 4
0 1
1 2
2 3
3 4
4 5
1 6
1 7
4 8
";

pub fn main() -> Result<()> {
    let tree = Tree::parse(TREE)?;
    let m = TreeMetrics::new(&tree)?;
    println!("order {} diameter {}", m.order(), m.diameter());
    println!("weight centers {:?} (epsilon {})", m.weight_centers(), m.epsilon());
    println!("branches {} of sizes {:?}", m.branch_count(), m.branch_sizes());
    println!("{:>6} {:>6} {:>6} {:>6}", "vertex", "level", "branch", "remote");
    for v in 0..m.order() {
        let branch = m.branch(v).map_or("-".to_string(), |b| b.to_string());
        println!("{v:>6} {:>6} {branch:>6} {:>6}", m.level(v), m.is_remote(v));
    }
    println!("total level {}  remote {}  xi {}", m.total_level(), m.remote_count(), m.xi());
    println!("basic bound {}", lower_bound_basic(&m)?);
    if m.two_branch() {
        println!("improved bound {}", lower_bound_improved(&m)?);
        println!("strictly above the basic bound: {}", strict_gap_predicate(&m)?);
    }
    Ok(())
}

//! Runs every example so they stay in step with the library.

#[path = "../examples/analyze_tree.rs"]
mod analyze_tree;

#[path = "../examples/certify_caterpillar.rs"]
mod certify_caterpillar;

#[path = "../examples/levelwise_families.rs"]
mod levelwise_families;

#[path = "../examples/comparison_bounds.rs"]
mod comparison_bounds;

#[path = "../examples/labelling_diagnostics.rs"]
mod labelling_diagnostics;

#[path = "../examples/random_two_branch.rs"]
mod random_two_branch;

#[path = "../examples/exact_solver.rs"]
mod exact_solver;

#[test]
fn analyze_tree_runs() {
    analyze_tree::main().unwrap();
}

#[test]
fn certify_caterpillar_runs() {
    certify_caterpillar::main().unwrap();
}

#[test]
fn levelwise_families_runs() {
    levelwise_families::main().unwrap();
}

#[test]
fn comparison_bounds_runs() {
    comparison_bounds::main().unwrap();
}

#[test]
fn labelling_diagnostics_runs() {
    labelling_diagnostics::main().unwrap();
}

#[test]
fn random_two_branch_runs() {
    random_two_branch::main().unwrap();
}

#[test]
fn exact_solver_runs() {
    exact_solver::main().unwrap();
}

//! Tree families with closed-form radio numbers and the linear orders that
//! certify them.

mod caterpillar;
mod levelwise;
mod random;

use std::collections::HashMap;
use std::fmt;

use crate::bounds::{certify_tightness, Certification};
use crate::error::{Error, Result};
use crate::metrics::TreeMetrics;
use crate::order::LinearOrder;
use crate::tree::Tree;

pub use caterpillar::{gen_caterpillar, proof_order_caterpillar};
pub use levelwise::{
    gen_complete_binary, gen_levelwise, gen_lmh, proof_order_levelwise, proof_order_lmh,
};
pub use random::gen_random_two_branch;

/// Family tag with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Path { n: usize },
    /// Spine of `n` vertices with `k` pendant leaves at four designated spine positions.
    Caterpillar { n: usize, k: usize },
    /// Level-wise regular tree with `z` roots and degree `degrees[i]` at level `i`.
    Levelwise { z: usize, degrees: Vec<usize> },
    /// Level-wise tree with degree list `(2, m+1, 2, ..., 2)` of height `h`.
    Lmh { z: usize, m: usize, h: usize },
    CompleteBinary { h: usize },
    RandomTwoBranch { n: usize, seed: u64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path { n } => write!(f, "path n={n}"),
            Family::Caterpillar { n, k } => write!(f, "caterpillar n={n} k={k}"),
            Family::Levelwise { z, degrees } => {
                let list: Vec<String> = degrees.iter().map(|m| m.to_string()).collect();
                write!(f, "levelwise z={z} degrees={}", list.join(","))
            }
            Family::Lmh { z, m, h } => write!(f, "lmh z={z} m={m} h={h}"),
            Family::CompleteBinary { h } => write!(f, "binary h={h}"),
            Family::RandomTwoBranch { n, seed } => write!(f, "random n={n} seed={seed}"),
        }
    }
}

/// A generated tree with its family, vertex names and optional proof order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    tree: Tree,
    family: Family,
    vertex_names: Vec<String>,
    name_index: HashMap<String, usize>,
    proof_order: Option<LinearOrder>,
    closed_form_rn: Option<i64>,
}

impl FamilyInstance {
    pub(crate) fn new(tree: Tree, family: Family, vertex_names: Vec<String>) -> Result<FamilyInstance> {
        if vertex_names.len() != tree.order() {
            return Err(Error::Internal(format!(
                "{} names for {} vertices",
                vertex_names.len(),
                tree.order()
            )));
        }
        let name_index: HashMap<String, usize> = vertex_names
            .iter()
            .enumerate()
            .map(|(v, name)| (name.clone(), v))
            .collect();
        if name_index.len() != vertex_names.len() {
            return Err(Error::Internal("duplicate vertex name".into()));
        }
        let closed_form_rn = rn_formula(&family).ok();
        Ok(FamilyInstance {
            tree,
            family,
            vertex_names,
            name_index,
            proof_order: None,
            closed_form_rn,
        })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn metrics(&self) -> Result<TreeMetrics> {
        TreeMetrics::new(&self.tree)
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn name_of(&self, v: usize) -> Option<&str> {
        self.vertex_names.get(v).map(String::as_str)
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.name_index.get(name).copied()
    }

    pub fn proof_order(&self) -> Option<&LinearOrder> {
        self.proof_order.as_ref()
    }

    pub fn closed_form_rn(&self) -> Option<i64> {
        self.closed_form_rn
    }

    /// `name id` lines, one per vertex in id order.
    pub fn names_text(&self) -> String {
        let mut out = String::new();
        for (v, name) in self.vertex_names.iter().enumerate() {
            out.push_str(&format!("{name} {v}\n"));
        }
        out
    }

    /// Attaches the family's proof order, which must certify.
    pub fn with_proof_order(mut self) -> Result<FamilyInstance> {
        let order = match self.family {
            Family::Caterpillar { .. } => proof_order_caterpillar(&self)?,
            Family::Levelwise { .. } | Family::CompleteBinary { .. } => proof_order_levelwise(&self)?,
            Family::Lmh { .. } => proof_order_lmh(&self)?,
            _ => {
                return Err(Error::UnsupportedParams(format!(
                    "no proof order for {}",
                    self.family
                )))
            }
        };
        self.proof_order = Some(order);
        Ok(self)
    }
}

/// Certifies `order` on the instance's tree, turning a failure into `InvalidProofOrder`.
pub(crate) fn validated(instance: &FamilyInstance, seq: Vec<usize>) -> Result<LinearOrder> {
    let order = LinearOrder::new(seq)?;
    let metrics = instance.metrics()?;
    match certify_tightness(&metrics, &order)? {
        Certification::Certified(_) => Ok(order),
        Certification::Failed(failure) => Err(Error::InvalidProofOrder(failure)),
    }
}

/// Fills a position table and checks every position was assigned exactly once.
pub(crate) fn collect_positions(p: usize, assignments: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut slots = vec![None; p];
    for &(pos, v) in assignments {
        match slots.get_mut(pos) {
            Some(slot @ None) => *slot = Some(v),
            Some(Some(_)) => return Err(Error::Internal(format!("position {pos} assigned twice"))),
            None => return Err(Error::Internal(format!("position {pos} out of range"))),
        }
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(pos, v)| v.ok_or_else(|| Error::Internal(format!("position {pos} unassigned"))))
        .collect()
}

/// The path `0 - 1 - ... - (n-1)` with vertices named `v_1 .. v_n`.
pub fn gen_path(n: usize) -> Result<FamilyInstance> {
    if n == 0 {
        return Err(Error::BadParams("path needs n >= 1".into()));
    }
    let tree = if n == 1 {
        Tree::singleton()
    } else {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(&edges)?
    };
    let names = (1..=n).map(|i| format!("v_{i}")).collect();
    FamilyInstance::new(tree, Family::Path { n }, names)
}

fn out_of_range(family: &Family, why: &str) -> Error {
    Error::OutOfRange(format!("{family}: {why}"))
}

/// Closed-form radio number of a family member.
pub fn rn_formula(family: &Family) -> Result<i64> {
    match *family {
        Family::Path { n } => {
            if n < 4 {
                return Err(out_of_range(family, "needs n >= 4"));
            }
            let k = (n / 2) as i64;
            Ok(if n % 2 == 1 { 2 * k * k + 2 } else { 2 * k * (k - 1) + 1 })
        }
        Family::Caterpillar { n, k } => {
            if n < 3 || k < 1 {
                return Err(out_of_range(family, "needs n >= 3 and k >= 1"));
            }
            let (n, k) = (n as i64, k as i64);
            Ok(match n {
                3 => 3 * k + 7,
                4 => 4 * k + 9,
                _ if n % 2 == 1 => (n * n + 4 * n * k + 2 * n - 2 * k - 1) / 2,
                _ => (n * n + 4 * n * k + 2 * n - 4 * k - 6) / 2,
            })
        }
        Family::Levelwise { z, ref degrees } => {
            let valid = matches!(z, 1 | 2)
                && degrees.first() == Some(&2)
                && degrees[1..].iter().all(|&m| m >= 3);
            if !valid {
                return Err(out_of_range(family, "needs z in {1,2}, m_0 = 2 and m_i >= 3"));
            }
            Ok(levelwise_formula(z, degrees))
        }
        Family::Lmh { z, m, h } => {
            if !matches!(z, 1 | 2) || m < 2 || h < 2 {
                return Err(out_of_range(family, "needs z in {1,2}, m >= 2 and h >= 2"));
            }
            let (m, h) = (m as i64, h as i64);
            Ok(if z == 1 {
                2 * m * h * (h - 2) + 3 * m + 4 * h - 1
            } else {
                2 * m * h * (h - 2) + 4 * m + 6 * h - 2
            })
        }
        Family::CompleteBinary { h } => {
            if !(2..=60).contains(&h) {
                return Err(out_of_range(family, "needs 2 <= h <= 60"));
            }
            let h = h as i64;
            Ok(13 * (1i64 << (h - 1)) - 4 * h - 5)
        }
        Family::RandomTwoBranch { .. } => Err(out_of_range(family, "no closed form")),
    }
}

fn levelwise_formula(z: usize, degrees: &[usize]) -> i64 {
    let h = degrees.len() as i64;
    let mut sum = 0i64;
    let mut prod = 1i64;
    for (i, &m) in degrees.iter().enumerate().skip(1) {
        prod *= m as i64 - 1;
        sum += (4 * (h - i as i64) - 2) * prod;
    }
    if z == 1 {
        sum + prod + 4 * h - 1
    } else {
        sum + 2 * prod + 6 * h - 3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_formula() {
        let values: Vec<i64> = (4..=10)
            .map(|n| rn_formula(&Family::Path { n }).unwrap())
            .collect();
        assert_eq!(values, vec![5, 10, 13, 20, 25, 34, 41]);
        assert!(matches!(rn_formula(&Family::Path { n: 3 }), Err(Error::OutOfRange(_))));
        assert_eq!(gen_path(9).unwrap().closed_form_rn(), Some(34));
        assert_eq!(gen_path(3).unwrap().closed_form_rn(), None);
    }

    #[test]
    fn other_formulas() {
        assert_eq!(rn_formula(&Family::CompleteBinary { h: 3 }).unwrap(), 35);
        assert_eq!(rn_formula(&Family::CompleteBinary { h: 2 }).unwrap(), 13);
        assert_eq!(rn_formula(&Family::Lmh { z: 2, m: 3, h: 3 }).unwrap(), 46);
        assert_eq!(rn_formula(&Family::Lmh { z: 1, m: 3, h: 3 }).unwrap(), 38);
        assert_eq!(rn_formula(&Family::Caterpillar { n: 3, k: 1 }).unwrap(), 10);
        assert_eq!(rn_formula(&Family::Caterpillar { n: 5, k: 1 }).unwrap(), 26);
        assert_eq!(rn_formula(&Family::Caterpillar { n: 6, k: 3 }).unwrap(), 51);
        assert_eq!(rn_formula(&Family::Caterpillar { n: 4, k: 2 }).unwrap(), 17);
        let t2 = Family::Levelwise { z: 2, degrees: vec![2, 3] };
        assert_eq!(rn_formula(&t2).unwrap(), 17);
        let binary = Family::Levelwise { z: 1, degrees: vec![2, 3, 3] };
        assert_eq!(rn_formula(&binary).unwrap(), 35);
        let bad = Family::Levelwise { z: 1, degrees: vec![3, 3] };
        assert!(matches!(rn_formula(&bad), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn names_are_a_bijection() {
        let inst = gen_path(4).unwrap();
        assert_eq!(inst.id_of("v_1"), Some(0));
        assert_eq!(inst.name_of(3), Some("v_4"));
        assert_eq!(inst.names_text(), "v_1 0\nv_2 1\nv_3 2\nv_4 3\n");
        assert!(gen_path(0).is_err());
        assert_eq!(gen_path(1).unwrap().tree().order(), 1);
    }

    #[test]
    fn positions_must_be_filled_once() {
        assert_eq!(collect_positions(2, &[(1, 5), (0, 7)]).unwrap(), vec![7, 5]);
        assert!(collect_positions(2, &[(0, 1), (0, 2)]).is_err());
        assert!(collect_positions(2, &[(0, 1)]).is_err());
    }
}

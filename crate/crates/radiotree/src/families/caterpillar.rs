use super::{collect_positions, validated, Family, FamilyInstance};
use crate::error::{Error, Result};
use crate::order::LinearOrder;
use crate::tree::Tree;

/// Spine positions (1-based) that carry pendant leaves, ascending and deduplicated.
fn tuft_positions(n: usize) -> Vec<usize> {
    let mut tufts = if n % 2 == 1 {
        vec![1, (n - 1) / 2, (n + 3) / 2, n]
    } else {
        vec![1, (n - 2) / 2, (n + 4) / 2, n]
    };
    tufts.sort_unstable();
    tufts.dedup();
    tufts
}

/// Caterpillar with spine `v_1 .. v_n` (ids `0 .. n-1`) and `k` leaves `v_{i,1} .. v_{i,k}`
/// at each tuft position `i`; leaf ids follow in ascending `(i, j)` order.
pub fn gen_caterpillar(n: usize, k: usize) -> Result<FamilyInstance> {
    if n < 3 || k < 1 {
        return Err(Error::BadParams(format!(
            "caterpillar needs n >= 3 and k >= 1, got n={n} k={k}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let mut names: Vec<String> = (1..=n).map(|i| format!("v_{i}")).collect();
    for i in tuft_positions(n) {
        for j in 1..=k {
            edges.push((i - 1, names.len()));
            names.push(format!("v_{{{i},{j}}}"));
        }
    }
    let tree = Tree::from_edges(&edges)?;
    FamilyInstance::new(tree, Family::Caterpillar { n, k }, names)
}

/// The caterpillar's optimal order, certified before it is returned.
pub fn proof_order_caterpillar(instance: &FamilyInstance) -> Result<LinearOrder> {
    let Family::Caterpillar { n, k } = *instance.family() else {
        return Err(Error::UnsupportedParams(format!(
            "{} is not a caterpillar",
            instance.family()
        )));
    };
    let p = instance.tree().order();
    let tufts = tuft_positions(n);
    let spine = |i: usize| i - 1;
    let leaf = |i: usize, j: usize| {
        let t = tufts.iter().position(|&x| x == i).expect("tuft position");
        n + t * k + (j - 1)
    };

    let seq = if n == 3 {
        let mut pos = vec![(0, spine(2)), (p - 2, spine(3)), (p - 1, spine(1))];
        for j in 1..=k {
            pos.push((2 * j - 1, leaf(3, j)));
            pos.push((2 * j, leaf(1, j)));
        }
        collect_positions(p, &pos)?
    } else if n == 4 {
        let mut seq = vec![spine(2), leaf(4, 1), spine(1), spine(4), leaf(1, 1)];
        for j in 2..=k {
            seq.push(leaf(4, j));
            seq.push(leaf(1, j));
        }
        seq.push(spine(3));
        seq
    } else if n % 2 == 1 {
        let (lo, hi) = ((n - 1) / 2, (n + 1) / 2);
        let mut pos = vec![(0, spine(lo)), (p - 1, spine(hi))];
        for j in 1..=k {
            pos.push((4 * (j - 1) + 2, leaf(1, j)));
            pos.push((4 * j, leaf(lo, j)));
            pos.push((4 * (j - 1) + 3, leaf(hi + 1, j)));
            pos.push((4 * (j - 1) + 1, leaf(n, j)));
        }
        for i in 1..=n {
            if i < lo {
                pos.push((4 * k + 2 * i, spine(i)));
            } else if i > hi {
                pos.push((4 * k + 2 * (i - hi) - 1, spine(i)));
            }
        }
        collect_positions(p, &pos)?
    } else if k == 1 {
        let h = n / 2;
        let mut left = vec![spine(h)];
        left.extend((1..h).map(spine));
        left.extend([leaf(h - 1, 1), leaf(1, 1)]);
        let mut right = vec![leaf(n, 1)];
        right.extend((h + 2..=n).map(spine));
        right.extend([leaf(h + 2, 1), spine(h + 1)]);
        left.iter().zip(&right).flat_map(|(&a, &b)| [a, b]).collect()
    } else {
        let h = n / 2;
        let mut pos = vec![
            (0, spine(h - 1)),
            (1, leaf(n, 1)),
            (2, spine(h)),
            (3, leaf(n, 2)),
            (4, leaf(1, 1)),
            (5, spine(h + 1)),
            (6, leaf(1, 2)),
            (p - 1, spine(h + 2)),
        ];
        for j in 1..=k {
            if j >= 3 {
                pos.push((4 * (j - 1) + 2, leaf(1, j)));
                pos.push((4 * (j - 1) + 1, leaf(n, j)));
            }
            if j < k {
                pos.push((4 * (j + 1), leaf(h - 1, j)));
                pos.push((4 * (j + 1) - 1, leaf(h + 2, j)));
            }
        }
        pos.push((4 * k + 1, leaf(h + 2, k)));
        pos.push((4 * k + 2, leaf(h - 1, k)));
        for i in 1..=n {
            if i < h - 1 {
                pos.push((4 * k + 2 * (h - i), spine(i)));
            } else if i > h + 2 {
                pos.push((4 * k + 2 * (n - i) + 3, spine(i)));
            }
        }
        collect_positions(p, &pos)?
    };
    validated(instance, seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{certify_tightness, lower_bound_improved};

    #[test]
    fn orders_and_shapes() {
        let c31 = gen_caterpillar(3, 1).unwrap();
        assert_eq!(c31.tree().order(), 5);
        assert_eq!(c31.closed_form_rn(), Some(10));
        let c51 = gen_caterpillar(5, 1).unwrap();
        assert_eq!(c51.tree().order(), 9);
        assert_eq!(c51.metrics().unwrap().diameter(), 6);
        let c63 = gen_caterpillar(6, 3).unwrap();
        assert_eq!(c63.tree().order(), 18);
        assert_eq!(c63.metrics().unwrap().xi(), 4);
        assert_eq!(c63.closed_form_rn(), Some(51));
        assert_eq!(c63.id_of("v_{6,3}"), Some(17));
        assert!(matches!(gen_caterpillar(2, 1), Err(Error::BadParams(_))));
        assert!(matches!(gen_caterpillar(5, 0), Err(Error::BadParams(_))));
    }

    #[test]
    fn c31_order_matches_hand_certification() {
        let inst = gen_caterpillar(3, 1).unwrap();
        let order = proof_order_caterpillar(&inst).unwrap();
        let named: Vec<&str> = order.as_slice().iter().map(|&v| inst.name_of(v).unwrap()).collect();
        assert_eq!(named, vec!["v_2", "v_{3,1}", "v_{1,1}", "v_3", "v_1"]);
    }

    #[test]
    fn proof_orders_certify_at_closed_form() {
        for n in 3..=12 {
            for k in 1..=4 {
                let inst = gen_caterpillar(n, k).unwrap().with_proof_order().unwrap();
                let metrics = inst.metrics().unwrap();
                let cert = certify_tightness(&metrics, inst.proof_order().unwrap()).unwrap();
                let span = cert.labelling().unwrap().span() as i64;
                assert_eq!(span, inst.closed_form_rn().unwrap(), "C({n},{k})");
                assert_eq!(span, lower_bound_improved(&metrics).unwrap());
            }
        }
    }

    #[test]
    fn rejects_other_families() {
        let path = super::super::gen_path(5).unwrap();
        assert!(matches!(proof_order_caterpillar(&path), Err(Error::UnsupportedParams(_))));
    }
}

use super::{collect_positions, validated, Family, FamilyInstance};
use crate::error::{Error, Result};
use crate::order::LinearOrder;
use crate::tree::Tree;

const MAX_VERTICES: usize = 2_000_000;

/// Vertex ids in breadth-first order: the roots first, then level by level.
struct Layout {
    edges: Vec<(usize, usize)>,
    names: Vec<String>,
    /// For each vertex below the roots: (root side, child indices from the root down).
    index: Vec<Option<(usize, Vec<usize>)>>,
}

fn layout(z: usize, degrees: &[usize]) -> Result<Layout> {
    if !matches!(z, 1 | 2) {
        return Err(Error::BadParams(format!("z must be 1 or 2, got {z}")));
    }
    if degrees.is_empty() || degrees.iter().any(|&m| m < 2) {
        return Err(Error::BadParams(format!(
            "degrees must be non-empty and each at least 2, got {degrees:?}"
        )));
    }
    let root_children = if z == 1 { degrees[0] } else { degrees[0] - 1 };
    let mut width = z * root_children;
    let mut total = z + width;
    for &m in &degrees[1..] {
        width = width.saturating_mul(m - 1);
        total = total.saturating_add(width);
        if total > MAX_VERTICES {
            return Err(Error::BadParams(format!(
                "tree would exceed {MAX_VERTICES} vertices"
            )));
        }
    }

    let roots = if z == 1 { vec!["w"] } else { vec!["w", "w'"] };
    let mut out = Layout {
        edges: Vec::with_capacity(total),
        names: roots.iter().map(|r| r.to_string()).collect(),
        index: vec![None; z],
    };
    if z == 2 {
        out.edges.push((0, 1));
    }
    let mut frontier: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for side in 0..z {
        for i in 0..root_children {
            frontier.push((side, side, vec![i]));
        }
    }
    let mut level = 1;
    loop {
        let mut next = Vec::new();
        for (parent, side, idx) in frontier {
            let v = out.names.len();
            let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            out.names.push(format!("{}_{{{}}}", roots[side], list.join(",")));
            out.edges.push((parent, v));
            if level < degrees.len() {
                for i in 0..degrees[level] - 1 {
                    let mut child = idx.clone();
                    child.push(i);
                    next.push((v, side, child));
                }
            }
            out.index.push(Some((side, idx)));
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
        level += 1;
    }
    Ok(out)
}

fn build(z: usize, degrees: &[usize], family: Family) -> Result<FamilyInstance> {
    let layout = layout(z, degrees)?;
    let tree = Tree::from_edges(&layout.edges)?;
    FamilyInstance::new(tree, family, layout.names)
}

/// Level-wise regular tree: `z` adjacent roots named `w` (and `w'`), every vertex at
/// level `i < h` has degree `degrees[i]`, and all leaves sit at level `h = degrees.len()`.
/// Below the roots, vertices are named by their child indices, e.g. `w_{0,2}`.
pub fn gen_levelwise(z: usize, degrees: &[usize]) -> Result<FamilyInstance> {
    build(
        z,
        degrees,
        Family::Levelwise {
            z,
            degrees: degrees.to_vec(),
        },
    )
}

/// Complete binary tree of height `h`.
pub fn gen_complete_binary(h: usize) -> Result<FamilyInstance> {
    if h == 0 {
        return Err(Error::BadParams("binary tree needs h >= 1".into()));
    }
    build(1, &binary_degrees(h), Family::CompleteBinary { h })
}

fn binary_degrees(h: usize) -> Vec<usize> {
    let mut degrees = vec![3; h];
    degrees[0] = 2;
    degrees
}

/// Levelwise order from the index formula, certified before it is returned.
pub fn proof_order_levelwise(instance: &FamilyInstance) -> Result<LinearOrder> {
    let (z, degrees) = match instance.family() {
        Family::Levelwise { z, degrees } => (*z, degrees.clone()),
        Family::CompleteBinary { h } => (1, binary_degrees(*h)),
        other => {
            return Err(Error::UnsupportedParams(format!(
                "{other} is not a level-wise tree"
            )))
        }
    };
    let h = degrees.len();
    if h < 2 || degrees[0] != 2 || degrees[1..].iter().any(|&m| m < 3) {
        return Err(Error::UnsupportedParams(format!(
            "level-wise proof order needs h >= 2, m_0 = 2 and m_i >= 3, got {degrees:?}"
        )));
    }
    let layout = layout(z, &degrees)?;
    let p = layout.names.len();
    // Each root has m_0 children when z = 1 and a single child when z = 2.
    let m0 = if z == 1 { degrees[0] } else { 1 };
    let index_of = |idx: &[usize]| -> usize {
        let l = idx.len();
        let mut j = 1 + idx[0];
        for t in 2..=l {
            let prod: usize = degrees[1..t - 1].iter().map(|m| m - 1).product();
            j += m0 * idx[t - 1] * prod;
        }
        for t in l..h {
            let prod: usize = degrees[1..=t].iter().map(|m| m - 1).product();
            j += m0 * prod;
        }
        j
    };

    let seq = if z == 1 {
        let mut pos = vec![(0, 0)];
        for (v, entry) in layout.index.iter().enumerate() {
            if let Some((_, idx)) = entry {
                pos.push((index_of(idx), v));
            }
        }
        collect_positions(p, &pos)?
    } else {
        let q = (p - 2) / 2;
        let mut sides = [vec![None; q + 1], vec![None; q + 1]];
        for (v, entry) in layout.index.iter().enumerate() {
            if let Some((side, idx)) = entry {
                let j = index_of(idx);
                match sides[*side].get_mut(j) {
                    Some(slot @ None) if j >= 1 => *slot = Some(v),
                    _ => return Err(Error::Internal(format!("level-wise index {j} invalid"))),
                }
            }
        }
        let get = |side: usize, j: usize| -> Result<usize> {
            sides[side][j].ok_or_else(|| Error::Internal(format!("level-wise index {j} unused")))
        };
        let mut pos = vec![
            (0, get(0, q)?),
            (1, get(1, 1)?),
            (2, 0),
            (3, get(1, 2)?),
            (4, get(0, 1)?),
            (5, 1),
            (6, get(0, 2)?),
            (p - 1, get(1, q)?),
        ];
        for j in 7..p - 1 {
            let v = if j % 2 == 0 {
                get(0, (j - 2) / 2)?
            } else {
                get(1, (j - 1) / 2)?
            };
            pos.push((j, v));
        }
        collect_positions(p, &pos)?
    };
    validated(instance, seq)
}

/// Level-wise tree with degree list `(2, m+1, 2, ..., 2)` of height `h`: each of the two
/// level-one vertices `w^1`, `w^2` carries `m` legs `w^l_{i,1} .. w^l_{i,h-1}` down to level
/// `h`. The root is `r` when `z = 1`; the two roots are `r_1`, `r_2` when `z = 2`.
pub fn gen_lmh(z: usize, m: usize, h: usize) -> Result<FamilyInstance> {
    if !matches!(z, 1 | 2) || m < 2 || h < 2 {
        return Err(Error::BadParams(format!(
            "lmh needs z in {{1,2}}, m >= 2 and h >= 2, got z={z} m={m} h={h}"
        )));
    }
    if 2 * m * h > MAX_VERTICES {
        return Err(Error::BadParams(format!("tree would exceed {MAX_VERTICES} vertices")));
    }
    let mut names: Vec<String> = if z == 1 {
        vec!["r".into()]
    } else {
        vec!["r_1".into(), "r_2".into()]
    };
    let mut edges = Vec::new();
    if z == 2 {
        edges.push((0, 1));
    }
    let tops = [names.len(), names.len() + 1];
    for (l, &top) in tops.iter().enumerate() {
        edges.push((if z == 1 { 0 } else { l }, top));
        names.push(format!("w^{}", l + 1));
    }
    for (l, &top) in tops.iter().enumerate() {
        for i in 1..=m {
            let mut prev = top;
            for j in 1..h {
                edges.push((prev, names.len()));
                prev = names.len();
                names.push(format!("w^{}_{{{i},{j}}}", l + 1));
            }
        }
    }
    let tree = Tree::from_edges(&edges)?;
    FamilyInstance::new(tree, Family::Lmh { z, m, h }, names)
}

/// The lmh order, certified before it is returned.
pub fn proof_order_lmh(instance: &FamilyInstance) -> Result<LinearOrder> {
    let Family::Lmh { z, m, h } = *instance.family() else {
        return Err(Error::UnsupportedParams(format!(
            "{} is not an lmh tree",
            instance.family()
        )));
    };
    let p = instance.tree().order();
    let base = z + 2;
    let top = |l: usize| z + l - 1;
    let leg = |l: usize, i: usize, j: usize| base + ((l - 1) * m + (i - 1)) * (h - 1) + (j - 1);
    let mut pos = Vec::with_capacity(p);
    if z == 1 {
        pos.extend([(0, 0), (p - 2, top(1)), (p - 1, top(2))]);
        for l in 1..=2 {
            for i in 1..=m {
                pos.push((2 * i + l - 2, leg(l, i, h - 1)));
                for j in 1..h - 1 {
                    let t = if l == 1 {
                        2 * (i - 1) + 2 * m * j + l
                    } else {
                        2 * (i - 1) + 2 * m * (h - j - 1) + l
                    };
                    pos.push((t, leg(l, i, j)));
                }
            }
        }
    } else {
        pos.extend([
            (0, top(2)),
            (1, leg(1, 1, h - 1)),
            (2, 1),
            (3, leg(1, 2, h - 1)),
            (4, leg(2, 1, h - 1)),
            (5, 0),
            (6, leg(2, 2, h - 1)),
            (p - 1, top(1)),
        ]);
        for l in 1..=2 {
            for i in 3..=m {
                pos.push((2 * i + l, leg(l, i, h - 1)));
            }
            for i in 1..=m {
                for j in 1..h - 1 {
                    let t = if l == 1 {
                        2 * i + 2 * m * j + l
                    } else {
                        2 * i + 2 * m * (h - j - 1) + l
                    };
                    pos.push((t, leg(l, i, j)));
                }
            }
        }
    }
    validated(instance, collect_positions(p, &pos)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{certify_tightness, lower_bound_improved};

    #[test]
    fn shapes_and_names() {
        let t = gen_levelwise(1, &[2, 3]).unwrap();
        assert_eq!(t.tree().order(), 7);
        assert_eq!(t.closed_form_rn(), Some(13));
        assert_eq!(t.id_of("w_{1,0}"), Some(5));
        let t2 = gen_levelwise(2, &[2, 3]).unwrap();
        assert_eq!(t2.tree().order(), 8);
        assert_eq!(t2.id_of("w'_{0}"), Some(3));
        assert_eq!(gen_levelwise(1, &[2, 4, 4]).unwrap().tree().order(), 27);
        assert_eq!(gen_lmh(1, 3, 3).unwrap().tree().order(), 15);
        assert_eq!(gen_lmh(2, 2, 2).unwrap().tree().order(), 8);
        assert_eq!(gen_lmh(1, 3, 3).unwrap().closed_form_rn(), Some(38));
        assert_eq!(gen_complete_binary(3).unwrap().closed_form_rn(), Some(35));
        assert!(gen_levelwise(3, &[2]).is_err());
        assert!(gen_levelwise(1, &[2, 1]).is_err());
        assert!(gen_levelwise(1, &[]).is_err());
        assert!(gen_lmh(1, 1, 3).is_err());
    }

    #[test]
    fn levelwise_orders_certify() {
        for z in 1..=2 {
            for degrees in [&[2, 3][..], &[2, 4], &[2, 3, 3], &[2, 4, 4], &[2, 3, 4, 3], &[2, 5, 3]] {
                let inst = gen_levelwise(z, degrees).unwrap().with_proof_order().unwrap();
                let metrics = inst.metrics().unwrap();
                let cert = certify_tightness(&metrics, inst.proof_order().unwrap()).unwrap();
                let span = cert.labelling().unwrap().span() as i64;
                assert_eq!(span, inst.closed_form_rn().unwrap(), "z={z} {degrees:?}");
            }
        }
        for h in 2..=5 {
            let inst = gen_complete_binary(h).unwrap().with_proof_order().unwrap();
            assert!(inst.proof_order().is_some());
        }
    }

    #[test]
    fn levelwise_order_needs_supported_degrees() {
        for degrees in [&[2][..], &[3, 3], &[2, 2]] {
            let inst = gen_levelwise(1, degrees).unwrap();
            assert!(matches!(proof_order_levelwise(&inst), Err(Error::UnsupportedParams(_))));
        }
    }

    #[test]
    fn lmh_orders_certify_at_the_improved_bound() {
        for z in 1..=2 {
            for m in 2..=5 {
                for h in 2..=5 {
                    let inst = gen_lmh(z, m, h).unwrap().with_proof_order().unwrap();
                    let metrics = inst.metrics().unwrap();
                    let cert = certify_tightness(&metrics, inst.proof_order().unwrap()).unwrap();
                    let span = cert.labelling().unwrap().span() as i64;
                    assert_eq!(span, lower_bound_improved(&metrics).unwrap());
                    let printed = inst.closed_form_rn().unwrap();
                    assert_eq!(span, if z == 1 { printed } else { printed - 1 }, "z={z} m={m} h={h}");
                }
            }
        }
    }

    #[test]
    fn lmh_matches_levelwise_degree_list() {
        let lmh = gen_lmh(1, 3, 3).unwrap();
        let lw = gen_levelwise(1, &[2, 4, 2]).unwrap();
        assert_eq!(lmh.tree().canonical_form(), lw.tree().canonical_form());
        let lmh2 = gen_lmh(2, 2, 4).unwrap();
        let lw2 = gen_levelwise(2, &[2, 3, 2, 2]).unwrap();
        assert_eq!(lmh2.tree().canonical_form(), lw2.tree().canonical_form());
    }
}

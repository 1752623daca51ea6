//! Embedding arbitrary-shape PIFO trees into bounded `d`-ary trees.
//!
//! Weights are subtree heights and a tree of them weighs `max |x| + r(x)`:
//! the height of the `d`-ary region that hangs each subtree below its codeword.
//! Running the greedy algorithm on a node's child heights gives the smallest
//! height at which that node can be embedded; doing so bottom-up gives the
//! minimal embedding height of the whole source tree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::code_monad::{Arity, CodeTree, Codeword};
use crate::error::{Error, Result};
use crate::greedy::build_optimal_tree;
use crate::weighting::Weighting;

/// Height weighting `w(C, r) = max_{x ∈ C} |x| + r(x)`; the cost is the weight itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct MaxDepthWeighting;

/// `max |x| + r(x)`; zero for the empty tree.
pub fn weigh_maxdepth(tree: &CodeTree<u64>) -> u64 {
    tree.iter().map(|(x, r)| x.len() as u64 + r).max().unwrap_or(0)
}

impl Weighting for MaxDepthWeighting {
    type Weight = u64;
    type Cost = u64;

    fn weigh(&self, tree: &CodeTree<u64>) -> u64 {
        weigh_maxdepth(tree)
    }

    fn cmp_weight(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }

    fn cost(&self, tree: &CodeTree<u64>) -> u64 {
        weigh_maxdepth(tree)
    }
}

/// Smallest height of a `d`-ary region that can host subtrees of the given heights,
/// with a tree attaining it.
pub fn min_embed_height(heights: &[u64], arity: Arity) -> Result<(u64, CodeTree<u64>)> {
    let r = build_optimal_tree(heights, arity, &MaxDepthWeighting)?;
    Ok((r.cost, r.tree))
}

/// A node of the source scheduler tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PifoNode {
    pub id: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<PifoNode>,
}

impl PifoNode {
    pub fn leaf(id: impl Into<String>) -> Self {
        PifoNode {
            id: id.into(),
            children: Vec::new(),
        }
    }

    pub fn node(id: impl Into<String>, children: Vec<PifoNode>) -> Self {
        PifoNode {
            id: id.into(),
            children,
        }
    }

    /// Height of the tree itself; a leaf has height 0.
    pub fn height(&self) -> u64 {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Where a non-root source node lands in the target tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    /// Path from the parent's position.
    pub local: Codeword,
    /// Path from the target root; the concatenation of `local` along the ancestry.
    pub absolute: Codeword,
    /// Minimal embedding height of the subtree rooted here.
    pub height: u64,
}

/// Result of embedding a source tree into a `d`-ary tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub d: Arity,
    pub root: String,
    pub height: u64,
    pub feasible: bool,
    /// Every node except the root.
    pub placement: BTreeMap<String, Placement>,
}

#[derive(Serialize)]
struct PlacementJson {
    local: String,
    absolute: String,
}

#[derive(Serialize)]
struct EmbeddingJson<'a> {
    d: usize,
    height: u64,
    feasible: bool,
    placement: BTreeMap<&'a str, PlacementJson>,
}

impl Embedding {
    /// Machine-readable form; the root is listed with empty local and absolute paths.
    pub fn to_json(&self) -> String {
        let mut placement: BTreeMap<&str, PlacementJson> = self
            .placement
            .iter()
            .map(|(id, p)| {
                (
                    id.as_str(),
                    PlacementJson {
                        local: p.local.to_digit_string(),
                        absolute: p.absolute.to_digit_string(),
                    },
                )
            })
            .collect();
        placement.insert(
            &self.root,
            PlacementJson {
                local: String::new(),
                absolute: String::new(),
            },
        );
        let doc = EmbeddingJson {
            d: self.d.get(),
            height: self.height,
            feasible: self.feasible,
            placement,
        };
        serde_json::to_string_pretty(&doc).expect("embedding serializes")
    }
}

fn check_unique_ids(root: &PifoNode) -> Result<()> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        if !seen.insert(node.id.as_str()) {
            return Err(Error::DuplicateId(node.id.clone()));
        }
        stack.extend(node.children.iter());
    }
    Ok(())
}

/// Bottom-up minimal embedding. Each internal node runs the greedy algorithm
/// over its children's embedded heights and places each child at the
/// codeword the algorithm assigns it. A node with one child keeps that child
/// at the empty word.
pub fn embed(source: &PifoNode, arity: Arity, bound: Option<u64>) -> Result<Embedding> {
    check_unique_ids(source)?;
    let mut local: BTreeMap<String, (Codeword, u64)> = BTreeMap::new();
    let height = embed_node(source, arity, &mut local)?;

    let mut placement = BTreeMap::new();
    let mut stack: Vec<(&PifoNode, Codeword)> = vec![(source, Codeword::empty())];
    while let Some((node, abs)) = stack.pop() {
        for child in &node.children {
            let (word, h) = local[&child.id].clone();
            let child_abs = abs.concat(&word);
            placement.insert(
                child.id.clone(),
                Placement {
                    local: word,
                    absolute: child_abs.clone(),
                    height: h,
                },
            );
            stack.push((child, child_abs));
        }
    }

    Ok(Embedding {
        d: arity,
        root: source.id.clone(),
        height,
        feasible: bound.is_none_or(|b| height <= b),
        placement,
    })
}

fn embed_node(node: &PifoNode, arity: Arity, local: &mut BTreeMap<String, (Codeword, u64)>) -> Result<u64> {
    if node.children.is_empty() {
        return Ok(0);
    }
    let heights = node
        .children
        .iter()
        .map(|c| embed_node(c, arity, local))
        .collect::<Result<Vec<u64>>>()?;
    let r = build_optimal_tree(&heights, arity, &MaxDepthWeighting)?;
    for ((child, word), h) in node.children.iter().zip(r.leaf_of_tag).zip(heights) {
        local.insert(child.id.clone(), (word, h));
    }
    Ok(r.cost)
}

/// True iff `source` embeds into a `d`-ary tree of height at most `bound`.
pub fn check_bound(source: &PifoNode, arity: Arity, bound: u64) -> Result<bool> {
    Ok(embed(source, arity, Some(bound))?.feasible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_monad::{cw, is_prefix_free};

    fn star(n: usize) -> PifoNode {
        PifoNode::node("root", (0..n).map(|i| PifoNode::leaf(format!("c{i}"))).collect())
    }

    #[test]
    fn weigh_examples() {
        assert_eq!(weigh_maxdepth(&CodeTree::unit(4, Arity::BINARY)), 4);
        assert_eq!(weigh_maxdepth(&CodeTree::depth_one(Arity::BINARY, [0, 0]).unwrap()), 1);
        let t = CodeTree::new(Arity::BINARY, [(cw("0"), 3), (cw("10"), 1)]).unwrap();
        assert_eq!(weigh_maxdepth(&t), 4);
    }

    #[test]
    fn exchange_example() {
        // smaller weight on the shallow leaf x = 0, larger on y = 10
        let r = CodeTree::new(Arity::BINARY, [(cw("0"), 1), (cw("10"), 3)]).unwrap();
        let s = CodeTree::new(Arity::BINARY, [(cw("0"), 3), (cw("10"), 1)]).unwrap();
        assert_eq!(weigh_maxdepth(&r), 5);
        assert_eq!(weigh_maxdepth(&s), 4);
        assert!(MaxDepthWeighting.tree_leq(&s, &r));
    }

    #[test]
    fn min_height_examples() {
        assert_eq!(min_embed_height(&[0; 5], Arity::BINARY).unwrap().0, 3);
        assert_eq!(min_embed_height(&[2, 1, 1], Arity::BINARY).unwrap().0, 3);
        assert_eq!(min_embed_height(&[6], Arity::new(4).unwrap()).unwrap().0, 6);
        for d in 2..=5 {
            let d = Arity::new(d).unwrap();
            for m in 2..=d.get() {
                assert_eq!(min_embed_height(&vec![0; m], d).unwrap().0, 1);
            }
        }
        assert!(min_embed_height(&[], Arity::BINARY).is_err());
    }

    #[test]
    fn single_leaf() {
        let e = embed(&PifoNode::leaf("only"), Arity::BINARY, None).unwrap();
        assert_eq!(e.height, 0);
        assert!(e.placement.is_empty());
        assert!(e.feasible);
        assert!(check_bound(&PifoNode::leaf("only"), Arity::BINARY, 0).unwrap());
    }

    #[test]
    fn five_leaf_star() {
        let e = embed(&star(5), Arity::BINARY, None).unwrap();
        assert_eq!(e.height, 3);
        let mut lens: Vec<usize> = e.placement.values().map(|p| p.local.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![2, 2, 2, 3, 3]);
        assert!(is_prefix_free(e.placement.values().map(|p| &p.local)));
        assert!(check_bound(&star(5), Arity::BINARY, 3).unwrap());
        assert!(!check_bound(&star(5), Arity::BINARY, 2).unwrap());
    }

    #[test]
    fn unary_chain_adds_no_depth() {
        let t = PifoNode::node("a", vec![PifoNode::node("b", vec![star(2)])]);
        let e = embed(&t, Arity::BINARY, None).unwrap();
        assert_eq!(e.height, 1);
        assert_eq!(e.placement["b"].local, Codeword::empty());
        assert_eq!(e.placement["root"].absolute, Codeword::empty());
        assert_eq!(e.placement["c1"].absolute, cw("1"));
    }

    #[test]
    fn absolute_paths_concatenate() {
        let t = PifoNode::node(
            "r",
            vec![
                PifoNode::node(
                    "x",
                    vec![PifoNode::leaf("x1"), PifoNode::leaf("x2"), PifoNode::leaf("x3")],
                ),
                PifoNode::leaf("y"),
            ],
        );
        let e = embed(&t, Arity::BINARY, Some(3)).unwrap();
        assert_eq!(e.height, 3);
        assert!(e.feasible);
        for id in ["x1", "x2", "x3"] {
            let p = &e.placement[id];
            assert_eq!(p.absolute, e.placement["x"].absolute.concat(&p.local));
        }
        let all: Vec<&Codeword> = ["x1", "x2", "x3", "y"]
            .iter()
            .map(|id| &e.placement[*id].absolute)
            .collect();
        assert!(is_prefix_free(all));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let t = PifoNode::node("a", vec![PifoNode::leaf("b"), PifoNode::leaf("b")]);
        assert!(matches!(embed(&t, Arity::BINARY, None), Err(Error::DuplicateId(id)) if id == "b"));
    }

    #[test]
    fn json_io() {
        let t = PifoNode::from_json(r#"{"id":"r","children":[{"id":"a"},{"id":"b","children":[]}]}"#).unwrap();
        assert_eq!(t, PifoNode::node("r", vec![PifoNode::leaf("a"), PifoNode::leaf("b")]));
        let e = embed(&t, Arity::BINARY, Some(0)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&e.to_json()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "d": 2, "height": 1, "feasible": false,
                "placement": {
                    "r": {"local": "", "absolute": ""},
                    "a": {"local": "0", "absolute": "0"},
                    "b": {"local": "1", "absolute": "1"}
                }
            })
        );
        assert!(PifoNode::from_json("{\"children\": []}").is_err());
    }
}

//! The generalized Huffman algorithm.
//!
//! Given a multiset of weights, repeatedly combine the `k` least items into a
//! depth-one tree, reweigh it with the structure map, and recurse on the
//! smaller multiset. The tree returned by the recursion is over the combined
//! items; flattening it splices the depth-one trees back in. `k` is chosen so
//! that every combine after the first takes exactly `d` items.

use std::cmp::Ordering;

use crate::code_monad::{Arity, CodeTree, Codeword};
use crate::error::{Error, Result};
use crate::weighting::Weighting;

/// The unique `k ∈ {2, …, d}` with `n ≡ k (mod d − 1)`.
pub fn choose_k(n: usize, arity: Arity) -> Result<usize> {
    if n < 2 {
        return Err(Error::TooFewItems { min: 2, got: n });
    }
    let d = arity.get();
    Ok(2 + (n - 2) % (d - 1))
}

/// The depth-one tree `({0, …, k−1}, i ↦ items[i])` over the first `k` items.
///
/// `items` must already be sorted by weight.
pub fn combine_step<P: Clone>(items: &[P], k: usize, arity: Arity) -> Result<CodeTree<P>> {
    if k > items.len() {
        return Err(Error::CombineTooLarge {
            k,
            available: items.len(),
        });
    }
    CodeTree::depth_one(arity, items[..k].iter().cloned())
}

/// An optimal tree for a multiset of weights.
#[derive(Debug, Clone, PartialEq)]
pub struct GreedyResult<W, C> {
    pub tree: CodeTree<W>,
    /// `leaf_of_tag[i]` is the codeword holding input item `i`.
    pub leaf_of_tag: Vec<Codeword>,
    pub cost: C,
    /// Number of items taken by each combine, in order. Empty for a single item.
    pub combine_sizes: Vec<usize>,
}

/// Runs the greedy algorithm on `weights`; the tag of each item is its index.
///
/// Ties between equal weights are broken by position, with previously combined
/// items placed after the untouched ones, so the output is deterministic. A
/// single weight yields the unit tree.
pub fn build_optimal_tree<Wt: Weighting>(
    weights: &[Wt::Weight],
    arity: Arity,
    wt: &Wt,
) -> Result<GreedyResult<Wt::Weight, Wt::Cost>> {
    if weights.is_empty() {
        return Err(Error::TooFewItems { min: 1, got: 0 });
    }
    if let Some(bad) = weights.iter().find(|w| !wt.accepts(w)) {
        return Err(Error::InvalidWeight(bad.to_string()));
    }

    let (tags, combine_sizes) = if weights.len() == 1 {
        (CodeTree::unit(0usize, arity), Vec::new())
    } else {
        combine_all(weights, arity, wt)?
    };

    let mut leaf_of_tag = vec![Codeword::empty(); weights.len()];
    for (word, &tag) in tags.iter() {
        leaf_of_tag[tag] = word.clone();
    }
    let tree = tags.map_payloads(|&tag| weights[tag].clone());
    let cost = wt.cost(&tree);
    Ok(GreedyResult {
        tree,
        leaf_of_tag,
        cost,
        combine_sizes,
    })
}

// Unrolled recursion: each level records the multiset M' as trees over indices
// into the previous level, then the levels are flattened from the top down.
fn combine_all<Wt: Weighting>(weights: &[Wt::Weight], arity: Arity, wt: &Wt) -> Result<(CodeTree<usize>, Vec<usize>)> {
    let mut current: Vec<Wt::Weight> = weights.to_vec();
    let mut levels: Vec<Vec<CodeTree<usize>>> = Vec::new();
    let mut combine_sizes = Vec::new();

    let top = loop {
        let n = current.len();
        let k = choose_k(n, arity)?;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| match wt.cmp_weight(&current[a], &current[b]) {
            Ordering::Equal => a.cmp(&b),
            other => other,
        });
        let combined = combine_step(&order, k, arity)?;
        combine_sizes.push(k);
        if n == k {
            break combined;
        }

        let mut rest: Vec<usize> = order[k..].to_vec();
        rest.sort_unstable();
        let mut next_level: Vec<CodeTree<usize>> = rest.into_iter().map(|i| CodeTree::unit(i, arity)).collect();
        next_level.push(combined);

        current = next_level
            .iter()
            .map(|t| wt.weigh(&t.map_payloads(|&i| current[i].clone())))
            .collect();
        levels.push(next_level);
    };

    let mut tree = top;
    for level in levels.iter().rev() {
        tree = tree.map_payloads(|&j| level[j].clone()).flatten()?;
    }
    Ok((tree, combine_sizes))
}

/// Checks that the `k = choose_k(n, d)` least weights sit on sibling leaves at
/// the maximum depth, under a common parent that has no other children.
pub fn least_weights_are_deepest_siblings<Wt: Weighting>(tree: &CodeTree<Wt::Weight>, wt: &Wt) -> bool {
    let n = tree.len();
    if n < 2 {
        return true;
    }
    let Ok(k) = choose_k(n, tree.arity()) else {
        return false;
    };
    let depth = tree.depth().unwrap_or(0);
    if depth == 0 {
        return false;
    }

    let mut least: Vec<Wt::Weight> = tree.payloads().cloned().collect();
    least.sort_by(|a, b| wt.cmp_weight(a, b));
    least.truncate(k);

    let deepest: Vec<&Codeword> = tree.words().filter(|w| w.len() == depth).collect();
    let mut parents: Vec<Codeword> = deepest
        .iter()
        .map(|w| Codeword::from_digits(&w.digits()[..depth - 1]))
        .collect();
    parents.dedup();

    parents.iter().any(|parent| {
        let group: Vec<&Wt::Weight> = tree
            .iter()
            .filter(|(w, _)| parent.is_prefix_of(w))
            .map(|(_, p)| p)
            .collect();
        if group.len() != k || tree.words().any(|w| parent.is_prefix_of(w) && w.len() != depth) {
            return false;
        }
        let mut group: Vec<Wt::Weight> = group.into_iter().cloned().collect();
        group.sort_by(|a, b| wt.cmp_weight(a, b));
        group
            .iter()
            .zip(&least)
            .all(|(a, b)| wt.cmp_weight(a, b) == Ordering::Equal)
    })
}

//! Brute-force optimum over every tree shape and every leaf assignment.
//!
//! Used to certify the greedy algorithm on small instances. Shapes are
//! unordered trees whose internal nodes have between 2 and `d` children;
//! since cost depends only on codeword lengths, child order never matters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code_monad::{Arity, CodeTree, Codeword, PrefixCode};
use crate::error::{Error, Result};
use crate::greedy::{build_optimal_tree, choose_k, least_weights_are_deepest_siblings};
use crate::weighting::Weighting;

/// Largest instance the oracle accepts.
pub const MAX_ORACLE_N: usize = 8;

/// An unordered tree shape; children are kept sorted so equal shapes compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Shape {
    Leaf,
    Node(Vec<Shape>),
}

impl Shape {
    fn words(&self, prefix: &mut Codeword, out: &mut Vec<Codeword>) {
        match self {
            Shape::Leaf => out.push(prefix.clone()),
            Shape::Node(children) => {
                for (i, child) in children.iter().enumerate() {
                    let mut next = prefix.clone();
                    next.push(i as u8);
                    child.words(&mut next, out);
                }
            }
        }
    }
}

/// Shape enumeration parameters: internal nodes take `min_children..=d` children,
/// and with unary nodes allowed, depth is capped at `max_depth`.
struct ShapeEnumeration {
    d: usize,
    min_children: usize,
    max_depth: usize,
    memo: BTreeMap<(usize, usize), Vec<Shape>>,
}

impl ShapeEnumeration {
    fn shapes(&mut self, n: usize, depth_left: usize) -> Vec<Shape> {
        if let Some(s) = self.memo.get(&(n, depth_left)) {
            return s.clone();
        }
        let mut found = BTreeSet::new();
        if n == 1 {
            found.insert(Shape::Leaf);
        }
        if depth_left > 0 {
            for m in self.min_children..=self.d.min(n.max(1)) {
                for parts in nondecreasing_compositions(n, m) {
                    let options: Vec<Vec<Shape>> = parts.iter().map(|&p| self.shapes(p, depth_left - 1)).collect();
                    for_each_product(&options, &mut |children: Vec<Shape>| {
                        let mut children = children;
                        children.sort();
                        found.insert(Shape::Node(children));
                    });
                }
            }
        }
        let shapes: Vec<Shape> = found.into_iter().collect();
        self.memo.insert((n, depth_left), shapes.clone());
        shapes
    }

    fn codes(&mut self, n: usize, arity: Arity) -> Vec<PrefixCode> {
        let depth = self.max_depth;
        self.shapes(n, depth)
            .iter()
            .map(|shape| {
                let mut words = Vec::with_capacity(n);
                shape.words(&mut Codeword::empty(), &mut words);
                PrefixCode::new(arity, words).expect("shapes yield prefix codes")
            })
            .collect()
    }
}

/// Ways to write `n` as `m` positive parts in nondecreasing order.
fn nondecreasing_compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, m: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            if n == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for p in min..=n {
            if p * m > n {
                break;
            }
            acc.push(p);
            go(n - p, m - 1, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, 1, &mut Vec::new(), &mut out);
    out
}

fn for_each_product<T: Clone>(options: &[Vec<T>], f: &mut impl FnMut(Vec<T>)) {
    fn go<T: Clone>(options: &[Vec<T>], acc: &mut Vec<T>, f: &mut impl FnMut(Vec<T>)) {
        match options.split_first() {
            None => f(acc.clone()),
            Some((first, rest)) => {
                for item in first {
                    acc.push(item.clone());
                    go(rest, acc, f);
                    acc.pop();
                }
            }
        }
    }
    go(options, &mut Vec::new(), f)
}

fn check_size(n: usize) -> Result<()> {
    if (1..=MAX_ORACLE_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange {
            n,
            min: 1,
            max: MAX_ORACLE_N,
        })
    }
}

/// One prefix code per unordered shape with `n` leaves whose internal nodes
/// have 2 to `d` children.
pub fn enumerate_codes(n: usize, arity: Arity) -> Result<Vec<PrefixCode>> {
    check_size(n)?;
    let mut e = ShapeEnumeration {
        d: arity.get(),
        min_children: 2,
        max_depth: n,
        memo: BTreeMap::new(),
    };
    Ok(e.codes(n, arity))
}

/// Like [`enumerate_codes`] but internal nodes may also have a single child,
/// with every word no longer than `max_depth`.
pub fn enumerate_codes_with_unary(n: usize, arity: Arity, max_depth: usize) -> Result<Vec<PrefixCode>> {
    check_size(n)?;
    let mut e = ShapeEnumeration {
        d: arity.get(),
        min_children: 1,
        max_depth,
        memo: BTreeMap::new(),
    };
    Ok(e.codes(n, arity))
}

/// Calls `f` once per distinct arrangement of `weights`, treating equal weights as interchangeable.
fn for_each_arrangement<W: Clone + PartialEq>(weights: &[W], mut f: impl FnMut(&[W])) {
    let mut distinct: Vec<W> = Vec::new();
    let mut classes: Vec<usize> = weights
        .iter()
        .map(|w| match distinct.iter().position(|d| d == w) {
            Some(i) => i,
            None => {
                distinct.push(w.clone());
                distinct.len() - 1
            }
        })
        .collect();
    classes.sort_unstable();
    let mut buf: Vec<W> = Vec::with_capacity(weights.len());
    loop {
        buf.clear();
        buf.extend(classes.iter().map(|&c| distinct[c].clone()));
        f(&buf);
        if !next_permutation(&mut classes) {
            break;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn minimize_over<Wt: Weighting>(
    codes: &[PrefixCode],
    weights: &[Wt::Weight],
    wt: &Wt,
) -> (Wt::Cost, CodeTree<Wt::Weight>) {
    let mut best: Option<(Wt::Cost, CodeTree<Wt::Weight>)> = None;
    for code in codes {
        for_each_arrangement(weights, |arr| {
            let tree = CodeTree::new(code.arity(), code.words().iter().cloned().zip(arr.iter().cloned()))
                .expect("enumerated codes are valid");
            let cost = wt.cost(&tree);
            if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                best = Some((cost, tree));
            }
        });
    }
    best.expect("at least one code and arrangement")
}

/// Minimum cost over all trees carrying the multiset `weights`, with a tree attaining it.
pub fn brute_force_optimal<Wt: Weighting>(
    weights: &[Wt::Weight],
    arity: Arity,
    wt: &Wt,
) -> Result<(Wt::Cost, CodeTree<Wt::Weight>)> {
    let codes = enumerate_codes(weights.len(), arity)?;
    Ok(minimize_over(&codes, weights, wt))
}

/// [`brute_force_optimal`] over the larger space that admits unary internal nodes.
pub fn brute_force_optimal_with_unary<Wt: Weighting>(
    weights: &[Wt::Weight],
    arity: Arity,
    max_depth: usize,
    wt: &Wt,
) -> Result<(Wt::Cost, CodeTree<Wt::Weight>)> {
    let codes = enumerate_codes_with_unary(weights.len(), arity, max_depth)?;
    Ok(minimize_over(&codes, weights, wt))
}

/// How [`verify_algorithm`] picks multisets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    /// Every multiset of every size up to `max_n`.
    Exhaustive,
    /// `trials` multisets with uniformly random size and elements.
    Random { trials: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct VerifyBounds<W> {
    pub arities: Vec<Arity>,
    pub max_n: usize,
    /// Weights that multiset elements are drawn from.
    pub domain: Vec<W>,
    pub sweep: Sweep,
}

/// A multiset on which the greedy output failed a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub arity: Arity,
    pub weights: String,
    pub detail: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} M={}: {}", self.arity, self.weights, self.detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub cases: usize,
    /// Greedy cost differs from the brute-force minimum.
    pub cost_mismatches: Vec<Discrepancy>,
    /// The least weights are not deepest siblings in the greedy tree.
    pub sibling_failures: Vec<Discrepancy>,
    /// A combine after the first took fewer than `d` items.
    pub combine_failures: Vec<Discrepancy>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cost_mismatches.is_empty() && self.sibling_failures.is_empty() && self.combine_failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{verdict} oracle sweep: {} cases, {} cost mismatches, {} sibling failures, {} combine failures",
            self.cases,
            self.cost_mismatches.len(),
            self.sibling_failures.len(),
            self.combine_failures.len()
        )?;
        for d in self
            .cost_mismatches
            .iter()
            .chain(&self.sibling_failures)
            .chain(&self.combine_failures)
        {
            writeln!(f, "  {d}")?;
        }
        Ok(())
    }
}

/// All multisets of size `n` over `domain`, as nondecreasing index sequences.
pub fn multisets<W: Clone>(domain: &[W], n: usize) -> Vec<Vec<W>> {
    fn go<W: Clone>(domain: &[W], n: usize, start: usize, acc: &mut Vec<W>, out: &mut Vec<Vec<W>>) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for i in start..domain.len() {
            acc.push(domain[i].clone());
            go(domain, n, i, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(domain, n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

fn render_weights<W: fmt::Display>(weights: &[W]) -> String {
    let parts: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Compares the greedy algorithm against the oracle on every sampled multiset,
/// also checking the deepest-siblings structure and the combine sizes.
pub fn verify_algorithm<Wt: Weighting>(bounds: &VerifyBounds<Wt::Weight>, wt: &Wt) -> Result<VerifyReport> {
    check_size(bounds.max_n)?;
    let mut instances: Vec<Vec<Wt::Weight>> = Vec::new();
    match bounds.sweep {
        Sweep::Exhaustive => {
            for n in 1..=bounds.max_n {
                instances.extend(multisets(&bounds.domain, n));
            }
        }
        Sweep::Random { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let n = rng.gen_range(1..=bounds.max_n);
                instances.push(
                    (0..n)
                        .map(|_| bounds.domain[rng.gen_range(0..bounds.domain.len())].clone())
                        .collect(),
                );
            }
        }
    }

    let mut report = VerifyReport::default();
    for &arity in &bounds.arities {
        let mut codes_by_n: BTreeMap<usize, Vec<PrefixCode>> = BTreeMap::new();
        for weights in &instances {
            report.cases += 1;
            let n = weights.len();
            let codes = match codes_by_n.get(&n) {
                Some(c) => c,
                None => codes_by_n.entry(n).or_insert(enumerate_codes(n, arity)?),
            };
            let (best, _) = minimize_over(codes, weights, wt);
            let greedy = build_optimal_tree(weights, arity, wt)?;
            let discrepancy = |detail: String| Discrepancy {
                arity,
                weights: render_weights(weights),
                detail,
            };

            if greedy.cost != best {
                report
                    .cost_mismatches
                    .push(discrepancy(format!("greedy cost {} but optimum {best}", greedy.cost)));
            }
            if !least_weights_are_deepest_siblings(&greedy.tree, wt) {
                report.sibling_failures.push(discrepancy(format!(
                    "least weights not deepest siblings in\n{}",
                    greedy.tree
                )));
            }
            if n >= 2 {
                let first_ok = greedy.combine_sizes.first() == Some(&choose_k(n, arity)?);
                let rest_ok = greedy.combine_sizes[1..].iter().all(|&k| k == arity.get());
                if !(first_ok && rest_ok) {
                    report
                        .combine_failures
                        .push(discrepancy(format!("combine sizes {:?}", greedy.combine_sizes)));
                }
            }
        }
    }
    Ok(report)
}

//! Pluggable weightings `(W, w, ≤)` and randomized checkers for their laws.
//!
//! A [`Weighting`] supplies the structure map `w : CC W → W`, a total preorder
//! on weights, and a totally ordered cost on trees that induces the order on
//! `CC W`. The greedy algorithm is optimal for any weighting that is an
//! Eilenberg-Moore algebra and whose tree order satisfies three axioms:
//! monotonicity under lengthening codewords and raising leaf values, the
//! exchange property, and monotonicity of the unit and flatten maps. The
//! checkers in this module search for counterexamples to each of them.

use std::cmp::Ordering;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code_monad::{Arity, CodeTree, Codeword};

/// Default seed for all randomized checkers.
pub const DEFAULT_SEED: u64 = 0xC0DE;

/// An algebra `w : CC W → W` with a total preorder on `W` and a tree cost.
///
/// Implementations must be stateless: every method is a pure function of its arguments.
pub trait Weighting {
    type Weight: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Cost: Ord + Clone + fmt::Debug + fmt::Display;

    /// The structure map `w`.
    fn weigh(&self, tree: &CodeTree<Self::Weight>) -> Self::Weight;

    /// Total preorder on weights; smaller is better.
    fn cmp_weight(&self, a: &Self::Weight, b: &Self::Weight) -> Ordering;

    /// The cost whose order induces `≤` on trees.
    fn cost(&self, tree: &CodeTree<Self::Weight>) -> Self::Cost;

    /// Whether `weight` belongs to `W`. Algorithm entry points reject anything else.
    fn accepts(&self, _weight: &Self::Weight) -> bool {
        true
    }

    fn leq_weight(&self, a: &Self::Weight, b: &Self::Weight) -> bool {
        self.cmp_weight(a, b) != Ordering::Greater
    }

    /// `a ≤ b` on trees, comparing costs only. Callers that need the relation
    /// restricted to one multiset of weights must also check [`similar`].
    fn tree_leq(&self, a: &CodeTree<Self::Weight>, b: &CodeTree<Self::Weight>) -> bool {
        self.cost(a) <= self.cost(b)
    }
}

/// True iff both trees carry the same multiset of payloads.
pub fn similar<P: PartialEq>(a: &CodeTree<P>, b: &CodeTree<P>) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    let others: Vec<&P> = b.payloads().collect();
    a.payloads()
        .all(|p| match (0..others.len()).find(|&j| !used[j] && others[j] == p) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        })
}

/// Bounds for randomly generated codes.
#[derive(Debug, Clone, Copy)]
pub struct SamplerConfig {
    pub arity: Arity,
    pub max_words: usize,
    pub max_depth: usize,
}

impl SamplerConfig {
    pub fn new(arity: Arity) -> Self {
        SamplerConfig {
            arity,
            max_words: 6,
            max_depth: 4,
        }
    }
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig::new(Arity::BINARY)
    }
}

/// Seeded generator of weights, prefix codes and (nested) code trees.
pub struct TreeSampler<W, F> {
    config: SamplerConfig,
    rng: ChaCha8Rng,
    weight_fn: F,
    _weight: std::marker::PhantomData<fn() -> W>,
}

impl<W, F> TreeSampler<W, F>
where
    F: FnMut(&mut ChaCha8Rng) -> W,
{
    pub fn new(config: SamplerConfig, seed: u64, weight_fn: F) -> Self {
        TreeSampler {
            config,
            rng: ChaCha8Rng::seed_from_u64(seed),
            weight_fn,
            _weight: std::marker::PhantomData,
        }
    }

    pub fn config(&self) -> SamplerConfig {
        self.config
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn weight(&mut self) -> W {
        (self.weight_fn)(&mut self.rng)
    }

    /// A random prefix code with `1..=max_words` words of length at most `max_depth`.
    /// Internal nodes may have any number of children, so unary chains and
    /// non-exhaustive codes both occur.
    pub fn code(&mut self) -> Vec<Codeword> {
        let target = self.rng.gen_range(1..=self.config.max_words);
        self.grow_code(target)
    }

    /// A random prefix code with exactly `n` words, if one could be grown.
    pub fn code_of_size(&mut self, n: usize) -> Option<Vec<Codeword>> {
        (0..64).map(|_| self.grow_code(n)).find(|c| c.len() == n)
    }

    fn grow_code(&mut self, target: usize) -> Vec<Codeword> {
        let d = self.config.arity.get();
        let mut leaves = vec![Codeword::empty()];
        while leaves.len() < target {
            let expandable: Vec<usize> = (0..leaves.len())
                .filter(|&i| leaves[i].len() < self.config.max_depth)
                .collect();
            let Some(&pick) = expandable.choose(&mut self.rng) else {
                break;
            };
            let parent = leaves.swap_remove(pick);
            let room = target - leaves.len();
            let children = self.rng.gen_range(1..=d.min(room));
            let mut digits: Vec<u8> = (0..d as u8).collect();
            digits.shuffle(&mut self.rng);
            for &digit in &digits[..children] {
                let mut child = parent.clone();
                child.push(digit);
                leaves.push(child);
            }
        }
        leaves
    }

    /// A random tree over a random code, payloads drawn from `payload`.
    pub fn tree_with<P>(&mut self, mut payload: impl FnMut(&mut Self) -> P) -> CodeTree<P> {
        let words = self.code();
        self.attach(words, &mut payload)
    }

    fn attach<P>(&mut self, words: Vec<Codeword>, payload: &mut impl FnMut(&mut Self) -> P) -> CodeTree<P> {
        let leaves: Vec<(Codeword, P)> = words.into_iter().map(|w| (w, payload(self))).collect();
        CodeTree::new(self.config.arity, leaves).expect("sampled codes are prefix-free")
    }

    pub fn tree(&mut self) -> CodeTree<W> {
        self.tree_with(|s| s.weight())
    }

    pub fn nested(&mut self) -> CodeTree<CodeTree<W>> {
        self.tree_with(|s| s.tree())
    }
}

/// Outcome of one randomized check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckReport {
    fn pass(name: &str, cases: usize) -> Self {
        CheckReport {
            name: name.to_string(),
            cases,
            counterexample: None,
        }
    }

    fn fail(name: &str, cases: usize, counterexample: String) -> Self {
        CheckReport {
            name: name.to_string(),
            cases,
            counterexample: Some(counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => writeln!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(cx) => {
                writeln!(f, "FAIL {} (case {})", self.name, self.cases)?;
                for line in cx.lines() {
                    writeln!(f, "  {line}")?;
                }
                Ok(())
            }
        }
    }
}

/// Renders a tree of trees as nested `word: payload` lines.
pub fn render_nested<P: fmt::Display>(tree: &CodeTree<CodeTree<P>>) -> String {
    let mut out = String::new();
    for (word, inner) in tree.iter() {
        out.push_str(&format!("{word}:\n"));
        for line in inner.to_string().lines() {
            out.push_str(&format!("  {line}\n"));
        }
    }
    out
}

// Each case body returns Err(rendered counterexample) on violation.
fn run_cases(name: &str, n_cases: usize, mut case: impl FnMut() -> Result<(), String>) -> CheckReport {
    for i in 0..n_cases {
        if let Err(cx) = case() {
            return CheckReport::fail(name, i + 1, cx);
        }
    }
    CheckReport::pass(name, n_cases)
}

/// Unit law `w(η a) = a` and multiplication law `w(μ T) = w(CC w T)`.
pub fn check_algebra_laws<Wt, F>(wt: &Wt, sampler: &mut TreeSampler<Wt::Weight, F>, n_cases: usize) -> Vec<CheckReport>
where
    Wt: Weighting,
    F: FnMut(&mut ChaCha8Rng) -> Wt::Weight,
{
    let arity = sampler.config().arity;
    let unit = run_cases("algebra unit law", n_cases, || {
        let a = sampler.weight();
        let got = wt.weigh(&CodeTree::unit(a.clone(), arity));
        if got == a {
            Ok(())
        } else {
            Err(format!("a = {a}\nw(unit(a)) = {got}"))
        }
    });
    let mult = run_cases("algebra multiplication law", n_cases, || {
        let nested = sampler.nested();
        let lhs = wt.weigh(&nested.flatten().expect("uniform arity"));
        let rhs = wt.weigh(&nested.map_payloads(|t| wt.weigh(t)));
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!(
                "{}w(flatten T) = {lhs}\nw(map(T, w)) = {rhs}",
                render_nested(&nested)
            ))
        }
    });
    vec![unit, mult]
}

/// A random length-nondecreasing bijection from `words` onto another prefix code.
/// With `lengthen = false` the map preserves lengths.
fn random_relabel<W, F>(sampler: &mut TreeSampler<W, F>, words: &[Codeword], lengthen: bool) -> Vec<Codeword>
where
    F: FnMut(&mut ChaCha8Rng) -> W,
{
    let d = sampler.config().arity.get();
    let rng = sampler.rng();
    // appending suffixes to a prefix code keeps it prefix-free
    let mut images: Vec<Codeword> = words
        .iter()
        .map(|w| {
            let mut w = w.clone();
            if lengthen && rng.gen_bool(0.5) {
                for _ in 0..rng.gen_range(1..=2) {
                    w.push(rng.gen_range(0..d as u8));
                }
            }
            w
        })
        .collect();
    // an independent digit permutation per position preserves the prefix relation
    let max_len = images.iter().map(Codeword::len).max().unwrap_or(0);
    let perms: Vec<Vec<u8>> = (0..max_len)
        .map(|_| {
            let mut p: Vec<u8> = (0..d as u8).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    for w in &mut images {
        let relabeled: Vec<u8> = w
            .digits()
            .iter()
            .enumerate()
            .map(|(i, &x)| perms[i][x as usize])
            .collect();
        *w = Codeword::from_digits(relabeled);
    }
    // shuffle images among source words of equal image length
    let mut by_len: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, w) in images.iter().enumerate() {
        by_len.entry(w.len()).or_default().push(i);
    }
    let mut shuffled = images.clone();
    for idx in by_len.values() {
        let mut targets = idx.clone();
        targets.shuffle(rng);
        for (&src, &dst) in idx.iter().zip(&targets) {
            shuffled[src] = images[dst].clone();
        }
    }
    shuffled
}

fn max_weight<Wt: Weighting>(wt: &Wt, a: Wt::Weight, b: Wt::Weight) -> Wt::Weight {
    if wt.leq_weight(&a, &b) {
        b
    } else {
        a
    }
}

fn render_pair<P: fmt::Display>(left: &CodeTree<P>, right: &CodeTree<P>) -> String {
    format!("left:\n{left}right:\n{right}")
}

/// Lengthening codewords or raising leaf values never makes a tree cheaper,
/// together with the three special cases that follow from it.
pub fn check_monotone_lengthen<Wt, F>(
    wt: &Wt,
    sampler: &mut TreeSampler<Wt::Weight, F>,
    n_cases: usize,
) -> Vec<CheckReport>
where
    Wt: Weighting,
    F: FnMut(&mut ChaCha8Rng) -> Wt::Weight,
{
    let arity = sampler.config().arity;

    let general = run_cases("lengthen and raise is monotone", n_cases, || {
        let tree = sampler.tree();
        let words: Vec<Codeword> = tree.words().cloned().collect();
        let images = random_relabel(sampler, &words, true);
        let raised: Vec<(Codeword, Wt::Weight)> = images
            .into_iter()
            .zip(tree.payloads())
            .map(|(img, r)| {
                let bump = sampler.weight();
                (img, max_weight(wt, r.clone(), bump))
            })
            .collect();
        let other = CodeTree::new(arity, raised).expect("relabeling keeps prefix-freeness");
        check_leq(wt, &tree, &other)
    });

    let lengthen = run_cases("lengthening codewords is monotone", n_cases, || {
        let target = sampler.tree();
        let words: Vec<Codeword> = target.words().cloned().collect();
        let preimages = shorten_preimage(sampler, &words);
        let pulled = CodeTree::new(arity, preimages.into_iter().zip(target.payloads().cloned()))
            .expect("truncation keeps prefix-freeness");
        check_leq(wt, &pulled, &target)
    });

    let lengths_only = run_cases("cost depends only on codeword lengths", n_cases, || {
        let tree = sampler.tree();
        let words: Vec<Codeword> = tree.words().cloned().collect();
        let images = random_relabel(sampler, &words, false);
        let other = CodeTree::new(arity, images.into_iter().zip(tree.payloads().cloned()))
            .expect("relabeling keeps prefix-freeness");
        let (a, b) = (wt.cost(&tree), wt.cost(&other));
        if a == b {
            Ok(())
        } else {
            Err(format!("{}cost {a} != {b}", render_pair(&tree, &other)))
        }
    });

    let leaf_values = run_cases("raising leaf values is monotone", n_cases, || {
        let tree = sampler.tree();
        let raised = tree.map_payloads(|r| r.clone());
        let raised = CodeTree::new(
            arity,
            raised.into_leaves().map(|(w, r)| {
                let bump = sampler.weight();
                (w, max_weight(wt, r, bump))
            }),
        )
        .expect("same code");
        check_leq(wt, &tree, &raised)
    });

    vec![general, lengthen, lengths_only, leaf_values]
}

/// Pre-images under a random length-nondecreasing map: each word of `words`
/// is the image of a (possibly truncated and relabeled) word.
fn shorten_preimage<W, F>(sampler: &mut TreeSampler<W, F>, words: &[Codeword]) -> Vec<Codeword>
where
    F: FnMut(&mut ChaCha8Rng) -> W,
{
    // truncation is only safe where the result stays prefix-free; try each word greedily
    let mut current: Vec<Codeword> = random_relabel(sampler, words, false);
    let rng = sampler.rng();
    for i in 0..current.len() {
        if current[i].is_empty() || !rng.gen_bool(0.5) {
            continue;
        }
        let cut = rng.gen_range(0..current[i].len());
        let shorter = Codeword::from_digits(&current[i].digits()[..cut]);
        let clash = current
            .iter()
            .enumerate()
            .any(|(j, w)| j != i && (shorter.is_prefix_of(w) || w.is_prefix_of(&shorter)));
        if !clash {
            current[i] = shorter;
        }
    }
    current
}

fn check_leq<Wt: Weighting>(wt: &Wt, lower: &CodeTree<Wt::Weight>, upper: &CodeTree<Wt::Weight>) -> Result<(), String> {
    if wt.tree_leq(lower, upper) {
        Ok(())
    } else {
        Err(format!(
            "{}expected cost {} <= {}",
            render_pair(lower, upper),
            wt.cost(lower),
            wt.cost(upper)
        ))
    }
}

/// Swapping a smaller weight up into a shallower leaf never makes a tree more expensive.
pub fn check_exchange<Wt, F>(wt: &Wt, sampler: &mut TreeSampler<Wt::Weight, F>, n_cases: usize) -> CheckReport
where
    Wt: Weighting,
    F: FnMut(&mut ChaCha8Rng) -> Wt::Weight,
{
    let arity = sampler.config().arity;
    run_cases("exchange property", n_cases, || {
        let tree = sampler.tree();
        let words: Vec<Codeword> = tree.words().cloned().collect();
        let (x, y) = loop {
            let mut x = words[sampler.rng().gen_range(0..words.len())].clone();
            let mut y = words[sampler.rng().gen_range(0..words.len())].clone();
            if x.len() > y.len() {
                std::mem::swap(&mut x, &mut y);
            }
            let (rx, ry) = (tree.get(&x).unwrap(), tree.get(&y).unwrap());
            if x.len() == y.len() && !wt.leq_weight(rx, ry) {
                std::mem::swap(&mut x, &mut y);
            }
            if wt.leq_weight(tree.get(&x).unwrap(), tree.get(&y).unwrap()) {
                break (x, y);
            }
        };
        let (rx, ry) = (tree.get(&x).unwrap().clone(), tree.get(&y).unwrap().clone());
        let swapped = CodeTree::new(
            arity,
            tree.iter().map(|(z, r)| {
                let v = if *z == y {
                    rx.clone()
                } else if *z == x {
                    ry.clone()
                } else {
                    r.clone()
                };
                (z.clone(), v)
            }),
        )
        .expect("same code");
        check_leq(wt, &swapped, &tree)
    })
}

/// Unit and flatten preserve the order, where nested trees are compared by
/// mapping the structure map over their leaves.
pub fn check_structure_monotone<Wt, F>(
    wt: &Wt,
    sampler: &mut TreeSampler<Wt::Weight, F>,
    n_cases: usize,
) -> Vec<CheckReport>
where
    Wt: Weighting,
    F: FnMut(&mut ChaCha8Rng) -> Wt::Weight,
{
    let arity = sampler.config().arity;
    let unit = run_cases("unit is monotone", n_cases, || {
        let (mut a, mut b) = (sampler.weight(), sampler.weight());
        if !wt.leq_weight(&a, &b) {
            std::mem::swap(&mut a, &mut b);
        }
        check_leq(wt, &CodeTree::unit(a, arity), &CodeTree::unit(b, arity))
    });

    let flatten = run_cases("flatten is monotone", n_cases, || {
        let left_words = sampler.code();
        let n = left_words.len();
        let right_words = sampler
            .code_of_size(n)
            .unwrap_or_else(|| random_relabel(sampler, &left_words, true));
        let inner: Vec<CodeTree<Wt::Weight>> = (0..n).map(|_| sampler.tree()).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(sampler.rng());
        let left = CodeTree::new(arity, left_words.into_iter().zip(inner.iter().cloned())).unwrap();
        let right = CodeTree::new(
            arity,
            right_words.into_iter().zip(order.iter().map(|&i| inner[i].clone())),
        )
        .unwrap();

        let (lw, rw) = (left.map_payloads(|t| wt.weigh(t)), right.map_payloads(|t| wt.weigh(t)));
        let (lf, rf) = (left.flatten().unwrap(), right.flatten().unwrap());
        let render = || format!("left:\n{}right:\n{}", render_nested(&left), render_nested(&right));
        if wt.tree_leq(&lw, &rw) && !wt.tree_leq(&lf, &rf) {
            return Err(format!("{}left <= right after w, but not after flatten", render()));
        }
        if wt.tree_leq(&rw, &lw) && !wt.tree_leq(&rf, &lf) {
            return Err(format!("{}right <= left after w, but not after flatten", render()));
        }
        Ok(())
    });
    vec![unit, flatten]
}

/// Every law and axiom check in a fixed order, sharing one sampler stream.
pub fn check_all<Wt, F>(wt: &Wt, sampler: &mut TreeSampler<Wt::Weight, F>, n_cases: usize) -> Vec<CheckReport>
where
    Wt: Weighting,
    F: FnMut(&mut ChaCha8Rng) -> Wt::Weight,
{
    let mut reports = check_algebra_laws(wt, sampler, n_cases);
    reports.extend(check_monotone_lengthen(wt, sampler, n_cases));
    reports.push(check_exchange(wt, sampler, n_cases));
    reports.extend(check_structure_monotone(wt, sampler, n_cases));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_monad::{cw, is_prefix_free};

    /// Cost is the number of leaves; a legal but uninformative weighting.
    struct Count;

    impl Weighting for Count {
        type Weight = u32;
        type Cost = usize;
        fn weigh(&self, tree: &CodeTree<u32>) -> u32 {
            tree.payloads().sum()
        }
        fn cmp_weight(&self, a: &u32, b: &u32) -> Ordering {
            a.cmp(b)
        }
        fn cost(&self, tree: &CodeTree<u32>) -> usize {
            tree.len()
        }
    }

    #[test]
    fn similar_examples() {
        let a = CodeTree::new(Arity::BINARY, [(cw("0"), 1), (cw("1"), 2)]).unwrap();
        let b = CodeTree::new(Arity::BINARY, [(cw("0"), 2), (cw("10"), 1)]).unwrap();
        let c = CodeTree::new(Arity::BINARY, [(cw("0"), 1), (cw("1"), 1)]).unwrap();
        assert!(similar(&a, &b));
        assert!(!similar(&a, &c));
        assert!(!similar(&c, &a));
        assert!(similar(&a, &a));
    }

    #[test]
    fn tree_leq_reflexive() {
        let a = CodeTree::new(Arity::BINARY, [(cw("0"), 1), (cw("1"), 2)]).unwrap();
        assert!(Count.tree_leq(&a, &a));
    }

    #[test]
    fn sampled_codes_respect_bounds() {
        for d in 2..=4 {
            let config = SamplerConfig::new(Arity::new(d).unwrap());
            let mut s = TreeSampler::new(config, 7, |rng: &mut ChaCha8Rng| rng.gen_range(0..9u32));
            for _ in 0..500 {
                let code = s.code();
                assert!((1..=6).contains(&code.len()));
                assert!(code.iter().all(|w| w.len() <= 4));
                assert!(is_prefix_free(&code));
            }
        }
    }

    #[test]
    fn relabel_is_length_nondecreasing_bijection() {
        let config = SamplerConfig::new(Arity::new(3).unwrap());
        let mut s = TreeSampler::new(config, 11, |rng: &mut ChaCha8Rng| rng.gen_range(0..9u32));
        for _ in 0..300 {
            let code = s.code();
            let images = random_relabel(&mut s, &code, true);
            assert!(is_prefix_free(&images));
            assert_eq!(images.len(), code.len());
            let mut src: Vec<usize> = code.iter().map(Codeword::len).collect();
            let mut dst: Vec<usize> = images.iter().map(Codeword::len).collect();
            src.sort();
            dst.sort();
            assert!(src.iter().zip(&dst).all(|(a, b)| a <= b));
            for (x, fx) in code.iter().zip(&images) {
                assert!(x.len() <= fx.len());
            }

            let pre = shorten_preimage(&mut s, &code);
            assert!(is_prefix_free(&pre));
            for (x, px) in code.iter().zip(&pre) {
                assert!(px.len() <= x.len());
            }
        }
    }

    #[test]
    fn sampler_is_reproducible() {
        let config = SamplerConfig::default();
        let draw = |seed| {
            let mut s = TreeSampler::new(config, seed, |rng: &mut ChaCha8Rng| rng.gen_range(0..9u32));
            (0..20).map(|_| s.nested()).collect::<Vec<_>>()
        };
        assert_eq!(draw(DEFAULT_SEED), draw(DEFAULT_SEED));
        assert_ne!(draw(1), draw(2));
    }

    #[test]
    fn report_rendering() {
        let ok = CheckReport::pass("x", 3);
        assert_eq!(ok.to_string(), "PASS x (3 cases)\n");
        let bad = CheckReport::fail("y", 2, "a\nb".into());
        assert_eq!(bad.to_string(), "FAIL y (case 2)\n  a\n  b\n");
        assert!(!bad.passed());
    }
}

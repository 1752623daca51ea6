//! Plug a new cost into the greedy algorithm and let the law checkers vet it.
//!
//! Worst-case latency: each leaf costs its depth times a per-level delay plus
//! its own delay, and a tree costs its slowest leaf. This satisfies the laws.
//! Weighting by the product of payloads does not, and the checkers say so.

use std::cmp::Ordering;

use abstract_huffman::weighting::{check_all, SamplerConfig, TreeSampler};
use abstract_huffman::{build_optimal_tree, Arity, CodeTree, Weighting};
use rand::Rng;

const LEVEL_DELAY: u64 = 3;

struct Latency;

impl Weighting for Latency {
    type Weight = u64;
    type Cost = u64;

    fn weigh(&self, tree: &CodeTree<u64>) -> u64 {
        tree.iter()
            .map(|(x, r)| LEVEL_DELAY * x.len() as u64 + r)
            .max()
            .unwrap_or(0)
    }

    fn cmp_weight(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }

    fn cost(&self, tree: &CodeTree<u64>) -> u64 {
        self.weigh(tree)
    }
}

struct Product;

impl Weighting for Product {
    type Weight = u64;
    type Cost = u64;

    fn weigh(&self, tree: &CodeTree<u64>) -> u64 {
        tree.payloads().product()
    }

    fn cmp_weight(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }

    fn cost(&self, tree: &CodeTree<u64>) -> u64 {
        tree.iter().map(|(x, r)| x.len() as u64 * r).sum()
    }
}

fn main() -> abstract_huffman::Result<()> {
    let sampler = || {
        TreeSampler::new(
            SamplerConfig::new(Arity::BINARY),
            7,
            |rng: &mut rand_chacha::ChaCha8Rng| rng.gen_range(0..=8u64),
        )
    };

    println!("latency:");
    for report in check_all(&Latency, &mut sampler(), 500) {
        print!("{report}");
    }
    let r = build_optimal_tree(&[0, 0, 1, 4, 9], Arity::BINARY, &Latency)?;
    println!("optimal tree, worst latency {}:\n{}", r.cost, r.tree);

    println!("product:");
    for report in check_all(&Product, &mut sampler(), 500) {
        print!("{report}");
    }
    Ok(())
}

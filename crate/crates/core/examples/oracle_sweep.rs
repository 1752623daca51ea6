//! Compare the greedy algorithm against exhaustive search over every tree shape.
//!
//! Usage: cargo run --release --example oracle_sweep -- [max_n]

use abstract_huffman::oracle::{brute_force_optimal, enumerate_codes, verify_algorithm, Sweep, VerifyBounds};
use abstract_huffman::{build_optimal_tree, Arity, MaxDepthWeighting, SumWeighting};

fn main() -> abstract_huffman::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);

    for d in [2, 3] {
        let arity = Arity::new(d)?;
        let counts: Vec<usize> = (1..=max_n)
            .map(|n| enumerate_codes(n, arity).map(|c| c.len()))
            .collect::<Result<_, _>>()?;
        println!("d = {d}: full tree shapes by leaf count {counts:?}");
    }

    let weights = [1u64, 1, 2, 3, 5];
    let (best, tree) = brute_force_optimal(&weights, Arity::BINARY, &SumWeighting::<u64>::new())?;
    let greedy = build_optimal_tree(&weights, Arity::BINARY, &SumWeighting::<u64>::new())?;
    println!("\n{weights:?}: brute force {best}, greedy {}\n{tree}", greedy.cost);

    let bounds = VerifyBounds {
        arities: vec![Arity::new(2)?, Arity::new(3)?, Arity::new(4)?],
        max_n,
        domain: (0..=4).collect(),
        sweep: Sweep::Exhaustive,
    };
    print!("huffman: {}", verify_algorithm(&bounds, &SumWeighting::<u64>::new())?);
    print!("pifo:    {}", verify_algorithm(&bounds, &MaxDepthWeighting)?);
    Ok(())
}

//! Embed a scheduler tree with arbitrary fan-out into a fixed-arity hardware tree.
//!
//! Usage: cargo run --example pifo_embed -- [tree.json] [d]

use abstract_huffman::pifo::{embed, PifoNode};
use abstract_huffman::Arity;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let text = match args.next() {
        Some(path) => std::fs::read_to_string(path)?,
        None => include_str!("data/scheduler.json").to_string(),
    };
    let tree = PifoNode::from_json(&text)?;
    println!("source height {}", tree.height());

    let arities: Vec<u32> = match args.next() {
        Some(d) => vec![d.parse()?],
        None => vec![2, 3, 4],
    };
    for d in arities {
        let e = embed(&tree, Arity::new(d)?, None)?;
        println!("\nd = {d}: height {}", e.height);
        for (id, p) in &e.placement {
            println!("  {id:12} at {:8} (height {})", p.absolute.to_digit_string(), p.height);
        }
    }

    let tight = embed(&tree, Arity::BINARY, Some(3))?;
    println!("\nfits in a binary tree of height 3: {}", tight.feasible);
    Ok(())
}

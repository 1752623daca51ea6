//! Build a tree of trees and flatten it: each outer codeword is prefixed
//! onto the codewords of the tree stored at that leaf.

use abstract_huffman::{cw, Arity, CodeTree};

fn main() -> abstract_huffman::Result<()> {
    let d = Arity::BINARY;
    let inner = |base: u32| CodeTree::new(d, [(cw("00"), base), (cw("11"), base + 1)]);
    let nested = CodeTree::new(
        d,
        [
            (cw("0"), inner(2)?),
            (cw("10"), inner(4)?),
            (cw("110"), inner(6)?),
            (cw("111"), inner(8)?),
        ],
    )?;

    let flat = nested.clone().flatten()?;
    println!("flattened:\n{flat}");
    println!("kraft sum of outer code: {}", nested.code().kraft_sum());
    println!("kraft sum of flat code:  {}", flat.code().kraft_sum());

    // unit laws
    let a = CodeTree::unit(flat.clone(), d).flatten()?;
    let b = flat.map_payloads(|&p| CodeTree::unit(p, d)).flatten()?;
    assert_eq!(a, flat);
    assert_eq!(b, flat);
    println!("unit laws hold");

    let doubled = flat.map_payloads(|p| p * 2);
    println!("payloads doubled: {:?}", doubled.payloads().collect::<Vec<_>>());
    Ok(())
}

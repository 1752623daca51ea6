//! Optimal canonical codes for a frequency table in several arities.
//!
//! Usage: cargo run --example huffman_table -- [symbol:count,...]

use abstract_huffman::huffman::{build_code, FrequencyTable};
use abstract_huffman::Arity;

fn main() -> abstract_huffman::Result<()> {
    let spec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "a:45,b:13,c:12,d:16,e:9,f:5".to_string());
    let freqs = FrequencyTable::parse_spec(&spec)?;
    let total = freqs.total() as f64;
    let entropy: f64 = freqs
        .present()
        .map(|(_, c)| {
            let p = c as f64 / total;
            -p * p.log2()
        })
        .sum();

    for d in [2, 3, 4] {
        let arity = Arity::new(d)?;
        let code = build_code(&freqs, arity)?;
        let per_symbol = code.alpha as f64 / total;
        println!("d = {d}");
        print!("{}", code.table.to_text());
        println!(
            "weighted length {} ({per_symbol:.4} digits/symbol, entropy bound {:.4})\n",
            code.alpha,
            entropy / (d as f64).log2()
        );
    }
    Ok(())
}

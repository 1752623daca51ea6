//! Compress a file (or a built-in sample) into an AHUF container and back.
//!
//! Usage: cargo run --example codec_roundtrip -- [path]

use abstract_huffman::huffman::{parse_container, read_container, write_container};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = match std::env::args().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => b"she sells sea shells by the sea shore; the shells she sells are sea shells for sure".repeat(50),
    };

    let packed = write_container(&data)?;
    let (table, n, bits) = parse_container(&packed)?;
    println!(
        "{} bytes -> {} bytes ({} payload bits, {} symbols in table)",
        data.len(),
        packed.len(),
        bits.len(),
        table.entries().len()
    );
    for (sym, word) in table.entries().iter().take(8) {
        println!("  {:?} -> {}", *sym as char, word.to_digit_string());
    }

    let restored = read_container(&packed)?;
    assert_eq!(restored, data);
    assert_eq!(n as usize, data.len());
    println!("round trip ok");
    Ok(())
}

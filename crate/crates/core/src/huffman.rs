//! Huffman coding as an instance of the greedy algorithm, and a byte codec.
//!
//! Weights are nonnegative and combine by summation; the cost of a tree is the
//! weighted path length `α(C, r) = Σ |x| · r(x)`. The codec builds a binary
//! code from byte frequencies, canonicalizes it from its codeword lengths and
//! stores it in the `AHUF` container format.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display, Write as _};
use std::marker::PhantomData;
use std::ops::{Add, Mul};

use num_traits::{FromPrimitive, Zero};

use crate::code_monad::{Arity, CodeTree, Codeword};
use crate::error::{Error, Result};
use crate::greedy::build_optimal_tree;
use crate::weighting::Weighting;

/// Summation weighting over an exact nonnegative number type, costed by [`alpha`].
#[derive(Debug, Clone, Copy, Default)]
pub struct SumWeighting<T>(PhantomData<fn() -> T>);

impl<T> SumWeighting<T> {
    pub fn new() -> Self {
        SumWeighting(PhantomData)
    }
}

/// Exact numbers usable as Huffman weights (`u64`, `BigRational`, ...).
pub trait HuffmanWeight:
    Clone + Ord + Zero + FromPrimitive + Add<Output = Self> + Mul<Output = Self> + Debug + Display
{
}

impl<T> HuffmanWeight for T where
    T: Clone + Ord + Zero + FromPrimitive + Add<Output = T> + Mul<Output = T> + Debug + Display
{
}

/// Weighted path length `Σ |x| · r(x)`.
pub fn alpha<T: HuffmanWeight>(tree: &CodeTree<T>) -> T {
    tree.iter().fold(T::zero(), |acc, (word, r)| {
        acc + T::from_usize(word.len()).expect("codeword length fits the weight type") * r.clone()
    })
}

impl<T: HuffmanWeight> Weighting for SumWeighting<T> {
    type Weight = T;
    type Cost = T;

    fn weigh(&self, tree: &CodeTree<T>) -> T {
        tree.payloads().fold(T::zero(), |acc, r| acc + r.clone())
    }

    fn cmp_weight(&self, a: &T, b: &T) -> Ordering {
        a.cmp(b)
    }

    fn cost(&self, tree: &CodeTree<T>) -> T {
        alpha(tree)
    }

    fn accepts(&self, weight: &T) -> bool {
        *weight >= T::zero()
    }
}

/// Occurrence counts for each byte value.
#[derive(Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    counts: [u64; 256],
}

impl Debug for FrequencyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.present()).finish()
    }
}

impl Default for FrequencyTable {
    fn default() -> Self {
        FrequencyTable { counts: [0; 256] }
    }
}

impl FrequencyTable {
    pub fn from_bytes(data: &[u8]) -> Self {
        let mut t = FrequencyTable::default();
        for &b in data {
            t.counts[b as usize] += 1;
        }
        t
    }

    pub fn from_counts(pairs: impl IntoIterator<Item = (u8, u64)>) -> Self {
        let mut t = FrequencyTable::default();
        for (sym, count) in pairs {
            t.counts[sym as usize] += count;
        }
        t
    }

    /// Parses `symbol:count` pairs separated by commas, e.g. `a:1,b:1,c:2`.
    /// A symbol is a single ASCII character or `0x` followed by two hex digits.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let mut t = FrequencyTable::default();
        let mut seen = [false; 256];
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (sym, count) = item
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("expected symbol:count, got {item:?}")))?;
            let sym = parse_symbol(sym)?;
            let count: u64 = count
                .parse()
                .map_err(|_| Error::Parse(format!("invalid count in {item:?}")))?;
            if count == 0 {
                return Err(Error::Parse(format!("count must be at least 1 in {item:?}")));
            }
            if std::mem::replace(&mut seen[sym as usize], true) {
                return Err(Error::Parse(format!("symbol repeated in {item:?}")));
            }
            t.counts[sym as usize] = count;
        }
        Ok(t)
    }

    pub fn count(&self, symbol: u8) -> u64 {
        self.counts[symbol as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(symbol, count)` for every symbol with a nonzero count, by symbol.
    pub fn present(&self) -> impl Iterator<Item = (u8, u64)> + '_ {
        (0..=255u8)
            .map(|s| (s, self.counts[s as usize]))
            .filter(|&(_, c)| c > 0)
    }

    /// Merges counts from another table, e.g. one built over a separate chunk.
    pub fn merge(&mut self, other: &FrequencyTable) {
        for (a, b) in self.counts.iter_mut().zip(other.counts.iter()) {
            *a += b;
        }
    }
}

fn parse_symbol(s: &str) -> Result<u8> {
    if let Some(hex) = s.strip_prefix("0x") {
        if hex.len() == 2 {
            return u8::from_str_radix(hex, 16).map_err(|_| Error::Parse(format!("invalid hex symbol {s:?}")));
        }
    }
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii() => Ok(c as u8),
        _ => Err(Error::Parse(format!("invalid symbol {s:?}"))),
    }
}

/// A canonical prefix code over byte symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTable {
    arity: Arity,
    /// Sorted by `(codeword length, symbol)`.
    entries: Vec<(u8, Codeword)>,
}

impl CodeTable {
    /// Assigns canonical codewords to `(symbol, length)` pairs: in `(length, symbol)`
    /// order, each codeword is the previous one plus one, padded with zeros to its length.
    pub fn canonical(arity: Arity, lengths: impl IntoIterator<Item = (u8, usize)>) -> Result<Self> {
        let mut lengths: Vec<(u8, usize)> = lengths.into_iter().collect();
        lengths.sort_by_key(|&(sym, len)| (len, sym));
        if lengths
            .iter()
            .map(|&(s, _)| s)
            .collect::<std::collections::BTreeSet<_>>()
            .len()
            != lengths.len()
        {
            return Err(Error::Container("duplicate symbol in code lengths".into()));
        }
        if lengths.iter().any(|&(_, len)| len == 0) && lengths.len() > 1 {
            return Err(Error::NotPrefixFree);
        }
        let kraft = crate::code_monad::kraft_sum_of(arity, lengths.iter().map(|&(_, l)| l));
        if kraft > num_traits::One::one() {
            return Err(Error::NotPrefixFree);
        }

        let d = arity.get() as u8;
        let mut entries = Vec::with_capacity(lengths.len());
        let mut code: Vec<u8> = Vec::new();
        for (i, &(sym, len)) in lengths.iter().enumerate() {
            if i > 0 {
                increment(&mut code, d);
            }
            code.resize(len, 0);
            entries.push((sym, Codeword::from_digits(code.clone())));
        }
        Ok(CodeTable { arity, entries })
    }

    pub fn arity(&self) -> Arity {
        self.arity
    }

    pub fn entries(&self) -> &[(u8, Codeword)] {
        &self.entries
    }

    pub fn get(&self, symbol: u8) -> Option<&Codeword> {
        self.entries.iter().find(|(s, _)| *s == symbol).map(|(_, w)| w)
    }

    /// `(symbol, length)` in `(length, symbol)` order.
    pub fn lengths(&self) -> impl Iterator<Item = (u8, usize)> + '_ {
        self.entries.iter().map(|(s, w)| (*s, w.len()))
    }

    /// `Σ |code(s)| · freq(s)` over the symbols of `freqs`.
    pub fn weighted_length(&self, freqs: &FrequencyTable) -> u64 {
        self.entries.iter().map(|(s, w)| w.len() as u64 * freqs.count(*s)).sum()
    }

    /// One `<symbol-hex>\t<codeword>` line per symbol in `(length, symbol)` order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (sym, word) in &self.entries {
            writeln!(out, "{sym:02x}\t{}", word.to_digit_string()).expect("writing to a String");
        }
        out
    }

    pub fn to_tree(&self) -> CodeTree<u8> {
        CodeTree::new(self.arity, self.entries.iter().map(|(s, w)| (w.clone(), *s)))
            .expect("canonical codes are prefix-free")
    }
}

// Base-d increment of a digit string; Kraft ≤ 1 rules out overflow past the first digit.
fn increment(code: &mut [u8], d: u8) {
    for digit in code.iter_mut().rev() {
        if *digit + 1 < d {
            *digit += 1;
            return;
        }
        *digit = 0;
    }
    unreachable!("canonical code overflow despite Kraft sum <= 1");
}

/// A code built from frequencies, with the weighted path length it achieves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuffmanCode {
    pub table: CodeTable,
    pub alpha: u64,
}

/// Runs the greedy algorithm on the nonzero counts and canonicalizes the result.
///
/// A lone symbol gets the codeword `0` rather than the empty word, so its
/// weighted length is its count rather than zero.
pub fn build_code(freqs: &FrequencyTable, arity: Arity) -> Result<HuffmanCode> {
    let present: Vec<(u8, u64)> = freqs.present().collect();
    if present.is_empty() {
        return Err(Error::TooFewItems { min: 1, got: 0 });
    }
    let weights: Vec<u64> = present.iter().map(|&(_, c)| c).collect();
    let result = build_optimal_tree(&weights, arity, &SumWeighting::<u64>::new())?;
    let lengths: Vec<(u8, usize)> = present
        .iter()
        .zip(&result.leaf_of_tag)
        .map(|(&(sym, _), word)| (sym, word.len().max(1)))
        .collect();
    let table = CodeTable::canonical(arity, lengths)?;
    let alpha = table.weighted_length(freqs);
    debug_assert!(present.len() == 1 || alpha == result.cost);
    Ok(HuffmanCode { table, alpha })
}

/// A packed bit sequence, most significant bit first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitBuffer {
    bytes: Vec<u8>,
    bit_len: u64,
}

impl BitBuffer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Wraps packed bytes; `bit_len` may not exceed `8 * bytes.len()`.
    pub fn from_bytes(bytes: Vec<u8>, bit_len: u64) -> Self {
        assert!(bit_len <= bytes.len() as u64 * 8);
        BitBuffer { bytes, bit_len }
    }

    pub fn push(&mut self, bit: bool) {
        let byte = (self.bit_len / 8) as usize;
        if byte == self.bytes.len() {
            self.bytes.push(0);
        }
        if bit {
            self.bytes[byte] |= 0x80 >> (self.bit_len % 8);
        }
        self.bit_len += 1;
    }

    pub fn get(&self, i: u64) -> bool {
        self.bytes[(i / 8) as usize] & (0x80 >> (i % 8)) != 0
    }

    pub fn len(&self) -> u64 {
        self.bit_len
    }

    pub fn is_empty(&self) -> bool {
        self.bit_len == 0
    }

    /// Packed bytes, zero-padded to a byte boundary.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }
}

impl Display for BitBuffer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (0..self.bit_len).try_for_each(|i| f.write_char(if self.get(i) { '1' } else { '0' }))
    }
}

fn require_binary(table: &CodeTable) -> Result<()> {
    if table.arity() != Arity::BINARY {
        return Err(Error::NonBinaryCodec(table.arity().get()));
    }
    Ok(())
}

/// Concatenates the codewords of `data`.
pub fn encode(data: &[u8], table: &CodeTable) -> Result<BitBuffer> {
    require_binary(table)?;
    let mut lookup: [Option<&Codeword>; 256] = [None; 256];
    for (sym, word) in table.entries() {
        lookup[*sym as usize] = Some(word);
    }
    let mut out = BitBuffer::new();
    for &b in data {
        let word = lookup[b as usize].ok_or(Error::MissingSymbol(b))?;
        for &digit in word.digits() {
            out.push(digit == 1);
        }
    }
    Ok(out)
}

const NO_CHILD: u32 = u32::MAX;

// Binary decoding trie; a node is a leaf when it carries a symbol.
struct Trie {
    children: Vec<[u32; 2]>,
    symbol: Vec<Option<u8>>,
}

impl Trie {
    fn new(table: &CodeTable) -> Self {
        let mut trie = Trie {
            children: vec![[NO_CHILD; 2]],
            symbol: vec![None],
        };
        for (sym, word) in table.entries() {
            let mut node = 0usize;
            for &digit in word.digits() {
                let next = trie.children[node][digit as usize];
                node = if next == NO_CHILD {
                    trie.children.push([NO_CHILD; 2]);
                    trie.symbol.push(None);
                    let id = trie.children.len() - 1;
                    trie.children[node][digit as usize] = id as u32;
                    id
                } else {
                    next as usize
                };
            }
            trie.symbol[node] = Some(*sym);
        }
        trie
    }
}

/// Decodes exactly `n_symbols` codewords from the front of `bits`.
pub fn decode(bits: &BitBuffer, table: &CodeTable, n_symbols: usize) -> Result<Vec<u8>> {
    require_binary(table)?;
    let trie = Trie::new(table);
    let mut out = Vec::with_capacity(n_symbols);
    let mut pos = 0u64;
    while out.len() < n_symbols {
        let start = pos;
        let mut node = 0usize;
        loop {
            if let Some(sym) = trie.symbol[node] {
                out.push(sym);
                break;
            }
            if pos >= bits.len() {
                return Err(Error::Truncated {
                    decoded: out.len(),
                    expected: n_symbols,
                });
            }
            let next = trie.children[node][bits.get(pos) as usize];
            pos += 1;
            if next == NO_CHILD {
                return Err(Error::Undecodable(start));
            }
            node = next as usize;
        }
    }
    Ok(out)
}

const MAGIC: &[u8; 4] = b"AHUF";
const VERSION: u8 = 0x01;

/// Compresses `data` into an `AHUF` container.
///
/// Layout: `"AHUF"`, version `0x01`, symbol count minus one, one
/// `(symbol, length)` byte pair per symbol, original length as a big-endian
/// `u64`, then the canonical-code bitstream packed MSB-first and zero-padded.
/// Empty input is stored with a single placeholder record `(0x00, 1)`.
pub fn write_container(data: &[u8]) -> Result<Vec<u8>> {
    let freqs = FrequencyTable::from_bytes(data);
    let table = if data.is_empty() {
        CodeTable::canonical(Arity::BINARY, [(0u8, 1usize)])?
    } else {
        build_code(&freqs, Arity::BINARY)?.table
    };
    let bits = encode(data, &table)?;

    let n = table.entries().len();
    let mut out = Vec::with_capacity(4 + 2 + 2 * n + 8 + bits.as_bytes().len());
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.push((n - 1) as u8);
    for (sym, len) in table.lengths() {
        let len = u8::try_from(len).map_err(|_| Error::Container(format!("codeword length {len} exceeds 255")))?;
        out.push(sym);
        out.push(len);
    }
    out.extend_from_slice(&(data.len() as u64).to_be_bytes());
    out.extend_from_slice(bits.as_bytes());
    Ok(out)
}

/// Parses an `AHUF` container and returns its code table, original length and bitstream.
pub fn parse_container(bytes: &[u8]) -> Result<(CodeTable, u64, BitBuffer)> {
    let bad = |msg: &str| Error::Container(msg.to_string());
    let header = bytes.get(..6).ok_or_else(|| bad("too short for header"))?;
    if &header[..4] != MAGIC {
        return Err(bad("bad magic"));
    }
    if header[4] != VERSION {
        return Err(Error::Container(format!("unsupported version {}", header[4])));
    }
    let n = header[5] as usize + 1;
    let records = bytes.get(6..6 + 2 * n).ok_or_else(|| bad("truncated symbol records"))?;
    let lengths: Vec<(u8, usize)> = records.chunks_exact(2).map(|r| (r[0], r[1] as usize)).collect();
    if lengths.iter().any(|&(_, len)| len == 0) {
        return Err(bad("zero codeword length"));
    }
    let table = CodeTable::canonical(Arity::BINARY, lengths)?;
    let at = 6 + 2 * n;
    let len_bytes: [u8; 8] = bytes
        .get(at..at + 8)
        .ok_or_else(|| bad("truncated length field"))?
        .try_into()
        .expect("eight bytes");
    let original_len = u64::from_be_bytes(len_bytes);
    let payload = bytes[at + 8..].to_vec();
    let bit_len = payload.len() as u64 * 8;
    Ok((table, original_len, BitBuffer::from_bytes(payload, bit_len)))
}

/// Inverse of [`write_container`].
pub fn read_container(bytes: &[u8]) -> Result<Vec<u8>> {
    let (table, original_len, bits) = parse_container(bytes)?;
    let n = usize::try_from(original_len).map_err(|_| Error::Container("length overflow".into()))?;
    decode(&bits, &table, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_monad::cw;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn huff() -> SumWeighting<u64> {
        SumWeighting::new()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&CodeTree::unit(5u64, Arity::BINARY)), 0);
        let t = CodeTree::depth_one(Arity::BINARY, [4u64, 9]).unwrap();
        assert_eq!(alpha(&t), 13);
        assert_eq!(alpha(&t), huff().weigh(&t));
        let t = CodeTree::new(
            Arity::BINARY,
            [(cw("0"), 3u64), (cw("10"), 2), (cw("110"), 1), (cw("111"), 1)],
        )
        .unwrap();
        assert_eq!(alpha(&t), 13);
    }

    #[test]
    fn tree_leq_by_alpha() {
        let a = CodeTree::depth_one(Arity::BINARY, [1u64, 1]).unwrap();
        let b = CodeTree::new(Arity::BINARY, [(cw("0"), 1u64), (cw("10"), 1), (cw("11"), 1)]).unwrap();
        // alpha 2 vs 1 + 2 + 2 = 5
        assert!(huff().tree_leq(&a, &b));
        assert!(!huff().tree_leq(&b, &a));
    }

    #[test]
    fn exchange_example() {
        // x = 0 holds the smaller weight 1, y = 10 the larger weight 5
        let r = CodeTree::new(Arity::BINARY, [(cw("0"), 1u64), (cw("10"), 5), (cw("11"), 1)]).unwrap();
        let s = CodeTree::new(Arity::BINARY, [(cw("0"), 5u64), (cw("10"), 1), (cw("11"), 1)]).unwrap();
        assert_eq!(alpha(&r), 1 + 10 + 2);
        assert_eq!(alpha(&s), 5 + 2 + 2);
        assert!(huff().tree_leq(&s, &r));
    }

    #[test]
    fn entropy_relation_dyadic() {
        let words = ["0", "10", "110", "111"];
        let t = CodeTree::new(
            Arity::BINARY,
            words.iter().map(|w| {
                let w = cw(w);
                let p = BigRational::new(BigInt::from(1), BigInt::from(2).pow(w.len() as u32));
                (w, p)
            }),
        )
        .unwrap();
        let a = alpha(&t);
        assert_eq!(a, BigRational::new(7.into(), 4.into()));
        let entropy: f64 = t
            .iter()
            .map(|(w, _)| {
                let p = 2f64.powi(-(w.len() as i32));
                -p * p.ln()
            })
            .sum();
        assert!((entropy - 1.75 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn build_code_examples() {
        let f = FrequencyTable::parse_spec("a:1,b:1,c:2,d:3").unwrap();
        let code = build_code(&f, Arity::BINARY).unwrap();
        assert_eq!(code.alpha, 13);
        let lens: Vec<(u8, usize)> = code.table.lengths().collect();
        assert_eq!(lens, vec![(b'd', 1), (b'c', 2), (b'a', 3), (b'b', 3)]);
        assert_eq!(code.table.to_text(), "64\t0\n63\t10\n61\t110\n62\t111\n");

        let f = FrequencyTable::parse_spec("a:1,b:1,c:2,d:4").unwrap();
        let code = build_code(&f, Arity::BINARY).unwrap();
        assert_eq!(code.alpha, 14);
        assert_eq!(code.alpha * 4, 8 * 7);

        let f = FrequencyTable::from_bytes(b"zzzz");
        let code = build_code(&f, Arity::BINARY).unwrap();
        assert_eq!(code.table.entries(), &[(b'z', cw("0"))]);
        assert_eq!(code.alpha, 4);

        assert!(build_code(&FrequencyTable::default(), Arity::BINARY).is_err());
    }

    #[test]
    fn ternary_tables() {
        let f = FrequencyTable::parse_spec("a:1,b:1,c:1").unwrap();
        let code = build_code(&f, Arity::new(3).unwrap()).unwrap();
        assert_eq!(code.alpha, 3);
        assert!(code.table.lengths().all(|(_, l)| l == 1));

        // 4 symbols in base 3: first combine takes 2, leaving an unused branch
        let f = FrequencyTable::parse_spec("a:1,b:1,c:1,d:1").unwrap();
        let code = build_code(&f, Arity::new(3).unwrap()).unwrap();
        let c = code.table.to_tree().code();
        assert!(!c.is_exhaustive());
        assert_eq!(code.alpha, 6);
    }

    #[test]
    fn canonical_rejects_kraft_violation() {
        assert!(CodeTable::canonical(Arity::BINARY, [(0, 1), (1, 1), (2, 1)]).is_err());
        assert!(CodeTable::canonical(Arity::BINARY, [(0, 1), (0, 2)]).is_err());
    }

    #[test]
    fn parse_spec_errors() {
        assert!(FrequencyTable::parse_spec("a1").is_err());
        assert!(FrequencyTable::parse_spec("a:0").is_err());
        assert!(FrequencyTable::parse_spec("ab:3").is_err());
        assert!(FrequencyTable::parse_spec("a:1,a:2").is_err());
        let f = FrequencyTable::parse_spec("0x41:3, ::2").unwrap();
        assert_eq!(f.count(b'A'), 3);
        assert_eq!(f.count(b':'), 2);
    }

    #[test]
    fn encode_examples() {
        let table = CodeTable::canonical(Arity::BINARY, [(b'd', 1), (b'c', 1)]).unwrap();
        assert_eq!(encode(b"", &table).unwrap().len(), 0);
        assert_eq!(encode(b"dd", &table).unwrap().to_string(), "11");
        let table = CodeTable::canonical(Arity::BINARY, [(b'd', 1)]).unwrap();
        assert_eq!(encode(b"dd", &table).unwrap().to_string(), "00");
        assert!(matches!(encode(b"x", &table), Err(Error::MissingSymbol(b'x'))));
    }

    #[test]
    fn decode_round_trip_and_errors() {
        let data = b"abracadabra";
        let code = build_code(&FrequencyTable::from_bytes(data), Arity::BINARY).unwrap();
        let bits = encode(data, &code.table).unwrap();
        assert_eq!(bits.len(), code.alpha);
        assert_eq!(decode(&bits, &code.table, data.len()).unwrap(), data);
        assert!(decode(&BitBuffer::new(), &code.table, 0).unwrap().is_empty());

        let short = BitBuffer::from_bytes(bits.as_bytes().to_vec(), bits.len() - 1);
        assert!(matches!(
            decode(&short, &code.table, data.len()),
            Err(Error::Truncated { .. })
        ));

        let lone = CodeTable::canonical(Arity::BINARY, [(b'q', 1)]).unwrap();
        let one = BitBuffer::from_bytes(vec![0x80], 1);
        assert!(matches!(decode(&one, &lone, 1), Err(Error::Undecodable(0))));
    }

    #[test]
    fn container_layout() {
        let bytes = write_container(b"aab").unwrap();
        // a:2 -> "0", b:1 -> "1"; stream 0 0 1 -> 0b0010_0000
        assert_eq!(
            bytes,
            [
                b"AHUF".as_slice(),
                &[1, 1, b'a', 1, b'b', 1],
                &3u64.to_be_bytes(),
                &[0x20]
            ]
            .concat()
        );
        assert_eq!(read_container(&bytes).unwrap(), b"aab");

        let empty = write_container(b"").unwrap();
        assert_eq!(empty, [b"AHUF".as_slice(), &[1, 0, 0, 1], &0u64.to_be_bytes()].concat());
        assert!(read_container(&empty).unwrap().is_empty());
    }

    #[test]
    fn container_rejects_garbage() {
        assert!(read_container(b"").is_err());
        assert!(read_container(b"NOPE\x01\x00\x00\x01").is_err());
        let mut bytes = write_container(b"hello").unwrap();
        bytes[4] = 9;
        assert!(read_container(&bytes).is_err());
        let bytes = write_container(b"hello world").unwrap();
        assert!(read_container(&bytes[..bytes.len() - 1]).is_err());
    }

    #[test]
    fn frequency_merge() {
        let mut a = FrequencyTable::from_bytes(b"abc");
        a.merge(&FrequencyTable::from_bytes(b"cd"));
        assert_eq!(a, FrequencyTable::from_bytes(b"abccd"));
        assert_eq!(a.total(), 5);
    }
}

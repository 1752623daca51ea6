use abstract_huffman::code_monad::{is_prefix_free, Arity, CodeTree, Codeword};
use abstract_huffman::weighting::{SamplerConfig, TreeSampler};
use num_traits::One;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn sampler(d: u32, seed: u64) -> TreeSampler<u32, impl FnMut(&mut ChaCha8Rng) -> u32> {
    TreeSampler::new(
        SamplerConfig::new(Arity::new(d).unwrap()),
        seed,
        |rng: &mut ChaCha8Rng| rng.gen_range(0..100),
    )
}

#[test]
fn worked_example_flatten() {
    let d = Arity::BINARY;
    let outer = ["0", "10", "110", "111"];
    let nested = CodeTree::new(
        d,
        outer.iter().enumerate().map(|(i, x)| {
            let base = 2 * i as u32 + 2;
            let inner = CodeTree::new(d, [(cw("00"), base), (cw("11"), base + 1)]).unwrap();
            (cw(x), inner)
        }),
    )
    .unwrap();
    let flat = nested.flatten().unwrap();
    let expected: Vec<(Codeword, u32)> = ["000", "011", "1000", "1011", "11000", "11011", "11100", "11111"]
        .iter()
        .zip(2..)
        .map(|(w, p)| (cw(w), p))
        .collect();
    assert_eq!(flat, CodeTree::new(d, expected).unwrap());
    assert!(nested.code().is_exhaustive());
    assert!(nested.payloads().all(|t| !t.code().is_exhaustive()));
}

fn cw(s: &str) -> Codeword {
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn flatten_is_associative(d in 2u32..=4, seed in any::<u64>()) {
        let mut s = sampler(d, seed);
        let t3 = s.tree_with(|s| s.tree_with(|s| s.tree()));
        let inner_first = t3.map_payloads(|t| t.flatten().unwrap()).flatten().unwrap();
        let outer_first = t3.flatten().unwrap().flatten().unwrap();
        prop_assert_eq!(inner_first, outer_first);
    }

    #[test]
    fn unit_laws(d in 2u32..=4, seed in any::<u64>()) {
        let mut s = sampler(d, seed);
        let t = s.tree();
        let arity = t.arity();
        prop_assert_eq!(&CodeTree::unit(t.clone(), arity).flatten().unwrap(), &t);
        prop_assert_eq!(&t.map_payloads(|&p| CodeTree::unit(p, arity)).flatten().unwrap(), &t);
    }

    #[test]
    fn functor_laws(d in 2u32..=4, seed in any::<u64>()) {
        let mut s = sampler(d, seed);
        let t = s.tree();
        prop_assert_eq!(&t.map_payloads(|&p| p), &t);
        let g = |p: &u32| p * 3;
        let h = |p: &u32| p + 7;
        prop_assert_eq!(t.map_payloads(g).map_payloads(h), t.map_payloads(|p| h(&g(p))));
    }

    #[test]
    fn flatten_output_is_prefix_free_with_unique_split(d in 2u32..=4, seed in any::<u64>()) {
        let mut s = sampler(d, seed);
        let nested = s.nested();
        let flat = nested.flatten().unwrap();
        prop_assert!(is_prefix_free(flat.words()));
        for (word, payload) in flat.iter() {
            let splits: Vec<_> = nested
                .iter()
                .filter(|(x, inner)| {
                    x.is_prefix_of(word)
                        && inner.get(&Codeword::from_digits(&word.digits()[x.len()..])) == Some(payload)
                })
                .collect();
            prop_assert_eq!(splits.len(), 1);
        }
    }

    #[test]
    fn kraft_bounds(d in 2u32..=5, seed in any::<u64>()) {
        let mut s = sampler(d, seed);
        let code = s.tree().code();
        let k = code.kraft_sum();
        prop_assert!(k <= num_rational::BigRational::one());
        prop_assert_eq!(code.is_exhaustive(), k.is_one());
    }
}

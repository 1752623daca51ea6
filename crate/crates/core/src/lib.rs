//! A generalized Huffman algorithm over the monad of `d`-ary prefix codes.
//!
//! The algorithm in [`greedy`] is parametric in a [`Weighting`]: an algebra
//! that folds a tree of weights into a single weight, plus a cost that orders
//! trees. Two weightings ship with the crate:
//!
//! * [`SumWeighting`] sums weights and costs trees by weighted path length,
//!   which makes the algorithm classical Huffman coding ([`huffman`]).
//! * [`MaxDepthWeighting`] takes `max |x| + r(x)`, which makes it the PIFO
//!   tree embedding that minimizes the height of a `d`-ary target ([`pifo`]).
//!
//! [`oracle`] certifies optimality against brute force on small inputs, and
//! [`weighting`] has randomized checkers for the laws a weighting must obey.
//!
//! ```
//! use abstract_huffman::{build_optimal_tree, Arity, SumWeighting};
//!
//! let r = build_optimal_tree(&[1u64, 1, 2, 3], Arity::BINARY, &SumWeighting::new()).unwrap();
//! assert_eq!(r.cost, 13);
//! ```

pub mod cli;
pub mod code_monad;
mod error;
pub mod greedy;
pub mod huffman;
pub mod oracle;
pub mod pifo;
pub mod weighting;

pub use code_monad::{cw, is_prefix_free, Arity, CodeTree, Codeword, PrefixCode};
pub use error::{Error, Result};
pub use greedy::{build_optimal_tree, choose_k, combine_step, GreedyResult};
pub use huffman::{alpha, SumWeighting};
pub use oracle::{brute_force_optimal, enumerate_codes, verify_algorithm};
pub use pifo::{embed, MaxDepthWeighting, PifoNode};
pub use weighting::{similar, Weighting};

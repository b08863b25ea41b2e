//! Exact computation of the exponents `W_k` in the multivariable Zassenhaus
//! formula
//!
//! ```text
//! exp(X1 + ... + Xn) = exp(X1) ... exp(Xn) exp(W2) exp(W3) ...
//! ```
//!
//! together with independent checks of the result.
//!
//! * [`freealg`]: truncated free associative algebra over the rationals.
//! * [`lieform`]: long commutators, compositions, rendering, Lie membership.
//! * [`zassenhaus`]: the recursive engine computing `f_{m,k}` and `W_m`.
//! * [`oracle`]: peel-off oracle, exact product identity, numeric order check.

pub mod freealg;
pub mod lieform;
pub mod oracle;
pub mod zassenhaus;

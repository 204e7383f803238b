//! Closed- and open-factor complexity of Arnoux-Rauzy and Sturmian words.
//!
//! The number of closed factors of each length in an Arnoux-Rauzy word is
//! computed two independent ways: an explicit interval formula driven by
//! the first-return length recursion ([`arformula`]), and brute-force
//! enumeration of the factors of generated prefixes ([`factorlab`]).
//! [`wordgen`] builds those prefixes by iterated palindromic closure, and
//! [`openstur`] covers the structure of open factors of finite Sturmian
//! words. Every structural lemma along the way is executable and tested.

pub mod arformula;
mod error;
pub mod factorlab;
pub mod openstur;
pub mod palindromes;
pub mod report;
pub mod wordgen;
pub mod words;

pub use error::{Error, Result};

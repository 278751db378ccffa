//! Finite-state transducers and an automaton-based treatment of audioactive
//! ("look-and-say") decay.
//!
//! - [`fst`]: the generic transducer engine.
//! - [`machines`]: the concrete transducers over `{1,2,3,d}` and `{1,2,3,d,◊}`.
//! - [`chemistry`]: direct derivation, brute-force oracles, the periodic table and
//!   the growth rate.
//! - [`theorems`]: the splitting and cosmological proof pipelines.

pub mod fst;
pub mod machines;
pub mod chemistry;
pub mod theorems;

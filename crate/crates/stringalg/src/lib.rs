#![warn(missing_docs)]

//! A toolkit for the combinatorics of string algebras and for regular
//! (finite-description) countable linear orders.
//!
//! Given a bound-quiver presentation of a string algebra, the crate
//!
//! * validates the presentation and infers the auxiliary sign maps σ/τ
//!   ([`presentation`]),
//! * enumerates strings and bands and compares hammock elements
//!   ([`strings`]),
//! * builds the finite automata whose languages encode hammocks and the set
//!   of all strings ([`hammock`], on top of the generic partial-transition
//!   automata of [`automaton`]),
//! * converts automata to equation systems over arrangements and solves them
//!   into order terms ([`word_problems`]),
//! * decides which bands sit next to scattered parts of the completed
//!   hammocks and computes the resulting error term ([`exceptional`]).
//!
//! Independently of any algebra, [`regular_orders`] is a small calculator for
//! linear orders built from `0`, `1` by finite sums, multiplication by ω and
//! ω*, and finitary shuffles: decidable predicates, normalization, a text
//! syntax, and a translation into binary automata.
//!
//! The accompanying `stringalg` binary exposes every pipeline stage as a
//! subcommand; see the repository README for a tour.
//!
//! # Conventions
//!
//! Walks are read **right to left**: in a stored word `[α₁, α₂, …, αₙ]` the
//! syllable `αₙ` is traversed first, and composability means
//! `s(αᵢ) = t(αᵢ₊₁)`. Relations are written the same way (leftmost arrow
//! printed first). A left hammock at vertex `v` collects the strings `x`
//! with `s(x) = v` and `σ(x) = −1`, i.e. exactly those for which `x·1₍ᵥ,₊₁₎`
//! is defined.

pub mod automaton;
pub mod error;
pub mod exceptional;
pub mod hammock;
pub mod presentation;
pub mod regular_orders;
pub mod strings;
pub mod word_problems;

pub use error::{Error, Result};
pub use exceptional::{
    DOrientation, ExceptionalReport, Side, decide_exceptional, exceptional_report,
};
pub use presentation::{
    QuiverPresentation, SignMaps, StringAlgebra, infer_sign_maps, parse_presentation,
    validate_string_algebra,
};
pub use regular_orders::{
    OrderPredicates, OrderTerm, format_term, normalize, parse_term, predicates, term_to_automaton,
};
pub use word_problems::{
    WordProblem, automaton_to_word_problem, parse_word_problem, quasi_rational, solve, solve_all,
};

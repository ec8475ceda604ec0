//! Recognition of ω-regular languages by finite semigroups.
//!
//! The crate covers
//!
//! * finite semigroups given by tables, their closures under a product,
//!   Green's relations and Rees coordinates of simple semigroups
//!   ([`semigroup`]);
//! * morphisms `A⁺ → S` read as weak, strong or finite-word recognizers,
//!   with membership of ultimately periodic words, complementation,
//!   syntactic quotients and equivalence ([`recognizer`]);
//! * Büchi automata, run profiles and the witness families used for
//!   lower bounds ([`buchi`]);
//! * conversions between all of these ([`conversions`]);
//! * lower-bound certificates built from separating contexts and the
//!   table of measured blow-ups ([`bounds`]);
//! * the plain-text formats read and written by the `omrec` tool ([`format`]).

pub mod bounds;
pub mod buchi;
pub mod conversions;
pub mod error;
pub mod format;
pub mod language;
pub mod recognizer;
pub mod semigroup;
pub mod word;

pub use buchi::{BuchiAutomaton, TransitionProfile};
pub use error::{Error, Result};
pub use language::{Complement, OmegaLanguage};
pub use recognizer::{FiniteWordRecognizer, Morphism, StrongRecognizer, WeakRecognizer};
pub use semigroup::{Element, FiniteSemigroup, LinkedPair};
pub use word::{Alphabet, Letter, UpWord, Word};

//! Exact computation with Hermitian matrices over rings of integers of
//! imaginary quadratic fields, viewed as charged, edge-labelled graphs.
//!
//! The crate provides:
//!
//! * [`quadint`] — arithmetic in `O_Q(sqrt(d))` for squarefree `d < 0`,
//!   `d != -1, -3`, and enumeration of the norm-level label sets;
//! * [`polynomial`] — exact integer-polynomial machinery: Sturm chains,
//!   real-root isolation, cyclotomicity tests and Mahler measures with
//!   certified rational enclosures;
//! * [`lmatrix`] — the Hermitian L-graph core: exact characteristic
//!   polynomials, the switching/permutation/negation/conjugation
//!   equivalence group, canonical forms and form-pattern matching;
//! * [`families`] — generators for the maximal cyclotomic families and
//!   sporadics, maximality verification, an embedding oracle and the
//!   four-cycle parity predicates;
//! * [`grow`] — single-vertex growth: column enumeration, addition
//!   classification, minimality testing and excluded-subgraph filters;
//! * [`search`] — orchestration: the small search with resumable
//!   persistence, the supersporadic sweeps, bound verification and
//!   certificate assembly.
//!
//! Everything on the proof path is exact: floating point appears only
//! inside the best-effort complex Mahler routine, and every numeric
//! claim is reported as a rational lower/upper enclosure.

pub mod families;
pub mod grow;
pub mod lmatrix;
pub mod polynomial;
pub mod quadint;
pub mod search;

//! Elementary abelian regular covering projections of graphs, computed via
//! invariant subspaces of the transposed homology representation of the
//! automorphism group over a prime field.
//!
//! The library is organised bottom-up:
//!
//! * [`gfp`] — exact arithmetic in `Z_p` and univariate polynomials over it,
//!   including square roots and factorization into irreducibles.
//! * [`linalg`] — dense matrices over `Z_p`, canonical subspaces, characteristic
//!   and minimal polynomials, primary decomposition and cyclic (spin) subspaces.
//! * [`permgrp`] — permutations, group closure, transitivity predicates and an
//!   exhaustive subgroup census for small groups.
//! * [`graphcore`] — graphs with arc structure, generalized Petersen
//!   constructors, spanning trees with designated cotree arcs, and the induced
//!   homology matrices of automorphisms.
//! * [`invariant`] — enumeration of common invariant subspaces of a set of
//!   matrices, lifting classification, and reduction up to projection
//!   isomorphism.
//! * [`cover`] — voltage assignments, derived covering graphs, the algebraic
//!   lift criterion and an independent combinatorial lift oracle, plus a
//!   desk-scale graph automorphism search.
//! * [`mkcensus`] — the Möbius–Kantor `GP(8,3)` corpus: pinned generators and
//!   subgroups, golden homology matrices, closed-form subspace families, the
//!   full census of minimal semisymmetric covers and voltage-table emission.
//! * [`cli`] — the command-line front end.

pub mod cli;
pub mod cover;
pub mod gfp;
pub mod graphcore;
pub mod invariant;
pub mod linalg;
pub mod mkcensus;
pub mod permgrp;

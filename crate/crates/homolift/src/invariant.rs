//! Enumeration of the common invariant subspaces of a finite set of matrices
//! over `Z_p` (the minimal ones, and the full lattice when requested),
//! classification of subspaces as lifting targets, reduction up to
//! projection-isomorphism, and the minimal-semisymmetric filter.

use crate::gfp::Fp;
use crate::graphcore::{GraphError, HomologyRep};
use crate::linalg::{primary_decomposition, spin, FpMatrix, Subspace};
use crate::permgrp::Perm;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("no generator matrices given")]
    NoGenerators,
    #[error("generators must be square matrices of equal size over one modulus")]
    BadGenerators,
    #[error("seed space has {0} projective points, exceeding the cap {1}")]
    SeedCapExceeded(u128, u128),
    #[error("invariant-subspace lattice exceeded the cap of {0} members")]
    LatticeCapExceeded(usize),
    #[error("matrix group closure exceeded the cap of {0} elements")]
    MatrixGroupCapExceeded(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Guards for the enumeration; `HOMOLIFT_SEED_CAP` overrides the seed cap.
#[derive(Debug, Clone, Copy)]
pub struct SeedCaps {
    pub seed_cap: u128,
    pub lattice_cap: usize,
    pub matrix_group_cap: usize,
}

impl Default for SeedCaps {
    fn default() -> Self {
        SeedCaps { seed_cap: 10_000_000, lattice_cap: 1_000_000, matrix_group_cap: 100_000 }
    }
}

impl SeedCaps {
    pub fn from_env() -> Self {
        let mut caps = SeedCaps::default();
        if let Ok(v) = std::env::var("HOMOLIFT_SEED_CAP") {
            if let Ok(n) = v.trim().parse::<u128>() {
                caps.seed_cap = n;
            }
        }
        caps
    }
}

/// True iff `image(m, s) = s`.
pub fn is_invariant(s: &Subspace, m: &FpMatrix) -> bool {
    s.image(m) == *s
}

fn check_generators(gens: &[FpMatrix]) -> Result<(Fp, usize), InvariantError> {
    let Some(first) = gens.first() else {
        return Err(InvariantError::NoGenerators);
    };
    let (f, n) = (first.field(), first.nrows());
    for g in gens {
        if !g.is_square() || g.nrows() != n || g.field() != f {
            return Err(InvariantError::BadGenerators);
        }
    }
    Ok((f, n))
}

/// All minimal nonzero common invariant subspaces of the generators.
///
/// A designated generator `A` (the one whose characteristic polynomial has
/// the most distinct irreducible factors) is primary-decomposed; every
/// projective representative of each `Ker f_j(A)` is spun under all
/// generators; results are deduplicated and pruned to the minimal members.
/// Completeness: any nonzero common invariant subspace contains a minimal
/// A-invariant subspace, which is cyclic on a vector of some `Ker f_j(A)`.
pub fn minimal_common(gens: &[FpMatrix], caps: &SeedCaps) -> Result<Vec<Subspace>, InvariantError> {
    let (f, _n) = check_generators(gens)?;
    let decomps: Vec<_> = gens
        .iter()
        .map(|g| primary_decomposition(g).expect("square generators"))
        .collect();
    let designated = (0..gens.len())
        .max_by_key(|&i| decomps[i].len())
        .expect("nonempty");
    let comps = &decomps[designated];
    let a = &gens[designated];

    let mut total_seeds: u128 = 0;
    let mut seed_spaces = Vec::new();
    for comp in comps {
        let ker = crate::linalg::kernel(&a.eval_poly(&comp.factor));
        total_seeds += ker.projective_count();
        seed_spaces.push(ker);
    }
    if total_seeds > caps.seed_cap {
        return Err(InvariantError::SeedCapExceeded(total_seeds, caps.seed_cap));
    }

    let mut found: BTreeSet<Subspace> = BTreeSet::new();
    for ker in &seed_spaces {
        for v in ker.projective_vectors() {
            found.insert(spin(f, &v, gens));
        }
    }
    // keep only subspaces containing no other found subspace; processing in
    // ascending dimension order makes a single containment sweep sufficient
    let all: Vec<Subspace> = found.into_iter().collect();
    let mut minimal: Vec<Subspace> = Vec::new();
    for s in all {
        if !minimal.iter().any(|t| s.contains(t)) {
            minimal.push(s);
        }
    }
    minimal.sort();
    Ok(minimal)
}

/// Order of the matrix group generated by `gens` (they must be invertible).
fn matrix_group_order(gens: &[FpMatrix], cap: usize) -> Result<usize, InvariantError> {
    let (f, n) = check_generators(gens)?;
    let id = FpMatrix::identity(f, n);
    let mut seen: BTreeSet<FpMatrix> = BTreeSet::new();
    let mut queue = vec![id];
    seen.insert(queue[0].clone());
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for g in gens {
            let next = cur.mul(g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(InvariantError::MatrixGroupCapExceeded(cap));
                }
                queue.push(next);
            }
        }
    }
    Ok(seen.len())
}

/// All common invariant subspaces, including the zero and full subspaces.
///
/// When `p` does not divide the order of the generated matrix group the
/// representation is completely reducible and the lattice is the closure of
/// the minimal subspaces under sums. Otherwise every invariant subspace is
/// still a sum of cyclic (spin) subspaces, so the lattice is the closure of
/// `{0}` under adding spins of all projective vectors.
pub fn full_lattice(gens: &[FpMatrix], caps: &SeedCaps) -> Result<Vec<Subspace>, InvariantError> {
    let (f, n) = check_generators(gens)?;
    let p = f.modulus();
    let order = matrix_group_order(gens, caps.matrix_group_cap)?;
    let semisimple = order as u64 % p != 0;

    let summands: Vec<Subspace> = if semisimple {
        minimal_common(gens, caps)?
    } else {
        let full = Subspace::full(f, n);
        if full.projective_count() > caps.seed_cap {
            return Err(InvariantError::SeedCapExceeded(
                full.projective_count(),
                caps.seed_cap,
            ));
        }
        let mut spins: BTreeSet<Subspace> = BTreeSet::new();
        for v in full.projective_vectors() {
            spins.insert(spin(f, &v, gens));
        }
        spins.into_iter().collect()
    };

    let mut lattice: BTreeSet<Subspace> = BTreeSet::new();
    lattice.insert(Subspace::zero(f, n));
    let mut frontier: Vec<Subspace> = vec![Subspace::zero(f, n)];
    while let Some(s) = frontier.pop() {
        for w in &summands {
            let sum = s.sum(w);
            if lattice.insert(sum.clone()) {
                if lattice.len() > caps.lattice_cap {
                    return Err(InvariantError::LatticeCapExceeded(caps.lattice_cap));
                }
                frontier.push(sum);
            }
        }
    }
    let mut out: Vec<Subspace> = lattice.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Which named subgroup is the largest one that lifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LiftTag {
    G,
    M,
    K1,
    K2,
    H,
    Other,
}

impl std::fmt::Display for LiftTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LiftTag::G => "G",
            LiftTag::M => "M",
            LiftTag::K1 => "K1",
            LiftTag::K2 => "K2",
            LiftTag::H => "H",
            LiftTag::Other => "other",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub edge_transitive: bool,
    pub vertex_transitive: bool,
    pub semisymmetric: bool,
    pub minimal_semisymmetric: bool,
}

/// Precomputed homology matrices of the subgroup census, used to classify a
/// subspace as a lifting target.
#[derive(Debug)]
pub struct LiftContext {
    /// generator matrices of the minimal edge-transitive subgroup
    pub edge_gens: Vec<FpMatrix>,
    /// generator matrices of each minimal vertex-transitive subgroup
    pub min_vt_gens: Vec<Vec<FpMatrix>>,
    /// census candidates for the largest lifting subgroup, sorted by
    /// descending order: (tag, group order, generator matrices)
    pub candidates: Vec<(LiftTag, usize, Vec<FpMatrix>)>,
}

impl LiftContext {
    pub fn new(
        rep: &HomologyRep,
        edge_gens: &[Perm],
        min_vt: &[Vec<Perm>],
        candidates: &[(LiftTag, usize, Vec<Perm>)],
    ) -> Result<Self, InvariantError> {
        let mats = |perms: &[Perm]| -> Result<Vec<FpMatrix>, InvariantError> {
            perms.iter().map(|p| Ok(rep.matrix(p)?)).collect()
        };
        let mut cands = Vec::with_capacity(candidates.len());
        for (tag, order, gens) in candidates {
            cands.push((*tag, *order, mats(gens)?));
        }
        cands.sort_by(|a, b| (b.1, a.0).cmp(&(a.1, b.0)));
        Ok(LiftContext {
            edge_gens: mats(edge_gens)?,
            min_vt_gens: min_vt.iter().map(|g| mats(g)).collect::<Result<_, _>>()?,
            candidates: cands,
        })
    }

    fn fixes(&self, mats: &[FpMatrix], s: &Subspace) -> bool {
        mats.iter().all(|m| is_invariant(s, m))
    }
}

/// Edge-transitivity, vertex-transitivity and the largest lifting subgroup
/// of the projection defined by `s`.
pub fn classify_lifting(s: &Subspace, ctx: &LiftContext) -> (ClassFlags, LiftTag) {
    let edge = ctx.fixes(&ctx.edge_gens, s);
    let vertex = ctx.min_vt_gens.iter().any(|g| ctx.fixes(g, s));
    let tag = ctx
        .candidates
        .iter()
        .find(|(_, _, mats)| ctx.fixes(mats, s))
        .map(|(tag, _, _)| *tag)
        .unwrap_or(LiftTag::Other);
    (
        ClassFlags {
            edge_transitive: edge,
            vertex_transitive: vertex,
            semisymmetric: edge && !vertex,
            minimal_semisymmetric: false,
        },
        tag,
    )
}

/// An isomorphism class of covering projections: the orbit of a subspace
/// under the transversal matrices, its lifting flags, and the largest
/// lifting subgroup.
#[derive(Debug, Clone)]
pub struct ProjectionClass {
    pub representative: Subspace,
    pub orbit: Vec<Subspace>,
    pub flags: ClassFlags,
    pub largest_lift: LiftTag,
}

/// Partition subspaces into isomorphism classes of projections: `s ~ s'` iff
/// some transversal matrix maps one onto the other. The canonical class
/// representative is the lexicographically least RREF grid in the orbit.
pub fn orbit_reduce(
    subspaces: &[Subspace],
    rep: &HomologyRep,
    transversal: &[Perm],
    ctx: &LiftContext,
) -> Result<Vec<ProjectionClass>, InvariantError> {
    let mats: Vec<FpMatrix> = transversal
        .iter()
        .map(|p| rep.matrix(p).map_err(InvariantError::from))
        .collect::<Result<_, _>>()?;
    let mut classes: Vec<ProjectionClass> = Vec::new();
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    for s in subspaces {
        if seen.contains(s) {
            continue;
        }
        let mut orbit: BTreeSet<Subspace> = BTreeSet::new();
        for m in &mats {
            orbit.insert(s.image(m));
        }
        orbit.insert(s.clone());
        for member in &orbit {
            seen.insert(member.clone());
        }
        let orbit: Vec<Subspace> = orbit.into_iter().collect();
        let representative = orbit
            .iter()
            .min_by(|a, b| a.grid().cmp(&b.grid()))
            .unwrap()
            .clone();
        let (flags, largest_lift) = classify_lifting(&representative, ctx);
        classes.push(ProjectionClass { representative, orbit, flags, largest_lift });
    }
    classes.sort_by(|a, b| {
        (a.representative.dim(), a.representative.grid())
            .cmp(&(b.representative.dim(), b.representative.grid()))
    });
    Ok(classes)
}

/// Mark (and return) the minimal semisymmetric classes: a semisymmetric
/// class is minimal iff no proper nonzero invariant subspace strictly
/// contained in its representative is itself semisymmetric.
pub fn minimal_semisymmetric(
    classes: &mut [ProjectionClass],
    lattice_flags: &[(Subspace, ClassFlags)],
) -> Vec<usize> {
    let mut kept = Vec::new();
    for (idx, class) in classes.iter_mut().enumerate() {
        if !class.flags.semisymmetric {
            continue;
        }
        let rep = &class.representative;
        let has_semisym_inside = lattice_flags.iter().any(|(w, f)| {
            f.semisymmetric && !w.is_zero() && w.dim() < rep.dim() && rep.contains(w)
        });
        if !has_semisym_inside {
            class.flags.minimal_semisymmetric = true;
            kept.push(idx);
        }
    }
    kept
}

/// Number of isomorphism classes of minimal semisymmetric p-elementary
/// abelian projections of GP(8,3), computed by the full pipeline.
pub fn count_minimal_semisymmetric(p: u64) -> Result<usize, crate::mkcensus::CensusError> {
    Ok(crate::mkcensus::full_census(p)?.counts.minimal_semisymmetric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::Fp;

    #[test]
    fn identity_lattice_of_dim_two() {
        let f = Fp::new(5).unwrap();
        let id = FpMatrix::identity(f, 2);
        let caps = SeedCaps::default();
        let minimal = minimal_common(&[id.clone()], &caps).unwrap();
        assert_eq!(minimal.len(), 6); // p + 1 lines
        let lattice = full_lattice(&[id], &caps).unwrap();
        assert_eq!(lattice.len(), 8); // p + 3
    }

    #[test]
    fn full_space_is_invariant() {
        let f = Fp::new(7).unwrap();
        let m = FpMatrix::from_rows(f, &[vec![1, 2], vec![3, 4]]);
        assert!(is_invariant(&Subspace::full(f, 2), &m));
        assert!(is_invariant(&Subspace::zero(f, 2), &m));
    }

    #[test]
    fn minimal_common_single_rotation() {
        // 90° rotation over Z_5: x²+1 splits, two eigenlines
        let f = Fp::new(5).unwrap();
        let rot = FpMatrix::from_i64_rows(f, &[&[0, -1], &[1, 0]]);
        let caps = SeedCaps::default();
        let minimal = minimal_common(&[rot.clone()], &caps).unwrap();
        assert_eq!(minimal.len(), 2);
        for s in &minimal {
            assert_eq!(s.dim(), 1);
            assert!(is_invariant(s, &rot));
        }
        // over Z_7, x²+1 is irreducible: the plane is the only minimal one
        let f7 = Fp::new(7).unwrap();
        let rot7 = FpMatrix::from_i64_rows(f7, &[&[0, -1], &[1, 0]]);
        let minimal = minimal_common(&[rot7], &caps).unwrap();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].dim(), 2);
    }

    #[test]
    fn seed_cap_enforced() {
        let f = Fp::new(5).unwrap();
        let id = FpMatrix::identity(f, 9);
        let caps = SeedCaps { seed_cap: 10, ..Default::default() };
        assert!(matches!(
            minimal_common(&[id], &caps),
            Err(InvariantError::SeedCapExceeded(_, 10))
        ));
    }
}

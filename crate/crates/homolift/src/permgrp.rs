//! Permutations on a finite vertex set, group closure, transitivity
//! predicates, conjugation, and an exhaustive subgroup census for small
//! groups.
//!
//! Products follow the convention `a·b = apply a first, then b`, so that
//! `compose(a, b) = b ∘ a` as functions.

use crate::graphcore::Graph;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("images do not form a permutation")]
    NotAPermutation,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("empty generator list")]
    NoGenerators,
    #[error("cycle entry {0} out of range 1..={1}")]
    CycleOutOfRange(usize, usize),
    #[error("group order {0} exceeds census bound {1}")]
    OrderBound(usize, usize),
}

/// A permutation of `{0, …, n−1}`, stored by its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotAPermutation);
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Build from disjoint cycles in 1-based notation.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                let a = cycle[k];
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(PermError::CycleOutOfRange(a.max(b), n));
                }
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Product `self·other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Least k ≥ 1 with `self^k = id`.
    pub fn order(&self) -> usize {
        let mut k = 1usize;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }

    /// Disjoint cycles (1-based), nontrivial ones only.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur + 1);
                cur = self.images[cur];
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cyc in cycles {
            let inner: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", inner.join(","))?;
        }
        Ok(())
    }
}

/// A permutation group with its full element set computed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>, // sorted by image sequence
}

impl PermGroup {
    /// Closure of a nonempty generator list.
    pub fn closure(gens: &[Perm]) -> Result<PermGroup, PermError> {
        let Some(first) = gens.first() else {
            return Err(PermError::NoGenerators);
        };
        let degree = first.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = vec![Perm::identity(degree)];
        seen.insert(queue[0].clone());
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head].clone();
            head += 1;
            for g in gens {
                let next = cur.compose(g);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup { degree, generators: gens.to_vec(), elements })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// The conjugate `{a⁻¹·x·a : x ∈ self}` under the product convention of
    /// this module.
    pub fn conjugate(&self, a: &Perm) -> PermGroup {
        let ainv = a.inverse();
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|g| ainv.compose(g).compose(a))
            .collect();
        let mut elements: Vec<Perm> = self
            .elements
            .iter()
            .map(|g| ainv.compose(g).compose(a))
            .collect();
        elements.sort();
        PermGroup { degree: self.degree, generators: gens, elements }
    }

    /// Orbits of the point set under the generators.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}

/// Transitivity flags of a group acting on a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TransitivityFlags {
    pub vertex: bool,
    pub edge: bool,
    pub arc: bool,
    pub vertex_regular: bool,
    pub arc_regular: bool,
}

/// Orbit computations on vertices, edges and arcs; `regular` means
/// transitive with the group order equal to the size of the acted-on set.
pub fn transitivity(g: &PermGroup, graph: &Graph) -> TransitivityFlags {
    assert_eq!(g.degree(), graph.n(), "degree must match vertex count");
    let vertex = g.point_orbits().len() == 1;

    let edges = graph.edges();
    let edge_index: BTreeMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let edge_orbits = orbit_count(edges.len(), |i| &edges[i], g, |&(u, v), p| {
        let (a, b) = (p.apply(u), p.apply(v));
        edge_index[&(a.min(b), a.max(b))]
    });

    let arcs = graph.arcs();
    let arc_index: BTreeMap<(usize, usize), usize> = arcs
        .iter()
        .enumerate()
        .map(|(i, &a)| (a, i))
        .collect();
    let arc_orbits = orbit_count(arcs.len(), |i| &arcs[i], g, |&(u, v), p| {
        arc_index[&(p.apply(u), p.apply(v))]
    });

    let edge = edge_orbits == 1;
    let arc = arc_orbits == 1;
    TransitivityFlags {
        vertex,
        edge,
        arc,
        vertex_regular: vertex && g.order() == graph.n(),
        arc_regular: arc && g.order() == arcs.len(),
    }
}

fn orbit_count<T, F, G>(count: usize, item: F, group: &PermGroup, act: G) -> usize
where
    F: Fn(usize) -> T,
    G: Fn(T, &Perm) -> usize,
    T: Copy,
{
    let mut seen = vec![false; count];
    let mut orbits = 0;
    for start in 0..count {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for g in group.generators() {
                let j = act(item(i), g);
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    orbits
}

/// A subgroup found by the census, with its transitivity flags.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub group: PermGroup,
    pub flags: TransitivityFlags,
}

const CENSUS_ORDER_BOUND: usize = 1000;

/// Every proper subgroup of `g` that is vertex- and/or edge-transitive on
/// `graph`. Built by layered extension: seed with all cyclic subgroups, then
/// repeatedly extend each known subgroup by one outside element until no new
/// subgroup appears; deduplicated by element set.
pub fn subgroup_census(g: &PermGroup, graph: &Graph) -> Result<Vec<CensusEntry>, PermError> {
    if g.order() > CENSUS_ORDER_BOUND {
        return Err(PermError::OrderBound(g.order(), CENSUS_ORDER_BOUND));
    }
    let mut known: BTreeMap<Vec<Perm>, PermGroup> = BTreeMap::new();
    let mut frontier: Vec<PermGroup> = Vec::new();
    for e in g.elements() {
        let cyc = PermGroup::closure(std::slice::from_ref(e))?;
        let key = cyc.elements().to_vec();
        if !known.contains_key(&key) {
            known.insert(key, cyc.clone());
            frontier.push(cyc);
        }
    }
    while let Some(sub) = frontier.pop() {
        if sub.order() == g.order() {
            continue;
        }
        for e in g.elements() {
            if sub.contains(e) {
                continue;
            }
            let mut gens = sub.generators().to_vec();
            gens.push(e.clone());
            let ext = PermGroup::closure(&gens)?;
            let key = ext.elements().to_vec();
            if !known.contains_key(&key) {
                known.insert(key, ext.clone());
                frontier.push(ext);
            }
        }
    }
    let mut out: Vec<CensusEntry> = known
        .into_values()
        .filter(|sub| sub.order() < g.order())
        .map(|sub| {
            let flags = transitivity(&sub, graph);
            CensusEntry { group: sub, flags }
        })
        .filter(|entry| entry.flags.vertex || entry.flags.edge)
        .collect();
    out.sort_by(|a, b| {
        (a.group.order(), a.group.elements()).cmp(&(b.group.order(), b.group.elements()))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_parsing_and_order() {
        let rho = Perm::from_cycles(16, &[
            &[1, 2, 3, 4, 5, 6, 7, 8],
            &[9, 10, 11, 12, 13, 14, 15, 16],
        ])
        .unwrap();
        assert_eq!(rho.order(), 8);
        let omega = Perm::from_cycles(16, &[&[2, 8, 9], &[3, 16, 14], &[4, 13, 6], &[7, 12, 10]])
            .unwrap();
        assert_eq!(omega.order(), 3);
        assert!(rho.compose(&rho.inverse()).is_identity());
    }

    #[test]
    fn composition_convention() {
        // a·b applies a first: (a·b)(x) = b(a(x))
        let a = Perm::from_images(vec![1, 0, 2]).unwrap();
        let b = Perm::from_images(vec![0, 2, 1]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), b.apply(a.apply(0)));
        assert_eq!(ab.apply(1), b.apply(a.apply(1)));
    }

    #[test]
    fn closure_is_idempotent() {
        let a = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        let g = PermGroup::closure(&[a]).unwrap();
        assert_eq!(g.order(), 5);
        let again = PermGroup::closure(g.elements()).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn conjugate_by_identity() {
        let a = Perm::from_cycles(4, &[&[1, 2]]).unwrap();
        let g = PermGroup::closure(&[a]).unwrap();
        assert_eq!(g.conjugate(&Perm::identity(4)), g);
    }

    #[test]
    fn dihedral_transitivity_on_cycle() {
        // C_6 as a graph; its rotation group is vertex-regular and
        // edge-transitive but not arc-regular.
        let g6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let rot = Perm::from_cycles(6, &[&[1, 2, 3, 4, 5, 6]]).unwrap();
        let grp = PermGroup::closure(&[rot.clone()]).unwrap();
        let flags = transitivity(&grp, &g6);
        assert!(flags.vertex && flags.vertex_regular && flags.edge && !flags.arc);
        let refl = Perm::from_cycles(6, &[&[2, 6], &[3, 5]]).unwrap();
        let dih = PermGroup::closure(&[rot, refl]).unwrap();
        assert_eq!(dih.order(), 12);
        let flags = transitivity(&dih, &g6);
        assert!(flags.arc && flags.arc_regular);
    }

    #[test]
    fn census_of_small_dihedral() {
        // D_4 acting on the 4-cycle: proper vertex- or edge-transitive
        // subgroups are the rotation C_4, the two reflection-type Klein
        // groups, … — just sanity-check determinism and flags here.
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let rot = Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        let refl = Perm::from_cycles(4, &[&[2, 4]]).unwrap();
        let d4 = PermGroup::closure(&[rot, refl]).unwrap();
        assert_eq!(d4.order(), 8);
        let census = subgroup_census(&d4, &c4).unwrap();
        for entry in &census {
            assert!(entry.group.order() < 8);
            assert!(entry.flags.vertex || entry.flags.edge);
            assert_eq!(entry.group.order() % 1, 0);
        }
        // C_4 itself is vertex-regular and edge-transitive
        assert!(census
            .iter()
            .any(|e| e.group.order() == 4 && e.flags.vertex_regular && e.flags.edge));
        let again = subgroup_census(&d4, &c4).unwrap();
        assert_eq!(census.len(), again.len());
    }
}

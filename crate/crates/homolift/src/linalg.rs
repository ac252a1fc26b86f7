//! Dense exact linear algebra over `Z_p`: matrices, canonical subspaces,
//! characteristic/minimal polynomials, primary decomposition, and cyclic
//! (spin) subspaces.
//!
//! Subspaces live in the column space `Z_p^{n,1}` but store their basis as
//! reduced-row-echelon rows of coordinates; two subspaces are equal iff their
//! canonical grids are identical.

use crate::gfp::{Fp, FpPoly};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("expected a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
}

/// Row-major dense matrix over `Z_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(field: Fp, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Fp, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| field.reduce(x)));
        }
        FpMatrix { field, rows: r, cols: c, data }
    }

    pub fn from_i64_rows(field: Fp, rows: &[&[i64]]) -> Self {
        let converted: Vec<Vec<u64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| field.reduce_i64(x)).collect())
            .collect();
        Self::from_rows(field, &converted)
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = self.field.reduce(v);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> FpMatrix {
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let f = self.field;
        let mut out = FpMatrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.data[i * other.cols + j] = v;
                }
            }
        }
        out
    }

    /// Matrix · column vector.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (k, &x) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(self.get(i, k), x));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn trace(&self) -> u64 {
        assert!(self.is_square());
        let f = self.field;
        (0..self.rows).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> u64 {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u64;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.get(r, col) != 0);
            let Some(pr) = pivot else { return 0 };
            if pr != col {
                for j in 0..n {
                    let a = m.get(col, j);
                    let b = m.get(pr, j);
                    m.set(col, j, b);
                    m.set(pr, j, a);
                }
                det = f.neg(det);
            }
            let pv = m.get(col, col);
            det = f.mul(det, pv);
            let inv = f.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Reduced row echelon form together with rank and pivot columns.
    pub fn rref(&self) -> (FpMatrix, usize, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&row| m.get(row, col) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.get(r, j);
                    let b = m.get(pr, j);
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(r, col)).expect("nonzero pivot");
            for j in col..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for row in 0..m.rows {
                if row == r {
                    continue;
                }
                let factor = m.get(row, col);
                if factor == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(row, j), f.mul(factor, m.get(r, j)));
                    m.set(row, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = FpMatrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (red, rank, _) = aug.rref();
        if rank < n {
            return None;
        }
        let mut out = FpMatrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j));
            }
        }
        Some(out)
    }

    /// Evaluate a polynomial at this matrix (Horner).
    pub fn eval_poly(&self, poly: &FpPoly) -> FpMatrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = FpMatrix::zero(self.field, n, n);
        for &c in poly.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }
}

/// Monic characteristic polynomial via Hessenberg reduction and the
/// leading-principal-minor recurrence. Only field divisions are used, so the
/// computation is valid in every characteristic.
pub fn charpoly(m: &FpMatrix) -> Result<FpPoly, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.nrows(), m.ncols()));
    }
    let f = m.field();
    let n = m.nrows();
    if n == 0 {
        return Ok(FpPoly::one(f));
    }
    let mut h = m.clone();
    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let pivot = (j + 1..n).find(|&r| h.get(r, j) != 0);
        let Some(pr) = pivot else { continue };
        if pr != j + 1 {
            for c in 0..n {
                let a = h.get(j + 1, c);
                let b = h.get(pr, c);
                h.set(j + 1, c, b);
                h.set(pr, c, a);
            }
            for r in 0..n {
                let a = h.get(r, j + 1);
                let b = h.get(r, pr);
                h.set(r, j + 1, b);
                h.set(r, pr, a);
            }
        }
        let inv = f.inv(h.get(j + 1, j)).expect("nonzero pivot");
        for r in j + 2..n {
            let factor = f.mul(h.get(r, j), inv);
            if factor == 0 {
                continue;
            }
            for c in 0..n {
                let v = f.sub(h.get(r, c), f.mul(factor, h.get(j + 1, c)));
                h.set(r, c, v);
            }
            for rr in 0..n {
                let v = f.add(h.get(rr, j + 1), f.mul(factor, h.get(rr, r)));
                h.set(rr, j + 1, v);
            }
        }
    }
    // p_m(x) = (x − h_mm) p_{m−1} − Σ_i h_im (Π_{k=i+1..m} h_{k,k−1}) p_{i−1}
    let mut polys: Vec<FpPoly> = vec![FpPoly::one(f)];
    for mm in 1..=n {
        let xm = FpPoly::new(f, vec![f.neg(h.get(mm - 1, mm - 1)), 1]);
        let mut p = xm.mul(&polys[mm - 1]);
        let mut subdiag = 1u64;
        for i in (1..mm).rev() {
            // product of subdiagonal entries h_{k,k−1} for k = i+1 ..= m
            subdiag = f.mul(subdiag, h.get(i, i - 1));
            let coeff = f.mul(h.get(i - 1, mm - 1), subdiag);
            if coeff != 0 {
                p = p.sub(&polys[i - 1].scale(coeff));
            }
        }
        polys.push(p);
    }
    Ok(polys.pop().unwrap())
}

/// Monic minimal polynomial: the lcm of the Krylov annihilators of the
/// standard basis vectors.
pub fn minpoly(m: &FpMatrix) -> Result<FpPoly, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.nrows(), m.ncols()));
    }
    let f = m.field();
    let n = m.nrows();
    let mut result = FpPoly::one(f);
    for i in 0..n {
        let mut v = vec![0u64; n];
        v[i] = 1;
        // skip vectors already annihilated by the current lcm
        if m.eval_poly(&result).mul_vec(&v).iter().all(|&x| x == 0) {
            continue;
        }
        let ann = krylov_annihilator(m, &v);
        result = result.lcm(&ann);
        if result.degree() == Some(n) {
            break;
        }
    }
    Ok(result)
}

/// Least monic polynomial g with g(A)·v = 0.
fn krylov_annihilator(m: &FpMatrix, v: &[u64]) -> FpPoly {
    let f = m.field();
    let n = m.nrows();
    // echelon rows with combination tracking: row = Σ rep_k · A^k v
    let mut ech: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new(); // (pivot, vector, rep)
    let mut cur = v.to_vec();
    let mut k = 0usize;
    loop {
        let mut vec = cur.clone();
        let mut rep = vec![0u64; k + 1];
        rep[k] = 1;
        for (piv, row, row_rep) in &ech {
            let c = vec[*piv];
            if c != 0 {
                for j in 0..n {
                    vec[j] = f.sub(vec[j], f.mul(c, row[j]));
                }
                for (j, &rc) in row_rep.iter().enumerate() {
                    rep[j] = f.sub(rep[j], f.mul(c, rc));
                }
            }
        }
        if let Some(piv) = vec.iter().position(|&x| x != 0) {
            let inv = f.inv(vec[piv]).expect("field pivot");
            for x in vec.iter_mut() {
                *x = f.mul(*x, inv);
            }
            for x in rep.iter_mut() {
                *x = f.mul(*x, inv);
            }
            rep.resize(k + 1, 0);
            ech.push((piv, vec, rep));
            cur = m.mul_vec(&cur);
            k += 1;
        } else {
            // A^k v = Σ_{j<k} c_j A^j v  →  annihilator x^k − Σ c_j x^j
            let mut coeffs = vec![0u64; k + 1];
            coeffs[k] = 1;
            // rep currently holds the reduction of A^k v: A^k v − Σ … = 0,
            // so x^k + Σ rep_j x^j with rep_j as computed (rep[k] became 0-adjusted).
            for (j, &c) in rep.iter().enumerate().take(k) {
                coeffs[j] = c;
            }
            return FpPoly::new(f, coeffs);
        }
    }
}

/// Canonical subspace of the column space `Z_p^{ambient,1}`, stored as RREF
/// rows of coordinates. Equality is grid identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Fp,
    ambient: usize,
    basis: Vec<Vec<u64>>,
}

impl Subspace {
    pub fn zero(field: Fp, ambient: usize) -> Self {
        Subspace { field, ambient, basis: vec![] }
    }

    pub fn full(field: Fp, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![0u64; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { field, ambient, basis }
    }

    /// Span of the given coordinate vectors (canonicalized).
    pub fn span(field: Fp, ambient: usize, vectors: &[Vec<u64>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = FpMatrix::from_rows(field, vectors);
        let (red, rank, _) = m.rref();
        let basis = (0..rank).map(|r| red.row(r).to_vec()).collect();
        Subspace { field, ambient, basis }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut w: Vec<u64> = v.iter().map(|&x| f.reduce(x)).collect();
        for row in &self.basis {
            let piv = row.iter().position(|&x| x == 1).expect("RREF row");
            let c = w[piv];
            if c != 0 {
                for j in 0..self.ambient {
                    w[j] = f.sub(w[j], f.mul(c, row[j]));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.check_compatible(other);
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    fn check_compatible(&self, other: &Subspace) {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        assert_eq!(self.field, other.field, "modulus mismatch");
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, &vecs)
    }

    /// Intersection via the Zassenhaus block construction.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        let n = self.ambient;
        let f = self.field;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut row = v.clone();
            row.extend(v.iter().copied());
            rows.push(row);
        }
        for v in &other.basis {
            let mut row = v.clone();
            row.extend(std::iter::repeat(0).take(n));
            rows.push(row);
        }
        if rows.is_empty() {
            return Subspace::zero(f, n);
        }
        let m = FpMatrix::from_rows(f, &rows);
        let (red, rank, _) = m.rref();
        let mut inter = Vec::new();
        for r in 0..rank {
            let row = red.row(r);
            if row[..n].iter().all(|&x| x == 0) {
                inter.push(row[n..].to_vec());
            }
        }
        Subspace::span(f, n, &inter)
    }

    /// Image `{m·v : v ∈ self}` as a canonical subspace.
    pub fn image(&self, m: &FpMatrix) -> Subspace {
        assert_eq!(m.ncols(), self.ambient, "matrix/subspace mismatch");
        assert_eq!(m.field(), self.field, "modulus mismatch");
        let vecs: Vec<Vec<u64>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field, m.nrows(), &vecs)
    }

    /// Flattened canonical grid, used for deterministic ordering.
    pub fn grid(&self) -> Vec<u64> {
        self.basis.iter().flatten().copied().collect()
    }

    /// Enumerate projective representatives (first nonzero coordinate 1) of
    /// the nonzero vectors in this subspace, in a deterministic order.
    pub fn projective_vectors(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let p = f.modulus();
        let d = self.dim();
        let n = self.ambient;
        let mut out = Vec::new();
        for lead in 0..d {
            // coefficients: c_lead = 1, c_j free for j > lead
            let free = d - lead - 1;
            let mut counters = vec![0u64; free];
            loop {
                let mut v = self.basis[lead].clone();
                for (idx, &c) in counters.iter().enumerate() {
                    if c != 0 {
                        let row = &self.basis[lead + 1 + idx];
                        for j in 0..n {
                            v[j] = f.add(v[j], f.mul(c, row[j]));
                        }
                    }
                }
                out.push(v);
                let mut k = 0;
                loop {
                    if k == free {
                        break;
                    }
                    counters[k] += 1;
                    if counters[k] < p {
                        break;
                    }
                    counters[k] = 0;
                    k += 1;
                }
                if k == free {
                    break;
                }
            }
        }
        out
    }

    /// Number of projective points, (p^d − 1)/(p − 1).
    pub fn projective_count(&self) -> u128 {
        let p = self.field.modulus() as u128;
        let d = self.dim() as u32;
        if d == 0 {
            return 0;
        }
        (p.pow(d) - 1) / (p - 1)
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim(), self.grid()).cmp(&(other.ambient, other.dim(), other.grid()))
    }
}

/// Null space `{v : m·v = 0}` as a canonical subspace of the column space.
pub fn kernel(m: &FpMatrix) -> Subspace {
    let f = m.field();
    let n = m.ncols();
    let (red, rank, pivots) = m.rref();
    let mut basis = Vec::with_capacity(n - rank);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; n];
        for &p in &pivots {
            s[p] = true;
        }
        s
    };
    for j in 0..n {
        if pivot_set[j] {
            continue;
        }
        let mut v = vec![0u64; n];
        v[j] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(red.get(r, j));
        }
        basis.push(v);
    }
    Subspace::span(f, n, &basis)
}

/// One primary component of a square matrix: the kernel of `f_j(A)^{s_j}`
/// for an irreducible factor `f_j` of the characteristic polynomial.
#[derive(Debug, Clone)]
pub struct PrimaryComponent {
    pub factor: FpPoly,
    pub char_mult: usize,
    pub min_mult: usize,
    pub kernel: Subspace,
}

/// Primary decomposition of the column space under `m`, ordered by the
/// canonical factor order of the characteristic polynomial.
pub fn primary_decomposition(m: &FpMatrix) -> Result<Vec<PrimaryComponent>, LinalgError> {
    let kappa = charpoly(m)?;
    let mu = minpoly(m)?;
    let factors = kappa.factor().expect("characteristic polynomial has degree ≥ 1");
    let mut out = Vec::with_capacity(factors.len());
    for (f_j, n_j) in factors {
        let mut s_j = 0usize;
        let mut rest = mu.clone();
        loop {
            let (q, r) = rest.divmod(&f_j).expect("nonzero factor");
            if r.is_zero() {
                s_j += 1;
                rest = q;
            } else {
                break;
            }
        }
        let power = m.eval_poly(&f_j).pow(s_j as u64);
        let ker = kernel(&power);
        debug_assert_eq!(ker.dim(), f_j.degree().unwrap() * n_j);
        out.push(PrimaryComponent { factor: f_j, char_mult: n_j, min_mult: s_j, kernel: ker });
    }
    Ok(out)
}

/// Least subspace containing `v` and closed under every matrix in `mats`
/// (breadth-first closure).
pub fn spin(field: Fp, v: &[u64], mats: &[FpMatrix]) -> Subspace {
    let n = v.len();
    let f = field;
    // echelon rows (pivot-normalized, not fully reduced) for fast membership
    let mut ech: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut queue: Vec<Vec<u64>> = Vec::new();

    let insert = |w: Vec<u64>, ech: &mut Vec<(usize, Vec<u64>)>, queue: &mut Vec<Vec<u64>>| {
        let mut w: Vec<u64> = w.iter().map(|&x| f.reduce(x)).collect();
        for (piv, row) in ech.iter() {
            let c = w[*piv];
            if c != 0 {
                for j in 0..n {
                    w[j] = f.sub(w[j], f.mul(c, row[j]));
                }
            }
        }
        if let Some(piv) = w.iter().position(|&x| x != 0) {
            let inv = f.inv(w[piv]).expect("field pivot");
            for x in w.iter_mut() {
                *x = f.mul(*x, inv);
            }
            ech.push((piv, w.clone()));
            queue.push(w);
        }
    };

    insert(v.to_vec(), &mut ech, &mut queue);
    let mut head = 0usize;
    while head < queue.len() {
        let w = queue[head].clone();
        head += 1;
        for m in mats {
            insert(m.mul_vec(&w), &mut ech, &mut queue);
        }
        if ech.len() == n {
            break;
        }
    }
    let rows: Vec<Vec<u64>> = ech.into_iter().map(|(_, r)| r).collect();
    Subspace::span(f, n, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::Fp;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn fp(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    fn random_matrix(rng: &mut StdRng, field: Fp, n: usize) -> FpMatrix {
        let p = field.modulus();
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        FpMatrix::from_rows(field, &rows)
    }

    #[test]
    fn rref_examples() {
        let f = fp(5);
        let id = FpMatrix::identity(f, 3);
        let (r, rank, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);
        assert_eq!(piv, vec![0, 1, 2]);

        let z = FpMatrix::zero(f, 2, 5);
        let (r, rank, piv) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
        assert!(piv.is_empty());

        let f3 = fp(3);
        let m = FpMatrix::from_rows(f3, &[vec![1, 1], vec![2, 2]]);
        let (r, rank, _) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), &[1, 1]);
        assert_eq!(r.row(1), &[0, 0]);
    }

    #[test]
    fn kernel_examples() {
        let f = fp(5);
        assert_eq!(kernel(&FpMatrix::identity(f, 4)).dim(), 0);
        assert!(kernel(&FpMatrix::zero(f, 3, 3)).is_full());
    }

    #[test]
    fn charpoly_identity() {
        let f = fp(7);
        let id = FpMatrix::identity(f, 4);
        let kappa = charpoly(&id).unwrap();
        // (x−1)^4
        let lin = FpPoly::from_i64(f, &[-1, 1]);
        assert_eq!(kappa, lin.mul(&lin).mul(&lin).mul(&lin));
        assert_eq!(minpoly(&id).unwrap(), lin);
    }

    #[test]
    fn charpoly_matches_det_evaluation() {
        // independent oracle: κ(c) = det(cI − A) at every point of small fields
        let mut rng = StdRng::seed_from_u64(0xcafe);
        for p in [2u64, 3, 5, 7, 13] {
            let f = fp(p);
            for _ in 0..40 {
                let n = rng.gen_range(1..=6);
                let m = random_matrix(&mut rng, f, n);
                let kappa = charpoly(&m).unwrap();
                assert_eq!(kappa.degree(), Some(n));
                assert!(kappa.is_monic());
                for c in 0..p.min(11) {
                    let ci = FpMatrix::identity(f, n).scale(c);
                    assert_eq!(kappa.eval(c), ci.sub(&m).det(), "p={p} n={n} c={c}");
                }
            }
        }
    }

    #[test]
    fn cayley_hamilton_and_minpoly_divides() {
        let mut rng = StdRng::seed_from_u64(0xdead);
        for p in [2u64, 3, 5, 7, 13] {
            let f = fp(p);
            for _ in 0..200 {
                let m = random_matrix(&mut rng, f, 9);
                let kappa = charpoly(&m).unwrap();
                assert!(m.eval_poly(&kappa).is_zero(), "Cayley–Hamilton failed p={p}");
                let mu = minpoly(&m).unwrap();
                assert!(m.eval_poly(&mu).is_zero());
                let (_, r) = kappa.divmod(&mu).unwrap();
                assert!(r.is_zero(), "minpoly must divide charpoly");
            }
        }
    }

    #[test]
    fn primary_decomposition_properties() {
        let mut rng = StdRng::seed_from_u64(77);
        for p in [2u64, 3, 5] {
            let f = fp(p);
            for _ in 0..25 {
                let n = rng.gen_range(2..=7);
                let m = random_matrix(&mut rng, f, n);
                let comps = primary_decomposition(&m).unwrap();
                let mut total = Subspace::zero(f, n);
                let mut dim_sum = 0;
                for c in &comps {
                    assert_eq!(c.kernel.dim(), c.factor.degree().unwrap() * c.char_mult);
                    assert!(c.kernel.image(&m).dim() <= c.kernel.dim());
                    assert!(c.kernel.contains(&c.kernel.image(&m)), "invariance");
                    dim_sum += c.kernel.dim();
                    for d in &comps {
                        if !std::ptr::eq(c, d) {
                            assert!(c.kernel.intersect(&d.kernel).is_zero());
                        }
                    }
                    total = total.sum(&c.kernel);
                }
                assert_eq!(dim_sum, n);
                assert!(total.is_full());
            }
        }
    }

    #[test]
    fn primary_decomposition_of_identity() {
        let f = fp(5);
        let id = FpMatrix::identity(f, 4);
        let comps = primary_decomposition(&id).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].factor, FpPoly::from_i64(f, &[-1, 1]));
        assert_eq!(comps[0].kernel.dim(), 4);
        assert_eq!(comps[0].min_mult, 1);
    }

    #[test]
    fn subspace_lattice_identities() {
        let mut rng = StdRng::seed_from_u64(1234);
        for p in [2u64, 3, 5] {
            let f = fp(p);
            for _ in 0..500 {
                let n = 5;
                let mk = |rng: &mut StdRng| {
                    let k = rng.gen_range(0..=3);
                    let vecs: Vec<Vec<u64>> = (0..k)
                        .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
                        .collect();
                    Subspace::span(f, n, &vecs)
                };
                let a = mk(&mut rng);
                let b = mk(&mut rng);
                let c = mk(&mut rng);
                assert_eq!(a.sum(&b), b.sum(&a));
                assert_eq!(a.intersect(&b), b.intersect(&a));
                assert_eq!(a.sum(&Subspace::zero(f, n)), a);
                assert!(a.sum(&b).contains(&a));
                assert!(a.contains(&a.intersect(&b)));
                // modular law: a ⊆ c ⟹ a + (b ∩ c) = (a + b) ∩ c
                let a2 = a.intersect(&c);
                let lhs = a2.sum(&b.intersect(&c));
                let rhs = a2.sum(&b).intersect(&c);
                assert_eq!(lhs, rhs);
                // dimension formula
                assert_eq!(
                    a.sum(&b).dim() + a.intersect(&b).dim(),
                    a.dim() + b.dim()
                );
            }
        }
    }

    #[test]
    fn spin_basic() {
        let f = fp(5);
        let id = FpMatrix::identity(f, 3);
        let s = spin(f, &[1, 2, 0], &[id]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains_vector(&[1, 2, 0]));
        assert!(s.contains_vector(&[2, 4, 0]));

        // a cyclic shift spins a generic vector to the full space
        let shift = FpMatrix::from_rows(f, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let s = spin(f, &[1, 0, 0], &[shift]);
        assert!(s.is_full());
    }

    #[test]
    fn projective_enumeration_counts() {
        let f = fp(3);
        let s = Subspace::full(f, 4);
        let pts = s.projective_vectors();
        assert_eq!(pts.len() as u128, s.projective_count());
        assert_eq!(pts.len(), (81 - 1) / 2);
        // all distinct, all normalized
        let mut set = std::collections::HashSet::new();
        for v in &pts {
            let first = v.iter().find(|&&x| x != 0).unwrap();
            assert_eq!(*first, 1);
            assert!(set.insert(v.clone()));
        }
    }

    proptest::proptest! {
        #[test]
        fn image_preserves_sum(pa in proptest::sample::select(vec![2u64,3,5]),
                               seed in 0u64..1000) {
            let f = fp(pa);
            let mut rng = StdRng::seed_from_u64(seed);
            let n = 4;
            let m = random_matrix(&mut rng, f, n);
            let mk = |rng: &mut StdRng| {
                let vecs: Vec<Vec<u64>> = (0..2)
                    .map(|_| (0..n).map(|_| rng.gen_range(0..pa)).collect())
                    .collect();
                Subspace::span(f, n, &vecs)
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            proptest::prop_assert_eq!(a.sum(&b).image(&m), a.image(&m).sum(&b.image(&m)));
        }
    }
}

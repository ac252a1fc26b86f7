//! Exact arithmetic in `Z_p` and univariate polynomial arithmetic over `Z_p`,
//! including square-free / distinct-degree / equal-degree factorization.
//!
//! All moduli are small primes checked by trial division. Scalars are stored
//! as least nonnegative residues in `u64`; a [`Fp`] value carries the modulus
//! and is the context for every operation.

use thiserror::Error;

/// Largest accepted modulus. Keeps every product inside `u128` comfortably
/// and matches the desk scale of the tool.
const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfpError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range")]
    ModulusTooLarge(u64),
    #[error("{0} is not invertible mod {1}")]
    NotInvertible(u64, u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot factor a polynomial of degree < 1")]
    ConstantFactor,
    #[error("mixed moduli {0} and {1}")]
    ModulusMismatch(u64, u64),
}

/// The prime field `Z_p`. Construction checks primality by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, GfpError> {
        if p > MAX_MODULUS {
            return Err(GfpError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(GfpError::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Least nonnegative residue of a signed integer.
    pub fn reduce_i64(self, x: i64) -> u64 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u64
    }

    pub fn reduce(self, x: u64) -> u64 {
        x % self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u128) -> u64 {
        let mut acc = 1u64 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(self, a: u64) -> Result<u64, GfpError> {
        let a = a % self.p;
        if a == 0 {
            return Err(GfpError::NotInvertible(a, self.p));
        }
        Ok(self.pow(a, (self.p - 2) as u128))
    }

    pub fn div(self, a: u64, b: u64) -> Result<u64, GfpError> {
        Ok(self.mul(a % self.p, self.inv(b)?))
    }

    /// Legendre symbol as -1, 0, 1.
    pub fn legendre(self, a: u64) -> i32 {
        let a = a % self.p;
        if a == 0 {
            return 0;
        }
        if self.p == 2 {
            return 1;
        }
        let e = self.pow(a, ((self.p - 1) / 2) as u128);
        if e == 1 {
            1
        } else {
            -1
        }
    }

    /// Square root mod p (Tonelli–Shanks), deterministic: the nonresidue
    /// search starts at 2 and the returned root is the smaller of the pair
    /// `{r, p-r}`. Returns `None` for nonresidues.
    pub fn sqrt(self, a: u64) -> Option<u64> {
        let p = self.p;
        let a = a % p;
        if a == 0 {
            return Some(0);
        }
        if p == 2 {
            return Some(a);
        }
        if self.legendre(a) != 1 {
            return None;
        }
        let r = if p % 4 == 3 {
            self.pow(a, ((p + 1) / 4) as u128)
        } else {
            // Tonelli–Shanks, p ≡ 1 (mod 4).
            let mut q = p - 1;
            let mut s = 0u32;
            while q % 2 == 0 {
                q /= 2;
                s += 1;
            }
            let mut z = 2u64;
            while self.legendre(z) != -1 {
                z += 1;
            }
            let mut m = s;
            let mut c = self.pow(z, q as u128);
            let mut t = self.pow(a, q as u128);
            let mut r = self.pow(a, ((q + 1) / 2) as u128);
            while t != 1 {
                let mut i = 0u32;
                let mut tt = t;
                while tt != 1 {
                    tt = self.mul(tt, tt);
                    i += 1;
                }
                let b = self.pow(c, 1u128 << (m - i - 1));
                m = i;
                c = self.mul(b, b);
                t = self.mul(t, c);
                r = self.mul(r, b);
            }
            r
        };
        debug_assert_eq!(self.mul(r, r), a);
        Some(r.min(p - r))
    }
}

/// Univariate polynomial over `Z_p`, coefficients lowest degree first with
/// trailing zeros stripped (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: Fp,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(field: Fp, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { field, coeffs }
    }

    pub fn from_i64(field: Fp, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.reduce_i64(c)).collect())
    }

    pub fn zero(field: Fp) -> Self {
        FpPoly { field, coeffs: vec![] }
    }

    pub fn one(field: Fp) -> Self {
        Self::new(field, vec![1])
    }

    pub fn constant(field: Fp, c: u64) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial `x`.
    pub fn x(field: Fp) -> Self {
        Self::new(field, vec![0, 1])
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("field leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        FpPoly::new(
            self.field,
            self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect(),
        )
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::new(f, (0..n).map(|k| f.add(self.coeff(k), other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::new(f, (0..n).map(|k| f.sub(self.coeff(k), other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(f);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        FpPoly::new(f, out)
    }

    /// Euclidean division: `self = q·g + r` with `deg r < deg g`.
    pub fn divmod(&self, g: &FpPoly) -> Result<(FpPoly, FpPoly), GfpError> {
        if g.is_zero() {
            return Err(GfpError::DivisionByZero);
        }
        let f = self.field;
        let dg = g.degree().unwrap();
        let lead_inv = f.inv(g.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((FpPoly::zero(f), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dg];
        for k in (dg..rem.len()).rev() {
            let c = f.mul(rem[k], lead_inv);
            quot[k - dg] = c;
            if c != 0 {
                for (j, &gc) in g.coeffs.iter().enumerate() {
                    rem[k - dg + j] = f.sub(rem[k - dg + j], f.mul(c, gc));
                }
            }
        }
        Ok((FpPoly::new(f, quot), FpPoly::new(f, rem[..dg].to_vec())))
    }

    pub fn rem(&self, g: &FpPoly) -> Result<FpPoly, GfpError> {
        Ok(self.divmod(g)?.1)
    }

    /// Monic greatest common divisor. Panics if both inputs are zero.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.field);
        }
        let g = self.gcd(other);
        self.mul(other).divmod(&g).expect("gcd divides").0.monic()
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn derivative(&self) -> FpPoly {
        let f = self.field;
        FpPoly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| f.mul(k as u64 % f.modulus(), c))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &FpPoly) -> Result<FpPoly, GfpError> {
        let mut base = self.rem(m)?;
        let mut acc = FpPoly::one(self.field).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Factorization into monic irreducibles with multiplicities, sorted by
    /// (degree, coefficient sequence). The input must have degree ≥ 1.
    pub fn factor(&self) -> Result<Vec<(FpPoly, usize)>, GfpError> {
        if self.degree().unwrap_or(0) < 1 {
            return Err(GfpError::ConstantFactor);
        }
        let mut out: Vec<(FpPoly, usize)> = Vec::new();
        for (sqfree, mult) in squarefree_decomposition(&self.monic()) {
            for (prod, d) in distinct_degree(&sqfree) {
                for irr in equal_degree(&prod, d) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| {
            (a.0.coeffs.len(), &a.0.coeffs).cmp(&(b.0.coeffs.len(), &b.0.coeffs))
        });
        Ok(out)
    }
}

/// `f = Π gᵢ^{mᵢ}` with each `gᵢ` squarefree and the `gᵢ` pairwise coprime.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.field().modulus() as usize;
    let mut out = Vec::new();
    let d = f.derivative();
    if d.is_zero() {
        // f is a p-th power; over Z_p the p-th root keeps the coefficients.
        for (g, m) in squarefree_decomposition(&pth_root(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.divmod(&c).expect("gcd divides").0;
    let mut i = 1usize;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.divmod(&y).expect("gcd divides").0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(), i));
        }
        w = y;
        c = c.divmod(&w).expect("gcd divides").0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        for (g, m) in squarefree_decomposition(&pth_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.field().modulus() as usize;
    let coeffs: Vec<u64> = f.coeffs().iter().step_by(p).copied().collect();
    FpPoly::new(f.field(), coeffs)
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree; returns (product, degree) pairs.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let field = f.field();
    let p = field.modulus();
    let mut out = Vec::new();
    let mut g = f.clone();
    let x = FpPoly::x(field);
    let mut h = x.rem(&g).expect("nonzero");
    let mut d = 0usize;
    while g.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > g.degree().unwrap() {
            out.push((g.clone(), g.degree().unwrap()));
            break;
        }
        h = h.pow_mod(p as u128, &g).expect("nonzero");
        let gd = h.sub(&x).gcd(&g);
        if gd.degree().unwrap_or(0) > 0 {
            out.push((gd.clone(), d));
            g = g.divmod(&gd).expect("gcd divides").0;
            h = h.rem(&g).expect("nonzero");
        }
    }
    out
}

/// Deterministic equal-degree splitting: sweeps monic candidates of degree
/// 1, 2, … in lexicographic coefficient order. Candidates of degree < 2d
/// always suffice to separate two distinct irreducibles of degree d.
fn equal_degree(f: &FpPoly, d: usize) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.monic()];
    }
    let field = f.field();
    let p = field.modulus();
    for deg in 1..=n.max(2 * d - 1) {
        let mut counters = vec![0u64; deg];
        loop {
            let mut coeffs = counters.clone();
            coeffs.push(1);
            let h = FpPoly::new(field, coeffs);
            if let Some(w) = try_split(f, d, &h) {
                let rest = f.divmod(&w).expect("factor divides").0;
                let mut out = equal_degree(&w, d);
                out.extend(equal_degree(&rest, d));
                return out;
            }
            // advance the coefficient counter
            let mut k = 0;
            loop {
                if k == deg {
                    break;
                }
                counters[k] += 1;
                if counters[k] < p {
                    break;
                }
                counters[k] = 0;
                k += 1;
            }
            if k == deg {
                break;
            }
        }
    }
    unreachable!("equal-degree sweep exhausted without a split");
}

fn try_split(f: &FpPoly, d: usize, h: &FpPoly) -> Option<FpPoly> {
    let field = f.field();
    let p = field.modulus();
    let shared = h.gcd(f);
    if shared.degree().unwrap_or(0) > 0 && shared.degree() < f.degree() {
        return Some(shared);
    }
    let g = if p == 2 {
        // trace map T(h) = h + h² + … + h^{2^{d-1}}
        let mut t = h.rem(f).ok()?;
        let mut acc = t.clone();
        for _ in 1..d {
            t = t.mul(&t).rem(f).ok()?;
            acc = acc.add(&t);
        }
        acc
    } else {
        let e = (p as u128).pow(d as u32) / 2; // (p^d - 1)/2 for odd p
        let hp = h.pow_mod(e, f).ok()?;
        hp.sub(&FpPoly::one(field))
    };
    if g.is_zero() {
        return None;
    }
    let w = g.gcd(f);
    let dw = w.degree().unwrap_or(0);
    if dw > 0 && dw < f.degree().unwrap() {
        Some(w)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn fp(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn primality_checked() {
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(97).is_ok());
        assert_eq!(Fp::new(1), Err(GfpError::NotPrime(1)));
        assert_eq!(Fp::new(91), Err(GfpError::NotPrime(91)));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(fp(7).inv(1).unwrap(), 1);
        // exhaustive check: 2·3 = 6 ≡ 1 (mod 5)
        assert_eq!(fp(5).inv(2).unwrap(), 3);
        // (−1)·(−1) = 1 (mod 13)
        assert_eq!(fp(13).inv(12).unwrap(), 12);
        assert!(matches!(fp(7).inv(0), Err(GfpError::NotInvertible(0, 7))));
    }

    #[test]
    fn inverse_involution() {
        for p in [2u64, 3, 5, 7, 13, 97] {
            let f = fp(p);
            for a in 1..p {
                let i = f.inv(a).unwrap();
                assert_eq!(f.mul(a, i), 1);
                assert_eq!(f.inv(i).unwrap(), a);
            }
        }
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(fp(13).sqrt(0), Some(0));
        // squares mod 13: 4² = 16 ≡ 3, and 4 < 9
        assert_eq!(fp(13).sqrt(3), Some(4));
        // −2 ≡ 9 (mod 11): 3² = 9
        assert_eq!(fp(11).sqrt(9), Some(3));
        assert_eq!(fp(13).sqrt(2), None);
    }

    #[test]
    fn sqrt_counts_by_exhaustion() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 43, 47, 73, 97] {
            let f = fp(p);
            let mut with_root = 0u64;
            for a in 0..p {
                if let Some(r) = f.sqrt(a) {
                    with_root += 1;
                    assert_eq!(f.mul(r, r), a);
                    assert!(r <= p - r || a == 0);
                }
            }
            assert_eq!(with_root, (p + 1) / 2);
        }
    }

    #[test]
    fn divmod_examples() {
        let f = fp(5);
        let num = FpPoly::from_i64(f, &[-1, 0, 1]); // x² − 1
        let den = FpPoly::from_i64(f, &[-1, 1]); // x − 1
        let (q, r) = num.divmod(&den).unwrap();
        assert_eq!(q, FpPoly::from_i64(f, &[1, 1]));
        assert!(r.is_zero());

        let f7 = fp(7);
        let (q, r) = FpPoly::from_i64(f7, &[0, 0, 0, 1])
            .divmod(&FpPoly::x(f7))
            .unwrap();
        assert_eq!(q, FpPoly::from_i64(f7, &[0, 0, 1]));
        assert!(r.is_zero());

        // (x⁴ − 1) / (x² + 1) = x² − 1; verified by multiplying back
        let num = FpPoly::from_i64(f7, &[-1, 0, 0, 0, 1]);
        let den = FpPoly::from_i64(f7, &[1, 0, 1]);
        let (q, r) = num.divmod(&den).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&den), num);
        assert_eq!(q, FpPoly::from_i64(f7, &[-1, 0, 1]));

        assert!(matches!(
            FpPoly::x(f7).divmod(&FpPoly::zero(f7)),
            Err(GfpError::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_examples() {
        let f = fp(5);
        let g = FpPoly::from_i64(f, &[-2, 2]); // 2x − 2, gcd with 0 is monic x − 1
        assert_eq!(g.gcd(&FpPoly::zero(f)), FpPoly::from_i64(f, &[-1, 1]));
        let a = FpPoly::from_i64(f, &[-1, 0, 1]);
        let b = FpPoly::from_i64(f, &[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        // Euclid by hand: gcd(x⁴ − 1, x³ − 1) = x − 1 over Z_7
        let f7 = fp(7);
        let a = FpPoly::from_i64(f7, &[-1, 0, 0, 0, 1]);
        let b = FpPoly::from_i64(f7, &[-1, 0, 0, 1]);
        assert_eq!(a.gcd(&b), FpPoly::from_i64(f7, &[-1, 1]));
    }

    #[test]
    fn factor_x4_minus_1_mod_5() {
        let f = fp(5);
        let poly = FpPoly::from_i64(f, &[-1, 0, 0, 0, 1]);
        let factors = poly.factor().unwrap();
        assert_eq!(factors.len(), 4);
        for (g, m) in &factors {
            assert_eq!(*m, 1);
            assert_eq!(g.degree(), Some(1));
        }
        let roots: Vec<u64> = factors.iter().map(|(g, _)| f.neg(g.coeff(0))).collect();
        let mut sorted = roots.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3, 4]);
    }

    #[test]
    fn factor_x3_minus_1_mod_5() {
        let f = fp(5);
        let poly = FpPoly::from_i64(f, &[-1, 0, 0, 1]);
        let factors = poly.factor().unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0, FpPoly::from_i64(f, &[-1, 1]));
        assert_eq!(factors[1].0, FpPoly::from_i64(f, &[1, 1, 1]));
    }

    #[test]
    fn factor_power_mod_2() {
        let f = fp(2);
        // (x − 1)⁴ = x⁴ + … over Z_2
        let lin = FpPoly::from_i64(f, &[1, 1]);
        let pow4 = lin.mul(&lin).mul(&lin).mul(&lin);
        let factors = pow4.factor().unwrap();
        assert_eq!(factors, vec![(lin, 4)]);
    }

    #[test]
    fn factor_constant_rejected() {
        let f = fp(5);
        assert!(matches!(
            FpPoly::constant(f, 3).factor(),
            Err(GfpError::ConstantFactor)
        ));
    }

    #[test]
    fn factor_remultiplies_random() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for p in [2u64, 3, 5, 7, 13] {
            let f = fp(p);
            for _ in 0..1000 {
                let deg = rng.gen_range(1..=9);
                let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
                coeffs.push(rng.gen_range(1..p.max(2)));
                let poly = FpPoly::new(f, coeffs);
                if poly.degree().unwrap_or(0) < 1 {
                    continue;
                }
                let factors = poly.factor().unwrap();
                let mut prod = FpPoly::one(f);
                for (g, m) in &factors {
                    assert!(g.is_monic());
                    for _ in 0..*m {
                        prod = prod.mul(g);
                    }
                }
                assert_eq!(prod, poly.monic());
            }
        }
    }

    #[test]
    fn reported_factors_are_irreducible() {
        // gcd(g, x^{p^k} − x) must be trivial for k < deg g and equal g at k = deg g.
        let mut rng = StdRng::seed_from_u64(0xfac);
        for p in [2u64, 3, 5, 7] {
            let f = fp(p);
            for _ in 0..40 {
                let deg = rng.gen_range(2..=8);
                let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
                coeffs.push(1);
                let poly = FpPoly::new(f, coeffs);
                for (g, _) in poly.factor().unwrap() {
                    let dg = g.degree().unwrap();
                    let x = FpPoly::x(f);
                    let mut h = x.rem(&g).unwrap();
                    for k in 1..=dg {
                        h = h.pow_mod(p as u128, &g).unwrap();
                        let w = h.sub(&x).gcd(&g);
                        if k < dg {
                            assert_eq!(w.degree().unwrap_or(0), 0, "premature root field");
                        } else {
                            assert_eq!(w, g.monic());
                        }
                    }
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn poly_ring_identities(pa in proptest::sample::select(vec![2u64,3,5,13]),
                                xs in proptest::collection::vec(0u64..13, 0..6),
                                ys in proptest::collection::vec(0u64..13, 0..6)) {
            let f = fp(pa);
            let a = FpPoly::new(f, xs);
            let b = FpPoly::new(f, ys);
            proptest::prop_assert_eq!(a.mul(&b), b.mul(&a));
            proptest::prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            if !b.is_zero() {
                let (q, r) = a.divmod(&b).unwrap();
                proptest::prop_assert_eq!(q.mul(&b).add(&r), a);
            }
        }
    }
}

//! Arithmetic in GF(p^m), table-driven for fields up to 2^16 elements.
//!
//! Elements are dense integer indices encoding the polynomial residue in
//! base p. Multiplication, inversion and powering go through log/antilog
//! tables built once at construction; addition is digitwise mod p. The
//! reduction polynomial is always the lexicographically smallest monic
//! irreducible of the requested degree, so every downstream group
//! construction is bit-reproducible.

use crate::error::{Error, Result};

/// Maximum field size (desk-scale guard).
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// A field element, as its dense index in `[0, p^m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(pub u32);

/// A constructed field GF(p^m).
#[derive(Debug, Clone)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    /// p^m
    pub size: u64,
    /// Coefficients of the monic reduction polynomial, constant term first,
    /// length m+1. For m = 1 this is `[p-th root poly] x - 0`, i.e. `x`.
    pub reduction_poly: Vec<u64>,
    /// antilog[e] = g^e for a fixed primitive element g, length size-1.
    antilog: Vec<u32>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial helpers over GF(p); coefficient vectors are constant-term
/// first with no trailing-zero guarantees (callers trim when needed).
fn poly_trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of a by the monic polynomial b.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1, "divisor must be monic");
    while r.len() - 1 >= db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        if dr < db {
            break;
        }
        let lead = r[dr];
        if lead != 0 {
            for i in 0..=db {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - lead * b[i] % p) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

/// Monic degree-m polynomial from its enumeration index t in [0, p^m):
/// coefficient i of x^i is the i-th base-p digit of t. Ascending t is
/// lexicographic order on (c_{m-1}, ..., c_0).
fn poly_from_index(t: u64, m: u32, p: u64) -> Vec<u64> {
    let mut c = vec![0u64; m as usize + 1];
    c[m as usize] = 1;
    let mut v = t;
    for coeff in c.iter_mut().take(m as usize) {
        *coeff = v % p;
        v /= p;
    }
    c
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    // trial division by every monic polynomial of degree 1..=m/2
    for d in 1..=(m / 2) {
        let count = p.pow(d as u32);
        for t in 0..count {
            let g = poly_from_index(t, d as u32, p);
            let r = poly_rem(f, &g, p);
            if r.len() == 1 && r[0] == 0 {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Build GF(p^m) with the lexicographically smallest monic irreducible
    /// reduction polynomial of degree m.
    pub fn new(p: u64, m: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if m < 1 {
            return Err(Error::InvalidParams("field exponent must be >= 1".into()));
        }
        let size = p.checked_pow(m).filter(|&s| s <= MAX_FIELD_SIZE).ok_or(
            Error::SizeExceeded(p.saturating_pow(m)),
        )?;
        let reduction_poly = if m == 1 {
            vec![0, 1]
        } else {
            (0..size)
                .map(|t| poly_from_index(t, m, p))
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        let mut spec = FieldSpec {
            p,
            m,
            size,
            reduction_poly,
            antilog: Vec::new(),
            log: Vec::new(),
        };
        spec.build_tables();
        Ok(spec)
    }

    fn digits(&self, a: FieldElem) -> Vec<u64> {
        let mut v = a.0 as u64;
        let mut out = vec![0u64; self.m as usize];
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn from_digits(&self, d: &[u64]) -> FieldElem {
        let mut v = 0u64;
        for &c in d.iter().rev() {
            v = v * self.p + c % self.p;
        }
        FieldElem(v as u32)
    }

    /// Multiplication by polynomial arithmetic mod the reduction polynomial.
    /// Used to seed the log tables; `mul` itself is table-driven.
    fn mul_poly(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let prod = poly_mul(&self.digits(a), &self.digits(b), self.p);
        let mut r = poly_rem(&prod, &self.reduction_poly, self.p);
        r.resize(self.m as usize, 0);
        self.from_digits(&r)
    }

    fn build_tables(&mut self) {
        let n = self.size as usize;
        // first element (in index order) of full multiplicative order
        'outer: for g in 1..n as u32 {
            let mut antilog = Vec::with_capacity(n - 1);
            let mut log = vec![0u32; n];
            let mut x = FieldElem(1);
            for e in 0..(n - 1) as u32 {
                if x.0 == 1 && e > 0 {
                    continue 'outer; // order of g divides e < n-1
                }
                antilog.push(x.0);
                log[x.0 as usize] = e;
                x = self.mul_poly(x, FieldElem(g));
            }
            if x.0 == 1 {
                self.antilog = antilog;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.size as u32).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.m == 1 {
            return FieldElem(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let d: Vec<u64> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        let order = self.size - 1;
        let e = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % order;
        FieldElem(self.antilog[e as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.size - 1;
        let e = (order - self.log[a.0 as usize] as u64) % order;
        Ok(FieldElem(self.antilog[e as usize]))
    }

    pub fn pow(&self, a: FieldElem, k: u64) -> FieldElem {
        if a.0 == 0 {
            return if k == 0 { FieldElem(1) } else { FieldElem(0) };
        }
        let order = self.size - 1;
        let e = (self.log[a.0 as usize] as u64 * (k % order)) % order;
        FieldElem(self.antilog[e as usize])
    }

    /// The twisting automorphism x -> x^{2^{n+1}} of GF(2^{2n+1}); applying
    /// it twice squares.
    pub fn suzuki_twist(&self, a: FieldElem) -> Result<FieldElem> {
        if self.p != 2 || self.m < 3 || self.m % 2 == 0 {
            return Err(Error::WrongCharacteristic);
        }
        let n = (self.m - 1) / 2;
        Ok(self.pow(a, 1u64 << (n + 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: schoolbook polynomial multiplication followed by
    /// long division, sharing no code with the table path.
    fn oracle_mul(f: &FieldSpec, a: u32, b: u32) -> u32 {
        let p = f.p;
        let m = f.m as usize;
        let dig = |mut v: u64| {
            let mut d = vec![0u64; m];
            for x in d.iter_mut() {
                *x = v % p;
                v /= p;
            }
            d
        };
        let (da, db) = (dig(a as u64), dig(b as u64));
        let mut prod = vec![0u64; 2 * m - 1];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        // reduce top-down by the monic reduction polynomial
        for deg in (m..2 * m - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &rc) in f.reduction_poly.iter().take(m).enumerate() {
                let idx = deg - m + i;
                prod[idx] = (prod[idx] + p - c * rc % p) % p;
            }
        }
        let mut v = 0u64;
        for &c in prod[..m].iter().rev() {
            v = v * p + c;
        }
        v as u32
    }

    #[test]
    fn gf2_trivial() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f.size, 2);
        assert_eq!(f.add(FieldElem(1), FieldElem(1)), FieldElem(0));
    }

    #[test]
    fn gf8_reduction_poly_is_lex_smallest() {
        // enumerate monic degree-3 polys over GF(2) in lex order and find
        // the first with no factor of degree <= 1 (degree 3: root test works)
        let mut expected = None;
        'poly: for t in 0u64..8 {
            let c0 = t & 1;
            let c1 = (t >> 1) & 1;
            let c2 = (t >> 2) & 1;
            for x in 0u64..2 {
                let val = (c0 + c1 * x + c2 * x * x + x * x * x) % 2;
                if val == 0 {
                    continue 'poly;
                }
            }
            expected = Some(vec![c0, c1, c2, 1]);
            break;
        }
        let f = FieldSpec::new(2, 3).unwrap();
        // x^3 + x + 1
        assert_eq!(expected.unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(f.reduction_poly, vec![1, 1, 0, 1]);
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(FieldSpec::new(4, 1), Err(Error::NonPrime(4))));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(FieldSpec::new(2, 17), Err(Error::SizeExceeded(_))));
    }

    #[test]
    fn gf8_mul_matches_polynomial_oracle() {
        let f = FieldSpec::new(2, 3).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(
                    f.mul(FieldElem(a), FieldElem(b)).0,
                    oracle_mul(&f, a, b),
                    "mul({a},{b})"
                );
            }
        }
    }

    #[test]
    fn gf9_and_gf49_mul_match_oracle() {
        for (p, m) in [(3u64, 2u32), (7, 2)] {
            let f = FieldSpec::new(p, m).unwrap();
            for a in 0..f.size as u32 {
                for b in 0..f.size as u32 {
                    assert_eq!(f.mul(FieldElem(a), FieldElem(b)).0, oracle_mul(&f, a, b));
                }
            }
        }
    }

    #[test]
    fn gf7_inverse() {
        let f = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f.inv(FieldElem(3)).unwrap(), FieldElem(5));
        assert!(matches!(f.inv(FieldElem(0)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn multiplicative_group_cyclic() {
        for (p, m) in [(2u64, 3u32), (3, 2), (5, 2), (2, 5), (13, 1)] {
            let f = FieldSpec::new(p, m).unwrap();
            let order = f.size - 1;
            // find a generator by scanning
            let gen = (1..f.size as u32).find(|&g| {
                let mut x = FieldElem(1);
                for _ in 0..order - 1 {
                    x = f.mul(x, FieldElem(g));
                    if x.0 == 1 {
                        return false;
                    }
                }
                f.mul(x, FieldElem(g)).0 == 1
            });
            assert!(gen.is_some(), "GF({}^{}) has a primitive element", p, m);
        }
    }

    #[test]
    fn frobenius_is_automorphism() {
        for (p, m) in [(2u64, 3u32), (3, 2), (2, 5)] {
            let f = FieldSpec::new(p, m).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let lhs = f.pow(f.add(a, b), p);
                    let rhs = f.add(f.pow(a, p), f.pow(b, p));
                    assert_eq!(lhs, rhs);
                    let lhs = f.pow(f.mul(a, b), p);
                    let rhs = f.mul(f.pow(a, p), f.pow(b, p));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn suzuki_twist_squares_when_applied_twice() {
        for m in [3u32, 5] {
            let f = FieldSpec::new(2, m).unwrap();
            assert_eq!(f.suzuki_twist(FieldElem(0)).unwrap(), FieldElem(0));
            assert_eq!(f.suzuki_twist(FieldElem(1)).unwrap(), FieldElem(1));
            for a in f.elements() {
                let twice = f.suzuki_twist(f.suzuki_twist(a).unwrap()).unwrap();
                assert_eq!(twice, f.mul(a, a));
            }
        }
        assert!(FieldSpec::new(2, 4)
            .unwrap()
            .suzuki_twist(FieldElem(1))
            .is_err());
        assert!(FieldSpec::new(3, 3)
            .unwrap()
            .suzuki_twist(FieldElem(1))
            .is_err());
    }

    #[test]
    fn char2_add_self_is_zero() {
        let f = FieldSpec::new(2, 3).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, a), FieldElem(0));
        }
    }
}

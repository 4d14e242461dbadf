//! Finite fields with elements encoded as `u32`.
//!
//! [`PrimeField`] is GF(p) with plain modular arithmetic. [`FiniteField`] is
//! GF(p^k): an element `a = Σ a_i p^i` stands for the polynomial
//! `Σ a_i x^i` modulo a primitive polynomial of degree `k`, and
//! multiplication goes through discrete log tables. With `k = 1` it is the
//! prime field again.
//!
//! Graded dimensions of `K[Δ]/ℓ` and socles do not change under field
//! extension, so small characteristics are handled over a large extension,
//! where random forms are generic with high probability.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Scalar arithmetic shared by the matrix routines.
pub trait Field: Copy + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn characteristic(&self) -> u32;
    /// Number of elements; elements are `0..order`.
    fn order(&self) -> u64;
    fn add(self, a: u32, b: u32) -> u32;
    fn sub(self, a: u32, b: u32) -> u32;
    fn neg(self, a: u32) -> u32;
    fn mul(self, a: u32, b: u32) -> u32;
    /// Inverse of a nonzero element.
    fn inv(self, a: u32) -> u32;
    /// Image of an integer under `Z → K`.
    fn residue(self, x: i64) -> u32;
}

/// The prime field GF(p), `p < 2^31`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField {
            p: Self::DEFAULT_CHARACTERISTIC,
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

impl Field for PrimeField {
    fn characteristic(&self) -> u32 {
        self.p
    }

    fn order(&self) -> u64 {
        self.p as u64
    }

    #[inline]
    fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p as u64 - 2)
    }

    fn residue(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut q = 2u64;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Largest extension order we build log tables for.
const MAX_EXTENSION_ORDER: u64 = 1 << 20;
/// [`FiniteField::generic`] extends until the field has at least this many
/// elements.
const GENERIC_MIN_ORDER: u64 = 1 << 14;

struct LogTables {
    /// exp[i] = g^i for 0 <= i < q-1
    exp: Vec<u32>,
    /// log[a] for a != 0; log[0] unused
    log: Vec<u32>,
    /// plus_one[i] = 1 + g^i (Zech logarithm, stored as an element)
    plus_one: Vec<u32>,
    /// digits of the primitive polynomial, constant term first, monic term omitted
    modulus: Vec<u32>,
}

/// GF(p^k). Cheap to copy; extension tables are built once per `(p, k)`
/// and shared for the lifetime of the process.
#[derive(Copy, Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    tables: Option<&'static LogTables>,
}

impl FiniteField {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        if k <= 1 {
            return Ok(prime.into());
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_EXTENSION_ORDER).ok_or_else(|| {
            Error::Invariant(format!("GF({p}^{k}) exceeds the supported order {MAX_EXTENSION_ORDER}"))
        })?;
        Ok(FiniteField {
            p,
            k,
            q: q as u32,
            tables: Some(tables_for(p, k)),
        })
    }

    /// A field of characteristic `p` with at least 2^14 elements: GF(p)
    /// itself when `p` is that large, otherwise the smallest such extension.
    pub fn generic(p: u32) -> Result<Self> {
        PrimeField::new(p)?;
        let mut k = 1;
        let mut q = p as u64;
        while q < GENERIC_MIN_ORDER {
            k += 1;
            q *= p as u64;
        }
        Self::new(p, k)
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn prime_field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    /// Coefficients of the defining polynomial, constant term first
    /// (monic leading term omitted); empty for a prime field.
    pub fn modulus(&self) -> &[u32] {
        self.tables.map(|t| t.modulus.as_slice()).unwrap_or(&[])
    }

    #[cfg(test)]
    fn digits(&self, mut a: u32) -> impl Iterator<Item = u32> + '_ {
        (0..self.k).map(move |_| {
            let d = a % self.p;
            a /= self.p;
            d
        })
    }

    #[cfg(test)]
    fn encode_digits(&self, digits: impl Iterator<Item = u32>) -> u32 {
        let mut acc = 0u32;
        let mut place = 1u32;
        for d in digits {
            acc += d * place;
            place = place.wrapping_mul(self.p);
        }
        acc
    }
}

impl From<PrimeField> for FiniteField {
    fn from(f: PrimeField) -> Self {
        FiniteField {
            p: f.p,
            k: 1,
            q: f.p,
            tables: None,
        }
    }
}

impl Default for FiniteField {
    fn default() -> Self {
        PrimeField::default().into()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        (self.p, self.k) == (other.p, other.k)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.k)
        }
    }
}

impl Serialize for FiniteField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FiniteField", 2)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("k", &self.k)?;
        st.end()
    }
}

impl Field for FiniteField {
    fn characteristic(&self) -> u32 {
        self.p
    }

    fn order(&self) -> u64 {
        self.q as u64
    }

    #[inline]
    fn add(self, a: u32, b: u32) -> u32 {
        match self.tables {
            None => self.prime_field().add(a, b),
            Some(_) if self.p == 2 => a ^ b,
            Some(t) => {
                // a + b = a (1 + b/a)
                if a == 0 {
                    return b;
                }
                if b == 0 {
                    return a;
                }
                let m = self.q - 1;
                let la = t.log[a as usize];
                let s = t.plus_one[((t.log[b as usize] + m - la) % m) as usize];
                if s == 0 {
                    0
                } else {
                    t.exp[((la + t.log[s as usize]) % m) as usize]
                }
            }
        }
    }

    #[inline]
    fn sub(self, a: u32, b: u32) -> u32 {
        match self.tables {
            None => self.prime_field().sub(a, b),
            Some(_) if self.p == 2 => a ^ b,
            Some(_) => self.add(a, self.neg(b)),
        }
    }

    #[inline]
    fn neg(self, a: u32) -> u32 {
        match self.tables {
            None => self.prime_field().neg(a),
            Some(_) if self.p == 2 => a,
            Some(t) => {
                // -1 = g^((q-1)/2) in odd characteristic
                if a == 0 {
                    return 0;
                }
                let m = self.q - 1;
                t.exp[((t.log[a as usize] + m / 2) % m) as usize]
            }
        }
    }

    #[inline]
    fn mul(self, a: u32, b: u32) -> u32 {
        match self.tables {
            None => self.prime_field().mul(a, b),
            Some(t) => {
                if a == 0 || b == 0 {
                    return 0;
                }
                let s = t.log[a as usize] as u64 + t.log[b as usize] as u64;
                t.exp[(s % (self.q as u64 - 1)) as usize]
            }
        }
    }

    fn inv(self, a: u32) -> u32 {
        match self.tables {
            None => self.prime_field().inv(a),
            Some(t) => {
                debug_assert!(a != 0);
                let m = self.q - 1;
                t.exp[((m - t.log[a as usize]) % m) as usize]
            }
        }
    }

    fn residue(self, x: i64) -> u32 {
        // constants are the degree-0 polynomials, encoded as their digit
        x.rem_euclid(self.p as i64) as u32
    }
}

fn tables_for(p: u32, k: u32) -> &'static LogTables {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), &'static LogTables>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry((p, k))
        .or_insert_with(|| Box::leak(Box::new(build_tables(p, k))))
}

/// Searches monic degree-`k` polynomials in increasing encoding order for
/// one in which `x` has multiplicative order `p^k - 1`.
fn build_tables(p: u32, k: u32) -> LogTables {
    let q = p.pow(k);
    let k = k as usize;
    for code in 0..q {
        let mut modulus = Vec::with_capacity(k);
        let mut c = code;
        for _ in 0..k {
            modulus.push(c % p);
            c /= p;
        }
        if modulus[0] == 0 {
            continue;
        }
        if let Some((exp, log)) = powers_of_x(p, &modulus, q) {
            let plus_one = exp.iter().map(|&e| e - e % p + (e % p + 1) % p).collect();
            return LogTables {
                exp,
                log,
                plus_one,
                modulus,
            };
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

fn powers_of_x(p: u32, modulus: &[u32], q: u32) -> Option<(Vec<u32>, Vec<u32>)> {
    let k = modulus.len();
    let encode = |digits: &[u32]| digits.iter().rev().fold(0u32, |acc, &d| acc * p + d);
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut log = vec![u32::MAX; q as usize];
    let mut cur = vec![0u32; k];
    cur[0] = 1;
    for i in 0..q - 1 {
        let code = encode(&cur);
        if log[code as usize] != u32::MAX {
            return None;
        }
        log[code as usize] = i;
        exp.push(code);
        // multiply by x: shift up, then x^k = -Σ modulus_i x^i
        let top = cur[k - 1];
        for j in (1..k).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..k {
                cur[j] = (cur[j] + (p - top) * modulus[j] % p) % p;
            }
        }
    }
    // back to 1 after q-1 steps
    (encode(&cur) == 1).then_some((exp, log))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = gf(7);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.residue(-1), 6);
        assert_eq!(PrimeField::default().characteristic(), 32003);
        assert!(PrimeField::new(32003).is_ok());
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(32004), Err(Error::NotPrime(32004)));
        for p in [2, 3, 5, 32003] {
            let f = gf(p);
            for a in 1..p.min(200) {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn gf4_multiplication_table() {
        // GF(4) = GF(2)[x]/(x^2 + x + 1); 2 = x, 3 = x + 1
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1]);
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.mul(3, 3), 2);
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.inv(2), 3);
    }

    #[test]
    fn extension_field_axioms() {
        for (p, k) in [(2, 5), (3, 3), (5, 2)] {
            let f = FiniteField::new(p, k).unwrap();
            let q = f.order() as u32;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.sub(a, a), 0);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in (0..q).step_by(7) {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in (0..q).step_by(11) {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            // the prime subfield embeds as the constants
            let pf = gf(p);
            for a in 0..p {
                for b in 0..p {
                    assert_eq!(f.mul(a, b), pf.mul(a, b));
                    assert_eq!(f.add(a, b), pf.add(a, b));
                }
            }
        }
    }

    #[test]
    fn addition_matches_coefficientwise_sums() {
        for (p, k) in [(3, 3), (5, 2), (7, 2), (3, 9)] {
            let f = FiniteField::new(p, k).unwrap();
            let step = (f.q / 400).max(1) as usize;
            for a in (0..f.q).step_by(step) {
                for b in (0..f.q).step_by(step + 1) {
                    let sum = f.encode_digits(f.digits(a).zip(f.digits(b)).map(|(x, y)| (x + y) % p));
                    assert_eq!(f.add(a, b), sum, "GF({p}^{k}): {a} + {b}");
                }
                let neg = f.encode_digits(f.digits(a).map(|x| (p - x) % p));
                assert_eq!(f.neg(a), neg);
                assert_eq!(f.sub(a, a), 0);
            }
        }
    }

    #[test]
    fn generic_choice() {
        assert_eq!(FiniteField::generic(32003).unwrap().degree(), 1);
        let two = FiniteField::generic(2).unwrap();
        assert_eq!((two.characteristic(), two.order()), (2, 1 << 14));
        let three = FiniteField::generic(3).unwrap();
        assert_eq!(three.order(), 19683);
        assert_eq!(three.to_string(), "GF(3^9)");
        assert!(FiniteField::generic(4).is_err());
    }
}

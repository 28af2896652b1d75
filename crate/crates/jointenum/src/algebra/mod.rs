//! Exact arithmetic for the code alphabets: prime and extension fields
//! F_(p^e), rings Z_k, absolute traces, the canonical additive characters and
//! the cyclotomic integers that carry character sums.

mod cyclotomic;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported alphabet; operation tables are precomputed densely.
pub const MAX_ALPHABET: usize = 256;

/// An alphabet element, identified by its canonical index.  Index 0 is the
/// additive identity.  For F_(p^e) with e > 1 the index encodes the
/// coefficient vector base p, least significant coefficient first.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elem(pub u8);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Kind {
    /// F_(p^e); `modulus` holds the monic defining polynomial, low to high,
    /// length e+1 (for e = 1 it is x - 0, i.e. arithmetic is plain mod p).
    Field {
        p: u64,
        e: u32,
        modulus: Vec<u8>,
    },
    Ring {
        k: u64,
    },
}

/// A finite alphabet with total element order and dense exact operation
/// tables.  Immutable after construction; share via [`Arc`] across threads.
pub struct Alphabet {
    kind: Kind,
    m: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    /// Exponent t(a) with chi(a) = eta^t(a): the absolute trace for fields,
    /// the element itself for Z_k.
    char_exp: Vec<u8>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Field { p, e, .. } if *e == 1 => write!(f, "F_{p}"),
            Kind::Field { p, e, .. } => write!(f, "F_{{{p}^{e}}}"),
            Kind::Ring { k } => write!(f, "Z_{k}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over F_p, low-to-high coefficient vectors with no trailing
/// zeros; just enough machinery for the modulus checks and field tables.
mod fppoly {
    pub fn trim(mut v: Vec<u8>) -> Vec<u8> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn rem(a: &[u8], b: &[u8], p: u64) -> Vec<u8> {
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db] as u64, p);
        let mut r: Vec<u8> = a.to_vec();
        while r.len() > db {
            let da = r.len() - 1;
            let c = (r[da] as u64 * lead_inv) % p;
            if c != 0 {
                let shift = da - db;
                for (j, bc) in b.iter().enumerate() {
                    let sub = (c * *bc as u64) % p;
                    let idx = shift + j;
                    r[idx] = (((r[idx] as u64) + p - sub) % p) as u8;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
            if r.len() <= db {
                break;
            }
        }
        r
    }

    pub fn mul(a: &[u8], b: &[u8], p: u64) -> Vec<u8> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u8; a.len() + b.len() - 1];
        for (i, &ac) in a.iter().enumerate() {
            for (j, &bc) in b.iter().enumerate() {
                out[i + j] = (((out[i + j] as u64) + (ac as u64 * bc as u64)) % p) as u8;
            }
        }
        trim(out)
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        // p is prime and a != 0 mod p
        let mut result = 1u64;
        let mut base = a % p;
        let mut exp = p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        result
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(poly: &[u8], p: u64) -> bool {
        let deg = poly.len() - 1;
        if deg == 0 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        for d in 1..=deg / 2 {
            // enumerate monic degree-d polynomials by their d low coefficients
            let count = (p as u128).pow(d as u32);
            for code in 0..count {
                let mut divisor = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    divisor.push((c % p as u128) as u8);
                    c /= p as u128;
                }
                divisor.push(1);
                if rem(poly, &divisor, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl Alphabet {
    /// The field F_(p^e).  A defining polynomial (coefficients low to high,
    /// length e+1) is required for e > 1 and checked for irreducibility; it
    /// is normalised to be monic.
    pub fn field(p: u64, e: u32, modulus: Option<&[u64]>) -> Result<Arc<Alphabet>> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if e == 0 {
            return Err(Error::BadModulusDegree {
                expected: 1,
                got: 0,
            });
        }
        let m = (p as u128).pow(e);
        if m > MAX_ALPHABET as u128 {
            return Err(Error::AlphabetTooLarge {
                m: m as usize,
                cap: MAX_ALPHABET,
            });
        }
        let m = m as usize;

        let modpoly: Vec<u8> = if e == 1 {
            vec![0, 1]
        } else {
            let coeffs = modulus.ok_or(Error::BadModulusDegree {
                expected: e as usize + 1,
                got: 0,
            })?;
            if coeffs.len() != e as usize + 1 || coeffs[e as usize] % p == 0 {
                return Err(Error::BadModulusDegree {
                    expected: e as usize + 1,
                    got: coeffs.len(),
                });
            }
            let reduced: Vec<u8> = coeffs.iter().map(|&c| (c % p) as u8).collect();
            // make monic
            let lead = reduced[e as usize] as u64;
            let monic = if lead == 1 {
                reduced
            } else {
                let inv = {
                    let mut r = 1u64;
                    let mut b = lead;
                    let mut x = p - 2;
                    while x > 0 {
                        if x & 1 == 1 {
                            r = r * b % p;
                        }
                        b = b * b % p;
                        x >>= 1;
                    }
                    r
                };
                reduced
                    .iter()
                    .map(|&c| ((c as u64 * inv) % p) as u8)
                    .collect()
            };
            if !fppoly::is_irreducible(&monic, p) {
                return Err(Error::ReducibleModulus { p });
            }
            monic
        };

        // coefficient vectors, index = sum c_i p^i
        let vecs: Vec<Vec<u8>> = (0..m)
            .map(|idx| {
                let mut v = Vec::with_capacity(e as usize);
                let mut x = idx as u64;
                for _ in 0..e {
                    v.push((x % p) as u8);
                    x /= p;
                }
                v
            })
            .collect();
        let index_of = |poly: &[u8]| -> u8 {
            let mut idx = 0u64;
            for (i, &c) in poly.iter().enumerate() {
                idx += c as u64 * p.pow(i as u32);
            }
            idx as u8
        };

        let mut add = vec![0u8; m * m];
        let mut mul = vec![0u8; m * m];
        let mut neg = vec![0u8; m];
        for a in 0..m {
            let mut nv = vec![0u8; e as usize];
            for i in 0..e as usize {
                nv[i] = ((p - vecs[a][i] as u64) % p) as u8;
            }
            neg[a] = index_of(&nv);
            for b in 0..m {
                let mut sv = vec![0u8; e as usize];
                for i in 0..e as usize {
                    sv[i] = ((vecs[a][i] as u64 + vecs[b][i] as u64) % p) as u8;
                }
                add[a * m + b] = index_of(&sv);
                let prod = fppoly::rem(
                    &fppoly::mul(
                        &fppoly::trim(vecs[a].clone()),
                        &fppoly::trim(vecs[b].clone()),
                        p,
                    ),
                    &modpoly,
                    p,
                );
                let mut padded = prod;
                padded.resize(e as usize, 0);
                mul[a * m + b] = index_of(&padded);
            }
        }

        let mut alphabet = Alphabet {
            kind: Kind::Field {
                p,
                e,
                modulus: modpoly,
            },
            m,
            add,
            mul,
            neg,
            char_exp: vec![0; m],
        };
        for a in 0..m {
            let tr = alphabet.trace_raw(Elem(a as u8));
            debug_assert!((tr.0 as u64) < p, "trace landed outside the prime field");
            alphabet.char_exp[a] = tr.0;
        }
        Ok(Arc::new(alphabet))
    }

    /// The ring Z_k of integers modulo k, k >= 2.
    pub fn ring(k: u64) -> Result<Arc<Alphabet>> {
        if k < 2 {
            return Err(Error::ModulusTooSmall(k));
        }
        if k > MAX_ALPHABET as u64 {
            return Err(Error::AlphabetTooLarge {
                m: k as usize,
                cap: MAX_ALPHABET,
            });
        }
        let m = k as usize;
        let mut add = vec![0u8; m * m];
        let mut mul = vec![0u8; m * m];
        let mut neg = vec![0u8; m];
        for a in 0..m {
            neg[a] = ((k - a as u64) % k) as u8;
            for b in 0..m {
                add[a * m + b] = ((a + b) % m) as u8;
                mul[a * m + b] = ((a * b) % m) as u8;
            }
        }
        let char_exp = (0..m as u64).map(|a| a as u8).collect();
        Ok(Arc::new(Alphabet {
            kind: Kind::Ring { k },
            m,
            add,
            mul,
            neg,
            char_exp,
        }))
    }

    pub fn from_spec(spec: &AlphabetSpec) -> Result<Arc<Alphabet>> {
        match spec {
            AlphabetSpec::Field { p, e, modulus } => {
                Alphabet::field(*p, e.unwrap_or(1), modulus.as_deref())
            }
            AlphabetSpec::Ring { k } => Alphabet::ring(*k),
        }
    }

    pub fn to_spec(&self) -> AlphabetSpec {
        match &self.kind {
            Kind::Field { p, e, modulus } => AlphabetSpec::Field {
                p: *p,
                e: Some(*e),
                modulus: if *e > 1 {
                    Some(modulus.iter().map(|&c| c as u64).collect())
                } else {
                    None
                },
            },
            Kind::Ring { k } => AlphabetSpec::Ring { k: *k },
        }
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind, Kind::Field { .. })
    }

    /// The characteristic p for fields, the modulus k for rings.
    pub fn characteristic(&self) -> u64 {
        match &self.kind {
            Kind::Field { p, .. } => *p,
            Kind::Ring { k } => *k,
        }
    }

    pub fn extension_degree(&self) -> u32 {
        match &self.kind {
            Kind::Field { e, .. } => *e,
            Kind::Ring { .. } => 1,
        }
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn elem(&self, value: u64) -> Result<Elem> {
        if (value as usize) < self.m {
            Ok(Elem(value as u8))
        } else {
            Err(Error::SymbolOutOfRange { value, m: self.m })
        }
    }

    /// All elements in canonical order, 0 first.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.m as u16).map(|i| Elem(i as u8))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.index() * self.m + b.index()])
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.m + b.index()])
    }

    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Coefficient vector over F_p (length e) for field elements.
    pub fn coeff_vector(&self, a: Elem) -> Vec<u8> {
        match &self.kind {
            Kind::Field { p, e, .. } => {
                let mut v = Vec::with_capacity(*e as usize);
                let mut x = a.index() as u64;
                for _ in 0..*e {
                    v.push((x % p) as u8);
                    x /= p;
                }
                v
            }
            Kind::Ring { .. } => vec![a.0],
        }
    }

    fn trace_raw(&self, a: Elem) -> Elem {
        let Kind::Field { e, .. } = &self.kind else {
            unreachable!()
        };
        let p = self.characteristic();
        let mut acc = a;
        let mut pow = a;
        for _ in 1..*e {
            // pow <- pow^p
            let mut next = Elem(0);
            let mut base = pow;
            let mut exp = p;
            let mut first = true;
            while exp > 0 {
                if exp & 1 == 1 {
                    next = if first { base } else { self.mul(next, base) };
                    first = false;
                }
                base = self.mul(base, base);
                exp >>= 1;
            }
            pow = next;
            acc = self.add(acc, pow);
        }
        acc
    }

    /// Absolute trace Tr(a) = a + a^p + ... + a^(p^(e-1)), an element of the
    /// prime subfield (indices 0..p-1).  Errors on ring alphabets.
    pub fn trace(&self, a: Elem) -> Result<Elem> {
        match self.kind {
            Kind::Field { .. } => Ok(Elem(self.char_exp[a.index()])),
            Kind::Ring { .. } => Err(Error::NotAField),
        }
    }

    /// Order of the root of unity used by the canonical additive character:
    /// p for fields, k for Z_k.
    pub fn character_order(&self) -> usize {
        self.characteristic() as usize
    }

    /// Exponent t with chi(a) = eta^t.
    pub fn character_exponent(&self, a: Elem) -> usize {
        self.char_exp[a.index()] as usize
    }

    /// The canonical additive character: eta_p^Tr(a) for fields, eta_k^a for
    /// Z_k.  Satisfies chi(0) = 1 and chi(a+b) = chi(a)chi(b).
    pub fn character(&self, a: Elem) -> Cyclotomic {
        Cyclotomic::root_power(self.character_order(), self.character_exponent(a))
    }

    /// Standard inner product u.v = sum u_i v_i in the alphabet.
    pub fn dot(&self, u: &[Elem], v: &[Elem]) -> Elem {
        debug_assert_eq!(u.len(), v.len());
        let mut acc = Elem(0);
        for (&a, &b) in u.iter().zip(v) {
            acc = self.add(acc, self.mul(a, b));
        }
        acc
    }
}

/// JSON description of an alphabet:
/// `{"kind":"field","p":2,"e":2,"modulus":[1,1,1]}` (coefficients low to
/// high) or `{"kind":"ring","k":4}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlphabetSpec {
    Field {
        p: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        e: Option<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u64>>,
    },
    Ring {
        k: u64,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn f2() -> Arc<Alphabet> {
        Alphabet::field(2, 1, None).unwrap()
    }

    pub(crate) fn f4() -> Arc<Alphabet> {
        Alphabet::field(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn prime_field_f2() {
        let a = f2();
        assert_eq!(a.size(), 2);
        assert_eq!(a.add(Elem(1), Elem(1)), Elem(0));
        assert_eq!(a.mul(Elem(1), Elem(1)), Elem(1));
    }

    #[test]
    fn extension_field_f4() {
        let a = f4();
        assert_eq!(a.size(), 4);
        // t^2 = t + 1 with t = Elem(2), t+1 = Elem(3)
        assert_eq!(a.mul(Elem(2), Elem(2)), Elem(3));
        assert_eq!(a.mul(Elem(2), Elem(3)), Elem(1));
        // every nonzero element invertible
        for x in 1..4u8 {
            assert!((1..4u8).any(|y| a.mul(Elem(x), Elem(y)) == Elem(1)));
        }
    }

    #[test]
    fn ring_z4() {
        let a = Alphabet::ring(4).unwrap();
        assert_eq!(a.size(), 4);
        assert_eq!(a.add(Elem(3), Elem(2)), Elem(1));
        assert_eq!(a.mul(Elem(2), Elem(2)), Elem(0));
        assert_eq!(a.neg(Elem(1)), Elem(3));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            Alphabet::field(4, 1, None),
            Err(Error::NonPrime(4))
        ));
        // t^2 + 1 = (t+1)^2 over F_2
        assert!(matches!(
            Alphabet::field(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus { .. })
        ));
        assert!(matches!(Alphabet::ring(1), Err(Error::ModulusTooSmall(1))));
        assert!(matches!(
            Alphabet::field(2, 9, None),
            Err(Error::AlphabetTooLarge { .. })
        ));
    }

    #[test]
    fn trace_examples() {
        let f2 = f2();
        assert_eq!(f2.trace(Elem(1)).unwrap(), Elem(1));
        let f4 = f4();
        // Tr(t) = t + t^2 = t + (t+1) = 1
        assert_eq!(f4.trace(Elem(2)).unwrap(), Elem(1));
        assert_eq!(f4.trace(Elem(0)).unwrap(), Elem(0));
        assert!(Alphabet::ring(4).unwrap().trace(Elem(1)).is_err());
    }

    #[test]
    fn trace_is_linear() {
        for alph in [f4(), Alphabet::field(3, 2, Some(&[1, 0, 1])).unwrap()] {
            for a in alph.elements() {
                for b in alph.elements() {
                    let lhs = alph.trace(alph.add(a, b)).unwrap();
                    let rhs = alph.add(alph.trace(a).unwrap(), alph.trace(b).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn character_examples() {
        let f2 = f2();
        assert_eq!(f2.character(Elem(1)), Cyclotomic::root_power(2, 1));
        assert_eq!(
            f2.character(Elem(1)).as_rational(),
            Some(num_rational::BigRational::from_integer((-1).into()))
        );
        let z3 = Alphabet::ring(3).unwrap();
        assert_eq!(z3.character(Elem(2)), Cyclotomic::root_power(3, 2));
        let f4 = f4();
        assert_eq!(f4.character(Elem(2)), Cyclotomic::root_power(2, 1));
    }

    fn small_alphabets() -> Vec<Arc<Alphabet>> {
        let mut out = vec![
            f2(),
            Alphabet::field(3, 1, None).unwrap(),
            f4(),
            Alphabet::field(5, 1, None).unwrap(),
            Alphabet::field(2, 3, Some(&[1, 1, 0, 1])).unwrap(),
            Alphabet::field(3, 2, Some(&[1, 0, 1])).unwrap(),
            Alphabet::field(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap(),
            Alphabet::field(5, 2, Some(&[2, 0, 1])).unwrap(),
        ];
        for k in [2u64, 3, 4, 6, 8, 9, 12, 25] {
            out.push(Alphabet::ring(k).unwrap());
        }
        out
    }

    #[test]
    fn character_is_additive_homomorphism() {
        for alph in small_alphabets() {
            for a in alph.elements() {
                for b in alph.elements() {
                    let lhs = alph.character(alph.add(a, b));
                    let rhs = alph.character(a).mul(&alph.character(b));
                    assert_eq!(lhs, rhs, "chi not multiplicative on {alph:?}");
                }
                let unit = alph.character(a).mul(&alph.character(alph.neg(a)));
                assert_eq!(unit, Cyclotomic::one(alph.character_order()));
            }
            assert_eq!(
                alph.character(Elem(0)),
                Cyclotomic::one(alph.character_order())
            );
        }
    }

    #[test]
    fn character_orthogonality() {
        // sum over b of chi(ab) is m for a = 0 and vanishes otherwise
        for alph in small_alphabets() {
            for a in alph.elements() {
                let mut sum = Cyclotomic::zero(alph.character_order());
                for b in alph.elements() {
                    sum = sum.add(&alph.character(alph.mul(a, b)));
                }
                if a == Elem(0) {
                    assert_eq!(
                        sum,
                        Cyclotomic::from_integer(alph.character_order(), alph.size() as i64)
                    );
                } else {
                    assert!(sum.is_zero(), "orthogonality fails on {alph:?} at {a:?}");
                }
            }
        }
    }

    #[test]
    fn spec_round_trip() {
        for alph in small_alphabets() {
            let spec = alph.to_spec();
            let back = Alphabet::from_spec(&spec).unwrap();
            assert_eq!(*back, *alph);
        }
        let json = r#"{"kind":"field","p":2,"e":2,"modulus":[1,1,1]}"#;
        let spec: AlphabetSpec = serde_json::from_str(json).unwrap();
        let alph = Alphabet::from_spec(&spec).unwrap();
        assert_eq!(alph.size(), 4);
    }
}

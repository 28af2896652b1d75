use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Element of the group ring `Q[x]/(x^m - 1)`, read as a combination of powers
/// of the m-th root of unity.  Two representatives denote the same algebraic
/// number exactly when their difference vanishes modulo the m-th cyclotomic
/// polynomial, so equality and zero tests go through that reduction.
#[derive(Clone)]
pub struct Cyclotomic {
    order: usize,
    coeffs: Vec<BigRational>,
}

fn phi_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (low to high) of the m-th cyclotomic polynomial, computed by
/// dividing x^m - 1 by the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_polynomial(m: usize) -> Arc<Vec<BigInt>> {
    assert!(m >= 1);
    if let Some(hit) = phi_cache().lock().unwrap().get(&m) {
        return hit.clone();
    }
    let phi = if m == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        // x^m - 1
        let mut num = vec![BigInt::zero(); m + 1];
        num[0] = BigInt::from(-1);
        num[m] = BigInt::one();
        for d in 1..m {
            if m.is_multiple_of(d) {
                num = int_poly_div_exact(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    let arc = Arc::new(phi);
    phi_cache().lock().unwrap().insert(m, arc.clone());
    arc
}

/// Exact division of integer polynomials; `den` must be monic and divide `num`.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        let shift = i - dd;
        for (j, dc) in den.iter().enumerate().take(dd) {
            let sub = &c * dc;
            rem[shift + j] -= sub;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

impl Cyclotomic {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1);
        Cyclotomic {
            order,
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::root_power(order, 0)
    }

    /// The power eta^j of the primitive order-th root of unity.
    pub fn root_power(order: usize, j: usize) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[j % order] = BigRational::one();
        z
    }

    pub fn from_rational(order: usize, value: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = value;
        z
    }

    pub fn from_integer(order: usize, value: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(value)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic {
            order: self.order,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cyclic convolution: multiplication in `Q[x]/(x^m - 1)`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        let m = self.order;
        let mut coeffs = vec![BigRational::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[(i + j) % m] += a * b;
            }
        }
        Cyclotomic {
            order: self.order,
            coeffs,
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Complex conjugate: eta^j goes to eta^(m-j).
    pub fn conjugate(&self) -> Self {
        let m = self.order;
        let mut coeffs = vec![BigRational::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[(m - j) % m] = c.clone();
        }
        Cyclotomic { order: m, coeffs }
    }

    /// Remainder after division by the cyclotomic polynomial of this order,
    /// low-to-high, trailing zeros trimmed.  This is the canonical form on the
    /// power basis 1, eta, ..., eta^(phi(m)-1).
    pub fn reduced(&self) -> Vec<BigRational> {
        let phi = cyclotomic_polynomial(self.order);
        let dd = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut rem[i], BigRational::zero());
            let shift = i - dd;
            for (j, pc) in phi.iter().enumerate().take(dd) {
                let sub = &c * BigRational::from_integer(pc.clone());
                rem[shift + j] -= sub;
            }
        }
        rem.truncate(dd);
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().is_empty()
    }

    /// The rational value of this element, if it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        let red = self.reduced();
        match red.len() {
            0 => Some(BigRational::zero()),
            1 => Some(red[0].clone()),
            _ => None,
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.sub(other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(order={}, {})", self.order, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let red = self.reduced();
        let mut first = true;
        for (j, c) in red.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if j == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "z{}", self.order)?;
                if j > 1 {
                    write!(f, "^{j}")?;
                }
            }
        }
        Ok(())
    }
}

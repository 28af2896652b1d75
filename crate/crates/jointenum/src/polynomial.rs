//! Sparse exact multivariate polynomials.  The variable set is either the
//! x-family indexed by l x r alphabet matrices (weight enumerators) or the
//! s-family indexed by (stored group-element tuple, cycle length) pairs
//! (cycle indices).  Coefficients are exact integers, rationals or
//! cyclotomics, promoted lazily.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Cyclotomic, Elem};
use crate::error::{Error, Result};

/// Index of an x-variable: an l x r matrix over the alphabet.  Column k is
/// the A^l column contributed by the k-th code in a tuple.  The canonical
/// order is lexicographic on the column-major flattening.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct XIndex {
    rows: u8,
    cols: u8,
    colmajor: Vec<u8>,
}

impl XIndex {
    pub fn from_columns(rows: usize, cols: usize, columns: &[Vec<Elem>]) -> Self {
        debug_assert_eq!(columns.len(), cols);
        let mut colmajor = Vec::with_capacity(rows * cols);
        for col in columns {
            debug_assert_eq!(col.len(), rows);
            colmajor.extend(col.iter().map(|e| e.0));
        }
        XIndex {
            rows: rows as u8,
            cols: cols as u8,
            colmajor,
        }
    }

    pub fn from_rows(rows_data: &[Vec<u8>]) -> Self {
        let rows = rows_data.len();
        let cols = rows_data[0].len();
        let mut colmajor = Vec::with_capacity(rows * cols);
        for k in 0..cols {
            for row in rows_data {
                colmajor.push(row[k]);
            }
        }
        XIndex {
            rows: rows as u8,
            cols: cols as u8,
            colmajor,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows as usize
    }

    pub fn cols(&self) -> usize {
        self.cols as usize
    }

    pub fn entry(&self, row: usize, col: usize) -> Elem {
        Elem(self.colmajor[col * self.rows as usize + row])
    }

    pub fn column(&self, col: usize) -> Vec<Elem> {
        let r = self.rows as usize;
        self.colmajor[col * r..(col + 1) * r]
            .iter()
            .map(|&v| Elem(v))
            .collect()
    }

    pub fn with_column(&self, col: usize, values: &[Elem]) -> Self {
        let mut out = self.clone();
        let r = self.rows as usize;
        for (j, &v) in values.iter().enumerate() {
            out.colmajor[col * r + j] = v.0;
        }
        out
    }

    /// Matrix entries row by row, as used in the JSON encoding.
    pub fn row_major(&self) -> Vec<Vec<u8>> {
        (0..self.rows as usize)
            .map(|j| {
                (0..self.cols as usize)
                    .map(|k| self.colmajor[k * self.rows as usize + j])
                    .collect()
            })
            .collect()
    }

    /// Negate every entry of column `col` in the given alphabet.
    pub fn negate_column(&self, col: usize, alphabet: &crate::algebra::Alphabet) -> Self {
        let negated: Vec<Elem> = self.column(col).iter().map(|&e| alphabet.neg(e)).collect();
        self.with_column(col, &negated)
    }
}

impl fmt::Display for XIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.colmajor.iter().any(|&v| v > 9);
        let rows = self.row_major();
        let row_str = |row: &[u8]| -> String {
            if wide {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            } else {
                row.iter().map(|v| v.to_string()).collect()
            }
        };
        if self.rows == 1 {
            write!(f, "x_{{{}}}", row_str(&rows[0]))
        } else if self.cols == 1 {
            let col: Vec<String> = rows.iter().map(|r| r[0].to_string()).collect();
            write!(f, "x_{{({})}}", col.join(","))
        } else {
            let body: Vec<String> = rows.iter().map(|r| row_str(r)).collect();
            write!(f, "x_{{{}}}", body.join("/"))
        }
    }
}

/// Index of an s-variable: a reference into a cycle index's tuple table plus
/// a cycle length.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SIndex {
    pub tuple: u32,
    pub len: u32,
}

/// A polynomial variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X(XIndex),
    S(SIndex),
}

/// Which variable family a polynomial lives in; x-polynomials carry their
/// matrix shape so arithmetic can reject mismatched operands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarFamily {
    X { l: u8, r: u8 },
    S,
}

impl VarFamily {
    pub fn x(l: usize, r: usize) -> Self {
        VarFamily::X {
            l: l as u8,
            r: r as u8,
        }
    }
}

/// An exact coefficient.  The domain is promoted lazily along
/// integer -> rational -> cyclotomic.
#[derive(Clone, Debug)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Cyc(Cyclotomic),
}

impl Coeff {
    pub fn int(v: i64) -> Self {
        Coeff::Int(BigInt::from(v))
    }

    pub fn rat(num: i64, den: i64) -> Self {
        Coeff::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn one() -> Self {
        Coeff::Int(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Int(v) => v.is_zero(),
            Coeff::Rat(v) => v.is_zero(),
            Coeff::Cyc(v) => v.is_zero(),
        }
    }

    fn as_big_rational(&self) -> Option<BigRational> {
        match self {
            Coeff::Int(v) => Some(BigRational::from_integer(v.clone())),
            Coeff::Rat(v) => Some(v.clone()),
            Coeff::Cyc(v) => v.as_rational(),
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a + b),
            (Coeff::Cyc(a), Coeff::Cyc(b)) => {
                assert_eq!(a.order(), b.order(), "mixed cyclotomic orders");
                Coeff::Cyc(a.add(b))
            }
            (Coeff::Cyc(a), b) | (b, Coeff::Cyc(a)) => {
                let rat = b.as_big_rational().expect("scalar");
                Coeff::Cyc(a.add(&Cyclotomic::from_rational(a.order(), rat)))
            }
            (a, b) => Coeff::Rat(a.as_big_rational().unwrap() + b.as_big_rational().unwrap()),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a * b),
            (Coeff::Cyc(a), Coeff::Cyc(b)) => {
                assert_eq!(a.order(), b.order(), "mixed cyclotomic orders");
                Coeff::Cyc(a.mul(b))
            }
            (Coeff::Cyc(a), b) | (b, Coeff::Cyc(a)) => {
                let rat = b.as_big_rational().expect("scalar");
                Coeff::Cyc(a.scale(&rat))
            }
            (a, b) => Coeff::Rat(a.as_big_rational().unwrap() * b.as_big_rational().unwrap()),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Int(v) => Coeff::Int(-v),
            Coeff::Rat(v) => Coeff::Rat(-v),
            Coeff::Cyc(v) => Coeff::Cyc(v.neg()),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Coeff {
        match self {
            Coeff::Cyc(v) => Coeff::Cyc(v.scale(factor)),
            other => Coeff::Rat(other.as_big_rational().unwrap() * factor),
        }
    }

    /// The rational value, if the coefficient lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.as_big_rational()
    }

    /// The integer value, if the coefficient is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        let rat = self.as_big_rational()?;
        rat.is_integer().then(|| rat.to_integer())
    }

    /// Numeric equality with 1, in any domain.
    pub fn is_one(&self) -> bool {
        self.as_big_rational().is_some_and(|q| q.is_one())
    }

    /// Collapse a cyclotomic coefficient that has cancelled down to Q; other
    /// domains pass through.
    pub fn demote(&self) -> Option<Coeff> {
        match self {
            Coeff::Cyc(v) => v.as_rational().map(|q| {
                if q.is_integer() {
                    Coeff::Int(q.to_integer())
                } else {
                    Coeff::Rat(q)
                }
            }),
            other => Some(other.clone()),
        }
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coeff::Cyc(a), Coeff::Cyc(b)) => {
                if a.order() == b.order() {
                    a == b
                } else {
                    match (a.as_rational(), b.as_rational()) {
                        (Some(x), Some(y)) => x == y,
                        _ => false,
                    }
                }
            }
            (Coeff::Cyc(a), b) | (b, Coeff::Cyc(a)) => a.as_rational() == b.as_big_rational(),
            (a, b) => a.as_big_rational() == b.as_big_rational(),
        }
    }
}

impl Eq for Coeff {}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int(v) => write!(f, "{v}"),
            Coeff::Rat(v) => write!(f, "{v}"),
            Coeff::Cyc(v) => write!(f, "{v}"),
        }
    }
}

/// A power product of variables: sorted (variable, exponent) pairs with no
/// zero exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(mut powers: Vec<(Var, u32)>) -> Self {
        powers.retain(|(_, e)| *e > 0);
        powers.sort();
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(powers.len());
        for (var, exp) in powers {
            match merged.last_mut() {
                Some((last, e)) if *last == var => *e += exp,
                _ => merged.push((var, exp)),
            }
        }
        Monomial(merged)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut powers = self.0.clone();
        powers.extend(other.0.iter().cloned());
        Monomial::from_powers(powers)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (var, exp)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            match var {
                Var::X(x) => write!(f, "{x}")?,
                Var::S(s) => write!(f, "s(#{},{})", s.tuple, s.len)?,
            }
            if *exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial in canonical form: monomials sorted, no zero
/// coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly {
    family: VarFamily,
    terms: BTreeMap<Monomial, Coeff>,
}

impl SparsePoly {
    pub fn zero(family: VarFamily) -> Self {
        SparsePoly {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(family: VarFamily, coeff: Coeff) -> Self {
        let mut p = Self::zero(family);
        p.add_term(Monomial::unit(), coeff);
        p
    }

    pub fn family(&self) -> VarFamily {
        self.family
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Option<&Coeff> {
        self.terms.get(monomial)
    }

    /// Fold one term into the polynomial, collecting and dropping zeros.
    pub fn add_term(&mut self, monomial: Monomial, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&coeff);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_family(&self, other: &SparsePoly) -> Result<()> {
        if self.family != other.family {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_family(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            family: self.family,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_family(other)?;
        let mut out = SparsePoly::zero(self.family);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<SparsePoly> {
        let mut out = SparsePoly::constant(self.family, Coeff::one());
        for _ in 0..exp {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigRational) -> SparsePoly {
        if factor.is_zero() {
            return SparsePoly::zero(self.family);
        }
        SparsePoly {
            family: self.family,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale(factor)))
                .collect(),
        }
    }

    pub fn scale_coeff(&self, factor: &Coeff) -> SparsePoly {
        let mut out = SparsePoly::zero(self.family);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(factor));
        }
        out
    }

    /// Sum of all coefficients (the value at x = 1 everywhere).
    pub fn coefficient_sum(&self) -> Coeff {
        let mut acc = Coeff::Int(BigInt::zero());
        for c in self.terms.values() {
            acc = acc.add(c);
        }
        acc
    }

    /// Largest total degree of any monomial, or None for the zero polynomial.
    pub fn degrees(&self) -> Vec<u32> {
        self.terms.keys().map(|m| m.degree()).collect()
    }

    /// Replace every variable by the polynomial the rule map assigns to it
    /// and expand exactly.  Every variable occurring in `self` must have a
    /// rule.  Coefficients are promoted as the rules require.
    pub fn substitute(&self, rules: &BTreeMap<Var, SparsePoly>) -> Result<SparsePoly> {
        let family = rules
            .values()
            .next()
            .map(|p| p.family)
            .unwrap_or(self.family);
        let mut out = SparsePoly::zero(family);
        for (monomial, coeff) in &self.terms {
            let mut expanded = SparsePoly::constant(family, coeff.clone());
            for (var, exp) in monomial.powers() {
                let image = rules.get(var).ok_or(Error::MissingRule)?;
                expanded = expanded.mul(&image.pow(*exp)?)?;
            }
            out = out.add(&expanded)?;
        }
        Ok(out)
    }

    /// Demote every cyclotomic coefficient that has cancelled to a rational;
    /// errors if any has not.
    pub fn demote_coefficients(&self) -> Result<SparsePoly> {
        let mut out = SparsePoly::zero(self.family);
        for (m, c) in &self.terms {
            let demoted = c.demote().ok_or(Error::NonCancellingCharacter)?;
            out.add_term(m.clone(), demoted);
        }
        Ok(out)
    }

    /// All distinct variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|(v, _)| v.clone()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.powers().is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                let needs_parens = matches!(c, Coeff::Cyc(v) if v.as_rational().is_none())
                    || matches!(c, Coeff::Rat(v) if v.is_negative())
                    || matches!(c, Coeff::Int(v) if v.is_negative());
                if needs_parens {
                    write!(f, "({c})*{m}")?;
                } else {
                    write!(f, "{c}*{m}")?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// JSON encoding for x-polynomials
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: String,
    l: u8,
    r: u8,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: CoeffJson,
    monomial: Vec<(Vec<Vec<u8>>, u32)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffJson {
    Scalar(String),
    Cyclotomic { order: usize, coeffs: Vec<String> },
}

fn coeff_to_json(c: &Coeff) -> CoeffJson {
    match c {
        Coeff::Int(v) => CoeffJson::Scalar(v.to_string()),
        Coeff::Rat(v) => CoeffJson::Scalar(v.to_string()),
        Coeff::Cyc(v) => match v.as_rational() {
            Some(q) => CoeffJson::Scalar(q.to_string()),
            None => CoeffJson::Cyclotomic {
                order: v.order(),
                coeffs: v.coeffs().iter().map(|c| c.to_string()).collect(),
            },
        },
    }
}

fn coeff_from_json(c: &CoeffJson) -> Result<Coeff> {
    let parse = |s: &str| -> Result<BigRational> {
        BigRational::from_str(s).map_err(|e| Error::Json(format!("bad coefficient {s:?}: {e}")))
    };
    match c {
        CoeffJson::Scalar(s) => {
            let q = parse(s)?;
            Ok(if q.is_integer() {
                Coeff::Int(q.to_integer())
            } else {
                Coeff::Rat(q)
            })
        }
        CoeffJson::Cyclotomic { order, coeffs } => {
            let mut z = Cyclotomic::zero(*order);
            let mut parsed = Vec::with_capacity(coeffs.len());
            for s in coeffs {
                parsed.push(parse(s)?);
            }
            for (j, q) in parsed.into_iter().enumerate() {
                z = z.add(&Cyclotomic::root_power(*order, j).scale(&q));
            }
            Ok(Coeff::Cyc(z))
        }
    }
}

impl SparsePoly {
    /// Serialize an x-polynomial to the interchange JSON form (matrices row
    /// by row, coefficients as exact strings).
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let VarFamily::X { l, r } = self.family else {
            return Err(Error::ShapeMismatch);
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let monomial = m
                    .powers()
                    .iter()
                    .map(|(var, exp)| match var {
                        Var::X(x) => Ok((x.row_major(), *exp)),
                        Var::S(_) => Err(Error::ShapeMismatch),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(TermJson {
                    coeff: coeff_to_json(c),
                    monomial,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        serde_json::to_value(PolyJson {
            vars: "x".to_string(),
            l,
            r,
            terms,
        })
        .map_err(|e| Error::Json(e.to_string()))
    }

    pub fn from_json(value: &serde_json::Value) -> Result<SparsePoly> {
        let parsed: PolyJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        if parsed.vars != "x" {
            return Err(Error::Json(format!(
                "unsupported variable family {:?}",
                parsed.vars
            )));
        }
        let mut poly = SparsePoly::zero(VarFamily::X {
            l: parsed.l,
            r: parsed.r,
        });
        for term in &parsed.terms {
            let mut powers = Vec::with_capacity(term.monomial.len());
            for (matrix, exp) in &term.monomial {
                if matrix.len() != parsed.l as usize
                    || matrix.iter().any(|row| row.len() != parsed.r as usize)
                {
                    return Err(Error::Json("matrix shape disagrees with l/r".into()));
                }
                powers.push((Var::X(XIndex::from_rows(matrix)), *exp));
            }
            poly.add_term(Monomial::from_powers(powers), coeff_from_json(&term.coeff)?);
        }
        Ok(poly)
    }
}

//! Character matrices and the tensor-product MacWilliams transform for
//! (l,r)-fold joint weight enumerators, with verification against directly
//! enumerated duals.
//!
//! The tensor operator is never materialised: dualising position k is the
//! per-variable substitution
//! `x_a -> sum over v in A^l of chi(a_k . v) x_(a with column k := v)`,
//! followed by division by the sizes of the dualised joint codes.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{Alphabet, Cyclotomic, Elem};
use crate::codes::JointCode;
use crate::enumerators::lr_cjwe;
use crate::error::{Error, Result};
use crate::polynomial::{Coeff, SparsePoly, Var, VarFamily};

/// The m x m matrix with entry (a, b) = chi(ab), rows and columns in
/// canonical alphabet order.
#[derive(Clone, Debug)]
pub struct CharacterMatrix {
    alphabet: Arc<Alphabet>,
    entries: Vec<Cyclotomic>,
}

pub fn character_matrix(alphabet: &Arc<Alphabet>) -> CharacterMatrix {
    let m = alphabet.size();
    let mut entries = Vec::with_capacity(m * m);
    for a in alphabet.elements() {
        for b in alphabet.elements() {
            entries.push(alphabet.character(alphabet.mul(a, b)));
        }
    }
    CharacterMatrix {
        alphabet: alphabet.clone(),
        entries,
    }
}

impl CharacterMatrix {
    pub fn size(&self) -> usize {
        self.alphabet.size()
    }

    pub fn entry(&self, a: Elem, b: Elem) -> &Cyclotomic {
        &self.entries[a.index() * self.alphabet.size() + b.index()]
    }

    /// Conjugation is index negation: `conj(T)[a][b] = T[-a][b]`.
    pub fn conjugate_entry(&self, a: Elem, b: Elem) -> &Cyclotomic {
        self.entry(self.alphabet.neg(a), b)
    }
}

/// The dual/identity flags delta_1..delta_r of a transform.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualPattern(Vec<bool>);

impl DualPattern {
    pub fn new(flags: Vec<bool>) -> Self {
        DualPattern(flags)
    }

    pub fn all_zero(r: usize) -> Self {
        DualPattern(vec![false; r])
    }

    /// Parse a comma-separated flag list such as "0,1".
    pub fn parse(text: &str, r: usize) -> Result<Self> {
        let flags = text
            .split(',')
            .map(|tok| match tok.trim() {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(Error::Json(format!("bad pattern flag {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        if flags.len() != r {
            return Err(Error::BadPatternLength {
                expected: r,
                got: flags.len(),
            });
        }
        Ok(DualPattern(flags))
    }

    /// All 2^r patterns, all-zero first.
    pub fn all(r: usize) -> Vec<DualPattern> {
        (0..1usize << r)
            .map(|bits| DualPattern((0..r).map(|k| bits >> k & 1 == 1).collect()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn flags(&self) -> &[bool] {
        &self.0
    }
}

impl std::fmt::Display for DualPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|&b| if b { "1" } else { "0" }).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Enumerate A^l in canonical order.
fn vectors(alphabet: &Alphabet, l: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::with_capacity(alphabet.size().pow(l as u32));
    let mut v = vec![Elem(0); l];
    loop {
        out.push(v.clone());
        let mut pos = l;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if v[pos].index() + 1 < alphabet.size() {
                v[pos] = Elem(v[pos].0 + 1);
                break;
            }
            v[pos] = Elem(0);
        }
        if v.iter().all(|&e| e == Elem(0)) {
            return out;
        }
    }
}

/// Substitute position k of every variable of `poly`:
/// x_a -> sum over v of chi(a_k . v) x_(a with column k replaced by v).
fn dualise_position(
    poly: &SparsePoly,
    alphabet: &Arc<Alphabet>,
    position: usize,
    l: usize,
) -> Result<SparsePoly> {
    let family = poly.family();
    let candidates = vectors(alphabet, l);
    let mut rules: BTreeMap<Var, SparsePoly> = BTreeMap::new();
    for var in poly.variables() {
        let Var::X(idx) = &var else {
            return Err(Error::ShapeMismatch);
        };
        let column = idx.column(position);
        let mut image = SparsePoly::zero(family);
        for v in &candidates {
            let chi = alphabet.character(alphabet.dot(&column, v));
            image.add_term(
                crate::polynomial::Monomial::var(Var::X(idx.with_column(position, v))),
                Coeff::Cyc(chi),
            );
        }
        rules.insert(var, image);
    }
    poly.substitute(&rules)
}

/// Apply the MacWilliams transform for the given dual pattern: substitute
/// every flagged position, check that all character sums cancel to
/// rationals, and divide by the product of the flagged joint-code sizes.
pub fn macwilliams_transform(
    poly: &SparsePoly,
    pattern: &DualPattern,
    alphabet: &Arc<Alphabet>,
    sizes: &[u128],
) -> Result<SparsePoly> {
    let VarFamily::X { l, r } = poly.family() else {
        return Err(Error::ShapeMismatch);
    };
    if pattern.len() != r as usize || sizes.len() != r as usize {
        return Err(Error::BadPatternLength {
            expected: r as usize,
            got: pattern.len(),
        });
    }
    let mut current = poly.clone();
    for (k, &flag) in pattern.flags().iter().enumerate() {
        if flag {
            current = dualise_position(&current, alphabet, k, l as usize)?;
        }
    }
    let mut current = current.demote_coefficients()?;
    let mut denom = BigInt::one();
    for (k, &flag) in pattern.flags().iter().enumerate() {
        if flag {
            denom *= BigInt::from(sizes[k]);
        }
    }
    if !denom.is_one() {
        current = current.scale(&BigRational::new(BigInt::one(), denom));
    }
    Ok(current)
}

/// Outcome of checking one identity: both sides plus the exact verdict.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub equal: bool,
    pub lhs: SparsePoly,
    pub rhs: SparsePoly,
}

impl VerifyReport {
    pub fn new(lhs: SparsePoly, rhs: SparsePoly) -> Self {
        VerifyReport {
            equal: lhs == rhs,
            lhs,
            rhs,
        }
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        Ok(serde_json::json!({
            "equal": self.equal,
            "lhs": self.lhs.to_json()?,
            "rhs": self.rhs.to_json()?,
        }))
    }
}

/// Check the MacWilliams identity for the given joint codes and pattern:
/// the directly enumerated weight enumerator of the dualised codes (left)
/// against the transform of the plain enumerator (right).
pub fn verify_duality(
    joints: &[Arc<JointCode>],
    pattern: &DualPattern,
    max_tuples: u128,
    max_search: u128,
) -> Result<VerifyReport> {
    if pattern.len() != joints.len() {
        return Err(Error::BadPatternLength {
            expected: joints.len(),
            got: pattern.len(),
        });
    }
    let alphabet = joints[0].alphabet().clone();
    let mut dualised = Vec::with_capacity(joints.len());
    for (joint, &flag) in joints.iter().zip(pattern.flags()) {
        dualised.push(if flag {
            joint.dual(max_search)?
        } else {
            joint.clone()
        });
    }
    let lhs = lr_cjwe(&dualised, max_tuples)?;
    let plain = lr_cjwe(joints, max_tuples)?;
    let sizes: Vec<u128> = joints.iter().map(|j| j.size()).collect();
    let rhs = macwilliams_transform(&plain, pattern, &alphabet, &sizes)?;
    Ok(VerifyReport::new(lhs, rhs))
}

//! Complete weight enumerators of genus g and the (l,r)-fold complete joint
//! weight enumerators, computed by direct enumeration of codeword tuples.
//! These are deliberately straightforward loops: they double as the oracle
//! side of every identity checked elsewhere in the crate.

use std::sync::Arc;

use crate::codes::{CodewordMatrix, JointCode, LinearCode};
use crate::error::{Error, Result};
use crate::par;
use crate::polynomial::{Coeff, Monomial, SparsePoly, Var, VarFamily, XIndex};

/// Default cap on the number of enumerated tuples.
pub const MAX_ENUM_TUPLES: u128 = 1 << 22;

/// Complete weight enumerator of genus g: one monomial per g-tuple of
/// codewords, recording the census of columns (v_1i, ..., v_gi) in A^g.
pub fn cwe_genus(code: &Arc<LinearCode>, genus: usize, cap: u128) -> Result<SparsePoly> {
    assert!(genus >= 1);
    let tuples = (code.size() as u128)
        .checked_pow(genus as u32)
        .unwrap_or(u128::MAX);
    if tuples > cap {
        return Err(Error::TooManyTuples { count: tuples, cap });
    }
    let n = code.length();
    let family = VarFamily::x(genus, 1);
    let words = code.words();
    let size = code.size() as u128;
    let chunks = par::indexed_map(tuples, |t| {
        let mut idx = t;
        let mut picks = vec![0usize; genus];
        for j in (0..genus).rev() {
            picks[j] = (idx % size) as usize;
            idx /= size;
        }
        let powers = (0..n)
            .map(|i| {
                let column: Vec<_> = picks.iter().map(|&w| words[w][i]).collect();
                (Var::X(XIndex::from_columns(genus, 1, &[column])), 1)
            })
            .collect();
        Monomial::from_powers(powers)
    });
    let mut poly = SparsePoly::zero(family);
    for chunk in chunks {
        for monomial in chunk {
            poly.add_term(monomial, Coeff::one());
        }
    }
    Ok(poly)
}

/// Complete joint weight enumerator of two codes: one monomial per pair
/// (u, v), with variables indexed by the symbol pairs (u_i, v_i).
pub fn cjwe(c: &Arc<LinearCode>, d: &Arc<LinearCode>, cap: u128) -> Result<SparsePoly> {
    if c.alphabet() != d.alphabet() || c.length() != d.length() {
        return Err(Error::CodeMismatch);
    }
    let tuples = c.size() as u128 * d.size() as u128;
    if tuples > cap {
        return Err(Error::TooManyTuples { count: tuples, cap });
    }
    let n = c.length();
    let mut poly = SparsePoly::zero(VarFamily::x(1, 2));
    for u in c.words() {
        for v in d.words() {
            let mut powers = Vec::with_capacity(n);
            for i in 0..n {
                let idx = XIndex::from_columns(1, 2, &[vec![u[i]], vec![v[i]]]);
                powers.push((Var::X(idx), 1));
            }
            poly.add_term(Monomial::from_powers(powers), Coeff::one());
        }
    }
    Ok(poly)
}

fn check_joint_shapes(joints: &[Arc<JointCode>]) -> Result<()> {
    let first = &joints[0];
    for j in &joints[1..] {
        if j.alphabet() != first.alphabet() || j.length() != first.length() || j.l() != first.l() {
            return Err(Error::CodeMismatch);
        }
    }
    Ok(())
}

pub(crate) fn tuple_count(joints: &[Arc<JointCode>]) -> u128 {
    joints
        .iter()
        .map(|j| j.size())
        .try_fold(1u128, |acc, s| acc.checked_mul(s))
        .unwrap_or(u128::MAX)
}

/// Decode a flat tuple index into one element per joint code (the last code
/// varies fastest).
pub(crate) fn tuple_elements(joints: &[Arc<JointCode>], index: u128) -> Vec<CodewordMatrix> {
    let mut idx = index;
    let mut picks = vec![0u128; joints.len()];
    for k in (0..joints.len()).rev() {
        let sz = joints[k].size();
        picks[k] = idx % sz;
        idx /= sz;
    }
    picks
        .iter()
        .zip(joints)
        .map(|(&w, j)| j.element(w))
        .collect()
}

/// The (l,r)-fold complete joint weight enumerator: one monomial per r-tuple
/// of joint-code elements, with variables indexed by the l x r matrices
/// formed coordinatewise from the tuple columns.
pub fn lr_cjwe(joints: &[Arc<JointCode>], cap: u128) -> Result<SparsePoly> {
    assert!(!joints.is_empty());
    check_joint_shapes(joints)?;
    let tuples = tuple_count(joints);
    if tuples > cap {
        return Err(Error::TooManyTuples { count: tuples, cap });
    }
    let l = joints[0].l();
    let r = joints.len();
    let n = joints[0].length();
    let chunks = par::indexed_map(tuples, |t| {
        let mats = tuple_elements(joints, t);
        let mut powers = Vec::with_capacity(n);
        for i in 0..n {
            let columns: Vec<Vec<_>> = mats.iter().map(|m| m.column(i)).collect();
            powers.push((Var::X(XIndex::from_columns(l, r, &columns)), 1));
        }
        Monomial::from_powers(powers)
    });
    let mut poly = SparsePoly::zero(VarFamily::x(l, r));
    for chunk in chunks {
        for monomial in chunk {
            poly.add_term(monomial, Coeff::one());
        }
    }
    Ok(poly)
}

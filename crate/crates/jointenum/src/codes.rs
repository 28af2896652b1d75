//! Linear codes over an alphabet, duals by exhaustive search, l-fold joint
//! codes, and the coordinate / row-permutation equivalence actions.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Alphabet, AlphabetSpec, Elem};
use crate::error::{Error, Result};
use crate::permgroup::{sym_group_images, Permutation, PointSet};

/// Default cap on explicit codeword lists.
pub const MAX_CODE_WORDS: usize = 1 << 20;
/// Default cap on the exhaustive dual search space.
pub const MAX_DUAL_SEARCH: u128 = 1 << 20;
/// Orbit enumeration materialises all n! coordinate permutations.
pub const MAX_ORBIT_N: usize = 8;
/// Row-permutation part of the joint-code orbit.
pub const MAX_ORBIT_L: usize = 2;

/// A linear code stored as its explicit, sorted codeword list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCode {
    alphabet: Arc<Alphabet>,
    length: usize,
    generators: Vec<Vec<Elem>>,
    words: Vec<Vec<Elem>>,
}

impl LinearCode {
    /// Span of the generator rows: all alphabet-linear combinations (the
    /// generated submodule over Z_k).
    pub fn span(
        alphabet: Arc<Alphabet>,
        length: usize,
        generators: &[Vec<Elem>],
        cap: usize,
    ) -> Result<Arc<LinearCode>> {
        for row in generators {
            if row.len() != length {
                return Err(Error::BadGeneratorLength {
                    expected: length,
                    got: row.len(),
                });
            }
            for &e in row {
                if e.index() >= alphabet.size() {
                    return Err(Error::SymbolOutOfRange {
                        value: e.0 as u64,
                        m: alphabet.size(),
                    });
                }
            }
        }
        let mut words: Vec<Vec<Elem>> = vec![vec![Elem(0); length]];
        for gen in generators {
            let mut extended = Vec::new();
            for word in &words {
                for s in alphabet.elements() {
                    let combo: Vec<Elem> = word
                        .iter()
                        .zip(gen)
                        .map(|(&w, &g)| alphabet.add(w, alphabet.mul(s, g)))
                        .collect();
                    extended.push(combo);
                }
            }
            extended.sort();
            extended.dedup();
            if extended.len() > cap {
                return Err(Error::CodeTooLarge { cap });
            }
            words = extended;
        }
        Ok(Arc::new(LinearCode {
            alphabet,
            length,
            generators: generators.to_vec(),
            words,
        }))
    }

    pub fn zero(alphabet: Arc<Alphabet>, length: usize) -> Arc<LinearCode> {
        Self::span(alphabet, length, &[], MAX_CODE_WORDS).expect("zero code")
    }

    pub fn from_spec(spec: &CodeSpec) -> Result<Arc<LinearCode>> {
        let alphabet = Alphabet::from_spec(&spec.alphabet)?;
        let generators: Vec<Vec<Elem>> = spec
            .generators
            .iter()
            .map(|row| row.iter().map(|&v| alphabet.elem(v)).collect())
            .collect::<Result<_>>()?;
        Self::span(alphabet, spec.length, &generators, MAX_CODE_WORDS)
    }

    pub fn to_spec(&self) -> CodeSpec {
        CodeSpec {
            alphabet: self.alphabet.to_spec(),
            length: self.length,
            generators: self
                .generators
                .iter()
                .map(|row| row.iter().map(|e| e.0 as u64).collect())
                .collect(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Vec<Elem>] {
        &self.words
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        self.words
            .binary_search_by(|w| w.as_slice().cmp(word))
            .is_ok()
    }

    /// Number of common codewords.
    pub fn intersection_size(&self, other: &LinearCode) -> Result<usize> {
        if self.alphabet != other.alphabet || self.length != other.length {
            return Err(Error::CodeMismatch);
        }
        Ok(self.words.iter().filter(|w| other.contains(w)).count())
    }

    /// The dual code: every vector orthogonal to all of C under the standard
    /// inner product (mod k over rings), found by exhaustive search.
    pub fn dual(&self, cap: u128) -> Result<Arc<LinearCode>> {
        let m = self.alphabet.size() as u128;
        let space = m.checked_pow(self.length as u32).unwrap_or(u128::MAX);
        if space > cap {
            return Err(Error::SearchTooLarge { size: space, cap });
        }
        // orthogonality against the generators is enough by bilinearity; fall
        // back to the full word list for codes built without generators
        let checks: &[Vec<Elem>] = if self.generators.is_empty() {
            &self.words
        } else {
            &self.generators
        };
        let mut words = Vec::new();
        let mut v = vec![Elem(0); self.length];
        loop {
            if checks.iter().all(|u| self.alphabet.dot(u, &v) == Elem(0)) {
                words.push(v.clone());
            }
            // mixed-radix increment, last coordinate fastest
            let mut pos = self.length;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if v[pos].index() + 1 < self.alphabet.size() {
                    v[pos] = Elem(v[pos].0 + 1);
                    break;
                }
                v[pos] = Elem(0);
            }
            if v.iter().all(|&e| e == Elem(0)) {
                break;
            }
        }
        words.sort();
        let generators = dual_generators(&self.alphabet, &words);
        Ok(Arc::new(LinearCode {
            alphabet: self.alphabet.clone(),
            length: self.length,
            generators,
            words,
        }))
    }

    /// The coordinate-permuted code sigma(C) with sigma(u)_i = u_sigma(i).
    pub fn permute(&self, sigma: &Permutation) -> Result<Arc<LinearCode>> {
        if sigma.points() != (PointSet::Abstract { n: self.length }) {
            return Err(Error::PointSetMismatch);
        }
        let map = |word: &Vec<Elem>| -> Vec<Elem> {
            (0..self.length).map(|i| word[sigma.apply(i)]).collect()
        };
        let mut words: Vec<Vec<Elem>> = self.words.iter().map(map).collect();
        words.sort();
        Ok(Arc::new(LinearCode {
            alphabet: self.alphabet.clone(),
            length: self.length,
            generators: self.generators.iter().map(map).collect(),
            words,
        }))
    }

    /// Distinct images under all of S_n, with the number of permutations
    /// producing each image; deterministic order.
    pub fn equivalence_class(&self, max_n: usize) -> Result<CodeOrbit> {
        if self.length > max_n {
            return Err(Error::OrbitTooLarge {
                n: self.length,
                cap: max_n,
            });
        }
        let points = PointSet::Abstract { n: self.length };
        let mut seen: std::collections::BTreeMap<Vec<Vec<Elem>>, (Arc<LinearCode>, usize)> =
            std::collections::BTreeMap::new();
        let mut group_order = 0usize;
        for images in sym_group_images(self.length) {
            group_order += 1;
            let sigma = Permutation::from_images(points, images)?;
            let image = self.permute(&sigma)?;
            seen.entry(image.words.clone())
                .and_modify(|(_, mult)| *mult += 1)
                .or_insert((image, 1));
        }
        Ok(CodeOrbit {
            members: seen.into_values().collect(),
            group_order,
        })
    }
}

/// A small generating set recovered from an explicit word list by a greedy
/// scan: adopt each word not already spanned by the generators kept so far.
fn dual_generators(alphabet: &Alphabet, words: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut gens: Vec<Vec<Elem>> = Vec::new();
    if words.len() <= 1 {
        return gens;
    }
    let n = words[0].len();
    let mut spanned: std::collections::BTreeSet<Vec<Elem>> = std::collections::BTreeSet::new();
    spanned.insert(vec![Elem(0); n]);
    for word in words {
        if spanned.contains(word) {
            continue;
        }
        gens.push(word.clone());
        let mut extended = std::collections::BTreeSet::new();
        for base in &spanned {
            for s in alphabet.elements() {
                let combo: Vec<Elem> = base
                    .iter()
                    .zip(word)
                    .map(|(&b, &g)| alphabet.add(b, alphabet.mul(s, g)))
                    .collect();
                extended.insert(combo);
            }
        }
        spanned = extended;
        if spanned.len() == words.len() {
            break;
        }
    }
    gens
}

/// The orbit of a code or joint code under its equivalence group.
#[derive(Clone, Debug)]
pub struct CodeOrbit {
    /// Distinct images with the count of group elements mapping to each.
    pub members: Vec<(Arc<LinearCode>, usize)>,
    /// Order of the acting group (n!).
    pub group_order: usize,
}

impl CodeOrbit {
    pub fn orbit_size(&self) -> usize {
        self.members.len()
    }
}

/// An element of an l-fold joint code: an l x n matrix whose row j is a
/// codeword of the j-th component code.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CodewordMatrix {
    pub rows: Vec<Vec<Elem>>,
}

impl CodewordMatrix {
    pub fn l(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Elem {
        self.rows[row][col]
    }

    pub fn column(&self, col: usize) -> Vec<Elem> {
        self.rows.iter().map(|r| r[col]).collect()
    }

    pub fn row(&self, row: usize) -> &[Elem] {
        &self.rows[row]
    }

    /// Entrywise sum in the given alphabet.
    pub fn add_in(&self, other: &CodewordMatrix, alphabet: &Alphabet) -> CodewordMatrix {
        debug_assert_eq!(self.l(), other.l());
        debug_assert_eq!(self.n(), other.n());
        CodewordMatrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| alphabet.add(x, y)).collect())
                .collect(),
        }
    }

    /// Matrix entries row by row as plain integers.
    pub fn row_major(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| e.0).collect())
            .collect()
    }
}

/// The l-fold joint code C_1 x ... x C_l over a common alphabet and length,
/// viewed as the set of l x n matrices with row j drawn from C_j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JointCode {
    components: Vec<Arc<LinearCode>>,
}

impl JointCode {
    pub fn new(components: Vec<Arc<LinearCode>>) -> Result<Arc<JointCode>> {
        assert!(
            !components.is_empty(),
            "joint code needs at least one component"
        );
        let first = &components[0];
        for c in &components[1..] {
            if c.alphabet() != first.alphabet() || c.length() != first.length() {
                return Err(Error::CodeMismatch);
            }
        }
        Ok(Arc::new(JointCode { components }))
    }

    pub fn single(code: Arc<LinearCode>) -> Arc<JointCode> {
        Arc::new(JointCode {
            components: vec![code],
        })
    }

    /// The code repeated l times: C^l.
    pub fn power(code: Arc<LinearCode>, l: usize) -> Arc<JointCode> {
        Arc::new(JointCode {
            components: vec![code; l],
        })
    }

    pub fn from_spec(spec: &JointCodeSpec) -> Result<Arc<JointCode>> {
        let components = spec
            .components
            .iter()
            .map(LinearCode::from_spec)
            .collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }

    pub fn to_spec(&self) -> JointCodeSpec {
        JointCodeSpec {
            components: self.components.iter().map(|c| c.to_spec()).collect(),
        }
    }

    pub fn components(&self) -> &[Arc<LinearCode>] {
        &self.components
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.components[0].alphabet()
    }

    pub fn length(&self) -> usize {
        self.components[0].length()
    }

    pub fn l(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u128 {
        self.components.iter().map(|c| c.size() as u128).product()
    }

    /// The element at a mixed-radix index; the first component varies
    /// slowest.
    pub fn element(&self, index: u128) -> CodewordMatrix {
        let mut idx = index;
        let mut picks = vec![0usize; self.components.len()];
        for j in (0..self.components.len()).rev() {
            let sz = self.components[j].size() as u128;
            picks[j] = (idx % sz) as usize;
            idx /= sz;
        }
        CodewordMatrix {
            rows: picks
                .iter()
                .zip(&self.components)
                .map(|(&w, c)| c.words()[w].clone())
                .collect(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = CodewordMatrix> + '_ {
        (0..self.size()).map(|i| self.element(i))
    }

    /// Row j of the matrix is a codeword of component j.
    pub fn contains(&self, mat: &CodewordMatrix) -> bool {
        mat.l() == self.l()
            && mat
                .rows
                .iter()
                .zip(&self.components)
                .all(|(row, c)| c.contains(row))
    }

    /// Componentwise dual: C_1-dual x ... x C_l-dual.
    pub fn dual(&self, cap: u128) -> Result<Arc<JointCode>> {
        let components = self
            .components
            .iter()
            .map(|c| c.dual(cap))
            .collect::<Result<Vec<_>>>()?;
        JointCode::new(components)
    }

    /// Apply iota = (pi; sigma_1, ..., sigma_l): the image's row j is
    /// sigma_j applied to component pi(j).
    pub fn apply_iota(&self, iota: &IotaAction) -> Result<Arc<JointCode>> {
        let l = self.l();
        if iota.row_perm.points() != (PointSet::Abstract { n: l }) {
            return Err(Error::PointSetMismatch);
        }
        let components = (0..l)
            .map(|j| {
                let source = iota.row_perm.apply(j);
                self.components[source].permute(&iota.col_perms[j])
            })
            .collect::<Result<Vec<_>>>()?;
        JointCode::new(components)
    }

    /// Distinct images under all iota in the row/coordinate permutation
    /// group, with multiplicities; deterministic order.
    pub fn equivalence_class(&self, max_n: usize, max_l: usize) -> Result<JointOrbit> {
        let n = self.length();
        let l = self.l();
        if n > max_n {
            return Err(Error::OrbitTooLarge { n, cap: max_n });
        }
        if l > max_l {
            return Err(Error::OrbitTooLarge { n: l, cap: max_l });
        }
        let row_points = PointSet::Abstract { n: l };
        let col_points = PointSet::Abstract { n };
        let row_perms: Vec<Permutation> = sym_group_images(l)
            .into_iter()
            .map(|im| Permutation::from_images(row_points, im))
            .collect::<Result<_>>()?;
        let col_perms: Vec<Permutation> = sym_group_images(n)
            .into_iter()
            .map(|im| Permutation::from_images(col_points, im))
            .collect::<Result<_>>()?;
        type OrbitKey = Vec<Vec<Vec<Elem>>>;
        let mut group_order = 0usize;
        let mut seen: std::collections::BTreeMap<OrbitKey, (Arc<JointCode>, usize)> =
            std::collections::BTreeMap::new();
        let mut picks = vec![0usize; l];
        for pi in &row_perms {
            loop {
                let iota = IotaAction {
                    row_perm: pi.clone(),
                    col_perms: picks.iter().map(|&i| col_perms[i].clone()).collect(),
                };
                let image = self.apply_iota(&iota)?;
                group_order += 1;
                let key: OrbitKey = image
                    .components
                    .iter()
                    .map(|c| c.words().to_vec())
                    .collect();
                seen.entry(key)
                    .and_modify(|(_, mult)| *mult += 1)
                    .or_insert((image, 1));
                // advance the sigma choices
                let mut pos = l;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    if picks[pos] + 1 < col_perms.len() {
                        picks[pos] += 1;
                        break;
                    }
                    picks[pos] = 0;
                }
                if picks.iter().all(|&p| p == 0) {
                    break;
                }
            }
        }
        Ok(JointOrbit {
            members: seen.into_values().collect(),
            group_order,
        })
    }
}

/// Orbit of a joint code under iota actions.
#[derive(Clone, Debug)]
pub struct JointOrbit {
    pub members: Vec<(Arc<JointCode>, usize)>,
    pub group_order: usize,
}

impl JointOrbit {
    pub fn orbit_size(&self) -> usize {
        self.members.len()
    }
}

/// iota = (pi; sigma_1, ..., sigma_l): a row permutation together with one
/// coordinate permutation per row.
#[derive(Clone, Debug)]
pub struct IotaAction {
    pub row_perm: Permutation,
    pub col_perms: Vec<Permutation>,
}

impl IotaAction {
    pub fn identity(l: usize, n: usize) -> Self {
        IotaAction {
            row_perm: Permutation::identity(PointSet::Abstract { n: l }),
            col_perms: vec![Permutation::identity(PointSet::Abstract { n }); l],
        }
    }
}

/// JSON description of a code: alphabet, length and generator rows.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CodeSpec {
    pub alphabet: AlphabetSpec,
    pub length: usize,
    pub generators: Vec<Vec<u64>>,
}

/// JSON description of an l-fold joint code.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JointCodeSpec {
    pub components: Vec<CodeSpec>,
}

//! Code-induced permutation actions on {1..n} x A^l, complete joint cycle
//! indices (one indeterminate family per group-element tuple), and the
//! substitution that turns a cycle index into the matching weight
//! enumerator.
//!
//! The substitution is applied per stored tuple, coordinate by coordinate,
//! using the codeword data kept alongside each tuple; the closed-form cycle
//! census implied by that data is recomputed and checked against the stored
//! monomial on every application.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Alphabet, Elem};
use crate::codes::{CodewordMatrix, JointCode};
use crate::error::{Error, Result};
use crate::par;
use crate::permgroup::{CycleType, PermGroup, Permutation, PointSet};
use crate::polynomial::{Coeff, Monomial, SIndex, SparsePoly, Var, VarFamily, XIndex};

/// Default cap on element tuples in one cycle index.
pub const MAX_CYCLE_TUPLES: u128 = 1 << 20;
/// Default cap on the permutation point set n * |A|^l.
pub const MAX_POINTS: usize = 10_000;

/// The translation action of a joint code on {1..n} x A^l: the element with
/// columns c_1..c_n sends (i, x) to (i, x + c_i).
pub struct InducedAction {
    joint: Arc<JointCode>,
    points: PointSet,
}

impl InducedAction {
    pub fn new(joint: Arc<JointCode>, max_points: usize) -> Result<InducedAction> {
        let points = PointSet::Product {
            n: joint.length(),
            m: joint.alphabet().size(),
            l: joint.l(),
        };
        if points.size() > max_points {
            return Err(Error::PointSetTooLarge {
                size: points.size(),
                cap: max_points,
            });
        }
        Ok(InducedAction { joint, points })
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    pub fn joint(&self) -> &Arc<JointCode> {
        &self.joint
    }

    /// The permutation induced by one joint-code element.
    pub fn permutation(&self, mat: &CodewordMatrix) -> Permutation {
        induced_permutation(self.points, self.joint.alphabet(), mat)
    }

    /// The whole image group G(joint): induced permutations of every
    /// element.  The map is an additive-to-composition homomorphism, so the
    /// image is a group by construction.
    pub fn group(&self) -> PermGroup {
        let elements = self
            .joint
            .elements()
            .map(|mat| self.permutation(&mat))
            .collect();
        PermGroup::from_sorted_unchecked(self.points, elements)
    }
}

/// The translation permutation (i, x) -> (i, x + c_i) as an explicit image
/// array.
pub fn induced_permutation(
    points: PointSet,
    alphabet: &Alphabet,
    mat: &CodewordMatrix,
) -> Permutation {
    let PointSet::Product { n, m, l } = points else {
        panic!("induced actions need a product point set");
    };
    debug_assert_eq!(mat.n(), n);
    debug_assert_eq!(mat.l(), l);
    let block = m.pow(l as u32);
    let mut images = Vec::with_capacity(n * block);
    let mut vector = vec![Elem(0); l];
    for i in 1..=n {
        let column = mat.column(i - 1);
        for y in 0..block {
            // decode y, translate, re-encode
            let mut rest = y;
            for j in (0..l).rev() {
                vector[j] = Elem((rest % m) as u8);
                rest /= m;
            }
            let mut encoded = 0usize;
            for j in 0..l {
                encoded = encoded * m + alphabet.add(vector[j], column[j]).index();
            }
            images.push(((i - 1) * block + encoded) as u32);
        }
    }
    Permutation::from_images(points, images).expect("translations are bijections")
}

/// One cycle-index summand: its coefficient, the originating tuple, and the
/// (cycle length, count) pairs.
pub type Summand<'a> = (Coeff, &'a TupleData, Vec<(usize, usize)>);

/// A stored group-element tuple: either joint-code elements (kept as their
/// codeword matrices) or abstract permutations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TupleData {
    Code { mats: Vec<CodewordMatrix> },
    Group { perms: Vec<Permutation> },
}

/// A complete joint cycle index: a polynomial in the indeterminates
/// s(tuple, i) together with the table resolving tuple ids back to the
/// originating element tuples.
#[derive(Clone, Debug)]
pub struct CycleIndex {
    points: PointSet,
    alphabet: Option<Arc<Alphabet>>,
    /// (l, r) of the originating joint codes, when code-induced.
    shape: Option<(usize, usize)>,
    tuples: Vec<TupleData>,
    poly: SparsePoly,
}

impl CycleIndex {
    pub fn points(&self) -> PointSet {
        self.points
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn tuples(&self) -> &[TupleData] {
        &self.tuples
    }

    pub fn tuple(&self, id: u32) -> &TupleData {
        &self.tuples[id as usize]
    }

    pub fn num_summands(&self) -> usize {
        self.poly.num_terms()
    }

    /// Summands in canonical order: (coefficient, tuple, cycle pairs).
    pub fn summands(&self) -> Result<Vec<Summand<'_>>> {
        let mut out = Vec::with_capacity(self.poly.num_terms());
        for (monomial, coeff) in self.poly.terms() {
            let (id, cycles) = split_summand(monomial)?;
            out.push((coeff.clone(), &self.tuples[id as usize], cycles));
        }
        Ok(out)
    }

    /// Re-materialise the product permutation g_1 ... g_r of a stored tuple.
    pub fn tuple_product(&self, id: u32) -> Result<Permutation> {
        let perms: Vec<Permutation> = match &self.tuples[id as usize] {
            TupleData::Group { perms } => perms.clone(),
            TupleData::Code { mats } => {
                let alphabet = self
                    .alphabet
                    .as_ref()
                    .ok_or(Error::MissingTupleData(id as usize))?;
                mats.iter()
                    .map(|m| induced_permutation(self.points, alphabet, m))
                    .collect()
            }
        };
        let mut acc = Permutation::identity(self.points);
        for p in &perms {
            acc = acc.compose(p)?;
        }
        Ok(acc)
    }

    /// JSON form: a list of summands, each with its exact coefficient, the
    /// originating tuple and the cycle census.
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let mut summands = Vec::new();
        for (coeff, tuple, cycles) in self.summands()? {
            let tuple_json = match tuple {
                TupleData::Code { mats } => {
                    serde_json::to_value(mats.iter().map(|m| m.row_major()).collect::<Vec<_>>())
                }
                TupleData::Group { perms } => {
                    serde_json::to_value(perms.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                }
            }
            .map_err(|e| Error::Json(e.to_string()))?;
            summands.push(serde_json::json!({
                "coeff": coeff.to_string(),
                "tuple": tuple_json,
                "cycles": cycles,
            }));
        }
        Ok(serde_json::json!({ "summands": summands }))
    }
}

fn render_tuple(tuple: &TupleData) -> String {
    match tuple {
        TupleData::Code { mats } => {
            let parts: Vec<String> = mats
                .iter()
                .map(|m| {
                    let rows: Vec<String> = m
                        .row_major()
                        .iter()
                        .map(|row| {
                            if row.iter().any(|&v| v > 9) {
                                row.iter()
                                    .map(|v| v.to_string())
                                    .collect::<Vec<_>>()
                                    .join(",")
                            } else {
                                row.iter().map(|v| v.to_string()).collect()
                            }
                        })
                        .collect();
                    rows.join("/")
                })
                .collect();
            format!("({})", parts.join(","))
        }
        TupleData::Group { perms } => {
            let parts: Vec<String> = perms.iter().map(|p| p.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}

impl fmt::Display for CycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let summands = self.summands().map_err(|_| fmt::Error)?;
        if summands.is_empty() {
            return write!(f, "0");
        }
        for (idx, (coeff, tuple, cycles)) in summands.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if !coeff.is_one() {
                write!(f, "({coeff})*")?;
            }
            let rendered = render_tuple(tuple);
            for (pos, (len, count)) in cycles.iter().enumerate() {
                if pos > 0 {
                    write!(f, " ")?;
                }
                write!(f, "s({rendered},{len})^{count}")?;
            }
        }
        Ok(())
    }
}

/// Pull the single tuple id and the cycle pairs out of one s-monomial.
fn split_summand(monomial: &Monomial) -> Result<(u32, Vec<(usize, usize)>)> {
    let mut id: Option<u32> = None;
    let mut cycles = Vec::new();
    for (var, exp) in monomial.powers() {
        let Var::S(s) = var else {
            return Err(Error::CycleBookkeeping);
        };
        match id {
            None => id = Some(s.tuple),
            Some(prev) if prev != s.tuple => return Err(Error::CycleBookkeeping),
            _ => {}
        }
        cycles.push((s.len as usize, *exp as usize));
    }
    let id = id.ok_or(Error::CycleBookkeeping)?;
    Ok((id, cycles))
}

/// Incremental builder; tuples are deduplicated by content so that summands
/// arising from different orbit members collect onto the same indeterminates.
pub struct CycleIndexBuilder {
    points: PointSet,
    tuples: Vec<TupleData>,
    ids: HashMap<TupleData, u32>,
    poly: SparsePoly,
}

impl CycleIndexBuilder {
    pub fn new(points: PointSet) -> Self {
        CycleIndexBuilder {
            points,
            tuples: Vec::new(),
            ids: HashMap::new(),
            poly: SparsePoly::zero(VarFamily::S),
        }
    }

    fn tuple_id(&mut self, data: TupleData) -> u32 {
        if let Some(&id) = self.ids.get(&data) {
            return id;
        }
        let id = self.tuples.len() as u32;
        self.tuples.push(data.clone());
        self.ids.insert(data, id);
        id
    }

    pub fn add_summand(&mut self, data: TupleData, census: &CycleType, weight: &Coeff) {
        let id = self.tuple_id(data);
        let powers: Vec<(Var, u32)> = census
            .iter()
            .map(|(len, count)| {
                (
                    Var::S(SIndex {
                        tuple: id,
                        len: len as u32,
                    }),
                    count as u32,
                )
            })
            .collect();
        self.poly
            .add_term(Monomial::from_powers(powers), weight.clone());
    }

    pub fn finish(
        self,
        alphabet: Option<Arc<Alphabet>>,
        shape: Option<(usize, usize)>,
    ) -> CycleIndex {
        CycleIndex {
            points: self.points,
            alphabet,
            shape,
            tuples: self.tuples,
            poly: self.poly,
        }
    }
}

fn decode_tuple_indices(joints: &[Arc<JointCode>], index: u128) -> Vec<u128> {
    let mut idx = index;
    let mut picks = vec![0u128; joints.len()];
    for k in (0..joints.len()).rev() {
        let sz = joints[k].size();
        picks[k] = idx % sz;
        idx /= sz;
    }
    picks
}

/// Feed every element tuple of the given joint codes into the builder with
/// the given weight.  The product permutation is composed explicitly from
/// the induced permutations, in tuple order, and its disjoint-cycle census
/// recorded.
pub(crate) fn accumulate_joint_cycle_index(
    builder: &mut CycleIndexBuilder,
    joints: &[Arc<JointCode>],
    weight: &Coeff,
    max_tuples: u128,
) -> Result<()> {
    let count = crate::enumerators::tuple_count(joints);
    if count > max_tuples {
        return Err(Error::TooManyTuples {
            count,
            cap: max_tuples,
        });
    }
    let points = builder.points;
    let alphabet = joints[0].alphabet().clone();
    // cache the induced permutation of every member of every joint code
    let member_perms: Vec<Vec<Permutation>> = joints
        .iter()
        .map(|j| {
            j.elements()
                .map(|mat| induced_permutation(points, &alphabet, &mat))
                .collect()
        })
        .collect();
    let results = par::indexed_map(count, |t| {
        let picks = decode_tuple_indices(joints, t);
        let mut product = Permutation::identity(points);
        for (k, &pick) in picks.iter().enumerate() {
            product = product
                .compose(&member_perms[k][pick as usize])
                .expect("common point set");
        }
        let census = product.cycle_counts();
        let mats: Vec<CodewordMatrix> = picks
            .iter()
            .zip(joints)
            .map(|(&w, j)| j.element(w))
            .collect();
        (mats, census)
    });
    for chunk in results {
        for (mats, census) in chunk {
            builder.add_summand(TupleData::Code { mats }, &census, weight);
        }
    }
    Ok(())
}

/// The r-fold complete joint cycle index of joint codes: one summand per
/// element tuple, with indeterminates s(tuple, i) and exponents given by the
/// cycle census of the composed translation.
pub fn joint_cycle_index(
    joints: &[Arc<JointCode>],
    max_tuples: u128,
    max_points: usize,
) -> Result<CycleIndex> {
    assert!(!joints.is_empty());
    let first = &joints[0];
    for j in &joints[1..] {
        if j.alphabet() != first.alphabet() || j.length() != first.length() || j.l() != first.l() {
            return Err(Error::CodeMismatch);
        }
    }
    let points = PointSet::Product {
        n: first.length(),
        m: first.alphabet().size(),
        l: first.l(),
    };
    if points.size() > max_points {
        return Err(Error::PointSetTooLarge {
            size: points.size(),
            cap: max_points,
        });
    }
    let mut builder = CycleIndexBuilder::new(points);
    accumulate_joint_cycle_index(&mut builder, joints, &Coeff::one(), max_tuples)?;
    Ok(builder.finish(
        Some(first.alphabet().clone()),
        Some((first.l(), joints.len())),
    ))
}

/// The r-fold complete joint cycle index of abstract permutation groups on a
/// common point set.
pub fn group_joint_cycle_index(groups: &[&PermGroup]) -> Result<CycleIndex> {
    let mut builder = CycleIndexBuilder::new(groups[0].points());
    accumulate_group_cycle_index(&mut builder, groups, &Coeff::one())?;
    Ok(builder.finish(None, None))
}

pub(crate) fn accumulate_group_cycle_index(
    builder: &mut CycleIndexBuilder,
    groups: &[&PermGroup],
    weight: &Coeff,
) -> Result<()> {
    assert!(!groups.is_empty());
    let points = groups[0].points();
    for g in groups {
        if g.points() != points {
            return Err(Error::PointSetMismatch);
        }
    }
    let mut picks = vec![0usize; groups.len()];
    loop {
        let perms: Vec<Permutation> = picks
            .iter()
            .zip(groups)
            .map(|(&i, g)| g.elements()[i].clone())
            .collect();
        let mut product = Permutation::identity(points);
        for p in &perms {
            product = product.compose(p)?;
        }
        let census = product.cycle_counts();
        builder.add_summand(TupleData::Group { perms }, &census, weight);
        let mut pos = groups.len();
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            if picks[pos] + 1 < groups[pos].order() {
                picks[pos] += 1;
                break;
            }
            picks[pos] = 0;
        }
    }
}

/// Number of coordinates whose tuple column sum is nonzero.
pub fn lr_weight(alphabet: &Alphabet, mats: &[CodewordMatrix]) -> usize {
    let n = mats[0].n();
    let l = mats[0].l();
    (0..n)
        .filter(|&i| {
            (0..l).any(|j| {
                let mut sum = Elem(0);
                for m in mats {
                    sum = alphabet.add(sum, m.entry(j, i));
                }
                sum != Elem(0)
            })
        })
        .count()
}

/// Additive order of an alphabet element.
fn additive_order(alphabet: &Alphabet, e: Elem) -> usize {
    let mut acc = e;
    let mut order = 1;
    while acc != Elem(0) {
        acc = alphabet.add(acc, e);
        order += 1;
    }
    order
}

fn lcm(a: usize, b: usize) -> usize {
    num_integer::lcm(a, b)
}

/// The cycle census the codeword data dictates for one tuple: coordinate i
/// contributes |A|^l / L_i cycles of length L_i, where L_i is the additive
/// order of the column sum at i (1 on zero columns).
fn predicted_census(alphabet: &Alphabet, mats: &[CodewordMatrix]) -> BTreeMap<usize, usize> {
    let n = mats[0].n();
    let l = mats[0].l();
    let block = alphabet.size().pow(l as u32);
    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..n {
        let mut length = 1usize;
        for j in 0..l {
            let mut sum = Elem(0);
            for m in mats {
                sum = alphabet.add(sum, m.entry(j, i));
            }
            length = lcm(length, additive_order(alphabet, sum));
        }
        *census.entry(length).or_insert(0) += block / length;
    }
    census
}

/// Turn a cycle index into the corresponding weight enumerator: each stored
/// tuple becomes the product over coordinates of the x-variable indexed by
/// the coordinate's column matrix.  The stored monomial is recomputed from
/// the codeword data first; a mismatch means the cycle index was built
/// inconsistently and is reported as [`Error::CycleBookkeeping`].
pub fn t_substitution(z: &CycleIndex) -> Result<SparsePoly> {
    let alphabet = match &z.alphabet {
        Some(a) => a.clone(),
        None => {
            return Err(Error::MissingTupleData(0));
        }
    };
    let (l, r) = z.shape.ok_or(Error::MissingTupleData(0))?;
    let mut out = SparsePoly::zero(VarFamily::x(l, r));
    for (monomial, coeff) in z.poly.terms() {
        let (id, cycles) = split_summand(monomial)?;
        let TupleData::Code { mats } = &z.tuples[id as usize] else {
            return Err(Error::MissingTupleData(id as usize));
        };
        let stored: BTreeMap<usize, usize> = cycles.into_iter().collect();
        let predicted = predicted_census(&alphabet, mats);
        if stored != predicted {
            return Err(Error::CycleBookkeeping);
        }
        let n = mats[0].n();
        let mut powers = Vec::with_capacity(n);
        for i in 0..n {
            let columns: Vec<Vec<Elem>> = mats.iter().map(|m| m.column(i)).collect();
            powers.push((Var::X(XIndex::from_columns(l, r, &columns)), 1));
        }
        out.add_term(Monomial::from_powers(powers), coeff.clone());
    }
    Ok(out)
}

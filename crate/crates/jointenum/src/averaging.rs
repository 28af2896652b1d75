//! Averages over equivalence classes: average (l,r)-fold joint weight
//! enumerators, first-position-averaged joint cycle indices, the identity
//! connecting them, and average intersection numbers for codes and for
//! permutation groups.
//!
//! Two normalisations are supported and always reported: `Distinct` divides
//! by the number of distinct equivalent objects, `Uniform` weights each
//! object by how many group elements produce it and divides by the group
//! order.  The two agree whenever stabiliser sizes are constant along the
//! orbit, which holds for all orbits used here; the equality is covered by
//! tests rather than assumed.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::codes::{JointCode, LinearCode};
use crate::cycleindex::{
    accumulate_group_cycle_index, accumulate_joint_cycle_index, t_substitution, CycleIndex,
    CycleIndexBuilder, InducedAction,
};
use crate::enumerators::lr_cjwe;
use crate::error::{Error, Result};
use crate::macwilliams::VerifyReport;
use crate::permgroup::{PermGroup, PointSet};
use crate::polynomial::{Coeff, SparsePoly};

/// How an average is normalised.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AverageMode {
    /// Divide by the number of distinct equivalent objects.
    Distinct,
    /// Weight by multiplicity over the acting group and divide by its order.
    Uniform,
}

impl FromStr for AverageMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "distinct" => Ok(AverageMode::Distinct),
            "uniform" => Ok(AverageMode::Uniform),
            other => Err(Error::Json(format!("unknown mode {other:?}"))),
        }
    }
}

impl std::fmt::Display for AverageMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AverageMode::Distinct => write!(f, "distinct"),
            AverageMode::Uniform => write!(f, "uniform"),
        }
    }
}

/// An averaged value together with the normalisation it used.
#[derive(Clone, Debug)]
pub struct AverageReport<T> {
    pub mode: AverageMode,
    /// Number of distinct equivalent objects averaged over.
    pub orbit_size: usize,
    /// Order of the acting group.
    pub group_order: usize,
    pub value: T,
}

fn weights(mode: AverageMode, mults: &[usize], group_order: usize) -> Vec<BigRational> {
    match mode {
        AverageMode::Distinct => {
            let n = BigInt::from(mults.len());
            mults
                .iter()
                .map(|_| BigRational::new(BigInt::from(1), n.clone()))
                .collect()
        }
        AverageMode::Uniform => mults
            .iter()
            .map(|&m| BigRational::new(BigInt::from(m), BigInt::from(group_order)))
            .collect(),
    }
}

/// Average (l,r)-fold complete joint weight enumerator: the mean of the
/// enumerator over the equivalence class of the first joint code, the other
/// positions held fixed.
pub fn avg_lr_cjwe(
    joints: &[Arc<JointCode>],
    mode: AverageMode,
    max_tuples: u128,
    max_orbit_n: usize,
    max_orbit_l: usize,
) -> Result<AverageReport<SparsePoly>> {
    let orbit = joints[0].equivalence_class(max_orbit_n, max_orbit_l)?;
    let mults: Vec<usize> = orbit.members.iter().map(|(_, m)| *m).collect();
    let ws = weights(mode, &mults, orbit.group_order);
    let mut sum: Option<SparsePoly> = None;
    for ((member, _), w) in orbit.members.iter().zip(&ws) {
        let mut arranged = joints.to_vec();
        arranged[0] = member.clone();
        let poly = lr_cjwe(&arranged, max_tuples)?.scale(w);
        sum = Some(match sum {
            None => poly,
            Some(acc) => acc.add(&poly)?,
        });
    }
    Ok(AverageReport {
        mode,
        orbit_size: orbit.members.len(),
        group_order: orbit.group_order,
        value: sum.expect("orbit is never empty"),
    })
}

/// First-position-averaged joint cycle index for joint codes: the weighted
/// sum of the cycle indices over the equivalence class of the first code.
/// Summands from different orbit members sharing an element tuple collect
/// onto the same indeterminates.
pub fn avg_cycle_index_codes(
    joints: &[Arc<JointCode>],
    mode: AverageMode,
    max_tuples: u128,
    max_points: usize,
    max_orbit_n: usize,
    max_orbit_l: usize,
) -> Result<AverageReport<CycleIndex>> {
    let first = &joints[0];
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
    let orbit = first.equivalence_class(max_orbit_n, max_orbit_l)?;
    let mults: Vec<usize> = orbit.members.iter().map(|(_, m)| *m).collect();
    let ws = weights(mode, &mults, orbit.group_order);
    let mut builder = CycleIndexBuilder::new(points);
    for ((member, _), w) in orbit.members.iter().zip(&ws) {
        let mut arranged = joints.to_vec();
        arranged[0] = member.clone();
        accumulate_joint_cycle_index(&mut builder, &arranged, &Coeff::Rat(w.clone()), max_tuples)?;
    }
    Ok(AverageReport {
        mode,
        orbit_size: orbit.members.len(),
        group_order: orbit.group_order,
        value: builder.finish(
            Some(first.alphabet().clone()),
            Some((first.l(), joints.len())),
        ),
    })
}

/// First-position-averaged joint cycle index for abstract permutation
/// groups: averaged over the conjugate copies of the first group inside the
/// symmetric group on its point set.
pub fn avg_cycle_index_groups(
    groups: &[&PermGroup],
    mode: AverageMode,
) -> Result<AverageReport<CycleIndex>> {
    let copies = groups[0].conjugate_copies()?;
    let mults: Vec<usize> = copies.iter().map(|(_, m)| *m).collect();
    let group_order: usize = mults.iter().sum();
    let ws = weights(mode, &mults, group_order);
    let mut builder = CycleIndexBuilder::new(groups[0].points());
    for ((copy, _), w) in copies.iter().zip(&ws) {
        let mut arranged: Vec<&PermGroup> = groups.to_vec();
        arranged[0] = copy;
        accumulate_group_cycle_index(&mut builder, &arranged, &Coeff::Rat(w.clone()))?;
    }
    Ok(AverageReport {
        mode,
        orbit_size: copies.len(),
        group_order,
        value: builder.finish(None, None),
    })
}

/// Check that the directly averaged enumerator equals the substitution image
/// of the averaged cycle index, under one common normalisation.
pub fn verify_average_identity(
    joints: &[Arc<JointCode>],
    mode: AverageMode,
    max_tuples: u128,
    max_points: usize,
    max_orbit_n: usize,
    max_orbit_l: usize,
) -> Result<VerifyReport> {
    let direct = avg_lr_cjwe(joints, mode, max_tuples, max_orbit_n, max_orbit_l)?;
    let averaged_z = avg_cycle_index_codes(
        joints,
        mode,
        max_tuples,
        max_points,
        max_orbit_n,
        max_orbit_l,
    )?;
    let substituted = t_substitution(&averaged_z.value)?;
    Ok(VerifyReport::new(direct.value, substituted))
}

/// Mean of |C' intersect D| over the codes C' equivalent to C.
pub fn avg_intersection_codes(
    c: &Arc<LinearCode>,
    d: &Arc<LinearCode>,
    mode: AverageMode,
    max_orbit_n: usize,
) -> Result<AverageReport<BigRational>> {
    if c.alphabet() != d.alphabet() || c.length() != d.length() {
        return Err(Error::CodeMismatch);
    }
    let orbit = c.equivalence_class(max_orbit_n)?;
    let mults: Vec<usize> = orbit.members.iter().map(|(_, m)| *m).collect();
    let ws = weights(mode, &mults, orbit.group_order);
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for ((member, _), w) in orbit.members.iter().zip(&ws) {
        let overlap = member.intersection_size(d)?;
        sum += w * BigRational::from_integer(BigInt::from(overlap));
    }
    Ok(AverageReport {
        mode,
        orbit_size: orbit.members.len(),
        group_order: orbit.group_order,
        value: sum,
    })
}

/// Mean of |G' intersect H| over the conjugate copies G' of G in the
/// symmetric group on the common point set.
pub fn avg_intersection_groups(
    g: &PermGroup,
    h: &PermGroup,
    mode: AverageMode,
) -> Result<AverageReport<BigRational>> {
    if g.points() != h.points() {
        return Err(Error::PointSetMismatch);
    }
    let copies = g.conjugate_copies()?;
    let mults: Vec<usize> = copies.iter().map(|(_, m)| *m).collect();
    let group_order: usize = mults.iter().sum();
    let ws = weights(mode, &mults, group_order);
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for ((copy, _), w) in copies.iter().zip(&ws) {
        let overlap = copy.intersection_size(h)?;
        sum += w * BigRational::from_integer(BigInt::from(overlap));
    }
    Ok(AverageReport {
        mode,
        orbit_size: copies.len(),
        group_order,
        value: sum,
    })
}

/// Mean of |G(C') intersect H(D)| with the copies of G(C) taken as the
/// groups induced by the codes equivalent to C, all acting on
/// {1..n} x alphabet.
pub fn avg_intersection_code_induced(
    c: &Arc<LinearCode>,
    d: &Arc<LinearCode>,
    mode: AverageMode,
    max_orbit_n: usize,
    max_points: usize,
) -> Result<AverageReport<BigRational>> {
    if c.alphabet() != d.alphabet() || c.length() != d.length() {
        return Err(Error::CodeMismatch);
    }
    let h = InducedAction::new(JointCode::single(d.clone()), max_points)?.group();
    let orbit = c.equivalence_class(max_orbit_n)?;
    let mults: Vec<usize> = orbit.members.iter().map(|(_, m)| *m).collect();
    let ws = weights(mode, &mults, orbit.group_order);
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for ((member, _), w) in orbit.members.iter().zip(&ws) {
        let g = InducedAction::new(JointCode::single(member.clone()), max_points)?.group();
        let overlap = g.intersection_size(&h)?;
        sum += w * BigRational::from_integer(BigInt::from(overlap));
    }
    Ok(AverageReport {
        mode,
        orbit_size: orbit.members.len(),
        group_order: orbit.group_order,
        value: sum,
    })
}

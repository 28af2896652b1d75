//! Averages over equivalence classes: the averaged cycle index of two
//! subgroups of S_3, the averaged joint weight enumerator of a code orbit,
//! and the identity connecting the two pipelines.
//!
//! ```bash
//! cargo run -p jointenum --example averaging
//! ```

use jointenum::codes::{MAX_CODE_WORDS, MAX_ORBIT_L, MAX_ORBIT_N};
use jointenum::cycleindex::MAX_POINTS;
use jointenum::enumerators::MAX_ENUM_TUPLES;
use jointenum::permgroup::MAX_GROUP;
use jointenum::{
    avg_cycle_index_groups, avg_lr_cjwe, verify_average_identity, Alphabet, AverageMode, Elem,
    JointCode, LinearCode, PermGroup, Permutation, PointSet,
};

fn main() -> jointenum::Result<()> {
    // averaged pair cycle index over the three conjugates of <(1,2)> in S_3
    let points = PointSet::Abstract { n: 3 };
    let g1 = PermGroup::closure(
        points,
        &[Permutation::from_cycles(points, &[&[1, 2]])?],
        MAX_GROUP,
    )?;
    let g2 = PermGroup::closure(
        points,
        &[Permutation::from_cycles(points, &[&[1, 3, 2]])?],
        MAX_GROUP,
    )?;
    let avg = avg_cycle_index_groups(&[&g1, &g2], AverageMode::Distinct)?;
    println!(
        "<(1,2)> has {} conjugate copies in S_3; averaged cycle index:",
        avg.orbit_size
    );
    println!("{}\n", avg.value);

    // averaged joint enumerator over the orbit of a singleton-support code
    let f2 = Alphabet::field(2, 1, None)?;
    let c1 = LinearCode::span(
        f2.clone(),
        3,
        &[vec![Elem(1), Elem(0), Elem(0)]],
        MAX_CODE_WORDS,
    )?;
    let zero = LinearCode::zero(f2.clone(), 3);
    let joints = [JointCode::single(c1), JointCode::single(zero)];
    for mode in [AverageMode::Distinct, AverageMode::Uniform] {
        let report = avg_lr_cjwe(&joints, mode, MAX_ENUM_TUPLES, MAX_ORBIT_N, MAX_ORBIT_L)?;
        println!(
            "{} average over {} codes: {}",
            report.mode, report.orbit_size, report.value
        );
    }

    // both averaging pipelines agree
    let c2 = LinearCode::span(
        f2.clone(),
        3,
        &[vec![Elem(1), Elem(1), Elem(0)]],
        MAX_CODE_WORDS,
    )?;
    let joints = [JointCode::single(c2.clone()), JointCode::single(c2)];
    let report = verify_average_identity(
        &joints,
        AverageMode::Distinct,
        MAX_ENUM_TUPLES,
        MAX_POINTS,
        MAX_ORBIT_N,
        MAX_ORBIT_L,
    )?;
    println!(
        "\naverage enumerator == substituted average cycle index: {}",
        report.equal
    );
    Ok(())
}

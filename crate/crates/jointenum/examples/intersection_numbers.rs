//! Average intersection numbers: the code-level mean |C' n D| over the
//! orbit of C, the permutation-group analogue, and their agreement.
//!
//! ```bash
//! cargo run -p jointenum --example intersection_numbers
//! ```

use jointenum::codes::{MAX_CODE_WORDS, MAX_ORBIT_N};
use jointenum::cycleindex::MAX_POINTS;
use jointenum::permgroup::MAX_GROUP;
use jointenum::{
    avg_intersection_code_induced, avg_intersection_codes, avg_intersection_groups, Alphabet,
    AverageMode, Elem, LinearCode, PermGroup, Permutation, PointSet,
};

fn main() -> jointenum::Result<()> {
    // abstract groups: the transposition subgroup against the 3-cycles
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
    let avg = avg_intersection_groups(&g1, &g2, AverageMode::Distinct)?;
    println!(
        "average |G' n H| over the {} copies of <(1,2)>: {}",
        avg.orbit_size, avg.value
    );

    // codes with singleton supports: the mean intersection is 4/3
    let f2 = Alphabet::field(2, 1, None)?;
    let c = LinearCode::span(
        f2.clone(),
        3,
        &[vec![Elem(1), Elem(0), Elem(0)]],
        MAX_CODE_WORDS,
    )?;
    let d = LinearCode::span(
        f2.clone(),
        3,
        &[vec![Elem(0), Elem(1), Elem(0)]],
        MAX_CODE_WORDS,
    )?;
    let code_side = avg_intersection_codes(&c, &d, AverageMode::Distinct, MAX_ORBIT_N)?;
    println!("code-level average:      {}", code_side.value);

    let group_side =
        avg_intersection_code_induced(&c, &d, AverageMode::Distinct, MAX_ORBIT_N, MAX_POINTS)?;
    println!("induced-group average:   {}", group_side.value);
    println!("equal: {}", code_side.value == group_side.value);
    Ok(())
}

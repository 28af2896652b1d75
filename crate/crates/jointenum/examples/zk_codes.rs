//! Everything again over residue rings: Z_4 translations with mixed cycle
//! lengths, the cycle-index substitution, and MacWilliams duality with
//! k-th roots of unity.
//!
//! ```bash
//! cargo run -p jointenum --example zk_codes
//! ```

use jointenum::codes::{MAX_CODE_WORDS, MAX_DUAL_SEARCH};
use jointenum::cycleindex::{MAX_CYCLE_TUPLES, MAX_POINTS};
use jointenum::enumerators::MAX_ENUM_TUPLES;
use jointenum::{
    joint_cycle_index, lr_cjwe, t_substitution, verify_duality, Alphabet, DualPattern, Elem,
    JointCode, LinearCode,
};

fn main() -> jointenum::Result<()> {
    // over Z_4 the word (1, 2) mixes translation orders 4 and 2
    let z4 = Alphabet::ring(4)?;
    let c = LinearCode::span(z4.clone(), 2, &[vec![Elem(1), Elem(2)]], MAX_CODE_WORDS)?;
    println!(
        "Z_4 code spanned by (1,2): {:?}",
        c.words()
            .iter()
            .map(|w| w.iter().map(|e| e.0).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );
    let joints = [JointCode::single(c.clone())];
    let z = joint_cycle_index(&joints, MAX_CYCLE_TUPLES, MAX_POINTS)?;
    println!("cycle index:\n{z}");
    let substituted = t_substitution(&z)?;
    let direct = lr_cjwe(&joints, MAX_ENUM_TUPLES)?;
    println!(
        "substitution recovers the enumerator: {}",
        substituted == direct
    );

    let report = verify_duality(
        &joints,
        &DualPattern::new(vec![true]),
        MAX_ENUM_TUPLES,
        MAX_DUAL_SEARCH,
    )?;
    println!("Z_4 MacWilliams identity: {}", report.equal);
    println!("dual enumerator: {}", report.lhs);

    // a Z_6 pair, all four dual patterns
    let z6 = Alphabet::ring(6)?;
    let a = LinearCode::span(z6.clone(), 2, &[vec![Elem(1), Elem(5)]], MAX_CODE_WORDS)?;
    let b = LinearCode::span(z6.clone(), 2, &[vec![Elem(2), Elem(2)]], MAX_CODE_WORDS)?;
    let joints = [JointCode::single(a), JointCode::single(b)];
    for pattern in DualPattern::all(2) {
        let report = verify_duality(&joints, &pattern, MAX_ENUM_TUPLES, MAX_DUAL_SEARCH)?;
        println!("Z_6 pattern ({pattern}): equal = {}", report.equal);
    }
    Ok(())
}

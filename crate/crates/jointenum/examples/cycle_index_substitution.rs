//! The code-induced translation action, its complete joint cycle index, and
//! the substitution that recovers the joint weight enumerator from it.
//!
//! ```bash
//! cargo run -p jointenum --example cycle_index_substitution
//! ```

use jointenum::codes::MAX_CODE_WORDS;
use jointenum::cycleindex::{MAX_CYCLE_TUPLES, MAX_POINTS};
use jointenum::enumerators::MAX_ENUM_TUPLES;
use jointenum::{
    joint_cycle_index, lr_cjwe, t_substitution, Alphabet, Elem, InducedAction, JointCode,
    LinearCode,
};

fn main() -> jointenum::Result<()> {
    let f2 = Alphabet::field(2, 1, None)?;
    let c = LinearCode::span(
        f2.clone(),
        2,
        &[vec![Elem(0), Elem(1)], vec![Elem(1), Elem(0)]],
        MAX_CODE_WORDS,
    )?;
    let d = LinearCode::span(f2.clone(), 2, &[vec![Elem(1), Elem(1)]], MAX_CODE_WORDS)?;

    // each codeword acts on {1,2} x F_2 by translating the second slot
    let action = InducedAction::new(JointCode::single(d.clone()), MAX_POINTS)?;
    for mat in action.joint().elements() {
        let perm = action.permutation(&mat);
        println!(
            "word {:?} acts as {perm} with cycle counts {:?}",
            mat.row_major(),
            perm.cycle_counts().0
        );
    }

    let joints = [JointCode::single(c), JointCode::single(d)];
    let z = joint_cycle_index(&joints, MAX_CYCLE_TUPLES, MAX_POINTS)?;
    println!("\njoint cycle index ({} summands):", z.num_summands());
    println!("{z}");

    let substituted = t_substitution(&z)?;
    let direct = lr_cjwe(&joints, MAX_ENUM_TUPLES)?;
    println!("\nsubstituted:  {substituted}");
    println!("direct:       {direct}");
    println!("equal: {}", substituted == direct);
    Ok(())
}

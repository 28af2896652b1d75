//! The character matrix, the tensor MacWilliams transform, and its
//! verification against directly enumerated dual codes for every dual
//! pattern.
//!
//! ```bash
//! cargo run -p jointenum --example macwilliams_duality
//! ```

use jointenum::codes::{MAX_CODE_WORDS, MAX_DUAL_SEARCH};
use jointenum::enumerators::MAX_ENUM_TUPLES;
use jointenum::{
    character_matrix, cwe_genus, macwilliams_transform, verify_duality, Alphabet, DualPattern,
    Elem, JointCode, LinearCode,
};

fn main() -> jointenum::Result<()> {
    let f3 = Alphabet::field(3, 1, None)?;
    let t = character_matrix(&f3);
    println!("character matrix over F_3:");
    for a in f3.elements() {
        let row: Vec<String> = f3.elements().map(|b| t.entry(a, b).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    let c = LinearCode::span(
        f3.clone(),
        3,
        &[vec![Elem(1), Elem(1), Elem(2)]],
        MAX_CODE_WORDS,
    )?;
    let enumerator = cwe_genus(&c, 1, MAX_ENUM_TUPLES)?;
    println!("\nenumerator of C:        {enumerator}");
    let transformed = macwilliams_transform(
        &enumerator,
        &DualPattern::new(vec![true]),
        &f3,
        &[c.size() as u128],
    )?;
    println!("transformed:            {transformed}");
    let dual = c.dual(MAX_DUAL_SEARCH)?;
    let direct = cwe_genus(&dual, 1, MAX_ENUM_TUPLES)?;
    println!("enumerator of the dual: {direct}");
    println!("equal: {}\n", transformed == direct);

    // every dual pattern on a pair of binary codes
    let f2 = Alphabet::field(2, 1, None)?;
    let a = LinearCode::span(
        f2.clone(),
        3,
        &[vec![Elem(1), Elem(1), Elem(0)]],
        MAX_CODE_WORDS,
    )?;
    let b = LinearCode::span(
        f2.clone(),
        3,
        &[vec![Elem(0), Elem(1), Elem(1)]],
        MAX_CODE_WORDS,
    )?;
    let joints = [JointCode::single(a), JointCode::single(b)];
    for pattern in DualPattern::all(2) {
        let report = verify_duality(&joints, &pattern, MAX_ENUM_TUPLES, MAX_DUAL_SEARCH)?;
        println!("pattern ({pattern}): equal = {}", report.equal);
    }
    Ok(())
}

//! Complete weight enumerators at several genera, the pair enumerator of
//! two codes, and the general (l,r)-fold joint enumerator.
//!
//! ```bash
//! cargo run -p jointenum --example weight_enumerators
//! ```

use jointenum::codes::MAX_CODE_WORDS;
use jointenum::enumerators::MAX_ENUM_TUPLES;
use jointenum::{cjwe, cwe_genus, lr_cjwe, Alphabet, Elem, JointCode, LinearCode};

fn main() -> jointenum::Result<()> {
    let f2 = Alphabet::field(2, 1, None)?;

    // C = all of F_2^2, D = the repetition code {00, 11}
    let c = LinearCode::span(
        f2.clone(),
        2,
        &[vec![Elem(0), Elem(1)], vec![Elem(1), Elem(0)]],
        MAX_CODE_WORDS,
    )?;
    let d = LinearCode::span(f2.clone(), 2, &[vec![Elem(1), Elem(1)]], MAX_CODE_WORDS)?;

    println!("C = full F_2^2, D = {{00, 11}}");
    for genus in 1..=2 {
        let poly = cwe_genus(&d, genus, MAX_ENUM_TUPLES)?;
        println!("genus-{genus} enumerator of D:  {poly}");
    }

    let pair = cjwe(&c, &d, MAX_ENUM_TUPLES)?;
    println!("joint enumerator of (C, D):  {pair}");

    // the same data as 1-fold joint codes through the general interface
    let joints = [JointCode::single(c.clone()), JointCode::single(d.clone())];
    assert_eq!(lr_cjwe(&joints, MAX_ENUM_TUPLES)?, pair);

    // a genuine (2,2)-fold case: CxD against DxD
    let pi1 = JointCode::new(vec![c, d.clone()])?;
    let pi2 = JointCode::power(d, 2);
    let poly = lr_cjwe(&[pi1.clone(), pi2.clone()], MAX_ENUM_TUPLES)?;
    println!(
        "(2,2)-fold enumerator of (CxD, DxD): {} terms, coefficient sum {}",
        poly.num_terms(),
        poly.coefficient_sum()
    );
    println!("{poly}");
    Ok(())
}

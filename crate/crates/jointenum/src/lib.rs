//! Exact computation of complete (joint) weight enumerators and complete
//! (joint) cycle indices of linear codes over finite fields and Z_k, the
//! substitution map connecting them, MacWilliams duality transforms, and
//! averaged enumerators, cycle indices and intersection numbers.
//!
//! All arithmetic is exact: alphabets use precomputed tables, coefficients
//! are big integers, big rationals or cyclotomic integers, and every
//! identity offered by the crate is checked by computing both sides
//! independently.
//!
//! The `examples/` directory holds one runnable program per capability:
//!
//! ```bash
//! cargo run -p jointenum --example weight_enumerators
//! cargo run -p jointenum --example cycle_index_substitution
//! cargo run -p jointenum --example macwilliams_duality
//! cargo run -p jointenum --example averaging
//! cargo run -p jointenum --example intersection_numbers
//! cargo run -p jointenum --example zk_codes
//! ```
//!
//! A batch CLI over JSON code descriptions is available as the `jointenum`
//! binary; see the crate README.
//!
//! Library use in a nutshell: build codes, enumerate, and check an
//! identity by computing both sides.
//!
//! ```
//! use jointenum::{Alphabet, Elem, JointCode, LinearCode};
//! use jointenum::{joint_cycle_index, lr_cjwe, t_substitution};
//! use jointenum::codes::MAX_CODE_WORDS;
//! use jointenum::cycleindex::{MAX_CYCLE_TUPLES, MAX_POINTS};
//! use jointenum::enumerators::MAX_ENUM_TUPLES;
//!
//! let f2 = Alphabet::field(2, 1, None)?;
//! let c = LinearCode::span(f2, 2, &[vec![Elem(1), Elem(1)]], MAX_CODE_WORDS)?;
//! let joints = [JointCode::single(c)];
//! let z = joint_cycle_index(&joints, MAX_CYCLE_TUPLES, MAX_POINTS)?;
//! assert_eq!(t_substitution(&z)?, lr_cjwe(&joints, MAX_ENUM_TUPLES)?);
//! # Ok::<(), jointenum::Error>(())
//! ```

pub mod algebra;
pub mod averaging;
pub mod cli;
pub mod codes;
pub mod cycleindex;
pub mod enumerators;
mod error;
pub mod macwilliams;
mod par;
pub mod permgroup;
pub mod polynomial;

pub use algebra::{Alphabet, AlphabetSpec, Cyclotomic, Elem};
pub use averaging::{
    avg_cycle_index_codes, avg_cycle_index_groups, avg_intersection_code_induced,
    avg_intersection_codes, avg_intersection_groups, avg_lr_cjwe, verify_average_identity,
    AverageMode, AverageReport,
};
pub use codes::{CodeSpec, CodewordMatrix, IotaAction, JointCode, JointCodeSpec, LinearCode};
pub use cycleindex::{
    group_joint_cycle_index, joint_cycle_index, lr_weight, t_substitution, CycleIndex,
    InducedAction, TupleData,
};
pub use enumerators::{cjwe, cwe_genus, lr_cjwe};
pub use error::{Error, Result};
pub use macwilliams::{
    character_matrix, macwilliams_transform, verify_duality, CharacterMatrix, DualPattern,
    VerifyReport,
};
pub use permgroup::{CycleType, PermGroup, Permutation, PointSet};
pub use polynomial::{Coeff, Monomial, SIndex, SparsePoly, Var, VarFamily, XIndex};

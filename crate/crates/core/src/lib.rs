//! ℓ-weights, the braid group action, the block group `Xi_q` and
//! ℓ-characters for quantum loop algebras, all in exact arithmetic.
//!
//! Spectral parameters are symbolic: `a q^k` is stored as an orbit name
//! and the integer `k`, which makes every identity an exact statement about
//! integer exponents.

pub mod braid;
pub mod cartan;
pub mod error;
pub mod intlin;
pub mod laurent;
pub mod lweight;
pub mod qchar;
pub mod verify;
pub mod weyl;
pub mod xi;

pub use braid::{
    braid_act, braid_act_word, cone_check, lroot_decompose, simple_lroot, twist_by_w0, LRootDecomposition, Sign,
    WordAction,
};
pub use cartan::{cartan_data, dual_coxeter, CartanData, Family, LieType};
pub use error::{Error, Result};
pub use laurent::Laurent;
pub use lweight::{dual_lweight, fundamental_lweight, parse_lcharacter, parse_lweight, LCharacter, LWeight, Orbit, SpectralParam};
pub use qchar::{
    builtin_table, cyclicity_order, dn_node2_char, fundamental_char, minuscule_char, sl2_eval_char, sl2_tensor_irreducible,
    tensor_char, weight_projection, weyl_module_dim, MultTable, Sl2String,
};
pub use verify::{verify_all, verify_suite, Check, Report, Status, DEFAULT_SEED, SUITES};
pub use weyl::{RootCoords, Weight, WeylElement, WeylGroup};
pub use xi::{
    blocks_linked, classes_equal, elliptic_class, parse_elliptic, relation_set, seed_nodes, tensor_class, trivial_sets,
    EllipticCharacter, RelationSet, TrivialSet, XiFamily,
};

//! Braid words, the Artin action on free groups, and the maps relating
//! `B4`, `B3`, `Aut+(F2)` and `SL2(Z)`.

mod aut;
mod ferrari;
mod words;

pub use aut::{aut_abelianize, inner_conjugator, FreeAut};
pub use ferrari::{
    b3_to_sl2, central_exponent, conjugation_table, dfg, embed_kernel, ferrari_section,
    ferrari_star, pullback_check, pullback_lift, semidirect_decompose, ConjugationTable,
    SemidirectCoord, KERNEL_X, KERNEL_Y, TABLE_DEPTH,
};
pub use words::{
    artin_action, artin_action_quotient, braid_eq, free_reduce, hodge_parity, BraidWord, FreeWord,
};

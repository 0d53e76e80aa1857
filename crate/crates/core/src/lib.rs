pub mod algebra;
pub mod cli;
pub mod composition;
pub mod error;
pub mod format;
pub mod limits;
pub mod linalg;
pub mod matrices;
pub mod quotients;
pub mod reference;
pub mod sequences;
pub mod verify;
pub mod words;

pub use algebra::{expand_in_basis, BasisId, Element};
pub use composition::{comp, compositions_of, Composition, Split, SplitKind};
pub use error::{Error, Result};
pub use matrices::{transition_matrix, Layout, Pair, TransitionMatrix};
pub use quotients::{
    c_coefficient, d_coefficient, t_product, u_product, Quotient, QuotientExpansion,
};
pub use words::{
    convolution, pack, packed_words_of, permutations_of, shifted_shuffle, standardize, PackedWord,
    Permutation,
};

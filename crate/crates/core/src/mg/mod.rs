//! Stabler-style minimalist grammars as a partial algebra on labelled planar trees.

pub mod checks;
mod features;
mod merge;
mod structure;
mod tree;

pub use features::{Feature, FeatureKind, FeatureString};
pub use merge::{
    dom_im_n, external_merge, im_candidates, im_n_certificates, in_dom_em, in_dom_im,
    internal_merge, internal_merge_at, iterated_internal_merge, iterated_internal_merge_at,
    sequential_internal_merge, ImMatch, ImNCertificate, MatchingMode, SmcMode,
};
pub use structure::{
    coproduct_i, coproduct_i_basis, coset_reduce, decompositions_i, domain_cuts, in_domain, in_domain_n,
    intmergeprod, product_i, product_i_basis, Decomposition, IntMergeProduct, MgSum, MgTensor,
};
pub use tree::{
    consume_head, head, head_features, head_index, head_leaf, leaf_projections, maximal_projection, mg_leaf, with_features, Arrow,
    MgLeaf, MgTree,
};

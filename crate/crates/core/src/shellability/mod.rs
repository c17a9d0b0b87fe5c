//! Recursive atom orderings and falling chains.

mod falling;
mod rao;

pub use falling::{
    betti_via_fch, betti_via_fch_with, falling_chains, falling_chains_with, histogram, increments_check, is_border,
    FallingChain,
};
pub use rao::{
    dual_lex_certificate, dual_lex_certificate_with, dual_lex_cmp, least_atom, search_rao, search_rao_with,
    verify_rao, RaoCertificate, RaoCondition, RaoJson, RaoVerdict, RaoViolation,
};

/// Environment variable overriding [`Limits::faces`].
pub const FACE_GUARD_ENV: &str = "PROPERDIV_GUARD_FACES";

/// Resource guards. Every builder and enumerator checks the relevant field
/// and fails with [`Error::Guard`](crate::Error::Guard) instead of running away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by the Boolean lattice builder.
    pub boolean_rank: usize,
    /// Largest element count of a constructed poset.
    pub elements: usize,
    /// Largest poset handed to the isomorphism tester.
    pub iso_elements: usize,
    /// Largest number of chains produced by an enumerator.
    pub chains: usize,
    /// Largest number of faces of a simplicial complex.
    pub faces: usize,
    /// Largest poset handed to the exhaustive recursive-atom-ordering search.
    pub rao_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            boolean_rank: 12,
            elements: 1_000_000,
            iso_elements: 5_000,
            chains: 5_000_000,
            faces: 20_000_000,
            rao_elements: 24,
        }
    }
}

impl Limits {
    /// Defaults, with the face guard taken from `PROPERDIV_GUARD_FACES` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(faces) = std::env::var(FACE_GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.faces = faces;
        }
        limits
    }
}

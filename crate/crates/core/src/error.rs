use thiserror::Error;

/// Errors shared by all modules.
///
/// `Domain`, `Argument` and `Size` are caller mistakes; `Guard` means a
/// resource limit from [`crate::Limits`] was hit before any answer was
/// produced. `NoMonochromaticPair` is a refutation: the weight-h pair search
/// of the avoiding-set extraction came up empty, which is impossible for an
/// NAE-preserving function and therefore signals a non-polymorphism input
/// (or a bug).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("size bound violated: {0}")]
    Size(String),

    #[error("{guard} guard exceeded: requested {requested}, limit {limit}")]
    Guard {
        guard: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error(
        "no monochromatic disjoint pair among the {candidates} weight-{weight} \
         candidate inputs ({colours} colours seen)"
    )]
    NoMonochromaticPair {
        weight: u32,
        candidates: usize,
        colours: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }

    pub(crate) fn guard(guard: &'static str, requested: u128, limit: u128) -> Self {
        Error::Guard {
            guard,
            requested,
            limit,
        }
    }
}

use crate::geometry::SiteId;

/// Errors raised by the connectivity structures.
///
/// Every rejected operation leaves the structure it was called on unchanged.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid site: {0}")]
    InvalidSite(String),
    #[error("site {0} is already present")]
    DuplicateSite(SiteId),
    #[error("site {0} is not present")]
    UnknownSite(SiteId),
    #[error("cannot expand the component tree while {0} empty leaves remain queued")]
    QueueNotEmpty(usize),
    #[error("cannot insert an empty component")]
    EmptyComponent,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

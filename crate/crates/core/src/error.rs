use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::fingerprint::Fingerprint;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("fingerprint mismatch: expected {expected}, computed {actual}")]
    FingerprintMismatch {
        expected: Fingerprint,
        actual: Fingerprint,
    },

    #[error("block descriptors do not match segment content: {0}")]
    DescriptorMismatch(String),

    #[error("segment {0} is not stored")]
    UnknownSegment(Fingerprint),

    #[error("unknown vm {0:?}")]
    UnknownVm(String),

    #[error("unknown version {version} of vm {vm:?}")]
    UnknownVersion { vm: String, version: u64 },

    #[error("version {got} out of order for vm {vm:?}: expected {expected}")]
    OutOfOrderVersion { vm: String, expected: u64, got: u64 },

    #[error("dangling block reference: segment {segment} block {block}")]
    DanglingBlock { segment: Fingerprint, block: u32 },

    #[error("segment {0} already had blocks removed")]
    RemovalAlreadyApplied(Fingerprint),

    #[error("refcount underflow on segment {segment} block {block}")]
    RefcountUnderflow { segment: Fingerprint, block: u32 },

    #[error("refcount overflow on segment {segment} block {block}")]
    RefcountOverflow { segment: Fingerprint, block: u32 },

    #[error("removal victim still referenced: segment {segment} block {block}")]
    VictimStillReferenced { segment: Fingerprint, block: u32 },

    #[error("corrupt pointer chain for vm {vm:?} version {version} block {ordinal}: {reason}")]
    CorruptChain {
        vm: String,
        version: u64,
        ordinal: u64,
        reason: String,
    },

    #[error("corrupt file {path}: {reason}")]
    CorruptFile { path: PathBuf, reason: String },

    #[error("store config mismatch: {0}")]
    ConfigMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: &Path, source: io::Error) -> Self {
        Error::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub(crate) fn corrupt(path: &Path, reason: impl Into<String>) -> Self {
        Error::CorruptFile {
            path: path.to_path_buf(),
            reason: reason.into(),
        }
    }
}

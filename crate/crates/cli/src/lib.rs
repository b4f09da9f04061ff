//! Library surface of the batch front end: graph formats and
//! certificate documents, reused by the binary and the test suites.

pub mod cert;
pub mod formats;

//! Versioned certificate documents: every command emits one, with the
//! verification bit recomputed at emission time.

use serde::Serialize;
use sha2::{Digest, Sha256};
use tk5_core::graph::Graph;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct Verification {
    pub verified: bool,
    pub checker: String,
}

#[derive(Serialize)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub command: String,
    pub input_digest: String,
    pub outcome: serde_json::Value,
    pub verification: Verification,
}

impl CertificateDocument {
    pub fn new(
        command: &str,
        g: Option<&Graph>,
        outcome: serde_json::Value,
        verified: bool,
        checker: &str,
    ) -> CertificateDocument {
        CertificateDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            input_digest: g.map(input_digest).unwrap_or_default(),
            outcome,
            verification: Verification {
                verified,
                checker: checker.to_string(),
            },
        }
    }

    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("document serializes")
        );
    }
}

/// Digest of the canonical edge-list encoding.
pub fn input_digest(g: &Graph) -> String {
    let canonical = crate::formats::emit_graph(g, crate::formats::GraphFormat::EdgeList);
    let mut hasher = Sha256::new();
    hasher.update(&canonical);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

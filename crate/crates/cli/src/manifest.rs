//! Run manifest: enough provenance to re-run any command and verify its
//! inputs byte for byte.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub tool_version: String,
    pub timestamp_unix: u64,
    pub scheme_id: Option<String>,
    pub scheme_sha256: Option<String>,
    pub input_sha256: BTreeMap<String, String>,
    pub k: Option<[i64; 2]>,
    pub missing_policy: Option<String>,
    pub flags: BTreeMap<String, String>,
    pub outputs: Vec<String>,
    pub output_sha256: BTreeMap<String, String>,
    pub warnings: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str) -> RunManifest {
        RunManifest {
            command: command.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            scheme_id: None,
            scheme_sha256: None,
            input_sha256: BTreeMap::new(),
            k: None,
            missing_policy: None,
            flags: BTreeMap::new(),
            outputs: Vec::new(),
            output_sha256: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serialization is infallible")
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

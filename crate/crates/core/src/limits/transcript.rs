use sha2::{Digest, Sha256};

use crate::poly::MultiPoly;

/// Ordered log of checked identities. Each line carries the normal form
/// that witnesses the identity and a hash of the identity with its witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    lines: Vec<String>,
}

impl Transcript {
    pub fn record(&mut self, label: &str, identity: &str, normal_form: &MultiPoly) {
        let nf = normal_form.to_string();
        let digest = Sha256::digest(format!("{identity}\n{nf}").as_bytes());
        self.lines
            .push(format!("{label}: {identity}; nf = {nf}; sha256 = {}", hex::encode(&digest[..8])));
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn extend(&mut self, other: Transcript) {
        self.lines.extend(other.lines);
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }
}

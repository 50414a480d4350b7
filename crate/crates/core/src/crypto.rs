//! SHA-256 / HMAC-SHA-256 primitives shared by every module.
//!
//! All constructions in this crate hang off two primitives and a counter-mode
//! expander, each call domain-separated by a single leading byte. The byte
//! values are collected in [`domain`] so collisions between constructions are
//! impossible to introduce by accident.

use hmac::{Hmac, Mac};
use sha2::{Digest, Sha256};

/// Output length of the hash and MAC, in bytes.
pub const HASH_LEN: usize = 32;

type HmacSha256 = Hmac<Sha256>;

/// Domain-separation bytes. One byte per construction, never reused.
pub mod domain {
    pub const POOL_ABSORB: u8 = 0x01;
    pub const POOL_EXTRACT: u8 = 0x02;
    pub const POOL_ADVANCE: u8 = 0x03;

    pub const PRG_SEED: u8 = 0x10;
    pub const PRG_OUTPUT: u8 = 0x11;
    pub const PRG_ADVANCE: u8 = 0x12;
    pub const PRG_RESEED: u8 = 0x13;

    pub const IDVV_INIT: u8 = 0x20;
    pub const IDVV_NEXT: u8 = 0x21;
    pub const IDVV_DERIVE: u8 = 0x22;

    pub const REG_LTK: u8 = 0x30;
    pub const REG_CONFIRM: u8 = 0x31;
    pub const ASSOC_CHALLENGE: u8 = 0x32;
    pub const ASSOC_PROOF: u8 = 0x33;
    pub const SESSION_SEED: u8 = 0x34;
    pub const SESSION_KEY: u8 = 0x35;
    pub const RATCHET: u8 = 0x36;
    pub const RATCHET_SEED: u8 = 0x37;
    pub const RATCHET_KEY: u8 = 0x38;
    pub const ASSOC_DONE: u8 = 0x39;

    pub const BLOB_ENC: u8 = 0x41;
    pub const BLOB_MAC: u8 = 0x42;
    pub const GRANT_BOX: u8 = 0x43;
    pub const TICKET_BOX: u8 = 0x44;

    pub const REGISTRY_LINE: u8 = 0x50;
}

/// SHA-256 over a domain byte followed by the given parts, in order.
pub fn hash_parts(domain: u8, parts: &[&[u8]]) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update([domain]);
    for p in parts {
        h.update(p);
    }
    h.finalize().into()
}

/// HMAC-SHA-256 keyed by `key` over a domain byte followed by the parts.
pub fn mac_parts(key: &[u8], domain: u8, parts: &[&[u8]]) -> [u8; 32] {
    let mut m = HmacSha256::new_from_slice(key).expect("hmac accepts any key length");
    m.update(&[domain]);
    for p in parts {
        m.update(p);
    }
    m.finalize().into_bytes().into()
}

/// HMAC-SHA-256 over raw bytes, no domain prefix. Used where the message
/// already carries its own framing (envelope MACs, registry lines).
pub fn mac_raw(key: &[u8], data: &[u8]) -> [u8; 32] {
    let mut m = HmacSha256::new_from_slice(key).expect("hmac accepts any key length");
    m.update(data);
    m.finalize().into_bytes().into()
}

/// Counter-mode expansion of a 32-byte key to `n` bytes:
/// `SHA-256(key ‖ be32(0)) ‖ SHA-256(key ‖ be32(1)) ‖ …` truncated to `n`.
pub fn expand(key: &[u8; 32], n: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(n);
    let mut block: u32 = 0;
    while out.len() < n {
        let mut h = Sha256::new();
        h.update(key);
        h.update(block.to_be_bytes());
        let digest = h.finalize();
        let take = (n - out.len()).min(HASH_LEN);
        out.extend_from_slice(&digest[..take]);
        block += 1;
    }
    out
}

/// Constant-time equality for MACs and tags.
pub fn ct_eq(a: &[u8], b: &[u8]) -> bool {
    use subtle::ConstantTimeEq;
    a.len() == b.len() && bool::from(a.ct_eq(b))
}

/// XOR `data` in place with the keystream expanded from `key`.
pub fn xor_keystream(data: &mut [u8], key: &[u8; 32]) {
    let ks = expand(key, data.len());
    for (d, k) in data.iter_mut().zip(ks) {
        *d ^= k;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // FIPS 180-4 vector, pins the hash backend before anything trusts it.
    #[test]
    fn sha256_reference_vector() {
        let d: [u8; 32] = Sha256::digest(b"abc").into();
        assert_eq!(
            hex::encode(d),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    // RFC 4231 test case 2.
    #[test]
    fn hmac_reference_vector() {
        let tag = mac_raw(b"Jefe", b"what do ya want for nothing?");
        assert_eq!(
            hex::encode(tag),
            "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843"
        );
    }

    #[test]
    fn expand_is_prefix_consistent() {
        let key = [7u8; 32];
        let long = expand(&key, 100);
        let short = expand(&key, 33);
        assert_eq!(&long[..33], &short[..]);
        assert_eq!(long.len(), 100);
    }

    #[test]
    fn domain_bytes_change_output() {
        let a = hash_parts(domain::POOL_EXTRACT, &[b"x"]);
        let b = hash_parts(domain::POOL_ADVANCE, &[b"x"]);
        assert_ne!(a, b);
    }

    #[test]
    fn ct_eq_rejects_length_mismatch() {
        assert!(!ct_eq(b"abc", b"abcd"));
        assert!(ct_eq(b"abc", b"abc"));
    }
}

//! Logically-centralized security services for SDN control planes.
//!
//! The crate provides the building blocks of an `anchor`: a trusted,
//! logically-centralized subsystem that supplies security services to
//! controllers and forwarding devices. Everything is symmetric-key only
//! (SHA-256 / HMAC-SHA-256), which keeps the whole stack in a post-quantum
//! posture.
//!
//! Layers, bottom up:
//!
//! - [`entropy`] — multi-source entropy pool with per-source health tests
//!   and forward-secure extraction.
//! - [`prg`] — forward-secure hash-chain generator seeded from the pool;
//!   supplies all nonces, seeds and keys.
//! - [`idvv`] — integrated device verification values: deterministic
//!   per-message one-time secrets shared by two associated endpoints.
//! - [`wire`] — the authenticated envelope framing used on every channel.
//! - [`protocol`] — device registration, anchor-mediated association
//!   (KDC pattern), per-message sealing, key ratcheting and
//!   post-compromise recovery.
//! - [`registry`] / [`policy`] — the anchor's tamper-evident device store
//!   and association authorization rules.
//! - [`service`] — the TCP-facing anchor server plus loopback clients.
//! - [`harness`] — adversarial scenarios and a bounded Dolev-Yao explorer
//!   that checks secrecy and agreement on small protocol instances.
//! - [`bench`] — primitive throughput and channel overhead measurements.

pub mod bench;
pub mod clock;
pub mod crypto;
pub mod entropy;
pub mod harness;
pub mod idvv;
pub mod policy;
pub mod prg;
pub mod protocol;
pub mod registry;
pub mod service;
pub mod wire;

pub use clock::{Clock, SystemClock, TestClock};
pub use entropy::{EntropyPool, SourceHealth, SourceStatus};
pub use idvv::IdvvState;
pub use policy::{Policy, PolicyRule};
pub use prg::Prg;
pub use protocol::{
    ControllerCreds, DeviceIdentity, MutantFlags, ProtocolError, SessionKeys,
};
pub use registry::{DeviceKind, DeviceRecord, DeviceStatus, Registry};
pub use wire::Envelope;

//! Heterogeneous proxy re-encryption across an identity-based and a
//! certificateless cryptographic domain, plus a simulator for sharing
//! encrypted health records between two blockchains.
//!
//! The crate is organized around five pieces:
//!
//! - [`pairing`] — symmetric-style pairing facade (groups, hash-to-group,
//!   scalars, canonical encodings) over BLS12-381.
//! - [`scheme`] — the re-encryption scheme itself: system setup for both
//!   domains, key generation, encryption, re-encryption key generation,
//!   re-encryption, both decryption paths, and a KEM-DEM hybrid layer for
//!   byte payloads.
//! - [`store`] — content-addressed blob store (in-memory and on-disk
//!   backends) plus the hospital-side access list.
//! - [`protocol`] — entity nodes, the three wire messages, freshness
//!   enforcement (timestamp windows and nonce caches) and the in-process
//!   cross-chain gateway.
//! - [`bench`] — operation counting, serialized-size accounting and timing
//!   sweeps.

pub mod bench;
pub mod pairing;
pub mod protocol;
pub mod scheme;
pub mod store;

//! Pairing facade: groups, hash-to-group, scalars and canonical encodings.
//!
//! The re-encryption scheme is written against a symmetric-style pairing
//! `e(base, id) -> target`. This module instantiates it over an asymmetric
//! pairing-friendly curve (BLS12-381) by fixing a slot assignment:
//!
//! - [`BaseElem`] — the first source slot (G1). Holds the public generator
//!   and everything that is a power of it: system public keys, the `c1`/`C1`
//!   ciphertext components, `rk2`, and the second half of a certificateless
//!   public key.
//! - [`IdElem`] — the second source slot (G2). Holds every hash-to-group
//!   output and its powers: identity public keys, user secret keys, partial
//!   keys and `rk1`.
//! - [`TargetElem`] — the pairing target group. Holds message elements and
//!   the blinded ciphertext components.
//!
//! Every pairing used by the scheme has exactly one argument per slot under
//! this assignment, so the algebra goes through unchanged while admitting an
//! efficient standard curve.
//!
//! All values are immutable; every function is pure given its inputs, so
//! everything here is safe to share across threads. The expensive operations
//! are counted per-thread through [`metrics`].

pub mod metrics;

use std::fmt;
use std::sync::OnceLock;

use ark_bls12_381::{g2, Bls12_381, Fr, G1Affine, G1Projective, G2Affine, G2Projective};
use ark_ec::hashing::curve_maps::wb::WBMap;
use ark_ec::hashing::map_to_curve_hasher::MapToCurveBasedHasher;
use ark_ec::hashing::HashToCurve;
use ark_ec::pairing::{Pairing as ArkPairing, PairingOutput};
use ark_ec::{AdditiveGroup, CurveGroup, PrimeGroup};
use ark_ff::field_hashers::DefaultFieldHasher;
use ark_ff::{BigInteger, Field, PrimeField, UniformRand, Zero};
use ark_serialize::{CanonicalDeserialize, CanonicalSerialize};
use rand::{CryptoRng, RngCore};
use sha2::Sha256;
use thiserror::Error;

/// Compressed encoding length of a [`BaseElem`].
pub const BASE_ELEM_BYTES: usize = 48;
/// Compressed encoding length of an [`IdElem`].
pub const ID_ELEM_BYTES: usize = 96;
/// Canonical encoding length of a [`TargetElem`].
pub const TARGET_ELEM_BYTES: usize = 576;
/// Canonical encoding length of a [`Scalar`].
pub const SCALAR_BYTES: usize = 32;

/// Domain-separation tag for hashing identity bytes into the id slot.
pub const H1_DST: &[u8] = b"HPRE-H1";
/// Domain-separation tag for hashing target-group elements into the id slot.
pub const H2_DST: &[u8] = b"HPRE-H2";

/// Decoding failure for canonical element encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("wrong encoding length: expected {expected} bytes, got {got}")]
    Length { expected: usize, got: usize },
    #[error("invalid element encoding")]
    Decode,
}

type G2Hasher = MapToCurveBasedHasher<G2Projective, DefaultFieldHasher<Sha256, 128>, WBMap<g2::Config>>;

fn hash_to_g2(dst: &[u8], msg: &[u8]) -> G2Projective {
    let hasher = G2Hasher::new(dst).expect("hash-to-curve setup for a fixed curve cannot fail");
    G2Projective::from(hasher.hash(msg).expect("hash-to-curve is total over byte strings"))
}

fn decode<T: CanonicalDeserialize>(bytes: &[u8], expected: usize) -> Result<T, CodecError> {
    if bytes.len() != expected {
        return Err(CodecError::Length {
            expected,
            got: bytes.len(),
        });
    }
    T::deserialize_compressed(bytes).map_err(|_| CodecError::Decode)
}

fn encode<T: CanonicalSerialize>(value: &T, expected: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(expected);
    value
        .serialize_compressed(&mut out)
        .expect("serialization into a Vec cannot fail");
    debug_assert_eq!(out.len(), expected);
    out
}

fn short_hex(bytes: &[u8]) -> String {
    hex::encode(&bytes[..bytes.len().min(8)])
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

/// An integer modulo the prime group order `q`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Scalar(pub(crate) Fr);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Fr::ZERO)
    }

    pub fn one() -> Self {
        Scalar(Fr::ONE)
    }

    pub fn from_u64(v: u64) -> Self {
        Scalar(Fr::from(v))
    }

    /// Uniform over `[0, q)`.
    pub fn random<R: RngCore + CryptoRng>(rng: &mut R) -> Self {
        Scalar(Fr::rand(rng))
    }

    /// Uniform over `[1, q)`; never zero.
    pub fn random_nonzero<R: RngCore + CryptoRng>(rng: &mut R) -> Self {
        loop {
            let s = Fr::rand(rng);
            if !s.is_zero() {
                return Scalar(s);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        Scalar(self.0 + other.0)
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        Scalar(self.0 * other.0)
    }

    pub fn neg(&self) -> Scalar {
        Scalar(-self.0)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        self.0.inverse().map(Scalar)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        encode(&self.0, SCALAR_BYTES)
    }

    /// Rejects non-canonical encodings (values at or above `q`).
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
        decode(bytes, SCALAR_BYTES).map(Scalar)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({}..)", short_hex(&self.to_bytes()))
    }
}

// ---------------------------------------------------------------------------
// Group elements
// ---------------------------------------------------------------------------

/// Element of the first pairing source slot.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct BaseElem(pub(crate) G1Projective);

impl BaseElem {
    pub fn generator() -> Self {
        BaseElem(G1Projective::generator())
    }

    pub fn identity() -> Self {
        BaseElem(G1Projective::ZERO)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    /// `self` raised to `s`.
    pub fn exp(&self, s: &Scalar) -> BaseElem {
        metrics::bump(|c| c.base_exps += 1);
        BaseElem(self.0 * s.0)
    }

    /// Group operation.
    pub fn mul(&self, other: &BaseElem) -> BaseElem {
        BaseElem(self.0 + other.0)
    }

    pub fn inverse(&self) -> BaseElem {
        BaseElem(-self.0)
    }

    /// Uniform over the group.
    pub fn random<R: RngCore + CryptoRng>(rng: &mut R) -> Self {
        Self::generator().exp(&Scalar::random(rng))
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        encode(&self.0.into_affine(), BASE_ELEM_BYTES)
    }

    /// Rejects wrong lengths, off-curve points and non-canonical encodings.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
        decode::<G1Affine>(bytes, BASE_ELEM_BYTES).map(|a| BaseElem(a.into()))
    }
}

impl fmt::Debug for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseElem({}..)", short_hex(&self.to_bytes()))
    }
}

/// Element of the second pairing source slot, where hash-to-group outputs
/// and their powers live.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct IdElem(pub(crate) G2Projective);

impl IdElem {
    pub fn generator() -> Self {
        IdElem(G2Projective::generator())
    }

    pub fn identity() -> Self {
        IdElem(G2Projective::ZERO)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    pub fn exp(&self, s: &Scalar) -> IdElem {
        metrics::bump(|c| c.id_exps += 1);
        IdElem(self.0 * s.0)
    }

    pub fn mul(&self, other: &IdElem) -> IdElem {
        IdElem(self.0 + other.0)
    }

    pub fn inverse(&self) -> IdElem {
        IdElem(-self.0)
    }

    pub fn random<R: RngCore + CryptoRng>(rng: &mut R) -> Self {
        Self::generator().exp(&Scalar::random(rng))
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        encode(&self.0.into_affine(), ID_ELEM_BYTES)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
        decode::<G2Affine>(bytes, ID_ELEM_BYTES).map(|a| IdElem(a.into()))
    }
}

impl fmt::Debug for IdElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdElem({}..)", short_hex(&self.to_bytes()))
    }
}

/// Element of the pairing target group (multiplicative notation).
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct TargetElem(pub(crate) PairingOutput<Bls12_381>);

impl TargetElem {
    pub fn identity() -> Self {
        TargetElem(PairingOutput::ZERO)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    pub fn exp(&self, s: &Scalar) -> TargetElem {
        metrics::bump(|c| c.target_exps += 1);
        TargetElem(self.0 * s.0)
    }

    /// Group operation (counted: the scheme's blinding steps are made of
    /// target-group multiplications).
    pub fn mul(&self, other: &TargetElem) -> TargetElem {
        metrics::bump(|c| c.target_muls += 1);
        TargetElem(self.0 + other.0)
    }

    pub fn inverse(&self) -> TargetElem {
        TargetElem(-self.0)
    }

    /// Uniform over the non-identity elements of the group: the pairing of
    /// the two slot generators raised to a nonzero scalar.
    pub fn random<R: RngCore + CryptoRng>(rng: &mut R) -> Self {
        generator_pairing().exp(&Scalar::random_nonzero(rng))
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        encode(&self.0, TARGET_ELEM_BYTES)
    }

    /// Rejects wrong lengths, non-canonical field encodings and elements
    /// outside the prime-order target subgroup.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CodecError> {
        decode::<PairingOutput<Bls12_381>>(bytes, TARGET_ELEM_BYTES).map(TargetElem)
    }
}

impl fmt::Debug for TargetElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TargetElem({}..)", short_hex(&self.to_bytes()))
    }
}

// ---------------------------------------------------------------------------
// Pairing and hash-to-group
// ---------------------------------------------------------------------------

/// Bilinear pairing of one element from each source slot.
pub fn pair(a: &BaseElem, b: &IdElem) -> TargetElem {
    metrics::bump(|c| c.pairings += 1);
    TargetElem(Bls12_381::pairing(a.0, b.0))
}

/// `H1`: hash arbitrary identity bytes into the id slot.
pub fn hash_to_id_group(id_bytes: &[u8]) -> IdElem {
    metrics::bump(|c| c.hashes_h1 += 1);
    IdElem(hash_to_g2(H1_DST, id_bytes))
}

/// `H2`: hash a target-group element into the id slot, via its canonical
/// encoding under a separate domain tag.
pub fn hash_target_to_id_group(x: &TargetElem) -> IdElem {
    metrics::bump(|c| c.hashes_h2 += 1);
    IdElem(hash_to_g2(H2_DST, &x.to_bytes()))
}

/// Pairing of the two slot generators, computed once.
///
/// This is the generator of the target subgroup used to sample random
/// target elements; computing it does not hit the operation counters.
pub fn generator_pairing() -> TargetElem {
    static CACHE: OnceLock<PairingOutput<Bls12_381>> = OnceLock::new();
    TargetElem(*CACHE.get_or_init(|| {
        Bls12_381::pairing(G1Projective::generator(), G2Projective::generator())
    }))
}

// ---------------------------------------------------------------------------
// Context
// ---------------------------------------------------------------------------

/// Descriptor for the pairing instantiation: curve name, slot generators,
/// group order and canonical encoding lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingCtx {
    curve: &'static str,
}

impl PairingCtx {
    pub fn new() -> Self {
        debug_assert!(
            !generator_pairing().is_identity(),
            "slot generators must pair to a non-identity element"
        );
        PairingCtx { curve: "BLS12-381" }
    }

    pub fn curve_name(&self) -> &'static str {
        self.curve
    }

    pub fn base_generator(&self) -> BaseElem {
        BaseElem::generator()
    }

    pub fn id_generator(&self) -> IdElem {
        IdElem::generator()
    }

    /// Cached pairing of the two slot generators.
    pub fn generator_pairing(&self) -> TargetElem {
        generator_pairing()
    }

    /// The prime group order `q`, big-endian.
    pub fn order_be_bytes(&self) -> Vec<u8> {
        Fr::MODULUS.to_bytes_be()
    }

    pub fn base_elem_bytes(&self) -> usize {
        BASE_ELEM_BYTES
    }

    pub fn id_elem_bytes(&self) -> usize {
        ID_ELEM_BYTES
    }

    pub fn target_elem_bytes(&self) -> usize {
        TARGET_ELEM_BYTES
    }

    pub fn scalar_bytes(&self) -> usize {
        SCALAR_BYTES
    }
}

impl Default for PairingCtx {
    fn default() -> Self {
        Self::new()
    }
}

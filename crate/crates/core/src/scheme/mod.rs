//! The heterogeneous proxy re-encryption scheme.
//!
//! Two key domains share one pairing context. The identity-based domain
//! issues full key pairs from a master secret; the certificateless domain
//! issues partial keys that the user completes with a secret of their own.
//! A first-level ciphertext produced for an identity-based key can be
//! transformed by an untrusted party, holding only a re-encryption key, into
//! a second-level ciphertext that the certificateless key decrypts. The
//! transforming party never learns the message.
//!
//! Scheme-level messages are target-group elements; byte payloads go through
//! the KEM-DEM wrapper in [`hybrid`](self).
//!
//! Everything here is a pure function of its inputs plus an explicit RNG
//! handle; there is no internal mutable state.

mod hybrid;
mod wire;

pub use hybrid::{
    hybrid_decrypt_first, hybrid_decrypt_second, hybrid_encrypt, hybrid_reencrypt,
    HybridCiphertext, KemCiphertext, DEM_KEY_BYTES, DEM_NONCE_BYTES, KDF_TAG,
};
pub use wire::{
    decode_ibe_public, encode_ibe_public, ElemClass, WireError, TAG_CLC_PUBLIC,
    TAG_FIRST_LEVEL, TAG_HYBRID, TAG_IBE_PUBLIC, TAG_REKEY, TAG_SECOND_LEVEL,
};

use rand::{CryptoRng, RngCore};
use thiserror::Error;

use crate::pairing::{
    hash_target_to_id_group, hash_to_id_group, pair, BaseElem, IdElem, PairingCtx, Scalar,
    TargetElem,
};

/// Failures surfaced by the scheme itself.
///
/// Decryption under a wrong-but-well-formed key is *not* an error at the
/// group-element level: it silently yields a wrong element. Integrity for
/// applications comes from the hybrid layer's authentication tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("partial key does not verify against the issuing domain")]
    PartialKeyInvalid,
    #[error("payload authentication failed")]
    AuthFailure,
    #[error("ciphertext level does not match the requested operation")]
    LevelMismatch,
}

// ---------------------------------------------------------------------------
// System parameters and key material
// ---------------------------------------------------------------------------

/// Public parameters of the identity-based domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IbeSystemParams {
    pub ctx: PairingCtx,
    /// System public key `g^s`.
    pub h1: BaseElem,
}

/// Master secret of the identity-based domain.
#[derive(Clone, Copy, Debug)]
pub struct IbeMasterKey {
    pub s: Scalar,
}

/// Public parameters of the certificateless domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClcSystemParams {
    pub ctx: PairingCtx,
    /// System public key `g^y`.
    pub h2: BaseElem,
}

/// Master secret of the certificateless domain.
#[derive(Clone, Copy, Debug)]
pub struct ClcMasterKey {
    pub y: Scalar,
}

/// Identity-based key pair: `pk = H1(id)`, `sk = pk^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IbeKeyPair {
    pub id: Vec<u8>,
    pub pk: IdElem,
    pub sk: IdElem,
}

/// KGC-issued half of a certificateless key: `d = H1(id)^y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClcPartialKey {
    pub id: Vec<u8>,
    pub d: IdElem,
}

/// Certificateless public key `(pk1, pk2) = (H1(id), h2^r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClcPublicKey {
    pub pk1: IdElem,
    pub pk2: BaseElem,
}

/// Completed certificateless key pair: `sk = d^r` for a user-chosen `r`.
///
/// `r` exists only inside [`clc_user_keygen`] and is dropped on return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClcKeyPair {
    pub id: Vec<u8>,
    pub pk: ClcPublicKey,
    pub sk: IdElem,
}

/// Ciphertext under an identity-based key, before transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FirstLevelCiphertext {
    /// `g^alpha`
    pub c1: BaseElem,
    /// `m * e(h1, pk)^alpha`
    pub c2: TargetElem,
}

/// Transformation key from an identity-based key to a certificateless key.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReEncryptionKey {
    /// `H2(X) * sk^-1`
    pub rk1: IdElem,
    /// `g^lambda`
    pub rk2: BaseElem,
    /// `X * e(pk2, pk1)^lambda`
    pub rk3: TargetElem,
}

/// Ciphertext after transformation, decryptable by the certificateless key.
///
/// This is a distinct type from [`FirstLevelCiphertext`] on purpose:
/// [`reencrypt`] only accepts first-level input, so a second hop is rejected
/// by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SecondLevelCiphertext {
    pub c1: BaseElem,
    pub c2: TargetElem,
    pub c3: BaseElem,
    pub c4: TargetElem,
}

// ---------------------------------------------------------------------------
// Setup and key generation
// ---------------------------------------------------------------------------

/// Initialize the identity-based domain: master secret `s` and public key
/// `h1 = g^s`.
pub fn setup_ibe<R: RngCore + CryptoRng>(
    ctx: &PairingCtx,
    rng: &mut R,
) -> (IbeSystemParams, IbeMasterKey) {
    let s = Scalar::random_nonzero(rng);
    let h1 = ctx.base_generator().exp(&s);
    (IbeSystemParams { ctx: *ctx, h1 }, IbeMasterKey { s })
}

/// Initialize the certificateless domain: master secret `y` and public key
/// `h2 = g^y`.
pub fn setup_clc<R: RngCore + CryptoRng>(
    ctx: &PairingCtx,
    rng: &mut R,
) -> (ClcSystemParams, ClcMasterKey) {
    let y = Scalar::random_nonzero(rng);
    let h2 = ctx.base_generator().exp(&y);
    (ClcSystemParams { ctx: *ctx, h2 }, ClcMasterKey { y })
}

/// Issue an identity-based key pair for `id`.
pub fn ibe_keygen(msk: &IbeMasterKey, id: &[u8]) -> IbeKeyPair {
    let pk = hash_to_id_group(id);
    let sk = pk.exp(&msk.s);
    IbeKeyPair {
        id: id.to_vec(),
        pk,
        sk,
    }
}

/// Issue the KGC half of a certificateless key for `id`.
pub fn clc_partial_keygen(msk: &ClcMasterKey, id: &[u8]) -> ClcPartialKey {
    let d = hash_to_id_group(id).exp(&msk.y);
    ClcPartialKey {
        id: id.to_vec(),
        d,
    }
}

/// Complete a certificateless key pair from a KGC-issued partial key.
///
/// The partial key is verified against the domain parameters first; a
/// corrupt or mismatched KGC response is rejected with
/// [`SchemeError::PartialKeyInvalid`]. The user secret `r` is sampled here
/// and not retained.
pub fn clc_user_keygen<R: RngCore + CryptoRng>(
    partial: &ClcPartialKey,
    par2: &ClcSystemParams,
    rng: &mut R,
) -> Result<ClcKeyPair, SchemeError> {
    let pk1 = hash_to_id_group(&partial.id);
    if pair(&par2.h2, &pk1) != pair(&par2.ctx.base_generator(), &partial.d) {
        return Err(SchemeError::PartialKeyInvalid);
    }
    let r = Scalar::random_nonzero(rng);
    let sk = partial.d.exp(&r);
    let pk2 = par2.h2.exp(&r);
    Ok(ClcKeyPair {
        id: partial.id.clone(),
        pk: ClcPublicKey { pk1, pk2 },
        sk,
    })
}

/// Check `pk = H1(id)` and the pairing consistency `e(h1, pk) = e(g, sk)`.
pub fn verify_ibe_keypair(par1: &IbeSystemParams, kp: &IbeKeyPair) -> bool {
    kp.pk == hash_to_id_group(&kp.id)
        && pair(&par1.h1, &kp.pk) == pair(&par1.ctx.base_generator(), &kp.sk)
}

/// Check `pk1 = H1(id)` and the pairing consistency `e(pk2, pk1) = e(g, sk)`.
pub fn verify_clc_keypair(kp: &ClcKeyPair) -> bool {
    let ctx = PairingCtx::new();
    kp.pk.pk1 == hash_to_id_group(&kp.id)
        && pair(&kp.pk.pk2, &kp.pk.pk1) == pair(&ctx.base_generator(), &kp.sk)
}

// ---------------------------------------------------------------------------
// Encryption, re-encryption and decryption
// ---------------------------------------------------------------------------

/// Encrypt a target-group message under an identity-based public key:
/// `(g^alpha, m * e(h1, pk)^alpha)` for a fresh nonzero `alpha`.
pub fn encrypt<R: RngCore + CryptoRng>(
    par1: &IbeSystemParams,
    pk_do: &IdElem,
    m: &TargetElem,
    rng: &mut R,
) -> FirstLevelCiphertext {
    let alpha = Scalar::random_nonzero(rng);
    let c1 = par1.ctx.base_generator().exp(&alpha);
    let c2 = m.mul(&pair(&par1.h1, pk_do).exp(&alpha));
    FirstLevelCiphertext { c1, c2 }
}

/// Owner-side decryption of a first-level ciphertext:
/// `c2 * e(c1, sk)^-1`.
///
/// A non-matching key yields a uniformly wrong element, not an error.
pub fn decrypt_first(sk_do: &IdElem, c: &FirstLevelCiphertext) -> TargetElem {
    c.c2.mul(&pair(&c.c1, sk_do).inverse())
}

/// Generate a re-encryption key toward a certificateless public key.
///
/// Samples a fresh blinding element `X` in the target group and a fresh
/// nonzero `lambda`; neither leaves this function.
pub fn rekeygen<R: RngCore + CryptoRng>(
    sk_do: &IdElem,
    pk_du: &ClcPublicKey,
    rng: &mut R,
) -> ReEncryptionKey {
    rekeygen_inner(sk_do, pk_du, rng).0
}

fn rekeygen_inner<R: RngCore + CryptoRng>(
    sk_do: &IdElem,
    pk_du: &ClcPublicKey,
    rng: &mut R,
) -> (ReEncryptionKey, TargetElem) {
    let x = TargetElem::random(rng);
    let lambda = Scalar::random_nonzero(rng);
    let rk1 = hash_target_to_id_group(&x).mul(&sk_do.inverse());
    let rk2 = BaseElem::generator().exp(&lambda);
    let rk3 = x.mul(&pair(&pk_du.pk2, &pk_du.pk1).exp(&lambda));
    (ReEncryptionKey { rk1, rk2, rk3 }, x)
}

/// Test-only variant of [`rekeygen`] that also returns the internal blinding
/// element `X`, so tests can check the recovery identity
/// `C4 * e(C3, sk)^-1 = X`.
#[cfg(any(test, feature = "test-hooks"))]
pub fn rekeygen_revealing_x<R: RngCore + CryptoRng>(
    sk_do: &IdElem,
    pk_du: &ClcPublicKey,
    rng: &mut R,
) -> (ReEncryptionKey, TargetElem) {
    rekeygen_inner(sk_do, pk_du, rng)
}

/// Transform a first-level ciphertext with a re-encryption key.
///
/// Deterministic, and deliberately takes nothing but the ciphertext and the
/// key: the transforming party needs no system parameters and no secrets.
pub fn reencrypt(c: &FirstLevelCiphertext, rk: &ReEncryptionKey) -> SecondLevelCiphertext {
    SecondLevelCiphertext {
        c1: c.c1,
        c2: c.c2.mul(&pair(&c.c1, &rk.rk1)),
        c3: rk.rk2,
        c4: rk.rk3,
    }
}

/// Recipient-side decryption of a second-level ciphertext: recover
/// `X = C4 * e(C3, sk)^-1`, then `m = C2 * e(C1, H2(X))^-1`.
///
/// A non-matching key yields a uniformly wrong element, not an error.
pub fn decrypt_second(sk_du: &IdElem, c: &SecondLevelCiphertext) -> TargetElem {
    let x = c.c4.mul(&pair(&c.c3, sk_du).inverse());
    c.c2.mul(&pair(&c.c1, &hash_target_to_id_group(&x)).inverse())
}

#[cfg(test)]
mod tests;

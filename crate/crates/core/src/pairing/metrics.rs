//! Thread-local counters for the expensive group operations.
//!
//! Every pairing, exponentiation, hash-to-group call and target-group
//! multiplication performed through the [`crate::pairing`] facade bumps a
//! counter on the current thread. The benchmark module resets the counters,
//! runs an operation, and compares the snapshot against its static cost
//! table.

use std::cell::Cell;
use std::ops::Add;

/// Counts of the expensive operations performed on the current thread since
/// the last [`reset`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounters {
    pub pairings: u64,
    pub base_exps: u64,
    pub id_exps: u64,
    pub target_exps: u64,
    pub hashes_h1: u64,
    pub hashes_h2: u64,
    pub target_muls: u64,
}

impl Add for OpCounters {
    type Output = OpCounters;

    fn add(self, rhs: OpCounters) -> OpCounters {
        OpCounters {
            pairings: self.pairings + rhs.pairings,
            base_exps: self.base_exps + rhs.base_exps,
            id_exps: self.id_exps + rhs.id_exps,
            target_exps: self.target_exps + rhs.target_exps,
            hashes_h1: self.hashes_h1 + rhs.hashes_h1,
            hashes_h2: self.hashes_h2 + rhs.hashes_h2,
            target_muls: self.target_muls + rhs.target_muls,
        }
    }
}

thread_local! {
    static ACTIVE: Cell<OpCounters> = Cell::new(OpCounters::default());
}

/// Zero the current thread's counters.
pub fn reset() {
    ACTIVE.with(|c| c.set(OpCounters::default()));
}

/// Read the current thread's counters.
pub fn snapshot() -> OpCounters {
    ACTIVE.with(|c| c.get())
}

pub(crate) fn bump(f: impl FnOnce(&mut OpCounters)) {
    ACTIVE.with(|c| {
        let mut counters = c.get();
        f(&mut counters);
        c.set(counters);
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reset_clears_and_snapshot_reads() {
        reset();
        assert_eq!(snapshot(), OpCounters::default());
        bump(|c| c.pairings += 3);
        bump(|c| c.hashes_h1 += 1);
        let snap = snapshot();
        assert_eq!(snap.pairings, 3);
        assert_eq!(snap.hashes_h1, 1);
        reset();
        assert_eq!(snapshot(), OpCounters::default());
    }

    #[test]
    fn add_is_fieldwise() {
        let a = OpCounters {
            pairings: 1,
            target_exps: 2,
            ..Default::default()
        };
        let b = OpCounters {
            pairings: 1,
            target_muls: 1,
            ..Default::default()
        };
        let sum = a + b;
        assert_eq!(sum.pairings, 2);
        assert_eq!(sum.target_exps, 2);
        assert_eq!(sum.target_muls, 1);
    }
}

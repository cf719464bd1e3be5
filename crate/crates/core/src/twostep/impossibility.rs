//! Signatures `(m, n)` with `m + n = 8` that admit no non-degenerate tensor.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::tensor::{binom2, random_tensor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// `β_*` cannot be onto: `C(m,2) < n`.
    Dimension { pairs: usize, n: usize },
    /// `n = 1` gives a skew form on an odd-dimensional space, which has a radical.
    OddRank { m: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureReport {
    pub m: usize,
    pub n: usize,
    pub obstruction: Obstruction,
    pub samples: usize,
    pub nondegenerate_samples: usize,
}

impl SignatureReport {
    pub fn pass(&self) -> bool {
        self.nondegenerate_samples == 0
    }
}

pub const IMPOSSIBLE: [(usize, usize); 4] = [(1, 7), (2, 6), (3, 5), (7, 1)];

pub fn obstruction(m: usize, n: usize) -> Option<Obstruction> {
    if binom2(m) < n {
        Some(Obstruction::Dimension { pairs: binom2(m), n })
    } else if n == 1 && m % 2 == 1 {
        Some(Obstruction::OddRank { m })
    } else {
        None
    }
}

/// Obstructions plus `samples` seeded random tensors per signature, coefficients in `-3..=3`.
pub fn impossibility_report(seed: u64, samples: usize) -> Vec<SignatureReport> {
    IMPOSSIBLE
        .iter()
        .map(|&(m, n)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((m as u64) << 8 | n as u64));
            let nondegenerate_samples = (0..samples).filter(|_| random_tensor(m, n, 3, &mut rng).is_nondegenerate()).count();
            SignatureReport {
                m,
                n,
                obstruction: obstruction(m, n).expect("listed signatures are obstructed"),
                samples,
                nondegenerate_samples,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn obstructions() {
        assert_eq!(obstruction(3, 5), Some(Obstruction::Dimension { pairs: 3, n: 5 }));
        assert_eq!(obstruction(2, 6), Some(Obstruction::Dimension { pairs: 1, n: 6 }));
        assert_eq!(obstruction(7, 1), Some(Obstruction::OddRank { m: 7 }));
        assert_eq!(obstruction(6, 2), None);
        assert_eq!(obstruction(4, 4), None);
    }

    #[test]
    fn small_sample_run() {
        assert!(impossibility_report(1, 20).iter().all(SignatureReport::pass));
    }
}

//! Shared fixtures for the criterion benches.

use semiinf::semiregular::GradedLieAlgebra;
use semiinf::{AffineWeight, WeylGroup};

pub fn group(t: &str) -> WeylGroup {
    WeylGroup::from_type(t).expect("known type")
}

pub fn basic_weight(g: &WeylGroup) -> AffineWeight {
    g.cartan.fundamental(0)
}

/// `sl3` with `n` the Heisenberg algebra spanned by the negative roots.
pub fn heisenberg() -> GradedLieAlgebra {
    GradedLieAlgebra::sl3_heisenberg()
}

/// Words of length `len` over the basis of `sl3`, in a fixed pseudo-random order.
pub fn sample_words(len: usize, count: usize) -> Vec<Vec<u16>> {
    let mut state = 0x2545_f491u32;
    (0..count)
        .map(|_| {
            (0..len)
                .map(|_| {
                    state ^= state << 13;
                    state ^= state >> 17;
                    state ^= state << 5;
                    (state % 8) as u16
                })
                .collect()
        })
        .collect()
}

//! Shared helpers for the integration suites: an independent dimension
//! oracle computed straight from root data, and a small deterministic
//! generator for randomized sweeps.

#![allow(dead_code)]

use num_traits::One;

use uqdim::symbolic::Rat;
use uqdim::weyl::RepSpec;
use uqdim::young::YoungDiagram;

/// Weyl dimension formula evaluated directly as a product of inner-product
/// ratios over the positive roots. Independent of the sinh-product engine
/// and its limit machinery.
pub fn weyl_dimension_oracle(spec: &RepSpec, rank: u32) -> Rat {
    let rs = spec.root_system(rank).expect("admissible rank");
    let mu = spec.highest_weight(rank).expect("admissible rank");
    let rho = rs.weyl_vector();
    let mu_plus_rho: Vec<Rat> = mu.iter().zip(rho.iter()).map(|(a, b)| a + b).collect();
    let mut value = Rat::one();
    for root in rs.positive_roots() {
        value *= rs.inner(root, &mu_plus_rho) / rs.inner(root, &rho);
    }
    value
}

/// xorshift64*; deterministic across platforms, seeded per test.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Random diagram with height <= max_height and width <= max_width,
/// possibly empty.
pub fn random_diagram(rng: &mut TestRng, max_height: u64, max_width: u64) -> YoungDiagram {
    let height = rng.below(max_height + 1);
    let mut rows = Vec::new();
    let mut cap = max_width;
    for _ in 0..height {
        if cap == 0 {
            break;
        }
        let r = 1 + rng.below(cap);
        rows.push(r as u32);
        cap = r;
    }
    YoungDiagram::new(rows).expect("construction is monotone")
}

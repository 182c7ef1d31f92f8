//! Seeded random polynomials for property checks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{Family, Integer, Monomial, Polynomial, VarId};

#[derive(Clone, Debug)]
pub struct RandomPolyConfig {
    /// Number of `x` variables.
    pub k: usize,
    /// Parameter family mixed in, if any.
    pub parameters: Option<Family>,
    pub n_parameters: usize,
    pub max_terms: usize,
    pub max_exponent: i32,
    pub max_coefficient: i64,
}

impl RandomPolyConfig {
    pub fn new(k: usize) -> RandomPolyConfig {
        RandomPolyConfig {
            k,
            parameters: None,
            n_parameters: 0,
            max_terms: 5,
            max_exponent: 3,
            max_coefficient: 5,
        }
    }

    pub fn with_parameters(mut self, family: Family, count: usize) -> RandomPolyConfig {
        self.parameters = Some(family);
        self.n_parameters = count;
        self
    }
}

pub fn random_polynomial(rng: &mut ChaCha8Rng, cfg: &RandomPolyConfig) -> Polynomial {
    let terms = rng.gen_range(1..=cfg.max_terms.max(1));
    Polynomial::from_terms((0..terms).map(|_| {
        let mut pairs = Vec::new();
        for i in 1..=cfg.k as u32 {
            pairs.push((VarId::x(i), rng.gen_range(0..=cfg.max_exponent)));
        }
        if let Some(family) = cfg.parameters {
            for i in 1..=cfg.n_parameters as u32 {
                if rng.gen_bool(0.3) {
                    pairs.push((VarId { family, index: i }, rng.gen_range(1..=2)));
                }
            }
        }
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-cfg.max_coefficient..=cfg.max_coefficient);
        }
        (Monomial::from_pairs(pairs), Integer::from(c))
    }))
}

//! Seeded sampling of diagrams.

use num_traits::ToPrimitive;
use rand::Rng;

use crate::algebra::{AlgebraElement, Polynomial2};
use crate::combinatorics::a_seq;
use crate::diagram::Diagram;
use crate::error::Result;
use crate::monoid::{enumerate, Family};

/// A uniformly random element of `PB_n`: the first free point stays single
/// with probability `a(m-1)/a(m)`, otherwise it pairs with a uniform partner.
pub fn random_pb<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Diagram {
    let mut free: Vec<usize> = (0..2 * n).collect();
    let mut pairs = Vec::new();
    while let Some(&v) = free.first() {
        let m = free.len();
        let single = a_seq(m - 1).to_f64().unwrap_or(0.0) / a_seq(m).to_f64().unwrap_or(1.0);
        free.remove(0);
        if rng.gen::<f64>() >= single && !free.is_empty() {
            let k = rng.gen_range(0..free.len());
            pairs.push((v, free.remove(k)));
        }
    }
    Diagram::from_pairs(n, pairs)
}

/// Uniform sampler for any family, by enumeration (PB uses the direct method).
pub struct Sampler {
    family: Family,
    n: usize,
    pool: Vec<Diagram>,
}

impl Sampler {
    pub fn new(family: Family, n: usize) -> Result<Sampler> {
        let pool = if family == Family::PB { Vec::new() } else { enumerate(family, n, None)? };
        Ok(Sampler { family, n, pool })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Diagram {
        if self.family == Family::PB {
            random_pb(self.n, rng)
        } else {
            self.pool[rng.gen_range(0..self.pool.len())].clone()
        }
    }

    /// A sum of `terms` random diagrams with small random integer polynomial
    /// coefficients.
    pub fn element<R: Rng + ?Sized>(&self, terms: usize, rng: &mut R) -> AlgebraElement {
        let family = if self.family == Family::PB { Family::PB } else { Family::M };
        let mut e = AlgebraElement::zero(family, self.n).expect("PB or M");
        for _ in 0..terms {
            let mut p = Polynomial2::zero();
            for _ in 0..rng.gen_range(1..=3) {
                p.add_term(rng.gen_range(-3i64..=3).into(), rng.gen_range(0..3), rng.gen_range(0..3));
            }
            e.add_term(self.sample(rng), p).expect("sampled within the family");
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    #[test]
    fn pb_sampler_is_roughly_uniform() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts: HashMap<Diagram, usize> = HashMap::new();
        for _ in 0..10_000 {
            *counts.entry(random_pb(2, &mut rng)).or_default() += 1;
        }
        assert_eq!(counts.len(), 10);
        assert!(counts.values().all(|&c| (800..1200).contains(&c)));
    }
}

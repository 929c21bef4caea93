//! Deterministic random sampling of ring and algebra elements, used by the
//! randomized verification suites and the tests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::loop_alg::LoopElem;
use crate::onsager::OnsagerElem;
use crate::poly::Poly;
use crate::rat::{rat, Rat};
use crate::ring::RingElem;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    let n = rng.gen_range(-6i64..=6);
    let d = rng.gen_range(1i64..=4);
    rat(n) / rat(d)
}

pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<Rat> = (0..=deg).map(|_| random_rat(rng)).collect();
    Poly::from_coeffs(coeffs)
}

pub fn random_ring_elem<R: Rng>(rng: &mut R, max_deg: usize, max_pole: usize) -> RingElem {
    let num = random_poly(rng, max_deg);
    let a = rng.gen_range(0..=max_pole);
    let b = rng.gen_range(0..=max_pole);
    RingElem::new(num, a, b)
}

pub fn random_loop_elem<R: Rng>(rng: &mut R, max_deg: usize, max_pole: usize) -> LoopElem {
    LoopElem::new(
        random_ring_elem(rng, max_deg, max_pole),
        random_ring_elem(rng, max_deg, max_pole),
        random_ring_elem(rng, max_deg, max_pole),
    )
}

pub fn random_onsager_elem<R: Rng>(rng: &mut R, max_deg: usize) -> OnsagerElem {
    OnsagerElem::new(
        random_poly(rng, max_deg),
        random_poly(rng, max_deg),
        random_poly(rng, max_deg),
    )
}

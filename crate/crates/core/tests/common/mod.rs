//! Shared helpers for the integration suites: seeded random generators for
//! words, Nielsen automorphisms, cocharacters and small polynomial
//! matrices.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hcy::fracmat::FracMatrix;
use hcy::laurent::{Cocharacter, LaurentPoly, Vars};
use hcy::ratfunc::RatFunc;
use hcy::word::{Endomorphism, Word};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut StdRng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| {
        let i = rng.gen_range(1..=rank) as i32;
        if rng.gen_bool(0.5) {
            i
        } else {
            -i
        }
    }))
}

/// A random automorphism composed of elementary Nielsen moves
/// (x_i ↦ x_i x_j^±, x_i ↦ x_j^± x_i, x_i ↦ x_i⁻¹).
pub fn random_nielsen_auto(rng: &mut StdRng, rank: usize, moves: usize) -> Endomorphism {
    let mut phi = Endomorphism::identity(rank);
    for _ in 0..moves {
        let i = rng.gen_range(1..=rank);
        let elementary = match rng.gen_range(0..3) {
            0 => {
                let mut j = rng.gen_range(1..=rank);
                while j == i {
                    j = rng.gen_range(1..=rank);
                }
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                let mut images: Vec<Word> = (1..=rank).map(|k| Word::gen(k as i32)).collect();
                images[i - 1] = Word::from_letters([i as i32, s * j as i32]);
                Endomorphism::new(rank, images).unwrap()
            }
            1 => {
                let mut j = rng.gen_range(1..=rank);
                while j == i {
                    j = rng.gen_range(1..=rank);
                }
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                let mut images: Vec<Word> = (1..=rank).map(|k| Word::gen(k as i32)).collect();
                images[i - 1] = Word::from_letters([s * j as i32, i as i32]);
                Endomorphism::new(rank, images).unwrap()
            }
            _ => {
                let mut images: Vec<Word> = (1..=rank).map(|k| Word::gen(k as i32)).collect();
                images[i - 1] = Word::gen(-(i as i32));
                Endomorphism::new(rank, images).unwrap()
            }
        };
        phi = elementary.compose(&phi);
    }
    phi
}

pub fn random_primitive_psi(rng: &mut StdRng, len: usize) -> Cocharacter {
    loop {
        let mut v: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=3)).collect();
        // force primitivity cheaply: make one slot ±1
        let k = rng.gen_range(0..len);
        v[k] = if rng.gen_bool(0.5) { 1 } else { -1 };
        if let Ok(c) = Cocharacter::new(v) {
            return c;
        }
    }
}

pub fn random_poly(rng: &mut StdRng, vars: &Vars, terms: usize, max_exp: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero(vars);
    for _ in 0..terms {
        let e: Vec<i64> = (0..vars.len())
            .map(|_| rng.gen_range(-max_exp..=max_exp))
            .collect();
        let c = rng.gen_range(-3i64..=3);
        p.add_term(e, BigInt::from(c));
    }
    p
}

/// A random square polynomial matrix of the given size and corank (0 or 1),
/// regenerating until the rank is exactly n − corank.
pub fn random_matrix_with_corank(
    rng: &mut StdRng,
    vars: &Vars,
    n: usize,
    corank: usize,
) -> FracMatrix {
    loop {
        let m = if corank == 0 {
            let data: Vec<RatFunc> = (0..n * n)
                .map(|_| RatFunc::from_poly(random_poly(rng, vars, 2, 1)))
                .collect();
            FracMatrix::new(vars, n, n, data)
        } else {
            let r = n - 1;
            let left: Vec<RatFunc> = (0..n * r)
                .map(|_| RatFunc::from_poly(random_poly(rng, vars, 2, 1)))
                .collect();
            let right: Vec<RatFunc> = (0..r * n)
                .map(|_| RatFunc::from_poly(random_poly(rng, vars, 2, 1)))
                .collect();
            FracMatrix::new(vars, n, r, left).mul(&FracMatrix::new(vars, r, n, right))
        };
        if m.rank() == n - corank {
            return m;
        }
    }
}

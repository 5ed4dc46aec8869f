use hcy::fracmat::FracMatrix;
use hcy::laurent::{Cocharacter, LaurentPoly, Vars};
use hcy::ratfunc::RatFunc;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

fn random_poly(rng: &mut StdRng, vars: &Vars, terms: usize, max_exp: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero(vars);
    for _ in 0..terms {
        let e: Vec<i64> = (0..vars.len()).map(|_| rng.gen_range(-max_exp..=max_exp)).collect();
        p.add_term(e, BigInt::from(rng.gen_range(-3i64..=3)));
    }
    p
}

fn random_matrix_with_corank(rng: &mut StdRng, vars: &Vars, n: usize, corank: usize) -> FracMatrix {
    loop {
        let m = if corank == 0 {
            let data: Vec<RatFunc> = (0..n * n).map(|_| RatFunc::from_poly(random_poly(rng, vars, 2, 1))).collect();
            FracMatrix::new(vars, n, n, data)
        } else {
            let r = n - 1;
            let left: Vec<RatFunc> = (0..n * r).map(|_| RatFunc::from_poly(random_poly(rng, vars, 2, 1))).collect();
            let right: Vec<RatFunc> = (0..r * n).map(|_| RatFunc::from_poly(random_poly(rng, vars, 2, 1))).collect();
            FracMatrix::new(vars, n, r, left).mul(&FracMatrix::new(vars, r, n, right))
        };
        if m.rank() == n - corank { return m; }
    }
}

fn main() {
    let vars = Vars::gamma(2);
    let mut r = StdRng::seed_from_u64(131);
    let psi = Cocharacter::new(vec![1, 0]).unwrap();
    let psi2 = Cocharacter::new(vec![1, -2]).unwrap();
    for case in 0..20 {
        let n = r.gen_range(2..=4);
        let corank = usize::from(case % 3 == 0);
        let a = random_matrix_with_corank(&mut r, &vars, n, corank);
        eprintln!("case {} n={} corank={}", case, n, corank);
        for (pi, p) in [&psi, &psi2].into_iter().enumerate() {
            let t0 = Instant::now();
            let s = hcy::invariants::smith_report(&a, p).unwrap();
            eprintln!("  psi{} smith d={} [{:?}]", pi, s.torsion_degree_sum, t0.elapsed());
            let t1 = Instant::now();
            let m = hcy::tpoly::degree_report(&a, p).unwrap();
            eprintln!("  psi{} minor d={} [{:?}]", pi, m.torsion_degree_sum, t1.elapsed());
            let t2 = Instant::now();
            let d = hcy::invariants::degree_via_delta(&a, p, n - corank).unwrap();
            eprintln!("  psi{} delta d={} [{:?}]", pi, d, t2.elapsed());
        }
    }
}

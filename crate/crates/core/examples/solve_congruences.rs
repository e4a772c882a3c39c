//! Each solver route on the same congruence system, and the size of the
//! solution set they describe.

use nbcss::binmat::overlap_sets;
use nbcss::congruence::build_system;
use nbcss::hgp::hgp;
use nbcss::modsolve::{
    heuristic_solve, snf, snf_nullspace_mod, solve, unit_pivot_eliminate, IntMatrix, SolveOptions, Strategy,
};
use nbcss::BinaryMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h1 = BinaryMatrix::from_dense(3, &[[1, 1, 1], [0, 1, 0]])?;
    let h2 = BinaryMatrix::from_dense(3, &[[1, 0, 0], [1, 1, 1]])?;
    let pair = hgp(&h1, &h2)?;
    let sys = build_system(&pair, &overlap_sets(&pair), 255)?;
    println!("{} congruences in {} variables mod {}", sys.n_rows(), sys.n_vars(), sys.modulus());

    let red = unit_pivot_eliminate(&sys)?;
    println!("elimination: rank {}, {} free, {} row ops", red.rank(), red.free_cols().len(), red.ops().len());
    print!("{}", red.trace());
    println!("solutions: {}", red.sampler().solution_count());

    let res = snf(&IntMatrix::from_rows(sys.n_vars(), &sys.to_dense()));
    let factors: Vec<String> = res.invariant_factors().iter().map(|d| d.to_string()).collect();
    println!("SNF invariant factors: [{}]", factors.join(", "));
    println!("SNF solutions: {}", snf_nullspace_mod(&res, 255)?.solution_count());

    let h = heuristic_solve(&sys, 7, 1000)?;
    println!("heuristic: {} updates, satisfied = {}", h.updates, sys.is_satisfied(&h.exponents));

    for strategy in Strategy::ALL {
        let opts = SolveOptions { strategy, ..Default::default() };
        match solve(&sys, &opts, 1) {
            Ok(s) => println!("{strategy}: ok via {}, satisfied = {}", s.used, sys.is_satisfied(&s.exponents)),
            Err(e) => println!("{strategy}: {e}"),
        }
    }

    // modulus 7 is prime, so the prime-field route applies
    let sys7 = build_system(&pair, &overlap_sets(&pair), 7)?;
    let opts = SolveOptions { strategy: Strategy::PrimeField, ..Default::default() };
    let s = solve(&sys7, &opts, 1)?;
    println!("mod 7 prime-field: satisfied = {}", sys7.is_satisfied(&s.exponents));
    Ok(())
}

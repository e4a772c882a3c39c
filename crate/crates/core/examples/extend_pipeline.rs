//! Binary pair to GF(256) pair: congruences, solve, assemble, verify.

use std::sync::Arc;

use nbcss::binmat::{check_orthogonal_f2, overlap_sets};
use nbcss::congruence::{build_system, build_var_index};
use nbcss::extend::{assemble, extract_exponents, verify_orthogonal_fq, verify_support, ExponentAssignment};
use nbcss::field::FieldSpec;
use nbcss::formats::write_hex_grid;
use nbcss::hgp::hgp;
use nbcss::modsolve::{solve, SolveOptions};
use nbcss::BinaryMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h1 = BinaryMatrix::from_dense(3, &[[1, 1, 1], [0, 1, 0]])?;
    let h2 = BinaryMatrix::from_dense(3, &[[1, 0, 0], [1, 1, 1]])?;
    let pair = hgp(&h1, &h2)?;
    assert!(check_orthogonal_f2(&pair).is_empty());

    let field = Arc::new(FieldSpec::new(8)?);
    let modulus = field.group_order() as u64;
    let sys = build_system(&pair, &overlap_sets(&pair), modulus)?;
    let index = build_var_index(&pair);

    for seed in 0..3 {
        let solved = solve(&sys, &SolveOptions::default(), seed)?;
        let asg = ExponentAssignment::from_vector(&index, &solved.exponents, modulus)?;
        let (hg, hd) = assemble(&pair, &asg, &field)?;
        println!("seed {seed}:");
        print!("{}", write_hex_grid(&hg, &[]));
        print!("{}", write_hex_grid(&hd, &[]));
        println!(
            "support ok: {} {}, bad row pairs: {:?}",
            verify_support(&hg, pair.hc())?.is_ok(),
            verify_support(&hd, pair.hd())?.is_ok(),
            verify_orthogonal_fq(&hg, &hd)?
        );
        assert_eq!(extract_exponents(&pair, &hg, &hd)?, asg);
    }

    // flipping one entry breaks orthogonality
    let solved = solve(&sys, &SolveOptions::default(), 0)?;
    let asg = ExponentAssignment::from_vector(&index, &solved.exponents, modulus)?;
    let (mut hg, hd) = assemble(&pair, &asg, &field)?;
    let x = hg.get(0, 0);
    hg.set(0, 0, field.mul(x, field.alpha()));
    println!("after tampering with (0, 0): bad row pairs {:?}", verify_orthogonal_fq(&hg, &hd)?);
    Ok(())
}

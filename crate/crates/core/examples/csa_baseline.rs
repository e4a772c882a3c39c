//! Separable assignment on a pair whose rows overlap in four columns, and the
//! lift of binary codewords into the non-binary kernel.

use std::sync::Arc;

use nbcss::binmat::{nullspace_f2, overlap_histogram, overlap_sets, CssPair};
use nbcss::congruence::build_system;
use nbcss::extend::{csa, csa_lift, verify_orthogonal_fq, CsaParams};
use nbcss::field::FieldSpec;
use nbcss::BinaryMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hc = BinaryMatrix::from_dense(6, &[[1, 1, 1, 1, 0, 0], [0, 0, 1, 1, 1, 1]])?;
    let hd = BinaryMatrix::from_dense(6, &[[1, 1, 1, 1, 1, 1]])?;
    let pair = CssPair::new(hc, hd)?;
    println!("overlaps: {:?}", overlap_histogram(&overlap_sets(&pair)));
    if let Err(e) = build_system(&pair, &overlap_sets(&pair), 15) {
        println!("congruence route: {e}");
    }

    let field = Arc::new(FieldSpec::new(4)?);
    let params = CsaParams::random(&pair, 15, 42);
    println!("A = {:?}, B = {:?}, C = {:?}", params.a, params.b, params.c);
    let (hg, hd) = csa(&pair, &params, &field)?;
    println!("bad row pairs: {:?}", verify_orthogonal_fq(&hg, &hd)?);

    for x in nullspace_f2(pair.hc()) {
        let xi = csa_lift(pair.hc(), &x, &params, &field)?;
        let syndrome = hg.mul_vec(&xi)?;
        let shown: Vec<String> = xi.iter().map(|v| format!("{:x}", v.value())).collect();
        println!("x = {x:?} -> xi = [{}], H_Gamma xi zero: {}", shown.join(" "), syndrome.iter().all(|s| s.is_zero()));
    }
    Ok(())
}

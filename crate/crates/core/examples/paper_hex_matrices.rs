//! Field matrices written as bytes `h` standing for `alpha^(h-1)`: decode,
//! check the congruences, then evaluate in GF(256).

use std::sync::Arc;

use nbcss::binmat::overlap_sets;
use nbcss::congruence::{build_system, build_var_index};
use nbcss::extend::{assemble, verify_orthogonal_fq, verify_support};
use nbcss::field::FieldSpec;
use nbcss::formats::{paper_hex_assignment, parse_dense, parse_paper_hex};
use nbcss::CssPair;

const HX: &str = include_str!("../data/small_hgp_hx.txt");
const HZ: &str = include_str!("../data/small_hgp_hz.txt");
const GAMMA: &str = include_str!("../data/small_hgp_gamma.paperhex");
const DELTA: &str = include_str!("../data/small_hgp_delta.paperhex");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pair = CssPair::new(parse_dense(HX)?, parse_dense(HZ)?)?;
    let g = parse_paper_hex(GAMMA)?;
    let d = parse_paper_hex(DELTA)?;
    println!("support matches: {} {}", g.support() == *pair.hc(), d.support() == *pair.hd());

    let asg = paper_hex_assignment(&g, &d);
    let sys = build_system(&pair, &overlap_sets(&pair), 255)?;
    let v = asg.to_vector(&build_var_index(&pair))?;
    for (label, r) in sys.labels().zip(sys.residual(&v)?) {
        println!("({},{},{},{}) residual {r}", label.i, label.i_prime, label.j, label.j_prime);
    }

    let field = Arc::new(FieldSpec::new(8)?);
    let (hg, hd) = assemble(&pair, &asg, &field)?;
    println!("support: {}", verify_support(&hg, pair.hc())?.is_ok() && verify_support(&hd, pair.hd())?.is_ok());
    println!("bad row pairs over {field:?}: {:?}", verify_orthogonal_fq(&hg, &hd)?);
    Ok(())
}

//! Hypergraph product of two small seeds, its overlap structure and the
//! exponent congruences it induces over GF(256).

use nbcss::binmat::{check_orthogonal_f2, overlap_histogram, overlap_sets, BinaryMatrix};
use nbcss::congruence::{build_system, build_var_index};
use nbcss::formats::write_dense;
use nbcss::hgp::hgp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h1 = BinaryMatrix::from_dense(3, &[[1, 1, 1], [0, 1, 0]])?;
    let h2 = BinaryMatrix::from_dense(3, &[[1, 0, 0], [1, 1, 1]])?;
    let pair = hgp(&h1, &h2)?;

    println!("H_X ({}x{}):\n{}", pair.hc().rows(), pair.n(), write_dense(pair.hc()));
    println!("H_Z ({}x{}):\n{}", pair.hd().rows(), pair.n(), write_dense(pair.hd()));
    println!("odd overlaps: {}", check_orthogonal_f2(&pair).len());

    let table = overlap_sets(&pair);
    println!("overlap sizes: {:?}", overlap_histogram(&table));
    for ((i, k), s) in &table {
        println!("  S[{i},{k}] = {s:?}");
    }

    let sys = build_system(&pair, &table, 255)?;
    print!("{}", sys.dump(&build_var_index(&pair)));
    Ok(())
}

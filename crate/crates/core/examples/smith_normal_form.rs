//! Smith normal form with its unimodular transforms, and the solutions of
//! `A v = 0 (mod n)` read off from it.

use nbcss::modsolve::{snf, snf_nullspace_mod, IntMatrix};

fn show(name: &str, m: &IntMatrix) {
    println!("{name} =");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format!("{:>3}", m[(i, j)])).collect();
        println!("  [{}]", row.join(" "));
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = IntMatrix::from_rows(2, &[vec![2, 4], vec![6, 8]]);
    let res = snf(&a);
    show("A", &a);
    show("U", &res.u);
    show("V", &res.v);
    show("D", &res.d);
    assert_eq!(res.u.mul(&a).mul(&res.v), res.d);

    let b = IntMatrix::from_rows(4, &[vec![1, -1, 1, -1], vec![1, 1, 0, 0], vec![0, 2, 1, 1]]);
    let res = snf(&b);
    show("D(B)", &res.d);
    for n in [6u64, 7, 255] {
        let sampler = snf_nullspace_mod(&res, n)?;
        println!("B v = 0 (mod {n}): {} solutions", sampler.solution_count());
        for g in sampler.generators() {
            println!("  generator {:?} of order {}", g.vector, g.order);
        }
    }
    Ok(())
}

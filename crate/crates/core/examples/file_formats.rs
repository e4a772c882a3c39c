//! Dense, alist and hex-grid round trips.

use std::sync::Arc;

use nbcss::extend::FieldMatrix;
use nbcss::field::FieldSpec;
use nbcss::formats::{parse_alist, parse_dense, parse_hex_grid, write_alist, write_dense, write_hex_grid};
use nbcss::BinaryMatrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = BinaryMatrix::from_dense(5, &[[1, 1, 0, 1, 0], [0, 1, 1, 0, 1], [0, 0, 0, 0, 0]])?;
    let dense = write_dense(&m);
    let alist = write_alist(&m);
    print!("dense:\n{dense}alist:\n{alist}");
    assert_eq!(parse_dense(&dense)?, m);
    assert_eq!(parse_alist(&alist)?, m);

    // a matrix with no rows still needs its width
    let empty = BinaryMatrix::zeros(0, 4);
    let text = write_dense(&empty);
    print!("zero-row dense:\n{text}");
    assert_eq!(parse_dense(&text)?, empty);

    let field = Arc::new(FieldSpec::new(6)?);
    let mut fm = FieldMatrix::from_dense(field.clone(), 3, &vec![vec![field.alpha_pow(0); 3]; 2])?;
    fm.set(1, 2, field.alpha_pow(40));
    let grid = write_hex_grid(&fm, &["example".to_string()]);
    print!("hex grid:\n{grid}");
    assert_eq!(parse_hex_grid(&grid)?, fm);
    Ok(())
}

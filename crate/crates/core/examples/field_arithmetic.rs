//! GF(2^m) arithmetic through exp/log tables.

use nbcss::field::{make_field, FieldSpec, DEFAULT_PRIMITIVE_POLYS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gf16 = FieldSpec::new(4)?;
    println!("{gf16:?}, {} elements", gf16.order());
    let a = gf16.alpha();
    for k in 0..gf16.group_order() as i64 {
        print!("a^{k}={:#06b} ", gf16.alpha_pow(k).value());
    }
    println!();

    let x = gf16.alpha_pow(7);
    let y = gf16.alpha_pow(11);
    println!("a^7 * a^11 = a^{}", gf16.dlog(gf16.mul(x, y))?);
    println!("a^7 + a^11 = {:#06b}", gf16.add(x, y).value());
    println!("1 / a^7 = a^{}", gf16.dlog(gf16.inv(x)?)?);
    println!("a^-1 = a^{}", gf16.dlog(gf16.alpha_pow(-1))?);
    println!("a^15 = {}", gf16.pow(a, 15));

    // x^8 + x^4 + x^3 + x + 1 is irreducible but x does not generate the group
    match make_field(8, Some(0x11B)) {
        Ok(_) => unreachable!(),
        Err(e) => println!("0x11b rejected: {e}"),
    }

    for (m, p) in (2..).zip(DEFAULT_PRIMITIVE_POLYS) {
        print!("m={m}:{p:#x} ");
    }
    println!();
    Ok(())
}

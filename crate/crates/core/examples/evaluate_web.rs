//! The invariant vector of a web, and its invariance under lowering.

use webbasis::evaluation::evaluate;
use webbasis::webs::Web;

fn main() -> webbasis::Result<()> {
    let cup = Web::arc(2, 1);
    let v = evaluate(&cup)?;
    print!("SL2 cup:\n{v}");
    println!("F_1 kills it: {}", v.lower(1).is_zero());
    Ok(())
}

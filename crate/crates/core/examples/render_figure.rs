//! DOT and TikZ drawings of the SL(4) square web with boundary
//! (ω1, ω3, ω1, ω3).

use webbasis::webs::json::from_json;
use webbasis::webs::render::{dot, tikz};

fn main() -> webbasis::Result<()> {
    let web = from_json(include_str!("../tests/data/sl4_figure.json"))?;
    println!("{}", dot(&web));
    println!("{}", tikz(&web));
    Ok(())
}

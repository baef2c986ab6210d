//! SL(4) square flips and H-slides found in generated webs.

use webbasis::evaluation::{evaluate, kim_rewrite, kim_sites};
use webbasis::littelmann::enumerate_paths;
use webbasis::triangles::{basis_web, Variant};
use webbasis::weights::Weight;

fn main() -> webbasis::Result<()> {
    let boundary = [2, 1, 1, 2, 3, 3];
    for path in enumerate_paths(4, &boundary, &Weight::zero(4))? {
        let web = basis_web(&path, &vec![Variant::Reversed; path.len()])?;
        let v = evaluate(&web)?;
        for site in kim_sites(&web) {
            let moved = kim_rewrite(&web, &site)?;
            let ratio = v.ratio(&evaluate(&moved)?).map(|r| r.to_string());
            println!(
                "{path}: {:?} at {:?}, ratio {ratio:?}",
                site.kind, site.vertices
            );
        }
    }
    Ok(())
}

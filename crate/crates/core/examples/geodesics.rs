//! Distances in a dual diskoid: one geodesic and the full antichain from the
//! marked point to every vertex.

use webbasis::coherence::{distance_antichain, geodesic};
use webbasis::littelmann::enumerate_paths;
use webbasis::triangles::from_path_standard;
use webbasis::weights::Weight;

fn main() -> webbasis::Result<()> {
    let mut webs = Vec::new();
    for p in enumerate_paths(3, &[1, 2, 1, 2, 1, 2], &Weight::zero(3))? {
        webs.push(from_path_standard(&p)?.into_web());
    }
    let web = webs
        .into_iter()
        .max_by_key(|w| w.internal_vertex_count())
        .expect("nonempty");
    let d = web.dual_diskoid();
    println!(
        "{} dual vertices, {} dual edges",
        d.vertex_count(),
        d.edges().len()
    );
    let mark = d.marked();
    for v in 0..d.vertex_count() {
        let a = distance_antichain(&d, mark, v)?;
        let kind = if d.is_sector(v) { "sector" } else { "face" };
        let minima: Vec<String> = a.minima.iter().map(|w| w.fundamental_string()).collect();
        println!(
            "  {kind:6} {v:2}: {{{}}} via {:?}",
            minima.join(", "),
            geodesic(&d, mark, v)
        );
    }
    Ok(())
}

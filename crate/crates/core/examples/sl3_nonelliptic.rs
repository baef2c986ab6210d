//! Every SL(3) basis web is non-elliptic: internal faces have at least six
//! sides.

use webbasis::littelmann::{enumerate_paths, pieri_dimension};
use webbasis::triangles::from_path_standard;
use webbasis::weights::Weight;

fn main() -> webbasis::Result<()> {
    let boundary = [1, 2, 1, 2, 1, 2];
    let paths = enumerate_paths(3, &boundary, &Weight::zero(3))?;
    println!(
        "boundary {boundary:?}: {} paths, pieri {}",
        paths.len(),
        pieri_dimension(3, &boundary)?
    );
    for p in &paths {
        let web = from_path_standard(p)?.into_web();
        println!(
            "{p}: {} vertices, internal faces {:?}",
            web.internal_vertex_count(),
            web.internal_face_degrees()
        );
    }
    Ok(())
}

//! Coherence of a generated web, and its associated path.

use webbasis::coherence::is_coherent;
use webbasis::littelmann::enumerate_paths;
use webbasis::triangles::from_path_standard;
use webbasis::weights::Weight;

fn main() -> webbasis::Result<()> {
    let paths = enumerate_paths(4, &[1, 2, 1, 2, 2], &Weight::zero(4))?;
    for mu in paths {
        let web = from_path_standard(&mu)?.into_web();
        let report = is_coherent(&web);
        println!("path {mu}");
        print!("{report}");
        println!();
    }
    Ok(())
}

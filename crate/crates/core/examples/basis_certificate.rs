//! Exact linear independence of the basis webs.
//!
//! `cargo run --example basis_certificate -- 4 w2,w2,w2,w2`

use webbasis::cli::parse_boundary;
use webbasis::evaluation::{certify_rank, evaluate};
use webbasis::littelmann::{enumerate_paths, pieri_dimension};
use webbasis::triangles::from_path_standard;
use webbasis::weights::Weight;

fn main() -> webbasis::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let boundary = parse_boundary(n, args.get(1).map_or("w1,w1,w1,w2,w2,w2", String::as_str))?;
    let paths = enumerate_paths(n, &boundary, &Weight::zero(n))?;
    let vectors = paths
        .iter()
        .map(|p| evaluate(&from_path_standard(p)?.into_web()))
        .collect::<webbasis::Result<Vec<_>>>()?;
    let cert = certify_rank(&vectors)?;
    println!("SL({n}) {boundary:?}");
    println!("  |P|   = {}", paths.len());
    println!("  pieri = {}", pieri_dimension(n, &boundary)?);
    println!(
        "  rank  = {} ({:?}, {} columns)",
        cert.rank, cert.method, cert.columns
    );
    Ok(())
}

//! Vertex-minimal variant choices for SL(4), and the two choices of an
//! ambiguous pair giving the same vector up to sign.

use webbasis::evaluation::evaluate;
use webbasis::littelmann::MinusculePath;
use webbasis::triangles::{basis_web, sl4_select_variants, Variant};
use webbasis::weights::Weight;

fn main() -> webbasis::Result<()> {
    let points = ["0", "w2", "w1+w3", "w2", "0"]
        .iter()
        .map(|s| Weight::parse(4, s))
        .collect::<webbasis::Result<Vec<_>>>()?;
    let path = MinusculePath::new(points)?;
    let standard = basis_web(&path, &vec![Variant::Standard; path.len()])?;
    println!(
        "{path}: all standard gives {} vertices",
        standard.internal_vertex_count()
    );
    let choices = sl4_select_variants(&path)?;
    let mut vectors = Vec::new();
    for c in &choices {
        let web = basis_web(&path, c)?;
        println!("  {c:?}: {} vertices", web.internal_vertex_count());
        vectors.push(evaluate(&web)?);
    }
    if let [a, b] = &vectors[..] {
        println!(
            "  ratio of the two vectors: {:?}",
            a.ratio(b).map(|r| r.to_string())
        );
    }
    Ok(())
}

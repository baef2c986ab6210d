//! SL(2) basis webs are crossless matchings, counted by Catalan numbers.

use webbasis::cli::RunConfig;

fn main() -> webbasis::Result<()> {
    for m in 1..=6 {
        let config = RunConfig::new(2, vec![1; 2 * m])?;
        let webs = config.webs()?;
        println!("2m = {:2}: {} matchings", 2 * m, webs.len());
        if m == 2 {
            for (path, web) in &webs {
                let pairs: Vec<String> = web
                    .edges()
                    .iter()
                    .map(|e| format!("{}-{}", e.tail, e.head))
                    .collect();
                println!("    {path}  {}", pairs.join(" "));
            }
        }
    }
    Ok(())
}

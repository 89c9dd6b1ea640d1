//! Factor existence and coveredness, with witnesses and violating sets.
//!
//! cargo run --example factor_check

use specfac::factor;
use specfac::families;
use specfac::{graph6, Graph};

fn report(name: &str, g: &Graph) -> specfac::Result<()> {
    print!("{name:<22} {:<10}", graph6::encode(g));
    match factor::find_p2_factor(g)? {
        Some(w) => print!(" factor {:?}", w.paths),
        None => print!(" no factor ({})", factor::deficiency_check(g)?.violation().unwrap()),
    }
    match factor::is_covered_structural(g)?.violation() {
        None => println!(", covered"),
        Some(v) => println!(", not covered: {v}"),
    }
    Ok(())
}

fn main() -> specfac::Result<()> {
    report("P4", &Graph::path(4)?)?;
    report("K1,3", &Graph::star(3)?)?;
    report("C5", &Graph::path(5)?.with_edge(0, 4)?)?;
    report("K1 v (K3 u 2K1)", &families::extremal_graph(6)?.graph)?;
    report("hub with pendants", &families::claim1_graph(7)?.graph)?;

    // an edge that no factor can use
    let g = families::extremal_graph(6)?.graph;
    for (u, v) in g.edges() {
        if factor::factor_containing_edge(&g, u, v)?.is_none() {
            println!("edge {u}-{v} lies in no factor");
        }
    }
    Ok(())
}

//! Encoding and decoding graph6 strings.
//!
//! cargo run --example graph6_io -- 'Ch' 'E?Bw'

use specfac::{graph6, Graph};

fn main() -> specfac::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            graph6::encode(&Graph::path(4)?),
            graph6::encode(&Graph::complete(5)?),
            graph6::encode(&Graph::star(6)?),
        ]
    } else {
        args
    };
    for text in inputs {
        let g = graph6::decode(&text)?;
        let edges: Vec<_> = g.edges().collect();
        println!("{text}: n={} m={} edges={edges:?}", g.order(), edges.len());
        assert_eq!(graph6::encode(&g), text);
    }
    Ok(())
}

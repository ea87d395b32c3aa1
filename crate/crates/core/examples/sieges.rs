//! Maps of minimal siege sizes, and a cone classification around a cop.

use grid_pursuit::engine::{cone_membership, minimal_siege_cardinality, ConeFrame, ConeOrientation, ConeRelation};
use grid_pursuit::{GridSpec, Vertex};

fn main() -> grid_pursuit::Result<()> {
    for spec in [GridSpec::grid(4, 6)?, GridSpec::semitorus(4, 6)?, GridSpec::torus(4, 6)?] {
        println!("{spec}");
        for r in 0..spec.m {
            let row: Vec<String> = (0..spec.n)
                .map(|c| minimal_siege_cardinality(&spec, Vertex::new(r, c)).to_string())
                .collect();
            println!("  {}", row.join(" "));
        }
    }

    let spec = GridSpec::grid(6, 9)?;
    let apex = Vertex::new(1, 4);
    println!("cone below {apex} on {spec} (W within, E edge, . outside)");
    for r in 0..spec.m {
        let row: String = (0..spec.n)
            .map(|c| {
                let rel = cone_membership(&spec, apex, ConeOrientation::Down, &ConeFrame::planar(), Vertex::new(r, c));
                match rel {
                    Ok(ConeRelation::Within) => 'W',
                    Ok(ConeRelation::OnEdge) => 'E',
                    _ => '.',
                }
            })
            .collect();
        println!("  {row}");
    }
    Ok(())
}

//! Fewest cops needed to capture within a deadline.

use grid_pursuit::analysis::{min_cops_for_deadline, render_decimal, render_ratio};
use grid_pursuit::GridSpec;

fn main() -> grid_pursuit::Result<()> {
    for (spec, t_star) in [
        (GridSpec::grid(4, 13)?, 3),
        (GridSpec::grid(4, 18)?, 5),
        (GridSpec::semitorus(6, 9)?, 5),
        (GridSpec::torus(7, 15)?, 12),
        (GridSpec::torus(7, 15)?, 2),
    ] {
        match min_cops_for_deadline(&spec, t_star) {
            Ok(a) => {
                let upper = a
                    .upper
                    .map_or("unbounded".to_string(), |u| format!("{} ({})", render_ratio(u), render_decimal(u, 2)));
                println!(
                    "{spec:7} t*={t_star:2}: k from {} ({}) up to {upper}, answer {}",
                    render_ratio(a.bound),
                    render_decimal(a.bound, 2),
                    a.k
                );
            }
            Err(e) => println!("{spec:7} t*={t_star:2}: {e}"),
        }
    }
    Ok(())
}

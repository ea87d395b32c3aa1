//! Ratio of guaranteed capture time to the lower bound as boards stretch.

use grid_pursuit::analysis::{
    bound_ratio_trend, render_decimal, square_torus_schedule, tall_semitorus_schedule, wide_semitorus_schedule,
    wide_torus_schedule,
};
use grid_pursuit::GridKind;

fn main() -> grid_pursuit::Result<()> {
    let schedules = [
        ("semi-torus, wide", GridKind::SemiTorus, wide_semitorus_schedule()),
        ("semi-torus, tall", GridKind::SemiTorus, tall_semitorus_schedule()),
        ("torus, square", GridKind::Torus, square_torus_schedule()),
        ("torus, wide", GridKind::Torus, wide_torus_schedule()),
    ];
    for (label, kind, schedule) in schedules {
        println!("{label}");
        for p in bound_ratio_trend(kind, &schedule)? {
            println!("  {:4} x {:<5} {:>8} / {:<4} = {}", p.m, p.n, p.upper.to_string(), p.lower, render_decimal(p.ratio, 4));
        }
    }
    Ok(())
}

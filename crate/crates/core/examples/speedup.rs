//! Work `k * t_k` and speed-up ratios between team sizes.

use grid_pursuit::analysis::{capture_time_formula, torus_exact_components, work_and_speedup, CaptureTime};
use grid_pursuit::{GridKind, GridSpec};

fn time(spec: &GridSpec, k: usize) -> grid_pursuit::Result<u64> {
    if spec.kind == GridKind::Torus {
        return Ok(torus_exact_components(spec, k)?.t);
    }
    match capture_time_formula(spec, k)?.time {
        CaptureTime::Point(t) => Ok(t),
        w => Ok(w.int_hi()),
    }
}

fn main() -> grid_pursuit::Result<()> {
    for (spec, ks) in [
        (GridSpec::grid(4, 18)?, vec![2, 4]),
        (GridSpec::semitorus(6, 9)?, vec![2, 3]),
        (GridSpec::torus(7, 15)?, vec![3, 4]),
        (GridSpec::semitorus(8, 64)?, vec![2, 4, 8]),
    ] {
        let instances = ks
            .iter()
            .map(|&k| Ok((k, time(&spec, k)?)))
            .collect::<grid_pursuit::Result<Vec<_>>>()?;
        let s = work_and_speedup(&instances);
        println!("{spec}: work {:?}", s.work);
        for (i, j, r) in s.ratios {
            println!("    w{i}/w{j} = {r}");
        }
    }
    Ok(())
}

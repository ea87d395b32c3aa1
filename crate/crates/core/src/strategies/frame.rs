use serde::{Deserialize, Serialize};

use crate::topology::{GridSpec, Move, Vertex};

/// Maps the global board onto a local one where the algorithm's
/// assumptions hold (`m <= n`, cones opening downwards).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Frame {
    pub transpose: bool,
    pub flip_rows: bool,
}

impl Frame {
    pub fn identity() -> Self {
        Frame::default()
    }

    pub fn transposed() -> Self {
        Frame {
            transpose: true,
            flip_rows: false,
        }
    }

    pub fn with_flip(self, flip_rows: bool) -> Self {
        Frame { flip_rows, ..self }
    }

    pub fn local_spec(&self, spec: &GridSpec) -> GridSpec {
        if self.transpose {
            spec.transposed()
        } else {
            *spec
        }
    }

    pub fn to_local(&self, spec: &GridSpec, v: Vertex) -> Vertex {
        let local = self.local_spec(spec);
        let (mut r, c) = if self.transpose {
            (v.col, v.row)
        } else {
            (v.row, v.col)
        };
        if self.flip_rows {
            r = local.m - 1 - r;
        }
        Vertex::new(r, c)
    }

    pub fn to_global(&self, spec: &GridSpec, v: Vertex) -> Vertex {
        let local = self.local_spec(spec);
        let r = if self.flip_rows { local.m - 1 - v.row } else { v.row };
        if self.transpose {
            Vertex::new(v.col, r)
        } else {
            Vertex::new(r, v.col)
        }
    }

    pub fn move_to_global(&self, mv: Move) -> Move {
        let mv = match (self.flip_rows, mv) {
            (true, Move::Up) => Move::Down,
            (true, Move::Down) => Move::Up,
            (_, other) => other,
        };
        if self.transpose {
            match mv {
                Move::Up => Move::Left,
                Move::Down => Move::Right,
                Move::Left => Move::Up,
                Move::Right => Move::Down,
                Move::Stay => Move::Stay,
            }
        } else {
            mv
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moves_commute_with_the_frame() {
        let spec = GridSpec::torus(5, 7).unwrap();
        for transpose in [false, true] {
            for flip_rows in [false, true] {
                let f = Frame {
                    transpose,
                    flip_rows,
                };
                let local = f.local_spec(&spec);
                for v in spec.vertices() {
                    let lv = f.to_local(&spec, v);
                    assert_eq!(f.to_global(&spec, lv), v);
                    for mv in Move::ALL {
                        let l_after = local.step(lv, mv).unwrap();
                        let g_after = spec.step(v, f.move_to_global(mv)).unwrap();
                        assert_eq!(f.to_global(&spec, l_after), g_after);
                    }
                }
            }
        }
    }
}

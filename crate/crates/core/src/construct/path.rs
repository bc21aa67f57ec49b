use super::{replay_local, SolveError};
use crate::game::{verify_with_distances, Move, MoveSequence, Verdict};
use crate::graph::{find_hamilton_path, DistanceMatrix, Graph};

/// A path slice, possibly read back to front.
#[derive(Clone, Copy)]
struct View<'a> {
    p: &'a [usize],
    rev: bool,
}

impl View<'_> {
    fn len(&self) -> usize {
        self.p.len()
    }

    fn at(&self, i: usize) -> usize {
        if self.rev {
            self.p[self.p.len() - 1 - i]
        } else {
            self.p[i]
        }
    }

    fn sub(&self, lo: usize, hi: usize) -> Self {
        let p = if self.rev {
            &self.p[self.p.len() - hi..self.p.len() - lo]
        } else {
            &self.p[lo..hi]
        };
        View { p, rev: self.rev }
    }

    fn reversed(&self) -> Self {
        View {
            p: self.p,
            rev: !self.rev,
        }
    }
}

/// Stacks `view` onto position `t`. With `s = d(x_1, x_t)`, the first `s`
/// vertices are stacked onto `x_1`, the rest onto `x_t`, then `x_1` jumps `s`.
fn stack_view(
    d: &DistanceMatrix,
    view: View<'_>,
    t: usize,
    out: &mut MoveSequence,
) -> Result<(), SolveError> {
    let len = view.len();
    if len == 1 {
        return Ok(());
    }
    let (view, t) = if t == 0 {
        (view.reversed(), len - 1)
    } else {
        (view, t)
    };
    let s = d
        .get(view.at(0), view.at(t))
        .filter(|&s| s >= 1 && s <= t)
        .ok_or(SolveError::NotAPath)?;
    stack_view(d, view.sub(0, s), 0, out)?;
    stack_view(d, view.sub(s, len), t - s, out)?;
    out.push(Move::new(view.at(0), view.at(t), s as u32));
    Ok(())
}

/// Path stacking without validating `p`; callers must have checked it.
pub(crate) fn stack_path_unchecked(
    d: &DistanceMatrix,
    p: &[usize],
    t_index: usize,
) -> Result<MoveSequence, SolveError> {
    let mut out = MoveSequence::new();
    stack_view(d, View { p, rev: false }, t_index, &mut out)?;
    Ok(out)
}

/// Moves the cups of path `p` (one per vertex) onto `p[t_index]` in
/// `p.len() - 1` moves that only touch vertices of `p`. Distances are taken
/// in the whole graph, so `p` need not be isometric.
pub fn stack_path(
    g: &Graph,
    d: &DistanceMatrix,
    p: &[usize],
    t_index: usize,
) -> Result<MoveSequence, SolveError> {
    if p.is_empty() {
        return Err(SolveError::Empty);
    }
    if t_index >= p.len() {
        return Err(SolveError::IndexOutOfRange {
            index: t_index,
            len: p.len(),
        });
    }
    if !g.is_path(p) {
        return Err(SolveError::NotAPath);
    }
    let moves = stack_path_unchecked(d, p, t_index)?;
    replay_local(d, p, None, p[t_index], moves.moves()).map_err(SolveError::Unverified)?;
    Ok(moves)
}

/// Wins on any graph with a Hamilton path. Uses `hamilton_path` when given,
/// otherwise runs the exact search with a cap of `max_vertices`.
pub fn solve_via_hamilton(
    g: &Graph,
    d: &DistanceMatrix,
    t: usize,
    hamilton_path: Option<&[usize]>,
    max_vertices: usize,
) -> Result<MoveSequence, SolveError> {
    if t >= g.n() {
        return Err(SolveError::TargetOutOfRange(t));
    }
    let found;
    let path = match hamilton_path {
        Some(p) => p,
        None => {
            found = find_hamilton_path(g, max_vertices)?.ok_or(SolveError::NoHamiltonPath)?;
            &found
        }
    };
    if path.len() != g.n() || !g.is_path(path) {
        return Err(SolveError::NotAPath);
    }
    let t_index = path
        .iter()
        .position(|&v| v == t)
        .expect("a Hamilton path visits t");
    let moves = stack_path_unchecked(d, path, t_index)?;
    match verify_with_distances(d, t, &moves) {
        Verdict::Valid => Ok(moves),
        Verdict::Invalid(failure) => Err(SolveError::Unverified(failure)),
    }
}

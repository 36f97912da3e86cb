use super::generators::{generator_set, GeneratorSet};
use super::ArtinError;
use crate::combinatorics::{ArrowKind, GroupParams, Quiver};
use std::collections::HashSet;

/// Which arrow the cycle starts with, deciding the first generator tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleStart {
    Extra,
    Clockwise,
    Anticlockwise,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Decomposition {
    pub start: CycleStart,
    /// Generator indices with multiplicity, sorted.
    pub factors: Vec<usize>,
    pub names: Vec<String>,
}

fn check_path(q: &Quiver, cycle: &[usize]) -> Result<(), ArtinError> {
    if cycle.iter().any(|&a| a >= q.arrows.len()) {
        return Err(ArtinError::NotAPath("unknown arrow".into()));
    }
    if cycle.windows(2).any(|w| q.arrows[w[0]].head != q.arrows[w[1]].tail) {
        return Err(ArtinError::NotAPath("consecutive arrows do not compose".into()));
    }
    if !q.is_closed_path(cycle) {
        return Err(ArtinError::NotAPath("path does not return to its start".into()));
    }
    Ok(())
}

/// Writes a closed path as a product of generators, matching exponent vectors.
///
/// The search peels off generators containing the lowest remaining arrow, trying
/// first those that contain the path's first arrow; dead ends are memoised.
pub fn decompose_cycle(g: GroupParams, cycle: &[usize]) -> Result<Decomposition, ArtinError> {
    decompose_with(&generator_set(g), cycle)
}

pub fn decompose_with(s: &GeneratorSet, cycle: &[usize]) -> Result<Decomposition, ArtinError> {
    check_path(&s.quiver, cycle)?;
    let first = cycle[0];
    let start = match s.quiver.arrows[first].kind {
        ArrowKind::Extra => CycleStart::Extra,
        ArrowKind::Clockwise => CycleStart::Clockwise,
        ArrowKind::Anticlockwise => CycleStart::Anticlockwise,
    };
    let mut need = vec![0u32; s.quiver.arrows.len()];
    for &a in cycle {
        need[a] += 1;
    }
    let images: Vec<Vec<u32>> = s
        .vars
        .iter()
        .map(|v| (0..need.len()).map(|a| v.image.exponent(a)).collect())
        .collect();
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by_key(|&k| images[k][first] == 0);
    let mut dead = HashSet::new();
    let mut out = Vec::new();
    if !search(&mut need, &images, &order, &mut dead, &mut out) {
        return Err(ArtinError::Undecomposable);
    }
    out.sort_unstable();
    Ok(Decomposition {
        start,
        names: out.iter().map(|&k| s.name(k).to_string()).collect(),
        factors: out,
    })
}

fn search(
    need: &mut Vec<u32>,
    images: &[Vec<u32>],
    order: &[usize],
    dead: &mut HashSet<Vec<u32>>,
    out: &mut Vec<usize>,
) -> bool {
    let Some(arrow) = need.iter().position(|&e| e > 0) else {
        return true;
    };
    if dead.contains(need) {
        return false;
    }
    for &k in order {
        let img = &images[k];
        if img[arrow] == 0 || img.iter().zip(need.iter()).any(|(a, b)| a > b) {
            continue;
        }
        need.iter_mut().zip(img).for_each(|(n, a)| *n -= a);
        out.push(k);
        if search(need, images, order, dead, out) {
            return true;
        }
        out.pop();
        need.iter_mut().zip(img).for_each(|(n, a)| *n += a);
    }
    dead.insert(need.clone());
    false
}

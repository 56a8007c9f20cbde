use crate::quiver::{Path, PathError};

/// A cyclic path written as a power of a primitive cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleCycleDecomp {
    pub primitive: Path,
    pub exponent: usize,
}

/// Splits a cyclic path into its shortest period and the number of
/// repetitions.
pub fn simple_cycle_decomposition(p: &Path) -> Result<SimpleCycleDecomp, PathError> {
    if p.is_trivial() {
        return Err(PathError::Trivial);
    }
    if !p.is_cyclic() {
        return Err(PathError::NotCyclic(p.to_string()));
    }
    let arrows = p.arrows();
    let n = arrows.len();
    let period = (1..=n)
        .find(|&d| n.is_multiple_of(d) && (d..n).all(|k| arrows[k] == arrows[k - d]))
        .unwrap();
    Ok(SimpleCycleDecomp {
        primitive: p.prefix(period),
        exponent: n / period,
    })
}

/// The source vertices along the primitive cycle of `p`. A trivial path
/// gives its single vertex.
pub fn p_cycle(p: &Path) -> Result<Vec<String>, PathError> {
    if p.is_trivial() {
        return Ok(vec![p.source().clone()]);
    }
    let d = simple_cycle_decomposition(p)?;
    let v = d.primitive.vertices();
    Ok(v[..v.len() - 1].to_vec())
}

/// Index of the lexicographically least rotation of a word.
pub(crate) fn least_rotation<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    (0..n)
        .min_by(|&a, &b| {
            (0..n)
                .map(|k| &word[(a + k) % n])
                .cmp((0..n).map(|k| &word[(b + k) % n]))
        })
        .unwrap_or(0)
}

/// The least rotation of a cyclic path by arrow ids. Paths that are not
/// cyclic, and trivial paths, are returned unchanged.
pub fn rotation_class(p: &Path) -> Path {
    if p.is_trivial() || !p.is_cyclic() {
        return p.clone();
    }
    p.rotate(least_rotation(p.arrows())).unwrap()
}

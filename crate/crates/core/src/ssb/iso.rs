use std::collections::BTreeMap;

use super::SsbPresentation;

/// A quiver isomorphism under which the projective bases agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsbIsomorphism {
    pub vertex_map: BTreeMap<String, String>,
    pub arrow_map: BTreeMap<String, String>,
}

#[derive(Debug, PartialEq, Eq)]
struct Invariants {
    vertices: usize,
    arrows: usize,
    dimension: usize,
    cycles: Vec<(usize, u32)>,
    projectives: Vec<usize>,
}

fn invariants(l: &SsbPresentation) -> Invariants {
    let mut cycles: Vec<(usize, u32)> = l
        .vertex_cycles()
        .iter()
        .map(|c| (c.arrows.len(), c.multiplicity))
        .collect();
    cycles.sort_unstable();
    let mut projectives: Vec<usize> = l.projectives().values().map(|d| d.dimension()).collect();
    projectives.sort_unstable();
    Invariants {
        vertices: l.quiver().vertex_count(),
        arrows: l.quiver().arrow_count(),
        dimension: l.dimension(),
        cycles,
        projectives,
    }
}

struct Search<'a> {
    a: &'a SsbPresentation,
    b: &'a SsbPresentation,
    used: Vec<bool>,
    vertex_map: BTreeMap<String, String>,
    vertex_image: BTreeMap<String, String>,
    arrow_map: BTreeMap<String, String>,
}

impl Search<'_> {
    /// Maps cycle `i` of `a` onto cycles of `b`. Since arrow successors must
    /// be preserved, fixing the image of one arrow fixes the whole cycle.
    fn extend(&mut self, i: usize) -> bool {
        let cycles_a = self.a.vertex_cycles();
        if i == cycles_a.len() {
            return self.bases_agree();
        }
        let ca = &cycles_a[i];
        for j in 0..self.b.vertex_cycles().len() {
            let cb = &self.b.vertex_cycles()[j];
            if self.used[j] || cb.arrows.len() != ca.arrows.len() || cb.multiplicity != ca.multiplicity {
                continue;
            }
            let n = ca.arrows.len();
            for shift in 0..n {
                let saved = (self.vertex_map.clone(), self.vertex_image.clone());
                let ok = (0..n).all(|k| self.map_arrow(&ca.arrows[k], &cb.arrows[(k + shift) % n]));
                if ok {
                    self.used[j] = true;
                    if self.extend(i + 1) {
                        return true;
                    }
                    self.used[j] = false;
                }
                for k in 0..n {
                    self.arrow_map.remove(&ca.arrows[k]);
                }
                (self.vertex_map, self.vertex_image) = saved;
            }
        }
        false
    }

    fn map_arrow(&mut self, x: &str, y: &str) -> bool {
        let ax = self.a.quiver().arrow(x).unwrap();
        let by = self.b.quiver().arrow(y).unwrap();
        self.arrow_map.insert(x.to_string(), y.to_string());
        self.map_vertex(&ax.source, &by.source) && self.map_vertex(&ax.target, &by.target)
    }

    fn map_vertex(&mut self, v: &str, w: &str) -> bool {
        match (self.vertex_map.get(v), self.vertex_image.get(w)) {
            (Some(x), _) => x == w,
            (None, Some(_)) => false,
            (None, None) => {
                self.vertex_map.insert(v.to_string(), w.to_string());
                self.vertex_image.insert(w.to_string(), v.to_string());
                true
            }
        }
    }

    fn bases_agree(&self) -> bool {
        self.a.quiver().vertices().iter().all(|v| {
            let Some(w) = self.vertex_map.get(v) else {
                return false;
            };
            let mut mapped: Vec<_> = self
                .a
                .projective_basis(v)
                .iter()
                .map(|e| e.relabel(|x| self.vertex_map[x].clone(), |x| self.arrow_map[x].clone()))
                .collect();
            mapped.sort();
            mapped == self.b.projective_basis(w)
        })
    }
}

/// Searches for a relabeling of the quiver of `a` onto that of `b` that
/// carries every projective basis of `a` to the one of `b`.
pub fn find_ssb_isomorphism(a: &SsbPresentation, b: &SsbPresentation) -> Option<SsbIsomorphism> {
    if invariants(a) != invariants(b) {
        return None;
    }
    let mut search = Search {
        a,
        b,
        used: vec![false; b.vertex_cycles().len()],
        vertex_map: BTreeMap::new(),
        vertex_image: BTreeMap::new(),
        arrow_map: BTreeMap::new(),
    };
    search.extend(0).then_some(SsbIsomorphism {
        vertex_map: search.vertex_map,
        arrow_map: search.arrow_map,
    })
}

pub fn is_isomorphic_ssb(a: &SsbPresentation, b: &SsbPresentation) -> bool {
    find_ssb_isomorphism(a, b).is_some()
}

/// A human-readable reason why `a` and `b` are not isomorphic, or `None`
/// if they are.
pub fn distinguishing_invariant(a: &SsbPresentation, b: &SsbPresentation) -> Option<String> {
    let (x, y) = (invariants(a), invariants(b));
    let reason = if x.dimension != y.dimension {
        format!("dimension {} != {}", x.dimension, y.dimension)
    } else if x.vertices != y.vertices {
        format!("vertex count {} != {}", x.vertices, y.vertices)
    } else if x.arrows != y.arrows {
        format!("arrow count {} != {}", x.arrows, y.arrows)
    } else if x.cycles != y.cycles {
        format!("vertex cycles (length, multiplicity) {:?} != {:?}", x.cycles, y.cycles)
    } else if x.projectives != y.projectives {
        format!("projective dimensions {:?} != {:?}", x.projectives, y.projectives)
    } else if find_ssb_isomorphism(a, b).is_none() {
        "no relabeling matches the projective bases".to_string()
    } else {
        return None;
    };
    Some(reason)
}

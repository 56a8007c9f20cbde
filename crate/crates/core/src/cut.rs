//! Admissible cuts: removing one arrow from every vertex cycle of a
//! multiplicity-one Brauer graph algebra leaves a gentle algebra whose
//! trivial extension is the algebra we started from.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::gentle::{validate_gentle, GentleAlgebra, GentleIssue};
use crate::quiver::{Presentation, Relation};
use crate::report::Report;
use crate::ssb::{is_isomorphic_ssb, SsbPresentation};
use crate::trivext::trivial_extension;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("vertex cycle `{cycle}` has multiplicity {multiplicity}; cuts need multiplicity 1")]
    Multiplicity { cycle: String, multiplicity: u32 },
    #[error("`{0}` is not an arrow")]
    UnknownArrow(String),
    #[error("vertex cycle `{0}` has no arrow in the cutting set")]
    Uncut(String),
    #[error("vertex cycle `{0}` has more than one arrow in the cutting set")]
    CutTwice(String),
    #[error("cut is not gentle:\n{0}")]
    NotGentle(Report<GentleIssue>),
}

/// A set of arrows meeting every vertex cycle exactly once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CuttingSet {
    pub arrows: BTreeSet<String>,
}

impl CuttingSet {
    pub fn new<I, S>(arrows: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        CuttingSet {
            arrows: arrows.into_iter().map(Into::into).collect(),
        }
    }
}

/// The arrows of each vertex cycle, as least rotations.
pub fn vertex_cycles(l: &SsbPresentation) -> Vec<Vec<String>> {
    l.vertex_cycles().iter().map(|c| c.arrows.clone()).collect()
}

fn check_multiplicity_one(l: &SsbPresentation) -> Result<(), CutError> {
    match l.vertex_cycles().iter().find(|c| c.multiplicity != 1) {
        Some(c) => Err(CutError::Multiplicity {
            cycle: c.arrows.join(" "),
            multiplicity: c.multiplicity,
        }),
        None => Ok(()),
    }
}

/// All cutting sets, choosing one arrow per cycle with the arrows of each
/// cycle taken in sorted order and the last cycle varying fastest.
pub fn enumerate_cutting_sets(l: &SsbPresentation) -> Result<CuttingSets, CutError> {
    check_multiplicity_one(l)?;
    let choices: Vec<Vec<String>> = vertex_cycles(l)
        .into_iter()
        .map(|mut c| {
            c.sort();
            c
        })
        .collect();
    let done = choices.iter().any(Vec::is_empty);
    Ok(CuttingSets {
        index: vec![0; choices.len()],
        choices,
        done,
    })
}

/// Iterator over cutting sets; see [`enumerate_cutting_sets`].
#[derive(Debug, Clone)]
pub struct CuttingSets {
    choices: Vec<Vec<String>>,
    index: Vec<usize>,
    done: bool,
}

impl Iterator for CuttingSets {
    type Item = CuttingSet;

    fn next(&mut self) -> Option<CuttingSet> {
        if self.done {
            return None;
        }
        let set = CuttingSet::new(self.index.iter().zip(&self.choices).map(|(&k, c)| c[k].clone()));
        self.done = true;
        for slot in (0..self.index.len()).rev() {
            self.index[slot] += 1;
            if self.index[slot] < self.choices[slot].len() {
                self.done = false;
                break;
            }
            self.index[slot] = 0;
        }
        Some(set)
    }
}

pub fn check_cutting_set(l: &SsbPresentation, d: &CuttingSet) -> Result<(), CutError> {
    check_multiplicity_one(l)?;
    if let Some(a) = d.arrows.iter().find(|a| l.quiver().arrow(a).is_none()) {
        return Err(CutError::UnknownArrow(a.clone()));
    }
    for c in l.vertex_cycles() {
        let hits = c.arrows.iter().filter(|a| d.arrows.contains(*a)).count();
        match hits {
            0 => return Err(CutError::Uncut(c.arrows.join(" "))),
            1 => {}
            _ => return Err(CutError::CutTwice(c.arrows.join(" "))),
        }
    }
    Ok(())
}

/// Removes the arrows of `d` and keeps the zero relations of length 2
/// between surviving arrows.
pub fn admissible_cut(l: &SsbPresentation, d: &CuttingSet) -> Result<GentleAlgebra, CutError> {
    check_cutting_set(l, d)?;
    let quiver = l.quiver().without_arrows(&d.arrows);
    let relations: Vec<Relation> = l
        .presentation()
        .monomials()
        .filter(|m| m.len() == 2 && m.arrows().iter().all(|a| !d.arrows.contains(a)))
        .map(|m| Relation::Monomial(m.clone()))
        .collect();
    let p = Presentation::new(quiver, relations).expect("surviving relations are paths");
    validate_gentle(p).map_err(CutError::NotGentle)
}

/// Whether the trivial extension of the cut is isomorphic to `l`.
pub fn verify_roundtrip(l: &SsbPresentation, d: &CuttingSet) -> Result<bool, CutError> {
    let a = admissible_cut(l, d)?;
    Ok(is_isomorphic_ssb(&trivial_extension(&a), l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{algebra_of, fixtures};
    use crate::quiver::parse_presentation;

    fn gentle(text: &str) -> GentleAlgebra {
        validate_gentle(parse_presentation(text).unwrap()).unwrap()
    }

    const A2: &str = "vertex 1\nvertex 2\narrow a 1 2\n";
    const ANNULUS_JACOBIAN: &str = "vertex 1\nvertex 2\nvertex 3\narrow p 1 2\narrow u 1 3\narrow v 3 2\n";

    fn sets(l: &SsbPresentation) -> Vec<Vec<String>> {
        enumerate_cutting_sets(l)
            .unwrap()
            .map(|d| d.arrows.into_iter().collect())
            .collect()
    }

    #[test]
    fn cycles() {
        assert_eq!(vertex_cycles(&trivial_extension(&gentle(A2))), [["a", "beta(a)"]]);
        assert_eq!(
            vertex_cycles(&trivial_extension(&gentle(ANNULUS_JACOBIAN))),
            [vec!["beta(p)", "p"], vec!["beta(u.v)", "u", "v"]]
        );
        let line = algebra_of(&fixtures::graph(fixtures::LINE3));
        assert_eq!(vertex_cycles(&line), [["a1", "b1"], ["b2", "c2"]]);
    }

    #[test]
    fn enumeration() {
        let t = trivial_extension(&gentle(A2));
        assert_eq!(sets(&t), [["a"], ["beta(a)"]]);
        assert_eq!(sets(&trivial_extension(&gentle(ANNULUS_JACOBIAN))).len(), 6);
        let e21 = algebra_of(&fixtures::graph(fixtures::E21));
        assert!(matches!(enumerate_cutting_sets(&e21), Err(CutError::Multiplicity { .. })));
    }

    #[test]
    fn cuts_of_the_two_vertex_line() {
        let a = gentle(A2);
        let t = trivial_extension(&a);
        let back = admissible_cut(&t, &CuttingSet::new(["beta(a)"])).unwrap();
        assert_eq!(back.presentation(), a.presentation());
        let flipped = admissible_cut(&t, &CuttingSet::new(["a"])).unwrap();
        let arrow = &flipped.quiver().arrows()[0];
        assert_eq!((arrow.source.as_str(), arrow.target.as_str()), ("2", "1"));
    }

    #[test]
    fn dashed_arrows_recover_annulus_algebra() {
        let a = gentle(ANNULUS_JACOBIAN);
        let t = trivial_extension(&a);
        let back = admissible_cut(&t, &CuttingSet::new(["beta(p)", "beta(u.v)"])).unwrap();
        assert_eq!(back.presentation(), a.presentation());
    }

    #[test]
    fn every_cut_round_trips() {
        let graphs = [
            trivial_extension(&gentle(ANNULUS_JACOBIAN)),
            trivial_extension(&gentle(A2)),
            algebra_of(&fixtures::graph(fixtures::LINE3)),
        ];
        for (l, count) in graphs.iter().zip([6, 2, 4]) {
            let all: Vec<CuttingSet> = enumerate_cutting_sets(l).unwrap().collect();
            assert_eq!(all.len(), count);
            for d in &all {
                assert!(verify_roundtrip(l, d).unwrap());
            }
        }
    }

    #[test]
    fn invalid_cutting_sets() {
        let t = trivial_extension(&gentle(ANNULUS_JACOBIAN));
        assert!(matches!(
            admissible_cut(&t, &CuttingSet::new(["p"])),
            Err(CutError::Uncut(_))
        ));
        assert!(matches!(
            admissible_cut(&t, &CuttingSet::new(["p", "u", "v"])),
            Err(CutError::CutTwice(_))
        ));
        assert!(matches!(
            admissible_cut(&t, &CuttingSet::new(["p", "zz"])),
            Err(CutError::UnknownArrow(_))
        ));
    }
}

//! Property suites over enumerated instances.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::brauer::{
    algebra_of, canonical_form, is_isomorphic, serialize_brauer_graph, validate_brauer_graph, BrauerGraph,
    RawBrauerGraph,
};
use crate::cut::{admissible_cut, enumerate_cutting_sets, verify_roundtrip, CuttingSet};
use crate::enumerate::{brauer_graphs, gentle_algebras, multiplicity_one_graphs, polygon_triangulations};
use crate::gentle::GentleAlgebra;
use crate::quiver::{serialize_presentation, Presentation};
use crate::ssb::{distinguishing_invariant, graph_of_ssb, is_isomorphic_ssb};
use crate::surface::{
    brauer_graph_of_triangulation, jacobian_algebra, parse_triangulation, validate_triangulation, ArrowConvention,
    Triangulation, ANNULUS,
};
use crate::trivext::{graph_of_gentle, projectives_oracle, trivial_extension};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    /// Brauer graph to algebra and back.
    BrauerRoundTrip,
    /// Trivial extensions of gentle algebras.
    TrivialExtension,
    /// Admissible cuts of multiplicity-one Brauer graph algebras.
    Cuts,
    /// Socle of a gentle algebra against its maximal paths.
    Socle,
    /// Jacobian algebras of polygon and annulus triangulations.
    Jacobian,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::BrauerRoundTrip,
        Suite::TrivialExtension,
        Suite::Cuts,
        Suite::Socle,
        Suite::Jacobian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BrauerRoundTrip => "thm-1-1",
            Suite::TrivialExtension => "thm-1-2",
            Suite::Cuts => "thm-1-3",
            Suite::Socle => "lemma-2-1",
            Suite::Jacobian => "jacobian",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_edges: usize,
    pub max_mult: u32,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_edges: 4,
            max_mult: 3,
            max_vertices: 4,
            max_arrows: 6,
            seed: 0,
        }
    }
}

/// Rejects bounds that would not finish in reasonable time.
pub fn check_bounds(b: &Bounds) -> Result<(), String> {
    if b.max_edges > 5 {
        return Err(format!("--max-edges {} is too large; use at most 5", b.max_edges));
    }
    if b.max_vertices > 5 {
        return Err(format!("--max-vertices {} is too large; use at most 5", b.max_vertices));
    }
    if b.max_mult == 0 || b.max_mult > 4 {
        return Err(format!("--max-mult {} is out of range; use 1 to 4", b.max_mult));
    }
    if b.max_arrows > 8 {
        return Err(format!("--max-arrows {} is too large; use at most 8", b.max_arrows));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub property: String,
    pub instance: String,
    pub diagnostic: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: String,
    /// Number of enumerated objects.
    pub instances: usize,
    /// Number of property evaluations.
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} instances, {} checks, {} failures",
            self.suite,
            self.instances,
            self.checks,
            self.failures.len()
        )?;
        for x in &self.failures {
            writeln!(f, "FAIL {} :: {} :: {}", x.property, x.instance, x.diagnostic)?;
        }
        Ok(())
    }
}

/// Outcome of checking one instance.
#[derive(Default)]
struct Outcome {
    checks: usize,
    failures: Vec<Failure>,
}

impl Outcome {
    fn record(&mut self, ok: bool, property: &str, instance: &dyn Fn() -> String, diagnostic: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                property: property.to_string(),
                instance: instance(),
                diagnostic: diagnostic(),
            });
        }
    }
}

fn one_line(text: &str) -> String {
    text.lines().collect::<Vec<_>>().join("; ")
}

fn collect(suite: Suite, outcomes: Vec<Outcome>) -> CheckReport {
    let instances = outcomes.len();
    let checks = outcomes.iter().map(|o| o.checks).sum();
    let mut failures: Vec<Failure> = outcomes.into_iter().flat_map(|o| o.failures).collect();
    failures.sort();
    CheckReport {
        suite: suite.name().to_string(),
        instances,
        checks,
        failures,
    }
}

/// Runs a suite on the current rayon pool. The result does not depend on
/// the number of threads.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> CheckReport {
    let outcomes = match suite {
        Suite::BrauerRoundTrip => {
            let graphs = brauer_graphs(bounds.max_edges, bounds.max_mult);
            graphs
                .par_iter()
                .enumerate()
                .map(|(k, g)| check_brauer_round_trip(g, bounds.seed, k as u64))
                .collect()
        }
        Suite::TrivialExtension => gentle_algebras(bounds.max_vertices, bounds.max_arrows)
            .par_iter()
            .map(check_trivial_extension)
            .collect(),
        Suite::Cuts => multiplicity_one_graphs(bounds.max_edges)
            .par_iter()
            .map(check_cuts)
            .collect(),
        Suite::Socle => gentle_algebras(bounds.max_vertices, bounds.max_arrows)
            .par_iter()
            .map(check_socle)
            .collect(),
        Suite::Jacobian => jacobian_fixtures(bounds.max_vertices)
            .par_iter()
            .map(check_jacobian)
            .collect(),
    };
    collect(suite, outcomes)
}

/// A copy of `g` with every id renamed and every cyclic order rotated at
/// random.
pub fn random_relabeling(g: &BrauerGraph, rng: &mut impl Rng) -> BrauerGraph {
    let raw = g.to_raw();
    let rename = |n: usize, prefix: &str, rng: &mut dyn rand::RngCore| {
        let mut labels: Vec<String> = (0..n).map(|k| format!("{prefix}{k}")).collect();
        labels.shuffle(rng);
        labels
    };
    let vertices = rename(g.vertex_count(), "x", rng);
    let edges = rename(g.edge_count(), "y", rng);
    let halves = rename(g.half_count(), "z", rng);
    let vertex = |id: &str| vertices[g.vertex_index(id).unwrap()].clone();
    let half = |id: &str| halves[g.half_index(id).unwrap()].clone();
    let mut relabeled = RawBrauerGraph {
        vertices: raw.vertices.iter().map(|(v, m)| (vertex(v), *m)).collect(),
        edges: raw
            .edges
            .iter()
            .map(|e| {
                let mut e = e.clone();
                e.id = edges[g.edge_index(&e.id).unwrap()].clone();
                for (h, v) in &mut e.halves {
                    *h = half(h);
                    *v = vertex(v);
                }
                e
            })
            .collect(),
        orders: raw
            .orders
            .iter()
            .map(|(v, o)| {
                let mut o: Vec<String> = o.iter().map(|h| half(h)).collect();
                let shift = rng.gen_range(0..o.len());
                o.rotate_left(shift);
                (vertex(v), o)
            })
            .collect(),
    };
    relabeled.vertices.shuffle(rng);
    relabeled.edges.shuffle(rng);
    validate_brauer_graph(&relabeled).expect("relabeling keeps the graph valid")
}

fn check_brauer_round_trip(g: &BrauerGraph, seed: u64, index: u64) -> Outcome {
    let mut out = Outcome::default();
    let instance = || one_line(&serialize_brauer_graph(g));
    let l = algebra_of(g);
    match graph_of_ssb(&l) {
        Ok(back) => out.record(is_isomorphic(&back, g), "graph of algebra is isomorphic", &instance, || {
            one_line(&serialize_brauer_graph(&back))
        }),
        Err(e) => out.record(false, "graph of algebra is isomorphic", &instance, || e.to_string()),
    }
    out.record(
        l.presentation().dimension() == Some(l.dimension()),
        "path classes match projective dimensions",
        &instance,
        || format!("{:?} vs {}", l.presentation().dimension(), l.dimension()),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(index));
    let form = canonical_form(g);
    let stable = (0..10).all(|_| canonical_form(&random_relabeling(g, &mut rng)) == form);
    out.record(stable, "canonical form survives relabeling", &instance, String::new);
    out
}

fn check_trivial_extension(a: &GentleAlgebra) -> Outcome {
    let mut out = Outcome::default();
    let instance = || one_line(&serialize_presentation(a.presentation()));
    let t = trivial_extension(a);
    for v in a.quiver().vertices() {
        let oracle = projectives_oracle(a, v);
        let basis = t.projective_basis(v);
        out.record(oracle == basis, "projective bases agree", &instance, || {
            let show = |b: &[crate::ssb::BasisElement]| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
            format!("vertex {v}: oracle {{{}}} vs {{{}}}", show(&oracle), show(&basis))
        });
    }
    let gamma = graph_of_gentle(a).graph;
    match graph_of_ssb(&t) {
        Ok(back) => out.record(is_isomorphic(&back, &gamma), "graphs agree", &instance, || {
            one_line(&serialize_brauer_graph(&back))
        }),
        Err(e) => out.record(false, "graphs agree", &instance, || e.to_string()),
    }
    out.record(t.dimension() == 2 * a.dimension(), "dimension doubles", &instance, || {
        format!("{} vs 2 * {}", t.dimension(), a.dimension())
    });
    out
}

/// Arrows of the algebra of `g`, grouped by graph vertex, read straight
/// off the cyclic orders.
fn arrow_cycles(g: &BrauerGraph) -> Vec<BTreeSet<String>> {
    (0..g.vertex_count())
        .map(|v| {
            g.rotation(v)
                .iter()
                .filter(|&&h| !g.is_truncated(h))
                .map(|&h| g.half_id(h).to_string())
                .collect::<BTreeSet<String>>()
        })
        .filter(|c| !c.is_empty())
        .collect()
}

fn check_cuts(g: &BrauerGraph) -> Outcome {
    let mut out = Outcome::default();
    let instance = || one_line(&serialize_brauer_graph(g));
    let l = algebra_of(g);
    let sets: Vec<CuttingSet> = match enumerate_cutting_sets(&l) {
        Ok(it) => it.collect(),
        Err(e) => {
            out.record(false, "cutting sets enumerate", &instance, || e.to_string());
            return out;
        }
    };
    let cycles = arrow_cycles(g);
    let product: usize = cycles.iter().map(BTreeSet::len).product();
    let arrows: Vec<String> = l.quiver().arrows().iter().map(|a| a.id.clone()).collect();
    let brute_force = (0..1u64 << arrows.len())
        .filter(|mask| {
            cycles.iter().all(|c| {
                (0..arrows.len())
                    .filter(|&k| mask & (1 << k) != 0 && c.contains(&arrows[k]))
                    .count()
                    == 1
            })
        })
        .count();
    out.record(sets.len() == product && product == brute_force, "cutting set count", &instance, || {
        format!("{} enumerated, product {product}, brute force {brute_force}", sets.len())
    });
    for d in &sets {
        let label = || format!("cut {}", d.arrows.iter().cloned().collect::<Vec<_>>().join(","));
        match admissible_cut(&l, d) {
            Ok(_) => out.record(true, "cut is gentle", &instance, label),
            Err(e) => {
                out.record(false, "cut is gentle", &instance, || format!("{}: {e}", label()));
                continue;
            }
        }
        let ok = verify_roundtrip(&l, d).unwrap_or(false);
        out.record(ok, "trivial extension of cut", &instance, label);
    }
    out
}

fn check_socle(a: &GentleAlgebra) -> Outcome {
    let mut out = Outcome::default();
    let instance = || one_line(&serialize_presentation(a.presentation()));
    let socle = a.socle_basis();
    let mut maximal = a.maximal_paths().to_vec();
    maximal.sort();
    out.record(socle == maximal, "socle is spanned by maximal paths", &instance, || {
        let show = |ps: &[crate::quiver::Path]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ");
        format!("socle {{{}}} vs maximal {{{}}}", show(&socle), show(&maximal))
    });
    out
}

/// Triangulated polygons with at most `max_arcs` arcs (and at least two,
/// below which the algebra is excluded) followed by the annulus.
pub fn jacobian_fixtures(max_arcs: usize) -> Vec<Triangulation> {
    let mut out: Vec<Triangulation> = (5..=max_arcs + 3)
        .flat_map(polygon_triangulations)
        .map(|raw| validate_triangulation(&raw).expect("polygon triangulations are valid"))
        .collect();
    out.push(parse_triangulation(ANNULUS).expect("fixture parses"));
    out
}

/// Equal quivers and equal relation sets, ignoring relation order.
fn same_presentation(p: &Presentation, q: &Presentation) -> bool {
    let relations = |p: &Presentation| p.relations().iter().map(|r| r.to_string()).collect::<BTreeSet<_>>();
    p.quiver() == q.quiver() && relations(p) == relations(q)
}

fn check_jacobian(t: &Triangulation) -> Outcome {
    let mut out = Outcome::default();
    let instance = || one_line(&crate::surface::serialize_triangulation(t));
    for convention in [ArrowConvention::Successor, ArrowConvention::Predecessor] {
        let property = match convention {
            ArrowConvention::Successor => "trivial extension of jacobian algebra",
            ArrowConvention::Predecessor => "trivial extension of jacobian algebra (predecessor)",
        };
        let (a, g) = match (jacobian_algebra(t, convention), brauer_graph_of_triangulation(t, convention)) {
            (Ok(a), Ok(g)) => (a, g),
            (a, g) => {
                out.record(false, property, &instance, || {
                    format!("{:?} / {:?}", a.err().map(|r| r.to_string()), g.err().map(|r| r.to_string()))
                });
                continue;
            }
        };
        let l = algebra_of(&g);
        let t_a = trivial_extension(&a);
        out.record(is_isomorphic_ssb(&t_a, &l), property, &instance, || {
            distinguishing_invariant(&t_a, &l).unwrap_or_default()
        });
        let kept: BTreeSet<&str> = a.quiver().arrows().iter().map(|x| x.id.as_str()).collect();
        let d = CuttingSet::new(
            l.quiver()
                .arrows()
                .iter()
                .filter(|x| !kept.contains(x.id.as_str()))
                .map(|x| x.id.clone()),
        );
        let recovered = admissible_cut(&l, &d).map(|c| same_presentation(c.presentation(), a.presentation()));
        out.record(recovered == Ok(true), "boundary arrows cut back to jacobian algebra", &instance, || {
            format!("{recovered:?}")
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            max_edges: 2,
            max_mult: 2,
            max_vertices: 2,
            max_arrows: 3,
            seed: 7,
        }
    }

    #[test]
    fn suites_pass_on_small_bounds() {
        for suite in Suite::ALL {
            let report = run_suite(suite, &small());
            assert!(report.failures.is_empty(), "{report}");
            assert!(report.instances > 0, "{report}");
        }
    }

    #[test]
    fn names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_name(suite.name()), Some(suite));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn bounds_guard() {
        assert!(check_bounds(&Bounds::default()).is_ok());
        let big = Bounds {
            max_edges: 6,
            ..Bounds::default()
        };
        assert!(check_bounds(&big).unwrap_err().contains("at most 5"));
    }
}

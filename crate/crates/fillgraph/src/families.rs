//! Explicit fat graphs with their published signatures.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fatgraph::{FatGraph, HalfEdge};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: parameter {value} out of range ({domain})")]
    Range {
        family: &'static str,
        value: usize,
        domain: &'static str,
    },
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("{family} requires a parameter ({domain})")]
    MissingParameter {
        family: &'static str,
        domain: &'static str,
    },
    #[error("{family} built with signature {got:?}, expected {want:?}")]
    Signature {
        family: String,
        got: (usize, usize, usize),
        want: (usize, usize, usize),
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Three-vertex minimal filling triple of genus 2.
    G1,
    /// Five-vertex minimal filling triple of genus 3.
    Gamma0,
    /// Genus-2 filling pair with four discs.
    G2,
    /// One-boundary graph with `2g` loop curves.
    GammaG(usize),
    /// One-boundary graph with `2g - 1` curves, `g >= 3`.
    Girth2gm1(usize),
    /// Genus-3 minimal filling of size 4.
    QuadrupleF3,
    /// Genus-2 filling pair with `b >= 2` discs.
    Gamma2B(usize),
    /// Genus 2, two discs, three curves.
    TwoDiscTriple,
    /// One vertex `(a+, b+, a-, b-)`.
    TorusPair,
    /// One degree-2 vertex with a single loop.
    SphereCircle,
}

impl FamilyId {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::G1 => "g1",
            FamilyId::Gamma0 => "gamma0",
            FamilyId::G2 => "g2",
            FamilyId::GammaG(_) => "gamma_g",
            FamilyId::Girth2gm1(_) => "girth",
            FamilyId::QuadrupleF3 => "quadruple",
            FamilyId::Gamma2B(_) => "gamma2b",
            FamilyId::TwoDiscTriple => "two_disc_triple",
            FamilyId::TorusPair => "torus_pair",
            FamilyId::SphereCircle => "sphere_circle",
        }
    }

    pub fn parameter(&self) -> Option<usize> {
        match *self {
            FamilyId::GammaG(p) | FamilyId::Girth2gm1(p) | FamilyId::Gamma2B(p) => Some(p),
            _ => None,
        }
    }

    /// Parses a family name with an optional parameter.
    pub fn parse(name: &str, param: Option<usize>) -> Result<FamilyId, FamilyError> {
        let need = |family: &'static str, domain: &'static str| {
            param.ok_or(FamilyError::MissingParameter { family, domain })
        };
        Ok(match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "g1" => FamilyId::G1,
            "gamma0" => FamilyId::Gamma0,
            "g2" => FamilyId::G2,
            "gamma_g" | "gammag" => FamilyId::GammaG(need("gamma_g", "genus >= 1")?),
            "girth" | "girth_2gm1" => FamilyId::Girth2gm1(need("girth", "genus >= 3")?),
            "quadruple" | "quadruple_f3" => FamilyId::QuadrupleF3,
            "gamma2b" | "gamma_2_b" => FamilyId::Gamma2B(need("gamma2b", "boundaries >= 2")?),
            "two_disc_triple" => FamilyId::TwoDiscTriple,
            "torus_pair" | "torus" => FamilyId::TorusPair,
            "sphere_circle" | "circle" => FamilyId::SphereCircle,
            _ => return Err(FamilyError::Unknown(name.to_string())),
        })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(p) => write!(f, "{}({})", self.name(), p),
            None => write!(f, "{}", self.name()),
        }
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    /// Accepts `name` or `name(param)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('(') {
            Some((n, rest)) => {
                let p = rest
                    .trim_end_matches(')')
                    .parse::<usize>()
                    .map_err(|_| FamilyError::Unknown(s.to_string()))?;
                FamilyId::parse(n, Some(p))
            }
            None => FamilyId::parse(s, None),
        }
    }
}

fn p(name: &str, i: usize) -> HalfEdge {
    HalfEdge::fwd(format!("{name}{i}"))
}

fn m(name: &str, i: usize) -> HalfEdge {
    HalfEdge::bwd(format!("{name}{i}"))
}

fn from_cycles(cycles: Vec<Vec<HalfEdge>>) -> FatGraph {
    FatGraph::from_vertex_cycles(&cycles).expect("family transcription is well formed")
}

/// The published vertex cycles of a family, in the published vertex order.
pub fn vertex_cycles(id: FamilyId) -> Result<Vec<Vec<HalfEdge>>, FamilyError> {
    let f = |i| p("f", i);
    let fb = |i| m("f", i);
    Ok(match id {
        FamilyId::G1 => vec![
            vec![f(1), f(2), f(3), f(4)],
            vec![fb(3), fb(4), f(5), fb(2)],
            vec![fb(5), f(6), fb(1), fb(6)],
        ],
        FamilyId::Gamma0 => vec![
            vec![f(1), f(2), f(3), f(4)],
            vec![fb(3), f(5), f(6), f(7)],
            vec![fb(6), f(8), f(9), fb(4)],
            vec![fb(7), fb(9), fb(5), f(10)],
            vec![fb(1), fb(2), fb(10), fb(8)],
        ],
        FamilyId::G2 => {
            let (x, xb) = (|i| p("x", i), |i| m("x", i));
            let (y, yb) = (|i| p("y", i), |i| m("y", i));
            vec![
                vec![xb(6), y(1), x(1), yb(6)],
                vec![yb(1), x(3), y(2), xb(2)],
                vec![yb(2), x(2), y(3), xb(1)],
                vec![x(4), yb(3), xb(3), y(4)],
                vec![y(5), xb(5), yb(4), x(6)],
                vec![y(6), xb(4), yb(5), x(5)],
            ]
        }
        FamilyId::TwoDiscTriple => {
            let (x, xb) = (|i| p("x", i), |i| m("x", i));
            let (y, yb) = (|i| p("y", i), |i| m("y", i));
            let (z, zb) = (|i| p("z", i), |i| m("z", i));
            vec![
                vec![x(1), yb(3), xb(3), y(1)],
                vec![xb(1), y(2), x(2), yb(1)],
                vec![xb(2), z(1), x(3), zb(2)],
                vec![yb(2), zb(1), y(3), z(2)],
            ]
        }
        FamilyId::QuadrupleF3 => vec![
            vec![f(1), f(2), f(3), fb(2)],
            vec![fb(3), f(4), f(5), f(6)],
            vec![fb(6), fb(9), fb(10), fb(1)],
            vec![fb(5), f(7), f(8), fb(7)],
            vec![fb(4), f(9), f(10), fb(8)],
        ],
        FamilyId::TorusPair => vec![vec![
            HalfEdge::fwd("a"),
            HalfEdge::fwd("b"),
            HalfEdge::bwd("a"),
            HalfEdge::bwd("b"),
        ]],
        FamilyId::SphereCircle => vec![vec![HalfEdge::fwd("a"), HalfEdge::bwd("a")]],
        FamilyId::GammaG(g) => {
            if g == 0 {
                return Err(FamilyError::Range {
                    family: "gamma_g",
                    value: g,
                    domain: "genus >= 1",
                });
            }
            if g == 1 {
                return vertex_cycles(FamilyId::TorusPair);
            }
            let (e, eb) = (|i| p("e", i), |i| m("e", i));
            let mut vs = vec![vec![e(1), e(2), eb(1), eb(3)]];
            for j in 2..=2 * g - 2 {
                vs.push(vec![e(2 * j - 1), e(2 * j), eb(2 * j - 2), eb(2 * j + 1)]);
            }
            vs.push(vec![
                e(4 * g - 3),
                e(4 * g - 2),
                eb(4 * g - 4),
                eb(4 * g - 2),
            ]);
            vs
        }
        FamilyId::Girth2gm1(g) => {
            if g < 3 {
                return Err(FamilyError::Range {
                    family: "girth",
                    value: g,
                    domain: "genus >= 3",
                });
            }
            let (e, eb) = (|i| p("e", i), |i| m("e", i));
            let mut vs = vec![vec![e(1), e(2), e(3), eb(2)], vec![eb(3), e(5), e(4), e(6)]];
            for j in 3..=2 * g - 2 {
                vs.push(vec![eb(2 * j), e(2 * j + 2), eb(2 * j - 1), e(2 * j + 1)]);
            }
            vs.push(vec![eb(4 * g - 3), eb(4), eb(4 * g - 2), eb(1)]);
            vs
        }
        FamilyId::Gamma2B(b) => {
            if b < 2 {
                return Err(FamilyError::Range {
                    family: "gamma2b",
                    value: b,
                    domain: "boundaries >= 2",
                });
            }
            let (e, eb) = (|i| p("e", i), |i| m("e", i));
            let mut vs = vec![vec![e(1), f(1), eb(b + 2), fb(b + 2)]];
            for j in 2..=b {
                vs.push(vec![eb(j - 1), fb(j - 1), e(j), f(j)]);
            }
            vs.push(vec![eb(b), f(b + 2), e(b + 1), fb(b + 1)]);
            vs.push(vec![eb(b + 1), f(b + 1), e(b + 2), fb(b)]);
            vs
        }
    })
}

/// Published `(g, b, s)` and, where stated, the sorted curve lengths.
/// A signature `(g, b, s)` with optional sorted curve lengths.
pub type Expected = ((usize, usize, usize), Option<Vec<usize>>);

pub fn expected(id: FamilyId) -> Result<Expected, FamilyError> {
    vertex_cycles(id)?;
    Ok(match id {
        FamilyId::G1 => ((2, 1, 3), Some(vec![1, 2, 3])),
        FamilyId::Gamma0 => ((3, 1, 3), Some(vec![2, 3, 5])),
        FamilyId::G2 => ((2, 4, 2), Some(vec![6, 6])),
        FamilyId::GammaG(g) => ((g, 1, 2 * g), None),
        FamilyId::Girth2gm1(g) => ((g, 1, 2 * g - 1), None),
        FamilyId::QuadrupleF3 => ((3, 1, 4), None),
        FamilyId::Gamma2B(b) => ((2, b, 2), None),
        FamilyId::TwoDiscTriple => ((2, 2, 3), None),
        FamilyId::TorusPair => ((1, 1, 2), Some(vec![1, 1])),
        FamilyId::SphereCircle => ((0, 2, 1), Some(vec![1])),
    })
}

/// Builds a family member and checks its published signature.
pub fn build(id: FamilyId) -> Result<FatGraph, FamilyError> {
    let g = from_cycles(vertex_cycles(id)?);
    let (want, lengths) = expected(id)?;
    let got = g.signature().expect("families are connected").triple();
    if got != want {
        return Err(FamilyError::Signature {
            family: id.to_string(),
            got,
            want,
        });
    }
    if let Some(l) = lengths {
        let mut have: Vec<usize> = g
            .standard_cycles()
            .expect("decorated")
            .iter()
            .map(|c| c.len())
            .collect();
        have.sort_unstable();
        assert_eq!(have, l, "{id} curve lengths");
    }
    Ok(g)
}

/// Index, in [`FatGraph::vertices`] order, of the `k`-th published vertex
/// (0-based), together with the directed edge it is listed from.
pub fn published_vertex(id: FamilyId, k: usize) -> Result<Option<(usize, usize)>, FamilyError> {
    let cycles = vertex_cycles(id)?;
    let g = from_cycles(cycles.clone());
    Ok(cycles.get(k).map(|c| {
        let d = g.dart(&c[0]).expect("label exists");
        (g.vertex_map()[d], d)
    }))
}

/// One row of the golden table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub id: FamilyId,
    pub signature: (usize, usize, usize),
    pub lengths: Option<Vec<usize>>,
}

/// Every family over the parameter ranges used by the golden tests.
pub fn catalog() -> Vec<CatalogRow> {
    let mut ids = vec![
        FamilyId::G1,
        FamilyId::Gamma0,
        FamilyId::G2,
        FamilyId::QuadrupleF3,
        FamilyId::TwoDiscTriple,
        FamilyId::TorusPair,
        FamilyId::SphereCircle,
    ];
    ids.extend((1..=8).map(FamilyId::GammaG));
    ids.extend((3..=8).map(FamilyId::Girth2gm1));
    ids.extend((2..=8).map(FamilyId::Gamma2B));
    ids.into_iter()
        .map(|id| {
            let (signature, lengths) = expected(id).expect("catalog ids are in range");
            CatalogRow {
                id,
                signature,
                lengths,
            }
        })
        .collect()
}

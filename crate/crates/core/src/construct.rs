//! Named graph families.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{Graph, GraphError};

/// Path `1 - 2 - ... - n`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Cycle `1 - 2 - ... - n - 1`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::OrderTooSmall {
            family: "cycle",
            min: 3,
            n,
        });
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            g.set0(i, j);
        }
    }
    Ok(g)
}

/// The star `K_{1,leaves}` with centre 1.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
    Graph::from_edge_list(leaves + 1, &edges)
}

/// `K_n - M` where `M = {(i, i + n/2)}`; `(n - 2)`-regular for even `n >= 4`.
pub fn complete_minus_matching(n: usize) -> Result<Graph, GraphError> {
    require_even("complete_minus_matching", n)?;
    let half = n / 2;
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if j != i + half {
                g.set0(i, j);
            }
        }
    }
    Ok(g)
}

/// Adds vertex `n + 1` joined to every vertex of `g`.
pub fn cone_cover(g: &Graph) -> Graph {
    let n = g.order();
    let mut h = Graph::empty(n + 1).expect("n + 1 >= 1");
    for (u, v) in g.edges() {
        h.set0(u - 1, v - 1);
    }
    for i in 0..n {
        h.set0(i, n);
    }
    h
}

/// Vertices of `b` follow those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let na = a.order();
    let mut h = Graph::empty(na + b.order()).expect("nonempty");
    for (u, v) in a.edges() {
        h.set0(u - 1, v - 1);
    }
    for (u, v) in b.edges() {
        h.set0(na + u - 1, na + v - 1);
    }
    h
}

/// `N(i) = V - {i, n + 1 - i}` for even `n >= 4`. The identity labeling is
/// distance magic with constant `n(n+1)/2 - (n+1)`, and vertices `i` and
/// `n + 1 - i` share a neighbourhood.
pub fn singular_even(n: usize) -> Result<Graph, GraphError> {
    require_even("singular_even", n)?;
    let mut g = Graph::empty(n)?;
    for i in 1..=n {
        for j in i + 1..=n {
            if j != n + 1 - i {
                g.set0(i - 1, j - 1);
            }
        }
    }
    Ok(g)
}

/// Edge list of the fixed 11-vertex non-singular distance magic graph.
pub const FIG_NDM_EDGES: [(usize, usize); 28] = [
    (1, 2),
    (1, 5),
    (1, 6),
    (1, 7),
    (1, 11),
    (2, 4),
    (2, 7),
    (2, 9),
    (2, 10),
    (3, 6),
    (3, 7),
    (3, 8),
    (3, 10),
    (4, 5),
    (4, 7),
    (4, 8),
    (4, 9),
    (5, 7),
    (5, 8),
    (5, 11),
    (6, 7),
    (6, 9),
    (6, 11),
    (7, 10),
    (8, 9),
    (8, 10),
    (9, 11),
    (10, 11),
];

/// The 11-vertex, 28-edge non-singular graph whose identity labeling is
/// distance magic.
pub fn fig_ndm() -> Graph {
    Graph::from_edge_list(11, &FIG_NDM_EDGES).expect("fixed edge list is valid")
}

/// A distance magic labeling of `cone_cover(complete_minus_matching(m))`:
/// matched pairs `(i, i + m/2)` get labels summing to `m + 1` and the apex gets
/// `m + 1`, so every weight equals `m(m + 1)/2`.
pub fn cone_knm_labeling(m: usize) -> Result<Vec<usize>, GraphError> {
    require_even("cone_knm_labeling", m)?;
    let half = m / 2;
    let mut values = Vec::with_capacity(m + 1);
    values.extend(1..=half);
    values.extend((1..=half).map(|i| m + 1 - i));
    values.push(m + 1);
    Ok(values)
}

fn require_even(family: &'static str, n: usize) -> Result<(), GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(GraphError::NeedsEvenOrder { family, min: 4, n });
    }
    Ok(())
}

/// A graph family with its parameters, parsed from strings such as
/// `knm:6`, `cone:knm:4`, `union:path:3+cycle:4` or `ndm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Empty(usize),
    CompleteMinusMatching(usize),
    SingularEven(usize),
    FigNdm,
    ConeCover(Box<Family>),
    DisjointUnion(Vec<Family>),
}

/// Builds the graph described by `family`.
pub fn construct(family: &Family) -> Result<Graph, GraphError> {
    match family {
        Family::Path(n) => path(*n),
        Family::Cycle(n) => cycle(*n),
        Family::Complete(n) => complete(*n),
        Family::Star(k) => star(*k),
        Family::Empty(n) => Graph::empty(*n),
        Family::CompleteMinusMatching(n) => complete_minus_matching(*n),
        Family::SingularEven(n) => singular_even(*n),
        Family::FigNdm => Ok(fig_ndm()),
        Family::ConeCover(inner) => Ok(cone_cover(&construct(inner)?)),
        Family::DisjointUnion(parts) => {
            let mut iter = parts.iter();
            let first = iter
                .next()
                .ok_or_else(|| GraphError::BadFamilyParams("empty union".to_owned()))?;
            iter.try_fold(construct(first)?, |acc, part| {
                Ok(disjoint_union(&acc, &construct(part)?))
            })
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, rest) = match s.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (s, None),
        };
        let order = || -> Result<usize, GraphError> {
            let rest =
                rest.ok_or_else(|| GraphError::BadFamilyParams(format!("{name} needs an order")))?;
            rest.parse()
                .map_err(|_| GraphError::BadFamilyParams(format!("bad order `{rest}`")))
        };
        Ok(match name {
            "path" => Family::Path(order()?),
            "cycle" => Family::Cycle(order()?),
            "complete" => Family::Complete(order()?),
            "star" => Family::Star(order()?),
            "empty" => Family::Empty(order()?),
            "knm" | "complete_minus_matching" => Family::CompleteMinusMatching(order()?),
            "singular" | "singular_even" => Family::SingularEven(order()?),
            "ndm" | "fig_ndm" => Family::FigNdm,
            "cone" | "cone_cover" => {
                let inner = rest.ok_or_else(|| {
                    GraphError::BadFamilyParams("cone needs an inner family".to_owned())
                })?;
                Family::ConeCover(Box::new(inner.parse()?))
            }
            "union" | "disjoint_union" => {
                let rest = rest
                    .ok_or_else(|| GraphError::BadFamilyParams("union needs parts".to_owned()))?;
                Family::DisjointUnion(rest.split('+').map(str::parse).collect::<Result<_, _>>()?)
            }
            other => return Err(GraphError::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::CompleteMinusMatching(n) => write!(f, "knm:{n}"),
            Family::SingularEven(n) => write!(f, "singular:{n}"),
            Family::FigNdm => f.write_str("ndm"),
            Family::ConeCover(inner) => write!(f, "cone:{inner}"),
            Family::DisjointUnion(parts) => {
                let joined: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "union:{}", joined.join("+"))
            }
        }
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Graph families with canonical vertex numbering.
///
/// * `Path(n)`: `0 - 1 - ... - n-1`.
/// * `Cycle(n)`: the path plus `n-1 - 0`.
/// * `Star(n)`: `K_{1,n}`, center `0`, leaves `1..=n`.
/// * `CompleteBipartite(m, n)`: parts `0..m` and `m..m+n`.
/// * `D12Segment(len)`: vertices `0..len`, `i ~ j` iff `|i - j|` is 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    D12Segment(usize),
}

impl Family {
    /// Parses a family name and its integer parameters, e.g. `("cycle", [7])`.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Self, GraphError> {
        let bad = |family, requirement| GraphError::InvalidParameters {
            family,
            requirement,
        };
        match (name, params) {
            ("path", &[n]) => Ok(Family::Path(n)),
            ("cycle", &[n]) => Ok(Family::Cycle(n)),
            ("star", &[n]) => Ok(Family::Star(n)),
            ("complete_bipartite" | "kbip", &[m, n]) => Ok(Family::CompleteBipartite(m, n)),
            ("d12" | "d12_segment", &[n]) => Ok(Family::D12Segment(n)),
            ("path" | "cycle" | "star" | "d12" | "d12_segment", _) => {
                Err(bad("this family", "exactly one size parameter"))
            }
            ("complete_bipartite" | "kbip", _) => Err(bad("complete_bipartite", "two part sizes")),
            _ => Err(bad(
                "generator",
                "a family among path, cycle, star, complete_bipartite, d12",
            )),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Star(_) => "star",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::D12Segment(_) => "d12",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CompleteBipartite(m, n) => write!(f, "{} {m} {n}", self.name()),
            Family::Path(n) | Family::Cycle(n) | Family::Star(n) | Family::D12Segment(n) => {
                write!(f, "{} {n}", self.name())
            }
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// `"cycle 7"`, `"complete_bipartite 2 3"`; `:` and `,` also separate.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split([' ', ':', ',']).filter(|p| !p.is_empty());
        let name = parts.next().unwrap_or_default();
        let params = parts
            .map(|p| p.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| GraphError::InvalidParameters {
                family: "generator",
                requirement: "non-negative integer parameters",
            })?;
        Family::from_parts(name, &params)
    }
}

pub fn generate(family: Family) -> Result<Graph, GraphError> {
    let too_small = |family, requirement| {
        Err(GraphError::InvalidParameters {
            family,
            requirement,
        })
    };
    let edges: Vec<(usize, usize)> = match family {
        Family::Path(n) => {
            if n < 1 {
                return too_small("path", "at least 1 vertex");
            }
            (1..n).map(|i| (i - 1, i)).collect()
        }
        Family::Cycle(n) => {
            if n < 3 {
                return too_small("cycle", "at least 3 vertices");
            }
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
        Family::Star(n) => {
            if n < 1 {
                return too_small("star", "at least 1 leaf");
            }
            (1..=n).map(|leaf| (0, leaf)).collect()
        }
        Family::CompleteBipartite(m, n) => {
            if m < 1 || n < 1 {
                return too_small("complete_bipartite", "both parts non-empty");
            }
            (0..m)
                .flat_map(|a| (m..m + n).map(move |b| (a, b)))
                .collect()
        }
        Family::D12Segment(len) => {
            if len < 1 {
                return too_small("d12", "length at least 1");
            }
            (0..len)
                .flat_map(|i| {
                    [i + 1, i + 2]
                        .into_iter()
                        .filter(move |&j| j < len)
                        .map(move |j| (i, j))
                })
                .collect()
        }
    };
    let n = match family {
        Family::Star(n) => n + 1,
        Family::CompleteBipartite(m, n) => m + n,
        Family::Path(n) | Family::Cycle(n) | Family::D12Segment(n) => n,
    };
    Graph::from_edges(n, edges)
}

//! Named graph families with fixed, documented vertex labelings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Clique `a_0..a_{k-1}` (vertices `0..k`) and stable `s_0..s_{k-1}` (vertices `k..2k`),
    /// with `s_i` adjacent to `a_i` and `a_{i+1 mod k}`.
    Sun { k: usize },
    /// Subdivided star: center `0`, leg `i` is `0 - (1+2i) - (2+2i)`.
    Spider { legs: usize },
    /// Clique `z_{-1}, z_0, z_1, z_2, z_3` on vertices `0..5` and a stable set
    /// `z'_0..z'_3` on vertices `5..9`, where `z'_k` sees exactly `z_{k-1}` and `z_k`.
    F23,
    /// Two strong-path blocks joined through a path `v_1 - ... - v_ell`.
    ///
    /// Each block has six vertices `p, x_1, x_2, y_1, y_2, q` with the chordless paths
    /// `p-x_1-x_2-q` and `p-y_1-y_2-q` plus the chords `x_1y_1`, `x_2y_2`, `x_1y_2`. Since
    /// `x_2` misses `y_1` there is no four-clique on consecutive pairs, so the two paths link
    /// `p` and `q` without attachments. Block one is `0..6`, block two is `6..12`, in the
    /// order above; `v_1..v_ell` are `12..12+ell`. `v_1` sees `x_1, x_2, y_1, y_2` of block
    /// one, `v_ell` sees those of block two.
    Gadget { ell: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Sun { k } if k < 3 => Err(Error::domain(format!("sun needs k >= 3, got {k}"))),
            FamilySpec::Spider { legs } if legs < 3 => {
                Err(Error::domain(format!("spider needs legs >= 3, got {legs}")))
            }
            FamilySpec::Gadget { ell } if ell < 1 => Err(Error::domain("gadget needs ell >= 1")),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            FamilySpec::Sun { k } => format!("sun({k})"),
            FamilySpec::Spider { legs } => format!("spider({legs})"),
            FamilySpec::F23 => "f23".to_string(),
            FamilySpec::Gadget { ell } => format!("gadget({ell})"),
        }
    }
}

/// Builds the labeled graph of a family member.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::Sun { k } => {
            let mut edges = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    edges.push((i, j));
                }
                edges.push((k + i, i));
                edges.push((k + i, (i + 1) % k));
            }
            Graph::from_edges(2 * k, &edges)
        }
        FamilySpec::Spider { legs } => {
            let edges: Vec<_> = (0..legs).flat_map(|i| [(0, 1 + 2 * i), (1 + 2 * i, 2 + 2 * i)]).collect();
            Graph::from_edges(1 + 2 * legs, &edges)
        }
        FamilySpec::F23 => {
            let mut edges = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    edges.push((i, j));
                }
            }
            for k in 0..4 {
                edges.push((5 + k, k));
                edges.push((5 + k, k + 1));
            }
            Graph::from_edges(9, &edges)
        }
        FamilySpec::Gadget { ell } => {
            let mut edges = Vec::new();
            for base in [0, 6] {
                let [p, x1, x2, y1, y2, q] = [0, 1, 2, 3, 4, 5].map(|i| base + i);
                edges.extend([(p, x1), (x1, x2), (x2, q), (p, y1), (y1, y2), (y2, q)]);
                edges.extend([(x1, y1), (x2, y2), (x1, y2)]);
            }
            let first = 12;
            let last = 12 + ell - 1;
            for i in first..last {
                edges.push((i, i + 1));
            }
            for x in 1..5 {
                edges.push((first, x));
                edges.push((last, 6 + x));
            }
            Graph::from_edges(12 + ell, &edges)
        }
    }
}

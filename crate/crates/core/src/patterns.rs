//! The minimal non-interval hypergraphs and the point-set gadgets built from
//! staircases.
//!
//! Families:
//! - `C_n` (n ≥ 3): the 2-uniform cycle on `v1 … vn`.
//! - `M_n` (n ≥ 1): the path `v1 … v(n+2)` plus the hyperedge `V ∖ {v1, v(n+2)}`.
//! - `F_n` (n ≥ 1): the same path plus `V ∖ {v1}` and `V ∖ {v(n+2)}`.
//! - `O_1`: `{x,x'}, {y,y'}, {z,z'}, {x,y,z}`.
//! - `O_2`: `{x,y}, {z,w}, {x,y,z,w}, {y,z,v}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point2, Rational};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum PatternFamily {
    C,
    M,
    F,
    O1,
    O2,
}

impl PatternFamily {
    pub const ALL: [PatternFamily; 5] = [
        PatternFamily::C,
        PatternFamily::M,
        PatternFamily::F,
        PatternFamily::O1,
        PatternFamily::O2,
    ];

    /// The member of this family with exactly `vertices` vertices, if any.
    pub fn member_with_vertices(self, vertices: usize) -> Option<PatternKind> {
        match self {
            PatternFamily::C if vertices >= 3 => Some(PatternKind::Cycle(vertices)),
            PatternFamily::M if vertices >= 4 => Some(PatternKind::M(vertices - 3)),
            PatternFamily::F if vertices >= 4 => Some(PatternKind::F(vertices - 3)),
            PatternFamily::O1 if vertices == 6 => Some(PatternKind::O1),
            PatternFamily::O2 if vertices == 5 => Some(PatternKind::O2),
            _ => None,
        }
    }
}

impl FromStr for PatternFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c" => Ok(PatternFamily::C),
            "m" => Ok(PatternFamily::M),
            "f" => Ok(PatternFamily::F),
            "o1" => Ok(PatternFamily::O1),
            "o2" => Ok(PatternFamily::O2),
            other => Err(Error::BadParameter(format!("unknown pattern family {other:?}"))),
        }
    }
}

/// One forbidden hypergraph: a family together with its size parameter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PatternKind {
    Cycle(usize),
    M(usize),
    F(usize),
    O1,
    O2,
}

impl PatternKind {
    pub fn c(n: usize) -> Self {
        PatternKind::Cycle(n)
    }
    pub fn m(n: usize) -> Self {
        PatternKind::M(n)
    }
    pub fn f(n: usize) -> Self {
        PatternKind::F(n)
    }
    pub fn o1() -> Self {
        PatternKind::O1
    }
    pub fn o2() -> Self {
        PatternKind::O2
    }

    pub fn family(self) -> PatternFamily {
        match self {
            PatternKind::Cycle(_) => PatternFamily::C,
            PatternKind::M(_) => PatternFamily::M,
            PatternKind::F(_) => PatternFamily::F,
            PatternKind::O1 => PatternFamily::O1,
            PatternKind::O2 => PatternFamily::O2,
        }
    }

    /// Size parameter; `None` for `O_1` and `O_2`.
    pub fn parameter(self) -> Option<usize> {
        match self {
            PatternKind::Cycle(n) | PatternKind::M(n) | PatternKind::F(n) => Some(n),
            PatternKind::O1 | PatternKind::O2 => None,
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            PatternKind::Cycle(n) => n,
            PatternKind::M(n) | PatternKind::F(n) => n + 3,
            PatternKind::O1 => 6,
            PatternKind::O2 => 5,
        }
    }

    pub fn validate(self) -> Result<Self> {
        match self {
            PatternKind::Cycle(n) if n < 3 => {
                Err(Error::BadParameter(format!("C_n needs n >= 3, got {n}")))
            }
            PatternKind::M(0) | PatternKind::F(0) => {
                Err(Error::BadParameter("M_n and F_n need n >= 1".into()))
            }
            kind => Ok(kind),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::Cycle(n) => write!(f, "c{n}"),
            PatternKind::M(n) => write!(f, "m{n}"),
            PatternKind::F(n) => write!(f, "f{n}"),
            PatternKind::O1 => f.write_str("o1"),
            PatternKind::O2 => f.write_str("o2"),
        }
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    /// Parses `c3`, `m2`, `F1`, `o1`, `O2`, ...
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || Error::BadParameter(format!("unknown pattern {s:?}"));
        match lower.as_str() {
            "o1" => return Ok(PatternKind::O1),
            "o2" => return Ok(PatternKind::O2),
            _ => {}
        }
        let (head, digits) = lower.split_at(lower.len().min(1));
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: usize = digits.parse().map_err(|_| bad())?;
        let kind = match head {
            "c" => PatternKind::Cycle(n),
            "m" => PatternKind::M(n),
            "f" => PatternKind::F(n),
            _ => return Err(bad()),
        };
        kind.validate()
    }
}

impl Serialize for PatternKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// Builds the hypergraph of a forbidden pattern on its canonical labels.
pub fn generate_pattern(kind: PatternKind) -> Result<Hypergraph> {
    let kind = kind.validate()?;
    let v = |i: usize| format!("v{i}");
    match kind {
        PatternKind::Cycle(n) => {
            let edges = (1..=n).map(|i| vec![v(i), v(i % n + 1)]);
            Hypergraph::new(numbered(n), edges)
        }
        PatternKind::M(n) | PatternKind::F(n) => {
            let all = numbered(n + 3);
            let mut edges: Vec<Vec<String>> = (1..=n + 1).map(|i| vec![v(i), v(i + 1)]).collect();
            let without = |skip: &[usize]| -> Vec<String> {
                (1..=n + 3)
                    .filter(|i| !skip.contains(i))
                    .map(v)
                    .collect()
            };
            if matches!(kind, PatternKind::M(_)) {
                edges.push(without(&[1, n + 2]));
            } else {
                edges.push(without(&[1]));
                edges.push(without(&[n + 2]));
            }
            Hypergraph::new(all, edges)
        }
        PatternKind::O1 => Hypergraph::new(
            ["x", "x'", "y", "y'", "z", "z'"],
            [
                vec!["x", "x'"],
                vec!["y", "y'"],
                vec!["z", "z'"],
                vec!["x", "y", "z"],
            ],
        ),
        PatternKind::O2 => Hypergraph::new(
            ["x", "y", "z", "w", "v"],
            [
                vec!["x", "y"],
                vec!["z", "w"],
                vec!["x", "y", "z", "w"],
                vec!["y", "z", "v"],
            ],
        ),
    }
}

/// The two staircases: `A` holds `(i, n − i + 1)` for `i = 0 … n+1` (ids
/// `a0 …`), `B` holds `(i − 1/3, n − i − 1/3)` for `i = 0 … n` (ids `b0 …`).
pub fn generate_staircase(n: usize) -> Result<(Vec<Point2>, Vec<Point2>)> {
    if n == 0 {
        return Err(Error::BadParameter("staircase needs n >= 1".into()));
    }
    let n = n as i64;
    let third = Rational::new(1, 3)?;
    let a = (0..=n + 1)
        .map(|i| Point2::int(format!("a{i}"), i, n - i + 1))
        .collect();
    let b = (0..=n)
        .map(|i| {
            Point2::new(
                format!("b{i}"),
                Rational::from(i) - third.clone(),
                Rational::from(n - i) - third.clone(),
            )
        })
        .collect();
    Ok((a, b))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum GadgetKind {
    M,
    F,
}

impl FromStr for GadgetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" => Ok(GadgetKind::M),
            "f" => Ok(GadgetKind::F),
            other => Err(Error::BadParameter(format!("gadget kind must be m or f, got {other:?}"))),
        }
    }
}

impl GadgetKind {
    pub fn pattern(self, n: usize) -> PatternKind {
        match self {
            GadgetKind::M => PatternKind::M(n),
            GadgetKind::F => PatternKind::F(n),
        }
    }
}

fn two_thirds_point() -> Point2 {
    Point2::new("c", Rational::new(2, 3).unwrap(), Rational::new(2, 3).unwrap())
}

/// Point set whose competition hypergraph contains `M_n` (kind `M`) or `F_n`
/// (kind `F`) as a trace.
///
/// Extra points beyond the staircases: `o = (0,0)`, `c = (2/3, 2/3)`,
/// `w = (−1, 0)`, `s = (0, −1)`. For `n = 1` the point `c` is added to both
/// kinds and `o` is left out of kind `F`.
pub fn gadget_dpo(kind: GadgetKind, n: usize) -> Result<Vec<Point2>> {
    let (a, b) = generate_staircase(n)?;
    let mut points: Vec<Point2> = a.into_iter().chain(b).collect();
    match kind {
        GadgetKind::M => {
            points.push(Point2::int("o", 0, 0));
            if n == 1 {
                points.push(two_thirds_point());
            }
        }
        GadgetKind::F => {
            if n == 1 {
                points.push(two_thirds_point());
            }
            points.push(Point2::int("w", -1, 0));
            points.push(Point2::int("s", 0, -1));
        }
    }
    Ok(points)
}

/// Ids of the gadget points on which the trace is the target pattern: the
/// `A` staircase plus the point `(2/3, n − 4/3)` (that is `b1` for `n ≥ 2`
/// and the extra point `c` for `n = 1`).
pub fn gadget_witness_ids(n: usize) -> Result<Vec<String>> {
    if n == 0 {
        return Err(Error::BadParameter("gadget needs n >= 1".into()));
    }
    let mut ids: Vec<String> = (0..=n + 1).map(|i| format!("a{i}")).collect();
    ids.push(if n == 1 { "c".into() } else { "b1".into() });
    Ok(ids)
}

/// The interval hypergraph on `v1 … v6` with the path edges and
/// `{v2, v3, v4, v5}`, which no point set realizes up to isolated points.
pub fn counterexample_hypergraph() -> Hypergraph {
    Hypergraph::new(
        numbered(6),
        [
            vec!["v1", "v2"],
            vec!["v2", "v3"],
            vec!["v3", "v4"],
            vec!["v4", "v5"],
            vec!["v5", "v6"],
            vec!["v2", "v3", "v4", "v5"],
        ],
    )
    .expect("fixed hypergraph is valid")
}

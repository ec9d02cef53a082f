//! JSON assignment documents.
//!
//! ```json
//! {"kind": "list", "lists": {"1": [1, 2], "2": [2, 3]}}
//! {"kind": "interval", "gamma": {"1": 4}, "mu": {"1": 6}}
//! {"kind": "mu", "mu": {"1": 3}}
//! {"kind": "precoloring", "fixed": {"2": 1}, "k": 2}
//! {"kind": "coloring", "colors": {"1": 1, "2": 2}}
//! ```
//!
//! Vertex ids are decimal strings. Every kind except `precoloring` must be
//! total: keys are exactly `"1"` through `"n"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Color, Coloring, IntervalAssignment, ListAssignment, MuAssignment, Precoloring};
use crate::error::{Error, Result};
use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assignment {
    List(ListAssignment),
    Interval(IntervalAssignment),
    Mu(MuAssignment),
    Precoloring(Precoloring),
    Coloring(Coloring),
}

impl Assignment {
    pub fn kind(&self) -> &'static str {
        match self {
            Assignment::List(_) => "list",
            Assignment::Interval(_) => "interval",
            Assignment::Mu(_) => "mu",
            Assignment::Precoloring(_) => "precoloring",
            Assignment::Coloring(_) => "coloring",
        }
    }
}

type VertexMap<T> = BTreeMap<String, T>;

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Document {
    List {
        lists: VertexMap<Vec<Color>>,
    },
    Interval {
        gamma: VertexMap<Color>,
        mu: VertexMap<Color>,
    },
    Mu {
        mu: VertexMap<Color>,
    },
    Precoloring {
        fixed: VertexMap<Color>,
        k: usize,
    },
    Coloring {
        colors: VertexMap<Color>,
    },
}

fn vertex_id(key: &str) -> Result<Vertex> {
    match key.parse::<Vertex>() {
        Ok(v) if v >= 1 && v.to_string() == key => Ok(v),
        _ => Err(Error::Document(format!("`{key}` is not a vertex id"))),
    }
}

fn keyed<T>(map: VertexMap<T>) -> Result<BTreeMap<Vertex, T>> {
    map.into_iter().map(|(k, v)| Ok((vertex_id(&k)?, v))).collect()
}

fn dense<T>(map: VertexMap<T>, field: &str) -> Result<Vec<T>> {
    let keyed = keyed(map)?;
    let n = keyed.len();
    if let Some((&v, _)) = keyed.iter().next_back() {
        if v != n {
            return Err(Error::Document(format!(
                "`{field}` must have entries for exactly vertices 1..={n}"
            )));
        }
    }
    Ok(keyed.into_values().collect())
}

fn sparse<T: Clone>(values: &[T]) -> VertexMap<T> {
    values
        .iter()
        .enumerate()
        .map(|(i, x)| ((i + 1).to_string(), x.clone()))
        .collect()
}

pub fn parse_assignment(text: &str) -> Result<Assignment> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    Ok(match doc {
        Document::List { lists } => Assignment::List(ListAssignment::new(dense(lists, "lists")?)?),
        Document::Interval { gamma, mu } => {
            let gamma = dense(gamma, "gamma")?;
            let mu = dense(mu, "mu")?;
            Assignment::Interval(IntervalAssignment::new(gamma, mu)?)
        }
        Document::Mu { mu } => Assignment::Mu(MuAssignment::new(dense(mu, "mu")?)?),
        Document::Precoloring { fixed, k } => Assignment::Precoloring(Precoloring::new(keyed(fixed)?, k)?),
        Document::Coloring { colors } => Assignment::Coloring(Coloring::new(dense(colors, "colors")?)?),
    })
}

pub fn serialize_assignment(a: &Assignment) -> String {
    let doc = match a {
        Assignment::List(l) => Document::List {
            lists: sparse(l.lists()),
        },
        Assignment::Interval(i) => Document::Interval {
            gamma: sparse(&i.gamma),
            mu: sparse(&i.mu),
        },
        Assignment::Mu(m) => Document::Mu { mu: sparse(m.values()) },
        Assignment::Precoloring(p) => Document::Precoloring {
            fixed: p.fixed().iter().map(|(v, c)| (v.to_string(), *c)).collect(),
            k: p.k(),
        },
        Assignment::Coloring(c) => Document::Coloring {
            colors: sparse(c.as_slice()),
        },
    };
    serde_json::to_string_pretty(&doc).expect("plain maps serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let a = parse_assignment(r#"{"kind":"list","lists":{"1":[2,1],"2":[3]}}"#).unwrap();
        assert_eq!(
            a,
            Assignment::List(ListAssignment::new(vec![vec![1, 2], vec![3]]).unwrap())
        );

        let a = parse_assignment(r#"{"kind":"interval","gamma":{"1":4,"2":1},"mu":{"1":6,"2":3}}"#).unwrap();
        assert_eq!(
            a,
            Assignment::Interval(IntervalAssignment::new(vec![4, 1], vec![6, 3]).unwrap())
        );

        let a = parse_assignment(r#"{"kind":"mu","mu":{"1":1,"2":2}}"#).unwrap();
        assert_eq!(a.kind(), "mu");

        let a = parse_assignment(r#"{"kind":"precoloring","fixed":{"2":1},"k":2}"#).unwrap();
        assert_eq!(
            a,
            Assignment::Precoloring(Precoloring::new([(2, 1)].into(), 2).unwrap())
        );

        let a = parse_assignment(r#"{"kind":"coloring","colors":{"1":1,"2":2}}"#).unwrap();
        assert_eq!(a, Assignment::Coloring(Coloring::new(vec![1, 2]).unwrap()));
    }

    #[test]
    fn vertex_keys_sort_numerically() {
        let lists: String = (1..=11).map(|v| format!("\"{v}\":[{v}]")).collect::<Vec<_>>().join(",");
        let a = parse_assignment(&format!(r#"{{"kind":"list","lists":{{{lists}}}}}"#)).unwrap();
        let Assignment::List(l) = a else { panic!() };
        assert_eq!(l.list(10), &[10]);
        assert_eq!(l.list(11), &[11]);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            r#"{"kind":"list","lists":{"1":[1],"3":[1]}}"#,
            r#"{"kind":"list","lists":{"01":[1]}}"#,
            r#"{"kind":"list","lists":{"0":[1]}}"#,
            r#"{"kind":"wat"}"#,
            r#"{"kind":"mu","mu":{"1":1},"extra":1}"#,
            r#"{"kind":"interval","gamma":{"1":1},"mu":{"1":1,"2":2}}"#,
            "not json",
        ] {
            assert!(parse_assignment(bad).is_err(), "{bad}");
        }
        assert!(matches!(
            parse_assignment(r#"{"kind":"interval","gamma":{"1":3},"mu":{"1":2}}"#),
            Err(Error::EmptyInterval { .. })
        ));
    }

    #[test]
    fn round_trips() {
        let docs = [
            Assignment::List(ListAssignment::new(vec![vec![], vec![5, 7]]).unwrap()),
            Assignment::Interval(IntervalAssignment::new(vec![10, 20], vec![11, 21]).unwrap()),
            Assignment::Mu(MuAssignment::new(vec![1, 4]).unwrap()),
            Assignment::Precoloring(Precoloring::new([(3, 2)].into(), 3).unwrap()),
            Assignment::Coloring(Coloring::new(vec![2, 1]).unwrap()),
        ];
        for a in docs {
            assert_eq!(parse_assignment(&serialize_assignment(&a)).unwrap(), a);
        }
    }
}

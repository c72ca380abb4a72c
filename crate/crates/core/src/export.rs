//! DOT, JSON and CSV renderings of Hasse diagrams.

use std::fmt::{Display, Write};
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{EdgeColor, Poset};

/// Graphviz digraph; red edges are solid red, blue edges dashed blue.
pub fn to_dot<T: Display>(p: &Poset<T>, name: &str) -> String {
    let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, e) in p.elements().iter().enumerate() {
        writeln!(s, "  n{i} [label=\"{e}\"];").unwrap();
    }
    for (i, j, c) in p.edges() {
        let attrs = match c {
            EdgeColor::Red => " [color=red]",
            EdgeColor::Blue => " [color=blue, style=dashed]",
            EdgeColor::Uncolored => "",
        };
        writeln!(s, "  n{i} -> n{j}{attrs};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// `{"elements": [...], "covers": [[i, j, "red"], ...]}` with elements as
/// strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseJson {
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize, EdgeColor)>,
}

impl HasseJson {
    pub fn of<T: Display>(p: &Poset<T>) -> HasseJson {
        HasseJson {
            elements: p.elements().iter().map(|e| e.to_string()).collect(),
            covers: p.edges().collect(),
        }
    }

    /// Parses the elements back and rebuilds the poset.
    pub fn to_poset<T>(&self) -> Result<Poset<T>>
    where
        T: FromStr<Err = Error> + Clone + Eq + Hash,
    {
        let els = self.elements.iter().map(|s| s.parse()).collect::<Result<Vec<T>>>()?;
        if let Some(&(i, j, _)) = self.covers.iter().find(|c| c.0 >= els.len() || c.1 >= els.len()) {
            return Err(Error::InvalidArgument(format!("cover ({i}, {j}) out of range")));
        }
        Ok(Poset::from_covers(els, self.covers.clone()))
    }
}

pub fn to_json<T: Display>(p: &Poset<T>) -> String {
    serde_json::to_string_pretty(&HasseJson::of(p)).expect("serialisable")
}

pub fn from_json<T>(s: &str) -> Result<Poset<T>>
where
    T: FromStr<Err = Error> + Clone + Eq + Hash,
{
    let h: HasseJson = serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    h.to_poset()
}

/// One `source,target,color` line per cover.
pub fn to_csv<T: Display>(p: &Poset<T>) -> String {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(["source", "target", "color"]).expect("in-memory write");
    for (i, j, c) in p.edges() {
        w.write_record([p.elements()[i].to_string(), p.elements()[j].to_string(), c.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8 fields")
}

/// Plain listing: one element per line followed by its upper covers.
pub fn to_text<T: Display>(p: &Poset<T>) -> String {
    let mut s = String::new();
    for (i, e) in p.elements().iter().enumerate() {
        let ups: Vec<String> = p.upper_covers(i).map(|(j, c)| format!("{}({c})", p.elements()[j])).collect();
        writeln!(s, "{e} -> {}", ups.join(" ")).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dexter;
    use crate::dyck::DyckPath;

    #[test]
    fn dot_has_all_vertices_and_styles() {
        let p = dexter::hasse(4).unwrap();
        let dot = to_dot(&p, "D4");
        assert_eq!(dot.matches("[label=").count(), 14);
        assert!(dot.contains("color=red"));
        assert!(dot.contains("style=dashed"));
        assert_eq!(dot.matches("->").count(), p.num_covers());
        let one = to_dot(&dexter::hasse(1).unwrap(), "D1");
        assert_eq!(one.matches("[label=").count(), 1);
    }

    #[test]
    fn json_roundtrip() {
        let p = dexter::hasse(5).unwrap();
        let s = to_json(&p);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert!(v["elements"].is_array());
        assert!(v["covers"][0][2].is_string());
        let q: Poset<DyckPath> = from_json(&s).unwrap();
        assert_eq!(q.elements(), p.elements());
        assert_eq!(q.edges().collect::<Vec<_>>(), p.edges().collect::<Vec<_>>());
        assert!(from_json::<DyckPath>("{\"elements\": [\"10\"], \"covers\": [[0, 3, \"red\"]]}").is_err());
    }

    #[test]
    fn csv_lines() {
        let p = dexter::hasse(3).unwrap();
        let s = to_csv(&p);
        assert_eq!(s.lines().count(), p.num_covers() + 1);
        let mut r = csv::Reader::from_reader(s.as_bytes());
        assert_eq!(r.headers().unwrap(), vec!["source", "target", "color"]);
        assert!(r.records().all(|rec| rec.unwrap().len() == 3));
    }
}

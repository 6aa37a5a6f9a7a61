//! Graph, list and labelling file formats.
//!
//! Text graphs are line oriented:
//!
//! ```text
//! # K3 with its planar rotation
//! n 3
//! e 0 1
//! e 1 2
//! e 0 2
//! r 0: 0 2
//! r 1: 1 0
//! r 2: 2 1
//! ```
//!
//! `n` comes first, then one `e` line per edge (its position is its index),
//! then optional `r` lines listing the edges at a vertex in cyclic order.
//! The JSON form is `{"vertices": 3, "edges": [[0,1],...], "rotation": [[0,2],...]}`.

use serde_json::{json, Map, Value};

use dlab_core::{Color, Graph, Labelling, ListAssignment, RotationSystem};

use crate::error::{CliError, CliResult};

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub rotation: Option<RotationSystem>,
}

impl GraphFile {
    pub fn rotation(&self) -> CliResult<&RotationSystem> {
        self.rotation
            .as_ref()
            .ok_or_else(|| CliError::Usage("this command needs an embedded graph (r lines or a rotation field)".into()))
    }
}

/// Detects the format from the first non-blank character.
pub fn parse_graph(input: &str) -> CliResult<GraphFile> {
    if input.trim_start().starts_with('{') {
        parse_graph_json(input)
    } else {
        parse_graph_text(input)
    }
}

struct Tokens<'a> {
    line: usize,
    items: Vec<(usize, &'a str)>,
    next: usize,
}

impl<'a> Tokens<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        let mut items = Vec::new();
        let mut start = None;
        for (i, c) in text.char_indices() {
            let sep = c.is_whitespace() || c == ':';
            match (sep, start) {
                (true, Some(s)) => {
                    items.push((s, &text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
            if c == ':' {
                items.push((i, ":"));
            }
        }
        if let Some(s) = start {
            items.push((s, &text[s..]));
        }
        Tokens { line, items, next: 0 }
    }

    fn column(&self) -> usize {
        self.items.get(self.next).map(|&(c, _)| c + 1).unwrap_or_else(|| self.items.last().map(|&(c, t)| c + t.len() + 1).unwrap_or(1))
    }

    fn number(&mut self, what: &str) -> CliResult<usize> {
        let col = self.column();
        let (_, tok) = self.items.get(self.next).copied().ok_or_else(|| CliError::parse(self.line, col, format!("expected {what}")))?;
        self.next += 1;
        tok.parse().map_err(|_| CliError::parse(self.line, col, format!("expected {what}, found {tok:?}")))
    }

    fn expect(&mut self, sym: &str) -> CliResult<()> {
        let col = self.column();
        match self.items.get(self.next) {
            Some(&(_, t)) if t == sym => {
                self.next += 1;
                Ok(())
            }
            Some(&(_, t)) => Err(CliError::parse(self.line, col, format!("expected {sym:?}, found {t:?}"))),
            None => Err(CliError::parse(self.line, col, format!("expected {sym:?}"))),
        }
    }

    fn done(&self) -> bool {
        self.next == self.items.len()
    }

    fn finish(&self) -> CliResult<()> {
        if self.done() {
            Ok(())
        } else {
            Err(CliError::parse(self.line, self.column(), format!("unexpected {:?}", self.items[self.next].1)))
        }
    }
}

pub fn parse_graph_text(input: &str) -> CliResult<GraphFile> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut rotation: Vec<Option<Vec<usize>>> = Vec::new();
    let mut any_rotation = false;
    let mut last_line = 0;
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let text = raw.split('#').next().unwrap_or("");
        let mut toks = Tokens::new(line, text);
        let Some(&(col, head)) = toks.items.first() else { continue };
        toks.next = 1;
        match head {
            "n" => {
                if n.is_some() {
                    return Err(CliError::parse(line, col + 1, "second n line"));
                }
                let count = toks.number("a vertex count")?;
                toks.finish()?;
                n = Some(count);
                rotation = vec![None; count];
            }
            "e" | "r" if n.is_none() => return Err(CliError::parse(line, col + 1, "the n line must come first")),
            "e" => {
                if any_rotation {
                    return Err(CliError::parse(line, col + 1, "edges must precede rotation lines"));
                }
                let count = n.unwrap_or(0);
                let mut ends = [0; 2];
                for end in &mut ends {
                    let c = toks.column();
                    *end = toks.number("a vertex")?;
                    if *end >= count {
                        return Err(CliError::parse(line, c, format!("vertex {} outside 0..{count}", *end)));
                    }
                }
                toks.finish()?;
                edges.push((ends[0], ends[1]));
            }
            "r" => {
                any_rotation = true;
                let c = toks.column();
                let v = toks.number("a vertex")?;
                if v >= rotation.len() {
                    return Err(CliError::parse(line, c, format!("vertex {v} outside 0..{}", rotation.len())));
                }
                if rotation[v].is_some() {
                    return Err(CliError::parse(line, c, format!("second rotation for vertex {v}")));
                }
                toks.expect(":")?;
                let mut order = Vec::new();
                while !toks.done() {
                    let c = toks.column();
                    let e = toks.number("an edge index")?;
                    if e >= edges.len() {
                        return Err(CliError::parse(line, c, format!("edge {e} outside 0..{}", edges.len())));
                    }
                    order.push(e);
                }
                rotation[v] = Some(order);
            }
            other => return Err(CliError::parse(line, col + 1, format!("unknown record {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| CliError::parse(last_line.max(1), 1, "missing n line"))?;
    let graph = Graph::new(n, &edges)?;
    let rotation = if any_rotation {
        let orders = rotation.into_iter().map(Option::unwrap_or_default).collect();
        Some(RotationSystem::new(&graph, orders)?)
    } else {
        None
    };
    Ok(GraphFile { graph, rotation })
}

fn as_index(v: &Value, field: &str) -> CliResult<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| CliError::schema(field, format!("expected a nonnegative integer, found {v}")))
}

fn as_array<'a>(v: &'a Value, field: &str) -> CliResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| CliError::schema(field, format!("expected an array, found {v}")))
}

pub fn parse_graph_json(input: &str) -> CliResult<GraphFile> {
    let doc: Value = serde_json::from_str(input).map_err(|e| CliError::parse(e.line(), e.column(), e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| CliError::schema("$", "expected an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "vertices" | "edges" | "rotation") {
            return Err(CliError::schema(key.as_str(), "unknown field"));
        }
    }
    let n = as_index(obj.get("vertices").ok_or_else(|| CliError::schema("vertices", "missing"))?, "vertices")?;
    let mut edges = Vec::new();
    let raw = obj.get("edges").ok_or_else(|| CliError::schema("edges", "missing"))?;
    for (i, e) in as_array(raw, "edges")?.iter().enumerate() {
        let field = format!("edges[{i}]");
        let pair = as_array(e, &field)?;
        if pair.len() != 2 {
            return Err(CliError::schema(field, "expected two endpoints"));
        }
        edges.push((as_index(&pair[0], &field)?, as_index(&pair[1], &field)?));
    }
    let graph = Graph::new(n, &edges)?;
    let rotation = match obj.get("rotation") {
        None | Some(Value::Null) => None,
        Some(raw) => {
            let mut orders = Vec::new();
            for (v, row) in as_array(raw, "rotation")?.iter().enumerate() {
                let field = format!("rotation[{v}]");
                let order = as_array(row, &field)?.iter().map(|e| as_index(e, &field)).collect::<CliResult<Vec<_>>>()?;
                orders.push(order);
            }
            Some(RotationSystem::new(&graph, orders)?)
        }
    };
    Ok(GraphFile { graph, rotation })
}

pub fn write_graph_text(graph: &Graph, rotation: Option<&RotationSystem>) -> String {
    let mut out = format!("n {}\n", graph.vertex_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    if let Some(rot) = rotation {
        for v in 0..graph.vertex_count() {
            out.push_str(&format!("r {v}:"));
            for e in rot.order(v) {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
    }
    out
}

pub fn graph_json(graph: &Graph, rotation: Option<&RotationSystem>) -> Value {
    let mut obj = Map::new();
    obj.insert("vertices".into(), json!(graph.vertex_count()));
    obj.insert("edges".into(), json!(graph.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()));
    if let Some(rot) = rotation {
        obj.insert("rotation".into(), json!(rot.orders()));
    }
    Value::Object(obj)
}

pub fn write_graph_json(graph: &Graph, rotation: Option<&RotationSystem>) -> String {
    let mut s = serde_json::to_string(&graph_json(graph, rotation)).expect("graph JSON serializes");
    s.push('\n');
    s
}

/// `"v<i>"` for vertices and `"e<i>-<j>"` (with `i < j`) for edges, indexed
/// by element.
pub fn element_keys(graph: &Graph) -> Vec<String> {
    let mut keys: Vec<String> = (0..graph.vertex_count()).map(|v| format!("v{v}")).collect();
    keys.extend(graph.edges().iter().map(|&(u, v)| format!("e{u}-{v}")));
    keys
}

pub fn labelling_json(graph: &Graph, lab: &Labelling) -> Value {
    let map = element_keys(graph).into_iter().zip(lab).map(|(k, c)| (k, json!(c))).collect();
    Value::Object(map)
}

pub fn lists_json(graph: &Graph, lists: &ListAssignment) -> Value {
    let map = element_keys(graph).into_iter().zip(lists).map(|(k, l)| (k, json!(l))).collect();
    Value::Object(map)
}

/// Reads a map keyed like [`element_keys`]; every element must appear once.
fn keyed<T>(graph: &Graph, input: &str, mut read: impl FnMut(&str, &Value) -> CliResult<T>) -> CliResult<Vec<T>> {
    let doc: Value = serde_json::from_str(input).map_err(|e| CliError::parse(e.line(), e.column(), e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| CliError::schema("$", "expected an object"))?;
    let keys = element_keys(graph);
    for key in obj.keys() {
        if !keys.contains(key) {
            return Err(CliError::schema(key.as_str(), "not an element of the graph"));
        }
    }
    keys.iter()
        .map(|k| {
            let v = obj.get(k).ok_or_else(|| CliError::schema(k.as_str(), "missing"))?;
            read(k, v)
        })
        .collect()
}

fn as_color(v: &Value, field: &str) -> CliResult<Color> {
    v.as_u64()
        .and_then(|c| Color::try_from(c).ok())
        .ok_or_else(|| CliError::schema(field, format!("expected a colour, found {v}")))
}

pub fn parse_lists(graph: &Graph, input: &str) -> CliResult<ListAssignment> {
    keyed(graph, input, |k, v| as_array(v, k)?.iter().map(|c| as_color(c, k)).collect())
}

pub fn parse_labelling(graph: &Graph, input: &str) -> CliResult<Labelling> {
    keyed(graph, input, |k, v| if v.is_null() { Ok(None) } else { as_color(v, k).map(Some) })
}

#[cfg(test)]
mod tests {
    use super::*;

    const K3: &str = "# triangle\nn 3\ne 0 1\ne 1 2\ne 0 2\nr 0: 0 2\nr 1: 1 0\nr 2: 2 1\n";

    #[test]
    fn text_round_trip() {
        let f = parse_graph(K3).unwrap();
        assert_eq!(f.graph.edge_count(), 3);
        let text = write_graph_text(&f.graph, f.rotation.as_ref());
        assert_eq!(parse_graph(&text).unwrap(), f);
        let json = write_graph_json(&f.graph, f.rotation.as_ref());
        assert_eq!(parse_graph(&json).unwrap(), f);
        assert_eq!(json, "{\"vertices\":3,\"edges\":[[0,1],[1,2],[0,2]],\"rotation\":[[0,2],[1,0],[2,1]]}\n");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_graph("n 3\ne 0 x\n") {
            Err(CliError::Parse { line: 2, column: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph("n 2\ne 0 5\n") {
            Err(CliError::Parse { line: 2, column: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph("e 0 1\n") {
            Err(CliError::Parse { line: 1, column: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph("n 2\nr 0 0\n") {
            Err(CliError::Parse { line: 2, column: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph(""), Err(CliError::Parse { .. })));
        assert!(matches!(parse_graph("{\"vertices\":2,\"edge\":[]}"), Err(CliError::Schema { .. })));
    }

    #[test]
    fn lists_and_labellings() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let lists = parse_lists(&g, r#"{"v0":[0,1],"v1":[2],"e0-1":[5,7]}"#).unwrap();
        assert_eq!(lists, vec![vec![0, 1], vec![2], vec![5, 7]]);
        assert_eq!(lists_json(&g, &lists).to_string(), r#"{"v0":[0,1],"v1":[2],"e0-1":[5,7]}"#);
        match parse_lists(&g, r#"{"v0":[0],"v1":[1]}"#) {
            Err(CliError::Schema { field, .. }) => assert_eq!(field, "e0-1"),
            other => panic!("{other:?}"),
        }
        let lab = parse_labelling(&g, r#"{"v0":0,"v1":null,"e0-1":3}"#).unwrap();
        assert_eq!(lab, vec![Some(0), None, Some(3)]);
        assert_eq!(labelling_json(&g, &lab).to_string(), r#"{"v0":0,"v1":null,"e0-1":3}"#);
    }
}

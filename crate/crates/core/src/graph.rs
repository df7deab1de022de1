//! Simple undirected graphs over dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected simple graph with sorted adjacency lists.
///
/// Self-loops and parallel edges are rejected on insertion. Connectivity is
/// not enforced here; analysis entry points call [`Graph::require_connected`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but also rejects disconnected input.
    pub fn connected_from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let g = Self::from_edges(n, edges)?;
        g.require_connected()?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let pos = match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => pos,
        };
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
        Ok(())
    }

    /// Removes `uv`, returning whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let pos = self.adj[u].binary_search(&v).unwrap();
        self.adj[u].remove(pos);
        let pos = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(pos);
        self.m -= 1;
        true
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent vertex pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            ((u + 1)..n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Cyclomatic classification of a connected graph.
    pub fn classify(&self) -> Result<GraphClass> {
        self.require_connected()?;
        if self.n() == 0 {
            return Err(Error::InvalidArgument("graph has no vertices".into()));
        }
        Ok(GraphClass::from_cyclomatic(self.m + 1 - self.n()))
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges = self.edges().map(|(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n(), edges).expect("relabeling preserves simplicity")
    }

    /// Leaves-and-degree-2 shape test: `true` iff the graph is a path `P_n`.
    pub fn is_path(&self) -> bool {
        let n = self.n();
        if n == 0 || !self.is_connected() || self.m + 1 != n {
            return false;
        }
        if n == 1 {
            return true;
        }
        let leaves = self.adj.iter().filter(|ns| ns.len() == 1).count();
        leaves == 2 && self.max_degree() <= 2
    }

    /// Vertices on the unique cycle of a unicyclic graph, in walking order
    /// starting from the smallest id.
    pub fn unique_cycle(&self) -> Result<Vec<usize>> {
        let class = self.classify()?;
        if class.tag != ClassTag::Unicyclic {
            return Err(Error::WrongClass {
                expected: ClassTag::Unicyclic,
                found: class.tag,
            });
        }
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|u| self.degree(u)).collect();
        let mut removed = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&u| deg[u] == 1).collect();
        while let Some(u) = stack.pop() {
            removed[u] = true;
            for &v in &self.adj[u] {
                if !removed[v] {
                    deg[v] -= 1;
                    if deg[v] == 1 {
                        stack.push(v);
                    }
                }
            }
        }
        let start = (0..n)
            .find(|&u| !removed[u])
            .expect("unicyclic graph has a cycle");
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&v| !removed[v] && v != prev)
                .expect("cycle vertex has two cycle neighbours");
            if next == start {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        Ok(cycle)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_edge_list(self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum ClassTag {
    Tree,
    Unicyclic,
    Multicyclic,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Tree => "tree",
            ClassTag::Unicyclic => "unicyclic",
            ClassTag::Multicyclic => "multicyclic",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" | "trees" | "acyclic" => Ok(ClassTag::Tree),
            "unicyclic" => Ok(ClassTag::Unicyclic),
            "multicyclic" => Ok(ClassTag::Multicyclic),
            _ => Err(Error::InvalidArgument(format!("unknown graph class {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    pub tag: ClassTag,
    /// `m - n + 1`.
    pub cyclomatic: usize,
}

impl GraphClass {
    pub fn from_cyclomatic(cyclomatic: usize) -> Self {
        let tag = match cyclomatic {
            0 => ClassTag::Tree,
            1 => ClassTag::Unicyclic,
            _ => ClassTag::Multicyclic,
        };
        GraphClass { tag, cyclomatic }
    }
}

/// Parses the edge-list text format.
///
/// The first non-comment line holds the vertex count, every further line a
/// whitespace-separated pair of 0-based ids. `#` starts a comment. With
/// `strict` the graph must also be connected.
pub fn parse_edge_list(text: &str, strict: bool) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_id = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a non-negative integer, found {s:?}"),
            })
        };
        match graph.as_mut() {
            None => {
                if fields.len() != 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected the vertex count on its own line".into(),
                    });
                }
                graph = Some(Graph::empty(parse_id(fields[0])?));
            }
            Some(g) => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected two vertex ids, found {} fields", fields.len()),
                    });
                }
                let u = parse_id(fields[0])?;
                let v = parse_id(fields[1])?;
                g.add_edge(u, v)?;
            }
        }
    }
    let graph = graph.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing vertex count".into(),
    })?;
    if strict {
        graph.require_connected()?;
    }
    Ok(graph)
}

/// Writes the edge-list format read by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_edge_list("3\n0 1\n1 2", true).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# header\n\n4 # count\n0 1\n1 2 # mid\n\n2 3\n", true).unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(parse_edge_list("2\n0 0", false), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn rejects_duplicate_and_out_of_range() {
        assert_eq!(
            parse_edge_list("3\n0 1\n1 0", false),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            parse_edge_list("3\n0 3", false),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn strict_mode_rejects_disconnected() {
        assert_eq!(
            parse_edge_list("4\n0 1\n2 3", true),
            Err(Error::Disconnected)
        );
        assert!(parse_edge_list("4\n0 1\n2 3", false).is_ok());
    }

    #[test]
    fn malformed_lines_report_line_number() {
        match parse_edge_list("3\n0 1\n1 x\n", false) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("3\n0 1 2\n", false) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("# only comments\n", false),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4), (2, 3)]).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g), true).unwrap(), g);
    }

    #[test]
    fn classification() {
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(
            p5.classify().unwrap(),
            GraphClass {
                tag: ClassTag::Tree,
                cyclomatic: 0
            }
        );
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(
            c6.classify().unwrap(),
            GraphClass {
                tag: ClassTag::Unicyclic,
                cyclomatic: 1
            }
        );
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            k4.classify().unwrap(),
            GraphClass {
                tag: ClassTag::Multicyclic,
                cyclomatic: 3
            }
        );
    }

    #[test]
    fn unique_cycle_walk() {
        // triangle 1-2-3 with pendants 0 and 4
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        assert_eq!(g.unique_cycle().unwrap(), vec![1, 2, 3]);
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(c5.unique_cycle().unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn path_recognition() {
        assert!(Graph::from_edges(4, [(0, 2), (2, 1), (1, 3)])
            .unwrap()
            .is_path());
        assert!(!Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)])
            .unwrap()
            .is_path());
        assert!(Graph::empty(1).is_path());
    }
}

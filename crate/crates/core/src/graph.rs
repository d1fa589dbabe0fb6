//! Connected cubic planar bipartite graphs with explicit face lists and the
//! self-dual codes spanned by their face-vertex incidence matrices.
//!
//! Vertices are numbered from 0 internally; the text format and the
//! built-in data use the 1-based labels of the drawings.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BinaryMatrix, BitVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarBicubicGraph {
    pub name: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Cyclic vertex sequences bounding each face.
    pub faces: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            return Ok(());
        }
        let msg = self
            .failures()
            .iter()
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect::<Vec<_>>()
            .join("; ");
        Err(Error::InvalidGraph(msg))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAILED" };
            writeln!(f, "{:<12} {mark:<6} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl PlanarBicubicGraph {
    /// Builds a graph from 1-based vertex labels.
    pub fn from_labels(
        name: &str,
        n: usize,
        edges: &[(usize, usize)],
        faces: &[&[usize]],
    ) -> Result<Self> {
        let dec = |v: usize| -> Result<usize> {
            if v == 0 || v > n {
                return Err(Error::InvalidGraph(format!("vertex label {v} outside 1..={n}")));
            }
            Ok(v - 1)
        };
        Ok(Self {
            name: name.to_string(),
            n,
            edges: edges
                .iter()
                .map(|&(a, b)| Ok((dec(a)?, dec(b)?)))
                .collect::<Result<_>>()?,
            faces: faces
                .iter()
                .map(|f| f.iter().map(|&v| dec(v)).collect::<Result<_>>())
                .collect::<Result<_>>()?,
        })
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn face_edges(face: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..face.len()).map(move |i| key(face[i], face[(i + 1) % face.len()]))
    }

    /// Checks degree, simplicity, bipartiteness, connectivity, that every
    /// face boundary is a cycle of edges with each edge on exactly two
    /// faces, and Euler's relation.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let adj = self.adjacency();

        let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(a, b) in &self.edges {
            *edge_count.entry(key(a, b)).or_default() += 1;
        }
        let loops = self.edges.iter().filter(|(a, b)| a == b).count();
        let multi = edge_count.values().filter(|&&c| c > 1).count();
        checks.push(Check {
            name: "simple",
            passed: loops == 0 && multi == 0,
            detail: format!("{loops} loops, {multi} repeated edges"),
        });

        let bad_degree: Vec<usize> = (0..self.n).filter(|&v| adj[v].len() != 3).collect();
        checks.push(Check {
            name: "cubic",
            passed: bad_degree.is_empty(),
            detail: if bad_degree.is_empty() {
                "every vertex has degree 3".into()
            } else {
                format!(
                    "vertices with degree != 3: {:?}",
                    bad_degree.iter().map(|v| v + 1).collect::<Vec<_>>()
                )
            },
        });

        let mut color = vec![None; self.n];
        let mut bipartite = true;
        let mut reached = 0;
        if self.n > 0 {
            let mut queue = VecDeque::from([0usize]);
            color[0] = Some(false);
            while let Some(v) = queue.pop_front() {
                reached += 1;
                let cv = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => bipartite = false,
                        _ => {}
                    }
                }
            }
        }
        checks.push(Check {
            name: "bipartite",
            passed: bipartite,
            detail: if bipartite {
                "2-colorable".into()
            } else {
                "odd cycle found".into()
            },
        });
        checks.push(Check {
            name: "connected",
            passed: reached == self.n,
            detail: format!("{reached} of {} vertices reachable", self.n),
        });

        let mut on_faces: BTreeMap<(usize, usize), usize> =
            edge_count.keys().map(|&e| (e, 0)).collect();
        let mut stray = Vec::new();
        for (fi, face) in self.faces.iter().enumerate() {
            for e in Self::face_edges(face) {
                match on_faces.get_mut(&e) {
                    Some(c) => *c += 1,
                    None => stray.push((fi + 1, e.0 + 1, e.1 + 1)),
                }
            }
        }
        let wrong: Vec<_> = on_faces
            .iter()
            .filter(|(_, &c)| c != 2)
            .map(|(&(a, b), &c)| (a + 1, b + 1, c))
            .collect();
        checks.push(Check {
            name: "faces",
            passed: stray.is_empty() && wrong.is_empty(),
            detail: if stray.is_empty() && wrong.is_empty() {
                "every edge lies on exactly two faces".into()
            } else {
                format!("non-edges on faces {stray:?}; edges not on two faces {wrong:?}")
            },
        });

        let (v, e, f) = (self.n as i64, self.edges.len() as i64, self.faces.len() as i64);
        checks.push(Check {
            name: "euler",
            passed: v - e + f == 2,
            detail: format!("V - E + F = {v} - {e} + {f} = {}", v - e + f),
        });
        ValidationReport { checks }
    }

    /// Faces sharing an edge with face `i`.
    pub fn face_neighbors(&self) -> Vec<Vec<usize>> {
        let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (fi, face) in self.faces.iter().enumerate() {
            for e in Self::face_edges(face) {
                by_edge.entry(e).or_default().push(fi);
            }
        }
        let mut nb = vec![Vec::new(); self.faces.len()];
        for fs in by_edge.values() {
            for &a in fs {
                for &b in fs {
                    if a != b && !nb[a].contains(&b) {
                        nb[a].push(b);
                    }
                }
            }
        }
        nb
    }

    /// Rows indexed by faces, columns by vertices.
    pub fn incidence_matrix(&self) -> BinaryMatrix {
        let rows: Vec<BitVector> = self
            .faces
            .iter()
            .map(|face| {
                let mut v = BitVector::zeros(self.n).expect("at most 128 vertices");
                for &x in face {
                    v.set(x, true);
                }
                v
            })
            .collect();
        BinaryMatrix::from_rows(&rows).expect("rows share the vertex count")
    }

    /// Text format: `vertices N`, `edge a b`, `face v1 ... vk`, `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut name = String::from("graph");
        let mut edges = Vec::new();
        let mut faces: Vec<Vec<usize>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(nm) = comment.trim().strip_prefix("name ") {
                    name = nm.trim().to_string();
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let keyword = parts.next().unwrap();
            let nums = parts
                .map(|p| p.parse::<usize>().map_err(|_| err(format!("bad number {p:?}"))))
                .collect::<Result<Vec<_>>>()?;
            match keyword {
                "vertices" if nums.len() == 1 => n = Some(nums[0]),
                "edge" if nums.len() == 2 => edges.push((nums[0], nums[1])),
                "face" if nums.len() >= 3 => faces.push(nums),
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing `vertices N` line".into(),
        })?;
        let face_refs: Vec<&[usize]> = faces.iter().map(Vec::as_slice).collect();
        Self::from_labels(&name, n, &edges, &face_refs)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("# name {}\nvertices {}\n", self.name, self.n);
        for &(a, b) in &self.edges {
            s.push_str(&format!("edge {} {}\n", a + 1, b + 1));
        }
        for face in &self.faces {
            let labels: Vec<String> = face.iter().map(|v| (v + 1).to_string()).collect();
            s.push_str(&format!("face {}\n", labels.join(" ")));
        }
        s
    }
}

/// Proper 3-coloring of the faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColoring {
    pub color: Vec<u8>,
}

impl FaceColoring {
    pub fn is_proper(&self, g: &PlanarBicubicGraph) -> bool {
        g.face_neighbors()
            .iter()
            .enumerate()
            .all(|(a, nb)| nb.iter().all(|&b| self.color[a] != self.color[b]))
    }

    /// Differently colored face pairs `(i, j)`, `i < j`.
    pub fn valid_pairs(&self) -> Vec<(usize, usize)> {
        let f = self.color.len();
        (0..f)
            .flat_map(|i| (i + 1..f).map(move |j| (i, j)))
            .filter(|&(i, j)| self.color[i] != self.color[j])
            .collect()
    }
}

/// First proper coloring found by backtracking over faces in list order,
/// trying colors 0, 1, 2.
pub fn three_face_coloring(g: &PlanarBicubicGraph) -> Result<FaceColoring> {
    let nb = g.face_neighbors();
    let f = g.num_faces();
    let mut color = vec![u8::MAX; f];
    fn assign(i: usize, nb: &[Vec<usize>], color: &mut [u8]) -> bool {
        if i == color.len() {
            return true;
        }
        for c in 0..3 {
            if nb[i].iter().all(|&j| color[j] != c) {
                color[i] = c;
                if assign(i + 1, nb, color) {
                    return true;
                }
            }
        }
        color[i] = u8::MAX;
        false
    }
    if assign(0, &nb, &mut color) {
        Ok(FaceColoring { color })
    } else {
        Err(Error::NoFaceColoring)
    }
}

/// The self-dual code spanned by the incidence rows of all faces except
/// `f1` and `f2` (0-based), which must be colored differently.
pub fn graph_to_selfdual_code(g: &PlanarBicubicGraph, f1: usize, f2: usize) -> Result<BinaryCode> {
    g.validate().into_result()?;
    for f in [f1, f2] {
        if f >= g.num_faces() {
            return Err(Error::UnknownFace(f));
        }
    }
    let coloring = three_face_coloring(g)?;
    if f1 == f2 || coloring.color[f1] == coloring.color[f2] {
        return Err(Error::SameColorFaces(f1, f2));
    }
    let rows = g.incidence_matrix().without_rows(&[f1, f2]);
    let code = BinaryCode::new(rows).map_err(|e| Error::PostconditionFailed(e.to_string()))?;
    if !code.is_self_dual() || code.k() * 2 != g.n {
        return Err(Error::PostconditionFailed(format!(
            "rows without faces {} and {} do not span a self-dual code",
            f1 + 1,
            f2 + 1
        )));
    }
    Ok(code)
}

/// First differently colored pair in lexicographic order.
pub fn default_face_pair(g: &PlanarBicubicGraph) -> Result<(usize, usize)> {
    three_face_coloring(g)?
        .valid_pairs()
        .into_iter()
        .next()
        .ok_or(Error::NoFaceColoring)
}

pub const BUILTIN_NAMES: [&str; 3] = ["cube", "G1", "G2"];

pub fn builtin_graph(name: &str) -> Result<PlanarBicubicGraph> {
    match name.to_ascii_lowercase().as_str() {
        "cube" => PlanarBicubicGraph::from_labels(
            "cube",
            8,
            &[
                (1, 2), (1, 4), (1, 5), (2, 6), (2, 3), (3, 7),
                (3, 4), (4, 8), (5, 6), (6, 7), (7, 8), (5, 8),
            ],
            &[
                &[1, 2, 3, 4],
                &[2, 3, 7, 6],
                &[3, 4, 8, 7],
                &[1, 4, 8, 5],
                &[1, 2, 6, 5],
                &[5, 6, 7, 8],
            ],
        ),
        // Outer 8-cycle, inner 8-cycle, spokes (i, i + 8).
        "g1" => {
            let mut edges = Vec::new();
            for i in 1..=8 {
                edges.push((i, i % 8 + 1));
            }
            for i in 1..=8 {
                edges.push((i + 8, i % 8 + 9));
            }
            for i in 1..=8 {
                edges.push((i, i + 8));
            }
            let quads: Vec<[usize; 4]> = (1..=8)
                .map(|i| [i, i % 8 + 1, i % 8 + 9, i + 8])
                .collect();
            let outer: Vec<usize> = (1..=8).collect();
            let inner: Vec<usize> = (9..=16).collect();
            let mut faces: Vec<&[usize]> = quads.iter().map(|q| q.as_slice()).collect();
            faces.push(&outer);
            faces.push(&inner);
            PlanarBicubicGraph::from_labels("G1", 16, &edges, &faces)
        }
        "g2" => PlanarBicubicGraph::from_labels(
            "G2",
            16,
            &[
                (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 8), (6, 1), (7, 8),
                (7, 9), (7, 6), (1, 9), (9, 10), (2, 10), (10, 11), (11, 12), (12, 13),
                (13, 3), (13, 14), (4, 14), (11, 16), (15, 16), (12, 15), (14, 15), (8, 16),
            ],
            &[
                &[1, 2, 3, 4, 5, 6],
                &[1, 6, 7, 9],
                &[1, 9, 10, 2],
                &[2, 10, 11, 12, 13, 3],
                &[3, 13, 14, 4],
                &[4, 14, 15, 16, 8, 5],
                &[5, 8, 7, 6],
                &[12, 15, 14, 13],
                &[11, 16, 15, 12],
                &[7, 8, 16, 11, 10, 9],
            ],
        ),
        _ => Err(Error::UnknownName {
            kind: "graph",
            name: name.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{classify_type, weight_distribution, CodeType};
    use std::collections::BTreeMap;

    #[test]
    fn builtins_validate() {
        for (name, v, e, f) in [("cube", 8, 12, 6), ("G1", 16, 24, 10), ("G2", 16, 24, 10)] {
            let g = builtin_graph(name).unwrap();
            let report = g.validate();
            assert!(report.is_valid(), "{name}\n{report}");
            assert_eq!((g.n, g.edges.len(), g.num_faces()), (v, e, f));
        }
        assert!(builtin_graph("G2")
            .unwrap()
            .edges
            .contains(&(7, 15)));
        assert!(matches!(builtin_graph("petersen"), Err(Error::UnknownName { .. })));
    }

    #[test]
    fn cube_missing_edge_fails_degree_check() {
        let mut g = builtin_graph("cube").unwrap();
        g.edges.pop();
        let report = g.validate();
        assert!(!report.is_valid());
        let failed: Vec<&str> = report.failures().iter().map(|c| c.name).collect();
        assert!(failed.contains(&"cubic"));
    }

    #[test]
    fn odd_cycle_fails_bipartite_check() {
        // K4 drawn in the plane: cubic, planar, not bipartite.
        let g = PlanarBicubicGraph::from_labels(
            "k4",
            4,
            &[(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)],
            &[&[1, 2, 3], &[1, 2, 4], &[2, 3, 4], &[3, 1, 4]],
        )
        .unwrap();
        let report = g.validate();
        assert_eq!(report.failures().iter().map(|c| c.name).collect::<Vec<_>>(), ["bipartite"]);
    }

    #[test]
    fn colorings_are_proper() {
        for name in BUILTIN_NAMES {
            let g = builtin_graph(name).unwrap();
            let c = three_face_coloring(&g).unwrap();
            assert!(c.is_proper(&g));
        }
        let cube = builtin_graph("cube").unwrap();
        let c = three_face_coloring(&cube).unwrap();
        assert_ne!(c.color[4], c.color[5]);
    }

    #[test]
    fn incidence_matrices() {
        let cube = builtin_graph("cube").unwrap();
        let d = cube.incidence_matrix();
        let top: Vec<String> = (0..4).map(|i| d.row(i).to_string()).collect();
        assert_eq!(top, ["11110000", "01100110", "00110011", "10011001"]);
        assert!(d.rows().all(|r| r.weight() == 4));

        let g1 = builtin_graph("G1").unwrap().incidence_matrix();
        assert_eq!((g1.nrows(), g1.ncols()), (10, 16));
        assert_eq!(g1.row(8).weight(), 8);
        assert_eq!(g1.row(9).weight(), 8);

        for name in BUILTIN_NAMES {
            let d = builtin_graph(name).unwrap().incidence_matrix();
            let t = d.transpose();
            assert!(t.rows().all(|c| c.weight() == 3), "{name}");
        }
    }

    #[test]
    fn cube_gives_extended_hamming_code() {
        let cube = builtin_graph("cube").unwrap();
        let code = graph_to_selfdual_code(&cube, 4, 5).unwrap();
        assert_eq!((code.n(), code.k()), (8, 4));
        let d = weight_distribution(&code).unwrap();
        assert_eq!(d.sparse(), BTreeMap::from([(0, 1), (4, 14), (8, 1)]));
    }

    #[test]
    fn same_color_pair_rejected() {
        let g1 = builtin_graph("G1").unwrap();
        // Outer and inner cycles both touch every quadrilateral.
        assert!(matches!(
            graph_to_selfdual_code(&g1, 8, 9),
            Err(Error::SameColorFaces(8, 9))
        ));
        assert!(matches!(graph_to_selfdual_code(&g1, 0, 10), Err(Error::UnknownFace(10))));
    }

    #[test]
    fn g1_and_g2_distributions() {
        let g1 = builtin_graph("G1").unwrap();
        let (a, b) = default_face_pair(&g1).unwrap();
        let d = weight_distribution(&graph_to_selfdual_code(&g1, a, b).unwrap()).unwrap();
        assert_eq!(d.sparse(), BTreeMap::from([(0, 1), (4, 28), (8, 198), (12, 28), (16, 1)]));
        assert_eq!(classify_type(&d).unwrap(), CodeType::II);

        let g2 = builtin_graph("G2").unwrap();
        let (a, b) = default_face_pair(&g2).unwrap();
        let d = weight_distribution(&graph_to_selfdual_code(&g2, a, b).unwrap()).unwrap();
        assert_eq!(
            d.sparse(),
            BTreeMap::from([(0, 1), (4, 12), (6, 64), (8, 102), (10, 64), (12, 12), (16, 1)])
        );
        assert_eq!(classify_type(&d).unwrap(), CodeType::I);
    }

    #[test]
    fn code_does_not_depend_on_face_pair() {
        for name in BUILTIN_NAMES {
            let g = builtin_graph(name).unwrap();
            let pairs = three_face_coloring(&g).unwrap().valid_pairs();
            let first = graph_to_selfdual_code(&g, pairs[0].0, pairs[0].1).unwrap();
            let words = first.codeword_set();
            for &(a, b) in &pairs[1..] {
                let c = graph_to_selfdual_code(&g, a, b).unwrap();
                assert_eq!(c.codeword_set(), words, "{name} ({a}, {b})");
            }
        }
    }

    #[test]
    fn text_format_round_trip() {
        for name in BUILTIN_NAMES {
            let g = builtin_graph(name).unwrap();
            let parsed = PlanarBicubicGraph::parse(&g.to_text()).unwrap();
            assert_eq!(parsed, g);
        }
        assert!(PlanarBicubicGraph::parse("edge 1 2\n").is_err());
        assert!(matches!(
            PlanarBicubicGraph::parse("vertices 2\nedge 1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn g1_standard_form_matches_published_block() {
        let g1 = builtin_graph("G1").unwrap();
        let (a, b) = default_face_pair(&g1).unwrap();
        let code = graph_to_selfdual_code(&g1, a, b).unwrap();
        let sf = code.generator().standard_form().unwrap();
        let ours = weight_distribution(&BinaryCode::new(sf.matrix.clone()).unwrap()).unwrap();
        let published = BinaryMatrix::identity(8)
            .unwrap()
            .hstack(&crate::tables::a1())
            .unwrap();
        let theirs = weight_distribution(&BinaryCode::new(published).unwrap()).unwrap();
        assert_eq!(ours, theirs);
        let permuted = code.generator().permute_columns(&sf.permutation).unwrap();
        assert!(BinaryCode::span(&permuted).same_row_space(&BinaryCode::new(sf.matrix).unwrap()));
    }
}

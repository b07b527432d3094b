//! Finite balls in the orbital Schreier graph of a rational point, shortest
//! conjugating words, and the `{A, B}` addressing of grey vertices.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::cantor::{BitString, RationalPoint};
use crate::error::{Error, Result};
use crate::plmap::Generator;
use crate::report::Report;
use crate::word::{GenWord, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub label: Generator,
    pub target: usize,
}

fn label_name(g: Generator) -> &'static str {
    match g {
        Generator::X0 => "x0",
        Generator::X1 => "x1",
    }
}

/// The subgraph of the Schreier graph induced on all points within `radius`
/// of the seed.
///
/// Vertices are numbered in breadth-first discovery order, expanding each
/// vertex with the letters `x0, x0^-1, x1, x1^-1` in that order. Only arrows of
/// the positive generators are stored; an edge is kept when both of its ends
/// lie in the ball, listed by source index and then `x0` before `x1`.
#[derive(Clone, Debug)]
pub struct SchreierBall {
    seed: RationalPoint,
    radius: usize,
    vertices: Vec<RationalPoint>,
    index: HashMap<RationalPoint, usize>,
    distance: Vec<usize>,
    parent: Vec<Option<(usize, Letter)>>,
    edges: Vec<Edge>,
}

/// Breadth-first search state shared by [`SchreierBall::build`] and
/// [`find_path`].
struct Bfs {
    vertices: Vec<RationalPoint>,
    index: HashMap<RationalPoint, usize>,
    distance: Vec<usize>,
    parent: Vec<Option<(usize, Letter)>>,
    /// Start of the current outermost layer in `vertices`.
    layer_start: usize,
    depth: usize,
}

impl Bfs {
    fn new(seed: RationalPoint) -> Self {
        let mut index = HashMap::new();
        index.insert(seed.clone(), 0);
        Bfs { vertices: vec![seed], index, distance: vec![0], parent: vec![None], layer_start: 0, depth: 0 }
    }

    /// Expands the outermost layer by one step. Stops early and returns the
    /// index of `target` if it is discovered.
    fn grow(&mut self, cap: usize, target: Option<&RationalPoint>) -> Result<Option<usize>> {
        let layer_end = self.vertices.len();
        for i in self.layer_start..layer_end {
            for letter in Letter::ALL {
                let image = self.vertices[i].act_letter(letter);
                if self.index.contains_key(&image) {
                    continue;
                }
                if self.vertices.len() >= cap {
                    return Err(Error::Capacity { cap });
                }
                let j = self.vertices.len();
                let hit = target == Some(&image);
                self.index.insert(image.clone(), j);
                self.vertices.push(image);
                self.distance.push(self.depth + 1);
                self.parent.push(Some((i, letter)));
                if hit {
                    return Ok(Some(j));
                }
            }
        }
        self.layer_start = layer_end;
        self.depth += 1;
        Ok(None)
    }

    fn exhausted(&self) -> bool {
        self.layer_start == self.vertices.len()
    }

    fn word_to(&self, i: usize) -> GenWord {
        trace_parents(&self.parent, i)
    }
}

fn trace_parents(parent: &[Option<(usize, Letter)>], mut i: usize) -> GenWord {
    let mut letters = Vec::new();
    while let Some((p, l)) = parent[i] {
        letters.push(l);
        i = p;
    }
    letters.reverse();
    GenWord::new(letters)
}

impl SchreierBall {
    /// Explores the ball of the given radius around `seed`, failing once more
    /// than `vertex_cap` vertices would be needed.
    pub fn build(seed: &RationalPoint, radius: usize, vertex_cap: usize) -> Result<Self> {
        if vertex_cap == 0 {
            return Err(Error::invalid("vertex cap must be at least 1"));
        }
        let mut bfs = Bfs::new(seed.clone());
        while bfs.depth < radius && !bfs.exhausted() {
            bfs.grow(vertex_cap, None)?;
        }
        let mut edges = Vec::new();
        for (i, v) in bfs.vertices.iter().enumerate() {
            for (letter, label) in [(Letter::X0, Generator::X0), (Letter::X1, Generator::X1)] {
                if let Some(&j) = bfs.index.get(&v.act_letter(letter)) {
                    edges.push(Edge { source: i, label, target: j });
                }
            }
        }
        Ok(SchreierBall {
            seed: seed.clone(),
            radius,
            vertices: bfs.vertices,
            index: bfs.index,
            distance: bfs.distance,
            parent: bfs.parent,
            edges,
        })
    }

    pub fn seed(&self) -> &RationalPoint {
        &self.seed
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, p: &RationalPoint) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn distance(&self, i: usize) -> usize {
        self.distance[i]
    }

    pub fn parent(&self, i: usize) -> Option<(usize, Letter)> {
        self.parent[i]
    }

    /// The word read along parent links from the seed to vertex `i`.
    pub fn word_to(&self, i: usize) -> GenWord {
        trace_parents(&self.parent, i)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph schreier {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            if i == 0 {
                let _ = writeln!(out, "  \"{v}\" [peripheries=2];");
            } else {
                let _ = writeln!(out, "  \"{v}\";");
            }
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[e.source],
                self.vertices[e.target],
                label_name(e.label)
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct BallJson {
            seed: String,
            radius: usize,
            vertices: Vec<String>,
            edges: Vec<(usize, &'static str, usize)>,
        }
        let doc = BallJson {
            seed: self.seed.to_string(),
            radius: self.radius,
            vertices: self.vertices.iter().map(ToString::to_string).collect(),
            edges: self.edges.iter().map(|e| (e.source, label_name(e.label), e.target)).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
    }
}

/// Shortest word `h` with `seed · h = target`, searching up to `max_radius`.
pub fn find_path(seed: &RationalPoint, target: &RationalPoint, max_radius: usize) -> Result<GenWord> {
    if seed == target {
        return Ok(GenWord::empty());
    }
    let mut bfs = Bfs::new(seed.clone());
    while bfs.depth < max_radius && !bfs.exhausted() {
        if let Some(j) = bfs.grow(usize::MAX, Some(target))? {
            return Ok(bfs.word_to(j));
        }
    }
    Err(Error::NotFound { explored_radius: bfs.depth })
}

/// Default search radius for conjugators starting at `p`: `|v| + 4|w| + 8`.
pub fn default_radius(p: &RationalPoint) -> usize {
    p.preperiod().len() + 4 * p.period().len() + 8
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GreyLetter {
    /// `x0^-1 x1`
    A,
    /// `x1`
    B,
}

/// A word over `{A, B}` addressing a grey vertex below the loop root `10w^∞`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GreyLabel(Vec<GreyLetter>);

impl GreyLabel {
    pub fn new(letters: Vec<GreyLetter>) -> Self {
        GreyLabel(letters)
    }

    pub fn empty() -> Self {
        GreyLabel(Vec::new())
    }

    pub fn letters(&self) -> &[GreyLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_a(&self) -> usize {
        self.0.iter().filter(|l| **l == GreyLetter::A).count()
    }

    pub fn count_b(&self) -> usize {
        self.0.iter().filter(|l| **l == GreyLetter::B).count()
    }

    pub fn starts_with(&self, prefix: &GreyLabel) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn prefix(&self, n: usize) -> GreyLabel {
        GreyLabel(self.0[..n.min(self.0.len())].to_vec())
    }

    /// The word `W(x0^-1 x1, x1)`.
    pub fn to_word(&self) -> GenWord {
        GenWord::substitute(self.0.iter(), |l| match l {
            GreyLetter::A => GenWord::new(vec![Letter::X0Inv, Letter::X1]),
            GreyLetter::B => GenWord::x1(),
        })
    }

    /// The label `w^R(B, A)` of the full nontrivial loop: reverse `w`, then
    /// `0 -> B`, `1 -> A`. Labels having it as a prefix are not unique.
    pub fn loop_label(w: &BitString) -> GreyLabel {
        GreyLabel(w.reversed().bits().iter().map(|b| if *b == 0 { GreyLetter::B } else { GreyLetter::A }).collect())
    }

    /// All labels of length at most `max_len`, shortest first, `A` before `B`.
    pub fn all_up_to(max_len: usize) -> Vec<GreyLabel> {
        let mut out = vec![GreyLabel::empty()];
        let mut start = 0;
        for _ in 0..max_len {
            let end = out.len();
            for i in start..end {
                for l in [GreyLetter::A, GreyLetter::B] {
                    let mut next = out[i].0.clone();
                    next.push(l);
                    out.push(GreyLabel(next));
                }
            }
            start = end;
        }
        out
    }
}

impl fmt::Display for GreyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            f.write_str(match l {
                GreyLetter::A => "A",
                GreyLetter::B => "B",
            })?;
        }
        Ok(())
    }
}

impl FromStr for GreyLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s == "e" {
            return Ok(GreyLabel::empty());
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                'A' => Ok(GreyLetter::A),
                'B' => Ok(GreyLetter::B),
                _ => Err(Error::parse(i, format!("expected A or B, found {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(GreyLabel)
    }
}

/// The point `10w^∞`, root of the grey tree for period `w`.
pub fn loop_root(w: &BitString) -> Result<RationalPoint> {
    RationalPoint::canonicalize("10".parse()?, w.clone())
}

/// The word `w^R(x1, x0^-1 x1)` reading the nontrivial loop for period `w`.
pub fn loop_word(w: &BitString) -> GenWord {
    GreyLabel::loop_label(w).to_word()
}

/// The grey vertex reached from `root` along `label`.
pub fn grey_vertex(root: &RationalPoint, label: &GreyLabel) -> RationalPoint {
    root.act_word(&label.to_word())
}

/// Checks the grey-vertex addressing for period `w`: labels up to `max_len`
/// without the loop label as a prefix reach pairwise distinct points, the
/// loop word fixes the root, and the last grey vertex on the loop is
/// `10σ(w^∞)`.
pub fn check_grey_labels(w: &BitString, max_len: usize) -> Report {
    let mut report = Report::new(format!("grey labels (w={w}, len<={max_len})"));
    if !w.is_primitive() {
        report.record_with("period is primitive", false, format!("{w} is empty or a proper power"));
        return report;
    }
    let root = loop_root(w).expect("w is nonempty");
    let forbidden = GreyLabel::loop_label(w);

    let mut seen: HashMap<RationalPoint, GreyLabel> = HashMap::new();
    let mut clash = None;
    let mut count = 0;
    for label in GreyLabel::all_up_to(max_len) {
        if label.starts_with(&forbidden) {
            continue;
        }
        count += 1;
        let p = grey_vertex(&root, &label);
        if let Some(prev) = seen.get(&p) {
            clash.get_or_insert_with(|| format!("{prev} and {label} both reach {p}"));
        } else {
            seen.insert(p, label);
        }
    }
    report.record_with(format!("{count} labels reach distinct vertices"), clash.is_none(), clash.unwrap_or_default());

    let z = loop_word(w);
    let image = root.act_word(&z);
    report.record_with(format!("loop word {z} fixes {root}"), image == root, format!("got {image}"));

    let mut rotated = w.bits().to_vec();
    rotated.rotate_left(1);
    let before_root =
        RationalPoint::canonicalize("10".parse().expect("literal"), BitString::new(rotated).expect("bits"))
            .expect("nonempty period");
    let last_grey = grey_vertex(&root, &forbidden.prefix(w.len() - 1));
    report.record_with(
        format!("vertex {} is 10σ(w^∞)", forbidden.prefix(w.len() - 1)),
        last_grey == before_root,
        format!("got {last_grey}, expected {before_root}"),
    );
    report
}

//! Independence alphabets, group words and trace normal forms.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, ForestWitness, ObstructionKind, Result};
use crate::letter::{is_valid_name, Letter, SignedGen};

/// A finite loop-free undirected graph on named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceAlphabet {
    names: Vec<Arc<str>>,
    index: HashMap<Arc<str>, usize>,
    adj: Vec<Vec<bool>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlphabetFile {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String)>,
}

impl IndependenceAlphabet {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut names = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.as_ref();
            if !is_valid_name(v) {
                return Err(Error::input(format!("invalid vertex name {v:?}")));
            }
            let name: Arc<str> = Arc::from(v);
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(Error::input(format!("duplicate vertex {v}")));
            }
            names.push(name);
        }
        let n = names.len();
        let mut adj = vec![vec![false; n]; n];
        for (x, y) in edges {
            let (x, y) = (x.as_ref(), y.as_ref());
            let i = *index
                .get(x)
                .ok_or_else(|| Error::input(format!("edge mentions unknown vertex {x}")))?;
            let j = *index
                .get(y)
                .ok_or_else(|| Error::input(format!("edge mentions unknown vertex {y}")))?;
            if i == j {
                return Err(Error::input(format!("loop at vertex {x}")));
            }
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Ok(IndependenceAlphabet { names, index, adj })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: AlphabetFile =
            serde_json::from_str(text).map_err(|e| Error::input(format!("alphabet: {e}")))?;
        IndependenceAlphabet::new(&raw.vertices, &raw.edges)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|n| &**n)
    }

    pub fn contains(&self, v: &str) -> bool {
        self.index.contains_key(v)
    }

    pub fn index_of(&self, v: &str) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Whether `a` and `b` are distinct adjacent vertices.
    pub fn independent(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adj[i][j],
            _ => false,
        }
    }

    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.adj[i][j] {
                    out.push((self.names[i].to_string(), self.names[j].to_string()));
                }
            }
        }
        out
    }

    /// Signed generator letters `v` and `v^-1` for every vertex.
    pub fn letters(&self) -> BTreeSet<Letter> {
        self.names
            .iter()
            .flat_map(|n| [Letter::gen(n), Letter::gen_inv(n)])
            .collect()
    }

    fn check_word(&self, w: &GroupWord) -> Result<()> {
        for g in &w.0 {
            if !self.contains(&g.name) {
                return Err(Error::input(format!("unknown vertex {}", g.name)));
            }
        }
        Ok(())
    }
}

/// A word over signed generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(pub Vec<SignedGen>);

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    /// Parses whitespace-separated `name`, `name^-1`, `name^k`, `name^-k`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((name, e)) => {
                    let (neg, digits) = match e.strip_prefix('-') {
                        Some(d) => (true, d),
                        None => (false, e),
                    };
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(Error::input(format!("bad exponent in {tok:?}")));
                    }
                    let k: i64 = digits
                        .parse()
                        .map_err(|_| Error::input(format!("exponent too large in {tok:?}")))?;
                    if k == 0 {
                        return Err(Error::input(format!("zero exponent in {tok:?}")));
                    }
                    (name, if neg { -k } else { k })
                }
            };
            if !is_valid_name(name) {
                return Err(Error::input(format!("bad generator name in {tok:?}")));
            }
            let g = if exp > 0 {
                SignedGen::pos(name)
            } else {
                SignedGen::neg(name)
            };
            for _ in 0..exp.unsigned_abs() {
                out.push(g.clone());
            }
        }
        Ok(GroupWord(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(a1 ⋯ an)^-1 = an^-1 ⋯ a1^-1`.
    pub fn inverse(&self) -> Self {
        GroupWord(self.0.iter().rev().map(SignedGen::inv).collect())
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        GroupWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.0.iter().cloned().map(Letter::Gen).collect()
    }

    /// Reads back a word of generator letters; other letters are rejected.
    pub fn from_letters(word: &[Letter]) -> Result<Self> {
        word.iter()
            .map(|l| {
                l.as_gen()
                    .cloned()
                    .ok_or_else(|| Error::input(format!("{l} is not a generator")))
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }

    /// Free reduction (cancels adjacent `x x^-1`).
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<SignedGen> = Vec::with_capacity(self.0.len());
        for g in &self.0 {
            if out.last() == Some(&g.inv()) {
                out.pop();
            } else {
                out.push(g.clone());
            }
        }
        GroupWord(out)
    }
}

impl fmt::Display for GroupWord {
    /// Runs of equal letters are written as powers: `a^3 b^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let g = &self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == *g {
                j += 1;
            }
            let run = (j - i) as i64 * g.sign();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match run {
                1 => write!(f, "{}", g.name)?,
                -1 => write!(f, "{}^-1", g.name)?,
                k => write!(f, "{}^{k}", g.name)?,
            }
            i = j;
        }
        Ok(())
    }
}

/// Canonical representative of the reduced trace of `w`: its
/// lexicographically least linearization.
pub fn trace_nf(ia: &IndependenceAlphabet, w: &GroupWord) -> Result<GroupWord> {
    ia.check_word(w)?;
    let idx: Vec<usize> = w.0.iter().map(|g| ia.index[&g.name]).collect();
    // reduced trace kept as a word; x cancels when x^-1 is a maximal element
    let mut t: Vec<usize> = Vec::with_capacity(w.len());
    for (k, g) in w.0.iter().enumerate() {
        let v = idx[k];
        let last = t.iter().rposition(|&p| idx[p] == v);
        let cancel = last.filter(|&i| {
            w.0[t[i]].inverse != g.inverse && t[i + 1..].iter().all(|&p| ia.adj[idx[p]][v])
        });
        match cancel {
            Some(i) => {
                t.remove(i);
            }
            None => t.push(k),
        }
    }
    Ok(GroupWord(
        lex_least(&t, |a, b| ia.adj[idx[a]][idx[b]], |p| &w.0[p])
            .into_iter()
            .map(|p| w.0[p].clone())
            .collect(),
    ))
}

/// Greedy least-available extraction from the dependence order of `items`.
fn lex_least<'a>(
    items: &[usize],
    independent: impl Fn(usize, usize) -> bool,
    key: impl Fn(usize) -> &'a SignedGen,
) -> Vec<usize> {
    let mut rest: Vec<usize> = items.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            let minimal = rest[..i].iter().all(|&p| independent(p, rest[i]));
            if minimal && best.map_or(true, |b| key(rest[i]) < key(rest[b])) {
                best = Some(i);
            }
        }
        let b = best.expect("some element is minimal");
        out.push(rest.remove(b));
    }
    out
}

/// Word problem: does `w` represent the identity?
pub fn wp(ia: &IndependenceAlphabet, w: &GroupWord) -> Result<bool> {
    Ok(trace_nf(ia, w)?.is_empty())
}

/// Recursive witness that an alphabet is a transitive forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Trivial,
    /// Direct product of `Z` (generated by `vertex`) with the child group.
    DirectZ {
        vertex: String,
        child: Box<DecompositionTree>,
    },
    /// Free product of at least two children with disjoint vertex sets.
    FreeProduct(Vec<DecompositionTree>),
}

impl DecompositionTree {
    pub fn vertices(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vertices(&mut out);
        out
    }

    fn collect_vertices(&self, out: &mut BTreeSet<String>) {
        match self {
            DecompositionTree::Trivial => {}
            DecompositionTree::DirectZ { vertex, child } => {
                out.insert(vertex.clone());
                child.collect_vertices(out);
            }
            DecompositionTree::FreeProduct(cs) => cs.iter().for_each(|c| c.collect_vertices(out)),
        }
    }

    /// Signed generator letters of every vertex of the tree.
    pub fn letters(&self) -> BTreeSet<Letter> {
        self.vertices()
            .iter()
            .flat_map(|n| [Letter::gen(n), Letter::gen_inv(n)])
            .collect()
    }

    /// S-expression: `triv`, `(z a child)`, `(free c1 c2 …)`.
    pub fn to_sexpr(&self) -> String {
        match self {
            DecompositionTree::Trivial => "triv".into(),
            DecompositionTree::DirectZ { vertex, child } => {
                format!("(z {vertex} {})", child.to_sexpr())
            }
            DecompositionTree::FreeProduct(cs) => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_sexpr()).collect();
                format!("(free {})", parts.join(" "))
            }
        }
    }

    /// Rendering as the free product of connected components: a connected
    /// nonempty alphabet is wrapped in a one-element `(free …)`.
    pub fn to_component_sexpr(&self) -> String {
        match self {
            DecompositionTree::DirectZ { .. } => format!("(free {})", self.to_sexpr()),
            _ => self.to_sexpr(),
        }
    }

    /// Rebuilds the alphabet the tree describes: disjoint union for free
    /// products, a new universal vertex for each direct factor.
    pub fn reassemble(&self) -> (BTreeSet<String>, BTreeSet<(String, String)>) {
        match self {
            DecompositionTree::Trivial => (BTreeSet::new(), BTreeSet::new()),
            DecompositionTree::DirectZ { vertex, child } => {
                let (vs, mut es) = child.reassemble();
                for v in &vs {
                    es.insert(ordered(vertex, v));
                }
                let mut vs = vs;
                vs.insert(vertex.clone());
                (vs, es)
            }
            DecompositionTree::FreeProduct(cs) => {
                let mut vs = BTreeSet::new();
                let mut es = BTreeSet::new();
                for c in cs {
                    let (v, e) = c.reassemble();
                    vs.extend(v);
                    es.extend(e);
                }
                (vs, es)
            }
        }
    }
}

fn ordered(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Decomposition tree, or an induced `C4`/`P4` witness.
pub fn ia_is_transitive_forest(
    ia: &IndependenceAlphabet,
) -> std::result::Result<DecompositionTree, ForestWitness> {
    let mut all: Vec<usize> = (0..ia.len()).collect();
    all.sort_by(|&a, &b| ia.names[a].cmp(&ia.names[b]));
    decompose_set(ia, &all)
}

/// Like [`ia_is_transitive_forest`] but reports failure as an error.
pub fn ia_decompose(ia: &IndependenceAlphabet) -> Result<DecompositionTree> {
    ia_is_transitive_forest(ia).map_err(Error::NotTransitiveForest)
}

/// `set` is sorted by vertex name.
fn decompose_set(
    ia: &IndependenceAlphabet,
    set: &[usize],
) -> std::result::Result<DecompositionTree, ForestWitness> {
    if set.is_empty() {
        return Ok(DecompositionTree::Trivial);
    }
    let comps = components(ia, set);
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| decompose_set(ia, c))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(DecompositionTree::FreeProduct(children));
    }
    let universal = set
        .iter()
        .copied()
        .find(|&u| set.iter().all(|&v| v == u || ia.adj[u][v]));
    match universal {
        Some(u) => {
            let rest: Vec<usize> = set.iter().copied().filter(|&v| v != u).collect();
            Ok(DecompositionTree::DirectZ {
                vertex: ia.names[u].to_string(),
                child: Box::new(decompose_set(ia, &rest)?),
            })
        }
        None => Err(find_obstruction(ia, set)
            .expect("a connected graph without universal vertex has an induced C4 or P4")),
    }
}

/// Connected components of the induced subgraph, each sorted by name,
/// ordered by their least vertex.
fn components(ia: &IndependenceAlphabet, set: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; ia.len()];
    let mut out = Vec::new();
    for &s in set {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in set {
                if !seen[y] && ia.adj[x][y] {
                    seen[y] = true;
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        let pos = |v: &usize| set.iter().position(|x| x == v);
        comp.sort_by_key(pos);
        out.push(comp);
    }
    out
}

/// First induced `C4` or `P4` among 4-subsets of `set`, in name order.
fn find_obstruction(ia: &IndependenceAlphabet, set: &[usize]) -> Option<ForestWitness> {
    let n = set.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [set[a], set[b], set[c], set[d]];
                    if let Some(w) = classify(ia, quad) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// Recognizes an induced `C4` or `P4` on four vertices given in name order.
fn classify(ia: &IndependenceAlphabet, quad: [usize; 4]) -> Option<ForestWitness> {
    let deg = |x: usize| quad.iter().filter(|&&y| ia.adj[x][y]).count();
    let edges: usize = quad.iter().map(|&x| deg(x)).sum::<usize>() / 2;
    let degs: Vec<usize> = quad.iter().map(|&x| deg(x)).collect();
    let name = |x: usize| ia.names[x].to_string();
    let walk = |start: usize| -> Vec<usize> {
        let mut path = vec![start];
        while path.len() < 4 {
            let cur = *path.last().unwrap();
            // quad is in name order, so the first unvisited neighbour is the least
            match quad
                .iter()
                .copied()
                .find(|&y| ia.adj[cur][y] && !path.contains(&y))
            {
                Some(next) => path.push(next),
                None => break,
            }
        }
        path
    };
    if edges == 4 && degs.iter().all(|&d| d == 2) {
        let p = walk(quad[0]);
        let vs = [name(p[0]), name(p[1]), name(p[2]), name(p[3])];
        return Some(ForestWitness {
            kind: ObstructionKind::C4,
            vertices: vs,
        });
    }
    if edges == 3 && degs.iter().filter(|&&d| d == 1).count() == 2 && !degs.contains(&3) {
        let end = quad.iter().copied().find(|&x| deg(x) == 1).unwrap();
        let p = walk(end);
        if p.len() == 4 {
            let vs = [name(p[0]), name(p[1]), name(p[2]), name(p[3])];
            return Some(ForestWitness {
                kind: ObstructionKind::P4,
                vertices: vs,
            });
        }
    }
    None
}

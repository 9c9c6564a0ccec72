use crate::{QuiverError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// A path in traversal order. Trivial paths carry only their vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, arrows: vec![] }
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
    pub fn end(&self, arrows: &[Arrow]) -> usize {
        self.arrows.last().map_or(self.start, |&a| arrows[a].dst)
    }
    /// `self` then `o`; caller ensures they are composable.
    pub fn concat(&self, o: &Path) -> Path {
        let mut a = self.arrows.clone();
        a.extend_from_slice(&o.arrows);
        Path { start: self.start, arrows: a }
    }
    /// Ordering key: length first, then arrow indices.
    pub fn key(&self) -> (usize, &[usize]) {
        (self.arrows.len(), &self.arrows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
}

/// Parsed, validated presentation of `F_p Q / J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub p: u32,
    pub pathcap: Option<usize>,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

fn err(line: usize, msg: impl Into<String>) -> QuiverError {
    QuiverError::Syntax { line, msg: msg.into() }
}

fn parse_path(tok: &str, spec: &AlgebraSpec, line: usize) -> Result<Path> {
    let mut arrows = vec![];
    for name in tok.split('.') {
        let a = spec
            .arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| err(line, format!("unknown arrow `{name}`")))?;
        if let Some(&prev) = arrows.last() {
            let prev: usize = prev;
            if spec.arrows[prev].dst != spec.arrows[a].src {
                return Err(err(line, format!("path `{tok}` is not composable")));
            }
        }
        arrows.push(a);
    }
    Ok(Path { start: spec.arrows[arrows[0]].src, arrows })
}

fn parse_term(tok: &str, sign: i64, spec: &AlgebraSpec, line: usize) -> Result<(i64, Path)> {
    let (c, path) = match tok.split_once('*') {
        Some((c, path)) => (c.parse::<i64>().map_err(|_| err(line, format!("bad coefficient `{c}`")))?, path),
        None => (1, tok),
    };
    Ok((sign * c, parse_path(path, spec, line)?))
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut spec = AlgebraSpec { p: 0, pathcap: None, vertices: vec![], arrows: vec![], relations: vec![] };
        let mut pending: Vec<(usize, String)> = vec![];
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut toks = body.split_whitespace();
            let kw = toks.next().unwrap();
            let rest: Vec<&str> = toks.collect();
            match kw {
                "field" => {
                    if rest.len() != 1 {
                        return Err(err(line, "field takes one argument"));
                    }
                    spec.p = rest[0].parse().map_err(|_| err(line, "field must be an integer"))?;
                }
                "pathcap" => {
                    if rest.len() != 1 {
                        return Err(err(line, "pathcap takes one argument"));
                    }
                    let n: usize = rest[0].parse().map_err(|_| err(line, "pathcap must be an integer"))?;
                    if n == 0 {
                        return Err(err(line, "pathcap must be positive"));
                    }
                    spec.pathcap = Some(n);
                }
                "vertex" => {
                    if rest.is_empty() {
                        return Err(err(line, "vertex needs at least one name"));
                    }
                    for v in rest {
                        if spec.vertices.iter().any(|w| w == v) {
                            return Err(err(line, format!("duplicate vertex `{v}`")));
                        }
                        spec.vertices.push(v.to_string());
                    }
                }
                "arrow" => {
                    if rest.len() != 3 {
                        return Err(err(line, "arrow takes <name> <src> <dst>"));
                    }
                    if spec.arrows.iter().any(|a| a.name == rest[0]) {
                        return Err(err(line, format!("duplicate arrow `{}`", rest[0])));
                    }
                    if rest[0].contains(['.', '*']) {
                        return Err(err(line, "arrow names may not contain `.` or `*`"));
                    }
                    let find = |n: &str| {
                        spec.vertices.iter().position(|v| v == n).ok_or_else(|| err(line, format!("unknown vertex `{n}`")))
                    };
                    let (src, dst) = (find(rest[1])?, find(rest[2])?);
                    spec.arrows.push(Arrow { name: rest[0].to_string(), src, dst });
                }
                "relation" => pending.push((line, rest.join(" "))),
                other => return Err(err(line, format!("unknown keyword `{other}`"))),
            }
        }
        if spec.p == 0 {
            return Err(QuiverError::Syntax { line: 0, msg: "missing `field` line".into() });
        }
        hall2p_ffla::Fp::new(spec.p).map_err(|e| QuiverError::Config(e.to_string()))?;
        if spec.vertices.is_empty() {
            return Err(QuiverError::Syntax { line: 0, msg: "no vertices".into() });
        }
        for (line, body) in pending {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.is_empty() {
                return Err(err(line, "empty relation"));
            }
            let mut terms = vec![parse_term(toks[0], 1, &spec, line)?];
            let mut i = 1;
            while i < toks.len() {
                let sign = match toks[i] {
                    "+" => 1,
                    "-" => -1,
                    t => return Err(err(line, format!("expected `+` or `-`, found `{t}`"))),
                };
                let t = toks.get(i + 1).ok_or_else(|| err(line, "dangling sign"))?;
                terms.push(parse_term(t, sign, &spec, line)?);
                i += 2;
            }
            let (s, t) = (terms[0].1.start, terms[0].1.end(&spec.arrows));
            for (_, p) in &terms {
                if p.len() < 2 {
                    return Err(err(line, "relation paths must have length at least 2"));
                }
                if p.start != s || p.end(&spec.arrows) != t {
                    return Err(err(line, "relation paths are not parallel"));
                }
            }
            spec.relations.push(Relation { terms });
        }
        if spec.pathcap.is_none() && spec.has_cycle() {
            return Err(QuiverError::Config("quiver has an oriented cycle; a pathcap line is required".into()));
        }
        Ok(spec)
    }

    pub fn has_cycle(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0; n];
        for a in &self.arrows {
            indeg[a.dst] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.src == v) {
                indeg[a.dst] -= 1;
                if indeg[a.dst] == 0 {
                    stack.push(a.dst);
                }
            }
        }
        seen < n
    }

    /// Canonical text form; parsing it back gives an equal spec.
    pub fn to_text(&self) -> String {
        let mut s = format!("field {}\n", self.p);
        if let Some(n) = self.pathcap {
            s += &format!("pathcap {n}\n");
        }
        s += &format!("vertex {}\n", self.vertices.join(" "));
        for a in &self.arrows {
            s += &format!("arrow {} {} {}\n", a.name, self.vertices[a.src], self.vertices[a.dst]);
        }
        for r in &self.relations {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|(c, p)| {
                    let names: Vec<&str> = p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect();
                    format!("{}*{}", c, names.join("."))
                })
                .collect();
            s += &format!("relation {}\n", terms.join(" + "));
        }
        s
    }
}

use crate::spec::{AlgebraSpec, Arrow, Path};
use crate::{QuiverError, Rep, Result};
use hall2p_ffla::{Fp, Mat, Vector};
use std::collections::HashMap;

/// Residue classes of paths `i -> v` modulo the relation ideal.
#[derive(Clone, Debug)]
struct PathSpace {
    /// every path of bounded length, ascending by (length, arrows)
    all: Vec<Path>,
    index: HashMap<Path, usize>,
    /// rows of the ideal in RREF; columns are `all` reversed (largest first)
    ideal: Vec<Vector>,
    ideal_pivots: Vec<usize>,
    /// indices into `all` of the surviving basis paths, ascending
    basis: Vec<usize>,
}

impl PathSpace {
    fn col(&self, k: usize) -> usize {
        self.all.len() - 1 - k
    }

    /// Coordinates of a combination of paths in the residue basis.
    fn reduce(&self, f: Fp, v: &[(u32, usize)]) -> Vector {
        let n = self.all.len();
        let mut w = vec![0u32; n];
        for &(c, k) in v {
            let col = self.col(k);
            w[col] = f.add(w[col], c);
        }
        for (row, &pc) in self.ideal.iter().zip(&self.ideal_pivots) {
            let c = w[pc];
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.basis.iter().map(|&k| w[self.col(k)]).collect()
    }
}

/// A bound quiver algebra over a prime field, with precomputed path bases.
#[derive(Clone, Debug)]
pub struct Algebra {
    spec: AlgebraSpec,
    f: Fp,
    bound: usize,
    spaces: Vec<Vec<PathSpace>>,
}

impl Algebra {
    pub fn parse(text: &str) -> Result<Self> {
        Algebra::new(AlgebraSpec::parse(text)?)
    }

    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        let f = Fp::new(spec.p).map_err(|e| QuiverError::Config(e.to_string()))?;
        let n = spec.vertices.len();
        let cyclic = spec.has_cycle();
        let bound = match spec.pathcap {
            Some(c) => c,
            None => longest_path(&spec),
        };
        // all paths of length <= bound grouped by endpoints
        let mut by_ends: Vec<Vec<Vec<Path>>> = vec![vec![vec![]; n]; n];
        let mut layer: Vec<Path> = (0..n).map(Path::trivial).collect();
        for len in 0..=bound {
            for p in &layer {
                by_ends[p.start][p.end(&spec.arrows)].push(p.clone());
            }
            if len == bound {
                break;
            }
            let mut next = vec![];
            for p in &layer {
                let e = p.end(&spec.arrows);
                for (ai, a) in spec.arrows.iter().enumerate() {
                    if a.src == e {
                        let mut q = p.clone();
                        q.arrows.push(ai);
                        next.push(q);
                    }
                }
            }
            layer = next;
        }
        for row in by_ends.iter_mut() {
            for ps in row.iter_mut() {
                ps.sort_by(|a, b| a.key().cmp(&b.key()));
            }
        }
        let mut spaces = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for v in 0..n {
                let all = by_ends[i][v].clone();
                let index: HashMap<Path, usize> = all.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
                let m = all.len();
                let mut gens: Vec<Vector> = vec![];
                for r in &spec.relations {
                    let (rs, rt) = (r.terms[0].1.start, r.terms[0].1.end(&spec.arrows));
                    for u in &by_ends[i][rs] {
                        for w in &by_ends[rt][v] {
                            let mut g = vec![0u32; m];
                            for (c, p) in &r.terms {
                                let full = Path { start: i, arrows: [&u.arrows[..], &p.arrows[..], &w.arrows[..]].concat() };
                                if let Some(&k) = index.get(&full) {
                                    let col = m - 1 - k;
                                    g[col] = f.add(g[col], f.reduce(*c));
                                }
                            }
                            if g.iter().any(|&x| x != 0) {
                                gens.push(g);
                            }
                        }
                    }
                }
                if cyclic {
                    // paths at the cap are declared zero; they must already be in the ideal
                    let ech = hall2p_ffla::Echelon::from_vectors(f, m, &gens);
                    for (k, p) in all.iter().enumerate() {
                        if p.len() == bound {
                            let mut e = vec![0; m];
                            e[m - 1 - k] = 1;
                            if !ech.contains(&e) {
                                return Err(QuiverError::Config(format!(
                                    "pathcap {bound} exhausted: a path of that length from `{}` to `{}` survives the relations",
                                    spec.vertices[i], spec.vertices[v]
                                )));
                            }
                        }
                    }
                }
                let ech = hall2p_ffla::Echelon::from_vectors(f, m, &gens);
                let mut is_piv = vec![false; m];
                for &c in &ech.pivots {
                    is_piv[c] = true;
                }
                let basis: Vec<usize> = (0..m).filter(|&k| !is_piv[m - 1 - k]).collect();
                row.push(PathSpace { all, index, ideal: ech.basis, ideal_pivots: ech.pivots, basis });
            }
            spaces.push(row);
        }
        Ok(Algebra { spec, f, bound, spaces })
    }

    /// The same presentation over another prime.
    pub fn with_prime(&self, p: u32) -> Result<Self> {
        let mut spec = self.spec.clone();
        spec.p = p;
        Algebra::new(spec)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }
    pub fn field(&self) -> Fp {
        self.f
    }
    pub fn q(&self) -> u32 {
        self.f.p()
    }
    pub fn n(&self) -> usize {
        self.spec.vertices.len()
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.spec.arrows
    }
    pub fn vertex_name(&self, v: usize) -> &str {
        &self.spec.vertices[v]
    }
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.spec.vertices.iter().position(|v| v == name)
    }
    pub fn path_bound(&self) -> usize {
        self.bound
    }

    /// Basis paths of `e_i A e_v`, i.e. of `P_i` at vertex `v`.
    pub fn path_basis(&self, i: usize, v: usize) -> Vec<&Path> {
        let s = &self.spaces[i][v];
        s.basis.iter().map(|&k| &s.all[k]).collect()
    }

    /// `dim P_i(v)`.
    pub fn pdim(&self, i: usize, v: usize) -> usize {
        self.spaces[i][v].basis.len()
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.is_empty() {
            format!("e{}", self.spec.vertices[p.start])
        } else {
            p.arrows.iter().map(|&a| self.spec.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }

    /// Coordinates of a path in the residue basis of its endpoints.
    pub fn reduce_path(&self, p: &Path) -> Vector {
        let s = &self.spaces[p.start][p.end(&self.spec.arrows)];
        match s.index.get(p) {
            Some(&k) => s.reduce(self.f, &[(1, k)]),
            None => vec![0; s.basis.len()],
        }
    }

    /// Product `p.q` of basis paths `p: i -> j`, `q: j -> v`, in the basis of `P_i(v)`.
    pub fn mult(&self, p: &Path, q: &Path) -> Vector {
        debug_assert_eq!(p.end(&self.spec.arrows), q.start);
        self.reduce_path(&p.concat(q))
    }

    /// Product of `x` in `e_i A e_j` and `y` in `e_j A e_v` (both in residue coordinates).
    pub fn mult_elems(&self, i: usize, j: usize, v: usize, x: &[u32], y: &[u32]) -> Vector {
        let f = self.f;
        let bx = self.path_basis(i, j);
        let by = self.path_basis(j, v);
        let mut out = vec![0; self.pdim(i, v)];
        for (a, &ca) in bx.iter().zip(x) {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in by.iter().zip(y) {
                if cb == 0 {
                    continue;
                }
                let r = self.mult(a, b);
                let c = f.mul(ca, cb);
                for (o, &t) in out.iter_mut().zip(&r) {
                    *o = f.add(*o, f.mul(c, t));
                }
            }
        }
        out
    }

    /// The Cartan matrix `D[i][v] = dim P_i(v)`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (0..n).map(|i| (0..n).map(|v| self.pdim(i, v) as i64).collect()).collect()
    }

    pub fn projective(&self, i: usize) -> Rep {
        let mut e = vec![0; self.n()];
        e[i] = 1;
        self.proj_sum(&e)
    }

    /// `⊕ P_i^{e_i}`, at each vertex ordered by summand vertex, then copy, then path.
    pub fn proj_sum(&self, e: &[usize]) -> Rep {
        let n = self.n();
        let f = self.f;
        let dims: Vec<usize> = (0..n).map(|v| (0..n).map(|i| e[i] * self.pdim(i, v)).sum()).collect();
        let mut maps = vec![];
        for (ai, a) in self.spec.arrows.iter().enumerate() {
            let (s, t) = (a.src, a.dst);
            let mut m = Mat::zeros(f, dims[t], dims[s]);
            let (mut ro, mut co) = (0, 0);
            let h = Path { start: s, arrows: vec![ai] };
            for i in 0..n {
                let (ds, dt) = (self.pdim(i, s), self.pdim(i, t));
                let bs = self.path_basis(i, s);
                for _ in 0..e[i] {
                    for (c, p) in bs.iter().enumerate() {
                        let img = self.reduce_path(&p.concat(&h));
                        for (r, &x) in img.iter().enumerate() {
                            m.set(ro + r, co + c, x);
                        }
                    }
                    ro += dt;
                    co += ds;
                }
            }
            maps.push(m);
        }
        Rep { dims, maps }
    }
}

fn longest_path(spec: &AlgebraSpec) -> usize {
    let n = spec.vertices.len();
    let mut memo: Vec<Option<usize>> = vec![None; n];
    fn go(v: usize, spec: &AlgebraSpec, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(x) = memo[v] {
            return x;
        }
        let r = spec.arrows.iter().filter(|a| a.src == v).map(|a| 1 + go(a.dst, spec, memo)).max().unwrap_or(0);
        memo[v] = Some(r);
        r
    }
    (0..n).map(|v| go(v, spec, &mut memo)).max().unwrap_or(0)
}

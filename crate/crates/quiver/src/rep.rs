use crate::spec::Path;
use crate::{Algebra, QuiverError, Result};
use hall2p_ffla::{Echelon, Fp, Mat, Vector};

/// A representation: a vector space per vertex and a matrix per arrow,
/// `x_h` of shape `dim(t(h)) x dim(s(h))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepMor {
    pub blocks: Vec<Mat>,
}

/// A subrepresentation with its inclusion.
#[derive(Clone, Debug)]
pub struct Subrep {
    pub rep: Rep,
    pub incl: RepMor,
}

impl Rep {
    pub fn zero(alg: &Algebra) -> Rep {
        let f = alg.field();
        Rep { dims: vec![0; alg.n()], maps: alg.arrows().iter().map(|_| Mat::zeros(f, 0, 0)).collect() }
    }

    pub fn simple(alg: &Algebra, i: usize) -> Rep {
        let f = alg.field();
        let mut dims = vec![0; alg.n()];
        dims[i] = 1;
        let maps = alg.arrows().iter().map(|a| Mat::zeros(f, dims[a.dst], dims[a.src])).collect();
        Rep { dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of a path (composite of arrow maps in traversal order).
    pub fn path_map(&self, alg: &Algebra, p: &Path) -> Mat {
        let f = alg.field();
        let mut m = Mat::identity(f, self.dims[p.start]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    pub fn satisfies_relations(&self, alg: &Algebra) -> bool {
        let f = alg.field();
        alg.spec().relations.iter().all(|r| {
            let (s, t) = (r.terms[0].1.start, r.terms[0].1.end(alg.arrows()));
            let mut acc = Mat::zeros(f, self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                acc.axpy(f.reduce(*c), &self.path_map(alg, p));
            }
            acc.is_zero()
        }) && {
            // paths beyond the bound must act as zero
            let bound = alg.path_bound();
            if !alg.spec().has_cycle() {
                true
            } else {
                all_paths_of_len(alg, bound).iter().all(|p| self.path_map(alg, p).is_zero())
            }
        }
    }

    pub fn direct_sum(&self, o: &Rep) -> Rep {
        Rep {
            dims: self.dims.iter().zip(&o.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&o.maps).map(|(a, b)| Mat::block_diag(a, b)).collect(),
        }
    }

    pub fn field(&self, alg: &Algebra) -> Fp {
        alg.field()
    }
}

fn all_paths_of_len(alg: &Algebra, len: usize) -> Vec<Path> {
    let mut layer: Vec<Path> = (0..alg.n()).map(Path::trivial).collect();
    for _ in 0..len {
        let mut next = vec![];
        for p in &layer {
            let e = p.end(alg.arrows());
            for (ai, a) in alg.arrows().iter().enumerate() {
                if a.src == e {
                    let mut q = p.clone();
                    q.arrows.push(ai);
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    layer
}

impl RepMor {
    pub fn zero(f: Fp, m: &Rep, n: &Rep) -> RepMor {
        RepMor { blocks: m.dims.iter().zip(&n.dims).map(|(&a, &b)| Mat::zeros(f, b, a)).collect() }
    }

    pub fn identity(f: Fp, m: &Rep) -> RepMor {
        RepMor { blocks: m.dims.iter().map(|&a| Mat::identity(f, a)).collect() }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &RepMor) -> RepMor {
        RepMor { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| b.mul(a)).collect() }
    }

    pub fn add(&self, o: &RepMor) -> RepMor {
        RepMor { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &RepMor) -> RepMor {
        RepMor { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: u32) -> RepMor {
        RepMor { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> RepMor {
        RepMor { blocks: self.blocks.iter().map(|a| a.neg()).collect() }
    }

    pub fn axpy(&mut self, c: u32, o: &RepMor) {
        for (a, b) in self.blocks.iter_mut().zip(&o.blocks) {
            a.axpy(c, b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn inverse(&self) -> Option<RepMor> {
        Some(RepMor { blocks: self.blocks.iter().map(|b| b.inverse()).collect::<Option<Vec<_>>>()? })
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn flatten(&self) -> Vector {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }

    /// Block matrix `[[a, b], [c, d]]` at every vertex.
    pub fn blocks2(a: &RepMor, b: &RepMor, c: &RepMor, d: &RepMor) -> RepMor {
        RepMor {
            blocks: (0..a.blocks.len())
                .map(|v| Mat::blocks(&a.blocks[v], &b.blocks[v], &c.blocks[v], &d.blocks[v]))
                .collect(),
        }
    }

    pub fn hstack(&self, o: &RepMor) -> RepMor {
        RepMor { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.hstack(b)).collect() }
    }

    pub fn vstack(&self, o: &RepMor) -> RepMor {
        RepMor { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.vstack(b)).collect() }
    }

    pub fn is_morphism(&self, alg: &Algebra, m: &Rep, n: &Rep) -> bool {
        alg.arrows().iter().enumerate().all(|(h, a)| {
            self.blocks[a.dst].mul(&m.maps[h]) == n.maps[h].mul(&self.blocks[a.src])
        })
    }

    /// Image of an element `x ∈ M_v`.
    pub fn apply(&self, v: usize, x: &[u32]) -> Vector {
        self.blocks[v].mul_vec(x)
    }
}

/// Basis of `Hom_A(M, N)` from the intertwiner equations.
pub fn hom_basis(alg: &Algebra, m: &Rep, n: &Rep) -> Vec<RepMor> {
    let f = alg.field();
    let nv = alg.n();
    let mut offs = vec![0; nv + 1];
    for v in 0..nv {
        offs[v + 1] = offs[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offs[nv];
    let mut rows: Vec<Vec<u32>> = vec![];
    for (h, a) in alg.arrows().iter().enumerate() {
        let (s, t) = (a.src, a.dst);
        // f_t x_h - x'_h f_s = 0, entry (r, c) with r < N_t, c < M_s
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![0u32; unknowns];
                for k in 0..m.dims[t] {
                    let idx = offs[t] + r * m.dims[t] + k;
                    row[idx] = f.add(row[idx], m.maps[h].get(k, c));
                }
                for k in 0..n.dims[s] {
                    let idx = offs[s] + k * m.dims[s] + c;
                    row[idx] = f.sub(row[idx], n.maps[h].get(r, k));
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = if rows.is_empty() {
        Mat::zeros(f, 0, unknowns)
    } else {
        let flat: Vec<u32> = rows.concat();
        Mat::from_vec(f, rows.len(), unknowns, flat)
    };
    sys.kernel_basis()
        .into_iter()
        .map(|v| RepMor {
            blocks: (0..nv).map(|w| Mat::from_vec(f, n.dims[w], m.dims[w], v[offs[w]..offs[w + 1]].to_vec())).collect(),
        })
        .collect()
}

/// Subrepresentation spanned at each vertex by the given echelon bases.
/// The spaces must be closed under the arrows.
pub fn subrep(alg: &Algebra, m: &Rep, spaces: &[Echelon]) -> Subrep {
    let f = alg.field();
    let dims: Vec<usize> = spaces.iter().map(|e| e.dim()).collect();
    let incl = RepMor { blocks: spaces.iter().map(|e| e.as_cols()).collect() };
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(h, a)| {
            let mut x = Mat::zeros(f, dims[a.dst], dims[a.src]);
            for (c, b) in spaces[a.src].basis.iter().enumerate() {
                let img = m.maps[h].mul_vec(b);
                let co = spaces[a.dst].coords(&img).expect("subspace closed under arrows");
                for (r, &y) in co.iter().enumerate() {
                    x.set(r, c, y);
                }
            }
            x
        })
        .collect();
    Subrep { rep: Rep { dims, maps }, incl }
}

/// `rad M = Σ_h im(x_h)`.
pub fn radical(alg: &Algebra, m: &Rep) -> Subrep {
    let f = alg.field();
    let spaces: Vec<Echelon> = (0..alg.n())
        .map(|v| {
            let mut cols = vec![];
            for (h, a) in alg.arrows().iter().enumerate() {
                if a.dst == v {
                    for c in 0..m.dims[a.src] {
                        cols.push(m.maps[h].col(c));
                    }
                }
            }
            Echelon::from_vectors(f, m.dims[v], &cols)
        })
        .collect();
    subrep(alg, m, &spaces)
}

pub fn kernel(alg: &Algebra, g: &RepMor, m: &Rep) -> Subrep {
    let f = alg.field();
    let spaces: Vec<Echelon> =
        (0..alg.n()).map(|v| Echelon::from_vectors(f, m.dims[v], &g.blocks[v].kernel_basis())).collect();
    subrep(alg, m, &spaces)
}

/// Complement of `rad M_v` in `M_v`, chosen greedily from standard basis vectors.
pub fn top_lifts(alg: &Algebra, m: &Rep) -> Vec<Vec<Vector>> {
    let rad = radical(alg, m);
    (0..alg.n())
        .map(|v| {
            let f = alg.field();
            let mut e = Echelon::from_vectors(f, m.dims[v], &rad.incl.blocks[v].transpose_rows());
            let mut out = vec![];
            for k in 0..m.dims[v] {
                let mut x = vec![0; m.dims[v]];
                x[k] = 1;
                if e.insert(&x) {
                    out.push(x);
                }
            }
            out
        })
        .collect()
}

trait ColsAsRows {
    fn transpose_rows(&self) -> Vec<Vector>;
}

impl ColsAsRows for Mat {
    fn transpose_rows(&self) -> Vec<Vector> {
        (0..self.cols()).map(|c| self.col(c)).collect()
    }
}

/// The morphism `P_i -> M` sending `e_i` to `x ∈ M_i`.
pub fn yoneda(alg: &Algebra, i: usize, m: &Rep, x: &[u32]) -> RepMor {
    let f = alg.field();
    let blocks = (0..alg.n())
        .map(|v| {
            let b = alg.path_basis(i, v);
            let cols: Vec<Vector> = b.iter().map(|p| m.path_map(alg, p).mul_vec(x)).collect();
            Mat::from_cols(f, m.dims[v], &cols)
        })
        .collect();
    RepMor { blocks }
}

/// Projective cover `⊕ P_i^{t_i} -> M` with `t = dim top M`.
pub fn projective_cover(alg: &Algebra, m: &Rep) -> (Vec<usize>, Rep, RepMor) {
    let lifts = top_lifts(alg, m);
    let e: Vec<usize> = lifts.iter().map(|l| l.len()).collect();
    let p = alg.proj_sum(&e);
    let mut parts: Vec<RepMor> = vec![];
    for (i, l) in lifts.iter().enumerate() {
        for x in l {
            parts.push(yoneda(alg, i, m, x));
        }
    }
    let f = alg.field();
    let mut epi = RepMor { blocks: m.dims.iter().map(|&d| Mat::zeros(f, d, 0)).collect() };
    for part in &parts {
        epi = epi.hstack(part);
    }
    (e, p, epi)
}

/// A minimal projective resolution: `e[k]` is the multiplicity vector of the
/// k-th term and `maps[k]` goes from term k+1 to term k.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<Vec<usize>>,
    pub maps: Vec<RepMor>,
}

pub fn projective_resolution(alg: &Algebra, m: &Rep, max_len: usize) -> Result<Resolution> {
    let (e0, p0, epi) = projective_cover(alg, m);
    let mut terms = vec![e0];
    let mut maps = vec![];
    let mut cur = kernel(alg, &epi, &p0);
    loop {
        if cur.rep.is_zero() {
            return Ok(Resolution { terms, maps });
        }
        if terms.len() > max_len {
            return Err(QuiverError::Config(format!("projective resolution not finished after {max_len} steps")));
        }
        let (e, p, cover) = projective_cover(alg, &cur.rep);
        maps.push(cover.then(&cur.incl));
        terms.push(e);
        cur = kernel(alg, &cover, &p);
    }
}

/// Largest projective dimension among the simples.
pub fn gldim_probe(alg: &Algebra, max_len: usize) -> Result<usize> {
    let mut d = 0;
    for i in 0..alg.n() {
        let r = projective_resolution(alg, &Rep::simple(alg, i), max_len)?;
        d = d.max(r.terms.len() - 1);
    }
    Ok(d)
}

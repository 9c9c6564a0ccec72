use hall2p_ffla::{Echelon, Mat, Vector};
use hall2p_quiver::{Algebra, RepMor};

/// Where each summand `P_i` of `⊕ P_i^{e_i}` sits at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub e: Vec<usize>,
    /// vertex of each summand, in order
    pub summands: Vec<usize>,
    /// `offs[v][k]` = first row of summand k at vertex v
    pub offs: Vec<Vec<usize>>,
    pub dims: Vec<usize>,
}

impl Layout {
    pub fn new(alg: &Algebra, e: &[usize]) -> Self {
        let n = alg.n();
        let summands: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat(i).take(e[i])).collect();
        let mut offs = vec![vec![0; summands.len()]; n];
        let mut dims = vec![0; n];
        for v in 0..n {
            let mut o = 0;
            for (k, &i) in summands.iter().enumerate() {
                offs[v][k] = o;
                o += alg.pdim(i, v);
            }
            dims[v] = o;
        }
        Layout { e: e.to_vec(), summands, offs, dims }
    }

    /// Summand index of copy `c` of `P_i`.
    pub fn summand(&self, i: usize, c: usize) -> usize {
        self.e[..i].iter().sum::<usize>() + c
    }
}

/// `Hom_A(⊕P_i^{e_i}, ⊕P_j^{e'_j})` with a basis in reduced echelon form with
/// respect to the flattened per-vertex matrices, and its radical subspace.
#[derive(Clone, Debug)]
pub struct PHom {
    pub src: Layout,
    pub dst: Layout,
    pub ech: Echelon,
    pub rad: Echelon,
    /// lengths of the flattened blocks per vertex
    pub block_len: Vec<usize>,
}

/// The morphism `P_i -> P_j` given by left multiplication with a path
/// combination `x ∈ e_j A e_i`, placed at summands `(t, s)`.
pub fn placed(alg: &Algebra, src: &Layout, dst: &Layout, t: usize, s: usize, x: &[u32]) -> RepMor {
    let f = alg.field();
    let (i, j) = (src.summands[s], dst.summands[t]);
    let blocks = (0..alg.n())
        .map(|v| {
            let mut m = Mat::zeros(f, dst.dims[v], src.dims[v]);
            for (c, q) in alg.path_basis(i, v).iter().enumerate() {
                let img = alg.mult_elems(j, i, v, x, &alg.reduce_path(q));
                for (r, &y) in img.iter().enumerate() {
                    if y != 0 {
                        m.set(dst.offs[v][t] + r, src.offs[v][s] + c, y);
                    }
                }
            }
            m
        })
        .collect();
    RepMor { blocks }
}

impl PHom {
    pub fn new(alg: &Algebra, src: &[usize], dst: &[usize]) -> Self {
        let f = alg.field();
        let (sl, dl) = (Layout::new(alg, src), Layout::new(alg, dst));
        let block_len: Vec<usize> = (0..alg.n()).map(|v| sl.dims[v] * dl.dims[v]).collect();
        let total: usize = block_len.iter().sum();
        let mut all = vec![];
        let mut rad = vec![];
        for t in 0..dl.summands.len() {
            for s in 0..sl.summands.len() {
                let (i, j) = (sl.summands[s], dl.summands[t]);
                let basis = alg.path_basis(j, i);
                for (k, p) in basis.iter().enumerate() {
                    let mut x = vec![0; basis.len()];
                    x[k] = 1;
                    let v = placed(alg, &sl, &dl, t, s, &x).flatten();
                    if !p.is_empty() {
                        rad.push(v.clone());
                    }
                    all.push(v);
                }
            }
        }
        PHom {
            ech: Echelon::from_vectors(f, total, &all),
            rad: Echelon::from_vectors(f, total, &rad),
            src: sl,
            dst: dl,
            block_len,
        }
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn flat_len(&self) -> usize {
        self.block_len.iter().sum()
    }

    pub fn to_mor(&self, alg: &Algebra, flat: &[u32]) -> RepMor {
        let f = alg.field();
        let mut o = 0;
        let blocks = (0..alg.n())
            .map(|v| {
                let (r, c) = (self.dst.dims[v], self.src.dims[v]);
                let m = Mat::from_vec(f, r, c, flat[o..o + r * c].to_vec());
                o += r * c;
                m
            })
            .collect();
        RepMor { blocks }
    }

    pub fn basis_mor(&self, alg: &Algebra, k: usize) -> RepMor {
        self.to_mor(alg, &self.ech.basis[k])
    }

    pub fn rad_mor(&self, alg: &Algebra, k: usize) -> RepMor {
        self.to_mor(alg, &self.rad.basis[k])
    }

    pub fn combine(&self, alg: &Algebra, c: &[u32]) -> RepMor {
        self.to_mor(alg, &self.ech.combine(c))
    }

    pub fn coords(&self, m: &RepMor) -> Option<Vector> {
        self.ech.coords(&m.flatten())
    }

    pub fn is_radical(&self, m: &RepMor) -> bool {
        self.rad.contains(&m.flatten())
    }
}

/// The permutation isomorphism from the block sum `P^a ⊕ P^b` (all of `a`
/// first) onto the standard layout of `P^{a+b}`.
pub fn sum_perm(alg: &Algebra, a: &[usize], b: &[usize]) -> RepMor {
    let f = alg.field();
    let (la, lb) = (Layout::new(alg, a), Layout::new(alg, b));
    let ab: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let lab = Layout::new(alg, &ab);
    let blocks = (0..alg.n())
        .map(|v| {
            let mut m = Mat::zeros(f, lab.dims[v], la.dims[v] + lb.dims[v]);
            for (k, &i) in la.summands.iter().enumerate() {
                let c = k - la.summand(i, 0);
                let t = lab.summand(i, c);
                for r in 0..alg.pdim(i, v) {
                    m.set(lab.offs[v][t] + r, la.offs[v][k] + r, 1);
                }
            }
            for (k, &i) in lb.summands.iter().enumerate() {
                let c = k - lb.summand(i, 0);
                let t = lab.summand(i, a[i] + c);
                for r in 0..alg.pdim(i, v) {
                    m.set(lab.offs[v][t] + r, la.dims[v] + lb.offs[v][k] + r, 1);
                }
            }
            m
        })
        .collect();
    RepMor { blocks }
}

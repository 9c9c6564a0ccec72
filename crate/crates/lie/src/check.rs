use crate::table::{axpy, LieTable};
use crate::{LieError, Result};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JacobiReport {
    pub checked: usize,
    /// triples touching a truncated bracket
    pub skipped: usize,
    pub residuals: Vec<(usize, usize, usize, Vec<(i64, usize)>)>,
}

impl JacobiReport {
    pub fn pass(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// `[[x, y], z]`, or `None` if any bracket on the way is truncated.
fn double(t: &LieTable, x: usize, y: usize, z: usize, acc: &mut BTreeMap<usize, i64>) -> Option<()> {
    for (c, w) in t.bracket(x, y)? {
        for (d, k) in t.bracket(w, z)? {
            axpy(acc, c * d, k);
        }
    }
    Some(())
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]` over all basis triples `x < y < z`.
pub fn jacobi_check(t: &LieTable) -> JacobiReport {
    let n = t.dim();
    let mut rep = JacobiReport::default();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut acc = BTreeMap::new();
                let ok = double(t, x, y, z, &mut acc)
                    .and_then(|_| double(t, y, z, x, &mut acc))
                    .and_then(|_| double(t, z, x, y, &mut acc));
                if ok.is_none() {
                    rep.skipped += 1;
                    continue;
                }
                rep.checked += 1;
                let v = t.sparse(acc);
                if !v.is_empty() {
                    rep.residuals.push((x, y, z, v));
                }
            }
        }
    }
    rep
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompareReport {
    pub checked: usize,
    pub skipped: usize,
    pub mismatches: Vec<String>,
}

impl CompareReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Entrywise comparison after matching bases by label and degree.
pub fn compare_tables(a: &LieTable, b: &LieTable) -> Result<CompareReport> {
    if a.modulus != b.modulus {
        return Err(LieError::Basis(format!("moduli differ: {} vs {}", a.modulus, b.modulus)));
    }
    if a.dim() != b.dim() || a.roots != b.roots {
        return Err(LieError::Basis(format!("dimensions differ: {} vs {}", a.dim(), b.dim())));
    }
    let index: HashMap<&str, usize> = b.basis.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut map = vec![];
    for (i, l) in a.basis.iter().enumerate() {
        let j = *index.get(l.as_str()).ok_or_else(|| LieError::Basis(format!("{l} missing from the second table")))?;
        if a.degrees[i] != b.degrees[j] {
            return Err(LieError::Basis(format!("{l} has degree {:?} vs {:?}", a.degrees[i], b.degrees[j])));
        }
        map.push(j);
    }
    let mut rep = CompareReport::default();
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            let (u, v) = (a.bracket(i, j), b.bracket(map[i], map[j]));
            match (u, v) {
                (None, None) => rep.skipped += 1,
                (Some(u), Some(v)) => {
                    rep.checked += 1;
                    let mut u: Vec<(i64, usize)> = u.into_iter().map(|(c, k)| (c, map[k])).collect();
                    u.sort_by_key(|t| t.1);
                    if u != v {
                        rep.mismatches.push(format!("[{}, {}]: {:?} vs {:?}", a.basis[i], a.basis[j], u, v));
                    }
                }
                _ => rep.mismatches.push(format!("[{}, {}]: truncated on one side only", a.basis[i], a.basis[j])),
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyReport {
    /// sign of each root vector against the matrix unit of its root
    pub signs: Option<Vec<(String, i64)>>,
    pub reason: String,
}

impl ChevalleyReport {
    pub fn pass(&self) -> bool {
        self.signs.is_some()
    }
}

type Sl = Vec<Vec<i64>>;

fn unit(n: usize, i: usize, j: usize) -> Sl {
    let mut m = vec![vec![0; n]; n];
    m[i][j] = 1;
    m
}

fn commutator(a: &Sl, b: &Sl) -> Sl {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    c
}

/// Matches a table against `sl_{rank+1}`: `h_i -> E_ii - E_{i+1,i+1}` and each
/// root vector to `±` the matrix unit of its degree, searching the signs.
pub fn chevalley_compare(t: &LieTable, rank: usize) -> ChevalleyReport {
    let fail = |r: String| ChevalleyReport { signs: None, reason: r };
    let n = rank + 1;
    let want_roots = rank * (rank + 1);
    if t.rank() != rank {
        return fail(format!("rank {} but type A{rank} needs {rank}", t.rank()));
    }
    if t.roots != want_roots {
        return fail(format!("{} root vectors but type A{rank} has {want_roots} roots", t.roots));
    }
    if t.roots > 20 {
        return fail("too many roots for a sign search".into());
    }
    // degree -> matrix unit position
    let mut pos = vec![];
    let mut at: HashMap<(usize, usize), usize> = HashMap::new();
    for a in 0..t.roots {
        let d = &t.degrees[a];
        let nz: Vec<usize> = (0..rank).filter(|&i| d[i] != 0).collect();
        let (s, e) = match (nz.first(), nz.last()) {
            (Some(&s), Some(&e)) => (s, e),
            _ => return fail(format!("{} has degree 0", t.basis[a])),
        };
        let sign = d[s];
        if sign.abs() != 1 || (s..=e).any(|i| d[i] != sign) {
            return fail(format!("{} has degree {:?}, not a root", t.basis[a], d));
        }
        let ij = if sign > 0 { (s, e + 1) } else { (e + 1, s) };
        if at.insert(ij, a).is_some() {
            return fail(format!("two root vectors of degree {d:?}"));
        }
        pos.push(ij);
    }
    let image = |x: usize| -> Sl {
        if x < t.roots {
            unit(n, pos[x].0, pos[x].1)
        } else {
            let i = x - t.roots;
            let mut m = unit(n, i, i);
            m[i + 1][i + 1] = -1;
            m
        }
    };
    // unsigned commutators in the table basis
    let dim = t.dim();
    let mut comm: BTreeMap<(usize, usize), Vec<(i64, usize)>> = BTreeMap::new();
    for x in 0..dim {
        for y in x + 1..dim {
            let c = commutator(&image(x), &image(y));
            let mut v = vec![];
            for (i, row) in c.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    if i != j && e != 0 {
                        v.push((e, at[&(i, j)]));
                    }
                }
            }
            let mut run = 0;
            for k in 0..rank {
                run += c[k][k];
                if run != 0 {
                    v.push((run, t.roots + k));
                }
            }
            v.sort_by_key(|p| p.1);
            comm.insert((x, y), v);
        }
    }
    let sign = |mask: u32, x: usize| if x < t.roots && mask >> x & 1 == 1 { -1 } else { 1 };
    'mask: for mask in 0..1u32 << t.roots {
        for x in 0..dim {
            for y in x + 1..dim {
                let Some(got) = t.bracket(x, y) else {
                    return fail(format!("[{}, {}] is truncated", t.basis[x], t.basis[y]));
                };
                let s = sign(mask, x) * sign(mask, y);
                let want: Vec<(i64, usize)> = comm[&(x, y)]
                    .iter()
                    .map(|&(c, w)| (t.norm(s * c * sign(mask, w)), w))
                    .filter(|p| p.0 != 0)
                    .collect();
                if got != want {
                    continue 'mask;
                }
            }
        }
        let signs = (0..t.roots).map(|a| (t.basis[a].clone(), sign(mask, a))).collect();
        return ChevalleyReport { signs: Some(signs), reason: format!("matches sl{n}") };
    }
    fail(format!("no sign choice matches sl{n}"))
}

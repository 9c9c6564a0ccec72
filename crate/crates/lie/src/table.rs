use crate::{LieError, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Exact,
    Tri,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Exact => "exact",
            Side::Tri => "tri",
        }
    }

    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "exact" => Some(Side::Exact),
            "tri" => Some(Side::Tri),
            _ => None,
        }
    }
}

/// Where a table came from. `q == None` marks a classical limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub side: Side,
    pub q: Option<u32>,
    pub window: Vec<usize>,
}

/// Structure constants on root vectors `u_X` followed by Cartan elements `h_i`.
///
/// Coefficients live in `Z/modulus`, or in `Z` when the modulus is 0. Only
/// `i < j` is stored; `[j, i] = -[i, j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTable {
    pub modulus: u64,
    pub provenance: Provenance,
    pub basis: Vec<String>,
    pub degrees: Vec<Vec<i64>>,
    pub roots: usize,
    pub brackets: BTreeMap<(usize, usize), Vec<(i64, usize)>>,
    pub truncated: BTreeSet<(usize, usize)>,
}

/// Adds `c * e_k` into a sorted sparse vector.
pub(crate) fn axpy(v: &mut BTreeMap<usize, i64>, c: i64, k: usize) {
    *v.entry(k).or_insert(0) += c;
}

impl LieTable {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.basis.len() - self.roots
    }

    pub fn norm(&self, c: i64) -> i64 {
        if self.modulus == 0 {
            c
        } else {
            c.rem_euclid(self.modulus as i64)
        }
    }

    pub(crate) fn sparse(&self, v: BTreeMap<usize, i64>) -> Vec<(i64, usize)> {
        v.into_iter().map(|(k, c)| (self.norm(c), k)).filter(|t| t.0 != 0).collect()
    }

    pub fn is_truncated(&self, i: usize, j: usize) -> bool {
        self.truncated.contains(&(i.min(j), i.max(j)))
    }

    /// `[b_i, b_j]`, or `None` when it leaves the window.
    pub fn bracket(&self, i: usize, j: usize) -> Option<Vec<(i64, usize)>> {
        if i == j {
            return Some(vec![]);
        }
        if self.is_truncated(i, j) {
            return None;
        }
        let v = self.brackets.get(&(i.min(j), i.max(j))).cloned().unwrap_or_default();
        Some(if i < j { v } else { v.into_iter().map(|(c, k)| (self.norm(-c), k)).collect() })
    }

    /// Coefficients reduced modulo `m > 0`.
    pub fn reduce(&self, m: u64) -> LieTable {
        let mut t = self.clone();
        t.modulus = m;
        t.brackets = self
            .brackets
            .iter()
            .map(|(&k, v)| (k, v.iter().map(|&(c, b)| (t.norm(c), b)).filter(|x| x.0 != 0).collect::<Vec<_>>()))
            .filter(|(_, v)| !v.is_empty())
            .collect();
        t
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "modulus {}", self.modulus);
        let q = self.provenance.q.map_or("limit".to_string(), |q| q.to_string());
        let w: Vec<String> = self.provenance.window.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "provenance {} q={} window={}", self.provenance.side.name(), q, w.join(","));
        let _ = writeln!(s, "basis {}", self.basis.join(" "));
        for (i, d) in self.degrees.iter().enumerate() {
            let d: Vec<String> = d.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(s, "degree {i} : {}", d.join(" "));
        }
        for (&(i, j), v) in &self.brackets {
            let terms: Vec<String> = v.iter().map(|(c, k)| format!("{c}*{k}")).collect();
            let _ = writeln!(s, "bracket {i} {j} : {}", terms.join(" "));
        }
        for &(i, j) in &self.truncated {
            let _ = writeln!(s, "truncated {i} {j}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<LieTable> {
        let err = |n: usize, m: &str| LieError::Parse(format!("line {}: {m}", n + 1));
        let mut modulus = None;
        let mut prov = None;
        let mut basis: Option<Vec<String>> = None;
        let mut degrees: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        let mut brackets = BTreeMap::new();
        let mut truncated = BTreeSet::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
            let int = |s: &str| s.parse::<i64>().map_err(|_| err(n, &format!("bad integer {s:?}")));
            let idx = |s: &str| s.parse::<usize>().map_err(|_| err(n, &format!("bad index {s:?}")));
            match head {
                "modulus" => modulus = Some(rest.trim().parse::<u64>().map_err(|_| err(n, "bad modulus"))?),
                "provenance" => {
                    let f: Vec<&str> = rest.split_whitespace().collect();
                    if f.len() != 3 {
                        return Err(err(n, "provenance needs side, q and window"));
                    }
                    let side = Side::parse(f[0]).ok_or_else(|| err(n, "unknown side"))?;
                    let q = f[1].strip_prefix("q=").ok_or_else(|| err(n, "expected q="))?;
                    let q = if q == "limit" { None } else { Some(q.parse().map_err(|_| err(n, "bad q"))?) };
                    let w = f[2].strip_prefix("window=").ok_or_else(|| err(n, "expected window="))?;
                    let window = w.split(',').map(|c| c.parse().map_err(|_| err(n, "bad window"))).collect::<Result<_>>()?;
                    prov = Some(Provenance { side, q, window });
                }
                "basis" => basis = Some(rest.split_whitespace().map(String::from).collect()),
                "degree" => {
                    let (i, d) = rest.split_once(':').ok_or_else(|| err(n, "expected ':'"))?;
                    let d = d.split_whitespace().map(int).collect::<Result<Vec<_>>>()?;
                    degrees.insert(idx(i.trim())?, d);
                }
                "bracket" => {
                    let (ij, terms) = rest.split_once(':').ok_or_else(|| err(n, "expected ':'"))?;
                    let ij: Vec<&str> = ij.split_whitespace().collect();
                    if ij.len() != 2 {
                        return Err(err(n, "bracket needs two indices"));
                    }
                    let (i, j) = (idx(ij[0])?, idx(ij[1])?);
                    if i >= j {
                        return Err(err(n, "bracket indices must increase"));
                    }
                    let mut v = vec![];
                    for t in terms.split_whitespace() {
                        let (c, k) = t.split_once('*').ok_or_else(|| err(n, "term must be c*k"))?;
                        v.push((int(c)?, idx(k)?));
                    }
                    if brackets.insert((i, j), v).is_some() {
                        return Err(err(n, "duplicate bracket"));
                    }
                }
                "truncated" => {
                    let ij: Vec<&str> = rest.split_whitespace().collect();
                    if ij.len() != 2 {
                        return Err(err(n, "truncated needs two indices"));
                    }
                    let (i, j) = (idx(ij[0])?, idx(ij[1])?);
                    truncated.insert((i.min(j), i.max(j)));
                }
                _ => return Err(err(n, &format!("unknown directive {head:?}"))),
            }
        }
        let modulus = modulus.ok_or_else(|| LieError::Parse("missing modulus".into()))?;
        let provenance = prov.ok_or_else(|| LieError::Parse("missing provenance".into()))?;
        let basis = basis.ok_or_else(|| LieError::Parse("missing basis".into()))?;
        let roots = basis.iter().take_while(|b| !is_cartan_label(b)).count();
        if basis[roots..].iter().any(|b| !is_cartan_label(b)) {
            return Err(LieError::Parse("Cartan labels must come last".into()));
        }
        let degrees: Vec<Vec<i64>> = (0..basis.len())
            .map(|i| degrees.remove(&i).ok_or_else(|| LieError::Parse(format!("missing degree of {i}"))))
            .collect::<Result<_>>()?;
        let nb = basis.len();
        for (&(i, j), v) in &brackets {
            if j >= nb || v.iter().any(|t| t.1 >= nb) {
                return Err(LieError::Parse(format!("bracket {i} {j} indexes outside the basis")));
            }
            if truncated.contains(&(i, j)) {
                return Err(LieError::Parse(format!("bracket {i} {j} is also truncated")));
            }
        }
        Ok(LieTable { modulus, provenance, basis, degrees, roots, brackets, truncated })
    }
}

pub fn cartan_label(i: usize) -> String {
    format!("h{}", i + 1)
}

fn is_cartan_label(s: &str) -> bool {
    s.strip_prefix('h').is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
}

//! The `hall2p` command line. [`run`] returns the exit code and the report
//! text so it can be driven in-process.

use clap::{Args, Parser, Subcommand};
use hall2p_complex2::{aut_orders, Catalog, Complex2, ComplexError, Env, KsDecomp, Pdvp};
use hall2p_hall::{
    congruence_sweep, ext1_classes, hall_number_brute, hall_number_rp, structural_suite, triangle_count_brute,
    triangle_counts, HallCtx, HallError,
};
use hall2p_lie::{build_at, chevalley_compare, classical_table, compare_tables, jacobi_check, LieError, LieTable, Side};
use hall2p_motivic::{
    b_commutation_check, count_series, interpolate, lie_limit_check, regular_check, to_t, Counter, MotivicError, Obj,
};
use hall2p_quiver::{Algebra, EulerForm};
use sha2::{Digest, Sha256};
use std::path::PathBuf;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "hall2p", version, about = "Hall numbers, triangle counts and Lie tables of two-periodic complexes")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// algebra spec file
    algebra: PathBuf,
    /// pdvp window: 2n comma-separated entries (e1 then e0) or one broadcast integer
    #[arg(long)]
    cap: Option<String>,
    /// field size; defaults to the field line of the algebra file
    #[arg(long)]
    q: Option<u32>,
    /// enumeration cap in points (overrides HALL2P_MAX_ENUM)
    #[arg(long)]
    max_enum: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// vertices, arrows, relations, Cartan matrix and Euler form
    Info {
        /// algebra spec file
        algebra: PathBuf,
    },
    /// certified catalog of indecomposable radical complexes
    Enumerate {
        #[command(flatten)]
        c: Common,
        /// also run the structural checks on every class in the window
        #[arg(long)]
        check: bool,
        /// point budget per structural check
        #[arg(long, default_value_t = 4096)]
        budget: u64,
        /// pairwise checks only on pairs with at most this many summands
        #[arg(long, default_value_t = 3)]
        pair_summands: usize,
    },
    /// Hall numbers g^Z_{XY}, by subobjects and by Riedtmann-Peng
    Hall {
        #[command(flatten)]
        c: Common,
        /// complex id of X
        #[arg(long)]
        x: String,
        /// complex id of Y
        #[arg(long)]
        y: String,
    },
    /// triangle counts F^Z_{XY}
    Triangles {
        #[command(flatten)]
        c: Common,
        /// complex id of X
        #[arg(long)]
        x: String,
        /// complex id of Y
        #[arg(long)]
        y: String,
        /// recount every radical Z by enumerating all triangles
        #[arg(long)]
        brute: bool,
    },
    /// g = RP, g ≡ F mod (q - 1) and the strata identities over the window
    Congruence {
        #[command(flatten)]
        c: Common,
    },
    /// build a structure-constant table; --q 0 gives the classical table
    Lie {
        #[command(flatten)]
        c: Common,
        /// exact, tri or both
        #[arg(long, default_value = "tri")]
        side: String,
        /// output path; with --side both, `.exact` and `.tri` are appended
        #[arg(long)]
        out: Option<PathBuf>,
        /// primes for the classical table
        #[arg(long, default_value = "2,3,5")]
        primes: String,
    },
    /// Jacobi identity on a table file
    Jacobi {
        /// table file
        table: PathBuf,
    },
    /// entrywise comparison of two table files
    Compare {
        a: PathBuf,
        b: PathBuf,
    },
    /// match a table against sl_2 or sl_3
    Chevalley {
        /// table file
        table: PathBuf,
        /// A1 or A2
        #[arg(long = "type")]
        kind: String,
    },
    /// counting polynomials, b relations and classical limits
    Motivic {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "2,3,5,7")]
        primes: String,
        /// skip the classical-limit comparison with Lie tables
        #[arg(long)]
        no_lie: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Capacity(String),
    #[error("internal consistency: {0}")]
    Internal(String),
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::Capacity { .. } => CliError::Capacity(e.to_string()),
            ComplexError::Internal(m) => CliError::Internal(m),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<HallError> for CliError {
    fn from(e: HallError) -> Self {
        match e {
            HallError::Complex(c) => c.into(),
            HallError::Internal(m) => CliError::Internal(m),
        }
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::Hall(h) => h.into(),
            LieError::Limit(m) => CliError::Internal(m),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<MotivicError> for CliError {
    fn from(e: MotivicError) -> Self {
        match e {
            MotivicError::Complex(c) => c.into(),
            MotivicError::Hall(h) => h.into(),
            MotivicError::Lie(l) => l.into(),
            MotivicError::Poisoned(m) => CliError::Internal(m),
            MotivicError::Input(m) => CliError::Usage(m),
        }
    }
}

#[derive(Default)]
struct Report {
    head: Vec<String>,
    lines: Vec<String>,
    violations: Vec<String>,
    checked: usize,
    skipped: usize,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn render(&self) -> String {
        let mut s = format!("hall2p {VERSION}\n");
        for l in self.head.iter().chain(&self.lines) {
            s += l;
            s.push('\n');
        }
        for v in &self.violations {
            s += &format!("VIOLATION {v}\n");
        }
        let r = if self.violations.is_empty() { "pass" } else { "fail" };
        s += &format!("RESULT {r} checked={} skipped={}\n", self.checked, self.skipped);
        s
    }
}

/// Run a command line; `args[0]` is the program name.
pub fn run(args: &[String]) -> (i32, String) {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let mut rep = Report::default();
    match dispatch(cli.verb, &mut rep) {
        Ok(()) => (if rep.violations.is_empty() { 0 } else { 1 }, rep.render()),
        Err(e) => {
            let code = if matches!(e, CliError::Internal(_)) { 1 } else { 2 };
            let mut s = rep.render();
            // replace the footer: the run did not complete
            s.truncate(s.rfind("RESULT").unwrap_or(s.len()));
            s += &format!("ERROR {e}\nRESULT fail checked={} skipped={}\n", rep.checked, rep.skipped);
            (code, s)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &PathBuf) -> Result<Algebra, CliError> {
    Algebra::parse(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn algebra_hash(alg: &Algebra) -> String {
    let d = Sha256::digest(alg.spec().to_text().as_bytes());
    d[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn max_enum(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var("HALL2P_MAX_ENUM") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("HALL2P_MAX_ENUM=`{s}` is not an integer"))),
        Err(_) => Ok(hall2p_ffla::DEFAULT_CAP),
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("{what}: `{x}` is not a number"))))
        .collect()
}

fn parse_cap(s: &str, n: usize) -> Result<Pdvp, CliError> {
    let v: Vec<usize> = parse_list(s, "--cap")?;
    match v.len() {
        1 => Ok(Pdvp { e1: vec![v[0]; n], e0: vec![v[0]; n] }),
        l if l == 2 * n => Ok(Pdvp { e1: v[..n].to_vec(), e0: v[n..].to_vec() }),
        l => Err(CliError::Usage(format!("--cap needs 1 or {} entries, got {l}", 2 * n))),
    }
}

fn cap_text(c: &Pdvp) -> String {
    let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    format!("e1=[{}];e0=[{}]", j(&c.e1), j(&c.e0))
}

struct Setup {
    alg: Algebra,
    cap: Option<Pdvp>,
    max: u64,
}

impl Setup {
    fn new(c: &Common, rep: &mut Report) -> Result<Setup, CliError> {
        let alg = load_algebra(&c.algebra)?;
        let cap = c.cap.as_deref().map(|s| parse_cap(s, alg.n())).transpose()?;
        let max = max_enum(c.max_enum)?;
        rep.head.push(format!("algebra {} hash={}", c.algebra.display(), algebra_hash(&alg)));
        let alg = match c.q {
            Some(0) | None => alg,
            Some(p) => alg.with_prime(p).map_err(|e| CliError::Usage(e.to_string()))?,
        };
        let mut caps = format!("max-enum={max}");
        if let Some(cp) = &cap {
            caps = format!("cap {} {caps}", cap_text(cp));
        }
        rep.head.push(caps);
        Ok(Setup { alg, cap, max })
    }

    fn env(&self) -> Env {
        Env::new(self.alg.clone()).with_cap(self.max)
    }

    fn cap(&self, default: impl FnOnce() -> Pdvp) -> Pdvp {
        self.cap.clone().unwrap_or_else(default)
    }
}

fn dispatch(verb: Verb, rep: &mut Report) -> Result<(), CliError> {
    match verb {
        Verb::Info { algebra } => info(&algebra, rep),
        Verb::Enumerate { c, check, budget, pair_summands } => {
            rep.head.push("verb enumerate".into());
            enumerate(&c, check.then_some((budget, pair_summands)), rep)
        }
        Verb::Hall { c, x, y } => {
            rep.head.push("verb hall".into());
            hall(&c, &x, &y, rep)
        }
        Verb::Triangles { c, x, y, brute } => {
            rep.head.push("verb triangles".into());
            triangles(&c, &x, &y, brute, rep)
        }
        Verb::Congruence { c } => {
            rep.head.push("verb congruence".into());
            congruence(&c, rep)
        }
        Verb::Lie { c, side, out, primes } => {
            rep.head.push("verb lie".into());
            lie(&c, &side, out.as_ref(), &primes, rep)
        }
        Verb::Jacobi { table } => {
            rep.head.push("verb jacobi".into());
            let t = load_table(&table)?;
            let j = jacobi_check(&t);
            rep.line(format!("table {} dim={} modulus={}", table.display(), t.dim(), t.modulus));
            rep.line(format!("skipped-by-truncation {}", j.skipped));
            rep.checked += j.checked;
            rep.skipped += j.skipped;
            for (x, y, z, v) in &j.residuals {
                rep.violations.push(format!("[[{0},{1}],{2}] + cyclic = {3}", t.basis[*x], t.basis[*y], t.basis[*z], fmt_vec(&t, v)));
            }
            Ok(())
        }
        Verb::Compare { a, b } => {
            rep.head.push("verb compare".into());
            let (ta, tb) = (load_table(&a)?, load_table(&b)?);
            let c = compare_tables(&ta, &tb)?;
            rep.line(format!("tables {} {} dim={}", a.display(), b.display(), ta.dim()));
            rep.line(format!("skipped-by-truncation {}", c.skipped));
            rep.checked += c.checked;
            rep.skipped += c.skipped;
            rep.violations.extend(c.mismatches);
            Ok(())
        }
        Verb::Chevalley { table, kind } => {
            rep.head.push("verb chevalley".into());
            let rank = match kind.as_str() {
                "A1" => 1,
                "A2" => 2,
                k => return Err(CliError::Usage(format!("--type must be A1 or A2, got `{k}`"))),
            };
            let t = load_table(&table)?;
            let c = chevalley_compare(&t, rank);
            rep.checked += 1;
            rep.line(format!("table {} type {kind}", table.display()));
            match &c.signs {
                Some(signs) => {
                    for (label, s) in signs {
                        rep.line(format!("sign {label} {}", if *s > 0 { "+" } else { "-" }));
                    }
                }
                None => rep.violations.push(c.reason.clone()),
            }
            Ok(())
        }
        Verb::Motivic { c, primes, no_lie } => {
            rep.head.push("verb motivic".into());
            motivic(&c, &primes, !no_lie, rep)
        }
    }
}

fn fmt_vec(t: &LieTable, v: &[(i64, usize)]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(c, k)| format!("{c}*{}", t.basis[*k])).collect::<Vec<_>>().join(" + ")
}

fn load_table(p: &PathBuf) -> Result<LieTable, CliError> {
    LieTable::parse(&read(p)?).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
}

fn info(path: &PathBuf, rep: &mut Report) -> Result<(), CliError> {
    let alg = load_algebra(path)?;
    rep.head.push("verb info".into());
    rep.head.push(format!("algebra {} hash={}", path.display(), algebra_hash(&alg)));
    let names: Vec<&str> = (0..alg.n()).map(|v| alg.vertex_name(v)).collect();
    rep.line(format!("field {}", alg.q()));
    rep.line(format!("vertices {}", names.join(" ")));
    for a in alg.arrows() {
        rep.line(format!("arrow {} {} {}", a.name, names[a.src], names[a.dst]));
    }
    rep.line(format!("relations {}", alg.spec().relations.len()));
    for row in alg.cartan() {
        rep.line(format!("cartan {}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")));
    }
    let e = EulerForm::new(&alg).map_err(|e| CliError::Usage(e.to_string()))?;
    let n = alg.n();
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| {
                let (mut a, mut b) = (vec![0; n], vec![0; n]);
                a[i] = 1;
                b[j] = 1;
                e.eval(&a, &b).to_string()
            })
            .collect();
        rep.line(format!("euler {}", row.join(" ")));
    }
    Ok(())
}

fn catalog(env: &Env, cap: &Pdvp, rep: &mut Report) -> Result<Catalog, CliError> {
    let cat = Catalog::build(env, cap)?;
    for (a, e) in cat.entries.iter().enumerate() {
        rep.line(format!("T{a} = {}", e.x.serialize()));
    }
    Ok(cat)
}

fn parse_obj(env: &Env, s: &str) -> Result<Complex2, CliError> {
    Ok(Complex2::parse(&env.alg, s)?)
}

fn enumerate(c: &Common, check: Option<(u64, usize)>, rep: &mut Report) -> Result<(), CliError> {
    let s = Setup::new(c, rep)?;
    let env = s.env();
    let cap = s.cap(|| Pdvp { e1: vec![1; s.alg.n()], e0: vec![1; s.alg.n()] });
    rep.head.push(format!("q={}", env.q()));
    let cat = catalog(&env, &cap, rep)?;
    for (a, e) in cat.entries.iter().enumerate() {
        let o = aut_orders(&env, &e.x)?;
        rep.line(format!("entry T{a} pdvp={} aut_c={} aut_k={}", e.x.pdvp, o.aut_c, o.aut_k));
    }
    for (e, n) in &cat.counts {
        rep.checked += 1;
        rep.line(format!("mass {e} points={n}"));
    }
    rep.line(format!("{} indecomposables, mass formula certified", cat.entries.len()));
    if let Some((budget, pairs)) = check {
        let ctx = HallCtx::new(&env, &cat);
        let r = structural_suite(&ctx, &cap, budget, pairs)?;
        rep.line(format!("structural checked={} skipped={}", r.checked, r.skipped));
        rep.checked += r.checked;
        rep.skipped += r.skipped;
        rep.violations.extend(r.violations);
    }
    Ok(())
}

fn pair_setup(c: &Common, x: &str, y: &str, rep: &mut Report) -> Result<(Setup, Env, Complex2, Complex2, Pdvp), CliError> {
    let s = Setup::new(c, rep)?;
    let env = s.env();
    rep.head.push(format!("q={}", env.q()));
    let (x, y) = (parse_obj(&env, x)?, parse_obj(&env, y)?);
    let cap = s.cap(|| x.pdvp.add(&y.pdvp));
    if !x.pdvp.add(&y.pdvp).le(&cap) {
        return Err(CliError::Usage(format!("pdvp {} + {} exceeds the cap", x.pdvp, y.pdvp)));
    }
    rep.line(format!("X = {}", x.serialize()));
    rep.line(format!("Y = {}", y.serialize()));
    Ok((s, env, x, y, cap))
}

fn z_name(cat: &Catalog, env: &Env, key: &KsDecomp) -> String {
    format!("{} = {}", cat.name(key), cat.realize(env, key).serialize())
}

fn hall(c: &Common, x: &str, y: &str, rep: &mut Report) -> Result<(), CliError> {
    let (_, env, x, y, cap) = pair_setup(c, x, y, rep)?;
    let cat = catalog(&env, &cap, rep)?;
    let ctx = HallCtx::new(&env, &cat);
    let ext = ext1_classes(&ctx, &x, &y)?;
    for (key, &n) in &ext {
        let z = cat.realize(&env, key);
        let rp = hall_number_rp(&ctx, &x, &y, key, n)?;
        let brute = match hall_number_brute(&ctx, &x, &y, &z) {
            Ok(g) => Some(g),
            Err(HallError::Complex(ComplexError::Capacity { .. })) => None,
            Err(e) => return Err(e.into()),
        };
        let shown = brute.map_or("skipped".to_string(), |g| g.to_string());
        rep.line(format!("Z {} ext={n} g_brute={shown} g_rp={rp}", z_name(&cat, &env, key)));
        match brute {
            Some(g) => {
                rep.checked += 1;
                if g != rp {
                    rep.violations.push(format!("Z {}: brute g={g} but Riedtmann-Peng g={rp}", z.serialize()));
                }
            }
            None => rep.skipped += 1,
        }
    }
    Ok(())
}

fn triangles(c: &Common, x: &str, y: &str, brute: bool, rep: &mut Report) -> Result<(), CliError> {
    let (_, env, x, y, cap) = pair_setup(c, x, y, rep)?;
    let cat = catalog(&env, &cap, rep)?;
    let ctx = HallCtx::new(&env, &cat);
    let m = env.q() - 1;
    for (key, t) in triangle_counts(&ctx, &x, &y)? {
        let res = t.residue.map_or("undefined".to_string(), |r| r.to_string());
        rep.line(format!(
            "Z {} hom_k={} w={} F={} ratio={} residue={res}",
            z_name(&cat, &env, &key),
            t.hom_k,
            t.w,
            t.orbits,
            t.ratio
        ));
        rep.checked += 1;
        if let Some(r) = t.residue {
            if r as u64 != t.orbits % m as u64 {
                rep.violations.push(format!("{}: F={} but residue {r} mod {m}", cat.name(&key), t.orbits));
            }
        }
        if brute {
            match triangle_count_brute(&ctx, &x, &y, &key) {
                Ok(b) => {
                    rep.checked += 1;
                    rep.line(format!("  brute F={b}"));
                    if b != t.orbits {
                        rep.violations.push(format!("{}: brute F={b} but F={}", cat.name(&key), t.orbits));
                    }
                }
                Err(HallError::Complex(ComplexError::Capacity { .. })) => rep.skipped += 1,
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(())
}

fn congruence(c: &Common, rep: &mut Report) -> Result<(), CliError> {
    let s = Setup::new(c, rep)?;
    let env = s.env();
    let cap = s.cap(|| Pdvp { e1: vec![1; s.alg.n()], e0: vec![1; s.alg.n()] });
    rep.head.push(format!("q={}", env.q()));
    let cat = catalog(&env, &cap, rep)?;
    let ctx = HallCtx::new(&env, &cat);
    let r = congruence_sweep(&ctx, &cap)?;
    let mut rows: Vec<String> = r
        .triples
        .iter()
        .map(|t| {
            let g = t.g_brute.map_or("skipped".to_string(), |g| g.to_string());
            let (f, res) = match &t.tri {
                Some(tc) => (tc.orbits.to_string(), tc.residue.map_or("undefined".into(), |x| x.to_string())),
                None => ("-".into(), "-".into()),
            };
            format!("T{} T{} {} ext={} hom_k={} g={g} rp={} F={f} residue={res}", t.x, t.y, cat.name(&t.z), t.ext, t.hom_k, t.g_rp)
        })
        .collect();
    rows.sort();
    rep.line(format!("{} triples", rows.len()));
    rep.lines.extend(rows);
    rep.checked += r.checked;
    rep.skipped += r.skipped;
    rep.violations.extend(r.violations);
    Ok(())
}

fn lie(c: &Common, side: &str, out: Option<&PathBuf>, primes: &str, rep: &mut Report) -> Result<(), CliError> {
    let sides = match side {
        "both" => vec![Side::Exact, Side::Tri],
        s => vec![Side::parse(s).ok_or_else(|| CliError::Usage(format!("--side must be exact, tri or both, got `{s}`")))?],
    };
    let s = Setup::new(c, rep)?;
    let cap = s.cap(|| Pdvp { e1: vec![1; s.alg.n()], e0: vec![1; s.alg.n()] });
    let mut tables = vec![];
    for &sd in &sides {
        let t = if c.q == Some(0) {
            let ps: Vec<u32> = parse_list(primes, "--primes")?;
            rep.head.push(format!("classical limit over primes {primes}"));
            let per = ps.iter().map(|&p| build_at(&s.alg, p, &cap, sd)).collect::<Result<Vec<_>, _>>()?;
            classical_table(&per)?
        } else {
            let q = s.alg.q();
            rep.head.push(format!("q={q}"));
            let env = s.env();
            hall2p_lie::build_in(&env, &cap, sd)?.reduce(q as u64 - 1)
        };
        rep.line(format!("side {} dim={} rank={} roots={} truncated={}", sd.name(), t.dim(), t.rank(), t.roots, t.truncated.len()));
        rep.skipped += t.truncated.len();
        tables.push((sd, t));
    }
    rep.head.dedup();
    if let [(_, a), (_, b)] = &tables[..] {
        let r = compare_tables(a, b)?;
        rep.checked += r.checked;
        rep.skipped += r.skipped;
        rep.violations.extend(r.mismatches);
    }
    for (sd, t) in &tables {
        match out {
            Some(p) => {
                let path = if tables.len() > 1 { PathBuf::from(format!("{}.{}", p.display(), sd.name())) } else { p.clone() };
                std::fs::write(&path, t.to_text()).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                rep.line(format!("wrote {}", path.display()));
            }
            None => rep.lines.extend(t.to_text().lines().map(String::from)),
        }
    }
    Ok(())
}

fn motivic(c: &Common, primes: &str, with_lie: bool, rep: &mut Report) -> Result<(), CliError> {
    let s = Setup::new(c, rep)?;
    let ps: Vec<u32> = parse_list(primes, "--primes")?;
    if ps.len() < 4 {
        return Err(CliError::Usage("--primes needs at least 4 primes".into()));
    }
    rep.head.push(format!("primes {primes}"));
    let n = s.alg.n();
    let cap = s.cap(|| Pdvp { e1: vec![1; n], e0: vec![1; n] });
    let env = Env::new(s.alg.with_prime(ps[0]).map_err(ComplexError::from)?).with_cap(s.max);
    let cat = Catalog::build(&env, &cap)?;
    let objs: Vec<Obj> = cat.entries.iter().map(|e| Obj::Id(e.x.serialize())).collect();
    for (a, o) in objs.iter().enumerate() {
        rep.line(format!("T{a} = {}", o.label()));
    }
    let bound = ps.len() - 2;
    for (a, x) in objs.iter().enumerate() {
        for (b, y) in objs.iter().enumerate() {
            for (name, ctr) in [
                ("Hom_C", Counter::HomC(x.clone(), y.clone())),
                ("Hom_K", Counter::HomK(x.clone(), y.clone())),
                ("Ext^1", Counter::Ext1(x.clone(), y.clone())),
            ] {
                let series = count_series(&s.alg, &ctr, &ps, s.max)?;
                let q = interpolate(&series, bound)?;
                let d = ctr.dim(&env)?.unwrap();
                rep.checked += 1;
                rep.line(format!("|{name}(T{a}, T{b})| = {} -> {}", q, to_t(&q)));
                if !q.verified {
                    rep.violations.push(q.warning.clone().unwrap_or_default());
                } else if q.monomial_degree() != Some(d) {
                    rep.violations.push(format!("|{name}(T{a}, T{b})| fits {q}, dimension {d}"));
                }
            }
        }
    }
    let window: Vec<Vec<usize>> = Pdvp::all_below(&Pdvp { e1: cap.e1.clone(), e0: vec![0; n] }).into_iter().map(|e| e.e1).collect();
    for (a, x) in objs.iter().enumerate() {
        for p in &window {
            for q in &window {
                let r = b_commutation_check(&s.alg, p, q, x, &ps, s.max)?;
                rep.checked += 1;
                rep.line(format!("b P{p:?} Q{q:?} past T{a}: exponent {}", r.exponent));
                rep.violations.extend(r.violations.iter().map(|v| format!("T{a}: {v}")));
                rep.violations.extend(r.poisoned.iter().map(|v| format!("T{a}: poisoned fit {v}")));
            }
        }
    }
    for (i, p) in window.iter().enumerate() {
        for q in &window[i..] {
            let r = regular_check(&s.alg, p, q, &ps, s.max)?;
            rep.checked += 1;
            rep.violations.extend(r.violations);
            rep.violations.extend(r.poisoned);
        }
    }
    if with_lie {
        let r = lie_limit_check(&s.alg, &cap, Side::Tri, &ps)?;
        rep.line(format!("classical limits checked={}", r.checked));
        rep.checked += r.checked;
        rep.violations.extend(r.mismatches);
        rep.violations.extend(r.poisoned);
    }
    Ok(())
}

use hall2p_complex2::*;
use hall2p_hall::*;
use hall2p_quiver::Algebra;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let text = std::fs::read_to_string(&args[1]).unwrap();
    let p: u32 = args[2].parse().unwrap();
    let c: usize = args[3].parse().unwrap();
    let env = Env::new(Algebra::parse(&text).unwrap().with_prime(p).unwrap());
    let n = env.alg.n();
    let cap = Pdvp { e1: vec![c; n], e0: vec![c; n] };
    let t = Instant::now();
    let cat = Catalog::build(&env, &cap).unwrap();
    println!("catalog {} in {:?}", cat.entries.len(), t.elapsed());
    let ctx = HallCtx::new(&env, &cat);
    let r = congruence_sweep(&ctx, &cap).unwrap();
    println!("sweep: {} triples checked={} skipped={} violations={} in {:?}", r.triples.len(), r.checked, r.skipped, r.violations.len(), t.elapsed());
    for v in r.violations.iter().take(20) {
        println!("  {v}");
    }
    if args.len() > 4 {
        for t in &r.triples {
            println!("T{} T{} {} ext={} g={:?}/{} F={:?}", t.x, t.y, cat.name(&t.z), t.ext, t.g_brute, t.g_rp, t.tri.as_ref().map(|t| (t.orbits, t.w, t.ratio)));
        }
    }
}

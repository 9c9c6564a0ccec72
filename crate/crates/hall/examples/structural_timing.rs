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
    let ctx = HallCtx::new(&env, &cat);
    let budget: u64 = args.get(4).map_or(1 << 16, |s| s.parse().unwrap());
    let pairs: usize = args.get(5).map_or(3, |s| s.parse().unwrap());
    let r = structural_suite(&ctx, &cap, budget, pairs).unwrap();
    println!("checked={} skipped={} violations={} in {:?}", r.checked, r.skipped, r.violations.len(), t.elapsed());
    for v in r.violations.iter().take(10) {
        println!("  {v}");
    }
}

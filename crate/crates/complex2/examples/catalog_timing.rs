use hall2p_complex2::*;
use hall2p_quiver::Algebra;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let text = std::fs::read_to_string(&args[1]).unwrap();
    let p: u32 = args[2].parse().unwrap();
    let c: usize = args[3].parse().unwrap();
    let env = Env::new(Algebra::parse(&text).unwrap().with_prime(p).unwrap());
    let n = env.alg.n();
    let t = Instant::now();
    let cat = Catalog::build(&env, &Pdvp { e1: vec![c; n], e0: vec![c; n] }).unwrap();
    println!("{} entries in {:?}", cat.entries.len(), t.elapsed());
    for e in &cat.entries {
        println!("{} {}", e.x.pdvp, e.label);
    }
}

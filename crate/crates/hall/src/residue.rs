use num_integer::Integer;
use num_rational::Ratio;

pub type Frac = Ratio<i128>;

/// `n/d mod m`, defined when `gcd(d, m) = 1`.
pub fn mod_residue(r: &Frac, m: u32) -> Option<u32> {
    let m = m as i128;
    if m == 1 {
        return Some(0);
    }
    let (n, d) = (r.numer().rem_euclid(m), r.denom().rem_euclid(m));
    let e = d.extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some((n * e.x.rem_euclid(m)).rem_euclid(m) as u32)
}

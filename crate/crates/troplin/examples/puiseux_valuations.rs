//! Exact Puiseux arithmetic and the valuation map: sums, products, and the
//! way coordinatewise valuations turn exact vectors into tropical ones.

use troplin::puiseux::{PuiseuxPoly, PuiseuxVector};

fn main() -> troplin::Result<()> {
    let p: PuiseuxPoly = "1 - 2*t + 1/3*t^(5/2)".parse()?;
    let q: PuiseuxPoly = "t^-1 + 1".parse()?;
    println!("p = {p}, valuation {}", p.valuation());
    println!("q = {q}, valuation {}", q.valuation());
    println!("p * q = {}", &p * &q);
    println!("val(p * q) = val(p) + val(q): {}", (&p * &q).valuation());

    // cancellation can push a sum's valuation above the minimum
    let r: PuiseuxPoly = "-1 + t^3".parse()?;
    println!("p + r = {} with valuation {}", &p + &r, (&p + &r).valuation());

    let v = PuiseuxVector::new(vec![p, q, PuiseuxPoly::zero()])?;
    println!("coordinatewise valuations of ({v}): {}", v.tropicalize());

    let w = PuiseuxVector::new(vec![
        "t^2".parse()?,
        "t^3".parse()?,
        "5".parse()?,
    ])?;
    println!("dot with ({w}): {}", v.dot(&w)?);
    Ok(())
}

//! Dense univariate polynomials over a field, as coefficient vectors
//! (index = degree, no trailing zeros).

use super::{Field, Ring};

fn trim<F: Field>(p: &mut Vec<F>) {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
}

/// Quotient and remainder of a by b. Panics if b is zero.
pub fn poly_divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let linv = b[db].inv().unwrap();
    let mut q = vec![F::zero(); r.len() - db];
    while r.len() > db {
        let d = r.len() - 1;
        let c = r[d].mul(&linv);
        for (i, bv) in b.iter().enumerate() {
            let t = c.mul(bv);
            r[d - db + i] = r[d - db + i].sub(&t);
        }
        q[d - db] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic gcd (empty for gcd(0, 0)).
pub fn poly_gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        let li = l.inv().unwrap();
        for c in x.iter_mut() {
            *c = c.mul(&li);
        }
    }
    x
}

pub fn poly_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] = c[i + j].add(&x.mul(y));
        }
    }
    trim(&mut c);
    c
}

pub fn poly_sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let mut c = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(F::zero);
        let y = b.get(i).cloned().unwrap_or_else(F::zero);
        c.push(x.sub(&y));
    }
    trim(&mut c);
    c
}

pub fn poly_eval<F: Field>(a: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in a.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// a^e mod m.
pub fn poly_powmod<F: Field>(a: &[F], mut e: u64, m: &[F]) -> Vec<F> {
    let mut base = poly_divrem(a, m).1;
    let mut acc = vec![F::one()];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_divrem(&poly_mul(&acc, &base), m).1;
        }
        base = poly_divrem(&poly_mul(&base, &base), m).1;
        e >>= 1;
    }
    acc
}

/// Distinct roots in F_P of a nonzero polynomial (equal-degree splitting).
pub fn poly_roots_fp<const P: u64, R: rand::Rng + ?Sized>(f: &[super::Fp<P>], rng: &mut R) -> Vec<super::Fp<P>> {
    use super::Fp;
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    let x = vec![Fp::<P>::zero(), Fp::one()];
    let xp = poly_powmod(&x, P, &f);
    let g = poly_gcd(&f, &poly_sub(&xp, &x));
    let mut out = Vec::new();
    split_linear(&g, rng, &mut out);
    out.sort();
    out
}

fn split_linear<const P: u64, R: rand::Rng + ?Sized>(g: &[super::Fp<P>], rng: &mut R, out: &mut Vec<super::Fp<P>>) {
    use super::Fp;
    match g.len() {
        0 | 1 => {}
        2 => out.push(g[0].neg().mul(&g[1].inv().unwrap())),
        _ => loop {
            let a = Fp::<P>::random(rng);
            let h = poly_powmod(&[a, Fp::one()], (P - 1) / 2, g);
            let d = poly_gcd(g, &poly_sub(&h, &[Fp::one()]));
            if d.len() > 1 && d.len() < g.len() {
                let (q, _) = poly_divrem(g, &d);
                split_linear(&d, rng, out);
                split_linear(&q, rng, out);
                return;
            }
        },
    }
}

//! Independent eigenvalue oracle: exact integer characteristic polynomial
//! (Faddeev–LeVerrier), square-free reduction, then Weierstrass root
//! iteration with Newton polishing. Shares no code with the power iteration.

#![allow(dead_code)]

use num_complex::Complex64;
use signless::Digraph;

/// Integer polynomial, coefficients from the constant term upwards.
type Poly = Vec<i128>;

/// `det(xI - Q)` for the integer matrix `Q = D + A`.
pub fn char_poly(g: &Digraph) -> Poly {
    let n = g.vertex_count();
    let mut a = vec![vec![0i128; n]; n];
    for (v, row) in a.iter_mut().enumerate() {
        row[v] = g.outdegree(v) as i128;
    }
    for &(i, j) in g.arcs() {
        a[i][j] = 1;
    }
    // c[k] is the coefficient of x^k
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum();
            }
            next[i][i] += c[n - k + 1];
        }
        m = next;
        let trace: i128 = (0..n).map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>()).sum();
        assert_eq!(trace % k as i128, 0, "Faddeev–LeVerrier division must be exact");
        c[n - k] = -trace / k as i128;
    }
    c
}

fn trim(p: &mut Poly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn degree(p: &Poly) -> usize {
    p.len() - 1
}

fn content(p: &Poly) -> i128 {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    p.iter().fold(0, |g, &c| gcd(g, c))
}

fn primitive(mut p: Poly) -> Poly {
    trim(&mut p);
    let c = content(&p);
    if c > 1 {
        p.iter_mut().for_each(|x| *x /= c);
    }
    if *p.last().unwrap() < 0 {
        p.iter_mut().for_each(|x| *x = -*x);
    }
    p
}

fn derivative(p: &Poly) -> Poly {
    let mut d: Poly = (1..p.len()).map(|k| p[k] * k as i128).collect();
    if d.is_empty() {
        d.push(0);
    }
    d
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lb = *b.last().unwrap();
    let db = degree(b);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let lr = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (k, &bk) in b.iter().enumerate() {
            r[k + shift] -= lr * bk;
        }
        r.pop();
        trim(&mut r);
        r = primitive_keep_sign(r);
    }
    trim(&mut r);
    r
}

fn primitive_keep_sign(mut p: Poly) -> Poly {
    let c = content(&p);
    if c > 1 {
        p.iter_mut().for_each(|x| *x /= c);
    }
    p
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (primitive(a.clone()), primitive(b.clone()));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    while !(b.len() == 1 && b[0] == 0) {
        let r = prem(&a, &b);
        a = b;
        b = if r.iter().all(|&x| x == 0) { vec![0] } else { primitive(r) };
    }
    primitive(a)
}

/// Exact division `p / g` over the integers.
fn exact_div(p: &Poly, g: &Poly) -> Poly {
    let mut r = p.clone();
    let dg = degree(g);
    let lg = *g.last().unwrap();
    let mut q = vec![0i128; p.len() - dg];
    for k in (0..q.len()).rev() {
        let lead = r[k + dg];
        assert_eq!(lead % lg, 0, "division must be exact");
        let coef = lead / lg;
        q[k] = coef;
        for (i, &gi) in g.iter().enumerate() {
            r[k + i] -= coef * gi;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "nonzero remainder");
    q
}

fn square_free(p: &Poly) -> Poly {
    let g = poly_gcd(p, &derivative(p));
    if degree(&g) == 0 {
        primitive(p.clone())
    } else {
        primitive(exact_div(&primitive(p.clone()), &g))
    }
}

fn eval(p: &[f64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// All complex roots of a square-free integer polynomial.
pub fn roots(p: &Poly) -> Vec<Complex64> {
    let d = degree(p);
    if d == 0 {
        return Vec::new();
    }
    let lead = *p.last().unwrap() as f64;
    let monic: Vec<f64> = p.iter().map(|&c| c as f64 / lead).collect();
    let dmonic: Vec<f64> = (1..monic.len()).map(|k| monic[k] * k as f64).collect();
    let radius = 1.0 + monic[..d].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * (radius / 2.0)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let denom = (0..d).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = eval(&monic, z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..5 {
            let dp = eval(&dmonic, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            *zi -= eval(&monic, *zi) / dp;
        }
    }
    z
}

/// Largest modulus among the eigenvalues of `Q(G)`.
pub fn oracle_radius(g: &Digraph) -> f64 {
    let p = square_free(&char_poly(g));
    roots(&p).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Every digraph on `n` labelled vertices, in arc-set order.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    (1..total).map(move |mask| {
        let arcs = (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]);
        Digraph::from_arc_list(n, arcs).unwrap()
    })
}

/// A 6-vertex digraph whose row agrees with the reference G₂ row in every
/// column except (27). Found by exhaustive search over outdegree sequences.
pub const G2_NEAR_MATCH: &str = "\
n 6
1 2
1 3
1 5
2 1
2 4
3 1
3 6
4 2
4 6
5 6
6 3
";

//! Eigenvalues of a general real matrix: balancing, Householder reduction to
//! upper Hessenberg form, then Francis double-shift QR.

use num_complex::Complex64;

use super::SolverConfig;
use crate::error::{Error, Result};
use crate::matcore::{DenseMatrix, Spectrum};

/// Row-major scratch matrix.
struct Work {
    n: usize,
    a: Vec<f64>,
}

impl Work {
    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    #[inline]
    fn at_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.a[i * self.n + j]
    }
}

/// Diagonal similarity by powers of two so that row and column norms are
/// comparable. Eigenvalues are unchanged exactly.
fn balance(w: &mut Work) {
    const RADIX: f64 = 2.0;
    let n = w.n;
    let sq = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in (0..n).filter(|&j| j != i) {
                c += w.at(j, i).abs();
                r += w.at(i, j).abs();
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= sq;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sq;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let ginv = 1.0 / f;
                for j in 0..n {
                    *w.at_mut(i, j) *= ginv;
                }
                for j in 0..n {
                    *w.at_mut(j, i) *= f;
                }
            }
        }
    }
}

fn hessenberg(w: &mut Work) {
    let n = w.n;
    if n < 3 {
        return;
    }
    let mut v = vec![0.0; n];
    for k in 0..n - 2 {
        let len = n - k - 1;
        let x = &mut v[..len];
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = w.at(k + 1 + i, k);
        }
        let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        x[0] -= alpha;
        let vnorm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        x.iter_mut().for_each(|t| *t /= vnorm);

        // H <- (I - 2vvᵀ) H on rows k+1..n
        for j in k..n {
            let s: f64 = (0..len).map(|i| x[i] * w.at(k + 1 + i, j)).sum();
            for (i, &xi) in x.iter().enumerate() {
                *w.at_mut(k + 1 + i, j) -= 2.0 * xi * s;
            }
        }
        // H <- H (I - 2vvᵀ) on columns k+1..n
        for i in 0..n {
            let s: f64 = (0..len).map(|j| w.at(i, k + 1 + j) * x[j]).sum();
            for (j, &xj) in x.iter().enumerate() {
                *w.at_mut(i, k + 1 + j) -= 2.0 * s * xj;
            }
        }
        *w.at_mut(k + 1, k) = alpha;
        for i in k + 2..n {
            *w.at_mut(i, k) = 0.0;
        }
    }
}

#[inline]
fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix. `max_its` caps the
/// iterations spent on any single eigenvalue or pair.
fn hqr(w: &mut Work, tol: f64, max_its: usize) -> Result<Vec<Complex64>> {
    let n = w.n;
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += w.at(i, j).abs();
        }
    }

    let mut nn = n as isize - 1;
    let mut t = 0.0;
    while nn >= 0 {
        let mut its = 0;
        let mut l;
        loop {
            let nu = nn as usize;
            // look for a small subdiagonal element
            l = nu;
            while l > 0 {
                let mut s = w.at(l - 1, l - 1).abs() + w.at(l, l).abs();
                if s == 0.0 {
                    s = anorm;
                }
                if w.at(l, l - 1).abs() <= tol * s {
                    *w.at_mut(l, l - 1) = 0.0;
                    break;
                }
                l -= 1;
            }
            let mut x = w.at(nu, nu);
            if l == nu {
                out[nu] = Complex64::new(x + t, 0.0);
                nn -= 1;
            } else {
                let mut y = w.at(nu - 1, nu - 1);
                let mut ww = w.at(nu, nu - 1) * w.at(nu - 1, nu);
                if l == nu - 1 {
                    let p = 0.5 * (y - x);
                    let q = p * p + ww;
                    let z = q.abs().sqrt();
                    x += t;
                    if q >= 0.0 {
                        let z = p + sign(z, p);
                        out[nu - 1] = Complex64::new(x + z, 0.0);
                        out[nu] = Complex64::new(if z != 0.0 { x - ww / z } else { x + z }, 0.0);
                    } else {
                        out[nu - 1] = Complex64::new(x + p, z);
                        out[nu] = Complex64::new(x + p, -z);
                    }
                    nn -= 2;
                } else {
                    if its >= max_its {
                        return Err(Error::NoConvergence { iterations: its });
                    }
                    if its > 0 && its % 10 == 0 {
                        // exceptional shift
                        t += x;
                        for i in 0..=nu {
                            *w.at_mut(i, i) -= x;
                        }
                        let s = w.at(nu, nu - 1).abs() + w.at(nu - 1, nu - 2).abs();
                        x = 0.75 * s;
                        y = x;
                        ww = -0.4375 * s * s;
                    }
                    its += 1;
                    double_shift_step(w, l, nu, x, y, ww, tol);
                }
            }
            if (l as isize) + 1 >= nn {
                break;
            }
        }
    }
    Ok(out)
}

/// One implicit double-shift sweep on the active block `l..=nu`, with shifts
/// given through `x`, `y` and `ww` (the trailing 2x2 block).
fn double_shift_step(w: &mut Work, l: usize, nu: usize, x: f64, y: f64, ww: f64, tol: f64) {
    let (mut p, mut q, mut r);
    // find two consecutive small subdiagonal elements
    let mut m = nu - 2;
    loop {
        let z = w.at(m, m);
        let rr = x - z;
        let s = y - z;
        p = (rr * s - ww) / w.at(m + 1, m) + w.at(m, m + 1);
        q = w.at(m + 1, m + 1) - z - rr - s;
        r = w.at(m + 2, m + 1);
        let s = p.abs() + q.abs() + r.abs();
        p /= s;
        q /= s;
        r /= s;
        if m == l {
            break;
        }
        let u = w.at(m, m - 1).abs() * (q.abs() + r.abs());
        let v = p.abs() * (w.at(m - 1, m - 1).abs() + z.abs() + w.at(m + 1, m + 1).abs());
        if u <= tol * v {
            break;
        }
        m -= 1;
    }
    for i in m..nu - 1 {
        *w.at_mut(i + 2, i) = 0.0;
        if i != m {
            *w.at_mut(i + 2, i - 1) = 0.0;
        }
    }
    let mut x;
    for k in m..nu {
        if k != m {
            p = w.at(k, k - 1);
            q = w.at(k + 1, k - 1);
            r = if k + 1 != nu { w.at(k + 2, k - 1) } else { 0.0 };
            x = p.abs() + q.abs() + r.abs();
            if x != 0.0 {
                p /= x;
                q /= x;
                r /= x;
            }
        } else {
            x = 0.0;
        }
        let s = sign((p * p + q * q + r * r).sqrt(), p);
        if s == 0.0 {
            continue;
        }
        if k == m {
            if l != m {
                *w.at_mut(k, k - 1) = -w.at(k, k - 1);
            }
        } else {
            *w.at_mut(k, k - 1) = -s * x;
        }
        p += s;
        let xx = p / s;
        let yy = q / s;
        let zz = r / s;
        q /= p;
        r /= p;
        for j in k..=nu {
            let mut pp = w.at(k, j) + q * w.at(k + 1, j);
            if k + 1 != nu {
                pp += r * w.at(k + 2, j);
                *w.at_mut(k + 2, j) -= pp * zz;
            }
            *w.at_mut(k + 1, j) -= pp * yy;
            *w.at_mut(k, j) -= pp * xx;
        }
        let mmin = nu.min(k + 3);
        for i in l..=mmin {
            let mut pp = xx * w.at(i, k) + yy * w.at(i, k + 1);
            if k + 1 != nu {
                pp += zz * w.at(i, k + 2);
                *w.at_mut(i, k + 2) -= pp * r;
            }
            *w.at_mut(i, k + 1) -= pp * q;
            *w.at_mut(i, k) -= pp;
        }
    }
}

/// All eigenvalues of a real square matrix, sorted by descending real part,
/// then descending imaginary part. Complex eigenvalues come in conjugate
/// pairs.
pub fn eig_general(m: &DenseMatrix, cfg: &SolverConfig) -> Result<Spectrum> {
    let n = m.order();
    let mut w = Work {
        n,
        a: m.as_slice().to_vec(),
    };
    let mut values = if n == 0 {
        Vec::new()
    } else {
        balance(&mut w);
        hessenberg(&mut w);
        hqr(&mut w, cfg.tolerance, cfg.max_iterations)?
    };
    values.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    Ok(Spectrum::new(values))
}

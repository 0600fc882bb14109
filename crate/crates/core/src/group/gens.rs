//! Deterministic generating sets for the classical families.
//!
//! - `SL`: elementary transvections `I + λE_ij`, `λ` over an F_p-basis;
//!   `GL` adds `diag(ν, 1, …, 1)`.
//! - `Sp`: symplectic transvections `x ↦ x + λB(x,v)v` for `v` of support ≤ 2.
//! - `SU`: `SU(2, q)` embedded on every coordinate plane; `GU` adds
//!   `diag(ζ, 1, …, 1)` with `ζ` of norm 1 and order `q + 1`.
//! - `GO`: reflections in anisotropic vectors of support ≤ 2; `SO` uses their
//!   pairwise products and `Ω` the products with square spinor norm.
//!
//! These sets are generous; [`super::table::generate`] keeps only the
//! members needed to reach the full group.

use crate::error::{Error, Result};
use crate::matrix::Mat;

use super::setting::ClassicalSetting;
use super::spec::{Family, GroupSpec};

#[derive(Debug, Clone)]
pub struct StandardGenerators {
    pub setting: ClassicalSetting,
    pub candidates: Vec<Mat>,
}

pub fn standard_generators(spec: &GroupSpec) -> Result<StandardGenerators> {
    let setting = ClassicalSetting::new(spec)?;
    let candidates = match spec.family {
        Family::GL | Family::SL => linear(&setting),
        Family::Sp => symplectic(&setting),
        Family::GU | Family::SU => unitary(&setting),
        Family::GO | Family::SO | Family::Omega => orthogonal(&setting),
    };
    for c in &candidates {
        if !setting.contains(c) {
            return Err(Error::Consistency(format!(
                "generator candidate outside {spec}: {c:?}"
            )));
        }
    }
    if candidates.is_empty() && spec.n > 1 {
        return Err(Error::UnsupportedGroup(format!("no generators for {spec}")));
    }
    Ok(StandardGenerators {
        setting,
        candidates,
    })
}

fn linear(s: &ClassicalSetting) -> Vec<Mat> {
    let r = s.ring();
    let n = r.dim();
    let mut out = Vec::new();
    for lambda in s.field().prime_basis() {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut m = r.identity();
                    m[i * n + j] = lambda;
                    out.push(m);
                }
            }
        }
    }
    if s.spec().family == Family::GL {
        let mut d = vec![1u8; n];
        d[0] = s.field().primitive();
        out.push(r.diag(&d));
    }
    out
}

/// Nonzero vectors with at most two nonzero entries, first nonzero entry 1.
fn small_support_vectors(s: &ClassicalSetting, max_support: usize) -> Vec<Vec<u8>> {
    let n = s.ring().dim();
    let q = s.field().order() as u8;
    // leading entry 1 at position i, then every pattern on later coordinates
    let mut out = Vec::new();
    fn extend(v: &mut Vec<u8>, from: usize, left: usize, q: u8, out: &mut Vec<Vec<u8>>) {
        out.push(v.clone());
        if left == 0 {
            return;
        }
        for j in from..v.len() {
            for lam in 1..q {
                v[j] = lam;
                extend(v, j + 1, left - 1, q, out);
            }
            v[j] = 0;
        }
    }
    for i in 0..n {
        let mut v = vec![0u8; n];
        v[i] = 1;
        extend(&mut v, i + 1, max_support - 1, q, &mut out);
    }
    out
}

/// `I + c · v wᵀ`.
fn rank_one_update(s: &ClassicalSetting, c: u8, v: &[u8], w: &[u8]) -> Mat {
    let r = s.ring();
    let f = s.field();
    let n = r.dim();
    let mut m = r.identity();
    for i in 0..n {
        for j in 0..n {
            let t = f.mul(c, f.mul(v[i], w[j]));
            m[i * n + j] = f.add(m[i * n + j], t);
        }
    }
    m
}

fn gram_times(s: &ClassicalSetting, v: &[u8]) -> Vec<u8> {
    let f = s.field();
    let n = s.ring().dim();
    let g = &s.form().expect("form").gram;
    (0..n)
        .map(|i| (0..n).fold(0u8, |acc, k| f.add(acc, f.mul(g[i * n + k], v[k]))))
        .collect()
}

fn symplectic(s: &ClassicalSetting) -> Vec<Mat> {
    // x ↦ x + λ B(x,v) v with B(x,v) = xᵀJv, i.e. I + λ v (Jv)ᵀ
    let mut out = Vec::new();
    let basis = s.field().prime_basis();
    for v in small_support_vectors(s, 2) {
        let jv = gram_times(s, &v);
        for &lam in &basis {
            out.push(rank_one_update(s, lam, &v, &jv));
        }
    }
    out
}

fn unitary(s: &ClassicalSetting) -> Vec<Mat> {
    let r = s.ring();
    let f = s.field();
    let n = r.dim();
    let qq = f.order() as u8;
    let norm = |x: u8| f.mul(x, f.conj(x));
    let mut su2: Vec<(u8, u8)> = Vec::new();
    for a in 0..qq {
        for b in 0..qq {
            if f.add(norm(a), norm(b)) == 1 {
                su2.push((a, b));
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for &(a, b) in &su2 {
                let mut m = r.identity();
                m[i * n + i] = a;
                m[i * n + j] = b;
                m[j * n + i] = f.neg(f.conj(b));
                m[j * n + j] = f.conj(a);
                out.push(m);
            }
        }
    }
    if s.spec().family == Family::GU {
        let q = s.spec().q;
        let zeta = f.pow(f.primitive(), q - 1);
        let mut d = vec![1u8; n];
        d[0] = zeta;
        out.push(r.diag(&d));
    }
    out
}

fn orthogonal(s: &ClassicalSetting) -> Vec<Mat> {
    let f = s.field();
    let mut reflections: Vec<(Mat, u8)> = Vec::new();
    for v in small_support_vectors(s, 4) {
        let gv = gram_times(s, &v);
        let bvv = v
            .iter()
            .zip(&gv)
            .fold(0u8, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
        if bvv == 0 {
            continue;
        }
        // x ↦ x - 2B(x,v)/B(v,v) v
        let c = f.neg(f.mul(f.add(1, 1), f.inv(bvv)));
        reflections.push((rank_one_update(s, c, &v, &gv), bvv));
    }
    let r = s.ring();
    match s.spec().family {
        Family::GO => reflections.into_iter().map(|(m, _)| m).collect(),
        fam => {
            // r_a r_b = (r_0 r_a)⁻¹ (r_0 r_b), so products with one fixed
            // reflection per norm class suffice
            let mut out = Vec::new();
            let mut anchors: Vec<&(Mat, u8)> = Vec::new();
            for rf in &reflections {
                if !anchors.iter().any(|a| f.is_square(f.mul(a.1, rf.1))) {
                    anchors.push(rf);
                }
            }
            for (ra, na) in anchors {
                for (rb, nb) in &reflections {
                    if fam == Family::Omega && !f.is_square(f.mul(*na, *nb)) {
                        continue;
                    }
                    out.push(r.mul(ra, rb));
                }
            }
            out
        }
    }
}

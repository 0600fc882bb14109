//! Centralizer orders from the commutant algebra `{X : Xu = uX}`.
//!
//! The commutant is a linear subspace of the full matrix space; enumerating
//! it and keeping the members that lie in the group gives `|C_G(u)|` with no
//! group enumeration.

use crate::error::{Error, Result};
use crate::matrix::Mat;

use super::setting::ClassicalSetting;

/// Default cap on the number of enumerated commutant elements.
pub const DEFAULT_ORACLE_CAP: u128 = 10_000_000;

/// Basis of `{X : Xu = uX}` as flattened `n×n` matrices.
fn commutant_basis(setting: &ClassicalSetting, u: &[u8]) -> Vec<Mat> {
    let r = setting.ring();
    let f = setting.field();
    let n = r.dim();
    let vars = n * n;
    // one equation per entry (i, j): Σ_k X_ik u_kj - u_ik X_kj = 0
    let mut sys = vec![0u8; vars * vars];
    for i in 0..n {
        for j in 0..n {
            let row = (i * n + j) * vars;
            for k in 0..n {
                let a = &mut sys[row + i * n + k];
                *a = f.add(*a, u[k * n + j]);
                let b = &mut sys[row + k * n + j];
                *b = f.sub(*b, u[i * n + k]);
            }
        }
    }
    r_null_space(setting, &sys, vars)
}

fn r_null_space(setting: &ClassicalSetting, sys: &[u8], vars: usize) -> Vec<Mat> {
    setting.ring().null_space(sys, vars, vars)
}

pub fn commutant_dimension(setting: &ClassicalSetting, u: &[u8]) -> usize {
    commutant_basis(setting, u).len()
}

/// `|C_G(u)|` for `u` in the group of `setting`.
pub fn commutant_centralizer_order(
    setting: &ClassicalSetting,
    u: &[u8],
    cap: u128,
) -> Result<u128> {
    let r = setting.ring();
    if u.len() != r.len() {
        return Err(Error::InvalidInput("matrix has the wrong size".into()));
    }
    if !setting.contains(u) {
        return Err(Error::NotInGroup(setting.spec().to_string()));
    }
    let basis = commutant_basis(setting, u);
    let q = setting.field().order() as u128;
    let total = q
        .checked_pow(basis.len() as u32)
        .filter(|&t| t <= cap)
        .ok_or(Error::CapExceeded {
            what: "commutant enumeration",
            needed: q.saturating_pow(basis.len() as u32),
            cap,
        })?;
    // expand to an F_p-basis so an odometer over digits mod p visits every
    // F-linear combination exactly once; adding a vector p times is a no-op
    let f = setting.field();
    let p = f.characteristic() as u8;
    let pbasis: Vec<Mat> = basis
        .iter()
        .flat_map(|b| f.prime_basis().into_iter().map(move |c| (c, b)))
        .map(|(c, b)| r.scale(c, b))
        .collect();
    let mut x = r.zero();
    let mut digits = vec![0u8; pbasis.len()];
    let mut count: u128 = 0;
    let mut visited: u128 = 0;
    loop {
        visited += 1;
        if setting.contains(&x) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == pbasis.len() {
                debug_assert_eq!(visited, total);
                return Ok(count);
            }
            for (e, &b) in x.iter_mut().zip(&pbasis[k]) {
                *e = f.add(*e, b);
            }
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, GroupSpec};

    fn setting(f: Family, n: usize, q: u64) -> ClassicalSetting {
        ClassicalSetting::new(&GroupSpec::new(f, n, q).unwrap()).unwrap()
    }

    #[test]
    fn regular_unipotent_gl33() {
        let s = setting(Family::GL, 3, 3);
        let j3 = s.ring().jordan_unipotent(&[3]).unwrap();
        assert_eq!(commutant_dimension(&s, &j3), 3);
        assert_eq!(
            commutant_centralizer_order(&s, &j3, DEFAULT_ORACLE_CAP).unwrap(),
            18
        );
    }

    #[test]
    fn identity_gives_group_order() {
        let s = setting(Family::GL, 2, 3);
        let id = s.ring().identity();
        assert_eq!(
            commutant_centralizer_order(&s, &id, DEFAULT_ORACLE_CAP).unwrap(),
            48
        );
        let s = setting(Family::SL, 2, 5);
        let id = s.ring().identity();
        assert_eq!(
            commutant_centralizer_order(&s, &id, DEFAULT_ORACLE_CAP).unwrap(),
            120
        );
    }

    #[test]
    fn j2_plus_j1_in_gl33() {
        let s = setting(Family::GL, 3, 3);
        let u = s.ring().jordan_unipotent(&[1, 2]).unwrap();
        let c = commutant_centralizer_order(&s, &u, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(crate::arith::p_part(c, 3), 27);
    }

    #[test]
    fn errors() {
        let s = setting(Family::SL, 3, 3);
        let mut m = s.ring().identity();
        m[0] = 2;
        assert!(matches!(
            commutant_centralizer_order(&s, &m, DEFAULT_ORACLE_CAP),
            Err(Error::NotInGroup(_))
        ));
        let id = s.ring().identity();
        assert!(matches!(
            commutant_centralizer_order(&s, &id, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }
}

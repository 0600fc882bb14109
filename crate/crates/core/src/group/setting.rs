//! Field, invariant form and membership test for a [`GroupSpec`].
//!
//! Forms used:
//! - symplectic: antidiagonal `J` with `+1` in the top half, `-1` below;
//! - unitary: the identity Hermitian form over GF(q²);
//! - orthogonal: `diag(1, …, 1, d)` with `d ∈ {1, ν}` chosen (ν the least-code
//!   primitive element) so the even-dimensional space has the requested type.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{make_field, FieldTables};
use crate::matrix::{Mat, MatrixRing};

use super::spec::{Family, GroupSpec, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Alternating,
    Hermitian,
    Symmetric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    pub kind: FormKind,
    pub gram: Mat,
}

#[derive(Debug, Clone)]
pub struct ClassicalSetting {
    spec: GroupSpec,
    field: Arc<FieldTables>,
    ring: MatrixRing,
    form: Option<Form>,
}

impl ClassicalSetting {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        spec.validate()?;
        let (p, f) = spec.char_and_degree();
        let field = if spec.family.is_unitary() {
            FieldTables::with_conjugation(make_field(p, 2 * f)?, spec.q)?
        } else {
            FieldTables::new(make_field(p, f)?)?
        };
        let field = Arc::new(field);
        let ring = MatrixRing::new(Arc::clone(&field), spec.n);
        let n = spec.n;
        let form = match spec.family {
            Family::GL | Family::SL => None,
            Family::GU | Family::SU => Some(Form {
                kind: FormKind::Hermitian,
                gram: ring.identity(),
            }),
            Family::Sp => {
                let mut j = ring.zero();
                for i in 0..n {
                    j[i * n + (n - 1 - i)] = if i < n / 2 { 1 } else { field.neg(1) };
                }
                Some(Form {
                    kind: FormKind::Alternating,
                    gram: j,
                })
            }
            Family::GO | Family::SO | Family::Omega => {
                let mut d = vec![1u8; n];
                if n.is_multiple_of(2) {
                    let m = n / 2;
                    let minus_one_pow = if m.is_multiple_of(2) { 1 } else { field.neg(1) };
                    let plus_with_one = field.is_square(minus_one_pow);
                    let want_plus = spec.sign == Some(Sign::Plus);
                    if plus_with_one != want_plus {
                        d[n - 1] = field.primitive();
                    }
                }
                Some(Form {
                    kind: FormKind::Symmetric,
                    gram: ring.diag(&d),
                })
            }
        };
        Ok(ClassicalSetting {
            spec: *spec,
            field,
            ring,
            form,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn field(&self) -> &Arc<FieldTables> {
        &self.field
    }

    pub fn ring(&self) -> &MatrixRing {
        &self.ring
    }

    pub fn form(&self) -> Option<&Form> {
        self.form.as_ref()
    }

    /// `Bᵀ G A` for bilinear forms, `B* G A` for the Hermitian form.
    pub fn pair(&self, b: &[u8], a: &[u8]) -> Option<Mat> {
        let form = self.form.as_ref()?;
        let left = match form.kind {
            FormKind::Hermitian => self.ring.conj_transpose(b),
            _ => self.ring.transpose(b),
        };
        Some(self.ring.mul(&self.ring.mul(&left, &form.gram), a))
    }

    pub fn preserves_form(&self, x: &[u8]) -> bool {
        match &self.form {
            None => true,
            Some(form) => self.pair(x, x).as_deref() == Some(&form.gram[..]),
        }
    }

    /// Membership in the group named by the spec (ignoring the projective flag).
    pub fn contains(&self, x: &[u8]) -> bool {
        let det = self.ring.det(x);
        if det == 0 {
            return false;
        }
        if self.spec.family.needs_det_one() && det != 1 {
            return false;
        }
        if !self.preserves_form(x) {
            return false;
        }
        if self.spec.family == Family::Omega {
            return self.spinor_norm(x).map(|s| self.field.is_square(s)) == Some(true);
        }
        true
    }

    /// Spinor norm of an orthogonal matrix as a field element (its square
    /// class is the invariant), via the Wall form on `im(1 - g)`:
    /// `χ((1-g)x, (1-g)y) = B((1-g)x, y)`.
    pub fn spinor_norm(&self, g: &[u8]) -> Option<u8> {
        let form = self
            .form
            .as_ref()
            .filter(|f| f.kind == FormKind::Symmetric)?;
        let n = self.spec.n;
        let r = &self.ring;
        let f = &**self.field();
        let one_minus = r.sub(&r.identity(), g);
        // pick standard basis vectors whose images under 1-g are independent
        let mut chosen: Vec<usize> = Vec::new();
        let mut cols: Vec<Vec<u8>> = Vec::new();
        for j in 0..n {
            let col: Vec<u8> = (0..n).map(|i| one_minus[i * n + j]).collect();
            let mut trial = cols.clone();
            trial.push(col.clone());
            if rank_of_columns(r, &trial) == trial.len() {
                cols = trial;
                chosen.push(j);
            }
        }
        let k = chosen.len();
        if k == 0 {
            return Some(1);
        }
        // M[a][b] = B(w_a, e_{chosen[b]}) = w_aᵀ G e_b
        let mut m = vec![0u8; k * k];
        for a in 0..k {
            for (b, &jb) in chosen.iter().enumerate() {
                let mut s = 0u8;
                for i in 0..n {
                    s = f.add(s, f.mul(cols[a][i], form.gram[i * n + jb]));
                }
                m[a * k + b] = s;
            }
        }
        let sub = MatrixRing::new(Arc::clone(&self.field), k);
        let d = sub.det(&m);
        if d == 0 {
            None
        } else {
            Some(d)
        }
    }

    /// Checks the spec can be realised with table arithmetic and `u128` keys.
    pub fn ensure_enumerable(&self) -> Result<()> {
        if !self.ring.key_fits() {
            return Err(Error::UnsupportedGroup(format!(
                "{} matrices do not fit the 128-bit element encoding",
                self.spec
            )));
        }
        Ok(())
    }
}

fn rank_of_columns(r: &MatrixRing, cols: &[Vec<u8>]) -> usize {
    let n = r.dim();
    let k = cols.len();
    if k > n {
        return n;
    }
    // embed as an n×n matrix whose first k columns are `cols`
    let mut m = r.zero();
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            m[i * n + j] = c[i];
        }
    }
    r.rank(&m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms_are_nondegenerate() {
        for spec in [
            GroupSpec::new(Family::Sp, 4, 3).unwrap(),
            GroupSpec::new(Family::SU, 3, 3).unwrap(),
            GroupSpec::new(Family::GO, 5, 3).unwrap(),
            GroupSpec::with_sign(Family::GO, Some(Sign::Minus), 4, 5).unwrap(),
        ] {
            let s = ClassicalSetting::new(&spec).unwrap();
            let g = &s.form().unwrap().gram;
            assert_ne!(s.ring().det(g), 0, "{spec}");
            assert!(s.contains(&s.ring().identity()));
        }
    }

    #[test]
    fn even_orthogonal_type_matches_discriminant() {
        // (-1)^m · disc is a square exactly for the plus type
        for q in [3u64, 5, 7, 9] {
            for sign in [Sign::Plus, Sign::Minus] {
                for n in [4usize, 6] {
                    let spec = GroupSpec::with_sign(Family::GO, Some(sign), n, q).unwrap();
                    let s = ClassicalSetting::new(&spec).unwrap();
                    let f = s.field();
                    let disc = s.ring().det(&s.form().unwrap().gram);
                    let m1 = if (n / 2) % 2 == 0 { 1 } else { f.neg(1) };
                    assert_eq!(f.is_square(f.mul(m1, disc)), sign == Sign::Plus);
                }
            }
        }
    }

    #[test]
    fn minus_identity_spinor_norm_is_discriminant_class() {
        let spec = GroupSpec::with_sign(Family::GO, Some(Sign::Plus), 4, 3).unwrap();
        let s = ClassicalSetting::new(&spec).unwrap();
        let f = s.field().clone();
        let minus = s.ring().scale(f.neg(1), &s.ring().identity());
        let disc = s.ring().det(&s.form().unwrap().gram);
        let norm = s.spinor_norm(&minus).unwrap();
        assert_eq!(f.is_square(norm), f.is_square(disc));
    }
}

//! Generic data evaluated at concrete `q`: standard group orders, the
//! centralizer-order set of `PSLε(3,q)`, fundamental-group orders, good
//! primes and the isolated-vertex value attached to a CC-torus.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime, prime_power};
use crate::divgraphs::{from_centralizer_orders, DivGraph, ShapeDescriptor};
use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec, Sign};

fn prod(factors: impl IntoIterator<Item = u128>) -> Result<u128> {
    factors
        .into_iter()
        .try_fold(1u128, |acc, x| acc.checked_mul(x))
        .ok_or(Error::Overflow("group order"))
}

fn qpow(q: u128, e: u32) -> Result<u128> {
    q.checked_pow(e).ok_or(Error::Overflow("group order"))
}

/// Order of the matrix group itself, ignoring the projective flag.
pub fn matrix_group_order(spec: &GroupSpec) -> Result<u128> {
    spec.validate()?;
    let q = spec.q as u128;
    let n = spec.n as u32;
    let gl_like = |eps: i128| -> Result<u128> {
        let mut f = vec![qpow(q, n * (n - 1) / 2)?];
        for i in 1..=n {
            let qi = qpow(q, i)? as i128;
            let sign = if eps == 1 || i % 2 == 0 { 1 } else { -1 };
            f.push((qi - sign) as u128);
        }
        prod(f)
    };
    let sp = |m: u32| -> Result<u128> {
        let mut f = vec![qpow(q, m * m)?];
        for i in 1..=m {
            f.push(qpow(q, 2 * i)? - 1);
        }
        prod(f)
    };
    let go = || -> Result<u128> {
        if n % 2 == 1 {
            Ok(2 * sp((n - 1) / 2)?)
        } else {
            let m = n / 2;
            let eps = spec.sign.expect("validated").as_i32() as i128;
            let mut f = vec![2, qpow(q, m * (m - 1))?];
            f.push((qpow(q, m)? as i128 - eps) as u128);
            for i in 1..m {
                f.push(qpow(q, 2 * i)? - 1);
            }
            prod(f)
        }
    };
    match spec.family {
        Family::GL => gl_like(1),
        Family::SL => Ok(gl_like(1)? / (q - 1)),
        Family::GU => gl_like(-1),
        Family::SU => Ok(gl_like(-1)? / (q + 1)),
        Family::Sp => sp(n / 2),
        Family::GO => go(),
        Family::SO => Ok(go()? / 2),
        Family::Omega => Ok(go()? / 4),
    }
}

/// Order of the centre of the matrix group.
pub fn center_order(spec: &GroupSpec) -> Result<u128> {
    spec.validate()?;
    let q = spec.q as u128;
    let n = spec.n as u128;
    Ok(match spec.family {
        Family::GL => q - 1,
        Family::SL => gcd(n, q - 1),
        Family::GU => q + 1,
        Family::SU => gcd(n, q + 1),
        Family::Sp | Family::GO => 2,
        Family::SO | Family::Omega if n % 2 == 1 => 1,
        Family::SO => 2,
        Family::Omega => {
            // -1 lies in Ω^ε(2m, q) iff q^m ≡ ε (mod 4)
            let m = (n / 2) as u32;
            let eps = spec.sign.expect("validated");
            let qm4 = (q % 4).pow(m) % 4;
            let hit = match eps {
                Sign::Plus => qm4 == 1,
                Sign::Minus => qm4 == 3,
            };
            if hit {
                2
            } else {
                1
            }
        }
    })
}

/// Order of the group named by `spec`, i.e. `|G/Z(G)|` when projective.
pub fn group_order(spec: &GroupSpec) -> Result<u128> {
    let order = matrix_group_order(spec)?;
    if spec.projective {
        Ok(order / center_order(spec)?)
    } else {
        Ok(order)
    }
}

/// Parameters `r = q-ε, s = q+ε, t = q²+εq+1, a = gcd(3,r), r' = r/a, t' = t/a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Psl3Params {
    pub r: u128,
    pub s: u128,
    pub t: u128,
    pub a: u128,
    pub r_prime: u128,
    pub t_prime: u128,
}

/// Generic centralizer orders of non-trivial elements of `PSLε(3,q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericClassData {
    pub q: u64,
    pub epsilon: i32,
    pub params: Psl3Params,
    /// `[q³r', q², qr'rs, qr', r², r'r, r's, t']`, in this order.
    pub cent_orders: Vec<u128>,
    pub group_order: u128,
}

impl GenericClassData {
    pub fn distinct_cent_orders(&self) -> Vec<u128> {
        let mut v = self.cent_orders.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Class size of the Coxeter-torus elements, `|G| / t'`.
    pub fn coxeter_vertex(&self) -> u128 {
        self.group_order / self.params.t_prime
    }
}

fn check_odd_q(q: u64) -> Result<()> {
    match prime_power(q) {
        Some((p, _)) if p % 2 == 1 => Ok(()),
        _ => Err(Error::InvalidInput(format!(
            "q = {q} must be an odd prime power"
        ))),
    }
}

pub fn psl3_data(q: u64, epsilon: i32) -> Result<GenericClassData> {
    check_odd_q(q)?;
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::InvalidInput(format!(
            "epsilon must be ±1, got {epsilon}"
        )));
    }
    let qi = q as i128;
    let e = epsilon as i128;
    let r = (qi - e) as u128;
    let s = (qi + e) as u128;
    let t = (qi * qi + e * qi + 1) as u128;
    let a = gcd(3, r);
    let (rp, tp) = (r / a, t / a);
    if !t.is_multiple_of(a) {
        return Err(Error::Consistency(format!(
            "a = {a} does not divide t = {t}"
        )));
    }
    let q = q as u128;
    let cent_orders = vec![
        prod([q, q, q, rp])?,
        q * q,
        prod([q, rp, r, s])?,
        q * rp,
        r * r,
        rp * r,
        rp * s,
        tp,
    ];
    let group_order = prod([q * q * q, r * r, s, t])? / a;
    Ok(GenericClassData {
        q: q as u64,
        epsilon,
        params: Psl3Params {
            r,
            s,
            t,
            a,
            r_prime: rp,
            t_prime: tp,
        },
        cent_orders,
        group_order,
    })
}

pub fn psl3_divgraph(q: u64, epsilon: i32) -> Result<DivGraph> {
    let data = psl3_data(q, epsilon)?;
    from_centralizer_orders(&data.cent_orders, data.group_order)
}

/// Component vertex counts predicted from `a` alone: `[7, 1]` or `[6, 1]`.
pub fn psl3_vertex_counts(q: u64, epsilon: i32) -> Result<Vec<usize>> {
    let data = psl3_data(q, epsilon)?;
    Ok(if data.params.a == 3 {
        vec![7, 1]
    } else {
        vec![6, 1]
    })
}

/// Shape of the generic graph, checked against the prediction from `a`.
pub fn figure1_shape(q: u64, epsilon: i32) -> Result<ShapeDescriptor> {
    let shape = psl3_divgraph(q, epsilon)?.shape();
    let predicted = psl3_vertex_counts(q, epsilon)?;
    if shape.vertex_counts() != predicted {
        return Err(Error::Consistency(format!(
            "generic graph at q={q}, ε={epsilon} has components {:?}, expected {predicted:?}",
            shape.vertex_counts()
        )));
    }
    Ok(shape)
}

/// Dynkin types of finite groups of Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    TwistedA,
    B,
    C,
    D,
    TwistedD,
    G2,
    F4,
    E6,
    TwistedE6,
    E7,
    E8,
}

impl std::str::FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => DynkinType::A,
            "2A" => DynkinType::TwistedA,
            "B" => DynkinType::B,
            "C" => DynkinType::C,
            "D" => DynkinType::D,
            "2D" => DynkinType::TwistedD,
            "G2" => DynkinType::G2,
            "F4" => DynkinType::F4,
            "E6" => DynkinType::E6,
            "2E6" => DynkinType::TwistedE6,
            "E7" => DynkinType::E7,
            "E8" => DynkinType::E8,
            _ => return Err(Error::InvalidInput(format!("unknown Dynkin type {s:?}"))),
        })
    }
}

/// Order `k` of the fundamental group.
pub fn fundamental_group_order(ty: DynkinType, rank: u32, q: u64) -> Result<u64> {
    let l1 = rank as u128 + 1;
    let q = q as u128;
    Ok(match ty {
        DynkinType::A => gcd(l1, q - 1) as u64,
        DynkinType::TwistedA => gcd(l1, q + 1) as u64,
        DynkinType::B | DynkinType::C => 2,
        DynkinType::D => 4,
        DynkinType::G2 | DynkinType::F4 | DynkinType::E8 => 1,
        DynkinType::E6 => 3,
        DynkinType::E7 => 2,
        DynkinType::TwistedD | DynkinType::TwistedE6 => {
            return Err(Error::InvalidInput(format!(
                "no fundamental group order tabulated for {ty:?}"
            )))
        }
    })
}

/// Whether the prime `p` is good for the type.
pub fn good_prime(ty: DynkinType, p: u64) -> bool {
    debug_assert!(is_prime(p));
    let bad: &[u64] = match ty {
        DynkinType::A
        | DynkinType::TwistedA
        | DynkinType::B
        | DynkinType::C
        | DynkinType::D
        | DynkinType::TwistedD => &[2],
        DynkinType::G2
        | DynkinType::F4
        | DynkinType::E6
        | DynkinType::TwistedE6
        | DynkinType::E7 => &[2, 3],
        DynkinType::E8 => &[2, 3, 5],
    };
    !bad.contains(&p)
}

/// Class size `|G| / |TZ(G)|` of non-central elements of a CC-torus `T`,
/// where `|TZ(G)| = |T|·|Z| / |T ∩ Z|`.
pub fn isolated_class_size(
    group_order: u128,
    torus_order: u128,
    center_order: u128,
    torus_center_meet: u128,
) -> Result<u128> {
    if torus_center_meet == 0 || !(torus_order * center_order).is_multiple_of(torus_center_meet) {
        return Err(Error::InvalidInput("|T ∩ Z| must divide |T|·|Z|".into()));
    }
    let tz = torus_order * center_order / torus_center_meet;
    if tz == 0 || !group_order.is_multiple_of(tz) {
        return Err(Error::NotDivisible {
            value: tz,
            modulus: group_order,
        });
    }
    let v = group_order / tz;
    if v == 1 {
        return Err(Error::InvalidInput(
            "torus covers the whole group; 1 is not a vertex".into(),
        ));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: usize, q: u64) -> GroupSpec {
        GroupSpec::new(f, n, q).unwrap()
    }

    #[test]
    fn standard_orders() {
        assert_eq!(group_order(&spec(Family::SL, 3, 3)).unwrap(), 5616);
        assert_eq!(group_order(&spec(Family::SU, 3, 3)).unwrap(), 6048);
        assert_eq!(group_order(&spec(Family::GL, 1, 7)).unwrap(), 6);
        assert_eq!(group_order(&spec(Family::SL, 2, 3)).unwrap(), 24);
        assert_eq!(group_order(&spec(Family::Sp, 4, 3)).unwrap(), 51840);
        assert_eq!(
            group_order(&spec(Family::Sp, 4, 3).projective()).unwrap(),
            25920
        );
        assert_eq!(group_order(&spec(Family::SL, 3, 5)).unwrap(), 372000);
        assert_eq!(
            group_order(&spec(Family::SU, 3, 5).projective()).unwrap(),
            126000
        );
        assert_eq!(group_order(&spec(Family::Omega, 5, 3)).unwrap(), 25920);
        assert_eq!(
            group_order(&spec(Family::SL, 2, 5).projective()).unwrap(),
            60
        );
        let om4m = GroupSpec::with_sign(Family::Omega, Some(Sign::Minus), 4, 3).unwrap();
        assert_eq!(group_order(&om4m).unwrap(), 360);
    }

    #[test]
    fn psl3_examples() {
        let d = psl3_data(3, 1).unwrap();
        assert_eq!(d.distinct_cent_orders(), vec![4, 6, 8, 9, 13, 48, 54]);
        assert_eq!(d.group_order, 5616);
        let d = psl3_data(7, 1).unwrap();
        assert_eq!(d.cent_orders, vec![686, 49, 672, 14, 36, 12, 16, 19]);
        assert_eq!(d.params.a, 3);
        let d = psl3_data(3, -1).unwrap();
        assert_eq!(d.distinct_cent_orders(), vec![7, 8, 9, 12, 16, 96, 108]);
        assert_eq!(d.group_order, 6048);
        assert!(psl3_data(4, 1).is_err());
        assert!(psl3_data(9, 2).is_err());
    }

    #[test]
    fn psl3_graphs_and_shapes() {
        let g = psl3_divgraph(7, 1).unwrap();
        let d = psl3_data(7, 1).unwrap();
        assert_eq!(g.shape().vertex_counts(), vec![7, 1]);
        assert!(g.is_isolated(d.group_order / 19));
        // edges in centralizer terms, translated to class sizes
        let n = d.group_order;
        for (x, y) in [
            (14, 686),
            (49, 686),
            (14, 672),
            (12, 672),
            (16, 672),
            (12, 36),
        ] {
            assert!(g.has_edge(n / x, n / y), "{x}|{y}");
        }
        assert_eq!(g.edges().len(), 6);
        let g = psl3_divgraph(3, 1).unwrap();
        assert_eq!(g.shape().vertex_counts(), vec![6, 1]);
        assert!(g.is_isolated(432));
        let g = psl3_divgraph(5, -1).unwrap();
        assert_eq!(g.shape().vertex_counts(), vec![7, 1]);
        assert!(g.is_isolated(psl3_data(5, -1).unwrap().group_order / 7));
        assert_eq!(figure1_shape(7, 1).unwrap().vertex_counts(), vec![7, 1]);
        assert_eq!(figure1_shape(3, 1).unwrap().vertex_counts(), vec![6, 1]);
        assert_eq!(figure1_shape(5, 1).unwrap().vertex_counts(), vec![6, 1]);
    }

    #[test]
    fn fundamental_groups_and_good_primes() {
        assert_eq!(fundamental_group_order(DynkinType::A, 2, 7).unwrap(), 3);
        assert_eq!(fundamental_group_order(DynkinType::E8, 8, 11).unwrap(), 1);
        assert_eq!(
            fundamental_group_order(DynkinType::TwistedA, 2, 3).unwrap(),
            1
        );
        assert_eq!(fundamental_group_order(DynkinType::D, 4, 3).unwrap(), 4);
        assert!(fundamental_group_order(DynkinType::TwistedD, 4, 3).is_err());
        assert!(good_prime(DynkinType::C, 3));
        assert!(!good_prime(DynkinType::E8, 5));
        assert!(good_prime(DynkinType::F4, 7));
        assert!(!good_prime(DynkinType::E7, 3));
    }

    #[test]
    fn isolated_sizes() {
        assert_eq!(isolated_class_size(5616, 13, 1, 1).unwrap(), 432);
        assert_eq!(isolated_class_size(6048, 7, 1, 1).unwrap(), 864);
        assert!(isolated_class_size(60, 60, 1, 1).is_err());
        assert!(isolated_class_size(60, 7, 1, 1).is_err());
    }
}

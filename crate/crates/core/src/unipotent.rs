//! Jordan types of unipotent elements and the `q`-exponent of their
//! centralizer orders in `GLε(n,q)`, `Sp(n,q)` and `GO(n,q)`.
//!
//! For `u` with Jordan decomposition `⊕ J_i^{r_i}`, `|C_G(u)|_q = q^{a_u}`:
//!
//! ```text
//! GLε: a_u = Σ_i (i r_i² - r_i(r_i+1)/2) + 2 Σ_{i<j} i r_i r_j
//! Sp:  a_u = ½ Σ_i (i - ½) r_i² + Σ_{i<j} i r_i r_j + Σ_{i even, r_i odd} ¼
//! O:   a_u = ½ Σ_i (i - ½) r_i² + Σ_{i<j} i r_i r_j - ½ Σ_i r_i + Σ_{r_i odd} ¼
//! ```
//!
//! In the cross terms `i` is the smaller block size. Evaluation is exact over
//! the rationals and a non-integral result is an error.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::MatrixRing;

/// Family of the ambient group for a Jordan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JordanFamily {
    /// `GL(n,q)` or `GU(n,q)`.
    #[serde(rename = "GL")]
    Linear,
    #[serde(rename = "Sp")]
    Symplectic,
    #[serde(rename = "O")]
    Orthogonal,
}

impl fmt::Display for JordanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JordanFamily::Linear => "GL",
            JordanFamily::Symplectic => "Sp",
            JordanFamily::Orthogonal => "O",
        })
    }
}

impl std::str::FromStr for JordanFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" | "gu" | "sl" | "su" | "glε" => Ok(JordanFamily::Linear),
            "sp" => Ok(JordanFamily::Symplectic),
            "o" | "go" | "so" | "omega" => Ok(JordanFamily::Orthogonal),
            _ => Err(Error::InvalidInput(format!("unknown family {s:?}"))),
        }
    }
}

/// `⊕ J_i^{r_i}` as `(i, r_i)` pairs with strictly increasing `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanType {
    pub family: JordanFamily,
    pub n: usize,
    pub parts: Vec<(usize, usize)>,
}

impl JordanType {
    pub fn new(family: JordanFamily, n: usize, parts: Vec<(usize, usize)>) -> Self {
        JordanType { family, n, parts }
    }

    /// From block sizes in any order.
    pub fn from_blocks(family: JordanFamily, blocks: &[usize]) -> Self {
        let mut sorted = blocks.to_vec();
        sorted.sort_unstable();
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for b in sorted {
            match parts.last_mut() {
                Some((i, r)) if *i == b => *r += 1,
                _ => parts.push((b, 1)),
            }
        }
        JordanType {
            family,
            n: blocks.iter().sum(),
            parts,
        }
    }

    /// Block sizes ascending, each repeated by its multiplicity.
    pub fn blocks(&self) -> Vec<usize> {
        self.parts
            .iter()
            .flat_map(|&(i, r)| std::iter::repeat_n(i, r))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(|&(i, _)| i == 1)
    }

    /// Partition of `n`, strictly increasing positive block sizes with
    /// positive multiplicities, and the Sp/O parity rule.
    pub fn validate(&self) -> bool {
        let well_formed = self.parts.iter().all(|&(i, r)| i >= 1 && r >= 1)
            && self.parts.windows(2).all(|w| w[0].0 < w[1].0)
            && self.parts.iter().map(|&(i, r)| i * r).sum::<usize>() == self.n;
        let parity = match self.family {
            JordanFamily::Linear => true,
            JordanFamily::Symplectic => self.parts.iter().all(|&(i, r)| i % 2 == 0 || r % 2 == 0),
            JordanFamily::Orthogonal => self.parts.iter().all(|&(i, r)| i % 2 == 1 || r % 2 == 0),
        };
        well_formed && parity
    }

    /// Exact rational value of the exponent formula.
    pub fn q_exponent_ratio(&self) -> Ratio<i64> {
        let half = Ratio::new(1, 2);
        let quarter = Ratio::new(1, 4);
        let int = |x: usize| Ratio::from_integer(x as i64);
        let mut cross = Ratio::from_integer(0);
        for (a, &(i, ri)) in self.parts.iter().enumerate() {
            for &(_, rj) in &self.parts[a + 1..] {
                cross += int(i * ri * rj);
            }
        }
        match self.family {
            JordanFamily::Linear => {
                let diag: Ratio<i64> = self
                    .parts
                    .iter()
                    .map(|&(i, r)| int(i * r * r) - int(r * (r + 1)) * half)
                    .sum();
                diag + cross * 2
            }
            JordanFamily::Symplectic | JordanFamily::Orthogonal => {
                let quad: Ratio<i64> = self
                    .parts
                    .iter()
                    .map(|&(i, r)| (int(i) - half) * int(r * r))
                    .sum();
                let mut a = quad * half + cross;
                if self.family == JordanFamily::Symplectic {
                    for &(i, r) in &self.parts {
                        if i % 2 == 0 && r % 2 == 1 {
                            a += quarter;
                        }
                    }
                } else {
                    a -= int(self.parts.iter().map(|&(_, r)| r).sum()) * half;
                    for &(_, r) in &self.parts {
                        if r % 2 == 1 {
                            a += quarter;
                        }
                    }
                }
                a
            }
        }
    }

    /// `a_u`; errors if the type is invalid or the value is not an integer.
    pub fn q_exponent(&self) -> Result<u64> {
        if !self.validate() {
            return Err(Error::InvalidInput(format!("invalid Jordan type {self}")));
        }
        let a = self.q_exponent_ratio();
        if !a.is_integer() || *a.numer() < 0 {
            return Err(Error::NonIntegral {
                num: *a.numer(),
                den: *a.denom(),
                ty: self.to_string(),
            });
        }
        Ok(a.to_integer() as u64)
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}):", self.family, self.n)?;
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|&(i, r)| {
                if r == 1 {
                    format!("J{i}")
                } else {
                    format!("J{i}^{r}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Lie rank `ℓ`: `GLε(n) → n-1`, `Sp(2ℓ) → ℓ`, `O(2ℓ+1) → ℓ`, `O(2ℓ) → ℓ`.
pub fn lie_rank(family: JordanFamily, n: usize) -> Result<usize> {
    match family {
        JordanFamily::Linear if n >= 1 => Ok(n - 1),
        JordanFamily::Symplectic if n.is_multiple_of(2) && n >= 2 => Ok(n / 2),
        JordanFamily::Orthogonal if n >= 2 => Ok(n / 2),
        _ => Err(Error::InvalidInput(format!(
            "no rank for {family} in dimension {n}"
        ))),
    }
}

/// The valid type whose exponent equals the rank.
pub fn regular_type(family: JordanFamily, n: usize) -> Result<JordanType> {
    lie_rank(family, n)?;
    let parts = match family {
        JordanFamily::Orthogonal if n.is_multiple_of(2) => vec![(1, 1), (n - 1, 1)],
        _ => vec![(n, 1)],
    };
    Ok(JordanType::new(family, n, parts))
}

/// All valid types of dimension `n`, ordered lexicographically by their
/// ascending block sequence.
pub fn enumerate_types(family: JordanFamily, n: usize) -> Vec<JordanType> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_ascending(n, 1, &mut current, &mut |blocks| {
        let jt = JordanType::from_blocks(family, blocks);
        if jt.validate() {
            out.push(jt);
        }
    });
    out
}

// Emits partitions as non-decreasing sequences in lexicographic order.
fn partitions_ascending(
    remaining: usize,
    min: usize,
    current: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for part in min..=remaining {
        let rest = remaining - part;
        // the tail must be empty or start at >= part
        if rest != 0 && rest < part {
            continue;
        }
        current.push(part);
        partitions_ascending(rest, part, current, emit);
        current.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeExponent {
    pub parts: Vec<(usize, usize)>,
    pub a: u64,
    pub regular: bool,
}

/// Outcome of checking `a_v ≥ ℓ` (equality only at the regular type).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentBoundReport {
    pub family: JordanFamily,
    pub n: usize,
    pub types: Vec<TypeExponent>,
    pub rank: usize,
    pub bound_ok: bool,
}

/// Minimum dimension in which the bound is asserted.
pub fn bound_min_dimension(family: JordanFamily, n: usize) -> usize {
    match family {
        JordanFamily::Linear => 4,
        JordanFamily::Symplectic => 6,
        JordanFamily::Orthogonal if n % 2 == 1 => 5,
        JordanFamily::Orthogonal => 6,
    }
}

/// Exponents of every valid type plus the bound verdict. Requires `n` in the
/// range where the bound is claimed.
pub fn verify_unipotent_bound(family: JordanFamily, n: usize) -> Result<UnipotentBoundReport> {
    let rank = lie_rank(family, n)?;
    if n < bound_min_dimension(family, n) {
        return Err(Error::InvalidInput(format!(
            "{family}({n}) is below the dimensions covered by the bound"
        )));
    }
    let report = exponent_table(family, n)?;
    Ok(UnipotentBoundReport { rank, ..report })
}

/// Exponent table with the bound verdict, without the dimension restriction.
pub fn exponent_table(family: JordanFamily, n: usize) -> Result<UnipotentBoundReport> {
    let rank = lie_rank(family, n)?;
    let regular = regular_type(family, n)?;
    let mut types = Vec::new();
    let mut bound_ok = true;
    for jt in enumerate_types(family, n) {
        let a = jt.q_exponent()?;
        let is_regular = jt == regular;
        if !jt.is_identity() {
            let ok = if is_regular {
                a == rank as u64
            } else {
                a > rank as u64
            };
            bound_ok &= ok;
        }
        types.push(TypeExponent {
            parts: jt.parts.clone(),
            a,
            regular: is_regular,
        });
    }
    Ok(UnipotentBoundReport {
        family,
        n,
        types,
        rank,
        bound_ok,
    })
}

/// Jordan type of a unipotent matrix from the ranks of `(u - 1)^k`.
pub fn jordan_type_of(ring: &MatrixRing, u: &[u8], family: JordanFamily) -> Result<JordanType> {
    let n = ring.dim();
    let nil = ring.sub(u, &ring.identity());
    // ranks[k] = rank of nil^k
    let mut ranks = vec![n];
    let mut pw = ring.identity();
    loop {
        pw = ring.mul(&pw, &nil);
        let rk = ring.rank(&pw);
        ranks.push(rk);
        if rk == 0 {
            break;
        }
        if ranks.len() > n + 1 {
            return Err(Error::InvalidInput("matrix is not unipotent".into()));
        }
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    let mut parts = Vec::new();
    for k in 1..ranks.len() {
        let at_least_k = ranks[k - 1] - ranks[k];
        let at_least_next = if k + 1 < ranks.len() {
            ranks[k] - ranks[k + 1]
        } else {
            0
        };
        let exactly = at_least_k - at_least_next;
        if exactly > 0 {
            parts.push((k, exactly));
        }
    }
    Ok(JordanType::new(family, n, parts))
}

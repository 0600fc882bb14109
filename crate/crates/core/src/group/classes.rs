//! Conjugacy classes by orbit sweep and the class profiles derived from them.

use serde::{Deserialize, Serialize};

use crate::arith::is_power_of;
use crate::divgraphs::{divisibility_graph, DivGraph};
use crate::error::{Error, Result};

use super::analysis::element_order;
use super::quotient::QuotientGroup;
use super::table::GroupTable;
use super::FiniteGroup;

/// Conjugacy classes of a [`FiniteGroup`], central ones included.
///
/// Classes are listed in order of their minimal element, which is also the
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub rep_orders: Vec<u64>,
    pub class_of: Vec<u32>,
    /// For each element `x`, some `t` with `t⁻¹·rep·t = x` (when requested).
    pub transversal: Option<Vec<u32>>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn order_of(&self, x: usize) -> u64 {
        self.rep_orders[self.class_of[x] as usize]
    }

    pub fn class_size_of(&self, x: usize) -> usize {
        self.sizes[self.class_of[x] as usize]
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.class_size_of(x) == 1
    }
}

/// Orbit sweep of the conjugation action, generator by generator.
pub fn conjugacy_classes<G: FiniteGroup>(g: &G, with_transversal: bool) -> ConjugacyClasses {
    let n = g.order();
    let k = g.generators().len();
    let mut class_of = vec![u32::MAX; n];
    let mut transversal = if with_transversal {
        Some(vec![u32::MAX; n])
    } else {
        None
    };
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut queue = Vec::new();
    for x in 0..n {
        if class_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        class_of[x] = id;
        if let Some(t) = transversal.as_mut() {
            t[x] = g.identity() as u32;
        }
        queue.clear();
        queue.push(x);
        let mut head = 0;
        while head < queue.len() {
            let z = queue[head];
            head += 1;
            for gi in 0..k {
                let y = g.conjugate_by_generator(z, gi);
                if class_of[y] == u32::MAX {
                    class_of[y] = id;
                    if let Some(t) = transversal.as_mut() {
                        // rep^(t_z) = z, so rep^(t_z·g) = y
                        t[y] = g.mul(t[z] as usize, g.generators()[gi]) as u32;
                    }
                    queue.push(y);
                }
            }
        }
        reps.push(x);
        sizes.push(queue.len());
    }
    let rep_orders = reps.iter().map(|&r| element_order(g, r)).collect();
    ConjugacyClasses {
        reps,
        sizes,
        rep_orders,
        class_of,
        transversal,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassRecord {
    pub size: u128,
    pub cent: u128,
    pub rep_order: u64,
    pub unipotent: bool,
    pub mult: usize,
}

/// Non-central classes, aggregated by `(size, cent, rep_order, unipotent)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassProfile {
    pub order: u128,
    pub center: u128,
    pub classes: Vec<ClassRecord>,
}

/// Profile of `g`; `p` decides the unipotent flag.
pub fn profile_of<G: FiniteGroup>(g: &G, p: u64) -> (ClassProfile, ConjugacyClasses) {
    let classes = conjugacy_classes(g, false);
    let order = g.order() as u128;
    let mut center = 0u128;
    let mut records: Vec<ClassRecord> = Vec::new();
    for (i, &size) in classes.sizes.iter().enumerate() {
        if size == 1 {
            center += 1;
            continue;
        }
        let o = classes.rep_orders[i];
        records.push(ClassRecord {
            size: size as u128,
            cent: order / size as u128,
            rep_order: o,
            unipotent: is_power_of(o as u128, p as u128),
            mult: 1,
        });
    }
    records.sort();
    let mut classes_out: Vec<ClassRecord> = Vec::new();
    for r in records {
        match classes_out.last_mut() {
            Some(last)
                if (last.size, last.cent, last.rep_order, last.unipotent)
                    == (r.size, r.cent, r.rep_order, r.unipotent) =>
            {
                last.mult += 1
            }
            _ => classes_out.push(r),
        }
    }
    (
        ClassProfile {
            order,
            center,
            classes: classes_out,
        },
        classes,
    )
}

pub fn conjugacy_profile(t: &GroupTable) -> ClassProfile {
    profile_of(t, t.spec().characteristic()).0
}

/// Profile of `G/Z(G)`.
pub fn quotient_profile(t: &GroupTable) -> ClassProfile {
    let q = QuotientGroup::by_center(t);
    profile_of(&q, t.spec().characteristic()).0
}

impl ClassProfile {
    /// Distinct non-central class sizes, ascending.
    pub fn class_sizes(&self) -> Vec<u128> {
        let mut v: Vec<u128> = self.classes.iter().map(|c| c.size).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Distinct centralizer orders of non-central elements, ascending.
    pub fn cent_orders(&self) -> Vec<u128> {
        let mut v: Vec<u128> = self.classes.iter().map(|c| c.cent).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn divgraph(&self) -> DivGraph {
        divisibility_graph(&self.class_sizes())
    }

    pub fn unipotent_sizes(&self) -> Vec<u128> {
        let mut v: Vec<u128> = self
            .classes
            .iter()
            .filter(|c| c.unipotent)
            .map(|c| c.size)
            .collect();
        v.dedup();
        v
    }

    pub fn involution_sizes(&self) -> Vec<u128> {
        let mut v: Vec<u128> = self
            .classes
            .iter()
            .filter(|c| c.rep_order == 2)
            .map(|c| c.size)
            .collect();
        v.dedup();
        v
    }

    pub fn class_count(&self) -> usize {
        self.classes.iter().map(|c| c.mult).sum()
    }

    /// Class equation and `|x^G|·|C(x)| = |G|`.
    pub fn check_invariants(&self) -> Result<()> {
        let total: u128 = self.center
            + self
                .classes
                .iter()
                .map(|c| c.size * c.mult as u128)
                .sum::<u128>();
        if total != self.order {
            return Err(Error::Consistency(format!(
                "class equation sums to {total}, group order is {}",
                self.order
            )));
        }
        if let Some(c) = self.classes.iter().find(|c| c.size * c.cent != self.order) {
            return Err(Error::Consistency(format!(
                "class size {} times centralizer {} is not the group order",
                c.size, c.cent
            )));
        }
        Ok(())
    }
}

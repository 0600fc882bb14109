//! Brute-force group kernel: enumeration of classical matrix groups, class
//! profiles of `G` and `G/Z(G)`, prime graphs, commuting-graph components,
//! CC-torus checks, and a commutant-algebra centralizer oracle that needs no
//! enumeration at all.

mod analysis;
mod classes;
mod gens;
mod oracle;
mod quotient;
mod setting;
mod spec;
mod table;

pub use analysis::{
    centralizer, check_centralizer_identities, commuting_components, cyclic_subgroup,
    element_order, elements_of_order, prime_graph, prime_graph_from_orders, verify_cc_torus,
    CcTorusReport, CommutingComponents, IdentityReport, PrimeGraph,
};
pub use classes::{
    conjugacy_classes, conjugacy_profile, profile_of, quotient_profile, ClassProfile, ClassRecord,
    ConjugacyClasses,
};
pub use gens::{standard_generators, StandardGenerators};
pub use oracle::{commutant_centralizer_order, commutant_dimension, DEFAULT_ORACLE_CAP};
pub use quotient::QuotientGroup;
pub use setting::{ClassicalSetting, Form, FormKind};
pub use spec::{Family, GroupSpec, Sign, SpecLimits};
pub use table::{generate, GroupTable, DEFAULT_ORDER_CAP};

/// A finite group with elements indexed `0..order()`.
///
/// Index order is the canonical element order: for matrix groups the order
/// of matrix keys, for quotients the order of minimal coset members.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    fn generators(&self) -> &[usize];

    fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `g⁻¹ x g` for the `k`-th generator `g`.
    fn conjugate_by_generator(&self, x: usize, k: usize) -> usize {
        let g = self.generators()[k];
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Indices of central elements, ascending.
    fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&x| self.generators().iter().all(|&g| self.commutes(x, g)))
            .collect()
    }
}

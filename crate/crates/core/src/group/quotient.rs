use super::FiniteGroup;

/// `G/Z(G)` with cosets indexed by their minimal member.
#[derive(Debug, Clone)]
pub struct QuotientGroup<'a, G: FiniteGroup> {
    parent: &'a G,
    center: Vec<usize>,
    coset_of: Vec<u32>,
    reps: Vec<usize>,
    generators: Vec<usize>,
    generator_inverses: Vec<usize>,
}

impl<'a, G: FiniteGroup> QuotientGroup<'a, G> {
    pub fn by_center(parent: &'a G) -> Self {
        let center = parent.center();
        let mut coset_of = vec![u32::MAX; parent.order()];
        let mut reps = Vec::with_capacity(parent.order() / center.len().max(1));
        // ascending scan, so the first member seen is the minimal one
        for x in 0..parent.order() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &z in &center {
                coset_of[parent.mul(x, z)] = id;
            }
        }
        let identity = coset_of[parent.identity()] as usize;
        let mut generators: Vec<usize> = parent
            .generators()
            .iter()
            .map(|&g| coset_of[g] as usize)
            .filter(|&g| g != identity)
            .collect();
        generators.dedup();
        let mut q = QuotientGroup {
            parent,
            center,
            coset_of,
            reps,
            generators,
            generator_inverses: Vec::new(),
        };
        q.generator_inverses = q.generators.iter().map(|&g| q.inv(g)).collect();
        q
    }

    pub fn parent(&self) -> &G {
        self.parent
    }

    pub fn parent_center(&self) -> &[usize] {
        &self.center
    }

    /// Minimal parent element of coset `i`.
    pub fn representative(&self, i: usize) -> usize {
        self.reps[i]
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x] as usize
    }
}

impl<G: FiniteGroup> FiniteGroup for QuotientGroup<'_, G> {
    fn order(&self) -> usize {
        self.reps.len()
    }

    fn identity(&self) -> usize {
        self.coset_of[self.parent.identity()] as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.coset_of[self.parent.mul(self.reps[a], self.reps[b])] as usize
    }

    fn inv(&self, a: usize) -> usize {
        self.coset_of[self.parent.inv(self.reps[a])] as usize
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn conjugate_by_generator(&self, x: usize, k: usize) -> usize {
        let g = self.generators[k];
        let gi = self.generator_inverses[k];
        self.mul(self.mul(gi, x), g)
    }
}

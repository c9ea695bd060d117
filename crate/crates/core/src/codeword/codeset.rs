use crate::codeword::ambient::{Ambient, Codeword};
use crate::error::{Error, Result};
use crate::linalg::Basis;
use crate::ring::AmbientElement;

/// Default cap on the number of ambient elements a closure may range over.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// An explicit additive code: the sorted keys of its words plus an
/// echelon basis. Keys follow the canonical word order of [`Ambient`].
#[derive(Clone, Debug)]
pub struct CodeSet {
    ambient: Ambient,
    keys: Vec<u64>,
    basis: Basis,
}

impl PartialEq for CodeSet {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.keys == other.keys
    }
}

impl Eq for CodeSet {}

impl CodeSet {
    /// Builds a code from arbitrary words, rejecting sets that are not
    /// closed under addition.
    pub fn from_words(ambient: Ambient, words: impl IntoIterator<Item = Codeword>) -> Result<Self> {
        let mut keys = Vec::new();
        for w in words {
            ambient.check(&w)?;
            keys.push(ambient.key(&w));
        }
        Self::from_keys(ambient, keys)
    }

    pub fn from_keys(ambient: Ambient, mut keys: Vec<u64>) -> Result<Self> {
        keys.sort_unstable();
        keys.dedup();
        let basis = Basis::from_vectors(keys.iter().copied());
        // an additive set is exactly the span of its own basis
        let closed = keys.first() == Some(&0) && keys.len() as u128 == 1u128 << basis.rank();
        if !closed {
            return Err(Error::NotAdditive);
        }
        Ok(CodeSet { ambient, keys, basis })
    }

    pub fn from_basis(ambient: Ambient, basis: Basis) -> Self {
        CodeSet {
            ambient,
            keys: basis.span(),
            basis,
        }
    }

    pub fn zero(ambient: Ambient) -> Self {
        Self::from_basis(ambient, Basis::new())
    }

    pub fn full(ambient: Ambient, budget: u64) -> Result<Self> {
        ambient.check_budget(budget)?;
        let basis = Basis::from_vectors((0..ambient.bits()).map(|i| 1u64 << i));
        Ok(Self::from_basis(ambient, basis))
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// `log2 |C|`.
    pub fn dimension(&self) -> u32 {
        self.basis.rank()
    }

    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn words(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.keys.iter().map(|&k| self.ambient.codeword(k))
    }

    pub fn contains(&self, c: &Codeword) -> Result<bool> {
        self.ambient.check(c)?;
        Ok(self.contains_key(self.ambient.key(c)))
    }

    pub fn contains_key(&self, key: u64) -> bool {
        self.keys.binary_search(&key).is_ok()
    }

    /// Whether the shift of every word stays in the code. For an additive
    /// set it is enough to shift a basis.
    pub fn is_constacyclic(&self) -> bool {
        self.basis
            .vectors()
            .all(|v| self.basis.contains(self.ambient.shift_key(v)))
    }

    pub fn is_subset_of(&self, other: &CodeSet) -> bool {
        self.ambient == other.ambient && self.basis.is_subspace_of(&other.basis)
    }

    /// Words satisfying `keep`, as a code. The predicate must select an
    /// additive subset.
    pub(crate) fn filter(&self, keep: impl Fn(u64) -> bool) -> Result<CodeSet> {
        let keys = self.keys.iter().copied().filter(|&k| keep(k)).collect();
        CodeSet::from_keys(self.ambient, keys)
    }
}

/// Fixed-point closure of `gens` under addition, `x*` and `u*`, returned as
/// an echelon basis of the generated submodule.
///
/// Breadth-first: every vector that enlarges the span queues its images
/// under `x*` and `u*`. Addition is implicit in taking spans, and since both
/// maps are linear, closing the basis closes the whole span.
pub fn closure_basis(ambient: Ambient, gens: impl IntoIterator<Item = u64>) -> Basis {
    let mut basis = Basis::new();
    let mut queue: Vec<u64> = gens.into_iter().collect();
    while let Some(v) = queue.pop() {
        if basis.insert(v) {
            queue.push(ambient.shift_key(v));
            queue.push(ambient.u_key(v));
        }
    }
    basis
}

/// The R[x]-submodule generated by `generators`, enumerated explicitly.
pub fn enumerate_closure(generators: &[AmbientElement], alpha: usize, beta: usize, budget: u64) -> Result<CodeSet> {
    if generators.is_empty() {
        return Err(Error::Degenerate("closure needs at least one generator".into()));
    }
    let ambient = Ambient::new(alpha, beta)?;
    ambient.check_budget(budget)?;
    let keys = generators
        .iter()
        .map(|g| ambient.element_key(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(CodeSet::from_basis(ambient, closure_basis(ambient, keys)))
}

/// The GF(2) span of `gens`: the additive closure alone.
pub fn additive_span(ambient: Ambient, gens: impl IntoIterator<Item = u64>) -> CodeSet {
    CodeSet::from_basis(ambient, Basis::from_vectors(gens))
}

//! Finite binary relations over a bounded vertex universe.
//!
//! A [`Relation`] is a dense bit matrix: row `x` holds the successors of `x`
//! as a 64-bit mask. Every structure in this crate (causality, conflict,
//! undirected edges) is one of these, so the universe is capped at
//! [`MAX_UNIVERSE`] vertices.

use std::fmt;

use thiserror::Error;

/// Largest supported universe. Vertex sets are single `u64` words.
pub const MAX_UNIVERSE: usize = 64;

/// 0-based index of a vertex (an event, or a graph node).
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("universe {0} exceeds the supported maximum of {MAX_UNIVERSE}")]
    UniverseTooLarge(usize),
    #[error("pair ({0}, {1}) lies outside a universe of size {2}")]
    OutOfBounds(VertexId, VertexId, usize),
    #[error("relation is not a partial order over its field")]
    NotAPartialOrder,
}

/// A finite set of vertices, iterated in ascending order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= MAX_UNIVERSE);
        if n == MAX_UNIVERSE {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: VertexId) -> Self {
        assert!(x < MAX_UNIVERSE);
        VertexSet(1u64 << x)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: VertexId) -> bool {
        x < MAX_UNIVERSE && self.0 & (1u64 << x) != 0
    }

    pub fn insert(&mut self, x: VertexId) {
        assert!(x < MAX_UNIVERSE);
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: VertexId) {
        if x < MAX_UNIVERSE {
            self.0 &= !(1u64 << x);
        }
    }

    pub fn without(self, x: VertexId) -> Self {
        let mut s = self;
        s.remove(x);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Quantifier-level properties of a relation, see [`Relation::properties`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationProperties {
    pub transitive: bool,
    pub antisymmetric: bool,
    pub symmetric: bool,
    pub irreflexive: bool,
    pub reflexive_over_field: bool,
}

impl RelationProperties {
    /// Reflexive over its field, transitive and antisymmetric.
    pub fn is_partial_order(&self) -> bool {
        self.reflexive_over_field && self.transitive && self.antisymmetric
    }
}

/// A finite set of ordered pairs `(x, y)` with `x, y < universe`.
///
/// Binary operations accept operands with different universes; the result
/// lives in the larger of the two.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    universe: usize,
    rows: Vec<u64>,
}

impl Relation {
    pub fn empty(universe: usize) -> Self {
        assert!(
            universe <= MAX_UNIVERSE,
            "universe {universe} exceeds {MAX_UNIVERSE}"
        );
        Relation {
            universe,
            rows: vec![0; universe],
        }
    }

    pub fn from_pairs<I>(universe: usize, pairs: I) -> Result<Self, RelationError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if universe > MAX_UNIVERSE {
            return Err(RelationError::UniverseTooLarge(universe));
        }
        let mut r = Relation::empty(universe);
        for (x, y) in pairs {
            if x >= universe || y >= universe {
                return Err(RelationError::OutOfBounds(x, y, universe));
            }
            r.rows[x] |= 1u64 << y;
        }
        Ok(r)
    }

    /// Builds a relation whose universe is just large enough for `pairs`.
    ///
    /// Panics on vertices `>= MAX_UNIVERSE`; intended for literals.
    pub fn of(pairs: &[(VertexId, VertexId)]) -> Self {
        let universe = pairs.iter().map(|&(x, y)| x.max(y) + 1).max().unwrap_or(0);
        Relation::from_pairs(universe, pairs.iter().copied()).expect("pairs within bounds")
    }

    /// The identity relation on `set`.
    pub fn identity_on(universe: usize, set: VertexSet) -> Self {
        let mut r = Relation::empty(universe);
        for x in set {
            r.insert(x, x);
        }
        r
    }

    /// `set × set`.
    pub fn square(universe: usize, set: VertexSet) -> Self {
        let mut r = Relation::empty(universe);
        for x in set {
            r.rows[x] = set.bits();
        }
        r
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Same pairs, embedded in a universe of size `universe`.
    pub fn with_universe(&self, universe: usize) -> Result<Self, RelationError> {
        Relation::from_pairs(universe, self.pairs())
    }

    pub fn contains(&self, x: VertexId, y: VertexId) -> bool {
        x < self.universe && y < self.universe && self.rows[x] & (1u64 << y) != 0
    }

    /// Panics if either vertex is outside the universe.
    pub fn insert(&mut self, x: VertexId, y: VertexId) {
        assert!(
            x < self.universe && y < self.universe,
            "({x}, {y}) out of bounds"
        );
        self.rows[x] |= 1u64 << y;
    }

    pub fn remove(&mut self, x: VertexId, y: VertexId) {
        if x < self.universe && y < self.universe {
            self.rows[x] &= !(1u64 << y);
        }
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, &row)| VertexSet(row).iter().map(move |y| (x, y)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Successors of `x`, i.e. `R``{x}`.
    pub fn successors(&self, x: VertexId) -> VertexSet {
        if x < self.universe {
            VertexSet(self.rows[x])
        } else {
            VertexSet::empty()
        }
    }

    /// Predecessors of `y`, i.e. `R^-1``{y}`.
    pub fn predecessors(&self, y: VertexId) -> VertexSet {
        (0..self.universe)
            .filter(|&x| self.contains(x, y))
            .collect()
    }

    pub fn domain(&self) -> VertexSet {
        (0..self.universe).filter(|&x| self.rows[x] != 0).collect()
    }

    pub fn range(&self) -> VertexSet {
        VertexSet(self.rows.iter().fold(0, |acc, &r| acc | r))
    }

    pub fn field(&self) -> VertexSet {
        self.domain().union(self.range())
    }

    pub fn converse(&self) -> Relation {
        let mut r = Relation::empty(self.universe);
        for (x, y) in self.pairs() {
            r.rows[y] |= 1u64 << x;
        }
        r
    }

    /// Relational image `{ y | ∃x ∈ set. (x, y) ∈ R }`.
    pub fn image(&self, set: VertexSet) -> VertexSet {
        VertexSet(
            set.iter()
                .filter(|&x| x < self.universe)
                .fold(0, |acc, x| acc | self.rows[x]),
        )
    }

    fn zip_with(&self, other: &Relation, op: impl Fn(u64, u64) -> u64) -> Relation {
        let universe = self.universe.max(other.universe);
        let rows = (0..universe)
            .map(|x| {
                let a = self.rows.get(x).copied().unwrap_or(0);
                let b = other.rows.get(x).copied().unwrap_or(0);
                op(a, b)
            })
            .collect();
        Relation { universe, rows }
    }

    pub fn union(&self, other: &Relation) -> Relation {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Relation) -> Relation {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.difference(other).is_empty()
    }

    /// Same pair set, regardless of declared universe.
    pub fn same_pairs(&self, other: &Relation) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }

    /// Keeps only pairs whose first component lies in `set`.
    pub fn restrict_domain(&self, set: VertexSet) -> Relation {
        let mut r = self.clone();
        for x in 0..r.universe {
            if !set.contains(x) {
                r.rows[x] = 0;
            }
        }
        r
    }

    /// Keeps only pairs with both components in `set`.
    pub fn restrict_to(&self, set: VertexSet) -> Relation {
        let mut r = self.restrict_domain(set);
        for row in &mut r.rows {
            *row &= set.bits();
        }
        r
    }

    /// Relational override `(P - (Domain Q × Range P)) ∪ Q`: agrees with `q`
    /// on `domain(q)` and with `self` elsewhere.
    pub fn override_with(&self, q: &Relation) -> Relation {
        let q_domain = q.domain();
        let mut stripped = self.clone();
        for x in q_domain {
            if x < stripped.universe {
                stripped.rows[x] = 0;
            }
        }
        stripped.union(q)
    }

    /// Removes every pair whose first component is `x` and every pair whose
    /// second component is `y`.
    pub fn remove_vertex_pairs(&self, x: VertexId, y: VertexId) -> Relation {
        let mut r = self.clone();
        if x < r.universe {
            r.rows[x] = 0;
        }
        if y < MAX_UNIVERSE {
            for row in &mut r.rows {
                *row &= !(1u64 << y);
            }
        }
        r
    }

    /// The incomparability square `(field × field) \ (R ∪ R⁻¹)`.
    pub fn sym_complement(&self) -> Relation {
        let field = self.field();
        Relation::square(self.universe, field).difference(&self.union(&self.converse()))
    }

    /// `{ x | (x, x) ∈ R }`.
    pub fn fixed_points(&self) -> VertexSet {
        (0..self.universe)
            .filter(|&x| self.contains(x, x))
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs()
            .all(|(x, y)| VertexSet(self.rows[y]).is_subset(VertexSet(self.rows[x])))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(x, y)| x == y || !self.contains(y, x))
    }

    pub fn is_irreflexive(&self) -> bool {
        self.fixed_points().is_empty()
    }

    pub fn is_reflexive_over_field(&self) -> bool {
        self.field().is_subset(self.fixed_points())
    }

    /// At most one successor per vertex.
    pub fn is_right_unique(&self) -> bool {
        self.rows.iter().all(|r| r.count_ones() <= 1)
    }

    pub fn properties(&self) -> RelationProperties {
        RelationProperties {
            transitive: self.is_transitive(),
            antisymmetric: self.is_antisymmetric(),
            symmetric: self.is_symmetric(),
            irreflexive: self.is_irreflexive(),
            reflexive_over_field: self.is_reflexive_over_field(),
        }
    }

    /// Hasse diagram of a partial order: the covering pairs, self-loops
    /// dropped.
    pub fn transitive_reduction(&self) -> Result<Relation, RelationError> {
        if !self.properties().is_partial_order() {
            return Err(RelationError::NotAPartialOrder);
        }
        let mut strict = self.clone();
        for x in 0..strict.universe {
            strict.rows[x] &= !(1u64 << x);
        }
        let mut reduced = strict.clone();
        for (x, y) in strict.pairs() {
            // (x, y) is implied when some z sits strictly between them.
            if !VertexSet(strict.rows[x])
                .intersection(strict.predecessors(y))
                .is_empty()
            {
                reduced.remove(x, y);
            }
        }
        Ok(reduced)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

//! Monoids and generalized semirings (D, ⊗, ⊕, 𝕀) that parameterize every
//! matvec kernel in this crate.
//!
//! A semiring swaps the ×/+ of ordinary matrix multiplication for arbitrary
//! binary operations over a fixed domain. The three stock instances cover
//! reachability (boolean OR/AND), numeric matvec (+/×) and shortest paths
//! (min/+). Kernels may short-circuit a row fold only when the semiring
//! advertises it via [`Semiring::supports_early_exit`].

use std::fmt::Debug;

/// Element type usable as a semiring domain.
pub trait Scalar: Copy + PartialEq + Debug + Send + Sync + 'static {}
impl<T: Copy + PartialEq + Debug + Send + Sync + 'static> Scalar for T {}

/// Commutative monoid: an associative, commutative `combine` with an identity.
#[derive(Clone, Copy, Debug)]
pub struct Monoid<T: Scalar> {
    combine: fn(T, T) -> T,
    identity: T,
}

impl<T: Scalar> Monoid<T> {
    pub fn new(combine: fn(T, T) -> T, identity: T) -> Self {
        Monoid { combine, identity }
    }

    #[inline]
    pub fn combine(&self, a: T, b: T) -> T {
        (self.combine)(a, b)
    }

    #[inline]
    pub fn identity(&self) -> T {
        self.identity
    }

    /// Fold an iterator with `combine`, starting from the identity.
    pub fn fold<I: IntoIterator<Item = T>>(&self, items: I) -> T {
        items
            .into_iter()
            .fold(self.identity, |acc, x| (self.combine)(acc, x))
    }
}

/// Generalized semiring (D, ⊗, ⊕, 𝕀).
///
/// `add` is the ⊕ monoid with 𝕀 as its identity; `multiply` is ⊗. The
/// optional `annihilator` is a value a* with a* ⊕ x = a* for all x; reaching
/// it makes the rest of a fold irrelevant.
#[derive(Clone, Copy, Debug)]
pub struct Semiring<T: Scalar> {
    add: Monoid<T>,
    multiply: fn(T, T) -> T,
    annihilator: Option<T>,
    boolean_or: bool,
}

impl<T: Scalar> Semiring<T> {
    pub fn new(add: Monoid<T>, multiply: fn(T, T) -> T, annihilator: Option<T>) -> Self {
        Semiring {
            add,
            multiply,
            annihilator,
            boolean_or: false,
        }
    }

    pub fn add(&self) -> &Monoid<T> {
        &self.add
    }

    #[inline]
    pub fn combine(&self, a: T, b: T) -> T {
        self.add.combine(a, b)
    }

    #[inline]
    pub fn multiply(&self, a: T, b: T) -> T {
        (self.multiply)(a, b)
    }

    #[inline]
    pub fn identity(&self) -> T {
        self.add.identity()
    }

    pub fn annihilator(&self) -> Option<T> {
        self.annihilator
    }

    /// Whether this is the boolean OR/AND semiring. Structure-only accounting
    /// and early exit apply only here.
    pub fn is_boolean(&self) -> bool {
        self.boolean_or
    }

    /// True iff a row fold may legally stop at its first contribution.
    ///
    /// Holds only for the boolean OR/AND semiring: ⊕ is OR over a two-value
    /// domain, so any non-identity contribution is the annihilator `true` and
    /// the rest of the fold cannot change the result. min-plus is idempotent
    /// but has no reachable annihilator under finite weights, so it does not
    /// qualify.
    pub fn supports_early_exit(&self) -> bool {
        self.boolean_or && self.annihilator.is_some()
    }
}

fn bool_or(a: bool, b: bool) -> bool {
    a || b
}

fn bool_and(a: bool, b: bool) -> bool {
    a && b
}

/// Boolean semiring ({false, true}, AND, OR, false) used by BFS.
pub fn boolean_lor_land() -> Semiring<bool> {
    let mut s = Semiring::new(Monoid::new(bool_or, false), bool_and, Some(true));
    s.boolean_or = true;
    s
}

/// Domain with ordinary arithmetic + and ×.
pub trait Numeric: Scalar {
    const ZERO: Self;
    fn sum(a: Self, b: Self) -> Self;
    fn prod(a: Self, b: Self) -> Self;
}

impl Numeric for i64 {
    const ZERO: i64 = 0;
    fn sum(a: i64, b: i64) -> i64 {
        a + b
    }
    fn prod(a: i64, b: i64) -> i64 {
        a * b
    }
}

impl Numeric for f64 {
    const ZERO: f64 = 0.0;
    fn sum(a: f64, b: f64) -> f64 {
        a + b
    }
    fn prod(a: f64, b: f64) -> f64 {
        a * b
    }
}

/// Arithmetic semiring (D, ×, +, 0). No annihilator: + is not idempotent.
pub fn plus_times<T: Numeric>() -> Semiring<T> {
    Semiring::new(Monoid::new(T::sum, T::ZERO), T::prod, None)
}

/// Domain with a min and a length-extending + whose identity is ∞.
///
/// The ∞ sentinel is reserved: it is never stored in matrices, so sparse
/// structure stays "finite entries". Extension saturates at ∞.
pub trait Tropical: Scalar {
    const INF: Self;
    fn min2(a: Self, b: Self) -> Self;
    fn extend(a: Self, b: Self) -> Self;
}

impl Tropical for i64 {
    const INF: i64 = i64::MAX;
    fn min2(a: i64, b: i64) -> i64 {
        a.min(b)
    }
    fn extend(a: i64, b: i64) -> i64 {
        a.saturating_add(b)
    }
}

impl Tropical for f64 {
    const INF: f64 = f64::INFINITY;
    fn min2(a: f64, b: f64) -> f64 {
        a.min(b)
    }
    fn extend(a: f64, b: f64) -> f64 {
        a + b
    }
}

/// Tropical semiring (D, +, min, ∞) for Bellman-Ford style relaxation.
pub fn min_plus<T: Tropical>() -> Semiring<T> {
    Semiring::new(Monoid::new(T::min2, T::INF), T::extend, None)
}

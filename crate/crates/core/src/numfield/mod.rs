//! Exact arithmetic in quadratic number fields: integral bases and
//! discriminants, fractional ideals in Hermite form, factorisation of
//! rational primes, `P`-adic valuations, class groups and principality.
//!
//! Fields of degree 3 and 4 are rejected as unsupported.

mod class_group;
mod field;
mod ideal;

pub use class_group::{
    class_group, class_number, fundamental_unit, minkowski_primes, principal_generator, ClassGroup,
    FundamentalUnit,
};
pub use field::{nf_from_disc, nf_make, NfElem, NumberField, OmegaKind};
pub use ideal::{
    element_valuation, factor_rational_prime, ideal_valuation, primes_above, NfIdeal, PrimeIdeal, Valuation,
};

/// Search budgets. Exhausting one yields `Error::CapExceeded`, never a
/// mathematical verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest rational prime tried when selecting `q`.
    pub prime_search: u64,
    /// Largest coefficient range scanned by the principality test.
    pub principal_search: u64,
    /// Continued-fraction steps allowed when looking for the unit.
    pub unit_search: u64,
    pub class_group_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            prime_search: 1_000_000,
            principal_search: 10_000_000,
            unit_search: 1_000_000,
            class_group_order: 10_000,
        }
    }
}

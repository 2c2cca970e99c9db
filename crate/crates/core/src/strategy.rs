//! Interchangeable algorithm variants, registered by name.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{berkowitz, det_bareiss, det_rational, faddeev_leverrier, IntMatrix};
use crate::sym::CharacterTable;
use crate::tensor::{power_closed_form, power_iterative, RepElement, StructureTensor};

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<(&'static str, Box<T>)>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: Vec::new(),
        }
    }

    /// Adds a strategy; a later registration under the same name replaces
    /// the earlier one.
    pub fn register(&mut self, name: &'static str, strategy: Box<T>) -> &mut Self {
        self.entries.retain(|(n, _)| *n != name);
        self.entries.push((name, strategy));
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| s.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                kind: self.kind,
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }
}

pub trait PowerMethod {
    /// Multiplicities of `V_i^{⊗k}`.
    fn power(&self, table: &CharacterTable, t: &StructureTensor, i: usize, k: usize) -> Result<RepElement>;
}

pub struct Iterative;

impl PowerMethod for Iterative {
    fn power(&self, _table: &CharacterTable, t: &StructureTensor, i: usize, k: usize) -> Result<RepElement> {
        power_iterative(i, k, t)
    }
}

pub struct ClosedForm;

impl PowerMethod for ClosedForm {
    fn power(&self, table: &CharacterTable, _t: &StructureTensor, i: usize, k: usize) -> Result<RepElement> {
        if k == 0 {
            return Err(Error::OutOfRange {
                what: "exponent",
                value: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        let exponent = u32::try_from(k).map_err(|_| Error::OutOfRange {
            what: "exponent",
            value: k,
            min: 1,
            max: u32::MAX as usize,
        })?;
        power_closed_form(i, table)?.evaluate(exponent)
    }
}

pub fn power_methods() -> Registry<dyn PowerMethod> {
    let mut r: Registry<dyn PowerMethod> = Registry::new("power method");
    r.register("iterative", Box::new(Iterative));
    r.register("closed-form", Box::new(ClosedForm));
    r
}

pub trait DeterminantMethod {
    fn det(&self, m: &IntMatrix) -> Result<BigInt>;
}

pub struct Bareiss;

impl DeterminantMethod for Bareiss {
    fn det(&self, m: &IntMatrix) -> Result<BigInt> {
        det_bareiss(m)
    }
}

pub struct RationalElimination;

impl DeterminantMethod for RationalElimination {
    fn det(&self, m: &IntMatrix) -> Result<BigInt> {
        Ok(det_rational(&m.to_rational())?.to_integer())
    }
}

pub fn determinant_methods() -> Registry<dyn DeterminantMethod> {
    let mut r: Registry<dyn DeterminantMethod> = Registry::new("determinant method");
    r.register("bareiss", Box::new(Bareiss));
    r.register("rational", Box::new(RationalElimination));
    r
}

pub trait CharpolyMethod {
    /// Coefficients highest degree first.
    fn charpoly(&self, m: &IntMatrix) -> Result<Vec<BigInt>>;
}

pub struct FaddeevLeVerrier;

impl CharpolyMethod for FaddeevLeVerrier {
    fn charpoly(&self, m: &IntMatrix) -> Result<Vec<BigInt>> {
        faddeev_leverrier(m)
    }
}

pub struct Berkowitz;

impl CharpolyMethod for Berkowitz {
    fn charpoly(&self, m: &IntMatrix) -> Result<Vec<BigInt>> {
        berkowitz(m)
    }
}

pub fn charpoly_methods() -> Registry<dyn CharpolyMethod> {
    let mut r: Registry<dyn CharpolyMethod> = Registry::new("charpoly method");
    r.register("faddeev-leverrier", Box::new(FaddeevLeVerrier));
    r.register("berkowitz", Box::new(Berkowitz));
    r
}

//! Cumulant sequences of named variables and free families.

use crate::exact::{sym, MultiPoly, Rational};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// How a cumulant sequence extends beyond its stored prefix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KappaDefault {
    /// Higher cumulants are exactly zero.
    Zero,
    /// Higher cumulants are fresh symbols `k[name;r]`.
    Symbolic,
}

/// A univariate free-cumulant sequence attached to a variable name.
#[derive(Clone, Debug)]
pub struct CumulantSpec {
    name: String,
    /// `kappa[k]` is `K_{k+1}`.
    kappa: Vec<MultiPoly>,
    even_only: bool,
    default: KappaDefault,
}

impl CumulantSpec {
    pub fn new(
        name: impl Into<String>,
        kappa: Vec<MultiPoly>,
        even_only: bool,
        default: KappaDefault,
    ) -> Result<CumulantSpec> {
        let spec = CumulantSpec {
            name: name.into(),
            kappa,
            even_only,
            default,
        };
        if spec.even_only
            && spec
                .kappa
                .iter()
                .enumerate()
                .any(|(k, v)| (k + 1) % 2 == 1 && !v.is_zero())
        {
            return Err(Error::invalid(format!(
                "even-only variable {} has a nonzero odd cumulant",
                spec.name
            )));
        }
        Ok(spec)
    }

    pub fn from_rationals(name: impl Into<String>, vals: &[Rational]) -> CumulantSpec {
        CumulantSpec {
            name: name.into(),
            kappa: vals.iter().cloned().map(MultiPoly::from_rational).collect(),
            even_only: false,
            default: KappaDefault::Zero,
        }
    }

    /// Standard semicircular: `K_2 = 1`, everything else zero.
    pub fn standard_semicircular(name: impl Into<String>) -> CumulantSpec {
        CumulantSpec {
            name: name.into(),
            kappa: vec![MultiPoly::zero(), MultiPoly::one()],
            even_only: true,
            default: KappaDefault::Zero,
        }
    }

    /// Semicircular with the given mean and variance (`K_1`, `K_2`).
    pub fn semicircular(name: impl Into<String>, mean: Rational, var: Rational) -> CumulantSpec {
        CumulantSpec {
            name: name.into(),
            kappa: vec![MultiPoly::from_rational(mean), MultiPoly::from_rational(var)],
            even_only: false,
            default: KappaDefault::Zero,
        }
    }

    /// Free Poisson of rate `lambda`, stored up to `order`.
    pub fn free_poisson(name: impl Into<String>, lambda: Rational, order: usize) -> CumulantSpec {
        CumulantSpec {
            name: name.into(),
            kappa: vec![MultiPoly::from_rational(lambda); order],
            even_only: false,
            default: KappaDefault::Zero,
        }
    }

    /// Fully symbolic sequence `k[name;1], k[name;2], ...`.
    pub fn symbolic(name: impl Into<String>) -> CumulantSpec {
        CumulantSpec {
            name: name.into(),
            kappa: Vec::new(),
            even_only: false,
            default: KappaDefault::Symbolic,
        }
    }

    /// Symbolic with all odd cumulants forced to zero.
    pub fn symbolic_even(name: impl Into<String>) -> CumulantSpec {
        CumulantSpec {
            name: name.into(),
            kappa: Vec::new(),
            even_only: true,
            default: KappaDefault::Symbolic,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn even_only(&self) -> bool {
        self.even_only
    }

    /// `K_order` for this variable.
    pub fn kappa(&self, order: usize) -> MultiPoly {
        assert!(order >= 1, "cumulant orders start at 1");
        if self.even_only && order % 2 == 1 {
            return MultiPoly::zero();
        }
        if order <= self.kappa.len() {
            return self.kappa[order - 1].clone();
        }
        match self.default {
            KappaDefault::Zero => MultiPoly::zero(),
            KappaDefault::Symbolic => sym(&format!("k[{};{}]", self.name, order)),
        }
    }

    /// Can `K_order` be nonzero? Used to prune block sizes.
    pub fn contributes(&self, order: usize) -> bool {
        !self.kappa(order).is_zero()
    }

    /// Largest order that can contribute, `None` when unbounded.
    pub fn max_contributing(&self) -> Option<usize> {
        match self.default {
            KappaDefault::Symbolic => None,
            KappaDefault::Zero => Some(
                self.kappa
                    .iter()
                    .enumerate()
                    .rev()
                    .find(|(_, v)| !v.is_zero())
                    .map(|(k, _)| k + 1)
                    .unwrap_or(0),
            ),
        }
    }
}

/// An association of variable names to cumulant sequences; distinct names
/// are mutually free, so mixed cumulants across names vanish.
#[derive(Clone, Debug, Default)]
pub struct FreeFamily {
    members: BTreeMap<String, CumulantSpec>,
}

impl FreeFamily {
    pub fn new() -> FreeFamily {
        FreeFamily::default()
    }

    pub fn with(mut self, spec: CumulantSpec) -> FreeFamily {
        self.members.insert(spec.name().to_string(), spec);
        self
    }

    pub fn insert(&mut self, spec: CumulantSpec) {
        self.members.insert(spec.name().to_string(), spec);
    }

    pub fn get(&self, name: &str) -> Result<&CumulantSpec> {
        self.members
            .get(name)
            .ok_or_else(|| Error::invalid(format!("unknown variable {name:?}")))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.members.keys().map(|s| s.as_str())
    }

    pub fn members(&self) -> impl Iterator<Item = &CumulantSpec> {
        self.members.values()
    }

    /// `n` standard semicircular variables named `X1..Xn`.
    pub fn standard_semicircular_family(n: usize) -> FreeFamily {
        let mut fam = FreeFamily::new();
        for k in 1..=n {
            fam.insert(CumulantSpec::standard_semicircular(format!("X{k}")));
        }
        fam
    }

    pub fn all_even(&self) -> bool {
        self.members.values().all(|s| s.even_only())
    }

    /// All members share one cumulant sequence (compared symbolically).
    pub fn identically_distributed(&self) -> bool {
        let mut iter = self.members.values();
        let Some(first) = iter.next() else {
            return true;
        };
        let probe = first.max_contributing().unwrap_or(12).max(12);
        iter.all(|s| {
            (1..=probe).all(|r| {
                // compare after renaming symbols to a common placeholder
                rename_symbols(&s.kappa(r), s.name()) == rename_symbols(&first.kappa(r), first.name())
            })
        })
    }
}

fn rename_symbols(p: &MultiPoly, name: &str) -> MultiPoly {
    use crate::exact::Var;
    p.substitute(&|v: Var| {
        let n = v.name();
        n.starts_with(&format!("k[{name};"))
            .then(|| sym(&n.replacen(&format!("k[{name};"), "k[_;", 1)))
    })
}

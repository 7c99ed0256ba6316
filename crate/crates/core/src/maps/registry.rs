use std::collections::BTreeMap;
use std::sync::Arc;

use super::{extremal_map, identity_map, koebe_map, map_from_phi, random_schwarz, SharedMap};
use crate::error::{Error, Result};

/// Parameters a family may draw on when building a map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    pub alpha: f64,
    pub seed: u64,
    pub degree: usize,
    pub vanish_at_zero: bool,
}

impl Default for FamilyParams {
    fn default() -> Self {
        Self { alpha: 0.0, seed: 42, degree: 3, vanish_at_zero: true }
    }
}

/// A named way of producing analytic maps, selectable at runtime.
pub trait MapFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn build(&self, params: &FamilyParams) -> Result<SharedMap>;
}

struct Extremal;

impl MapFamily for Extremal {
    fn name(&self) -> &'static str {
        "extremal"
    }
    fn description(&self) -> &'static str {
        "f_alpha(z) = int_0^z (1 - t^2)^(alpha - 1) dt"
    }
    fn build(&self, p: &FamilyParams) -> Result<SharedMap> {
        Ok(Arc::new(extremal_map(p.alpha)?))
    }
}

struct RandomGenerated;

impl MapFamily for RandomGenerated {
    fn name(&self) -> &'static str {
        "random"
    }
    fn description(&self) -> &'static str {
        "map generated from a seeded random Blaschke-product Schwarz function"
    }
    fn build(&self, p: &FamilyParams) -> Result<SharedMap> {
        let phi = random_schwarz(p.seed, p.degree, p.vanish_at_zero)?;
        Ok(Arc::new(map_from_phi(phi, p.alpha)?))
    }
}

struct Identity;

impl MapFamily for Identity {
    fn name(&self) -> &'static str {
        "identity"
    }
    fn description(&self) -> &'static str {
        "z -> z"
    }
    fn build(&self, _: &FamilyParams) -> Result<SharedMap> {
        Ok(Arc::new(identity_map()))
    }
}

struct KoebeControl;

impl MapFamily for KoebeControl {
    fn name(&self) -> &'static str {
        "koebe"
    }
    fn description(&self) -> &'static str {
        "Koebe function z/(1-z)^2 (non-convex control)"
    }
    fn build(&self, _: &FamilyParams) -> Result<SharedMap> {
        Ok(Arc::new(koebe_map()))
    }
}

/// Name-keyed collection of [`MapFamily`] implementations.
pub struct MapRegistry {
    families: BTreeMap<&'static str, Box<dyn MapFamily>>,
}

impl MapRegistry {
    pub fn empty() -> Self {
        Self { families: BTreeMap::new() }
    }

    /// Registry holding `extremal`, `random`, `identity` and `koebe`.
    pub fn with_defaults() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(Extremal));
        reg.register(Box::new(RandomGenerated));
        reg.register(Box::new(Identity));
        reg.register(Box::new(KoebeControl));
        reg
    }

    /// Adds a family, replacing any previous one with the same name.
    pub fn register(&mut self, family: Box<dyn MapFamily>) {
        self.families.insert(family.name(), family);
    }

    pub fn get(&self, name: &str) -> Result<&dyn MapFamily> {
        self.families
            .get(name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::Config(format!("unknown map family '{name}' (known: {})", self.names().join(", "))))
    }

    pub fn build(&self, name: &str, params: &FamilyParams) -> Result<SharedMap> {
        self.get(name)?.build(params)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.families.keys().copied().collect()
    }
}

impl Default for MapRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

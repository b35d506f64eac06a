//! Measurement schemes: dimensions, indicators, exact-rational weights,
//! the poverty cutoff, the two built-in schemes, and scheme transformations
//! (dimension/indicator exclusion with equal-weight redistribution).

use crate::error::{Error, Result, SchemeViolation};
use crate::rational::{rat, Rational};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Unit {
    Household,
    Individual,
}

impl std::fmt::Display for Unit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Unit::Household => write!(f, "household"),
            Unit::Individual => write!(f, "individual"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AppliesTo {
    Household,
    Individual,
    Both,
}

impl AppliesTo {
    pub fn covers(self, unit: Unit) -> bool {
        matches!(
            (self, unit),
            (AppliesTo::Both, _)
                | (AppliesTo::Household, Unit::Household)
                | (AppliesTo::Individual, Unit::Individual)
        )
    }
}

/// The registered deprivation rules. Each key names one evaluation rule in
/// the deprivation module; schemes may only reference these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evaluator {
    /// No adult member has completed primary education (5 years).
    HouseholdSchooling,
    /// A child aged 5-9 is not enrolled; non-deprived when no such child.
    ChildEnrollment,
    /// The person's own completed schooling is below 5 years.
    OwnEducation,
    Electricity,
    Floor,
    Sanitation,
    Water,
    CookingFuel,
    ConsumerDurables,
    /// Household owns neither agricultural land nor its residence.
    HouseholdAssets,
    /// The person owns (solely or jointly) neither asset.
    IndividualAssets,
    TravelMarket,
    TravelHealthFacility,
    TravelNatalHome,
    TravelOutsideVillage,
    OwnHealthDecision,
}

impl Evaluator {
    pub const ALL: [Evaluator; 16] = [
        Evaluator::HouseholdSchooling,
        Evaluator::ChildEnrollment,
        Evaluator::OwnEducation,
        Evaluator::Electricity,
        Evaluator::Floor,
        Evaluator::Sanitation,
        Evaluator::Water,
        Evaluator::CookingFuel,
        Evaluator::ConsumerDurables,
        Evaluator::HouseholdAssets,
        Evaluator::IndividualAssets,
        Evaluator::TravelMarket,
        Evaluator::TravelHealthFacility,
        Evaluator::TravelNatalHome,
        Evaluator::TravelOutsideVillage,
        Evaluator::OwnHealthDecision,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Evaluator::HouseholdSchooling => "household_schooling",
            Evaluator::ChildEnrollment => "child_enrollment",
            Evaluator::OwnEducation => "own_education",
            Evaluator::Electricity => "electricity",
            Evaluator::Floor => "floor",
            Evaluator::Sanitation => "sanitation",
            Evaluator::Water => "water",
            Evaluator::CookingFuel => "cooking_fuel",
            Evaluator::ConsumerDurables => "consumer_durables",
            Evaluator::HouseholdAssets => "household_assets",
            Evaluator::IndividualAssets => "individual_assets",
            Evaluator::TravelMarket => "travel_market",
            Evaluator::TravelHealthFacility => "travel_health_facility",
            Evaluator::TravelNatalHome => "travel_natal_home",
            Evaluator::TravelOutsideVillage => "travel_outside_village",
            Evaluator::OwnHealthDecision => "own_health_decision",
        }
    }

    pub fn from_key(key: &str) -> Option<Evaluator> {
        Evaluator::ALL.iter().copied().find(|e| e.key() == key)
    }

    pub fn applies_to(self) -> AppliesTo {
        match self {
            Evaluator::HouseholdSchooling | Evaluator::ChildEnrollment => AppliesTo::Household,
            Evaluator::OwnEducation | Evaluator::IndividualAssets => AppliesTo::Individual,
            _ => AppliesTo::Both,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorSpec {
    pub id: String,
    pub dimension_id: String,
    pub weight: Rational,
    pub evaluator: Evaluator,
    pub applies_to: AppliesTo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionSpec {
    pub id: String,
    pub name: String,
    pub indicator_ids: Vec<String>,
}

/// A validated measurement scheme. Immutable after construction; all
/// transformations return a fresh scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasurementScheme {
    pub id: String,
    pub unit: Unit,
    pub dimensions: Vec<DimensionSpec>,
    pub indicators: Vec<IndicatorSpec>,
    pub poverty_cutoff_k: Rational,
    /// Set when the scheme carries weights that deviate from the
    /// equal-split construction; paper reproductions never set this.
    pub custom_weights: bool,
}

impl MeasurementScheme {
    pub fn weight_sum(&self) -> Rational {
        self.indicators.iter().map(|i| i.weight).sum()
    }

    pub fn dimension_weight(&self, dimension_id: &str) -> Rational {
        self.indicators
            .iter()
            .filter(|i| i.dimension_id == dimension_id)
            .map(|i| i.weight)
            .sum()
    }

    pub fn indicator(&self, id: &str) -> Option<&IndicatorSpec> {
        self.indicators.iter().find(|i| i.id == id)
    }

    pub fn indicator_ids(&self) -> Vec<String> {
        self.indicators.iter().map(|i| i.id.clone()).collect()
    }

    /// Collects every invariant violation; empty means valid.
    pub fn violations(&self) -> Vec<SchemeViolation> {
        let mut out = Vec::new();
        let mut seen_dims = BTreeSet::new();
        for d in &self.dimensions {
            if !seen_dims.insert(d.id.as_str()) {
                out.push(SchemeViolation::Structural(format!("duplicate dimension id {}", d.id)));
            }
            if d.indicator_ids.is_empty() {
                out.push(SchemeViolation::Degenerate(format!("dimension {} has no indicators", d.id)));
            }
        }
        let mut seen_inds = BTreeSet::new();
        for i in &self.indicators {
            if !seen_inds.insert(i.id.as_str()) {
                out.push(SchemeViolation::Structural(format!("duplicate indicator id {}", i.id)));
            }
            if !self.dimensions.iter().any(|d| d.id == i.dimension_id) {
                out.push(SchemeViolation::Structural(format!(
                    "indicator {} references unknown dimension {}",
                    i.id, i.dimension_id
                )));
            }
            if i.weight <= rat(0, 1) {
                out.push(SchemeViolation::Structural(format!("indicator {} has non-positive weight", i.id)));
            }
            if !i.evaluator.applies_to().covers(self.unit) {
                out.push(SchemeViolation::Structural(format!(
                    "evaluator {} does not apply at {} level",
                    i.evaluator.key(),
                    self.unit
                )));
            }
        }
        for d in &self.dimensions {
            for id in &d.indicator_ids {
                match self.indicator(id) {
                    None => out.push(SchemeViolation::Structural(format!(
                        "dimension {} lists unknown indicator {id}",
                        d.id
                    ))),
                    Some(i) if i.dimension_id != d.id => out.push(SchemeViolation::Structural(format!(
                        "indicator {id} listed under dimension {} but belongs to {}",
                        d.id, i.dimension_id
                    ))),
                    _ => {}
                }
            }
        }
        if self.weight_sum() != rat(1, 1) {
            out.push(SchemeViolation::WeightSum(self.weight_sum()));
        }
        if self.poverty_cutoff_k <= rat(0, 1) || self.poverty_cutoff_k > rat(1, 1) {
            out.push(SchemeViolation::Cutoff(self.poverty_cutoff_k));
        }
        if !self.custom_weights {
            for d in &self.dimensions {
                let weights: Vec<Rational> = d
                    .indicator_ids
                    .iter()
                    .filter_map(|id| self.indicator(id).map(|i| i.weight))
                    .collect();
                if weights.windows(2).any(|w| w[0] != w[1]) {
                    out.push(SchemeViolation::Structural(format!(
                        "dimension {} has unequal indicator weights in a non-custom scheme",
                        d.id
                    )));
                }
            }
        }
        out
    }

    pub fn validate(self) -> Result<MeasurementScheme> {
        let violations = self.violations();
        if violations.is_empty() {
            Ok(self)
        } else {
            Err(Error::SchemeInvalid(violations))
        }
    }
}

fn dim(id: &str, name: &str, indicators: &[&str]) -> DimensionSpec {
    DimensionSpec {
        id: id.to_string(),
        name: name.to_string(),
        indicator_ids: indicators.iter().map(|s| s.to_string()).collect(),
    }
}

fn ind(id: &str, dimension_id: &str, weight: Rational, evaluator: Evaluator) -> IndicatorSpec {
    IndicatorSpec {
        id: id.to_string(),
        dimension_id: dimension_id.to_string(),
        weight,
        evaluator,
        applies_to: evaluator.applies_to(),
    }
}

pub const LIVING_STANDARD_INDICATORS: [(&str, Evaluator); 6] = [
    ("electricity", Evaluator::Electricity),
    ("floor", Evaluator::Floor),
    ("sanitation", Evaluator::Sanitation),
    ("water", Evaluator::Water),
    ("cooking_fuel", Evaluator::CookingFuel),
    ("consumer_durables", Evaluator::ConsumerDurables),
];

const EMPOWERMENT_INDICATORS: [(&str, Evaluator); 5] = [
    ("travel_market", Evaluator::TravelMarket),
    ("travel_health_facility", Evaluator::TravelHealthFacility),
    ("travel_natal_home", Evaluator::TravelNatalHome),
    ("travel_outside_village", Evaluator::TravelOutsideVillage),
    ("own_health_decision", Evaluator::OwnHealthDecision),
];

/// Returns one of the two built-in schemes (`khas_household`,
/// `khas_individual`): four equally weighted dimensions, equal indicator
/// weights within each dimension, poverty cutoff 3/10.
pub fn builtin_scheme(name: &str) -> Result<MeasurementScheme> {
    let scheme = match name {
        "khas_household" => {
            let mut indicators = vec![
                ind("schooling", "education", rat(1, 8), Evaluator::HouseholdSchooling),
                ind("child_enrollment", "education", rat(1, 8), Evaluator::ChildEnrollment),
            ];
            for (id, ev) in LIVING_STANDARD_INDICATORS {
                indicators.push(ind(id, "living_standards", rat(1, 24), ev));
            }
            indicators.push(ind("household_assets", "productive_assets", rat(1, 4), Evaluator::HouseholdAssets));
            for (id, ev) in EMPOWERMENT_INDICATORS {
                indicators.push(ind(id, "empowerment", rat(1, 20), ev));
            }
            MeasurementScheme {
                id: "khas_household".to_string(),
                unit: Unit::Household,
                dimensions: vec![
                    dim("education", "Education", &["schooling", "child_enrollment"]),
                    dim(
                        "living_standards",
                        "Living standards",
                        &LIVING_STANDARD_INDICATORS.map(|(id, _)| id),
                    ),
                    dim("productive_assets", "Productive assets", &["household_assets"]),
                    dim(
                        "empowerment",
                        "Empowerment",
                        &EMPOWERMENT_INDICATORS.map(|(id, _)| id),
                    ),
                ],
                indicators,
                poverty_cutoff_k: rat(3, 10),
                custom_weights: false,
            }
        }
        "khas_individual" => {
            let mut indicators = vec![ind("education", "education", rat(1, 4), Evaluator::OwnEducation)];
            for (id, ev) in LIVING_STANDARD_INDICATORS {
                indicators.push(ind(id, "living_standards", rat(1, 24), ev));
            }
            indicators.push(ind("household_assets", "productive_assets", rat(1, 8), Evaluator::HouseholdAssets));
            indicators.push(ind("individual_assets", "productive_assets", rat(1, 8), Evaluator::IndividualAssets));
            for (id, ev) in EMPOWERMENT_INDICATORS {
                indicators.push(ind(id, "empowerment", rat(1, 20), ev));
            }
            MeasurementScheme {
                id: "khas_individual".to_string(),
                unit: Unit::Individual,
                dimensions: vec![
                    dim("education", "Education", &["education"]),
                    dim(
                        "living_standards",
                        "Living standards",
                        &LIVING_STANDARD_INDICATORS.map(|(id, _)| id),
                    ),
                    dim(
                        "productive_assets",
                        "Productive assets",
                        &["household_assets", "individual_assets"],
                    ),
                    dim(
                        "empowerment",
                        "Empowerment",
                        &EMPOWERMENT_INDICATORS.map(|(id, _)| id),
                    ),
                ],
                indicators,
                poverty_cutoff_k: rat(3, 10),
                custom_weights: false,
            }
        }
        other => return Err(Error::NotFound(format!("unknown built-in scheme {other}"))),
    };
    scheme.validate()
}

/// Removes a dimension and redistributes its weight: each remaining
/// dimension gets total weight 1/(D-1), split equally among its indicators.
pub fn exclude_dimension(scheme: &MeasurementScheme, dimension_id: &str) -> Result<MeasurementScheme> {
    if !scheme.dimensions.iter().any(|d| d.id == dimension_id) {
        return Err(Error::NotFound(format!("dimension {dimension_id} not in scheme {}", scheme.id)));
    }
    if scheme.dimensions.len() < 2 {
        return Err(Error::SchemeInvalid(vec![SchemeViolation::Degenerate(
            "cannot exclude the only dimension".to_string(),
        )]));
    }
    let remaining: Vec<DimensionSpec> = scheme
        .dimensions
        .iter()
        .filter(|d| d.id != dimension_id)
        .cloned()
        .collect();
    let dim_weight = rat(1, remaining.len() as i64);
    let mut indicators = Vec::new();
    for d in &remaining {
        let per_indicator = dim_weight / rat(d.indicator_ids.len() as i64, 1);
        for id in &d.indicator_ids {
            let mut spec = scheme
                .indicator(id)
                .expect("dimension lists indicator present in scheme")
                .clone();
            spec.weight = per_indicator;
            indicators.push(spec);
        }
    }
    MeasurementScheme {
        id: format!("{}_excl_{dimension_id}", scheme.id),
        unit: scheme.unit,
        dimensions: remaining,
        indicators,
        poverty_cutoff_k: scheme.poverty_cutoff_k,
        custom_weights: false,
    }
    .validate()
}

/// Removes one indicator; its dimension keeps its total weight, re-split
/// equally among the remaining indicators of that dimension.
pub fn exclude_indicator(scheme: &MeasurementScheme, indicator_id: &str) -> Result<MeasurementScheme> {
    let target = scheme
        .indicator(indicator_id)
        .ok_or_else(|| Error::NotFound(format!("indicator {indicator_id} not in scheme {}", scheme.id)))?
        .clone();
    let dim_weight = scheme.dimension_weight(&target.dimension_id);
    let dimensions: Vec<DimensionSpec> = scheme
        .dimensions
        .iter()
        .map(|d| {
            let mut d = d.clone();
            d.indicator_ids.retain(|id| id != indicator_id);
            d
        })
        .collect();
    let host = dimensions
        .iter()
        .find(|d| d.id == target.dimension_id)
        .expect("indicator's dimension exists");
    if host.indicator_ids.is_empty() {
        return Err(Error::SchemeInvalid(vec![SchemeViolation::Degenerate(format!(
            "excluding {indicator_id} would empty dimension {}",
            target.dimension_id
        ))]));
    }
    let per_indicator = dim_weight / rat(host.indicator_ids.len() as i64, 1);
    let indicators: Vec<IndicatorSpec> = scheme
        .indicators
        .iter()
        .filter(|i| i.id != indicator_id)
        .map(|i| {
            let mut i = i.clone();
            if i.dimension_id == target.dimension_id {
                i.weight = per_indicator;
            }
            i
        })
        .collect();
    MeasurementScheme {
        id: format!("{}_excl_{indicator_id}", scheme.id),
        unit: scheme.unit,
        dimensions,
        indicators,
        poverty_cutoff_k: scheme.poverty_cutoff_k,
        custom_weights: scheme.custom_weights,
    }
    .validate()
}

// ---------------------------------------------------------------------------
// Config document (JSON) loading and saving
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct SchemeConfig {
    pub id: String,
    pub unit: Unit,
    /// Poverty cutoff as an exact fraction [numerator, denominator].
    pub k: [i64; 2],
    pub dimensions: Vec<DimensionConfig>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub custom_weights: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DimensionConfig {
    pub id: String,
    #[serde(default)]
    pub name: Option<String>,
    pub indicators: Vec<IndicatorConfig>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IndicatorConfig {
    pub id: String,
    pub evaluator: String,
    /// Exact fraction [numerator, denominator]; omitted means equal split
    /// (dimension = 1/D, indicator = dimension weight / indicator count).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<[i64; 2]>,
}

/// Parses and validates a scheme config document, reporting every
/// violation at once on rejection.
pub fn load_scheme(json: &str) -> Result<MeasurementScheme> {
    let cfg: SchemeConfig = serde_json::from_str(json)?;
    scheme_from_config(&cfg)
}

pub fn scheme_from_config(cfg: &SchemeConfig) -> Result<MeasurementScheme> {
    let mut violations = Vec::new();
    if cfg.k[1] <= 0 {
        violations.push(SchemeViolation::Structural(format!(
            "cutoff denominator must be positive, got {}",
            cfg.k[1]
        )));
        return Err(Error::SchemeInvalid(violations));
    }
    let n_dims = cfg.dimensions.len() as i64;
    let mut dimensions = Vec::new();
    let mut indicators = Vec::new();
    for d in &cfg.dimensions {
        dimensions.push(DimensionSpec {
            id: d.id.clone(),
            name: d.name.clone().unwrap_or_else(|| d.id.clone()),
            indicator_ids: d.indicators.iter().map(|i| i.id.clone()).collect(),
        });
        let equal_split = if d.indicators.is_empty() || n_dims == 0 {
            rat(0, 1)
        } else {
            rat(1, n_dims) / rat(d.indicators.len() as i64, 1)
        };
        for i in &d.indicators {
            let evaluator = match Evaluator::from_key(&i.evaluator) {
                Some(e) => e,
                None => {
                    violations.push(SchemeViolation::UnknownEvaluator(i.evaluator.clone()));
                    continue;
                }
            };
            let weight = match i.weight {
                Some([num, den]) if den > 0 => rat(num, den),
                Some([num, den]) => {
                    violations.push(SchemeViolation::Structural(format!(
                        "indicator {} weight {num}/{den} has non-positive denominator",
                        i.id
                    )));
                    continue;
                }
                None => equal_split,
            };
            indicators.push(IndicatorSpec {
                id: i.id.clone(),
                dimension_id: d.id.clone(),
                weight,
                evaluator,
                applies_to: evaluator.applies_to(),
            });
        }
    }
    let scheme = MeasurementScheme {
        id: cfg.id.clone(),
        unit: cfg.unit,
        dimensions,
        indicators,
        poverty_cutoff_k: rat(cfg.k[0], cfg.k[1]),
        custom_weights: cfg.custom_weights,
    };
    violations.extend(scheme.violations());
    if violations.is_empty() {
        Ok(scheme)
    } else {
        Err(Error::SchemeInvalid(violations))
    }
}

pub fn scheme_to_config(scheme: &MeasurementScheme) -> SchemeConfig {
    SchemeConfig {
        id: scheme.id.clone(),
        unit: scheme.unit,
        k: [*scheme.poverty_cutoff_k.numer(), *scheme.poverty_cutoff_k.denom()],
        dimensions: scheme
            .dimensions
            .iter()
            .map(|d| DimensionConfig {
                id: d.id.clone(),
                name: Some(d.name.clone()),
                indicators: d
                    .indicator_ids
                    .iter()
                    .map(|id| {
                        let i = scheme.indicator(id).expect("listed indicator exists");
                        IndicatorConfig {
                            id: i.id.clone(),
                            evaluator: i.evaluator.key().to_string(),
                            weight: Some([*i.weight.numer(), *i.weight.denom()]),
                        }
                    })
                    .collect(),
            })
            .collect(),
        custom_weights: scheme.custom_weights,
    }
}

/// Canonical config documents for the built-ins, shipped so that file
/// loading and the programmatic constructors are bit-identical.
pub const KHAS_HOUSEHOLD_CONFIG: &str = include_str!("../assets/khas_household.json");
pub const KHAS_INDIVIDUAL_CONFIG: &str = include_str!("../assets/khas_individual.json");

//! Household/person CSV ingestion, validation, and the sample-restriction
//! rules: household-level listwise deletion, the adult filter, and the
//! headship field.
//!
//! CSV dialect (see docs/data_dictionary.md): UTF-8, comma-separated,
//! mandatory header row, booleans as 0/1, enums as lowercase tokens,
//! missing value = empty cell. Set-valued cells (`durables_owned`,
//! `children_5_9`) use `;`-separated entries with the literal token `none`
//! for an empty set, so "owns nothing" stays distinguishable from missing.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::schema::{Evaluator, MeasurementScheme};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sex {
    Male,
    Female,
}

impl Sex {
    pub fn token(self) -> &'static str {
        match self {
            Sex::Male => "male",
            Sex::Female => "female",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FloorMaterial {
    EarthMud,
    Finished,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Toilet {
    None,
    Shared,
    Private,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WaterSource {
    Piped,
    Borewell,
    ClosedWell,
    OpenWell,
    Surface,
    Tanker,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CookingFuel {
    Electricity,
    Lpg,
    Biogas,
    Wood,
    Charcoal,
    Dung,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Durable {
    Fan,
    Tv,
    CellPhone,
    Cycle,
    Refrigerator,
    TwoWheeler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaritalStatus {
    NeverMarried,
    CurrentlyMarried,
    Widowed,
    Deserted,
    Other,
}

impl MaritalStatus {
    pub fn token(self) -> &'static str {
        match self {
            MaritalStatus::NeverMarried => "never_married",
            MaritalStatus::CurrentlyMarried => "currently_married",
            MaritalStatus::Widowed => "widowed",
            MaritalStatus::Deserted => "deserted",
            MaritalStatus::Other => "other",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HealthDecision {
    SelfDecides,
    WithPermission,
    SomeoneElse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChildEntry {
    pub child_id: String,
    pub enrolled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HouseholdRecord {
    pub hh_id: String,
    pub head_sex: Sex,
    pub has_electricity: bool,
    pub floor_material: FloorMaterial,
    pub toilet: Toilet,
    pub water_source: WaterSource,
    pub cooking_fuel: CookingFuel,
    pub durables_owned: BTreeSet<Durable>,
    pub owns_four_wheeler: bool,
    pub owns_agri_land: bool,
    pub owns_residence: bool,
    pub children_5_9: Vec<ChildEntry>,
}

/// Mobility answers recorded for the household's female respondent only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mobility {
    pub market_alone: bool,
    pub health_facility_alone: bool,
    pub natal_home_alone: bool,
    pub outside_village_alone: bool,
    pub own_health_decision: HealthDecision,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersonRecord {
    pub person_id: String,
    pub hh_id: String,
    pub sex: Sex,
    pub age: u32,
    pub marital_status: MaritalStatus,
    pub education_years: u32,
    pub owns_residence_any: bool,
    pub owns_agri_land_any: bool,
    pub is_female_respondent: bool,
    pub mobility: Option<Mobility>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub household_source: String,
    pub person_source: String,
    pub household_rows_read: u64,
    pub person_rows_read: u64,
    pub households_retained: u64,
    pub persons_retained: u64,
    /// (hh_id, reason) for every dropped household, e.g. `missing:toilet`.
    pub households_dropped: Vec<(String, String)>,
    /// Persons dropped because their household was dropped.
    pub persons_dropped: u64,
    /// Fields outside the active policy's scope that were missing in
    /// retained rows and filled with documented defaults (per-analysis
    /// deletion mode only).
    pub defaulted_fields: Vec<(String, String)>,
}

/// Households joined to persons; immutable after ingest.
#[derive(Debug, Clone)]
pub struct Population {
    households: Vec<HouseholdRecord>,
    persons: Vec<PersonRecord>,
    hh_index: BTreeMap<String, usize>,
    pub provenance: Provenance,
}

/// Household-level listwise deletion scope. The default drops a household
/// (and all its members) when any field is missing; the per-analysis mode
/// restricts the check to the fields a given scheme actually consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MissingDataPolicy {
    ListwiseAll,
    ListwiseFields(BTreeSet<String>),
}

impl Default for MissingDataPolicy {
    fn default() -> Self {
        MissingDataPolicy::ListwiseAll
    }
}

impl MissingDataPolicy {
    fn requires(&self, column: &str) -> bool {
        match self {
            MissingDataPolicy::ListwiseAll => true,
            MissingDataPolicy::ListwiseFields(set) => set.contains(column) || STRUCTURAL_COLUMNS.contains(&column),
        }
    }
}

/// Columns that must always be present regardless of policy.
const STRUCTURAL_COLUMNS: [&str; 6] = ["hh_id", "person_id", "head_sex", "sex", "age", "is_female_respondent"];

pub const HOUSEHOLD_COLUMNS: [&str; 12] = [
    "hh_id",
    "head_sex",
    "has_electricity",
    "floor_material",
    "toilet",
    "water_source",
    "cooking_fuel",
    "durables_owned",
    "owns_four_wheeler",
    "owns_agri_land",
    "owns_residence",
    "children_5_9",
];

pub const PERSON_COLUMNS: [&str; 14] = [
    "person_id",
    "hh_id",
    "sex",
    "age",
    "marital_status",
    "education_years",
    "owns_residence_any",
    "owns_agri_land_any",
    "is_female_respondent",
    "market_alone",
    "health_facility_alone",
    "natal_home_alone",
    "outside_village_alone",
    "own_health_decision",
];

/// The input columns each deprivation rule consumes; used to build the
/// per-analysis deletion scope for a scheme.
pub fn required_fields(scheme: &MeasurementScheme) -> BTreeSet<String> {
    let mut set = BTreeSet::new();
    for ind in &scheme.indicators {
        let cols: &[&str] = match ind.evaluator {
            Evaluator::HouseholdSchooling | Evaluator::OwnEducation => &["education_years"],
            Evaluator::ChildEnrollment => &["children_5_9"],
            Evaluator::Electricity => &["has_electricity"],
            Evaluator::Floor => &["floor_material"],
            Evaluator::Sanitation => &["toilet"],
            Evaluator::Water => &["water_source"],
            Evaluator::CookingFuel => &["cooking_fuel"],
            Evaluator::ConsumerDurables => &["durables_owned", "owns_four_wheeler"],
            Evaluator::HouseholdAssets => &["owns_agri_land", "owns_residence"],
            Evaluator::IndividualAssets => &["owns_residence_any", "owns_agri_land_any"],
            Evaluator::TravelMarket => &["market_alone"],
            Evaluator::TravelHealthFacility => &["health_facility_alone"],
            Evaluator::TravelNatalHome => &["natal_home_alone"],
            Evaluator::TravelOutsideVillage => &["outside_village_alone"],
            Evaluator::OwnHealthDecision => &["own_health_decision"],
        };
        set.extend(cols.iter().map(|s| s.to_string()));
    }
    set
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Row<'a> {
    row: u64,
    fields: BTreeMap<&'a str, String>,
}

impl<'a> Row<'a> {
    fn raw(&self, column: &str) -> &str {
        self.fields.get(column).map(|s| s.as_str()).unwrap_or("")
    }

    fn is_missing(&self, column: &str) -> bool {
        self.raw(column).is_empty()
    }

    fn err(&self, column: &str, message: impl Into<String>) -> Error {
        Error::Ingest {
            row: self.row,
            column: column.to_string(),
            message: message.into(),
        }
    }

    fn bool(&self, column: &str) -> Result<bool> {
        match self.raw(column) {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(self.err(column, format!("expected 0 or 1, got {other:?}"))),
        }
    }

    fn u32(&self, column: &str) -> Result<u32> {
        self.raw(column)
            .parse()
            .map_err(|_| self.err(column, format!("expected non-negative integer, got {:?}", self.raw(column))))
    }

    fn token<T: Copy>(&self, column: &str, table: &[(&str, T)]) -> Result<T> {
        let raw = self.raw(column);
        table
            .iter()
            .find(|(tok, _)| *tok == raw)
            .map(|(_, v)| *v)
            .ok_or_else(|| self.err(column, format!("unknown token {raw:?}")))
    }
}

const SEX_TOKENS: [(&str, Sex); 2] = [("male", Sex::Male), ("female", Sex::Female)];
const FLOOR_TOKENS: [(&str, FloorMaterial); 3] = [
    ("earth_mud", FloorMaterial::EarthMud),
    ("finished", FloorMaterial::Finished),
    ("other", FloorMaterial::Other),
];
const TOILET_TOKENS: [(&str, Toilet); 3] = [
    ("none", Toilet::None),
    ("shared", Toilet::Shared),
    ("private", Toilet::Private),
];
const WATER_TOKENS: [(&str, WaterSource); 7] = [
    ("piped", WaterSource::Piped),
    ("borewell", WaterSource::Borewell),
    ("closed_well", WaterSource::ClosedWell),
    ("open_well", WaterSource::OpenWell),
    ("surface", WaterSource::Surface),
    ("tanker", WaterSource::Tanker),
    ("other", WaterSource::Other),
];
const FUEL_TOKENS: [(&str, CookingFuel); 7] = [
    ("electricity", CookingFuel::Electricity),
    ("lpg", CookingFuel::Lpg),
    ("biogas", CookingFuel::Biogas),
    ("wood", CookingFuel::Wood),
    ("charcoal", CookingFuel::Charcoal),
    ("dung", CookingFuel::Dung),
    ("other", CookingFuel::Other),
];
const DURABLE_TOKENS: [(&str, Durable); 6] = [
    ("fan", Durable::Fan),
    ("tv", Durable::Tv),
    ("cell_phone", Durable::CellPhone),
    ("cycle", Durable::Cycle),
    ("refrigerator", Durable::Refrigerator),
    ("two_wheeler", Durable::TwoWheeler),
];
const MARITAL_TOKENS: [(&str, MaritalStatus); 5] = [
    ("never_married", MaritalStatus::NeverMarried),
    ("currently_married", MaritalStatus::CurrentlyMarried),
    ("widowed", MaritalStatus::Widowed),
    ("deserted", MaritalStatus::Deserted),
    ("other", MaritalStatus::Other),
];
const DECISION_TOKENS: [(&str, HealthDecision); 3] = [
    ("self", HealthDecision::SelfDecides),
    ("with_permission", HealthDecision::WithPermission),
    ("someone_else", HealthDecision::SomeoneElse),
];

pub fn durable_token(d: Durable) -> &'static str {
    DURABLE_TOKENS.iter().find(|(_, v)| *v == d).unwrap().0
}

fn read_rows<'h, R: Read>(
    source: R,
    expected: &[&'h str],
    what: &str,
) -> Result<Vec<(u64, BTreeMap<&'h str, String>)>> {
    let mut reader = csv::ReaderBuilder::new().flexible(false).from_reader(source);
    let headers = reader.headers()?.clone();
    let got: Vec<&str> = headers.iter().collect();
    if got != expected {
        return Err(Error::Integrity(format!(
            "{what} header mismatch: expected {expected:?}, got {got:?}"
        )));
    }
    let mut rows = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let record = record?;
        let mut fields = BTreeMap::new();
        for (col, val) in expected.iter().zip(record.iter()) {
            fields.insert(*col, val.trim().to_string());
        }
        // data row 1 is the first line after the header
        rows.push(((idx + 1) as u64, fields));
    }
    Ok(rows)
}

/// Columns checked for missingness, in reporting order: a household dropped
/// for several missing fields is reported under the first one.
fn first_missing(row: &Row<'_>, columns: &[&str], policy: &MissingDataPolicy) -> Option<String> {
    columns
        .iter()
        .find(|c| policy.requires(c) && row.is_missing(c))
        .map(|c| c.to_string())
}

fn parse_household(row: &Row<'_>, defaults: &mut Vec<(String, String)>) -> Result<HouseholdRecord> {
    let hh_id = row.raw("hh_id").to_string();
    let durables = if row.is_missing("durables_owned") {
        defaults.push((hh_id.clone(), "durables_owned".to_string()));
        BTreeSet::new()
    } else {
        let raw = row.raw("durables_owned");
        let mut set = BTreeSet::new();
        if raw != "none" {
            for part in raw.split(';') {
                let d = Row {
                    row: row.row,
                    fields: BTreeMap::from([("durables_owned", part.to_string())]),
                }
                .token("durables_owned", &DURABLE_TOKENS)?;
                if !set.insert(d) {
                    return Err(row.err("durables_owned", format!("duplicate durable {part:?}")));
                }
            }
        }
        set
    };
    let children = if row.is_missing("children_5_9") {
        defaults.push((hh_id.clone(), "children_5_9".to_string()));
        Vec::new()
    } else {
        let raw = row.raw("children_5_9");
        let mut out = Vec::new();
        if raw != "none" {
            for part in raw.split(';') {
                let (child_id, enrolled) = part
                    .split_once(':')
                    .ok_or_else(|| row.err("children_5_9", format!("expected child_id:0/1, got {part:?}")))?;
                let enrolled = match enrolled {
                    "0" => false,
                    "1" => true,
                    other => return Err(row.err("children_5_9", format!("expected 0 or 1, got {other:?}"))),
                };
                out.push(ChildEntry {
                    child_id: child_id.to_string(),
                    enrolled,
                });
            }
        }
        out
    };

    macro_rules! field {
        ($col:literal, $parse:expr, $default:expr) => {
            if row.is_missing($col) {
                defaults.push((hh_id.clone(), $col.to_string()));
                $default
            } else {
                $parse?
            }
        };
    }

    Ok(HouseholdRecord {
        head_sex: row.token("head_sex", &SEX_TOKENS)?,
        has_electricity: field!("has_electricity", row.bool("has_electricity"), false),
        floor_material: field!("floor_material", row.token("floor_material", &FLOOR_TOKENS), FloorMaterial::Other),
        toilet: field!("toilet", row.token("toilet", &TOILET_TOKENS), Toilet::None),
        water_source: field!("water_source", row.token("water_source", &WATER_TOKENS), WaterSource::Other),
        cooking_fuel: field!("cooking_fuel", row.token("cooking_fuel", &FUEL_TOKENS), CookingFuel::Other),
        durables_owned: durables,
        owns_four_wheeler: field!("owns_four_wheeler", row.bool("owns_four_wheeler"), false),
        owns_agri_land: field!("owns_agri_land", row.bool("owns_agri_land"), false),
        owns_residence: field!("owns_residence", row.bool("owns_residence"), false),
        children_5_9: children,
        hh_id,
    })
}

fn parse_person(row: &Row<'_>, defaults: &mut Vec<(String, String)>) -> Result<PersonRecord> {
    let person_id = row.raw("person_id").to_string();
    let is_respondent = row.bool("is_female_respondent")?;
    let sex = row.token("sex", &SEX_TOKENS)?;

    let mobility_cols = [
        "market_alone",
        "health_facility_alone",
        "natal_home_alone",
        "outside_village_alone",
        "own_health_decision",
    ];
    let mobility = if is_respondent {
        if sex != Sex::Female {
            return Err(row.err("is_female_respondent", "respondent flag set on a male record"));
        }
        let mut any_missing = false;
        for col in mobility_cols {
            if row.is_missing(col) {
                defaults.push((person_id.clone(), col.to_string()));
                any_missing = true;
            }
        }
        if any_missing {
            None
        } else {
            Some(Mobility {
                market_alone: row.bool("market_alone")?,
                health_facility_alone: row.bool("health_facility_alone")?,
                natal_home_alone: row.bool("natal_home_alone")?,
                outside_village_alone: row.bool("outside_village_alone")?,
                own_health_decision: row.token("own_health_decision", &DECISION_TOKENS)?,
            })
        }
    } else {
        if mobility_cols.iter().any(|c| !row.is_missing(c)) {
            return Err(row.err("market_alone", "mobility answers present on a non-respondent record"));
        }
        None
    };

    macro_rules! field {
        ($col:literal, $parse:expr, $default:expr) => {
            if row.is_missing($col) {
                defaults.push((person_id.clone(), $col.to_string()));
                $default
            } else {
                $parse?
            }
        };
    }

    Ok(PersonRecord {
        hh_id: row.raw("hh_id").to_string(),
        sex,
        age: row.u32("age")?,
        marital_status: field!("marital_status", row.token("marital_status", &MARITAL_TOKENS), MaritalStatus::Other),
        education_years: field!("education_years", row.u32("education_years"), 0),
        owns_residence_any: field!("owns_residence_any", row.bool("owns_residence_any"), false),
        owns_agri_land_any: field!("owns_agri_land_any", row.bool("owns_agri_land_any"), false),
        is_female_respondent: is_respondent,
        mobility,
        person_id,
    })
}

/// Whether a missing mobility answer should drop the household: only when
/// the record belongs to the female respondent (answers are not collected
/// for anyone else, so blanks elsewhere are structural, not missing data).
fn person_missing(row: &Row<'_>, policy: &MissingDataPolicy) -> Result<Option<String>> {
    let non_mobility = [
        "person_id",
        "hh_id",
        "sex",
        "age",
        "marital_status",
        "education_years",
        "owns_residence_any",
        "owns_agri_land_any",
        "is_female_respondent",
    ];
    if let Some(col) = first_missing(row, &non_mobility, policy) {
        return Ok(Some(col));
    }
    if row.bool("is_female_respondent")? {
        let mobility = [
            "market_alone",
            "health_facility_alone",
            "natal_home_alone",
            "outside_village_alone",
            "own_health_decision",
        ];
        if let Some(col) = first_missing(row, &mobility, policy) {
            return Ok(Some(col));
        }
    }
    Ok(None)
}

/// Ingests the two CSV sources, applies household-level listwise deletion
/// per the policy, and returns the joined, validated population.
pub fn ingest<R1: Read, R2: Read>(
    households_csv: R1,
    persons_csv: R2,
    policy: &MissingDataPolicy,
) -> Result<Population> {
    let hh_rows = read_rows(households_csv, &HOUSEHOLD_COLUMNS, "households.csv")?;
    let person_rows = read_rows(persons_csv, &PERSON_COLUMNS, "persons.csv")?;

    let mut provenance = Provenance {
        household_rows_read: hh_rows.len() as u64,
        person_rows_read: person_rows.len() as u64,
        ..Provenance::default()
    };

    // Pass 1: decide per-household drop status (a missing field on any
    // member drops the whole household).
    let mut drop_reason: BTreeMap<String, String> = BTreeMap::new();
    let mut hh_ids = BTreeSet::new();
    for (line, fields) in &hh_rows {
        let row = Row { row: *line, fields: fields.clone() };
        let hh_id = row.raw("hh_id").to_string();
        if hh_id.is_empty() {
            return Err(row.err("hh_id", "empty household id"));
        }
        if !hh_ids.insert(hh_id.clone()) {
            return Err(Error::Integrity(format!("duplicate household id {hh_id}")));
        }
        if let Some(col) = first_missing(&row, &HOUSEHOLD_COLUMNS, policy) {
            drop_reason.entry(hh_id).or_insert(format!("missing:{col}"));
        }
    }
    let mut person_ids = BTreeSet::new();
    for (line, fields) in &person_rows {
        let row = Row { row: *line, fields: fields.clone() };
        let person_id = row.raw("person_id").to_string();
        let hh_id = row.raw("hh_id").to_string();
        if person_id.is_empty() || hh_id.is_empty() {
            return Err(row.err("person_id", "empty person or household id"));
        }
        if !person_ids.insert(person_id.clone()) {
            return Err(Error::Integrity(format!("duplicate person id {person_id}")));
        }
        if !hh_ids.contains(&hh_id) {
            return Err(Error::Integrity(format!(
                "person {person_id} references unknown household {hh_id}"
            )));
        }
        if let Some(col) = person_missing(&row, policy)? {
            drop_reason.entry(hh_id).or_insert(format!("missing:{col}"));
        }
    }

    // Pass 2: parse retained rows.
    let mut defaults = Vec::new();
    let mut households = Vec::new();
    for (line, fields) in &hh_rows {
        let row = Row { row: *line, fields: fields.clone() };
        let hh_id = row.raw("hh_id");
        if drop_reason.contains_key(hh_id) {
            continue;
        }
        households.push(parse_household(&row, &mut defaults)?);
    }
    let mut persons = Vec::new();
    for (line, fields) in &person_rows {
        let row = Row { row: *line, fields: fields.clone() };
        if drop_reason.contains_key(row.raw("hh_id")) {
            provenance.persons_dropped += 1;
            continue;
        }
        persons.push(parse_person(&row, &mut defaults)?);
    }

    households.sort_by(|a, b| a.hh_id.cmp(&b.hh_id));
    persons.sort_by(|a, b| (&a.hh_id, &a.person_id).cmp(&(&b.hh_id, &b.person_id)));

    let hh_index: BTreeMap<String, usize> = households
        .iter()
        .enumerate()
        .map(|(i, h)| (h.hh_id.clone(), i))
        .collect();
    let mut member_counts: BTreeMap<&str, u64> = BTreeMap::new();
    for p in &persons {
        *member_counts.entry(p.hh_id.as_str()).or_default() += 1;
    }
    for h in &households {
        if !member_counts.contains_key(h.hh_id.as_str()) {
            return Err(Error::Integrity(format!("household {} has no persons", h.hh_id)));
        }
    }

    provenance.households_retained = households.len() as u64;
    provenance.persons_retained = persons.len() as u64;
    provenance.households_dropped = drop_reason.into_iter().collect();
    provenance.defaulted_fields = defaults;

    Ok(Population {
        households,
        persons,
        hh_index,
        provenance,
    })
}

impl Population {
    pub fn households(&self) -> &[HouseholdRecord] {
        &self.households
    }

    pub fn persons(&self) -> &[PersonRecord] {
        &self.persons
    }

    pub fn household(&self, hh_id: &str) -> Option<&HouseholdRecord> {
        self.hh_index.get(hh_id).map(|&i| &self.households[i])
    }

    /// All persons aged 18 or older, in (hh_id, person_id) order.
    pub fn adults(&self) -> impl Iterator<Item = &PersonRecord> {
        self.persons.iter().filter(|p| p.age >= 18)
    }

    pub fn headship(&self, hh_id: &str) -> Result<Sex> {
        self.household(hh_id)
            .map(|h| h.head_sex)
            .ok_or_else(|| Error::NotFound(format!("household {hh_id}")))
    }

    /// Members of one household, in person_id order. Binary search over the
    /// (hh_id, person_id)-sorted person table.
    pub fn members(&self, hh_id: &str) -> impl Iterator<Item = &PersonRecord> {
        let start = self.persons.partition_point(|p| p.hh_id.as_str() < hh_id);
        let len = self.persons[start..].partition_point(|p| p.hh_id.as_str() <= hh_id);
        self.persons[start..start + len].iter()
    }

    /// Share of female-headed households as an exact fraction.
    pub fn female_headed_share(&self) -> Rational {
        let f = self.households.iter().filter(|h| h.head_sex == Sex::Female).count();
        Rational::new(f as i64, self.households.len().max(1) as i64)
    }
}

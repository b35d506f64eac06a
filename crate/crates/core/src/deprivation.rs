//! Binary deprivation evaluation at household and individual level.
//!
//! Household amenities are treated as semi-public goods: every member
//! inherits the household's living-standards cells. Empowerment answers
//! are collected from the household's female respondent and attributed to
//! the household and to every adult female member; men are non-deprived
//! in all empowerment indicators.

use crate::error::{Error, Result};
use crate::microdata::{
    CookingFuel, FloorMaterial, HealthDecision, HouseholdRecord, MaritalStatus, Mobility, PersonRecord, Population,
    Sex, Toilet, WaterSource,
};
use crate::rational::Rational;
use crate::schema::{Evaluator, MeasurementScheme, Unit};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitAttributes {
    pub unit_id: String,
    pub hh_id: String,
    pub head_sex: Sex,
    pub sex: Option<Sex>,
    pub age: Option<u32>,
    pub marital_status: Option<MaritalStatus>,
    /// Filled by household-poverty attribution (crosstab join); absent on
    /// household-level matrices.
    pub household_poor: Option<bool>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EvaluationWarnings {
    /// Households with no usable female-respondent record; empowerment
    /// cells default to non-deprived there.
    pub households_without_female_respondent: u64,
    /// Adult females affected by the above default.
    pub females_without_respondent_attribution: u64,
    /// Households carrying more than one flagged respondent; the first by
    /// person id is used.
    pub households_with_multiple_respondents: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeprivationMatrix {
    pub unit_level: Unit,
    pub unit_ids: Vec<String>,
    pub indicator_ids: Vec<String>,
    /// Row-major, one row per unit, one 0/1 cell per indicator.
    pub cells: Vec<Vec<u8>>,
    pub attributes: Vec<UnitAttributes>,
    pub warnings: EvaluationWarnings,
}

impl DeprivationMatrix {
    pub fn n_units(&self) -> usize {
        self.unit_ids.len()
    }

    pub fn cell(&self, unit: usize, indicator: usize) -> u8 {
        self.cells[unit][indicator]
    }
}

// ---------------------------------------------------------------------------
// Per-indicator rules
// ---------------------------------------------------------------------------

fn schooling_deprived(pop: &Population, h: &HouseholdRecord) -> bool {
    !pop.members(&h.hh_id)
        .any(|p| p.age >= 18 && p.education_years >= 5)
}

fn child_enrollment_deprived(h: &HouseholdRecord) -> bool {
    h.children_5_9.iter().any(|c| !c.enrolled)
}

fn water_deprived(source: WaterSource) -> bool {
    !matches!(
        source,
        WaterSource::Piped | WaterSource::Borewell | WaterSource::ClosedWell | WaterSource::OpenWell
    )
}

fn cooking_deprived(fuel: CookingFuel) -> bool {
    !matches!(fuel, CookingFuel::Electricity | CookingFuel::Lpg | CookingFuel::Biogas)
}

fn durables_deprived(h: &HouseholdRecord) -> bool {
    h.durables_owned.len() < 2 && !h.owns_four_wheeler
}

fn household_assets_deprived(h: &HouseholdRecord) -> bool {
    !h.owns_agri_land && !h.owns_residence
}

fn individual_assets_deprived(p: &PersonRecord) -> bool {
    !p.owns_residence_any && !p.owns_agri_land_any
}

fn own_education_deprived(p: &PersonRecord) -> bool {
    p.education_years < 5
}

/// Empowerment cells derived from the respondent's answers; all zeros when
/// the household has no usable respondent record.
fn empowerment_cell(mobility: Option<&Mobility>, ev: Evaluator) -> u8 {
    let Some(m) = mobility else { return 0 };
    let deprived = match ev {
        Evaluator::TravelMarket => !m.market_alone,
        Evaluator::TravelHealthFacility => !m.health_facility_alone,
        Evaluator::TravelNatalHome => !m.natal_home_alone,
        Evaluator::TravelOutsideVillage => !m.outside_village_alone,
        Evaluator::OwnHealthDecision => !matches!(m.own_health_decision, HealthDecision::SelfDecides),
        _ => unreachable!("not an empowerment evaluator"),
    };
    deprived as u8
}

fn is_empowerment(ev: Evaluator) -> bool {
    matches!(
        ev,
        Evaluator::TravelMarket
            | Evaluator::TravelHealthFacility
            | Evaluator::TravelNatalHome
            | Evaluator::TravelOutsideVillage
            | Evaluator::OwnHealthDecision
    )
}

/// The female respondent record used for empowerment attribution: first by
/// person id among flagged respondents with complete mobility answers.
fn respondent<'a>(pop: &'a Population, hh_id: &str) -> (Option<&'a Mobility>, usize) {
    let flagged: Vec<&PersonRecord> = pop
        .members(hh_id)
        .filter(|p| p.is_female_respondent)
        .collect();
    let mobility = flagged.iter().find_map(|p| p.mobility.as_ref());
    (mobility, flagged.len())
}

fn household_cell(pop: &Population, h: &HouseholdRecord, mobility: Option<&Mobility>, ev: Evaluator) -> u8 {
    let deprived = match ev {
        Evaluator::HouseholdSchooling => schooling_deprived(pop, h),
        Evaluator::ChildEnrollment => child_enrollment_deprived(h),
        Evaluator::Electricity => !h.has_electricity,
        Evaluator::Floor => h.floor_material == FloorMaterial::EarthMud,
        Evaluator::Sanitation => matches!(h.toilet, Toilet::None | Toilet::Shared),
        Evaluator::Water => water_deprived(h.water_source),
        Evaluator::CookingFuel => cooking_deprived(h.cooking_fuel),
        Evaluator::ConsumerDurables => durables_deprived(h),
        Evaluator::HouseholdAssets => household_assets_deprived(h),
        ev if is_empowerment(ev) => return empowerment_cell(mobility, ev),
        other => unreachable!("{other:?} does not apply at household level"),
    };
    deprived as u8
}

// ---------------------------------------------------------------------------
// Matrix construction
// ---------------------------------------------------------------------------

/// One row per household, evaluated in hh_id order.
pub fn evaluate_household(pop: &Population, scheme: &MeasurementScheme) -> Result<DeprivationMatrix> {
    if scheme.unit != Unit::Household {
        return Err(Error::SchemeMismatch(format!(
            "scheme {} is {}-level, expected household",
            scheme.id, scheme.unit
        )));
    }
    let mut warnings = EvaluationWarnings::default();
    let mut unit_ids = Vec::new();
    let mut cells = Vec::new();
    let mut attributes = Vec::new();
    for h in pop.households() {
        let (mobility, flagged) = respondent(pop, &h.hh_id);
        if mobility.is_none() {
            warnings.households_without_female_respondent += 1;
            warnings.females_without_respondent_attribution +=
                pop.members(&h.hh_id).filter(|p| p.age >= 18 && p.sex == Sex::Female).count() as u64;
        }
        if flagged > 1 {
            warnings.households_with_multiple_respondents += 1;
        }
        let row: Vec<u8> = scheme
            .indicators
            .iter()
            .map(|i| household_cell(pop, h, mobility, i.evaluator))
            .collect();
        unit_ids.push(h.hh_id.clone());
        cells.push(row);
        attributes.push(UnitAttributes {
            unit_id: h.hh_id.clone(),
            hh_id: h.hh_id.clone(),
            head_sex: h.head_sex,
            sex: None,
            age: None,
            marital_status: None,
            household_poor: None,
        });
    }
    Ok(DeprivationMatrix {
        unit_level: Unit::Household,
        unit_ids,
        indicator_ids: scheme.indicator_ids(),
        cells,
        attributes,
        warnings,
    })
}

/// One row per adult (18+), evaluated in (hh_id, person_id) order.
/// Living-standards and household-asset cells are pure copies of the
/// person's household evaluation.
pub fn evaluate_individual(pop: &Population, scheme: &MeasurementScheme) -> Result<DeprivationMatrix> {
    if scheme.unit != Unit::Individual {
        return Err(Error::SchemeMismatch(format!(
            "scheme {} is {}-level, expected individual",
            scheme.id, scheme.unit
        )));
    }
    let mut warnings = EvaluationWarnings::default();
    let mut unit_ids = Vec::new();
    let mut cells = Vec::new();
    let mut attributes = Vec::new();
    let mut current_hh: Option<(&HouseholdRecord, Option<&Mobility>)> = None;
    for p in pop.adults() {
        let (h, mobility) = match current_hh {
            Some((h, m)) if h.hh_id == p.hh_id => (h, m),
            _ => {
                let h = pop.household(&p.hh_id).expect("referential integrity upheld by ingest");
                let (mobility, flagged) = respondent(pop, &p.hh_id);
                if mobility.is_none() {
                    warnings.households_without_female_respondent += 1;
                    warnings.females_without_respondent_attribution +=
                        pop.members(&p.hh_id).filter(|m| m.age >= 18 && m.sex == Sex::Female).count() as u64;
                }
                if flagged > 1 {
                    warnings.households_with_multiple_respondents += 1;
                }
                current_hh = Some((h, mobility));
                (h, mobility)
            }
        };
        let row: Vec<u8> = scheme
            .indicators
            .iter()
            .map(|i| match i.evaluator {
                Evaluator::OwnEducation => own_education_deprived(p) as u8,
                Evaluator::IndividualAssets => individual_assets_deprived(p) as u8,
                ev if is_empowerment(ev) => match p.sex {
                    Sex::Male => 0,
                    Sex::Female => empowerment_cell(mobility, ev),
                },
                ev => household_cell(pop, h, mobility, ev),
            })
            .collect();
        unit_ids.push(p.person_id.clone());
        cells.push(row);
        attributes.push(UnitAttributes {
            unit_id: p.person_id.clone(),
            hh_id: p.hh_id.clone(),
            head_sex: h.head_sex,
            sex: Some(p.sex),
            age: Some(p.age),
            marital_status: Some(p.marital_status),
            household_poor: None,
        });
    }
    Ok(DeprivationMatrix {
        unit_level: Unit::Individual,
        unit_ids,
        indicator_ids: scheme.indicator_ids(),
        cells,
        attributes,
        warnings,
    })
}

// ---------------------------------------------------------------------------
// Rates and export
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RateTable {
    /// Explicit marker for an empty subset; never rendered as zeros.
    Empty,
    Rows(Vec<RateRow>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateRow {
    pub indicator_id: String,
    pub deprived: u64,
    pub total: u64,
    pub rate: Rational,
}

/// Per-indicator share of selected units with cell = 1.
pub fn deprivation_rates<F>(mat: &DeprivationMatrix, subset: F) -> RateTable
where
    F: Fn(usize, &UnitAttributes) -> bool,
{
    let selected: Vec<usize> = (0..mat.n_units())
        .filter(|&i| subset(i, &mat.attributes[i]))
        .collect();
    if selected.is_empty() {
        return RateTable::Empty;
    }
    let total = selected.len() as u64;
    let rows = mat
        .indicator_ids
        .iter()
        .enumerate()
        .map(|(j, id)| {
            let deprived = selected.iter().filter(|&&i| mat.cells[i][j] == 1).count() as u64;
            RateRow {
                indicator_id: id.clone(),
                deprived,
                total,
                rate: Rational::new(deprived as i64, total as i64),
            }
        })
        .collect();
    RateTable::Rows(rows)
}

/// Interchange CSV: unit id, attribute columns, then one 0/1 column per
/// indicator.
pub fn matrix_to_csv(mat: &DeprivationMatrix) -> String {
    let mut out = String::from("unit_id,hh_id,head_sex,sex,age,marital_status,household_poor");
    for id in &mat.indicator_ids {
        out.push(',');
        out.push_str(id);
    }
    out.push('\n');
    for (i, attrs) in mat.attributes.iter().enumerate() {
        out.push_str(&attrs.unit_id);
        out.push(',');
        out.push_str(&attrs.hh_id);
        out.push(',');
        out.push_str(attrs.head_sex.token());
        out.push(',');
        out.push_str(attrs.sex.map(Sex::token).unwrap_or(""));
        out.push(',');
        if let Some(age) = attrs.age {
            out.push_str(&age.to_string());
        }
        out.push(',');
        out.push_str(attrs.marital_status.map(MaritalStatus::token).unwrap_or(""));
        out.push(',');
        if let Some(poor) = attrs.household_poor {
            out.push_str(if poor { "1" } else { "0" });
        }
        for &cell in &mat.cells[i] {
            out.push(',');
            out.push(if cell == 1 { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::microdata::{ingest, MissingDataPolicy};
    use crate::schema::builtin_scheme;

    const HH_HEADER: &str = "hh_id,head_sex,has_electricity,floor_material,toilet,water_source,cooking_fuel,durables_owned,owns_four_wheeler,owns_agri_land,owns_residence,children_5_9\n";
    const P_HEADER: &str = "person_id,hh_id,sex,age,marital_status,education_years,owns_residence_any,owns_agri_land_any,is_female_respondent,market_alone,health_facility_alone,natal_home_alone,outside_village_alone,own_health_decision\n";

    fn pop_from(hh_rows: &str, p_rows: &str) -> Population {
        ingest(
            format!("{HH_HEADER}{hh_rows}").as_bytes(),
            format!("{P_HEADER}{p_rows}").as_bytes(),
            &MissingDataPolicy::ListwiseAll,
        )
        .unwrap()
    }

    fn idx(mat: &DeprivationMatrix, indicator: &str) -> usize {
        mat.indicator_ids.iter().position(|i| i == indicator).unwrap()
    }

    #[test]
    fn durables_rule_four_wheeler_exemption() {
        let pop = pop_from(
            "h1,male,1,finished,private,piped,lpg,cycle,0,1,1,none\n\
             h2,male,1,finished,private,piped,lpg,none,1,1,1,none\n",
            "p1,h1,male,30,never_married,10,0,0,0,,,,,\n\
             p2,h2,male,30,never_married,10,0,0,0,,,,,\n",
        );
        let scheme = builtin_scheme("khas_household").unwrap();
        let mat = evaluate_household(&pop, &scheme).unwrap();
        let j = idx(&mat, "consumer_durables");
        assert_eq!(mat.cell(0, j), 1, "only a cycle, no four-wheeler");
        assert_eq!(mat.cell(1, j), 0, "four-wheeler alone is enough");
    }

    #[test]
    fn no_children_non_deprived_in_enrollment() {
        let pop = pop_from(
            "h1,male,1,finished,private,piped,lpg,fan;tv,0,1,1,none\n\
             h2,male,1,finished,private,piped,lpg,fan;tv,0,1,1,c1:0\n\
             h3,male,1,finished,private,piped,lpg,fan;tv,0,1,1,c2:1;c3:1\n",
            "p1,h1,male,30,never_married,10,0,0,0,,,,,\n\
             p2,h2,male,30,never_married,10,0,0,0,,,,,\n\
             p3,h3,male,30,never_married,10,0,0,0,,,,,\n",
        );
        let scheme = builtin_scheme("khas_household").unwrap();
        let mat = evaluate_household(&pop, &scheme).unwrap();
        let j = idx(&mat, "child_enrollment");
        assert_eq!(mat.cell(0, j), 0);
        assert_eq!(mat.cell(1, j), 1);
        assert_eq!(mat.cell(2, j), 0);
    }

    #[test]
    fn productive_assets_need_only_one() {
        let pop = pop_from(
            "h1,male,1,finished,private,piped,lpg,fan;tv,0,1,0,none\n\
             h2,male,1,finished,private,piped,lpg,fan;tv,0,0,0,none\n",
            "p1,h1,male,30,never_married,10,0,1,0,,,,,\n\
             p2,h2,male,30,never_married,10,0,0,0,,,,,\n",
        );
        let scheme = builtin_scheme("khas_household").unwrap();
        let mat = evaluate_household(&pop, &scheme).unwrap();
        let j = idx(&mat, "household_assets");
        assert_eq!(mat.cell(0, j), 0, "land but no residence: non-deprived");
        assert_eq!(mat.cell(1, j), 1);
    }

    #[test]
    fn education_boundary_exactly_five_years() {
        let pop = pop_from(
            "h1,male,1,finished,private,piped,lpg,fan;tv,0,1,1,none\n",
            "p1,h1,male,30,never_married,5,1,0,0,,,,,\n\
             p2,h1,male,25,never_married,4,1,0,0,,,,,\n",
        );
        let hh = builtin_scheme("khas_household").unwrap();
        let mat = evaluate_household(&pop, &hh).unwrap();
        assert_eq!(mat.cell(0, idx(&mat, "schooling")), 0);
        let ind = builtin_scheme("khas_individual").unwrap();
        let imat = evaluate_individual(&pop, &ind).unwrap();
        let j = idx(&imat, "education");
        assert_eq!(imat.cell(0, j), 0, "exactly 5 years is non-deprived");
        assert_eq!(imat.cell(1, j), 1);
    }

    #[test]
    fn individual_propagation_rules() {
        // illiterate woman owning land jointly, in an electrified household
        let pop = pop_from(
            "h1,male,1,finished,private,piped,lpg,fan;tv,0,1,1,none\n",
            "p1,h1,male,45,currently_married,10,1,1,0,,,,,\n\
             p2,h1,female,40,currently_married,2,0,1,1,0,1,1,1,self\n\
             p3,h1,female,20,never_married,9,0,0,0,,,,,\n",
        );
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = evaluate_individual(&pop, &scheme).unwrap();
        assert_eq!(mat.unit_ids, vec!["p1", "p2", "p3"]);
        // the respondent: education deprived, individual assets non-deprived, electricity copied
        assert_eq!(mat.cell(1, idx(&mat, "education")), 1);
        assert_eq!(mat.cell(1, idx(&mat, "individual_assets")), 0);
        assert_eq!(mat.cell(1, idx(&mat, "electricity")), 0);
        assert_eq!(mat.cell(1, idx(&mat, "travel_market")), 1);
        // the adult male: all empowerment cells zero
        for e in [
            "travel_market",
            "travel_health_facility",
            "travel_natal_home",
            "travel_outside_village",
            "own_health_decision",
        ] {
            assert_eq!(mat.cell(0, idx(&mat, e)), 0, "{e}");
        }
        // the adult daughter inherits the respondent's market restriction
        assert_eq!(mat.cell(2, idx(&mat, "travel_market")), 1);
        assert_eq!(mat.cell(2, idx(&mat, "travel_natal_home")), 0);
    }

    #[test]
    fn all_male_household_defaults_non_deprived_with_warning() {
        let pop = pop_from(
            "h1,male,1,finished,private,piped,lpg,fan;tv,0,1,1,none\n",
            "p1,h1,male,30,never_married,10,1,0,0,,,,,\n\
             p2,h1,male,35,never_married,10,1,0,0,,,,,\n",
        );
        let hh = builtin_scheme("khas_household").unwrap();
        let mat = evaluate_household(&pop, &hh).unwrap();
        assert_eq!(mat.cell(0, idx(&mat, "travel_market")), 0);
        assert_eq!(mat.warnings.households_without_female_respondent, 1);
        assert_eq!(mat.warnings.females_without_respondent_attribution, 0);
    }

    #[test]
    fn water_list_is_exhaustive() {
        let sources = [
            ("piped", 0),
            ("borewell", 0),
            ("closed_well", 0),
            ("open_well", 0),
            ("surface", 1),
            ("tanker", 1),
            ("other", 1),
        ];
        for (tok, expect) in sources {
            let pop = pop_from(
                &format!("h1,male,1,finished,private,{tok},lpg,fan;tv,0,1,1,none\n"),
                "p1,h1,male,30,never_married,10,0,0,0,,,,,\n",
            );
            let scheme = builtin_scheme("khas_household").unwrap();
            let mat = evaluate_household(&pop, &scheme).unwrap();
            assert_eq!(mat.cell(0, idx(&mat, "water")), expect, "{tok}");
        }
    }

    #[test]
    fn empty_subset_yields_empty_marker() {
        let pop = pop_from(
            "h1,male,1,finished,private,piped,lpg,fan;tv,0,1,1,none\n",
            "p1,h1,male,30,never_married,10,0,0,0,,,,,\n",
        );
        let scheme = builtin_scheme("khas_household").unwrap();
        let mat = evaluate_household(&pop, &scheme).unwrap();
        assert_eq!(deprivation_rates(&mat, |_, _| false), RateTable::Empty);
        match deprivation_rates(&mat, |_, _| true) {
            RateTable::Rows(rows) => assert_eq!(rows.len(), 14),
            RateTable::Empty => panic!("non-empty subset"),
        }
    }

    #[test]
    fn evaluation_is_pure() {
        let pop = pop_from(
            "h1,female,0,earth_mud,none,surface,wood,none,0,0,0,c1:0\n",
            "p1,h1,female,60,widowed,0,0,0,1,0,0,0,0,someone_else\n",
        );
        let scheme = builtin_scheme("khas_household").unwrap();
        let a = evaluate_household(&pop, &scheme).unwrap();
        let b = evaluate_household(&pop, &scheme).unwrap();
        assert_eq!(a, b);
        assert_eq!(matrix_to_csv(&a), matrix_to_csv(&b));
    }
}

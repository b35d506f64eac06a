//! Desk-scale verification path. Recomputes poverty measures straight from
//! raw records with deliberately naive code that shares nothing with the
//! main evaluation/scoring pipeline: its own fraction arithmetic, its own
//! reading of every deprivation rule, and plain per-unit loops. Output must
//! equal the main path field by field.

use crate::error::{Error, Result};
use crate::microdata::{
    CookingFuel, FloorMaterial, HealthDecision, HouseholdRecord, Mobility, PersonRecord, Population, Sex, Toilet,
    WaterSource,
};
use crate::rational::Rational;
use crate::schema::{Evaluator, MeasurementScheme, Unit};
use std::collections::BTreeMap;

pub const ORACLE_SIZE_CAP: usize = 10_000;

/// Minimal exact fraction, reduced after every operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Frac {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    fn new(num: i64, den: i64) -> Frac {
        assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Frac {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    fn zero() -> Frac {
        Frac { num: 0, den: 1 }
    }

    fn add(self, other: Frac) -> Frac {
        Frac::new(self.num * other.den + other.num * self.den, self.den * other.den)
    }

    fn div_int(self, by: i64) -> Frac {
        Frac::new(self.num, self.den * by)
    }

    fn ge(self, other: Frac) -> bool {
        // denominators positive by construction
        self.num * other.den >= other.num * self.den
    }

    fn mul(self, other: Frac) -> Frac {
        Frac::new(self.num * other.num, self.den * other.den)
    }

    fn to_rational(self) -> Rational {
        Rational::new(self.num, self.den)
    }
}

fn weight_of(scheme: &MeasurementScheme, idx: usize) -> Frac {
    let w = scheme.indicators[idx].weight;
    Frac::new(*w.numer(), *w.denom())
}

/// Household membership rebuilt from scratch with one plain pass over the
/// person table, in the order persons appear there.
fn member_index(pop: &Population) -> BTreeMap<&str, Vec<&PersonRecord>> {
    let mut index: BTreeMap<&str, Vec<&PersonRecord>> = BTreeMap::new();
    for p in pop.persons() {
        index.entry(p.hh_id.as_str()).or_default().push(p);
    }
    index
}

/// The mobility record the empowerment answers come from, re-derived here
/// the long way: walk members in person-id order, take the first flagged
/// female respondent that has answers.
fn find_respondent<'a>(members: &[&'a PersonRecord]) -> Option<&'a Mobility> {
    for p in members {
        if p.is_female_respondent {
            if let Some(m) = &p.mobility {
                return Some(m);
            }
        }
    }
    None
}

fn household_deprived(members: &[&PersonRecord], h: &HouseholdRecord, ev: Evaluator) -> bool {
    match ev {
        Evaluator::HouseholdSchooling => {
            let mut any_educated_adult = false;
            for p in members {
                if p.age >= 18 && p.education_years >= 5 {
                    any_educated_adult = true;
                }
            }
            !any_educated_adult
        }
        Evaluator::ChildEnrollment => {
            let mut unenrolled = false;
            for c in &h.children_5_9 {
                if !c.enrolled {
                    unenrolled = true;
                }
            }
            unenrolled
        }
        Evaluator::Electricity => !h.has_electricity,
        Evaluator::Floor => matches!(h.floor_material, FloorMaterial::EarthMud),
        Evaluator::Sanitation => h.toilet == Toilet::None || h.toilet == Toilet::Shared,
        Evaluator::Water => matches!(
            h.water_source,
            WaterSource::Surface | WaterSource::Tanker | WaterSource::Other
        ),
        Evaluator::CookingFuel => matches!(
            h.cooking_fuel,
            CookingFuel::Wood | CookingFuel::Charcoal | CookingFuel::Dung | CookingFuel::Other
        ),
        Evaluator::ConsumerDurables => {
            let count = h.durables_owned.len();
            if h.owns_four_wheeler {
                false
            } else {
                count == 0 || count == 1
            }
        }
        Evaluator::HouseholdAssets => !(h.owns_agri_land || h.owns_residence),
        Evaluator::TravelMarket
        | Evaluator::TravelHealthFacility
        | Evaluator::TravelNatalHome
        | Evaluator::TravelOutsideVillage
        | Evaluator::OwnHealthDecision => match find_respondent(members) {
            None => false,
            Some(m) => match ev {
                Evaluator::TravelMarket => !m.market_alone,
                Evaluator::TravelHealthFacility => !m.health_facility_alone,
                Evaluator::TravelNatalHome => !m.natal_home_alone,
                Evaluator::TravelOutsideVillage => !m.outside_village_alone,
                Evaluator::OwnHealthDecision => m.own_health_decision != HealthDecision::SelfDecides,
                _ => unreachable!(),
            },
        },
        Evaluator::OwnEducation | Evaluator::IndividualAssets => {
            unreachable!("individual-only rule at household level")
        }
    }
}

fn person_deprived(pop: &Population, members: &[&PersonRecord], p: &PersonRecord, ev: Evaluator) -> bool {
    match ev {
        Evaluator::OwnEducation => p.education_years <= 4,
        Evaluator::IndividualAssets => !(p.owns_residence_any || p.owns_agri_land_any),
        Evaluator::TravelMarket
        | Evaluator::TravelHealthFacility
        | Evaluator::TravelNatalHome
        | Evaluator::TravelOutsideVillage
        | Evaluator::OwnHealthDecision => {
            if p.sex == Sex::Male {
                false
            } else {
                let h = pop.household(&p.hh_id).expect("join holds");
                household_deprived(members, h, ev)
            }
        }
        other => {
            let h = pop.household(&p.hh_id).expect("join holds");
            household_deprived(members, h, other)
        }
    }
}

struct OracleUnits {
    ids: Vec<String>,
    deprived: Vec<Vec<bool>>,
}

fn evaluate_units(pop: &Population, scheme: &MeasurementScheme) -> Result<OracleUnits> {
    let mut ids = Vec::new();
    let mut deprived = Vec::new();
    let index = member_index(pop);
    match scheme.unit {
        Unit::Household => {
            for h in pop.households() {
                let members = &index[h.hh_id.as_str()];
                ids.push(h.hh_id.clone());
                let mut row = Vec::new();
                for spec in &scheme.indicators {
                    row.push(household_deprived(members, h, spec.evaluator));
                }
                deprived.push(row);
            }
        }
        Unit::Individual => {
            for p in pop.persons() {
                if p.age <= 17 {
                    continue;
                }
                let members = &index[p.hh_id.as_str()];
                ids.push(p.person_id.clone());
                let mut row = Vec::new();
                for spec in &scheme.indicators {
                    row.push(person_deprived(pop, members, p, spec.evaluator));
                }
                deprived.push(row);
            }
        }
    }
    if ids.len() > ORACLE_SIZE_CAP {
        return Err(Error::TooLarge {
            n: ids.len(),
            cap: ORACLE_SIZE_CAP,
        });
    }
    Ok(OracleUnits { ids, deprived })
}

/// Recomputes the full poverty result from raw records.
pub fn oracle_measure(
    pop: &Population,
    scheme: &MeasurementScheme,
    k: Rational,
) -> Result<crate::engine::PovertyResult> {
    let units = evaluate_units(pop, scheme)?;
    let k_frac = Frac::new(*k.numer(), *k.denom());
    let n = units.ids.len();
    let mut scores = Vec::with_capacity(n);
    for row in &units.deprived {
        let mut s = Frac::zero();
        for (j, &dep) in row.iter().enumerate() {
            if dep {
                s = s.add(weight_of(scheme, j));
            }
        }
        scores.push(s);
    }
    let mut poor_flags = Vec::with_capacity(n);
    let mut censored = Vec::with_capacity(n);
    let mut q: u64 = 0;
    let mut censored_sum = Frac::zero();
    for &s in &scores {
        let poor = s.ge(k_frac);
        poor_flags.push(poor);
        if poor {
            q += 1;
            censored_sum = censored_sum.add(s);
            censored.push(s);
        } else {
            censored.push(Frac::zero());
        }
    }
    let h = if n == 0 { Frac::zero() } else { Frac::new(q as i64, n as i64) };
    let a = if q == 0 { None } else { Some(censored_sum.div_int(q as i64)) };
    let m0 = if n == 0 { Frac::zero() } else { censored_sum.div_int(n as i64) };
    Ok(crate::engine::PovertyResult {
        scheme_id: scheme.id.clone(),
        k,
        n: n as u64,
        q,
        h: h.to_rational(),
        a: a.map(Frac::to_rational),
        m0: m0.to_rational(),
        unit_ids: units.ids,
        poor_flags,
        censored_scores: censored.into_iter().map(Frac::to_rational).collect(),
    })
}

/// Naive full-set indicator decomposition: contribution_j = w_j * CH_j / M0,
/// with CH_j counted directly from raw records.
pub fn oracle_decompose(
    pop: &Population,
    scheme: &MeasurementScheme,
    k: Rational,
) -> Result<Vec<(String, Rational, Rational)>> {
    let units = evaluate_units(pop, scheme)?;
    let k_frac = Frac::new(*k.numer(), *k.denom());
    let n = units.ids.len();
    if n == 0 {
        return Err(Error::EmptyPoorSet);
    }
    let mut m0 = Frac::zero();
    let mut poor = vec![false; n];
    for (i, row) in units.deprived.iter().enumerate() {
        let mut s = Frac::zero();
        for (j, &dep) in row.iter().enumerate() {
            if dep {
                s = s.add(weight_of(scheme, j));
            }
        }
        if s.ge(k_frac) {
            poor[i] = true;
            m0 = m0.add(s);
        }
    }
    let m0 = m0.div_int(n as i64);
    if m0 == Frac::zero() {
        return Err(Error::EmptyPoorSet);
    }
    let mut out = Vec::new();
    for (j, spec) in scheme.indicators.iter().enumerate() {
        let mut hits: i64 = 0;
        for (i, row) in units.deprived.iter().enumerate() {
            if poor[i] && row[j] {
                hits += 1;
            }
        }
        let ch = Frac::new(hits, n as i64);
        let contribution = weight_of(scheme, j).mul(ch).mul(Frac::new(m0.den, m0.num));
        out.push((spec.id.clone(), ch.to_rational(), contribution.to_rational()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn frac_arithmetic_reduces() {
        let a = Frac::new(1, 8).add(Frac::new(1, 4));
        assert_eq!(a, Frac { num: 3, den: 8 });
        assert!(a.ge(Frac::new(3, 10)));
        assert!(!Frac::new(1, 4).ge(Frac::new(3, 10)));
        assert_eq!(Frac::new(6, 8).to_rational(), rat(3, 4));
    }
}

//! The dual-cutoff counting core: weighted deprivation scores, poverty
//! identification, censoring, H/A/M0 aggregation, indicator and subgroup
//! decomposition, household-individual cross-tabulation, and the cutoff
//! dominance sweep.
//!
//! Every quantity is an exact rational; the algebraic identities
//! M0 = H*A, M0 = sum_j w_j*CH_j, and M0 = sum_g (n_g/n)*M0_g hold as
//! equalities, not approximations.

use crate::deprivation::{DeprivationMatrix, UnitAttributes};
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::schema::MeasurementScheme;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector {
    pub unit_ids: Vec<String>,
    pub scores: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PovertyResult {
    pub scheme_id: String,
    pub k: Rational,
    pub n: u64,
    pub q: u64,
    pub h: Rational,
    /// Mean censored score among the poor; `None` when q = 0 (undefined,
    /// never reported as zero).
    pub a: Option<Rational>,
    pub m0: Rational,
    pub unit_ids: Vec<String>,
    pub poor_flags: Vec<bool>,
    pub censored_scores: Vec<Rational>,
}

impl PovertyResult {
    pub fn poor_index(&self) -> BTreeMap<&str, bool> {
        self.unit_ids
            .iter()
            .zip(&self.poor_flags)
            .map(|(id, &poor)| (id.as_str(), poor))
            .collect()
    }
}

/// Exact weighted deprivation score per unit.
pub fn score(mat: &DeprivationMatrix, scheme: &MeasurementScheme) -> Result<ScoreVector> {
    if mat.indicator_ids != scheme.indicator_ids() {
        return Err(Error::SchemeMismatch(format!(
            "matrix indicators {:?} do not match scheme {} order {:?}",
            mat.indicator_ids,
            scheme.id,
            scheme.indicator_ids()
        )));
    }
    let weights: Vec<Rational> = scheme.indicators.iter().map(|i| i.weight).collect();
    let scores = mat
        .cells
        .iter()
        .map(|row| {
            row.iter()
                .zip(&weights)
                .filter(|(&cell, _)| cell == 1)
                .map(|(_, &w)| w)
                .sum()
        })
        .collect();
    Ok(ScoreVector {
        unit_ids: mat.unit_ids.clone(),
        scores,
    })
}

/// Dual-cutoff identification: poor iff score >= k (closed comparison).
pub fn identify(sv: &ScoreVector, k: Rational) -> Vec<bool> {
    sv.scores.iter().map(|&s| s >= k).collect()
}

/// H, A, M0 with censoring. H = q/n, A = mean score among the poor,
/// M0 = mean censored score = H*A.
pub fn measure(sv: &ScoreVector, scheme_id: &str, k: Rational) -> PovertyResult {
    let n = sv.scores.len() as u64;
    let poor_flags = identify(sv, k);
    let censored_scores: Vec<Rational> = sv
        .scores
        .iter()
        .zip(&poor_flags)
        .map(|(&s, &poor)| if poor { s } else { rat(0, 1) })
        .collect();
    let q = poor_flags.iter().filter(|&&p| p).count() as u64;
    let censored_sum: Rational = censored_scores.iter().copied().sum();
    let h = if n == 0 { rat(0, 1) } else { rat(q as i64, n as i64) };
    let a = if q == 0 { None } else { Some(censored_sum / rat(q as i64, 1)) };
    let m0 = if n == 0 { rat(0, 1) } else { censored_sum / rat(n as i64, 1) };
    PovertyResult {
        scheme_id: scheme_id.to_string(),
        k,
        n,
        q,
        h,
        a,
        m0,
        unit_ids: sv.unit_ids.clone(),
        poor_flags,
        censored_scores,
    }
}

pub fn measure_matrix(mat: &DeprivationMatrix, scheme: &MeasurementScheme, k: Rational) -> Result<PovertyResult> {
    let sv = score(mat, scheme)?;
    Ok(measure(&sv, &scheme.id, k))
}

// ---------------------------------------------------------------------------
// Indicator / dimension decomposition
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionRow {
    pub id: String,
    /// Censored headcount: share of subset units both poor and deprived.
    pub censored_headcount: Rational,
    /// w_j * CH_j / M0_subset.
    pub contribution: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTable {
    pub subgroup: String,
    pub n_subset: u64,
    pub m0_subset: Rational,
    pub indicators: Vec<DecompositionRow>,
    /// Dimension rows sum their indicators' weighted censored headcounts.
    pub dimensions: Vec<DecompositionRow>,
}

/// Censored-headcount decomposition of M0 over a subset of units.
/// Contribution shares sum to exactly 1 whenever M0_subset > 0.
pub fn decompose_indicators<F>(
    result: &PovertyResult,
    mat: &DeprivationMatrix,
    scheme: &MeasurementScheme,
    subgroup_label: &str,
    subset: F,
) -> Result<DecompositionTable>
where
    F: Fn(usize, &UnitAttributes) -> bool,
{
    if result.unit_ids != mat.unit_ids {
        return Err(Error::SchemeMismatch(
            "poverty result and matrix cover different units".to_string(),
        ));
    }
    let selected: Vec<usize> = (0..mat.n_units())
        .filter(|&i| subset(i, &mat.attributes[i]))
        .collect();
    let n_subset = selected.len() as u64;
    if n_subset == 0 {
        return Err(Error::EmptyPoorSet);
    }
    let m0_subset: Rational =
        selected.iter().map(|&i| result.censored_scores[i]).sum::<Rational>() / rat(n_subset as i64, 1);
    if m0_subset == rat(0, 1) {
        return Err(Error::EmptyPoorSet);
    }
    let mut indicators = Vec::new();
    for (j, spec) in scheme.indicators.iter().enumerate() {
        let hits = selected
            .iter()
            .filter(|&&i| result.poor_flags[i] && mat.cells[i][j] == 1)
            .count() as i64;
        let ch = rat(hits, n_subset as i64);
        indicators.push(DecompositionRow {
            id: spec.id.clone(),
            censored_headcount: ch,
            contribution: spec.weight * ch / m0_subset,
        });
    }
    let dimensions = scheme
        .dimensions
        .iter()
        .map(|d| {
            let mut ch_weighted = rat(0, 1);
            let mut contribution = rat(0, 1);
            for (j, spec) in scheme.indicators.iter().enumerate() {
                if spec.dimension_id == d.id {
                    ch_weighted += spec.weight * indicators[j].censored_headcount;
                    contribution += indicators[j].contribution;
                }
            }
            DecompositionRow {
                id: d.id.clone(),
                // dimension row reports its weighted censored headcount
                censored_headcount: ch_weighted,
                contribution,
            }
        })
        .collect();
    Ok(DecompositionTable {
        subgroup: subgroup_label.to_string(),
        n_subset,
        m0_subset,
        indicators,
        dimensions,
    })
}

// ---------------------------------------------------------------------------
// Subgroup (population-share) decomposition
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupRow {
    pub group: String,
    pub n: u64,
    pub population_share: Rational,
    pub m0: Rational,
    /// (n_g/n) * M0_g / M0; zero-M0 total leaves contributions at zero.
    pub contribution: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupTable {
    pub total_n: u64,
    pub total_m0: Rational,
    pub rows: Vec<SubgroupRow>,
}

/// Population-share decomposition: M0 = sum_g (n_g/n) * M0_g, exact.
/// The groups must partition the total's unit set.
pub fn decompose_subgroups(total: &PovertyResult, groups: &[(String, PovertyResult)]) -> Result<SubgroupTable> {
    let n_sum: u64 = groups.iter().map(|(_, r)| r.n).sum();
    if n_sum != total.n {
        return Err(Error::Partition(format!(
            "group sizes sum to {n_sum}, total has {} units",
            total.n
        )));
    }
    let mut seen: BTreeMap<&str, ()> = BTreeMap::new();
    for (_, r) in groups {
        for id in &r.unit_ids {
            if seen.insert(id.as_str(), ()).is_some() {
                return Err(Error::Partition(format!("unit {id} appears in more than one group")));
            }
            if !total.unit_ids.contains(id) {
                return Err(Error::Partition(format!("unit {id} not in the total unit set")));
            }
        }
    }
    let reconstructed: Rational = groups
        .iter()
        .map(|(_, r)| rat(r.n as i64, total.n as i64) * r.m0)
        .sum();
    if reconstructed != total.m0 {
        return Err(Error::Partition(format!(
            "partition reconstruction {reconstructed} does not equal total M0 {}",
            total.m0
        )));
    }
    let rows = groups
        .iter()
        .map(|(label, r)| {
            let share = rat(r.n as i64, total.n as i64);
            let contribution = if total.m0 == rat(0, 1) {
                rat(0, 1)
            } else {
                share * r.m0 / total.m0
            };
            SubgroupRow {
                group: label.clone(),
                n: r.n,
                population_share: share,
                m0: r.m0,
                contribution,
            }
        })
        .collect();
    Ok(SubgroupTable {
        total_n: total.n,
        total_m0: total.m0,
        rows,
    })
}

// ---------------------------------------------------------------------------
// Cross-tabulation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossTabCell {
    pub row: String,
    pub column: String,
    pub count: u64,
    /// Share of the column total (column-percentage layout).
    pub share: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossTab {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub cells: Vec<CrossTabCell>,
    pub total_individuals: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossTabBy {
    None,
    /// Columns split by the individual's sex.
    Sex,
    /// Rows split by the household head's sex.
    HeadSex,
    Both,
}

/// Counts individuals in each (individual poor?, household poor?) cell,
/// with shares per individual-status column.
pub fn crosstab(
    individual_result: &PovertyResult,
    individual_mat: &DeprivationMatrix,
    household_result: &PovertyResult,
    by: CrossTabBy,
) -> Result<CrossTab> {
    if individual_result.unit_ids != individual_mat.unit_ids {
        return Err(Error::SchemeMismatch(
            "individual result and matrix cover different units".to_string(),
        ));
    }
    let hh_poor = household_result.poor_index();
    let split_cols = matches!(by, CrossTabBy::Sex | CrossTabBy::Both);
    let split_rows = matches!(by, CrossTabBy::HeadSex | CrossTabBy::Both);

    let col_labels: Vec<String> = if split_cols {
        ["poor", "poor_men", "poor_women", "non_poor", "non_poor_men", "non_poor_women"]
            .map(String::from)
            .to_vec()
    } else {
        ["poor", "non_poor"].map(String::from).to_vec()
    };
    let row_labels: Vec<String> = if split_rows {
        [
            "male_headed_poor_household",
            "male_headed_non_poor_household",
            "female_headed_poor_household",
            "female_headed_non_poor_household",
        ]
        .map(String::from)
        .to_vec()
    } else {
        ["poor_household", "non_poor_household"].map(String::from).to_vec()
    };

    let mut counts: BTreeMap<(String, String), u64> = BTreeMap::new();
    for i in 0..individual_mat.n_units() {
        let attrs = &individual_mat.attributes[i];
        let &household_poor = hh_poor.get(attrs.hh_id.as_str()).ok_or_else(|| {
            Error::Integrity(format!(
                "individual {} joins to household {} absent from the household result",
                attrs.unit_id, attrs.hh_id
            ))
        })?;
        let ind_poor = individual_result.poor_flags[i];
        let mut cols = vec![if ind_poor { "poor" } else { "non_poor" }.to_string()];
        if split_cols {
            let sex = attrs.sex.expect("individual matrix rows carry sex");
            cols.push(format!(
                "{}_{}",
                if ind_poor { "poor" } else { "non_poor" },
                match sex {
                    crate::microdata::Sex::Male => "men",
                    crate::microdata::Sex::Female => "women",
                }
            ));
        }
        let row = if split_rows {
            format!(
                "{}_headed_{}_household",
                attrs.head_sex.token(),
                if household_poor { "poor" } else { "non_poor" }
            )
        } else {
            format!("{}_household", if household_poor { "poor" } else { "non_poor" })
        };
        for col in cols {
            *counts.entry((row.clone(), col)).or_default() += 1;
        }
    }

    let mut col_totals: BTreeMap<&str, u64> = BTreeMap::new();
    for col in &col_labels {
        let total = row_labels
            .iter()
            .map(|row| counts.get(&(row.clone(), col.clone())).copied().unwrap_or(0))
            .sum();
        col_totals.insert(col.as_str(), total);
    }
    let mut cells = Vec::new();
    for row in &row_labels {
        for col in &col_labels {
            let count = counts.get(&(row.clone(), col.clone())).copied().unwrap_or(0);
            let total = col_totals[col.as_str()];
            cells.push(CrossTabCell {
                row: row.clone(),
                column: col.clone(),
                count,
                share: (total > 0).then(|| rat(count as i64, total as i64)),
            });
        }
    }
    Ok(CrossTab {
        row_labels,
        col_labels,
        cells,
        total_individuals: individual_mat.n_units() as u64,
    })
}

/// Copies each individual's household poverty status into the matrix
/// attributes, enabling `household_poor` subgrouping downstream.
pub fn attach_household_poverty(mat: &mut DeprivationMatrix, household_result: &PovertyResult) -> Result<()> {
    let hh_poor = household_result.poor_index();
    for attrs in &mut mat.attributes {
        let &poor = hh_poor.get(attrs.hh_id.as_str()).ok_or_else(|| {
            Error::Integrity(format!(
                "unit {} joins to household {} absent from the household result",
                attrs.unit_id, attrs.hh_id
            ))
        })?;
        attrs.household_poor = Some(poor);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Dominance sweep
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepPoint {
    pub cutoff: Rational,
    pub group: String,
    pub n: u64,
    pub q: u64,
    pub h: Rational,
    pub a: Option<Rational>,
    pub m0: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCurve {
    pub cutoffs: Vec<Rational>,
    pub groups: Vec<String>,
    pub points: Vec<SweepPoint>,
}

pub fn default_cutoffs() -> Vec<Rational> {
    (1..=10).map(|i| rat(i, 10)).collect()
}

/// (H, A, M0) per cutoff per group. `group_of` labels each unit; "all" is
/// always included first.
pub fn sweep<F>(
    mat: &DeprivationMatrix,
    scheme: &MeasurementScheme,
    cutoffs: &[Rational],
    group_of: F,
) -> Result<SweepCurve>
where
    F: Fn(usize, &UnitAttributes) -> Option<String>,
{
    if cutoffs.is_empty() {
        return Err(Error::BadCutoffs("no cutoffs given".to_string()));
    }
    if cutoffs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadCutoffs("cutoffs must be strictly ascending".to_string()));
    }
    if cutoffs.iter().any(|&k| k <= rat(0, 1) || k > rat(1, 1)) {
        return Err(Error::BadCutoffs("cutoffs must lie in (0, 1]".to_string()));
    }
    let sv = score(mat, scheme)?;
    let mut groups: Vec<String> = vec!["all".to_string()];
    let mut membership: Vec<Option<String>> = Vec::with_capacity(mat.n_units());
    for i in 0..mat.n_units() {
        let g = group_of(i, &mat.attributes[i]);
        if let Some(ref label) = g {
            if !groups.contains(label) {
                groups.push(label.clone());
            }
        }
        membership.push(g);
    }
    groups[1..].sort();
    let mut points = Vec::new();
    for &k in cutoffs {
        for group in &groups {
            let idx: Vec<usize> = (0..mat.n_units())
                .filter(|&i| group == "all" || membership[i].as_deref() == Some(group.as_str()))
                .collect();
            let sub = ScoreVector {
                unit_ids: idx.iter().map(|&i| sv.unit_ids[i].clone()).collect(),
                scores: idx.iter().map(|&i| sv.scores[i]).collect(),
            };
            let r = measure(&sub, &scheme.id, k);
            points.push(SweepPoint {
                cutoff: k,
                group: group.clone(),
                n: r.n,
                q: r.q,
                h: r.h,
                a: r.a,
                m0: r.m0,
            });
        }
    }
    Ok(SweepCurve {
        cutoffs: cutoffs.to_vec(),
        groups,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deprivation::EvaluationWarnings;
    use crate::microdata::Sex;
    use crate::schema::{builtin_scheme, Unit};

    /// Hand-built individual-level matrix for engine unit tests.
    fn mini_matrix(rows: Vec<(&str, &str, Sex, bool, Vec<&str>)>) -> DeprivationMatrix {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let indicator_ids = scheme.indicator_ids();
        let mut unit_ids = Vec::new();
        let mut cells = Vec::new();
        let mut attributes = Vec::new();
        for (unit_id, hh_id, sex, hh_poor, deprived) in rows {
            unit_ids.push(unit_id.to_string());
            cells.push(
                indicator_ids
                    .iter()
                    .map(|id| deprived.contains(&id.as_str()) as u8)
                    .collect(),
            );
            attributes.push(UnitAttributes {
                unit_id: unit_id.to_string(),
                hh_id: hh_id.to_string(),
                head_sex: Sex::Male,
                sex: Some(sex),
                age: Some(30),
                marital_status: None,
                household_poor: Some(hh_poor),
            });
        }
        DeprivationMatrix {
            unit_level: Unit::Individual,
            unit_ids,
            indicator_ids,
            cells,
            attributes,
            warnings: EvaluationWarnings::default(),
        }
    }

    #[test]
    fn worked_example_scores_three_eighths() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, false, vec!["education", "individual_assets"]),
            ("b", "h1", Sex::Male, false, vec![]),
            ("c", "h2", Sex::Male, true, vec![
                "education",
                "electricity",
                "floor",
                "sanitation",
                "water",
                "cooking_fuel",
                "consumer_durables",
                "household_assets",
                "individual_assets",
                "travel_market",
                "travel_health_facility",
                "travel_natal_home",
                "travel_outside_village",
                "own_health_decision",
            ]),
        ]);
        let sv = score(&mat, &scheme).unwrap();
        assert_eq!(sv.scores[0], rat(3, 8));
        assert_eq!(sv.scores[1], rat(0, 1));
        assert_eq!(sv.scores[2], rat(1, 1), "deprived in all 14 indicators");
        let flags = identify(&sv, rat(3, 10));
        assert_eq!(flags, vec![true, false, true]);
    }

    #[test]
    fn education_only_not_poor_until_empowerment_excluded() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![("a", "h1", Sex::Female, false, vec!["education"])]);
        let sv = score(&mat, &scheme).unwrap();
        assert_eq!(sv.scores[0], rat(1, 4));
        assert!(!identify(&sv, rat(3, 10))[0]);

        let excl = crate::schema::exclude_dimension(&scheme, "empowerment").unwrap();
        let mut mat2 = mat.clone();
        mat2.indicator_ids = excl.indicator_ids();
        mat2.cells = vec![excl
            .indicator_ids()
            .iter()
            .map(|id| (id == "education") as u8)
            .collect()];
        let sv2 = score(&mat2, &excl).unwrap();
        assert_eq!(sv2.scores[0], rat(1, 3));
        assert!(identify(&sv2, rat(3, 10))[0]);
    }

    #[test]
    fn boundary_score_is_poor() {
        let sv = ScoreVector {
            unit_ids: vec!["a".to_string()],
            scores: vec![rat(3, 10)],
        };
        assert!(identify(&sv, rat(3, 10))[0], "closed comparison at k");
    }

    #[test]
    fn measure_identities() {
        let sv = ScoreVector {
            unit_ids: (0..5).map(|i| format!("u{i}")).collect(),
            scores: vec![rat(3, 8), rat(1, 4), rat(0, 1), rat(1, 2), rat(3, 10)],
        };
        let r = measure(&sv, "s", rat(3, 10));
        assert_eq!(r.q, 3);
        assert_eq!(r.h, rat(3, 5));
        // censored sum = 3/8 + 1/2 + 3/10 = 47/40
        assert_eq!(r.m0, rat(47, 200));
        assert_eq!(r.a, Some(rat(47, 120)));
        assert_eq!(r.h * r.a.unwrap(), r.m0, "M0 = H*A exactly");
        assert!(r.m0 <= r.h && r.h <= rat(1, 1));
        for (i, &s) in sv.scores.iter().enumerate() {
            assert!(r.censored_scores[i] <= s);
        }
    }

    #[test]
    fn all_non_poor_flags_a_undefined() {
        let sv = ScoreVector {
            unit_ids: vec!["a".to_string(), "b".to_string()],
            scores: vec![rat(1, 8), rat(0, 1)],
        };
        let r = measure(&sv, "s", rat(3, 10));
        assert_eq!(r.q, 0);
        assert_eq!(r.h, rat(0, 1));
        assert_eq!(r.m0, rat(0, 1));
        assert_eq!(r.a, None);
    }

    #[test]
    fn decomposition_single_indicator_contributes_all() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, false, vec!["education", "travel_market"]),
            ("b", "h2", Sex::Male, false, vec![]),
        ]);
        let r = measure_matrix(&mat, &scheme, rat(3, 10)).unwrap();
        let t = decompose_indicators(&r, &mat, &scheme, "all", |_, _| true).unwrap();
        let total: Rational = t.indicators.iter().map(|row| row.contribution).sum();
        assert_eq!(total, rat(1, 1));
        let edu = t.indicators.iter().find(|x| x.id == "education").unwrap();
        // score 3/10 is poor at the boundary; w*CH/M0 = (1/4 * 1/2) / (3/20)
        assert_eq!(edu.contribution, rat(5, 6));
        let dims: Rational = t.dimensions.iter().map(|row| row.contribution).sum();
        assert_eq!(dims, rat(1, 1));
    }

    #[test]
    fn decomposition_m0_identity_over_full_set() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, false, vec!["education", "individual_assets"]),
            ("b", "h2", Sex::Male, false, vec!["education"]),
            ("c", "h3", Sex::Female, true, vec![
                "education",
                "floor",
                "travel_market",
                "travel_natal_home",
            ]),
        ]);
        let r = measure_matrix(&mat, &scheme, rat(3, 10)).unwrap();
        let t = decompose_indicators(&r, &mat, &scheme, "all", |_, _| true).unwrap();
        let sum_wch: Rational = scheme
            .indicators
            .iter()
            .zip(&t.indicators)
            .map(|(spec, row)| spec.weight * row.censored_headcount)
            .sum();
        assert_eq!(sum_wch, r.m0, "M0 = sum_j w_j * CH_j");
    }

    #[test]
    fn decomposition_empty_poor_set() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![("a", "h1", Sex::Male, false, vec!["floor"])]);
        let r = measure_matrix(&mat, &scheme, rat(3, 10)).unwrap();
        assert!(matches!(
            decompose_indicators(&r, &mat, &scheme, "all", |_, _| true),
            Err(Error::EmptyPoorSet)
        ));
    }

    #[test]
    fn subgroup_partition_reconstruction() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, false, vec!["education", "individual_assets"]),
            ("b", "h2", Sex::Male, false, vec![]),
            ("c", "h3", Sex::Female, true, vec!["education", "travel_market", "floor"]),
            ("d", "h4", Sex::Male, true, vec!["education", "household_assets", "individual_assets"]),
        ]);
        let sv = score(&mat, &scheme).unwrap();
        let total = measure(&sv, &scheme.id, rat(3, 10));
        let mut groups = Vec::new();
        for (label, sex) in [("women", Sex::Female), ("men", Sex::Male)] {
            let idx: Vec<usize> = (0..mat.n_units())
                .filter(|&i| mat.attributes[i].sex == Some(sex))
                .collect();
            let sub = ScoreVector {
                unit_ids: idx.iter().map(|&i| sv.unit_ids[i].clone()).collect(),
                scores: idx.iter().map(|&i| sv.scores[i]).collect(),
            };
            groups.push((label.to_string(), measure(&sub, &scheme.id, rat(3, 10))));
        }
        let table = decompose_subgroups(&total, &groups).unwrap();
        let contrib_sum: Rational = table.rows.iter().map(|r| r.contribution).sum();
        assert_eq!(contrib_sum, rat(1, 1));
        let single = decompose_subgroups(&total, &[("all".to_string(), total.clone())]).unwrap();
        assert_eq!(single.rows[0].contribution, rat(1, 1));
    }

    #[test]
    fn subgroup_non_partition_rejected() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, false, vec!["education", "individual_assets"]),
            ("b", "h2", Sex::Male, false, vec![]),
        ]);
        let total = measure_matrix(&mat, &scheme, rat(3, 10)).unwrap();
        // duplicate group: unit "a" twice
        let sub = PovertyResult {
            unit_ids: vec!["a".to_string()],
            n: 1,
            ..total.clone()
        };
        assert!(matches!(
            decompose_subgroups(&total, &[("g1".to_string(), sub.clone()), ("g2".to_string(), sub)]),
            Err(Error::Partition(_))
        ));
    }

    #[test]
    fn crosstab_two_of_three_poor_in_non_poor_households() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let ind_mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, false, vec!["education", "individual_assets"]),
            ("b", "h2", Sex::Male, false, vec!["education", "individual_assets"]),
            ("c", "h3", Sex::Female, true, vec!["education", "travel_market", "floor"]),
            ("d", "h3", Sex::Male, true, vec![]),
        ]);
        let ind = measure_matrix(&ind_mat, &scheme, rat(3, 10)).unwrap();
        // household result: h3 poor, h1/h2 not
        let hh_sv = ScoreVector {
            unit_ids: vec!["h1".to_string(), "h2".to_string(), "h3".to_string()],
            scores: vec![rat(0, 1), rat(1, 8), rat(1, 2)],
        };
        let hh = measure(&hh_sv, "khas_household", rat(3, 10));
        let tab = crosstab(&ind, &ind_mat, &hh, CrossTabBy::None).unwrap();
        let cell = |row: &str, col: &str| {
            tab.cells
                .iter()
                .find(|c| c.row == row && c.column == col)
                .unwrap()
                .clone()
        };
        assert_eq!(cell("non_poor_household", "poor").count, 2);
        assert_eq!(cell("non_poor_household", "poor").share, Some(rat(2, 3)));
        assert_eq!(cell("poor_household", "poor").share, Some(rat(1, 3)));
        // column shares sum to 1
        for col in &tab.col_labels {
            let sum: Rational = tab
                .cells
                .iter()
                .filter(|c| &c.column == col)
                .filter_map(|c| c.share)
                .sum();
            assert_eq!(sum, rat(1, 1), "column {col}");
        }
    }

    #[test]
    fn crosstab_coincident_poverty_empties_off_diagonal() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let ind_mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, true, vec!["education", "individual_assets"]),
            ("b", "h2", Sex::Male, false, vec![]),
        ]);
        let ind = measure_matrix(&ind_mat, &scheme, rat(3, 10)).unwrap();
        let hh_sv = ScoreVector {
            unit_ids: vec!["h1".to_string(), "h2".to_string()],
            scores: vec![rat(1, 2), rat(0, 1)],
        };
        let hh = measure(&hh_sv, "khas_household", rat(3, 10));
        let tab = crosstab(&ind, &ind_mat, &hh, CrossTabBy::None).unwrap();
        for c in &tab.cells {
            let diagonal = (c.row == "poor_household") == (c.column == "poor");
            assert_eq!(c.count, if diagonal { 1 } else { 0 }, "{}/{}", c.row, c.column);
        }
    }

    #[test]
    fn sweep_monotonic_and_consistent_with_measure() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, false, vec!["education", "individual_assets", "travel_market"]),
            ("b", "h2", Sex::Male, false, vec!["education"]),
            ("c", "h3", Sex::Female, true, vec!["floor", "water"]),
            ("d", "h4", Sex::Male, true, vec![]),
        ]);
        let curve = sweep(&mat, &scheme, &default_cutoffs(), |_, a| {
            a.sex.map(|s| s.token().to_string())
        })
        .unwrap();
        assert_eq!(curve.groups, vec!["all", "female", "male"]);
        for group in &curve.groups {
            let hs: Vec<Rational> = curve
                .points
                .iter()
                .filter(|p| &p.group == group)
                .map(|p| p.h)
                .collect();
            assert_eq!(hs.len(), 10);
            assert!(hs.windows(2).all(|w| w[0] >= w[1]), "H non-increasing for {group}");
            let m0s: Vec<Rational> = curve
                .points
                .iter()
                .filter(|p| &p.group == group)
                .map(|p| p.m0)
                .collect();
            assert!(m0s.windows(2).all(|w| w[0] >= w[1]), "M0 non-increasing for {group}");
        }
        let at_k = curve
            .points
            .iter()
            .find(|p| p.cutoff == rat(3, 10) && p.group == "all")
            .unwrap();
        let direct = measure_matrix(&mat, &scheme, rat(3, 10)).unwrap();
        assert_eq!((at_k.h, at_k.m0, at_k.a), (direct.h, direct.m0, direct.a));
    }

    #[test]
    fn sweep_rejects_bad_cutoffs() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![("a", "h1", Sex::Male, false, vec![])]);
        assert!(matches!(
            sweep(&mat, &scheme, &[rat(2, 10), rat(1, 10)], |_, _| None),
            Err(Error::BadCutoffs(_))
        ));
        assert!(matches!(
            sweep(&mat, &scheme, &[rat(0, 1), rat(1, 2)], |_, _| None),
            Err(Error::BadCutoffs(_))
        ));
    }

    #[test]
    fn scaling_weights_and_k_preserves_identification() {
        let scheme = builtin_scheme("khas_individual").unwrap();
        let mat = mini_matrix(vec![
            ("a", "h1", Sex::Female, false, vec!["education", "individual_assets"]),
            ("b", "h2", Sex::Male, false, vec!["education"]),
        ]);
        let sv = score(&mat, &scheme).unwrap();
        let flags = identify(&sv, rat(3, 10));
        let factor = rat(7, 3);
        let scaled = ScoreVector {
            unit_ids: sv.unit_ids.clone(),
            scores: sv.scores.iter().map(|&s| s * factor).collect(),
        };
        assert_eq!(identify(&scaled, rat(3, 10) * factor), flags);
    }
}

//! Seeded synthetic microdata generator emitting the exact CSV dialect the
//! ingest module consumes. Households draw a latent poverty propensity;
//! member-level draws mix that propensity with idiosyncratic noise, so one
//! parameter dials how far household and individual poverty diverge.
//! Generation is single-threaded and byte-deterministic per config.

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseRates {
    /// Adult male education-deprivation probability; women add `education_gap`.
    pub education: f64,
    /// P(a child aged 5-9 is not enrolled), given the household has children.
    pub child_enrollment: f64,
    pub electricity: f64,
    pub floor: f64,
    pub sanitation: f64,
    pub water: f64,
    pub cooking_fuel: f64,
    pub consumer_durables: f64,
    /// Household owns neither agricultural land nor residence.
    pub household_assets: f64,
    /// Adult male owns no asset (given the household owns one); women add
    /// `individual_asset_gap`.
    pub individual_assets: f64,
    pub travel_market: f64,
    pub travel_health_facility: f64,
    pub travel_natal_home: f64,
    pub travel_outside_village: f64,
    pub own_health_decision: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenderGaps {
    pub education_gap: f64,
    pub individual_asset_gap: f64,
    /// Delta added to every travel/decision rate for the respondent.
    pub mobility_restriction_rate: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n_households: usize,
    /// Probability of 1, 2, ... adult members (index 0 = one adult).
    pub household_size_distribution: Vec<f64>,
    pub female_head_share: f64,
    pub base_rates: BaseRates,
    pub gender_gaps: GenderGaps,
    /// Share of households flagged incomplete; realized count is
    /// round(rate * n_households), selected pseudo-randomly.
    pub missingness_rate: f64,
    /// 0 = fully idiosyncratic member draws, 1 = members mirror the
    /// household propensity exactly.
    pub intra_household_correlation: f64,
    #[serde(default = "default_child_presence")]
    pub child_presence_rate: f64,
}

fn default_child_presence() -> f64 {
    0.3
}

#[derive(Debug, Clone)]
pub struct GeneratedData {
    pub households_csv: String,
    pub persons_csv: String,
    /// Probability clips applied while combining base rates and gaps.
    pub warnings: Vec<String>,
}

fn check_prob(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(Error::Config(format!("{name} = {p} outside [0, 1]")));
    }
    Ok(())
}

fn validate(cfg: &GeneratorConfig) -> Result<()> {
    if cfg.n_households == 0 {
        return Err(Error::Config("n_households must be positive".to_string()));
    }
    if cfg.household_size_distribution.is_empty() || cfg.household_size_distribution.len() > 10 {
        return Err(Error::Config(
            "household_size_distribution must cover sizes 1..10".to_string(),
        ));
    }
    let total: f64 = cfg.household_size_distribution.iter().sum();
    if cfg.household_size_distribution.iter().any(|&p| p < 0.0) || total <= 0.0 {
        return Err(Error::Config("household_size_distribution must be a non-negative, non-zero vector".to_string()));
    }
    check_prob("female_head_share", cfg.female_head_share)?;
    check_prob("missingness_rate", cfg.missingness_rate)?;
    check_prob("intra_household_correlation", cfg.intra_household_correlation)?;
    check_prob("child_presence_rate", cfg.child_presence_rate)?;
    let r = &cfg.base_rates;
    for (name, p) in [
        ("education", r.education),
        ("child_enrollment", r.child_enrollment),
        ("electricity", r.electricity),
        ("floor", r.floor),
        ("sanitation", r.sanitation),
        ("water", r.water),
        ("cooking_fuel", r.cooking_fuel),
        ("consumer_durables", r.consumer_durables),
        ("household_assets", r.household_assets),
        ("individual_assets", r.individual_assets),
        ("travel_market", r.travel_market),
        ("travel_health_facility", r.travel_health_facility),
        ("travel_natal_home", r.travel_natal_home),
        ("travel_outside_village", r.travel_outside_village),
        ("own_health_decision", r.own_health_decision),
    ] {
        check_prob(name, p)?;
    }
    Ok(())
}

fn clip(name: &str, p: f64, warnings: &mut Vec<String>, warned: &mut bool) -> f64 {
    if p < 0.0 || p > 1.0 {
        if !*warned {
            warnings.push(format!("{name} probability {p:.3} clipped to [0, 1]"));
            *warned = true;
        }
        p.clamp(0.0, 1.0)
    } else {
        p
    }
}

struct HouseholdDraw {
    propensity: f64,
    correlation: f64,
}

impl HouseholdDraw {
    /// Bernoulli(p) with intra-household mixing: with probability rho the
    /// draw reuses the household propensity, keeping the marginal at p
    /// while correlating outcomes within the household.
    fn hit(&self, rng: &mut ChaCha8Rng, p: f64) -> bool {
        let mix: f64 = rng.random();
        let idio: f64 = rng.random();
        let r = if mix < self.correlation { self.propensity } else { idio };
        r < p
    }
}

/// Deterministic KHAS-shaped synthetic population.
pub fn generate(cfg: &GeneratorConfig) -> Result<GeneratedData> {
    validate(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut warnings = Vec::new();
    let mut warned_edu = false;
    let mut warned_asset = false;
    let mut warned_mobility = false;

    let size_total: f64 = cfg.household_size_distribution.iter().sum();
    let gaps = &cfg.gender_gaps;
    let rates = &cfg.base_rates;
    let female_education =
        clip("female education", rates.education + gaps.education_gap, &mut warnings, &mut warned_edu);
    let female_assets = clip(
        "female individual assets",
        rates.individual_assets + gaps.individual_asset_gap,
        &mut warnings,
        &mut warned_asset,
    );
    let travel = [
        rates.travel_market,
        rates.travel_health_facility,
        rates.travel_natal_home,
        rates.travel_outside_village,
    ]
    .map(|p| clip("mobility", p + gaps.mobility_restriction_rate, &mut warnings, &mut warned_mobility));
    let decision = clip(
        "mobility",
        rates.own_health_decision + gaps.mobility_restriction_rate,
        &mut warnings,
        &mut warned_mobility,
    );

    let mut hh_lines: Vec<String> = Vec::with_capacity(cfg.n_households);
    let mut person_lines: Vec<String> = Vec::new();

    for i in 0..cfg.n_households {
        let hh_id = format!("h{:06}", i + 1);
        let draw = HouseholdDraw {
            propensity: rng.random(),
            correlation: cfg.intra_household_correlation,
        };

        let head_sex_female = rng.random::<f64>() < cfg.female_head_share;
        let n_adults = {
            let pick: f64 = rng.random::<f64>() * size_total;
            let mut acc = 0.0;
            let mut size = cfg.household_size_distribution.len();
            for (idx, &p) in cfg.household_size_distribution.iter().enumerate() {
                acc += p;
                if pick < acc {
                    size = idx + 1;
                    break;
                }
            }
            size
        };

        // household amenities
        let has_electricity = !draw.hit(&mut rng, rates.electricity);
        let floor_deprived = draw.hit(&mut rng, rates.floor);
        let sanitation_deprived = draw.hit(&mut rng, rates.sanitation);
        let water_deprived = draw.hit(&mut rng, rates.water);
        let cooking_deprived = draw.hit(&mut rng, rates.cooking_fuel);
        let durables_deprived = draw.hit(&mut rng, rates.consumer_durables);
        let assets_deprived = draw.hit(&mut rng, rates.household_assets);

        let floor = if floor_deprived { "earth_mud" } else { "finished" };
        let toilet = if sanitation_deprived {
            if rng.random::<f64>() < 0.7 { "none" } else { "shared" }
        } else {
            "private"
        };
        let water = if water_deprived {
            ["surface", "tanker", "other"][rng.random_range(0..3)]
        } else {
            ["piped", "borewell", "closed_well", "open_well"][rng.random_range(0..4)]
        };
        let fuel = if cooking_deprived {
            ["wood", "charcoal", "dung"][rng.random_range(0..3)]
        } else {
            ["lpg", "electricity", "biogas"][rng.random_range(0..3)]
        };
        const DURABLE_POOL: [&str; 6] = ["fan", "tv", "cell_phone", "cycle", "refrigerator", "two_wheeler"];
        let (durables, four_wheeler) = if durables_deprived {
            let n = rng.random_range(0..2usize);
            let start = rng.random_range(0..6usize);
            let items: Vec<&str> = (0..n).map(|j| DURABLE_POOL[(start + j) % 6]).collect();
            (items, false)
        } else if rng.random::<f64>() < 0.06 {
            // four-wheeler owner with few durables
            let items = vec![DURABLE_POOL[rng.random_range(0..6usize)]];
            (items, true)
        } else {
            let n = rng.random_range(2..5usize);
            let start = rng.random_range(0..6usize);
            let items: Vec<&str> = (0..n).map(|j| DURABLE_POOL[(start + j) % 6]).collect();
            (items, false)
        };
        let (owns_agri, owns_res) = if assets_deprived {
            (false, false)
        } else {
            match rng.random_range(0..3u8) {
                0 => (true, false),
                1 => (false, true),
                _ => (true, true),
            }
        };

        // children aged 5-9 live on the household roster
        let children = if rng.random::<f64>() < cfg.child_presence_rate {
            let n_children = rng.random_range(1..3usize);
            let entries: Vec<String> = (0..n_children)
                .map(|c| {
                    let enrolled = !draw.hit(&mut rng, rates.child_enrollment);
                    format!("c{:06}_{c},{}", i + 1, if enrolled { 1 } else { 0 }).replace(',', ":")
                })
                .collect();
            entries.join(";")
        } else {
            "none".to_string()
        };

        // adults
        let mut first_female_flagged = false;
        for m in 0..n_adults {
            let person_id = format!("p{:06}_{m:02}", i + 1);
            let sex_female = if m == 0 {
                head_sex_female
            } else if m == 1 {
                // second adult is usually the head's spouse
                if rng.random::<f64>() < 0.85 { !head_sex_female } else { rng.random::<f64>() < 0.5 }
            } else {
                rng.random::<f64>() < 0.5
            };
            let age: u32 = if m < 2 { rng.random_range(25..70) } else { rng.random_range(18..70) };
            let marital = if m < 2 && n_adults >= 2 {
                "currently_married"
            } else if m == 0 {
                if sex_female && rng.random::<f64>() < 0.6 { "widowed" } else { "other" }
            } else if rng.random::<f64>() < 0.8 {
                "never_married"
            } else {
                "widowed"
            };
            let edu_rate = if sex_female { female_education } else { rates.education };
            let edu_deprived = draw.hit(&mut rng, edu_rate);
            let education_years: u32 = if edu_deprived { rng.random_range(0..5) } else { rng.random_range(5..13) };

            let asset_rate = if sex_female { female_assets } else { rates.individual_assets };
            let owns_nothing = assets_deprived || draw.hit(&mut rng, asset_rate);
            let (owns_res_any, owns_agri_any) = if owns_nothing {
                (false, false)
            } else {
                // owner of at least one household-owned asset
                match (owns_res, owns_agri) {
                    (true, true) => match rng.random_range(0..3u8) {
                        0 => (true, false),
                        1 => (false, true),
                        _ => (true, true),
                    },
                    (true, false) => (true, false),
                    (false, true) => (false, true),
                    (false, false) => (false, false),
                }
            };

            let is_respondent = sex_female && !first_female_flagged;
            let mobility_cells = if is_respondent {
                first_female_flagged = true;
                let t: Vec<&str> = travel
                    .iter()
                    .map(|&p| if draw.hit(&mut rng, p) { "0" } else { "1" })
                    .collect();
                let d = if draw.hit(&mut rng, decision) {
                    if rng.random::<f64>() < 0.8 { "with_permission" } else { "someone_else" }
                } else {
                    "self"
                };
                format!("{},{},{},{},{d}", t[0], t[1], t[2], t[3])
            } else {
                ",,,,".to_string()
            };

            person_lines.push(format!(
                "{person_id},{hh_id},{},{age},{marital},{education_years},{},{},{},{mobility_cells}",
                if sex_female { "female" } else { "male" },
                if owns_res_any { 1 } else { 0 },
                if owns_agri_any { 1 } else { 0 },
                if is_respondent { 1 } else { 0 },
            ));
        }

        hh_lines.push(format!(
            "{hh_id},{},{},{floor},{toilet},{water},{fuel},{},{},{},{},{children}",
            if head_sex_female { "female" } else { "male" },
            if has_electricity { 1 } else { 0 },
            if durables.is_empty() { "none".to_string() } else { durables.join(";") },
            if four_wheeler { 1 } else { 0 },
            if owns_agri { 1 } else { 0 },
            if owns_res { 1 } else { 0 },
        ));
    }

    // flag exactly round(rate * n) households incomplete by blanking one
    // scheme-relevant field, rotating through a fixed column list
    let n_missing = (cfg.missingness_rate * cfg.n_households as f64).round() as usize;
    if n_missing > 0 {
        let mut picked =
            rand::seq::index::sample(&mut rng, cfg.n_households, n_missing.min(cfg.n_households)).into_vec();
        picked.sort_unstable();
        const BLANK_COLUMNS: [usize; 5] = [4, 6, 3, 5, 2]; // toilet, fuel, floor, water, electricity
        for (slot, &hh_idx) in picked.iter().enumerate() {
            let col = BLANK_COLUMNS[slot % BLANK_COLUMNS.len()];
            let mut fields: Vec<&str> = hh_lines[hh_idx].split(',').collect();
            fields[col] = "";
            hh_lines[hh_idx] = fields.join(",");
        }
    }

    let households_csv = format!(
        "{}\n{}\n",
        crate::microdata::HOUSEHOLD_COLUMNS.join(","),
        hh_lines.join("\n")
    );
    let persons_csv = format!(
        "{}\n{}\n",
        crate::microdata::PERSON_COLUMNS.join(","),
        person_lines.join("\n")
    );
    Ok(GeneratedData {
        households_csv,
        persons_csv,
        warnings,
    })
}

/// The canonical 6-household, 14-person hand-auditable fixture.
pub fn mini_fixture() -> (&'static str, &'static str) {
    (
        include_str!("../assets/mini_households.csv"),
        include_str!("../assets/mini_persons.csv"),
    )
}

//! Subcommand implementations. Each command hashes its inputs, runs the
//! core pipeline, writes CSV/JSON outputs plus a run manifest into the
//! output directory, and surfaces evaluation warnings.

use crate::manifest::{sha256_hex, RunManifest};
use khas_mpi_core::deprivation::{
    evaluate_household, evaluate_individual, matrix_to_csv, DeprivationMatrix, UnitAttributes,
};
use khas_mpi_core::engine::{
    attach_household_poverty, crosstab, decompose_indicators, decompose_subgroups, default_cutoffs, measure,
    measure_matrix, score, sweep, CrossTabBy, DecompositionTable, PovertyResult, ScoreVector,
};
use khas_mpi_core::error::{Error, Result};
use khas_mpi_core::microdata::{ingest, required_fields, MaritalStatus, MissingDataPolicy, Population, Sex};
use khas_mpi_core::rational::to_decimal_string;
use khas_mpi_core::report;
use khas_mpi_core::schema::{
    builtin_scheme, exclude_dimension, exclude_indicator, load_scheme, scheme_to_config, MeasurementScheme, Unit,
};
use khas_mpi_core::synthgen::{generate, GeneratorConfig};
use khas_mpi_core::Rational;
use serde_json::json;
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Both,
}

impl Format {
    pub fn from_flag(s: &str) -> Format {
        match s {
            "csv" => Format::Csv,
            "json" => Format::Json,
            _ => Format::Both,
        }
    }
}

/// Output directory plus the manifest accumulated while writing into it.
pub struct OutputContext {
    dir: PathBuf,
    format: Format,
    pub manifest: RunManifest,
}

impl OutputContext {
    pub fn new(command: &str, dir: &Path, format: Format) -> Result<OutputContext> {
        fs::create_dir_all(dir)?;
        Ok(OutputContext {
            dir: dir.to_path_buf(),
            format,
            manifest: RunManifest::new(command),
        })
    }

    fn emit(&mut self, name: &str, content: &str) -> Result<()> {
        fs::write(self.dir.join(name), content)?;
        self.manifest.outputs.push(name.to_string());
        self.manifest
            .output_sha256
            .insert(name.to_string(), sha256_hex(content.as_bytes()));
        Ok(())
    }

    /// Writes `<stem>.csv` and/or `<stem>.json` per the selected format.
    fn emit_pair(&mut self, stem: &str, csv: &str, json: &str) -> Result<()> {
        if self.format != Format::Json {
            self.emit(&format!("{stem}.csv"), csv)?;
        }
        if self.format != Format::Csv {
            self.emit(&format!("{stem}.json"), json)?;
        }
        Ok(())
    }

    /// Writes the manifest last so it can list every other output.
    pub fn finish(&mut self) -> Result<()> {
        let json = self.manifest.to_json();
        fs::write(self.dir.join("manifest.json"), json)?;
        Ok(())
    }
}

pub fn parse_fraction(s: &str) -> std::result::Result<Rational, String> {
    let (num, den) = s.split_once('/').ok_or_else(|| format!("expected N/D, got {s:?}"))?;
    let num: i64 = num.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: i64 = den.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if den <= 0 {
        return Err(format!("denominator must be positive in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Resolves a `--scheme` value: a path to a JSON file if one exists there,
/// otherwise a builtin scheme name. Exclusions are applied afterwards and
/// renormalize the remaining weights.
pub fn resolve_scheme(spec: &str, exclude_dimensions: &[String], exclude_indicators: &[String]) -> Result<MeasurementScheme> {
    let path = Path::new(spec);
    let mut scheme = if spec.ends_with(".json") || path.is_file() {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::NotFound(format!("scheme file {spec}: {e}")))?;
        load_scheme(&text)?
    } else {
        builtin_scheme(spec)?
    };
    for d in exclude_dimensions {
        scheme = exclude_dimension(&scheme, d)?;
    }
    for i in exclude_indicators {
        scheme = exclude_indicator(&scheme, i)?;
    }
    Ok(scheme)
}

fn scheme_hash(scheme: &MeasurementScheme) -> String {
    let canonical = serde_json::to_string(&scheme_to_config(scheme)).expect("scheme config serializes");
    sha256_hex(canonical.as_bytes())
}

fn record_scheme(ctx: &mut OutputContext, scheme: &MeasurementScheme) {
    ctx.manifest.scheme_id = Some(scheme.id.clone());
    ctx.manifest.scheme_sha256 = Some(scheme_hash(scheme));
}

fn policy_for(missing_policy: &str, schemes: &[&MeasurementScheme]) -> MissingDataPolicy {
    if missing_policy == "scheme" {
        let mut fields = std::collections::BTreeSet::new();
        for s in schemes {
            fields.extend(required_fields(s));
        }
        MissingDataPolicy::ListwiseFields(fields)
    } else {
        MissingDataPolicy::ListwiseAll
    }
}

fn load_population(
    households: &Path,
    persons: &Path,
    policy: &MissingDataPolicy,
    manifest: &mut RunManifest,
) -> Result<Population> {
    let hh_bytes = fs::read(households)?;
    let person_bytes = fs::read(persons)?;
    manifest
        .input_sha256
        .insert(households.display().to_string(), sha256_hex(&hh_bytes));
    manifest
        .input_sha256
        .insert(persons.display().to_string(), sha256_hex(&person_bytes));
    ingest(&hh_bytes[..], &person_bytes[..], policy)
}

fn evaluate(pop: &Population, scheme: &MeasurementScheme) -> Result<DeprivationMatrix> {
    match scheme.unit {
        Unit::Household => evaluate_household(pop, scheme),
        Unit::Individual => evaluate_individual(pop, scheme),
    }
}

fn record_warnings(ctx: &mut OutputContext, pop: &Population, mat: &DeprivationMatrix) {
    let p = &pop.provenance;
    if !p.households_dropped.is_empty() {
        ctx.manifest.warnings.push(format!(
            "{} household(s) dropped by listwise deletion ({} person(s) with them)",
            p.households_dropped.len(),
            p.persons_dropped
        ));
    }
    let w = &mat.warnings;
    if w.households_without_female_respondent > 0 {
        ctx.manifest.warnings.push(format!(
            "{} household(s) without a usable female respondent; empowerment indicators defaulted to non-deprived there",
            w.households_without_female_respondent
        ));
    }
    if w.females_without_respondent_attribution > 0 {
        ctx.manifest.warnings.push(format!(
            "{} adult woman(en) carried no respondent empowerment answers of their own household",
            w.females_without_respondent_attribution
        ));
    }
    if w.households_with_multiple_respondents > 0 {
        ctx.manifest.warnings.push(format!(
            "{} household(s) flagged more than one female respondent; the first by person id was used",
            w.households_with_multiple_respondents
        ));
    }
}

fn effective_k(scheme: &MeasurementScheme, k: Option<Rational>) -> Rational {
    k.unwrap_or(scheme.poverty_cutoff_k)
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

pub struct ComputeOptions<'a> {
    pub households: &'a Path,
    pub persons: &'a Path,
    pub scheme: &'a str,
    pub exclude_dimensions: &'a [String],
    pub exclude_indicators: &'a [String],
    pub k: Option<Rational>,
    pub missing_policy: &'a str,
    pub per_unit: bool,
    pub out: &'a Path,
    pub format: Format,
}

fn h_by_sex_outputs(result: &PovertyResult, mat: &DeprivationMatrix) -> (String, String) {
    let mut rows = Vec::new();
    let groups: [(&str, Option<Sex>); 3] = [("all", None), ("women", Some(Sex::Female)), ("men", Some(Sex::Male))];
    for (label, sex) in groups {
        let idx: Vec<usize> = (0..mat.n_units())
            .filter(|&i| sex.is_none() || mat.attributes[i].sex == sex)
            .collect();
        let n = idx.len() as u64;
        let q = idx.iter().filter(|&&i| result.poor_flags[i]).count() as u64;
        let h = if n == 0 {
            Rational::new(0, 1)
        } else {
            Rational::new(q as i64, n as i64)
        };
        let m0 = if n == 0 {
            Rational::new(0, 1)
        } else {
            idx.iter().map(|&i| result.censored_scores[i]).sum::<Rational>() / Rational::new(n as i64, 1)
        };
        rows.push((label.to_string(), n, q, h, m0));
    }
    let mut csv = String::from("group,n,q,h_dec,h_pct,h_num,h_den,m0_dec,m0_pct,m0_num,m0_den\n");
    for (label, n, q, h, m0) in &rows {
        let hr = report::render(*h);
        let mr = report::render(*m0);
        csv.push_str(&format!(
            "{label},{n},{q},{},{},{},{},{},{},{},{}\n",
            hr.dec, hr.pct, hr.num, hr.den, mr.dec, mr.pct, mr.num, mr.den
        ));
    }
    let json_rows: Vec<serde_json::Value> = rows
        .iter()
        .map(|(label, n, q, h, m0)| {
            let hr = report::render(*h);
            let mr = report::render(*m0);
            json!({
                "group": label,
                "n": n,
                "q": q,
                "h": { "dec": hr.dec, "pct": hr.pct, "frac": [hr.num, hr.den] },
                "m0": { "dec": mr.dec, "pct": mr.pct, "frac": [mr.num, mr.den] },
            })
        })
        .collect();
    let json = serde_json::to_string_pretty(&serde_json::Value::Array(json_rows)).expect("json serializes");
    (csv, json)
}

pub fn cmd_compute(opt: &ComputeOptions) -> Result<()> {
    let mut ctx = OutputContext::new("compute", opt.out, opt.format)?;
    let scheme = resolve_scheme(opt.scheme, opt.exclude_dimensions, opt.exclude_indicators)?;
    record_scheme(&mut ctx, &scheme);
    let k = effective_k(&scheme, opt.k);
    ctx.manifest.k = Some([*k.numer(), *k.denom()]);
    ctx.manifest.missing_policy = Some(opt.missing_policy.to_string());
    let policy = policy_for(opt.missing_policy, &[&scheme]);
    let pop = load_population(opt.households, opt.persons, &policy, &mut ctx.manifest)?;
    let mat = evaluate(&pop, &scheme)?;
    record_warnings(&mut ctx, &pop, &mat);
    let result = measure_matrix(&mat, &scheme, k)?;
    ctx.emit_pair("summary", &report::summary_csv(&result), &report::summary_json(&result))?;
    if scheme.unit == Unit::Individual {
        let (csv, json) = h_by_sex_outputs(&result, &mat);
        ctx.emit_pair("h_by_sex", &csv, &json)?;
    }
    if opt.per_unit {
        ctx.emit("units.csv", &matrix_to_csv(&mat))?;
    }
    ctx.finish()
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

pub struct DecomposeOptions<'a> {
    pub households: &'a Path,
    pub persons: &'a Path,
    pub scheme: &'a str,
    pub household_scheme: &'a str,
    pub exclude_dimensions: &'a [String],
    pub exclude_indicators: &'a [String],
    pub k: Option<Rational>,
    pub missing_policy: &'a str,
    pub group_by: &'a str,
    pub out: &'a Path,
    pub format: Format,
}

type SubsetFn<'a> = Box<dyn Fn(usize, &UnitAttributes) -> bool + 'a>;

fn subsets_for<'a>(group_by: &str, unit: Unit) -> Result<Vec<(String, SubsetFn<'a>)>> {
    let individual_only = ["sex", "household_poor", "marital_status"];
    if unit == Unit::Household && individual_only.contains(&group_by) {
        return Err(Error::Config(format!(
            "--group-by {group_by} requires an individual-level scheme"
        )));
    }
    let mut subsets: Vec<(String, SubsetFn)> = vec![("all".to_string(), Box::new(|_, _| true))];
    match group_by {
        "all" => {}
        "sex" => {
            subsets.push(("women".to_string(), Box::new(|_, a| a.sex == Some(Sex::Female))));
            subsets.push(("men".to_string(), Box::new(|_, a| a.sex == Some(Sex::Male))));
        }
        "head_sex" => {
            subsets.push(("female_headed".to_string(), Box::new(|_, a| a.head_sex == Sex::Female)));
            subsets.push(("male_headed".to_string(), Box::new(|_, a| a.head_sex == Sex::Male)));
        }
        "household_poor" => {
            subsets.push(("poor_household".to_string(), Box::new(|_, a| a.household_poor == Some(true))));
            subsets.push((
                "non_poor_household".to_string(),
                Box::new(|_, a| a.household_poor == Some(false)),
            ));
        }
        "marital_status" => {
            for status in [
                MaritalStatus::NeverMarried,
                MaritalStatus::CurrentlyMarried,
                MaritalStatus::Widowed,
            ] {
                subsets.push((
                    status.token().to_string(),
                    Box::new(move |_, a: &UnitAttributes| a.marital_status == Some(status)),
                ));
            }
        }
        other => return Err(Error::Config(format!("unknown --group-by value {other}"))),
    }
    Ok(subsets)
}

pub fn cmd_decompose(opt: &DecomposeOptions) -> Result<()> {
    let mut ctx = OutputContext::new("decompose", opt.out, opt.format)?;
    let scheme = resolve_scheme(opt.scheme, opt.exclude_dimensions, opt.exclude_indicators)?;
    record_scheme(&mut ctx, &scheme);
    let k = effective_k(&scheme, opt.k);
    ctx.manifest.k = Some([*k.numer(), *k.denom()]);
    ctx.manifest.missing_policy = Some(opt.missing_policy.to_string());
    ctx.manifest.flags.insert("group_by".to_string(), opt.group_by.to_string());

    let household_scheme = if opt.group_by == "household_poor" {
        Some(resolve_scheme(opt.household_scheme, &[], &[])?)
    } else {
        None
    };
    let mut scheme_refs: Vec<&MeasurementScheme> = vec![&scheme];
    if let Some(hs) = &household_scheme {
        scheme_refs.push(hs);
        ctx.manifest.flags.insert("household_scheme".to_string(), hs.id.clone());
    }
    let policy = policy_for(opt.missing_policy, &scheme_refs);
    let pop = load_population(opt.households, opt.persons, &policy, &mut ctx.manifest)?;
    let mut mat = evaluate(&pop, &scheme)?;
    record_warnings(&mut ctx, &pop, &mat);

    if let Some(hs) = &household_scheme {
        let hh_mat = evaluate(&pop, hs)?;
        let hh_result = measure_matrix(&hh_mat, hs, k)?;
        attach_household_poverty(&mut mat, &hh_result)?;
    }
    let result = measure_matrix(&mat, &scheme, k)?;

    let mut tables: Vec<DecompositionTable> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();
    for (label, subset) in subsets_for(opt.group_by, scheme.unit)? {
        match decompose_indicators(&result, &mat, &scheme, &label, subset) {
            Ok(t) => tables.push(t),
            Err(Error::EmptyPoorSet) => skipped.push(label),
            Err(e) => return Err(e),
        }
    }

    let mut footnotes: Vec<String> = Vec::new();
    if opt.group_by == "marital_status" {
        let deserted = mat
            .attributes
            .iter()
            .filter(|a| a.marital_status == Some(MaritalStatus::Deserted))
            .count();
        let other = mat
            .attributes
            .iter()
            .filter(|a| a.marital_status == Some(MaritalStatus::Other))
            .count();
        footnotes.push(format!(
            "excluded from marital_status grouping: deserted={deserted}, other={other}"
        ));
    }
    for label in &skipped {
        footnotes.push(format!("subgroup {label}: no poor units, decomposition undefined"));
    }

    let mut csv = report::decomposition_csv(&tables);
    for note in &footnotes {
        csv.push_str(&format!("# {note}\n"));
    }
    let tables_json: serde_json::Value =
        serde_json::from_str(&report::decomposition_json(&tables)).expect("round-trips");
    let json = serde_json::to_string_pretty(&json!({
        "tables": tables_json,
        "skipped": skipped,
        "footnotes": footnotes,
    }))
    .expect("json serializes");
    ctx.emit_pair("decomposition", &csv, &json)?;

    // Population-share decomposition, only where the grouping partitions
    // the unit set (marital_status does not: deserted/other are excluded).
    if ["sex", "head_sex", "household_poor"].contains(&opt.group_by) {
        let sv = score(&mat, &scheme)?;
        let mut groups = Vec::new();
        for (label, subset) in subsets_for(opt.group_by, scheme.unit)? {
            if label == "all" {
                continue;
            }
            let idx: Vec<usize> = (0..mat.n_units()).filter(|&i| subset(i, &mat.attributes[i])).collect();
            let sub = ScoreVector {
                unit_ids: idx.iter().map(|&i| sv.unit_ids[i].clone()).collect(),
                scores: idx.iter().map(|&i| sv.scores[i]).collect(),
            };
            groups.push((label, measure(&sub, &scheme.id, k)));
        }
        let table = decompose_subgroups(&result, &groups)?;
        ctx.emit_pair("subgroups", &report::subgroup_csv(&table), &report::subgroup_json(&table))?;
    }
    ctx.finish()
}

// ---------------------------------------------------------------------------
// crosstab
// ---------------------------------------------------------------------------

pub struct CrosstabOptions<'a> {
    pub households: &'a Path,
    pub persons: &'a Path,
    pub individual_scheme: &'a str,
    pub household_scheme: &'a str,
    pub k: Option<Rational>,
    pub missing_policy: &'a str,
    pub by: &'a str,
    pub out: &'a Path,
    pub format: Format,
}

pub fn cmd_crosstab(opt: &CrosstabOptions) -> Result<()> {
    let mut ctx = OutputContext::new("crosstab", opt.out, opt.format)?;
    let ind_scheme = resolve_scheme(opt.individual_scheme, &[], &[])?;
    let hh_scheme = resolve_scheme(opt.household_scheme, &[], &[])?;
    if ind_scheme.unit != Unit::Individual || hh_scheme.unit != Unit::Household {
        return Err(Error::Config(
            "crosstab needs an individual-level and a household-level scheme".to_string(),
        ));
    }
    record_scheme(&mut ctx, &ind_scheme);
    ctx.manifest.flags.insert("household_scheme".to_string(), hh_scheme.id.clone());
    ctx.manifest
        .flags
        .insert("household_scheme_sha256".to_string(), scheme_hash(&hh_scheme));
    ctx.manifest.flags.insert("by".to_string(), opt.by.to_string());
    let k = effective_k(&ind_scheme, opt.k);
    ctx.manifest.k = Some([*k.numer(), *k.denom()]);
    ctx.manifest.missing_policy = Some(opt.missing_policy.to_string());

    let policy = policy_for(opt.missing_policy, &[&ind_scheme, &hh_scheme]);
    let pop = load_population(opt.households, opt.persons, &policy, &mut ctx.manifest)?;
    let ind_mat = evaluate(&pop, &ind_scheme)?;
    record_warnings(&mut ctx, &pop, &ind_mat);
    let hh_mat = evaluate(&pop, &hh_scheme)?;
    let ind_result = measure_matrix(&ind_mat, &ind_scheme, k)?;
    let hh_result = measure_matrix(&hh_mat, &hh_scheme, k)?;
    let by = match opt.by {
        "sex" => CrossTabBy::Sex,
        "head_sex" => CrossTabBy::HeadSex,
        "both" => CrossTabBy::Both,
        _ => CrossTabBy::None,
    };
    let tab = crosstab(&ind_result, &ind_mat, &hh_result, by)?;
    ctx.emit_pair("crosstab", &report::crosstab_csv(&tab), &report::crosstab_json(&tab))?;
    ctx.finish()
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

pub struct SweepOptions<'a> {
    pub households: &'a Path,
    pub persons: &'a Path,
    pub scheme: &'a str,
    pub exclude_dimensions: &'a [String],
    pub exclude_indicators: &'a [String],
    pub cutoffs: Option<&'a str>,
    pub missing_policy: &'a str,
    pub group_by: &'a str,
    pub out: &'a Path,
    pub format: Format,
}

pub fn cmd_sweep(opt: &SweepOptions) -> Result<()> {
    let mut ctx = OutputContext::new("sweep", opt.out, opt.format)?;
    let scheme = resolve_scheme(opt.scheme, opt.exclude_dimensions, opt.exclude_indicators)?;
    record_scheme(&mut ctx, &scheme);
    ctx.manifest.missing_policy = Some(opt.missing_policy.to_string());
    ctx.manifest.flags.insert("group_by".to_string(), opt.group_by.to_string());
    let cutoffs: Vec<Rational> = match opt.cutoffs {
        None => default_cutoffs(),
        Some(list) => {
            let mut out = Vec::new();
            for item in list.split(',') {
                out.push(parse_fraction(item.trim()).map_err(Error::Config)?);
            }
            out
        }
    };
    if opt.group_by == "sex" && scheme.unit == Unit::Household {
        return Err(Error::Config("--group-by sex requires an individual-level scheme".to_string()));
    }
    let policy = policy_for(opt.missing_policy, &[&scheme]);
    let pop = load_population(opt.households, opt.persons, &policy, &mut ctx.manifest)?;
    let mat = evaluate(&pop, &scheme)?;
    record_warnings(&mut ctx, &pop, &mat);
    let group_by = opt.group_by.to_string();
    let curve = sweep(&mat, &scheme, &cutoffs, |_, a| match group_by.as_str() {
        "sex" => a.sex.map(|s| match s {
            Sex::Female => "women".to_string(),
            Sex::Male => "men".to_string(),
        }),
        "head_sex" => Some(format!("{}_headed", a.head_sex.token())),
        _ => None,
    })?;
    ctx.emit_pair("sweep", &report::sweep_csv(&curve), &report::sweep_json(&curve))?;
    ctx.finish()
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

pub fn cmd_generate(config: &Path, out: &Path) -> Result<()> {
    let mut ctx = OutputContext::new("generate", out, Format::Both)?;
    let text = fs::read_to_string(config)?;
    ctx.manifest
        .input_sha256
        .insert(config.display().to_string(), sha256_hex(text.as_bytes()));
    let cfg: GeneratorConfig = serde_json::from_str(&text)?;
    let data = generate(&cfg)?;
    for warning in &data.warnings {
        eprintln!("warning: {warning}");
        ctx.manifest.warnings.push(warning.clone());
    }
    ctx.emit("households.csv", &data.households_csv)?;
    ctx.emit("persons.csv", &data.persons_csv)?;
    ctx.manifest.flags.insert("seed".to_string(), cfg.seed.to_string());
    ctx.manifest
        .flags
        .insert("n_households".to_string(), cfg.n_households.to_string());
    ctx.finish()
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

pub fn cmd_validate(households: &Path, persons: &Path, scheme: Option<&str>) -> Result<()> {
    let policy = match scheme {
        None => MissingDataPolicy::ListwiseAll,
        Some(name) => {
            let scheme = resolve_scheme(name, &[], &[])?;
            MissingDataPolicy::ListwiseFields(required_fields(&scheme))
        }
    };
    let hh_bytes = fs::read(households)?;
    let person_bytes = fs::read(persons)?;
    let pop = ingest(&hh_bytes[..], &person_bytes[..], &policy)?;
    let p = &pop.provenance;
    let mut drop_reasons: BTreeMap<&str, u64> = BTreeMap::new();
    for (_, reason) in &p.households_dropped {
        *drop_reasons.entry(reason.as_str()).or_default() += 1;
    }
    let report = json!({
        "household_rows_read": p.household_rows_read,
        "person_rows_read": p.person_rows_read,
        "households_retained": p.households_retained,
        "persons_retained": p.persons_retained,
        "households_dropped": p.households_dropped.len(),
        "persons_dropped_with_households": p.persons_dropped,
        "drop_reasons": drop_reasons,
        "defaulted_fields": p.defaulted_fields.len(),
        "female_headed_share": to_decimal_string(pop.female_headed_share(), 4),
        "policy": match policy {
            MissingDataPolicy::ListwiseAll => "listwise_all".to_string(),
            MissingDataPolicy::ListwiseFields(_) => "listwise_scheme_fields".to_string(),
        },
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("json serializes"));
    Ok(())
}

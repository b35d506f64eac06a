//! Report rendering. Every rational quantity is emitted in three forms so
//! downstream readers never re-derive a rounding: a 4-decimal proportion,
//! a 1-decimal percentage, and the exact numerator/denominator pair.
//! The CSV and JSON writers draw from the same renderer, so the two
//! formats always agree on values.

use crate::engine::{CrossTab, DecompositionTable, PovertyResult, SubgroupTable, SweepCurve};
use crate::rational::{to_decimal_string, Rational};
use serde_json::{json, Value};

/// One rational in all output forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub dec: String,
    pub pct: String,
    pub num: i64,
    pub den: i64,
}

pub fn render(r: Rational) -> Rendered {
    Rendered {
        dec: to_decimal_string(r, 4),
        pct: to_decimal_string(r * Rational::new(100, 1), 1),
        num: *r.numer(),
        den: *r.denom(),
    }
}

fn rational_json(r: Rational) -> Value {
    let x = render(r);
    json!({ "dec": x.dec, "pct": x.pct, "frac": [x.num, x.den] })
}

fn opt_rational_json(r: Option<Rational>) -> Value {
    match r {
        Some(r) => rational_json(r),
        None => Value::Null,
    }
}

fn csv_cells(r: Rational) -> String {
    let x = render(r);
    format!("{},{},{},{}", x.dec, x.pct, x.num, x.den)
}

fn opt_csv_cells(r: Option<Rational>) -> String {
    match r {
        Some(r) => csv_cells(r),
        None => ",,,".to_string(),
    }
}

// ---------------------------------------------------------------------------
// Summary (H, A, M0)
// ---------------------------------------------------------------------------

pub fn summary_json(result: &PovertyResult) -> String {
    let v = json!({
        "scheme_id": result.scheme_id,
        "k": rational_json(result.k),
        "n": result.n,
        "q": result.q,
        "h": rational_json(result.h),
        "a": opt_rational_json(result.a),
        "m0": rational_json(result.m0),
    });
    serde_json::to_string_pretty(&v).expect("json serialization is infallible here")
}

pub fn summary_csv(result: &PovertyResult) -> String {
    let mut out = String::from("metric,dec,pct,num,den\n");
    out.push_str(&format!("scheme_id,{},,,\n", result.scheme_id));
    out.push_str(&format!("k,{}\n", csv_cells(result.k)));
    out.push_str(&format!("n,{},,{},1\n", result.n, result.n));
    out.push_str(&format!("q,{},,{},1\n", result.q, result.q));
    out.push_str(&format!("h,{}\n", csv_cells(result.h)));
    out.push_str(&format!("a,{}\n", opt_csv_cells(result.a)));
    out.push_str(&format!("m0,{}\n", csv_cells(result.m0)));
    out
}

// ---------------------------------------------------------------------------
// Indicator / dimension decomposition
// ---------------------------------------------------------------------------

pub fn decomposition_json(tables: &[DecompositionTable]) -> String {
    let v: Vec<Value> = tables
        .iter()
        .map(|t| {
            json!({
                "subgroup": t.subgroup,
                "n": t.n_subset,
                "m0": rational_json(t.m0_subset),
                "indicators": rows_json(&t.indicators),
                "dimensions": rows_json(&t.dimensions),
            })
        })
        .collect();
    serde_json::to_string_pretty(&Value::Array(v)).expect("json serialization is infallible here")
}

fn rows_json(rows: &[crate::engine::DecompositionRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "censored_headcount": rational_json(r.censored_headcount),
                    "contribution": rational_json(r.contribution),
                })
            })
            .collect(),
    )
}

pub fn decomposition_csv(tables: &[DecompositionTable]) -> String {
    let mut out =
        String::from("subgroup,level,id,ch_dec,ch_pct,ch_num,ch_den,contrib_dec,contrib_pct,contrib_num,contrib_den\n");
    for t in tables {
        for (level, rows) in [("indicator", &t.indicators), ("dimension", &t.dimensions)] {
            for r in rows {
                out.push_str(&format!(
                    "{},{level},{},{},{}\n",
                    t.subgroup,
                    r.id,
                    csv_cells(r.censored_headcount),
                    csv_cells(r.contribution)
                ));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Subgroup decomposition
// ---------------------------------------------------------------------------

pub fn subgroup_json(table: &SubgroupTable) -> String {
    let v = json!({
        "total_n": table.total_n,
        "total_m0": rational_json(table.total_m0),
        "groups": table.rows.iter().map(|r| json!({
            "group": r.group,
            "n": r.n,
            "population_share": rational_json(r.population_share),
            "m0": rational_json(r.m0),
            "contribution": rational_json(r.contribution),
        })).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("json serialization is infallible here")
}

pub fn subgroup_csv(table: &SubgroupTable) -> String {
    let mut out = String::from(
        "group,n,share_dec,share_pct,share_num,share_den,m0_dec,m0_pct,m0_num,m0_den,contrib_dec,contrib_pct,contrib_num,contrib_den\n",
    );
    for r in &table.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.group,
            r.n,
            csv_cells(r.population_share),
            csv_cells(r.m0),
            csv_cells(r.contribution)
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// Cross-tabulation
// ---------------------------------------------------------------------------

pub fn crosstab_json(tab: &CrossTab) -> String {
    let v = json!({
        "total_individuals": tab.total_individuals,
        "rows": tab.row_labels,
        "columns": tab.col_labels,
        "cells": tab.cells.iter().map(|c| json!({
            "row": c.row,
            "column": c.column,
            "count": c.count,
            "share": opt_rational_json(c.share),
        })).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("json serialization is infallible here")
}

pub fn crosstab_csv(tab: &CrossTab) -> String {
    let mut out = String::from("row,column,count,share_dec,share_pct,share_num,share_den\n");
    for c in &tab.cells {
        out.push_str(&format!("{},{},{},{}\n", c.row, c.column, c.count, opt_csv_cells(c.share)));
    }
    out
}

// ---------------------------------------------------------------------------
// Dominance sweep
// ---------------------------------------------------------------------------

pub fn sweep_json(curve: &SweepCurve) -> String {
    let v = json!({
        "cutoffs": curve.cutoffs.iter().map(|&k| rational_json(k)).collect::<Vec<_>>(),
        "groups": curve.groups,
        "points": curve.points.iter().map(|p| json!({
            "cutoff": rational_json(p.cutoff),
            "group": p.group,
            "n": p.n,
            "q": p.q,
            "h": rational_json(p.h),
            "a": opt_rational_json(p.a),
            "m0": rational_json(p.m0),
        })).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("json serialization is infallible here")
}

pub fn sweep_csv(curve: &SweepCurve) -> String {
    let mut out = String::from(
        "cutoff_num,cutoff_den,group,n,q,h_dec,h_pct,h_num,h_den,a_dec,a_pct,a_num,a_den,m0_dec,m0_pct,m0_num,m0_den\n",
    );
    for p in &curve.points {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            p.cutoff.numer(),
            p.cutoff.denom(),
            p.group,
            p.n,
            p.q,
            csv_cells(p.h),
            opt_csv_cells(p.a),
            csv_cells(p.m0)
        ));
    }
    out
}

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::Result;
use crate::posets::bruhat_interval;
use crate::rootsys::RootSystem;
use crate::schubert::{is_smooth, is_toric, Polynomial, Smoothness};
use crate::spherical::{spherical_levis, spherical_relaxed_levis};
use crate::subset::SimpleSubset;
use crate::weyl::{format_one_line, WeylElt};

use super::cache::group_elements;
use super::SCHEMA_VERSION;

/// Everything the library computes about a single element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    #[serde(rename = "type")]
    pub group: String,
    pub one_line: Option<String>,
    pub canonical_reduced_word: String,
    pub length: usize,
    pub support: SimpleSubset,
    pub left_descents: SimpleSubset,
    pub is_toric: bool,
    pub is_coxeter: bool,
    pub spherical_levis: Vec<SimpleSubset>,
    pub spherical_relaxed_levis: Vec<SimpleSubset>,
    pub smooth: Smoothness,
    pub rationally_smooth: bool,
    pub inverse_smooth: Smoothness,
    pub poincare_coeffs: Polynomial,
    pub interval_size: usize,
    pub coatoms: usize,
    pub boolean_interval: bool,
}

impl ClassificationRecord {
    pub fn new(w: &WeylElt) -> Self {
        let interval = bruhat_interval(w);
        let mut coeffs = vec![0u64; w.length() + 1];
        for &r in interval.ranks() {
            coeffs[r] += 1;
        }
        let poincare = Polynomial::new(coeffs);
        ClassificationRecord {
            group: w.root_system().name(),
            one_line: w.one_line().ok().map(|p| format_one_line(&p)),
            canonical_reduced_word: w.reduced_word().to_string(),
            length: w.length(),
            support: w.support(),
            left_descents: w.left_descents(),
            is_toric: is_toric(w),
            is_coxeter: w.is_coxeter(),
            spherical_levis: spherical_levis(w),
            spherical_relaxed_levis: spherical_relaxed_levis(w),
            smooth: is_smooth(w),
            rationally_smooth: poincare.is_palindromic(),
            inverse_smooth: is_smooth(&w.inverse()),
            interval_size: interval.len(),
            coatoms: interval.coatom_count(),
            boolean_interval: interval.is_boolean(),
            poincare_coeffs: poincare,
        }
    }

    /// Violated internal consistency constraints, empty when consistent.
    pub fn inconsistencies(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |ok: bool, what: &str| {
            if !ok {
                out.push(format!("{}: {what}", self.canonical_reduced_word));
            }
        };
        check(!self.is_toric || self.boolean_interval, "toric but interval not boolean");
        check(!self.is_coxeter || self.is_toric, "Coxeter but not toric");
        check(
            self.spherical_levis.iter().all(|j| self.spherical_relaxed_levis.contains(j)),
            "spherical Levi set not inside relaxed set",
        );
        check(
            self.spherical_levis
                .iter()
                .chain(&self.spherical_relaxed_levis)
                .all(|j| j.is_subset(self.left_descents)),
            "Levi subset outside left descents",
        );
        check(
            self.poincare_coeffs.degree() == Some(self.length),
            "Poincaré degree differs from length",
        );
        check(
            self.poincare_coeffs.eval(1) == self.interval_size as u64,
            "Poincaré polynomial at 1 differs from interval size",
        );
        check(
            !self.is_toric || self.interval_size == 1 << self.length,
            "toric but interval size is not 2^length",
        );
        check(
            self.smooth != Smoothness::Smooth || self.rationally_smooth,
            "smooth but not rationally smooth",
        );
        check(self.support.len() >= self.left_descents.len(), "descent outside support");
        out
    }
}

/// One record per element, in breadth-first order from the identity.
pub fn classify(rs: &Arc<RootSystem>, cap: usize) -> Result<Vec<ClassificationRecord>> {
    let group = group_elements(rs, cap)?;
    Ok(group.par_iter().map(ClassificationRecord::new).collect())
}

pub fn records_to_json(rs: &RootSystem, records: &[ClassificationRecord]) -> Result<String> {
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "type": rs.name(),
        "order": records.len(),
        "records": records,
    });
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub const CSV_HEADER: [&str; 18] = [
    "schema",
    "type",
    "one_line",
    "canonical_reduced_word",
    "length",
    "support",
    "left_descents",
    "is_toric",
    "is_coxeter",
    "spherical_levis",
    "spherical_relaxed_levis",
    "smooth",
    "rationally_smooth",
    "inverse_smooth",
    "poincare_coeffs",
    "interval_size",
    "coatoms",
    "boolean_interval",
];

/// Flattened table; list-valued fields are joined with `;`, subsets inside
/// lists are written in brace notation.
pub fn records_to_csv(records: &[ClassificationRecord]) -> Result<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(CSV_HEADER)?;
    for r in records {
        wtr.write_record([
            SCHEMA_VERSION.to_string(),
            r.group.clone(),
            r.one_line.clone().unwrap_or_default(),
            r.canonical_reduced_word.clone(),
            r.length.to_string(),
            join(r.support.iter()),
            join(r.left_descents.iter()),
            r.is_toric.to_string(),
            r.is_coxeter.to_string(),
            join(&r.spherical_levis),
            join(&r.spherical_relaxed_levis),
            r.smooth.to_string(),
            r.rationally_smooth.to_string(),
            r.inverse_smooth.to_string(),
            join(r.poincare_coeffs.coeffs()),
            r.interval_size.to_string(),
            r.coatoms.to_string(),
            r.boolean_interval.to_string(),
        ])?;
    }
    let bytes = wtr.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::DEFAULT_CAP;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_spec(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a3_has_24_consistent_records() {
        let r = rs("A3");
        let recs = classify(&r, DEFAULT_CAP).unwrap();
        assert_eq!(recs.len(), 24);
        assert!(recs[0].canonical_reduced_word == "e");
        for rec in &recs {
            assert!(rec.inconsistencies().is_empty(), "{:?}", rec.inconsistencies());
        }
        let json: serde_json::Value = serde_json::from_str(&records_to_json(&r, &recs).unwrap()).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["records"].as_array().unwrap().len(), 24);
    }

    #[test]
    fn b2_csv_has_8_rows() {
        let recs = classify(&rs("B2"), DEFAULT_CAP).unwrap();
        let csv = records_to_csv(&recs).unwrap();
        let mut rdr = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(rdr.headers().unwrap().len(), CSV_HEADER.len());
        let rows: Vec<_> = rdr.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| &r[0] == "1" && &r[1] == "B2" && r[2].is_empty()));
        let w0 = rows.iter().find(|r| &r[4] == "4").unwrap();
        assert_eq!(&w0[14], "1;2;2;2;1");
        assert_eq!(&w0[11], "unknown");
    }

    #[test]
    fn worked_example_record() {
        let a5 = rs("A5");
        let w = WeylElt::from_word(&a5, &"2,4,5,3,4,2,1".parse().unwrap()).unwrap();
        let rec = ClassificationRecord::new(&w);
        assert_eq!(rec.one_line.as_deref(), Some("513624"));
        assert!(rec.spherical_levis.contains(&SimpleSubset::from_indices([2, 4])));
        assert!(rec.inconsistencies().is_empty());
    }
}

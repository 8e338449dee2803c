//! Single-element reports.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::decomp::{is_bp_decomposition, parabolic_decompose};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};
use crate::schubert::has_lmp_shape;
use crate::spherical::{
    bsdh_descent_set, bsdh_finitely_many_orbits, bsdh_spherical_test, gbsdh_dimension,
    gbsdh_spherical, gbsdh_wonderful, r1_r2_partition, spherical_levi_test, spherical_relaxed_test,
    BsdhVerdict, RootPartition, SphericalVerdict,
};
use crate::subset::SimpleSubset;
use crate::weyl::{parse_one_line, WeylElt};
use crate::word::Word;

use super::record::ClassificationRecord;
use super::SCHEMA_VERSION;

/// How the element was given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementSpec {
    Word(Word),
    OneLine(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct LeviRow {
    #[serde(rename = "J")]
    pub parabolic: SimpleSubset,
    pub partition: RootPartition,
    pub spherical: SphericalVerdict,
    pub relaxed: SphericalVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct BpRow {
    #[serde(rename = "K")]
    pub outer: SimpleSubset,
    pub v: String,
    pub u: String,
    pub l_v: usize,
    pub l_u: usize,
    pub bp: bool,
}

/// Word-level data, available even when the word is not reduced.
#[derive(Clone, Debug, Serialize)]
pub struct WordReport {
    pub word: Word,
    pub reduced: bool,
    pub descent_set: SimpleSubset,
    pub gbsdh_dimension: usize,
    pub gbsdh_wonderful: bool,
    pub gbsdh_spherical: Option<bool>,
    pub finitely_many_orbits: Option<bool>,
    pub bsdh: Option<BsdhVerdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InspectReport {
    pub schema: u32,
    #[serde(rename = "type")]
    pub group: String,
    pub warnings: Vec<String>,
    pub word: Option<WordReport>,
    /// Present when the input determines an element whose data is
    /// meaningful, i.e. it was not given by a non-reduced word.
    pub record: Option<ClassificationRecord>,
    pub levi_table: Vec<LeviRow>,
    pub bp_table: Vec<BpRow>,
    pub lmp_shape: Option<usize>,
}

fn word_report(rs: &Arc<RootSystem>, word: &Word, warnings: &mut Vec<String>) -> Result<WordReport> {
    let w = WeylElt::from_word(rs, word)?;
    let reduced = w.length() == word.len();
    if !reduced {
        warnings.push(Error::NotReduced(word.to_string()).to_string());
    }
    // the orbit recursion walks every deletion subword; skip it for long words
    let finitely_many_orbits = if word.len() <= 12 {
        bsdh_finitely_many_orbits(rs, word)?
    } else {
        None
    };
    Ok(WordReport {
        word: word.clone(),
        reduced,
        descent_set: bsdh_descent_set(rs, word)?,
        gbsdh_dimension: gbsdh_dimension(rs, word),
        gbsdh_wonderful: gbsdh_wonderful(rs, word)?,
        gbsdh_spherical: reduced.then(|| gbsdh_spherical(rs, word)).transpose()?,
        finitely_many_orbits,
        bsdh: reduced.then(|| bsdh_spherical_test(rs, word)).transpose()?,
    })
}

pub fn inspect(rs: &Arc<RootSystem>, spec: &ElementSpec) -> Result<InspectReport> {
    let mut warnings = Vec::new();
    let (w, word) = match spec {
        ElementSpec::Word(word) => {
            word.check_range(rs.rank())?;
            let report = word_report(rs, word, &mut warnings)?;
            (WeylElt::from_word(rs, word)?, Some(report))
        }
        ElementSpec::OneLine(s) => {
            if rs.kind() != CartanType::A {
                return Err(Error::TypeMismatch(rs.name()));
            }
            (WeylElt::from_one_line(rs, &parse_one_line(s)?)?, None)
        }
    };
    let mut report = InspectReport {
        schema: SCHEMA_VERSION,
        group: rs.name(),
        warnings,
        word,
        record: None,
        levi_table: Vec::new(),
        bp_table: Vec::new(),
        lmp_shape: None,
    };
    if report.word.as_ref().is_some_and(|r| !r.reduced) {
        return Ok(report);
    }

    for j in w.left_descents().subsets() {
        report.levi_table.push(LeviRow {
            parabolic: j,
            partition: r1_r2_partition(&w, j)?,
            spherical: spherical_levi_test(&w, j)?,
            relaxed: spherical_relaxed_test(&w, j)?,
        });
    }
    for k in SimpleSubset::full(rs.rank()).subsets().filter(|k| !k.is_empty()) {
        let d = parabolic_decompose(&w, SimpleSubset::empty(), k)?;
        report.bp_table.push(BpRow {
            outer: k,
            v: d.v.to_string(),
            u: d.u.to_string(),
            l_v: d.v.length(),
            l_u: d.u.length(),
            bp: is_bp_decomposition(&w, SimpleSubset::empty(), k)?,
        });
    }
    if rs.kind() == CartanType::A {
        report.lmp_shape = has_lmp_shape(&w)?;
    }
    report.record = Some(ClassificationRecord::new(&w));
    Ok(report)
}

impl InspectReport {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&serde_json::to_value(self)?)?;
        s.push('\n');
        Ok(s)
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: {}", self.group);
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if let Some(wr) = &self.word {
            let _ = writeln!(out, "word: {} (reduced: {})", wr.word, wr.reduced);
            let _ = writeln!(out, "  J(word) = {}", wr.descent_set);
            let _ = writeln!(out, "  dim G x_B X_word = {}", wr.gbsdh_dimension);
            let _ = writeln!(out, "  G-BSDH wonderful: {}", wr.gbsdh_wonderful);
            if let Some(s) = wr.gbsdh_spherical {
                let _ = writeln!(out, "  G-BSDH spherical: {s}");
            }
            let orbits = match wr.finitely_many_orbits {
                Some(b) => b.to_string(),
                None => "undetermined".into(),
            };
            let _ = writeln!(out, "  finitely many B-orbits: {orbits}");
            if let Some(b) = &wr.bsdh {
                let _ = writeln!(
                    out,
                    "  BSDH spherical (relaxed, J = {}): {}; Coxeter: {}; first-letter test: {}",
                    b.descent_set, b.verdict.holds, b.coxeter, b.first_letter
                );
            }
        }
        let Some(r) = &self.record else {
            let _ = writeln!(out, "word-level data only");
            return out;
        };
        if let Some(ol) = &r.one_line {
            let _ = writeln!(out, "one-line: {ol}");
        }
        let _ = writeln!(out, "reduced word: {}", r.canonical_reduced_word);
        let _ = writeln!(out, "length: {}", r.length);
        let _ = writeln!(out, "support: {}", r.support);
        let _ = writeln!(out, "J(w): {}", r.left_descents);
        let _ = writeln!(out, "toric: {}", r.is_toric);
        let _ = writeln!(out, "Coxeter: {}", r.is_coxeter);
        let _ = writeln!(out, "smooth: {}", r.smooth);
        let _ = writeln!(out, "rationally smooth: {}", r.rationally_smooth);
        let _ = writeln!(out, "inverse smooth: {}", r.inverse_smooth);
        let _ = writeln!(out, "Poincaré polynomial: {}", r.poincare_coeffs);
        let _ = writeln!(
            out,
            "interval: {} elements, {} coatoms, boolean: {}",
            r.interval_size, r.coatoms, r.boolean_interval
        );
        if let Some(j) = self.lmp_shape {
            let _ = writeln!(out, "LMP shape at j = {j}");
        }
        let _ = writeln!(out, "Levi subsets J of J(w):");
        for row in &self.levi_table {
            let (lw, l0, lc) = row.spherical.lengths;
            let c = row
                .spherical
                .coxeter_part
                .as_ref()
                .map(|c| c.reduced_word().to_string())
                .unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "  J = {}: spherical {} (relaxed {}), l(w) = {lw}, l(w0J) = {l0}, l(c) = {lc}, c = {c}, |R1| = {}, |R2| = {}",
                row.parabolic,
                row.spherical.holds,
                row.relaxed.holds,
                row.partition.r1.len(),
                row.partition.r2.len()
            );
        }
        let _ = writeln!(out, "parabolic decompositions w = v u (I = {{}}):");
        for row in &self.bp_table {
            let _ = writeln!(
                out,
                "  K = {}: v = {} (l = {}), u = {} (l = {}), BP: {}",
                row.outer, row.v, row.l_v, row.u, row.l_u, row.bp
            );
        }
        out
    }
}

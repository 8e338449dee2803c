//! Exhaustive verification suites over a whole Weyl group.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::{check_theorem_smooth_equiv, is_bp_decomposition};
use crate::error::{Error, Result};
use crate::oracle::WordOracle;
use crate::posets::bruhat_interval;
use crate::rootsys::{CartanType, RootSystem};
use crate::schubert::{has_lmp_shape, is_toric};
use crate::spherical::{gbsdh_spherical, gschubert_spherical, spherical_levi_test, spherical_relaxed_test};
use crate::subset::SimpleSubset;
use crate::weyl::WeylElt;

use super::cache::group_elements;
use super::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// `spherical_levi_test` against the word oracle, for every `J ⊆ J(w)`.
    ThmSpherical,
    /// Smoothness of `X_w`, `X_{w^{-1}}` and the toric quotient agree.
    ThmSmoothEquiv,
    /// G-Schubert spherical ⇔ toric ⇔ G-BSDH spherical for reduced words.
    PropFourEquiv,
    /// Toric elements have boolean intervals with `l(w)` coatoms.
    BoolLattice,
    /// `bruhat_leq` against subword intervals, on all pairs.
    BruhatOracle,
    /// `(w^{-1}, ∅, J)` is a BP decomposition whenever `w = w_{0,J} c`.
    BpProduct,
    /// Elements with the LMP shape become distinct products after one
    /// deletion and pass the relaxed spherical test for some `J`.
    LmpShape,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::ThmSpherical,
        Property::ThmSmoothEquiv,
        Property::PropFourEquiv,
        Property::BoolLattice,
        Property::BruhatOracle,
        Property::BpProduct,
        Property::LmpShape,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::ThmSpherical => "thm-spherical",
            Property::ThmSmoothEquiv => "thm-smooth-equiv",
            Property::PropFourEquiv => "prop-four-equiv",
            Property::BoolLattice => "bool-lattice",
            Property::BruhatOracle => "bruhat-oracle",
            Property::BpProduct => "bp-product",
            Property::LmpShape => "lmp-shape",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub property: Property,
    #[serde(rename = "type")]
    pub group: String,
    pub group_order: usize,
    /// Number of instances examined; what counts as an instance depends on
    /// the property (elements, `(w, J)` pairs, or ordered pairs).
    pub checked: usize,
    pub counterexamples: Vec<String>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&serde_json::to_value(self)?)?;
        s.push('\n');
        Ok(s)
    }
}

/// Per-element outcome: instances checked and failures found.
type Tally = (usize, Vec<String>);

fn tally<F>(group: &[WeylElt], per_elt: F) -> Result<Tally>
where
    F: Fn(&WeylElt) -> Result<Tally> + Sync + Send,
{
    let parts: Vec<Tally> = group.par_iter().map(per_elt).collect::<Result<_>>()?;
    Ok(parts.into_iter().fold((0, Vec::new()), |(n, mut bad), (k, b)| {
        bad.extend(b);
        (n + k, bad)
    }))
}

fn label(w: &WeylElt) -> String {
    match w.one_line() {
        Ok(_) => format!("{w} ({})", w.reduced_word()),
        Err(_) => w.reduced_word().to_string(),
    }
}

fn thm_spherical(rs: &Arc<RootSystem>, group: &[WeylElt]) -> Result<Tally> {
    let oracle = WordOracle::new(rs);
    tally(group, |w| {
        let mut bad = Vec::new();
        let descents = oracle.left_descents(w);
        if descents != w.left_descents() {
            bad.push(format!("{}: left descents {} vs oracle {descents}", label(w), w.left_descents()));
        }
        let mut n = 0;
        for j in descents.subsets() {
            n += 1;
            let fast = spherical_levi_test(w, j)?.holds;
            let slow = oracle.spherical_levi(w, j);
            if fast != slow {
                bad.push(format!("{} J={j}: test {fast}, oracle {slow}", label(w)));
            }
        }
        Ok((n, bad))
    })
}

fn admissible_pairs(w: &WeylElt) -> Result<Vec<SimpleSubset>> {
    let mut out = Vec::new();
    for j in w.left_descents().subsets() {
        let v = spherical_levi_test(w, j)?;
        if v.holds && v.dim_condition {
            out.push(j);
        }
    }
    Ok(out)
}

fn thm_smooth_equiv(group: &[WeylElt]) -> Result<Tally> {
    tally(group, |w| {
        let mut bad = Vec::new();
        let pairs = admissible_pairs(w)?;
        for &j in &pairs {
            let r = check_theorem_smooth_equiv(w, j)?;
            if !r.consistent {
                bad.push(format!(
                    "{} J={j}: smooth(w)={}, smooth(w^-1)={}, quotient={}",
                    label(w),
                    r.smooth_w,
                    r.smooth_winv,
                    r.quotient_ok
                ));
            }
        }
        Ok((pairs.len(), bad))
    })
}

fn prop_four_equiv(rs: &Arc<RootSystem>, group: &[WeylElt]) -> Result<Tally> {
    let oracle = WordOracle::new(rs);
    tally(group, |w| {
        let toric = is_toric(w);
        let mut bad = Vec::new();
        if gschubert_spherical(w) != toric {
            bad.push(format!("{}: G-Schubert spherical disagrees with toric", label(w)));
        }
        if oracle.is_distinct_product(w) != toric {
            bad.push(format!("{}: toric disagrees with the word oracle", label(w)));
        }
        // every reduced word when the element is short enough to be toric;
        // otherwise two independent reduced words
        let words = if w.length() <= rs.rank() {
            w.reduced_words()?
        } else {
            vec![w.reduced_word(), oracle.geodesic(w)]
        };
        for word in &words {
            if gbsdh_spherical(rs, word)? != toric {
                bad.push(format!("{}: G-BSDH verdict for {word} disagrees", label(w)));
            }
        }
        Ok((1, bad))
    })
}

fn bool_lattice(group: &[WeylElt]) -> Result<Tally> {
    tally(group, |w| {
        if !is_toric(w) {
            return Ok((0, Vec::new()));
        }
        let p = bruhat_interval(w);
        let mut bad = Vec::new();
        if !p.is_boolean() {
            bad.push(format!("{}: interval is not boolean", label(w)));
        }
        if p.coatom_count() != w.length() {
            bad.push(format!("{}: {} coatoms, length {}", label(w), p.coatom_count(), w.length()));
        }
        Ok((1, bad))
    })
}

fn bruhat_oracle(rs: &Arc<RootSystem>, group: &[WeylElt]) -> Result<Tally> {
    let oracle = WordOracle::new(rs);
    tally(group, |w| {
        let below: HashSet<WeylElt> = oracle.subword_interval(w);
        let bad = group
            .iter()
            .filter(|v| v.bruhat_leq(w) != below.contains(*v))
            .map(|v| format!("{} <= {}: oracle {}", label(v), label(w), below.contains(v)))
            .collect();
        Ok((group.len(), bad))
    })
}

fn bp_product(group: &[WeylElt]) -> Result<Tally> {
    tally(group, |w| {
        let pairs = admissible_pairs(w)?;
        let winv = w.inverse();
        let mut bad = Vec::new();
        for &j in pairs.iter().filter(|j| !j.is_empty()) {
            if !is_bp_decomposition(&winv, SimpleSubset::empty(), j)? {
                bad.push(format!("{} J={j}: not a BP decomposition", label(&winv)));
            }
        }
        // J = ∅ leaves K empty, which is not a parabolic decomposition
        Ok((pairs.iter().filter(|j| !j.is_empty()).count(), bad))
    })
}

fn lmp_shape(group: &[WeylElt]) -> Result<Tally> {
    tally(group, |w| {
        let Some(j) = has_lmp_shape(w)? else {
            return Ok((0, Vec::new()));
        };
        let mut bad = Vec::new();
        if !w.mul_simple_left(j + 1).is_distinct_product() {
            bad.push(format!("{} j={j}: s_(j+1) w is not a distinct product", label(w)));
        }
        let mut relaxed = false;
        for jj in w.left_descents().subsets() {
            relaxed |= spherical_relaxed_test(w, jj)?.holds;
        }
        if !relaxed {
            bad.push(format!("{}: no J passes the relaxed test", label(w)));
        }
        Ok((1, bad))
    })
}

pub fn verify(property: Property, rs: &Arc<RootSystem>, cap: usize) -> Result<VerifyReport> {
    if property == Property::LmpShape && rs.kind() != CartanType::A {
        return Err(Error::TypeMismatch(rs.name()));
    }
    if property == Property::ThmSmoothEquiv && !rs.is_simply_laced() {
        return Err(Error::Undecidable(rs.name()));
    }
    let group = group_elements(rs, cap)?;
    let (checked, counterexamples) = match property {
        Property::ThmSpherical => thm_spherical(rs, &group)?,
        Property::ThmSmoothEquiv => thm_smooth_equiv(&group)?,
        Property::PropFourEquiv => prop_four_equiv(rs, &group)?,
        Property::BoolLattice => bool_lattice(&group)?,
        Property::BruhatOracle => bruhat_oracle(rs, &group)?,
        Property::BpProduct => bp_product(&group)?,
        Property::LmpShape => lmp_shape(&group)?,
    };
    Ok(VerifyReport {
        schema: SCHEMA_VERSION,
        property,
        group: rs.name(),
        group_order: group.len(),
        checked,
        pass: counterexamples.is_empty(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::DEFAULT_CAP;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_spec(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn property_ids_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.id().parse::<Property>().unwrap(), p);
            assert_eq!(serde_json::to_value(p).unwrap(), p.id());
        }
        assert!(matches!("thm-nope".parse::<Property>(), Err(Error::UnknownProperty(_))));
    }

    #[test]
    fn a3_suites_pass() {
        let a3 = rs("A3");
        for p in Property::ALL {
            let r = verify(p, &a3, DEFAULT_CAP).unwrap();
            assert!(r.pass, "{p}: {:?}", r.counterexamples);
            assert_eq!(r.group_order, 24);
        }
        assert_eq!(verify(Property::BruhatOracle, &a3, DEFAULT_CAP).unwrap().checked, 576);
        // distinct products by length: e, 3 generators, 5 of length two
        // (s1s3 = s3s1), 4 Coxeter elements
        assert_eq!(verify(Property::BoolLattice, &a3, DEFAULT_CAP).unwrap().checked, 13);
    }

    #[test]
    fn type_restrictions() {
        assert!(matches!(
            verify(Property::LmpShape, &rs("B2"), DEFAULT_CAP),
            Err(Error::TypeMismatch(_))
        ));
        assert!(matches!(
            verify(Property::ThmSmoothEquiv, &rs("G2"), DEFAULT_CAP),
            Err(Error::Undecidable(_))
        ));
        assert!(matches!(
            verify(Property::BoolLattice, &rs("A5"), 100),
            Err(Error::GroupTooLarge { order: 720, cap: 100 })
        ));
    }
}

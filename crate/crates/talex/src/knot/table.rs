//! The knot table: JSON records with a diagram or presentation source plus
//! published invariants for cross-checks.

use super::pd::PdCode;
use super::presentation::Presentation;
use super::pretzel::pretzel_presentation;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// Published reference data carried with a record.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Published {
    /// Alexander polynomial, ascending integer coefficients
    #[serde(default)]
    pub alexander: Vec<i64>,
    /// branched-cover homology orders, keyed by the cover degree `p`,
    /// written like "25^2" for (Z_25)^2 or "2^2 14^2"
    #[serde(default)]
    pub h1: BTreeMap<String, String>,
}

/// One knot record.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    #[serde(default)]
    pub pd: Option<Vec<[u32; 4]>>,
    #[serde(default)]
    pub pretzel: Option<Vec<i64>>,
    #[serde(default)]
    pub presentation: Option<PresentationJson>,
    #[serde(default)]
    pub published: Published,
    /// Table-suggested cover degree, when one is published
    #[serde(default)]
    pub p: Option<u64>,
    /// Table-suggested coefficient prime, when one is published
    #[serde(default)]
    pub q: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationJson {
    pub n: usize,
    pub relators: Vec<Vec<i32>>,
}

impl KnotRecord {
    /// Resolve the record to a presentation. An explicit presentation wins,
    /// then a PD code, then pretzel parameters.
    pub fn presentation(&self) -> Result<Presentation> {
        if let Some(p) = &self.presentation {
            return Presentation::new(p.n, p.relators.clone());
        }
        if let Some(pd) = &self.pd {
            return PdCode::new(pd.clone())?.wirtinger();
        }
        if let Some(params) = &self.pretzel {
            return pretzel_presentation(params);
        }
        Err(Error::KnotTable(format!(
            "record '{}' has no pd, pretzel, or presentation source",
            self.name
        )))
    }

    /// Parse the published h1 shorthand for cover degree `p` into elementary
    /// factors with exponents, e.g. "2^2 14^2" -> [(2,2), (14,2)].
    pub fn published_h1(&self, p: u64) -> Option<Vec<(u64, u32)>> {
        let s = self.published.h1.get(&p.to_string())?;
        let mut out = vec![];
        for tok in s.split_whitespace() {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.parse().ok()?, e.parse().ok()?),
                None => (tok.parse().ok()?, 1),
            };
            out.push((base, exp));
        }
        Some(out)
    }
}

/// Load records from a JSON file; duplicate names are rejected.
pub fn load_knot_table(path: &Path) -> Result<Vec<KnotRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_knot_table(&text)
}

pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>> {
    if text.trim().is_empty() {
        return Ok(vec![]);
    }
    let records: Vec<KnotRecord> = serde_json::from_str(text)?;
    let mut seen = std::collections::HashSet::new();
    for r in &records {
        if r.pd.is_none() && r.pretzel.is_none() && r.presentation.is_none() {
            return Err(Error::KnotTable(format!(
                "record '{}' missing all of pd/pretzel/presentation",
                r.name
            )));
        }
        if !seen.insert(r.name.clone()) {
            return Err(Error::KnotTable(format!("duplicate name '{}'", r.name)));
        }
    }
    Ok(records)
}

/// The bundled table: the unknot, two small standards, and the 18 knots of
/// the twelve-crossing survey with their published invariants.
pub fn bundled_table() -> Vec<KnotRecord> {
    parse_knot_table(include_str!("../../data/knots.json")).expect("bundled table is valid")
}

/// Look up a record in the bundled table by name.
pub fn bundled_knot(name: &str) -> Result<KnotRecord> {
    bundled_table()
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::KnotTable(format!("unknown knot '{name}'")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_loads() {
        let t = bundled_table();
        assert_eq!(t.len(), 21);
        let names: Vec<_> = t.iter().map(|r| r.name.as_str()).collect();
        for want in ["unknot", "trefoil", "12a169", "12n813", "12a631"] {
            assert!(names.contains(&want), "missing {want}");
        }
    }

    #[test]
    fn all_bundled_records_resolve() {
        for r in bundled_table() {
            let pres = r.presentation().unwrap_or_else(|e| {
                panic!("record {} failed to resolve: {e}", r.name)
            });
            assert!(pres.generators() >= 1);
        }
    }

    #[test]
    fn h1_shorthand() {
        let r = bundled_knot("12n224").unwrap();
        assert_eq!(r.published_h1(3), Some(vec![(2, 2), (14, 2)]));
        assert_eq!(r.published_h1(5), None);
    }

    #[test]
    fn empty_and_invalid_tables() {
        assert!(parse_knot_table("").unwrap().is_empty());
        let broken = r#"[{"name":"x","published":{"alexander":[1],"h1":{}}}]"#;
        assert!(parse_knot_table(broken).is_err());
        let dup = r#"[
            {"name":"x","presentation":{"n":1,"relators":[]},"published":{"alexander":[1],"h1":{}}},
            {"name":"x","presentation":{"n":1,"relators":[]},"published":{"alexander":[1],"h1":{}}}
        ]"#;
        assert!(parse_knot_table(dup).is_err());
    }

    #[test]
    fn fixture_presentation_is_deficiency_one() {
        let r = bundled_knot("12a169").unwrap();
        let pres = r.presentation().unwrap();
        assert_eq!(pres.generators(), 12);
        assert_eq!(pres.relators().len(), 11);
        // and the PD route also resolves (independently of the fixture)
        let pd = PdCode::new(r.pd.unwrap()).unwrap();
        let from_pd = pd.wirtinger().unwrap();
        assert_eq!(from_pd.generators(), 12);
    }
}

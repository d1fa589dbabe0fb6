//! Registry of weight-enumerator parameters with previously known codes,
//! loaded from the checked-in `data/known_beta.json`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Deserialize;

use crate::analysis::Family;

const DATA: &str = include_str!("../data/known_beta.json");

#[derive(Debug, Deserialize)]
struct RawRegistry {
    families: BTreeMap<String, RawFamily>,
}

#[derive(Debug, Deserialize)]
struct RawFamily {
    entries: Vec<RawEntry>,
}

#[derive(Debug, Deserialize)]
struct RawEntry {
    betas: Vec<u32>,
    source: String,
    #[serde(default)]
    parameterless_known: bool,
}

#[derive(Debug, Clone, Default)]
pub struct FamilyRecord {
    pub known: BTreeSet<u32>,
    pub parameterless_known: bool,
    pub sources: Vec<String>,
}

pub fn registry() -> &'static BTreeMap<Family, FamilyRecord> {
    static REG: OnceLock<BTreeMap<Family, FamilyRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let raw: RawRegistry = serde_json::from_str(DATA).expect("known_beta.json is valid");
        raw.families
            .into_iter()
            .map(|(name, fam)| {
                let family = Family::parse(&name).expect("known family name");
                let mut rec = FamilyRecord::default();
                for e in fam.entries {
                    rec.known.extend(e.betas);
                    rec.parameterless_known |= e.parameterless_known;
                    rec.sources.push(e.source);
                }
                (family, rec)
            })
            .collect()
    })
}

pub fn is_known(family: Family, beta: Option<u32>) -> bool {
    registry().get(&family).is_some_and(|rec| match beta {
        Some(b) => rec.known.contains(&b),
        None => rec.parameterless_known,
    })
}

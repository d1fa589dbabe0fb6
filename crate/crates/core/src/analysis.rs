//! Weight distributions, Type I/II classification, extremal weight-enumerator
//! families for lengths 64 and 66, and the weight-12 pair invariant.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::{self, EnumOptions, Walk};
use crate::error::{Error, Result};
use crate::gf2::BinaryCode;
use crate::registry;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    /// From a dense histogram indexed by weight `0..=n`.
    pub fn from_histogram(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    /// From `(weight, count)` pairs for a code of length `n`.
    pub fn from_sparse(n: usize, pairs: &[(usize, u64)]) -> Self {
        let mut counts = vec![0; n + 1];
        for &(w, c) in pairs {
            counts[w] += c;
        }
        Self { counts }
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Pads with zero counts up to length `n`.
    pub fn with_length(mut self, n: usize) -> Self {
        if self.counts.len() < n + 1 {
            self.counts.resize(n + 1, 0);
        }
        self
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest positive weight present.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn sparse(&self) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..=n).all(|w| self.counts[w] == self.counts[n - w])
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .sparse()
            .into_iter()
            .map(|(w, c)| match w {
                0 => c.to_string(),
                _ => format!("{c}z^{w}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Serialize for WeightDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, u64> = self
            .sparse()
            .into_iter()
            .map(|(w, c)| (w.to_string(), c))
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightDistribution {
    /// Reads the sparse map; the length is the largest weight present, which
    /// callers that know `n` widen with [`WeightDistribution::with_length`].
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, u64>::deserialize(d)?;
        let mut pairs = Vec::with_capacity(map.len());
        for (w, c) in map {
            let w: usize = w.parse().map_err(serde::de::Error::custom)?;
            pairs.push((w, c));
        }
        let n = pairs.iter().map(|&(w, _)| w).max().unwrap_or(0);
        Ok(Self::from_sparse(n, &pairs))
    }
}

/// Exact weight distribution by Gray-walk enumeration of all codewords.
pub fn weight_distribution(code: &BinaryCode) -> Result<WeightDistribution> {
    weight_distribution_with(code, &EnumOptions::default())
}

pub fn weight_distribution_with(
    code: &BinaryCode,
    opts: &EnumOptions,
) -> Result<WeightDistribution> {
    let opts = EnumOptions {
        abort_below: None,
        ..opts.clone()
    };
    match enumerate::enumerate(code, &opts)? {
        Walk::Complete(e) => Ok(WeightDistribution::from_histogram(e.histogram)),
        Walk::Aborted { .. } => unreachable!("abort disabled"),
    }
}

/// Reference distribution, one independent encoding per message.
pub fn naive_distribution_oracle(code: &BinaryCode) -> Result<WeightDistribution> {
    enumerate::naive_histogram(code).map(WeightDistribution::from_histogram)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeType {
    I,
    II,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::I => "I",
            CodeType::II => "II",
        })
    }
}

/// Type II iff every weight is divisible by 4.
pub fn classify_type(dist: &WeightDistribution) -> Result<CodeType> {
    let present = dist.sparse();
    if let Some((&w, _)) = present.iter().find(|(&w, _)| w % 2 == 1) {
        return Err(Error::OddWeight(w));
    }
    Ok(if present.keys().all(|w| w % 4 == 0) {
        CodeType::II
    } else {
        CodeType::I
    })
}

/// Weight-enumerator families of extremal Type I codes of lengths 64 and 66.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    W64_1,
    W64_2,
    W66_1,
    W66_2,
    W66_3,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::W64_1,
        Family::W64_2,
        Family::W66_1,
        Family::W66_2,
        Family::W66_3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::W64_1 => "W64_1",
            Family::W64_2 => "W64_2",
            Family::W66_1 => "W66_1",
            Family::W66_2 => "W66_2",
            Family::W66_3 => "W66_3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let norm: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|f| f.name().replace('_', "") == norm)
    }

    /// `(A12, A14)` of the family at parameter `beta` (ignored for `W66_2`).
    pub fn coefficients(self, beta: u32) -> (i64, i64) {
        let b = beta as i64;
        match self {
            Family::W64_1 => (1312 + 16 * b, 22016 - 64 * b),
            Family::W64_2 => (1312 + 16 * b, 23040 - 64 * b),
            Family::W66_1 => (858 + 8 * b, 18678 - 24 * b),
            Family::W66_2 => (1690, 7990),
            Family::W66_3 => (858 + 8 * b, 18166 - 24 * b),
        }
    }

    /// Admissible range of the parameter.
    pub fn beta_range(self) -> Option<(u32, u32)> {
        match self {
            Family::W64_1 => Some((14, 284)),
            Family::W64_2 => Some((0, 277)),
            Family::W66_1 => Some((0, 778)),
            Family::W66_2 => None,
            Family::W66_3 => Some((14, 756)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub family: Family,
    pub beta: Option<u32>,
    /// Parameter outside the family's admissible range.
    pub warnings: Vec<String>,
}

fn range_warnings(family: Family, beta: u32) -> Vec<String> {
    match family.beta_range() {
        Some((lo, hi)) if beta < lo || beta > hi => {
            vec![format!("beta {beta} outside {lo}..={hi} for {family}")]
        }
        _ => Vec::new(),
    }
}

/// `beta = (A12 - offset) / step` when that is a nonnegative integer.
fn solve_beta(a12: u64, offset: u64, step: u64) -> Result<u32> {
    if a12 < offset || (a12 - offset) % step != 0 {
        return Err(Error::NoFamily(format!(
            "A12 = {a12} is not {offset} + {step}*beta for integral beta >= 0"
        )));
    }
    Ok(((a12 - offset) / step) as u32)
}

/// Family and parameter of an extremal Type I `[64, 32, 12]` distribution.
pub fn classify_w64(dist: &WeightDistribution) -> Result<Classification> {
    let (a12, a14) = (dist.count(12), dist.count(14) as i64);
    let beta = solve_beta(a12, 1312, 16)?;
    for family in [Family::W64_1, Family::W64_2] {
        if family.coefficients(beta).1 == a14 {
            return Ok(Classification {
                family,
                beta: Some(beta),
                warnings: range_warnings(family, beta),
            });
        }
    }
    Err(Error::NoFamily(format!(
        "A14 = {a14} matches neither 22016-64*{beta} nor 23040-64*{beta}"
    )))
}

/// Family and parameter of an extremal `[66, 33, 12]` distribution.
pub fn classify_w66(dist: &WeightDistribution) -> Result<Classification> {
    let (a12, a14) = (dist.count(12), dist.count(14) as i64);
    if a12 == 1690 && a14 == 7990 {
        return Ok(Classification {
            family: Family::W66_2,
            beta: None,
            warnings: Vec::new(),
        });
    }
    let beta = solve_beta(a12, 858, 8)?;
    for family in [Family::W66_1, Family::W66_3] {
        if family.coefficients(beta).1 == a14 {
            return Ok(Classification {
                family,
                beta: Some(beta),
                warnings: range_warnings(family, beta),
            });
        }
    }
    Err(Error::NoFamily(format!(
        "A14 = {a14} matches neither 18678-24*{beta} nor 18166-24*{beta}"
    )))
}

/// Unordered pairs of the given words at Hamming distance exactly `distance`.
pub fn count_pairs_at_distance(words: &[u128], distance: u32) -> u64 {
    words
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            words[i + 1..]
                .iter()
                .filter(|&&b| (a ^ b).count_ones() == distance)
                .count() as u64
        })
        .sum()
}

/// Number of unordered pairs of weight-12 codewords at distance 12.
///
/// `cap` bounds the number of weight-12 words held in memory.
pub fn pair_invariant_a12(code: &BinaryCode, threads: usize, cap: usize) -> Result<u64> {
    let opts = EnumOptions {
        threads,
        collect_weight: Some(12),
        collect_cap: cap,
        ..Default::default()
    };
    let Walk::Complete(e) = enumerate::enumerate(code, &opts)? else {
        unreachable!("abort disabled")
    };
    let d = WeightDistribution::from_histogram(e.histogram).min_distance();
    if d != Some(12) {
        return Err(Error::NoFamily(format!(
            "pair invariant needs minimum distance 12, found {d:?}"
        )));
    }
    let words = e.collected.ok_or(Error::WordCap(cap))?;
    Ok(count_pairs_at_distance(&words, 12))
}

/// Full analysis of a binary code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawReport")]
pub struct EnumeratorReport {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub self_dual: bool,
    #[serde(rename = "type")]
    pub code_type: Option<CodeType>,
    pub family: Option<Family>,
    pub beta: Option<u32>,
    pub a12_pair: Option<u64>,
    pub novelty: bool,
    pub distribution: WeightDistribution,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Deserialize)]
struct RawReport {
    n: usize,
    k: usize,
    d: Option<usize>,
    self_dual: bool,
    #[serde(rename = "type")]
    code_type: Option<CodeType>,
    family: Option<Family>,
    beta: Option<u32>,
    a12_pair: Option<u64>,
    novelty: bool,
    distribution: WeightDistribution,
    #[serde(default)]
    warnings: Vec<String>,
}

impl TryFrom<RawReport> for EnumeratorReport {
    type Error = String;

    fn try_from(r: RawReport) -> std::result::Result<Self, String> {
        if r.distribution.n() > r.n {
            return Err(format!("distribution has weight {} > n = {}", r.distribution.n(), r.n));
        }
        Ok(Self {
            n: r.n,
            k: r.k,
            d: r.d,
            self_dual: r.self_dual,
            code_type: r.code_type,
            family: r.family,
            beta: r.beta,
            a12_pair: r.a12_pair,
            novelty: r.novelty,
            distribution: r.distribution.with_length(r.n),
            warnings: r.warnings,
        })
    }
}

impl EnumeratorReport {
    /// One-line summary such as `[64,32,12] Type I, beta=20 in W64_1`.
    pub fn summary(&self) -> String {
        let d = self.d.map_or("-".to_string(), |d| d.to_string());
        let mut s = format!("[{},{},{}]", self.n, self.k, d);
        match self.code_type {
            Some(t) => s.push_str(&format!(" self-dual Type {t}")),
            None if self.self_dual => {}
            None => s.push_str(" not self-dual"),
        }
        if let Some(f) = self.family {
            match self.beta {
                Some(b) => s.push_str(&format!(", beta={b} in {f}")),
                None => s.push_str(&format!(", {f}")),
            }
            if self.novelty {
                s.push_str(" (new)");
            }
        }
        if let Some(a) = self.a12_pair {
            s.push_str(&format!(", A12 pairs={a}"));
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub enumeration: EnumOptions,
    /// Compute the weight-12 pair invariant when `d = 12`.
    pub pair_invariant: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            enumeration: EnumOptions::default(),
            pair_invariant: true,
        }
    }
}

impl AnalysisOptions {
    pub fn with_threads(threads: usize) -> Self {
        let mut o = Self::default();
        o.enumeration.threads = threads;
        o
    }
}

/// Enumerates the code and assembles its report. Returns `Ok(None)` when
/// `opts.enumeration.abort_below` triggered.
pub fn try_analyze(code: &BinaryCode, opts: &AnalysisOptions) -> Result<Option<EnumeratorReport>> {
    let mut enum_opts = opts.enumeration.clone();
    if opts.pair_invariant && code.n() >= 24 {
        enum_opts.collect_weight = Some(12);
    }
    let e = match enumerate::enumerate(code, &enum_opts)? {
        Walk::Complete(e) => e,
        Walk::Aborted { .. } => return Ok(None),
    };
    let dist = WeightDistribution::from_histogram(e.histogram);
    let d = dist.min_distance();
    let self_dual = code.is_self_dual();
    let code_type = if self_dual {
        classify_type(&dist).ok()
    } else {
        None
    };
    let mut warnings = Vec::new();
    let classification = match (code.n(), code.k(), d, code_type) {
        (64, 32, Some(12), Some(CodeType::I)) => Some(classify_w64(&dist)),
        (66, 33, Some(12), Some(_)) => Some(classify_w66(&dist)),
        _ => None,
    };
    let (family, beta) = match classification {
        Some(Ok(c)) => {
            warnings.extend(c.warnings);
            (Some(c.family), c.beta)
        }
        Some(Err(e)) => {
            warnings.push(e.to_string());
            (None, None)
        }
        None => (None, None),
    };
    let a12_pair = match (d, e.collected) {
        (Some(12), Some(words)) => Some(count_pairs_at_distance(&words, 12)),
        (Some(12), None) if opts.pair_invariant => {
            warnings.push(Error::WordCap(enum_opts.collect_cap).to_string());
            None
        }
        _ => None,
    };
    let novelty = family.is_some_and(|f| novelty_check(f, beta));
    Ok(Some(EnumeratorReport {
        n: code.n(),
        k: code.k(),
        d,
        self_dual,
        code_type,
        family,
        beta,
        a12_pair,
        novelty,
        distribution: dist,
        warnings,
    }))
}

pub fn analyze(code: &BinaryCode, opts: &AnalysisOptions) -> Result<EnumeratorReport> {
    let mut opts = opts.clone();
    opts.enumeration.abort_below = None;
    Ok(try_analyze(code, &opts)?.expect("abort disabled"))
}

/// True iff `(family, beta)` is absent from the registry of known parameters.
pub fn novelty_check(family: Family, beta: Option<u32>) -> bool {
    !registry::is_known(family, beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BinaryMatrix;
    use crate::tables;

    fn code(rows: &[&str]) -> BinaryCode {
        BinaryCode::new(BinaryMatrix::from_rows_str(rows).unwrap()).unwrap()
    }

    fn std_code(a: &BinaryMatrix) -> BinaryCode {
        let g = BinaryMatrix::identity(a.nrows()).unwrap().hstack(a).unwrap();
        BinaryCode::new(g).unwrap()
    }

    #[test]
    fn distribution_examples() {
        let rep = code(&["11"]);
        assert_eq!(
            weight_distribution(&rep).unwrap().sparse(),
            BTreeMap::from([(0, 1), (2, 1)])
        );
        let g1 = std_code(&tables::a1());
        let d = weight_distribution(&g1).unwrap();
        assert_eq!(
            d.sparse(),
            BTreeMap::from([(0, 1), (4, 28), (8, 198), (12, 28), (16, 1)])
        );
        assert_eq!(d, naive_distribution_oracle(&g1).unwrap());
        // Hamming [8,4,4]: 16 codewords of the printed standard form, counted by hand.
        let ham = std_code(&tables::hamming_a());
        let d = weight_distribution(&ham).unwrap();
        assert_eq!(d.sparse(), BTreeMap::from([(0, 1), (4, 14), (8, 1)]));
        assert_eq!(d, naive_distribution_oracle(&ham).unwrap());
    }

    #[test]
    fn type_classification() {
        let g1 = WeightDistribution::from_sparse(
            16,
            &[(0, 1), (4, 28), (8, 198), (12, 28), (16, 1)],
        );
        assert_eq!(classify_type(&g1).unwrap(), CodeType::II);
        let g2 = WeightDistribution::from_sparse(
            16,
            &[(0, 1), (4, 12), (6, 64), (8, 102), (10, 64), (12, 12), (16, 1)],
        );
        assert_eq!(classify_type(&g2).unwrap(), CodeType::I);
        let rep = WeightDistribution::from_sparse(2, &[(0, 1), (2, 1)]);
        assert_eq!(classify_type(&rep).unwrap(), CodeType::I);
        let odd = WeightDistribution::from_sparse(3, &[(0, 1), (3, 1)]);
        assert!(matches!(classify_type(&odd), Err(Error::OddWeight(3))));
    }

    fn dist_with(n: usize, a12: u64, a14: u64) -> WeightDistribution {
        WeightDistribution::from_sparse(n, &[(0, 1), (12, a12), (14, a14)])
    }

    #[test]
    fn w64_examples() {
        let c = classify_w64(&dist_with(64, 1312, 23040)).unwrap();
        assert_eq!((c.family, c.beta), (Family::W64_2, Some(0)));
        // beta = 20: A12 = 1312 + 320, A14 = 22016 - 1280.
        let c = classify_w64(&dist_with(64, 1632, 20736)).unwrap();
        assert_eq!((c.family, c.beta), (Family::W64_1, Some(20)));
        assert!(c.warnings.is_empty());
        let c = classify_w64(&dist_with(64, 1312, 22016)).unwrap();
        assert_eq!((c.family, c.beta), (Family::W64_1, Some(0)));
        assert_eq!(c.warnings.len(), 1);
        assert!(classify_w64(&dist_with(64, 1313, 22016)).is_err());
        assert!(classify_w64(&dist_with(64, 1632, 20000)).is_err());
    }

    #[test]
    fn w66_examples() {
        let c = classify_w66(&dist_with(66, 1690, 7990)).unwrap();
        assert_eq!((c.family, c.beta), (Family::W66_2, None));
        let c = classify_w66(&dist_with(66, 858, 18678)).unwrap();
        assert_eq!((c.family, c.beta), (Family::W66_1, Some(0)));
        // beta = 24 in W66_3: A12 = 858 + 192, A14 = 18166 - 576.
        let c = classify_w66(&dist_with(66, 1050, 17590)).unwrap();
        assert_eq!((c.family, c.beta), (Family::W66_3, Some(24)));
        assert!(classify_w66(&dist_with(66, 859, 18678)).is_err());
    }

    #[test]
    fn classification_reconstructs_counts() {
        for family in [Family::W64_1, Family::W64_2, Family::W66_1, Family::W66_3] {
            for beta in [0u32, 3, 14, 20, 57, 200] {
                let (a12, a14) = family.coefficients(beta);
                if a14 < 0 {
                    continue;
                }
                let n = if matches!(family, Family::W64_1 | Family::W64_2) { 64 } else { 66 };
                let d = dist_with(n, a12 as u64, a14 as u64);
                let c = if n == 64 { classify_w64(&d) } else { classify_w66(&d) }.unwrap();
                assert_eq!(c.family.coefficients(c.beta.unwrap()), (a12, a14));
            }
        }
    }

    #[test]
    fn pair_counting() {
        assert_eq!(count_pairs_at_distance(&[0b1111], 12), 0);
        assert_eq!(count_pairs_at_distance(&[0b0011, 0b1100, 0b0110], 4), 1);
        assert_eq!(count_pairs_at_distance(&[], 12), 0);
    }

    #[test]
    fn novelty() {
        assert!(novelty_check(Family::W64_1, Some(20)));
        assert!(!novelty_check(Family::W64_1, Some(14)));
        assert!(!novelty_check(Family::W64_2, Some(0)));
        assert!(!novelty_check(Family::W66_2, None));
    }

    #[test]
    fn report_of_non_self_dual_code() {
        let c = code(&["1110", "0111"]);
        let r = analyze(&c, &AnalysisOptions::default()).unwrap();
        assert!(!r.self_dual);
        assert_eq!(r.family, None);
        assert_eq!(r.code_type, None);
        assert_eq!(r.d, Some(2));
    }

    #[test]
    fn report_json_fields() {
        let g1 = std_code(&tables::a1());
        let r = analyze(&g1, &AnalysisOptions::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in ["n", "k", "d", "type", "family", "beta", "a12_pair", "novelty", "distribution"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["type"], "II");
        assert_eq!(v["distribution"]["8"], 198);
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(Family::parse(f.name()), Some(f));
        }
        assert_eq!(Family::parse("w64,1"), Some(Family::W64_1));
        assert_eq!(Family::parse("W65_1"), None);
    }
}

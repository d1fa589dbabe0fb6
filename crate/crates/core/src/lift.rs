//! Lifting binary self-dual codes `[I | A]` to R2.
//!
//! A lift is given by its upper triangle (diagonal included); the remaining
//! entries follow from the orthogonality relations `K K^T = I`. Row `r` of
//! the lower triangle has `r` unknown entries whose constant parts are fixed
//! by `A`, leaving `3r` unknown bits against the `u`, `v`, `uv` components
//! of the `r` relations with the rows above it. When every leading minor of
//! `A` is invertible that linear system is square and nonsingular.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{self, AnalysisOptions, EnumeratorReport, Family};
use crate::error::{Error, Result};
use crate::extension::gray_image;
use crate::gf2::{BinaryCode, BinaryMatrix};
use crate::ring::{hex_decode, R2Matrix, R2};

/// Number of hex digits in the upper triangle of an 8x8 matrix.
pub const UPPER_LEN: usize = 36;

/// Cap on the number of completions enumerated for one upper triangle.
pub const MAX_COMPLETIONS: u64 = 1 << 16;

/// Name of the generator behind every seeded search.
pub const RNG_NAME: &str = "ChaCha8Rng::seed_from_u64";

/// True iff every leading principal submatrix of `A` is invertible.
///
/// Fails when `[I | A]` does not generate a self-dual code.
pub fn is_lrm(a: &BinaryMatrix) -> Result<bool> {
    check_self_dual_base(a)?;
    Ok((1..=a.nrows()).all(|k| a.leading_minor(k).rank() == k))
}

fn check_self_dual_base(a: &BinaryMatrix) -> Result<()> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let g = BinaryMatrix::identity(a.nrows())?.hstack(a)?;
    if !BinaryCode::new(g)?.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    Ok(())
}

/// Upper triangle (diagonal included) of a square R2 matrix; entries below
/// the diagonal are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperTriangle {
    m: R2Matrix,
}

impl UpperTriangle {
    pub fn from_matrix(m: &R2Matrix) -> Self {
        let mut m = m.clone();
        for i in 0..m.nrows() {
            for j in 0..i {
                m.set(i, j, R2::ZERO);
            }
        }
        Self { m }
    }

    pub fn size(&self) -> usize {
        self.m.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> R2 {
        assert!(j >= i, "({i}, {j}) is below the diagonal");
        self.m.get(i, j)
    }

    /// Row-wise hex digits: row 0 from column 0, row 1 from column 1, ...
    pub fn to_hex(&self) -> String {
        let k = self.size();
        (0..k)
            .flat_map(|i| (i..k).map(move |j| (i, j)))
            .map(|(i, j)| self.m.get(i, j).to_hex())
            .collect()
    }
}

/// Decodes a 36-digit upper-triangular hex string into an 8x8 triangle.
pub fn decode_upper(s: &str) -> Result<UpperTriangle> {
    let s = s.trim();
    let digits: Vec<char> = s.chars().collect();
    if digits.len() != UPPER_LEN {
        return Err(Error::HexLength {
            actual: digits.len(),
            expected: UPPER_LEN,
        });
    }
    let mut m = R2Matrix::zeros(8, 8);
    let mut it = digits.into_iter();
    for i in 0..8 {
        for j in i..8 {
            m.set(i, j, hex_decode(it.next().unwrap())?);
        }
    }
    Ok(UpperTriangle { m })
}

pub fn encode_upper(m: &R2Matrix) -> String {
    UpperTriangle::from_matrix(m).to_hex()
}

/// A lift of `[I | base]`: `pi(k) = base` and `k k^T = I` over R2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftCandidate {
    pub base: BinaryMatrix,
    pub k: R2Matrix,
}

impl LiftCandidate {
    pub fn upper_hex(&self) -> String {
        encode_upper(&self.k)
    }

    pub fn is_valid(&self) -> bool {
        self.k.projection() == self.base && crate::ring::is_self_dual_r2(&self.k)
    }
}

/// Affine solution set `particular + span(kernel)` of a GF(2) system.
struct Affine {
    particular: u32,
    kernel: Vec<u32>,
}

/// Solves `rows[i] . x = rhs_i` where each row is a bitmask over `nvars`
/// variables and the right-hand side is bit `nvars`. `None` if inconsistent.
fn solve_gf2(mut rows: Vec<u32>, nvars: usize) -> Option<Affine> {
    let rhs_bit = 1u32 << nvars;
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..nvars {
        let Some(p) = (r..rows.len()).find(|&i| rows[i] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row >> col & 1 == 1 {
                *row ^= pivot;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|&row| row & rhs_bit != 0) {
        return None;
    }
    let mut particular = 0u32;
    for (i, &col) in pivots.iter().enumerate() {
        if rows[i] & rhs_bit != 0 {
            particular |= 1 << col;
        }
    }
    let kernel = (0..nvars)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = 1u32 << free;
            for (i, &col) in pivots.iter().enumerate() {
                if rows[i] >> free & 1 == 1 {
                    v |= 1 << col;
                }
            }
            v
        })
        .collect();
    Some(Affine { particular, kernel })
}

const FREE_PARTS: [R2; 3] = [R2::U, R2::V, R2::UV];

/// Bits `(b, c, d)` of an element as a 3-bit mask.
fn bcd(x: R2) -> u32 {
    (x.nibble() >> 1) as u32
}

/// Solution set for row `r` given rows `0..r` of `k` are final and row `r`
/// holds its upper entries plus the constant parts of the lower ones.
fn solve_row(k: &R2Matrix, r: usize) -> Option<Affine> {
    let n = k.ncols();
    let nvars = 3 * r;
    let mut rows = Vec::with_capacity(3 * r);
    for i in 0..r {
        let constant = (0..n).fold(R2::ZERO, |acc, j| acc + k.get(i, j) * k.get(r, j));
        if constant.a() {
            // The binary part of the relation must already vanish.
            return None;
        }
        let mut eqs = [0u32; 3];
        for j in 0..r {
            for (t, &e) in FREE_PARTS.iter().enumerate() {
                let contrib = bcd(k.get(i, j) * e);
                for (s, eq) in eqs.iter_mut().enumerate() {
                    if contrib >> s & 1 == 1 {
                        *eq |= 1 << (3 * j + t);
                    }
                }
            }
        }
        let c = bcd(constant);
        for (s, eq) in eqs.into_iter().enumerate() {
            rows.push(eq | ((c >> s & 1) << nvars));
        }
    }
    solve_gf2(rows, nvars)
}

fn apply_row_solution(k: &mut R2Matrix, base: &BinaryMatrix, r: usize, x: u32) {
    for j in 0..r {
        let bits = (x >> (3 * j)) & 0b111;
        let entry = R2::from_nibble(base.get(r, j) as u8 | (bits << 1) as u8);
        k.set(r, j, entry);
    }
}

/// Completes the lower triangle from the orthogonality relations.
///
/// Returns every completion (at most [`MAX_COMPLETIONS`]); an empty system
/// yields [`Error::InconsistentRow`] naming the first row that failed.
pub fn complete_lower(upper: &UpperTriangle, base: &BinaryMatrix) -> Result<Vec<LiftCandidate>> {
    let size = upper.size();
    if base.nrows() != size || base.ncols() != size {
        return Err(Error::LengthMismatch {
            left: size,
            right: base.nrows(),
        });
    }
    check_self_dual_base(base)?;
    for i in 0..size {
        for j in i..size {
            if upper.get(i, j).a() != base.get(i, j) {
                return Err(Error::ProjectionMismatch { row: i, col: j });
            }
        }
    }
    let mut start = upper.m.clone();
    for i in 0..size {
        for j in 0..i {
            start.set(i, j, R2::from(base.get(i, j)));
        }
    }

    let mut out = Vec::new();
    let mut deepest_failure = 0;
    let mut stack = vec![(start, 1usize)];
    while let Some((k, r)) = stack.pop() {
        if r == size {
            let cand = LiftCandidate {
                base: base.clone(),
                k,
            };
            if cand.is_valid() {
                out.push(cand);
                if out.len() as u64 > MAX_COMPLETIONS {
                    return Err(Error::TooManyCompletions(out.len() as u64));
                }
            }
            continue;
        }
        let Some(sol) = solve_row(&k, r) else {
            deepest_failure = deepest_failure.max(r);
            continue;
        };
        if sol.kernel.len() > 16 {
            return Err(Error::TooManyCompletions(1 << sol.kernel.len()));
        }
        // Push in reverse so completions come out in ascending kernel order.
        for combo in (0u32..(1 << sol.kernel.len())).rev() {
            let x = sol
                .kernel
                .iter()
                .enumerate()
                .filter(|(b, _)| combo >> b & 1 == 1)
                .fold(sol.particular, |acc, (_, &v)| acc ^ v);
            let mut next = k.clone();
            apply_row_solution(&mut next, base, r, x);
            stack.push((next, r + 1));
        }
    }
    if out.is_empty() {
        return Err(Error::InconsistentRow {
            row: deepest_failure.max(size.min(1)),
        });
    }
    Ok(out)
}

/// Output of [`random_lift`].
#[derive(Clone, Debug)]
pub struct RandomLift {
    pub candidate: LiftCandidate,
    pub seed: u64,
    /// Upper triangles drawn before one completed.
    pub attempts: usize,
    /// Number of completions of the accepted upper triangle.
    pub completions: usize,
}

/// Random lift with uniformly drawn `u`, `v`, `uv` parts on the upper
/// triangle. The first completion of the first completable draw is returned.
pub fn random_lift(base: &BinaryMatrix, seed: u64) -> Result<RandomLift> {
    random_lift_with_budget(base, seed, 64)
}

pub fn random_lift_with_budget(base: &BinaryMatrix, seed: u64, budget: usize) -> Result<RandomLift> {
    check_self_dual_base(base)?;
    let size = base.nrows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=budget {
        let mut m = R2Matrix::zeros(size, size);
        for i in 0..size {
            for j in i..size {
                let free: u8 = rng.gen_range(0..8);
                m.set(i, j, R2::from_nibble(base.get(i, j) as u8 | free << 1));
            }
        }
        match complete_lower(&UpperTriangle::from_matrix(&m), base) {
            Ok(mut sols) => {
                let completions = sols.len();
                return Ok(RandomLift {
                    candidate: sols.swap_remove(0),
                    seed,
                    attempts: attempt,
                    completions,
                });
            }
            Err(Error::InconsistentRow { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::BudgetExhausted(budget))
}

/// What a lift search keeps.
#[derive(Clone, Debug, Default)]
pub struct SearchCriteria {
    pub min_distance: usize,
    /// Accept only these `(family, beta)`; `beta = None` accepts any
    /// parameter of the family. Empty accepts everything meeting the distance.
    pub targets: Vec<(Family, Option<u32>)>,
}

impl SearchCriteria {
    pub fn accepts(&self, report: &EnumeratorReport) -> bool {
        if report.d.unwrap_or(0) < self.min_distance {
            return false;
        }
        if self.targets.is_empty() {
            return true;
        }
        let Some(f) = report.family else {
            return false;
        };
        self.targets
            .iter()
            .any(|&(tf, tb)| tf == f && (tb.is_none() || tb == report.beta))
    }
}

/// Persisted record of a lift that met the search criteria.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discovery {
    pub base: String,
    pub hex: String,
    pub seed: u64,
    pub rng: String,
    pub family: Option<Family>,
    pub beta: Option<u32>,
    pub a12_pair: Option<u64>,
    pub distribution: BTreeMap<usize, u64>,
    pub timestamp: u64,
}

/// Runs `budget` seeded random lifts (seeds `first_seed..first_seed+budget`)
/// and keeps the ones whose Gray image meets `criteria`, deduplicated by
/// weight distribution and pair invariant. Every hit is re-analyzed before
/// it is reported.
pub fn search_lifts(
    base_name: &str,
    base: &BinaryMatrix,
    criteria: &SearchCriteria,
    first_seed: u64,
    budget: u64,
    threads: usize,
) -> Result<Vec<Discovery>> {
    is_lrm(base)?;
    let mut opts = AnalysisOptions::with_threads(1);
    opts.enumeration.split_bits = 0;
    if criteria.min_distance > 1 {
        opts.enumeration.abort_below = Some(criteria.min_distance as u32);
    }
    let eval = |seed: u64| -> Result<Option<(u64, LiftCandidate, EnumeratorReport)>> {
        let lift = random_lift(base, seed)?;
        let code = gray_image(&lift.candidate.k)?;
        let Some(report) = analysis::try_analyze(&code, &opts)? else {
            return Ok(None);
        };
        Ok(criteria
            .accepts(&report)
            .then_some((seed, lift.candidate, report)))
    };
    let seeds: Vec<u64> = (0..budget).map(|i| first_seed.wrapping_add(i)).collect();
    let hits: Vec<_> = if threads == 1 {
        seeds.iter().map(|&s| eval(s)).collect::<Result<Vec<_>>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Store(e.to_string()))?;
        pool.install(|| seeds.par_iter().map(|&s| eval(s)).collect::<Result<Vec<_>>>())?
    };

    let timestamp = unix_time();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (seed, cand, report) in hits.into_iter().flatten() {
        if !seen.insert((report.distribution.counts().to_vec(), report.a12_pair)) {
            continue;
        }
        // Independent re-check from the persisted form.
        let hex = cand.upper_hex();
        let again = complete_lower(&decode_upper(&hex)?, base)?;
        let recheck = analysis::analyze(&gray_image(&again[0].k)?, &AnalysisOptions::with_threads(threads))?;
        if !criteria.accepts(&recheck) {
            continue;
        }
        out.push(Discovery {
            base: base_name.to_string(),
            hex,
            seed,
            rng: RNG_NAME.to_string(),
            family: recheck.family,
            beta: recheck.beta,
            a12_pair: recheck.a12_pair,
            distribution: recheck.distribution.sparse(),
            timestamp,
        });
    }
    Ok(out)
}

pub(crate) fn unix_time() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

/// A repaired table string and the analysis confirming it.
#[derive(Clone, Debug)]
pub struct Repair {
    pub hex: String,
    pub report: EnumeratorReport,
}

/// Recovers 36-digit candidates from a 35- or 37-digit string by trying
/// every single-digit insertion or deletion, keeping those whose lift has a
/// Gray image with the expected family and parameter.
pub fn repair_hex(
    s: &str,
    base: &BinaryMatrix,
    expected: (Family, u32),
    threads: usize,
) -> Result<Vec<Repair>> {
    let s = s.trim().to_ascii_uppercase();
    let digits: Vec<char> = s.chars().collect();
    for &c in &digits {
        hex_decode(c)?;
    }
    let mut candidates = BTreeSet::new();
    match digits.len() {
        35 => {
            for pos in 0..=35 {
                for h in "0123456789ABCDEF".chars() {
                    let mut d = digits.clone();
                    d.insert(pos, h);
                    candidates.insert(d.into_iter().collect::<String>());
                }
            }
        }
        37 => {
            for pos in 0..37 {
                let mut d = digits.clone();
                d.remove(pos);
                candidates.insert(d.into_iter().collect::<String>());
            }
        }
        n => return Err(Error::RepairPrecondition(n)),
    }

    screen(candidates, base, expected, threads)
}

/// Errata recovery for a well-formed 36-digit string whose lift does not
/// reproduce the expected parameters: tries every single-digit substitution.
pub fn repair_substitution(
    s: &str,
    base: &BinaryMatrix,
    expected: (Family, u32),
    threads: usize,
) -> Result<Vec<Repair>> {
    let s = s.trim().to_ascii_uppercase();
    let digits: Vec<char> = s.chars().collect();
    for &c in &digits {
        hex_decode(c)?;
    }
    if digits.len() != UPPER_LEN {
        return Err(Error::HexLength {
            actual: digits.len(),
            expected: UPPER_LEN,
        });
    }
    let mut candidates = BTreeSet::new();
    for pos in 0..UPPER_LEN {
        for h in "0123456789ABCDEF".chars().filter(|&h| h != digits[pos]) {
            let mut d = digits.clone();
            d[pos] = h;
            candidates.insert(d.into_iter().collect::<String>());
        }
    }
    screen(candidates, base, expected, threads)
}

/// Keeps the candidates whose lift has a Gray image with the expected family
/// and parameter; candidates that do not complete are skipped.
fn screen(
    candidates: BTreeSet<String>,
    base: &BinaryMatrix,
    expected: (Family, u32),
    threads: usize,
) -> Result<Vec<Repair>> {
    let mut opts = AnalysisOptions::with_threads(threads);
    opts.enumeration.abort_below = Some(12);
    let mut out = Vec::new();
    for hex in candidates {
        let upper = decode_upper(&hex)?;
        let lifts = match complete_lower(&upper, base) {
            Ok(l) => l,
            Err(Error::ProjectionMismatch { .. } | Error::InconsistentRow { .. }) => continue,
            Err(e) => return Err(e),
        };
        for lift in lifts {
            let code = gray_image(&lift.k)?;
            if let Some(report) = analysis::try_analyze(&code, &opts)? {
                if report.family == Some(expected.0) && report.beta == Some(expected.1) {
                    out.push(Repair {
                        hex: hex.clone(),
                        report,
                    });
                    break;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{self, a1, a2, hamming_a};

    #[test]
    fn lrm_examples() {
        assert!(is_lrm(&hamming_a()).unwrap());
        assert!(is_lrm(&a1()).unwrap());
        assert!(is_lrm(&a2()).unwrap());
        let mut broken = a1();
        broken.set(0, 0, false);
        assert!(matches!(is_lrm(&broken), Err(Error::NotSelfDual)));
    }

    /// Brute-force determinant over GF(2) by cofactor expansion.
    fn det(m: &[Vec<bool>]) -> bool {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len()).fold(false, |acc, j| {
            if !m[0][j] {
                return acc;
            }
            let minor: Vec<Vec<bool>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            acc ^ det(&minor)
        })
    }

    #[test]
    fn lrm_matches_determinant_oracle() {
        // Column permutations of A keep [I | A] self-dual.
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for base in [a1(), a2()] {
            for _ in 0..40 {
                let mut perm: Vec<usize> = (0..8).collect();
                perm.shuffle(&mut rng);
                let a = base.permute_columns(&perm).unwrap();
                let dense: Vec<Vec<bool>> =
                    (0..8).map(|i| (0..8).map(|j| a.get(i, j)).collect()).collect();
                let oracle = (1..=8).all(|k| {
                    let sub: Vec<Vec<bool>> = dense[..k].iter().map(|r| r[..k].to_vec()).collect();
                    det(&sub)
                });
                assert_eq!(is_lrm(&a).unwrap(), oracle);
            }
        }
    }

    #[test]
    fn decode_k1_upper() {
        let up = decode_upper(tables::TABLE1[0].hex).unwrap();
        let row0: String = (0..8).map(|j| up.get(0, j).to_hex()).collect();
        assert_eq!(row0, "9C08E4D7");
        let row1: String = (1..8).map(|j| up.get(1, j).to_hex()).collect();
        assert_eq!(row1, "54E88B1");
        assert_eq!(up.to_hex(), tables::TABLE1[0].hex);
    }

    #[test]
    fn decode_errors() {
        let zero = decode_upper(&"0".repeat(36)).unwrap();
        assert!((0..8).all(|i| (i..8).all(|j| zero.get(i, j).is_zero())));
        let l8 = tables::lift_row("L8").unwrap().hex;
        assert_eq!(
            decode_upper(l8),
            Err(Error::HexLength {
                actual: 37,
                expected: 36
            })
        );
        let mut bad = "0".repeat(35);
        bad.push('X');
        assert_eq!(decode_upper(&bad), Err(Error::InvalidHex('X')));
    }

    #[test]
    fn completion_recovers_k1() {
        let full = tables::k1_full();
        let sols = complete_lower(&UpperTriangle::from_matrix(&full), &a1()).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].k, full);

        // The published string carries entry (3, 7) of the printed matrix,
        // whose completion differs from the printed lower triangle.
        let published = decode_upper(tables::TABLE1[0].hex).unwrap();
        assert_eq!(published.to_hex(), encode_upper(&tables::k1_printed()));
        let sols = complete_lower(&published, &a1()).unwrap();
        assert_eq!(sols.len(), 1);
        assert!(sols[0].is_valid());
        assert_ne!(sols[0].k, tables::k1_printed());
    }

    #[test]
    fn trivial_lift_completes_to_embedding() {
        for a in [a1(), a2(), hamming_a()] {
            let emb = R2Matrix::embed(&a);
            let sols = complete_lower(&UpperTriangle::from_matrix(&emb), &a).unwrap();
            assert!(sols.iter().any(|c| c.k == emb));
        }
    }

    #[test]
    fn completion_rejects_projection_mismatch() {
        let mut up = decode_upper(tables::TABLE1[0].hex).unwrap();
        up.m.set(0, 0, R2::U);
        assert!(matches!(
            complete_lower(&up, &a1()),
            Err(Error::ProjectionMismatch { row: 0, col: 0 })
        ));
    }

    #[test]
    fn all_table_completions_are_valid_lifts() {
        for row in tables::TABLE1.iter().chain(tables::TABLE2.iter()) {
            let Ok(up) = decode_upper(row.hex) else {
                continue;
            };
            let sols = match complete_lower(&up, &row.base.matrix()) {
                Ok(s) => s,
                // L4 as published contradicts A2 at entry (4, 5).
                Err(Error::ProjectionMismatch { row: 4, col: 5 }) if row.name == "L4" => continue,
                Err(e) => panic!("{}: {e}", row.name),
            };
            assert_eq!(sols.len(), 1, "{}", row.name);
            for s in &sols {
                assert!(s.is_valid());
                assert_eq!(s.upper_hex(), row.hex);
            }
        }
    }

    #[test]
    fn random_lift_is_deterministic_and_valid() {
        let a = random_lift(&a2(), 7).unwrap();
        let b = random_lift(&a2(), 7).unwrap();
        assert_eq!(a.candidate, b.candidate);
        assert!(a.candidate.is_valid());
        assert_eq!(a.candidate.k.projection(), a2());
        let c = random_lift(&a2(), 8).unwrap();
        assert_ne!(a.candidate, c.candidate);
    }

    #[test]
    fn round_trip_upper_strings() {
        for seed in 0..20 {
            let lift = random_lift(&a1(), seed).unwrap();
            let hex = lift.candidate.upper_hex();
            assert_eq!(decode_upper(&hex).unwrap().to_hex(), hex);
            let again = complete_lower(&decode_upper(&hex).unwrap(), &a1()).unwrap();
            assert!(again.contains(&lift.candidate));
        }
    }

    #[test]
    fn repair_precondition() {
        assert!(matches!(
            repair_hex(tables::TABLE1[0].hex, &a1(), (Family::W64_1, 20), 1),
            Err(Error::RepairPrecondition(36))
        ));
    }

    #[test]
    fn gf2_solver_handles_singular_systems() {
        // x0 + x1 = 1 over two variables: one free variable.
        let sol = solve_gf2(vec![0b111, 0b000], 2).unwrap();
        assert_eq!(sol.kernel.len(), 1);
        assert_eq!((sol.particular & 0b11).count_ones() % 2, 1);
        // x0 = 1 and x0 = 0: inconsistent.
        assert!(solve_gf2(vec![0b11, 0b01], 1).is_none());
    }
}

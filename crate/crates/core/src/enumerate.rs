//! Exhaustive codeword enumeration.
//!
//! Messages are visited in reflected Gray order, so consecutive codewords
//! differ by one generator row: one XOR and one population count per word.
//! The message space is split into `2^split_bits` blocks by fixing the high
//! message bits; each block starts from its own seed codeword and the block
//! histograms are summed, which makes the result independent of scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

use num_traits::PrimInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::BinaryCode;

/// Largest dimension accepted by the Gray-walk enumerator.
pub const MAX_DIMENSION: usize = 33;
/// Largest dimension accepted by the naive oracle.
pub const MAX_ORACLE_DIMENSION: usize = 20;

/// Number of low message bits folded into a precomputed table.
const TABLE_BITS: usize = 8;

/// Packed codeword storage, `u64` for `n <= 64` and `u128` above.
pub trait Word: PrimInt + Send + Sync + 'static {
    const BITS: usize;
    fn from_u128(x: u128) -> Self;
    fn to_u128(self) -> u128;
}

impl Word for u64 {
    const BITS: usize = 64;
    #[inline]
    fn from_u128(x: u128) -> Self {
        x as u64
    }
    #[inline]
    fn to_u128(self) -> u128 {
        self as u128
    }
}

impl Word for u128 {
    const BITS: usize = 128;
    #[inline]
    fn from_u128(x: u128) -> Self {
        x
    }
    #[inline]
    fn to_u128(self) -> u128 {
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Worker threads; 0 means the rayon default (available parallelism).
    pub threads: usize,
    /// The message space is cut into `2^split_bits` blocks.
    pub split_bits: u32,
    /// Collect every codeword of this weight.
    pub collect_weight: Option<u32>,
    /// Give up collecting beyond this many words.
    pub collect_cap: usize,
    /// Stop as soon as a nonzero word lighter than this is seen.
    pub abort_below: Option<u32>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            threads: 0,
            split_bits: 6,
            collect_weight: None,
            collect_cap: 1_000_000,
            abort_below: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// `histogram[w]` codewords of weight `w`, `w = 0..=n`.
    pub histogram: Vec<u64>,
    /// Collected words, sorted; `None` if the cap was exceeded.
    pub collected: Option<Vec<u128>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Walk {
    Complete(Enumeration),
    /// A nonzero word of this weight was found below the abort threshold.
    Aborted { weight: u32 },
}

struct BlockResult {
    histogram: Vec<u64>,
    collected: Vec<u128>,
    overflow: bool,
    light: Option<u32>,
}

/// Per-walk constants shared by every block.
struct WalkParams<W> {
    n: usize,
    /// All-ones word when only half of the message space is walked; each
    /// visited word then also stands for its complement.
    mirror: Option<W>,
    /// Weights to collect: the target itself and, when mirroring, `n - target`.
    targets: [u32; 2],
    collecting: bool,
    cap: usize,
    abort: u32,
}

impl<W: Word> WalkParams<W> {
    /// Weights represented by a visited word of weight `w`.
    fn light(&self, w: u32) -> Option<u32> {
        let mut best = None;
        if w > 0 && w < self.abort {
            best = Some(w);
        }
        if self.mirror.is_some() {
            let m = self.n as u32 - w;
            if m > 0 && m < self.abort {
                best = Some(best.map_or(m, |b: u32| b.min(m)));
            }
        }
        best
    }

    fn record(&self, c: W, w: u32, out: &mut Vec<u128>, overflow: &mut bool) {
        let target = self.targets[0];
        let mut push = |x: W| {
            if out.len() < self.cap {
                out.push(x.to_u128());
            } else {
                *overflow = true;
            }
        };
        if w == target {
            push(c);
        }
        if let Some(ones) = self.mirror {
            if self.n as u32 - w == target {
                push(c ^ ones);
            }
        }
    }
}

fn watched(hist: &[[u64; 130]; 4], weights: &[u32]) -> u64 {
    weights
        .iter()
        .filter(|&&w| w < 130)
        .map(|&w| hist.iter().map(|h| h[w as usize]).sum::<u64>())
        .sum()
}

/// Walks one block: the low `free` message bits vary, the high bits are
/// fixed by `seed`.
fn walk_block<W: Word>(
    rows: &[W],
    free: usize,
    seed: W,
    p: &WalkParams<W>,
    stop: &AtomicBool,
) -> BlockResult {
    let mut hist = [[0u64; 130]; 4];
    let mut collected = Vec::new();
    let mut overflow = false;
    let mut light = None;
    let [t0, t1] = p.targets;
    let aborting = p.abort > 0;
    let light_weights: Vec<u32> = (0..=p.n as u32).filter(|&w| p.light(w).is_some()).collect();
    let mut seen_targets = 0u64;

    let table_bits = free.min(TABLE_BITS);
    // Gray-ordered XOR combinations of the low `table_bits` rows.
    let mut table = Vec::with_capacity(1 << table_bits);
    let mut acc = W::zero();
    table.push(acc);
    for i in 1usize..(1 << table_bits) {
        acc = acc ^ rows[i.trailing_zeros() as usize];
        table.push(acc);
    }

    let outer_bits = free - table_bits;
    let mut base = seed;
    for j in 0usize..(1 << outer_bits) {
        if j > 0 {
            base = base ^ rows[table_bits + j.trailing_zeros() as usize];
            if aborting && stop.load(Ordering::Relaxed) {
                break;
            }
        }
        let mut quads = table.chunks_exact(4);
        for q in &mut quads {
            for l in 0..4 {
                hist[l][(base ^ q[l]).count_ones() as usize] += 1;
            }
        }
        for &t in quads.remainder() {
            hist[0][(base ^ t).count_ones() as usize] += 1;
        }
        // Collection and the abort test are rare events: detect them from
        // the histogram and only then rescan the chunk.
        if p.collecting {
            let now = watched(&hist, &[t0, t1]);
            if now != seen_targets {
                seen_targets = now;
                for &t in &table {
                    let c = base ^ t;
                    p.record(c, c.count_ones(), &mut collected, &mut overflow);
                }
            }
        }
        if aborting && watched(&hist, &light_weights) != 0 {
            light = table
                .iter()
                .filter_map(|&t| p.light((base ^ t).count_ones()))
                .min();
            stop.store(true, Ordering::Relaxed);
            break;
        }
    }
    let histogram = (0..=p.n)
        .map(|w| hist.iter().map(|h| h[w]).sum())
        .collect();
    BlockResult {
        histogram,
        collected,
        overflow,
        light,
    }
}

/// Rewrites a basis so that its last row is the all-ones word, if that word
/// lies in the span.
fn basis_ending_in_ones(rows: &[u128], n: usize) -> Option<Vec<u128>> {
    let ones = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    // Echelon rows with the combination of input rows they came from.
    let mut echelon: Vec<(u128, u64)> = Vec::with_capacity(rows.len());
    for (i, &r) in rows.iter().enumerate() {
        let mut v = (r, 1u64 << i);
        for &(e, m) in &echelon {
            if v.0 & (e & e.wrapping_neg()) != 0 {
                v = (v.0 ^ e, v.1 ^ m);
            }
        }
        if v.0 != 0 {
            echelon.push(v);
        }
    }
    let mut v = (ones, 0u64);
    for &(e, m) in &echelon {
        if v.0 & (e & e.wrapping_neg()) != 0 {
            v = (v.0 ^ e, v.1 ^ m);
        }
    }
    if v.0 != 0 || v.1 == 0 {
        return None;
    }
    let drop = v.1.trailing_zeros() as usize;
    let mut out: Vec<u128> = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != drop)
        .map(|(_, &r)| r)
        .collect();
    out.push(ones);
    Some(out)
}

fn walk_code<W: Word>(code: &BinaryCode, opts: &EnumOptions) -> Walk {
    let n = code.n();
    let packed = code.generator().packed_rows();
    let (rows, mirror) = match basis_ending_in_ones(packed, n) {
        Some(mut r) => {
            let ones = r.pop().expect("nonempty basis");
            (r, Some(W::from_u128(ones)))
        }
        None => (packed.to_vec(), None),
    };
    let rows: Vec<W> = rows.into_iter().map(W::from_u128).collect();
    let k = rows.len();
    let target = opts.collect_weight.unwrap_or(u32::MAX);
    let params = WalkParams {
        n,
        mirror,
        targets: [
            target,
            match (mirror, opts.collect_weight) {
                (Some(_), Some(t)) if (t as usize) <= n => n as u32 - t,
                _ => u32::MAX,
            },
        ],
        collecting: opts.collect_weight.is_some(),
        cap: opts.collect_cap,
        abort: opts.abort_below.unwrap_or(0),
    };
    let split = (opts.split_bits as usize).min(k);
    let free = k - split;
    let stop = AtomicBool::new(false);

    let run_block = |b: usize| {
        let mut seed = W::zero();
        for (i, row) in rows[free..].iter().enumerate() {
            if (b >> i) & 1 == 1 {
                seed = seed ^ *row;
            }
        }
        walk_block(&rows, free, seed, &params, &stop)
    };

    let blocks: Vec<BlockResult> = if opts.threads == 1 {
        (0..1usize << split).map(run_block).collect()
    } else {
        let work = || (0..1usize << split).into_par_iter().map(run_block).collect();
        if opts.threads == 0 {
            work()
        } else {
            match rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
            {
                Ok(pool) => pool.install(work),
                Err(_) => work(),
            }
        }
    };

    if let Some(w) = blocks.iter().filter_map(|b| b.light).min() {
        return Walk::Aborted { weight: w };
    }

    let mut half = vec![0u64; n + 1];
    let mut collected = Vec::new();
    let mut overflow = false;
    for b in blocks {
        for (h, x) in half.iter_mut().zip(&b.histogram) {
            *h += x;
        }
        overflow |= b.overflow;
        collected.extend(b.collected);
    }
    let histogram = match mirror {
        Some(_) => (0..=n).map(|w| half[w] + half[n - w]).collect(),
        None => half,
    };
    overflow |= collected.len() > opts.collect_cap;
    let collected = if overflow || opts.collect_weight.is_none() {
        (!overflow).then(Vec::new)
    } else {
        collected.sort_unstable();
        Some(collected)
    };
    Walk::Complete(Enumeration {
        histogram,
        collected,
    })
}

/// Enumerates all `2^k` codewords.
pub fn enumerate(code: &BinaryCode, opts: &EnumOptions) -> Result<Walk> {
    if code.k() > MAX_DIMENSION {
        return Err(Error::DimensionLimit {
            k: code.k(),
            limit: MAX_DIMENSION,
        });
    }
    Ok(if code.n() <= 64 {
        walk_code::<u64>(code, opts)
    } else {
        walk_code::<u128>(code, opts)
    })
}

/// Weight histogram by encoding every message independently.
pub fn naive_histogram(code: &BinaryCode) -> Result<Vec<u64>> {
    if code.k() > MAX_ORACLE_DIMENSION {
        return Err(Error::DimensionLimit {
            k: code.k(),
            limit: MAX_ORACLE_DIMENSION,
        });
    }
    let mut hist = vec![0u64; code.n() + 1];
    for m in 0u64..(1 << code.k()) {
        hist[code.encode(m).count_ones() as usize] += 1;
    }
    Ok(hist)
}

//! Gray-image generators of R2 lifts and the building-up extension
//! `n -> n + 2` of binary self-dual codes.

use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BinaryMatrix, BitVector};
use crate::ring::{gray_map, is_self_dual_r2, R2Matrix, R2};

/// Binary generator of the Gray image of the code generated by `[I | K]`.
///
/// Rows are the images of the rows of `[I | K]`, then of their `u`, `v`
/// and `uv` multiples, in that order.
pub fn build_gray_generator(k: &R2Matrix) -> Result<BinaryMatrix> {
    if !is_self_dual_r2(k) {
        return Err(Error::NotSelfDual);
    }
    let g = k.with_identity();
    let mut rows = Vec::with_capacity(4 * g.nrows());
    for scalar in [R2::ONE, R2::U, R2::V, R2::UV] {
        for i in 0..g.nrows() {
            rows.push(gray_map(&g.row(i).scale(scalar))?);
        }
    }
    let m = BinaryMatrix::from_rows(&rows)?;
    let rank = m.rank();
    if rank != m.nrows() {
        return Err(Error::RankDeficient {
            rank,
            expected: m.nrows(),
        });
    }
    Ok(m)
}

/// The Gray image as a binary code.
pub fn gray_image(k: &R2Matrix) -> Result<BinaryCode> {
    BinaryCode::new(build_gray_generator(k)?)
}

/// Expands the vector notation used for extension vectors: literal `0`/`1`
/// runs and repetition tokens `1^{m}` / `0^{m}`, separated by optional
/// whitespace. Braces are optional; an unbraced count runs to the end of its
/// whitespace-separated token.
pub fn expand_x(s: &str, n: usize) -> Result<BitVector> {
    let mut bits = Vec::new();
    for token in s.split_whitespace() {
        expand_token(token, &mut bits)?;
    }
    if bits.len() != n {
        return Err(Error::XNotation(format!(
            "expands to {} coordinates, expected {n}",
            bits.len()
        )));
    }
    BitVector::from_bools(&bits)
}

fn expand_token(token: &str, bits: &mut Vec<bool>) -> Result<()> {
    let chars: Vec<char> = token.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch != '0' && ch != '1' {
            return Err(Error::XNotation(format!("unexpected {ch:?} in {token:?}")));
        }
        if chars.get(i + 1) != Some(&'^') {
            bits.push(ch == '1');
            i += 1;
            continue;
        }
        let mut j = i + 2;
        let braced = chars.get(j) == Some(&'{');
        if braced {
            j += 1;
        }
        let start = j;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        let count: usize = chars[start..j]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::XNotation(format!("missing repeat count in {token:?}")))?;
        if braced {
            if chars.get(j) != Some(&'}') {
                return Err(Error::XNotation(format!("unclosed brace in {token:?}")));
            }
            j += 1;
        }
        bits.extend(std::iter::repeat(ch == '1').take(count));
        i = j;
    }
    Ok(())
}

/// Building-up extension with `c = 1`: the generator
///
/// ```text
/// 1    0   | X
/// y_i  y_i | r_i     y_i = <r_i, X>
/// ```
///
/// of length `n + 2` and dimension `k + 1`. Requires `G` to generate a
/// self-dual code and `X` to have odd weight.
pub fn extend(g: &BinaryCode, x: &BitVector) -> Result<BinaryCode> {
    if !g.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    if x.len() != g.n() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: g.n(),
        });
    }
    if x.weight() % 2 == 0 {
        return Err(Error::EvenWeightX(x.weight()));
    }
    let head = BitVector::from_bits(0b01, 2)?;
    let mut rows = vec![head.concat(x)?];
    for r in g.generator().rows() {
        let y = r.inner_product(x)?;
        let prefix = BitVector::from_bits(if y { 0b11 } else { 0 }, 2)?;
        rows.push(prefix.concat(&r)?);
    }
    let code = BinaryCode::new(BinaryMatrix::from_rows(&rows)?)?;
    if !code.is_self_dual() {
        return Err(Error::PostconditionFailed(
            "extended generator is not self-dual".into(),
        ));
    }
    Ok(code)
}

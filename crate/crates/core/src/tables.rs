//! Published data: base matrices, upper-triangular lift strings and the
//! expected invariants of every constructed code.

use crate::analysis::Family;
use crate::gf2::BinaryMatrix;
use crate::ring::R2Matrix;

/// Redundancy block of the standard-form generator of the cube's code
/// (extended Hamming `[8,4,4]`).
pub fn hamming_a() -> BinaryMatrix {
    BinaryMatrix::from_rows_str(&["1011", "0111", "1110", "1101"]).unwrap()
}

/// Redundancy block `A1` of the `G1` graph code, `[I8 | A1]`.
pub fn a1() -> BinaryMatrix {
    BinaryMatrix::from_rows_str(&[
        "10000011", "01000011", "00100011", "00010011", "00001011", "00000111", "11111110",
        "11111101",
    ])
    .unwrap()
}

/// Redundancy block `A2` of the `G2` graph code, `[I8 | A2]`.
pub fn a2() -> BinaryMatrix {
    BinaryMatrix::from_rows_str(&[
        "10011110", "01011110", "00111110", "00010011", "00001011", "00000111", "11111101",
        "11100011",
    ])
    .unwrap()
}

/// The full lift `K1` of `A1`, with entry `(3, 7)` equal to `B`.
///
/// The published matrix has `7` there, which breaks `K K^T = I` in row and
/// column 3 only; `B` is the one-digit change that restores self-duality and
/// agrees with the other seven rows. See [`k1_printed`].
pub fn k1_full() -> R2Matrix {
    R2Matrix::from_hex_rows(&[
        "9C08E4D7", "454E88B1", "E2162CFB", "E8696AFB", "4AEA1AF7", "8C60CB35", "75F73B58",
        "B9D5DBE5",
    ])
    .unwrap()
}

/// `K1` exactly as published (not self-dual).
pub fn k1_printed() -> R2Matrix {
    let mut k = k1_full();
    k.set(3, 7, crate::ring::R2::from_nibble(0x7));
    k
}

/// Which base matrix a lift belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Base {
    A1,
    A2,
}

impl Base {
    pub fn matrix(self) -> BinaryMatrix {
        match self {
            Base::A1 => a1(),
            Base::A2 => a2(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Base::A1 => "A1",
            Base::A2 => "A2",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name.to_ascii_uppercase().as_str() {
            "A1" | "G1" => Some(Base::A1),
            "A2" | "G2" => Some(Base::A2),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LiftRow {
    pub name: &'static str,
    pub base: Base,
    pub hex: &'static str,
    pub family: Family,
    pub beta: u32,
}

pub const TABLE1: [LiftRow; 5] = [
    LiftRow { name: "K1", base: Base::A1, hex: "9C08E4D754E88B1162CFB96AF71AF7B35585", family: Family::W64_1, beta: 20 },
    LiftRow { name: "K2", base: Base::A1, hex: "9A8C663FF2A4855D2463516C7D943F95BB8B", family: Family::W64_1, beta: 24 },
    LiftRow { name: "K3", base: Base::A1, hex: "D24022373664C1D1AC671120799C7759FB0F", family: Family::W64_1, beta: 26 },
    LiftRow { name: "K4", base: Base::A1, hex: "9E4CEEF332A0C55D6CE755A83D5C3FD9F78B", family: Family::W64_1, beta: 30 },
    LiftRow { name: "K5", base: Base::A1, hex: "9A8C6273FEECC119A8E75D6CF51CF3513F87", family: Family::W64_2, beta: 26 },
];

/// `L8` carries 37 digits and `L14` 35 as published.
pub const TABLE2: [LiftRow; 15] = [
    LiftRow { name: "L1", base: Base::A2, hex: "5EA3BBDE945739ADDBB3436ABF7237B5105B", family: Family::W64_1, beta: 16 },
    LiftRow { name: "L2", base: Base::A2, hex: "F4ED975832719FA15953274813383F97DC7F", family: Family::W64_1, beta: 20 },
    LiftRow { name: "L3", base: Base::A2, hex: "DAE7379AD85FBDE1D3BB0BAA33F6FFF5D0DF", family: Family::W64_1, beta: 24 },
    LiftRow { name: "L4", base: Base::A2, hex: "5A2B7796DC53F1E99FBBCFAAB77B37F1D097", family: Family::W64_1, beta: 26 },
    LiftRow { name: "L5", base: Base::A2, hex: "5E2F335610D7FDA557FF0BAEF3F237F59813", family: Family::W64_1, beta: 28 },
    LiftRow { name: "L6", base: Base::A2, hex: "D6A3BBDED05739A99BB34FAABF323F3D1C13", family: Family::W64_1, beta: 30 },
    LiftRow { name: "L7", base: Base::A2, hex: "3C211FD8B23D1FAD115F670C5BB83F9F94F3", family: Family::W64_1, beta: 34 },
    LiftRow { name: "L8", base: Base::A2, hex: "5205997E1A77550739D9AA92817F01B5358B9", family: Family::W64_1, beta: 38 },
    LiftRow { name: "L9", base: Base::A2, hex: "742D979876F15F2599936F041BFCBF135437", family: Family::W64_2, beta: 3 },
    LiftRow { name: "L10", base: Base::A2, hex: "16055DB29A3B990771952D6013B09F53D0B5", family: Family::W64_2, beta: 7 },
    LiftRow { name: "L11", base: Base::A2, hex: "3C295F50FA399B619D9F6F481BF83B57D8BF", family: Family::W64_2, beta: 11 },
    LiftRow { name: "L12", base: Base::A2, hex: "56491536127F9147B55DE5241FF0D757587D", family: Family::W64_2, beta: 15 },
    LiftRow { name: "L13", base: Base::A2, hex: "5A23B31AD8177DA55B7BC7A6BB7AFF71981B", family: Family::W64_2, beta: 26 },
    LiftRow { name: "L14", base: Base::A2, hex: "DEC1D9F2D63FD94B9D5A12CD330D35B1C3D", family: Family::W64_2, beta: 27 },
    LiftRow { name: "L15", base: Base::A2, hex: "1023DB7472337DAD9995ED485DB2D3715457", family: Family::W64_2, beta: 35 },
];

pub fn lift_row(name: &str) -> Option<&'static LiftRow> {
    TABLE1
        .iter()
        .chain(TABLE2.iter())
        .find(|r| r.name.eq_ignore_ascii_case(name))
}

/// Pairs of codes sharing an enumerator, with their weight-12 pair counts.
#[derive(Clone, Copy, Debug)]
pub struct EquivalenceRow {
    pub first: &'static str,
    pub first_a12: u64,
    pub second: &'static str,
    pub second_a12: u64,
    pub family: Family,
    pub beta: u32,
}

pub const EQUIVALENCE: [EquivalenceRow; 5] = [
    EquivalenceRow { first: "K1", first_a12: 15732, second: "L2", second_a12: 14964, family: Family::W64_1, beta: 20 },
    EquivalenceRow { first: "K2", first_a12: 16488, second: "L3", second_a12: 17264, family: Family::W64_1, beta: 24 },
    EquivalenceRow { first: "K3", first_a12: 17676, second: "L4", second_a12: 17898, family: Family::W64_1, beta: 26 },
    EquivalenceRow { first: "K4", first_a12: 20544, second: "L6", second_a12: 19890, family: Family::W64_1, beta: 30 },
    EquivalenceRow { first: "K5", first_a12: 18876, second: "L13", second_a12: 19680, family: Family::W64_2, beta: 26 },
];

/// Length-66 codes built by extending the Gray image of a lift.
#[derive(Clone, Copy, Debug)]
pub struct ExtensionRow {
    pub name: &'static str,
    pub base: &'static str,
    pub x: &'static str,
    pub family: Family,
    pub beta: u32,
}

pub const TABLE3: [ExtensionRow; 10] = [
    ExtensionRow { name: "C1", base: "L9", x: "0010011010011000001010001101100000100101110100001100000011110001", family: Family::W66_1, beta: 13 },
    ExtensionRow { name: "C2", base: "L15", x: "01101100110101100100110101100011 1^{32}", family: Family::W66_1, beta: 57 },
    ExtensionRow { name: "C3", base: "L1", x: "00010000111100101101111111100001 1^{32}", family: Family::W66_3, beta: 24 },
    ExtensionRow { name: "C4", base: "L1", x: "0111111010101101111100010100001100111110001000011000101001110100", family: Family::W66_3, beta: 25 },
    ExtensionRow { name: "C5", base: "K1", x: "00100011001001110101011010001101 1^{32}", family: Family::W66_3, beta: 26 },
    ExtensionRow { name: "C6", base: "L1", x: "11011000100101000100111110110110 0^{32}", family: Family::W66_3, beta: 27 },
    ExtensionRow { name: "C7", base: "K4", x: "01011011011101111111000111011100 1^{32}", family: Family::W66_3, beta: 39 },
    ExtensionRow { name: "C8", base: "L4", x: "00110110101011010110001010110110 1^{32}", family: Family::W66_3, beta: 40 },
    ExtensionRow { name: "C9", base: "K3", x: "00100110110111100100010101111001 1^{32}", family: Family::W66_3, beta: 41 },
    ExtensionRow { name: "C10", base: "K3", x: "10101101100111011001110110010101 1^{32}", family: Family::W66_3, beta: 42 },
];

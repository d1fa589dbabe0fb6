//! Randomized property checks shared by the property suite and the
//! acceptance run. Each returns the number of instances checked.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use selfdual::analysis::{naive_distribution_oracle, weight_distribution_with};
use selfdual::enumerate::EnumOptions;
use selfdual::extension::extend;
use selfdual::gf2::{inner_product, BinaryCode, BinaryMatrix, BitVector};
use selfdual::lift::{complete_lower, UpperTriangle};
use selfdual::ring::{gray_map, is_self_dual_r2, R2Matrix, R2Vector, R2};
use selfdual::tables::{a1, a2, hamming_a};

pub fn random_code(rng: &mut ChaCha8Rng, k: usize, n: usize) -> BinaryCode {
    loop {
        let mask = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let rows = (0..k).map(|_| rng.gen::<u128>() & mask).collect();
        if let Ok(c) = BinaryCode::new(BinaryMatrix::from_packed(rows, n).unwrap()) {
            return c;
        }
    }
}

/// Gray-walk distribution equals the one-message-at-a-time oracle.
pub fn enumerator_matches_oracle(cases: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE1);
    for i in 0..cases {
        let k = rng.gen_range(1..=16);
        let n = rng.gen_range(k..=(k + 60).min(128));
        let mut code = random_code(&mut rng, k, n);
        if i % 3 == 0 {
            // Also exercise the all-ones shortcut.
            let mut rows = code.generator().packed_rows().to_vec();
            rows[0] = (1u128 << n) - 1;
            if let Ok(c) = BinaryCode::new(BinaryMatrix::from_packed(rows, n).unwrap()) {
                code = c;
            }
        }
        let opts = EnumOptions {
            threads: 1 + i % 3,
            split_bits: (i % 7) as u32,
            ..Default::default()
        };
        let fast = weight_distribution_with(&code, &opts).map_err(|e| e.to_string())?;
        let slow = naive_distribution_oracle(&code).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("case {i}: [{n},{k}] distributions differ"));
        }
    }
    Ok(cases)
}

fn random_r2_vector(rng: &mut ChaCha8Rng, n: usize) -> R2Vector {
    R2Vector((0..n).map(|_| R2::from_nibble(rng.gen_range(0..16))).collect())
}

/// Orthogonal R2 vectors have orthogonal Gray images.
pub fn gray_map_preserves_orthogonality(pairs: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE2);
    let mut found = 0;
    while found < pairs {
        let n = rng.gen_range(1..=16);
        let x = random_r2_vector(&mut rng, n);
        let mut y = random_r2_vector(&mut rng, n);
        // Make <x, y> = 0 by adjusting a coordinate where x is a unit.
        let Some(j) = (0..n).find(|&j| x.0[j].is_unit()) else {
            continue;
        };
        y.0[j] = R2::ZERO;
        let rest = x.dot(&y).unwrap();
        // Units of R2 square to 1, so x_j is its own inverse.
        y.0[j] = x.0[j] * rest;
        if x.dot(&y).unwrap() != R2::ZERO {
            return Err("failed to build an orthogonal pair".into());
        }
        let (gx, gy) = (gray_map(&x).unwrap(), gray_map(&y).unwrap());
        if inner_product(&gx, &gy).unwrap() {
            return Err(format!("images of {} and {} not orthogonal", x.to_hex(), y.to_hex()));
        }
        found += 1;
    }
    Ok(pairs)
}

/// Every completion of a random upper triangle is a self-dual lift of A.
pub fn completions_are_lifts(draws: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE3);
    let bases = [a1(), a2(), hamming_a()];
    let mut checked = 0;
    for i in 0..draws {
        let a = &bases[i % bases.len()];
        let size = a.nrows();
        let mut m = R2Matrix::zeros(size, size);
        for r in 0..size {
            for c in r..size {
                let free: u8 = rng.gen_range(0..8);
                m.set(r, c, R2::from_nibble(a.get(r, c) as u8 | free << 1));
            }
        }
        let Ok(sols) = complete_lower(&UpperTriangle::from_matrix(&m), a) else {
            continue;
        };
        for s in sols {
            if !is_self_dual_r2(&s.k) || s.k.projection() != *a {
                return Err(format!("draw {i}: invalid completion"));
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err("no completable draws".into());
    }
    Ok(checked)
}

/// A random self-dual code of even length `n`: a chain of extensions from
/// the repetition code with random odd-weight vectors, then a random
/// coordinate permutation.
pub fn random_self_dual(rng: &mut ChaCha8Rng, n: usize) -> BinaryCode {
    let mut code = BinaryCode::new(BinaryMatrix::from_rows_str(&["11"]).unwrap()).unwrap();
    while code.n() < n {
        let x = loop {
            let bits: Vec<bool> = (0..code.n()).map(|_| rng.gen()).collect();
            let v = BitVector::from_bools(&bits).unwrap();
            if v.weight() % 2 == 1 {
                break v;
            }
        };
        code = extend(&code, &x).unwrap();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    BinaryCode::new(code.generator().permute_columns(&perm).unwrap()).unwrap()
}

/// Extensions of self-dual codes by odd-weight vectors are self-dual.
pub fn extensions_are_self_dual(cases: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE4);
    for i in 0..cases {
        let n = 2 * rng.gen_range(1..=8);
        let g = random_self_dual(&mut rng, n);
        if !g.is_self_dual() {
            return Err(format!("case {i}: generated base not self-dual"));
        }
        let x = loop {
            let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            let v = BitVector::from_bools(&bits).unwrap();
            if v.weight() % 2 == 1 {
                break v;
            }
        };
        let e = extend(&g, &x).map_err(|e| format!("case {i}: {e}"))?;
        let gen = e.generator();
        let gram_zero = gen.mul(&gen.transpose()).unwrap().is_zero();
        if !(gram_zero && e.k() * 2 == e.n() && e.n() == n + 2) {
            return Err(format!("case {i}: extension of length {} not self-dual", e.n()));
        }
    }
    Ok(cases)
}

/// Commutative ring axioms over all 16^3 triples, by brute force.
pub fn ring_axioms() -> Result<usize, String> {
    let mut count = 0;
    for x in R2::all() {
        for y in R2::all() {
            if x * y != y * x || x + y != y + x {
                return Err(format!("commutativity fails at {x}, {y}"));
            }
            for z in R2::all() {
                if (x * y) * z != x * (y * z) || (x + y) + z != x + (y + z) {
                    return Err(format!("associativity fails at {x}, {y}, {z}"));
                }
                if x * (y + z) != x * y + x * z {
                    return Err(format!("distributivity fails at {x}, {y}, {z}"));
                }
                count += 1;
            }
        }
        if x * R2::ONE != x || x + R2::ZERO != x || x + x != R2::ZERO {
            return Err(format!("identities fail at {x}"));
        }
    }
    Ok(count)
}

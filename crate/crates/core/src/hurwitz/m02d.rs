//! ψ-integrals on the space of two-pointed rational curves with `d` flecks,
//! by the closed multinomial form and by the fleck-forgetting recursion.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series_kernel::rational::factorial;
use crate::series_kernel::Rational;

fn check_flecks(d: u32, b_list: &[u32]) -> Result<()> {
    if d == 0 {
        return Err(Error::Range("the number of flecks must be at least 1".into()));
    }
    if b_list.len() > d as usize {
        return Err(Error::Range(format!("{} fleck exponents given for {d} flecks", b_list.len())));
    }
    Ok(())
}

/// `∫ ψ_1^{a1} ψ_2^{a2} Π ψ̂_j^{b_j}`: the multinomial `(d−1)!/(a1! a2!)` when
/// every `b_j` vanishes and `a1 + a2 = d − 1`, else 0. Missing entries of
/// `b_list` count as 0.
pub fn m02d_psi_integral(d: u32, a1: u32, a2: u32, b_list: &[u32]) -> Result<Rational> {
    check_flecks(d, b_list)?;
    if b_list.iter().any(|&b| b > 0) || a1 + a2 + 1 != d {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(factorial(d as u64 - 1), factorial(a1 as u64) * factorial(a2 as u64)))
}

/// The same integral computed by pulling back along the map that forgets a
/// fleck with vanishing exponent: each of `ψ_1`, `ψ_2` splits off a boundary
/// divisor, so the value is the sum of the two integrals with `a1` or `a2`
/// lowered by one on `d − 1` flecks. A single fleck is a point.
pub fn m02d_psi_integral_recursive(d: u32, a1: u32, a2: u32, b_list: &[u32]) -> Result<Rational> {
    check_flecks(d, b_list)?;
    let mut b: Vec<u32> = b_list.to_vec();
    b.resize(d as usize, 0);
    Ok(recurse(d, a1 as i64, a2 as i64, &mut b))
}

fn recurse(d: u32, a1: i64, a2: i64, b: &mut Vec<u32>) -> Rational {
    if a1 < 0 || a2 < 0 {
        return Rational::zero();
    }
    let total = a1 + a2 + b.iter().map(|&x| x as i64).sum::<i64>();
    if total != d as i64 - 1 {
        return Rational::zero();
    }
    if d == 1 {
        return Rational::from_integer(1.into());
    }
    // The flecks are interchangeable, so any one with exponent 0 may be
    // forgotten. Exponents summing to d − 1 over d flecks leave one at 0.
    let Some(pos) = b.iter().position(|&x| x == 0) else {
        return Rational::zero();
    };
    let removed = b.remove(pos);
    let value = recurse(d - 1, a1 - 1, a2, b) + recurse(d - 1, a1, a2 - 1, b);
    b.insert(pos, removed);
    value
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Compare the two computations for every `d ≤ d_max` and every split of
/// `d − 1` (and of `d`, which must give 0) among `a1`, `a2` and the `d` fleck
/// exponents. Returns the number of cases compared and the first mismatch.
pub fn m02d_dual_oracle_mismatch(d_max: u32) -> Result<(usize, Option<String>)> {
    let mut count = 0;
    for d in 1..=d_max {
        for total in [d - 1, d] {
            for split in compositions(total, d as usize + 2) {
                let (a1, a2, b) = (split[0], split[1], &split[2..]);
                let closed = m02d_psi_integral(d, a1, a2, b)?;
                let recursive = m02d_psi_integral_recursive(d, a1, a2, b)?;
                count += 1;
                if closed != recursive {
                    return Ok((count, Some(format!("d={d} a=({a1},{a2}) b={b:?}: {closed} vs {recursive}"))));
                }
            }
        }
    }
    Ok((count, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_kernel::rational::rat;

    #[test]
    fn closed_form_examples() {
        assert_eq!(m02d_psi_integral(3, 1, 1, &[]).unwrap(), rat(2));
        assert_eq!(m02d_psi_integral(1, 0, 0, &[]).unwrap(), rat(1));
        assert_eq!(m02d_psi_integral(3, 0, 1, &[1]).unwrap(), rat(0));
        assert_eq!(m02d_psi_integral(4, 1, 1, &[]).unwrap(), rat(0));
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(m02d_psi_integral_recursive(4, 2, 1, &[]).unwrap(), rat(3));
        assert_eq!(m02d_psi_integral_recursive(2, 1, 0, &[]).unwrap(), rat(1));
        assert_eq!(m02d_psi_integral_recursive(3, 0, 0, &[]).unwrap(), rat(0));
        assert_eq!(m02d_psi_integral_recursive(3, 0, 0, &[1, 1]).unwrap(), rat(0));
    }

    #[test]
    fn oracles_agree_through_six_flecks() {
        let (count, mismatch) = m02d_dual_oracle_mismatch(6).unwrap();
        assert_eq!(mismatch, None);
        assert!(count > 1000);
    }

    #[test]
    fn too_many_fleck_exponents() {
        assert!(matches!(m02d_psi_integral(2, 1, 0, &[0, 0, 0]), Err(Error::Range(_))));
        assert!(matches!(m02d_psi_integral_recursive(0, 0, 0, &[]), Err(Error::Range(_))));
    }
}

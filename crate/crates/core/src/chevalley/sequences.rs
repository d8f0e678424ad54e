use alloc::vec::Vec;

use crate::root::{check_rank, Letter};
use crate::{Error, Result};

/// `S_{m,j}`: strictly decreasing sequences `m > j_1 > ⋯ > j_r = j` in the
/// order `1 < ⋯ < n < n̄ < ⋯ < 1̄`, listed by length and then
/// lexicographically from the tail.
pub fn enumerate_s(n: usize, m: Letter, j: Letter) -> Result<Vec<Vec<Letter>>> {
    check_rank(n)?;
    let (pm, pj) = (m.check(n)?.pos(n), j.check(n)?.pos(n));
    if pj >= pm {
        return Err(Error::Precondition(alloc::format!("S_{{{m},{j}}} needs {j} < {m}")));
    }
    let between: Vec<Letter> = (pj + 1..pm).map(|p| Letter::from_pos(n, p)).collect();
    let mut out: Vec<Vec<Letter>> = (0u32..1 << between.len())
        .map(|mask| {
            let mut s: Vec<Letter> = between
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &l)| l)
                .rev()
                .collect();
            s.push(j);
            s
        })
        .collect();
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(n: usize, s: &[i8]) -> Vec<Letter> {
        s.iter().map(|&k| Letter::new(k).check(n).unwrap()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            enumerate_s(3, Letter::plain(3), Letter::plain(2)).unwrap(),
            [letters(3, &[2])]
        );
        assert_eq!(
            enumerate_s(3, Letter::barred(2), Letter::barred(3)).unwrap(),
            [letters(3, &[-3])]
        );
        let s = enumerate_s(3, Letter::barred(2), Letter::plain(1)).unwrap();
        let expect: Vec<Vec<Letter>> = [
            &[1][..],
            &[2, 1],
            &[3, 1],
            &[-3, 1],
            &[3, 2, 1],
            &[-3, 2, 1],
            &[-3, 3, 1],
            &[-3, 3, 2, 1],
        ]
        .iter()
        .map(|s| letters(3, s))
        .collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn sizes_are_powers_of_two() {
        let n = 4;
        for pm in 1..=2 * n {
            for pj in 1..pm {
                let (m, j) = (Letter::from_pos(n, pm), Letter::from_pos(n, pj));
                let s = enumerate_s(n, m, j).unwrap();
                assert_eq!(s.len(), 1 << (pm - pj - 1));
                for seq in &s {
                    assert_eq!(*seq.last().unwrap(), j);
                    assert!(seq.windows(2).all(|p| p[0] > p[1]));
                    assert!(seq[0] < m);
                }
            }
        }
        assert!(enumerate_s(3, Letter::plain(1), Letter::plain(2)).is_err());
        assert!(enumerate_s(3, Letter::plain(2), Letter::plain(2)).is_err());
    }
}

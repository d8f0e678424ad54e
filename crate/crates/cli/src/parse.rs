//! Parsers for the small values taken on the command line.

use anyhow::{anyhow, bail, Result};
use qalcove_core::chevalley::Variant;
use qalcove_core::{Coroot, Letter, WeylElt};

pub fn weyl(n: usize, s: &str) -> Result<WeylElt> {
    WeylElt::parse(n, s).map_err(|e| anyhow!("bad element `{s}`: {e}"))
}

/// `3`, `-3`, `3bar`, `3̄` or `~3`.
pub fn letter(n: usize, s: &str) -> Result<Letter> {
    let t = s.trim();
    let (digits, barred) = if let Some(r) = t.strip_prefix('-').or_else(|| t.strip_prefix('~')) {
        (r, true)
    } else if let Some(r) = t.strip_suffix("bar").or_else(|| t.strip_suffix('\u{0304}')) {
        (r, true)
    } else {
        (t, false)
    };
    let k: usize = digits.parse().map_err(|_| anyhow!("bad letter `{s}`"))?;
    if k == 0 || k > n {
        bail!("letter `{s}` out of range for rank {n}");
    }
    Ok(if barred { Letter::barred(k) } else { Letter::plain(k) })
}

/// Comma separated simple coroot coordinates.
pub fn coroot(n: usize, s: &str) -> Result<Coroot> {
    let v: Vec<i32> = s
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| anyhow!("bad coordinate in `{s}`")))
        .collect::<Result<_>>()?;
    if v.len() != n {
        bail!("`{s}` has {} coordinates, rank is {n}", v.len());
    }
    Ok(Coroot::from_alpha_coords(&v))
}

/// `full`, `cf` or `conj:L`.
pub fn variant(s: &str) -> Result<Variant> {
    match s.trim() {
        "full" => Ok(Variant::Full),
        "cf" | "cancel-free" => Ok(Variant::CancelFree),
        t => {
            let l = t
                .strip_prefix("conj:")
                .and_then(|l| l.parse().ok())
                .ok_or_else(|| anyhow!("bad variant `{s}`; expected full, cf or conj:L"))?;
            Ok(Variant::Conjecture(l))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters() {
        assert_eq!(letter(3, "2").unwrap(), Letter::plain(2));
        for s in ["-2", "2bar", "2\u{0304}", "~2"] {
            assert_eq!(letter(3, s).unwrap(), Letter::barred(2), "{s}");
        }
        assert!(letter(3, "4").is_err());
        assert!(letter(3, "0").is_err());
        assert!(letter(3, "x").is_err());
    }

    #[test]
    fn coroots_and_variants() {
        assert_eq!(coroot(3, "1, 0,-2").unwrap(), Coroot::from_alpha_coords(&[1, 0, -2]));
        assert!(coroot(3, "1,0").is_err());
        assert_eq!(variant("conj:3").unwrap(), Variant::Conjecture(3));
        assert_eq!(variant("cf").unwrap(), Variant::CancelFree);
        assert!(variant("conj:").is_err());
    }
}

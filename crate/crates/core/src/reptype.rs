//! Representation type of Schur algebras and Schur superalgebras.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::schursuper::SchurSuper;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Semisimple,
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Semisimple => "semisimple",
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        })
    }
}

impl FromStr for RepType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semisimple" => Ok(RepType::Semisimple),
            "finite" => Ok(RepType::Finite),
            "tame" => Ok(RepType::Tame),
            "wild" => Ok(RepType::Wild),
            _ => Err(Error::Parse(format!("unknown verdict {s:?}"))),
        }
    }
}

fn check_characteristic(p: u32) -> Result<()> {
    if p == 0 || is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidCharacteristic(p))
    }
}

/// Representation type of `S(m,d)` over an algebraically closed field of
/// characteristic `p` (`0` allowed).
pub fn classify_schur(m: usize, d: usize, p: u32) -> Result<RepType> {
    explain_schur(m, d, p).map(|(v, _)| v)
}

/// [`classify_schur`] together with the case that decided it.
pub fn explain_schur(m: usize, d: usize, p: u32) -> Result<(RepType, &'static str)> {
    use RepType::*;
    check_characteristic(p)?;
    if m == 0 {
        return Err(Error::Invalid("S(0,d) is not considered".into()));
    }
    let pu = p as usize;
    Ok(if p == 0 {
        (Semisimple, "characteristic 0")
    } else if m == 1 {
        (Semisimple, "m = 1")
    } else if d < pu {
        (Semisimple, "d < p")
    } else if p == 2 && m == 2 && d == 3 {
        (Semisimple, "p = 2, m = 2, d = 3")
    } else if m >= 3 && d < 2 * pu {
        (Finite, "m >= 3 and p <= d < 2p")
    } else if m == 2 && d < pu * pu {
        (Finite, "m = 2 and p <= d < p^2")
    } else if p == 2 && m == 2 && (d == 5 || d == 7) {
        (Finite, "p = 2, m = 2, d in {5, 7}")
    } else if p == 3 && m == 3 && (d == 7 || d == 8) {
        (Tame, "p = 3, m = 3, d in {7, 8}")
    } else if p == 3 && m == 2 && (9..=11).contains(&d) {
        (Tame, "p = 3, m = 2, d in {9, 10, 11}")
    } else if p == 2 && m == 2 && (d == 4 || d == 9) {
        (Tame, "p = 2, m = 2, d in {4, 9}")
    } else if p == 2 && m == 2 && d == 11 {
        (Tame, "p = 2, m = 2, d = 11")
    } else {
        (Wild, "none of the listed cases")
    })
}

/// Representation type of `S(m|n,d)`. Characteristic 2 and the purely even
/// or purely odd cases reduce to the ordinary Schur algebra.
pub fn classify_super(m: usize, n: usize, d: usize, p: u32) -> Result<RepType> {
    explain_super(m, n, d, p).map(|(v, _)| v)
}

/// [`classify_super`] together with the case that decided it.
pub fn explain_super(m: usize, n: usize, d: usize, p: u32) -> Result<(RepType, String)> {
    use RepType::*;
    check_characteristic(p)?;
    if m + n == 0 {
        return Err(Error::Invalid("S(0|0,d) is not considered".into()));
    }
    if p == 2 || m == 0 || n == 0 {
        let why = if p == 2 { "p = 2, as S(m+n,d)" } else { "one side empty, as S(m+n,d)" };
        let (v, clause) = explain_schur(m + n, d, p)?;
        return Ok((v, format!("{why}: {clause}")));
    }
    let pu = p as usize;
    let (v, why) = if p == 0 {
        (Semisimple, "characteristic 0")
    } else if d < pu {
        (Semisimple, "d < p")
    } else if m == 1 && n == 1 && !d.is_multiple_of(pu) {
        (Semisimple, "m = n = 1 and p does not divide d")
    } else if d < 2 * pu {
        (Finite, "p <= d < 2p")
    } else if m == 1 && n == 1 {
        (Finite, "m = n = 1 and p divides d")
    } else {
        (Wild, "all remaining cases")
    };
    Ok((v, why.to_string()))
}

/// Semisimplicity of `S(m|n,d)` decided by computing the radical of its
/// Morita-reduced corner.
pub fn computed_semisimple(m: usize, n: usize, d: usize, p: u32) -> Result<bool> {
    let s = SchurSuper::new(m, n, d, p)?;
    s.corner_semisimple(&s.sorted_weights())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schursuper::schur_super;
    use RepType::*;

    #[test]
    fn super_examples() {
        assert_eq!(classify_super(1, 1, 5, 3).unwrap(), Semisimple);
        assert_eq!(classify_super(2, 1, 5, 3).unwrap(), Finite);
        assert_eq!(classify_super(1, 1, 6, 3).unwrap(), Finite);
        assert_eq!(classify_super(2, 1, 6, 3).unwrap(), Wild);
        assert_eq!(classify_super(4, 7, 30, 0).unwrap(), Semisimple);
        assert_eq!(classify_super(2, 2, 0, 5).unwrap(), Semisimple);
        assert_eq!(classify_super(1, 1, 4, 2).unwrap(), classify_schur(2, 4, 2).unwrap());
        assert_eq!(classify_super(3, 0, 7, 3).unwrap(), Tame);
        assert!(matches!(classify_super(1, 1, 3, 9), Err(Error::InvalidCharacteristic(9))));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(classify_schur(2, 3, 2).unwrap(), Semisimple);
        assert_eq!(classify_schur(3, 7, 3).unwrap(), Tame);
        assert_eq!(classify_schur(2, 11, 2).unwrap(), Tame);
        assert_eq!(classify_schur(2, 5, 2).unwrap(), Finite);
        assert_eq!(classify_schur(3, 6, 3).unwrap(), Wild);
        assert_eq!(classify_schur(1, 100, 3).unwrap(), Semisimple);
        assert_eq!(classify_schur(2, 8, 3).unwrap(), Finite);
        assert_eq!(classify_schur(2, 9, 3).unwrap(), Tame);
        assert_eq!(classify_schur(2, 12, 3).unwrap(), Wild);
        assert!(matches!(classify_schur(2, 3, 1), Err(Error::InvalidCharacteristic(1))));
    }

    #[test]
    fn explanations_name_the_deciding_case() {
        assert_eq!(explain_super(2, 1, 6, 3).unwrap(), (Wild, "all remaining cases".to_string()));
        assert_eq!(explain_super(1, 1, 6, 3).unwrap().1, "m = n = 1 and p divides d");
        assert!(explain_super(1, 1, 4, 2).unwrap().1.starts_with("p = 2"));
        assert_eq!(explain_schur(2, 11, 2).unwrap(), (Tame, "p = 2, m = 2, d = 11"));
    }

    #[test]
    fn verdict_strings_round_trip() {
        for v in [Semisimple, Finite, Tame, Wild] {
            assert_eq!(v.to_string().parse::<RepType>().unwrap(), v);
            assert_eq!(serde_json::to_value(v).unwrap(), serde_json::json!(v.to_string()));
        }
        assert!("mild".parse::<RepType>().is_err());
    }

    #[test]
    fn super_laws() {
        for p in [0u32, 3, 5, 7, 11] {
            for m in 1..=5 {
                for n in 1..=5 {
                    for d in 0..=40 {
                        let v = classify_super(m, n, d, p).unwrap();
                        assert_ne!(v, Tame);
                        assert_eq!(v, classify_super(n, m, d, p).unwrap());
                        assert_eq!(v, classify_super(m.min(n), m.max(n), d, p).unwrap());
                        if v == Wild {
                            assert_eq!(classify_super(m + 1, n, d, p).unwrap(), Wild);
                            assert_eq!(classify_super(m, n + 1, d, p).unwrap(), Wild);
                        }
                    }
                }
            }
            if p != 0 {
                for d in 0..=40 {
                    if classify_super(2, 1, d, p).unwrap() == Wild {
                        for c in 1..=4 {
                            assert_eq!(classify_super(2, 1, d + c * p as usize, p).unwrap(), Wild);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corner_semisimplicity_matches_full_algebra() {
        for (m, n, d, p) in [(1, 1, 2, 3), (1, 1, 3, 3), (2, 1, 2, 3), (2, 1, 3, 3), (1, 2, 4, 5), (2, 0, 3, 3)] {
            let full = schur_super(m, n, d, p).unwrap().is_semisimple();
            assert_eq!(computed_semisimple(m, n, d, p).unwrap(), full, "({m}|{n},{d}) p={p}");
        }
    }

    #[test]
    fn semisimple_verdicts_agree_with_computation() {
        for p in [3u32, 5] {
            for m in 0..=5usize {
                for n in 0..=5usize {
                    if m + n == 0 {
                        continue;
                    }
                    let mut d = 1;
                    while d <= 9 && ((m + n) as u128).pow(d as u32) <= 729 {
                        let predicted = classify_super(m, n, d, p).unwrap() == Semisimple;
                        assert_eq!(computed_semisimple(m, n, d, p).unwrap(), predicted, "({m}|{n},{d}) p={p}");
                        d += 1;
                    }
                }
            }
        }
    }
}

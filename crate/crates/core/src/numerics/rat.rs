use std::sync::Mutex;

pub use rug::{Integer, Rational as Rat};

use crate::error::{Error, Result};

/// Shorthand for `num/den`. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::from((num, den))
}

/// Parses `"a/b"`, `"a"` or a terminating decimal such as `"0.25"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Ok(v) = s.parse::<Rat>() {
        return Ok(v);
    }
    parse_decimal(s).ok_or_else(|| Error::Config(format!("not a rational number: {s:?}")))
}

fn parse_decimal(s: &str) -> Option<Rat> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.')?;
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num: Integer = digits.parse().ok()?;
    let den = Integer::from(Integer::u_pow_u(10, frac_part.len() as u32));
    let v = Rat::from((num, den));
    Some(if neg { -v } else { v })
}

static FACTORIALS: Mutex<Vec<Integer>> = Mutex::new(Vec::new());

/// `n!`, memoized.
pub fn factorial(n: usize) -> Integer {
    let mut table = FACTORIALS.lock().expect("factorial table poisoned");
    if table.is_empty() {
        table.push(Integer::from(1));
    }
    while table.len() <= n {
        let k = table.len();
        let next = Integer::from(&table[k - 1] * k as u64);
        table.push(next);
    }
    table[n].clone()
}

/// Ordinary binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}

pub fn rat_pow(x: &Rat, k: usize) -> Rat {
    let mut out = Rat::from(1);
    for _ in 0..k {
        out *= x;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rat("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rat("0.6").unwrap(), rat(3, 5));
        assert_eq!(parse_rat("-.25").unwrap(), rat(-1, 4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat(".").is_err());
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(rat(10, -4).to_string(), "-5/2");
        assert_eq!(rat(4, 2).to_string(), "2");
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(10), 3_628_800);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(rat_pow(&rat(2, 3), 3), rat(8, 27));
    }
}

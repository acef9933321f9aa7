//! `%g`-style number formatting shared by the CLI and report writers.

/// Format `x` with `digits` significant digits, trailing zeros removed,
/// switching to exponent form outside `[1e-4, 10^digits)` like C's `%g`.
pub fn sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    // The exponent after rounding to `digits` places decides the layout.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::sig;

    #[test]
    fn matches_c_printf() {
        assert_eq!(sig(std::f64::consts::PI / 4.0, 12), "0.785398163397");
        assert_eq!(sig(1.0, 12), "1");
        assert_eq!(sig(-2.5, 12), "-2.5");
        assert_eq!(sig(123456789012.0, 12), "123456789012");
        assert_eq!(sig(1234567890123.0, 12), "1.23456789012e+12");
        assert_eq!(sig(0.0001, 12), "0.0001");
        assert_eq!(sig(0.00001234, 12), "1.234e-05");
        assert_eq!(sig(9.9999999999999, 12), "10");
        assert_eq!(sig(f64::NAN, 12), "NaN");
        assert_eq!(sig(0.0, 12), "0");
    }
}

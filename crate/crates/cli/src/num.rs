use num_complex::Complex64;

/// `%.6g`-style formatting: six significant digits, trailing zeros dropped.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    } else {
        format!("{x:.5e}")
    }
}

pub fn complex6(z: Complex64) -> String {
    if z.im == 0.0 {
        sig6(z.re)
    } else if z.im > 0.0 {
        format!("{}+{}i", sig6(z.re), sig6(z.im))
    } else {
        format!("{}-{}i", sig6(z.re), sig6(-z.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(0.4), "0.4");
        assert_eq!(sig6(1.05), "1.05");
        assert_eq!(sig6(0.35000000000000003), "0.35");
        assert_eq!(sig6(-0.95), "-0.95");
        assert_eq!(sig6(-0.3070535638109949), "-0.307054");
        assert_eq!(sig6(-1.0), "-1");
        assert_eq!(sig6(1.0 / 3.0), "0.333333");
        assert_eq!(sig6(123456789.0), "123456789");
        assert_eq!(sig6(1.5e-9), "1.50000e-9");
        assert_eq!(sig6(-1e-17), "-1.00000e-17");
        assert_eq!(sig6(0.0), "0");
    }

    #[test]
    fn complex_forms() {
        assert_eq!(complex6(Complex64::new(-0.5, 0.8660254037844386)), "-0.5+0.866025i");
        assert_eq!(complex6(Complex64::new(-0.5, -0.25)), "-0.5-0.25i");
        assert_eq!(complex6(Complex64::new(0.25, 0.0)), "0.25");
    }
}

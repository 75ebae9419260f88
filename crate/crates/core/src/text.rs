//! Plain-decimal float rendering shared by the QASM emitter, the CSV
//! writers, and the CLI. 17 significant digits round-trip any f64 bit-exactly.

const SIGNIFICANT_DIGITS: i32 = 17;

/// Render `x` as a plain decimal literal with 17 significant digits.
pub fn sig17(x: f64) -> String {
    debug_assert!(x.is_finite(), "sig17 expects finite values, got {x}");
    if x == 0.0 {
        return "0.0000000000000000".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (SIGNIFICANT_DIGITS - 1 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_renders_with_seventeen_significant_digits() {
        assert_eq!(sig17(std::f64::consts::PI), "3.1415926535897931");
    }

    #[test]
    fn magnitudes_above_one_shed_decimal_places() {
        assert_eq!(sig17(31.0), "31.000000000000000");
        assert_eq!(sig17(15.5), "15.500000000000000");
    }

    #[test]
    fn small_magnitudes_keep_seventeen_significant_digits() {
        assert_eq!(sig17(0.03125), "0.031250000000000000");
        assert_eq!(sig17(0.96875), "0.96875000000000000");
    }

    #[test]
    fn zero_and_negatives() {
        assert_eq!(sig17(0.0), "0.0000000000000000");
        assert_eq!(sig17(-15.5), "-15.500000000000000");
    }

    #[test]
    fn round_trips_are_bit_exact() {
        // Deterministic sweep over awkward magnitudes, including values that
        // land just below a power of ten.
        let mut x = 1.2345678901234567e-6;
        for _ in 0..60 {
            let back: f64 = sig17(x).parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{x} -> {}", sig17(x));
            x *= 1.7182818;
        }
        for v in [0.9999999999999999, 1.0000000000000002, 6.283185307179586] {
            let back: f64 = sig17(v).parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits());
        }
    }
}

use super::{ConfigError, FMatrix};

pub const BUILTIN_NAMES: [&str; 3] = ["F0", "F1", "F7d"];

// Entries are (a, b) for a + b√2.

/// The standard configuration: two parallel planes, four unit spheres and two half-unit spheres.
pub fn f0() -> FMatrix {
    FMatrix::from_pairs(&[
        [(2, 0), (0, 0), (0, 0), (0, 0), (1, 0)],
        [(2, 0), (0, 0), (0, 0), (0, 0), (-1, 0)],
        [(1, 0), (1, 0), (0, 1), (0, 0), (0, 0)],
        [(1, 0), (1, 0), (0, 0), (0, 1), (0, 0)],
        [(1, 0), (1, 0), (0, 0), (0, 0), (0, 0)],
    ])
}

/// The configuration adjacent to [`f0`] along its first four spheres.
pub fn f0_prime() -> FMatrix {
    FMatrix::from_pairs(&[
        [(2, 0), (0, 0), (0, 0), (0, 0), (1, 0)],
        [(2, 0), (0, 0), (0, 0), (0, 0), (-1, 0)],
        [(1, 0), (1, 0), (0, 1), (0, 0), (0, 0)],
        [(1, 0), (1, 0), (0, 0), (0, 1), (0, 0)],
        [(5, 0), (1, 0), (0, 1), (0, 1), (0, 0)],
    ])
}

/// Bounded packing with outer sphere of bend −1.
pub fn f1() -> FMatrix {
    FMatrix::from_pairs(&[
        [(4, 0), (2, 0), (0, 0), (0, 2), (1, 0)],
        [(4, 0), (2, 0), (0, 0), (0, 2), (-1, 0)],
        [(3, 0), (3, 0), (0, 1), (0, 2), (0, 0)],
        [(-1, 0), (-1, 0), (0, 0), (0, -1), (0, 0)],
        [(3, 0), (3, 0), (0, 0), (0, 2), (0, 0)],
    ])
}

/// Bounded packing with outer sphere of bend −7.
pub fn f7d() -> FMatrix {
    FMatrix::from_pairs(&[
        [(34, 0), (20, 0), (0, 18), (0, 2), (-5, 0)],
        [(18, 0), (12, 0), (0, 10), (0, 2), (-3, 0)],
        [(29, 0), (17, 0), (0, 15), (0, 2), (-6, 0)],
        [(-11, 0), (-7, 0), (0, -6), (0, -1), (2, 0)],
        [(33, 0), (21, 0), (0, 18), (0, 2), (-6, 0)],
    ])
}

/// Looks up `F0`, `F1` or `F7d`, with or without a `builtin:` prefix.
pub fn builtin(name: &str) -> Result<FMatrix, ConfigError> {
    match name.strip_prefix("builtin:").unwrap_or(name) {
        "F0" => Ok(f0()),
        "F1" => Ok(f1()),
        "F7d" => Ok(f7d()),
        other => Err(ConfigError::UnknownSeed(other.to_string())),
    }
}

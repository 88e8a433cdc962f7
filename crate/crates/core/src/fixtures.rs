//! Input data: the matrix fixture file and the polynomials and series printed in the
//! source material, kept as canonical text.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// The bundled matrix fixture.
pub const EMBEDDED_MATRICES: &str = include_str!("../fixtures/matrices.txt");

/// Names every fixture must define, with their shapes.
pub const REQUIRED: [(&str, usize, usize); 12] = [
    ("A3", 3, 3),
    ("B3", 3, 3),
    ("C3", 3, 3),
    ("DW_A", 7, 7),
    ("DW_B", 7, 7),
    ("DW_C", 7, 7),
    ("DWp_A", 7, 7),
    ("DWp_B", 7, 7),
    ("DWd_A", 6, 6),
    ("DWd_B", 6, 6),
    ("OMEGA", 7, 7),
    ("P_SPLIT", 7, 7),
];

/// Named GF(2) matrices read from a fixture file.
///
/// ```text
/// MATRIX <name> <rows>x<cols>
/// 0 1 0 ...
/// ```
///
/// Blank lines and lines starting with `#` are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFixtures {
    matrices: BTreeMap<String, BitMatrix>,
}

impl MatrixFixtures {
    pub fn embedded() -> Self {
        MatrixFixtures::parse(EMBEDDED_MATRICES).expect("bundled fixture is valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
        MatrixFixtures::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let fail = |line: usize, msg: &str| Error::Fixture(format!("line {}: {msg}", line + 1));
        let mut matrices = BTreeMap::new();
        let mut lines = text.lines().enumerate().filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
        while let Some((no, line)) = lines.next() {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "MATRIX" {
                return Err(fail(no, "expected `MATRIX <name> <rows>x<cols>`"));
            }
            let name = parts[1].to_string();
            let (r, c) = parts[2].split_once('x').ok_or_else(|| fail(no, "bad shape"))?;
            let r: usize = r.parse().map_err(|_| fail(no, "bad row count"))?;
            let c: usize = c.parse().map_err(|_| fail(no, "bad column count"))?;
            if r == 0 || c == 0 || c > 64 {
                return Err(fail(no, "unsupported shape"));
            }
            let mut rows = Vec::with_capacity(r);
            for _ in 0..r {
                let (no, line) = lines.next().ok_or_else(|| fail(no, "matrix truncated"))?;
                let row = line
                    .split_whitespace()
                    .map(|t| match t {
                        "0" => Ok(0u8),
                        "1" => Ok(1u8),
                        _ => Err(fail(no, "entries must be 0 or 1")),
                    })
                    .collect::<Result<Vec<u8>>>()?;
                if row.len() != c {
                    return Err(fail(no, "wrong row length"));
                }
                rows.push(row);
            }
            let m = BitMatrix::from_rows(&rows)?;
            if matrices.insert(name.clone(), m).is_some() {
                return Err(fail(no, &format!("duplicate matrix {name}")));
            }
        }
        for (name, r, c) in REQUIRED {
            match matrices.get(name) {
                None => return Err(Error::Fixture(format!("missing matrix {name}"))),
                Some(m) if m.rows() != r || m.cols() != c => {
                    return Err(Error::Fixture(format!("matrix {name} must be {r}x{c}")))
                }
                Some(_) => {}
            }
        }
        Ok(MatrixFixtures { matrices })
    }

    pub fn get(&self, name: &str) -> Result<&BitMatrix> {
        self.matrices.get(name).ok_or_else(|| Error::Fixture(format!("missing matrix {name}")))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.matrices.keys().map(String::as_str)
    }
}

/// Printed polynomials and series.
pub mod printed {
    /// Primary invariants of the 7-dimensional permutation module, in `w1..w7`.
    pub const F_HAT: [&str; 7] = [
        "w1 + w2 + w3 + w4 + w5 + w6 + w7",
        "w1*w2 + w1*w3 + w1*w4 + w1*w5 + w1*w6 + w1*w7 + w2*w3 + w2*w4 + w2*w5 + w2*w6 + w2*w7 \
         + w3*w4 + w3*w5 + w3*w6 + w3*w7 + w4*w5 + w4*w6 + w4*w7 + w5*w6 + w5*w7 + w6*w7",
        "w1*w2*w3 + w1*w2*w4 + w1*w2*w5 + w1*w2*w7 + w1*w3*w4 + w1*w3*w5 + w1*w3*w6 + w1*w4*w6 \
         + w1*w4*w7 + w1*w5*w6 + w1*w5*w7 + w1*w6*w7 + w2*w3*w5 + w2*w3*w6 + w2*w3*w7 + w2*w4*w5 \
         + w2*w4*w6 + w2*w4*w7 + w2*w5*w6 + w2*w6*w7 + w3*w4*w5 + w3*w4*w6 + w3*w4*w7 + w3*w5*w7 \
         + w3*w6*w7 + w4*w5*w6 + w4*w5*w7 + w5*w6*w7",
        "w1*w2*w6 + w1*w3*w7 + w1*w4*w5 + w2*w3*w4 + w2*w5*w7 + w3*w5*w6 + w4*w6*w7",
        "w1*w2*w3*w5 + w1*w2*w4*w7 + w1*w3*w4*w6 + w1*w5*w6*w7 + w2*w3*w6*w7 + w2*w4*w5*w6 + w3*w4*w5*w7",
        "w1*w2*w3*w4*w5*w6 + w1*w2*w3*w4*w5*w7 + w1*w2*w3*w4*w6*w7 + w1*w2*w3*w5*w6*w7 \
         + w1*w2*w4*w5*w6*w7 + w1*w3*w4*w5*w6*w7 + w2*w3*w4*w5*w6*w7",
        "w1*w2*w3*w4*w5*w6*w7",
    ];

    pub const F_HAT_DEGREES: [u32; 7] = [1, 2, 3, 3, 4, 6, 7];

    /// The invariant quadratic form, in `a..f`.
    pub const F1: &str = "a*e + b*f + c*d + d*e + d*f + e*f + d^2 + e^2 + f^2";

    pub const F_DEGREES: [u32; 6] = [2, 3, 3, 4, 6, 7];

    /// Dickson invariants in `x, y, z`.
    pub const C2: &str = "x^4 + y^4 + z^4 + x^2*y^2 + x^2*z^2 + y^2*z^2 + x^2*y*z + x*y^2*z + x*y*z^2";
    pub const C1: &str = "x^4*y^2 + x^2*y^4 + x^4*z^2 + x^2*z^4 + y^4*z^2 + y^2*z^4 + x^4*y*z + x*y^4*z \
                          + x*y*z^4 + x^2*y^2*z^2";
    pub const C0: &str = "x^4*y^2*z + x^4*y*z^2 + x^2*y^4*z + x*y^4*z^2 + x^2*y*z^4 + x*y^2*z^4";

    /// Invariant quartic of the natural module (a twist of the Klein quartic).
    pub const KLEIN_TWIST: &str = "x^4 + y^4 + z^4 + x^2*y^2 + y^2*z^2 + x^2*z^2 + x^2*y*z + x*y^2*z + x*y*z^2";

    /// Hilbert series numerator over `(1-t^2)(1-t^3)^2(1-t^4)(1-t^6)(1-t^7)`.
    pub const HILBERT_NUMERATOR: [i64; 20] = [1, 0, 0, 0, 1, 2, 1, 1, 1, 2, 2, 1, 1, 1, 2, 1, 0, 0, 0, 1];
    pub const HILBERT_DENOMINATOR: [u32; 6] = [2, 3, 3, 4, 6, 7];

    /// The same series over `(1-t^2)(1-t^3)^2(1-t^4)^2(1-t^7)`.
    pub const REWRITTEN_NUMERATOR: [i64; 18] = [1, 0, 0, 0, 0, 2, 2, 1, 0, 0, 1, 2, 2, 0, 0, 0, 0, 1];
    pub const REWRITTEN_DENOMINATOR: [u32; 6] = [2, 3, 3, 4, 4, 7];

    pub const SECONDARY_DEGREES: [u32; 18] = [0, 4, 5, 5, 6, 7, 8, 9, 9, 10, 10, 11, 12, 13, 14, 14, 15, 19];

    /// `g_7..g_18` as products of `g_2..g_6`: 1-based factor indices with their degree.
    pub const PRODUCT_TABLE: [(&[usize], u32); 12] = [
        (&[2, 2], 8),
        (&[2, 3], 9),
        (&[2, 4], 9),
        (&[2, 5], 10),
        (&[3, 4], 10),
        (&[2, 6], 11),
        (&[2, 2, 2], 12),
        (&[2, 2, 3], 13),
        (&[2, 2, 5], 14),
        (&[2, 3, 4], 14),
        (&[2, 2, 6], 15),
        (&[2, 2, 2, 6], 19),
    ];

    pub const SUBGROUP_PRIMARY_DEGREES: [u32; 6] = [1, 1, 2, 2, 2, 4];
    pub const SUBGROUP_SECONDARY_DEGREES: [u32; 4] = [0, 3, 3, 6];

    /// Degrees of a rewritten-series hsop that does not exist for the modular ring.
    pub const INFEASIBLE_DEGREES: [u32; 6] = [2, 3, 3, 4, 4, 7];

    pub const GENERATOR_DEGREES: [u32; 6] = [0, 4, 5, 5, 6, 7];

    /// Images of the generators on the 7 permuted basis vectors.
    pub const PERMUTATION_A: &str = "(1,4)(2,7)";
    pub const PERMUTATION_B: &str = "(2,4,3)(5,7,6)";
}

use crate::error::{Error, Result};

/// Graph families whose line-graph metric dimension has a known closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineFamily {
    /// `K_n`, valid for `n >= 6`.
    Complete { n: usize },
    /// `K_{m,n}`; the parts may be given in either order.
    CompleteBipartite { m: usize, n: usize },
    /// `K_{1,n}`, `n >= 2`.
    Star { n: usize },
    /// Path on `n >= 3` vertices.
    Path { n: usize },
    /// Directed cycle of length `n >= 2`.
    DirectedCycle { n: usize },
}

/// Published value of the line-graph metric dimension for `family`.
/// Parameters outside the range where the formula is known are refused.
pub fn known_line_mu(family: LineFamily) -> Result<usize> {
    let unsupported = |what: String| Err(Error::Unsupported(what));
    match family {
        LineFamily::Complete { n } if n >= 6 => Ok((2 * n).div_ceil(3)),
        LineFamily::Complete { n } => unsupported(format!("L(K_{n}) needs n >= 6")),
        LineFamily::CompleteBipartite { m, n } => {
            let (m, n) = (m.min(n), m.max(n));
            if m == 0 || n < 2 {
                unsupported(format!("L(K_{{{m},{n}}}) needs parts >= 1 and larger part >= 2"))
            } else if n >= 2 * m {
                Ok(n - 1)
            } else {
                Ok(2 * (m + n - 1) / 3)
            }
        }
        LineFamily::Star { n } if n >= 2 => Ok(n - 1),
        LineFamily::Star { n } => unsupported(format!("L(K_{{1,{n}}}) needs n >= 2")),
        LineFamily::Path { n } if n >= 3 => Ok(1),
        LineFamily::Path { n } => unsupported(format!("L(P_{n}) needs n >= 3")),
        LineFamily::DirectedCycle { n } if n >= 2 => Ok(1),
        LineFamily::DirectedCycle { n } => unsupported(format!("directed C_{n} needs n >= 2")),
    }
}

use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation. The message
    /// names the violated precondition.
    Domain(&'static str),
    /// The quantum numbers give l̃ < 0, or a negative radicand in l̃.
    Inadmissible { n_theta: u32, m: i32, reason: &'static str },
    /// The result does not fit in an `f64`.
    Overflow(&'static str),
    /// Halving the grid spacing moved an eigenvalue by more than the allowed
    /// fraction of its gap to the next one.
    GridTooCoarse { index: usize, shift: f64, gap: f64 },
    /// The radial box is too short for the requested eigenvalues.
    GridTooShort { required_hi: f64, hi: f64 },
    /// An iterative or adaptive procedure stopped without meeting its target.
    NonConvergence(&'static str),
    /// The lattice step is not resolved by the radial grid.
    LatticeUnresolved { width: f64, spacing: f64, reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::Inadmissible { n_theta, m, reason } => {
                write!(f, "inadmissible state (n_theta={n_theta}, m={m}): {reason}")
            }
            Error::Overflow(msg) => write!(f, "overflow: {msg}"),
            Error::GridTooCoarse { index, shift, gap } => write!(
                f,
                "grid too coarse: eigenvalue {index} moved by {shift:e} under h -> h/2 (gap {gap:e})"
            ),
            Error::GridTooShort { required_hi, hi } => write!(
                f,
                "radial grid too short: hi = {hi} but at least {required_hi} is needed"
            ),
            Error::NonConvergence(msg) => write!(f, "no convergence: {msg}"),
            Error::LatticeUnresolved { width, spacing, reason } => write!(
                f,
                "lattice unresolved ({reason}): slice width {width:e}, grid spacing {spacing:e}"
            ),
        }
    }
}

impl core::error::Error for Error {}

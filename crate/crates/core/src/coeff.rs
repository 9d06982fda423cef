use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

/// Exact signed coefficients for group-ring and module elements.
///
/// Any signed number type with exact arithmetic works: `BigInt`, the machine
/// integers, `Ratio`. Machine integers can overflow on long braid words.
pub trait Coefficient:
    Signed + Clone + Eq + Ord + fmt::Debug + fmt::Display + FromStr + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Signed + Clone + Eq + Ord + fmt::Debug + fmt::Display + FromStr + Send + Sync + 'static
{
}

//! Young diagram combinatorics: validity, transpose, area, and the
//! vertical/horizontal componentwise sums.
//!
//! Diagrams are stored as weakly decreasing row-length lists; column heights
//! are computed on demand. The empty diagram is a first-class value and the
//! identity of both sums.

use std::fmt;
use std::str::FromStr;

/// Errors constructing or parsing a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YoungError {
    /// Row lengths must be positive.
    NonPositiveRow,
    /// Row lengths must be weakly decreasing.
    NotWeaklyDecreasing,
    /// Text encoding did not parse as comma-separated positive integers.
    Parse(String),
}

impl fmt::Display for YoungError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YoungError::NonPositiveRow => write!(f, "row lengths must be positive"),
            YoungError::NotWeaklyDecreasing => {
                write!(f, "row lengths must be weakly decreasing")
            }
            YoungError::Parse(s) => write!(f, "invalid diagram text `{s}`"),
        }
    }
}

impl std::error::Error for YoungError {}

/// A Young diagram given by its weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>) -> Result<Self, YoungError> {
        if rows.contains(&0) {
            return Err(YoungError::NonPositiveRow);
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotWeaklyDecreasing);
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// First row length; 0 for the empty diagram.
    pub fn width(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Total number of boxes.
    pub fn area(&self) -> u64 {
        self.rows.iter().map(|&r| u64::from(r)).sum()
    }

    /// Column heights, left to right.
    pub fn column_heights(&self) -> Vec<u32> {
        let width = self.width() as usize;
        let mut cols = vec![0u32; width];
        for &r in &self.rows {
            for c in cols.iter_mut().take(r as usize) {
                *c += 1;
            }
        }
        cols
    }

    /// Exchanges rows and columns; an involution.
    pub fn transpose(&self) -> YoungDiagram {
        YoungDiagram {
            rows: self.column_heights(),
        }
    }

    /// Vertical componentwise sum: column heights add, equivalently the row
    /// multisets merge.
    pub fn vertical_sum(&self, other: &YoungDiagram) -> YoungDiagram {
        let mut rows: Vec<u32> = self.rows.iter().chain(other.rows.iter()).copied().collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { rows }
    }

    /// Horizontal componentwise sum: row lengths add, the shorter list padded
    /// with zeros.
    pub fn horizontal_sum(&self, other: &YoungDiagram) -> YoungDiagram {
        let height = self.rows.len().max(other.rows.len());
        let row = |d: &YoungDiagram, i: usize| d.rows.get(i).copied().unwrap_or(0);
        let rows = (0..height).map(|i| row(self, i) + row(other, i)).collect();
        YoungDiagram { rows }
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = YoungError;

    /// Parses `"3,1"`; the empty string is the empty diagram.
    fn from_str(s: &str) -> Result<Self, YoungError> {
        if s.is_empty() {
            return Ok(YoungDiagram::empty());
        }
        let rows: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match rows {
            Ok(rows) => YoungDiagram::new(rows).map_err(|_| YoungError::Parse(s.to_string())),
            Err(_) => Err(YoungError::Parse(s.to_string())),
        }
    }
}

/// Convenience constructor for literal diagrams in tests and fixtures.
pub fn diagram(rows: &[u32]) -> YoungDiagram {
    YoungDiagram::new(rows.to_vec()).expect("literal diagram must be valid")
}

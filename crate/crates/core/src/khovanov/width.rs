use std::collections::BTreeSet;

use super::KhError;
use crate::homology::HomologyTable;

/// Occupied diagonals `δ = j - 2i` of a homology table. Torsion counts as occupied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthReport {
    pub diagonals: BTreeSet<i64>,
    pub a_min: i64,
    pub a_max: i64,
    /// `(a_max - a_min) / 2 + 1`
    pub width: i64,
    pub thin: bool,
}

pub fn width_report(t: &HomologyTable) -> Result<WidthReport, KhError> {
    let diagonals: BTreeSet<i64> = t.iter().map(|((i, j), _)| j - 2 * i).collect();
    let (Some(&a_min), Some(&a_max)) = (diagonals.first(), diagonals.last()) else {
        return Err(KhError::EmptyTable);
    };
    let width = (a_max - a_min) / 2 + 1;
    Ok(WidthReport { diagonals, a_min, a_max, width, thin: width <= 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanov::{khovanov_homology, torus_diagram};

    #[test]
    fn torus_widths() {
        let u = width_report(&khovanov_homology(&torus_diagram(1, 3).unwrap()).unwrap()).unwrap();
        assert_eq!((u.a_min, u.a_max, u.width, u.thin), (-1, 1, 2, true));
        let t = width_report(&khovanov_homology(&torus_diagram(2, 3).unwrap()).unwrap()).unwrap();
        assert_eq!((t.width, t.thin), (2, true));
        assert_eq!(t.diagonals.into_iter().collect::<Vec<_>>(), [1, 3]);
        let w = width_report(&khovanov_homology(&torus_diagram(3, 4).unwrap()).unwrap()).unwrap();
        assert!(w.width >= 3 && !w.thin);
        assert_eq!(width_report(&HomologyTable::new()), Err(KhError::EmptyTable));
    }
}

//! The sl(2) theory: Kauffman bracket, Jones polynomial and integral
//! Khovanov homology.

mod bracket;
mod cube;
mod les;
mod torus;
mod width;

use thiserror::Error;

pub use bracket::{jones_polynomial, jones_skein_check, jones_unnormalized, kauffman_bracket};
pub use cube::{KhBasisElement, KhCube, MAX_CUBE_CROSSINGS};
pub use les::{les_check, LesReport};
pub use torus::{
    stability_check, stable_poincare, torus_braid, torus_diagram, StabilityCheck, StabilityReport, StableReport,
};
pub use width::{width_report, WidthReport};

use crate::homology::{graded_homology_with, GradedComplex, HomologyError, HomologyTable, Mode};
use crate::link::{Diagram, LinkError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KhError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error("{0} crossings is beyond the supported cube size")]
    TooLarge(usize),
    #[error("a resolution has {0} circles; at most 31 are supported")]
    TooManyCircles(usize),
    #[error("the diagrams do not form a skein triple")]
    SkeinTriple,
    #[error("empty homology table")]
    EmptyTable,
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

/// Restrictions on a homology computation. `jwindow` and `imax` refer to
/// normalized degrees, except in [`unnormalized_homology`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KhOptions {
    pub jwindow: Option<(i64, i64)>,
    pub imax: Option<i64>,
    pub mode: Mode,
}

/// `(-n_-, n_+ - 2n_-)`: normalized degrees are unnormalized ones plus this.
pub fn normalization_shift(d: &Diagram) -> (i64, i64) {
    let (np, nm) = (d.n_plus() as i64, d.n_minus() as i64);
    (-nm, np - 2 * nm)
}

/// The unnormalized cube complex, optionally restricted to `j ∈ window`.
pub fn build_khovanov_complex(d: &Diagram, window: Option<(i64, i64)>) -> Result<GradedComplex, KhError> {
    Ok(KhCube::new(d)?.complex(window, None))
}

/// The complex `C(D)[-n_-]{n_+ - 2n_-}`, restricted as in `opts`.
pub fn khovanov_complex(d: &Diagram, opts: &KhOptions) -> Result<GradedComplex, KhError> {
    let (si, sj) = normalization_shift(d);
    let window = opts.jwindow.map(|(lo, hi)| (lo - sj, hi - sj));
    Ok(KhCube::new(d)?.complex(window, opts.imax.map(|m| m - si)).with_shift(si, sj))
}

pub fn khovanov_homology(d: &Diagram) -> Result<HomologyTable, KhError> {
    khovanov_homology_with(d, &KhOptions::default())
}

pub fn khovanov_homology_with(d: &Diagram, opts: &KhOptions) -> Result<HomologyTable, KhError> {
    let h = graded_homology_with(&khovanov_complex(d, opts)?, opts.mode)?;
    Ok(match opts.imax {
        Some(m) => h.restrict_i(i64::MIN, m),
        None => h,
    })
}

/// Homology of the unnormalized complex; `opts` refers to unnormalized degrees.
pub fn unnormalized_homology(d: &Diagram, opts: &KhOptions) -> Result<HomologyTable, KhError> {
    let c = KhCube::new(d)?.complex(opts.jwindow, opts.imax);
    let h = graded_homology_with(&c, opts.mode)?;
    Ok(match opts.imax {
        Some(m) => h.restrict_i(i64::MIN, m),
        None => h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::Group;
    use crate::link::{braid_closure, parse_braid, parse_pd};
    use num_bigint::BigInt;

    fn closure(s: &str) -> Diagram {
        braid_closure(&parse_braid(s).unwrap())
    }

    fn free(entries: &[(i64, i64)]) -> HomologyTable {
        entries.iter().map(|&k| (k, Group::free(1))).collect()
    }

    #[test]
    fn unknot_calibration() {
        let u = free(&[(0, -1), (0, 1)]);
        for s in ["1:", "2: 1", "2: -1", "3: 1 -2", "3: -1 -2"] {
            assert_eq!(khovanov_homology(&closure(s)).unwrap(), u, "{s}");
        }
    }

    #[test]
    fn trefoil() {
        let h = khovanov_homology(&closure("2: 1 1 1")).unwrap();
        let mut expect = free(&[(0, 1), (0, 3), (2, 5), (3, 9)]);
        expect.insert(3, 7, Group { rank: 0, torsion: vec![BigInt::from(2)] });
        assert_eq!(h, expect);
        assert_eq!(h.poincare().to_string(), "t^3*q^9 + t^2*q^5 + q^3 + q");
        let pd = khovanov_homology(&parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3").unwrap()).unwrap();
        let mirror = khovanov_homology(&closure("2: -1 -1 -1")).unwrap();
        assert!(pd == h || pd == mirror);
        assert_ne!(h, mirror);
    }

    #[test]
    fn euler_characteristic_is_jones() {
        for s in ["2: 1 1 1", "3: 1 -2 1 -2", "2: 1 1", "3: 1 1 -2 1 2 2", "4: 1 -2 3 -2 1"] {
            let d = closure(s);
            let c = khovanov_complex(&d, &KhOptions::default()).unwrap();
            assert_eq!(c.euler(), jones_unnormalized(&d), "{s}");
            assert_eq!(khovanov_homology(&d).unwrap().euler(), jones_unnormalized(&d), "{s}");
        }
    }

    #[test]
    fn torus_3_4() {
        let h =
            khovanov_homology_with(&closure("3: 1 2 1 2 1 2 1 2"), &KhOptions { imax: Some(4), ..Default::default() })
                .unwrap();
        let mut expect = free(&[(0, 5), (0, 7), (2, 9), (3, 13), (4, 11), (4, 13)]);
        expect.insert(3, 11, Group { rank: 0, torsion: vec![BigInt::from(2)] });
        assert_eq!(h, expect);
    }

    #[test]
    fn options_window_and_rank_only() {
        let d = closure("3: 1 2 1 2 1 2 1 2");
        let full = khovanov_homology(&d).unwrap();
        let w = khovanov_homology_with(&d, &KhOptions { jwindow: Some((9, 13)), ..Default::default() }).unwrap();
        assert!(w.iter().all(|(k, g)| (9..=13).contains(&k.1) && full.get(k.0, k.1) == Some(g)));
        let r = khovanov_homology_with(&d, &KhOptions { mode: Mode::RankOnly, ..Default::default() }).unwrap();
        assert_eq!(r.poincare(), full.poincare());
    }
}

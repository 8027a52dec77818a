//! Deterministic parameter sweeps over the worked covering families.
//!
//! Each family fixes a catalogue geometry, a covering template, and a
//! reference class, leaving a handful of integer parameters free.  The
//! sweep emits one row per parameter tuple in lexicographic order, each row
//! carrying the full sweep certificate, so regression suites and the CLI
//! can diff complete verdict tables.

use super::certificate::Certificate;
use super::checks::find_delta_witness;
use super::CertifyError;
use crate::cover::{BranchComponent, CoverDescriptor, CoverGroup, HypothesisLedger};
use crate::lattice::{DivisorClass, GeometryModel};
use crate::rational::int;

/// Inclusive integer range for one sweep parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: i64,
    pub hi: i64,
}

impl ParamRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    fn values(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

/// A covering family with free integer parameters.
///
/// Degree parameters admit the value 1, which denotes the trivial
/// (unramified) covering; its rows are always inconclusive and document the
/// base case of each table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// P^n, cyclic of order `d`, branch class `lambda·H` with inertia `d`,
    /// reference class `H`.
    ProjCyclic {
        n: ParamRange,
        d: ParamRange,
        lambda: ParamRange,
    },
    /// P^1 x P^1, cyclic of order `d`, branch class `d(b1, b2)` with
    /// inertia `d`, reference class `(a1, a2)`.
    QuadricCyclic {
        d: ParamRange,
        b1: ParamRange,
        b2: ParamRange,
        a1: ParamRange,
        a2: ParamRange,
    },
    /// P^n, dihedral of order `2p`, branch class `2p·lambda·H` with
    /// inertia 2, reference class `H`.
    ProjDihedral {
        n: ParamRange,
        p: ParamRange,
        lambda: ParamRange,
    },
    /// The plane blown up in three points, dihedral of order `2p`, branch
    /// class `2p(kH - Σ a_i E_i)` with inertia 2, reference class
    /// `rH - Σ E_i`.
    BlowupDihedral {
        p: ParamRange,
        k: ParamRange,
        a1: ParamRange,
        a2: ParamRange,
        a3: ParamRange,
        r: ParamRange,
    },
    /// P^n x P^n, dihedral of order `2p`, branch class `2p(H1 + H2)` with
    /// inertia 2, reference class `b1·H1 + b2·H2`.
    BiProjDihedral {
        n: ParamRange,
        p: ParamRange,
        b1: ParamRange,
        b2: ParamRange,
    },
}

/// One sweep result: the parameter tuple (in declaration order) and the
/// certificate of the angle sweep at those parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationRow {
    pub parameters: Vec<(String, i64)>,
    pub certificate: Certificate,
}

/// Geometry, covering, and reference class for one P^n cyclic instance.
pub fn proj_cyclic_instance(
    n: i64,
    d: i64,
    lambda: i64,
) -> Result<(GeometryModel, CoverDescriptor, DivisorClass), CertifyError> {
    check_min("n", n, 1)?;
    check_min("d", d, 1)?;
    check_min("lambda", lambda, 1)?;
    let geometry = GeometryModel::proj_space(n as u32)?;
    let omega = DivisorClass::from_integers(geometry.clone(), &[1])?;
    let cover = if d == 1 {
        CoverDescriptor::unramified(1, CoverGroup::Cyclic)?
    } else {
        let branch = DivisorClass::from_integers(geometry.clone(), &[lambda])?;
        CoverDescriptor::new(
            d as u64,
            CoverGroup::Cyclic,
            vec![BranchComponent::new(branch, d as u64)],
        )?
    };
    Ok((geometry, cover, omega))
}

/// Geometry, covering, and reference class for one quadric cyclic instance.
pub fn quadric_cyclic_instance(
    d: i64,
    b1: i64,
    b2: i64,
    a1: i64,
    a2: i64,
) -> Result<(GeometryModel, CoverDescriptor, DivisorClass), CertifyError> {
    check_min("d", d, 1)?;
    check_min("b1", b1, 1)?;
    check_min("b2", b2, 1)?;
    check_min("a1", a1, 1)?;
    check_min("a2", a2, 1)?;
    let geometry = GeometryModel::prod_proj_spaces(&[1, 1])?;
    let omega = DivisorClass::from_integers(geometry.clone(), &[a1, a2])?;
    let cover = if d == 1 {
        CoverDescriptor::unramified(1, CoverGroup::Cyclic)?
    } else {
        let branch = DivisorClass::from_integers(geometry.clone(), &[d * b1, d * b2])?;
        CoverDescriptor::new(
            d as u64,
            CoverGroup::Cyclic,
            vec![BranchComponent::new(branch, d as u64)],
        )?
    };
    Ok((geometry, cover, omega))
}

/// Geometry, covering, and reference class for one P^n dihedral instance.
pub fn proj_dihedral_instance(
    n: i64,
    p: i64,
    lambda: i64,
) -> Result<(GeometryModel, CoverDescriptor, DivisorClass), CertifyError> {
    check_min("n", n, 1)?;
    check_min("p", p, 3)?;
    check_min("lambda", lambda, 1)?;
    let geometry = GeometryModel::proj_space(n as u32)?;
    let omega = DivisorClass::from_integers(geometry.clone(), &[1])?;
    let branch = DivisorClass::from_integers(geometry.clone(), &[2 * p * lambda])?;
    let cover = CoverDescriptor::new(
        2 * p as u64,
        CoverGroup::Dihedral { p: p as u64 },
        vec![BranchComponent::new(branch, 2)],
    )?;
    Ok((geometry, cover, omega))
}

/// Geometry, covering, and reference class for one blown-up-plane dihedral
/// instance.
pub fn blowup_dihedral_instance(
    p: i64,
    k: i64,
    a: [i64; 3],
    r: i64,
) -> Result<(GeometryModel, CoverDescriptor, DivisorClass), CertifyError> {
    check_min("p", p, 3)?;
    check_min("k", k, 1)?;
    check_min("a1", a[0], 1)?;
    check_min("a2", a[1], 1)?;
    check_min("a3", a[2], 1)?;
    check_min("r", r, 2)?;
    let geometry = GeometryModel::blow_up_p2(3)?;
    let omega = DivisorClass::from_integers(geometry.clone(), &[r, -1, -1, -1])?;
    let line_bundle = DivisorClass::from_integers(geometry.clone(), &[k, -a[0], -a[1], -a[2]])?;
    let branch = line_bundle.scale(&int(2 * p));
    let cover = CoverDescriptor::new(
        2 * p as u64,
        CoverGroup::Dihedral { p: p as u64 },
        vec![BranchComponent::new(branch, 2)],
    )?;
    Ok((geometry, cover, omega))
}

/// Geometry, covering, and reference class for one P^n x P^n dihedral
/// instance.
pub fn biproj_dihedral_instance(
    n: i64,
    p: i64,
    b1: i64,
    b2: i64,
) -> Result<(GeometryModel, CoverDescriptor, DivisorClass), CertifyError> {
    check_min("n", n, 1)?;
    check_min("p", p, 3)?;
    check_min("b1", b1, 1)?;
    check_min("b2", b2, 1)?;
    let geometry = GeometryModel::prod_proj_spaces(&[n as u32, n as u32])?;
    let omega = DivisorClass::from_integers(geometry.clone(), &[b1, b2])?;
    let branch = DivisorClass::from_integers(geometry.clone(), &[2 * p, 2 * p])?;
    let cover = CoverDescriptor::new(
        2 * p as u64,
        CoverGroup::Dihedral { p: p as u64 },
        vec![BranchComponent::new(branch, 2)],
    )?;
    Ok((geometry, cover, omega))
}

/// Runs the angle sweep over every parameter tuple of the family, in
/// lexicographic order of the declared parameters.
pub fn enumerate(
    family: &FamilySpec,
    hyp: &HypothesisLedger,
) -> Result<Vec<EnumerationRow>, CertifyError> {
    let mut rows = Vec::new();
    match family {
        FamilySpec::ProjCyclic { n, d, lambda } => {
            check_range("n", n)?;
            check_range("d", d)?;
            check_range("lambda", lambda)?;
            for nv in n.values() {
                for dv in d.values() {
                    for lv in lambda.values() {
                        let (geometry, cover, omega) = proj_cyclic_instance(nv, dv, lv)?;
                        rows.push(EnumerationRow {
                            parameters: vec![
                                ("n".into(), nv),
                                ("d".into(), dv),
                                ("lambda".into(), lv),
                            ],
                            certificate: find_delta_witness(&geometry, &cover, &omega, hyp)?,
                        });
                    }
                }
            }
        }
        FamilySpec::QuadricCyclic { d, b1, b2, a1, a2 } => {
            check_range("d", d)?;
            check_range("b1", b1)?;
            check_range("b2", b2)?;
            check_range("a1", a1)?;
            check_range("a2", a2)?;
            for dv in d.values() {
                for b1v in b1.values() {
                    for b2v in b2.values() {
                        for a1v in a1.values() {
                            for a2v in a2.values() {
                                let (geometry, cover, omega) =
                                    quadric_cyclic_instance(dv, b1v, b2v, a1v, a2v)?;
                                rows.push(EnumerationRow {
                                    parameters: vec![
                                        ("d".into(), dv),
                                        ("b1".into(), b1v),
                                        ("b2".into(), b2v),
                                        ("a1".into(), a1v),
                                        ("a2".into(), a2v),
                                    ],
                                    certificate: find_delta_witness(
                                        &geometry, &cover, &omega, hyp,
                                    )?,
                                });
                            }
                        }
                    }
                }
            }
        }
        FamilySpec::ProjDihedral { n, p, lambda } => {
            check_range("n", n)?;
            check_range("p", p)?;
            check_range("lambda", lambda)?;
            for nv in n.values() {
                for pv in p.values() {
                    for lv in lambda.values() {
                        let (geometry, cover, omega) = proj_dihedral_instance(nv, pv, lv)?;
                        rows.push(EnumerationRow {
                            parameters: vec![
                                ("n".into(), nv),
                                ("p".into(), pv),
                                ("lambda".into(), lv),
                            ],
                            certificate: find_delta_witness(&geometry, &cover, &omega, hyp)?,
                        });
                    }
                }
            }
        }
        FamilySpec::BlowupDihedral {
            p,
            k,
            a1,
            a2,
            a3,
            r,
        } => {
            check_range("p", p)?;
            check_range("k", k)?;
            check_range("a1", a1)?;
            check_range("a2", a2)?;
            check_range("a3", a3)?;
            check_range("r", r)?;
            for pv in p.values() {
                for kv in k.values() {
                    for a1v in a1.values() {
                        for a2v in a2.values() {
                            for a3v in a3.values() {
                                for rv in r.values() {
                                    let (geometry, cover, omega) =
                                        blowup_dihedral_instance(pv, kv, [a1v, a2v, a3v], rv)?;
                                    rows.push(EnumerationRow {
                                        parameters: vec![
                                            ("p".into(), pv),
                                            ("k".into(), kv),
                                            ("a1".into(), a1v),
                                            ("a2".into(), a2v),
                                            ("a3".into(), a3v),
                                            ("r".into(), rv),
                                        ],
                                        certificate: find_delta_witness(
                                            &geometry, &cover, &omega, hyp,
                                        )?,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        FamilySpec::BiProjDihedral { n, p, b1, b2 } => {
            check_range("n", n)?;
            check_range("p", p)?;
            check_range("b1", b1)?;
            check_range("b2", b2)?;
            for nv in n.values() {
                for pv in p.values() {
                    for b1v in b1.values() {
                        for b2v in b2.values() {
                            let (geometry, cover, omega) =
                                biproj_dihedral_instance(nv, pv, b1v, b2v)?;
                            rows.push(EnumerationRow {
                                parameters: vec![
                                    ("n".into(), nv),
                                    ("p".into(), pv),
                                    ("b1".into(), b1v),
                                    ("b2".into(), b2v),
                                ],
                                certificate: find_delta_witness(&geometry, &cover, &omega, hyp)?,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(rows)
}

fn check_range(name: &str, range: &ParamRange) -> Result<(), CertifyError> {
    if range.lo > range.hi {
        return Err(CertifyError::EmptyRange(format!(
            "parameter {name}: {}..={} is empty",
            range.lo, range.hi
        )));
    }
    Ok(())
}

fn check_min(name: &str, value: i64, minimum: i64) -> Result<(), CertifyError> {
    if value < minimum {
        return Err(CertifyError::EmptyRange(format!(
            "parameter {name} = {value} is below the minimum {minimum}"
        )));
    }
    Ok(())
}

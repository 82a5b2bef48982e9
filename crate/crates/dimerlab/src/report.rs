//! Output schemas for every subcommand, serializable both ways so emitted
//! JSON can be parsed back and checked. Monomials and paths carry their raw
//! data plus a rendered word; everything downstream of an enumeration bound
//! is tagged with the window it was computed in.

use dimerlab_core::center::{
    CentralWindow, CertKind, Cyclicity, DimensionChain, KrullReport, NonnoetherianWitness,
    NotCyclicReason, PowerSigmaChain, ReducedCenterBound, SpecialFiber,
};
use dimerlab_core::cone::MonomialIdealLocus;
use dimerlab_core::contraction::Contraction;
use dimerlab_core::monomial::Monomial;
use dimerlab_core::paths::{NonCancellativePair, PathWord, Side};
use dimerlab_core::semigroup::SemigroupAlgebra;
use dimerlab_core::tiling::{DimerQuiver, ValidationReport};
use serde::{Deserialize, Serialize};

/// How far a reported fact reaches: proven outright, or certified inside an
/// enumeration window. Facts about a monomial model have no path-length
/// bound, so their windows carry only a degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Exact,
    Window { deg: u32, len: Option<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsOut {
    pub len_bound: usize,
    pub deg_bound: u32,
    pub power_bound: u32,
    pub budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOut {
    pub exps: Vec<u32>,
    pub word: String,
}

impl MonomialOut {
    pub fn new(m: &Monomial, coords: &[String]) -> MonomialOut {
        MonomialOut {
            exps: m.exps().to_vec(),
            word: monomial_word(m, coords),
        }
    }
}

pub fn monomial_word(m: &Monomial, coords: &[String]) -> String {
    if m.is_trivial() {
        return String::from("1");
    }
    m.exps()
        .iter()
        .zip(coords)
        .filter(|(e, _)| **e > 0)
        .map(|(e, name)| {
            if *e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathOut {
    pub base: usize,
    pub arrows: Vec<usize>,
    pub word: String,
}

impl PathOut {
    pub fn new(q: &DimerQuiver, p: &PathWord) -> PathOut {
        PathOut {
            base: p.base,
            arrows: p.arrows.clone(),
            word: path_word(q, p),
        }
    }
}

pub fn path_word(q: &DimerQuiver, p: &PathWord) -> String {
    if p.is_empty() {
        return format!("e{}", p.base);
    }
    p.arrows
        .iter()
        .map(|&a| q.arrows[a].label.clone().unwrap_or_else(|| format!("#{a}")))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Coordinate names for the grading: a simple matching consisting of one
/// labeled arrow is called by that label, anything else by its index. Labels
/// are read off the source tiling through the contraction's arrow map.
pub fn coordinate_names(
    source: &DimerQuiver,
    c: &Contraction,
    matchings: &[Vec<usize>],
) -> Vec<String> {
    let mut target_label: Vec<Option<&str>> = vec![None; c.target().arrows.len()];
    for (a, arrow) in source.arrows.iter().enumerate() {
        if let (Some(t), Some(l)) = (c.arrow_image(a), arrow.label.as_deref()) {
            target_label[t] = Some(l);
        }
    }
    matchings
        .iter()
        .enumerate()
        .map(|(i, m)| match m.as_slice() {
            [only] => target_label[*only]
                .map(String::from)
                .unwrap_or_else(|| format!("D{i}")),
            _ => format!("D{i}"),
        })
        .collect()
}

// ---- validate ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOut {
    pub name: String,
    pub ran: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateOut {
    pub input: String,
    pub kind: String,
    pub checks: Vec<CheckOut>,
    pub ok: bool,
}

impl ValidateOut {
    pub fn from_tiling(input: &str, report: &ValidationReport) -> ValidateOut {
        let checks = report
            .checks
            .iter()
            .map(|c| CheckOut {
                name: String::from(c.name),
                ran: c.ran,
                failures: c.failures.iter().map(|f| f.to_string()).collect(),
            })
            .collect();
        ValidateOut {
            input: String::from(input),
            kind: String::from("tiling"),
            checks,
            ok: report.ok(),
        }
    }

    pub fn from_model(input: &str, problems: &[String]) -> ValidateOut {
        let ok = problems.is_empty();
        ValidateOut {
            input: String::from(input),
            kind: String::from("model"),
            checks: vec![CheckOut {
                name: String::from("model consistency"),
                ran: true,
                failures: problems.to_vec(),
            }],
            ok,
        }
    }
}

// ---- matchings ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingOut {
    pub arrows: Vec<usize>,
    pub word: String,
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingsOut {
    pub input: String,
    pub perfect_count: usize,
    pub simple_count: usize,
    /// Every arrow lies in at least one perfect matching.
    pub nondegenerate: bool,
    pub matchings: Vec<MatchingOut>,
}

// ---- cycles ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleOut {
    pub base: usize,
    pub arrows: Vec<usize>,
    pub word: String,
    pub homology: (i64, i64),
    pub image: MonomialOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclesOut {
    pub input: String,
    pub contraction: String,
    pub coords: Vec<String>,
    pub cycles: Vec<CycleOut>,
}

// ---- contract ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowOut {
    pub tail: usize,
    pub head: usize,
    pub winding: (i64, i64),
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractOut {
    pub input: String,
    pub contraction: String,
    pub contracted_arrows: Vec<usize>,
    pub target_vertices: usize,
    pub target_arrows: Vec<ArrowOut>,
    pub vertex_images: Vec<usize>,
    pub arrow_images: Vec<Option<usize>>,
    pub relations_preserved: bool,
    /// Number of simple matchings of the target, i.e. the grading width.
    pub grading_width: usize,
}

// ---- check-cyclic ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOut {
    pub p: PathOut,
    pub q: PathOut,
    pub r: PathOut,
    pub side: String,
    pub separation: String,
}

impl PairOut {
    pub fn new(q: &DimerQuiver, pair: &NonCancellativePair) -> PairOut {
        PairOut {
            p: PathOut::new(q, &pair.p),
            q: PathOut::new(q, &pair.q),
            r: PathOut::new(q, &pair.r),
            side: String::from(match pair.side {
                Side::Left => "left",
                Side::Right => "right",
            }),
            separation: pair.separation.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum CyclicityOut {
    Cyclic {
        cancellativity_len_bound: usize,
    },
    NotCyclic {
        reason: String,
        witness: Option<MonomialOut>,
        pair: Option<PairOut>,
    },
    Undetermined,
}

impl CyclicityOut {
    pub fn new(verdict: &Cyclicity, target: &DimerQuiver, coords: &[String]) -> CyclicityOut {
        match verdict {
            Cyclicity::Cyclic {
                cancellativity_len_bound,
            } => CyclicityOut::Cyclic {
                cancellativity_len_bound: *cancellativity_len_bound,
            },
            Cyclicity::NotCyclic(NotCyclicReason::TargetNonCancellative(pair)) => {
                CyclicityOut::NotCyclic {
                    reason: String::from("the contracted tiling is not cancellative"),
                    witness: None,
                    pair: Some(PairOut::new(target, pair)),
                }
            }
            Cyclicity::NotCyclic(NotCyclicReason::MissingCycleImage { witness }) => {
                CyclicityOut::NotCyclic {
                    reason: String::from(
                        "a cycle-algebra generator of the target is hit by no source cycle",
                    ),
                    witness: Some(MonomialOut::new(witness, coords)),
                    pair: None,
                }
            }
            Cyclicity::NotCyclic(NotCyclicReason::ExtraCycleImage { witness }) => {
                CyclicityOut::NotCyclic {
                    reason: String::from(
                        "a source cycle image falls outside the target's cycle algebra",
                    ),
                    witness: Some(MonomialOut::new(witness, coords)),
                    pair: None,
                }
            }
            Cyclicity::Undetermined => CyclicityOut::Undetermined,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCyclicOut {
    pub input: String,
    pub contraction: String,
    pub bounds: BoundsOut,
    pub cyclicity: CyclicityOut,
}

// ---- center-report and friends ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GensOut {
    pub gens: Vec<MonomialOut>,
    pub claim: Claim,
}

impl GensOut {
    pub fn new(s: &SemigroupAlgebra, coords: &[String]) -> GensOut {
        GensOut {
            gens: s
                .gens()
                .iter()
                .map(|g| MonomialOut::new(g, coords))
                .collect(),
            claim: Claim::Exact,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowMonomials {
    pub count: usize,
    pub monomials: Vec<MonomialOut>,
    pub claim: Claim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertOut {
    pub monomial: MonomialOut,
    pub by: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedOut {
    pub certified: Vec<CertOut>,
    pub matches_window: bool,
    pub claim: Claim,
}

impl ReducedOut {
    pub fn new(reduced: &ReducedCenterBound, coords: &[String], claim: Claim) -> ReducedOut {
        let certified = reduced
            .certified
            .iter()
            .map(|(m, kind)| CertOut {
                monomial: MonomialOut::new(m, coords),
                by: cert_text(kind, coords),
            })
            .collect();
        ReducedOut {
            certified,
            matches_window: reduced.matches_window,
            claim,
        }
    }
}

fn cert_text(kind: &CertKind, coords: &[String]) -> String {
    match kind {
        CertKind::Identity => String::from("identity"),
        CertKind::CentralUnitCycle => String::from("unit-cycle image"),
        CertKind::NotDivisibleBySigma => String::from("not divisible by sigma"),
        CertKind::PowerTimesSigma { base, power, shift } => {
            format!("({})^{power} * sigma^{shift}", monomial_word(base, coords))
        }
        CertKind::Product { left, right } => format!(
            "({}) * ({})",
            monomial_word(left, coords),
            monomial_word(right, coords)
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub found: bool,
    pub monomial: Option<MonomialOut>,
    pub power_bound: u32,
    pub note: Option<String>,
    pub claim: Claim,
}

impl WitnessOut {
    pub fn from_tiling(
        witness: &Option<NonnoetherianWitness>,
        power_bound: u32,
        coords: &[String],
        claim: Claim,
    ) -> WitnessOut {
        match witness {
            Some(w) => WitnessOut {
                found: true,
                monomial: Some(MonomialOut::new(&w.monomial, coords)),
                power_bound: w.power_bound,
                note: None,
                claim,
            },
            None => WitnessOut {
                found: false,
                monomial: None,
                power_bound,
                note: Some(String::from(
                    "no witness found within bounds (consistent with noetherian)",
                )),
                claim,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusFaceOut {
    pub support: Vec<usize>,
    pub rank: usize,
    pub height: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusOut {
    pub algebra_rank: usize,
    pub maximal_faces: Vec<LocusFaceOut>,
    pub min_height: usize,
}

impl LocusOut {
    pub fn new(locus: &MonomialIdealLocus) -> LocusOut {
        LocusOut {
            algebra_rank: locus.algebra_rank,
            maximal_faces: locus
                .maximal_faces
                .iter()
                .map(|f| LocusFaceOut {
                    support: f.support.clone(),
                    rank: f.rank,
                    height: f.height,
                })
                .collect(),
            min_height: locus.min_height,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberOut {
    pub m0_gens: Vec<MonomialOut>,
    /// Same ideal computed from the certified reduced-center side; absent
    /// for monomial models, which have no separate reduced side.
    pub z0_gens: Option<Vec<MonomialOut>>,
    pub sides_coincide: Option<bool>,
    pub locus: LocusOut,
    pub ght: usize,
    pub dim_r_est: usize,
    pub gdim: i64,
    pub u_nonempty: bool,
    pub u_dense: bool,
    pub claim: Claim,
}

impl FiberOut {
    pub fn new(
        fiber: &SpecialFiber,
        z_fiber: Option<&SpecialFiber>,
        coords: &[String],
        claim: Claim,
    ) -> FiberOut {
        FiberOut {
            m0_gens: fiber
                .m0
                .iter()
                .map(|m| MonomialOut::new(m, coords))
                .collect(),
            z0_gens: z_fiber.map(|z| z.m0.iter().map(|m| MonomialOut::new(m, coords)).collect()),
            sides_coincide: z_fiber.map(|z| z == fiber),
            locus: LocusOut::new(&fiber.locus),
            ght: fiber.ght,
            dim_r_est: fiber.dim_r,
            gdim: fiber.gdim,
            u_nonempty: fiber.u_nonempty,
            u_dense: fiber.u_dense,
            claim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsOut {
    pub dim_s: usize,
    pub dim_s_claim: Claim,
    pub dim_r_est: usize,
    pub dim_zhat_est: usize,
    pub estimate_claim: Claim,
}

impl DimsOut {
    pub fn new(krull: &KrullReport, estimate_claim: Claim) -> DimsOut {
        DimsOut {
            dim_s: krull.dim_s,
            dim_s_claim: Claim::Exact,
            dim_r_est: krull.dim_r_est,
            dim_zhat_est: krull.dim_z_est,
            estimate_claim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedBool {
    pub value: bool,
    pub claim: Claim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterOut {
    pub input: String,
    pub contraction: String,
    pub bounds: BoundsOut,
    pub coords: Vec<String>,
    pub sigma: MonomialOut,
    pub cycle_algebra: GensOut,
    pub homotopy_center: WindowMonomials,
    pub reduced_center: ReducedOut,
    pub witness: WitnessOut,
    pub noetherian: String,
    pub special_fiber: Option<FiberOut>,
    pub fiber_note: Option<String>,
    pub dims: DimsOut,
    pub frac_equal: ClaimedBool,
    /// Whether the cycle algebra has the rank a torus-embedded input forces.
    /// A failure here points at a transcription error in the input data.
    pub torus_rank_ok: ClaimedBool,
    pub cyclicity: CyclicityOut,
}

pub fn window_monomials(
    window: &CentralWindow,
    coords: &[String],
    claim: Claim,
) -> WindowMonomials {
    WindowMonomials {
        count: window.monomials.len(),
        monomials: window
            .monomials
            .iter()
            .map(|m| MonomialOut::new(m, coords))
            .collect(),
        claim,
    }
}

pub fn noetherian_flag(witness_found: bool) -> String {
    String::from(if witness_found {
        "witnessed nonnoetherian"
    } else {
        "consistent with noetherian"
    })
}

// ---- model variant of the center report ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelCenterOut {
    pub input: String,
    pub deg_bound: u32,
    pub power_bound: u32,
    pub coords: Vec<String>,
    pub sigma: MonomialOut,
    pub algebra: GensOut,
    pub center_window: WindowMonomials,
    pub witness: WitnessOut,
    pub noetherian: String,
    pub special_fiber: Option<FiberOut>,
    pub fiber_note: Option<String>,
    pub dims: DimsOut,
    pub frac_equal: ClaimedBool,
}

// ---- krull ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrullOut {
    pub input: String,
    pub contraction: Option<String>,
    pub dims: DimsOut,
    pub frac_equal: ClaimedBool,
    /// Only for tiling inputs; models carry no torus constraint.
    pub torus_rank_ok: Option<ClaimedBool>,
}

// ---- locus ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusReportOut {
    pub input: String,
    pub contraction: Option<String>,
    pub coords: Vec<String>,
    /// Generators of the ambient cycle algebra; locus face supports index
    /// into this list.
    pub algebra: GensOut,
    pub noetherian: String,
    pub special_fiber: Option<FiberOut>,
    pub fiber_note: Option<String>,
}

// ---- witness ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReportOut {
    pub input: String,
    pub contraction: Option<String>,
    pub coords: Vec<String>,
    pub witness: WitnessOut,
    pub noetherian: String,
}

// ---- chain ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleImageOut {
    pub cycle: PathOut,
    pub homology: (i64, i64),
    pub image: MonomialOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum DimensionChainOut {
    Found {
        s1: CycleImageOut,
        t1: CycleImageOut,
        s2: CycleImageOut,
        t2: CycleImageOut,
        n1: u32,
        n2: u32,
        rank: usize,
        lattice_matches: bool,
        claim: Claim,
    },
    Inconclusive {
        reason: String,
    },
}

impl DimensionChainOut {
    pub fn found(
        chain: &DimensionChain,
        q: &DimerQuiver,
        c: &Contraction,
        grading: &dimerlab_core::contraction::CycleGrading,
        coords: &[String],
        claim: Claim,
    ) -> DimensionChainOut {
        let img = |p: &PathWord| CycleImageOut {
            cycle: PathOut::new(q, p),
            homology: q.homology_class(&p.arrows),
            image: MonomialOut::new(&c.cycle_image(grading, p), coords),
        };
        DimensionChainOut::Found {
            s1: img(&chain.s1),
            t1: img(&chain.t1),
            s2: img(&chain.s2),
            t2: img(&chain.t2),
            n1: chain.n1,
            n2: chain.n2,
            rank: chain.rank,
            lattice_matches: chain.lattice_matches,
            claim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainElementOut {
    pub monomial: MonomialOut,
    pub certificates: Vec<PathOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AscendingChainOut {
    Found {
        witness: MonomialOut,
        shift: u32,
        elements: Vec<ChainElementOut>,
        head_not_generated: bool,
        claim: Claim,
    },
    Skipped {
        note: String,
    },
    Inconclusive {
        reason: String,
    },
}

impl AscendingChainOut {
    pub fn found(
        chain: &PowerSigmaChain,
        q: &DimerQuiver,
        coords: &[String],
        claim: Claim,
    ) -> AscendingChainOut {
        AscendingChainOut::Found {
            witness: MonomialOut::new(&chain.witness, coords),
            shift: chain.shift,
            elements: chain
                .elements
                .iter()
                .map(|e| ChainElementOut {
                    monomial: MonomialOut::new(&e.monomial, coords),
                    certificates: e.certificates.iter().map(|p| PathOut::new(q, p)).collect(),
                })
                .collect(),
            head_not_generated: chain.head_not_generated,
            claim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainOut {
    pub input: String,
    pub contraction: String,
    pub bounds: BoundsOut,
    pub coords: Vec<String>,
    pub dimension_chain: DimensionChainOut,
    pub ascending_chain: AscendingChainOut,
}

//! Central algebras of a dimer tiling, computed through a contraction.
//!
//! Cycles map to monomials by grading against the simple matchings of the
//! contracted tiling. Three nested algebras come out of this:
//!
//! * the cycle algebra `S`, generated by the images of vertex-simple cycles;
//! * the homotopy center `R`, the monomials realized by a cycle at *every*
//!   vertex;
//! * a certified lower bound on the reduced center, built from `R` and `S`
//!   by closure rules.
//!
//! `S` is computed exactly (its generators are finitely many cycle images).
//! `R` is computed as a window: all monomials up to a degree bound, using
//! cycles up to a length bound, and every claim about `R` carries those
//! bounds. The geometry of the bound-degree window (minimal ideal, its
//! vanishing locus, heights and dimensions) is exact linear algebra on the
//! exponent vectors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::cone::{locus_of, LocusError, MonomialIdealLocus};
use crate::contraction::{Contraction, CycleGrading};
use crate::monomial::{semigroup_member, MemberError, Monomial};
use crate::paths::{
    default_len_bound, enumerate_cycles, find_non_cancellative_pair, unit_cycle_at,
    CancellativityVerdict, NonCancellativePair, PathWord, DEFAULT_BUDGET,
};
use crate::semigroup::{lattice_rank, same_lattice, SemigroupAlgebra};
use crate::tiling::{ArrowId, DimerQuiver, VertexId};

/// Search bounds for the windowed computations. Every windowed claim in the
/// output quotes the bounds it was computed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Longest cycle considered in the source tiling.
    pub len_bound: usize,
    /// Largest monomial degree in any window.
    pub deg_bound: u32,
    /// Highest power checked when hunting a nonnoetherianity witness.
    pub power_bound: u32,
    /// Rewrite-search budget for equivalence tests.
    pub budget: usize,
}

impl Bounds {
    /// Defaults scaled to the tiling: cycles up to three times the arrow
    /// count comfortably cover the degrees the window asks for.
    pub fn for_quiver(q: &DimerQuiver) -> Bounds {
        Bounds {
            len_bound: 3 * q.arrows.len(),
            deg_bound: 8,
            power_bound: 4,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnalysisError {
    /// The contracted tiling has no simple matchings, so cycles cannot be
    /// graded and none of the central algebras is defined.
    NoSimpleMatchings,
    Member(MemberError),
    Locus(LocusError),
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::NoSimpleMatchings => {
                write!(f, "the contracted tiling has no simple matchings")
            }
            AnalysisError::Member(e) => write!(f, "{e}"),
            AnalysisError::Locus(e) => write!(f, "{e}"),
        }
    }
}

impl From<MemberError> for AnalysisError {
    fn from(e: MemberError) -> Self {
        AnalysisError::Member(e)
    }
}

impl From<LocusError> for AnalysisError {
    fn from(e: LocusError) -> Self {
        AnalysisError::Locus(e)
    }
}

/// All cycles that visit no vertex twice, over every base vertex, in
/// (base, length, lexicographic) order. Finitely many, and their images
/// generate the cycle algebra: any closed walk splits into vertex-simple
/// closed walks carrying the same total image.
pub fn vertex_simple_cycles(q: &DimerQuiver) -> Vec<PathWord> {
    let mut out = Vec::new();
    let mut path: Vec<ArrowId> = Vec::new();
    let mut visited = alloc::vec![false; q.vertices];

    fn go(
        q: &DimerQuiver,
        base: VertexId,
        at: VertexId,
        path: &mut Vec<ArrowId>,
        visited: &mut [bool],
        out: &mut Vec<(usize, Vec<ArrowId>)>,
    ) {
        for a in q.out_arrows(at) {
            let next = q.arrows[a].head;
            if next == base {
                out.push((path.len() + 1, {
                    let mut c = path.clone();
                    c.push(a);
                    c
                }));
            } else if !visited[next] {
                visited[next] = true;
                path.push(a);
                go(q, base, next, path, visited, out);
                path.pop();
                visited[next] = false;
            }
        }
    }

    for base in 0..q.vertices {
        let mut found: Vec<(usize, Vec<ArrowId>)> = Vec::new();
        visited[base] = true;
        go(q, base, base, &mut path, &mut visited, &mut found);
        visited[base] = false;
        found.sort();
        out.extend(
            found
                .into_iter()
                .map(|(_, arrows)| PathWord { base, arrows }),
        );
    }
    out
}

/// The cycle algebra: the semigroup generated by the graded images of all
/// vertex-simple cycles of `source`, pushed through the contraction.
pub fn cycle_algebra(
    source: &DimerQuiver,
    c: &Contraction,
    grading: &CycleGrading,
) -> Result<SemigroupAlgebra, MemberError> {
    let images: BTreeSet<Monomial> = vertex_simple_cycles(source)
        .iter()
        .map(|p| c.cycle_image(grading, p))
        .collect();
    SemigroupAlgebra::new(grading.width(), images.into_iter().collect())
}

/// Grading coordinates contributed by each source arrow: zero for contracted
/// arrows, otherwise one per simple matching containing the image.
fn arrow_coords(source: &DimerQuiver, c: &Contraction, grading: &CycleGrading) -> Vec<Vec<u32>> {
    (0..source.arrows.len())
        .map(|a| match c.arrow_image(a) {
            None => alloc::vec![0; grading.width()],
            Some(t) => grading
                .matchings()
                .iter()
                .map(|d| d.contains(&t) as u32)
                .collect(),
        })
        .collect()
}

/// Depth-first search for a cycle at `v` whose image is exactly `target`,
/// among cycles of length at most `len_bound`. Arrows are tried in id order,
/// so the result is a fixed function of the input. Partial images are kept
/// componentwise below the target, which prunes hard.
pub fn find_cycle_with_image(
    source: &DimerQuiver,
    c: &Contraction,
    grading: &CycleGrading,
    v: VertexId,
    target: &Monomial,
    len_bound: usize,
) -> Option<PathWord> {
    let coords = arrow_coords(source, c, grading);
    let mut remaining: Vec<u32> = target.exps().to_vec();
    let mut path: Vec<ArrowId> = Vec::new();

    fn go(
        source: &DimerQuiver,
        coords: &[Vec<u32>],
        base: VertexId,
        at: VertexId,
        remaining: &mut [u32],
        path: &mut Vec<ArrowId>,
        len_bound: usize,
    ) -> bool {
        if at == base && !path.is_empty() && remaining.iter().all(|&r| r == 0) {
            return true;
        }
        if path.len() == len_bound {
            return false;
        }
        for a in source.out_arrows(at) {
            if coords[a].iter().zip(remaining.iter()).any(|(c, r)| c > r) {
                continue;
            }
            for (r, c) in remaining.iter_mut().zip(&coords[a]) {
                *r -= c;
            }
            path.push(a);
            if go(
                source,
                coords,
                base,
                source.arrows[a].head,
                remaining,
                path,
                len_bound,
            ) {
                return true;
            }
            path.pop();
            for (r, c) in remaining.iter_mut().zip(&coords[a]) {
                *r += c;
            }
        }
        false
    }

    if target.is_trivial() {
        return Some(PathWord::trivial(v));
    }
    if go(source, &coords, v, v, &mut remaining, &mut path, len_bound) {
        Some(PathWord {
            base: v,
            arrows: path,
        })
    } else {
        None
    }
}

/// One realizing cycle per vertex, or `None` if some vertex has no cycle
/// with this image within the length bound.
pub fn all_vertex_certificates(
    source: &DimerQuiver,
    c: &Contraction,
    grading: &CycleGrading,
    target: &Monomial,
    len_bound: usize,
) -> Option<Vec<PathWord>> {
    (0..source.vertices)
        .map(|v| find_cycle_with_image(source, c, grading, v, target, len_bound))
        .collect()
}

/// A degree window of the homotopy center: every monomial of degree within
/// the bound realized by a cycle (of length within the bound) at every
/// vertex, each with one certifying cycle per vertex.
#[derive(Clone, Debug)]
pub struct CentralWindow {
    pub deg_bound: u32,
    pub len_bound: usize,
    /// Window members in canonical order. The trivial monomial is always
    /// present (trivial cycles realize it).
    pub monomials: Vec<Monomial>,
    pub certificates: BTreeMap<Monomial, Vec<PathWord>>,
}

impl CentralWindow {
    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.binary_search(m).is_ok()
    }

    /// The nontrivial members, canonical order.
    pub fn nontrivial(&self) -> Vec<Monomial> {
        self.monomials
            .iter()
            .filter(|m| !m.is_trivial())
            .cloned()
            .collect()
    }
}

/// Images of all cycles at `v` within the bounds.
fn realized_images(
    source: &DimerQuiver,
    c: &Contraction,
    grading: &CycleGrading,
    v: VertexId,
    bounds: Bounds,
) -> BTreeSet<Monomial> {
    let coords = arrow_coords(source, c, grading);
    let weights: Vec<u32> = coords.iter().map(|cs| cs.iter().sum()).collect();
    let mut out = BTreeSet::new();
    let mut partial: Vec<u32> = alloc::vec![0; grading.width()];

    #[allow(clippy::too_many_arguments)]
    fn go(
        source: &DimerQuiver,
        coords: &[Vec<u32>],
        weights: &[u32],
        base: VertexId,
        at: VertexId,
        degree: u32,
        len: usize,
        partial: &mut Vec<u32>,
        out: &mut BTreeSet<Monomial>,
        bounds: Bounds,
    ) {
        if at == base {
            out.insert(Monomial::new(partial.clone()));
        }
        if len == bounds.len_bound {
            return;
        }
        for a in source.out_arrows(at) {
            if degree + weights[a] > bounds.deg_bound {
                continue;
            }
            for (p, c) in partial.iter_mut().zip(&coords[a]) {
                *p += c;
            }
            go(
                source,
                coords,
                weights,
                base,
                source.arrows[a].head,
                degree + weights[a],
                len + 1,
                partial,
                out,
                bounds,
            );
            for (p, c) in partial.iter_mut().zip(&coords[a]) {
                *p -= c;
            }
        }
    }

    go(
        source,
        &coords,
        &weights,
        v,
        v,
        0,
        0,
        &mut partial,
        &mut out,
        bounds,
    );
    out
}

/// Computes the homotopy-center window: candidate images are collected at
/// vertex 0, then each is confirmed (or dropped) by searching a realizing
/// cycle at every vertex.
pub fn homotopy_center_window(
    source: &DimerQuiver,
    c: &Contraction,
    grading: &CycleGrading,
    bounds: Bounds,
) -> CentralWindow {
    let mut monomials = Vec::new();
    let mut certificates = BTreeMap::new();
    for m in realized_images(source, c, grading, 0, bounds) {
        if let Some(certs) = all_vertex_certificates(source, c, grading, &m, bounds.len_bound) {
            monomials.push(m.clone());
            certificates.insert(m, certs);
        }
    }
    monomials.sort();
    CentralWindow {
        deg_bound: bounds.deg_bound,
        len_bound: bounds.len_bound,
        monomials,
        certificates,
    }
}

/// How a monomial was certified to lie in the reduced center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertKind {
    Identity,
    /// The image of the unit cycles, central by construction.
    CentralUnitCycle,
    /// In the homotopy-center window and not divisible by the unit-cycle
    /// image; such elements descend to the reduced center directly.
    NotDivisibleBySigma,
    /// `base^power * sigma^shift` where `shift` is minimal with
    /// `base * sigma^shift` in the window; every such power stays central
    /// after reduction. The monomial itself is re-verified in the window.
    PowerTimesSigma {
        base: Monomial,
        power: u32,
        shift: u32,
    },
    /// Product of two previously certified monomials.
    Product {
        left: Monomial,
        right: Monomial,
    },
}

/// A certified subset of the reduced center, compared against the homotopy
/// window. Equality of the two says the window of the reduced center fills
/// the whole homotopy-center window.
#[derive(Clone, Debug)]
pub struct ReducedCenterBound {
    pub sigma: Monomial,
    /// Certified members with their certificates, canonical order.
    pub certified: Vec<(Monomial, CertKind)>,
    /// True when the certified set equals the homotopy window as a set.
    pub matches_window: bool,
}

/// Builds the certified lower bound of the reduced center from the cycle
/// algebra and the homotopy window.
pub fn reduced_center_bound(
    s: &SemigroupAlgebra,
    window: &CentralWindow,
    sigma: &Monomial,
    bounds: Bounds,
) -> ReducedCenterBound {
    let mut certified: BTreeMap<Monomial, CertKind> = BTreeMap::new();
    certified.insert(Monomial::one(sigma.width()), CertKind::Identity);
    if window.contains(sigma) {
        certified.insert(sigma.clone(), CertKind::CentralUnitCycle);
    }
    for m in &window.monomials {
        if !m.is_trivial() && !sigma.divides(m) {
            certified
                .entry(m.clone())
                .or_insert(CertKind::NotDivisibleBySigma);
        }
    }
    for g in s.monomials_up_to(bounds.deg_bound) {
        if g.is_trivial() {
            continue;
        }
        let mut shift = None;
        for m in 0.. {
            let lifted = g.mul(&sigma.pow(m));
            if lifted.degree() > bounds.deg_bound {
                break;
            }
            if window.contains(&lifted) {
                shift = Some(m);
                break;
            }
        }
        let Some(shift) = shift else { continue };
        for power in 1.. {
            let h = g.pow(power).mul(&sigma.pow(shift));
            if h.degree() > bounds.deg_bound {
                break;
            }
            if window.contains(&h) {
                certified.entry(h).or_insert(CertKind::PowerTimesSigma {
                    base: g.clone(),
                    power,
                    shift,
                });
            }
        }
    }
    // The reduced center is a ring, so close under products within the
    // window.
    loop {
        let members: Vec<Monomial> = certified.keys().cloned().collect();
        let mut fresh: Vec<(Monomial, CertKind)> = Vec::new();
        for a in &members {
            for b in &members {
                if a > b || a.degree() + b.degree() > bounds.deg_bound {
                    continue;
                }
                let p = a.mul(b);
                if window.contains(&p) && !certified.contains_key(&p) {
                    fresh.push((
                        p,
                        CertKind::Product {
                            left: a.clone(),
                            right: b.clone(),
                        },
                    ));
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        for (m, kind) in fresh {
            certified.entry(m).or_insert(kind);
        }
    }
    let matches_window = certified.len() == window.monomials.len()
        && window.monomials.iter().all(|m| certified.contains_key(m));
    ReducedCenterBound {
        sigma: sigma.clone(),
        certified: certified.into_iter().collect(),
        matches_window,
    }
}

/// A cycle-algebra element separating the central algebras: it lies in `S`,
/// is not a unit-cycle multiple, and none of its first `power_bound` powers
/// is realized at every vertex. Such an element generates an infinite
/// ascending chain of ideals of the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonnoetherianWitness {
    pub monomial: Monomial,
    /// Powers 1..=power_bound were each confirmed unrealized at some vertex
    /// within the length bound.
    pub power_bound: u32,
}

/// Scans the cycle algebra window in canonical order for a witness. `None`
/// means every candidate power landed back in the realized window, as
/// happens exactly when the tiling's algebra is cancellative.
pub fn nonnoetherian_witness(
    source: &DimerQuiver,
    c: &Contraction,
    grading: &CycleGrading,
    s: &SemigroupAlgebra,
    sigma: &Monomial,
    bounds: Bounds,
) -> Option<NonnoetherianWitness> {
    for h in s.monomials_up_to(bounds.deg_bound) {
        if h.is_trivial() || sigma.divides(&h) {
            continue;
        }
        let escapes = (1..=bounds.power_bound).all(|n| {
            all_vertex_certificates(source, c, grading, &h.pow(n), bounds.len_bound).is_none()
        });
        if escapes {
            return Some(NonnoetherianWitness {
                monomial: h,
                power_bound: bounds.power_bound,
            });
        }
    }
    None
}

/// Geometry of the special fiber of the center: the minimal monomial ideal
/// spanned by the nontrivial central window, its vanishing locus, and the
/// derived height and dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialFiber {
    /// Minimal generators of the ideal of nontrivial central monomials.
    pub m0: Vec<Monomial>,
    pub locus: MonomialIdealLocus,
    /// Geometric height of the ideal: the smallest prime height on the
    /// locus.
    pub ght: usize,
    /// Lattice rank of the nontrivial central monomials.
    pub dim_r: usize,
    /// `dim_r - ght`; positive values witness a center whose maximal ideal
    /// carries excess geometric dimension.
    pub gdim: i64,
    /// Whether the complement of the vanishing locus is nonempty (it then
    /// is automatically dense: the cone is irreducible).
    pub u_nonempty: bool,
    pub u_dense: bool,
}

/// Computes the special fiber data over the cycle algebra.
pub fn special_fiber(
    s: &SemigroupAlgebra,
    r_nontrivial: &[Monomial],
) -> Result<SpecialFiber, LocusError> {
    let m0 = s.minimal_ideal_gens(r_nontrivial)?;
    if m0.is_empty() {
        return Err(LocusError::EmptyIdeal);
    }
    let locus = locus_of(s, &m0)?;
    let dim_r = lattice_rank(r_nontrivial);
    let ght = locus.min_height;
    let u_nonempty = ght > 0;
    Ok(SpecialFiber {
        m0,
        ght,
        dim_r,
        gdim: dim_r as i64 - ght as i64,
        u_nonempty,
        u_dense: u_nonempty,
        locus,
    })
}

/// Krull dimensions of the cycle algebra, the central window, and the
/// certified reduced-center bound, plus whether cycle algebra and window
/// span the same exponent lattice (equal fraction fields).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrullReport {
    pub dim_s: usize,
    pub dim_r_est: usize,
    pub dim_z_est: usize,
    pub frac_equal: bool,
}

pub fn krull_dimensions(
    s: &SemigroupAlgebra,
    r_nontrivial: &[Monomial],
    z_nontrivial: &[Monomial],
) -> KrullReport {
    KrullReport {
        dim_s: s.rank(),
        dim_r_est: lattice_rank(r_nontrivial),
        dim_z_est: lattice_rank(z_nontrivial),
        frac_equal: s.same_lattice_as(r_nontrivial),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainError {
    /// No nonnoetherianity witness, so no chain to build.
    NoWitness,
    /// No shift of the witness by unit-cycle powers landed in the realized
    /// window.
    ShiftNotFound,
    /// A chain element could not be certified at every vertex.
    CertificateMissing {
        power: u32,
    },
    /// A search stage of the dimension chain found no cycle.
    StageMissing {
        stage: &'static str,
    },
    Member(MemberError),
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::NoWitness => write!(f, "no witness monomial to build the chain from"),
            ChainError::ShiftNotFound => {
                write!(
                    f,
                    "no unit-cycle shift of the witness is centrally realized"
                )
            }
            ChainError::CertificateMissing { power } => {
                write!(
                    f,
                    "chain element at power {power} has no certificate at some vertex"
                )
            }
            ChainError::StageMissing { stage } => write!(f, "no cycle found for {stage}"),
            ChainError::Member(e) => write!(f, "{e}"),
        }
    }
}

impl From<MemberError> for ChainError {
    fn from(e: MemberError) -> Self {
        ChainError::Member(e)
    }
}

/// One element of the ascending chain, with a realizing cycle per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainElement {
    pub monomial: Monomial,
    pub certificates: Vec<PathWord>,
}

/// The ascending chain `g^n * sigma^shift` built on a nonnoetherianity
/// witness `g`. Each element is certified central (cycles at every vertex);
/// the head of the chain is then shown not to be generated by the earlier
/// elements together with the rest of the central window, so the chain of
/// ideals it spans genuinely grows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSigmaChain {
    pub witness: Monomial,
    pub shift: u32,
    pub elements: Vec<ChainElement>,
    pub head_not_generated: bool,
}

#[allow(clippy::too_many_arguments)]
pub fn power_sigma_chain(
    source: &DimerQuiver,
    c: &Contraction,
    grading: &CycleGrading,
    s: &SemigroupAlgebra,
    window: &CentralWindow,
    sigma: &Monomial,
    bounds: Bounds,
    length: u32,
) -> Result<PowerSigmaChain, ChainError> {
    let length = length.max(1);
    let witness = nonnoetherian_witness(source, c, grading, s, sigma, bounds)
        .ok_or(ChainError::NoWitness)?
        .monomial;
    let mut shift = None;
    for m in 0..=bounds.deg_bound {
        let lifted = witness.mul(&sigma.pow(m));
        if all_vertex_certificates(source, c, grading, &lifted, bounds.len_bound).is_some() {
            shift = Some(m);
            break;
        }
    }
    let shift = shift.ok_or(ChainError::ShiftNotFound)?;

    let mut elements = Vec::new();
    for power in 1..=length {
        let monomial = witness.pow(power).mul(&sigma.pow(shift));
        let certificates = all_vertex_certificates(source, c, grading, &monomial, bounds.len_bound)
            .ok_or(ChainError::CertificateMissing { power })?;
        elements.push(ChainElement {
            monomial,
            certificates,
        });
    }

    let head = &elements
        .last()
        .expect("chain has at least one element")
        .monomial;
    let mut gens: Vec<Monomial> = elements[..elements.len() - 1]
        .iter()
        .map(|e| e.monomial.clone())
        .collect();
    gens.extend(window.nontrivial());
    let head_not_generated = !semigroup_member(head, &gens)?;

    Ok(PowerSigmaChain {
        witness,
        shift,
        elements,
        head_not_generated,
    })
}

/// Two pairs of cycles at one vertex whose products are unit-cycle powers,
/// spanning the cycle algebra's lattice together with the unit cycle. Their
/// existence pins the Krull dimension of the cycle algebra at three.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionChain {
    pub s1: PathWord,
    pub t1: PathWord,
    pub s2: PathWord,
    pub t2: PathWord,
    pub n1: u32,
    pub n2: u32,
    /// Lattice rank of the five images (the unit cycle and the four above).
    pub rank: usize,
    /// Whether those five images span the same lattice as the whole cycle
    /// algebra.
    pub lattice_matches: bool,
}

/// Exponent `n` with `m == sigma^n`, if any.
fn sigma_power_of(m: &Monomial, sigma: &Monomial) -> Option<u32> {
    if sigma.degree() == 0 || !m.degree().is_multiple_of(sigma.degree()) {
        return None;
    }
    let n = m.degree() / sigma.degree();
    if *m == sigma.pow(n) {
        Some(n)
    } else {
        None
    }
}

/// Searches cycles at vertex 0 (shortest first) for the dimension chain:
/// one cycle winding once each way around each torus direction. The product
/// of opposite winders is homologically trivial, hence a unit-cycle power;
/// with the unit cycle itself the four images span the full lattice.
pub fn verify_dimension_chain(
    source: &DimerQuiver,
    c: &Contraction,
    grading: &CycleGrading,
    s: &SemigroupAlgebra,
) -> Result<DimensionChain, ChainError> {
    let sigma = c.cycle_image(grading, &unit_cycle_at(source, 0));
    let cycles = enumerate_cycles(source, 0, default_len_bound(source));

    let pick = |class: (i64, i64), stage: &'static str| {
        cycles
            .iter()
            .find(|p| !p.is_empty() && source.homology_class(&p.arrows) == class)
            .cloned()
            .ok_or(ChainError::StageMissing { stage })
    };

    let s1 = pick((1, 0), "a cycle winding forward in the first direction")?;
    let t1 = pick((-1, 0), "a cycle winding backward in the first direction")?;
    let s2 = pick((0, 1), "a cycle winding forward in the second direction")?;
    let t2 = pick((0, -1), "a cycle winding backward in the second direction")?;

    let imgs: Vec<Monomial> = [&s1, &t1, &s2, &t2]
        .iter()
        .map(|p| c.cycle_image(grading, p))
        .collect();
    let n1 = sigma_power_of(&imgs[0].mul(&imgs[1]), &sigma)
        .filter(|&n| n >= 1)
        .ok_or(ChainError::StageMissing {
            stage: "a unit-cycle power for the first product",
        })?;
    let n2 = sigma_power_of(&imgs[2].mul(&imgs[3]), &sigma)
        .filter(|&n| n >= 1)
        .ok_or(ChainError::StageMissing {
            stage: "a unit-cycle power for the second product",
        })?;

    let span = [
        sigma,
        imgs[0].clone(),
        imgs[1].clone(),
        imgs[2].clone(),
        imgs[3].clone(),
    ];
    Ok(DimensionChain {
        s1,
        t1,
        s2,
        t2,
        n1,
        n2,
        rank: lattice_rank(&span),
        lattice_matches: same_lattice(&span, s.gens()),
    })
}

/// Verdict on whether the contraction identifies the cycle algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cyclicity {
    /// The target is cancellative as far as the bounded search can see and
    /// the cycle algebras agree exactly.
    Cyclic {
        cancellativity_len_bound: usize,
    },
    NotCyclic(NotCyclicReason),
    /// The cancellativity search ran out of budget.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotCyclicReason {
    TargetNonCancellative(NonCancellativePair),
    /// A generator of the target's own cycle algebra is hit by no source
    /// cycle.
    MissingCycleImage {
        witness: Monomial,
    },
    /// A source cycle image escapes the target's cycle algebra.
    ExtraCycleImage {
        witness: Monomial,
    },
}

/// Decides cyclicity of the contraction: the target must look cancellative
/// and the image of the source cycle algebra must fill the target's.
pub fn cyclicity(
    source: &DimerQuiver,
    c: &Contraction,
    bounds: Bounds,
) -> Result<Cyclicity, AnalysisError> {
    let grading = CycleGrading::new(c.target());
    if grading.width() == 0 {
        return Err(AnalysisError::NoSimpleMatchings);
    }
    let s = cycle_algebra(source, c, &grading)?;
    let identity = Contraction::contract(c.target(), &BTreeSet::new())
        .expect("empty contraction of a valid tiling");
    let s_prime = cycle_algebra(c.target(), &identity, &grading)?;

    let len_bound = default_len_bound(c.target());
    match find_non_cancellative_pair(c.target(), len_bound, bounds.budget) {
        CancellativityVerdict::NonCancellative(pair) => {
            return Ok(Cyclicity::NotCyclic(
                NotCyclicReason::TargetNonCancellative(pair),
            ));
        }
        CancellativityVerdict::CancellativeUpTo {
            complete: false, ..
        } => {
            return Ok(Cyclicity::Undetermined);
        }
        CancellativityVerdict::CancellativeUpTo { complete: true, .. } => {}
    }
    for atom in s_prime.gens() {
        if !s.contains(atom)? {
            return Ok(Cyclicity::NotCyclic(NotCyclicReason::MissingCycleImage {
                witness: atom.clone(),
            }));
        }
    }
    for atom in s.gens() {
        if !s_prime.contains(atom)? {
            return Ok(Cyclicity::NotCyclic(NotCyclicReason::ExtraCycleImage {
                witness: atom.clone(),
            }));
        }
    }
    Ok(Cyclicity::Cyclic {
        cancellativity_len_bound: len_bound,
    })
}

/// Everything the central analysis produces for one contraction, bundled.
/// The special fiber is computed twice, once over the homotopy window and
/// once over the certified reduced-center bound; where the two windows
/// coincide, so do the loci.
#[derive(Clone, Debug)]
pub struct CenterAnalysis {
    pub bounds: Bounds,
    pub sigma: Monomial,
    pub cycle_algebra: SemigroupAlgebra,
    pub window: CentralWindow,
    pub reduced: ReducedCenterBound,
    pub witness: Option<NonnoetherianWitness>,
    pub fiber: SpecialFiber,
    pub z_fiber: SpecialFiber,
    pub krull: KrullReport,
    pub cyclicity: Cyclicity,
}

pub fn analyze_center(
    source: &DimerQuiver,
    c: &Contraction,
    bounds: Bounds,
) -> Result<CenterAnalysis, AnalysisError> {
    let grading = CycleGrading::new(c.target());
    if grading.width() == 0 {
        return Err(AnalysisError::NoSimpleMatchings);
    }
    let s = cycle_algebra(source, c, &grading)?;
    let sigma = c.cycle_image(&grading, &unit_cycle_at(source, 0));
    let window = homotopy_center_window(source, c, &grading, bounds);
    let reduced = reduced_center_bound(&s, &window, &sigma, bounds);
    let z_nontrivial: Vec<Monomial> = reduced
        .certified
        .iter()
        .filter(|(m, _)| !m.is_trivial())
        .map(|(m, _)| m.clone())
        .collect();
    let witness = nonnoetherian_witness(source, c, &grading, &s, &sigma, bounds);
    let fiber = special_fiber(&s, &window.nontrivial())?;
    let z_fiber = special_fiber(&s, &z_nontrivial)?;
    let krull = krull_dimensions(&s, &window.nontrivial(), &z_nontrivial);
    let verdict = cyclicity(source, c, bounds)?;
    Ok(CenterAnalysis {
        bounds,
        sigma,
        cycle_algebra: s,
        window,
        reduced,
        witness,
        fiber,
        z_fiber,
        krull,
        cyclicity: verdict,
    })
}

/// A monomial model of a center `k + sigma*S` given directly by semigroup
/// generators, with no tiling behind it. Everything here is exact: window
/// membership in `k + sigma*S` is a divisibility check plus semigroup
/// membership.
#[derive(Clone, Debug)]
pub struct MonomialModel {
    pub algebra: SemigroupAlgebra,
    pub sigma: Monomial,
}

impl MonomialModel {
    pub fn new(
        width: usize,
        gens: Vec<Monomial>,
        sigma: Monomial,
    ) -> Result<MonomialModel, MemberError> {
        assert!(sigma.width() == width, "sigma width must match the algebra");
        let algebra = SemigroupAlgebra::new(width, gens)?;
        Ok(MonomialModel { algebra, sigma })
    }

    /// Exact membership in `k + sigma*S`.
    pub fn center_contains(&self, m: &Monomial) -> Result<bool, MemberError> {
        if m.is_trivial() {
            return Ok(true);
        }
        match self.sigma.quotient_of(m) {
            Some(q) => self.algebra.contains(&q),
            None => Ok(false),
        }
    }

    /// The nontrivial center monomials within the degree bound.
    pub fn center_window(&self, deg_bound: u32) -> Vec<Monomial> {
        if self.sigma.degree() > deg_bound {
            return Vec::new();
        }
        self.algebra
            .monomials_up_to(deg_bound - self.sigma.degree())
            .into_iter()
            .map(|s| self.sigma.mul(&s))
            .collect()
    }

    /// First algebra monomial (canonical order) not a sigma multiple whose
    /// small powers all escape the center. Exact up to the scan bounds.
    pub fn witness(
        &self,
        deg_bound: u32,
        power_bound: u32,
    ) -> Result<Option<Monomial>, MemberError> {
        for h in self.algebra.monomials_up_to(deg_bound) {
            if h.is_trivial() || self.sigma.divides(&h) {
                continue;
            }
            let mut escapes = true;
            for n in 1..=power_bound {
                if self.center_contains(&h.pow(n))? {
                    escapes = false;
                    break;
                }
            }
            if escapes {
                return Ok(Some(h));
            }
        }
        Ok(None)
    }

    pub fn fiber(&self, deg_bound: u32) -> Result<SpecialFiber, LocusError> {
        special_fiber(&self.algebra, &self.center_window(deg_bound))
    }

    pub fn krull(&self, deg_bound: u32) -> KrullReport {
        let window = self.center_window(deg_bound);
        krull_dimensions(&self.algebra, &window, &window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{Arrow, Face, FaceColor};
    use alloc::vec;

    fn conifold() -> DimerQuiver {
        DimerQuiver {
            vertices: 2,
            arrows: vec![
                Arrow::labeled(0, 1, (0, 0), "x"),
                Arrow::labeled(0, 1, (-1, -1), "y"),
                Arrow::labeled(1, 0, (1, 0), "z"),
                Arrow::labeled(1, 0, (0, 1), "w"),
            ],
            faces: vec![
                Face {
                    boundary: vec![0, 2, 1, 3],
                    color: FaceColor::Plus,
                },
                Face {
                    boundary: vec![0, 3, 1, 2],
                    color: FaceColor::Minus,
                },
            ],
        }
    }

    fn identity(q: &DimerQuiver) -> Contraction {
        Contraction::contract(q, &BTreeSet::new()).unwrap()
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn conifold_cycle_algebra_is_the_quadric_cone() {
        let q = conifold();
        let c = identity(&q);
        let grading = CycleGrading::new(c.target());
        let s = cycle_algebra(&q, &c, &grading).unwrap();
        assert_eq!(
            s.gens(),
            &[
                m(&[1, 0, 1, 0]),
                m(&[1, 0, 0, 1]),
                m(&[0, 1, 1, 0]),
                m(&[0, 1, 0, 1])
            ]
        );
        assert_eq!(s.rank(), 3);
        let sigma = c.cycle_image(&grading, &unit_cycle_at(&q, 0));
        assert_eq!(sigma, m(&[1, 1, 1, 1]));
    }

    #[test]
    fn cycle_search_finds_the_shortest_witness_in_dfs_order() {
        let q = conifold();
        let c = identity(&q);
        let grading = CycleGrading::new(c.target());
        let found = find_cycle_with_image(&q, &c, &grading, 1, &m(&[1, 0, 1, 0]), 12).unwrap();
        assert_eq!(found, PathWord::new(&q, 1, vec![2, 0]).unwrap());
        assert!(find_cycle_with_image(&q, &c, &grading, 0, &m(&[1, 0, 0, 0]), 12).is_none());
        assert_eq!(
            find_cycle_with_image(&q, &c, &grading, 0, &m(&[0; 4]), 12),
            Some(PathWord::trivial(0))
        );
    }

    #[test]
    fn conifold_center_window_is_the_whole_cycle_algebra_window() {
        let q = conifold();
        let c = identity(&q);
        let grading = CycleGrading::new(c.target());
        let s = cycle_algebra(&q, &c, &grading).unwrap();
        let window = homotopy_center_window(&q, &c, &grading, Bounds::for_quiver(&q));
        assert_eq!(window.monomials, s.monomials_up_to(8));
        assert_eq!(window.monomials.len(), 55);
        for certs in window.certificates.values() {
            assert_eq!(certs.len(), 2);
        }
    }

    #[test]
    fn conifold_reduced_center_fills_the_window() {
        let q = conifold();
        let c = identity(&q);
        let grading = CycleGrading::new(c.target());
        let s = cycle_algebra(&q, &c, &grading).unwrap();
        let bounds = Bounds::for_quiver(&q);
        let window = homotopy_center_window(&q, &c, &grading, bounds);
        let sigma = m(&[1, 1, 1, 1]);
        let reduced = reduced_center_bound(&s, &window, &sigma, bounds);
        assert!(reduced.matches_window);
        let kinds: BTreeMap<&Monomial, &CertKind> =
            reduced.certified.iter().map(|(m, k)| (m, k)).collect();
        assert_eq!(kinds[&m(&[0, 0, 0, 0])], &CertKind::Identity);
        assert_eq!(kinds[&m(&[1, 1, 1, 1])], &CertKind::CentralUnitCycle);
        assert_eq!(kinds[&m(&[1, 0, 1, 0])], &CertKind::NotDivisibleBySigma);
    }

    #[test]
    fn conifold_has_no_nonnoetherianity_witness() {
        let q = conifold();
        let c = identity(&q);
        let grading = CycleGrading::new(c.target());
        let s = cycle_algebra(&q, &c, &grading).unwrap();
        let sigma = m(&[1, 1, 1, 1]);
        assert_eq!(
            nonnoetherian_witness(&q, &c, &grading, &s, &sigma, Bounds::for_quiver(&q)),
            None
        );
    }

    #[test]
    fn conifold_special_fiber_is_a_point() {
        let q = conifold();
        let c = identity(&q);
        let grading = CycleGrading::new(c.target());
        let s = cycle_algebra(&q, &c, &grading).unwrap();
        let window = homotopy_center_window(&q, &c, &grading, Bounds::for_quiver(&q));
        let fiber = special_fiber(&s, &window.nontrivial()).unwrap();
        // Every atom is central, so the ideal hits every ray and only the
        // apex of the cone avoids it.
        assert_eq!(fiber.m0, s.gens());
        assert_eq!(fiber.ght, 3);
        assert_eq!(fiber.dim_r, 3);
        assert_eq!(fiber.gdim, 0);
        assert!(fiber.u_nonempty && fiber.u_dense);
        let krull = krull_dimensions(&s, &window.nontrivial(), &window.nontrivial());
        assert_eq!((krull.dim_s, krull.dim_r_est, krull.dim_z_est), (3, 3, 3));
        assert!(krull.frac_equal);
    }

    #[test]
    fn conifold_dimension_chain() {
        let q = conifold();
        let c = identity(&q);
        let grading = CycleGrading::new(c.target());
        let s = cycle_algebra(&q, &c, &grading).unwrap();
        let chain = verify_dimension_chain(&q, &c, &grading, &s).unwrap();
        assert_eq!(chain.s1.arrows, vec![0, 2]);
        assert_eq!(chain.t1.arrows, vec![1, 3]);
        assert_eq!(chain.s2.arrows, vec![0, 3]);
        assert_eq!(chain.t2.arrows, vec![1, 2]);
        assert_eq!((chain.n1, chain.n2), (1, 1));
        assert_eq!(chain.rank, 3);
        assert!(chain.lattice_matches);
    }

    #[test]
    fn identity_contraction_of_the_conifold_is_cyclic() {
        let q = conifold();
        let c = identity(&q);
        let verdict = cyclicity(&q, &c, Bounds::for_quiver(&q)).unwrap();
        assert_eq!(
            verdict,
            Cyclicity::Cyclic {
                cancellativity_len_bound: 8
            }
        );
    }

    #[test]
    fn collapsing_a_conifold_arrow_is_not_cyclic() {
        // The target is a valid three-loop tiling, but one of its loops is
        // hit by no source cycle: the cycle algebras differ.
        let q = conifold();
        let c = Contraction::contract(&q, &BTreeSet::from([2])).unwrap();
        let verdict = cyclicity(&q, &c, Bounds::for_quiver(&q)).unwrap();
        assert_eq!(
            verdict,
            Cyclicity::NotCyclic(NotCyclicReason::MissingCycleImage {
                witness: m(&[0, 0, 1])
            })
        );
    }

    #[test]
    fn monomial_model_of_a_shifted_polynomial_ring() {
        // S = k[x, y], center k + xS: the witness is y, the ideal of the
        // center is generated by x, and the locus it cuts out is the y-axis.
        let model = MonomialModel::new(2, vec![m(&[1, 0]), m(&[0, 1])], m(&[1, 0])).unwrap();
        assert_eq!(model.witness(8, 4).unwrap(), Some(m(&[0, 1])));
        let fiber = model.fiber(8).unwrap();
        assert_eq!(fiber.m0, vec![m(&[1, 0])]);
        assert_eq!(fiber.ght, 1);
        assert_eq!(fiber.dim_r, 2);
        assert_eq!(fiber.gdim, 1);
        let krull = model.krull(8);
        assert_eq!((krull.dim_s, krull.dim_r_est), (2, 2));
        assert!(krull.frac_equal);
    }
}

//! Command pipelines: resolve the input, set up the contraction context,
//! run the core computations, and assemble report structures.

use std::collections::BTreeSet;

use dimerlab_core::center::{
    self, AnalysisError, Bounds, CentralWindow, ChainError, KrullReport, MonomialModel,
    NonnoetherianWitness, ReducedCenterBound, SpecialFiber,
};
use dimerlab_core::cone::LocusError;
use dimerlab_core::contraction::{Contraction, CycleGrading};
use dimerlab_core::matchings;
use dimerlab_core::monomial::{MemberError, Monomial};
use dimerlab_core::paths::unit_cycle_at;
use dimerlab_core::semigroup::SemigroupAlgebra;
use dimerlab_core::tiling::DimerQuiver;
use serde::Serialize;

use crate::format::{InputFile, ModelFile, TilingFile};
use crate::report::*;
use crate::{fixtures, CliError};

/// Flag-level overrides applied on top of the per-input defaults.
#[derive(Clone, Copy, Debug, Default)]
pub struct BoundsOverride {
    pub len_bound: Option<usize>,
    pub deg_bound: Option<u32>,
    pub power_bound: Option<u32>,
    pub budget: Option<usize>,
}

impl BoundsOverride {
    fn apply(&self, base: Bounds) -> Bounds {
        Bounds {
            len_bound: self.len_bound.unwrap_or(base.len_bound),
            deg_bound: self.deg_bound.unwrap_or(base.deg_bound),
            power_bound: self.power_bound.unwrap_or(base.power_bound),
            budget: self.budget.unwrap_or(base.budget),
        }
    }
}

const MODEL_DEG_BOUND: u32 = 8;
const MODEL_POWER_BOUND: u32 = 4;

pub fn load(input: &str) -> Result<InputFile, CliError> {
    let text = fixtures::resolve(input)?;
    InputFile::parse(&text).map_err(CliError::Usage)
}

fn require_tiling(file: InputFile, cmd: &str) -> Result<TilingFile, CliError> {
    match file {
        InputFile::Tiling(t) => Ok(t),
        InputFile::Model(m) => Err(CliError::Usage(format!(
            "`{cmd}` needs a dimer tiling; {:?} is a monomial model",
            m.name
        ))),
    }
}

fn member_limit(e: MemberError) -> CliError {
    CliError::Validation(format!("monomial computation hit a limit: {e}"))
}

fn locus_limit(e: LocusError) -> CliError {
    CliError::Validation(format!("locus computation failed: {e}"))
}

fn analysis_failed(e: AnalysisError) -> CliError {
    CliError::Validation(e.to_string())
}

fn window_claim(b: Bounds) -> Claim {
    Claim::Window {
        deg: b.deg_bound,
        len: Some(b.len_bound),
    }
}

fn model_claim(deg: u32) -> Claim {
    Claim::Window { deg, len: None }
}

fn bounds_out(b: Bounds) -> BoundsOut {
    BoundsOut {
        len_bound: b.len_bound,
        deg_bound: b.deg_bound,
        power_bound: b.power_bound,
        budget: b.budget,
    }
}

/// A validated tiling with its chosen contraction, grading, coordinate
/// names, and effective bounds.
pub struct TilingContext {
    pub file: TilingFile,
    pub quiver: DimerQuiver,
    pub contraction_name: String,
    pub contraction: Contraction,
    pub grading: CycleGrading,
    pub coords: Vec<String>,
    pub bounds: Bounds,
}

impl TilingContext {
    pub fn build(
        file: TilingFile,
        contract: Option<&str>,
        overrides: &BoundsOverride,
    ) -> Result<TilingContext, CliError> {
        let quiver = file.to_quiver();
        let report = quiver.validation_report();
        if !report.ok() {
            let msgs: Vec<String> = report.failures().iter().map(|f| f.to_string()).collect();
            return Err(CliError::Validation(format!(
                "input tiling {:?} is invalid: {}",
                file.name,
                msgs.join("; ")
            )));
        }
        let (contraction_name, arrows) = match contract {
            None => (String::from("identity"), BTreeSet::new()),
            Some(name) => match file.contraction_arrows(name) {
                Some(set) => (String::from(name), set),
                None => {
                    let known: Vec<&str> = file.contractions.keys().map(|s| s.as_str()).collect();
                    return Err(CliError::Usage(format!(
                        "no contraction named {name:?} in {:?}; available: {}",
                        file.name,
                        if known.is_empty() {
                            String::from("none")
                        } else {
                            known.join(", ")
                        }
                    )));
                }
            },
        };
        let contraction = Contraction::contract(&quiver, &arrows)
            .map_err(|e| CliError::Validation(format!("contraction failed: {e}")))?;
        let grading = CycleGrading::new(contraction.target());
        let coords = coordinate_names(&quiver, &contraction, grading.matchings());
        let bounds = overrides.apply(Bounds::for_quiver(&quiver));
        Ok(TilingContext {
            file,
            quiver,
            contraction_name,
            contraction,
            grading,
            coords,
            bounds,
        })
    }

    fn require_grading(&self) -> Result<(), CliError> {
        if self.grading.width() == 0 {
            return Err(CliError::Validation(String::from(
                "the contracted tiling has no simple matchings, so nothing can be graded",
            )));
        }
        Ok(())
    }
}

/// A consistent monomial model with its effective bounds.
pub struct ModelContext {
    pub file: ModelFile,
    pub model: MonomialModel,
    pub deg_bound: u32,
    pub power_bound: u32,
}

impl ModelContext {
    pub fn build(file: ModelFile, overrides: &BoundsOverride) -> Result<ModelContext, CliError> {
        let problems = file.problems();
        if !problems.is_empty() {
            return Err(CliError::Validation(format!(
                "model {:?} is inconsistent: {}",
                file.name,
                problems.join("; ")
            )));
        }
        let model = file.to_model();
        Ok(ModelContext {
            file,
            model,
            deg_bound: overrides.deg_bound.unwrap_or(MODEL_DEG_BOUND),
            power_bound: overrides.power_bound.unwrap_or(MODEL_POWER_BOUND),
        })
    }
}

/// Everything the center commands share, computed once per invocation.
pub struct TilingAnalysis {
    pub sigma: Monomial,
    pub s: SemigroupAlgebra,
    pub window: CentralWindow,
    pub reduced: ReducedCenterBound,
    pub witness: Option<NonnoetherianWitness>,
    pub fiber: Option<SpecialFiber>,
    pub z_fiber: Option<SpecialFiber>,
    pub fiber_note: Option<String>,
    pub krull: KrullReport,
}

pub fn analyze_tiling(ctx: &TilingContext) -> Result<TilingAnalysis, CliError> {
    ctx.require_grading()?;
    let s =
        center::cycle_algebra(&ctx.quiver, &ctx.contraction, &ctx.grading).map_err(member_limit)?;
    let sigma = ctx
        .contraction
        .cycle_image(&ctx.grading, &unit_cycle_at(&ctx.quiver, 0));
    let window =
        center::homotopy_center_window(&ctx.quiver, &ctx.contraction, &ctx.grading, ctx.bounds);
    let reduced = center::reduced_center_bound(&s, &window, &sigma, ctx.bounds);
    let witness = center::nonnoetherian_witness(
        &ctx.quiver,
        &ctx.contraction,
        &ctx.grading,
        &s,
        &sigma,
        ctx.bounds,
    );
    let z_nontrivial: Vec<Monomial> = reduced
        .certified
        .iter()
        .filter(|(m, _)| !m.is_trivial())
        .map(|(m, _)| m.clone())
        .collect();
    let window_nontrivial = window.nontrivial();

    let (fiber, z_fiber, fiber_note) = if witness.is_none() {
        let note = String::from(
            "no witness within bounds, consistent with a noetherian center; \
             the degenerate-point analysis is skipped",
        );
        (None, None, Some(note))
    } else if window_nontrivial.is_empty() {
        let note =
            String::from("the center window has no nontrivial monomials at this degree bound");
        (None, None, Some(note))
    } else {
        let fiber = center::special_fiber(&s, &window_nontrivial).map_err(locus_limit)?;
        let z_fiber = if z_nontrivial.is_empty() {
            None
        } else {
            Some(center::special_fiber(&s, &z_nontrivial).map_err(locus_limit)?)
        };
        (Some(fiber), z_fiber, None)
    };
    let krull = center::krull_dimensions(&s, &window_nontrivial, &z_nontrivial);
    Ok(TilingAnalysis {
        sigma,
        s,
        window,
        reduced,
        witness,
        fiber,
        z_fiber,
        fiber_note,
        krull,
    })
}

// ---- commands ----

pub fn cmd_validate(input: &str) -> Result<ValidateOut, CliError> {
    match load(input)? {
        InputFile::Tiling(t) => {
            let q = t.to_quiver();
            Ok(ValidateOut::from_tiling(&t.name, &q.validation_report()))
        }
        InputFile::Model(m) => Ok(ValidateOut::from_model(&m.name, &m.problems())),
    }
}

pub fn cmd_matchings(input: &str) -> Result<MatchingsOut, CliError> {
    let file = require_tiling(load(input)?, "matchings")?;
    let ctx = TilingContext::build(file, None, &BoundsOverride::default())?;
    let perfect = matchings::perfect_matchings(&ctx.quiver);
    let out: Vec<MatchingOut> = perfect
        .iter()
        .map(|d| MatchingOut {
            arrows: d.clone(),
            word: matching_word(&ctx.quiver, d),
            simple: matchings::is_simple(&ctx.quiver, d),
        })
        .collect();
    Ok(MatchingsOut {
        input: ctx.file.name.clone(),
        perfect_count: out.len(),
        simple_count: out.iter().filter(|m| m.simple).count(),
        nondegenerate: matchings::nondegenerate(&ctx.quiver, &perfect),
        matchings: out,
    })
}

fn matching_word(q: &DimerQuiver, d: &[usize]) -> String {
    let names: Vec<String> = d
        .iter()
        .map(|&a| q.arrows[a].label.clone().unwrap_or_else(|| format!("#{a}")))
        .collect();
    format!("{{{}}}", names.join(", "))
}

pub fn cmd_cycles(
    input: &str,
    contract: Option<&str>,
    vertex: Option<usize>,
    overrides: &BoundsOverride,
) -> Result<CyclesOut, CliError> {
    let file = require_tiling(load(input)?, "cycles")?;
    let ctx = TilingContext::build(file, contract, overrides)?;
    ctx.require_grading()?;
    if let Some(v) = vertex {
        if v >= ctx.quiver.vertices {
            return Err(CliError::Usage(format!(
                "vertex {v} is out of range; the tiling has {} vertices",
                ctx.quiver.vertices
            )));
        }
    }
    let cycles = center::vertex_simple_cycles(&ctx.quiver)
        .into_iter()
        .filter(|p| vertex.is_none_or(|v| p.base == v))
        .map(|p| CycleOut {
            base: p.base,
            arrows: p.arrows.clone(),
            word: path_word(&ctx.quiver, &p),
            homology: ctx.quiver.homology_class(&p.arrows),
            image: MonomialOut::new(&ctx.contraction.cycle_image(&ctx.grading, &p), &ctx.coords),
        })
        .collect();
    Ok(CyclesOut {
        input: ctx.file.name.clone(),
        contraction: ctx.contraction_name.clone(),
        coords: ctx.coords.clone(),
        cycles,
    })
}

pub fn cmd_contract(
    input: &str,
    contract: Option<&str>,
    overrides: &BoundsOverride,
) -> Result<ContractOut, CliError> {
    let file = require_tiling(load(input)?, "contract")?;
    let ctx = TilingContext::build(file, contract, overrides)?;
    let target = ctx.contraction.target();
    let relations_preserved = ctx
        .contraction
        .relations_preserved(&ctx.quiver, ctx.bounds.budget)
        .is_ok();
    Ok(ContractOut {
        input: ctx.file.name.clone(),
        contraction: ctx.contraction_name.clone(),
        contracted_arrows: ctx.contraction.contracted().iter().copied().collect(),
        target_vertices: target.vertices,
        target_arrows: target
            .arrows
            .iter()
            .map(|a| ArrowOut {
                tail: a.tail,
                head: a.head,
                winding: a.winding,
                label: a.label.clone(),
            })
            .collect(),
        vertex_images: (0..ctx.quiver.vertices)
            .map(|v| ctx.contraction.vertex_image(v))
            .collect(),
        arrow_images: (0..ctx.quiver.arrows.len())
            .map(|a| ctx.contraction.arrow_image(a))
            .collect(),
        relations_preserved,
        grading_width: ctx.grading.width(),
    })
}

pub fn cmd_check_cyclic(
    input: &str,
    contract: Option<&str>,
    overrides: &BoundsOverride,
) -> Result<CheckCyclicOut, CliError> {
    let file = require_tiling(load(input)?, "check-cyclic")?;
    let ctx = TilingContext::build(file, contract, overrides)?;
    let verdict =
        center::cyclicity(&ctx.quiver, &ctx.contraction, ctx.bounds).map_err(analysis_failed)?;
    Ok(CheckCyclicOut {
        input: ctx.file.name.clone(),
        contraction: ctx.contraction_name.clone(),
        bounds: bounds_out(ctx.bounds),
        cyclicity: CyclicityOut::new(&verdict, ctx.contraction.target(), &ctx.coords),
    })
}

/// The center report for either input kind.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum CenterReportOut {
    Tiling(Box<CenterOut>),
    Model(Box<ModelCenterOut>),
}

pub fn cmd_center_report(
    input: &str,
    contract: Option<&str>,
    overrides: &BoundsOverride,
) -> Result<CenterReportOut, CliError> {
    match load(input)? {
        InputFile::Tiling(file) => {
            let ctx = TilingContext::build(file, contract, overrides)?;
            let a = analyze_tiling(&ctx)?;
            let claim = window_claim(ctx.bounds);
            let verdict = center::cyclicity(&ctx.quiver, &ctx.contraction, ctx.bounds)
                .map_err(analysis_failed)?;
            Ok(CenterReportOut::Tiling(Box::new(CenterOut {
                input: ctx.file.name.clone(),
                contraction: ctx.contraction_name.clone(),
                bounds: bounds_out(ctx.bounds),
                coords: ctx.coords.clone(),
                sigma: MonomialOut::new(&a.sigma, &ctx.coords),
                cycle_algebra: GensOut::new(&a.s, &ctx.coords),
                homotopy_center: window_monomials(&a.window, &ctx.coords, claim.clone()),
                reduced_center: ReducedOut::new(&a.reduced, &ctx.coords, claim.clone()),
                witness: WitnessOut::from_tiling(
                    &a.witness,
                    ctx.bounds.power_bound,
                    &ctx.coords,
                    claim.clone(),
                ),
                noetherian: noetherian_flag(a.witness.is_some()),
                special_fiber: a
                    .fiber
                    .as_ref()
                    .map(|f| FiberOut::new(f, a.z_fiber.as_ref(), &ctx.coords, claim.clone())),
                fiber_note: a.fiber_note.clone(),
                dims: DimsOut::new(&a.krull, claim.clone()),
                frac_equal: ClaimedBool {
                    value: a.krull.frac_equal,
                    claim: claim.clone(),
                },
                torus_rank_ok: ClaimedBool {
                    value: a.krull.dim_s == 3,
                    claim: Claim::Exact,
                },
                cyclicity: CyclicityOut::new(&verdict, ctx.contraction.target(), &ctx.coords),
            })))
        }
        InputFile::Model(file) => {
            if contract.is_some() {
                return Err(CliError::Usage(format!(
                    "--contract does not apply to the monomial model {:?}",
                    file.name
                )));
            }
            let ctx = ModelContext::build(file, overrides)?;
            Ok(CenterReportOut::Model(Box::new(model_center_report(&ctx)?)))
        }
    }
}

fn model_center_report(ctx: &ModelContext) -> Result<ModelCenterOut, CliError> {
    let coords = &ctx.file.coords;
    let claim = model_claim(ctx.deg_bound);
    let window = ctx.model.center_window(ctx.deg_bound);
    let witness = ctx
        .model
        .witness(ctx.deg_bound, ctx.power_bound)
        .map_err(member_limit)?;
    let (fiber, note) = model_fiber(ctx, &witness, &window)?;
    let krull = ctx.model.krull(ctx.deg_bound);
    Ok(ModelCenterOut {
        input: ctx.file.name.clone(),
        deg_bound: ctx.deg_bound,
        power_bound: ctx.power_bound,
        coords: coords.clone(),
        sigma: MonomialOut::new(&ctx.model.sigma, coords),
        algebra: GensOut::new(&ctx.model.algebra, coords),
        center_window: WindowMonomials {
            count: window.len(),
            monomials: window.iter().map(|m| MonomialOut::new(m, coords)).collect(),
            claim: claim.clone(),
        },
        witness: model_witness_out(ctx, &witness, claim.clone()),
        noetherian: noetherian_flag(witness.is_some()),
        special_fiber: fiber,
        fiber_note: note,
        dims: DimsOut::new(&krull, claim.clone()),
        frac_equal: ClaimedBool {
            value: krull.frac_equal,
            claim,
        },
    })
}

fn model_witness_out(ctx: &ModelContext, witness: &Option<Monomial>, claim: Claim) -> WitnessOut {
    WitnessOut {
        found: witness.is_some(),
        monomial: witness
            .as_ref()
            .map(|m| MonomialOut::new(m, &ctx.file.coords)),
        power_bound: ctx.power_bound,
        note: witness
            .is_none()
            .then(|| String::from("no witness found within bounds (consistent with noetherian)")),
        claim,
    }
}

fn model_fiber(
    ctx: &ModelContext,
    witness: &Option<Monomial>,
    window: &[Monomial],
) -> Result<(Option<FiberOut>, Option<String>), CliError> {
    if witness.is_none() {
        return Ok((
            None,
            Some(String::from(
                "no witness within bounds, consistent with a noetherian center; \
                 the degenerate-point analysis is skipped",
            )),
        ));
    }
    if window.is_empty() {
        return Ok((
            None,
            Some(String::from(
                "the center window has no nontrivial monomials at this degree bound",
            )),
        ));
    }
    let fiber = ctx.model.fiber(ctx.deg_bound).map_err(locus_limit)?;
    Ok((
        Some(FiberOut::new(
            &fiber,
            None,
            &ctx.file.coords,
            model_claim(ctx.deg_bound),
        )),
        None,
    ))
}

pub fn cmd_krull(
    input: &str,
    contract: Option<&str>,
    overrides: &BoundsOverride,
) -> Result<KrullOut, CliError> {
    match load(input)? {
        InputFile::Tiling(file) => {
            let ctx = TilingContext::build(file, contract, overrides)?;
            let a = analyze_tiling(&ctx)?;
            let claim = window_claim(ctx.bounds);
            Ok(KrullOut {
                input: ctx.file.name.clone(),
                contraction: Some(ctx.contraction_name.clone()),
                dims: DimsOut::new(&a.krull, claim.clone()),
                frac_equal: ClaimedBool {
                    value: a.krull.frac_equal,
                    claim,
                },
                torus_rank_ok: Some(ClaimedBool {
                    value: a.krull.dim_s == 3,
                    claim: Claim::Exact,
                }),
            })
        }
        InputFile::Model(file) => {
            reject_contract(contract, &file)?;
            let ctx = ModelContext::build(file, overrides)?;
            let krull = ctx.model.krull(ctx.deg_bound);
            let claim = model_claim(ctx.deg_bound);
            Ok(KrullOut {
                input: ctx.file.name.clone(),
                contraction: None,
                dims: DimsOut::new(&krull, claim.clone()),
                frac_equal: ClaimedBool {
                    value: krull.frac_equal,
                    claim,
                },
                torus_rank_ok: None,
            })
        }
    }
}

fn reject_contract(contract: Option<&str>, file: &ModelFile) -> Result<(), CliError> {
    if contract.is_some() {
        return Err(CliError::Usage(format!(
            "--contract does not apply to the monomial model {:?}",
            file.name
        )));
    }
    Ok(())
}

pub fn cmd_locus(
    input: &str,
    contract: Option<&str>,
    overrides: &BoundsOverride,
) -> Result<LocusReportOut, CliError> {
    match load(input)? {
        InputFile::Tiling(file) => {
            let ctx = TilingContext::build(file, contract, overrides)?;
            let a = analyze_tiling(&ctx)?;
            let claim = window_claim(ctx.bounds);
            Ok(LocusReportOut {
                input: ctx.file.name.clone(),
                contraction: Some(ctx.contraction_name.clone()),
                coords: ctx.coords.clone(),
                algebra: GensOut::new(&a.s, &ctx.coords),
                noetherian: noetherian_flag(a.witness.is_some()),
                special_fiber: a
                    .fiber
                    .as_ref()
                    .map(|f| FiberOut::new(f, a.z_fiber.as_ref(), &ctx.coords, claim)),
                fiber_note: a.fiber_note.clone(),
            })
        }
        InputFile::Model(file) => {
            reject_contract(contract, &file)?;
            let ctx = ModelContext::build(file, overrides)?;
            let window = ctx.model.center_window(ctx.deg_bound);
            let witness = ctx
                .model
                .witness(ctx.deg_bound, ctx.power_bound)
                .map_err(member_limit)?;
            let (fiber, note) = model_fiber(&ctx, &witness, &window)?;
            Ok(LocusReportOut {
                input: ctx.file.name.clone(),
                contraction: None,
                coords: ctx.file.coords.clone(),
                algebra: GensOut::new(&ctx.model.algebra, &ctx.file.coords),
                noetherian: noetherian_flag(witness.is_some()),
                special_fiber: fiber,
                fiber_note: note,
            })
        }
    }
}

pub fn cmd_witness(
    input: &str,
    contract: Option<&str>,
    overrides: &BoundsOverride,
) -> Result<WitnessReportOut, CliError> {
    match load(input)? {
        InputFile::Tiling(file) => {
            let ctx = TilingContext::build(file, contract, overrides)?;
            let a = analyze_tiling(&ctx)?;
            Ok(WitnessReportOut {
                input: ctx.file.name.clone(),
                contraction: Some(ctx.contraction_name.clone()),
                coords: ctx.coords.clone(),
                witness: WitnessOut::from_tiling(
                    &a.witness,
                    ctx.bounds.power_bound,
                    &ctx.coords,
                    window_claim(ctx.bounds),
                ),
                noetherian: noetherian_flag(a.witness.is_some()),
            })
        }
        InputFile::Model(file) => {
            reject_contract(contract, &file)?;
            let ctx = ModelContext::build(file, overrides)?;
            let witness = ctx
                .model
                .witness(ctx.deg_bound, ctx.power_bound)
                .map_err(member_limit)?;
            Ok(WitnessReportOut {
                input: ctx.file.name.clone(),
                contraction: None,
                coords: ctx.file.coords.clone(),
                witness: model_witness_out(&ctx, &witness, model_claim(ctx.deg_bound)),
                noetherian: noetherian_flag(witness.is_some()),
            })
        }
    }
}

pub fn cmd_chain(
    input: &str,
    contract: Option<&str>,
    length: u32,
    overrides: &BoundsOverride,
) -> Result<ChainOut, CliError> {
    let file = require_tiling(load(input)?, "chain")?;
    let ctx = TilingContext::build(file, contract, overrides)?;
    ctx.require_grading()?;
    let s =
        center::cycle_algebra(&ctx.quiver, &ctx.contraction, &ctx.grading).map_err(member_limit)?;
    let sigma = ctx
        .contraction
        .cycle_image(&ctx.grading, &unit_cycle_at(&ctx.quiver, 0));
    let window =
        center::homotopy_center_window(&ctx.quiver, &ctx.contraction, &ctx.grading, ctx.bounds);
    let claim = window_claim(ctx.bounds);

    let dimension_chain =
        match center::verify_dimension_chain(&ctx.quiver, &ctx.contraction, &ctx.grading, &s) {
            Ok(chain) => DimensionChainOut::found(
                &chain,
                &ctx.quiver,
                &ctx.contraction,
                &ctx.grading,
                &ctx.coords,
                claim.clone(),
            ),
            Err(e) => DimensionChainOut::Inconclusive {
                reason: e.to_string(),
            },
        };

    let ascending_chain = match center::power_sigma_chain(
        &ctx.quiver,
        &ctx.contraction,
        &ctx.grading,
        &s,
        &window,
        &sigma,
        ctx.bounds,
        length,
    ) {
        Ok(chain) => AscendingChainOut::found(&chain, &ctx.quiver, &ctx.coords, claim),
        Err(ChainError::NoWitness) => AscendingChainOut::Skipped {
            note: String::from(
                "no witness found within bounds (consistent with noetherian), \
                 so there is no ascending chain to build",
            ),
        },
        Err(e) => AscendingChainOut::Inconclusive {
            reason: e.to_string(),
        },
    };

    Ok(ChainOut {
        input: ctx.file.name.clone(),
        contraction: ctx.contraction_name.clone(),
        bounds: bounds_out(ctx.bounds),
        coords: ctx.coords.clone(),
        dimension_chain,
        ascending_chain,
    })
}

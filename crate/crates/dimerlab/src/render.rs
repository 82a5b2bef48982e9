//! Plain-text rendering of the report structures. Output is assembled line
//! by line in a fixed order so repeated runs are byte-identical.

use std::fmt;

use crate::pipeline::CenterReportOut;
use crate::report::*;

fn claim_tag(c: &Claim) -> String {
    match c {
        Claim::Exact => String::from("[exact]"),
        Claim::Window { deg, len: Some(l) } => format!("[window: deg <= {deg}, len <= {l}]"),
        Claim::Window { deg, len: None } => format!("[window: deg <= {deg}]"),
    }
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn words(ms: &[MonomialOut]) -> String {
    ms.iter()
        .map(|m| m.word.as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for ValidateOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "validate {} ({})", self.input, self.kind)?;
        for check in &self.checks {
            if !check.ran {
                writeln!(f, "  {}: not run", check.name)?;
            } else if check.failures.is_empty() {
                writeln!(f, "  {}: ok", check.name)?;
            } else {
                writeln!(f, "  {}: {} failure(s)", check.name, check.failures.len())?;
                for failure in &check.failures {
                    writeln!(f, "    {failure}")?;
                }
            }
        }
        write!(f, "result: {}", if self.ok { "ok" } else { "invalid" })
    }
}

impl fmt::Display for MatchingsOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matchings of {}", self.input)?;
        writeln!(
            f,
            "perfect: {}, simple: {}, nondegenerate: {}",
            self.perfect_count,
            self.simple_count,
            yes_no(self.nondegenerate)
        )?;
        for m in &self.matchings {
            writeln!(f, "  {}{}", m.word, if m.simple { "  simple" } else { "" })?;
        }
        Ok(())
    }
}

impl fmt::Display for CyclesOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "vertex-simple cycles of {} (contraction: {})",
            self.input, self.contraction
        )?;
        writeln!(f, "coordinates: {}", self.coords.join(", "))?;
        for c in &self.cycles {
            writeln!(
                f,
                "  base {}: {}  homology {:?}  image {}",
                c.base, c.word, c.homology, c.image.word
            )?;
        }
        write!(f, "{} cycles", self.cycles.len())
    }
}

impl fmt::Display for ContractOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows = self
            .contracted_arrows
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(
            f,
            "contract {} by \"{}\" (arrows: {})",
            self.input,
            self.contraction,
            if arrows.is_empty() { "none" } else { &arrows }
        )?;
        writeln!(
            f,
            "target: {} vertices, {} arrows",
            self.target_vertices,
            self.target_arrows.len()
        )?;
        for (i, a) in self.target_arrows.iter().enumerate() {
            let label = a.label.as_deref().unwrap_or("-");
            writeln!(
                f,
                "  {i}: {} -> {}  winding {:?}  label {label}",
                a.tail, a.head, a.winding
            )?;
        }
        let vmap = self
            .vertex_images
            .iter()
            .enumerate()
            .map(|(v, t)| format!("{v}->{t}"))
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(f, "vertex images: {vmap}")?;
        let amap = self
            .arrow_images
            .iter()
            .enumerate()
            .map(|(a, t)| match t {
                Some(t) => format!("{a}->{t}"),
                None => format!("{a}->(contracted)"),
            })
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(f, "arrow images: {amap}")?;
        writeln!(
            f,
            "relations preserved: {}",
            yes_no(self.relations_preserved)
        )?;
        write!(
            f,
            "grading width (simple matchings of the target): {}",
            self.grading_width
        )
    }
}

fn bounds_line(b: &BoundsOut) -> String {
    format!(
        "bounds: len <= {}, deg <= {}, power <= {}, budget {}",
        b.len_bound, b.deg_bound, b.power_bound, b.budget
    )
}

fn cyclicity_lines(c: &CyclicityOut, out: &mut String) {
    match c {
        CyclicityOut::Cyclic {
            cancellativity_len_bound,
        } => {
            out.push_str(&format!(
                "verdict: cyclic (target cancellative up to length {cancellativity_len_bound}; cycle algebras agree)\n"
            ));
        }
        CyclicityOut::NotCyclic {
            reason,
            witness,
            pair,
        } => {
            out.push_str("verdict: not cyclic\n");
            out.push_str(&format!("reason: {reason}\n"));
            if let Some(w) = witness {
                out.push_str(&format!(
                    "witness monomial: {} (exps {:?})\n",
                    w.word, w.exps
                ));
            }
            if let Some(p) = pair {
                out.push_str(&format!(
                    "pair: p = {}, q = {}, r = {}, side {} ({})\n",
                    p.p.word, p.q.word, p.r.word, p.side, p.separation
                ));
            }
        }
        CyclicityOut::Undetermined => {
            out.push_str("verdict: undetermined (search budget exhausted)\n");
        }
    }
}

impl fmt::Display for CheckCyclicOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "check-cyclic {} (contraction: {})",
            self.input, self.contraction
        )?;
        writeln!(f, "{}", bounds_line(&self.bounds))?;
        let mut tail = String::new();
        cyclicity_lines(&self.cyclicity, &mut tail);
        write!(f, "{}", tail.trim_end())
    }
}

fn fiber_lines(fiber: &FiberOut, gens: &[MonomialOut], out: &mut String) {
    out.push_str(&format!("special fiber {}\n", claim_tag(&fiber.claim)));
    out.push_str(&format!("  m0 generators: {}\n", words(&fiber.m0_gens)));
    if let Some(z0) = &fiber.z0_gens {
        out.push_str(&format!("  z0 generators: {}\n", words(z0)));
    }
    if let Some(coincide) = fiber.sides_coincide {
        out.push_str(&format!("  sides coincide: {}\n", yes_no(coincide)));
    }
    out.push_str(&format!(
        "  locus: {} maximal face(s) in a rank-{} cone, min height {}\n",
        fiber.locus.maximal_faces.len(),
        fiber.locus.algebra_rank,
        fiber.locus.min_height
    ));
    for face in &fiber.locus.maximal_faces {
        let span = face
            .support
            .iter()
            .map(|&i| {
                gens.get(i)
                    .map_or_else(|| format!("gen {i}"), |g| g.word.clone())
            })
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!(
            "    support {:?} ({}), rank {}, height {}\n",
            face.support,
            if span.is_empty() { "origin" } else { &span },
            face.rank,
            face.height
        ));
    }
    out.push_str(&format!(
        "  ght {}, dim R (est) {}, gdim {}\n",
        fiber.ght, fiber.dim_r_est, fiber.gdim
    ));
    out.push_str(&format!(
        "  U nonempty: {}, dense: {}\n",
        yes_no(fiber.u_nonempty),
        yes_no(fiber.u_dense)
    ));
}

fn dims_lines(dims: &DimsOut, frac: &ClaimedBool, out: &mut String) {
    out.push_str("dimensions\n");
    out.push_str(&format!(
        "  dim S = {} {}\n",
        dims.dim_s,
        claim_tag(&dims.dim_s_claim)
    ));
    out.push_str(&format!(
        "  dim R (est) = {}, dim Zhat (est) = {} {}\n",
        dims.dim_r_est,
        dims.dim_zhat_est,
        claim_tag(&dims.estimate_claim)
    ));
    out.push_str(&format!(
        "  equal fraction fields (same exponent lattice): {} {}\n",
        yes_no(frac.value),
        claim_tag(&frac.claim)
    ));
}

fn witness_lines(w: &WitnessOut, out: &mut String) {
    out.push_str(&format!("witness {}\n", claim_tag(&w.claim)));
    match (&w.monomial, &w.note) {
        (Some(m), _) => out.push_str(&format!(
            "  found: {} (powers up to {} stay outside the center window)\n",
            m.word, w.power_bound
        )),
        (None, Some(note)) => out.push_str(&format!("  {note}\n")),
        (None, None) => out.push_str("  none\n"),
    }
}

impl fmt::Display for CenterOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        out.push_str(&format!(
            "center report: {} (contraction: {})\n",
            self.input, self.contraction
        ));
        out.push_str(&format!("{}\n", bounds_line(&self.bounds)));
        out.push_str(&format!(
            "coordinates: {} (simple matchings of the contracted tiling)\n",
            self.coords.join(", ")
        ));
        out.push_str(&format!("sigma: {}\n\n", self.sigma.word));

        out.push_str(&format!(
            "cycle algebra S {}\n",
            claim_tag(&self.cycle_algebra.claim)
        ));
        out.push_str(&format!(
            "  {} generator(s): {}\n",
            self.cycle_algebra.gens.len(),
            words(&self.cycle_algebra.gens)
        ));

        out.push_str(&format!(
            "homotopy center window {}\n",
            claim_tag(&self.homotopy_center.claim)
        ));
        out.push_str(&format!(
            "  {} monomial(s) realized at every vertex\n",
            self.homotopy_center.count
        ));
        out.push_str(&format!("  {}\n", words(&self.homotopy_center.monomials)));

        out.push_str(&format!(
            "reduced center bound {}\n",
            claim_tag(&self.reduced_center.claim)
        ));
        out.push_str(&format!(
            "  certified: {}, matches window: {}\n",
            self.reduced_center.certified.len(),
            yes_no(self.reduced_center.matches_window)
        ));

        witness_lines(&self.witness, &mut out);
        out.push_str(&format!("center flag: {}\n", self.noetherian));

        match (&self.special_fiber, &self.fiber_note) {
            (Some(fiber), _) => fiber_lines(fiber, &self.cycle_algebra.gens, &mut out),
            (None, Some(note)) => out.push_str(&format!("special fiber: skipped ({note})\n")),
            (None, None) => {}
        }

        dims_lines(&self.dims, &self.frac_equal, &mut out);
        out.push_str(&format!(
            "  torus rank check (dim S = 3): {} {}\n",
            if self.torus_rank_ok.value {
                "ok"
            } else {
                "FAILED, check the input transcription"
            },
            claim_tag(&self.torus_rank_ok.claim)
        ));
        cyclicity_lines(&self.cyclicity, &mut out);
        write!(f, "{}", out.trim_end())
    }
}

impl fmt::Display for ModelCenterOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        out.push_str(&format!("center report: {} (monomial model)\n", self.input));
        out.push_str(&format!(
            "bounds: deg <= {}, power <= {}\n",
            self.deg_bound, self.power_bound
        ));
        out.push_str(&format!("coordinates: {}\n", self.coords.join(", ")));
        out.push_str(&format!("sigma: {}\n\n", self.sigma.word));
        out.push_str(&format!("algebra S {}\n", claim_tag(&self.algebra.claim)));
        out.push_str(&format!(
            "  {} generator(s): {}\n",
            self.algebra.gens.len(),
            words(&self.algebra.gens)
        ));
        out.push_str(&format!(
            "center window {}\n",
            claim_tag(&self.center_window.claim)
        ));
        out.push_str(&format!(
            "  {} nontrivial monomial(s): {}\n",
            self.center_window.count,
            words(&self.center_window.monomials)
        ));
        witness_lines(&self.witness, &mut out);
        out.push_str(&format!("center flag: {}\n", self.noetherian));
        match (&self.special_fiber, &self.fiber_note) {
            (Some(fiber), _) => fiber_lines(fiber, &self.algebra.gens, &mut out),
            (None, Some(note)) => out.push_str(&format!("special fiber: skipped ({note})\n")),
            (None, None) => {}
        }
        dims_lines(&self.dims, &self.frac_equal, &mut out);
        write!(f, "{}", out.trim_end())
    }
}

impl fmt::Display for CenterReportOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterReportOut::Tiling(t) => t.fmt(f),
            CenterReportOut::Model(m) => m.fmt(f),
        }
    }
}

impl fmt::Display for KrullOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match &self.contraction {
            Some(c) => out.push_str(&format!(
                "krull report: {} (contraction: {})\n",
                self.input, c
            )),
            None => out.push_str(&format!("krull report: {} (monomial model)\n", self.input)),
        }
        dims_lines(&self.dims, &self.frac_equal, &mut out);
        if let Some(t) = &self.torus_rank_ok {
            out.push_str(&format!(
                "  torus rank check (dim S = 3): {} {}\n",
                if t.value {
                    "ok"
                } else {
                    "FAILED, check the input transcription"
                },
                claim_tag(&t.claim)
            ));
        }
        write!(f, "{}", out.trim_end())
    }
}

impl fmt::Display for LocusReportOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match &self.contraction {
            Some(c) => out.push_str(&format!(
                "locus report: {} (contraction: {})\n",
                self.input, c
            )),
            None => out.push_str(&format!("locus report: {} (monomial model)\n", self.input)),
        }
        out.push_str(&format!("coordinates: {}\n", self.coords.join(", ")));
        out.push_str(&format!(
            "algebra generators: {}\n",
            words(&self.algebra.gens)
        ));
        out.push_str(&format!("center flag: {}\n", self.noetherian));
        match (&self.special_fiber, &self.fiber_note) {
            (Some(fiber), _) => fiber_lines(fiber, &self.algebra.gens, &mut out),
            (None, Some(note)) => out.push_str(&format!("special fiber: skipped ({note})\n")),
            (None, None) => {}
        }
        write!(f, "{}", out.trim_end())
    }
}

impl fmt::Display for WitnessReportOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match &self.contraction {
            Some(c) => out.push_str(&format!(
                "witness report: {} (contraction: {})\n",
                self.input, c
            )),
            None => out.push_str(&format!(
                "witness report: {} (monomial model)\n",
                self.input
            )),
        }
        out.push_str(&format!("coordinates: {}\n", self.coords.join(", ")));
        witness_lines(&self.witness, &mut out);
        out.push_str(&format!("center flag: {}\n", self.noetherian));
        write!(f, "{}", out.trim_end())
    }
}

impl fmt::Display for ChainOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        out.push_str(&format!(
            "chain report: {} (contraction: {})\n",
            self.input, self.contraction
        ));
        out.push_str(&format!("{}\n", bounds_line(&self.bounds)));
        out.push_str(&format!("coordinates: {}\n", self.coords.join(", ")));
        match &self.dimension_chain {
            DimensionChainOut::Found {
                s1,
                t1,
                s2,
                t2,
                n1,
                n2,
                rank,
                lattice_matches,
                claim,
            } => {
                out.push_str(&format!("dimension chain {}\n", claim_tag(claim)));
                for (name, c) in [("s1", s1), ("t1", t1), ("s2", s2), ("t2", t2)] {
                    out.push_str(&format!(
                        "  {name}: {}  homology {:?}  image {}\n",
                        c.cycle.word, c.homology, c.image.word
                    ));
                }
                out.push_str(&format!("  s1*t1 = sigma^{n1}, s2*t2 = sigma^{n2}\n"));
                out.push_str(&format!(
                    "  lattice rank of {{sigma, images}}: {rank}; spans the cycle-algebra lattice: {}\n",
                    yes_no(*lattice_matches)
                ));
            }
            DimensionChainOut::Inconclusive { reason } => {
                out.push_str(&format!("dimension chain: inconclusive ({reason})\n"));
            }
        }
        match &self.ascending_chain {
            AscendingChainOut::Found {
                witness,
                shift,
                elements,
                head_not_generated,
                claim,
            } => {
                out.push_str(&format!("ascending chain {}\n", claim_tag(claim)));
                out.push_str(&format!("  witness {}, shift {}\n", witness.word, shift));
                for (i, e) in elements.iter().enumerate() {
                    out.push_str(&format!(
                        "  h{} = {}  certified at {} vertex(es)\n",
                        i + 1,
                        e.monomial.word,
                        e.certificates.len()
                    ));
                }
                out.push_str(&format!(
                    "  head not generated by the earlier elements and the window: {}\n",
                    yes_no(*head_not_generated)
                ));
            }
            AscendingChainOut::Skipped { note } => {
                out.push_str(&format!("ascending chain: skipped ({note})\n"));
            }
            AscendingChainOut::Inconclusive { reason } => {
                out.push_str(&format!("ascending chain: inconclusive ({reason})\n"));
            }
        }
        write!(f, "{}", out.trim_end())
    }
}

//! Subcommand implementations.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::json;

use multireg::coarsen::{CoarseEngine, RegNumber};
use multireg::cohomology::{
    cech_oracle_piece, reg_s_region, Dim, LocalCohomology, ModuleData, MonomialModule, OracleResult, PieceReport,
};
use multireg::family::{mask_label, regbv_membership, regstar_membership, vres_pipeline, IdealFamily};
use multireg::lattice::{Decision, DegreeVector};
use multireg::linalg::Field;
use multireg::region::{dreg_enumerate, parse_degree_list, reg_of_j, reg_of_j_level, DegreeBox, ResolutionTypeJ, SemigroupRegion};
use multireg::resolution::{minimal_resolution, minimalize, GradedComplex};
use multireg::ring::{catalog, load_ring_file, parse_monomial, GradedRing, MonomialIdeal};
use multireg::selftest;

use crate::report::{Report, Status};
use crate::{golden, Command, ModuleArgs};

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Coh { ring, i, d, window, shifts, prime, oracle } => {
            coh(&load(ring)?, *i, d.as_deref(), window.as_deref(), shifts, *prime, *oracle)
        }
        Command::RegS { ring, window } => reg_s(&load(ring)?, window),
        Command::RegJ { ring, j, window, level } => reg_j(&load(ring)?, j, window, *level),
        Command::Dreg { ring, d, p, window, regs_window } => dreg(&load(ring)?, d, *p, window, regs_window),
        Command::Resolve { ring, ideal, complex, write } => {
            resolve(&load(ring)?, ideal.as_deref(), complex.as_deref(), write.as_deref())
        }
        Command::Coarse { ring, v, ps, module } => coarse(&load(ring)?, v, ps, module),
        Command::Family { ring, ms, window, vectors, vres, b, module } => {
            family(&load(ring)?, ms, window.as_deref(), vectors.as_deref(), vres.as_deref(), b.as_deref(), module)
        }
        Command::Examples { show } => examples(*show),
        Command::Selftest { seed, suite } => run_selftest(*seed, suite.as_deref()),
    }
}

/// A ring file, or a catalog ring when no such file exists.
pub fn load(arg: &str) -> Result<GradedRing> {
    if Path::new(arg).exists() {
        return load_ring_file(arg).with_context(|| format!("loading {arg}"));
    }
    match catalog::by_name(arg) {
        Some(r) => Ok(r?),
        None => bail!("'{arg}' is neither a ring file nor a catalog ring (standard:N, weighted:A,B,.., multiproj:M,.., hirzebruch:T, p2, p1xp1)"),
    }
}

fn degree(ring: &GradedRing, s: &str) -> Result<DegreeVector> {
    let d: DegreeVector = s.parse()?;
    if d.rank() != ring.rank() {
        bail!("degree {d} has rank {}, the ring has rank {}", d.rank(), ring.rank());
    }
    Ok(d)
}

fn window(ring: &GradedRing, s: &str) -> Result<DegreeBox> {
    let b: DegreeBox = s.parse()?;
    if b.rank() == 1 && ring.rank() > 1 {
        return Ok(DegreeBox::cube(ring.rank(), b.lo.coords()[0], b.hi.coords()[0]));
    }
    if b.rank() != ring.rank() {
        bail!("window {s} has rank {}, the ring has rank {}", b.rank(), ring.rank());
    }
    Ok(b)
}

fn ideal(ring: &GradedRing, s: &str) -> Result<MonomialIdeal> {
    let names = ring.variable_names();
    let gens = s.split(',').map(|m| parse_monomial(m, &names)).collect::<multireg::Result<Vec<_>>>()?;
    Ok(MonomialIdeal::new(ring.nvars(), gens)?)
}

fn resolution_type(ring: &GradedRing, s: &str) -> Result<ResolutionTypeJ> {
    let j: ResolutionTypeJ = s.parse()?;
    j.check_rank(ring.rank())?;
    Ok(j)
}

/// The module and a description of it.
fn module(ring: &GradedRing, args: &ModuleArgs) -> Result<(ModuleData, String)> {
    if let Some(j) = &args.j {
        let j = resolution_type(ring, j)?;
        let label = format!("module with resolution type {j}");
        return Ok((ModuleData::Resolution(j), label));
    }
    if let Some(i) = &args.ideal {
        let ideal = ideal(ring, i)?;
        let j = minimal_resolution(ring, &ideal)?.type_j();
        let label = format!("S/{} with resolution type {j}", ideal.display_with(&ring.variable_names()));
        return Ok((ModuleData::Resolution(j), label));
    }
    if args.shifts.is_empty() {
        return Ok((ModuleData::ring(ring.rank()), "S".into()));
    }
    let shifts = args.shifts.iter().map(|s| degree(ring, s)).collect::<Result<Vec<_>>>()?;
    let m = ModuleData::Free(shifts);
    let label = m.to_string();
    Ok((m, label))
}

fn decision_label(d: &Decision, exact: bool) -> &'static str {
    match d {
        Decision::Yes => "yes",
        Decision::No if exact => "no",
        Decision::No => "not certified",
        Decision::Unknown(_) => "unknown",
    }
}

fn dim_status(d: &Dim) -> Status {
    if matches!(d, Dim::Unknown(_)) {
        Status::Uncertified
    } else {
        Status::Ok
    }
}

fn coh(
    ring: &GradedRing,
    i: usize,
    d: Option<&str>,
    win: Option<&str>,
    shifts: &[String],
    prime: Option<u64>,
    oracle: Option<i64>,
) -> Result<Report> {
    let field = match prime {
        Some(p) => Field::prime(p)?,
        None => Field::Rational,
    };
    let eng = LocalCohomology::new(ring, ring.irrelevant_ideal(), field)?;
    let shifts: Vec<DegreeVector> = if shifts.is_empty() {
        vec![DegreeVector::zero(ring.rank())]
    } else {
        shifts.iter().map(|s| degree(ring, s)).collect::<Result<_>>()?
    };
    let module = ModuleData::Free(shifts.clone());
    match (d, win) {
        (Some(d), _) => {
            let d = degree(ring, d)?;
            let piece = PieceReport::new(&eng, &shifts, i, &d);
            let mut r = Report::new(json!({ "command": "coh", "module": module.to_string(), "piece": piece.to_json() }));
            r.line(format!("{}", piece.dim));
            r.line(format!("module {module}"));
            r.line(piece.to_string());
            r.mark(dim_status(&piece.dim));
            if let Some(w) = oracle {
                let m = MonomialModule::free(ring.nvars(), &shifts);
                let got = cech_oracle_piece(ring, &m, i, &d, w, field)?;
                r.line(format!("Čech oracle (window {w}): {got}"));
                match (&got, &piece.dim) {
                    (OracleResult::Dim(a), Dim::Finite(b)) if b == &(*a).into() => {}
                    (OracleResult::Dim(_), _) => r.mark(Status::Failed),
                    _ => r.mark(Status::Uncertified),
                }
                r.json["oracle"] = json!(got.to_string());
            }
            Ok(r)
        }
        (None, Some(w)) => {
            let b = window(ring, w)?;
            let mut rows = Vec::new();
            let mut r = Report::new(json!(null));
            r.line(format!("H^{i} of {module}"));
            for p in b.points() {
                let dim = eng.free_dim(&shifts, i, &p);
                r.mark(dim_status(&dim));
                if dim.is_zero() != Some(true) {
                    r.line(format!("  {p}: {dim}"));
                }
                rows.push(json!({ "d": p, "dim": dim.to_json() }));
            }
            r.line("  (degrees not listed are zero)");
            r.json = json!({ "command": "coh", "i": i, "module": module.to_string(), "table": rows });
            Ok(r)
        }
        (None, None) => bail!("coh needs --d or --window"),
    }
}

fn reg_s_for(ring: &GradedRing, win: &str) -> Result<SemigroupRegion> {
    let eng = LocalCohomology::for_ring(ring)?;
    Ok(reg_s_region(ring, &eng, &window(ring, win)?)?)
}

fn region_report(command: &str, title: &str, region: &SemigroupRegion) -> Report {
    let mut r = Report::new(json!({ "command": command, "region": region.to_json() }));
    r.line(title);
    r.line(region.dump());
    if !region.is_exact() {
        r.mark(Status::Uncertified);
    }
    r
}

fn reg_s(ring: &GradedRing, win: &str) -> Result<Report> {
    let region = reg_s_for(ring, win)?;
    let title = if ring.declared_reg_s().is_some() { "reg(S) (declared in the ring file)" } else { "reg(S)" };
    Ok(region_report("regS", title, &region))
}

fn reg_j(ring: &GradedRing, j: &str, win: &str, level: Option<usize>) -> Result<Report> {
    let j = resolution_type(ring, j)?;
    let reg_s = reg_s_for(ring, win)?;
    let (title, region) = match level {
        Some(i) => (format!("reg^{i}(J) for J = {j}"), reg_of_j_level(&j, &reg_s, i)?),
        None => (format!("reg(J) for J = {j}"), reg_of_j(&j, &reg_s)?),
    };
    let mut r = region_report("regJ", &title, &region);
    r.json["J"] = json!(j.to_string());
    if !reg_s.is_exact() {
        r.mark(Status::Uncertified);
    }
    Ok(r)
}

fn dreg(ring: &GradedRing, d: &str, p: usize, win: &str, regs_win: &str) -> Result<Report> {
    let gens = parse_degree_list(d)?;
    if gens.is_empty() {
        bail!("D needs at least one generator");
    }
    for g in &gens {
        g.ensure_rank(ring.rank())?;
    }
    let reg_s = reg_s_for(ring, regs_win)?;
    let region = SemigroupRegion::new(ring.nc().clone(), gens)?;
    let level = dreg_enumerate(&region, &reg_s, p, &window(ring, win)?)?;
    let mut r = Report::new(json!({
        "command": "dreg",
        "D": region.to_json(),
        "p": p,
        "points": level.points,
        "maximal": level.maximal,
        "downward_closed": level.downward_closed,
    }));
    r.line(format!("K_{p} of dreg(D) for D generated by {}", fmt_list(region.generators())));
    r.line(format!("  points in window: {}", level.points.len()));
    r.line(format!("  maximal elements: {}", fmt_list(&level.maximal)));
    r.line(format!("  downward closed in window: {}", level.downward_closed));
    if !reg_s.is_exact() {
        r.mark(Status::Uncertified);
    }
    Ok(r)
}

fn fmt_list(v: &[DegreeVector]) -> String {
    if v.is_empty() {
        "(none)".into()
    } else {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn resolve(ring: &GradedRing, ideal_text: Option<&str>, complex: Option<&Path>, write: Option<&Path>) -> Result<Report> {
    let names = ring.variable_names();
    let (title, c) = match (ideal_text, complex) {
        (Some(t), _) => {
            let i = ideal(ring, t)?;
            (format!("minimal resolution of S/{}", i.display_with(&names)), minimal_resolution(ring, &i)?)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let c = GradedComplex::from_json(&text)?;
            c.validate(ring).context("the complex is not a valid graded complex")?;
            (format!("complex from {}", path.display()), c)
        }
        (None, None) => bail!("resolve needs --ideal or --complex"),
    };
    c.validate(ring)?;
    let minimal = minimalize(&c);
    let mut r = Report::new(json!({
        "command": "resolve",
        "type_J": c.type_j().to_string(),
        "minimal": c.is_minimal(),
        "minimal_type_J": minimal.type_j().to_string(),
        "complex": c.to_json(),
    }));
    r.line(&title);
    r.line(c.display_with(&names));
    r.line(format!("type J: {}", c.type_j()));
    if !c.is_minimal() {
        r.line(format!("not minimal; minimal type J: {}", minimal.type_j()));
    }
    if let Some(path) = write {
        let text = serde_json::to_string_pretty(&c.to_json())?;
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        r.line(format!("written to {}", path.display()));
    }
    Ok(r)
}

fn coarse(ring: &GradedRing, v: &str, ps: &[i64], args: &ModuleArgs) -> Result<Report> {
    let v = degree(ring, v)?;
    let ce = CoarseEngine::new(ring, &v)?;
    let (m, label) = module(ring, args)?;
    let cv = ce.coarsening();
    let names = ring.variable_names();
    let positive: Vec<&str> = cv.positive_variables().iter().map(|&k| names[k].as_str()).collect();
    let num = ce.vregnum(&m);
    let mut rows = Vec::new();
    let mut r = Report::new(json!(null));
    r.line(format!("coarsening v = {v} for {label}"));
    r.line(format!("  coarse degrees: {:?}", cv.coarse_degrees()));
    r.line(format!("  m = <{}>, c_v = {}, s_v = {}", positive.join(", "), cv.c(), cv.s()));
    r.line(format!("  vregnum: {num}"));
    if matches!(num, RegNumber::Unbounded) {
        r.mark(Status::Uncertified);
    }
    for &p in ps {
        let d = ce.vreg_membership(&m, p);
        if !d.is_yes() && !m.is_exact() {
            r.mark(Status::Uncertified);
        }
        r.line(format!("  p = {p}: {}", decision_label(&d, m.is_exact())));
        rows.push(json!({ "p": p, "regular": decision_label(&d, m.is_exact()) }));
    }
    r.json = json!({
        "command": "coarse",
        "v": v,
        "module": label,
        "coarse_degrees": cv.coarse_degrees(),
        "c_v": cv.c(),
        "s_v": cv.s(),
        "vregnum": num.to_json(),
        "membership": rows,
    });
    Ok(r)
}

#[allow(clippy::too_many_arguments)]
fn family(
    ring: &GradedRing,
    ms: &[String],
    win: Option<&str>,
    vectors: Option<&str>,
    vres: Option<&str>,
    bs: Option<&str>,
    args: &ModuleArgs,
) -> Result<Report> {
    let names = ring.variable_names();
    let fam = IdealFamily::from_fan(ring)?;
    let (m, label) = module(ring, args)?;
    let mut r = Report::new(json!(null));
    let mut json_sets = Vec::new();
    r.line(format!("family for {label}"));
    for (k, (p, b)) in fam.collections().iter().zip(fam.ideals()).enumerate() {
        let vars: Vec<&str> = (0..names.len()).filter(|x| p >> x & 1 == 1).map(|x| names[x].as_str()).collect();
        r.line(format!("  P_{} = {{{}}}  B_{} = {}", k + 1, vars.join(","), k + 1, b.display_with(&names)));
    }
    let decomposes = fam.decomposes(ring)?;
    r.line(format!("  V(B) = union of V(B_i): {decomposes}"));
    let fam = match vectors {
        Some(text) => {
            let vs = text.split(';').map(|s| degree(ring, s)).collect::<Result<Vec<_>>>()?;
            Some(fam.clone().with_vectors(ring, vs)?)
        }
        None => match fam.clone().with_orthogonal_vectors(ring) {
            Ok(f) => Some(f),
            Err(e) => {
                r.line(format!("  v_I: refused ({e})"));
                None
            }
        },
    };
    let base = fam.clone().map_or_else(|| IdealFamily::from_fan(ring), Ok)?;
    for (mask, _) in base.engines() {
        let v = fam.as_ref().and_then(|f| f.vectors()).and_then(|vs| vs.iter().find(|(k, _)| k == mask).map(|(_, v)| (*v).clone()));
        let b_i = base.variables_of(*mask);
        let vars: Vec<&str> = (0..names.len()).filter(|x| b_i >> x & 1 == 1).map(|x| names[x].as_str()).collect();
        let v_text = v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
        r.line(format!("  I = {}: B_I = <{}>, v_I = {v_text}", mask_label(*mask), vars.join(",")));
        json_sets.push(json!({ "I": mask_label(*mask), "variables": vars, "v": v }));
    }
    let eng = LocalCohomology::for_ring(ring)?;
    let mut points: Vec<DegreeVector> = ms.iter().map(|s| degree(ring, s)).collect::<Result<_>>()?;
    if let Some(w) = win {
        points.extend(window(ring, w)?.points());
    }
    let mut rows = Vec::new();
    if !points.is_empty() {
        r.line("  m: reg_B / reg_B* / reg_B*,v*");
    }
    for p in &points {
        let full = m.regular(&eng, p);
        let star = regstar_membership(ring, &base, &m, p)?;
        let bv = match &fam {
            Some(f) => Some(regbv_membership(f, &m, p)?.decision()),
            None => None,
        };
        let exact = m.is_exact();
        let bv_text = bv.as_ref().map_or("-", |d| if d.is_yes() { "yes" } else { "not certified" });
        r.line(format!("  {p}: {} / {} / {bv_text}", decision_label(&full, exact), decision_label(&star, exact)));
        if !exact && !full.is_yes() {
            r.mark(Status::Uncertified);
        }
        rows.push(json!({
            "m": p,
            "reg": decision_label(&full, exact),
            "regstar": decision_label(&star, exact),
            "regbv": bv_text,
        }));
    }
    let mut vres_json = json!(null);
    if let Some(mtext) = vres {
        let f = fam.as_ref().context("the pipeline needs coarsening vectors v_I")?;
        let md = degree(ring, mtext)?;
        let j = match &m {
            ModuleData::Resolution(j) => j.clone(),
            ModuleData::Free(s) => ResolutionTypeJ::free(s.clone()),
        };
        let b_list = bs
            .map(|t| t.split(',').map(|x| x.trim().parse::<i64>().map_err(anyhow::Error::from)).collect::<Result<Vec<_>>>())
            .transpose()?;
        let rep = vres_pipeline(ring, f, &j, &md, b_list.as_deref())?;
        r.line(format!("  pipeline at m = {md}:"));
        for (mask, v, b, num) in &rep.bounds {
            r.line(format!("    I = {}: v_I = {v}, b_I = {b}, vregnum bound {num}", mask_label(*mask)));
        }
        r.line(format!("    m in reg_B*,v*: {}", decision_label(&rep.regbv.decision(), false)));
        let failing: Vec<_> = rep.inequalities.iter().filter(|q| !q.holds()).collect();
        r.line(format!("    degree inequalities: {}", if failing.is_empty() { "all hold".to_string() } else { format!("{} fail", failing.len()) }));
        for q in &failing {
            r.line(format!("      I = {}, i = {}: {} > {}", mask_label(q.mask), q.i, q.lhs, q.rhs));
        }
        for (p, level) in rep.resolution.levels().iter().enumerate() {
            let bounds: Vec<String> = (0..rep.bounds.len())
                .map(|k| format!("{}·d <= {}", rep.bounds[k].1, rep.syzygy_box.bound(k, p)))
                .collect();
            r.line(format!("    J'_{p} = {{{}}} inside K_{p}: {}", fmt_list(level), bounds.join(", ")));
        }
        for c in rep.checks.iter().filter(|c| !c.violations.is_empty()) {
            for (d, ks) in &c.violations {
                r.line(format!("    level {}: {d} violates constraints {ks:?}", c.p));
            }
        }
        if !rep.hypotheses().is_yes() {
            r.mark(Status::Uncertified);
        }
        if !rep.degrees_in_boxes() {
            r.mark(Status::Failed);
        }
        r.line(format!("    verdict: {}", if rep.passed() { "passed" } else if rep.degrees_in_boxes() { "hypotheses not certified" } else { "degree bound violated" }));
        vres_json = json!({
            "m": md,
            "certified": rep.hypotheses().is_yes(),
            "degrees_in_boxes": rep.degrees_in_boxes(),
            "J": rep.resolution.to_string(),
            "b": rep.bounds.iter().map(|(_, _, b, _)| b).collect::<Vec<_>>(),
        });
    }
    r.json = json!({
        "command": "family",
        "module": label,
        "collections": fam_collections(&base, &names),
        "decomposes": decomposes,
        "sets": json_sets,
        "membership": rows,
        "pipeline": vres_json,
    });
    Ok(r)
}

fn fam_collections(f: &IdealFamily, names: &[String]) -> Vec<Vec<String>> {
    f.collections()
        .iter()
        .map(|p| (0..names.len()).filter(|x| p >> x & 1 == 1).map(|x| names[x].clone()).collect())
        .collect()
}

fn examples(show: bool) -> Result<Report> {
    let out = golden::render()?;
    let (out, expected) = (out.trim_end().to_string(), golden::EXPECTED.trim_end());
    let mut r = Report::new(json!({ "command": "examples", "output": out }));
    if show {
        r.text = out.clone();
        return Ok(r);
    }
    if out == expected {
        r.line(format!("examples: {} scenarios match the committed output", golden::SCENARIOS));
    } else {
        r.mark(Status::Failed);
        r.line("examples: output differs from the committed expectations");
        for (k, (a, b)) in out.lines().zip(expected.lines()).enumerate().filter(|(_, (a, b))| a != b).take(20) {
            r.line(format!("  line {}: expected {b:?}", k + 1));
            r.line(format!("  line {}: got      {a:?}", k + 1));
        }
        if out.lines().count() != expected.lines().count() {
            r.line(format!("  {} lines expected, {} produced", expected.lines().count(), out.lines().count()));
        }
    }
    r.json["matches"] = json!(out == expected);
    Ok(r)
}

fn run_selftest(seed: u64, suite: Option<&str>) -> Result<Report> {
    let report = match suite {
        Some(name) => selftest::SelftestReport { seed, suites: vec![selftest::run_suite(name, seed)?] },
        None => selftest::run_all(seed),
    };
    let mut r = Report::new(report.to_json());
    r.line(report.to_string());
    if !report.passed() {
        r.mark(Status::Failed);
    }
    Ok(r)
}

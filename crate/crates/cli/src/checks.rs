use std::path::Path;

use serde_json::json;
use sha2::{Digest, Sha256};

use quartinv_core::fixtures::{printed, MatrixFixtures, EMBEDDED_MATRICES};
use quartinv_core::gf2::{
    char_poly_quotient, char_poly_restricted, permutation_on_basis, submodules_of_dimension, BitMatrix, BitRow,
    CharPoly, MatrixGroup,
};
use quartinv_core::hilbert::{expand, IntegerPolynomial, RationalSeries};
use quartinv_core::invariants::{
    dickson_invariants, feasibility_report, free_module_check, minimal_generators, quotient_to_natural,
    smaller_feasible_multisets, verify_hsop, Ambient, Reproduction, Setting,
};
use quartinv_core::poly::{invariant_component, is_invariant, Polynomial, Ring};

use crate::report::{Recorder, ReportDocument};

/// Fixture text with its digest.
pub struct Inputs {
    pub fixtures: MatrixFixtures,
    pub sha256: String,
}

impl Inputs {
    /// The bundled fixture, or the file at `path`.
    pub fn load(path: Option<&Path>) -> Result<Self, String> {
        let text = match path {
            Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
            None => EMBEDDED_MATRICES.to_string(),
        };
        let fixtures = MatrixFixtures::parse(&text).map_err(|e| e.to_string())?;
        let sha256 = hex::encode(Sha256::digest(text.as_bytes()));
        Ok(Inputs { fixtures, sha256 })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub degree_bound: u32,
    pub feasibility: bool,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { degree_bound: 10, feasibility: false, timings: false }
    }
}

/// Degree bound of the optimality search.
pub const OPTIMALITY_MAX_DEGREE: u32 = 8;

type Outcome = Result<(String, String), String>;

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn ok<T>(r: &Result<T, String>) -> Result<&T, String> {
    r.as_ref().map_err(String::clone)
}

fn parse(text: &str, ring: &std::sync::Arc<Ring>) -> Result<Polynomial, String> {
    Polynomial::parse(text, ring).map_err(err)
}

/// `expected` when `ok`, otherwise the rendering of what was found.
fn compare(expected: &str, ok: bool, found: impl FnOnce() -> String) -> Outcome {
    Ok((expected.to_string(), if ok { expected.to_string() } else { found() }))
}

fn matrix(inputs: &Inputs, name: &str) -> Result<BitMatrix, String> {
    inputs.fixtures.get(name).cloned().map_err(err)
}

fn describe(c: &CharPoly) -> String {
    format!("{} ({})", c.poly, if c.irreducible { "irreducible" } else { "reducible" })
}

/// State shared by the checks.
struct Context {
    setting: Result<Setting, String>,
    run: Option<Result<Reproduction, String>>,
}

impl Context {
    fn new(inputs: &Inputs) -> Self {
        Context { setting: Setting::new(&inputs.fixtures).map_err(err), run: None }
    }

    fn setting(&self) -> Result<&Setting, String> {
        self.setting.as_ref().map_err(|e| format!("setting: {e}"))
    }

    fn reproduction(&mut self) -> Result<&Reproduction, String> {
        if self.run.is_none() {
            let r = match &self.setting {
                Ok(s) => Reproduction::run(s).map_err(err),
                Err(e) => Err(format!("setting: {e}")),
            };
            self.run = Some(r);
        }
        self.run.as_ref().expect("set above").as_ref().map_err(|e| format!("pipeline: {e}"))
    }
}

fn group_checks(r: &mut Recorder, inputs: &Inputs) {
    r.check("group.order", "closure of A and B has order 168", || {
        let g = MatrixGroup::closure_from_generators(&[matrix(inputs, "A3")?, matrix(inputs, "B3")?]).map_err(err)?;
        Ok(("168".into(), g.order().to_string()))
    });
    let on_w = || MatrixGroup::closure_from_generators(&[matrix(inputs, "DW_A")?, matrix(inputs, "DW_B")?]).map_err(err);
    r.check("group.orbit", "orbit of w_0 has size 7 with stabilizer of order 24", || {
        let g = on_w()?;
        let (orbit, stab) = g.orbit_and_stabilizer(&BitRow::unit(7, 6)).map_err(err)?;
        Ok(("orbit 7, stabilizer 24, group 168".into(), format!("orbit {}, stabilizer {}, group {}", orbit.len(), stab.order(), g.order())))
    });
    r.check("group.permutations", "generators permute the orbit of w_0 as printed (cycles read as i ↦ j when w_j·g = w_i)", || {
        let g = on_w()?;
        let omega = matrix(inputs, "OMEGA")?;
        let basis: Vec<BitRow> = (0..7).map(|i| omega.row(i)).collect();
        let image = permutation_on_basis(&g, &basis).map_err(err)?;
        Ok((
            format!("A: {}, B: {}", printed::PERMUTATION_A, printed::PERMUTATION_B),
            format!("A: {}, B: {}", image.of_generator(0).inverse(), image.of_generator(1).inverse()),
        ))
    });
}

fn module_checks(r: &mut Recorder, inputs: &Inputs) {
    r.check("module.charpoly", "C acts on W'' and W'/W'' with the printed characteristic polynomials", || {
        let c = matrix(inputs, "DW_C")?;
        let on_w_prime = c.block(0..6, 0..6);
        let w2 = [0b001u64, 0b010, 0b100];
        let sub = char_poly_restricted(&on_w_prime, &w2).map_err(err)?;
        let quo = char_poly_quotient(&on_w_prime, &w2).map_err(err)?;
        Ok((
            "W'': t^3 + t + 1 (irreducible); W'/W'': t^3 + t^2 + 1 (irreducible)".into(),
            format!("W'': {}; W'/W'': {}", describe(&sub), describe(&quo)),
        ))
    });
    r.check("module.basis_change", "the splitting basis conjugates D_W to D'_W", || {
        let p = matrix(inputs, "P_SPLIT")?;
        let p_inv = p.inverse().ok_or("basis change is singular")?;
        let mut found = Vec::new();
        for g in ["A", "B"] {
            let conj = p.mul(&matrix(inputs, &format!("DW_{g}"))?).mul(&p_inv);
            let same = conj == matrix(inputs, &format!("DWp_{g}"))?;
            found.push(format!("{g}: {}", if same { "equal" } else { "different" }));
        }
        Ok(("A: equal, B: equal".into(), found.join(", ")))
    });
    r.check("module.nonsplit", "the quartic module has exactly one 3-dimensional submodule", || {
        let g = MatrixGroup::closure_from_generators(&[matrix(inputs, "DWd_A")?, matrix(inputs, "DWd_B")?]).map_err(err)?;
        let report = submodules_of_dimension(&g, 3).map_err(err)?;
        Ok(("1".into(), report.subspaces.len().to_string()))
    });
}

fn printed_series() -> RationalSeries {
    RationalSeries::new(IntegerPolynomial::from_i64(&printed::HILBERT_NUMERATOR), printed::HILBERT_DENOMINATOR.to_vec())
}

fn hilbert_checks(r: &mut Recorder, ctx: &Context) {
    let series = || -> Result<RationalSeries, String> {
        let s = ctx.setting()?;
        s.quartic_series(&s.all_indices()).map_err(err)
    };
    r.check("hilbert.series", "Molien series of the quartic module equals the printed series", || {
        let computed = series()?;
        let expected = printed_series();
        compare(&expected.to_string(), computed == expected, || computed.to_string())
    });
    r.check("hilbert.coefficients", "series coefficients in degrees 0..7", || {
        let c = expand(&series()?, 7).map_err(err)?;
        Ok(("1, 0, 1, 2, 3, 4, 8, 10".into(), join(c)))
    });
    r.check("hilbert.rewritten", "the rewritten form is the same rational function", || {
        let rewritten = RationalSeries::new(
            IntegerPolynomial::from_i64(&printed::REWRITTEN_NUMERATOR),
            printed::REWRITTEN_DENOMINATOR.to_vec(),
        );
        let computed = series()?;
        compare(&rewritten.to_string(), computed == rewritten, || computed.to_string())
    });
}

fn primary_checks(r: &mut Recorder, ctx: &Context) {
    let omega = Ambient::W.ring();
    let quartic = Ambient::WPrime.ring();
    r.check("hsop.printed", "the printed primaries of the permutation module form an hsop", || {
        let s = ctx.setting()?;
        let polys = printed::F_HAT.iter().map(|t| parse(t, &omega)).collect::<Result<Vec<_>, _>>()?;
        let h = verify_hsop(&polys, &s.on_omega).map_err(err)?;
        Ok((join(printed::F_HAT_DEGREES), join(&h.degrees)))
    });
    r.check("hsop.restricted", "restriction to the quartic module gives an hsop", || {
        let s = ctx.setting()?;
        let polys = printed::F_HAT.iter().map(|t| parse(t, &omega)).collect::<Result<Vec<_>, _>>()?;
        let h = verify_hsop(&polys, &s.on_omega).map_err(err)?;
        let f = quartinv_core::invariants::restrict_hsop(s, &h).map_err(err)?;
        Ok((join(printed::F_DEGREES), join(&f.degrees)))
    });
    r.check("hsop.f1", "the degree-2 primary is the printed quadratic form", || {
        let s = ctx.setting()?;
        let fhat1 = parse(printed::F_HAT[1], &omega)?;
        let image = s.restriction.apply(&fhat1).map_err(err)?;
        Ok((parse(printed::F1, &quartic)?.to_string(), image.to_string()))
    });
    r.check("form.zeros", "the quadratic form has 35 nonzero zeros", || {
        let f1 = parse(printed::F1, &quartic)?;
        let zeros = (1u64..64).filter(|&v| !f1.evaluate(v)).count();
        Ok(("35".into(), zeros.to_string()))
    });
}

fn sylow_checks(r: &mut Recorder, ctx: &mut Context) {
    let run = ctx.reproduction().cloned();
    r.check("sylow.hsop", "the Sylow 2-subgroup has an hsop of degrees 1,1,2,2,2,4", || {
        let p = ok(&run)?;
        Ok((
            format!("order 8; {}", join(printed::SUBGROUP_PRIMARY_DEGREES)),
            format!("order {}; {}", p.sylow.order(), join(p.sylow_hsop.degree_multiset())),
        ))
    });
    r.check("sylow.secondaries", "its secondaries have degrees 0,3,3,6", || {
        let p = ok(&run)?;
        Ok((join(printed::SUBGROUP_SECONDARY_DEGREES), join(p.sylow_secondaries.degree_multiset())))
    });
    r.check("sylow.product_criterion", "4·8 = 32 = product of the hsop degrees", || {
        let p = ok(&run)?;
        let base = match &p.certificate {
            quartinv_core::invariants::CMCertificate::SubgroupTransfer { base, .. } => base.to_string(),
            other => other.to_string(),
        };
        Ok(("4·8 = 32 = 1·1·2·2·2·4".into(), base))
    });
    r.check("sylow.transfer", "odd index 21 transfers Cohen-Macaulayness to G", || {
        let p = ok(&run)?;
        p.certificate.validate().map_err(err)?;
        let chain = p.certificate.chain();
        Ok(("8 → 168, index 21".into(), format!("{} → {}, index {}", chain[0], chain[chain.len() - 1], chain[chain.len() - 1] / chain[0])))
    });
    r.check("presentation.vanish", "every relation of the subgroup presentation substitutes to 0", || {
        let p = ok(&run)?;
        let mut sub = p.subring.clone();
        let nonzero = p.presentation.relations.iter().filter(|(_, _, rel)| !sub.evaluate(rel).is_zero()).count();
        Ok((
            "6 relations, 0 nonzero".into(),
            format!("{} relations, {nonzero} nonzero", p.presentation.relations.len()),
        ))
    });
    r.check("presentation.degrees", "relations for g'_1^2, g'_1g'_2, g'_2^2 are homogeneous of degree 6", || {
        let p = ok(&run)?;
        let degrees: Vec<String> = p
            .presentation
            .relations
            .iter()
            .filter(|(i, j, _)| *i <= 2 && *j <= 2)
            .map(|(_, _, rel)| rel.homogeneous_degree().map_or("inhomogeneous".into(), |d| d.to_string()))
            .collect();
        Ok(("6, 6, 6".into(), degrees.join(", ")))
    });
}

fn product_table(products: &std::collections::BTreeMap<usize, Vec<usize>>, degrees: &[u32]) -> String {
    products
        .iter()
        .map(|(k, f)| format!("g{} = {} ({})", k + 1, f.iter().map(|i| format!("g{}", i + 1)).collect::<Vec<_>>().join("*"), degrees[*k]))
        .collect::<Vec<_>>()
        .join("; ")
}

fn printed_product_table() -> String {
    printed::PRODUCT_TABLE
        .iter()
        .enumerate()
        .map(|(k, (f, d))| format!("g{} = {} ({d})", k + 7, f.iter().map(|i| format!("g{i}")).collect::<Vec<_>>().join("*")))
        .collect::<Vec<_>>()
        .join("; ")
}

fn secondary_checks(r: &mut Recorder, ctx: &mut Context) {
    let run = ctx.reproduction().cloned();
    let setting = ctx.setting().cloned();
    r.check("secondaries.degrees", "18 secondaries with the printed degrees", || {
        let p = ok(&run)?;
        Ok((join(printed::SECONDARY_DEGREES), join(&p.secondaries.set.degrees)))
    });
    r.check("secondaries.products", "the printed product table", || {
        let p = ok(&run)?;
        Ok((printed_product_table(), product_table(&p.secondaries.set.products, &p.secondaries.set.degrees)))
    });
    r.check("secondaries.independent", "the secondaries are independent modulo the primaries", || {
        let p = ok(&run)?;
        let ok = p.quotient.independent_mod_relations(&p.secondaries.images).map_err(err)?;
        Ok(("true".into(), ok.to_string()))
    });
    r.check("generators.minimal", "f_1..f_6 and g_2..g_6 generate minimally, up to degree 7", || {
        let p = ok(&run)?;
        let s = ok(&setting)?;
        let fresh = p.generator_secondaries();
        let mut gens = p.primaries.polynomials.clone();
        gens.extend(fresh.iter().filter(|&&k| p.secondaries.set.degrees[k] > 0).map(|&k| p.secondaries.set.polynomials[k].clone()));
        let minimal = minimal_generators(&s.on_quartic, &Ambient::WPrime.ring(), &gens, 7).map_err(err)?;
        let degrees: Vec<u32> = fresh.iter().map(|&k| p.secondaries.set.degrees[k]).collect();
        Ok((
            format!("12 generators; secondary degrees {}; minimal true", join(printed::GENERATOR_DEGREES)),
            format!("{} generators; secondary degrees {}; minimal {minimal}", p.primaries.len() + fresh.len(), join(degrees)),
        ))
    });
}

fn dickson_checks(r: &mut Recorder, ctx: &mut Context) {
    let plane = Ambient::WDoublePrime.ring();
    r.check("dickson.triple", "the Dickson invariants are the printed c_0, c_1, c_2", || {
        let t = dickson_invariants();
        let expected = [printed::C0, printed::C1, printed::C2].iter().map(|c| parse(c, &plane)).collect::<Result<Vec<_>, _>>()?;
        Ok((join(expected), join(t.polynomials())))
    });
    let setting = ctx.setting().cloned();
    r.check("dickson.hsop", "c_0, c_1, c_2 form an hsop of the natural module", || {
        let s = ok(&setting)?;
        let h = verify_hsop(&dickson_invariants().polynomials(), &s.natural).map_err(err)?;
        Ok(("7, 6, 4".into(), join(&h.degrees)))
    });
    let run = ctx.reproduction().cloned();
    r.check("dickson.quotient", "f_4, f_5, f_6 map to c_2, c_1, c_0", || {
        let s = ok(&setting)?;
        let p = ok(&run)?;
        let f = &p.primaries.polynomials;
        let t = quotient_to_natural(&s, &f[3], &f[4], &f[5]).map_err(err)?;
        let d = dickson_invariants();
        Ok((join([d.c2, d.c1, d.c0]), join([t.c2, t.c1, t.c0])))
    });
}

fn klein_check(r: &mut Recorder, ctx: &Context) {
    r.check("klein.invariant", "the twisted Klein quartic spans the degree-4 invariants", || {
        let s = ctx.setting()?;
        let plane = Ambient::WDoublePrime.ring();
        let k = parse(printed::KLEIN_TWIST, &plane)?;
        let invariant = is_invariant(&k, &s.natural).map_err(err)?.is_ok();
        let component = invariant_component(&s.natural, &plane, 4).map_err(err)?;
        let spans = component.basis == vec![k.clone()];
        Ok((
            "invariant true; dimension 1; spanned true".into(),
            format!("invariant {invariant}; dimension {}; spanned {spans}", component.dimension()),
        ))
    });
}

fn feasibility_check(r: &mut Recorder, ctx: &Context, opts: &Options) {
    let id = "feasibility.infeasible";
    let description = "no hsop has degrees 2,3,3,4,4,7";
    if !opts.feasibility {
        r.skip(id, description, "pass --enable-feasibility-search");
        return;
    }
    r.check(id, description, || {
        let s = ctx.setting()?;
        let report = feasibility_report(&s.on_quartic, &Ambient::WPrime.ring(), &printed::INFEASIBLE_DEGREES).map_err(err)?;
        Ok(("infeasible".into(), if report.feasible() { "feasible" } else { "infeasible" }.into()))
    });
}

/// The comparisons against printed objects.
pub fn verify_paper(inputs: &Inputs, opts: &Options) -> ReportDocument {
    let mut r = Recorder::new(opts.timings);
    let mut ctx = Context::new(inputs);
    group_checks(&mut r, inputs);
    module_checks(&mut r, inputs);
    hilbert_checks(&mut r, &ctx);
    primary_checks(&mut r, &ctx);
    sylow_checks(&mut r, &mut ctx);
    secondary_checks(&mut r, &mut ctx);
    dickson_checks(&mut r, &mut ctx);
    klein_check(&mut r, &ctx);
    feasibility_check(&mut r, &ctx, opts);
    ReportDocument::new(inputs.sha256.clone(), r.finish())
}

/// Everything in [`verify_paper`], the internal consistency checks of the pipeline and
/// its objects as artifacts.
pub fn reproduce(inputs: &Inputs, opts: &Options) -> ReportDocument {
    let mut r = Recorder::new(opts.timings);
    let mut ctx = Context::new(inputs);
    group_checks(&mut r, inputs);
    module_checks(&mut r, inputs);
    hilbert_checks(&mut r, &ctx);
    primary_checks(&mut r, &ctx);
    sylow_checks(&mut r, &mut ctx);
    secondary_checks(&mut r, &mut ctx);
    dickson_checks(&mut r, &mut ctx);
    klein_check(&mut r, &ctx);
    feasibility_check(&mut r, &ctx, opts);
    pipeline_checks(&mut r, &mut ctx, opts);
    let mut doc = ReportDocument::new(inputs.sha256.clone(), r.finish());
    if let Ok(p) = ctx.reproduction() {
        doc.artifacts = Some(artifacts(p));
    }
    doc
}

fn pipeline_checks(r: &mut Recorder, ctx: &mut Context, opts: &Options) {
    let setting = ctx.setting().cloned();
    let run = ctx.reproduction().cloned();
    let bound = opts.degree_bound;
    r.check("pipeline.sylow_free", &format!("subgroup invariants are free over its hsop up to degree {bound}"), || {
        let p = ok(&run)?;
        let rows = free_module_check(&p.sylow, &p.sylow_hsop, &p.sylow_secondaries, bound).map_err(err)?;
        Ok((join(rows.iter().map(|r| r.1)), join(rows.iter().map(|r| r.2))))
    });
    r.check("pipeline.free", &format!("invariants are free over the primaries up to degree {bound}"), || {
        let s = ok(&setting)?;
        let p = ok(&run)?;
        let rows = free_module_check(&s.on_quartic, &p.primaries, &p.secondaries.set, bound).map_err(err)?;
        Ok((join(rows.iter().map(|r| r.1)), join(rows.iter().map(|r| r.2))))
    });
    r.check("pipeline.round_trip", "subring expressions expand back to their polynomials", || {
        let p = ok(&run)?;
        let mut sub = p.subring.clone();
        let mut wrong = 0;
        let mut total = 0;
        for (e, f) in p.primary_expressions.iter().zip(&p.primaries.polynomials) {
            total += 1;
            wrong += usize::from(&sub.evaluate(e) != f);
        }
        for (k, e) in &p.secondaries.expressions {
            total += 1;
            wrong += usize::from(sub.evaluate(e) != p.secondaries.set.polynomials[*k]);
        }
        Ok((format!("{total} of {total}"), format!("{} of {total}", total - wrong)))
    });
    r.check("pipeline.invariant", "all 18 secondaries are invariant", || {
        let s = ok(&setting)?;
        let p = ok(&run)?;
        let mut ok = 0;
        for g in &p.secondaries.set.polynomials {
            ok += usize::from(is_invariant(g, &s.on_quartic).map_err(err)?.is_ok());
        }
        Ok(("18".into(), ok.to_string()))
    });
    let id = "pipeline.optimal";
    let description = "no feasible degree multiset has product below 3024";
    if !opts.feasibility {
        r.skip(id, description, "pass --enable-feasibility-search");
        return;
    }
    r.check(id, description, || {
        let s = ok(&setting)?;
        let series = s.quartic_series(&s.all_indices()).map_err(err)?;
        let (examined, feasible) = smaller_feasible_multisets(
            &s.on_quartic,
            &Ambient::WPrime.ring(),
            &series,
            3024,
            OPTIMALITY_MAX_DEGREE,
        )
        .map_err(err)?;
        let render = |v: &[Vec<u32>]| v.iter().map(|m| format!("{{{}}}", join(m))).collect::<Vec<_>>().join(" ");
        Ok((
            format!("feasible: none; examined: {}", render(&examined)),
            format!("feasible: {}; examined: {}", if feasible.is_empty() { "none".into() } else { render(&feasible) }, render(&examined)),
        ))
    });
}

fn artifacts(p: &Reproduction) -> serde_json::Value {
    let texts = |v: &[Polynomial]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let set = &p.secondaries.set;
    let secondaries: Vec<serde_json::Value> = (0..set.len())
        .map(|k| match set.products.get(&k) {
            Some(f) => json!({
                "name": format!("g{}", k + 1),
                "degree": set.degrees[k],
                "product": f.iter().map(|i| format!("g{}", i + 1)).collect::<Vec<_>>(),
            }),
            None => json!({
                "name": format!("g{}", k + 1),
                "degree": set.degrees[k],
                "polynomial": set.polynomials[k].to_string(),
                "expression": p.secondaries.expressions.get(&k).map(|e| e.to_string()),
            }),
        })
        .collect();
    json!({
        "permutation_primaries": { "degrees": p.permutation_primaries.degrees, "polynomials": texts(&p.permutation_primaries.polynomials) },
        "primaries": { "degrees": p.primaries.degrees, "polynomials": texts(&p.primaries.polynomials) },
        "sylow": {
            "order": p.sylow.order(),
            "primaries": { "degrees": p.sylow_hsop.degrees, "polynomials": texts(&p.sylow_hsop.polynomials) },
            "secondaries": { "degrees": p.sylow_secondaries.degrees, "polynomials": texts(&p.sylow_secondaries.polynomials) },
        },
        "certificate": { "kind": p.certificate.kind(), "chain": p.certificate.chain(), "witness": p.certificate.to_string() },
        "presentation": {
            "generators": p.presentation.generator_names(),
            "degrees": p.presentation.ring.weights(),
            "relations": p.presentation.relations.iter().map(|(i, j, r)| json!({ "product": [i, j], "relation": r.to_string() })).collect::<Vec<_>>(),
            "primaries": texts(&p.primary_expressions),
        },
        "secondaries": secondaries,
        "dickson": texts(&dickson_invariants().polynomials()),
    })
}

/// Named group for `hilbert`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    G,
    D,
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    W,
    WPrime,
}

pub struct HilbertOutput {
    pub series: RationalSeries,
    pub hsop_degrees: Vec<u32>,
    pub numerator: IntegerPolynomial,
    pub coefficients: Vec<String>,
}

/// Exact Hilbert series of a group on one of the two modules.
pub fn hilbert(inputs: &Inputs, group: GroupSpec, module: ModuleSpec) -> Result<HilbertOutput, String> {
    let s = Setting::new(&inputs.fixtures).map_err(err)?;
    let indices = match group {
        GroupSpec::G => s.all_indices(),
        GroupSpec::D => s.sylow2.clone(),
        GroupSpec::Trivial => vec![s.natural.index_of(&BitMatrix::identity(3)).ok_or("identity missing")?],
    };
    let series = match module {
        ModuleSpec::W => s.permutation_series(&indices),
        ModuleSpec::WPrime => s.quartic_series(&indices),
    }
    .map_err(err)?;
    let mut hsop_degrees: Vec<u32> = match group {
        GroupSpec::G => printed::F_DEGREES.to_vec(),
        GroupSpec::D => printed::SUBGROUP_PRIMARY_DEGREES.to_vec(),
        GroupSpec::Trivial => vec![1; 6],
    };
    if module == ModuleSpec::W {
        hsop_degrees.push(1);
        hsop_degrees.sort_unstable();
    }
    let numerator = quartinv_core::hilbert::numerator_for_degrees(&series, &hsop_degrees).map_err(err)?;
    let coefficients = expand(&series, 19).map_err(err)?.into_iter().map(|c| c.to_string()).collect();
    Ok(HilbertOutput { series, hsop_degrees, numerator, coefficients })
}

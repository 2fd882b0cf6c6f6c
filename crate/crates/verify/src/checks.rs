//! The check catalog and the implementation of every check.
//!
//! A check runs at one parameter instance and returns `Ok(None)` on success
//! or `Ok(Some(summary))` describing the first failure.

use std::cell::OnceCell;

use daha_core::ncalg::{
    antispherical, aw_dual_relations, casimir_word, center_probe, centralizer_probe, check_step_identity,
    daha_dual_relations, daha_relations, duality_image, embed_aw, idempotents, is_o_of, iso_antispherical,
    iso_spherical, psym_commutator, relation_k0, relation_k1, shift_operator_identities, shift_operator_perturbed,
    spherical, step_catalog, Alphabet, AwRelation, DahaAlgebra, DualityKind, Element, Letter, NormalForm,
    RewriteSystem, StepIdentity, Strategy, DEFAULT_BUDGET,
};
use daha_core::params::{random_point, ParamValues, Params, DEFAULT_GENERICITY_BOUND};
use daha_core::polyrep::{BasicRep, LaurentPoly, Op};
use daha_core::{RatFunc, Result, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use Letter::{K0, K1, T1, Y, Yi, Z, Zi};

pub type Outcome = Result<Option<String>>;

/// Bounds shared by all checks.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_mn: i32,
    pub max_degree: u32,
    pub max_n: u32,
}

/// Parameters of one run of a check, with engines built on demand.
pub struct Instance {
    pub params: Params,
    engine: OnceCell<DahaAlgebra>,
    rep: OnceCell<BasicRep>,
}

impl Instance {
    /// `params` with the square-root extension enabled.
    pub fn new(params: Params) -> Instance {
        Instance { params: params.with_extension(), engine: OnceCell::new(), rep: OnceCell::new() }
    }

    pub fn values(&self) -> &ParamValues {
        self.params.values()
    }

    pub fn engine(&self) -> &DahaAlgebra {
        self.engine.get_or_init(|| DahaAlgebra::new(self.values().clone()))
    }

    pub fn rep(&self) -> &BasicRep {
        self.rep.get_or_init(|| BasicRep::new(self.values()))
    }

    pub fn is_symbolic(&self) -> bool {
        self.params.assignments().is_none()
    }
}

/// Per-check state: the bounds, the check's own random stream and a
/// symbolic engine for computations in the dual algebra.
pub struct Job<'a> {
    pub bounds: Bounds,
    pub rng: ChaCha8Rng,
    pub symbolic: &'a DahaAlgebra,
}

#[derive(Clone, Copy)]
pub enum Kind {
    Named(fn(&Instance, &mut Job) -> Outcome),
    Step(&'static StepIdentity),
}

#[derive(Clone)]
pub struct CheckInfo {
    pub id: String,
    pub description: String,
    /// Too expensive for fully symbolic parameters; run at seeded random
    /// points instead.
    pub heavy: bool,
    pub kind: Kind,
}

type Entry = (&'static str, &'static str, bool, fn(&Instance, &mut Job) -> Outcome);

const BEFORE_STEPS: &[Entry] = &[
    ("relations.daha", "every defining DAHA relation reduces to 0 under both the engine and the rewrite system", false, relations_daha),
    ("confluence.spot", "critical pairs resolve; 100 random words reduce to fixed points, identically under both rewrite orders and the engine", false, confluence_spot),
    ("embed.k1-relation", "the extended K1K0K1 relation embeds to 0", false, embed_k1_relation),
    ("embed.k0-relation", "the extended K0K1K0 relation embeds to 0", false, embed_k0_relation),
    ("embed.casimir", "the extended Casimir word minus Q0 embeds to 0", false, embed_casimir),
    ("embed.t1-central", "T1 commutes with the images of K0 and K1", false, embed_t1_central),
    ("embed.t1-quadratic", "(T1+ab)(T1+1) = 0", false, embed_t1_quadratic),
    ("idempotents", "P_sym and P_sym^- are orthogonal idempotents summing to 1", false, check_idempotents),
    ("spherical.mult", "S(U)S(V) = S(UV) and S^-(U)S^-(V) = S^-(UV) for U, V images of AW words of length <= 2", false, spherical_mult),
    ("iso.spherical.mult", "U -> (1-ab)^-1 U (T1+1) is multiplicative on word pairs of total length <= 4 and kills the AW(3,Q0) relations", false, iso_spherical_mult),
    ("iso.antispherical.mult", "U -> (ab-1)^-1 U~ (T1+ab) is multiplicative on word pairs of total length <= 4 and kills the relations at (qa,qb,c,d)", false, iso_antispherical_mult),
];

const AFTER_STEPS: &[Entry] = &[
    ("o-filtration", "the o(Z^m Y^n) predicate agrees with its definition on all monomials with |k|,|l| <= 4", false, o_filtration),
    ("duality.aw", "K0 -> aK1, K1 -> s^-1 K0 sends the extended AW relations at the dual parameters to 0 and is anti-multiplicative on 20 random word pairs", false, duality_aw),
    ("duality.daha", "Y -> aZ^-1, Z -> sY^-1, T1 -> T1 sends the DAHA relations at the dual parameters to 0 and is anti-multiplicative on 20 random word pairs", false, duality_daha),
    ("shiftops", "both shift-operator sandwiches vanish; replacing a^2b^2 by ab does not", false, shiftops),
    ("centralizer.samples", "images of AW elements commute with T1 and P_sym; Z and Y do not commute with T1", false, centralizer_samples),
    ("center.daha", "every non-identity basis element with |m|+|n|+i <= 3 fails to commute with some generator", false, center_daha),
    ("eigen.pn", "D_sym P_n = lambda_n P_n with P_n monic and symmetric for n <= max-n; lambda_0..lambda_20 distinct at a generic point", false, eigen_pn),
    ("recurrence", "(z+1/z) P_n = P_{n+1} + beta_n P_n + gamma_n P_{n-1} for n <= max-degree, with gamma_n != 0 unless the point is special", true, recurrence),
    ("casimir.scalar", "the Casimir word acts on z^k + z^-k as Q0, for k <= max-degree", false, casimir_scalar),
    ("awrel.inrep", "both AW(3) relations vanish on z^k + z^-k for k <= max-degree; B+1 does not", false, awrel_inrep),
    ("symmetry.abcd", "P_n is invariant under a<->b and a<->c, for n <= 5", false, symmetry_abcd),
    ("shifted.qn", "Q_n is monic of degree n and differs from P_n, for 1 <= n <= 6; Q_0 = 0", false, shifted_qn),
    ("polyrep.word", "K0, K1 words act identically through D_sym and through the tridiagonal model in the P_n basis", true, polyrep_word),
];

/// The full catalog, in run order.
pub fn catalog() -> Vec<CheckInfo> {
    let named = |&(id, desc, heavy, f): &Entry| CheckInfo {
        id: id.to_string(),
        description: desc.to_string(),
        heavy,
        kind: Kind::Named(f),
    };
    let mut out: Vec<CheckInfo> = BEFORE_STEPS.iter().map(named).collect();
    out.extend(step_catalog().iter().map(|s| CheckInfo {
        id: s.id.to_string(),
        description: format!(
            "{}{}",
            s.description,
            if s.exact { "" } else { ", for 1 <= m,n <= max-mn" }
        ),
        heavy: false,
        kind: Kind::Step(s),
    }));
    out.extend(AFTER_STEPS.iter().map(named));
    out
}

pub fn run_check(kind: Kind, inst: &Instance, job: &mut Job) -> Outcome {
    match kind {
        Kind::Named(f) => f(inst, job),
        Kind::Step(s) => step(s, inst, job),
    }
}

const SUMMARY_LIMIT: usize = 2000;

fn clip(mut s: String) -> String {
    if s.len() > SUMMARY_LIMIT {
        let mut cut = SUMMARY_LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str("...");
    }
    s
}

fn nonzero(label: &str, nf: &NormalForm) -> Option<String> {
    (!nf.is_zero()).then(|| clip(format!("{label}: {}", nf.summary())))
}

fn lp_summary(f: &LaurentPoly) -> String {
    match f.coeffs().iter().next() {
        None => String::new(),
        Some((k, c)) => format!("{} term(s); first: ({}) * z^{}", f.coeffs().len(), c, k),
    }
}

fn lp_nonzero(label: &str, f: &LaurentPoly) -> Option<String> {
    (!f.is_zero()).then(|| clip(format!("{label}: {}", lp_summary(f))))
}

fn word_name(w: &[Letter]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|x| x.name()).collect::<Vec<_>>().join("*")
    }
}

fn random_word(rng: &mut ChaCha8Rng, letters: &[Letter], max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
}

/// Words over `{K0, K1}` of length exactly `len`.
fn k_words(len: usize) -> Vec<Vec<Letter>> {
    (0..1usize << len).map(|bits| (0..len).map(|j| if bits >> j & 1 == 1 { K1 } else { K0 }).collect()).collect()
}

fn relations_daha(inst: &Instance, _: &mut Job) -> Outcome {
    let h = inst.engine();
    let rw = RewriteSystem::new(inst.values(), DEFAULT_BUDGET);
    for (name, rel) in daha_relations(inst.values()) {
        if let Some(f) = nonzero(&format!("{name} (engine)"), &h.reduce(&rel)?) {
            return Ok(Some(f));
        }
        if let Some(f) = nonzero(&format!("{name} (rewriting)"), &rw.normalize(&rel, Strategy::Leftmost)?) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn confluence_spot(inst: &Instance, job: &mut Job) -> Outcome {
    let h = inst.engine();
    let rw = RewriteSystem::new(inst.values(), DEFAULT_BUDGET);
    for (w, x, y) in rw.critical_pairs()? {
        if let Some(f) = nonzero(&format!("overlap {}", word_name(&w)), &x.sub(&y)) {
            return Ok(Some(f));
        }
    }
    for _ in 0..100 {
        let w = random_word(&mut job.rng, &[T1, Y, Yi, Z, Zi], 6);
        let c = job.rng.gen_range(1..=5) * if job.rng.gen_bool(0.5) { 1 } else { -1 };
        let e = Element::term(Alphabet::Daha, &w, Scalar::int(c))?;
        let nf = h.reduce(&e)?;
        let label = word_name(&w);
        let checks = [
            ("re-reduction", h.reduce(&nf.to_element())?),
            ("leftmost order", rw.normalize(&e, Strategy::Leftmost)?),
            ("rightmost order", rw.normalize(&e, Strategy::Rightmost)?),
        ];
        for (what, other) in checks {
            if let Some(f) = nonzero(&format!("{label}, {what}"), &other.sub(&nf)) {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

fn embed_zero(inst: &Instance, label: &str, e: &Element) -> Outcome {
    Ok(nonzero(label, &embed_aw(inst.engine(), e)?))
}

fn embed_k1_relation(inst: &Instance, _: &mut Job) -> Outcome {
    embed_zero(inst, "K1K0K1 relation", &relation_k1(inst.values(), AwRelation::Extended))
}

fn embed_k0_relation(inst: &Instance, _: &mut Job) -> Outcome {
    embed_zero(inst, "K0K1K0 relation", &relation_k0(inst.values(), AwRelation::Extended))
}

fn casimir_minus_q0(v: &ParamValues, kind: AwRelation) -> Element {
    casimir_word(v, kind).sub(&Element::scalar(Alphabet::Aw, v.structure_constants().q0))
}

fn embed_casimir(inst: &Instance, _: &mut Job) -> Outcome {
    embed_zero(inst, "Casimir - Q0", &casimir_minus_q0(inst.values(), AwRelation::Extended))
}

fn embed_t1_central(inst: &Instance, _: &mut Job) -> Outcome {
    for x in [K0, K1] {
        let e = Element::aw(&[T1, x]).sub(&Element::aw(&[x, T1]));
        if let Some(f) = embed_zero(inst, &format!("[T1, {}]", x.name()), &e)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn embed_t1_quadratic(inst: &Instance, _: &mut Job) -> Outcome {
    let t1 = Element::aw(&[T1]);
    let ab = Element::scalar(Alphabet::Aw, inst.values().ab());
    let e = t1.add(&ab).mul(&t1.add(&Element::one(Alphabet::Aw)));
    embed_zero(inst, "(T1+ab)(T1+1)", &e)
}

fn check_idempotents(inst: &Instance, _: &mut Job) -> Outcome {
    let h = inst.engine();
    let (p, pm) = idempotents(h)?;
    let cases = [
        ("P^2 - P", h.multiply(&p, &p)?.sub(&p)),
        ("(P^-)^2 - P^-", h.multiply(&pm, &pm)?.sub(&pm)),
        ("P + P^- - 1", p.add(&pm).sub(&NormalForm::one())),
        ("P P^-", h.multiply(&p, &pm)?),
        ("P^- P", h.multiply(&pm, &p)?),
    ];
    Ok(cases.iter().find_map(|(l, nf)| nonzero(l, nf)))
}

fn spherical_mult(inst: &Instance, _: &mut Job) -> Outcome {
    let h = inst.engine();
    let (p, pm) = idempotents(h)?;
    if let Some(f) = nonzero("S(1) - P", &spherical(h, &NormalForm::one())?.sub(&p)) {
        return Ok(Some(f));
    }
    if let Some(f) = nonzero("S^-(1) - P^-", &antispherical(h, &NormalForm::one())?.sub(&pm)) {
        return Ok(Some(f));
    }
    let words: Vec<Vec<Letter>> = (0..=2).flat_map(k_words).collect();
    let images = words.iter().map(|w| embed_aw(h, &Element::aw(w))).collect::<Result<Vec<_>>>()?;
    for (wu, u) in words.iter().zip(&images) {
        for (wv, v) in words.iter().zip(&images) {
            let uv = h.multiply(u, v)?;
            let label = format!("U = {}, V = {}", word_name(wu), word_name(wv));
            let sym = h.multiply(&spherical(h, u)?, &spherical(h, v)?)?.sub(&spherical(h, &uv)?);
            if let Some(f) = nonzero(&format!("S, {label}"), &sym) {
                return Ok(Some(f));
            }
            let anti = h.multiply(&antispherical(h, u)?, &antispherical(h, v)?)?.sub(&antispherical(h, &uv)?);
            if let Some(f) = nonzero(&format!("S^-, {label}"), &anti) {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

fn iso_mult(
    inst: &Instance,
    iso: fn(&DahaAlgebra, &Element) -> Result<NormalForm>,
    unit: NormalForm,
    relations_at: &ParamValues,
) -> Outcome {
    let h = inst.engine();
    let words: Vec<Vec<Letter>> = (0..=4).flat_map(k_words).collect();
    let images = words.iter().map(|w| iso(h, &Element::aw(w))).collect::<Result<Vec<_>>>()?;
    if let Some(f) = nonzero("image of 1 minus the idempotent", &images[0].sub(&unit)) {
        return Ok(Some(f));
    }
    for (i, wu) in words.iter().enumerate() {
        for (j, wv) in words.iter().enumerate() {
            if wu.len() + wv.len() > 4 {
                continue;
            }
            let joined: Vec<Letter> = wu.iter().chain(wv).copied().collect();
            let k = words.iter().position(|w| *w == joined).expect("all words of length <= 4 are listed");
            let resid = images[k].sub(&h.multiply(&images[i], &images[j])?);
            if let Some(f) = nonzero(&format!("U = {}, V = {}", word_name(wu), word_name(wv)), &resid) {
                return Ok(Some(f));
            }
        }
    }
    let rels = [
        ("K1K0K1 relation", relation_k1(relations_at, AwRelation::Plain)),
        ("K0K1K0 relation", relation_k0(relations_at, AwRelation::Plain)),
        ("Casimir - Q0", casimir_minus_q0(relations_at, AwRelation::Plain)),
    ];
    for (name, rel) in rels {
        if let Some(f) = nonzero(name, &iso(h, &rel)?) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn iso_spherical_mult(inst: &Instance, _: &mut Job) -> Outcome {
    let (p, _) = idempotents(inst.engine())?;
    iso_mult(inst, iso_spherical, p, inst.values())
}

fn iso_antispherical_mult(inst: &Instance, _: &mut Job) -> Outcome {
    let (_, pm) = idempotents(inst.engine())?;
    iso_mult(inst, iso_antispherical, pm, &inst.values().shifted())
}

fn step(s: &StepIdentity, inst: &Instance, job: &mut Job) -> Outcome {
    let (uses_m, uses_n) = s.uses();
    let top = |used: bool| if used { job.bounds.max_mn } else { 1 };
    for m in 1..=top(uses_m) {
        for n in 1..=top(uses_n) {
            let out = check_step_identity(inst.engine(), s.id, m, n)?;
            if !out.verdict {
                let detail = match &out.quotient {
                    _ if s.exact => out.residual.summary(),
                    Some(r) => format!("remainder not o(Z^{m} Y^{n}): {}", r.summary()),
                    None => format!("residual has no right factor: {}", out.residual.summary()),
                };
                return Ok(Some(clip(format!("m = {m}, n = {n}: {detail}"))));
            }
        }
    }
    Ok(None)
}

fn o_filtration(_: &Instance, _: &mut Job) -> Outcome {
    let one = Scalar::one();
    let examples = [
        (NormalForm::monomial((2, 1, 0), one.clone()), false),
        (NormalForm::from_terms([((1, 1, 0), Scalar::int(3)), ((-1, 0, 0), one.clone())]), true),
        (NormalForm::monomial((-2, 1, 0), one.clone()), false),
    ];
    for (i, (nf, expect)) in examples.iter().enumerate() {
        if is_o_of(nf, 2, 1) != *expect {
            return Ok(Some(format!("example {}: {nf} at (2, 1)", i + 1)));
        }
    }
    for m in 1..=3 {
        for n in 1..=3 {
            let mut all = NormalForm::zero();
            for k in -4..=4i32 {
                for l in -4..=4i32 {
                    for t in 0..=1u8 {
                        let nf = NormalForm::monomial((k, l, t), one.clone());
                        let expect = k.abs() <= m && l.abs() <= n && (k.abs(), l.abs()) != (m, n);
                        if is_o_of(&nf, m, n) != expect {
                            return Ok(Some(format!("Z^{k} Y^{l} T1^{t} at ({m}, {n})")));
                        }
                        if expect {
                            all.add_term((k, l, t), &one);
                        }
                    }
                }
            }
            if !is_o_of(&all, m, n) || is_o_of(&all.add(&NormalForm::monomial((m, -n, 0), one.clone())), m, n) {
                return Ok(Some(format!("sums at ({m}, {n})")));
            }
        }
    }
    Ok(None)
}

fn duality_aw(inst: &Instance, job: &mut Job) -> Outcome {
    let h = inst.engine();
    for (name, img) in aw_dual_relations(&inst.params)? {
        if let Some(f) = nonzero(&format!("image of {name}"), &embed_aw(h, &img)?) {
            return Ok(Some(f));
        }
    }
    let img = |e: &Element| duality_image(&inst.params, e, DualityKind::Aw).map(|x| x.0);
    for _ in 0..20 {
        let u = random_word(&mut job.rng, &[K0, K1, T1], 3);
        let v = random_word(&mut job.rng, &[K0, K1, T1], 3);
        let (eu, ev) = (Element::aw(&u), Element::aw(&v));
        let label = format!("u = {}, v = {}", word_name(&u), word_name(&v));
        let whole = img(&eu.mul(&ev))?;
        if whole != img(&ev)?.mul(&img(&eu)?) {
            return Ok(Some(format!("{label}: image of uv is not image(v) image(u)")));
        }
        let split = h.multiply(&embed_aw(h, &img(&ev)?)?, &embed_aw(h, &img(&eu)?)?)?;
        if let Some(f) = nonzero(&label, &embed_aw(h, &whole)?.sub(&split)) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn duality_daha(inst: &Instance, job: &mut Job) -> Outcome {
    let h = inst.engine();
    for (name, img) in daha_dual_relations(&inst.params)? {
        if let Some(f) = nonzero(&format!("image of {name}"), &h.reduce(&img)?) {
            return Ok(Some(f));
        }
    }
    let img = |e: &Element| duality_image(&inst.params, e, DualityKind::Daha).map(|x| x.0);
    let letters = [T1, Y, Yi, Z, Zi];
    for _ in 0..20 {
        let u = random_word(&mut job.rng, &letters, 4);
        let v = random_word(&mut job.rng, &letters, 4);
        let (eu, ev) = (Element::daha(&u), Element::daha(&v));
        let label = format!("u = {}, v = {}", word_name(&u), word_name(&v));
        if img(&eu.mul(&ev))? != img(&ev)?.mul(&img(&eu)?) {
            return Ok(Some(format!("{label}: image of uv is not image(v) image(u)")));
        }
        // The product is formed in the dual algebra, then mapped over.
        let uv = job.symbolic.reduce(&eu.mul(&ev))?.to_element();
        let split = h.multiply(&h.reduce(&img(&ev)?)?, &h.reduce(&img(&eu)?)?)?;
        if let Some(f) = nonzero(&label, &h.reduce(&img(&uv)?)?.sub(&split)) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn shiftops(inst: &Instance, _: &mut Job) -> Outcome {
    let h = inst.engine();
    let (minus, plus) = shift_operator_identities(h)?;
    if let Some(f) = nonzero("(T1+1) sandwich", &minus).or_else(|| nonzero("(T1+ab) sandwich", &plus)) {
        return Ok(Some(f));
    }
    if shift_operator_perturbed(h)?.is_zero() {
        return Ok(Some("perturbed sandwich vanishes".into()));
    }
    Ok(None)
}

fn centralizer_samples(inst: &Instance, _: &mut Job) -> Outcome {
    let h = inst.engine();
    let v = inst.values();
    let mut samples: Vec<(String, NormalForm)> = Vec::new();
    for w in [vec![K0], vec![K1], vec![K0, K1], vec![K1, K0, K1]] {
        samples.push((format!("image of {}", word_name(&w)), embed_aw(h, &Element::aw(&w))?));
    }
    samples.push(("Casimir image".into(), embed_aw(h, &casimir_word(v, AwRelation::Extended))?));
    samples.push(("Z + Z^-1".into(), h.reduce(&Element::daha(&[Z]).add(&Element::daha(&[Zi])))?));
    for (label, u) in &samples {
        if let Some(f) = nonzero(&format!("[{label}, T1]"), &centralizer_probe(h, u)?) {
            return Ok(Some(f));
        }
        if let Some(f) = nonzero(&format!("[P_sym, {label}]"), &psym_commutator(h, u)?) {
            return Ok(Some(f));
        }
    }
    for x in [Z, Y] {
        if centralizer_probe(h, &h.reduce_word(&[x])?)?.is_zero() {
            return Ok(Some(format!("{} commutes with T1", x.name())));
        }
    }
    Ok(None)
}

fn center_daha(inst: &Instance, _: &mut Job) -> Outcome {
    let probe = center_probe(inst.engine(), 3)?;
    Ok(probe.iter().find(|(_, noncentral)| !noncentral).map(|((m, n, i), _)| format!("Z^{m} Y^{n} T1^{i} commutes with Z, Y and T1")))
}

fn eigen_pn(inst: &Instance, job: &mut Job) -> Outcome {
    let rep = inst.rep();
    for n in 0..=job.bounds.max_n {
        if let Some(f) = lp_nonzero(&format!("D_sym P_{n} - lambda_{n} P_{n}"), &rep.eigen_residual(n)?) {
            return Ok(Some(f));
        }
        let p = rep.askey_wilson(n)?;
        if !p.is_symmetric() || p.degree() != n as i32 || !p.coeff(n as i32).is_one() {
            return Ok(Some(format!("P_{n} is not monic symmetric of degree {n}")));
        }
    }
    let mut points = vec![inst.values().clone()];
    if inst.is_symbolic() {
        points.push(ParamValues::at_point(&random_point(&mut job.rng, DEFAULT_GENERICITY_BOUND)));
    }
    for v in points {
        let lambdas: Vec<Scalar> = (0..=20).map(|n| v.eigenvalue(n)).collect();
        for i in 0..lambdas.len() {
            for j in 0..i {
                if lambdas[i] == lambdas[j] {
                    return Ok(Some(format!("lambda_{j} = lambda_{i}")));
                }
            }
        }
    }
    Ok(None)
}

/// Whether no pairwise product of `a, b, c, d` times `q^m`, `0 <= m < top`,
/// and no `abcd q^m`, `-1 <= m < top`, equals 1. At such special points
/// some `gamma_n` legitimately vanish.
fn generic_for_recurrence(v: &ParamValues, top: u32) -> Result<bool> {
    let xs = [&v.a, &v.b, &v.c, &v.d];
    let mut products: Vec<Scalar> = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            products.push(xs[i].mul(xs[j]));
        }
    }
    let abcd = v.abcd();
    for m in 0..top as i32 {
        let qm = v.q.pow(m)?;
        for p in &products {
            if p.mul(&qm).sub(&Scalar::one()).is_zero() {
                return Ok(false);
            }
        }
        if abcd.mul(&v.q.pow(m - 1)?).sub(&Scalar::one()).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn recurrence(inst: &Instance, job: &mut Job) -> Outcome {
    let rep = inst.rep();
    let generic = generic_for_recurrence(inst.values(), job.bounds.max_degree + 1)?;
    let mut prev = LaurentPoly::zero();
    for n in 0..=job.bounds.max_degree {
        let p = rep.askey_wilson(n)?;
        let (beta, gamma) = rep.recurrence_coeffs(n)?;
        let resid = rep
            .apply_k1(&p)
            .sub(&rep.askey_wilson(n + 1)?)
            .sub(&p.scale(&beta))
            .sub(&prev.scale(&gamma));
        if let Some(f) = lp_nonzero(&format!("recurrence at n = {n}"), &resid) {
            return Ok(Some(f));
        }
        if gamma.is_zero() != (n == 0) && (n == 0 || generic) {
            return Ok(Some(format!("gamma_{n} = {gamma}")));
        }
        prev = p;
    }
    Ok(None)
}

fn casimir_scalar(inst: &Instance, job: &mut Job) -> Outcome {
    let rep = inst.rep();
    let q0 = rep.constants().q0;
    for k in 0..=job.bounds.max_degree {
        let f = LaurentPoly::sym_monomial(k);
        let resid = rep.casimir_apply(&f)?.sub(&f.scale(&q0));
        if let Some(out) = lp_nonzero(&format!("Q (z^{k} + z^-{k}) - Q0 (z^{k} + z^-{k})"), &resid) {
            return Ok(Some(out));
        }
    }
    Ok(None)
}

fn awrel_inrep(inst: &Instance, job: &mut Job) -> Outcome {
    let rep = inst.rep();
    for k in 0..=job.bounds.max_degree {
        let f = LaurentPoly::sym_monomial(k);
        let [r1, r2] = rep.relation_residuals_with(&f, &rep.constants())?;
        if let Some(out) = lp_nonzero(&format!("K1K0K1 relation on z^{k} + z^-{k}"), &r1)
            .or_else(|| lp_nonzero(&format!("K0K1K0 relation on z^{k} + z^-{k}"), &r2))
        {
            return Ok(Some(out));
        }
    }
    let mut perturbed = rep.constants();
    perturbed.b = perturbed.b.add(&RatFunc::one());
    let [r1, _] = rep.relation_residuals_with(&LaurentPoly::sym_monomial(1), &perturbed)?;
    if r1.is_zero() {
        return Ok(Some("relation with B + 1 vanishes on z + 1/z".into()));
    }
    Ok(None)
}

fn symmetry_abcd(inst: &Instance, job: &mut Job) -> Outcome {
    let v = inst.values();
    let swaps = [
        ("a<->b", ParamValues { a: v.b.clone(), b: v.a.clone(), ..v.clone() }),
        ("a<->c", ParamValues { a: v.c.clone(), c: v.a.clone(), ..v.clone() }),
    ];
    for (name, w) in swaps {
        let other = BasicRep::new(&w);
        for n in 0..=job.bounds.max_n.min(5) {
            let diff = other.askey_wilson(n)?.sub(&inst.rep().askey_wilson(n)?);
            if let Some(f) = lp_nonzero(&format!("P_{n} under {name}"), &diff) {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

fn shifted_qn(inst: &Instance, job: &mut Job) -> Outcome {
    let rep = inst.rep();
    if let Some(f) = lp_nonzero("Q_0", &rep.shifted_qn(0)?) {
        return Ok(Some(f));
    }
    for n in 1..=job.bounds.max_n.min(6) {
        let q = rep.shifted_qn(n)?;
        let k = n as i32;
        if q.max_exp() != Some(k) || q.min_exp() != Some(-k) || !q.coeff(k).is_one() {
            return Ok(Some(format!("Q_{n} is not monic of degree {n}")));
        }
        if q.coeff(0) == rep.askey_wilson(n)?.coeff(0) {
            return Ok(Some(format!("Q_{n} and P_{n} share their constant term")));
        }
    }
    Ok(None)
}

fn polyrep_word(inst: &Instance, _: &mut Job) -> Outcome {
    let rep = inst.rep();
    let words: [&[Op]; 4] = [&[Op::K0, Op::K1, Op::K0], &[Op::K1, Op::K0, Op::K1], &[Op::K0, Op::K0, Op::K1], &[Op::K1, Op::K0]];
    for k in 0..=2 {
        let f = LaurentPoly::sym_monomial(k);
        for w in words {
            let diff = rep.apply_word(w, &f)?.sub(&rep.apply_word_jacobi(w, &f)?);
            if let Some(out) = lp_nonzero(&format!("{w:?} on z^{k} + z^-{k}"), &diff) {
                return Ok(Some(out));
            }
        }
    }
    let lambda0 = rep.eigenvalue(0);
    let diff = rep.apply_word(&[Op::K1, Op::K0], &LaurentPoly::one())?.sub(&LaurentPoly::sym_monomial(1).scale(&lambda0));
    Ok(lp_nonzero("K1 K0 on 1", &diff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_free_of_equation_numbers() {
        let cat = catalog();
        let ids: HashSet<&str> = cat.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), cat.len());
        for c in &cat {
            assert!(!c.id.contains('('), "{}", c.id);
            let numeric = c.id.split('.').any(|seg| seg.parse::<u32>().is_ok());
            assert!(!numeric || c.id.starts_with("step."), "{}", c.id);
        }
        assert_eq!(cat.iter().filter(|c| c.id.starts_with("step.")).count(), step_catalog().len());
    }

    #[test]
    fn k_words_enumerate() {
        assert_eq!(k_words(0), vec![Vec::<Letter>::new()]);
        assert_eq!(k_words(3).len(), 8);
        assert_eq!(k_words(2).into_iter().collect::<HashSet<_>>().len(), 4);
    }
}

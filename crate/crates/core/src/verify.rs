//! Seeded property suites: every law of the algebra replayed over
//! deterministic pseudorandom cases, with re-runnable counterexamples.

use std::fmt::Write as _;

use rand::Rng as _;

use crate::batch;
use crate::congruence;
use crate::encode;
use crate::error::{Error, Result};
use crate::gen::{self, GenBounds};
use crate::monoid::{BPair, Element, SdpElem};
use crate::oracle;
use crate::order::{self, GreenRel};
use crate::perm::Perm;
use crate::seq::NSeq;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    Axioms,
    Psi,
    Oracle,
    Congruence,
    Order,
    Units,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "axioms" => Suite::Axioms,
            "psi" => Suite::Psi,
            "oracle" => Suite::Oracle,
            "congruence" => Suite::Congruence,
            "order" => Suite::Order,
            "units" => Suite::Units,
            _ => {
                return Err(Error::Parse {
                    at: "--suite".into(),
                    msg: format!("unknown suite {s:?}"),
                })
            }
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub suite: Suite,
    pub cases: u64,
    pub seed: u64,
    pub bound: u64,
}

#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub ok: bool,
}

type CaseResult = std::result::Result<(), String>;

const SUITE_AXIOMS: u64 = 1;
const SUITE_PSI: u64 = 2;
const SUITE_ORACLE: u64 = 3;
const SUITE_CONGRUENCE: u64 = 4;
const SUITE_ORDER: u64 = 5;
const SUITE_UNITS: u64 = 6;

pub fn run(o: &Options) -> Result<Report> {
    run_impl(o, true)
}

/// Single-threaded twin of `run`; reports are byte-identical either way.
pub fn run_sequential(o: &Options) -> Result<Report> {
    run_impl(o, false)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Axioms => "axioms",
        Suite::Psi => "psi",
        Suite::Oracle => "oracle",
        Suite::Congruence => "congruence",
        Suite::Order => "order",
        Suite::Units => "units",
    }
}

fn run_impl(o: &Options, parallel: bool) -> Result<Report> {
    if !(2..=255).contains(&o.bound) {
        return Err(Error::BadBound(o.bound));
    }
    let b = GenBounds::new(o.bound);
    let mut text = format!(
        "verify suite={} cases={} seed={} bound={}\n",
        suite_name(o.suite),
        o.cases,
        o.seed,
        o.bound
    );
    writeln!(
        text,
        "generator indices=[0,{}) values=[1,{}] perm-moved<={}",
        b.index_hi, b.value_hi, b.perm_moved_max
    )
    .unwrap();

    let suites: [(Suite, fn(&Options, u64) -> CaseResult); 6] = [
        (Suite::Axioms, axioms_case),
        (Suite::Psi, psi_case),
        (Suite::Oracle, oracle_probe_case),
        (Suite::Congruence, congruence_case),
        (Suite::Order, order_case),
        (Suite::Units, units_case),
    ];

    let mut all_ok = true;
    for (suite, case_fn) in suites {
        if o.suite != Suite::All && o.suite != suite {
            continue;
        }
        let results = if parallel {
            batch::map_cases(o.cases, |i| case_fn(o, i))
        } else {
            batch::map_cases_seq(o.cases, |i| case_fn(o, i))
        };
        let post = if results.iter().all(|r| r.is_ok()) {
            post_check(suite, o)
        } else {
            None
        };
        all_ok &= suite_block(&mut text, suite_name(suite), o.cases, &results, post);
    }
    text.push_str(if all_ok { "PASS\n" } else { "FAIL\n" });
    Ok(Report { text, ok: all_ok })
}

/// One report line per suite: counts, then the first counterexample when a
/// case fails, or the batch block when a cross-case check fails.
fn suite_block(
    text: &mut String,
    name: &str,
    cases: u64,
    results: &[CaseResult],
    post: Option<String>,
) -> bool {
    let passed = results.iter().filter(|r| r.is_ok()).count();
    if let Some(first) = results.iter().position(|r| r.is_err()) {
        writeln!(text, "{name} {passed}/{cases} FAIL case {first}").unwrap();
        writeln!(text, "{}", results[first].as_ref().unwrap_err()).unwrap();
        false
    } else if let Some(block) = post {
        writeln!(text, "{name} {passed}/{cases} FAIL batch").unwrap();
        writeln!(text, "{block}").unwrap();
        false
    } else {
        writeln!(text, "{name} {passed}/{cases} pass").unwrap();
        true
    }
}

fn post_check(suite: Suite, o: &Options) -> Option<String> {
    match suite {
        Suite::Psi => psi_injectivity(o),
        _ => None,
    }
}

fn qe(e: &Element) -> String {
    format!("'{}'", encode::render_element(e))
}

fn cmd2(verb: &str, a: &Element, b: &Element) -> String {
    format!("{verb} {} {}", qe(a), qe(b))
}

fn check(
    cond: bool,
    law: impl FnOnce() -> String,
    rerun: impl FnOnce() -> String,
) -> CaseResult {
    if cond {
        Ok(())
    } else {
        Err(format!("  law {}\n  counterexample: {}", law(), rerun()))
    }
}

fn axioms_case(o: &Options, i: u64) -> CaseResult {
    let b = GenBounds::new(o.bound);
    let rng = &mut gen::case_rng(o.seed, SUITE_AXIOMS, i);
    let a = gen::element(rng, &b);
    let b2 = gen::element(rng, &b);
    let c = gen::element(rng, &b);
    let e = gen::nseq(rng, &b);
    let f = gen::nseq(rng, &b);
    let probe_off = gen::nseq(rng, &b);

    let one = Element::identity();
    check(
        one.compose(&a) == a && a.compose(&one) == a,
        || format!("identity-neutral a={}", qe(&a)),
        || cmd2("compose", &one, &a),
    )?;
    check(
        a.compose(&b2).compose(&c) == a.compose(&b2.compose(&c)),
        || format!("associativity a={} b={} c={}", qe(&a), qe(&b2), qe(&c)),
        || cmd2("compose", &a.compose(&b2), &c),
    )?;
    let ai = a.inverse();
    check(
        a.compose(&ai).compose(&a) == a && ai.compose(&a).compose(&ai) == ai,
        || format!("inverse-axioms a={}", qe(&a)),
        || cmd2("compose", &a, &ai),
    )?;
    check(
        a.compose(&ai) == Element::idempotent(a.d.clone())
            && ai.compose(&a) == Element::idempotent(a.r.clone())
            && a.compose(&ai).is_idempotent(),
        || format!("inverse-products a={}", qe(&a)),
        || cmd2("compose", &a, &ai),
    )?;
    let eps = Element::idempotent(e.clone());
    let zeta = Element::idempotent(f.clone());
    check(
        eps.compose(&zeta) == zeta.compose(&eps)
            && eps.compose(&zeta) == Element::idempotent(e.pointwise_max(&f)),
        || format!("idempotents-commute-max e={} z={}", qe(&eps), qe(&zeta)),
        || cmd2("compose", &eps, &zeta),
    )?;
    check(
        a.compose(&b2).inverse() == b2.inverse().compose(&a.inverse()),
        || format!("inverse-antihomomorphism a={} b={}", qe(&a), qe(&b2)),
        || cmd2("compose", &a, &b2),
    )?;

    // the composite map evaluates like the chain of the two maps, on a probe
    // point inside the composite's domain filter
    let comp = a.compose(&b2);
    let probe = comp.d.shifted_add(&probe_off);
    let chain = a
        .apply(&probe)
        .and_then(|mid| b2.apply(&mid))
        .map_err(|er| {
            format!(
                "  law chain-domain a={} b={} point={}: {er}\n  counterexample: {}",
                qe(&a),
                qe(&b2),
                encode::render_nseq(&probe),
                cmd2("compose", &a, &b2)
            )
        })?;
    check(
        comp.apply(&probe).as_ref() == Ok(&chain),
        || {
            format!(
                "chain-evaluation a={} b={} point={}",
                qe(&a),
                qe(&b2),
                encode::render_nseq(&probe)
            )
        },
        || cmd2("compose", &a, &b2),
    )?;

    // closed forms of one-sided products with an idempotent
    let m_right = a.r.pointwise_max(&e);
    let right = Element::new(
        a.g.clone(),
        a.d
            .offset_add(&a.g.inverse().act_z(&m_right.diff(&a.r)))
            .expect("the pointwise max dominates the range generator"),
        m_right.clone(),
    );
    let m_left = e.pointwise_max(&a.d);
    let left = Element::new(
        a.g.clone(),
        m_left.clone(),
        a.r
            .offset_add(&a.g.act_z(&m_left.diff(&a.d)))
            .expect("the pointwise max dominates the domain generator"),
    );
    check(
        a.compose(&eps) == right && eps.compose(&a) == left,
        || format!("idempotent-product-forms a={} e={}", qe(&a), qe(&eps)),
        || cmd2("compose", &a, &eps),
    )?;

    // a product with an idempotent is idempotent only if the element was;
    // exercised both on raw samples and on a forced symmetric one
    let flat = Element::new(Perm::identity(), a.d.clone(), a.d.clone());
    for x in [&a, &flat] {
        check(
            !x.compose(&eps).is_idempotent() || x.is_idempotent(),
            || format!("idempotent-pure-above a={} e={}", qe(x), qe(&eps)),
            || cmd2("compose", x, &eps),
        )?;
    }
    Ok(())
}

fn psi_elems(o: &Options, i: u64) -> (rand_chacha::ChaCha8Rng, Element, Element) {
    let b = GenBounds::new(o.bound);
    let mut rng = gen::case_rng(o.seed, SUITE_PSI, i);
    let a = gen::element(&mut rng, &b);
    let b2 = gen::element(&mut rng, &b);
    (rng, a, b2)
}

fn psi_case(o: &Options, i: u64) -> CaseResult {
    let b = GenBounds::new(o.bound);
    let (mut rng, a, b2) = psi_elems(o, i);
    let rng = &mut rng;
    let c = gen::element(rng, &b);
    let u = BPair { p: gen::nseq(rng, &b), q: gen::nseq(rng, &b) };
    let v = BPair { p: gen::nseq(rng, &b), q: gen::nseq(rng, &b) };
    let w = BPair { p: gen::nseq(rng, &b), q: gen::nseq(rng, &b) };
    let g = gen::perm(rng, &b);
    let h = gen::perm(rng, &b);

    check(
        a.compose(&b2).psi() == a.psi().mul(&b2.psi()),
        || format!("psi-homomorphism a={} b={}", qe(&a), qe(&b2)),
        || cmd2("compose", &a, &b2),
    )?;
    let s = a.psi();
    let rebuilt = Element::new(s.g.clone(), s.g.inverse().act_n(&s.pair.p), s.pair.q.clone());
    check(
        rebuilt == a,
        || format!("psi-roundtrip a={}", qe(&a)),
        || format!("psi {}", qe(&a)),
    )?;
    let sb = b2.psi();
    let sc = c.psi();
    let sone = SdpElem::one();
    check(
        sone.mul(&s) == s
            && s.mul(&sone) == s
            && s.mul(&sb).mul(&sc) == s.mul(&sb.mul(&sc)),
        || format!("sdp-monoid a={} b={} c={}", qe(&a), qe(&b2), qe(&c)),
        || cmd2("compose", &a, &b2),
    )?;
    let pone = BPair::one();
    check(
        pone.mul(&u) == u
            && u.mul(&pone) == u
            && u.mul(&v).mul(&w) == u.mul(&v.mul(&w)),
        || {
            format!(
                "pair-monoid u={} v={} w={}",
                encode::render_pair(&u),
                encode::render_pair(&v),
                encode::render_pair(&w)
            )
        },
        || cmd2("compose", &a, &b2),
    )?;
    check(
        u.act(&Perm::identity()) == u
            && u.act(&g).act(&h) == u.act(&g.compose(&h))
            && u.mul(&v).act(&g) == u.act(&g).mul(&v.act(&g))
            && pone.act(&g) == pone,
        || {
            format!(
                "pair-action u={} v={} g={} h={}",
                encode::render_pair(&u),
                encode::render_pair(&v),
                encode::render_perm(&g),
                encode::render_perm(&h)
            )
        },
        || cmd2("compose", &a, &b2),
    )?;
    Ok(())
}

fn psi_injectivity(o: &Options) -> Option<String> {
    let mut seen: Vec<(String, String)> = Vec::with_capacity(2 * o.cases as usize);
    for i in 0..o.cases {
        let (_, a, b2) = psi_elems(o, i);
        for e in [a, b2] {
            seen.push((encode::render_sdp(&e.psi()), encode::render_element(&e)));
        }
    }
    seen.sort();
    seen.dedup();
    for pair in seen.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Some(format!(
                "  law psi-injectivity image={}\n  counterexample: psi '{}'\n  counterexample: psi '{}'",
                pair[0].0, pair[0].1, pair[1].1
            ));
        }
    }
    None
}

fn oracle_probe_case(o: &Options, i: u64) -> CaseResult {
    let rng = &mut gen::case_rng(o.seed, SUITE_ORACLE, i);
    let (a, b2, t) = gen::oracle_case(rng, o.bound);
    match oracle::agree(&a, &b2, &t) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!(
            "  law oracle-compose support={:?} bound={}\n  counterexample: {}",
            t.support(),
            t.bound(),
            cmd2("compose", &a, &b2)
        )),
        Err(er) => Err(format!(
            "  law oracle-window support={:?} bound={}: {er}\n  counterexample: {}",
            t.support(),
            t.bound(),
            cmd2("compose", &a, &b2)
        )),
    }
}

fn congruence_case(o: &Options, i: u64) -> CaseResult {
    let b = GenBounds::new(o.bound);
    let rng = &mut gen::case_rng(o.seed, SUITE_CONGRUENCE, i);
    let a = gen::element(rng, &b);
    let b2 = gen::element(rng, &b);
    let e = gen::nseq(rng, &b);
    let q1 = gen::quot(rng, &b);
    let q2 = gen::quot(rng, &b);
    let q3 = gen::quot(rng, &b);
    let set: Vec<_> = gen::nseq(rng, &b).support().collect();
    let n = rng.gen_range(0..=5u32);

    let cq = |x: &Element| congruence::canonical(x);
    check(
        cq(&a.compose(&b2)) == cq(&a).mul(&cq(&b2)) && cq(&a.inverse()) == cq(&a).inv(),
        || format!("canonical-homomorphism a={} b={}", qe(&a), qe(&b2)),
        || cmd2("compose", &a, &b2),
    )?;

    let lifted = congruence::lift(&q1);
    check(
        cq(&lifted) == q1,
        || format!("lift-section q={}", encode::render_quot(&q1)),
        || format!("lift '{}'", encode::render_quot(&q1)),
    )?;
    check(
        congruence::lift(&cq(&a)) == congruence::top(&a),
        || format!("lift-is-top a={}", qe(&a)),
        || format!("top {}", qe(&a)),
    )?;

    let t = congruence::top(&a);
    check(
        congruence::cmg_related(&a, &t)
            && order::nat_leq(&a, &t)
            && congruence::top(&t) == t
            && cq(&t) == cq(&a),
        || format!("top-laws a={}", qe(&a)),
        || format!("top {}", qe(&a)),
    )?;

    // relatedness is decided by the shared-idempotent product test
    let mate = a.compose(&Element::idempotent(e.clone()));
    for pair in [(&a, &b2), (&a, &mate)] {
        let shared = Element::idempotent(pair.0.r.pointwise_max(&pair.1.r));
        let products_equal = pair.0.compose(&shared) == pair.1.compose(&shared);
        check(
            congruence::cmg_related(pair.0, pair.1) == products_equal
                && congruence::witness_idempotent(pair.0, pair.1).is_ok() == products_equal,
            || format!("relatedness-test a={} b={}", qe(pair.0), qe(pair.1)),
            || cmd2("compose", pair.0, &shared),
        )?;
    }
    let wit = congruence::witness_idempotent(&a, &mate)
        .expect("an element and its idempotent restriction are related");
    check(
        a.compose(&wit) == mate.compose(&wit),
        || format!("witness-collapses a={} mate={}", qe(&a), qe(&mate)),
        || cmd2("compose", &a, &wit),
    )?;

    let qid = congruence::QuotElem::identity();
    check(
        q1.mul(&q1.inv()) == qid
            && q1.inv().mul(&q1) == qid
            && q1.mul(&q2).mul(&q3) == q1.mul(&q2.mul(&q3))
            && qid.mul(&q1) == q1
            && q1.mul(&qid) == q1,
        || {
            format!(
                "quotient-group q1={} q2={} q3={}",
                encode::render_quot(&q1),
                encode::render_quot(&q2),
                encode::render_quot(&q3)
            )
        },
        || format!("lift '{}'", encode::render_quot(&q1)),
    )?;

    let two_a = NSeq::from_entries(set.iter().map(|&x| (x, 2))).expect("small literal values");
    let iota = Element::idempotent(two_a);
    let gamma = congruence::collapse_witness(&iota).expect("identity maps are idempotent");
    let expected =
        NSeq::from_entries(set.iter().map(|&x| (x, i64::from(n) + 1))).expect("small literal values");
    check(
        gamma.compose(&gamma.inverse()) == Element::identity()
            && gamma.inverse().compose(&gamma) == iota
            && congruence::power_idempotent(&gamma, n) == Element::idempotent(expected),
        || format!("collapse-powers iota={} n={n}", qe(&iota)),
        || cmd2("compose", &gamma.inverse(), &gamma),
    )?;
    if !a.is_idempotent() {
        check(
            congruence::collapse_witness(&a).is_err(),
            || format!("collapse-rejects a={}", qe(&a)),
            || format!("top {}", qe(&a)),
        )?;
    }
    Ok(())
}

fn order_case(o: &Options, i: u64) -> CaseResult {
    let b = GenBounds::new(o.bound);
    let rng = &mut gen::case_rng(o.seed, SUITE_ORDER, i);
    let a = gen::element(rng, &b);
    let b2 = gen::element(rng, &b);
    let c = gen::element(rng, &b);
    let e = gen::nseq(rng, &b);
    let f = gen::nseq(rng, &b);

    let lo = a.compose(&Element::idempotent(e.clone()));
    check(
        order::nat_leq(&lo, &a),
        || format!("restriction-below lo={} a={}", qe(&lo), qe(&a)),
        || cmd2("leq", &lo, &a),
    )?;
    check(
        lo == a.compose(&Element::idempotent(lo.r.clone()))
            && lo == Element::idempotent(lo.d.clone()).compose(&a),
        || format!("below-witnesses lo={} a={}", qe(&lo), qe(&a)),
        || cmd2("leq", &lo, &a),
    )?;
    for (x, y) in [(&lo, &a), (&a, &b2), (&b2, &a), (&a, &a)] {
        check(
            order::nat_leq(x, y) == order::nat_leq_ranges(x, y),
            || format!("criteria-agree x={} y={}", qe(x), qe(y)),
            || cmd2("leq", x, y),
        )?;
    }
    check(
        order::nat_leq(&a, &a),
        || format!("reflexive a={}", qe(&a)),
        || cmd2("leq", &a, &a),
    )?;
    check(
        !(order::nat_leq(&lo, &a) && order::nat_leq(&a, &lo)) || a == lo,
        || format!("antisymmetric lo={} a={}", qe(&lo), qe(&a)),
        || cmd2("leq", &a, &lo),
    )?;
    let lo2 = lo.compose(&Element::idempotent(f.clone()));
    check(
        order::nat_leq(&lo2, &lo) && order::nat_leq(&lo2, &a),
        || format!("transitive lo2={} lo={} a={}", qe(&lo2), qe(&lo), qe(&a)),
        || cmd2("leq", &lo2, &a),
    )?;
    check(
        order::nat_leq(&lo.compose(&c), &a.compose(&c))
            && order::nat_leq(&c.compose(&lo), &c.compose(&a)),
        || format!("order-compatible lo={} a={} c={}", qe(&lo), qe(&a), qe(&c)),
        || cmd2("leq", &lo.compose(&c), &a.compose(&c)),
    )?;
    let eps = Element::idempotent(e.clone());
    let zeta = Element::idempotent(f.clone());
    check(
        order::nat_leq(&eps, &zeta) == f.leq(&e),
        || format!("idempotent-order e={} z={}", qe(&eps), qe(&zeta)),
        || cmd2("leq", &eps, &zeta),
    )?;

    let prod_l = |x: &Element| x.compose(&x.inverse());
    let prod_r = |x: &Element| x.inverse().compose(x);
    let want_l = a.d == b2.d;
    let want_r = a.r == b2.r;
    check(
        order::green(GreenRel::L, &a, &b2) == want_l
            && want_l == (prod_l(&a) == prod_l(&b2))
            && order::green(GreenRel::R, &a, &b2) == want_r
            && want_r == (prod_r(&a) == prod_r(&b2))
            && order::green(GreenRel::H, &a, &b2) == (want_l && want_r)
            && order::green(GreenRel::D, &a, &b2)
            && order::green(GreenRel::J, &a, &b2),
        || format!("green-relations a={} b={}", qe(&a), qe(&b2)),
        || format!("green H {} {}", qe(&a), qe(&b2)),
    )?;
    let w = order::d_witness(&eps, &zeta).expect("idempotents by construction");
    check(
        w.compose(&w.inverse()) == eps && w.inverse().compose(&w) == zeta,
        || format!("d-witness e={} z={}", qe(&eps), qe(&zeta)),
        || cmd2("compose", &w, &w.inverse()),
    )?;
    if !a.is_idempotent() {
        check(
            order::d_witness(&a, &eps).is_err() && order::d_witness(&eps, &a).is_err(),
            || format!("d-witness-rejects a={}", qe(&a)),
            || format!("green H {} {}", qe(&a), qe(&eps)),
        )?;
    }
    Ok(())
}

fn units_case(o: &Options, i: u64) -> CaseResult {
    let b = GenBounds::new(o.bound);
    let rng = &mut gen::case_rng(o.seed, SUITE_UNITS, i);
    let g = gen::perm(rng, &b);
    let h = gen::perm(rng, &b);
    let d = gen::nseq(rng, &b);
    let x = rng.gen_range(0..b.index_hi);
    let k = rng.gen_range(2..=9);

    let fu = Element::from_unit(g.clone());
    let fh = Element::from_unit(h.clone());
    check(
        fu.compose(&fh) == Element::from_unit(g.compose(&h))
            && fu.inverse() == Element::from_unit(g.inverse())
            && Element::from_unit(Perm::identity()) == Element::identity(),
        || format!("unit-homomorphism g={} h={}", encode::render_perm(&g), encode::render_perm(&h)),
        || cmd2("compose", &fu, &fh),
    )?;
    let atom = NSeq::atom(x, k).expect("small literal values");
    check(
        fu.apply(&NSeq::one()).as_ref() == Ok(&NSeq::one())
            && fu.apply(&atom).as_ref() == Ok(&NSeq::atom(g.apply(x), k).expect("small literal values")),
        || format!("unit-relabels g={} x={x} k={k}", encode::render_perm(&g)),
        || format!("apply {} '{}'", qe(&fu), encode::render_nseq(&atom)),
    )?;
    let hg = Element::h_element(g.clone(), d.clone());
    let hh = Element::h_element(h.clone(), d.clone());
    check(
        hg.compose(&hh) == Element::h_element(g.compose(&h), d.clone())
            && hg.inverse() == Element::h_element(g.inverse(), d.clone())
            && Element::h_element(g.clone(), NSeq::one()) == fu
            && Element::h_element(Perm::identity(), d.clone()) == Element::idempotent(d.clone())
            && order::green(GreenRel::H, &hg, &Element::idempotent(d.clone())),
        || format!("subgroup-at-idempotent g={} h={} d={}", encode::render_perm(&g), encode::render_perm(&h), encode::render_nseq(&d)),
        || cmd2("compose", &hg, &hh),
    )?;
    Ok(())
}

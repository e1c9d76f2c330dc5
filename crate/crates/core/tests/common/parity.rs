//! One function per worked example whose expected value is computed by an
//! independent oracle rather than stated.

use std::collections::{BTreeMap, BTreeSet};

use ideallab::gallery::{run_example, ParamOverrides};
use ideallab::ideal::{
    self, normalize_decomposition, primary_decompose_monomial, prime_avoidance_witness, s_component, Avoidance,
    MonomialIdeal, MultSetSpec, PrimaryComponent,
};
use ideallab::module::{AssMembership, CyclicSum, IntElem, IntModule, ModElement, Prime, Submodule};
use ideallab::poly::Scalar;
use ideallab::valuation::{CutIdeal, ValElement, Value, ValueGroup};
use ideallab::{Monomial, PolyIdeal, Polynomial, Var};
use num_rational::Rational64;

use super::*;

pub type ParityFn = fn() -> Check;

pub fn all() -> Vec<(&'static str, ParityFn)> {
    vec![
        ("eliminate_t_from_tx_minus_1_and_ty", eliminate_inverse),
        ("eliminate_t_from_diagonal", eliminate_diagonal),
        ("quotient_x2_xy_by_x", quotient_x2_xy_by_x),
        ("quotient_x_by_y", quotient_x_by_y),
        ("intersect_x_with_x2_y", intersect_x_with_x2_y),
        ("scomp_complement_of_maximal", scomp_complement_of_maximal),
        ("scomp_complement_of_x", scomp_complement_of_x),
        ("radical_x2_y3", radical_x2_y3),
        ("minprimes_xy_xz", minprimes_xy_xz),
        ("minprimes_x2_xy", minprimes_x2_xy),
        ("primary_x2_xy_y3", primary_x2_xy_y3),
        ("xy_not_primary", xy_not_primary),
        ("decompose_x2_xy", decompose_x2_xy),
        ("decompose_squarefree_triangle", decompose_triangle),
        ("normalize_drops_redundant", normalize_drops_redundant),
        ("normalize_merges_same_prime", normalize_merges_same_prime),
        ("avoidance_x_plus_y", avoidance_x_plus_y),
        ("cut_quotient_by_pi2", cut_quotient_by_pi2),
        ("cut_quotient_boundaries_over_q", cut_quotient_boundaries_over_q),
        ("annihilator_of_e1_plus_e2", annihilator_e1_e2),
        ("colon_x_by_y", colon_x_by_y),
        ("x_zero_divisor_mod_x2_xy", x_zero_divisor),
        ("x_plus_y_not_zero_divisor", x_plus_y_not_zero_divisor),
        ("nilpotence_mod_x2_xy", nilpotence_mod_x2_xy),
        ("coprimary_examples", coprimary_examples),
        ("ass0_z_mod_6", ass0_z_mod_6),
        ("ass1_x2_xy", ass1_x2_xy),
        ("ass_x2_xy", ass_x2_xy),
        ("ass_membership_y_refuted", ass_membership_y),
        ("supp_x_in_r_mod_x2_xy", supp_x),
        ("module_radical_x2_xy", module_radical_x2_xy),
        ("radical_x2y", radical_x2y),
        ("essential_primes_x2_xy", essential_primes_x2_xy),
        ("directsum_scenario_seed_7", directsum_seed_7),
    ]
}

fn var_set(names: &[&str]) -> BTreeSet<Var> {
    vars(names).into_iter().collect()
}

fn canonical_gens(i: &PolyIdeal) -> Result<Vec<Polynomial>, String> {
    Ok(lift(engine().canonical(i))?.generators().to_vec())
}

fn as_mono(i: &PolyIdeal) -> Result<MonomialIdeal, String> {
    MonomialIdeal::from_poly_ideal(i).ok_or_else(|| format!("{i} is not monomial"))
}

fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

fn eliminate_inverse() -> Check {
    let e = engine();
    let i = pi(&["t*x - 1", "t*y"]);
    let r = lift(e.eliminate(&i, &var_set(&["t"])))?;
    // y = x·(t·y) − y·(t·x − 1)
    let comb = &(&p("x") * &p("t*y")) - &(&p("y") * &p("t*x - 1"));
    ensure(comb == p("y"), || format!("combination gave {comb}"))?;
    let gens = canonical_gens(&r)?;
    for g in &gens {
        ensure(g.monomials().all(|t| t.exponent(Var::new("y")) > 0), || {
            format!("{g} is not a multiple of y")
        })?;
    }
    // (y) is prime: on degree ≤ 2 monomials a·b ∈ (y) forces a or b in (y)
    let y = ms(&["y"]);
    for a in monos(&vars(&["x", "y"]), 2) {
        for b in monos(&vars(&["x", "y"]), 2) {
            ensure(
                !in_ideal(&y, &times(&a, &b)) || in_ideal(&y, &a) || in_ideal(&y, &b),
                || format!("{a}·{b} breaks primality"),
            )?;
        }
    }
    ensure(gens == vec![p("y")], || format!("eliminate gave {r}"))?;
    Ok(format!("{r}"))
}

fn eliminate_diagonal() -> Check {
    let e = engine();
    let i = pi(&["x - t", "y - t"]);
    let r = lift(e.eliminate(&i, &var_set(&["t"])))?;
    ensure(&p("x - t") - &p("y - t") == p("x - y"), || "difference".into())?;
    let gens = canonical_gens(&r)?;
    // every generator vanishes on x = y = s for enough s, so lies in (x − y)
    for g in &gens {
        let d = g.total_degree().unwrap_or(0) as i64;
        for s in 0..=d + 1 {
            let at: BTreeMap<Var, Scalar> = [(Var::new("x"), int(s)), (Var::new("y"), int(s))].into();
            ensure(eval(g, &at) == int(0), || format!("{g} does not vanish at ({s},{s})"))?;
        }
    }
    ensure(gens == vec![p("x - y")], || format!("eliminate gave {r}"))?;
    Ok(format!("{r}"))
}

fn quotient_check(gens: &[&str], f: &str, expect: &[&str]) -> Check {
    let e = engine();
    let r = lift(ideal::quotient_by(&e, &pi(gens), &p(f)))?;
    let oracle = quotient_scan(&ms(gens), &m(f), &vars(&["x", "y"]), 4);
    let got = gens_of(&as_mono(&r)?);
    ensure(got == oracle, || {
        format!("quotient {} vs oracle {}", gens_str(&got), gens_str(&oracle))
    })?;
    ensure(oracle == minimize(ms(expect)), || {
        format!("oracle certified {}", gens_str(&oracle))
    })?;
    Ok(gens_str(&got))
}

fn quotient_x2_xy_by_x() -> Check {
    quotient_check(&["x^2", "x*y"], "x", &["x", "y"])
}

fn quotient_x_by_y() -> Check {
    quotient_check(&["x"], "y", &["x"])
}

fn intersect_x_with_x2_y() -> Check {
    let e = engine();
    let r = lift(ideal::intersect(&e, &pi(&["x"]), &pi(&["x^2", "y"])))?;
    let got = gens_of(&as_mono(&r)?);
    let oracle = intersect_gens(&ms(&["x"]), &ms(&["x^2", "y"]));
    let got_v: Vec<Monomial> = got.iter().cloned().collect();
    let oracle_v: Vec<Monomial> = oracle.iter().cloned().collect();
    for g in &got {
        ensure(in_ideal(&ms(&["x"]), g) && in_ideal(&ms(&["x^2", "y"]), g), || {
            format!("{g} not in both")
        })?;
        ensure(in_ideal(&oracle_v, g), || format!("{g} not in oracle"))?;
    }
    for g in &oracle {
        ensure(in_ideal(&got_v, g), || format!("{g} missing from result"))?;
    }
    ensure(got == minimize(ms(&["x^2", "x*y"])), || gens_str(&got))?;
    Ok(gens_str(&got))
}

/// `m ∈ S-comp(I)` iff `s·m ∈ I` for a monomial `s` in the variables
/// outside the prime.
fn scomp_scan(gens: &[Monomial], outside: &[Var], all: &[Var], d: u32) -> BTreeSet<Monomial> {
    let ss = monos(outside, d);
    minimize(
        monos(all, d)
            .into_iter()
            .filter(|c| ss.iter().any(|s| in_ideal(gens, &times(s, c))))
            .collect(),
    )
}

fn scomp_complement_of_maximal() -> Check {
    let e = engine();
    let r = lift(s_component(
        &e,
        &pi(&["x^2", "x*y"]),
        &MultSetSpec::complement_of(vars(&["x", "y"])),
    ))?;
    let got = gens_of(&as_mono(&r)?);
    let oracle = scomp_scan(&ms(&["x^2", "x*y"]), &[], &vars(&["x", "y"]), 4);
    ensure(got == oracle && oracle == minimize(ms(&["x^2", "x*y"])), || {
        format!("{} vs {}", gens_str(&got), gens_str(&oracle))
    })?;
    Ok(gens_str(&got))
}

fn scomp_complement_of_x() -> Check {
    let e = engine();
    let r = lift(s_component(
        &e,
        &pi(&["x^2", "x*y"]),
        &MultSetSpec::complement_of(vars(&["x"])),
    ))?;
    let got = gens_of(&as_mono(&r)?);
    let scan = scomp_scan(&ms(&["x^2", "x*y"]), &vars(&["y"]), &vars(&["x", "y"]), 4);
    // decomposition (x) ∩ (x², y), checked by the intersection oracle, then
    // filtered to the components whose prime lies inside (x)
    let comps = [(ms(&["x"]), var_set(&["x"])), (ms(&["x^2", "y"]), var_set(&["x", "y"]))];
    let cap = intersect_all_gens(&comps.iter().map(|c| c.0.clone()).collect::<Vec<_>>());
    ensure(cap == minimize(ms(&["x^2", "x*y"])), || "decomposition literal".into())?;
    let kept: Vec<Vec<Monomial>> = comps
        .iter()
        .filter(|c| c.1.is_subset(&var_set(&["x"])))
        .map(|c| c.0.clone())
        .collect();
    let filtered = intersect_all_gens(&kept);
    ensure(got == scan && scan == filtered && got == minimize(ms(&["x"])), || {
        format!(
            "{} vs scan {} vs filtered {}",
            gens_str(&got),
            gens_str(&scan),
            gens_str(&filtered)
        )
    })?;
    Ok(gens_str(&got))
}

fn radical_x2_y3() -> Check {
    let gens = ms(&["x^2", "y^3"]);
    let got = gens_of(&MonomialIdeal::new(gens.clone()).radical());
    let nil: Vec<Monomial> = vars(&["x", "y"])
        .into_iter()
        .map(Monomial::var)
        .filter(|v| (1..=3).any(|k| in_ideal(&gens, &power(v, k))))
        .collect();
    let oracle = minimize(nil);
    ensure(got == oracle && oracle == minimize(ms(&["x", "y"])), || gens_str(&got))?;
    Ok(gens_str(&got))
}

fn minprimes_check(gens: &[&str], vs: &[&str], expect: &[&[&str]]) -> Check {
    let got = var_sets(mi(gens).minimal_primes());
    let oracle = minprimes_scan(&ms(gens), &vars(vs));
    let want: BTreeSet<BTreeSet<Var>> = expect.iter().map(|p| var_set(p)).collect();
    ensure(got == oracle && oracle == want, || {
        format!("{} vs oracle {}", set_str(&got), set_str(&oracle))
    })?;
    Ok(set_str(&got))
}

fn minprimes_xy_xz() -> Check {
    minprimes_check(&["x*y", "x*z"], &["x", "y", "z"], &[&["x"], &["y", "z"]])
}

fn minprimes_x2_xy() -> Check {
    minprimes_check(&["x^2", "x*y"], &["x", "y"], &[&["x"]])
}

fn primary_x2_xy_y3() -> Check {
    let gens = ms(&["x^2", "x*y", "y^3"]);
    ensure(primary_scan(&gens, &vars(&["x", "y"]), 4), || {
        "oracle: not primary".into()
    })?;
    let got = MonomialIdeal::new(gens).is_primary();
    ensure(got == Some(prime(&["x", "y"])), || format!("is_primary gave {got:?}"))?;
    Ok("(x, y)".into())
}

fn xy_not_primary() -> Check {
    let gens = ms(&["x*y"]);
    let (x, y) = (m("x"), m("y"));
    ensure(
        in_ideal(&gens, &times(&x, &y)) && !in_ideal(&gens, &x) && (1..=8).all(|k| !in_ideal(&gens, &power(&y, k))),
        || "oracle".into(),
    )?;
    ensure(!primary_scan(&gens, &vars(&["x", "y"]), 4), || {
        "scan says primary".into()
    })?;
    ensure(MonomialIdeal::new(gens).is_primary().is_none(), || {
        "is_primary accepted (xy)".into()
    })?;
    Ok("not primary".into())
}

/// Both inclusions by divisibility, and each component primary by scan.
fn check_decomposition(input: &[Monomial], comps: &[MonomialIdeal], vs: &[Var], d: u32) -> Result<(), String> {
    for c in comps {
        ensure(input.iter().all(|g| in_ideal(c.gens(), g)), || {
            format!("input not inside {c}")
        })?;
        ensure(primary_scan(c.gens(), vs, d), || format!("{c} fails the primary scan"))?;
    }
    let cap = intersect_all_gens(&comps.iter().map(|c| c.gens().to_vec()).collect::<Vec<_>>());
    ensure(cap.iter().all(|g| in_ideal(input, g)), || {
        format!("{} not inside input", gens_str(&cap))
    })?;
    Ok(())
}

fn decompose_x2_xy() -> Check {
    let gens = ms(&["x^2", "x*y"]);
    let r = lift(primary_decompose_monomial(&MonomialIdeal::new(gens.clone())))?;
    let comps: Vec<MonomialIdeal> = r.components.iter().map(|c| c.component.clone()).collect();
    check_decomposition(&gens, &comps, &vars(&["x", "y"]), 4)?;
    ensure(r.verify(), || "certificates do not re-check".into())?;
    ensure(comps == vec![mi(&["x"]), mi(&["x^2", "y"])], || r.render())?;
    Ok(r.render())
}

fn decompose_triangle() -> Check {
    let gens = ms(&["x*y", "x*z", "y*z"]);
    let vs = vars(&["x", "y", "z"]);
    let r = lift(primary_decompose_monomial(&MonomialIdeal::new(gens.clone())))?;
    let comps: Vec<MonomialIdeal> = r.components.iter().map(|c| c.component.clone()).collect();
    check_decomposition(&gens, &comps, &vs, 3)?;
    for t in monos(&vs, 3) {
        ensure(
            in_ideal(&gens, &t) == comps.iter().all(|c| in_ideal(c.gens(), &t)),
            || format!("membership of {t}"),
        )?;
    }
    let want: BTreeSet<MonomialIdeal> = [prime(&["x", "y"]), prime(&["x", "z"]), prime(&["y", "z"])].into();
    ensure(
        comps.iter().cloned().collect::<BTreeSet<_>>() == want && comps.len() == 3,
        || r.render(),
    )?;
    Ok(r.render())
}

fn component(gens: &[&str]) -> PrimaryComponent {
    PrimaryComponent::new(mi(gens)).unwrap()
}

fn normalize_drops_redundant() -> Check {
    let input = mi(&["x^2", "x*y"]);
    let raw = vec![component(&["x"]), component(&["x^2", "y"]), component(&["x", "y^2"])];
    let r = lift(normalize_decomposition(raw, &input))?;
    let comps: Vec<MonomialIdeal> = r.components.iter().map(|c| c.component.clone()).collect();
    check_decomposition(input.gens(), &comps, &vars(&["x", "y"]), 4)?;
    for (i, cert) in r.certificates.iter().enumerate() {
        let w = cert.irredundancy_witness.as_ref().ok_or("missing witness")?;
        ensure(!in_ideal(comps[i].gens(), w), || {
            format!("witness {w} lies in {}", comps[i])
        })?;
        for (j, o) in comps.iter().enumerate() {
            ensure(j == i || in_ideal(o.gens(), w), || format!("witness {w} not in {o}"))?;
        }
    }
    ensure(comps == vec![mi(&["x"]), mi(&["x^2", "y"])], || r.render())?;
    Ok(r.render())
}

fn normalize_merges_same_prime() -> Check {
    let input = mi(&["x^2", "x*y", "y^2"]);
    let cap = intersect_gens(&ms(&["x^2", "y"]), &ms(&["x", "y^2"]));
    ensure(cap == gens_of(&input), || {
        format!("oracle intersection {}", gens_str(&cap))
    })?;
    let r = lift(normalize_decomposition(
        vec![component(&["x^2", "y"]), component(&["x", "y^2"])],
        &input,
    ))?;
    ensure(
        r.components.len() == 1 && gens_of(&r.components[0].component) == cap,
        || r.render(),
    )?;
    Ok(r.render())
}

fn avoidance_x_plus_y() -> Check {
    let e = engine();
    let r = lift(prime_avoidance_witness(
        &e,
        &pi(&["x + y"]),
        &[pi(&["x"]), pi(&["y"])],
        42,
    ))?;
    let Avoidance::Witness(w) = r else {
        return Err(format!("expected a witness, got {r:?}"));
    };
    for v in ["x", "y"] {
        let vs = var_set(&[v]);
        let inside = w.monomials().all(|t| t.support().any(|u| vs.contains(&u)));
        ensure(!inside, || format!("{w} lies in ({v})"))?;
    }
    ensure(w == p("x + y"), || format!("witness {w}"))?;
    Ok(w.to_string())
}

/// `z ∈ (I : π₂)` iff `ν(z) + (0,1) ≥ (1,0)`, over the window `{−2..2}²`
/// of values `≥ 0`.
fn cut_quotient_by_pi2() -> Check {
    let g = ValueGroup::ZLex(2);
    let i = lift(CutIdeal::closed(g, Value::Lex(vec![1, 0])))?;
    let q = lift(i.quotient_by(&ValElement::Val(Value::Lex(vec![0, 1]))))?;
    let mut certified = vec![];
    for a in -2..=2i64 {
        for b in -2..=2i64 {
            if [a, b] < [0, 0] {
                continue;
            }
            let oracle = [a, b + 1] >= [1, 0];
            let got = lift(q.member(&ValElement::Val(Value::Lex(vec![a, b]))))?;
            ensure(got == oracle, || {
                format!("({a},{b}): quotient says {got}, oracle {oracle}")
            })?;
            if oracle {
                certified.push([a, b]);
            }
        }
    }
    let least = certified.iter().min().unwrap();
    ensure(*least == [1, -1], || format!("least certified value {least:?}"))?;
    let frozen = include_str!("../data/cut_quotient.txt").trim();
    ensure(q.to_string() == frozen, || {
        format!("quotient {q} differs from the frozen value {frozen}")
    })?;
    Ok(q.to_string())
}

/// Boundary rule of `(I : J)` over `ℚ` against direct sampling: `z` is in
/// the quotient iff `ν(z) + ν(j)` clears `I` for every sampled `j ∈ J`,
/// including values a hair above the threshold of `J`.
fn cut_quotient_boundaries_over_q() -> Check {
    let g = ValueGroup::Q;
    let r = |n: i64, d: i64| Rational64::new(n, d);
    let cut = |t: Rational64, open: bool| {
        let v = Value::Rat(t);
        if open {
            CutIdeal::open(g, v)
        } else {
            CutIdeal::closed(g, v)
        }
        .unwrap()
    };
    let clears = |v: Rational64, t: Rational64, open: bool| if open { v > t } else { v >= t };
    let mut rows = vec![];
    for (a, b) in [
        (r(3, 2), r(1, 2)),
        (r(1, 1), r(1, 1)),
        (r(2, 1), r(1, 3)),
        (r(1, 2), r(3, 2)),
    ] {
        for oi in [false, true] {
            for oj in [false, true] {
                let q = cut(a, oi).quotient(&cut(b, oj)).unwrap();
                let mut js: Vec<Rational64> = [r(1, 1_000_000), r(1, 1000), r(1, 7), r(1, 1), r(5, 1)]
                    .iter()
                    .map(|e| b + e)
                    .collect();
                if !oj {
                    js.push(b);
                }
                for k in 0..=24 {
                    let z = r(k, 6);
                    let oracle = js.iter().all(|j| clears(z + j, a, oi));
                    let got = q.member(&ValElement::Val(Value::Rat(z))).unwrap();
                    ensure(got == oracle, || {
                        format!(
                            "({a}{}:{b}{}) at {z}: got {got}, oracle {oracle}",
                            if oi { "o" } else { "c" },
                            if oj { "o" } else { "c" }
                        )
                    })?;
                }
                rows.push(q.to_string());
            }
        }
    }
    Ok(rows.join("; "))
}

fn annihilator_e1_e2() -> Check {
    let e = engine();
    let mm = CyclicSum::from_monomial(Q, vec![mi(&["x"]), mi(&["y"])]);
    let x = lift(mm.element(&e, vec![p("1"), p("1")]))?;
    let ann = lift(mm.annihilator(&e, &x))?;
    let parts = [ms(&["x"]), ms(&["y"])];
    // Ann(e₁ + e₂) = {r : r ∈ (x) and r ∈ (y)}, scanned on monomials
    let scan = minimize(
        monos(&vars(&["x", "y"]), 3)
            .into_iter()
            .filter(|t| parts.iter().all(|g| in_ideal(g, t)))
            .collect(),
    );
    let got = gens_of(&as_mono(&ann)?);
    let got_v: Vec<Monomial> = got.iter().cloned().collect();
    ensure(scan.iter().all(|t| in_ideal(&got_v, t)), || {
        "oracle element outside Ann".into()
    })?;
    ensure(got.iter().all(|t| parts.iter().all(|g| in_ideal(g, t))), || {
        "Ann element not killing".into()
    })?;
    ensure(got == minimize(ms(&["x*y"])), || gens_str(&got))?;
    Ok(gens_str(&got))
}

fn colon_x_by_y() -> Check {
    let e = engine();
    let mm = lift(CyclicSum::new(&e, Q, vec![PolyIdeal::zero(Q)]))?;
    let n = Submodule {
        parts: vec![pi(&["x"])],
    };
    let u = lift(mm.element(&e, vec![p("y")]))?;
    let r = lift(mm.colon(&e, &n, &[u]))?;
    let oracle = quotient_scan(&ms(&["x"]), &m("y"), &vars(&["x", "y"]), 3);
    let got = gens_of(&as_mono(&r)?);
    ensure(got == oracle && oracle == minimize(ms(&["x"])), || gens_str(&got))?;
    Ok(gens_str(&got))
}

fn single_component(w: &ModElement) -> Result<Polynomial, String> {
    match w.components.as_slice() {
        [c] => Ok(c.clone()),
        _ => Err(format!("unexpected element {w}")),
    }
}

fn x_zero_divisor() -> Check {
    let e = engine();
    let gens = ms(&["x^2", "x*y"]);
    let mm = CyclicSum::from_monomial(Q, vec![MonomialIdeal::new(gens.clone())]);
    let w = lift(mm.is_zero_divisor(&e, &p("x")))?.ok_or("x reported as a nonzerodivisor")?;
    let c = single_component(&w)?;
    ensure(
        !poly_in_ideal(&gens, &c) && poly_in_ideal(&gens, &(&p("x") * &c)),
        || format!("witness {c}"),
    )?;
    ensure(c == p("x"), || format!("witness {c}"))?;
    ensure(lift(mm.is_zero_divisor(&e, &p("1")))?.is_none(), || {
        "1 is a zero divisor".into()
    })?;
    Ok(c.to_string())
}

/// Multiplication by `r` on `k[x,y]/(v)` is injective when the images of
/// the standard monomials have pairwise distinct leading monomials.
fn injective_mod(r: &Polynomial, v: &str, d: u32) -> bool {
    let gens = ms(&[v]);
    let order = ideallab::TermOrder::Grevlex;
    let mut leads = BTreeSet::new();
    for t in monos(&vars(&["x", "y"]), d) {
        if in_ideal(&gens, &t) {
            continue;
        }
        let img = (r * &Polynomial::monomial(Q, t)).filter_terms(|u| !in_ideal(&gens, u));
        match img.leading_monomial(&order) {
            Some(l) if leads.insert(l.clone()) => {}
            _ => return false,
        }
    }
    true
}

fn x_plus_y_not_zero_divisor() -> Check {
    let e = engine();
    let mm = CyclicSum::from_monomial(Q, vec![mi(&["x"]), mi(&["y"])]);
    let r = p("x + y");
    ensure(injective_mod(&r, "x", 6) && injective_mod(&r, "y", 6), || {
        "oracle found a kernel".into()
    })?;
    let got = lift(mm.is_zero_divisor(&e, &r))?;
    ensure(got.is_none(), || format!("reported witness {}", got.unwrap()))?;
    Ok("false".into())
}

fn nilpotence_mod_x2_xy() -> Check {
    let e = engine();
    let gens = ms(&["x^2", "x*y"]);
    let mm = CyclicSum::from_monomial(Q, vec![MonomialIdeal::new(gens.clone())]);
    ensure(in_ideal(&gens, &power(&m("x"), 2)), || "x² ∉ I".into())?;
    // Rabinowitsch: y is nilpotent iff 1 ∈ I + (t·y − 1)
    let rab = lift(e.is_unit(&pi(&["x^2", "x*y", "t*y - 1"])))?;
    ensure(!rab, || "Rabinowitsch says y is nilpotent".into())?;
    let (gx, gy) = (
        lift(mm.is_nilpotent_for(&e, &p("x")))?,
        lift(mm.is_nilpotent_for(&e, &p("y")))?,
    );
    ensure(gx && !gy, || format!("x: {gx}, y: {gy}"))?;
    Ok("x nilpotent, y not".into())
}

fn coprimary_examples() -> Check {
    let e = engine();
    let xy = ms(&["x*y"]);
    let (x, y) = (m("x"), m("y"));
    ensure(
        in_ideal(&xy, &times(&x, &y)) && !in_ideal(&xy, &y) && (1..=8).all(|k| !in_ideal(&xy, &power(&x, k))),
        || "oracle on (xy)".into(),
    )?;
    let a = lift(CyclicSum::from_monomial(Q, vec![mi(&["x*y"])]).is_coprimary(&e))?;
    ensure(a.is_none(), || format!("R/(xy) coprimary for {}", a.unwrap()))?;
    let gens = ms(&["x^2", "x*y", "y^3"]);
    ensure(primary_scan(&gens, &vars(&["x", "y"]), 4), || {
        "oracle on (x², xy, y³)".into()
    })?;
    let b = lift(CyclicSum::from_monomial(Q, vec![MonomialIdeal::new(gens)]).is_coprimary(&e))?;
    ensure(b == Some(Prime::Monomial(prime(&["x", "y"]))), || format!("{b:?}"))?;
    Ok("R/(xy): no; R/(x^2, xy, y^3): (x, y)".into())
}

fn ass0_z_mod_6() -> Check {
    let mut oracle = BTreeSet::new();
    for a in 0..6u64 {
        let ann = (1..=6u64).find(|r| r * a % 6 == 0).unwrap();
        if (2..ann).all(|d| ann % d != 0) && ann > 1 {
            oracle.insert(ann);
        }
    }
    let got: BTreeSet<u64> = lift(IntModule::Cyclic(vec![6]).ass0())?
        .primes()
        .map(|p| match p {
            Prime::Integer(n) => *n,
            _ => 0,
        })
        .collect();
    ensure(got == oracle && oracle == [2, 3].into(), || {
        format!("{got:?} vs {oracle:?}")
    })?;
    let killed = IntModule::Cyclic(vec![6]).act(2, &IntElem::Residues(vec![3])).unwrap();
    ensure(IntModule::Cyclic(vec![6]).is_zero(&killed).unwrap(), || {
        "2·3 ≠ 0".into()
    })?;
    Ok(format!("{got:?}"))
}

fn x2_xy_module() -> CyclicSum {
    CyclicSum::from_monomial(Q, vec![mi(&["x^2", "x*y"])])
}

fn ass1_x2_xy() -> Check {
    let oracle = ass1_scan(&ms(&["x^2", "x*y"]), &vars(&["x", "y"]), 4, 4);
    let got = var_sets(lift(x2_xy_module().ass1(&engine()))?.monomial_primes());
    ensure(
        got == oracle && oracle == [var_set(&["x"]), var_set(&["x", "y"])].into(),
        || format!("{} vs {}", set_str(&got), set_str(&oracle)),
    )?;
    Ok(set_str(&got))
}

fn ass_x2_xy() -> Check {
    let comps = [ms(&["x"]), ms(&["x^2", "y"])];
    ensure(intersect_all_gens(&comps) == minimize(ms(&["x^2", "x*y"])), || {
        "decomposition literal".into()
    })?;
    let oracle: BTreeSet<BTreeSet<Var>> = comps
        .iter()
        .map(|c| c.iter().flat_map(|g| exps(g).into_keys()).collect())
        .collect();
    let got = var_sets(lift(x2_xy_module().ass(&engine()))?.monomial_primes());
    let scan = ass_scan(&ms(&["x^2", "x*y"]), &vars(&["x", "y"]), 4, 4);
    ensure(got == oracle && scan == oracle, || {
        format!("{} vs {}", set_str(&got), set_str(&oracle))
    })?;
    Ok(set_str(&got))
}

fn ass_membership_y() -> Check {
    let scan = ass_scan(&ms(&["x^2", "x*y"]), &vars(&["x", "y"]), 4, 4);
    let oracle_member = scan.contains(&var_set(&["y"]));
    let got = lift(x2_xy_module().ass_membership_witness(&engine(), &Prime::Monomial(prime(&["y"]))))?;
    let refuted = matches!(got, AssMembership::Refuted { .. });
    ensure(refuted == !oracle_member && refuted, || {
        format!("{got:?}, oracle member {oracle_member}")
    })?;
    Ok("refuted".into())
}

fn supp_x() -> Check {
    let oracle = ms(&["x^2", "x*y"]).iter().all(|g| in_ideal(&ms(&["x"]), g));
    let got = lift(x2_xy_module().supp_contains(&engine(), &pi(&["x"])))?;
    ensure(got && oracle, || format!("got {got}, oracle {oracle}"))?;
    Ok("true".into())
}

fn module_radical_x2_xy() -> Check {
    let e = engine();
    let gens = ms(&["x^2", "x*y"]);
    let scan = minimize(
        monos(&vars(&["x", "y"]), 3)
            .into_iter()
            .filter(|t| (1..=4).any(|k| in_ideal(&gens, &power(t, k))))
            .collect(),
    );
    let primes_cap = intersect_gens(&ms(&["x"]), &ms(&["x", "y"]));
    let mm = x2_xy_module();
    let got = gens_of(&as_mono(&lift(mm.module_radical(&e, &Submodule::zero(&mm)))?)?);
    ensure(got == scan && scan == primes_cap && got == minimize(ms(&["x"])), || {
        gens_str(&got)
    })?;
    Ok(gens_str(&got))
}

fn radical_x2y() -> Check {
    let gens = ms(&["x^2*y"]);
    let oracle = minimize(gens.iter().map(squarefree).collect());
    let got = gens_of(&MonomialIdeal::new(gens).radical());
    ensure(got == oracle && oracle == minimize(ms(&["x*y"])), || gens_str(&got))?;
    Ok(gens_str(&got))
}

fn essential_primes_x2_xy() -> Check {
    let e = engine();
    let mm = lift(CyclicSum::new(&e, Q, vec![PolyIdeal::zero(Q)]))?;
    let n = Submodule {
        parts: vec![pi(&["x^2", "x*y"])],
    };
    let got = var_sets(lift(mm.essential_primes(&e, &n))?.monomial_primes());
    let oracle = ass_scan(&ms(&["x^2", "x*y"]), &vars(&["x", "y"]), 4, 4);
    ensure(got == oracle, || format!("{} vs {}", set_str(&got), set_str(&oracle)))?;
    let whole = mm.essential_primes(&e, &Submodule::whole(&mm));
    ensure(whole.is_err(), || "N = M accepted".into())?;
    Ok(set_str(&got))
}

fn directsum_seed_7() -> Check {
    let o = ParamOverrides {
        n: Some(4),
        samples: Some(100),
        seed: Some(7),
        ..Default::default()
    };
    let r = lift(run_example(&engine(), "ass-vs-ass1-directsum", &o))?;
    let c = r
        .claims
        .iter()
        .find(|c| c.name == "annihilators-below-p")
        .ok_or("claim missing")?;
    ensure(r.passed && c.passed(), || format!("{:#}", r.to_json()))?;
    Ok(c.witness["first_index_histogram"].to_string())
}

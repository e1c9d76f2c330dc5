use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value as Json};

use super::{random_poly, Claim, Level, Params, Verdict};
use crate::error::Result;
use crate::groebner::{Engine, PolyIdeal};
use crate::ideal::{self, in_monomial_prime, s_component, MonomialIdeal, MultSetSpec};
use crate::module::{first_primes, AssMembership, CyclicSum, IntElem, IntModule, Prime};
use crate::poly::{parse_polynomial, Domain, Monomial, Polynomial, RewriteSystem, Var};
use crate::valuation::{CutIdeal, ValElement, ValModule, ValueGroup};

type Outcome = Result<(Vec<Claim>, Vec<String>)>;

const Q: Domain = Domain::Q;

fn claim(name: &str, anchor: &'static str, level: Level, ok: bool, witness: Json) -> Claim {
    Claim {
        name: name.to_string(),
        anchor,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        level,
        witness,
    }
}

fn poly(s: &str) -> Polynomial {
    parse_polynomial(s, Q).expect("scenario literal parses")
}

fn xs(name: &str, range: std::ops::RangeInclusive<u32>) -> Vec<Var> {
    range.map(|i| Var::indexed(name, i)).collect()
}

fn rng(p: &Params) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(p.seed)
}

pub(super) fn rank2_valuation(_e: &Engine, p: &Params) -> Outcome {
    let g = ValueGroup::ZLex(2);
    let pi1 = g.lex(&[1, 0])?;
    let pi2 = ValElement::Val(g.lex(&[0, 1])?);
    let a = CutIdeal::closed(g, pi1)?;
    let m = ValModule::Quotient(a.clone());
    let mut claims = vec![];

    let cert = a.indecomposable()?;
    claims.push(claim(
        "indecomposable",
        r"R\cdot\pi_1=\frak a\cap\frak b",
        Level::WitnessLevel,
        cert.indecomposable,
        json!({
            "pairs_checked": cert.pairs_checked,
            "examples": cert.examples.iter().map(|(x, y, c)| format!("{x} ∩ {y} = {c}")).collect::<Vec<_>>(),
        }),
    ));

    let w = m.is_zero_divisor(&pi2)?;
    let ok = match &w {
        Some(w) => m.act(&pi2, &w.element)?.is_zero() && !m.reduce(&w.element)?.is_zero(),
        None => false,
    };
    claims.push(claim(
        "zero-divisor",
        r"(1,-1)=\nu(\pi_1/\pi_2)",
        Level::Exact,
        ok,
        json!({ "element": w.as_ref().map(|w| w.element.to_string()), "multiplier": pi2.to_string() }),
    ));

    let one = ValElement::Val(g.zero());
    let mut powers_ok = true;
    for i in 1..=p.bound {
        powers_ok &= !m.act(&pi2.pow(i), &one)?.is_zero();
    }
    let not_nil = !m.is_nilpotent_for(&pi2)?;
    claims.push(claim(
        "not-nilpotent",
        r"\nu(\pi_2^i)=(0,i)<(1,0)",
        Level::Exact,
        powers_ok && not_nil && m.is_coprimary()?.is_none(),
        json!({ "powers_checked": p.bound, "nilpotents": m.nilpotents()?.to_string(), "zero_divisors": m.zero_divisors()?.to_string() }),
    ));
    Ok((claims, vec![]))
}

pub(super) fn ass_vs_ass1_directsum(e: &Engine, p: &Params) -> Outcome {
    let n = p.n as u32;
    let x = xs("x", 1..=n + 1);
    let prime = |i: u32| MonomialIdeal::prime(x[..i as usize].iter().copied());
    let m = CyclicSum::from_monomial(Q, (1..=n).map(prime).collect());
    let big = prime(n + 1);
    let mut claims = vec![];
    let mut rng = rng(p);

    let mut ok = true;
    for i in 0..m.len() {
        let ann = m.annihilator(e, &m.generator(e, i)?)?;
        ok &= e.ideal_eq(&ann, &prime(i as u32 + 1).to_poly_ideal(Q))?;
    }
    let ass0 = m.ass0(e)?;
    let want: BTreeSet<MonomialIdeal> = (1..=n).map(prime).collect();
    ok &= ass0.complete && ass0.monomial_primes() == want;
    claims.push(claim(
        "pi-in-ass0",
        r"\frak p_i=\operatorname{Ann}_R(e_i)",
        Level::Exact,
        ok,
        json!({ "ass0": ass0.to_string() }),
    ));

    let mut ok = true;
    let mut hist: BTreeMap<u32, usize> = BTreeMap::new();
    let mut shown = vec![];
    for _ in 0..p.samples {
        let y = loop {
            let comps: Vec<Polynomial> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        random_poly(&mut rng, Q, &x, 3, 0, p.degree)
                    } else {
                        Polynomial::zero(Q)
                    }
                })
                .collect();
            let y = m.element(e, comps)?;
            if !y.is_zero() {
                break y;
            }
        };
        let i0 = y.components.iter().position(|c| !c.is_zero()).unwrap() as u32 + 1;
        let ann = MonomialIdeal::from_poly_ideal(&m.annihilator(e, &y)?);
        let good = ann.as_ref() == Some(&prime(i0))
            && ann.as_ref().map(|a| a.minimal_primes()) == Some(vec![prime(i0)])
            && big.contains_ideal(&prime(i0))
            && prime(i0) != big;
        ok &= good;
        *hist.entry(i0).or_default() += 1;
        if shown.len() < 3 || !good {
            shown.push(json!({ "y": y.to_string(), "ann": ann.map(|a| a.to_string()), "ok": good }));
        }
    }
    claims.push(claim(
        "annihilators-below-p",
        r"\operatorname{Ann}_R(y)\subseteq\frak p_n\subsetneq\frak p",
        Level::WitnessLevel,
        ok,
        json!({ "truncation_prime": big.to_string(), "first_index_histogram": hist, "samples": shown }),
    ));

    let ass1 = m.ass1(e)?;
    claims.push(claim(
        "p-not-in-ass1",
        r"\frak p\notin\operatorname{Ass}_1(M)",
        Level::Exact,
        ass1.complete && ass1.monomial_primes() == want && !ass1.contains(&Prime::Monomial(big.clone())),
        json!({ "ass1": ass1.to_string(), "excluded": big.to_string() }),
    ));

    let ext = CyclicSum::from_monomial(Q, (1..=n + 1).map(prime).collect());
    let mut ok = true;
    let mut shown = vec![];
    for _ in 0..p.samples {
        let f = random_poly(&mut rng, Q, &x, 3, 1, p.degree);
        if f.is_zero() {
            continue;
        }
        let i = f.vars().iter().filter_map(|v| v.index()).max().unwrap();
        let pi = prime(i);
        let ann = ext.annihilator(e, &ext.generator(e, i as usize - 1)?)?;
        let good = in_monomial_prime(&f, &pi.vars()) && e.ideal_eq(&ann, &pi.to_poly_ideal(Q))?;
        ok &= good;
        if shown.len() < 3 || !good {
            shown.push(json!({ "f": f.to_string(), "in": pi.to_string() }));
        }
    }
    claims.push(claim(
        "p-is-union",
        r"\frak p=\bigcup\limits_{i=1}^\infty\frak p_i",
        Level::WitnessLevel,
        ok,
        json!({ "samples": shown }),
    ));
    Ok((
        claims,
        vec![format!(
            "truncated at n = {n}; the union prime is modelled by (x_1..x_{})",
            n + 1
        )],
    ))
}

/// Monomials in `x_1..x_n, y_1..y_n` of total degree ≤ `d`.
fn xy_monomials(n: u32, d: u32) -> Vec<Monomial> {
    let vars: BTreeSet<Var> = xs("x", 1..=n).into_iter().chain(xs("y", 1..=n)).collect();
    crate::module::monomials_up_to(&vars, d)
}

fn in_basis_a(m: &Monomial) -> bool {
    m.support().filter(|v| v.name() == "y").all(|y| {
        let i = y.index().unwrap();
        m.exponent(y) <= 1 && m.exponent(Var::indexed("x", i)) == 0
    })
}

pub(super) fn ass_vs_ass1_cyclic(_e: &Engine, p: &Params) -> Outcome {
    let rs = RewriteSystem::xy_nilpotent_family("x", "y");
    let n = p.n as u32;
    let mut claims = vec![];
    let mut rng = rng(p);

    let mut checked = 0usize;
    let mut bad = vec![];
    for k in 1..=n {
        for mono in xy_monomials(k, p.degree) {
            checked += 1;
            if rs.is_reducible(&mono) == in_basis_a(&mono) {
                bad.push(mono.to_string());
            }
        }
    }
    claims.push(claim(
        "basis-A",
        r"\epsilon_i=0 \text{ if }\nu_i>0",
        Level::Exact,
        bad.is_empty(),
        json!({ "monomials_checked": checked, "max_degree": p.degree, "mismatches": bad }),
    ));

    let vars: Vec<Var> = xs("x", 1..=n).into_iter().chain(xs("y", 1..=n)).collect();
    let nonzero_nf = |rng: &mut ChaCha8Rng, min_deg: u32| loop {
        let z = rs.normal_form(&random_poly(rng, Q, &vars, 3, min_deg, 4));
        if !z.is_zero() {
            break z;
        }
    };

    let mut ok = true;
    let mut shown = vec![];
    for _ in 0..p.samples {
        let c = rng.gen_range(1..=5);
        let t = &Polynomial::constant(Q, num_rational::BigRational::from_integer(c.into()))
            + &rs.normal_form(&random_poly(&mut rng, Q, &vars, 3, 1, 4));
        let z = nonzero_nf(&mut rng, 0);
        let tz = rs.mul(&t, &z);
        ok &= !tz.is_zero();
        if shown.len() < 3 || tz.is_zero() {
            shown.push(json!({ "t": t.to_string(), "z": z.to_string(), "t*z": tz.to_string() }));
        }
    }
    claims.push(claim(
        "no-zero-divisors-outside-p",
        r"T\cdot Z\in\frak a'",
        Level::WitnessLevel,
        ok,
        json!({ "samples": shown }),
    ));

    let ys = Polynomial::monomial(Q, Monomial::from_exponents(xs("y", 1..=n).into_iter().map(|v| (v, 1))));
    let mut ok = !rs.normal_form(&ys).is_zero();
    let mut shown = vec![];
    for _ in 0..p.samples {
        let f = nonzero_nf(&mut rng, 1);
        let prod = rs.mul(&f, &ys);
        ok &= prod.is_zero();
        if shown.len() < 3 || !prod.is_zero() {
            shown.push(json!({ "p": f.to_string(), "p*y": prod.to_string() }));
        }
    }
    claims.push(claim(
        "p-membership",
        r"p\cdot y_1\cdots y_n=0",
        Level::WitnessLevel,
        ok,
        json!({ "killed_element": ys.to_string(), "samples": shown }),
    ));

    let mut ok = true;
    let mut shown = vec![];
    for _ in 0..p.samples {
        let z = nonzero_nf(&mut rng, 0);
        let mi = rng.gen_range(n + 1..=n + 3);
        let lambda = rng.gen_range(1..=p.bound.max(1));
        let xm = Polynomial::monomial(Q, Monomial::pow(Var::indexed("x", mi), lambda));
        let prod = rs.mul(&xm, &z);
        ok &= !prod.is_zero();
        if shown.len() < 3 || prod.is_zero() {
            shown.push(json!({ "z": z.to_string(), "m": mi, "lambda": lambda, "ok": !prod.is_zero() }));
        }
    }
    claims.push(claim(
        "not-nilpotent",
        r"x_m^\lambda\cdot z\ne0",
        Level::WitnessLevel,
        ok,
        json!({ "samples": shown }),
    ));
    Ok((claims, vec![format!("variables x_i, y_i with i <= {n}")]))
}

pub(super) fn valuation_q(_e: &Engine, p: &Params) -> Outcome {
    let q = ValueGroup::Q;
    let a = CutIdeal::closed(q, q.rat(1, 1)?)?;
    let m = ValModule::Quotient(a);
    let big_p = CutIdeal::maximal(q);
    let mut claims = vec![];

    let cop = m.is_coprimary()?;
    claims.push(claim(
        "zero-primary",
        r"p^n\cdot M=(0)",
        Level::Exact,
        cop.as_ref() == Some(&big_p) && m.nilpotents()? == big_p && m.zero_divisors()? == big_p,
        json!({ "prime": cop.map(|c| c.to_string()) }),
    ));

    let ass0 = m.ass0()?;
    claims.push(claim(
        "ass0-empty",
        r"\operatorname{Ass}_0(M)=\emptyset",
        Level::Exact,
        ass0.is_empty(),
        json!({ "ass0": ass0.iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
    ));

    let ass = m.ass()?;
    let ass1 = m.ass1()?;
    claims.push(claim(
        "ass-equals-ass1",
        r"\operatorname{Ass}(M)=\operatorname{Ass}_1(M)\supsetneq\operatorname{Ass}_0(M)",
        Level::Exact,
        ass == vec![big_p.clone()] && ass1 == ass,
        json!({ "ass": ass.iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
    ));

    let mut r = rng(p);
    let mut ok = true;
    let mut shown = vec![];
    for _ in 0..p.samples {
        let den = r.gen_range(1..=60i64);
        let num = r.gen_range(0..den);
        let x = ValElement::Val(q.rat(num, den)?);
        let ann = m.annihilator_of(&x)?;
        let good = ann != big_p && ann.is_subset(&big_p);
        ok &= good;
        if shown.len() < 3 || !good {
            shown.push(json!({ "value": q.rat(num, den)?.to_string(), "ann": ann.to_string() }));
        }
    }
    claims.push(claim(
        "no-annihilator-is-P",
        r"\nu(z)+\frac{1}{n}\ge1",
        Level::WitnessLevel,
        ok,
        json!({ "samples": shown }),
    ));
    Ok((claims, vec![]))
}

/// The declared finite list of principal primes of `k[X,Y]`.
fn declared_primes() -> Vec<Polynomial> {
    ["X", "Y", "X+Y", "X+Y^2"].iter().map(|s| poly(s)).collect()
}

fn principal_sum(e: &Engine, gens: &[Polynomial]) -> Result<CyclicSum> {
    CyclicSum::new(e, Q, gens.iter().map(|g| PolyIdeal::principal(g.clone())).collect())
}

fn maximal_xy() -> PolyIdeal {
    PolyIdeal::new(Q, vec![poly("X"), poly("Y")]).unwrap()
}

fn random_element(e: &Engine, m: &CyclicSum, rng: &mut ChaCha8Rng, deg: u32) -> Result<crate::module::ModElement> {
    let vars = [Var::new("X"), Var::new("Y")];
    loop {
        let comps = (0..m.len())
            .map(|_| {
                if rng.gen_bool(0.5) {
                    random_poly(rng, Q, &vars, 3, 0, deg)
                } else {
                    Polynomial::zero(Q)
                }
            })
            .collect();
        let y = m.element(e, comps)?;
        if !y.is_zero() {
            return Ok(y);
        }
    }
}

fn check_membership(e: &Engine, m: &CyclicSum, cert: &AssMembership) -> Result<(bool, Json)> {
    let mm = Prime::Poly(maximal_xy());
    Ok(match cert {
        AssMembership::Certified { generators, .. } | AssMembership::GeneratorsOnly { generators } => {
            let mut ok = true;
            for w in generators {
                ok &= m.check_generator_witness(e, &mm, w)?;
            }
            (ok, serde_json::to_value(cert).unwrap())
        }
        AssMembership::Refuted { .. } => (false, serde_json::to_value(cert).unwrap()),
    })
}

/// Sampled `z ∈ 𝔪` built as `z_1·p`; the listed prime dividing it is found by
/// exact division and `z·e_p = 0` is checked.
fn m_elements_zero_divisors(e: &Engine, m: &CyclicSum, primes: &[Polynomial], p: &Params) -> Result<(bool, Json)> {
    let mut rng = rng(p);
    let vars = [Var::new("X"), Var::new("Y")];
    let mut ok = true;
    let mut shown = vec![];
    for _ in 0..p.samples {
        let z1 = loop {
            let z1 = random_poly(&mut rng, Q, &vars, 3, 0, p.degree);
            if !z1.is_zero() {
                break z1;
            }
        };
        let z = &z1 * &primes[rng.gen_range(0..primes.len())];
        let k = primes
            .iter()
            .position(|q| z.exact_div(q, e.order()).is_some())
            .expect("a listed prime divides z");
        let killed = m.act(e, &z, &m.generator(e, k)?)?.is_zero();
        ok &= killed;
        if shown.len() < 3 || !killed {
            shown.push(json!({ "z": z.to_string(), "p": primes[k].to_string(), "z*e_p": if killed { "0" } else { "nonzero" } }));
        }
    }
    Ok((ok, json!(shown)))
}

pub(super) fn local_noetherian(e: &Engine, p: &Params) -> Outcome {
    let primes = declared_primes();
    let m = principal_sum(e, &primes)?;
    let mm = maximal_xy();
    let mut claims = vec![];

    let mut ok = true;
    for (k, q) in primes.iter().enumerate() {
        let ann = m.annihilator(e, &m.generator(e, k)?)?;
        ok &= e.ideal_eq(&ann, &PolyIdeal::principal(q.clone()))?;
    }
    claims.push(claim(
        "ann-of-generators",
        r"\operatorname{Ann}_R(e_p)=R\cdot p",
        Level::Exact,
        ok,
        json!({ "primes": primes.iter().map(|q| q.to_string()).collect::<Vec<_>>() }),
    ));

    let mut rng = rng(p);
    let mut ok_sub = true;
    let mut ok_min = true;
    let mut shown = vec![];
    for _ in 0..p.samples {
        let xi = random_element(e, &m, &mut rng, p.degree)?;
        let k = xi.components.iter().position(|c| !c.is_zero()).unwrap();
        let p0 = PolyIdeal::principal(primes[k].clone());
        let ann = m.annihilator(e, &xi)?;
        let sub = e.contains(&p0, &ann)?;
        // (p0) is a prime strictly between Ann(ξ) and 𝔪
        let strictly_below = e.contains(&mm, &p0)? && !e.contains(&p0, &mm)?;
        ok_sub &= sub;
        ok_min &= sub && strictly_below;
        if shown.len() < 3 || !sub {
            shown.push(json!({ "xi": xi.to_string(), "ann": ann.to_string(), "p0": primes[k].to_string() }));
        }
    }
    claims.push(claim(
        "annihilators-in-principal-primes",
        r"\operatorname{Ann}_R(\xi)\subseteq R\cdot p_0",
        Level::WitnessLevel,
        ok_sub,
        json!({ "samples": shown }),
    ));

    let cert = m.ass_membership_witness(e, &Prime::Poly(mm.clone()))?;
    let (gen_ok, gen_json) = check_membership(e, &m, &cert)?;
    let (el_ok, el_json) = m_elements_zero_divisors(e, &m, &primes, p)?;
    claims.push(claim(
        "m-elements-are-zero-divisors",
        r"z\cdot e_p=0",
        Level::WitnessLevel,
        gen_ok && el_ok,
        json!({ "generators": gen_json, "elements": el_json }),
    ));

    claims.push(claim(
        "m-not-minimal",
        r"\frak m:=(X,Y)\in\operatorname{Ass}(M)\setminus\operatorname{Ass}_1(M)",
        Level::WitnessLevel,
        ok_min,
        json!({ "declared_primes": primes.len(), "samples": p.samples }),
    ));
    Ok((
        claims,
        vec![
            "the local ring k[X,Y]_(X,Y) is modelled by k[X,Y]; every check here is a divisibility or \
             annihilator computation that does not change under this localization"
                .into(),
            "only the declared prime list X, Y, X+Y, X+Y^2 is used; Ass_1 exclusions are checked on it alone".into(),
        ],
    ))
}

pub(super) fn ass_not_exact(e: &Engine, p: &Params) -> Outcome {
    let primes = declared_primes();
    let n = principal_sum(e, &primes[..1])?;
    let l = principal_sum(e, &primes[1..])?;
    let m = n.direct_sum(&l)?;
    let x = poly("X");
    let mut claims = vec![];

    let cert = m.ass_membership_witness(e, &Prime::Poly(maximal_xy()))?;
    let (gen_ok, gen_json) = check_membership(e, &m, &cert)?;
    let (el_ok, el_json) = m_elements_zero_divisors(e, &m, &primes, p)?;
    claims.push(claim(
        "m-certificate-for-sum",
        r"\frak m\in\operatorname{Ass}(M)",
        Level::WitnessLevel,
        gen_ok && el_ok,
        json!({ "generators": gen_json, "elements": el_json }),
    ));

    let ass_n = n.ass(e)?;
    let want = Prime::Monomial(MonomialIdeal::prime([Var::new("X")]));
    let m_prime = Prime::Monomial(MonomialIdeal::prime([Var::new("X"), Var::new("Y")]));
    claims.push(claim(
        "ass-of-N",
        r"\operatorname{Ass}(M)=\{R\cdot X\}\not\ni\frak m",
        Level::Exact,
        ass_n.len() == 1 && ass_n.contains(&want) && !ass_n.contains(&m_prime),
        json!({ "ass": ass_n.to_string() }),
    ));

    let exact = l.is_zero_divisor(e, &x)?;
    let mut rng = rng(p);
    let mut ok = exact.is_none();
    for _ in 0..p.samples {
        let xi = random_element(e, &l, &mut rng, p.degree)?;
        ok &= !l.act(e, &x, &xi)?.is_zero();
    }
    claims.push(claim(
        "X-injective-on-L",
        r"\frak m\notin\operatorname{Ass}(L)",
        Level::Exact,
        ok,
        json!({ "zero_divisor_witness": exact.map(|w| w.to_string()), "sampled": p.samples }),
    ));
    Ok((
        claims,
        vec!["N = R/(X); L is the sum over the remaining declared primes".into()],
    ))
}

pub(super) fn rad_zero_supp(_e: &Engine, p: &Params) -> Outcome {
    let primes = first_primes(p.n);
    let m = IntModule::prime_sum(&primes)?;
    let mut claims = vec![];

    claims.push(claim(
        "zero-not-in-supp",
        r"(0)\notin\operatorname{Supp}(M)",
        Level::Exact,
        !m.supp_contains(0),
        json!({ "summands": primes.len() }),
    ));
    claims.push(claim(
        "supp-is-nonzero-primes",
        r"\operatorname{Supp}(M)=\{(p)\mid 0\ne p\text{ prime element in }\Bbb Z\}",
        Level::WitnessLevel,
        primes.iter().all(|q| m.supp_contains(*q)) && !m.supp_contains(0),
        json!({ "largest_prime": primes.last() }),
    ));

    let mut rng = rng(p);
    let mut ok = true;
    let mut shown = vec![];
    for _ in 0..p.samples {
        let n: i64 = loop {
            let n = rng.gen_range(-1_000_000i64..=1_000_000);
            if n != 0 {
                break n;
            }
        };
        let Some(k) = primes.iter().position(|q| !n.unsigned_abs().is_multiple_of(*q)) else {
            ok = false;
            continue;
        };
        let mut x = vec![0i64; primes.len()];
        x[k] = 1;
        let mut y = IntElem::Residues(x);
        let mut good = true;
        for _ in 0..p.bound {
            y = m.act(n, &y)?;
            good &= !m.is_zero(&y)?;
        }
        ok &= good;
        if shown.len() < 3 || !good {
            shown.push(json!({ "n": n, "p": primes[k], "powers": p.bound }));
        }
    }
    claims.push(claim(
        "radical-is-zero",
        r"p\nmid n^\nu",
        Level::WitnessLevel,
        ok,
        json!({ "samples": shown }),
    ));
    Ok((claims, vec![format!("truncated to the first {} primes", primes.len())]))
}

pub(super) fn q_mod_z(_e: &Engine, p: &Params) -> Outcome {
    use num_rational::Rational64;
    let m = IntModule::QmodZ;
    let mut rng = rng(p);
    let mut claims = vec![];

    let mut ok = m.annihilator() == 0;
    let mut shown = vec![];
    for _ in 0..p.samples {
        let n = rng.gen_range(1..=10_000i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let x = IntElem::Frac(Rational64::new(1, 2 * n));
        let good = !m.is_zero(&m.act(n, &x)?)?;
        ok &= good;
        if shown.len() < 3 || !good {
            shown.push(json!({ "n": n, "x": x.to_string() }));
        }
    }
    claims.push(claim(
        "annihilator-zero",
        r"\operatorname{Ann}_R(M)=(0)",
        Level::WitnessLevel,
        ok,
        json!({ "samples": shown }),
    ));

    let mut ok = !m.supp_contains(0);
    let mut shown = vec![];
    for _ in 0..p.samples {
        let b = rng.gen_range(1..=1000i64);
        let a = rng.gen_range(-5000..=5000i64);
        let x = IntElem::Frac(Rational64::new(a, b));
        let ann = m.annihilator_of(&x)?;
        let good = ann != 0 && m.is_zero(&m.act(ann as i64, &x)?)?;
        ok &= good;
        if shown.len() < 3 || !good {
            shown.push(json!({ "x": x.to_string(), "killed_by": ann }));
        }
    }
    claims.push(claim(
        "torsion",
        r"R_{(0)}=\Bbb Q",
        Level::WitnessLevel,
        ok,
        json!({ "samples": shown }),
    ));
    Ok((claims, vec![]))
}

pub(super) fn no_min_supp(e: &Engine, p: &Params) -> Outcome {
    let n = p.n as u32;
    let x = xs("X", 1..=n);
    let prime = |i: u32| MonomialIdeal::prime(x[i as usize - 1..].iter().copied());
    let chain: Vec<MonomialIdeal> = (1..=n).map(prime).collect();
    let m = CyclicSum::from_monomial(Q, chain.clone());
    let mut claims = vec![];

    let mut ok = true;
    for w in chain.windows(2) {
        ok &= w[0].contains_ideal(&w[1]) && w[0] != w[1];
        for q in w {
            ok &= m.supp_contains(e, &q.to_poly_ideal(Q))?;
        }
    }
    claims.push(claim(
        "descending-chain",
        r"\frak p_{i_0}\supsetneq\frak p_{i_0+1}",
        Level::WitnessLevel,
        ok,
        json!({ "chain": chain.iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
    ));

    let mut ok = true;
    let mut in_supp = 0;
    for mask in 0u32..(1 << n) {
        let q = MonomialIdeal::prime((0..n).filter(|b| mask >> b & 1 == 1).map(|b| x[b as usize]));
        let s = m.supp_contains(e, &q.to_poly_ideal(Q))?;
        in_supp += s as usize;
        ok &= s == chain.iter().any(|c| q.contains_ideal(c));
    }
    claims.push(claim(
        "supp-is-union",
        r"\operatorname{Supp}(M_i)=\{\frak p\mid\frak p\supseteq\frak p_i\}",
        Level::Exact,
        ok,
        json!({ "primes_checked": 1u64 << n, "in_support": in_supp }),
    ));
    Ok((
        claims,
        vec![format!(
            "truncated to X_1..X_{n}; the chain continues past the truncation in the infinite ring"
        )],
    ))
}

pub(super) fn quot_r_module(_e: &Engine, p: &Params) -> Outcome {
    let g = ValueGroup::ZLex(1);
    let m = ValModule::QuotField(g);
    let max = CutIdeal::maximal(g);
    let zero = CutIdeal::zero(g);
    let mut claims = vec![];

    let mut shown = vec![];
    for k in 1..=p.samples.min(5) as i64 {
        let x = ValElement::Val(g.lex(&[-k])?);
        shown.push(json!({ "element": x.to_string(), "ann": m.annihilator_of(&x)?.to_string() }));
    }
    claims.push(claim(
        "ann-zero-prime",
        r"\operatorname{Ann}_R(M)=(0)",
        Level::Exact,
        m.annihilator() == zero && zero.is_prime(),
        json!({ "element_annihilators": shown }),
    ));

    let cop = m.is_coprimary()?;
    claims.push(claim(
        "coprimary",
        r"$M$ is $\frak p$-coprimary",
        Level::Exact,
        cop.as_ref() == Some(&max),
        json!({ "prime": cop.map(|c| c.to_string()) }),
    ));

    let ring = ValModule::Quotient(zero.clone());
    let ess = ring.ass()?;
    claims.push(claim(
        "zero-essential-for-ann",
        r"$(0)$ is essential for",
        Level::Exact,
        ess == vec![zero.clone()],
        json!({ "essential_primes": ess.iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
    ));

    let ass = m.ass()?;
    claims.push(claim(
        "zero-not-in-ass",
        r"\operatorname{Ass}(M)=\{\frak p\}\not\ni(0)",
        Level::Exact,
        ass == vec![max] && !ass.contains(&zero),
        json!({ "ass": ass.iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
    ));
    Ok((claims, vec![]))
}

pub(super) fn scomp_not_additive(e: &Engine, _p: &Params) -> Outcome {
    let s = MultSetSpec::PowersOf(poly("x+y"));
    let n = PolyIdeal::principal(poly("x"));
    let nt = PolyIdeal::principal(poly("y"));
    let both = ideal::sum(&n, &nt)?;
    let sn = s_component(e, &n, &s)?;
    let snt = s_component(e, &nt, &s)?;
    let sb = s_component(e, &both, &s)?;
    let unit = PolyIdeal::unit(Q);
    Ok((
        vec![
            claim(
                "S(N)=N",
                r"Then $S(N)=N$",
                Level::Exact,
                e.ideal_eq(&sn, &n)?,
                json!({ "S(N)": sn.to_string() }),
            ),
            claim(
                "S(N~)=N~",
                r"$S(\widetilde N)=\widetilde N$",
                Level::Exact,
                e.ideal_eq(&snt, &nt)?,
                json!({ "S(N~)": snt.to_string() }),
            ),
            claim(
                "S(N+N~)=R",
                r"S(N+\widetilde N)=R\nsubseteq R\cdot X+R\cdot Y",
                Level::Exact,
                e.ideal_eq(&sb, &unit)? && !e.contains(&both, &unit)?,
                json!({ "S(N+N~)": sb.to_string(), "N+N~": both.to_string() }),
            ),
        ],
        vec![],
    ))
}

//! The ten acceptance criteria, each returning a one-line summary.

use std::collections::BTreeSet;
use std::time::Instant;

use ideallab::gallery::{list_examples, run_all, run_example, ParamOverrides};
use ideallab::ideal::{
    primary_decompose_monomial, primary_decompose_with, s_component, MonomialIdeal, MultSetSpec, SplitStrategy,
};
use ideallab::module::{CyclicSum, PrimeSet, Submodule};
use ideallab::valuation::{CutIdeal, ValModule, Value, ValueGroup};
use ideallab::{Monomial, PolyIdeal, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

pub const SEED: u64 = 20_240_601;

/// Which monomial primes an S-component keeps.
type Keeps = Box<dyn Fn(&BTreeSet<Var>) -> bool>;

pub type CriterionFn = fn() -> Check;

pub fn all() -> Vec<(&'static str, CriterionFn)> {
    vec![
        ("gallery completeness", gallery_completeness),
        ("S-component non-additivity", scomp_non_additive),
        ("monomial decomposition soundness", decomposition_soundness),
        ("uniqueness at minimal primes", uniqueness_at_minimal_primes),
        ("S-component consistency", scomp_consistency),
        ("noetherian collapse", noetherian_collapse),
        ("support, Ass and radical laws", supp_ass_radical),
        ("separations", separations),
        ("exact sequences", exact_sequences),
        ("oracle parity", oracle_parity),
    ]
}

fn ideals(n: usize) -> Vec<(Vec<Monomial>, MonomialIdeal)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..n).map(|_| random_monomial_ideal(&mut rng)).collect()
}

fn sums(n: usize) -> Vec<Vec<Vec<Monomial>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    (0..n).map(|_| random_cyclic_sum(&mut rng)).collect()
}

fn module_of(parts: &[Vec<Monomial>]) -> CyclicSum {
    CyclicSum::from_monomial(Q, parts.iter().map(|g| MonomialIdeal::new(g.clone())).collect())
}

fn var_sets_of(s: &PrimeSet) -> BTreeSet<BTreeSet<Var>> {
    var_sets(s.monomial_primes())
}

pub fn gallery_completeness() -> Check {
    let e = engine();
    let start = Instant::now();
    let reports = run_all(&e, &ParamOverrides::default());
    let secs = start.elapsed().as_secs_f64();
    let reference =
        std::fs::read_to_string(reference_path()).map_err(|err| format!("{}: {err}", reference_path().display()))?;
    let catalog = list_examples();
    ensure(reports.len() == 11 && catalog.len() == 11, || {
        format!("{} reports", reports.len())
    })?;
    let mut claims = 0;
    for (r, info) in reports.into_iter().zip(&catalog) {
        let r = lift(r)?;
        ensure(r.passed, || format!("{} failed: {}", r.id, r.to_json()))?;
        let names: Vec<&str> = r.claims.iter().map(|c| c.name.as_str()).collect();
        ensure(names == info.claims, || format!("{}: claims {names:?}", r.id))?;
        for c in &r.claims {
            ensure(reference.contains(c.anchor), || {
                format!("{}/{}: anchor not found", r.id, c.name)
            })?;
        }
        claims += r.claims.len();
    }
    ensure(secs < 120.0, || format!("took {secs:.1}s"))?;
    Ok(format!("11 scenarios, {claims} claims, anchors found, {secs:.2}s"))
}

pub fn scomp_non_additive() -> Check {
    let e = engine();
    let f = p("x + y");
    for (i, want) in [
        (pi(&["x"]), pi(&["x"])),
        (pi(&["y"]), pi(&["y"])),
        (pi(&["x", "y"]), PolyIdeal::unit(Q)),
    ] {
        let s = lift(ideallab::ideal::saturate(&e, &i, &f))?;
        let (a, b) = (lift(e.canonical(&s))?, lift(e.canonical(&want))?);
        ensure(a.generators() == b.generators(), || format!("saturate({i}, x+y) = {a}"))?;
    }
    Ok("(x), (y), (1)".into())
}

pub fn decomposition_soundness() -> Check {
    let list = ideals(200);
    for (k, (gens, i)) in list.iter().enumerate() {
        let r = lift(primary_decompose_monomial(i))?;
        let comps: Vec<Vec<Monomial>> = r.components.iter().map(|c| c.component.gens().to_vec()).collect();
        let cap = intersect_all_gens(&comps);
        let cap_v: Vec<Monomial> = cap.iter().cloned().collect();
        ensure(
            cap.iter().all(|g| in_ideal(gens, g)) && gens.iter().all(|g| in_ideal(&cap_v, g)),
            || format!("#{k} {i}: intersection {}", gens_str(&cap)),
        )?;
        let mut primes = BTreeSet::new();
        for c in &r.components {
            ensure(c.component.is_primary().as_ref() == Some(&c.prime), || {
                format!("#{k}: {} not primary", c.component)
            })?;
            // pure power of every variable of the prime, nothing else
            let pv = c.prime.vars();
            let ok = c
                .component
                .gens()
                .iter()
                .all(|g| exps(g).keys().all(|v| pv.contains(v)))
                && pv
                    .iter()
                    .all(|v| c.component.gens().iter().any(|g| exps(g).keys().eq([v])));
            ensure(ok, || format!("#{k}: {} is not primary by shape", c.component))?;
            primes.insert(c.prime.clone());
        }
        ensure(primes.len() == r.components.len(), || {
            format!("#{k}: repeated prime in {}", r.render())
        })?;
        for (ci, cert) in r.certificates.iter().enumerate() {
            let w = cert
                .irredundancy_witness
                .as_ref()
                .ok_or_else(|| format!("#{k}: no witness"))?;
            ensure(!in_ideal(&comps[ci], w), || {
                format!("#{k}: witness {w} inside its component")
            })?;
            for (cj, o) in comps.iter().enumerate() {
                ensure(cj == ci || in_ideal(o, w), || {
                    format!("#{k}: witness {w} outside another component")
                })?;
            }
        }
        ensure(r.verify(), || format!("#{k}: certificates do not re-check"))?;
    }
    Ok(format!("{} ideals, 0 failures", list.len()))
}

pub fn uniqueness_at_minimal_primes() -> Check {
    let list = ideals(60);
    let mut checked = 0;
    for (k, (_, i)) in list.iter().enumerate() {
        let base = lift(primary_decompose_monomial(i))?;
        let at_minimal = |r: &ideallab::ideal::DecompositionReport| -> BTreeSet<(MonomialIdeal, MonomialIdeal)> {
            let primes = r.primes();
            r.components
                .iter()
                .filter(|c| !primes.iter().any(|q| q != &c.prime && c.prime.contains_ideal(q)))
                .map(|c| (c.prime.clone(), c.component.clone()))
                .collect()
        };
        let want = at_minimal(&base);
        for s in 0..5u64 {
            let r = lift(primary_decompose_with(
                i,
                SplitStrategy::Seeded(SEED ^ (k as u64 * 31 + s)),
            ))?;
            let got = at_minimal(&r);
            ensure(got == want, || {
                format!("#{k} {i}, seed {s}: {} vs {}", r.render(), base.render())
            })?;
            ensure(var_sets(r.primes()) == var_sets(base.primes()), || {
                format!("#{k}: prime sets differ across orders")
            })?;
        }
        checked += 1;
    }
    Ok(format!("{checked} ideals x 5 orders, 0 mismatches"))
}

pub fn scomp_consistency() -> Check {
    let e = engine();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let list = ideals(120);
    let vs = vars(&INSTANCE_VARS);
    let mut pairs = 0;
    for (k, (_, i)) in list.iter().enumerate() {
        let iv: Vec<Var> = i.vars().into_iter().collect();
        let (spec, keeps): (MultSetSpec, Keeps) = if rng.gen_bool(0.5) {
            let v = vs[rng.gen_range(0..vs.len())];
            (
                MultSetSpec::PowersOf(ideallab::Polynomial::var(Q, v)),
                Box::new(move |p| !p.contains(&v)),
            )
        } else {
            let q: BTreeSet<Var> = iv.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            let q2 = q.clone();
            (MultSetSpec::complement_of(q), Box::new(move |p| p.is_subset(&q2)))
        };
        let r = lift(primary_decompose_monomial(i))?;
        let kept: Vec<Vec<Monomial>> = r
            .components
            .iter()
            .filter(|c| keeps(&c.prime.vars()))
            .map(|c| c.component.gens().to_vec())
            .collect();
        let want = intersect_all_gens(&kept);
        let got = lift(s_component(&e, &i.to_poly_ideal(Q), &spec))?;
        let got = MonomialIdeal::from_poly_ideal(&got).ok_or_else(|| format!("#{k}: {got} not monomial"))?;
        ensure(gens_of(&got) == want, || {
            format!("#{k} {i} with {spec:?}: {got} vs filtered {}", gens_str(&want))
        })?;
        pairs += 1;
    }
    Ok(format!("{pairs} (ideal, S) pairs, 0 failures"))
}

/// Largest exponent of each variable over all summands.
fn coset_degree(parts: &[Vec<Monomial>]) -> u32 {
    let vs = vars(&["x", "y", "z"]);
    vs.iter()
        .map(|v| parts.iter().flatten().map(|g| g.exponent(*v)).max().unwrap_or(0))
        .sum()
}

pub fn noetherian_collapse() -> Check {
    let e = engine();
    let vs = vars(&["x", "y", "z"]);
    let probes = monos(&vs, 4);
    let list = sums(100);
    for (k, parts) in list.iter().enumerate() {
        let mm = module_of(parts);
        let (a, a1, a0) = (lift(mm.ass(&e))?, lift(mm.ass1(&e))?, lift(mm.ass0(&e))?);
        let (s, s1, s0) = (var_sets_of(&a), var_sets_of(&a1), var_sets_of(&a0));
        let dc = coset_degree(parts);
        let oracle: BTreeSet<BTreeSet<Var>> = parts.iter().flat_map(|g| ass_scan(g, &vs, dc, 4)).collect();
        let oracle1: BTreeSet<BTreeSet<Var>> = parts.iter().flat_map(|g| ass1_scan(g, &vs, dc, 4)).collect();
        ensure(s == s1 && s1 == s0, || {
            format!("#{k}: ass {} ass1 {} ass0 {}", set_str(&s), set_str(&s1), set_str(&s0))
        })?;
        ensure(s == oracle && oracle == oracle1, || {
            format!(
                "#{k}: ass {} vs scan {} / {}",
                set_str(&s),
                set_str(&oracle),
                set_str(&oracle1)
            )
        })?;
        ensure(a.complete && a1.complete && a0.complete, || format!("#{k}: incomplete"))?;
        // zero divisors are exactly the union of the associated primes
        for t in &probes {
            let in_union = s.iter().any(|q| exps(t).keys().any(|v| q.contains(v)));
            let r = ideallab::Polynomial::monomial(Q, t.clone());
            let zd = lift(mm.is_zero_divisor(&e, &r))?;
            ensure(zd.is_some() == in_union, || {
                format!("#{k}: {t} zero divisor {} vs union {in_union}", zd.is_some())
            })?;
            if let Some(w) = zd {
                for (c, g) in w
                    .components
                    .iter()
                    .zip(parts.iter().filter(|g| !g.iter().any(|m| m.is_one())))
                {
                    ensure(poly_in_ideal(g, &(&r * c)), || format!("#{k}: {t}·{w} ≠ 0"))?;
                }
                ensure(!w.is_zero(), || format!("#{k}: zero witness"))?;
            }
        }
    }
    Ok(format!(
        "{} sums, ass = ass1 = ass0 = coset scan, zero divisors checked on {} monomials each",
        list.len(),
        probes.len()
    ))
}

pub fn supp_ass_radical() -> Check {
    let e = engine();
    let vs = vars(&["x", "y", "z"]);
    let list = sums(100);
    for (k, parts) in list.iter().enumerate() {
        let mm = module_of(parts);
        let ass = var_sets_of(&lift(mm.ass(&e))?);
        for q in subsets(&vs) {
            let qi = MonomialIdeal::prime(q.iter().copied()).to_poly_ideal(Q);
            let got = lift(mm.supp_contains(&e, &qi))?;
            let want = ass.iter().any(|a| a.is_subset(&q));
            ensure(got == want, || format!("#{k}: supp at {q:?}: {got} vs {want}"))?;
        }
        let rad = lift(mm.module_radical(&e, &Submodule::zero(&mm)))?;
        let rad = gens_of(&MonomialIdeal::from_poly_ideal(&rad).ok_or("radical not monomial")?);
        let prime_gens = |p: &BTreeSet<Var>| p.iter().map(|v| Monomial::var(*v)).collect::<Vec<_>>();
        let cap_all = intersect_all_gens(&ass.iter().map(prime_gens).collect::<Vec<_>>());
        let minimal: Vec<Vec<Monomial>> = ass
            .iter()
            .filter(|p| !ass.iter().any(|q| q != *p && q.is_subset(p)))
            .map(prime_gens)
            .collect();
        let cap_min = intersect_all_gens(&minimal);
        ensure(rad == cap_all && cap_all == cap_min, || {
            format!(
                "#{k}: radical {} vs {} vs {}",
                gens_str(&rad),
                gens_str(&cap_all),
                gens_str(&cap_min)
            )
        })?;
    }
    Ok(format!("{} sums, 8 primes each, radicals agree", list.len()))
}

pub fn separations() -> Check {
    let e = engine();
    let o = ParamOverrides {
        n: Some(4),
        samples: Some(100),
        ..Default::default()
    };
    let r = lift(run_example(&e, "ass-vs-ass1-directsum", &o))?;
    for name in ["pi-in-ass0", "annihilators-below-p", "p-not-in-ass1"] {
        let c = r.claims.iter().find(|c| c.name == name).ok_or(name)?;
        ensure(c.passed(), || format!("{name}: {}", c.witness))?;
    }
    let q = ValueGroup::Q;
    let mm = ValModule::Quotient(lift(CutIdeal::closed(q, Value::Rat(1.into())))?);
    let big = CutIdeal::maximal(q);
    let (a0, a1) = (lift(mm.ass0())?, lift(mm.ass1())?);
    ensure(a0.is_empty() && a1 == vec![big.clone()], || {
        format!("ass0 {a0:?}, ass1 {a1:?}")
    })?;
    ensure(!lift(mm.ass0_witness_exists(&big))?, || {
        "annihilator witness for P".into()
    })?;
    Ok("ass > ass1 at n = 4 (100 samples); ass1 = {P} > ass0 = {} over Q".into())
}

fn union(a: &BTreeSet<BTreeSet<Var>>, b: &BTreeSet<BTreeSet<Var>>) -> BTreeSet<BTreeSet<Var>> {
    a.union(b).cloned().collect()
}

fn sequence_laws(e: &Engine, n: &CyclicSum, mid: &CyclicSum, l: &CyclicSum) -> Result<(), String> {
    type Getter = fn(&CyclicSum, &Engine) -> ideallab::Result<PrimeSet>;
    let getters: [(&str, Getter); 2] = [("ass1", CyclicSum::ass1), ("ass0", CyclicSum::ass0)];
    for (name, get) in getters {
        let (sn, sm, sl) = (
            var_sets_of(&lift(get(n, e))?),
            var_sets_of(&lift(get(mid, e))?),
            var_sets_of(&lift(get(l, e))?),
        );
        ensure(sn.is_subset(&sm) && sm.is_subset(&union(&sn, &sl)), || {
            format!("{name}: N {} M {} L {}", set_str(&sn), set_str(&sm), set_str(&sl))
        })?;
    }
    Ok(())
}

pub fn exact_sequences() -> Check {
    let e = engine();
    let vs = vars(&["x", "y", "z"]);
    let list = sums(120);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut split = 0;
    let mut cyclic = 0;
    for (k, pair) in list.windows(2).enumerate().take(60) {
        let (n, l) = (module_of(&pair[0]), module_of(&pair[1]));
        let mid = lift(n.direct_sum(&l))?;
        sequence_laws(&e, &n, &mid, &l).map_err(|m| format!("pair #{k}: {m}"))?;
        split += 1;

        // 0 → R/(I : c) → R/I → R/(I + (c)) → 0 for a coset c ∉ I
        let gens = &pair[0][0];
        let outside: Vec<Monomial> = monos(&vs, 3).into_iter().filter(|t| !in_ideal(gens, t)).collect();
        if outside.is_empty() {
            continue;
        }
        let c = outside[rng.gen_range(0..outside.len())].clone();
        let i = MonomialIdeal::new(gens.clone());
        let sub = CyclicSum::from_monomial(Q, vec![MonomialIdeal::new(quotient_scan(gens, &c, &vs, 5))]);
        let whole = CyclicSum::from_monomial(Q, vec![i.clone()]);
        let mut with_c = gens.clone();
        with_c.push(c.clone());
        let top = CyclicSum::from_monomial(Q, vec![MonomialIdeal::new(with_c)]);
        sequence_laws(&e, &sub, &whole, &top).map_err(|m| format!("#{k} R/{i} at {c}: {m}"))?;
        cyclic += 1;
    }
    let r = lift(run_example(&e, "ass-not-exact", &ParamOverrides::default()))?;
    ensure(r.passed, || format!("ass-not-exact: {}", r.to_json()))?;
    ensure(split >= 50, || format!("only {split} pairs"))?;
    Ok(format!(
        "{split} direct sums, {cyclic} cyclic sequences; Ass fails exactness in ass-not-exact"
    ))
}

pub fn oracle_parity() -> Check {
    let checks = parity::all();
    let mut failed = vec![];
    for (name, f) in &checks {
        if let Err(m) = f() {
            failed.push(format!("{name}: {m}"));
        }
    }
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} examples match their oracles", checks.len()))
}

//! Declared names, the active configuration, and statement execution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use ideallab::gallery::{self, ExampleReport, ParamOverrides};
use ideallab::ideal::{
    self, normalize_decomposition, primary_decompose_monomial, DecompositionReport, MonomialIdeal, MultSetSpec,
    PrimaryComponent,
};
use ideallab::module::{CyclicSum, FgModule, IntModule, Prime, PrimeSet, Submodule};
use ideallab::poly::parse_polynomial_in;
use ideallab::valuation::{CutIdeal, ValModule, ValueGroup};
use ideallab::{Domain, Engine, PolyIdeal, Polynomial, Var};
use serde_json::{json, Value as Json};

use crate::config::{parse_order, parse_toggle, Config, Format};
use crate::script::{AssKind, GalleryTarget, IdealExpr, MultSet, Stmt, Summand};

/// A failed statement, classified by exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExecError {
    /// Bad syntax, unknown names, type or arity mismatches.
    Parse(String),
    Compute(String),
    Budget(String),
}

impl ExecError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ExecError::Parse(_) => 2,
            ExecError::Compute(_) => 3,
            ExecError::Budget(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ExecError::Parse(_) => "parse",
            ExecError::Compute(_) => "computation",
            ExecError::Budget(_) => "budget",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            ExecError::Parse(m) | ExecError::Compute(m) | ExecError::Budget(m) => m,
        }
    }
}

impl fmt::Display for ExecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} error: {}", self.kind(), self.message())
    }
}

impl From<ideallab::Error> for ExecError {
    fn from(e: ideallab::Error) -> Self {
        use ideallab::Error as E;
        match e {
            E::Syntax { .. } | E::UnknownVariable(_) | E::DomainMismatch(..) | E::GroupMismatch(..) => {
                ExecError::Parse(e.to_string())
            }
            E::BudgetExceeded { .. } => ExecError::Budget(e.to_string()),
            _ => ExecError::Compute(e.to_string()),
        }
    }
}

type Exec<T> = Result<T, ExecError>;

fn parse_err<T>(msg: impl Into<String>) -> Exec<T> {
    Err(ExecError::Parse(msg.into()))
}

/// What one statement produced: the canonical text plus optional
/// structured detail for JSON output.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub detail: Option<Json>,
}

impl Output {
    fn text(t: impl Into<String>) -> Self {
        Output {
            text: t.into(),
            detail: None,
        }
    }

    fn with(t: impl Into<String>, detail: Json) -> Self {
        Output {
            text: t.into(),
            detail: Some(detail),
        }
    }
}

#[derive(Clone, Debug)]
struct Ring {
    domain: Domain,
    vars: BTreeSet<Var>,
}

#[derive(Clone, Debug)]
enum Declared {
    Ring(Ring),
    ValRing(ValueGroup),
    PolyIdeal {
        ring: String,
        ideal: PolyIdeal,
    },
    CutIdeal {
        valring: String,
        cut: CutIdeal,
    },
    /// `ring` is empty for modules over `ℤ`.
    Module {
        ring: String,
        module: FgModule,
    },
}

impl Declared {
    fn kind(&self) -> &'static str {
        match self {
            Declared::Ring(_) => "ring",
            Declared::ValRing(_) => "valuation ring",
            Declared::PolyIdeal { .. } | Declared::CutIdeal { .. } => "ideal",
            Declared::Module { .. } => "module",
        }
    }
}

pub struct Session {
    config: Config,
    engine: Engine,
    names: BTreeMap<String, Declared>,
    ring: Option<String>,
    valring: Option<String>,
}

fn set_str<'a, I: IntoIterator<Item = &'a MonomialIdeal>>(items: I) -> String {
    let parts: Vec<String> = items.into_iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn certificate_lines(r: &DecompositionReport) -> String {
    let mut out = vec![r.render()];
    for (c, cert) in r.components.iter().zip(&r.certificates) {
        let powers: Vec<String> = cert.primary.pure_powers.iter().map(|m| m.to_string()).collect();
        let witness = cert
            .irredundancy_witness
            .as_ref()
            .map_or_else(|| "none".to_string(), |w| w.to_string());
        out.push(format!(
            "  {}: primary to {}; pure powers {}; irredundancy witness {}",
            c.component,
            c.prime,
            powers.join(", "),
            witness
        ));
    }
    out.push(format!(
        "  intersection certified: {}; normalized: {}; rechecked: {}",
        r.intersection_certified,
        r.normalized,
        r.verify()
    ));
    out.join("\n")
}

impl Session {
    pub fn new(config: Config) -> Self {
        let engine = config.engine();
        Session {
            config,
            engine,
            names: BTreeMap::new(),
            ring: None,
            valring: None,
        }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn config_json(&self) -> Json {
        serde_json::to_value(&self.config).expect("config serializes")
    }

    fn declare(&mut self, name: &str, d: Declared) -> Exec<()> {
        if let Some(old) = self.names.get(name) {
            return parse_err(format!("`{name}` is already declared as a {}", old.kind()));
        }
        self.names.insert(name.to_string(), d);
        Ok(())
    }

    fn lookup(&self, name: &str) -> Exec<&Declared> {
        self.names
            .get(name)
            .ok_or_else(|| ExecError::Parse(format!("unknown name `{name}`")))
    }

    fn ring(&self, name: &str) -> Exec<&Ring> {
        match self.lookup(name)? {
            Declared::Ring(r) => Ok(r),
            d => parse_err(format!("`{name}` is a {}, not a polynomial ring", d.kind())),
        }
    }

    fn group(&self, name: &str) -> Exec<ValueGroup> {
        match self.lookup(name)? {
            Declared::ValRing(g) => Ok(*g),
            d => parse_err(format!("`{name}` is a {}, not a valuation ring", d.kind())),
        }
    }

    fn current_ring(&self) -> Exec<String> {
        self.ring
            .clone()
            .ok_or_else(|| ExecError::Parse("no ring declared; start with `ring R = Q[x, y];`".into()))
    }

    fn current_valring(&self) -> Exec<String> {
        self.valring
            .clone()
            .ok_or_else(|| ExecError::Parse("no valuation ring declared; start with `valring V = Zlex(1);`".into()))
    }

    fn is_cut(&self, e: &IdealExpr) -> bool {
        match e {
            IdealExpr::Cut(_) => true,
            IdealExpr::Name(n) => matches!(self.names.get(n), Some(Declared::CutIdeal { .. })),
            _ => false,
        }
    }

    /// The ring of the first named operand, else the current ring.
    fn context_ring(&self, exprs: &[&IdealExpr]) -> Exec<String> {
        for e in exprs {
            if let IdealExpr::Name(n) = e {
                if let Some(Declared::PolyIdeal { ring, .. }) = self.names.get(n) {
                    return Ok(ring.clone());
                }
            }
        }
        self.current_ring()
    }

    fn context_valring(&self, exprs: &[&IdealExpr]) -> Exec<String> {
        for e in exprs {
            if let IdealExpr::Name(n) = e {
                if let Some(Declared::CutIdeal { valring, .. }) = self.names.get(n) {
                    return Ok(valring.clone());
                }
            }
        }
        self.current_valring()
    }

    fn poly(&self, ring: &str, text: &str) -> Exec<Polynomial> {
        let r = self.ring(ring)?;
        Ok(parse_polynomial_in(text, r.domain, Some(&r.vars))?)
    }

    fn poly_ideal(&self, ring: &str, e: &IdealExpr) -> Exec<PolyIdeal> {
        let domain = self.ring(ring)?.domain;
        match e {
            IdealExpr::Name(n) => match self.lookup(n)? {
                Declared::PolyIdeal { ring: r, ideal } if r == ring => Ok(ideal.clone()),
                Declared::PolyIdeal { ring: r, .. } => parse_err(format!("`{n}` lives in ring {r}, not {ring}")),
                d => parse_err(format!("`{n}` is a {}, expected an ideal of {ring}", d.kind())),
            },
            IdealExpr::Literal(gens) => {
                let gens = gens.iter().map(|g| self.poly(ring, g)).collect::<Exec<Vec<_>>>()?;
                Ok(PolyIdeal::new(domain, gens)?)
            }
            IdealExpr::Poly(p) => Ok(PolyIdeal::principal(self.poly(ring, p)?)),
            IdealExpr::Cut(c) => parse_err(format!("`{c}` is a cut ideal, expected an ideal of {ring}")),
        }
    }

    fn cut_ideal(&self, valring: &str, e: &IdealExpr) -> Exec<CutIdeal> {
        let g = self.group(valring)?;
        match e {
            IdealExpr::Name(n) => match self.lookup(n)? {
                Declared::CutIdeal { valring: v, cut } if v == valring => Ok(cut.clone()),
                Declared::CutIdeal { valring: v, .. } => parse_err(format!("`{n}` lives in {v}, not {valring}")),
                d => parse_err(format!("`{n}` is a {}, expected a cut ideal", d.kind())),
            },
            IdealExpr::Cut(c) => Ok(CutIdeal::parse(g, c)?),
            IdealExpr::Literal(gens) if gens.len() == 1 && (gens[0] == "0" || gens[0] == "1") => {
                Ok(CutIdeal::parse(g, &format!("({})", gens[0]))?)
            }
            _ => parse_err("expected a cut literal such as `cut>=((1,0))` or `cut>(0)`"),
        }
    }

    fn canonical(&self, i: &PolyIdeal) -> Exec<PolyIdeal> {
        Ok(self.engine.canonical(i)?)
    }

    fn monomial(&self, i: &PolyIdeal, what: &str) -> Exec<MonomialIdeal> {
        let c = self.canonical(i)?;
        MonomialIdeal::from_poly_ideal(&c).ok_or_else(|| {
            ExecError::Compute(format!(
                "{what} is implemented for monomial ideals; {c} is not monomial"
            ))
        })
    }

    fn ideal_out(&self, i: &PolyIdeal) -> Exec<Output> {
        let c = self.canonical(i)?;
        Ok(Output::with(c.to_string(), json!(c.to_string())))
    }

    fn cut_out(c: &CutIdeal) -> Output {
        Output::with(c.to_string(), json!(c.to_string()))
    }

    fn module(&self, name: &str) -> Exec<(&str, &FgModule)> {
        match self.lookup(name)? {
            Declared::Module { ring, module } => Ok((ring.as_str(), module)),
            d => parse_err(format!("`{name}` is a {}, not a module", d.kind())),
        }
    }

    fn prime_set_out(s: &PrimeSet) -> Output {
        Output::with(s.to_string(), serde_json::to_value(s).expect("prime sets serialize"))
    }

    pub fn execute(&mut self, stmt: &Stmt) -> Exec<Output> {
        match stmt {
            Stmt::Ring { name, domain, vars } => {
                let domain = match domain.as_str() {
                    "Q" => Domain::Q,
                    d => {
                        let p = d
                            .strip_prefix("Fp(")
                            .and_then(|r| r.strip_suffix(')'))
                            .and_then(|p| p.trim().parse::<u32>().ok())
                            .ok_or_else(|| ExecError::Parse(format!("unknown coefficient domain `{d}`")))?;
                        Domain::fp(p).map_err(|e| ExecError::Parse(e.to_string()))?
                    }
                };
                let mut vs = BTreeSet::new();
                for v in vars {
                    let var = parse_polynomial_in(v, Domain::Q, None)?
                        .as_monomial()
                        .and_then(|m| match m.exponents() {
                            [(x, 1)] => Some(*x),
                            _ => None,
                        })
                        .ok_or_else(|| ExecError::Parse(format!("`{v}` is not a variable name")))?;
                    if !vs.insert(var) {
                        return parse_err(format!("variable `{v}` listed twice"));
                    }
                }
                let text = format!(
                    "ring {name} = {domain}[{}]",
                    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                );
                self.declare(name, Declared::Ring(Ring { domain, vars: vs }))?;
                self.ring = Some(name.clone());
                Ok(Output::text(text))
            }
            Stmt::ValRing { name, group } => {
                let g = match group.as_str() {
                    "Q" => ValueGroup::Q,
                    t => {
                        let k = t
                            .strip_prefix("Zlex(")
                            .and_then(|r| r.strip_suffix(')'))
                            .and_then(|k| k.trim().parse::<usize>().ok())
                            .ok_or_else(|| ExecError::Parse(format!("unknown value group `{t}`")))?;
                        ValueGroup::zlex(k).map_err(|e| ExecError::Parse(e.to_string()))?
                    }
                };
                self.declare(name, Declared::ValRing(g))?;
                self.valring = Some(name.clone());
                Ok(Output::text(format!("valring {name} = {g}")))
            }
            Stmt::Ideal { name, expr } => {
                if self.is_cut(expr) {
                    let v = self.context_valring(&[expr])?;
                    let cut = self.cut_ideal(&v, expr)?;
                    let out = Self::cut_out(&cut);
                    self.declare(name, Declared::CutIdeal { valring: v, cut })?;
                    return Ok(Output::text(format!("ideal {name} = {}", out.text)));
                }
                let ring = self.context_ring(&[expr])?;
                let ideal = self.poly_ideal(&ring, expr)?;
                let text = format!("ideal {name} = {ideal}");
                self.declare(name, Declared::PolyIdeal { ring, ideal })?;
                Ok(Output::text(text))
            }
            Stmt::Module { name, summands } => {
                let (ring, module) = self.build_module(summands)?;
                let text = match &module {
                    FgModule::Poly(m) => m.to_string(),
                    FgModule::Val(m) => m.to_string(),
                    FgModule::Int(m) => m.to_string(),
                };
                self.declare(name, Declared::Module { ring, module })?;
                Ok(Output::text(format!("module {name} = {text}")))
            }
            Stmt::Decompose(e) => {
                let ring = self.context_ring(&[e])?;
                let i = self.monomial(&self.poly_ideal(&ring, e)?, "decompose")?;
                let r = primary_decompose_monomial(&i)?;
                Ok(Output::with(
                    certificate_lines(&r),
                    serde_json::to_value(&r).expect("reports serialize"),
                ))
            }
            Stmt::Normalize { parts, ambient } => {
                let mut all: Vec<&IdealExpr> = parts.iter().collect();
                all.extend(ambient.iter());
                let ring = self.context_ring(&all)?;
                let comps = parts
                    .iter()
                    .map(|p| {
                        let m = self.monomial(&self.poly_ideal(&ring, p)?, "normalize")?;
                        Ok(PrimaryComponent::new(m)?)
                    })
                    .collect::<Exec<Vec<_>>>()?;
                let amb = match ambient {
                    Some(a) => self.monomial(&self.poly_ideal(&ring, a)?, "normalize")?,
                    None => MonomialIdeal::intersect_all(comps.iter().map(|c| &c.component)),
                };
                let r = normalize_decomposition(comps, &amb)?;
                Ok(Output::with(
                    certificate_lines(&r),
                    serde_json::to_value(&r).expect("reports serialize"),
                ))
            }
            Stmt::Radical(e) => {
                if self.is_cut(e) {
                    let v = self.context_valring(&[e])?;
                    return Ok(Self::cut_out(&self.cut_ideal(&v, e)?.radical()));
                }
                let ring = self.context_ring(&[e])?;
                let domain = self.ring(&ring)?.domain;
                let r = self.monomial(&self.poly_ideal(&ring, e)?, "radical")?.radical();
                self.ideal_out(&r.to_poly_ideal(domain))
            }
            Stmt::MinPrimes(e) => {
                let ring = self.context_ring(&[e])?;
                let ps = self
                    .monomial(&self.poly_ideal(&ring, e)?, "minprimes")?
                    .minimal_primes();
                let strs: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                Ok(Output::with(set_str(&ps), json!(strs)))
            }
            Stmt::Quotient(a, b) | Stmt::Saturate(a, b) if self.is_cut(a) || self.is_cut(b) => {
                let v = self.context_valring(&[a, b])?;
                let (x, y) = (self.cut_ideal(&v, a)?, self.cut_ideal(&v, b)?);
                match stmt {
                    Stmt::Quotient(..) => Ok(Self::cut_out(&x.quotient(&y)?)),
                    _ => parse_err("saturate is defined for polynomial ideals"),
                }
            }
            Stmt::Quotient(a, b) => {
                let ring = self.context_ring(&[a, b])?;
                let (x, y) = (self.poly_ideal(&ring, a)?, self.poly_ideal(&ring, b)?);
                self.ideal_out(&ideal::ideal_quotient(&self.engine, &x, &y)?)
            }
            Stmt::Saturate(a, b) => {
                let ring = self.context_ring(&[a, b])?;
                let (x, y) = (self.poly_ideal(&ring, a)?, self.poly_ideal(&ring, b)?);
                // (I : J^∞) is the intersection of the saturations by the generators of J
                let sats = y
                    .generators()
                    .iter()
                    .map(|f| ideal::saturate(&self.engine, &x, f))
                    .collect::<Result<Vec<_>, _>>()?;
                if sats.is_empty() {
                    return self.ideal_out(&PolyIdeal::unit(x.domain()));
                }
                self.ideal_out(&ideal::intersect_all(&self.engine, &sats)?)
            }
            Stmt::Intersect(parts) => {
                let all: Vec<&IdealExpr> = parts.iter().collect();
                if parts.iter().any(|p| self.is_cut(p)) {
                    let v = self.context_valring(&all)?;
                    let mut acc = self.cut_ideal(&v, &parts[0])?;
                    for p in &parts[1..] {
                        acc = acc.intersect(&self.cut_ideal(&v, p)?)?;
                    }
                    return Ok(Self::cut_out(&acc));
                }
                let ring = self.context_ring(&all)?;
                let ideals = parts
                    .iter()
                    .map(|p| self.poly_ideal(&ring, p))
                    .collect::<Exec<Vec<_>>>()?;
                self.ideal_out(&ideal::intersect_all(&self.engine, &ideals)?)
            }
            Stmt::SComp { ideal: e, set, extend } => {
                let ring = self.context_ring(&[e])?;
                let i = self.poly_ideal(&ring, e)?;
                let polys = |xs: &[String]| xs.iter().map(|x| self.poly(&ring, x)).collect::<Exec<Vec<_>>>();
                let mut spec = match set {
                    MultSet::Powers(f) => MultSetSpec::PowersOf(self.poly(&ring, f)?),
                    MultSet::Monoid(fs) => MultSetSpec::FinitelyGenerated(polys(fs)?),
                    MultSet::Complement(vs) => {
                        let vars = polys(vs)?
                            .iter()
                            .map(|p| {
                                p.as_monomial()
                                    .and_then(|m| match m.exponents() {
                                        [(x, 1)] => Some(*x),
                                        _ => None,
                                    })
                                    .ok_or_else(|| ExecError::Parse(format!("complement() takes variables, found {p}")))
                            })
                            .collect::<Exec<BTreeSet<Var>>>()?;
                        MultSetSpec::complement_of(vars)
                    }
                };
                if let Some(a) = extend {
                    spec = spec.extend(self.poly(&ring, a)?);
                }
                self.ideal_out(&ideal::s_component(&self.engine, &i, &spec)?)
            }
            Stmt::Ass { kind, module } => {
                let (_, m) = self.module(module)?;
                let s = match kind {
                    AssKind::Ass => m.ass(&self.engine)?,
                    AssKind::Ass0 => m.ass0(&self.engine)?,
                    AssKind::Ass1 => m.ass1(&self.engine)?,
                };
                Ok(Self::prime_set_out(&s))
            }
            Stmt::Supp { module, prime } => {
                let (ring, m) = self.module(module)?;
                let p = match m {
                    FgModule::Poly(_) => {
                        let i = self.poly_ideal(ring, prime)?;
                        match MonomialIdeal::from_poly_ideal(&self.canonical(&i)?) {
                            Some(mi) if mi.is_prime() => Prime::Monomial(mi),
                            Some(mi) => return Err(ExecError::Compute(format!("{mi} is not prime"))),
                            None => Prime::Poly(i),
                        }
                    }
                    FgModule::Val(v) => {
                        let c = match prime {
                            IdealExpr::Name(_) => self.cut_ideal(&self.context_valring(&[prime])?, prime)?,
                            _ => CutIdeal::parse(v.group(), &expr_text(prime))?,
                        };
                        Prime::Cut(c)
                    }
                    FgModule::Int(_) => {
                        let n = match prime {
                            IdealExpr::Literal(g) if g.len() == 1 => g[0].trim().parse::<u64>().ok(),
                            IdealExpr::Poly(g) => g.trim().parse::<u64>().ok(),
                            _ => None,
                        }
                        .ok_or_else(|| ExecError::Parse("expected an integer prime such as `(3)`".into()))?;
                        if n != 0 && !ideallab::module::is_prime(n) {
                            return Err(ExecError::Compute(format!("({n}) is not prime")));
                        }
                        Prime::Integer(n)
                    }
                };
                let b = m.supp_contains(&self.engine, &p)?;
                Ok(Output::with(
                    b.to_string(),
                    json!({ "prime": p.to_string(), "in_support": b }),
                ))
            }
            Stmt::ModRadical(name) => {
                let (_, m) = self.module(name)?;
                match m {
                    FgModule::Poly(c) => self.ideal_out(&c.module_radical(&self.engine, &Submodule::zero(c))?),
                    FgModule::Int(i) => {
                        let r = format!("({})", i.radical());
                        Ok(Output::with(r.clone(), json!(r)))
                    }
                    FgModule::Val(_) => Err(ExecError::Compute(
                        "modradical is implemented for polynomial and integer modules".into(),
                    )),
                }
            }
            Stmt::Colon { module, element } => {
                let (ring, m) = self.module(module)?;
                match (m, element) {
                    (FgModule::Poly(c), None) => self.ideal_out(&c.annihilator_module(&self.engine)?),
                    (FgModule::Poly(c), Some(parts)) => {
                        if parts.len() != c.len() {
                            return parse_err(format!("element needs {} components, got {}", c.len(), parts.len()));
                        }
                        let comps = parts.iter().map(|p| self.poly(ring, p)).collect::<Exec<Vec<_>>>()?;
                        let x = c.element(&self.engine, comps)?;
                        self.ideal_out(&c.annihilator(&self.engine, &x)?)
                    }
                    (FgModule::Val(v), None) => Ok(Self::cut_out(&v.annihilator())),
                    (FgModule::Int(i), None) => {
                        let r = format!("({})", i.annihilator());
                        Ok(Output::with(r.clone(), json!(r)))
                    }
                    _ => parse_err("`colon M by (...)` needs a module over a polynomial ring"),
                }
            }
            Stmt::GalleryList => {
                let lines: Vec<String> = gallery::list_examples()
                    .iter()
                    .map(|s| format!("{:<22} {}", s.id, s.title))
                    .collect();
                let ids: Vec<&str> = gallery::list_examples().iter().map(|s| s.id).collect();
                Ok(Output::with(lines.join("\n"), json!(ids)))
            }
            Stmt::GalleryRun { target, overrides } => {
                let mut o = ParamOverrides {
                    seed: Some(self.config.seed),
                    ..Default::default()
                };
                for (k, v) in overrides {
                    match k.as_str() {
                        "n" => o.n = Some(*v as usize),
                        "samples" => o.samples = Some(*v as usize),
                        "seed" => o.seed = Some(*v),
                        "degree" => o.degree = Some(*v as u32),
                        "bound" => o.bound = Some(*v as u32),
                        _ => return parse_err(format!("unknown parameter `{k}`")),
                    }
                }
                let reports = match target {
                    GalleryTarget::One(id) => vec![gallery::run_example(&self.engine, id, &o)?],
                    GalleryTarget::All => gallery::run_all(&self.engine, &o)
                        .into_iter()
                        .collect::<Result<Vec<_>, _>>()?,
                };
                let text: Vec<String> = reports.iter().map(report_text).collect();
                let js: Vec<Json> = reports.iter().map(ExampleReport::to_json).collect();
                let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.id.as_str()).collect();
                let detail = if js.len() == 1 {
                    js.into_iter().next().unwrap()
                } else {
                    json!(js)
                };
                if !failed.is_empty() {
                    return Err(ExecError::Compute(format!(
                        "{}\nscenario(s) failed: {}",
                        text.join("\n"),
                        failed.join(", ")
                    )));
                }
                Ok(Output::with(text.join("\n"), detail))
            }
            Stmt::Config(None) => {
                let c = &self.config;
                Ok(Output::with(
                    format!(
                        "config order = {}, budget = {}, seed = {}, format = {}, cache = {}",
                        c.order,
                        c.pair_budget,
                        c.seed,
                        c.format,
                        if c.cache { "on" } else { "off" }
                    ),
                    self.config_json(),
                ))
            }
            Stmt::Config(Some((key, value))) => {
                let bad = |e: String| ExecError::Parse(e);
                let mut c = self.config.clone();
                match key.as_str() {
                    "order" => {
                        parse_order(value).map_err(bad)?;
                        c.order = value.clone();
                    }
                    "budget" => {
                        c.pair_budget = value.parse().map_err(|_| bad(format!("`{value}` is not a budget")))?;
                    }
                    "seed" => c.seed = value.parse().map_err(|_| bad(format!("`{value}` is not a seed")))?,
                    "format" => c.format = value.parse::<Format>().map_err(bad)?,
                    "cache" => c.cache = parse_toggle(value).map_err(bad)?,
                    _ => return parse_err(format!("unknown config key `{key}`")),
                }
                c.validate().map_err(bad)?;
                self.engine = c.engine();
                self.config = c;
                Ok(Output::with(format!("config {key} = {value}"), self.config_json()))
            }
        }
    }

    fn build_module(&self, summands: &[Summand]) -> Exec<(String, FgModule)> {
        let single = |what: &str| -> Exec<()> {
            if summands.len() != 1 {
                return parse_err(format!("{what} cannot be combined with other summands"));
            }
            Ok(())
        };
        match &summands[0] {
            Summand::IntCyclic(_) => {
                let ns = summands
                    .iter()
                    .map(|s| match s {
                        Summand::IntCyclic(n) => Ok(*n),
                        _ => parse_err("all summands must be modules over the same ring"),
                    })
                    .collect::<Exec<Vec<_>>>()?;
                Ok((String::new(), FgModule::Int(IntModule::Cyclic(ns))))
            }
            Summand::QmodZ => {
                single("Q/Z")?;
                Ok((String::new(), FgModule::Int(IntModule::QmodZ)))
            }
            Summand::QuotField(v) => {
                single("Quot(V)/V")?;
                Ok((v.clone(), FgModule::Val(ValModule::QuotField(self.group(v)?))))
            }
            Summand::Quotient { ring, .. } if matches!(self.names.get(ring), Some(Declared::ValRing(_))) => {
                single("a quotient of a valuation ring")?;
                let Summand::Quotient { ideal, .. } = &summands[0] else {
                    unreachable!()
                };
                Ok((
                    ring.clone(),
                    FgModule::Val(ValModule::Quotient(self.cut_ideal(ring, ideal)?)),
                ))
            }
            Summand::Quotient { ring, .. } => {
                let domain = self.ring(ring)?.domain;
                let ideals = summands
                    .iter()
                    .map(|s| match s {
                        Summand::Quotient { ring: r, ideal } if r == ring => self.poly_ideal(ring, ideal),
                        _ => parse_err("all summands must be quotients of the same ring"),
                    })
                    .collect::<Exec<Vec<_>>>()?;
                Ok((
                    ring.clone(),
                    FgModule::Poly(CyclicSum::new(&self.engine, domain, ideals)?),
                ))
            }
        }
    }
}

fn expr_text(e: &IdealExpr) -> String {
    match e {
        IdealExpr::Name(s) | IdealExpr::Poly(s) | IdealExpr::Cut(s) => s.clone(),
        IdealExpr::Literal(g) => format!("({})", g.join(", ")),
    }
}

fn report_text(r: &ExampleReport) -> String {
    let mut out = vec![format!(
        "{}: {} (seed {}, {} ms)",
        r.id,
        if r.passed { "pass" } else { "FAIL" },
        r.params.seed,
        r.elapsed_ms
    )];
    for c in &r.claims {
        let level = serde_json::to_value(c.level).expect("levels serialize");
        out.push(format!(
            "  [{}] {} ({})",
            if c.passed() { "pass" } else { "FAIL" },
            c.name,
            level.as_str().unwrap_or_default()
        ));
    }
    for n in &r.notes {
        out.push(format!("  note: {n}"));
    }
    out.join("\n")
}

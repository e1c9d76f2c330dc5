//! Script grammar. Statements end with `;`; `#` starts a comment.
//!
//! ```text
//! ring R = Q[x, y];            ring S = Fp(7)[a, b];
//! valring V = Zlex(2);         valring W = Q;
//! ideal I = (x^2, x*y);        ideal P = cut>(0);
//! module M = R/I (+) R/(y);    module N = Quot(V)/V;   module Z6 = Z/(6) (+) Z/(4);
//! decompose I;   normalize (x), (x^2, y) for I;   radical I;   minprimes I;
//! quotient I by J;   saturate I by x+y;   intersect I, J;
//! scomp I by powers(x+y) | monoid(x, y) | complement(x, y) [extend a];
//! ass M;  ass0 module M;  ass1 M;  supp M at (x, y);  modradical M;
//! colon M [by (f1, ..., fk)];
//! gallery list;  gallery run <id>|all [n=.. samples=.. seed=.. degree=.. bound=..];
//! config [order|budget|seed|format|cache <value>];
//! ```

use std::fmt;

/// Problems found before anything is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

/// An ideal operand, resolved against the session later.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Name(String),
    /// Generators as written; `()` is the zero ideal.
    Literal(Vec<String>),
    /// A single polynomial written without parentheses.
    Poly(String),
    Cut(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Summand {
    /// `R/I` over a declared ring or valuation ring.
    Quotient { ring: String, ideal: IdealExpr },
    /// `Quot(V)/V`
    QuotField(String),
    /// `Z/(n)`; `Z` alone is `n = 0`.
    IntCyclic(u64),
    /// `Q/Z`
    QmodZ,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultSet {
    Powers(String),
    Monoid(Vec<String>),
    Complement(Vec<String>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssKind {
    Ass,
    Ass0,
    Ass1,
}

impl AssKind {
    pub fn name(self) -> &'static str {
        match self {
            AssKind::Ass => "ass",
            AssKind::Ass0 => "ass0",
            AssKind::Ass1 => "ass1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GalleryTarget {
    One(String),
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring {
        name: String,
        domain: String,
        vars: Vec<String>,
    },
    ValRing {
        name: String,
        group: String,
    },
    Ideal {
        name: String,
        expr: IdealExpr,
    },
    Module {
        name: String,
        summands: Vec<Summand>,
    },
    Decompose(IdealExpr),
    Normalize {
        parts: Vec<IdealExpr>,
        ambient: Option<IdealExpr>,
    },
    Radical(IdealExpr),
    MinPrimes(IdealExpr),
    Quotient(IdealExpr, IdealExpr),
    Saturate(IdealExpr, IdealExpr),
    Intersect(Vec<IdealExpr>),
    SComp {
        ideal: IdealExpr,
        set: MultSet,
        extend: Option<String>,
    },
    Ass {
        kind: AssKind,
        module: String,
    },
    Supp {
        module: String,
        prime: IdealExpr,
    },
    ModRadical(String),
    Colon {
        module: String,
        element: Option<Vec<String>>,
    },
    GalleryList,
    GalleryRun {
        target: GalleryTarget,
        overrides: Vec<(String, u64)>,
    },
    Config(Option<(String, String)>),
}

impl Stmt {
    pub fn command(&self) -> &'static str {
        match self {
            Stmt::Ring { .. } => "ring",
            Stmt::ValRing { .. } => "valring",
            Stmt::Ideal { .. } => "ideal",
            Stmt::Module { .. } => "module",
            Stmt::Decompose(_) => "decompose",
            Stmt::Normalize { .. } => "normalize",
            Stmt::Radical(_) => "radical",
            Stmt::MinPrimes(_) => "minprimes",
            Stmt::Quotient(..) => "quotient",
            Stmt::Saturate(..) => "saturate",
            Stmt::Intersect(_) => "intersect",
            Stmt::SComp { .. } => "scomp",
            Stmt::Ass { kind, .. } => kind.name(),
            Stmt::Supp { .. } => "supp",
            Stmt::ModRadical(_) => "modradical",
            Stmt::Colon { .. } => "colon",
            Stmt::GalleryList | Stmt::GalleryRun { .. } => "gallery",
            Stmt::Config(_) => "config",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub line: usize,
    pub text: String,
    pub stmt: Stmt,
}

const USAGE: &[(&str, &str)] = &[
    ("ring", "ring <name> = <Q|Fp(p)>[v1, ..., vn]"),
    ("valring", "valring <name> = <Zlex(k)|Q>"),
    ("ideal", "ideal <name> = (p1, ..., pk) | <cut literal>"),
    ("module", "module <name> = R/I1 (+) ... (+) R/Ik"),
    ("decompose", "decompose <ideal>"),
    ("normalize", "normalize <ideal>, ..., <ideal> [for <ideal>]"),
    ("radical", "radical <ideal>"),
    ("minprimes", "minprimes <ideal>"),
    ("quotient", "quotient <ideal> by <ideal>"),
    ("saturate", "saturate <ideal> by <ideal>"),
    ("intersect", "intersect <ideal>, ..., <ideal>"),
    (
        "scomp",
        "scomp <ideal> by powers(f) | monoid(f, ...) | complement(v, ...) [extend a]",
    ),
    ("ass", "ass [module] <module>"),
    ("ass0", "ass0 [module] <module>"),
    ("ass1", "ass1 [module] <module>"),
    ("supp", "supp [module] <module> at <prime>"),
    ("modradical", "modradical [module] <module>"),
    ("colon", "colon [module] <module> [by (f1, ..., fk)]"),
    ("gallery", "gallery list | gallery run <id>|all [key=value ...]"),
    ("config", "config [order|budget|seed|format|cache <value>]"),
];

pub fn usage(command: &str) -> Option<&'static str> {
    USAGE.iter().find(|(c, _)| *c == command).map(|(_, u)| *u)
}

/// Parse a whole script. Every statement is parsed; the first error wins.
pub fn parse_script(src: &str) -> Result<Vec<Statement>, ParseError> {
    split_statements(src)?
        .into_iter()
        .map(|(line, text)| {
            let stmt = parse_statement(&text).map_err(|msg| ParseError { line, msg })?;
            Ok(Statement { line, text, stmt })
        })
        .collect()
}

/// Split at `;` outside brackets; returns (starting line, trimmed text).
pub fn split_statements(src: &str) -> Result<Vec<(usize, String)>, ParseError> {
    let mut out = vec![];
    let mut cur = String::new();
    let mut start_line = 1;
    let mut depth = 0i32;
    for (ln, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for ch in line.chars() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(ParseError {
                            line: ln + 1,
                            msg: format!("unbalanced `{ch}`"),
                        });
                    }
                }
                _ => {}
            }
            if ch == ';' && depth == 0 {
                let t = cur.trim().to_string();
                if !t.is_empty() {
                    out.push((start_line, t));
                }
                cur.clear();
                continue;
            }
            if cur.trim().is_empty() && !ch.is_whitespace() {
                start_line = ln + 1;
            }
            cur.push(ch);
        }
        cur.push('\n');
    }
    if !cur.trim().is_empty() {
        return Err(ParseError {
            line: start_line,
            msg: if depth != 0 {
                "unbalanced brackets".into()
            } else {
                "missing `;` after last statement".into()
            },
        });
    }
    Ok(out)
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// Byte offsets of `pat` at bracket depth 0.
fn top_level_matches(s: &str, pat: &str, whole_word: bool) -> Vec<usize> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    let mut out = vec![];
    let mut i = 0;
    while i < bytes.len() {
        if depth == 0 && s[i..].starts_with(pat) {
            let before = i == 0 || !bytes[i - 1].is_ascii_alphanumeric();
            let after = bytes.get(i + pat.len()).is_none_or(|b| !b.is_ascii_alphanumeric());
            if !whole_word || (before && after) {
                out.push(i);
                i += pat.len();
                continue;
            }
        }
        match bytes[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            _ => {}
        }
        i += 1;
    }
    out
}

/// Split on `sep` at depth 0.
pub fn split_top<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let mut out = vec![];
    let mut last = 0;
    for i in top_level_matches(s, sep, false) {
        out.push(s[last..i].trim());
        last = i + sep.len();
    }
    out.push(s[last..].trim());
    out
}

/// Split once on the keyword `word` at depth 0.
fn split_word<'a>(s: &'a str, word: &str) -> Option<(&'a str, &'a str)> {
    let i = *top_level_matches(s, word, true).first()?;
    Some((s[..i].trim(), s[i + word.len()..].trim()))
}

fn closing_paren(s: &str) -> Option<usize> {
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Contents of `(...)` when the parentheses enclose all of `s`.
fn parenthesized(s: &str) -> Option<&str> {
    let s = s.trim();
    (s.starts_with('(') && closing_paren(s) == Some(s.len() - 1)).then(|| &s[1..s.len() - 1])
}

fn list_items(inner: &str) -> Vec<String> {
    if inner.trim().is_empty() {
        return vec![];
    }
    split_top(inner, ",").into_iter().map(str::to_string).collect()
}

pub fn parse_ideal_expr(s: &str) -> Result<IdealExpr, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("expected an ideal".into());
    }
    if s.starts_with("cut") {
        return Ok(IdealExpr::Cut(s.to_string()));
    }
    if let Some(inner) = parenthesized(s) {
        let items = list_items(inner);
        if items.iter().any(|g| g.is_empty()) {
            return Err(format!("empty generator in `{s}`"));
        }
        return Ok(IdealExpr::Literal(items));
    }
    if is_ident(s) && !s.contains('-') {
        return Ok(IdealExpr::Name(s.to_string()));
    }
    Ok(IdealExpr::Poly(s.to_string()))
}

fn name_and_rhs<'a>(rest: &'a str, what: &str) -> Result<(String, &'a str), String> {
    let (name, rhs) = rest
        .split_once('=')
        .ok_or_else(|| format!("expected `{what} <name> = ...`"))?;
    let name = name.trim();
    if !is_ident(name) || name.contains('-') {
        return Err(format!("`{name}` is not a valid name"));
    }
    Ok((name.to_string(), rhs.trim()))
}

fn module_name(rest: &str) -> Result<String, String> {
    let r = rest.strip_prefix("module ").map(str::trim).unwrap_or(rest);
    if is_ident(r) && !r.contains('-') {
        Ok(r.to_string())
    } else {
        Err(format!("expected a module name, found `{r}`"))
    }
}

fn parse_summand(s: &str) -> Result<Summand, String> {
    let s = s.trim();
    if s == "Q/Z" {
        return Ok(Summand::QmodZ);
    }
    if s == "Z" {
        return Ok(Summand::IntCyclic(0));
    }
    if let Some(v) = s.strip_prefix("Quot(") {
        let (inner, tail) = v.split_once(')').ok_or("bad `Quot(V)/V`")?;
        if tail.trim() != format!("/{}", inner.trim()) {
            return Err(format!("expected `Quot({0})/{0}`", inner.trim()));
        }
        return Ok(Summand::QuotField(inner.trim().to_string()));
    }
    let (ring, ideal) = s
        .split_once('/')
        .ok_or_else(|| format!("expected `R/I`, found `{s}`"))?;
    let ring = ring.trim();
    if ring == "Z" {
        let n = parenthesized(ideal)
            .unwrap_or(ideal)
            .trim()
            .parse::<u64>()
            .map_err(|_| format!("expected `Z/(n)`, found `{s}`"))?;
        return Ok(Summand::IntCyclic(n));
    }
    if !is_ident(ring) {
        return Err(format!("`{ring}` is not a ring name"));
    }
    Ok(Summand::Quotient {
        ring: ring.to_string(),
        ideal: parse_ideal_expr(ideal)?,
    })
}

fn call_args(s: &str, f: &str) -> Option<Vec<String>> {
    let rest = s.strip_prefix(f)?.trim_start();
    parenthesized(rest).map(list_items)
}

fn parse_multset(s: &str) -> Result<MultSet, String> {
    if let Some(mut a) = call_args(s, "powers") {
        if a.len() != 1 {
            return Err("powers takes one polynomial".into());
        }
        return Ok(MultSet::Powers(a.remove(0)));
    }
    if let Some(a) = call_args(s, "monoid") {
        return Ok(MultSet::Monoid(a));
    }
    if let Some(a) = call_args(s, "complement") {
        return Ok(MultSet::Complement(a));
    }
    Err(format!("unknown multiplicative set `{s}`"))
}

fn one(rest: &str) -> Result<IdealExpr, String> {
    parse_ideal_expr(rest)
}

fn by_pair(rest: &str) -> Result<(IdealExpr, IdealExpr), String> {
    let (a, b) = split_word(rest, "by").ok_or("missing `by`")?;
    Ok((parse_ideal_expr(a)?, parse_ideal_expr(b)?))
}

fn parse_statement(text: &str) -> Result<Stmt, String> {
    let text = text.trim();
    let (head, rest) = match text.find(char::is_whitespace) {
        Some(i) => (&text[..i], text[i..].trim()),
        None => (text, ""),
    };
    let with_usage = |e: String| match usage(head) {
        Some(u) => format!("{e}; usage: {u}"),
        None => e,
    };
    parse_body(head, rest).map_err(with_usage)
}

fn parse_body(head: &str, rest: &str) -> Result<Stmt, String> {
    let nonempty = || {
        if rest.is_empty() {
            Err(format!("`{head}` needs an argument"))
        } else {
            Ok(())
        }
    };
    Ok(match head {
        "ring" => {
            let (name, rhs) = name_and_rhs(rest, "ring")?;
            let open = rhs.find('[').ok_or("expected `[variables]`")?;
            let vars = rhs[open..]
                .strip_prefix('[')
                .and_then(|v| v.strip_suffix(']'))
                .ok_or("expected `[variables]`")?;
            let vars: Vec<String> = list_items(vars);
            if vars.is_empty() {
                return Err("a ring needs at least one variable".into());
            }
            Stmt::Ring {
                name,
                domain: rhs[..open].trim().to_string(),
                vars,
            }
        }
        "valring" => {
            let (name, rhs) = name_and_rhs(rest, "valring")?;
            Stmt::ValRing {
                name,
                group: rhs.to_string(),
            }
        }
        "ideal" => {
            let (name, rhs) = name_and_rhs(rest, "ideal")?;
            Stmt::Ideal {
                name,
                expr: parse_ideal_expr(rhs)?,
            }
        }
        "module" => {
            let (name, rhs) = name_and_rhs(rest, "module")?;
            let rhs = rhs.replace('⊕', "(+)");
            let summands = rhs.split("(+)").map(parse_summand).collect::<Result<Vec<_>, _>>()?;
            Stmt::Module { name, summands }
        }
        "decompose" => {
            nonempty()?;
            Stmt::Decompose(one(rest)?)
        }
        "normalize" => {
            nonempty()?;
            let (parts, ambient) = match split_word(rest, "for") {
                Some((p, a)) => (p, Some(parse_ideal_expr(a)?)),
                None => (rest, None),
            };
            let parts = split_top(parts, ",")
                .into_iter()
                .map(parse_ideal_expr)
                .collect::<Result<_, _>>()?;
            Stmt::Normalize { parts, ambient }
        }
        "radical" => {
            nonempty()?;
            Stmt::Radical(one(rest)?)
        }
        "minprimes" => {
            nonempty()?;
            Stmt::MinPrimes(one(rest)?)
        }
        "quotient" => {
            let (a, b) = by_pair(rest)?;
            Stmt::Quotient(a, b)
        }
        "saturate" => {
            let (a, b) = by_pair(rest)?;
            Stmt::Saturate(a, b)
        }
        "intersect" => {
            nonempty()?;
            let parts: Vec<IdealExpr> = split_top(rest, ",")
                .into_iter()
                .map(parse_ideal_expr)
                .collect::<Result<_, _>>()?;
            Stmt::Intersect(parts)
        }
        "scomp" => {
            let (i, s) = split_word(rest, "by").ok_or("missing `by`")?;
            let (s, extend) = match split_word(s, "extend") {
                Some((s, a)) => (s, Some(a.to_string())),
                None => (s, None),
            };
            Stmt::SComp {
                ideal: parse_ideal_expr(i)?,
                set: parse_multset(s)?,
                extend,
            }
        }
        "ass" | "ass0" | "ass1" => {
            let kind = match head {
                "ass" => AssKind::Ass,
                "ass0" => AssKind::Ass0,
                _ => AssKind::Ass1,
            };
            Stmt::Ass {
                kind,
                module: module_name(rest)?,
            }
        }
        "supp" => {
            let (m, p) = split_word(rest, "at").ok_or("missing `at`")?;
            Stmt::Supp {
                module: module_name(m)?,
                prime: parse_ideal_expr(p)?,
            }
        }
        "modradical" => Stmt::ModRadical(module_name(rest)?),
        "colon" => {
            let (m, element) = match split_word(rest, "by") {
                Some((m, e)) => (m, Some(list_items(parenthesized(e).ok_or("expected `(f1, ..., fk)`")?))),
                None => (rest, None),
            };
            Stmt::Colon {
                module: module_name(m)?,
                element,
            }
        }
        "gallery" => {
            let words: Vec<&str> = rest.split_whitespace().collect();
            match words.as_slice() {
                ["list"] => Stmt::GalleryList,
                ["run", id, kv @ ..] => {
                    let overrides = kv
                        .iter()
                        .map(|w| {
                            let (k, v) = w
                                .split_once('=')
                                .ok_or_else(|| format!("expected key=value, found `{w}`"))?;
                            if !["n", "samples", "seed", "degree", "bound"].contains(&k) {
                                return Err(format!("unknown parameter `{k}`"));
                            }
                            let v = v
                                .parse::<u64>()
                                .map_err(|_| format!("`{v}` is not a non-negative integer"))?;
                            Ok((k.to_string(), v))
                        })
                        .collect::<Result<Vec<_>, String>>()?;
                    let target = if *id == "all" {
                        GalleryTarget::All
                    } else {
                        GalleryTarget::One(id.to_string())
                    };
                    Stmt::GalleryRun { target, overrides }
                }
                _ => return Err("expected `gallery list` or `gallery run <id>`".into()),
            }
        }
        "config" => {
            let words: Vec<&str> = rest.split_whitespace().collect();
            match words.as_slice() {
                [] => Stmt::Config(None),
                [k, v] if ["order", "budget", "seed", "format", "cache"].contains(k) => {
                    Stmt::Config(Some((k.to_string(), v.to_string())))
                }
                _ => return Err(format!("bad config statement `config {rest}`")),
            }
        }
        _ => return Err(format!("unknown command `{head}`")),
    })
}

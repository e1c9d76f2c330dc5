use std::collections::HashSet;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Serialize, Serializer};

/// An indeterminate, identified by a name and an optional index.
///
/// `x` and `x_3` are distinct variables; families `x_1, x_2, ...` need no
/// ambient arity. Variables are ordered by `(name, index)`, and a variable
/// that sorts *earlier* is the *larger* one in every term order, so
/// `x > y > z` and `x_1 > x_2 > x_3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    name: &'static str,
    index: Option<u32>,
}

fn intern(name: &str) -> &'static str {
    static NAMES: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    let mut names = NAMES
        .get_or_init(|| Mutex::new(HashSet::new()))
        .lock()
        .expect("variable interner poisoned");
    if let Some(&s) = names.get(name) {
        return s;
    }
    let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
    names.insert(leaked);
    leaked
}

impl Var {
    pub fn new(name: &str) -> Self {
        Var {
            name: intern(name),
            index: None,
        }
    }

    pub fn indexed(name: &str, index: u32) -> Self {
        Var {
            name: intern(name),
            index: Some(index),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn index(&self) -> Option<u32> {
        self.index
    }

    /// Auxiliary variables (used for elimination tricks) live outside the
    /// surface grammar, so they can never collide with user variables.
    pub(crate) fn auxiliary(tag: &str) -> Self {
        Var::new(&format!("@{tag}"))
    }

    pub fn is_auxiliary(&self) -> bool {
        self.name.starts_with('@')
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}_{}", self.name, i),
            None => f.write_str(self.name),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

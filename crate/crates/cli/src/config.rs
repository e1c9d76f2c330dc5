//! Session configuration: defaults, an optional TOML file, then flags.

use std::fmt;
use std::path::{Path, PathBuf};

use ideallab::{Engine, TermOrder};
use serde::{Deserialize, Serialize};

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "IDEALLAB_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected text or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    pub order: String,
    pub pair_budget: usize,
    pub seed: u64,
    pub format: Format,
    pub cache: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order: "grevlex".into(),
            pair_budget: 50_000,
            seed: 42,
            format: Format::Text,
            cache: true,
        }
    }
}

pub fn parse_order(name: &str) -> Result<TermOrder, String> {
    match name {
        "grevlex" => Ok(TermOrder::Grevlex),
        "lex" => Ok(TermOrder::Lex),
        _ => Err(format!("unknown term order `{name}` (expected grevlex or lex)")),
    }
}

pub fn parse_toggle(word: &str) -> Result<bool, String> {
    match word {
        "on" | "true" => Ok(true),
        "off" | "false" => Ok(false),
        _ => Err(format!("expected on or off, found `{word}`")),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Toggle {
    Bool(bool),
    Word(String),
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    order: Option<String>,
    pair_budget: Option<usize>,
    seed: Option<u64>,
    format: Option<Format>,
    cache: Option<Toggle>,
}

/// Values given on the command line; each one beats the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub config: Option<PathBuf>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub budget: Option<usize>,
}

impl Config {
    pub fn validate(&self) -> Result<(), String> {
        parse_order(&self.order)?;
        if self.pair_budget == 0 {
            return Err("pair_budget must be positive".into());
        }
        Ok(())
    }

    pub fn from_toml(text: &str) -> Result<Config, String> {
        let file: FileConfig = toml::from_str(text).map_err(|e| e.to_string())?;
        let mut c = Config::default();
        if let Some(o) = file.order {
            c.order = o;
        }
        if let Some(b) = file.pair_budget {
            c.pair_budget = b;
        }
        if let Some(s) = file.seed {
            c.seed = s;
        }
        if let Some(f) = file.format {
            c.format = f;
        }
        match file.cache {
            Some(Toggle::Bool(b)) => c.cache = b,
            Some(Toggle::Word(w)) => c.cache = parse_toggle(&w)?,
            None => {}
        }
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Config::from_toml(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Defaults, then the file named by `--config` or the environment,
    /// then the remaining flags.
    pub fn resolve(flags: &Overrides, env_path: Option<PathBuf>) -> Result<Config, String> {
        let mut c = match flags.config.clone().or(env_path) {
            Some(p) => Config::load(&p)?,
            None => Config::default(),
        };
        if let Some(f) = flags.format {
            c.format = f;
        }
        if let Some(s) = flags.seed {
            c.seed = s;
        }
        if let Some(b) = flags.budget {
            c.pair_budget = b;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn engine(&self) -> Engine {
        let order = parse_order(&self.order).expect("validated order");
        Engine::new(order, self.pair_budget, self.cache)
    }
}

//! Enumeration caps: built-in defaults, overridden in turn by a TOML config
//! file, `PITHEORY_*` environment variables and command-line flags.
//!
//! ```toml
//! [caps]
//! closure = 5000
//! lattice = 512
//! series = 100000
//! module_dim = 8
//! iso = 512
//! ```

use std::path::{Path, PathBuf};

use pitheory_core::Caps;
use serde::Deserialize;

/// Environment variable naming a config file.
pub const CONFIG_ENV: &str = "PITHEORY_CONFIG";

/// `(cap name, environment variable)`, one per cap.
pub const CAP_ENV: [(&str, &str); 5] = [
    ("closure", "PITHEORY_CLOSURE_CAP"),
    ("lattice", "PITHEORY_LATTICE_CAP"),
    ("series", "PITHEORY_SERIES_CAP"),
    ("module_dim", "PITHEORY_MODULE_DIM_CAP"),
    ("iso", "PITHEORY_ISO_CAP"),
];

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Toml { path: String, source: toml::de::Error },
    #[error("{var}: expected a positive integer, found `{value}`")]
    Env { var: String, value: String },
}

/// Caps that are set, each overriding the layer below.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapOverrides {
    pub closure: Option<usize>,
    pub lattice: Option<usize>,
    pub series: Option<usize>,
    pub module_dim: Option<usize>,
    pub iso: Option<usize>,
}

impl CapOverrides {
    pub fn apply(self, caps: Caps) -> Caps {
        Caps {
            closure: self.closure.unwrap_or(caps.closure),
            lattice: self.lattice.unwrap_or(caps.lattice),
            series: self.series.unwrap_or(caps.series),
            module_dim: self.module_dim.unwrap_or(caps.module_dim),
            iso: self.iso.unwrap_or(caps.iso),
        }
    }

    pub fn from_env(env: &dyn Fn(&str) -> Option<String>) -> Result<CapOverrides, ConfigError> {
        let mut o = CapOverrides::default();
        for (cap, var) in CAP_ENV {
            let Some(value) = env(var) else { continue };
            let n = value
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| ConfigError::Env { var: var.into(), value: value.clone() })?;
            let slot = match cap {
                "closure" => &mut o.closure,
                "lattice" => &mut o.lattice,
                "series" => &mut o.series,
                "module_dim" => &mut o.module_dim,
                _ => &mut o.iso,
            };
            *slot = Some(n);
        }
        Ok(o)
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub caps: CapOverrides,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<ConfigFile, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        toml::from_str(&text).map_err(|source| ConfigError::Toml { path: path.display().to_string(), source })
    }
}

/// Defaults, then the config file (`path`, else `$PITHEORY_CONFIG`), then
/// the environment, then `flags`.
pub fn resolve_caps(
    path: Option<&Path>,
    env: &dyn Fn(&str) -> Option<String>,
    flags: CapOverrides,
) -> Result<Caps, ConfigError> {
    let mut caps = Caps::default();
    let path = path.map(Path::to_path_buf).or_else(|| env(CONFIG_ENV).map(PathBuf::from));
    if let Some(path) = path {
        caps = ConfigFile::load(&path)?.caps.apply(caps);
    }
    caps = CapOverrides::from_env(env)?.apply(caps);
    Ok(flags.apply(caps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_env(_: &str) -> Option<String> {
        None
    }

    #[test]
    fn defaults() {
        assert_eq!(resolve_caps(None, &no_env, CapOverrides::default()).unwrap(), Caps::default());
    }

    #[test]
    fn layers_in_order() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("caps.toml");
        std::fs::write(&path, "[caps]\nclosure = 100\nlattice = 50\nseries = 7\n").unwrap();
        let env = |k: &str| match k {
            "PITHEORY_LATTICE_CAP" => Some("40".to_string()),
            "PITHEORY_SERIES_CAP" => Some("30".to_string()),
            _ => None,
        };
        let flags = CapOverrides { series: Some(20), ..Default::default() };
        let caps = resolve_caps(Some(&path), &env, flags).unwrap();
        assert_eq!((caps.closure, caps.lattice, caps.series), (100, 40, 20));
        assert_eq!(caps.module_dim, Caps::default().module_dim);
    }

    #[test]
    fn config_path_from_env() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("caps.toml");
        std::fs::write(&path, "[caps]\niso = 9\n").unwrap();
        let p = path.display().to_string();
        let env = move |k: &str| (k == CONFIG_ENV).then(|| p.clone());
        assert_eq!(resolve_caps(None, &env, CapOverrides::default()).unwrap().iso, 9);
    }

    #[test]
    fn bad_values_are_errors() {
        let env = |k: &str| (k == "PITHEORY_ISO_CAP").then(|| "many".to_string());
        assert!(matches!(resolve_caps(None, &env, CapOverrides::default()), Err(ConfigError::Env { .. })));
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("caps.toml");
        std::fs::write(&path, "[caps]\nclosur = 1\n").unwrap();
        assert!(matches!(resolve_caps(Some(&path), &no_env, CapOverrides::default()), Err(ConfigError::Toml { .. })));
    }
}

use std::path::PathBuf;

use thiserror::Error;

use crate::rdf::Iri;
use crate::schema::{vocab, Profile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("config line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

/// Service settings, from a flat key=value file.
///
/// Keys: `bind` (address:port), `base` (IRI the vocabulary is served
/// under), `profile` (core, restricted, or expanded), `data` (a Turtle
/// file path, repeatable), `inference` (on or off). Blank lines and `#`
/// comments are ignored. Everything has a default, so the empty file is a
/// valid config: core profile at the published base on 127.0.0.1:8080
/// with inference on and no datasets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceConfig {
    pub bind: String,
    pub base: Iri,
    pub profile: Profile,
    pub data: Vec<PathBuf>,
    pub inference: bool,
}

impl Default for ServiceConfig {
    fn default() -> ServiceConfig {
        ServiceConfig {
            bind: "127.0.0.1:8080".to_owned(),
            base: vocab::default_base(),
            profile: Profile::Core,
            data: Vec::new(),
            inference: true,
        }
    }
}

pub fn parse_service_config(text: &str) -> Result<ServiceConfig, ConfigError> {
    let mut config = ServiceConfig::default();
    for (index, raw_line) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((key, value)) = trimmed.split_once('=') else {
            return Err(ConfigError {
                line,
                message: format!("expected KEY=VALUE, found {trimmed:?}"),
            });
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "bind" => {
                if value.is_empty() {
                    return Err(ConfigError {
                        line,
                        message: "bind address is empty".into(),
                    });
                }
                config.bind = value.to_owned();
            }
            "base" => {
                config.base = Iri::new(value).map_err(|e| ConfigError {
                    line,
                    message: e.to_string(),
                })?;
            }
            "profile" => {
                config.profile = value.parse().map_err(|e: String| ConfigError {
                    line,
                    message: e,
                })?;
            }
            "data" => {
                config.data.push(PathBuf::from(value));
            }
            "inference" => {
                config.inference = match value {
                    "on" | "true" => true,
                    "off" | "false" => false,
                    other => {
                        return Err(ConfigError {
                            line,
                            message: format!("inference must be on or off, found {other:?}"),
                        })
                    }
                };
            }
            other => {
                return Err(ConfigError {
                    line,
                    message: format!(
                        "unknown key {other:?}; expected bind, base, profile, data, or inference"
                    ),
                })
            }
        }
    }
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_config_parses() {
        let text = concat!(
            "# demo service\n",
            "bind=0.0.0.0:8099\n",
            "base=http://demo.example/ops\n",
            "profile=expanded\n",
            "data=data/demo.ttl\n",
            "data=data/extra.ttl\n",
            "inference=off\n",
        );
        let c = parse_service_config(text).unwrap();
        assert_eq!(c.bind, "0.0.0.0:8099");
        assert_eq!(c.base.as_str(), "http://demo.example/ops");
        assert_eq!(c.profile, Profile::Expanded);
        assert_eq!(c.data, vec![PathBuf::from("data/demo.ttl"), PathBuf::from("data/extra.ttl")]);
        assert!(!c.inference);
    }

    #[test]
    fn empty_file_is_the_default_config() {
        let c = parse_service_config("").unwrap();
        assert_eq!(c, ServiceConfig::default());
        assert_eq!(c.bind, "127.0.0.1:8080");
        assert_eq!(c.profile, Profile::Core);
        assert!(c.inference);
        assert!(c.data.is_empty());
    }

    #[test]
    fn bad_values_are_line_positioned() {
        let err = parse_service_config("bind=127.0.0.1:1\nprofile=huge\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_service_config("base=no scheme here\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("whitespace"), "{err}");
        let err = parse_service_config("\n\ninference=maybe\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_service_config("listen=80\n").unwrap_err();
        assert!(err.message.contains("unknown key"), "{err}");
        let err = parse_service_config("just words\n").unwrap_err();
        assert!(err.message.contains("KEY=VALUE"), "{err}");
    }
}

//! Line-oriented INI parsing, independent of any particular schema.

use super::ConfigError;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IniSection {
    pub name: String,
    entries: Vec<(String, String)>,
}

impl IniSection {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(k, _)| k.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IniDocument {
    sections: Vec<IniSection>,
}

impl IniDocument {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut doc = IniDocument::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest.strip_suffix(']').ok_or(ConfigError::Parse {
                    line: line_no,
                    reason: "section header missing closing ']'".into(),
                })?;
                if !is_valid_name(name) {
                    return Err(ConfigError::Parse {
                        line: line_no,
                        reason: format!("invalid section name {name:?}"),
                    });
                }
                if doc.section(name).is_some() {
                    return Err(ConfigError::Parse {
                        line: line_no,
                        reason: format!("duplicate section [{name}]"),
                    });
                }
                doc.sections.push(IniSection {
                    name: name.to_owned(),
                    entries: Vec::new(),
                });
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Parse {
                line: line_no,
                reason: "expected 'key = value' or a section header".into(),
            })?;
            let key = key.trim();
            let value = value.trim();
            if !is_valid_key(key) {
                return Err(ConfigError::Parse {
                    line: line_no,
                    reason: format!("invalid key {key:?}"),
                });
            }
            if value.is_empty() {
                return Err(ConfigError::Parse {
                    line: line_no,
                    reason: format!("empty value for key {key:?}"),
                });
            }
            let section = doc.sections.last_mut().ok_or(ConfigError::Parse {
                line: line_no,
                reason: "key outside any [section]".into(),
            })?;
            if section.get(key).is_some() {
                return Err(ConfigError::Parse {
                    line: line_no,
                    reason: format!("duplicate key {key:?} in [{}]", section.name),
                });
            }
            section.entries.push((key.to_owned(), value.to_owned()));
        }
        Ok(doc)
    }

    pub fn section(&self, name: &str) -> Option<&IniSection> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn sections(&self) -> impl Iterator<Item = &IniSection> {
        self.sections.iter()
    }
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn is_valid_key(key: &str) -> bool {
    let mut chars = key.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

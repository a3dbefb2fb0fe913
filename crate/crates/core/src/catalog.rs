//! Knot catalogs: JSON ingestion with line-anchored errors, an exporter, and
//! the built-in knots.
//!
//! ```json
//! {"version": 1, "knots": [{"name": "9_48", "alexander": [1, -7, 11, -7, 1], "signature": 2}]}
//! ```

use std::collections::HashMap;
use std::path::Path;

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::{Error, Location, Result};
use crate::knot::{parse_rational, DeclaredJump, KnotRecord, KnotSpec};

pub const CATALOG_VERSION: u64 = 1;

const BUILTIN: &str = include_str!("builtin_catalog.json");

const MIRROR_PREFIX: &str = "mirror:";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileJson<'a> {
    version: u64,
    #[serde(borrow)]
    knots: Vec<&'a RawValue>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryJson {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seifert: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alexander: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signature_jumps: Option<Vec<JumpJson>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    mirror: bool,
    #[serde(default)]
    comment: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fibered: Option<bool>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JumpJson {
    turn: String,
    value: i64,
}

#[derive(Serialize)]
struct ExportJson {
    version: u64,
    knots: Vec<EntryJson>,
}

/// Named knots in insertion order.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    knots: Vec<KnotRecord>,
    index: HashMap<String, usize>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// trefoil, figure8, 9_48, 12n_642, Ds, Df and the unknot.
    pub fn builtin() -> Self {
        Self::from_json_str(BUILTIN).expect("built-in catalog is valid")
    }

    /// Built-ins, overridden and extended by the file at `path` if given.
    pub fn builtin_with(path: Option<&Path>) -> Result<Self> {
        let mut cat = Self::builtin();
        if let Some(p) = path {
            for k in Self::load(p)?.knots {
                cat.insert(k);
            }
        }
        Ok(cat)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    /// Parses a catalog document. Any invalid entry rejects the whole file.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: FileJson = serde_json::from_str(text).map_err(|e| json_error(&e, Location { line: 1, column: 1 }))?;
        if file.version != CATALOG_VERSION {
            return Err(Error::Catalog {
                location: Location { line: 1, column: 1 },
                message: format!("unsupported catalog version {} (expected {CATALOG_VERSION})", file.version),
            });
        }
        let mut cat = Catalog::new();
        for raw in file.knots {
            let at = location_of(text, raw.get());
            let entry: EntryJson = serde_json::from_str(raw.get()).map_err(|e| json_error(&e, at.clone()))?;
            let anchored = |e: Error| Error::Catalog { location: at.clone(), message: e.to_string() };
            if entry.name.is_empty() || entry.name.starts_with(MIRROR_PREFIX) {
                return Err(anchored(Error::InvalidArgument(format!("invalid knot name {:?}", entry.name))));
            }
            if cat.index.contains_key(&entry.name) {
                return Err(anchored(Error::InvalidArgument(format!("duplicate knot name {:?}", entry.name))));
            }
            let record = KnotRecord::new(entry_to_spec(entry).map_err(anchored)?).map_err(anchored)?;
            cat.insert(record);
        }
        Ok(cat)
    }

    /// Adds `k`, replacing any knot of the same name.
    pub fn insert(&mut self, k: KnotRecord) {
        match self.index.get(k.name()) {
            Some(&i) => self.knots[i] = k,
            None => {
                self.index.insert(k.name().to_string(), self.knots.len());
                self.knots.push(k);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.knots.is_empty()
    }

    pub fn knots(&self) -> &[KnotRecord] {
        &self.knots
    }

    pub fn names(&self) -> Vec<&str> {
        self.knots.iter().map(|k| k.name()).collect()
    }

    /// Looks up `name`; a `mirror:` prefix returns the mirror image.
    pub fn get(&self, name: &str) -> Result<KnotRecord> {
        if let Some(base) = name.strip_prefix(MIRROR_PREFIX) {
            return self.get(base).map(|k| k.mirror());
        }
        self.index
            .get(name)
            .map(|&i| self.knots[i].clone())
            .ok_or_else(|| Error::UnknownKnot(name.to_string()))
    }

    /// The same catalog with every invariant certified to `radius`.
    pub fn with_radius(&self, radius: f64) -> Result<Self> {
        let mut cat = Catalog::new();
        for k in &self.knots {
            cat.insert(k.with_radius(radius)?);
        }
        Ok(cat)
    }

    /// Catalog document that reloads to the same knots.
    pub fn to_json_string(&self) -> String {
        let doc = ExportJson {
            version: CATALOG_VERSION,
            knots: self.knots.iter().map(|k| spec_to_entry(&k.spec())).collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("catalog serializes");
        s.push('\n');
        s
    }
}

fn location_of(text: &str, slice: &str) -> Location {
    let offset = slice.as_ptr() as usize - text.as_ptr() as usize;
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Location { line, column }
}

/// serde positions are relative to the parsed slice starting at `base`.
fn json_error(e: &serde_json::Error, base: Location) -> Error {
    let (line, column) = (e.line().max(1), e.column());
    let location = if line == 1 {
        Location { line: base.line, column: base.column + column.saturating_sub(1) }
    } else {
        Location { line: base.line + line - 1, column }
    };
    let message = e.to_string();
    let message = message.split(" at line ").next().unwrap_or(&message).to_string();
    Error::Catalog { location, message }
}

fn entry_to_spec(e: EntryJson) -> Result<KnotSpec> {
    let signature_jumps = e
        .signature_jumps
        .map(|js| {
            js.into_iter()
                .map(|j| Ok(DeclaredJump { turn: parse_rational(&j.turn)?, value: j.value }))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    Ok(KnotSpec {
        name: e.name,
        seifert: e.seifert,
        alexander: e.alexander.map(|c| c.into_iter().map(Integer::from).collect()),
        signature: e.signature,
        signature_jumps,
        mirror: e.mirror,
        comment: e.comment,
        genus: e.genus,
        fibered: e.fibered,
    })
}

fn rational_string(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn spec_to_entry(s: &KnotSpec) -> EntryJson {
    EntryJson {
        name: s.name.strip_prefix(MIRROR_PREFIX).unwrap_or(&s.name).to_string(),
        seifert: s.seifert.clone(),
        alexander: s
            .alexander
            .as_ref()
            .map(|c| c.iter().map(|x| x.to_i64().expect("catalog coefficients fit in i64")).collect()),
        signature: s.signature,
        signature_jumps: s.signature_jumps.as_ref().map(|js| {
            js.iter().map(|j| JumpJson { turn: rational_string(&j.turn), value: j.value }).collect()
        }),
        mirror: s.mirror,
        comment: s.comment.clone(),
        genus: s.genus,
        fibered: s.fibered,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_load() {
        let cat = Catalog::builtin();
        assert_eq!(cat.names(), ["unknot", "trefoil", "figure8", "9_48", "12n_642", "Ds", "Df"]);
        assert_eq!(cat.get("9_48").unwrap().signature().unwrap(), 2);
        assert_eq!(cat.get("Df").unwrap().alexander().deg(), 10);
        let m = cat.get("mirror:9_48").unwrap();
        assert_eq!(m.signature().unwrap(), -2);
        assert_eq!(m.name(), "mirror:9_48");
        assert!(matches!(cat.get("10_1"), Err(Error::UnknownKnot(_))));
    }

    #[test]
    fn line_anchored_errors() {
        let text = "{\n  \"version\": 1,\n  \"knots\": [\n    {\"name\": \"a\", \"alexander\": [1, -3, 1]},\n    {\"name\": \"b\", \"alexander\": [1, 2, 1]}\n  ]\n}\n";
        match Catalog::from_json_str(text) {
            Err(Error::Catalog { location, message }) => {
                assert_eq!(location.line, 5);
                assert!(message.contains("±1"), "{message}");
            }
            other => panic!("{other:?}"),
        }

        let text = "{\"version\": 1, \"knots\": [\n {\"name\": \"a\",\n  \"alexandr\": [1]}]}";
        match Catalog::from_json_str(text) {
            Err(Error::Catalog { location, .. }) => assert_eq!(location.line, 3),
            other => panic!("{other:?}"),
        }

        let text = "{\"version\": 1,\n \"knots\": [\n {\"name\": \"a\"}\n]}";
        assert!(matches!(Catalog::from_json_str(text), Err(Error::Catalog { location: Location { line: 3, .. }, .. })));

        let text = "{\"version\": 2, \"knots\": []}";
        assert!(matches!(Catalog::from_json_str(text), Err(Error::Catalog { .. })));

        let text = "{\"version\": 1,\n \"knots\": [\n {\"name\": \"a\", \"alexander\": [1]},\n {\"name\": \"a\", \"alexander\": [1]}]}";
        assert!(matches!(Catalog::from_json_str(text), Err(Error::Catalog { location: Location { line: 4, .. }, .. })));

        let text = "{\"version\": 1, \"knots\": [\n\n  {\"name\": \"x\", \"alexander\": [1, -3, 1], \"signature_jumps\": [{\"turn\": \"abc\", \"value\": 0}]}]}";
        assert!(matches!(Catalog::from_json_str(text), Err(Error::Catalog { location: Location { line: 3, column: 3 }, .. })));

        assert!(matches!(Catalog::from_json_str("{\"version\": 1,\n \"knots\": [,]}"), Err(Error::Catalog { location: Location { line: 2, .. }, .. })));
    }

    #[test]
    fn round_trip() {
        let mut cat = Catalog::builtin();
        let text = r#"{"version": 1, "knots": [
            {"name": "granny", "alexander": [1, -2, 3, -2, 1],
             "signature_jumps": [{"turn": "1/6", "value": 4}], "mirror": true}
        ]}"#;
        for k in Catalog::from_json_str(text).unwrap().knots() {
            cat.insert(k.clone());
        }
        let exported = cat.to_json_string();
        let again = Catalog::from_json_str(&exported).unwrap();
        assert_eq!(again.names(), cat.names());
        for (a, b) in cat.knots().iter().zip(again.knots()) {
            assert_eq!(a.spec(), b.spec());
            assert_eq!(a.alexander(), b.alexander());
            assert_eq!(a.signature().ok(), b.signature().ok());
            assert_eq!(a.tau().unwrap().mid_f64(), b.tau().unwrap().mid_f64());
            assert_eq!(a.rho().ok().map(|r| r.mid_f64()), b.rho().ok().map(|r| r.mid_f64()));
        }
        assert_eq!(again.get("granny").unwrap().signature().unwrap(), -4);
        assert_eq!(again.to_json_string(), exported);
    }

    #[test]
    fn overrides_and_radius() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cat.json");
        std::fs::write(&path, r#"{"version": 1, "knots": [{"name": "9_48", "alexander": [1, -7, 11, -7, 1]}]}"#).unwrap();
        let cat = Catalog::builtin_with(Some(&path)).unwrap();
        assert_eq!(cat.len(), 7);
        assert!(cat.get("9_48").unwrap().rho().is_err());
        let tight = Catalog::builtin().with_radius(1e-20).unwrap();
        assert!(tight.get("9_48").unwrap().tau().unwrap().radius_f64() <= 1e-20);
        assert!(matches!(Catalog::load(&dir.path().join("missing.json")), Err(Error::Io(_))));
    }
}

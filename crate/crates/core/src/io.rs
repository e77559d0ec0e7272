//! The JSON document format for shelves and multi-shelves, and the
//! homology report.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chain::complex::{HomologyGroup, HomologyKind};
use crate::error::{Error, Result};
use crate::iso::{canonical_form, CANONICAL_SIZE_LIMIT};
use crate::table::{validate_multishelf, validate_shelf, BinaryOpTable, MultiShelf, Shelf};

pub const SCHEMA_VERSION: u32 = 1;

/// `{"size": n, "ops": [[[...]]], "labels": [...]}` with 0-indexed rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShelfDocument {
    pub size: usize,
    pub ops: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ShelfDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.check_shape()?;
        Ok(doc)
    }

    pub fn from_multishelf(ms: &MultiShelf) -> Self {
        Self {
            size: ms.size(),
            ops: ms.ops().iter().map(BinaryOpTable::rows).collect(),
            labels: None,
        }
    }

    pub fn from_shelf(s: &Shelf) -> Self {
        Self::from_multishelf(&s.to_multishelf())
    }

    fn check_shape(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::MalformedTable("size must be positive".into()));
        }
        if self.ops.is_empty() {
            return Err(Error::EmptyList);
        }
        for (k, op) in self.ops.iter().enumerate() {
            if op.len() != self.size || op.iter().any(|row| row.len() != self.size) {
                return Err(Error::MalformedTable(format!(
                    "operation {k} is not {0}x{0}",
                    self.size
                )));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.size {
                return Err(Error::MalformedTable(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    self.size
                )));
            }
        }
        Ok(())
    }

    pub fn tables(&self) -> Result<Vec<BinaryOpTable>> {
        self.check_shape()?;
        self.ops.iter().cloned().map(BinaryOpTable::from_rows).collect()
    }

    pub fn to_multishelf(&self) -> Result<MultiShelf> {
        validate_multishelf(self.tables()?)
    }

    /// The first operation as a shelf.
    pub fn to_shelf(&self) -> Result<Shelf> {
        let mut tables = self.tables()?;
        if tables.len() == 1 {
            return validate_shelf(tables.remove(0));
        }
        Ok(validate_multishelf(tables)?.shelf(0))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Key identifying a shelf in reports: the flattened canonical table for a
/// single small operation, the flattened operations otherwise.
pub fn shelf_key(ms: &MultiShelf) -> Value {
    if ms.len() == 1 && ms.size() <= CANONICAL_SIZE_LIMIT {
        if let Ok(key) = canonical_form(&ms.ops()[0]) {
            return serde_json::json!(key.flattened());
        }
    }
    let flat: Vec<Vec<usize>> = ms.ops().iter().map(|t| t.entries().to_vec()).collect();
    if flat.len() == 1 {
        serde_json::json!(flat[0])
    } else {
        serde_json::json!(flat)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub schema: u32,
    pub shelf: Value,
    pub kind: String,
    pub coefficients: Vec<i64>,
    pub augmented: bool,
    pub groups: Vec<HomologyGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

impl HomologyReport {
    pub fn new(
        ms: &MultiShelf,
        kind: Option<HomologyKind>,
        coefficients: Vec<i64>,
        augmented: bool,
        groups: Vec<HomologyGroup>,
    ) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            shelf: shelf_key(ms),
            kind: kind.map_or("multishelf", HomologyKind::name).to_string(),
            coefficients,
            augmented,
            groups,
            generated_at: None,
        }
    }
}

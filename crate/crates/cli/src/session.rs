use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use repring::sym::{character_table, CharacterTable, TableOrder};
use repring::tensor::{structure_tensor, StructureTensor};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderChoice {
    /// Published numbering when one exists, canonical otherwise.
    Auto,
    Paper,
    Canonical,
}

/// Character tables and structure tensors, computed once per `n`.
pub struct Session {
    order: OrderChoice,
    cache_dir: Option<PathBuf>,
    tables: HashMap<usize, CharacterTable>,
    tensors: HashMap<usize, StructureTensor>,
}

impl Session {
    pub fn new(order: OrderChoice, cache_dir: Option<PathBuf>) -> Self {
        Session {
            order,
            cache_dir,
            tables: HashMap::new(),
            tensors: HashMap::new(),
        }
    }

    pub fn table(&mut self, n: usize) -> Result<&CharacterTable> {
        if !self.tables.contains_key(&n) {
            let canonical = character_table(n)?;
            let table = match self.order {
                OrderChoice::Canonical => canonical,
                OrderChoice::Paper => canonical.to_paper_order()?,
                OrderChoice::Auto if canonical.has_paper_order() => canonical.to_paper_order()?,
                OrderChoice::Auto => canonical,
            };
            self.tables.insert(n, table);
        }
        Ok(&self.tables[&n])
    }

    pub fn tensor(&mut self, n: usize) -> Result<(&CharacterTable, &StructureTensor)> {
        if !self.tensors.contains_key(&n) {
            let table = self.table(n)?.clone();
            let t = match self.load_cached(&table) {
                Some(t) => t,
                None => {
                    let t = structure_tensor(&table)?;
                    self.store_cached(&t)?;
                    t
                }
            };
            self.tensors.insert(n, t);
        }
        Ok((&self.tables[&n], &self.tensors[&n]))
    }

    fn cache_path(&self, n: usize, order: TableOrder) -> Option<PathBuf> {
        let tag = match order {
            TableOrder::Paper => "paper",
            TableOrder::Canonical => "canonical",
        };
        self.cache_dir
            .as_ref()
            .map(|d| d.join(format!("tensor-{n}-{tag}.json")))
    }

    /// A cached tensor is used only if its hash verifies and its labels match
    /// the current table; anything else is recomputed.
    fn load_cached(&self, table: &CharacterTable) -> Option<StructureTensor> {
        let path = self.cache_path(table.n(), table.order())?;
        let text = fs::read_to_string(&path).ok()?;
        let verdict = (|| -> Result<StructureTensor> {
            let doc: Value = serde_json::from_str(&text)?;
            let payload = doc["tensor"].as_str().context("missing tensor payload")?;
            let stored = doc["sha256"].as_str().context("missing hash")?;
            if hex::encode(Sha256::digest(payload.as_bytes())) != stored {
                bail!("hash mismatch");
            }
            let t: StructureTensor = serde_json::from_str(payload)?;
            if t.irreps() != table.irreps() || t.order() != table.order() {
                bail!("labels do not match the character table");
            }
            Ok(t)
        })();
        match verdict {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("warning: ignoring cache {}: {e}", path.display());
                None
            }
        }
    }

    fn store_cached(&self, t: &StructureTensor) -> Result<()> {
        let Some(path) = self.cache_path(t.n(), t.order()) else {
            return Ok(());
        };
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        let payload = serde_json::to_string(t)?;
        let doc = serde_json::json!({
            "sha256": hex::encode(Sha256::digest(payload.as_bytes())),
            "tensor": payload,
        });
        fs::write(&path, serde_json::to_string(&doc)?).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }
}

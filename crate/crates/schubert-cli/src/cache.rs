//! On-disk memo of motivic class restrictions, active when `SCHUBERT_CACHE_DIR` is set.

use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use schubert_core::io::{to_json_string, ClassDump};
use schubert_core::kclass::KClass;
use schubert_core::mc::{Cell, Motivic, MotivicClassRecord};

pub const ENV: &str = "SCHUBERT_CACHE_DIR";

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn from_env() -> Self {
        Cache {
            dir: std::env::var_os(ENV)
                .filter(|s| !s.is_empty())
                .map(PathBuf::from),
        }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    fn path(&self, mc: &Motivic, cell: Cell) -> Option<PathBuf> {
        let g = mc.ktheory().group();
        let mut name = format!("mc-{}", g.name(cell.w));
        if cell.opposite {
            name.push_str("-opposite");
        }
        if cell.dual {
            name.push_str("-dual");
        }
        Some(
            self.dir
                .as_ref()?
                .join(g.root_system().label())
                .join(format!("{name}.json")),
        )
    }

    pub fn record(&self, mc: &Motivic, cell: Cell) -> Result<MotivicClassRecord> {
        let Some(path) = self.path(mc, cell) else {
            return Ok(mc.record(cell));
        };
        let g = mc.ktheory().group();
        if let Ok(text) = fs::read_to_string(&path) {
            let loaded = serde_json::from_str::<ClassDump>(&text)
                .ok()
                .filter(|d| d.root_system == g.root_system().label())
                .and_then(|d| d.values(g).ok());
            if let Some(vals) = loaded {
                return Ok(MotivicClassRecord {
                    cell,
                    label: mc.label(cell),
                    class: KClass::from_restrictions(vals),
                });
            }
        }
        let rec = mc.record(cell);
        let dump = ClassDump::new(g, "restriction", rec.class.restrictions());
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
        }
        fs::write(&path, to_json_string(&dump)?)
            .with_context(|| format!("writing {}", path.display()))?;
        Ok(rec)
    }
}

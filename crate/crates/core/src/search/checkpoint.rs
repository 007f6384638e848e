//! Resumable sweeps: a plain text file with a header naming the sweep and
//! one line per finished word.
//!
//! ```text
//! latstick-checkpoint v1
//! spec {"budget":12,"split":null,"symmetry":true}
//! word 4,4,4 xyxzyz... {"polygons":..,"classes":[..]}
//! ```

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;

use super::{EnumerationSpec, WordResult};
use crate::error::{Error, Result};

const HEADER: &str = "latstick-checkpoint v1";

pub struct Checkpoint {
    done: HashMap<String, WordResult>,
    file: Mutex<File>,
}

impl Checkpoint {
    /// Opens or creates a checkpoint for `spec`; an existing file must have
    /// been written for the same spec.
    pub fn open(path: &Path, spec: &EnumerationSpec) -> Result<Checkpoint> {
        let spec_line = format!("spec {}", serde_json::to_string(spec)?);
        let mut done = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            let mut lines = reader.lines();
            let header = lines.next().transpose()?.unwrap_or_default();
            if header != HEADER {
                return Err(Error::Parse(format!("{}: not a checkpoint file", path.display())));
            }
            let recorded = lines.next().transpose()?.unwrap_or_default();
            if recorded != spec_line {
                return Err(Error::Precondition(format!(
                    "{} was written for a different sweep ({recorded})",
                    path.display()
                )));
            }
            for line in lines {
                let line = line?;
                let Some(rest) = line.strip_prefix("word ") else {
                    return Err(Error::Parse(format!("bad checkpoint line: {line}")));
                };
                let mut parts = rest.splitn(3, ' ');
                let (split, word, json) = match (parts.next(), parts.next(), parts.next()) {
                    (Some(a), Some(b), Some(c)) => (a, b, c),
                    _ => return Err(Error::Parse(format!("bad checkpoint line: {line}"))),
                };
                done.insert(format!("{split} {word}"), serde_json::from_str(json)?);
            }
            let file = OpenOptions::new().append(true).open(path)?;
            return Ok(Checkpoint {
                done,
                file: Mutex::new(file),
            });
        }
        let mut file = File::create(path)?;
        writeln!(file, "{HEADER}\n{spec_line}")?;
        Ok(Checkpoint {
            done,
            file: Mutex::new(file),
        })
    }

    pub fn get(&self, key: &str) -> Option<WordResult> {
        self.done.get(key).cloned()
    }

    pub fn finished(&self) -> usize {
        self.done.len()
    }

    pub fn record(&self, key: &str, r: &WordResult) -> Result<()> {
        let line = format!("word {key} {}\n", serde_json::to_string(r)?);
        let mut f = self.file.lock().expect("checkpoint writer poisoned");
        f.write_all(line.as_bytes())?;
        f.flush()?;
        Ok(())
    }
}

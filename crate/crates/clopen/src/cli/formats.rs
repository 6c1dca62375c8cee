//! On-disk formats: JSON for spaces, operators, maps, and homomorphisms,
//! CSV for information systems. Parsing and serializing round-trip on
//! canonical forms, and every parse error names the offending file.

use crate::approximation::{ApproximationSpace, Partition};
use crate::error::{Error, Result};
use crate::infosys::InfoSystem;
use crate::operators::SetOperator;
use crate::sets::{Subset, TotalMap, Universe};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid("file", format!("{}: {e}", path.display())))
}

fn parse_json<'a, T: Deserialize<'a>>(path: &Path, text: &'a str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::invalid("file", format!("{}: {e}", path.display())))
}

/// `{"universe": [...], "blocks": [[...], ...]}`
#[derive(Debug, Serialize, Deserialize)]
pub struct SpaceFile {
    pub universe: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

impl SpaceFile {
    pub fn load(path: &Path) -> Result<ApproximationSpace> {
        let text = read_file(path)?;
        let file: SpaceFile = parse_json(path, &text)?;
        file.build()
            .map_err(|e| Error::invalid("file", format!("{}: {e}", path.display())))
    }

    pub fn build(&self) -> Result<ApproximationSpace> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        ApproximationSpace::from_blocks(
            &universe,
            self.blocks.iter().map(|b| b.iter().map(String::as_str)),
        )
    }

    pub fn from_space(space: &ApproximationSpace) -> SpaceFile {
        SpaceFile {
            universe: space.universe().elements().to_vec(),
            blocks: space
                .partition()
                .blocks()
                .iter()
                .map(|b| b.names().iter().map(|n| n.to_string()).collect())
                .collect(),
        }
    }
}

/// One row of an explicit operator table.
#[derive(Debug, Serialize, Deserialize)]
pub struct TableEntry {
    #[serde(rename = "in")]
    pub input: Vec<String>,
    pub out: Vec<String>,
}

/// The two ways an operator file can specify its behavior.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BackingSpec {
    Partition {
        partition: PartitionSpec,
        mode: PartitionMode,
    },
    Table {
        table: Vec<TableEntry>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub blocks: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionMode {
    Upper,
    Lower,
}

/// `{"universe": [...], "backing": {...}}` where the backing is either
/// `{"partition": {"blocks": [...]}, "mode": "upper"|"lower"}` or
/// `{"table": [{"in": [...], "out": [...]}, ...]}` with one entry per
/// subset. Table backings may omit the universe, which is then read off
/// the full-set entry; partition backings must state it.
#[derive(Debug, Serialize, Deserialize)]
pub struct OperatorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universe: Option<Vec<String>>,
    pub backing: BackingSpec,
}

impl OperatorFile {
    pub fn load(path: &Path) -> Result<SetOperator> {
        let text = read_file(path)?;
        let file: OperatorFile = parse_json(path, &text)?;
        file.build()
            .map_err(|e| Error::invalid("file", format!("{}: {e}", path.display())))
    }

    pub fn build(&self) -> Result<SetOperator> {
        let universe = match (&self.universe, &self.backing) {
            (Some(names), _) => Universe::new(names.iter().cloned())?,
            (None, BackingSpec::Table { table }) => {
                // The full-set entry, necessarily the longest input,
                // supplies both the element names and their order.
                let full = table
                    .iter()
                    .max_by_key(|entry| entry.input.len())
                    .ok_or_else(|| Error::invalid("operator", "table backing has no entries"))?;
                Universe::new(full.input.iter().cloned())?
            }
            (None, BackingSpec::Partition { .. }) => {
                return Err(Error::invalid(
                    "operator",
                    "partition backing requires an explicit universe",
                ))
            }
        };
        match &self.backing {
            BackingSpec::Partition { partition, mode } => {
                let partition = Partition::from_blocks(
                    &universe,
                    partition.blocks.iter().map(|b| b.iter().map(String::as_str)),
                )?;
                Ok(match mode {
                    PartitionMode::Upper => SetOperator::upper_of(partition),
                    PartitionMode::Lower => SetOperator::lower_of(partition),
                })
            }
            BackingSpec::Table { table } => {
                let entries = table
                    .iter()
                    .map(|entry| {
                        let input =
                            Subset::from_names(&universe, entry.input.iter().map(String::as_str))?;
                        let output =
                            Subset::from_names(&universe, entry.out.iter().map(String::as_str))?;
                        Ok((input, output))
                    })
                    .collect::<Result<Vec<_>>>()?;
                SetOperator::from_table(&universe, entries)
            }
        }
    }

    pub fn from_operator(op: &SetOperator) -> Result<OperatorFile> {
        let universe = op.universe();
        let backing = match op.partition() {
            Some(_) => {
                // Partition-backed operators re-tabulate so the file is
                // self-contained regardless of the original mode.
                let tabulated = op.to_table()?;
                table_backing(&tabulated)?
            }
            None => table_backing(op)?,
        };
        Ok(OperatorFile {
            universe: Some(universe.elements().to_vec()),
            backing,
        })
    }
}

fn table_backing(op: &SetOperator) -> Result<BackingSpec> {
    let universe = op.universe();
    let mut table = Vec::with_capacity(1 << universe.len());
    for mask in 0..(1u64 << universe.len()) {
        let input = Subset::from_mask(universe, mask);
        let output = op.apply(&input)?;
        table.push(TableEntry {
            input: input.names().iter().map(|n| n.to_string()).collect(),
            out: output.names().iter().map(|n| n.to_string()).collect(),
        });
    }
    Ok(BackingSpec::Table { table })
}

/// `{"map": {"a": "p", ...}}`
#[derive(Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub map: BTreeMap<String, String>,
}

impl MapFile {
    pub fn load(path: &Path, source: &Universe, target: &Universe) -> Result<TotalMap> {
        let text = read_file(path)?;
        let file: MapFile = parse_json(path, &text)?;
        TotalMap::from_pairs(
            source,
            target,
            file.map.iter().map(|(k, v)| (k.as_str(), v.as_str())),
        )
        .map_err(|e| Error::invalid("file", format!("{}: {e}", path.display())))
    }

    pub fn from_map(map: &TotalMap) -> MapFile {
        let pairs = (0..map.source().len())
            .map(|i| {
                (
                    map.source().name(i).to_string(),
                    map.target().name(map.apply_index(i)).to_string(),
                )
            })
            .collect();
        MapFile { map: pairs }
    }
}

/// `{"objects": {...}, "attributes": {...}, "values": {...}}`
#[derive(Debug, Serialize, Deserialize)]
pub struct HomFile {
    pub objects: BTreeMap<String, String>,
    pub attributes: BTreeMap<String, String>,
    pub values: BTreeMap<String, String>,
}

impl HomFile {
    pub fn load(
        path: &Path,
        source: &InfoSystem,
        target: &InfoSystem,
    ) -> Result<crate::infosys::OadHom> {
        let text = read_file(path)?;
        let file: HomFile = parse_json(path, &text)?;
        let objects = TotalMap::from_pairs(
            source.objects(),
            target.objects(),
            file.objects.iter().map(|(k, v)| (k.as_str(), v.as_str())),
        )
        .map_err(|e| Error::invalid("file", format!("{}: {e}", path.display())))?;
        crate::infosys::OadHom::new(
            source.clone(),
            target.clone(),
            objects,
            file.attributes,
            file.values,
        )
        .map_err(|e| Error::invalid("file", format!("{}: {e}", path.display())))
    }

    pub fn from_hom(hom: &crate::infosys::OadHom) -> HomFile {
        HomFile {
            objects: MapFile::from_map(hom.objects_map()).map,
            attributes: hom.attribute_map().clone(),
            values: hom.value_map().clone(),
        }
    }
}

/// Reads an information system from CSV: header `object,<attr1>,...`,
/// one row per object, values as opaque strings.
pub fn load_csv_system(path: &Path) -> Result<InfoSystem> {
    let complain = |msg: String| Error::invalid("file", format!("{}: {msg}", path.display()));
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| complain(e.to_string()))?;
    let headers = reader
        .headers()
        .map_err(|e| complain(e.to_string()))?
        .clone();
    let mut header_iter = headers.iter();
    match header_iter.next() {
        Some("object") => {}
        Some(other) => {
            return Err(complain(format!(
                "first header cell must be `object`, found `{other}`"
            )))
        }
        None => return Err(complain("empty header row".to_string())),
    }
    let attributes: Vec<String> = header_iter.map(str::to_string).collect();

    let mut names = Vec::new();
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| complain(e.to_string()))?;
        let mut cells = record.iter();
        let object = cells
            .next()
            .ok_or_else(|| complain(format!("row {} is empty", line + 2)))?;
        let values: Vec<String> = cells.map(str::to_string).collect();
        if values.len() != attributes.len() {
            return Err(complain(format!(
                "row {} has {} values for {} attributes",
                line + 2,
                values.len(),
                attributes.len()
            )));
        }
        names.push(object.to_string());
        rows.push(values);
    }
    let objects = Universe::new(names).map_err(|e| complain(format!("object column: {e}")))?;
    InfoSystem::from_rows(objects, attributes, rows).map_err(|e| complain(e.to_string()))
}

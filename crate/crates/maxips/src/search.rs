//! Exhaustive search drivers: minimum-diameter tables per cardinality and
//! the strongly-maximal triangle sweep.
//!
//! Completeness argument: every maximal integral point set of diameter at
//! most D contains a non-degenerate triangle whose longest side is at most
//! D, and that triangle is Heronian. Enumerating all Heronian triangles
//! with maximum side up to D, all their embedding classes, and all maximal
//! cliques of their extension graphs therefore discovers every maximal set
//! of diameter up to D. Discovered sets may well exceed D in diameter; the
//! table keeps them as witnesses but marks a row proven only when its
//! minimum is within the exhaustive bound.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::{BufRead, Write};
use std::path::Path;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::canon::CanonicalForm;
use crate::cliques::{build_graph, maximal_cliques};
use crate::extension::has_rational_extension;
use crate::geometry::{position_class, PositionClass};
use crate::heronian::{embeddings, heronian_triangles, is_right_triangle, HeronTriangle};
use crate::{Error, Int, Result};

/// Position restriction applied to discovered sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Arbitrary,
    /// No three points collinear.
    SemiGeneral,
    /// No three collinear and no four concyclic.
    General,
}

impl Filter {
    pub fn accepts(&self, class: PositionClass) -> bool {
        match self {
            Filter::Arbitrary => true,
            Filter::SemiGeneral => {
                matches!(class, PositionClass::SemiGeneral | PositionClass::General)
            }
            Filter::General => matches!(class, PositionClass::General),
        }
    }
}

impl std::fmt::Display for Filter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Filter::Arbitrary => write!(f, "arbitrary"),
            Filter::SemiGeneral => write!(f, "semi-general"),
            Filter::General => write!(f, "general"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Exhaustive seed-triangle bound; the search is complete for sets of
    /// diameter up to this value.
    pub max_diameter: u64,
    pub filter: Filter,
    /// Rows below this cardinality are dropped from the table.
    pub min_cardinality: usize,
}

impl SearchConfig {
    pub fn new(max_diameter: u64, filter: Filter) -> Self {
        SearchConfig { max_diameter, filter, min_cardinality: 3 }
    }
}

/// One discovered maximal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetRecord {
    pub cardinality: usize,
    pub diameter: Int,
    pub canonical: CanonicalForm,
}

/// Per-cardinality minimum diameter with witness.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub cardinality: usize,
    pub min_diameter: Int,
    pub witness: CanonicalForm,
    /// True iff min_diameter <= the exhaustive bound, i.e. the row is a
    /// proven minimum rather than an upper bound.
    pub proven: bool,
}

#[derive(Debug, Clone)]
pub struct DiameterTable {
    pub max_diameter: u64,
    pub filter: Filter,
    pub rows: BTreeMap<usize, TableRow>,
}

impl DiameterTable {
    /// Tab-separated rows: cardinality, min diameter, relation ("=" proven,
    /// "<=" bound), exhaustive bound, canonical witness.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for row in self.rows.values() {
            let rel = if row.proven { "=" } else { "<=" };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                row.cardinality,
                row.min_diameter,
                rel,
                self.max_diameter,
                row.witness.serialize()
            ));
        }
        out
    }
}

/// All maximal sets discovered from the seed triangles of one diameter,
/// filtered, as (cardinality, diameter, canonical) records.
fn sets_for_diameter(d: u64, filter: Filter) -> Result<Vec<SetRecord>> {
    let triangles = heronian_triangles(&Int::from(d))?;
    let per_triangle = |t: &HeronTriangle| -> Result<Vec<SetRecord>> {
        let mut found = Vec::new();
        for e in embeddings(t, true)? {
            let g = build_graph(&e)?;
            for m in maximal_cliques(&g)? {
                if filter != Filter::Arbitrary && !filter.accepts(position_class(&m.points)?) {
                    continue;
                }
                found.push(SetRecord {
                    cardinality: m.cardinality,
                    diameter: m.diameter,
                    canonical: m.canonical,
                });
            }
        }
        Ok(found)
    };
    #[cfg(feature = "parallel")]
    let nested: Vec<Vec<SetRecord>> =
        triangles.par_iter().map(per_triangle).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let nested: Vec<Vec<SetRecord>> =
        triangles.iter().map(per_triangle).collect::<Result<_>>()?;
    Ok(nested.into_concat())
}

trait Concat<T> {
    fn into_concat(self) -> Vec<T>;
}

impl<T> Concat<T> for Vec<Vec<T>> {
    fn into_concat(self) -> Vec<T> {
        self.into_iter().flatten().collect()
    }
}

/// Exhaustive minimum-diameter search without checkpointing.
pub fn search_maximal_sets(cfg: &SearchConfig) -> Result<DiameterTable> {
    search_maximal_sets_resumable(cfg, None)
}

/// As [`search_maximal_sets`], persisting per-diameter progress to an
/// append-only record file. A line "done\td" marks diameter d complete;
/// "set\td\tcard\tdiam\tcanonical" records a discovery. Rerunning with the
/// same path resumes after the last completed diameter.
pub fn search_maximal_sets_resumable(
    cfg: &SearchConfig,
    checkpoint: Option<&Path>,
) -> Result<DiameterTable> {
    let mut records: Vec<SetRecord> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut done: HashSet<u64> = HashSet::new();
    if let Some(path) = checkpoint {
        if path.exists() {
            load_checkpoint(path, &mut records, &mut seen, &mut done)?;
        }
    }
    let mut log = match checkpoint {
        Some(path) => {
            Some(std::fs::OpenOptions::new().create(true).append(true).open(path)?)
        }
        None => None,
    };
    for d in 1..=cfg.max_diameter {
        if done.contains(&d) {
            continue;
        }
        let mut fresh = Vec::new();
        for rec in sets_for_diameter(d, cfg.filter)? {
            if seen.insert(rec.canonical.serialize()) {
                fresh.push(rec);
            }
        }
        if let Some(f) = log.as_mut() {
            for rec in &fresh {
                writeln!(
                    f,
                    "set\t{d}\t{}\t{}\t{}",
                    rec.cardinality,
                    rec.diameter,
                    rec.canonical.serialize()
                )?;
            }
            writeln!(f, "done\t{d}")?;
            f.flush()?;
        }
        records.extend(fresh);
    }
    Ok(assemble_table(cfg, records))
}

fn load_checkpoint(
    path: &Path,
    records: &mut Vec<SetRecord>,
    seen: &mut HashSet<String>,
    done: &mut HashSet<u64>,
) -> Result<()> {
    let file = std::fs::File::open(path)?;
    let mut staged: HashMap<u64, Vec<SetRecord>> = HashMap::new();
    for (lineno, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split('\t').collect();
        let bad = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.into() };
        match parts.as_slice() {
            ["done", d] => {
                let d: u64 = d.parse().map_err(|_| bad("bad diameter"))?;
                done.insert(d);
            }
            ["set", d, card, diam, canon] => {
                let d: u64 = d.parse().map_err(|_| bad("bad diameter"))?;
                let cardinality: usize = card.parse().map_err(|_| bad("bad cardinality"))?;
                let diameter: Int = diam.parse().map_err(|_| bad("bad diameter value"))?;
                let canonical = CanonicalForm::parse(canon)?;
                staged.entry(d).or_default().push(SetRecord {
                    cardinality,
                    diameter,
                    canonical,
                });
            }
            _ => return Err(bad("unrecognized record")),
        }
    }
    // Only records of completed diameters are trusted; an interrupted
    // diameter is recomputed from scratch.
    for (d, recs) in staged {
        if !done.contains(&d) {
            continue;
        }
        for rec in recs {
            if seen.insert(rec.canonical.serialize()) {
                records.push(rec);
            }
        }
    }
    Ok(())
}

fn assemble_table(cfg: &SearchConfig, records: Vec<SetRecord>) -> DiameterTable {
    let mut rows: BTreeMap<usize, TableRow> = BTreeMap::new();
    for rec in records {
        if rec.cardinality < cfg.min_cardinality {
            continue;
        }
        match rows.get_mut(&rec.cardinality) {
            Some(row) => {
                if (rec.diameter.clone(), rec.canonical.clone())
                    < (row.min_diameter.clone(), row.witness.clone())
                {
                    row.min_diameter = rec.diameter;
                    row.witness = rec.canonical;
                }
            }
            None => {
                rows.insert(
                    rec.cardinality,
                    TableRow {
                        cardinality: rec.cardinality,
                        min_diameter: rec.diameter,
                        witness: rec.canonical,
                        proven: false,
                    },
                );
            }
        }
    }
    for row in rows.values_mut() {
        row.proven = row.min_diameter <= Int::from(cfg.max_diameter);
    }
    DiameterTable { max_diameter: cfg.max_diameter, filter: cfg.filter, rows }
}

/// All strongly maximal integral triangles with longest side at most the
/// bound: non-right Heronian triangles admitting no rational extension
/// point. Each paired with its canonical coordinates.
pub fn search_maximal_triangles(
    max_diameter: u64,
) -> Result<Vec<(HeronTriangle, CanonicalForm)>> {
    let mut out = Vec::new();
    for d in 1..=max_diameter {
        let triangles: Vec<HeronTriangle> = heronian_triangles(&Int::from(d))?
            .into_iter()
            .filter(|t| !is_right_triangle(t))
            .collect();
        let check = |t: &HeronTriangle| -> Result<Option<(HeronTriangle, CanonicalForm)>> {
            let embs = embeddings(t, true)?;
            let e = embs.first().ok_or_else(|| {
                Error::Internal(format!("Heronian triangle {t} has no embedding"))
            })?;
            if has_rational_extension(e)? {
                return Ok(None);
            }
            let nf = crate::canon::normal_form(&e.point_set())?;
            Ok(Some((t.clone(), nf)))
        };
        #[cfg(feature = "parallel")]
        let found: Vec<Option<(HeronTriangle, CanonicalForm)>> =
            triangles.par_iter().map(check).collect::<Result<_>>()?;
        #[cfg(not(feature = "parallel"))]
        let found: Vec<Option<(HeronTriangle, CanonicalForm)>> =
            triangles.iter().map(check).collect::<Result<_>>()?;
        out.extend(found.into_iter().flatten());
    }
    Ok(out)
}

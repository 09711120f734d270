//! Verbs on finite spaces read from JSON files.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use gtsep::gt::{census, validate_gt, SpaceFile};
use gtsep::rational::dyadics;
use gtsep::urysohn::{
    clopen_separator_exists, decide_gul_pair, decide_statement, decide_ul_pair, effective_witness, is_u_normal,
    ladder_from_function, LadderMode, Statement,
};
use gtsep::{FiniteGT, PointSet};

use crate::report::Report;

pub fn read_space_file(path: &Path) -> Result<SpaceFile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not a space document", path.display()))
}

pub fn read_space(path: &Path) -> Result<FiniteGT> {
    Ok(read_space_file(path)?.to_space()?)
}

/// Point lists such as `0,2`, `[0, 2]`, `{0,2}`; `[]`, `{}`, `empty` or an
/// empty string for the empty set.
pub fn parse_points(text: &str, n: usize) -> Result<PointSet> {
    let inner = text.trim().trim_start_matches(['[', '{']).trim_end_matches([']', '}']).trim();
    if inner.is_empty() || inner == "empty" {
        return Ok(PointSet::EMPTY);
    }
    let mut points = Vec::new();
    for tok in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let p: usize = tok.parse().with_context(|| format!("`{tok}` is not a point index"))?;
        if p >= n {
            bail!("point {p} out of range for {n} points");
        }
        points.push(p);
    }
    Ok(PointSet::from_points(points))
}

/// Errors from a single decision go into the report instead of aborting it.
fn outcome<T: Serialize>(r: gtsep::Result<T>) -> Value {
    match r {
        Ok(v) => serde_json::to_value(v).expect("serializable"),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn validate(path: &Path) -> Result<Report> {
    let file = read_space_file(path)?;
    let report = validate_gt(&file.family()?, file.points)?;
    let out = Report::new().field("points", file.points).field("validation", &report);
    Ok(if report.is_gt { out } else { out.negative() })
}

pub fn props(path: &Path, u_normal_max: usize) -> Result<Report> {
    let x = read_space(path)?;
    let mut statements = serde_json::Map::new();
    for s in Statement::ALL {
        statements.insert(s.to_string(), outcome(decide_statement(&x, s)));
    }
    let pairs = x.disjoint_closed_pairs();
    let clopen = pairs.iter().all(|&(a, b)| clopen_separator_exists(&x, a, b));
    Ok(Report::new()
        .field("space", SpaceFile::from(&x))
        .field("validation", x.validate())
        .field("separation", x.separation_profile())
        .field("clopen_separation", clopen)
        .field("statements", statements)
        .field("effective_normality", outcome(effective_witness(&x)))
        .field("u_normality", outcome(is_u_normal(&x, u_normal_max))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessMode {
    Ul,
    Gul,
}

pub fn witness(path: &Path, a: &str, b: &str, mode: WitnessMode) -> Result<Report> {
    let x = read_space(path)?;
    let (a, b) = (parse_points(a, x.points())?, parse_points(b, x.points())?);
    let (found, ladder_mode) = match mode {
        WitnessMode::Ul => (decide_ul_pair(&x, a, b)?, LadderMode::Pair),
        WitnessMode::Gul => (decide_gul_pair(&x, a, b)?, LadderMode::Single),
    };
    let report = Report::new()
        .field("a", a)
        .field("b", b)
        .field("mode", if mode == WitnessMode::Ul { "ul" } else { "gul" });
    Ok(match found {
        Some(f) => {
            let ladder = ladder_from_function(&x, &f, ladder_mode, &dyadics(2))?;
            report.field("found", true).field("function", &f).field("ladder", ladder)
        }
        None => report.field("found", false).negative(),
    })
}

pub fn tau(path: &Path) -> Result<Report> {
    let x = read_space(path)?;
    let t = x.generated_topology()?;
    let added: Vec<PointSet> = t.opens().iter().copied().filter(|s| !x.is_open(*s)).collect();
    Ok(Report::new()
        .field("space", SpaceFile::from(&x))
        .field("topology", SpaceFile::from(&t))
        .field("added", added))
}

pub fn product(left: &Path, right: &Path) -> Result<Report> {
    let (x, y) = (read_space(left)?, read_space(right)?);
    let p = x.product(&y)?;
    let mut statements = serde_json::Map::new();
    for s in [Statement::Ul, Statement::Gul] {
        let holds = |z: &FiniteGT| outcome(decide_statement(z, s).map(|v| v.holds));
        statements.insert(s.to_string(), json!({ "left": holds(&x), "right": holds(&y), "product": holds(&p) }));
    }
    Ok(Report::new()
        .field("product", SpaceFile::from(&p))
        .field("validation", p.validate())
        .field("statements", statements))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    T0,
    T1,
    T2,
    Normal,
    Topology,
    Ul,
    Gul,
    Tet,
    Gtet,
}

impl Property {
    fn holds(self, x: &FiniteGT) -> bool {
        let decided = |s| decide_statement(x, s).map(|v| v.holds).unwrap_or(false);
        match self {
            Property::T0 => x.separation_profile().t0,
            Property::T1 => x.separation_profile().t1,
            Property::T2 => x.separation_profile().t2,
            Property::Normal => x.is_normal(),
            Property::Topology => x.validate().is_topology,
            Property::Ul => decided(Statement::Ul),
            Property::Gul => decided(Statement::Gul),
            Property::Tet => decided(Statement::Tet),
            Property::Gtet => decided(Statement::Gtet),
        }
    }
}

pub fn census_verb(points: usize, filter: Option<Property>, out: Option<&Path>) -> Result<Report> {
    let all = census(points)?;
    let keep: Vec<bool> = match filter {
        Some(p) => gtsep::par::map(&all, |x| p.holds(x)),
        None => vec![true; all.len()],
    };
    let matching: Vec<&FiniteGT> = all.iter().zip(&keep).filter(|(_, k)| **k).map(|(x, _)| x).collect();
    if let Some(path) = out {
        let mut file = fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
        for x in &matching {
            serde_json::to_writer(&mut file, &SpaceFile::from(*x))?;
            writeln!(file)?;
        }
    }
    let filter_name = filter.map(|p| p.to_possible_value().expect("no skipped variants").get_name().to_string());
    Ok(Report::new()
        .field("points", points)
        .field("count", all.len())
        .field("where", filter_name)
        .field("matching", matching.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_lists() {
        assert_eq!(parse_points("[0, 2]", 3).unwrap(), PointSet::from_points([0, 2]));
        assert_eq!(parse_points("{1}", 3).unwrap(), PointSet::singleton(1));
        assert_eq!(parse_points("", 3).unwrap(), PointSet::EMPTY);
        assert!(parse_points("3", 3).is_err());
        assert!(parse_points("a", 3).is_err());
    }
}

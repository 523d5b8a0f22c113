//! JSON shapes read and written by the command-line tool.
//!
//! Complexes are read as either
//! `{"ordered": {"maximal_chains": [[0,1,2],[1,2,3]], "vertex_count": 4}}`
//! (`vertex_count` optional) or
//! `{"generated": {"generators": {"0": ["a","b"], "1": ["e"]}, "faces": {"e": [["d",0,"b"],["d",1,"a"]]}}}`,
//! where a face target is a generator label or a degenerate key such as
//! `s1s0(a)`.
//!
//! Reports are plain structs, so field order in JSON is declaration order.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, DegeneracyWord, GeneratedComplex, OrderedComplex, SimplexKey, SimplicialSet};
use crate::error::{Error, Result};
use crate::homotopy::{comonad_level, chain_count, homology, is_homology_point, HomologyGroup, HOMOLOGY_CAVEAT};
use crate::rigid::{MappingSpace, SimplicialCategoryPresentation};
use crate::verify::CheckResult;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ComplexInput {
    Ordered {
        maximal_chains: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertex_count: Option<usize>,
    },
    Generated {
        generators: BTreeMap<String, Vec<String>>,
        faces: BTreeMap<String, Vec<(String, usize, String)>>,
    },
}

/// Reads a complex from its JSON description.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let input: ComplexInput = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    input.build()
}

impl ComplexInput {
    pub fn build(&self) -> Result<Complex> {
        match self {
            ComplexInput::Ordered { maximal_chains, vertex_count } => {
                let c = match vertex_count {
                    Some(n) => OrderedComplex::with_vertex_count(*n, maximal_chains)?,
                    None => OrderedComplex::from_maximal_chains(maximal_chains)?,
                };
                Ok(Complex::Ordered(c))
            }
            ComplexInput::Generated { generators, faces } => build_generated(generators, faces).map(Complex::Generated),
        }
    }
}

fn build_generated(
    generators: &BTreeMap<String, Vec<String>>,
    faces: &BTreeMap<String, Vec<(String, usize, String)>>,
) -> Result<GeneratedComplex> {
    let mut labels: Vec<Vec<String>> = Vec::new();
    for (key, names) in generators {
        let d: usize = key.parse().map_err(|_| Error::Parse(format!("generator dimension `{key}` is not a number")))?;
        if labels.len() <= d {
            labels.resize(d + 1, Vec::new());
        }
        labels[d] = names.clone();
    }
    let mut where_is: HashMap<&str, (usize, usize)> = HashMap::new();
    for (d, names) in labels.iter().enumerate() {
        for (g, name) in names.iter().enumerate() {
            if where_is.insert(name, (d, g)).is_some() {
                return Err(Error::Parse(format!("generator label `{name}` is used twice")));
            }
        }
    }
    if let Some(unknown) = faces.keys().find(|k| !where_is.contains_key(k.as_str())) {
        return Err(Error::Parse(format!("faces given for unknown generator `{unknown}`")));
    }
    let mut table = vec![Vec::new(); labels.len()];
    for (d, names) in labels.iter().enumerate().skip(1) {
        for name in names {
            let entries = faces.get(name).ok_or_else(|| Error::Parse(format!("generator `{name}` has no faces")))?;
            let mut row: Vec<Option<SimplexKey>> = vec![None; d + 1];
            for (op, i, target) in entries {
                if op != "d" {
                    return Err(Error::Parse(format!("face operator must be \"d\", got \"{op}\"")));
                }
                let slot = row.get_mut(*i).ok_or(Error::OperatorOutOfRange { index: *i, dim: d })?;
                let key = parse_key(target, &where_is)?;
                if key.dim != d - 1 {
                    return Err(Error::Parse(format!("face {i} of `{name}` is `{target}` of dimension {}, expected {}", key.dim, d - 1)));
                }
                if slot.replace(key).is_some() {
                    return Err(Error::Parse(format!("face {i} of `{name}` is given twice")));
                }
            }
            let row = row
                .into_iter()
                .enumerate()
                .map(|(i, k)| k.ok_or_else(|| Error::Parse(format!("face {i} of `{name}` is missing"))))
                .collect::<Result<Vec<_>>>()?;
            table[d].push(row);
        }
    }
    let counts = labels.iter().map(Vec::len).collect();
    GeneratedComplex::from_parts(counts, table, labels)
}

/// `label` or `s{i}s{j}...(label)`.
fn parse_key(text: &str, where_is: &HashMap<&str, (usize, usize)>) -> Result<SimplexKey> {
    let (word, label) = match text.find('(') {
        Some(open) if text.ends_with(')') => (&text[..open], &text[open + 1..text.len() - 1]),
        _ => ("", text),
    };
    let &(base, gen) = where_is.get(label).ok_or_else(|| Error::Parse(format!("unknown simplex `{label}`")))?;
    let mut indices = Vec::new();
    for part in word.split('s').skip(1) {
        indices.push(part.parse().map_err(|_| Error::Parse(format!("bad degeneracy word `{word}`")))?);
    }
    if !word.is_empty() && (!word.starts_with('s') || indices.is_empty()) {
        return Err(Error::Parse(format!("bad degeneracy word `{word}`")));
    }
    let word = DegeneracyWord::from_word(&indices, base)?;
    Ok(SimplexKey { dim: base + word.len(), gen, word })
}

/// Anything that can be printed as JSON or as a plain table.
pub trait Report: Serialize {
    fn table(&self) -> String;

    fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
            s.push('\n');
            s
        } else {
            self.table()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplexEntry {
    pub beads: Vec<usize>,
    pub vertices: Vec<usize>,
    /// Flag sets as necklace vertex indices.
    pub flag: Vec<Vec<usize>>,
    /// `d_0 .. d_n` as keys `x{dim}_{index}` into `simplices`, degenerate
    /// ones written `s{i}...(x{dim}_{index})`.
    pub faces: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MappingSpaceReport {
    pub source: usize,
    pub target: usize,
    pub truncated: bool,
    pub f_vector: Vec<usize>,
    pub simplices: Vec<Vec<SimplexEntry>>,
}

pub fn mapping_space_report(space: &MappingSpace) -> MappingSpaceReport {
    let c = space.complex();
    let simplices = (0..space.f_vector().len())
        .map(|d| {
            space
                .simplices(d)
                .iter()
                .enumerate()
                .map(|(g, m)| SimplexEntry {
                    beads: m.map().necklace().beads().to_vec(),
                    vertices: m.map().vertices().to_vec(),
                    flag: m.flag().iter().map(|s| s.to_vec()).collect(),
                    faces: if d == 0 { Vec::new() } else { c.faces_of(d, g).iter().map(|k| k.to_string()).collect() },
                })
                .collect()
        })
        .collect();
    MappingSpaceReport {
        source: space.source(),
        target: space.target(),
        truncated: space.truncated(),
        f_vector: space.f_vector(),
        simplices,
    }
}

impl Report for MappingSpaceReport {
    fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "mapping space ({}, {})  f-vector {:?}{}", self.source, self.target, self.f_vector, if self.truncated { "  (truncated)" } else { "" });
        for (d, level) in self.simplices.iter().enumerate() {
            for (g, e) in level.iter().enumerate() {
                let flag: Vec<String> = e.flag.iter().map(|f| format!("{f:?}")).collect();
                let _ = writeln!(s, "x{d}_{g}\tbeads {:?}\tvertices {:?}\tflag {}\tfaces {}", e.beads, e.vertices, flag.join(" ⊆ "), e.faces.join(" "));
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub f_vector: Vec<usize>,
    pub groups: Vec<HomologyGroup>,
    pub homology_point: bool,
    pub caveat: &'static str,
}

pub fn homology_report<S: SimplicialSet + ?Sized>(s: &S, dmax: usize) -> Result<HomologyReport> {
    Ok(HomologyReport {
        f_vector: s.f_vector(),
        groups: homology(s, dmax)?.groups,
        homology_point: is_homology_point(s)?,
        caveat: HOMOLOGY_CAVEAT,
    })
}

impl Report for HomologyReport {
    fn table(&self) -> String {
        let mut s = format!("f-vector {:?}\ndim\tbetti\ttorsion\n", self.f_vector);
        for g in &self.groups {
            let _ = writeln!(s, "{}\t{}\t{:?}", g.dim, g.betti, g.torsion);
        }
        let _ = writeln!(s, "homology point: {}\nnote: {}", self.homology_point, self.caveat);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub source: usize,
    pub target: usize,
    pub f_vector: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionEntry {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub dim: usize,
    /// Generator index in `(b, c)`.
    pub g: usize,
    /// Generator index in `(a, b)`.
    pub f: usize,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategorifyReport {
    pub objects: usize,
    pub spaces: Vec<SpaceSummary>,
    pub composition: Vec<CompositionEntry>,
    pub law_violations: Vec<String>,
}

pub fn categorify_report(cat: &SimplicialCategoryPresentation) -> Result<CategorifyReport> {
    let spaces = cat
        .spaces()
        .map(|(&(a, b), sp)| SpaceSummary { source: a, target: b, f_vector: sp.f_vector() })
        .collect();
    let mut keys: Vec<_> = cat.composition_table().iter().collect();
    keys.sort();
    let composition = keys
        .into_iter()
        .map(|(k, v)| CompositionEntry { a: k.a, b: k.b, c: k.c, dim: k.dim, g: k.g, f: k.f, result: v.to_string() })
        .collect();
    let law_violations = cat.check_laws()?.iter().map(|v| v.to_string()).collect();
    Ok(CategorifyReport { objects: cat.object_count(), spaces, composition, law_violations })
}

impl Report for CategorifyReport {
    fn table(&self) -> String {
        let mut s = format!("objects {}\nsource\ttarget\tf-vector\n", self.objects);
        for sp in &self.spaces {
            let _ = writeln!(s, "{}\t{}\t{:?}", sp.source, sp.target, sp.f_vector);
        }
        let _ = writeln!(s, "composites {}\nlaw violations {}", self.composition.len(), self.law_violations.len());
        for v in &self.law_violations {
            let _ = writeln!(s, "  {v}");
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComonadRow {
    pub n: usize,
    pub l: usize,
    pub i: usize,
    pub j: usize,
    pub comonad_level: u64,
    pub chain_count: u64,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComonadReport {
    pub rows: Vec<ComonadRow>,
    pub all_equal: bool,
}

/// Compares literal resolution levels with chain counts for `l <= lmax`.
pub fn comonad_report(n: usize, lmax: usize) -> Result<ComonadReport> {
    let mut rows = Vec::new();
    for l in 0..=lmax {
        for i in 0..=n {
            for j in i..=n {
                let level = comonad_level(n, l, i, j)?.count as u64;
                let chains = if i == j { 1 } else { chain_count(j - i - 1, l) };
                rows.push(ComonadRow { n, l, i, j, comonad_level: level, chain_count: chains, equal: level == chains });
            }
        }
    }
    let all_equal = rows.iter().all(|r| r.equal);
    Ok(ComonadReport { rows, all_equal })
}

impl Report for ComonadReport {
    fn table(&self) -> String {
        let mut s = String::from("n\tl\ti\tj\tlevel\tchains\tresult\n");
        for r in &self.rows {
            let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}\t{}\t{}", r.n, r.l, r.i, r.j, r.comonad_level, r.chain_count, if r.equal { "PASS" } else { "FAIL" });
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn new(checks: Vec<CheckResult>) -> Self {
        Self { passed: checks.iter().all(|c| c.passed), checks }
    }
}

impl Report for VerifyReport {
    fn table(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(s, "{} {:<10} {:>6} ms  {}", if c.passed { "PASS" } else { "FAIL" }, c.suite, c.millis, c.description);
            for f in &c.failures {
                let _ = writeln!(s, "    {f}");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigid::mapping_space;

    #[test]
    fn ordered_input() {
        let c = parse_complex(r#"{"ordered":{"maximal_chains":[[0,1,2],[1,2,3]]}}"#).unwrap();
        assert_eq!(c.f_vector(), vec![4, 5, 2]);
        let c = parse_complex(r#"{"ordered":{"maximal_chains":[[0,1]],"vertex_count":3}}"#).unwrap();
        assert_eq!(c.vertex_count(), 3);
    }

    #[test]
    fn generated_input_with_degenerate_face() {
        let text = r#"{"generated":{
            "generators":{"0":["v"],"1":["e"],"2":["t"]},
            "faces":{"e":[["d",0,"v"],["d",1,"v"]],"t":[["d",0,"e"],["d",1,"s0(v)"],["d",2,"e"]]}}}"#;
        let c = parse_complex(text).unwrap();
        assert_eq!(c.f_vector(), vec![1, 1, 1]);
        assert_eq!(homology(&c, 2).unwrap().groups[1].torsion, vec![2]);
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            r#"{"ordered":{}}"#,
            r#"{"generated":{"generators":{"0":["v"],"1":["e"]},"faces":{}}}"#,
            r#"{"generated":{"generators":{"0":["v"],"1":["e"]},"faces":{"e":[["d",0,"v"],["d",0,"v"]]}}}"#,
            r#"{"generated":{"generators":{"0":["v"],"1":["e"]},"faces":{"e":[["d",0,"w"],["d",1,"v"]]}}}"#,
            r#"{"generated":{"generators":{"0":["v"],"1":["e"]},"faces":{"e":[["d",0,"s0(v)"],["d",1,"v"]]}}}"#,
            r#"{"ordered":{"maximal_chains":[[0,1],[1,0]]}}"#,
        ] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn mapping_space_json_fields_in_order() {
        let sp = mapping_space(&OrderedComplex::simplex(2), 0, 2).unwrap();
        let json = serde_json::to_string(&mapping_space_report(&sp)).unwrap();
        assert!(json.starts_with(r#"{"source":0,"target":2,"truncated":false,"f_vector":[2,1],"simplices":"#), "{json}");
        assert!(json.contains(r#"{"beads":[2],"vertices":[0,1,2],"flag":[[0,2],[0,1,2]],"faces":["x0_"#), "{json}");
    }

    #[test]
    fn comonad_table_all_equal() {
        let r = comonad_report(3, 2).unwrap();
        assert!(r.all_equal);
        assert_eq!(r.rows.len(), 30);
    }
}

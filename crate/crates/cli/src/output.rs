//! Serialization of characters and check reports.

use qchar_core::characters::GradedCharacter;
use qchar_core::poly::QPoly;
use qchar_core::symfun::Partition;
use qchar_core::verify::CheckReport;
use serde::Serialize;
use serde_json::Value;

use crate::Format;

const SCHEMA: u32 = 1;

/// `[q-exponent, integer]` pairs, highest exponent first. Integers that do
/// not fit in 64 bits are written as strings.
fn coefficient(c: &QPoly) -> Vec<(i64, Value)> {
    c.terms()
        .rev()
        .map(|(e, k)| {
            let text = k.to_string();
            let v = text.parse::<i64>().map(Value::from).unwrap_or(Value::String(text));
            (e, v)
        })
        .collect()
}

#[derive(Serialize)]
struct Entry {
    key: Vec<i32>,
    coefficient: Vec<(i64, Value)>,
}

#[derive(Serialize)]
struct CharacterOut {
    schema: u32,
    rank: usize,
    level: usize,
    /// One list per level.
    n: Vec<Vec<u32>>,
    top: Vec<i32>,
    schur: Vec<Entry>,
    multiplicities: Vec<Entry>,
    monomials: Vec<Entry>,
}

fn sorted_entries<'a>(items: impl Iterator<Item = (Vec<i32>, &'a QPoly)>) -> Vec<(Vec<i32>, &'a QPoly)> {
    let mut v: Vec<_> = items.collect();
    v.sort_by(|a, b| b.0.cmp(&a.0));
    v
}

struct Tables<'a> {
    schur: Vec<(Vec<i32>, &'a QPoly)>,
    multiplicities: Vec<(Vec<i32>, QPoly)>,
    monomials: Vec<(Vec<i32>, &'a QPoly)>,
}

fn tables(ch: &GradedCharacter) -> Tables<'_> {
    let nv = ch.n.rank() + 1;
    let schur = sorted_entries(ch.schur.iter().map(|(p, c)| (p.padded(nv), c)));
    let mut multiplicities: Vec<_> = ch.multiplicities().into_iter().map(|(p, c)| (p.padded(nv), c)).collect();
    multiplicities.sort_by(|a, b| b.0.cmp(&a.0));
    let monomials = sorted_entries(ch.chi.terms().map(|(e, c)| (e.clone(), c)));
    Tables { schur, multiplicities, monomials }
}

pub fn character(ch: &GradedCharacter, format: Format) -> String {
    let nv = ch.n.rank() + 1;
    let top = Partition::from_weight(&ch.n.top_weight()).padded(nv);
    let t = tables(ch);
    match format {
        Format::Json => {
            let entries = |v: &[(Vec<i32>, &QPoly)]| {
                v.iter().map(|(k, c)| Entry { key: k.clone(), coefficient: coefficient(c) }).collect()
            };
            let out = CharacterOut {
                schema: SCHEMA,
                rank: ch.n.rank(),
                level: ch.n.level(),
                n: ch.n.levels().to_vec(),
                top,
                schur: entries(&t.schur),
                multiplicities: t
                    .multiplicities
                    .iter()
                    .map(|(k, c)| Entry { key: k.clone(), coefficient: coefficient(c) })
                    .collect(),
                monomials: entries(&t.monomials),
            };
            let mut s = serde_json::to_string(&out).expect("character serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["table", "key", "q_exponent", "coefficient"]).expect("in-memory write");
            let mut rows = |table: &str, key: &[i32], c: &QPoly| {
                let key = Partition::format_parts(key);
                for (e, k) in c.terms().rev() {
                    w.write_record([table, &key, &e.to_string(), &k.to_string()]).expect("in-memory write");
                }
            };
            for (k, c) in &t.schur {
                rows("schur", k, c);
            }
            for (k, c) in &t.multiplicities {
                rows("multiplicity", k, c);
            }
            for (k, c) in &t.monomials {
                rows("monomial", k, c);
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
        }
        Format::Text => {
            let mut s = format!(
                "rank {} level {} n = {}\ntop component {}\n\nSchur expansion:\n",
                ch.n.rank(),
                ch.n.level(),
                ch.n,
                Partition::format_parts(&top)
            );
            for (k, c) in &t.schur {
                s.push_str(&format!("  s{}: {}\n", Partition::format_parts(k), c));
            }
            s.push_str("\nmultiplicities:\n");
            for (k, c) in &t.multiplicities {
                s.push_str(&format!("  {}: {}\n", Partition::format_parts(k), c));
            }
            s
        }
    }
}

#[derive(Serialize)]
struct ReportOut<'a> {
    name: &'a str,
    grid: &'a str,
    points: usize,
    failures: usize,
    passed: bool,
    counterexample: Option<&'a str>,
}

#[derive(Serialize)]
struct SuiteOut<'a> {
    schema: u32,
    suite: &'a str,
    passed: bool,
    reports: Vec<ReportOut<'a>>,
}

pub fn reports(suite: &str, reports: &[CheckReport], format: Format) -> String {
    let passed = reports.iter().all(CheckReport::passed);
    match format {
        Format::Json => {
            let out = SuiteOut {
                schema: SCHEMA,
                suite,
                passed,
                reports: reports
                    .iter()
                    .map(|r| ReportOut {
                        name: &r.name,
                        grid: &r.grid,
                        points: r.points.len(),
                        failures: r.failures(),
                        passed: r.passed(),
                        counterexample: r.counterexample.as_deref(),
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string(&out).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "grid", "points", "failures", "passed", "counterexample"])
                .expect("in-memory write");
            for r in reports {
                w.write_record([
                    r.name.as_str(),
                    r.grid.as_str(),
                    &r.points.len().to_string(),
                    &r.failures().to_string(),
                    if r.passed() { "true" } else { "false" },
                    r.counterexample.as_deref().unwrap_or(""),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
        }
        Format::Text => {
            let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
            s.push_str(&format!(
                "suite {}: {} ({} checks)\n",
                suite,
                if passed { "PASS" } else { "FAIL" },
                reports.len()
            ));
            s
        }
    }
}

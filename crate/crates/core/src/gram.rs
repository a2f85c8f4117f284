//! Derivative-overlap Gram matrices and their JSON / CSV forms.
//!
//! Entries are serialized as strings (decimal integer or `p/q`) because the
//! values routinely exceed both `i64` and the exact range of `f64`.

use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::overlap_oracle;
use crate::overlap::{overlap_general, OverlapQuery};
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GramMethod {
    ClosedForm,
    Oracle,
}

impl GramMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            GramMethod::ClosedForm => "closed_form",
            GramMethod::Oracle => "oracle",
        }
    }

    pub fn evaluate(self, query: OverlapQuery) -> ExactScalar {
        match self {
            GramMethod::ClosedForm => overlap_general(query).value,
            GramMethod::Oracle => overlap_oracle(query),
        }
    }
}

/// `entries[n][m] = ∫ Pₙ⁽q⁾ Pₘ⁽ᵏ⁾` for 0 ≤ n ≤ n_max, 0 ≤ m ≤ m_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub q: usize,
    pub k: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub method: GramMethod,
    pub entries: Vec<Vec<ExactScalar>>,
}

#[derive(Serialize, Deserialize)]
struct GramFile {
    q: usize,
    k: usize,
    n_max: usize,
    m_max: usize,
    method: GramMethod,
    entries: Vec<Vec<String>>,
}

impl GramMatrix {
    /// Entries are evaluated in parallel; layout is always row-major by `n`.
    pub fn build(q: usize, k: usize, n_max: usize, m_max: usize, method: GramMethod) -> Self {
        let entries = (0..=n_max)
            .into_par_iter()
            .map(|n| {
                (0..=m_max)
                    .into_par_iter()
                    .map(|m| method.evaluate(OverlapQuery::new(n, m, q, k)))
                    .collect()
            })
            .collect();
        GramMatrix {
            q,
            k,
            n_max,
            m_max,
            method,
            entries,
        }
    }

    pub fn entry(&self, n: usize, m: usize) -> &ExactScalar {
        &self.entries[n][m]
    }

    /// The matrix of the swapped query: rows and columns exchanged along with
    /// (q, k) and (n_max, m_max).
    pub fn transpose(&self) -> GramMatrix {
        let entries = (0..=self.m_max)
            .map(|m| (0..=self.n_max).map(|n| self.entries[n][m].clone()).collect())
            .collect();
        GramMatrix {
            q: self.k,
            k: self.q,
            n_max: self.m_max,
            m_max: self.n_max,
            method: self.method,
            entries,
        }
    }

    fn entry_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(ExactScalar::to_string).collect())
            .collect()
    }

    pub fn write_json<W: Write>(&self, mut writer: W) -> Result<()> {
        let file = GramFile {
            q: self.q,
            k: self.k,
            n_max: self.n_max,
            m_max: self.m_max,
            method: self.method,
            entries: self.entry_strings(),
        };
        serde_json::to_writer_pretty(&mut writer, &file)?;
        writeln!(writer)?;
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_json(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serde_json emits UTF-8")
    }

    pub fn read_json<R: Read>(reader: R) -> Result<GramMatrix> {
        let file: GramFile = serde_json::from_reader(reader)?;
        if file.entries.len() != file.n_max + 1 {
            return Err(Error::MalformedGram(format!(
                "expected {} rows, found {}",
                file.n_max + 1,
                file.entries.len()
            )));
        }
        let entries = file
            .entries
            .iter()
            .enumerate()
            .map(|(n, row)| {
                if row.len() != file.m_max + 1 {
                    return Err(Error::MalformedGram(format!(
                        "row {n} has {} entries, expected {}",
                        row.len(),
                        file.m_max + 1
                    )));
                }
                row.iter().map(|s| s.parse()).collect()
            })
            .collect::<Result<Vec<Vec<ExactScalar>>>>()?;
        Ok(GramMatrix {
            q: file.q,
            k: file.k,
            n_max: file.n_max,
            m_max: file.m_max,
            method: file.method,
            entries,
        })
    }

    /// Header `n\m,0,1,…,m_max`, then one row per `n` led by its index.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut csv = csv::Writer::from_writer(writer);
        let header = std::iter::once("n\\m".to_string())
            .chain((0..=self.m_max).map(|m| m.to_string()));
        csv.write_record(header)?;
        for (n, row) in self.entry_strings().into_iter().enumerate() {
            csv.write_record(std::iter::once(n.to_string()).chain(row))?;
        }
        csv.flush()?;
        Ok(())
    }
}

//! Streaming scans with checkpoints.
//!
//! Graphs are processed in chunks. After each chunk the verdict lines are
//! appended to the output and the state (input position, output length,
//! tallies) is handed to the checkpoint callback. Resuming truncates the
//! output to the recorded length and skips the consumed input.

use super::{Analysis, CheckKind, CheckVerdict, Status};
use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Seek, SeekFrom, Write};
use std::path::Path;

pub const DEFAULT_CHECKPOINT_EVERY: u64 = 1000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub holds: u64,
    pub fails: u64,
    pub report_only: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// 0-based index of the graph in the input stream.
    pub index: u64,
    pub graph: String,
    pub check: String,
    pub status: Status,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanState {
    /// Graphs consumed from the input.
    pub position: u64,
    /// Bytes of output written for those graphs.
    pub output_bytes: u64,
    pub tallies: BTreeMap<String, Tally>,
    pub violations: Vec<Violation>,
}

impl ScanState {
    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_slice(&fs::read(path)?)?)
    }

    /// Writes through a temporary file and a rename.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec_pretty(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn total_violations(&self) -> u64 {
        self.tallies.values().map(|t| t.violations).sum()
    }

    pub fn total_fails(&self) -> u64 {
        self.tallies.values().map(|t| t.fails).sum()
    }

    fn record(&mut self, index: u64, v: &CheckVerdict) {
        let t = self.tallies.entry(v.check.clone()).or_default();
        match v.status {
            Status::Holds => t.holds += 1,
            Status::Fails => t.fails += 1,
            Status::ReportOnly => t.report_only += 1,
        }
        if v.violation {
            t.violations += 1;
            self.violations.push(Violation {
                index,
                graph: v.graph.clone(),
                check: v.check.clone(),
                status: v.status,
            });
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(OutputFormat::Jsonl),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Unknown {
                kind: "scan format",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub checks: Vec<CheckKind>,
    pub checkpoint_every: u64,
    /// With `false`, `runtime_ms` is written as 0 so runs are byte-identical.
    pub record_runtime: bool,
    /// Stop at the first chunk boundary at or after this many graphs.
    pub stop_after: Option<u64>,
    pub format: OutputFormat,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            checks: CheckKind::DEFAULT_SCAN.to_vec(),
            checkpoint_every: DEFAULT_CHECKPOINT_EVERY,
            record_runtime: true,
            stop_after: None,
            format: OutputFormat::Jsonl,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    Completed,
    Interrupted,
}

pub const CSV_HEADER: [&str; 8] = ["check", "graph", "status", "violation", "witness", "mu", "mu_float", "runtime_ms"];

fn encode(format: OutputFormat, verdicts: &[CheckVerdict], buf: &mut Vec<u8>) -> Result<()> {
    match format {
        OutputFormat::Jsonl => {
            for v in verdicts {
                serde_json::to_writer(&mut *buf, v)?;
                buf.push(b'\n');
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *buf);
            for v in verdicts {
                w.write_record([
                    v.check.clone(),
                    v.graph.clone(),
                    v.status.to_string(),
                    v.violation.to_string(),
                    v.witness.to_string(),
                    v.mu.clone().unwrap_or_default(),
                    v.mu_float.map(|x| x.to_string()).unwrap_or_default(),
                    v.runtime_ms.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Runs the selected checks on every graph not yet consumed by `state`.
pub fn scan<I, W, F>(
    graphs: I,
    opts: &ScanOptions,
    state: &mut ScanState,
    out: &mut W,
    mut on_checkpoint: F,
) -> Result<ScanOutcome>
where
    I: IntoIterator<Item = Result<Graph>>,
    W: Write,
    F: FnMut(&ScanState) -> Result<()>,
{
    if opts.format == OutputFormat::Csv && state.output_bytes == 0 {
        let mut buf = Vec::new();
        csv::Writer::from_writer(&mut buf).write_record(CSV_HEADER)?;
        out.write_all(&buf)?;
        state.output_bytes = buf.len() as u64;
    }
    let chunk_len = opts.checkpoint_every.max(1) as usize;
    let mut input = graphs.into_iter().skip(state.position as usize);
    loop {
        if opts.stop_after.is_some_and(|s| state.position >= s) {
            return Ok(ScanOutcome::Interrupted);
        }
        let mut chunk = Vec::with_capacity(chunk_len);
        let mut pending_error = None;
        for item in input.by_ref().take(chunk_len) {
            match item {
                Ok(g) => chunk.push(g),
                Err(e) => {
                    pending_error = Some(e);
                    break;
                }
            }
        }
        if chunk.is_empty() && pending_error.is_none() {
            return Ok(ScanOutcome::Completed);
        }
        let start = state.position;
        let verdicts: Vec<Vec<CheckVerdict>> = chunk
            .par_iter()
            .enumerate()
            .map(|(i, g)| {
                let a = Analysis::new(g)?.record_runtime(opts.record_runtime);
                opts.checks
                    .iter()
                    .map(|k| k.run(&a))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::InvalidParameter(format!("graph {} ({}): {e}", start + i as u64, a.id())))
            })
            .collect::<Result<_>>()?;
        let mut buf = Vec::new();
        for (i, vs) in verdicts.iter().enumerate() {
            encode(opts.format, vs, &mut buf)?;
            for v in vs {
                state.record(start + i as u64, v);
            }
        }
        out.write_all(&buf)?;
        out.flush()?;
        state.position += chunk.len() as u64;
        state.output_bytes += buf.len() as u64;
        on_checkpoint(state)?;
        if let Some(e) = pending_error {
            return Err(e);
        }
    }
}

/// File-backed scan. A fresh run truncates `output`; `resume` reloads the
/// checkpoint, cuts `output` back to the recorded length and continues.
pub fn scan_to_files<I>(
    graphs: I,
    opts: &ScanOptions,
    output: &Path,
    checkpoint: Option<&Path>,
    resume: bool,
) -> Result<(ScanState, ScanOutcome)>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut state = if resume {
        let path = checkpoint.ok_or_else(|| Error::InvalidParameter("resume needs a checkpoint path".into()))?;
        ScanState::load(path)?
    } else {
        ScanState::default()
    };
    let mut file = if resume {
        let mut f = OpenOptions::new().read(true).write(true).open(output)?;
        f.set_len(state.output_bytes)?;
        f.seek(SeekFrom::End(0))?;
        f
    } else {
        File::create(output)?
    };
    let mut writer = BufWriter::new(&mut file);
    let outcome = scan(graphs, opts, &mut state, &mut writer, |s| match checkpoint {
        Some(p) => s.save(p),
        None => Ok(()),
    })?;
    writer.flush()?;
    if let Some(p) = checkpoint {
        state.save(p)?;
    }
    Ok((state, outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_connected;

    fn graphs(n: usize) -> Vec<Result<Graph>> {
        generate_connected(n).unwrap().into_iter().map(Ok).collect()
    }

    #[test]
    fn min_path_over_order_five() {
        let opts = ScanOptions {
            checks: vec![CheckKind::MinPath],
            ..ScanOptions::default()
        };
        let mut state = ScanState::default();
        let mut out = Vec::new();
        let done = scan(graphs(5), &opts, &mut state, &mut out, |_| Ok(())).unwrap();
        assert_eq!(done, ScanOutcome::Completed);
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 21);
        assert_eq!(state.tallies["min-path"].holds, 21);
        assert_eq!(state.position, 21);
    }

    #[test]
    fn empty_stream() {
        let mut state = ScanState::default();
        let mut out = Vec::new();
        scan(Vec::new(), &ScanOptions::default(), &mut state, &mut out, |_| Ok(())).unwrap();
        assert!(out.is_empty());
        assert_eq!(state, ScanState::default());
    }

    #[test]
    fn chunked_resume_matches_single_pass() {
        let opts = ScanOptions {
            checks: vec![CheckKind::MinPath, CheckKind::RatioChain],
            record_runtime: false,
            checkpoint_every: 7,
            ..ScanOptions::default()
        };
        let mut full_state = ScanState::default();
        let mut full = Vec::new();
        scan(graphs(6), &opts, &mut full_state, &mut full, |_| Ok(())).unwrap();

        let mut state = ScanState::default();
        let mut out = Vec::new();
        let first = ScanOptions { stop_after: Some(30), ..opts.clone() };
        assert_eq!(scan(graphs(6), &first, &mut state, &mut out, |_| Ok(())).unwrap(), ScanOutcome::Interrupted);
        assert_eq!(state.position, 35);
        scan(graphs(6), &opts, &mut state, &mut out, |_| Ok(())).unwrap();
        assert_eq!(out, full);
        assert_eq!(state, full_state);
    }

    #[test]
    fn malformed_input_reports_line_and_keeps_prefix() {
        let input = "Bw\nBg\nB!\nBw\n";
        let items = crate::graph6::read_graph6_lines(input.as_bytes());
        let opts = ScanOptions {
            checks: vec![CheckKind::MinPath],
            ..ScanOptions::default()
        };
        let mut state = ScanState::default();
        let mut out = Vec::new();
        let err = scan(items, &opts, &mut state, &mut out, |_| Ok(())).unwrap_err();
        assert!(matches!(err, Error::InputLine { line: 3, .. }), "{err}");
        assert_eq!(state.position, 2);
    }

    #[test]
    fn csv_and_jsonl_carry_the_same_rows() {
        let base = ScanOptions {
            checks: vec![CheckKind::MuVsAv],
            record_runtime: false,
            ..ScanOptions::default()
        };
        let mut json = Vec::new();
        scan(graphs(4), &base, &mut ScanState::default(), &mut json, |_| Ok(())).unwrap();
        let csv_opts = ScanOptions { format: OutputFormat::Csv, ..base };
        let mut csv_out = Vec::new();
        scan(graphs(4), &csv_opts, &mut ScanState::default(), &mut csv_out, |_| Ok(())).unwrap();
        let mut rdr = csv::Reader::from_reader(csv_out.as_slice());
        let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
        let lines: Vec<CheckVerdict> = String::from_utf8(json)
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(rows.len(), lines.len());
        for (r, v) in rows.iter().zip(&lines) {
            assert_eq!(&r[0], v.check);
            assert_eq!(&r[1], v.graph);
            assert_eq!(&r[2], v.status.as_str());
            assert_eq!(r[4].parse::<serde_json::Value>().unwrap(), v.witness);
            assert_eq!(&r[5], v.mu.as_deref().unwrap());
            assert_eq!(r[6].parse::<f64>().unwrap(), v.mu_float.unwrap());
        }
    }
}

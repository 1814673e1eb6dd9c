//! Table, certificate and spectrum file formats.

use std::fmt::Write as _;
use std::sync::Arc;

use anyhow::{bail, ensure, Context, Result};
use bent3::analysis::Certificate;
use bent3::gf::{fmt_modulus, parse_modulus};
use bent3::{FieldCtx, TernaryFn, WalshSpectrum};
use sha2::{Digest, Sha256};

pub const TABLE_MAGIC: &str = "TBF v1";
const CHARS_PER_LINE: usize = 81;

fn trit_chars(table: &[u8]) -> impl Iterator<Item = char> + '_ {
    table.iter().map(|&v| char::from(b'0' + v))
}

/// SHA-256 of the table written as one digit per entry.
pub fn table_sha256(table: &[u8]) -> String {
    let bytes: Vec<u8> = table.iter().map(|&v| b'0' + v).collect();
    hex::encode(Sha256::digest(&bytes))
}

/// SHA-256 of the `u v` lines of a spectrum.
pub fn spectrum_sha256(spec: &WalshSpectrum) -> String {
    let mut h = Sha256::new();
    for c in spec.coeffs() {
        h.update(format!("{} {}\n", c.u, c.v).as_bytes());
    }
    hex::encode(h.finalize())
}

pub fn write_table(f: &TernaryFn) -> String {
    let ctx = f.ctx();
    let mut out = format!(
        "{TABLE_MAGIC}\nn={} modulus={}\n",
        ctx.n(),
        fmt_modulus(ctx.modulus())
    );
    for chunk in f.table().chunks(CHARS_PER_LINE) {
        out.extend(trit_chars(chunk));
        out.push('\n');
    }
    out
}

/// Parse a table file; `max_degree` bounds the field that will be built.
pub fn read_table(text: &str, max_degree: usize) -> Result<TernaryFn> {
    let mut lines = text.lines();
    ensure!(
        lines.next() == Some(TABLE_MAGIC),
        "missing {TABLE_MAGIC:?} header"
    );
    let header = lines.next().context("missing field header line")?;
    let (n_part, mod_part) = header
        .split_once(' ')
        .context("field header must read `n=<n> modulus=<trits>`")?;
    let n: usize = n_part
        .strip_prefix("n=")
        .context("field header must start with n=")?
        .parse()
        .context("bad n")?;
    let modulus = parse_modulus(
        mod_part
            .strip_prefix("modulus=")
            .context("field header must contain modulus=")?,
    )?;
    let ctx = Arc::new(FieldCtx::with_max_degree(n, Some(&modulus), max_degree)?);
    let mut table = Vec::with_capacity(ctx.size());
    for (i, line) in lines.enumerate() {
        ensure!(
            line.len() <= CHARS_PER_LINE,
            "line {} has more than {CHARS_PER_LINE} entries",
            i + 3
        );
        for c in line.chars() {
            match c {
                '0'..='2' => table.push(c as u8 - b'0'),
                _ => bail!("line {}: {c:?} is not a trit", i + 3),
            }
        }
    }
    Ok(TernaryFn::from_table(ctx, table)?)
}

/// Key-value certificate followed by the check lines.
pub fn write_certificate(f: &TernaryFn, cert: &Certificate) -> String {
    let mut out = String::new();
    let dual = cert
        .dual
        .as_ref()
        .map(|d| table_sha256(d.table()))
        .unwrap_or_else(|| "none".into());
    let counter = cert
        .counterexample
        .map(|(b, _)| b.index().to_string())
        .unwrap_or_else(|| "none".into());
    let _ = writeln!(out, "bent={}", cert.is_bent);
    let _ = writeln!(out, "regularity={}", cert.regularity);
    let _ = writeln!(out, "degree={}", cert.degree);
    let _ = writeln!(out, "dual_sha256={dual}");
    let _ = writeln!(out, "counterexample={counter}");
    let _ = writeln!(out, "table_sha256={}", table_sha256(f.table()));
    for t in &cert.transcripts {
        out.push_str(&t.to_string());
    }
    out
}

/// The key-value part of a certificate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificateRecord {
    pub bent: bool,
    pub regularity: String,
    pub degree: usize,
    pub dual_sha256: String,
    pub counterexample: Option<u32>,
    pub table_sha256: String,
    pub checks: Vec<String>,
}

pub fn read_certificate(text: &str) -> Result<CertificateRecord> {
    let mut rec = CertificateRecord::default();
    for line in text.lines() {
        if line.starts_with("CHECK ") {
            rec.checks.push(line.to_string());
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .with_context(|| format!("not a key=value line: {line:?}"))?;
        match key {
            "bent" => rec.bent = value.parse().context("bent")?,
            "regularity" => rec.regularity = value.to_string(),
            "degree" => rec.degree = value.parse().context("degree")?,
            "dual_sha256" => rec.dual_sha256 = value.to_string(),
            "counterexample" => {
                rec.counterexample = match value {
                    "none" => None,
                    v => Some(v.parse().context("counterexample")?),
                }
            }
            "table_sha256" => rec.table_sha256 = value.to_string(),
            other => bail!("unknown certificate key {other:?}"),
        }
    }
    Ok(rec)
}

/// `b_index u v norm` per line.
pub fn write_spectrum(spec: &WalshSpectrum) -> String {
    let mut out = String::with_capacity(spec.len() * 16);
    for (b, c) in spec.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{b} {} {} {}", c.u, c.v, c.norm());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bent3::analysis::check_bent;
    use bent3::TraceTerm;

    #[test]
    fn table_roundtrip() {
        let ctx = Arc::new(FieldCtx::new(5, None).unwrap());
        let f = TernaryFn::from_trace_form(ctx.clone(), vec![TraceTerm::new(ctx.generator(), 4)]);
        let text = write_table(&f);
        assert!(text.starts_with("TBF v1\nn=5 modulus="));
        assert_eq!(text.lines().nth(2).unwrap().len(), 81);
        assert_eq!(text.lines().count(), 2 + 3);
        let g = read_table(&text, 14).unwrap();
        assert_eq!(g, f);
        assert!(read_table(&text, 4).is_err());
        assert!(read_table(&text.replace("TBF v1", "TBF v2"), 14).is_err());
        assert!(read_table(&text.replacen('0', "3", 3), 14).is_err());
    }

    #[test]
    fn certificate_roundtrip() {
        let ctx = Arc::new(FieldCtx::new(2, None).unwrap());
        let f = TernaryFn::from_trace_form(ctx, vec![TraceTerm::new(bent3::FieldElem::ONE, 2)]);
        let cert = check_bent(&f);
        let text = write_certificate(&f, &cert);
        let rec = read_certificate(&text).unwrap();
        assert!(rec.bent);
        assert_eq!(rec.regularity, cert.regularity.as_str());
        assert_eq!(rec.table_sha256, table_sha256(f.table()));
        assert_eq!(rec.counterexample, None);
        assert!(!rec.checks.is_empty());
    }
}

//! Per-prime census of Newton polygons for a rational parameter, with an on-disk
//! count cache.
//!
//! Cache file `counts.csv`:
//! ```text
//! # m11-count-cache v1
//! J_num,J_den,t_num,t_den,p,k,count
//! 27,4,2,1,11,1,12
//! # sha256:<hex of every preceding line, newline-terminated>
//! ```
//! Rows are sorted. `t` is part of the key because curves with equal `J` may be
//! twists of each other and then have different counts.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::count::{bad_reason, count_points_rational, MAX_Q};
use super::lpoly::LPolynomial;
use super::newton::{classify_np, newton_polygon, NpLabel};
use crate::cyclotomic::klein_j_q;
use crate::error::{Error, Result};
use crate::nt;
use crate::ring_f0::Q;

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_HEADER: &str = "# m11-count-cache v1";
pub const CACHE_COLUMNS: &str = "J_num,J_den,t_num,t_den,p,k,count";
pub const CACHE_FILE: &str = "counts.csv";

type Key = (BigInt, BigInt, BigInt, BigInt, u64, u32);

fn key(t: &Q, p: u64, k: u32) -> Result<Key> {
    let j = klein_j_q(t)?;
    Ok((j.numer().clone(), j.denom().clone(), t.numer().clone(), t.denom().clone(), p, k))
}

#[derive(Debug, Default)]
pub struct CountCache {
    path: Option<PathBuf>,
    entries: BTreeMap<Key, u64>,
    dirty: bool,
}

fn digest(body: &str) -> String {
    Sha256::digest(body.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

impl CountCache {
    pub fn in_memory() -> Self {
        CountCache::default()
    }

    /// Opens `dir/counts.csv`, creating nothing until [`save`](Self::save).
    pub fn open(dir: &Path) -> Result<Self> {
        let path = dir.join(CACHE_FILE);
        let mut cache = CountCache { path: Some(path.clone()), ..Default::default() };
        if !path.exists() {
            return Ok(cache);
        }
        let text = fs::read_to_string(&path)?;
        cache.entries = parse(&text)?;
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, t: &Q, p: u64, k: u32) -> Option<u64> {
        self.entries.get(&key(t, p, k).ok()?).copied()
    }

    pub fn insert(&mut self, t: &Q, p: u64, k: u32, count: u64) -> Result<()> {
        let key = key(t, p, k)?;
        if let Some(&old) = self.entries.get(&key) {
            if old != count {
                return Err(Error::Cache(format!("conflicting count for p = {p}, k = {k}")));
            }
            return Ok(());
        }
        self.entries.insert(key, count);
        self.dirty = true;
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut body = format!("{CACHE_HEADER}\n{CACHE_COLUMNS}\n");
        for ((jn, jd, tn, td, p, k), c) in &self.entries {
            body.push_str(&format!("{jn},{jd},{tn},{td},{p},{k},{c}\n"));
        }
        let sum = digest(&body);
        body.push_str(&format!("# sha256:{sum}\n"));
        body
    }

    /// Writes through a temporary file and a rename.
    pub fn save(&mut self) -> Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        if !self.dirty {
            return Ok(());
        }
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("csv.tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.render().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        self.dirty = false;
        Ok(())
    }
}

fn parse(text: &str) -> Result<BTreeMap<Key, u64>> {
    let bad = |m: &str| Error::Cache(m.to_string());
    let mut lines: Vec<&str> = text.lines().collect();
    let last = lines.pop().ok_or_else(|| bad("empty cache file"))?;
    let sum = last.strip_prefix("# sha256:").ok_or_else(|| bad("missing checksum line"))?;
    let body: String = lines.iter().map(|l| format!("{l}\n")).collect();
    if digest(&body) != sum.trim() {
        return Err(bad("checksum mismatch"));
    }
    if lines.first() != Some(&CACHE_HEADER) || lines.get(1) != Some(&CACHE_COLUMNS) {
        return Err(bad("unknown cache header"));
    }
    let mut out = BTreeMap::new();
    for (n, line) in lines.iter().enumerate().skip(2) {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 7 {
            return Err(bad(&format!("line {}: expected 7 fields", n + 1)));
        }
        let big = |s: &str| s.parse::<BigInt>().map_err(|_| bad(&format!("line {}: bad integer", n + 1)));
        let int = |s: &str| s.parse::<u64>().map_err(|_| bad(&format!("line {}: bad integer", n + 1)));
        let key = (big(f[0])?, big(f[1])?, big(f[2])?, big(f[3])?, int(f[4])?, int(f[5])? as u32);
        out.insert(key, int(f[6])?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRow {
    pub p: u64,
    pub p_mod5: u64,
    pub counts: [u64; 4],
    pub lpoly: Vec<i64>,
    pub slopes: Vec<String>,
    pub label: NpLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub p: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema: u32,
    pub t: String,
    pub j: String,
    pub p_bound: u64,
    pub rows: Vec<PrimeRow>,
    pub skipped: Vec<Skipped>,
    pub basic_primes: Vec<u64>,
    pub mu_ordinary: usize,
    pub basic: usize,
    pub other: usize,
}

impl ScanReport {
    pub fn label_of(&self, p: u64) -> Option<NpLabel> {
        self.rows.iter().find(|r| r.p == p).map(|r| r.label)
    }
}

fn skip_reason(t: &Q, p: u64) -> Option<String> {
    if let Some(r) = bad_reason(t, p) {
        return Some(r);
    }
    if (p as u128).pow(4) > MAX_Q {
        return Some("p⁴ exceeds 2^32".into());
    }
    None
}

fn counts_cached(t: &Q, p: u64, cache: &CountCache) -> Option<[u64; 4]> {
    let mut out = [0u64; 4];
    for k in 1..=4 {
        out[k as usize - 1] = cache.get(t, p, k)?;
    }
    Some(out)
}

/// Classifies every good prime `p < p_bound`. Counts missing from `cache` are
/// computed in parallel and then inserted in prime order.
pub fn scan_basic(t: &Q, p_bound: u64, cache: Option<&mut CountCache>) -> Result<ScanReport> {
    let j = klein_j_q(t)?;
    let mut local = CountCache::in_memory();
    let cache = match cache {
        Some(c) => c,
        None => &mut local,
    };
    let mut skipped = Vec::new();
    let mut good = Vec::new();
    for p in nt::primes_in(2, p_bound) {
        match skip_reason(t, p) {
            Some(reason) => skipped.push(Skipped { p, reason }),
            None => good.push(p),
        }
    }
    let missing: Vec<u64> = good.iter().copied().filter(|&p| counts_cached(t, p, cache).is_none()).collect();
    let fresh: Vec<(u64, [u64; 4])> = missing
        .par_iter()
        .map(|&p| {
            let mut c = [0u64; 4];
            for k in 1..=4u32 {
                c[k as usize - 1] = count_points_rational(t, p, k)?;
            }
            Ok((p, c))
        })
        .collect::<Result<_>>()?;
    for (p, c) in &fresh {
        for k in 1..=4u32 {
            cache.insert(t, *p, k, c[k as usize - 1])?;
        }
    }
    cache.save()?;
    let mut rows = Vec::new();
    for p in good {
        let counts = counts_cached(t, p, cache).expect("counts were just filled");
        let l = LPolynomial::from_counts(p, &counts)?;
        let np = newton_polygon(&l);
        np.check()?;
        let cl = classify_np(&np, p);
        rows.push(PrimeRow {
            p,
            p_mod5: cl.p_mod5,
            counts,
            lpoly: l.coeffs.clone(),
            slopes: np.slopes.iter().map(|s| s.to_string()).collect(),
            label: cl.label,
        });
    }
    let tally = |l: NpLabel| rows.iter().filter(|r| r.label == l).count();
    Ok(ScanReport {
        schema: SCHEMA_VERSION,
        t: t.to_string(),
        j: j.to_string(),
        p_bound,
        basic_primes: rows.iter().filter(|r| r.label == NpLabel::Basic).map(|r| r.p).collect(),
        mu_ordinary: tally(NpLabel::MuOrdinary),
        basic: tally(NpLabel::Basic),
        other: tally(NpLabel::Other),
        rows,
        skipped,
    })
}

use std::io::Write;

use serde::{Deserialize, Serialize};

/// Bumped whenever the column set changes.
pub const CSV_VERSION: u32 = 1;

/// One oracle result as a flat CSV row. Unused parameters are left empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub version: u32,
    pub target: String,
    pub family: Option<String>,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub q: u64,
    pub r: Option<u32>,
    pub k: Option<u32>,
    pub lambda: Option<String>,
    pub mu: Option<String>,
    /// A single count, or `t`-coefficients from degree 0 joined by `;`.
    pub values: String,
    pub wall_ms: Option<u64>,
}

impl OracleRecord {
    pub fn new(target: &str, q: u64, values: &[u64]) -> Self {
        OracleRecord {
            version: CSV_VERSION,
            target: target.to_string(),
            q,
            values: values.iter().map(u64::to_string).collect::<Vec<_>>().join(";"),
            ..Default::default()
        }
    }
}

pub fn write_csv<W: Write>(records: &[OracleRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let mut rec = OracleRecord::new("sat-zeta", 2, &[1, 3]);
        rec.family = Some("inert".into());
        rec.m = Some(1);
        rec.n = Some(1);
        let mut buf = Vec::new();
        write_csv(&[rec.clone()], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), "version,target,family,m,n,q,r,k,lambda,mu,values,wall_ms");
        assert_eq!(text.lines().nth(1).unwrap(), "1,sat-zeta,inert,1,1,2,,,,,1;3,");
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let back: OracleRecord = rdr.deserialize().next().unwrap().unwrap();
        assert_eq!(back, rec);
    }
}

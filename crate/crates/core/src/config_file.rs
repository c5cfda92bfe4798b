//! On-disk witness format.
//!
//! ```json
//! {"n": 3, "d": 3, "points": [[1, 2, 3], [2, 3, 1], [3, 1, 2]]}
//! ```
//!
//! `points` holds one row of `d` integers per point. A CSV rendering (header
//! `x1,...,xd`, one row per point) is available for export only.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::shattering::PointConfig;

#[derive(Debug, Error)]
pub enum ConfigFileError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed configuration file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("declared {field} = {declared} but the points matrix has {actual}")]
    Declared {
        field: &'static str,
        declared: usize,
        actual: usize,
    },
    #[error(transparent)]
    Invalid(#[from] crate::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub n: usize,
    pub d: usize,
    pub points: Vec<Vec<i64>>,
}

impl ConfigFile {
    pub fn from_config(config: &PointConfig) -> Self {
        ConfigFile {
            n: config.n(),
            d: config.d(),
            points: config
                .points()
                .map(|p| p.iter().map(|&v| v as i64).collect())
                .collect(),
        }
    }

    /// Checks the declared shape and coordinate range.
    pub fn to_config(&self) -> Result<PointConfig, ConfigFileError> {
        if self.points.len() != self.n {
            return Err(ConfigFileError::Declared {
                field: "n",
                declared: self.n,
                actual: self.points.len(),
            });
        }
        if let Some(row) = self.points.iter().find(|r| r.len() != self.d) {
            return Err(ConfigFileError::Declared {
                field: "d",
                declared: self.d,
                actual: row.len(),
            });
        }
        Ok(PointConfig::from_rows(&self.points)?)
    }
}

pub fn read_config<R: Read>(reader: R) -> Result<PointConfig, ConfigFileError> {
    let file: ConfigFile = serde_json::from_reader(reader)?;
    file.to_config()
}

/// Pretty-printed JSON with one point per line.
pub fn write_config<W: Write>(config: &PointConfig, mut out: W) -> Result<(), ConfigFileError> {
    writeln!(out, "{{")?;
    writeln!(out, "  \"n\": {},", config.n())?;
    writeln!(out, "  \"d\": {},", config.d())?;
    writeln!(out, "  \"points\": [")?;
    for (j, point) in config.points().enumerate() {
        let row = serde_json::to_string(point)?;
        let sep = if j + 1 < config.n() { "," } else { "" };
        writeln!(out, "    {row}{sep}")?;
    }
    writeln!(out, "  ]")?;
    writeln!(out, "}}")?;
    Ok(())
}

pub fn write_config_csv<W: Write>(config: &PointConfig, out: W) -> Result<(), ConfigFileError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record((1..=config.d()).map(|i| format!("x{i}")))?;
    for point in config.points() {
        w.write_record(point.iter().map(u32::to_string))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shattering::build_shattered_config;

    #[test]
    fn json_round_trip() {
        for d in [1, 3, 6, 70] {
            let cfg = build_shattered_config(d).unwrap();
            let mut buf = Vec::new();
            write_config(&cfg, &mut buf).unwrap();
            let back = read_config(buf.as_slice()).unwrap();
            assert_eq!(back, cfg);
            let parsed: ConfigFile = serde_json::from_slice(&buf).unwrap();
            assert_eq!(parsed, ConfigFile::from_config(&cfg));
        }
    }

    #[test]
    fn declared_shape_must_match() {
        let bad_n = r#"{"n": 3, "d": 1, "points": [[1], [2]]}"#;
        assert!(matches!(
            read_config(bad_n.as_bytes()),
            Err(ConfigFileError::Declared { field: "n", .. })
        ));
        let bad_d = r#"{"n": 2, "d": 2, "points": [[1, 2], [2]]}"#;
        assert!(matches!(
            read_config(bad_d.as_bytes()),
            Err(ConfigFileError::Declared { field: "d", .. })
        ));
    }

    #[test]
    fn malformed_inputs() {
        for text in [
            r#"{"n": 2, "d": 1, "points": [[1], [2]"#,
            r#"{"n": 2, "d": 1}"#,
            r#"{"n": 2, "d": 1, "points": [[1.5], [2]]}"#,
            r#"{"n": 2, "d": 1, "points": [[1], [2]], "extra": 0}"#,
            "",
        ] {
            assert!(
                matches!(read_config(text.as_bytes()), Err(ConfigFileError::Json(_))),
                "{text}"
            );
        }
        let out_of_range = r#"{"n": 2, "d": 1, "points": [[1], [7]]}"#;
        assert!(matches!(
            read_config(out_of_range.as_bytes()),
            Err(ConfigFileError::Invalid(_))
        ));
    }

    #[test]
    fn csv_export() {
        let cfg = PointConfig::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap();
        let mut buf = Vec::new();
        write_config_csv(&cfg, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x1,x2\n1,2\n2,1\n");
    }
}

//! Sensor logs, configuration documents and the built-in experiment fixtures.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ExperimentConfig, ReferencePoint};
use crate::prng::SeedValue;
use crate::stats;

pub const TIMESTAMP_COLUMN: &str = "timestamp_s";

/// Channel names required in every sensor log, in canonical order.
pub const CHANNELS: [&str; 7] = ["T_in", "S1", "S2", "S3", "S4", "S7", "T_w"];

/// Pt-100 measurement uncertainty, °C.
pub const SENSOR_UNCERTAINTY_C: f64 = 0.05;

#[derive(Debug, Clone, PartialEq)]
pub struct SensorLog {
    pub timestamps: Vec<f64>,
    pub channels: BTreeMap<String, Vec<f64>>,
    pub sensor_uncertainty: f64,
}

impl SensorLog {
    pub fn len(&self) -> usize {
        self.timestamps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.timestamps.is_empty()
    }

    pub fn channel(&self, name: &str) -> Result<&[f64]> {
        self.channels
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Schema(format!("unknown channel `{name}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelSummary {
    pub mean: f64,
    pub std: f64,
    pub count: usize,
}

pub fn parse_sensor_csv(bytes: &[u8]) -> Result<SensorLog> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let headers = reader
        .headers()
        .map_err(|e| Error::Schema(format!("unreadable header: {e}")))?
        .clone();
    if headers.get(0) != Some(TIMESTAMP_COLUMN) {
        return Err(Error::Schema(format!("first column must be `{TIMESTAMP_COLUMN}`")));
    }
    let names: Vec<&str> = headers.iter().skip(1).collect();
    for &name in &names {
        if !CHANNELS.contains(&name) {
            return Err(Error::Schema(format!("unexpected column `{name}`")));
        }
    }
    for required in CHANNELS {
        match names.iter().filter(|&&n| n == required).count() {
            0 => return Err(Error::Schema(format!("missing column `{required}`"))),
            1 => {}
            _ => return Err(Error::Schema(format!("duplicate column `{required}`"))),
        }
    }

    let mut timestamps = Vec::new();
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); names.len()];
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse(format!("row {row}: {e}")))?;
        if record.len() != headers.len() {
            return Err(Error::Parse(format!(
                "row {row}: expected {} fields, found {}",
                headers.len(),
                record.len()
            )));
        }
        let parse = |i: usize| -> Result<f64> {
            let field = &record[i];
            field
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Parse(format!("row {row}, column `{}`: `{field}`", &headers[i])))
        };
        let t = parse(0)?;
        if let Some(&prev) = timestamps.last() {
            if !(t > prev) {
                return Err(Error::Ordering { row });
            }
        }
        timestamps.push(t);
        for (c, col) in columns.iter_mut().enumerate() {
            col.push(parse(c + 1)?);
        }
    }

    let channels = names
        .into_iter()
        .map(str::to_string)
        .zip(columns)
        .collect();
    Ok(SensorLog {
        timestamps,
        channels,
        sensor_uncertainty: SENSOR_UNCERTAINTY_C,
    })
}

/// Mean and sample standard deviation of one channel.
pub fn summarize_channel(log: &SensorLog, channel: &str) -> Result<ChannelSummary> {
    let values = log.channel(channel)?;
    let (mean, std) = stats::mean_and_sd(values)?;
    Ok(ChannelSummary {
        mean,
        std,
        count: values.len(),
    })
}

/// Parses and validates a configuration document.
pub fn load_config(bytes: &[u8]) -> Result<ExperimentConfig> {
    let config: ExperimentConfig = serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    config.validate()?;
    Ok(config)
}

pub fn serialize_config(config: &ExperimentConfig) -> String {
    serde_json::to_string_pretty(config).expect("config serializes")
}

/// Published per-target values of a fixture. Reported, never asserted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PublishedRow {
    pub length_m: f64,
    pub seed: SeedValue,
    pub delta_t_c: f64,
    pub relative_error_pct: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PublishedValues {
    pub rmse_c: f64,
    pub rows: Vec<PublishedRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub config: ExperimentConfig,
    pub reference: Vec<ReferencePoint>,
    pub published: PublishedValues,
}

const FIXTURES: [(&str, &str); 2] = [
    ("experiment-a", include_str!("../fixtures/v1/experiment-a.json")),
    ("experiment-b", include_str!("../fixtures/v1/experiment-b.json")),
];

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(name, _)| *name)
}

pub fn builtin_fixtures(name: &str) -> Result<Fixture> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    let fixture: Fixture = serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture {name}: {e}")))?;
    fixture.config.validate()?;
    Ok(fixture)
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "timestamp_s,T_in,S1,S2,S3,S4,S7,T_w\n";

    #[test]
    fn three_rows() {
        let text = format!(
            "{HEADER}0,31.0,28.8,27.4,26.7,25.8,24.5,24.28\n\
             7,31.1,28.7,27.3,26.6,25.8,24.6,24.30\n\
             14,31.0,28.9,27.4,26.7,25.9,24.5,24.25\n"
        );
        let log = parse_sensor_csv(text.as_bytes()).unwrap();
        assert_eq!(log.len(), 3);
        assert_eq!(log.channels.len(), 7);
        assert!(log.channels.values().all(|c| c.len() == 3));
        assert_eq!(log.channel("S4").unwrap(), &[25.8, 25.8, 25.9]);
    }

    #[test]
    fn missing_groundwater_column() {
        let text = "timestamp_s,T_in,S1,S2,S3,S4,S7\n0,1,2,3,4,5,6\n";
        assert!(matches!(parse_sensor_csv(text.as_bytes()), Err(Error::Schema(_))));
    }

    #[test]
    fn extra_or_misplaced_columns() {
        let text = "T_in,timestamp_s,S1,S2,S3,S4,S7,T_w\n";
        assert!(matches!(parse_sensor_csv(text.as_bytes()), Err(Error::Schema(_))));
        let text = "timestamp_s,T_in,S1,S2,S3,S4,S7,T_w,S9\n".to_string();
        assert!(matches!(parse_sensor_csv(text.as_bytes()), Err(Error::Schema(_))));
    }

    #[test]
    fn bad_number_reports_row() {
        let text = format!("{HEADER}0,1,2,3,4,5,6,7\n7,1,2,x,4,5,6,7\n");
        match parse_sensor_csv(text.as_bytes()) {
            Err(Error::Parse(msg)) => assert!(msg.contains("row 1"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_monotone_timestamps() {
        let text = format!("{HEADER}0,1,2,3,4,5,6,7\n7,1,2,3,4,5,6,7\n7,1,2,3,4,5,6,7\n");
        assert!(matches!(
            parse_sensor_csv(text.as_bytes()),
            Err(Error::Ordering { row: 2 })
        ));
    }

    #[test]
    fn channel_summaries() {
        let text = format!("{HEADER}0,1,2,3,4,5,6,24.28\n7,1,2,3,4,5,6,24.28\n");
        let log = parse_sensor_csv(text.as_bytes()).unwrap();
        let s = summarize_channel(&log, "T_w").unwrap();
        assert!((s.mean - 24.28).abs() < 1e-12);
        assert_eq!(s.std, 0.0);
        assert_eq!(s.count, 2);
        assert!(matches!(summarize_channel(&log, "S9"), Err(Error::Schema(_))));

        let empty = parse_sensor_csv(HEADER.as_bytes()).unwrap();
        assert!(matches!(
            summarize_channel(&empty, "T_w"),
            Err(Error::InsufficientSamples { .. })
        ));
    }

    #[test]
    fn config_validation() {
        let a = builtin_fixtures("experiment-a").unwrap().config;
        let mut doc: serde_json::Value = serde_json::to_value(&a).unwrap();
        doc["t_end_c"] = doc["t_in_c"].clone();
        assert!(matches!(
            load_config(doc.to_string().as_bytes()),
            Err(Error::Validation(_))
        ));

        let b = builtin_fixtures("experiment-b").unwrap().config;
        let mut doc: serde_json::Value = serde_json::to_value(&b).unwrap();
        doc["target_lengths_m"] = serde_json::json!([2.5, 9.0]);
        assert!(matches!(
            load_config(doc.to_string().as_bytes()),
            Err(Error::Validation(_))
        ));

        assert!(matches!(load_config(b"{ not json"), Err(Error::Parse(_))));
    }

    #[test]
    fn fixtures() {
        let a = builtin_fixtures("experiment-a").unwrap();
        assert_eq!(a.config.t_in, 31.01);
        assert_eq!(a.config.t_end, 25.81);
        assert_eq!(a.config.t_w, 24.28);
        assert_eq!(a.config.total_length, 5.40);
        assert_eq!(a.config.target_lengths, vec![2.50, 3.40, 4.40]);
        assert_eq!(a.config.seeds.len(), 5);
        let obs: Vec<f64> = a.reference.iter().map(|r| r.t_obs_c).collect();
        assert_eq!(obs, vec![28.80, 27.37, 26.67]);

        let b = builtin_fixtures("experiment-b").unwrap();
        assert_eq!(b.config.t_end, 24.54);
        assert_eq!(b.config.total_length, 8.30);
        assert_eq!(b.config.target_lengths.len(), 4);

        assert!(matches!(builtin_fixtures("experiment-c"), Err(Error::UnknownFixture(_))));
    }
}

use std::io::Write;

use hdshapes::Dataset;

use crate::args::Format;

pub const LABEL_COLUMN: &str = "cluster";

pub fn header(ds: &Dataset) -> Vec<String> {
    let mut cols = ds.column_names();
    if ds.labels().is_some() {
        cols.push(LABEL_COLUMN.to_string());
    }
    cols
}

/// Writes a header row and one record per point; floats use the shortest
/// representation that parses back to the same value.
pub fn write_csv<W: Write>(ds: &Dataset, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header(ds))?;
    let mut record = Vec::with_capacity(ds.ncols() + 1);
    for (i, row) in ds.rows().enumerate() {
        record.clear();
        record.extend(row.iter().map(|v| v.to_string()));
        if let Some(labels) = ds.labels() {
            record.push(labels[i].clone());
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

/// One JSON object per line, keyed by column name.
pub fn write_ndjson<W: Write>(ds: &Dataset, mut out: W) -> std::io::Result<()> {
    let names = ds.column_names();
    for (i, row) in ds.rows().enumerate() {
        let mut obj = serde_json::Map::with_capacity(names.len() + 1);
        for (name, v) in names.iter().zip(row) {
            obj.insert(name.clone(), serde_json::Value::from(*v));
        }
        if let Some(labels) = ds.labels() {
            obj.insert(LABEL_COLUMN.into(), labels[i].clone().into());
        }
        serde_json::to_writer(&mut out, &obj)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn write<W: Write>(ds: &Dataset, format: Format, out: W) -> std::io::Result<()> {
    match format {
        Format::Csv => write_csv(ds, out).map_err(std::io::Error::other),
        Format::Ndjson => write_ndjson(ds, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let ds = Dataset::from_rows(&[vec![0.1, -2.0], vec![1e-20, 3.5]]).unwrap().with_label("a");
        let mut buf = Vec::new();
        write_csv(&ds, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x1,x2,cluster\n0.1,-2,a\n0.00000000000000000001,3.5,a\n");
    }

    #[test]
    fn csv_values_roundtrip() {
        let vals = [std::f64::consts::PI, 1.0 / 3.0, -7.25e-300, 6.02e23];
        let ds = Dataset::from_vec(1, 4, vals.to_vec()).unwrap();
        let mut buf = Vec::new();
        write_csv(&ds, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let parsed: Vec<f64> = text.lines().nth(1).unwrap().split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(parsed, vals);
    }

    #[test]
    fn ndjson_layout() {
        let ds = Dataset::from_rows(&[vec![0.5, 2.0]]).unwrap();
        let mut buf = Vec::new();
        write_ndjson(&ds, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "{\"x1\":0.5,\"x2\":2.0}\n");
    }
}

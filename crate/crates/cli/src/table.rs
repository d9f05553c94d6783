use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A cell is written verbatim in CSV; in JSON, `Text` becomes a string and
/// `Number` a JSON number (or `null` when not finite).
pub enum Cell {
    Text(String),
    Int(u64),
    Number(f64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Number(x) => format_float(*x),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            Cell::Number(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
        }
    }
}

pub fn format_float(x: f64) -> String {
    if x != 0.0 && (x.abs() >= 1e15 || x.abs() < 1e-4) {
        format!("{x:.9e}")
    } else {
        format!("{x:.12}")
    }
}

pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(out, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let map: Map<String, Value> =
                            self.columns.iter().zip(row).map(|(c, cell)| (c.to_string(), cell.json())).collect();
                        Value::Object(map)
                    })
                    .collect();
                writeln!(out, "{}", Value::Array(rows))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_agree_on_content() {
        let mut t = Table::new(&["n", "count"]);
        t.push(vec![Cell::Int(3), Cell::Text("10".into())]);
        let mut csv = Vec::new();
        t.write(Format::Csv, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap(), "n,count\n3,10\n");
        let mut json = Vec::new();
        t.write(Format::Json, &mut json).unwrap();
        assert_eq!(String::from_utf8(json).unwrap().trim(), r#"[{"count":"10","n":3}]"#);
    }

    #[test]
    fn non_finite_numbers_become_null() {
        assert_eq!(Cell::Number(f64::NAN).json(), Value::Null);
    }
}

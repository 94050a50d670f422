//! JSON formats for matrices and tensors.
//!
//! Matrix: `{"rows": m, "cols": n, "re": [[..]], "im": [[..]]}` with `im`
//! optional. Tensor: `{"m": m, "n": n, "slices": [F1, F2]}`.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tensor::Tensor2;

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let obj = parse_object(text)?;
    let rows = get_dim(&obj, "rows")?;
    let cols = get_dim(&obj, "cols")?;
    let re = get_grid(&obj, "re", rows, cols)?;
    let im = match obj.get("im") {
        None | Some(Value::Null) => None,
        Some(_) => Some(get_grid(&obj, "im", rows, cols)?),
    };
    ComplexMatrix::from_parts(&re, im.as_deref())
}

pub fn parse_tensor(text: &str) -> Result<Tensor2> {
    let obj = parse_object(text)?;
    let m = get_dim(&obj, "m")?;
    let n = get_dim(&obj, "n")?;
    let slices = obj
        .get("slices")
        .ok_or_else(|| Error::Parse("missing field \"slices\"".into()))?
        .as_array()
        .ok_or_else(|| Error::Parse("field \"slices\" must be an array".into()))?;
    if slices.len() != 2 {
        return Err(Error::Parse(format!(
            "field \"slices\" must hold 2 matrices, found {}",
            slices.len()
        )));
    }
    let f1 = grid_from(&slices[0], "slices[0]", m, n)?;
    let f2 = grid_from(&slices[1], "slices[1]", m, n)?;
    Tensor2::from_slices(&f1, &f2)
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    parse_matrix(&read(path)?)
}

pub fn read_tensor(path: &Path) -> Result<Tensor2> {
    parse_tensor(&read(path)?)
}

pub fn matrix_to_json(c: &ComplexMatrix) -> Value {
    json!({
        "rows": c.rows(),
        "cols": c.cols(),
        "re": c.real_part(),
        "im": c.imag_part(),
    })
}

pub fn tensor_to_json(t: &Tensor2) -> Value {
    let (m, n) = t.dims();
    let rows = |k: usize| -> Vec<Vec<f64>> { t.slice(k).chunks(n).map(<[f64]>::to_vec).collect() };
    json!({ "m": m, "n": n, "slices": [rows(0), rows(1)] })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn parse_object(text: &str) -> Result<Map<String, Value>> {
    match serde_json::from_str(text) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(Error::Parse(
            "top-level JSON value must be an object".into(),
        )),
        Err(e) => Err(Error::Parse(format!("invalid JSON: {e}"))),
    }
}

fn get_dim(obj: &Map<String, Value>, field: &str) -> Result<usize> {
    let v = obj
        .get(field)
        .ok_or_else(|| Error::Parse(format!("missing field \"{field}\"")))?;
    match v.as_u64() {
        Some(d) if d > 0 => Ok(d as usize),
        _ => Err(Error::Parse(format!(
            "field \"{field}\" must be a positive integer"
        ))),
    }
}

fn get_grid(
    obj: &Map<String, Value>,
    field: &str,
    rows: usize,
    cols: usize,
) -> Result<Vec<Vec<f64>>> {
    let v = obj
        .get(field)
        .ok_or_else(|| Error::Parse(format!("missing field \"{field}\"")))?;
    grid_from(v, field, rows, cols)
}

fn grid_from(v: &Value, field: &str, rows: usize, cols: usize) -> Result<Vec<Vec<f64>>> {
    let outer = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("field \"{field}\" must be an array of rows")))?;
    if outer.len() != rows {
        return Err(Error::Parse(format!(
            "field \"{field}\" has {} rows, expected {rows}",
            outer.len()
        )));
    }
    outer
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse(format!("{field}[{i}] must be an array")))?;
            if row.len() != cols {
                return Err(Error::Parse(format!(
                    "{field}[{i}] has {} entries, expected {cols}",
                    row.len()
                )));
            }
            row.iter()
                .enumerate()
                .map(|(j, x)| match x.as_f64() {
                    Some(x) if x.is_finite() => Ok(x),
                    _ => Err(Error::Parse(format!(
                        "{field}[{i}][{j}] must be a finite number"
                    ))),
                })
                .collect()
        })
        .collect()
}

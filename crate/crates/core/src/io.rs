//! JSON file formats for every object the command-line tool touches.
//!
//! Files are JSON with a top-level `"kind"` field: `complex`, `one_cell`,
//! `two_cell`, `two_group`, `representation`, `intertwiner`, or `cochain`.
//! Rationals are strings `"p/q"` or `"p"` (integer JSON numbers also
//! accepted); zero or negative denominators are rejected at parse time.
//! Matrices are arrays of rows, or an object
//! `{"rows": r, "cols": c, "entries": [flat row-major]}` when a dimension
//! is zero.  Group-valued tables in 2-group files hold π₁ elements as
//! residue tuples with respect to the invariant factors.
//!
//! Representation and cochain files name their 2-group either inline or by
//! a path, resolved relative to the referencing file.  Loaders only check
//! structure: semantic axioms stay with the validators so that a corrupted
//! but well-formed file loads fine and then fails validation with a named
//! witness.  This module is deliberately concrete over [`Rat`].

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};
use serde_json::{Map, Value};

use crate::ch2::{OneCell, TwoCell, TwoVect};
use crate::cohom::{tuples, Bimodule, Cochain};
use crate::error::{Error, Result};
use crate::grp::{ActionTable, Cocycle3, FinAbGroup, FinGroup, TwoGroupData};
use crate::linalg::Matrix;
use crate::rep1::Rep1;
use crate::rep2::{Inter1, RepReduced};
use crate::{Rat, RatMatrix};

/// Parse `"p/q"` or `"p"`; denominators must be positive.
pub fn parse_rat(s: &str, ctx: &str) -> Result<Rat> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num = BigInt::from_str(num_str)
        .map_err(|_| Error::Parse(format!("{ctx}: invalid rational \"{s}\"")))?;
    let den = match den_str {
        Some(d) => BigInt::from_str(d)
            .map_err(|_| Error::Parse(format!("{ctx}: invalid rational \"{s}\"")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("{ctx}: zero denominator in \"{s}\"")));
    }
    if den < BigInt::zero() {
        return Err(Error::Parse(format!(
            "{ctx}: negative denominator in \"{s}\""
        )));
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn obj<'a>(v: &'a Value, ctx: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("{ctx}: expected an object")))
}

fn key<'a>(m: &'a Map<String, Value>, k: &str, ctx: &str) -> Result<&'a Value> {
    m.get(k)
        .ok_or_else(|| Error::Parse(format!("{ctx}: missing key \"{k}\"")))
}

fn array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{ctx}: expected an array")))
}

fn usize_of(v: &Value, ctx: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("{ctx}: expected a nonnegative integer")))
}

fn rat_of(v: &Value, ctx: &str) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s, ctx),
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .ok_or_else(|| Error::Parse(format!("{ctx}: expected an integer or \"p/q\""))),
        _ => Err(Error::Parse(format!("{ctx}: expected a rational"))),
    }
}

fn usize_table(v: &Value, ctx: &str) -> Result<Vec<usize>> {
    array(v, ctx)?
        .iter()
        .enumerate()
        .map(|(i, x)| usize_of(x, &format!("{ctx}[{i}]")))
        .collect()
}

pub fn matrix_from_value(v: &Value, ctx: &str) -> Result<RatMatrix> {
    if let Some(m) = v.as_object() {
        let rows = usize_of(key(m, "rows", ctx)?, &format!("{ctx}.rows"))?;
        let cols = usize_of(key(m, "cols", ctx)?, &format!("{ctx}.cols"))?;
        let entries = array(key(m, "entries", ctx)?, &format!("{ctx}.entries"))?;
        if entries.len() != rows * cols {
            return Err(Error::Parse(format!(
                "{ctx}.entries: expected {} values, found {}",
                rows * cols,
                entries.len()
            )));
        }
        let data = entries
            .iter()
            .enumerate()
            .map(|(i, x)| rat_of(x, &format!("{ctx}.entries[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Matrix::from_flat(rows, cols, data));
    }
    let rows = array(v, ctx)?;
    let mut out: Vec<Vec<Rat>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = array(row, &format!("{ctx}[{i}]"))?;
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, x)| rat_of(x, &format!("{ctx}[{i}][{j}]")))
            .collect::<Result<Vec<_>>>()?;
        out.push(parsed);
    }
    Matrix::from_rows(out).map_err(|_| Error::Parse(format!("{ctx}: ragged rows")))
}

pub fn matrix_to_value(m: &RatMatrix) -> Value {
    if m.rows() == 0 || m.cols() == 0 {
        let mut o = Map::new();
        o.insert("rows".into(), Value::from(m.rows()));
        o.insert("cols".into(), Value::from(m.cols()));
        o.insert("entries".into(), Value::Array(vec![]));
        return Value::Object(o);
    }
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| Value::from(format_rat(&m[(i, j)])))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn matrix_list(v: &Value, ctx: &str) -> Result<Vec<RatMatrix>> {
    array(v, ctx)?
        .iter()
        .enumerate()
        .map(|(i, x)| matrix_from_value(x, &format!("{ctx}[{i}]")))
        .collect()
}

fn matrix_list_value(ms: &[RatMatrix]) -> Value {
    Value::Array(ms.iter().map(matrix_to_value).collect())
}

pub fn two_vect_from_value(v: &Value, ctx: &str) -> Result<TwoVect<Rat>> {
    let m = obj(v, ctx)?;
    Ok(TwoVect::new(matrix_from_value(
        key(m, "d", ctx)?,
        &format!("{ctx}.d"),
    )?))
}

pub fn two_vect_to_value(v: &TwoVect<Rat>) -> Value {
    let mut o = Map::new();
    o.insert("d".into(), matrix_to_value(v.d()));
    Value::Object(o)
}

pub fn one_cell_from_value(v: &Value, ctx: &str) -> Result<OneCell<Rat>> {
    let m = obj(v, ctx)?;
    let src = two_vect_from_value(key(m, "src", ctx)?, &format!("{ctx}.src"))?;
    let dst = two_vect_from_value(key(m, "dst", ctx)?, &format!("{ctx}.dst"))?;
    let f1 = matrix_from_value(key(m, "f1", ctx)?, &format!("{ctx}.f1"))?;
    let f0 = matrix_from_value(key(m, "f0", ctx)?, &format!("{ctx}.f0"))?;
    OneCell::new(src, dst, f1, f0)
}

pub fn one_cell_to_value(c: &OneCell<Rat>) -> Value {
    let mut o = Map::new();
    o.insert("src".into(), two_vect_to_value(c.src()));
    o.insert("dst".into(), two_vect_to_value(c.dst()));
    o.insert("f1".into(), matrix_to_value(c.f1()));
    o.insert("f0".into(), matrix_to_value(c.f0()));
    Value::Object(o)
}

pub fn two_cell_from_value(v: &Value, ctx: &str) -> Result<TwoCell<Rat>> {
    let m = obj(v, ctx)?;
    let src = one_cell_from_value(key(m, "src", ctx)?, &format!("{ctx}.src"))?;
    let dst = one_cell_from_value(key(m, "dst", ctx)?, &format!("{ctx}.dst"))?;
    let sigma = matrix_from_value(key(m, "sigma", ctx)?, &format!("{ctx}.sigma"))?;
    TwoCell::new(src, dst, sigma)
}

pub fn two_cell_to_value(c: &TwoCell<Rat>) -> Value {
    let mut o = Map::new();
    o.insert("src".into(), one_cell_to_value(c.src()));
    o.insert("dst".into(), one_cell_to_value(c.dst()));
    o.insert("sigma".into(), matrix_to_value(c.sigma()));
    Value::Object(o)
}

/// Read 2-group data without validating the axioms.
pub fn two_group_from_value(v: &Value, ctx: &str) -> Result<TwoGroupData> {
    let m = obj(v, ctx)?;
    let pi0v = obj(key(m, "pi0", ctx)?, &format!("{ctx}.pi0"))?;
    let order = usize_of(key(pi0v, "order", ctx)?, &format!("{ctx}.pi0.order"))?;
    let mult_rows = array(key(pi0v, "mult", ctx)?, &format!("{ctx}.pi0.mult"))?;
    if mult_rows.len() != order {
        return Err(Error::Parse(format!(
            "{ctx}.pi0.mult: {} rows for declared order {order}",
            mult_rows.len()
        )));
    }
    let mult = mult_rows
        .iter()
        .enumerate()
        .map(|(i, row)| usize_table(row, &format!("{ctx}.pi0.mult[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let pi0 = FinGroup::from_table_unchecked(mult);

    let pi1v = obj(key(m, "pi1", ctx)?, &format!("{ctx}.pi1"))?;
    let factors = usize_table(
        key(pi1v, "invariant_factors", ctx)?,
        &format!("{ctx}.pi1.invariant_factors"),
    )?;
    let pi1 = FinAbGroup::new(factors)?;

    let tuple_at = |v: &Value, ctx: &str| -> Result<usize> {
        let t = usize_table(v, ctx)?;
        pi1.compose(&t)
            .map_err(|e| Error::Parse(format!("{ctx}: {e}")))
    };
    let action_rows = array(key(m, "action", ctx)?, &format!("{ctx}.action"))?;
    let mut action = Vec::with_capacity(action_rows.len());
    for (g, row) in action_rows.iter().enumerate() {
        let rctx = format!("{ctx}.action[{g}]");
        let row = array(row, &rctx)?;
        let parsed = row
            .iter()
            .enumerate()
            .map(|(a, t)| tuple_at(t, &format!("{rctx}[{a}]")))
            .collect::<Result<Vec<_>>>()?;
        action.push(parsed);
    }

    let z_rows = array(key(m, "z", ctx)?, &format!("{ctx}.z"))?;
    let mut z = Vec::with_capacity(z_rows.len());
    for (g1, plane) in z_rows.iter().enumerate() {
        let pctx = format!("{ctx}.z[{g1}]");
        let plane = array(plane, &pctx)?;
        let mut zp = Vec::with_capacity(plane.len());
        for (g2, row) in plane.iter().enumerate() {
            let rctx = format!("{pctx}[{g2}]");
            let row = array(row, &rctx)?;
            let parsed = row
                .iter()
                .enumerate()
                .map(|(g3, t)| tuple_at(t, &format!("{rctx}[{g3}]")))
                .collect::<Result<Vec<_>>>()?;
            zp.push(parsed);
        }
        z.push(zp);
    }

    Ok(TwoGroupData::new_unchecked(
        pi0,
        pi1,
        ActionTable::new(action),
        Cocycle3::new(z),
    ))
}

pub fn two_group_to_value(tg: &TwoGroupData) -> Value {
    let pi1 = tg.pi1();
    let tuple = |a: usize| Value::Array(pi1.decompose(a).into_iter().map(Value::from).collect());
    let mut pi0 = Map::new();
    pi0.insert("order".into(), Value::from(tg.pi0().order()));
    pi0.insert(
        "mult".into(),
        Value::Array(
            tg.pi0()
                .mult_table()
                .iter()
                .map(|row| Value::Array(row.iter().map(|&x| Value::from(x)).collect()))
                .collect(),
        ),
    );
    let mut pi1v = Map::new();
    pi1v.insert(
        "invariant_factors".into(),
        Value::Array(
            pi1.invariant_factors()
                .iter()
                .map(|&m| Value::from(m))
                .collect(),
        ),
    );
    let action = Value::Array(
        tg.action()
            .table()
            .iter()
            .map(|row| Value::Array(row.iter().map(|&a| tuple(a)).collect()))
            .collect(),
    );
    let z = Value::Array(
        tg.z()
            .table()
            .iter()
            .map(|plane| {
                Value::Array(
                    plane
                        .iter()
                        .map(|row| Value::Array(row.iter().map(|&a| tuple(a)).collect()))
                        .collect(),
                )
            })
            .collect(),
    );
    let mut o = Map::new();
    o.insert("kind".into(), Value::from("two_group"));
    o.insert("pi0".into(), Value::Object(pi0));
    o.insert("pi1".into(), Value::Object(pi1v));
    o.insert("action".into(), action);
    o.insert("z".into(), z);
    Value::Object(o)
}

/// A 2-group either inline (object) or referenced by path (string),
/// resolved relative to `base_dir`.
fn group_ref(v: &Value, base_dir: &Path, ctx: &str) -> Result<TwoGroupData> {
    match v {
        Value::String(path) => {
            let full = base_dir.join(path);
            match load_file(&full)? {
                LoadedFile::TwoGroup(tg) => Ok(tg),
                other => Err(Error::Parse(format!(
                    "{ctx}: {} is a {} file, expected two_group",
                    full.display(),
                    other.kind()
                ))),
            }
        }
        Value::Object(_) => two_group_from_value(v, ctx),
        _ => Err(Error::Parse(format!(
            "{ctx}: expected a path or an inline two_group"
        ))),
    }
}

pub fn representation_from_value(v: &Value, base_dir: &Path, ctx: &str) -> Result<RepReduced<Rat>> {
    let m = obj(v, ctx)?;
    let tg = group_ref(key(m, "group", ctx)?, base_dir, &format!("{ctx}.group"))?;
    let dims = usize_table(key(m, "dims", ctx)?, &format!("{ctx}.dims"))?;
    if dims.len() != 2 {
        return Err(Error::Parse(format!("{ctx}.dims: expected [dim1, dim0]")));
    }
    let rho1 = Rep1::new(
        tg.pi0().clone(),
        matrix_list(key(m, "rho1", ctx)?, &format!("{ctx}.rho1"))?,
    )?;
    let rho0 = Rep1::new(
        tg.pi0().clone(),
        matrix_list(key(m, "rho0", ctx)?, &format!("{ctx}.rho0"))?,
    )?;
    if rho1.dim() != dims[0] || rho0.dim() != dims[1] {
        return Err(Error::Parse(format!(
            "{ctx}.dims: declared ({},{}) but tables have ({},{})",
            dims[0],
            dims[1],
            rho1.dim(),
            rho0.dim()
        )));
    }
    let beta = matrix_list(key(m, "beta", ctx)?, &format!("{ctx}.beta"))?;
    let c_rows = array(key(m, "c", ctx)?, &format!("{ctx}.c"))?;
    let mut c = Vec::with_capacity(c_rows.len());
    for (g, row) in c_rows.iter().enumerate() {
        c.push(matrix_list(row, &format!("{ctx}.c[{g}]"))?);
    }
    RepReduced::new(tg, rho1, rho0, beta, c)
}

pub fn representation_to_value(r: &RepReduced<Rat>) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), Value::from("representation"));
    o.insert("group".into(), two_group_to_value(r.tg()));
    o.insert(
        "dims".into(),
        Value::Array(vec![Value::from(r.dim1()), Value::from(r.dim0())]),
    );
    o.insert("rho1".into(), matrix_list_value(r.rho1().mats()));
    o.insert("rho0".into(), matrix_list_value(r.rho0().mats()));
    o.insert("beta".into(), matrix_list_value(r.beta()));
    o.insert(
        "c".into(),
        Value::Array(
            r.c_table()
                .iter()
                .map(|row| matrix_list_value(row))
                .collect(),
        ),
    );
    Value::Object(o)
}

pub fn intertwiner_from_value(v: &Value, base_dir: &Path, ctx: &str) -> Result<Inter1<Rat>> {
    let m = obj(v, ctx)?;
    let src = representation_from_value(key(m, "src", ctx)?, base_dir, &format!("{ctx}.src"))?;
    let dst = representation_from_value(key(m, "dst", ctx)?, base_dir, &format!("{ctx}.dst"))?;
    let r1 = matrix_from_value(key(m, "r1", ctx)?, &format!("{ctx}.r1"))?;
    let r0 = matrix_from_value(key(m, "r0", ctx)?, &format!("{ctx}.r0"))?;
    let mu = matrix_list(key(m, "mu", ctx)?, &format!("{ctx}.mu"))?;
    Inter1::new(src, dst, r1, r0, mu)
}

pub fn intertwiner_to_value(t: &Inter1<Rat>) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), Value::from("intertwiner"));
    o.insert("src".into(), representation_to_value(t.src()));
    o.insert("dst".into(), representation_to_value(t.dst()));
    o.insert("r1".into(), matrix_to_value(t.r1()));
    o.insert("r0".into(), matrix_to_value(t.r0()));
    o.insert("mu".into(), matrix_list_value(t.mu()));
    Value::Object(o)
}

fn cochain_table(
    v: &Value,
    degree: usize,
    order: usize,
    out: &mut Vec<RatMatrix>,
    ctx: &str,
) -> Result<()> {
    if degree == 0 {
        out.push(matrix_from_value(v, ctx)?);
        return Ok(());
    }
    let rows = array(v, ctx)?;
    if rows.len() != order {
        return Err(Error::Parse(format!(
            "{ctx}: expected {order} entries, found {}",
            rows.len()
        )));
    }
    for (g, sub) in rows.iter().enumerate() {
        cochain_table(sub, degree - 1, order, out, &format!("{ctx}[{g}]"))?;
    }
    Ok(())
}

fn cochain_table_value(table: &[RatMatrix], degree: usize, order: usize) -> Value {
    if degree == 0 {
        return matrix_to_value(&table[0]);
    }
    let stride = table.len() / order;
    Value::Array(
        (0..order)
            .map(|g| cochain_table_value(&table[g * stride..(g + 1) * stride], degree - 1, order))
            .collect(),
    )
}

/// Load a cochain.  The group reference must validate (the bar complex is
/// meaningless otherwise); `"left"`/`"right"` actions default to identity.
pub fn cochain_from_value(
    v: &Value,
    base_dir: &Path,
    ctx: &str,
) -> Result<(Cochain<Rat>, TwoGroupData)> {
    let m = obj(v, ctx)?;
    let tg = group_ref(key(m, "group", ctx)?, base_dir, &format!("{ctx}.group"))?;
    crate::error::violations_to_error(&tg.validate())?;
    let group = tg.pi0().clone();
    let degree = usize_of(key(m, "degree", ctx)?, &format!("{ctx}.degree"))?;
    let shape = usize_table(key(m, "shape", ctx)?, &format!("{ctx}.shape"))?;
    if shape.len() != 2 {
        return Err(Error::Parse(format!("{ctx}.shape: expected [rows, cols]")));
    }
    let (rows, cols) = (shape[0], shape[1]);
    let left = match m.get("left") {
        Some(v) => matrix_list(v, &format!("{ctx}.left"))?,
        None => vec![Matrix::identity(rows); group.order()],
    };
    let right = match m.get("right") {
        Some(v) => matrix_list(v, &format!("{ctx}.right"))?,
        None => vec![Matrix::identity(cols); group.order()],
    };
    let bim = Arc::new(Bimodule::new(group.clone(), left, right, rows, cols)?);
    let mut table = Vec::with_capacity(tuples(group.order(), degree).len());
    cochain_table(
        key(m, "table", ctx)?,
        degree,
        group.order(),
        &mut table,
        &format!("{ctx}.table"),
    )?;
    Ok((Cochain::from_table(bim, degree, table)?, tg))
}

/// Serialize a cochain over the given 2-group (stored inline so the file
/// is self-contained).
pub fn cochain_to_value(c: &Cochain<Rat>, tg: &TwoGroupData) -> Value {
    let bim = c.bimodule();
    let order = bim.group().order();
    let mut o = Map::new();
    o.insert("kind".into(), Value::from("cochain"));
    o.insert("group".into(), two_group_to_value(tg));
    o.insert("degree".into(), Value::from(c.degree()));
    o.insert(
        "shape".into(),
        Value::Array(vec![Value::from(bim.rows()), Value::from(bim.cols())]),
    );
    o.insert(
        "left".into(),
        matrix_list_value(&(0..order).map(|g| bim.left(g).clone()).collect::<Vec<_>>()),
    );
    o.insert(
        "right".into(),
        matrix_list_value(&(0..order).map(|g| bim.right(g).clone()).collect::<Vec<_>>()),
    );
    o.insert(
        "table".into(),
        cochain_table_value(c.table(), c.degree(), order),
    );
    Value::Object(o)
}

/// Any loadable file, tagged by its `"kind"`.
///
/// Variant sizes differ by design: this is a short-lived parse result, not
/// a stored value, so boxing the large variants would only cost ergonomics.
#[allow(clippy::large_enum_variant)]
#[derive(Debug)]
pub enum LoadedFile {
    Complex(TwoVect<Rat>),
    OneCell(OneCell<Rat>),
    TwoCell(TwoCell<Rat>),
    TwoGroup(TwoGroupData),
    Representation(RepReduced<Rat>),
    Intertwiner(Inter1<Rat>),
    /// The cochain together with the 2-group its file referenced.
    Cochain(Cochain<Rat>, TwoGroupData),
}

impl LoadedFile {
    pub fn kind(&self) -> &'static str {
        match self {
            LoadedFile::Complex(_) => "complex",
            LoadedFile::OneCell(_) => "one_cell",
            LoadedFile::TwoCell(_) => "two_cell",
            LoadedFile::TwoGroup(_) => "two_group",
            LoadedFile::Representation(_) => "representation",
            LoadedFile::Intertwiner(_) => "intertwiner",
            LoadedFile::Cochain(..) => "cochain",
        }
    }
}

pub fn parse_value(text: &str, ctx: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{ctx}: {e}")))
}

pub fn load_file(path: &Path) -> Result<LoadedFile> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let ctx = path.display().to_string();
    let value = parse_value(&text, &ctx)?;
    let base_dir: PathBuf = path.parent().map_or_else(PathBuf::new, Path::to_path_buf);
    let m = obj(&value, &ctx)?;
    let kind = key(m, "kind", &ctx)?
        .as_str()
        .ok_or_else(|| Error::Parse(format!("{ctx}: \"kind\" must be a string")))?;
    match kind {
        "complex" => Ok(LoadedFile::Complex(two_vect_from_value(&value, &ctx)?)),
        "one_cell" => Ok(LoadedFile::OneCell(one_cell_from_value(&value, &ctx)?)),
        "two_cell" => Ok(LoadedFile::TwoCell(two_cell_from_value(&value, &ctx)?)),
        "two_group" => Ok(LoadedFile::TwoGroup(two_group_from_value(&value, &ctx)?)),
        "representation" => Ok(LoadedFile::Representation(representation_from_value(
            &value, &base_dir, &ctx,
        )?)),
        "intertwiner" => Ok(LoadedFile::Intertwiner(intertwiner_from_value(
            &value, &base_dir, &ctx,
        )?)),
        "cochain" => {
            let (c, tg) = cochain_from_value(&value, &base_dir, &ctx)?;
            Ok(LoadedFile::Cochain(c, tg))
        }
        other => Err(Error::Parse(format!("{ctx}: unknown kind \"{other}\""))),
    }
}

/// Pretty-printed JSON with a trailing newline; key order is alphabetical
/// (the serde_json map is ordered), so output is deterministic.
pub fn value_to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

pub fn save_value(path: &Path, v: &Value) -> Result<()> {
    fs::write(path, value_to_string(v))
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn rational_parsing_accepts_and_rejects() {
        assert_eq!(parse_rat("3", "t").unwrap(), rat(3, 1));
        assert_eq!(parse_rat("-7/2", "t").unwrap(), rat(-7, 2));
        assert_eq!(parse_rat(" 4 / 6 ", "t").unwrap(), rat(2, 3));
        assert!(matches!(parse_rat("1/0", "t"), Err(Error::Parse(_))));
        assert!(matches!(parse_rat("1/-2", "t"), Err(Error::Parse(_))));
        assert!(matches!(parse_rat("x", "t"), Err(Error::Parse(_))));
        assert!(matches!(parse_rat("", "t"), Err(Error::Parse(_))));
    }

    #[test]
    fn rational_formatting_round_trips() {
        for r in [rat(0, 1), rat(5, 1), rat(-5, 3), rat(22, 7)] {
            assert_eq!(parse_rat(&format_rat(&r), "t").unwrap(), r);
        }
    }

    #[test]
    fn matrix_round_trip_including_degenerate() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(-3, 1), rat(2, 5)],
        ])
        .unwrap();
        let back = matrix_from_value(&matrix_to_value(&m), "t").unwrap();
        assert_eq!(back, m);

        let empty = RatMatrix::zeros(0, 3);
        let back = matrix_from_value(&matrix_to_value(&empty), "t").unwrap();
        assert_eq!(back.rows(), 0);
        assert_eq!(back.cols(), 3);
    }

    #[test]
    fn matrix_accepts_integer_numbers() {
        let v: Value = serde_json::from_str("[[1, \"1/2\"], [0, -2]]").unwrap();
        let m = matrix_from_value(&v, "t").unwrap();
        assert_eq!(m[(0, 1)], rat(1, 2));
        assert_eq!(m[(1, 1)], rat(-2, 1));
    }
}

//! JSON interchange: posets, systems, structures, Weil data, and polynomial
//! maps, with exact rationals carried as strings.
//!
//! Loading distinguishes two failure channels so the CLI can map them to
//! different exit codes: [`LoadError::Schema`] for malformed or mistyped
//! input, [`LoadError::Domain`] for well-formed input that fails a
//! mathematical validation (cycles, coherence, surjectivity, …).
//!
//! Emission is deterministic: object keys are sorted, matrices print their
//! entries via the integer-shorthand rational format, and system maps are
//! listed for covering pairs only, ordered by (from, to).

use crate::error::Error;
use crate::matrix::Matrix;
use crate::multifoliate::MultifoliateStructure;
use crate::poly::{Poly, PolyMap};
use crate::poset::Poset;
use crate::projsys::{Completion, ProjectiveSystem, SystemIso};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::weil::{AlgebraHom, WeilAlgebra, WeilSystem};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

#[derive(Debug)]
pub enum LoadError {
    /// Malformed input: missing fields, wrong types, unparseable rationals.
    Schema(String),
    /// Structurally fine, mathematically invalid.
    Domain(Error),
}

impl From<Error> for LoadError {
    fn from(e: Error) -> LoadError {
        LoadError::Domain(e)
    }
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Schema(s) => write!(f, "{s}"),
            LoadError::Domain(e) => write!(f, "{e}"),
        }
    }
}

pub type LoadResult<T> = std::result::Result<T, LoadError>;

fn schema(msg: impl Into<String>) -> LoadError {
    LoadError::Schema(msg.into())
}

fn obj<'v>(v: &'v Value, what: &str) -> LoadResult<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(format!("{what} must be an object")))
}

fn field<'v>(m: &'v Map<String, Value>, key: &str, what: &str) -> LoadResult<&'v Value> {
    m.get(key).ok_or_else(|| schema(format!("{what} is missing the \"{key}\" field")))
}

fn as_array<'v>(v: &'v Value, what: &str) -> LoadResult<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| schema(format!("{what} must be an array")))
}

fn as_str<'v>(v: &'v Value, what: &str) -> LoadResult<&'v str> {
    v.as_str().ok_or_else(|| schema(format!("{what} must be a string")))
}

fn as_usize(v: &Value, what: &str) -> LoadResult<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(format!("{what} must be a non-negative integer")))
}

/// Rational entries accept the string forms "p/q" and "k", plus bare JSON
/// integers; floats are refused to keep arithmetic exact.
fn rat_from_value(v: &Value, what: &str) -> LoadResult<Rat> {
    match v {
        Value::String(s) => {
            parse_rat(s).map_err(|e| schema(format!("{what}: {e}")))
        }
        Value::Number(n) => n
            .as_i64()
            .map(crate::rat::int)
            .ok_or_else(|| schema(format!("{what} must be an exact integer or a \"p/q\" string"))),
        _ => Err(schema(format!("{what} must be a rational string or integer"))),
    }
}

/// Matrix as array of row arrays; `cols` pins the width of empty matrices.
pub fn matrix_from_value(v: &Value, cols: usize, what: &str) -> LoadResult<Matrix> {
    let rows_v = as_array(v, what)?;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(rows_v.len());
    for (r, row_v) in rows_v.iter().enumerate() {
        let row = as_array(row_v, &format!("{what} row {r}"))?;
        if row.len() != cols {
            return Err(schema(format!(
                "{what} row {r} has {} entries, expected {cols}",
                row.len()
            )));
        }
        rows.push(
            row.iter()
                .enumerate()
                .map(|(c, cell)| rat_from_value(cell, &format!("{what}[{r}][{c}]")))
                .collect::<LoadResult<_>>()?,
        );
    }
    Ok(Matrix::from_rows(rows, cols))
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols()).map(|c| Value::String(format_rat(m.at(r, c)))).collect(),
                )
            })
            .collect(),
    )
}

/// {"elements": [...], "leq": [["a","b"], ...]}
pub fn poset_from_value(v: &Value) -> LoadResult<Poset> {
    let m = obj(v, "poset")?;
    let elements = as_array(field(m, "elements", "poset")?, "\"elements\"")?
        .iter()
        .map(|e| as_str(e, "poset element").map(str::to_string))
        .collect::<LoadResult<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for (i, pair_v) in as_array(field(m, "leq", "poset")?, "\"leq\"")?.iter().enumerate() {
        let pair = as_array(pair_v, &format!("leq[{i}]"))?;
        if pair.len() != 2 {
            return Err(schema(format!("leq[{i}] must be a two-element array")));
        }
        pairs.push((
            as_str(&pair[0], &format!("leq[{i}][0]"))?.to_string(),
            as_str(&pair[1], &format!("leq[{i}][1]"))?.to_string(),
        ));
    }
    Ok(Poset::new(elements, &pairs)?)
}

pub fn poset_to_value(p: &Poset) -> Value {
    json!({
        "elements": p.elements(),
        "leq": p.covers().iter()
            .map(|&(a, b)| json!([p.id(a), p.id(b)]))
            .collect::<Vec<_>>(),
    })
}

/// {"poset": {...}, "dims": {"a": 1, ...}, "maps": [{"from": "b", "to": "a", "matrix": [[...]]}]}
pub fn system_from_value(v: &Value) -> LoadResult<ProjectiveSystem> {
    let m = obj(v, "system")?;
    let poset = poset_from_value(field(m, "poset", "system")?)?;
    let dims_m = obj(field(m, "dims", "system")?, "\"dims\"")?;
    let mut dims = vec![0usize; poset.len()];
    let mut seen = vec![false; poset.len()];
    for (k, dv) in dims_m {
        let idx = poset
            .index(k)
            .ok_or_else(|| LoadError::Domain(Error::UnknownElement(k.clone())))?;
        dims[idx] = as_usize(dv, &format!("dims[{k}]"))?;
        seen[idx] = true;
    }
    if let Some(i) = seen.iter().position(|&s| !s) {
        return Err(schema(format!("dims is missing element \"{}\"", poset.id(i))));
    }
    let mut maps = BTreeMap::new();
    for (i, map_v) in as_array(field(m, "maps", "system")?, "\"maps\"")?.iter().enumerate() {
        let mm = obj(map_v, &format!("maps[{i}]"))?;
        let from = as_str(field(mm, "from", &format!("maps[{i}]"))?, "\"from\"")?;
        let to = as_str(field(mm, "to", &format!("maps[{i}]"))?, "\"to\"")?;
        let upper = poset
            .index(from)
            .ok_or_else(|| LoadError::Domain(Error::UnknownElement(from.to_string())))?;
        let lower = poset
            .index(to)
            .ok_or_else(|| LoadError::Domain(Error::UnknownElement(to.to_string())))?;
        let matrix = matrix_from_value(
            field(mm, "matrix", &format!("maps[{i}]"))?,
            dims[upper],
            &format!("maps[{i}].matrix"),
        )?;
        maps.insert((upper, lower), matrix);
    }
    Ok(ProjectiveSystem::validate(poset, dims, maps)?)
}

pub fn system_to_value(s: &ProjectiveSystem) -> Value {
    let p = s.poset();
    let dims: Map<String, Value> = (0..p.len())
        .map(|a| (p.id(a).to_string(), json!(s.dims()[a])))
        .collect();
    let mut covers = p.covers();
    covers.sort_by_key(|&(a, b)| (p.id(b).to_string(), p.id(a).to_string()));
    let maps: Vec<Value> = covers
        .iter()
        .map(|&(a, b)| {
            json!({
                "from": p.id(b),
                "to": p.id(a),
                "matrix": matrix_to_value(&s.transition(b, a).expect("cover pair")),
            })
        })
        .collect();
    json!({ "poset": poset_to_value(p), "dims": dims, "maps": maps })
}

/// {"poset": {...}, "n": 3, "p": {"1": "a", "2": "a", "3": "b"}}
pub fn structure_from_value(v: &Value) -> LoadResult<MultifoliateStructure> {
    let m = obj(v, "structure")?;
    let poset = poset_from_value(field(m, "poset", "structure")?)?;
    let n = as_usize(field(m, "n", "structure")?, "\"n\"")?;
    let p_m = obj(field(m, "p", "structure")?, "\"p\"")?;
    let mut labels = vec![usize::MAX; n];
    for (k, id_v) in p_m {
        let i: usize = k
            .parse()
            .ok()
            .filter(|&i| (1..=n).contains(&i))
            .ok_or_else(|| schema(format!("p key \"{k}\" is not a coordinate in 1..={n}")))?;
        let id = as_str(id_v, &format!("p[{k}]"))?;
        labels[i - 1] = poset
            .index(id)
            .ok_or_else(|| LoadError::Domain(Error::UnknownElement(id.to_string())))?;
    }
    if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
        return Err(schema(format!("p is missing coordinate \"{}\"", i + 1)));
    }
    Ok(MultifoliateStructure::new(poset, labels)?)
}

pub fn structure_to_value(s: &MultifoliateStructure) -> Value {
    let p: Map<String, Value> = (0..s.n())
        .map(|i| ((i + 1).to_string(), json!(s.poset().id(s.label(i)))))
        .collect();
    json!({ "poset": poset_to_value(s.poset()), "n": s.n(), "p": p })
}

/// {"dim": 2, "labels": ["1","t"]?, "table": [[[...],[...]],[[...],[...]]]}
pub fn weil_algebra_from_value(v: &Value) -> LoadResult<WeilAlgebra> {
    let m = obj(v, "algebra")?;
    let dim = as_usize(field(m, "dim", "algebra")?, "\"dim\"")?;
    if dim == 0 {
        return Err(schema("\"dim\" must be at least 1"));
    }
    let labels = match m.get("labels") {
        Some(ls) => as_array(ls, "\"labels\"")?
            .iter()
            .map(|l| as_str(l, "label").map(str::to_string))
            .collect::<LoadResult<Vec<_>>>()?,
        None => (0..dim).map(|i| format!("e{i}")).collect(),
    };
    if labels.len() != dim {
        return Err(schema(format!("expected {dim} labels, got {}", labels.len())));
    }
    let table_v = as_array(field(m, "table", "algebra")?, "\"table\"")?;
    if table_v.len() != dim {
        return Err(schema(format!("table must have {dim} rows")));
    }
    let mut table = Vec::with_capacity(dim);
    for (i, row_v) in table_v.iter().enumerate() {
        let row = as_array(row_v, &format!("table[{i}]"))?;
        if row.len() != dim {
            return Err(schema(format!("table[{i}] must have {dim} entries")));
        }
        let mut out_row = Vec::with_capacity(dim);
        for (j, cell_v) in row.iter().enumerate() {
            let cell = as_array(cell_v, &format!("table[{i}][{j}]"))?;
            if cell.len() != dim {
                return Err(schema(format!("table[{i}][{j}] must have {dim} coordinates")));
            }
            out_row.push(
                cell.iter()
                    .enumerate()
                    .map(|(k, c)| rat_from_value(c, &format!("table[{i}][{j}][{k}]")))
                    .collect::<LoadResult<Vec<_>>>()?,
            );
        }
        table.push(out_row);
    }
    Ok(WeilAlgebra::validate(labels, table)?)
}

pub fn weil_algebra_to_value(a: &WeilAlgebra) -> Value {
    let table: Vec<Value> = a
        .table()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|cell| {
                        Value::Array(
                            cell.iter().map(|c| Value::String(format_rat(c))).collect(),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    json!({ "dim": a.dim(), "labels": a.labels(), "table": table })
}

/// {"poset": {...}, "algebras": {"a": {...}}, "homs": [{"from": "a", "to": "b", "matrix": ...}]}
pub fn weil_system_from_value(v: &Value) -> LoadResult<WeilSystem> {
    let m = obj(v, "weil system")?;
    let poset = poset_from_value(field(m, "poset", "weil system")?)?;
    let algs_m = obj(field(m, "algebras", "weil system")?, "\"algebras\"")?;
    let mut algebras: Vec<Option<WeilAlgebra>> = vec![None; poset.len()];
    for (k, av) in algs_m {
        let idx = poset
            .index(k)
            .ok_or_else(|| LoadError::Domain(Error::UnknownElement(k.clone())))?;
        algebras[idx] = Some(weil_algebra_from_value(av)?);
    }
    let algebras: Vec<WeilAlgebra> = algebras
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| schema(format!("algebras is missing \"{}\"", poset.id(i)))))
        .collect::<LoadResult<_>>()?;
    let mut homs = BTreeMap::new();
    for (i, hv) in as_array(field(m, "homs", "weil system")?, "\"homs\"")?.iter().enumerate() {
        let hm = obj(hv, &format!("homs[{i}]"))?;
        let from = as_str(field(hm, "from", &format!("homs[{i}]"))?, "\"from\"")?;
        let to = as_str(field(hm, "to", &format!("homs[{i}]"))?, "\"to\"")?;
        let lower = poset
            .index(from)
            .ok_or_else(|| LoadError::Domain(Error::UnknownElement(from.to_string())))?;
        let upper = poset
            .index(to)
            .ok_or_else(|| LoadError::Domain(Error::UnknownElement(to.to_string())))?;
        let matrix = matrix_from_value(
            field(hm, "matrix", &format!("homs[{i}]"))?,
            algebras[lower].dim(),
            &format!("homs[{i}].matrix"),
        )?;
        let hom = AlgebraHom::validate(&algebras[lower], &algebras[upper], matrix)?;
        homs.insert((lower, upper), hom);
    }
    Ok(WeilSystem::validate(poset, algebras, homs)?)
}

/// Polynomial map: {"vars": 2, "polys": [[{"exponents": [2,0], "coeff": "1"}, ...], ...]}
pub fn polymap_from_value(v: &Value) -> LoadResult<PolyMap> {
    let m = obj(v, "polynomial map")?;
    let vars = as_usize(field(m, "vars", "polynomial map")?, "\"vars\"")?;
    let mut polys = Vec::new();
    for (pi, poly_v) in
        as_array(field(m, "polys", "polynomial map")?, "\"polys\"")?.iter().enumerate()
    {
        let mut terms = Vec::new();
        for (ti, term_v) in as_array(poly_v, &format!("polys[{pi}]"))?.iter().enumerate() {
            let tm = obj(term_v, &format!("polys[{pi}][{ti}]"))?;
            let exps_v = as_array(
                field(tm, "exponents", &format!("polys[{pi}][{ti}]"))?,
                "\"exponents\"",
            )?;
            if exps_v.len() != vars {
                return Err(schema(format!(
                    "polys[{pi}][{ti}] has {} exponents, expected {vars}",
                    exps_v.len()
                )));
            }
            let exps = exps_v
                .iter()
                .map(|e| as_usize(e, "exponent").map(|n| n as u32))
                .collect::<LoadResult<Vec<u32>>>()?;
            let coeff = rat_from_value(
                field(tm, "coeff", &format!("polys[{pi}][{ti}]"))?,
                &format!("polys[{pi}][{ti}].coeff"),
            )?;
            terms.push((exps, coeff));
        }
        polys.push(Poly::from_terms(vars, terms));
    }
    Ok(PolyMap::new(vars, polys))
}

/// One algebra point per map input: [["2","3"], ...]
pub fn points_from_value(v: &Value, dim: usize, what: &str) -> LoadResult<Vec<Vec<Rat>>> {
    as_array(v, what)?
        .iter()
        .enumerate()
        .map(|(i, pv)| {
            let coords = as_array(pv, &format!("{what}[{i}]"))?;
            if coords.len() != dim {
                return Err(schema(format!(
                    "{what}[{i}] has {} coordinates, expected {dim}",
                    coords.len()
                )));
            }
            coords
                .iter()
                .enumerate()
                .map(|(k, c)| rat_from_value(c, &format!("{what}[{i}][{k}]")))
                .collect()
        })
        .collect()
}

pub fn points_to_value(points: &[Vec<Rat>]) -> Value {
    Value::Array(
        points
            .iter()
            .map(|p| Value::Array(p.iter().map(|c| Value::String(format_rat(c))).collect()))
            .collect(),
    )
}

pub fn completion_to_value(c: &Completion) -> Value {
    let index_map: Map<String, Value> =
        c.index_map.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({ "system": system_to_value(&c.system), "index_map": index_map })
}

pub fn system_iso_to_value(s: &ProjectiveSystem, t: &ProjectiveSystem, iso: &SystemIso) -> Value {
    let omega: Map<String, Value> = iso
        .omega
        .iter()
        .enumerate()
        .map(|(a, &b)| (s.poset().id(a).to_string(), json!(t.poset().id(b))))
        .collect();
    json!({
        "omega": omega,
        "limit_map": matrix_to_value(&iso.limit_map),
    })
}

/// Classification payload: structure, fiber sizes, basis rows, distinguished
/// ids, floors.
pub fn classification_to_value(c: &crate::classify::Classification) -> Value {
    let floors: Map<String, Value> =
        c.floors.iter().map(|(k, &v)| (k.clone(), json!(v))).collect();
    let sizes = c.structure.fiber_sizes();
    let fibers: Map<String, Value> = (0..c.structure.poset().len())
        .map(|a| (c.structure.poset().id(a).to_string(), json!(sizes[a])))
        .collect();
    json!({
        "structure": structure_to_value(&c.structure),
        "fibers": fibers,
        "basis": matrix_to_value(&c.basis),
        "distinguished": c.distinguished,
        "floors": floors,
    })
}

pub fn error_to_value(code: &str, message: &str, witness: Option<Value>) -> Value {
    let mut inner = Map::new();
    inner.insert("code".to_string(), json!(code));
    inner.insert("message".to_string(), json!(message));
    if let Some(w) = witness {
        inner.insert("witness".to_string(), w);
    }
    json!({ "error": Value::Object(inner) })
}

/// Structured witness for the variants that carry one: the offending pair,
/// the failing square, the bad index.  Unit variants get no witness — the
/// code already says everything.
fn error_witness(e: &Error) -> Option<Value> {
    use Error::*;
    Some(match e {
        Cycle { x, y } => json!({ "cycle": [x, y] }),
        DuplicateElement(id) | UnknownElement(id) | NotSurjective(id) => {
            json!({ "element": id })
        }
        PosetTooLarge { size, limit, what } => {
            json!({ "size": size, "limit": limit, "operation": what })
        }
        Rational { text } => json!({ "text": text }),
        MissingMap { lower, upper }
        | Coherence { lower, upper }
        | NotEpimorphism { lower, upper } => {
            json!({ "lower": lower, "upper": upper })
        }
        InvarianceFailure(antichain) => json!({ "antichain": antichain }),
        BadIndex(ix) => json!({ "index": ix }),
        SizeMismatch(a, b) => json!({ "left": a, "right": b }),
        BasisIncomplete { got, need } => json!({ "got": got, "need": need }),
        AmbiguousMinimal { index, a, b } => {
            json!({ "index": index, "positions": [a, b] })
        }
        NotCommutative { i, j } | NotMultiplicative { i, j } => json!({ "pair": [i, j] }),
        NotAssociative { i, j, k } => json!({ "triple": [i, j, k] }),
        _ => return None,
    })
}

/// Result of `Error` → payload conversion used by the CLI.
pub fn core_error_to_value(e: &Error) -> Value {
    error_to_value(e.code(), &e.to_string(), error_witness(e))
}

pub fn load_error_to_value(e: &LoadError) -> Value {
    match e {
        LoadError::Schema(msg) => error_to_value("SchemaError", msg, None),
        LoadError::Domain(err) => core_error_to_value(err),
    }
}

/// Checked accessor used for CLI kind autodetection.
pub fn detect_kind(v: &Value) -> Option<&'static str> {
    let m = v.as_object()?;
    if m.contains_key("algebras") {
        Some("weil-system")
    } else if m.contains_key("table") {
        Some("algebra")
    } else if m.contains_key("dims") && m.contains_key("maps") {
        Some("system")
    } else if m.contains_key("n") && m.contains_key("p") {
        Some("structure")
    } else if m.contains_key("elements") {
        Some("poset")
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn chain_system_value() -> Value {
        json!({
            "poset": {"elements": ["a", "b"], "leq": [["a", "b"]]},
            "dims": {"a": 1, "b": 2},
            "maps": [{"from": "b", "to": "a", "matrix": [["1", "0"]]}],
        })
    }

    #[test]
    fn poset_round_trip() {
        let v = json!({"elements": ["a", "b", "c"], "leq": [["a","b"], ["b","c"]]});
        let p = poset_from_value(&v).unwrap();
        assert_eq!(poset_from_value(&poset_to_value(&p)).unwrap(), p);
    }

    #[test]
    fn cyclic_posets_are_domain_errors() {
        let v = json!({"elements": ["a", "b"], "leq": [["a","b"], ["b","a"]]});
        match poset_from_value(&v).unwrap_err() {
            LoadError::Domain(e) => assert_eq!(e.code(), "CycleError"),
            LoadError::Schema(s) => panic!("expected domain error, got schema: {s}"),
        }
    }

    #[test]
    fn missing_fields_are_schema_errors() {
        let v = json!({"elements": ["a"]});
        assert!(matches!(poset_from_value(&v).unwrap_err(), LoadError::Schema(_)));
        let v = json!({"poset": {"elements": ["a"], "leq": []}, "dims": {}, "maps": []});
        assert!(matches!(system_from_value(&v).unwrap_err(), LoadError::Schema(_)));
    }

    #[test]
    fn system_round_trip_preserves_the_system() {
        let s = system_from_value(&chain_system_value()).unwrap();
        assert_eq!(s.limit_dim(), 2);
        let emitted = system_to_value(&s);
        let reparsed = system_from_value(&emitted).unwrap();
        assert_eq!(reparsed.dims(), s.dims());
        assert_eq!(system_to_value(&reparsed), emitted);
    }

    #[test]
    fn matrix_entries_accept_integers_and_fractions() {
        let v = json!([["1/2", 3], ["-2", "0"]]);
        let m = matrix_from_value(&v, 2, "m").unwrap();
        assert_eq!(m.at(0, 0), &crate::rat::rat(1, 2));
        assert_eq!(m.at(0, 1), &int(3));
        // floats are refused
        let v = json!([[0.5]]);
        assert!(matches!(matrix_from_value(&v, 1, "m").unwrap_err(), LoadError::Schema(_)));
    }

    #[test]
    fn structure_round_trip_and_key_checks() {
        let v = json!({
            "poset": {"elements": ["a", "b"], "leq": [["a","b"]]},
            "n": 3,
            "p": {"1": "a", "2": "a", "3": "b"},
        });
        let s = structure_from_value(&v).unwrap();
        assert_eq!(s.fiber_sizes(), vec![2, 1]);
        let again = structure_from_value(&structure_to_value(&s)).unwrap();
        assert_eq!(again, s);
        // out-of-range coordinate keys are schema errors
        let v = json!({
            "poset": {"elements": ["a"], "leq": []},
            "n": 1,
            "p": {"0": "a"},
        });
        assert!(matches!(structure_from_value(&v).unwrap_err(), LoadError::Schema(_)));
    }

    #[test]
    fn weil_algebra_round_trip() {
        let d = WeilAlgebra::dual_numbers();
        let v = weil_algebra_to_value(&d);
        assert_eq!(weil_algebra_from_value(&v).unwrap(), d);
    }

    #[test]
    fn kind_detection() {
        assert_eq!(detect_kind(&chain_system_value()), Some("system"));
        assert_eq!(detect_kind(&json!({"elements": [], "leq": []})), Some("poset"));
        assert_eq!(detect_kind(&json!({"n": 1, "p": {}, "poset": {}})), Some("structure"));
        assert_eq!(detect_kind(&json!({"dim": 1, "table": []})), Some("algebra"));
        assert_eq!(detect_kind(&json!({"algebras": {}, "poset": {}})), Some("weil-system"));
        assert_eq!(detect_kind(&json!(42)), None);
    }
}

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "plain" => Ok(Format::Plain),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

/// Flattens a JSON value into `(path, scalar)` pairs in key order.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    walk(v, String::new(), &mut out);
    out
}

fn walk(v: &Value, path: String, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            if m.is_empty() {
                out.push((path.clone(), "{}".into()));
            }
            for (k, x) in m {
                walk(x, join(k), out);
            }
        }
        Value::Array(a) => {
            if a.is_empty() {
                out.push((path.clone(), "[]".into()));
            }
            for (i, x) in a.iter().enumerate() {
                walk(x, join(&i.to_string()), out);
            }
        }
        Value::String(s) => out.push((path, s.clone())),
        other => out.push((path, other.to_string())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV table: a header and rows.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
        s.push('\n');
    }
    s
}

pub fn csv_flat(v: &Value) -> String {
    let rows: Vec<Vec<String>> = flatten(v).into_iter().map(|(k, x)| vec![k, x]).collect();
    csv(&["path", "value"], &rows)
}

pub fn plain_flat(v: &Value) -> String {
    let mut s = String::new();
    for (k, x) in flatten(v) {
        s.push_str(&format!("{k}: {x}\n"));
    }
    s
}

pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn str_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flatten_orders_keys() {
        let v = json!({"b": [1, {"c": "5/6"}], "a": true, "e": []});
        let f = flatten(&v);
        assert_eq!(
            f,
            vec![
                ("a".into(), "true".into()),
                ("b.0".into(), "1".into()),
                ("b.1.c".into(), "5/6".into()),
                ("e".into(), "[]".into()),
            ]
        );
    }

    #[test]
    fn csv_quotes_commas() {
        let s = csv(&["k", "v"], &[vec!["x".into(), "a,b".into()]]);
        assert_eq!(s, "k,v\nx,\"a,b\"\n");
    }
}

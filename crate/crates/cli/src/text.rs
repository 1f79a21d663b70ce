//! Line-oriented `kind key=value ...` records shared by all file formats.

use std::collections::BTreeMap;

use moveable_core::geometry::{Point, Rect};

/// Fixed six-decimal rendering; negative zero prints as zero.
pub fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

pub fn point(p: Point<f64>) -> String {
    format!("{},{}", num(p.x), num(p.y))
}

pub fn points(ps: &[Point<f64>]) -> String {
    ps.iter().map(|p| point(*p)).collect::<Vec<_>>().join(";")
}

pub fn rect(r: Rect<f64>) -> String {
    format!("{},{},{},{}", num(r.x), num(r.y), num(r.w), num(r.h))
}

pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Splits a line into whitespace-separated tokens; double-quoted runs keep
/// their spaces and are unescaped.
pub fn tokenize(line: &str) -> Result<Vec<String>, String> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut in_token = false;
    let mut chars = line.chars();
    while let Some(c) = chars.next() {
        match c {
            '"' => {
                in_token = true;
                loop {
                    match chars.next() {
                        None => return Err("unterminated string".into()),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some('n') => cur.push('\n'),
                            Some(e @ ('"' | '\\')) => cur.push(e),
                            _ => return Err("bad escape in string".into()),
                        },
                        Some(c) => cur.push(c),
                    }
                }
            }
            c if c.is_whitespace() => {
                if in_token {
                    tokens.push(std::mem::take(&mut cur));
                    in_token = false;
                }
            }
            c => {
                in_token = true;
                cur.push(c);
            }
        }
    }
    if in_token {
        tokens.push(cur);
    }
    Ok(tokens)
}

/// A parsed `kind key=value ...` line.
#[derive(Debug, Clone)]
pub struct Record {
    pub kind: String,
    fields: BTreeMap<String, String>,
}

impl Record {
    pub fn parse(line: &str) -> Result<Self, String> {
        let mut tokens = tokenize(line)?.into_iter();
        let kind = tokens.next().ok_or("empty record")?;
        let mut fields = BTreeMap::new();
        for t in tokens {
            let (k, v) = t.split_once('=').ok_or_else(|| format!("expected key=value, found `{t}`"))?;
            if fields.insert(k.to_string(), v.to_string()).is_some() {
                return Err(format!("duplicate key `{k}`"));
            }
        }
        Ok(Self { kind, fields })
    }

    fn take(&mut self, key: &str) -> Result<String, String> {
        self.fields.remove(key).ok_or_else(|| format!("`{}` record is missing `{key}`", self.kind))
    }

    pub fn str(&mut self, key: &str) -> Result<String, String> {
        self.take(key)
    }

    pub fn opt_str(&mut self, key: &str) -> Option<String> {
        self.fields.remove(key)
    }

    pub fn num(&mut self, key: &str) -> Result<f64, String> {
        parse_num(&self.take(key)?)
    }

    pub fn opt_num(&mut self, key: &str) -> Result<Option<f64>, String> {
        self.fields.remove(key).map(|v| parse_num(&v)).transpose()
    }

    pub fn uint(&mut self, key: &str) -> Result<u64, String> {
        let v = self.take(key)?;
        v.parse().map_err(|_| format!("`{key}` is not an unsigned integer: `{v}`"))
    }

    pub fn bool(&mut self, key: &str) -> Result<bool, String> {
        match self.take(key)?.as_str() {
            "true" => Ok(true),
            "false" => Ok(false),
            v => Err(format!("`{key}` is not a boolean: `{v}`")),
        }
    }

    pub fn point(&mut self, key: &str) -> Result<Point<f64>, String> {
        parse_point(&self.take(key)?)
    }

    pub fn points(&mut self, key: &str) -> Result<Vec<Point<f64>>, String> {
        let v = self.take(key)?;
        if v.is_empty() {
            return Ok(Vec::new());
        }
        v.split(';').map(parse_point).collect()
    }

    pub fn pair(&mut self, key: &str) -> Result<(f64, f64), String> {
        let p = self.point(key)?;
        Ok((p.x, p.y))
    }

    pub fn rect(&mut self, key: &str) -> Result<Rect<f64>, String> {
        parse_rect(&self.take(key)?)
    }

    /// `none` or a rectangle.
    pub fn opt_rect(&mut self, key: &str) -> Result<Option<Rect<f64>>, String> {
        match self.take(key)?.as_str() {
            "none" => Ok(None),
            v => parse_rect(v).map(Some),
        }
    }

    /// Fails if any key was not consumed.
    pub fn finish(self) -> Result<(), String> {
        match self.fields.keys().next() {
            Some(k) => Err(format!("unknown key `{k}` in `{}` record", self.kind)),
            None => Ok(()),
        }
    }
}

pub fn parse_num(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!("not a finite number: `{s}`")),
    }
}

fn parse_list(s: &str, n: usize) -> Result<Vec<f64>, String> {
    let v: Vec<f64> = s.split(',').map(parse_num).collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} comma-separated numbers, found `{s}`"));
    }
    Ok(v)
}

pub fn parse_point(s: &str) -> Result<Point<f64>, String> {
    let v = parse_list(s, 2)?;
    Ok(Point::new(v[0], v[1]))
}

pub fn parse_rect(s: &str) -> Result<Rect<f64>, String> {
    let v = parse_list(s, 4)?;
    Ok(Rect::new(v[0], v[1], v[2], v[3]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_are_fixed() {
        assert_eq!(num(10.0), "10.000000");
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(1.0 / 3.0), "0.333333");
    }

    #[test]
    fn quoted_tokens() {
        let t = tokenize(r#"group title="two words \"q\"" x=1"#).unwrap();
        assert_eq!(t, vec!["group", "title=two words \"q\"", "x=1"]);
        assert!(tokenize("a \"open").is_err());
        assert_eq!(tokenize(&format!("k s={}", quote("a\\b\nc"))).unwrap()[1], "s=a\\b\nc");
    }

    #[test]
    fn record_fields() {
        let mut r = Record::parse("rect id=3 at=1.5,2 r=1,2,3,4 extra=1").unwrap();
        assert_eq!(r.uint("id"), Ok(3));
        assert_eq!(r.point("at"), Ok(Point::new(1.5, 2.0)));
        assert_eq!(r.rect("r"), Ok(Rect::new(1.0, 2.0, 3.0, 4.0)));
        assert!(r.num("missing").is_err());
        assert!(r.finish().unwrap_err().contains("extra"));
        assert!(Record::parse("x a=1 a=2").is_err());
        assert!(parse_num("nan").is_err());
    }
}

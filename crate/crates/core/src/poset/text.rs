use super::Poset;
use crate::error::{Error, Result};

/// Parse the line-oriented poset format:
///
/// ```text
/// # comment
/// poset 3
/// cover 0 1
/// cover 0 2
/// ```
pub fn parse_poset_text(text: &str) -> Result<Poset> {
    let mut size = None;
    let mut covers = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::BadInput(format!("line {}: {msg}: {raw:?}", lineno + 1));
        let mut parts = line.split_whitespace();
        match (parts.next(), size) {
            (Some("poset"), None) => {
                let n =
                    parts.next().and_then(|s| s.parse::<usize>().ok()).ok_or_else(|| bad("expected `poset <size>`"))?;
                if parts.next().is_some() {
                    return Err(bad("trailing tokens"));
                }
                size = Some(n);
            }
            (Some("poset"), Some(_)) => return Err(bad("duplicate header")),
            (Some("cover"), Some(_)) => {
                let a = parts.next().and_then(|s| s.parse::<usize>().ok());
                let b = parts.next().and_then(|s| s.parse::<usize>().ok());
                match (a, b, parts.next()) {
                    (Some(a), Some(b), None) => covers.push((a, b)),
                    _ => return Err(bad("expected `cover <i> <j>`")),
                }
            }
            (Some(_), None) => return Err(bad("first line must be `poset <size>`")),
            _ => return Err(bad("unknown directive")),
        }
    }
    let size = size.ok_or_else(|| Error::BadInput("missing `poset <size>` header".into()))?;
    Poset::from_covers(size, &covers)
}

/// Resolve a poset by built-in name (`chain:<t>`, `antichain:<m>`, `v`, `w`,
/// `powerset:<p>`, `singleton`, `dual:<spec>`) or otherwise read it from a
/// file path.
pub fn parse_poset_spec(spec: &str) -> Result<Poset> {
    if let Some(rest) = spec.strip_prefix("dual:") {
        return Ok(parse_poset_spec(rest)?.dual());
    }
    if let Some(p) = builtin(spec)? {
        return Ok(p);
    }
    let text =
        std::fs::read_to_string(spec).map_err(|e| Error::BadInput(format!("cannot read poset {spec:?}: {e}")))?;
    parse_poset_text(&text)
}

fn builtin(spec: &str) -> Result<Option<Poset>> {
    let lower = spec.to_ascii_lowercase();
    let arg = |s: &str| s.parse::<usize>().map_err(|_| Error::BadInput(format!("bad numeric argument in {spec:?}")));
    let p = match lower.as_str() {
        "v" => Poset::v(),
        "w" => Poset::w(),
        "singleton" => Poset::singleton(),
        _ => {
            if let Some(t) = lower.strip_prefix("chain:") {
                Poset::chain(arg(t)?)
            } else if let Some(m) = lower.strip_prefix("antichain:") {
                Poset::antichain(arg(m)?)
            } else if let Some(p) = lower.strip_prefix("powerset:") {
                Poset::powerset(arg(p)?)?
            } else {
                return Ok(None);
            }
        }
    };
    Ok(Some(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_w() {
        let text = "# the poset W\nposet 4\n\ncover 0 1\ncover 0 2  # second\ncover 0 3\n";
        assert_eq!(parse_poset_text(text).unwrap(), Poset::w());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poset_text("cover 0 1\n").is_err());
        assert!(parse_poset_text("poset x\n").is_err());
        assert!(parse_poset_text("poset 2\ncover 0\n").is_err());
        assert!(parse_poset_text("poset 2\nedge 0 1\n").is_err());
        assert!(parse_poset_text("poset 2\ncover 0 5\n").is_err());
        assert!(parse_poset_text("").is_err());
    }

    #[test]
    fn builtins() {
        assert_eq!(parse_poset_spec("chain:4").unwrap(), Poset::chain(4));
        assert_eq!(parse_poset_spec("antichain:3").unwrap().size(), 3);
        assert_eq!(parse_poset_spec("V").unwrap(), Poset::v());
        assert_eq!(parse_poset_spec("powerset:2").unwrap().size(), 4);
        assert!(parse_poset_spec("chain:x").is_err());
        assert!(parse_poset_spec("/nonexistent/poset.txt").is_err());
    }
}

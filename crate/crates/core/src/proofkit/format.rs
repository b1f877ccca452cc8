//! The line-oriented script format.
//!
//! ```text
//! system: sqL*
//! lemma: 3
//! hyp: p -> q
//! hyp: q -> r
//! 1. p -> q ; HYP 1
//! 2. q -> r ; HYP 2
//! 3. (q -> q) -> (p -> r) ; RULE R2' 1,2
//! ```
//!
//! `#` starts a comment. A file may hold several scripts separated by a
//! line `---`.

use thiserror::Error;

use super::{Direction, Justification, ProofLine, ProofScript, Statement, System};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ScriptError {
    /// 1-based line of the file.
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ScriptError> {
    Err(ScriptError { line, message: message.into() })
}

/// Parses a file holding one or more scripts.
pub fn parse_scripts(text: &str) -> Result<Vec<ProofScript>, ScriptError> {
    let mut out = Vec::new();
    let mut chunk: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim() == "---" {
            out.push(parse_chunk(&chunk)?);
            chunk.clear();
        } else {
            chunk.push((i + 1, raw));
        }
    }
    if chunk.iter().any(|(_, l)| !strip_comment(l).is_empty()) || out.is_empty() {
        out.push(parse_chunk(&chunk)?);
    }
    Ok(out)
}

/// Parses a file holding exactly one script.
pub fn parse_script(text: &str) -> Result<ProofScript, ScriptError> {
    let mut all = parse_scripts(text)?;
    if all.len() != 1 {
        return err(1, format!("expected one script, found {}", all.len()));
    }
    Ok(all.remove(0))
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_chunk(lines: &[(usize, &str)]) -> Result<ProofScript, ScriptError> {
    let mut system = None;
    let mut script = ProofScript::new(System::SqLStar);
    let first = lines.first().map_or(1, |l| l.0);
    for &(no, raw) in lines {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("system:") {
            system = Some(rest.parse::<System>().or_else(|e| err(no, e))?);
        } else if let Some(rest) = line.strip_prefix("lemma:") {
            script.lemma = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("kind:") {
            match rest.trim() {
                "replacement" => script.replacement = true,
                other => return err(no, format!("unknown kind `{other}`")),
            }
        } else if let Some(rest) = line.strip_prefix("hyp:") {
            if !script.lines.is_empty() {
                return err(no, "hypotheses must precede the numbered lines");
            }
            script.hypotheses.push(statement(no, rest)?);
        } else {
            let (num, body) = line
                .split_once('.')
                .filter(|(n, _)| n.trim().chars().all(|c| c.is_ascii_digit()))
                .ok_or_else(|| ScriptError { line: no, message: format!("unexpected `{line}`") })?;
            let n: usize = num.trim().parse().or_else(|_| err(no, "missing line number"))?;
            if n != script.lines.len() + 1 {
                return err(no, format!("expected line {}, found {n}", script.lines.len() + 1));
            }
            let (formula, just) = body
                .rsplit_once(';')
                .ok_or_else(|| ScriptError { line: no, message: "missing `; JUST`".into() })?;
            script.lines.push(ProofLine {
                statement: statement(no, formula)?,
                just: justification(no, just)?,
            });
        }
    }
    script.system = match system {
        Some(s) => s,
        None => return err(first, "missing `system:` header"),
    };
    if script.lines.is_empty() {
        return err(first, "script has no lines");
    }
    Ok(script)
}

fn statement(no: usize, text: &str) -> Result<Statement, ScriptError> {
    Statement::parse(text.trim()).or_else(|e| err(no, e.to_string()))
}

fn indices(no: usize, text: Option<&str>) -> Result<Vec<usize>, ScriptError> {
    let Some(text) = text else { return Ok(vec![]) };
    text.split(',')
        .map(|s| {
            let s = s.trim().trim_end_matches('°');
            match s.parse::<usize>() {
                Ok(i) if i > 0 => Ok(i),
                _ => err(no, format!("bad index `{s}`")),
            }
        })
        .collect()
}

/// Accepts the prime written as `'` or `′`.
pub(crate) fn normalize_name(name: &str) -> String {
    name.replace('′', "'")
}

fn justification(no: usize, text: &str) -> Result<Justification, ScriptError> {
    let mut words = text.split_whitespace();
    let kind = words.next().unwrap_or("");
    let name = words.next();
    let rest: Vec<&str> = words.collect();
    let rest = (!rest.is_empty()).then(|| rest.join(""));
    match (kind, name) {
        ("AX", Some(name)) => {
            let direction = match rest {
                None => None,
                Some(d) => Some(d.parse::<Direction>().or_else(|e| err(no, e))?),
            };
            Ok(Justification::Axiom { name: name.to_string(), direction })
        }
        ("HYP", Some(i)) if rest.is_none() => match i.parse::<usize>() {
            Ok(i) if i > 0 => Ok(Justification::Hypothesis(i)),
            _ => err(no, format!("bad hypothesis index `{i}`")),
        },
        ("RULE", Some(name)) => Ok(Justification::Rule {
            name: normalize_name(name),
            premises: indices(no, rest.as_deref())?,
        }),
        ("LEM", Some(id)) => Ok(Justification::Lemma {
            id: id.trim_matches(|c| c == '(' || c == ')').to_string(),
            premises: indices(no, rest.as_deref())?,
        }),
        _ => err(no, format!("bad justification `{}`", text.trim())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# transitivity
system: sqL*
lemma: 3
hyp: p -> q
hyp: q -> r
1. p -> q ; HYP 1
2. q -> r ; HYP 2
3. (q -> q) -> (p -> r) ; RULE R2′ 1, 2
4. p <-> ((q -> q) -> p) ; AX Q3
";

    #[test]
    fn parses_and_prints_round_trip() {
        let s = parse_script(SAMPLE).unwrap();
        assert_eq!(s.system, System::SqLStar);
        assert_eq!(s.lemma.as_deref(), Some("3"));
        assert_eq!(s.hypotheses.len(), 2);
        assert_eq!(
            s.lines[2].just,
            Justification::Rule { name: "R2'".into(), premises: vec![1, 2] }
        );
        assert!(matches!(s.lines[3].statement, Statement::Iff(..)));
        let again = parse_script(&s.to_string()).unwrap();
        assert_eq!(again, s);
    }

    #[test]
    fn multiple_scripts() {
        let text = format!("{SAMPLE}---\nsystem: L*\n1. p -> 1 ; AX P4\n");
        let all = parse_scripts(&text).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[1].system, System::LStar);
        assert!(parse_script(&text).is_err());
    }

    #[test]
    fn errors_carry_file_lines() {
        let e = parse_script("system: sqL*\n1. p -> 1 ; AX Q10\n3. p ; HYP 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_script("system: sqL*\n1. p -> ; AX Q10\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_script("1. p -> 1 ; AX Q10\n").is_err());
        assert!(parse_script("system: sqL*\n1. p ; FOO 1\n").is_err());
    }
}

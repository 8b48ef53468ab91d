use cls_engine::Rule;
use term_core::{parse_term, Alphabet};

use crate::error::CliError;

/// Parses the text of a rules file into combinator rules.
///
/// Each non-blank line outside `#` comments declares one rule:
///
/// ```text
/// # name, order, then the right-hand side over x1..xn
/// W 2 := x1x2x2
/// B 3 := x1(x2x3)
/// ```
///
/// The name and the order (how many arguments the combinator consumes) sit
/// left of `:=`; the right-hand side is a term over the variables `x1..xn`
/// with no constants. Every problem is reported with its line number.
pub fn parse_rules(text: &str) -> Result<Vec<Rule>, CliError> {
    let mut declarations = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let number = index + 1;
        let (head, rhs) = line
            .split_once(":=")
            .ok_or_else(|| CliError::usage(format!("rules line {number}: missing `:=`")))?;
        let mut parts = head.split_whitespace();
        let name = parts
            .next()
            .ok_or_else(|| CliError::usage(format!("rules line {number}: missing name")))?;
        let order: u32 = parts
            .next()
            .ok_or_else(|| {
                CliError::usage(format!("rules line {number}: missing order after {name}"))
            })?
            .parse()
            .map_err(|_| {
                CliError::usage(format!("rules line {number}: the order must be a number"))
            })?;
        if let Some(extra) = parts.next() {
            return Err(CliError::usage(format!(
                "rules line {number}: unexpected `{extra}` before `:=`"
            )));
        }
        declarations.push((number, name.to_string(), order, rhs.trim().to_string()));
    }

    let alphabet = Alphabet::new(declarations.iter().map(|(_, name, _, _)| name.clone()))
        .map_err(|error| CliError::usage(format!("rules file: {error}")))?;
    let mut rules = Vec::with_capacity(declarations.len());
    for (number, name, order, rhs) in &declarations {
        let rhs_term = parse_term(rhs, &alphabet)
            .map_err(|error| CliError::usage(format!("rules line {number}: {error}")))?;
        let rule = Rule::new(name.clone(), *order, rhs_term)
            .map_err(|error| CliError::usage(format!("rules line {number}: {error}")))?;
        rules.push(rule);
    }
    Ok(rules)
}

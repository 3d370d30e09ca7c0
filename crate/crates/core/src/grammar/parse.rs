use crate::error::{Error, Result};
use crate::rewrite::{LayerKind, PositionClass, RewriteRule};

/// A rule together with the 1-based line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourcedRule {
    pub line: usize,
    pub rule: RewriteRule,
}

/// Parses a `.rules` file: `#` comments, blank lines, and
/// `layer<TAB>position<TAB>input<TAB>output` rows with space-separated
/// uppercase hex scalars (`-` spells an empty output).
pub fn parse_rules(source_name: &str, text: &str) -> Result<Vec<SourcedRule>> {
    let mut rules = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let row = raw.strip_suffix('\r').unwrap_or(raw);
        if row.trim().is_empty() || row.trim_start().starts_with('#') {
            continue;
        }
        let err = |column: usize, message: String| Error::Parse {
            source_name: source_name.to_string(),
            line,
            column,
            message,
        };
        let mut fields = Vec::with_capacity(4);
        let mut column = 1;
        for field in row.split('\t') {
            fields.push((column, field));
            column += field.chars().count() + 1;
        }
        if fields.len() != 4 {
            return Err(err(
                1,
                format!("expected 4 tab-separated fields, found {}", fields.len()),
            ));
        }
        let (layer_col, layer) = fields[0];
        let layer: LayerKind = layer.parse().map_err(|m| err(layer_col, m))?;
        let (pos_col, position) = fields[1];
        let position: PositionClass = position.parse().map_err(|m| err(pos_col, m))?;
        let (in_col, input) = fields[2];
        let input = parse_scalars(input, in_col).map_err(|(c, m)| err(c, m))?;
        if input.is_empty() {
            return Err(err(in_col, "rule input is empty".into()));
        }
        let (out_col, output) = fields[3];
        let output = if output == "-" {
            Vec::new()
        } else {
            let out = parse_scalars(output, out_col).map_err(|(c, m)| err(c, m))?;
            if out.is_empty() {
                return Err(err(out_col, "empty output must be written `-`".into()));
            }
            out
        };
        rules.push(SourcedRule {
            line,
            rule: RewriteRule {
                layer,
                position,
                input,
                output,
            },
        });
    }
    Ok(rules)
}

fn parse_scalars(field: &str, start_col: usize) -> std::result::Result<Vec<char>, (usize, String)> {
    let mut out = Vec::new();
    let mut col = start_col;
    for token in field.split(' ') {
        if token.is_empty() {
            if field.is_empty() {
                break;
            }
            return Err((col, "empty code point (doubled or stray space)".into()));
        }
        let valid_digits = token.bytes().all(|b| b.is_ascii_digit() || (b'A'..=b'F').contains(&b));
        if !(4..=6).contains(&token.len()) || !valid_digits {
            return Err((col, format!("`{token}` is not a 4 to 6 digit uppercase hex code point")));
        }
        let value = u32::from_str_radix(token, 16).expect("validated hex");
        let c = char::from_u32(value).ok_or_else(|| (col, format!("U+{value:04X} is not a Unicode scalar value")))?;
        out.push(c);
        col += token.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err(text: &str) -> (usize, usize) {
        match parse_rules("t.rules", text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_rows_and_skips_comments() {
        let text = "# c\n\nvisual_lang\tword_final\t0649\t06CC\nreading_lang\tposition_independent\t064A 0654\t-\n";
        let rules = parse_rules("t", text).unwrap();
        assert_eq!(rules.len(), 2);
        assert_eq!(rules[0].line, 3);
        assert_eq!(rules[0].rule.position, PositionClass::WordFinal);
        assert_eq!(rules[1].rule.input, vec!['\u{064A}', '\u{0654}']);
        assert!(rules[1].rule.output.is_empty());
    }

    #[test]
    fn reports_line_and_column() {
        assert_eq!(parse_err("visual_lang\tfinal\t0649\t06CC"), (1, 13));
        assert_eq!(parse_err("\nvisual_lang\tword_final\t0649\t06cc"), (2, 29));
        assert_eq!(parse_err("visual_lang\tword_final\t0649 XYZ1\t06CC"), (1, 29));
        assert_eq!(parse_err("nfc\tword_final\t0649\t06CC"), (1, 1));
        assert_eq!(parse_err("visual_lang\tword_final\t0649"), (1, 1));
        assert_eq!(parse_err("visual_lang\tword_final\t\t06CC"), (1, 24));
        assert_eq!(parse_err("visual_lang\tword_final\t0649\t"), (1, 29));
        assert_eq!(parse_err("visual_lang\tword_final\tD800\t0649"), (1, 24));
    }

    #[test]
    fn tolerates_crlf() {
        let rules = parse_rules("t", "visual_lang\tisolated\t0647\t06C1\r\n").unwrap();
        assert_eq!(rules[0].rule.output, vec!['\u{06C1}']);
    }
}

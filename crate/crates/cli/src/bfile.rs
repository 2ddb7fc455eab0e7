//! OEIS b-file format: `<index> <value>` per line, 1-based, no header.

use perfover::Count;

use crate::CliError;

pub fn write_bfile(terms: &[Count]) -> String {
    terms
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{} {v}\n", i + 1))
        .collect()
}

/// Parses a b-file, skipping blank lines and `#` comments.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, Count)>, CliError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || CliError::Usage(format!("b-file line {}: `{line}`", lineno + 1));
        let (idx, val) = line.split_once(char::is_whitespace).ok_or_else(bad)?;
        let idx: u64 = idx.parse().map_err(|_| bad())?;
        let val: Count = val.trim().parse().map_err(|_| bad())?;
        out.push((idx, val));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let terms: Vec<Count> = [2u32, 1, 5, 1, 5].map(Count::from).to_vec();
        let text = write_bfile(&terms);
        assert_eq!(text, "1 2\n2 1\n3 5\n4 1\n5 5\n");
        let parsed = parse_bfile(&text).unwrap();
        assert_eq!(parsed.len(), 5);
        assert!(parsed
            .iter()
            .enumerate()
            .all(|(i, (idx, v))| *idx == i as u64 + 1 && *v == terms[i]));
        assert!(parse_bfile("1\n").is_err());
        assert_eq!(
            parse_bfile("# comment\n\n7 13\n").unwrap(),
            vec![(7, Count::from(13u32))]
        );
    }
}

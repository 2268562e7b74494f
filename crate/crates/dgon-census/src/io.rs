//! Line-delimited JSON output for census runs.

use std::io::{self, Write};

use serde::Serialize;

use dgon::diagram::ElementDto;

use crate::index::Alphabet;

#[derive(Serialize)]
struct CensusRecord {
    id: u64,
    mask: u64,
    elements: Vec<ElementDto>,
    is_maximal_noncrossing: bool,
}

/// Write one JSON record per mask, in the given order, with ids counting
/// from zero. Output depends only on the inputs.
pub fn write_census<W: Write>(w: &mut W, alpha: &Alphabet, masks: &[u64]) -> io::Result<()> {
    for (id, &mask) in masks.iter().enumerate() {
        let d = alpha.diagram_of(mask);
        let record = CensusRecord {
            id: id as u64,
            mask,
            elements: d.iter().map(ElementDto::from).collect(),
            is_maximal_noncrossing: alpha.is_maximal_noncrossing(mask),
        };
        serde_json::to_writer(&mut *w, &record)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

/// The census as one in-memory byte buffer.
pub fn census_bytes(alpha: &Alphabet, masks: &[u64]) -> Vec<u8> {
    let mut buf = Vec::new();
    write_census(&mut buf, alpha, masks).expect("writing to memory cannot fail");
    buf
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_one_json_object_per_line() {
        let alpha = Alphabet::new(4).unwrap();
        let masks = [0u64, 0b11, alpha.full_mask()];
        let bytes = census_bytes(&alpha, &masks);
        let text = String::from_utf8(bytes).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        for (k, line) in lines.iter().enumerate() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["id"], k as u64);
            assert!(v["elements"].is_array());
        }
        let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first["mask"], 0);
        assert_eq!(first["is_maximal_noncrossing"], false);
    }

    #[test]
    fn byte_output_is_deterministic() {
        let alpha = Alphabet::new(4).unwrap();
        let masks: Vec<u64> = (0..64).collect();
        assert_eq!(census_bytes(&alpha, &masks), census_bytes(&alpha, &masks));
    }
}

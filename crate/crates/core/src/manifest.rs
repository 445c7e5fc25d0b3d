//! Plain-text manifest format (UTF-8, LF line endings):
//!
//! ```text
//! version 1
//! width 64
//! height 64
//! eta 8
//! DSF 0 stego_00.pgm
//! ...
//! SIGN 0 stego_16.pgm
//! ```
//!
//! Stego file names are resolved relative to the manifest's directory and
//! run to the end of the line.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::pgm;
use crate::pipeline::{CarrierManifest, CarrierRole, ManifestEntry};

pub fn to_text(manifest: &CarrierManifest) -> String {
    let mut out = header_text(
        manifest.format_version,
        manifest.payload_width,
        manifest.payload_height,
        manifest.eta,
    );
    for entry in &manifest.entries {
        writeln!(out, "{} {}", entry.role, entry.stego).unwrap();
    }
    out
}

fn header_text(version: u32, width: usize, height: usize, eta: u32) -> String {
    format!("version {version}\nwidth {width}\nheight {height}\neta {eta}\n")
}

/// The header shared by manifests and decomposition parameter records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamsRecord {
    pub version: u32,
    pub width: usize,
    pub height: usize,
    pub eta: u32,
}

impl ParamsRecord {
    pub fn to_text(&self) -> String {
        header_text(self.version, self.width, self.height, self.eta)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let record = parse_header(&mut lines)?;
        if let Some((no, line)) = lines.next() {
            return Err(Error::Manifest(format!(
                "line {}: unexpected {line:?}",
                no + 1
            )));
        }
        Ok(record)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<ParamsRecord> {
    let mut field = |name: &str| -> Result<u64> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::Manifest(format!("missing {name} line")))?;
        parse_field(line, name).map_err(|m| Error::Manifest(format!("line {}: {m}", no + 1)))
    };
    Ok(ParamsRecord {
        version: field("version")? as u32,
        width: field("width")? as usize,
        height: field("height")? as usize,
        eta: field("eta")? as u32,
    })
}

pub fn parse(text: &str) -> Result<CarrierManifest> {
    let mut lines = content_lines(text);
    let header = parse_header(&mut lines)?;
    let mut entries = Vec::new();
    for (no, line) in lines {
        let entry =
            parse_entry(line).map_err(|m| Error::Manifest(format!("line {}: {m}", no + 1)))?;
        entries.push(entry);
    }
    let manifest = CarrierManifest {
        format_version: header.version,
        payload_width: header.width,
        payload_height: header.height,
        eta: header.eta,
        entries,
    };
    manifest.validate()?;
    Ok(manifest)
}

fn parse_field(line: &str, name: &str) -> std::result::Result<u64, String> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(key), Some(value), None) if key == name => value
            .parse()
            .map_err(|_| format!("bad {name} value {value:?}")),
        _ => Err(format!("expected \"{name} <integer>\", found {line:?}")),
    }
}

fn parse_entry(line: &str) -> std::result::Result<ManifestEntry, String> {
    let mut parts = line.splitn(3, ' ');
    let (Some(kind), Some(plane), Some(stego)) = (parts.next(), parts.next(), parts.next()) else {
        return Err(format!("expected \"ROLE plane filename\", found {line:?}"));
    };
    let kind = kind.parse().map_err(|e: Error| e.to_string())?;
    let plane: u8 = plane
        .parse()
        .map_err(|_| format!("bad plane index {plane:?}"))?;
    let role = CarrierRole::new(kind, plane).map_err(|e| e.to_string())?;
    let stego = stego.trim_end_matches('\r').to_string();
    if stego.is_empty() {
        return Err("empty stego file name".into());
    }
    Ok(ManifestEntry { role, stego })
}

pub fn write(path: impl AsRef<Path>, manifest: &CarrierManifest) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_text(manifest)).map_err(|e| Error::io(path, e))
}

pub fn read(path: impl AsRef<Path>) -> Result<CarrierManifest> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse(&text)
}

/// Path of each stego, relative to the manifest's directory.
pub fn stego_paths(manifest_path: &Path, manifest: &CarrierManifest) -> Vec<PathBuf> {
    let dir = manifest_path.parent().unwrap_or(Path::new(""));
    manifest
        .entries
        .iter()
        .map(|e| dir.join(&e.stego))
        .collect()
}

/// Loads every stego named in the manifest, in entry order.
pub fn load_stegos(manifest_path: &Path, manifest: &CarrierManifest) -> Result<Vec<GrayImage>> {
    stego_paths(manifest_path, manifest)
        .iter()
        .map(pgm::load)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::MappingParams;

    #[test]
    fn text_roundtrip() {
        let m = CarrierManifest::canonical(64, 32, MappingParams::new(5).unwrap());
        let text = to_text(&m);
        assert!(text.starts_with("version 1\nwidth 64\nheight 32\neta 5\nDSF 0 stego_00.pgm\n"));
        assert!(text.ends_with("SIGN 0 stego_16.pgm\n"));
        assert_eq!(parse(&text).unwrap(), m);
    }

    #[test]
    fn file_names_may_contain_spaces() {
        let mut m = CarrierManifest::canonical(2, 2, MappingParams::default());
        m.entries[3].stego = "my stego 3.pgm".into();
        assert_eq!(parse(&to_text(&m)).unwrap(), m);
    }

    #[test]
    fn malformed_manifests() {
        let good = to_text(&CarrierManifest::canonical(4, 4, MappingParams::default()));
        assert!(parse("").is_err());
        assert!(parse(&good.replace("eta 8", "eta 9")).is_err());
        assert!(parse(&good.replace("width 4", "width four")).is_err());
        assert!(parse(&good.replace("ERROR 7", "ERROR 8")).is_err());
        assert!(parse(&good.replace("ERROR 7", "DSF 0")).is_err());
        assert!(parse(&good.replace("SIGN 0 stego_16.pgm\n", "")).is_err());
        assert!(parse(&good.replace("DSF 1", "BOGUS 1")).is_err());
    }
}

//! On-disk cache of reduced bases keyed by a SHA-256 digest of
//! (variables, order, generators).

use std::fs;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::poly::{parse_poly, Polynomial, Ring};

use super::{GbConfig, GroebnerBasis};

const MAGIC: &str = "# resint reduced basis v1";

fn entry_path(cfg: &GbConfig, ring: &Ring, gens: &[Polynomial]) -> Option<PathBuf> {
    let dir = cfg.cache_dir.as_ref()?;
    let mut h = Sha256::new();
    for v in ring.vars() {
        h.update(v.as_bytes());
        h.update(b",");
    }
    h.update(b";");
    h.update(ring.order().name().as_bytes());
    for g in gens {
        h.update(b"\n");
        h.update(g.to_string().as_bytes());
    }
    Some(dir.join(format!("{}.gb", hex::encode(h.finalize()))))
}

pub(crate) fn load(cfg: &GbConfig, ring: &Ring, gens: &[Polynomial]) -> Option<GroebnerBasis> {
    let path = entry_path(cfg, ring, gens)?;
    let text = fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    if lines.next()? != MAGIC {
        return None;
    }
    let elements = lines
        .map(|l| parse_poly(l, ring))
        .collect::<Result<Vec<_>, _>>()
        .ok()?;
    Some(GroebnerBasis::from_trusted(ring, elements))
}

/// Best effort: I/O failures leave the cache untouched.
pub(crate) fn save(cfg: &GbConfig, ring: &Ring, gens: &[Polynomial], gb: &GroebnerBasis) {
    let Some(path) = entry_path(cfg, ring, gens) else { return };
    if fs::create_dir_all(path.parent().expect("joined path")).is_err() {
        return;
    }
    let mut body = String::from(MAGIC);
    for e in gb.elements() {
        body.push('\n');
        body.push_str(&e.to_string());
    }
    body.push('\n');
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    if fs::write(&tmp, body).is_ok() && fs::rename(&tmp, &path).is_err() {
        let _ = fs::remove_file(&tmp);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_disk() {
        let dir = std::env::temp_dir().join(format!("resint-store-{}", std::process::id()));
        let cfg = GbConfig::default().with_cache_dir(Some(dir.clone()));
        let ring = Ring::grevlex(&["x", "y", "z"]).unwrap();
        let gens = vec![
            parse_poly("x^2 - y*z", &ring).unwrap(),
            parse_poly("1/2*x*y - z^2", &ring).unwrap(),
        ];
        assert!(load(&cfg, &ring, &gens).is_none());
        let gb = GroebnerBasis::compute(&ring, &gens, &cfg).unwrap();
        save(&cfg, &ring, &gens, &gb);
        let back = load(&cfg, &ring, &gens).unwrap();
        assert_eq!(back, gb);
        let _ = fs::remove_dir_all(dir);
    }
}

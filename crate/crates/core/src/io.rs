//! JSON formats shared by the library and the CLI: group specs, partition
//! files, certificates, and a canonical table serialization with an
//! optional on-disk construction cache.

use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{build_family, FamilyId};
use crate::group::{GroupTable, PermSpec};
use crate::nap::{NapCertKind, NapCertificate};
use crate::partition::{AbelianPartition, Certificate, ThetaResult};

/// Environment variable naming the construction cache directory.
pub const CACHE_ENV: &str = "APG_CACHE_DIR";

// ----------------------------------------------------------------------
// group specs

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermJson {
    pub degree: usize,
    pub generators: Vec<Vec<u16>>,
}

/// Group spec file: either {"family": name, "params": [...]} or
/// {"perm": {"degree": n, "generators": [...]}}.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perm: Option<PermJson>,
}

impl GroupSpecFile {
    pub fn from_family(id: &str, params: &[u64]) -> GroupSpecFile {
        GroupSpecFile {
            family: Some(id.to_string()),
            params: params.to_vec(),
            perm: None,
        }
    }

    /// Parses a CLI-style spec: a family string like `dihedral:20`, or a
    /// path to a JSON spec file.
    pub fn from_arg(arg: &str) -> Result<GroupSpecFile> {
        if arg.ends_with(".json") || arg.contains('/') {
            let text = fs::read_to_string(arg)?;
            let spec: GroupSpecFile = serde_json::from_str(&text)?;
            return Ok(spec);
        }
        let mut parts = arg.split(':');
        let name = parts.next().unwrap_or_default().to_string();
        let params: Vec<u64> = parts
            .map(|p| {
                p.parse::<u64>()
                    .map_err(|_| Error::InvalidParams(format!("bad family parameter {p:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(GroupSpecFile::from_family(&name, &params))
    }

    pub fn family_id(&self) -> Result<Option<FamilyId>> {
        match &self.family {
            None => Ok(None),
            Some(name) => {
                let mut s = name.clone();
                for p in &self.params {
                    s.push(':');
                    s.push_str(&p.to_string());
                }
                FamilyId::parse(&s).map(Some)
            }
        }
    }

    pub fn build(&self) -> Result<GroupTable> {
        match (&self.family, &self.perm) {
            (Some(_), None) => {
                let id = self.family_id()?.expect("family present");
                build_family(&id)
            }
            (None, Some(p)) => {
                let spec = PermSpec {
                    degree: p.degree,
                    generators: p.generators.clone(),
                };
                GroupTable::from_generators(&spec, &format!("perm-deg{}", p.degree))
            }
            _ => Err(Error::InvalidParams(
                "group spec needs exactly one of \"family\" or \"perm\"".into(),
            )),
        }
    }

    /// Builds, consulting APG_CACHE_DIR for dense tables when set.
    pub fn build_cached(&self) -> Result<GroupTable> {
        let Some(dir) = cache_dir() else {
            return self.build();
        };
        let key = cache_key(&serde_json::to_string(self)?);
        let path = dir.join(format!("{key}.json"));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(g) = read_canonical(&text) {
                return Ok(g);
            }
        }
        let g = self.build()?;
        if g.mul_table().is_some() {
            let _ = fs::create_dir_all(&dir);
            let _ = fs::write(&path, write_canonical(&g));
        }
        Ok(g)
    }
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

fn cache_key(s: &str) -> String {
    // FNV-1a, enough to key a private cache
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

// ----------------------------------------------------------------------
// canonical table serialization

#[derive(Serialize, Deserialize)]
struct CanonicalTable {
    size: usize,
    construction_tag: String,
    mul: Vec<u32>,
}

/// Size, tag, and the row-major multiplication table; stable for golden
/// files. Dense backend only.
pub fn write_canonical(g: &GroupTable) -> String {
    let mul = g
        .mul_table()
        .map(|t| t.to_vec())
        .unwrap_or_else(|| {
            let n = g.size() as u32;
            let mut t = Vec::with_capacity(g.size() * g.size());
            for a in 0..n {
                for b in 0..n {
                    t.push(g.mul(a, b));
                }
            }
            t
        });
    serde_json::to_string(&CanonicalTable {
        size: g.size(),
        construction_tag: g.construction_tag.clone(),
        mul,
    })
    .expect("canonical table serializes")
}

pub fn read_canonical(text: &str) -> Result<GroupTable> {
    let t: CanonicalTable = serde_json::from_str(text)?;
    if t.mul.len() != t.size * t.size {
        return Err(Error::MalformedClaim("table length != size^2".into()));
    }
    GroupTable::from_mul_table(t.mul, &t.construction_tag)
}

// ----------------------------------------------------------------------
// partition files

/// Partition file: {"group": <group spec>, "blocks": [[indices], ...]}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionFile {
    pub group: GroupSpecFile,
    pub blocks: Vec<Vec<u32>>,
}

impl PartitionFile {
    pub fn partition(&self) -> AbelianPartition {
        AbelianPartition::new(self.blocks.clone())
    }
}

// ----------------------------------------------------------------------
// certificate and result JSON

/// {"kind", "params", "inequality": {"lhs", "rhs"}, "cross_validated"};
/// big counts are decimal strings.
pub fn nap_certificate_json(c: &NapCertificate) -> Value {
    let (kind, params) = match &c.kind {
        NapCertKind::SelfCentralizingInvolution { witness } => (
            "SelfCentralizingInvolution",
            json!({ "witness": witness }),
        ),
        NapCertKind::DihedralProductCount { k_list, di, dm } => (
            "DihedralProductCount",
            json!({ "k_list": k_list, "di": di, "dm": dm }),
        ),
        NapCertKind::WreathCount { k, p, di_nc, dm_nc } => (
            "WreathCount",
            json!({ "k": k, "p": p, "di_nc": di_nc, "dm_nc": dm_nc }),
        ),
        NapCertKind::FixedPointFreeCount { k_star, h } => (
            "FixedPointFreeCount",
            json!({ "k_star": k_star, "h": h }),
        ),
        NapCertKind::Exhaustive => ("Exhaustive", json!({})),
    };
    json!({
        "kind": kind,
        "params": params,
        "inequality": {
            "lhs": c.inequality.lhs.to_string(),
            "rhs": c.inequality.rhs.to_string(),
        },
        "cross_validated": c.cross_validated,
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    let (kind, params) = match c {
        Certificate::Exhaustive => ("Exhaustive", json!({})),
        Certificate::CentralizerMinimal { anchors } => {
            ("CentralizerMinimal", json!({ "anchors": anchors }))
        }
        Certificate::FamilyFormula { name } => ("FamilyFormula", json!({ "name": name })),
        Certificate::SandwichedBounds => ("SandwichedBounds", json!({})),
        Certificate::NapExhaustive => ("NapExhaustive", json!({})),
        Certificate::NapCounting { summary } => ("NapCounting", json!({ "summary": summary })),
        Certificate::NapSelfCentralizing { witness } => {
            ("NapSelfCentralizing", json!({ "witness": witness }))
        }
    };
    json!({ "kind": kind, "params": params })
}

/// ThetaResult as stable JSON: value, certificate, and the blocks when a
/// partition was constructed.
pub fn theta_result_json(t: &ThetaResult) -> Value {
    json!({
        "value": t.value,
        "certificate": certificate_json(&t.certificate),
        "partition": t.partition.as_ref().map(|p| json!({ "blocks": p.blocks })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_theta;

    #[test]
    fn family_spec_roundtrip() {
        let spec = GroupSpecFile::from_arg("dihedral:20").unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.size(), 20);
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"family":"dihedral","params":[20]}"#);
        let back: GroupSpecFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build().unwrap().size(), 20);
    }

    #[test]
    fn perm_spec_builds() {
        let text = r#"{"perm": {"degree": 3, "generators": [[1,0,2],[1,2,0]]}}"#;
        let spec: GroupSpecFile = serde_json::from_str(text).unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.size(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn bad_specs_rejected() {
        assert!(serde_json::from_str::<GroupSpecFile>(r#"{"order": 6}"#).is_err());
        let both = GroupSpecFile {
            family: Some("dihedral".into()),
            params: vec![8],
            perm: Some(PermJson {
                degree: 1,
                generators: vec![],
            }),
        };
        assert!(both.build().is_err());
        assert!(GroupSpecFile::from_arg("dihedral:x").is_err());
    }

    #[test]
    fn canonical_roundtrip() {
        let g = crate::families::dihedral(4);
        let text = write_canonical(&g);
        let back = read_canonical(&text).unwrap();
        assert_eq!(back.size(), 8);
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(back.mul(a, b), g.mul(a, b));
            }
        }
        assert_eq!(write_canonical(&back), text, "stable across a roundtrip");
    }

    #[test]
    fn cache_hits_use_stored_table() {
        let dir = std::env::temp_dir().join(format!("apg-cache-test-{}", std::process::id()));
        // env mutation is process-global; this test owns the variable
        std::env::set_var(CACHE_ENV, &dir);
        let spec = GroupSpecFile::from_arg("quaternion:16").unwrap();
        let g1 = spec.build_cached().unwrap();
        let g2 = spec.build_cached().unwrap();
        assert_eq!(g1.size(), 16);
        assert_eq!(g2.size(), 16);
        assert!(dir.read_dir().unwrap().next().is_some(), "cache file written");
        std::env::remove_var(CACHE_ENV);
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn theta_json_shape() {
        let t = family_theta(&FamilyId::parse("dihedral:16").unwrap()).unwrap();
        let v = theta_result_json(&t);
        assert_eq!(v["value"], 5);
        assert_eq!(v["certificate"]["kind"], "CentralizerMinimal");
        assert!(v["partition"]["blocks"].is_array());
    }

    #[test]
    fn nap_certificate_json_shape() {
        let out = crate::nap::nap_wreath_check(5, 3).unwrap();
        let v = nap_certificate_json(out.certificate().unwrap());
        assert_eq!(v["kind"], "WreathCount");
        assert_eq!(v["params"]["di_nc"], 120);
        assert_eq!(v["inequality"]["lhs"], "221");
        assert_eq!(v["inequality"]["rhs"], "250");
        assert_eq!(v["cross_validated"], true);
    }

    #[test]
    fn partition_file_verifies() {
        let spec = GroupSpecFile::from_arg("dihedral:8").unwrap();
        let g = spec.build().unwrap();
        let t = family_theta(&spec.family_id().unwrap().unwrap()).unwrap();
        let pf = PartitionFile {
            group: spec,
            blocks: t.partition.unwrap().blocks,
        };
        let text = serde_json::to_string(&pf).unwrap();
        let back: PartitionFile = serde_json::from_str(&text).unwrap();
        crate::partition::verify_partition(&g, &back.partition()).unwrap();
    }
}

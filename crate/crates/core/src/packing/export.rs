use serde::Serialize;

use super::{Mode, PackingError, PackingReport};
use crate::config::FMatrix;
use crate::inversive::{sphere_from_coords, SphereKind};
use crate::Coord5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SceneFormat {
    Csv,
    Json,
}

/// One exported sphere: exact coordinates plus float geometry for renderers.
///
/// Planes report their unit normal in `nx, ny, nz` and `offset` for `{p : n·p = offset}`;
/// spheres report `cx, cy, cz` and the signed `radius`.
#[derive(Debug, Clone, Serialize)]
struct Record {
    kind: &'static str,
    a: String,
    b: String,
    xhat: String,
    yhat: String,
    zhat: String,
    bend: f64,
    cx: Option<f64>,
    cy: Option<f64>,
    cz: Option<f64>,
    radius: Option<f64>,
    nx: Option<f64>,
    ny: Option<f64>,
    nz: Option<f64>,
    offset: Option<f64>,
}

fn record(c: &Coord5) -> Record {
    let mut r = Record {
        kind: "sphere",
        a: c.a.to_string(),
        b: c.b.to_string(),
        xhat: c.xhat.to_string(),
        yhat: c.yhat.to_string(),
        zhat: c.zhat.to_string(),
        bend: c.b.to_f64(),
        cx: None,
        cy: None,
        cz: None,
        radius: None,
        nx: None,
        ny: None,
        nz: None,
        offset: None,
    };
    match sphere_from_coords(c).map(|s| s.kind().clone()) {
        Ok(SphereKind::Honest { center, radius }) => {
            let [x, y, z] = center.map(|v| v.to_f64());
            (r.cx, r.cy, r.cz, r.radius) = (Some(x), Some(y), Some(z), Some(radius.to_f64()));
        }
        Ok(SphereKind::Planar { normal, offset }) => {
            let [x, y, z] = normal.map(|v| v.to_f64());
            r.kind = "plane";
            (r.nx, r.ny, r.nz, r.offset) = (Some(x), Some(y), Some(z), Some(offset.to_f64()));
        }
        Err(_) => r.kind = "invalid",
    }
    r
}

/// The eight spheres of one configuration, in export order.
pub fn scene_from_configuration(f: &FMatrix) -> Vec<Coord5> {
    let mut s = f.spheres().to_vec();
    s.sort_by(|a, b| a.b.abs().cmp(&b.b.abs()).then_with(|| a.cmp(b)));
    s
}

pub fn export_spheres(spheres: &[Coord5], format: SceneFormat) -> Vec<u8> {
    let records: Vec<Record> = spheres.iter().map(record).collect();
    match format {
        SceneFormat::Json => {
            let mut out = serde_json::to_vec_pretty(&records).expect("records serialize");
            out.push(b'\n');
            out
        }
        SceneFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if records.is_empty() {
                w.write_record([
                    "kind", "a", "b", "xhat", "yhat", "zhat", "bend", "cx", "cy", "cz", "radius",
                    "nx", "ny", "nz", "offset",
                ])
                .expect("in-memory write");
            }
            for r in &records {
                w.serialize(r).expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}

pub fn export_scene(report: &PackingReport, format: SceneFormat) -> Result<Vec<u8>, PackingError> {
    if report.mode != Mode::Geometric {
        return Err(PackingError::NotGeometric);
    }
    Ok(export_spheres(&report.spheres, format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{f0, f1};
    use crate::packing::{generate, PackingSpec};

    #[test]
    fn standard_configuration_scene() {
        let s = scene_from_configuration(&f0());
        let csv = String::from_utf8(export_spheres(&s, SceneFormat::Csv)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 9);
        assert!(lines[0].starts_with("kind,a,b,"));
        assert_eq!(lines.iter().filter(|l| l.starts_with("plane,")).count(), 2);
        let json: serde_json::Value =
            serde_json::from_slice(&export_spheres(&s, SceneFormat::Json)).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 8);
    }

    #[test]
    fn empty_scene_is_header_only() {
        let csv = String::from_utf8(export_spheres(&[], SceneFormat::Csv)).unwrap();
        assert_eq!(csv.lines().count(), 1);
    }

    #[test]
    fn bend_only_reports_are_rejected() {
        let r = generate(&PackingSpec::new(f1(), 8, Mode::BendOnly)).unwrap();
        assert_eq!(
            export_scene(&r, SceneFormat::Csv),
            Err(PackingError::NotGeometric)
        );
    }

    #[test]
    fn record_count_matches_sphere_count() {
        let r = generate(&PackingSpec::new(f1(), 8, Mode::Geometric)).unwrap();
        let csv = String::from_utf8(export_scene(&r, SceneFormat::Csv).unwrap()).unwrap();
        let total: u64 = r.bend_multiplicity.values().sum();
        assert_eq!(csv.lines().count() as u64, total + 1);
    }
}

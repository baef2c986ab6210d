//! JSON form of a web.
//!
//! ```json
//! {"n":2,
//!  "vertices":[{"id":0,"boundary":true,"rotation":[0]},{"id":1,"boundary":true,"rotation":[1]}],
//!  "edges":[{"id":0,"tail":0,"head":1,"label":1}],
//!  "boundary":[0,1],
//!  "marked":0}
//! ```
//!
//! Rotations list half-edge ids (`2·edge + 0` for the tail end, `+ 1` for
//! the head end) counterclockwise. `boundary` lists the boundary vertices
//! clockwise and `marked` is the position in that list where reading starts.
//! An optional `path` records the Littelmann path a generated web came from.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Dart, Edge, Vertex, VertexKind, Web};
use crate::error::{input, Result};
use crate::littelmann::MinusculePath;

#[derive(Serialize, Deserialize)]
struct WebFile {
    n: usize,
    vertices: Vec<VertexEntry>,
    edges: Vec<EdgeEntry>,
    boundary: Vec<usize>,
    #[serde(default)]
    marked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    path: Option<MinusculePath>,
}

#[derive(Serialize, Deserialize)]
struct VertexEntry {
    id: usize,
    #[serde(default)]
    boundary: bool,
    rotation: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EdgeEntry {
    id: usize,
    tail: usize,
    head: usize,
    label: u32,
}

/// A parsed web file.
#[derive(Clone, Debug)]
pub struct WebDocument {
    pub web: Web,
    pub path: Option<MinusculePath>,
}

pub fn to_json(web: &Web) -> String {
    to_json_with_path(web, None)
}

pub fn to_json_with_path(web: &Web, path: Option<&MinusculePath>) -> String {
    let file = WebFile {
        n: web.n,
        vertices: web
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| VertexEntry {
                id,
                boundary: v.kind == VertexKind::Boundary,
                rotation: v.rotation.iter().map(|d| d.half_edge()).collect(),
            })
            .collect(),
        edges: web
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| EdgeEntry {
                id,
                tail: e.tail,
                head: e.head,
                label: e.label,
            })
            .collect(),
        boundary: web.boundary.clone(),
        marked: 0,
        path: path.cloned(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("webs always serialize");
    text.push('\n');
    text
}

pub fn from_json(text: &str) -> Result<Web> {
    Ok(parse_document(text)?.web)
}

pub fn parse_document(text: &str) -> Result<WebDocument> {
    let file: WebFile = serde_json::from_str(text)?;
    let mut vids = HashMap::new();
    for (i, v) in file.vertices.iter().enumerate() {
        if vids.insert(v.id, i).is_some() {
            return input(format!("vertex id {} appears twice", v.id));
        }
    }
    let mut eids = HashMap::new();
    for (i, e) in file.edges.iter().enumerate() {
        if eids.insert(e.id, i).is_some() {
            return input(format!("edge id {} appears twice", e.id));
        }
    }
    let vertex = |id: usize| {
        vids.get(&id)
            .copied()
            .ok_or_else(|| crate::Error::Input(format!("unknown vertex id {id}")))
    };
    let edges = file
        .edges
        .iter()
        .map(|e| {
            Ok(Edge {
                tail: vertex(e.tail)?,
                head: vertex(e.head)?,
                label: e.label,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let vertices =
        file.vertices
            .iter()
            .map(|v| {
                let rotation =
                    v.rotation
                        .iter()
                        .map(|&h| {
                            let d = Dart::from_half_edge(h);
                            let e = eids.get(&d.edge).copied().ok_or_else(|| {
                                crate::Error::Input(format!("unknown half-edge {h}"))
                            })?;
                            Ok(Dart::new(e, d.end))
                        })
                        .collect::<Result<Vec<_>>>()?;
                Ok(Vertex {
                    kind: if v.boundary {
                        VertexKind::Boundary
                    } else {
                        VertexKind::Internal
                    },
                    rotation,
                })
            })
            .collect::<Result<Vec<_>>>()?;
    let mut boundary = file
        .boundary
        .iter()
        .map(|&b| vertex(b))
        .collect::<Result<Vec<_>>>()?;
    if file.marked > 0 && file.marked >= boundary.len() {
        return input(format!(
            "marked position {} is past the boundary",
            file.marked
        ));
    }
    boundary.rotate_left(file.marked);
    let web = Web::from_parts(file.n, vertices, edges, boundary)?;
    if let Some(p) = &file.path {
        if p.n() != web.n() {
            return input("recorded path has a different rank from the web");
        }
    }
    Ok(WebDocument {
        web,
        path: file.path,
    })
}

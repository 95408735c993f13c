//! The layout JSON document.
//!
//! ```json
//! {"version":1,
//!  "frame":{"width":100,"height":100},
//!  "objects":[{"id":"o1","x":10,"y":10,"width":20,"height":20,"kind":"image","label":"logo"}],
//!  "meta":{"title":"Main page","screenshot":"main.png"}}
//! ```
//!
//! Unknown keys are rejected at every level. `kind` defaults to `"other"`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::layout::{validate_layout, Frame, Layout, LayoutMeta, LayoutObject, ObjectKind, Rect};
use crate::layout::{ValidationErrors, LAYOUT_VERSION};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    MalformedSyntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation at `{field}`: {message}")]
    SchemaViolation { field: String, message: String },
    #[error("invalid layout: {0}")]
    Invalid(#[from] ValidationErrors),
}

// `version` is optional at the serde level so that a missing frame is
// reported before a missing version.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutDocument {
    #[serde(default)]
    version: Option<u32>,
    frame: Frame,
    objects: Vec<ObjectDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<LayoutMeta>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjectDocument {
    id: String,
    x: f64,
    y: f64,
    width: f64,
    height: f64,
    #[serde(default)]
    kind: ObjectKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

/// Extracts the backticked name from serde's "missing field `x`" and
/// "unknown field `x`, expected ..." messages.
fn named_field(message: &str) -> Option<&str> {
    let rest = message
        .strip_prefix("missing field `")
        .or_else(|| message.strip_prefix("unknown field `"))?;
    rest.split('`').next()
}

fn schema_field(path: &str, message: &str) -> String {
    let base = if path == "." { "" } else { path };
    match named_field(message) {
        Some(name) if !base.ends_with(name) => {
            if base.is_empty() {
                name.to_string()
            } else {
                format!("{base}.{name}")
            }
        }
        _ if base.is_empty() => "$".to_string(),
        _ => base.to_string(),
    }
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

fn classify(err: serde_path_to_error::Error<serde_json::Error>) -> FormatError {
    let path = err.path().to_string();
    let inner = err.into_inner();
    let message = strip_position(&inner.to_string());
    match inner.classify() {
        serde_json::error::Category::Data => FormatError::SchemaViolation {
            field: schema_field(&path, &message),
            message,
        },
        _ => FormatError::MalformedSyntax {
            line: inner.line(),
            column: inner.column(),
            message,
        },
    }
}

/// Parses and validates a layout document.
pub fn parse_layout(bytes: &[u8]) -> Result<Layout, FormatError> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let doc: LayoutDocument = serde_path_to_error::deserialize(&mut de).map_err(classify)?;
    de.end().map_err(|e| FormatError::MalformedSyntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    let version = match doc.version {
        Some(LAYOUT_VERSION) => LAYOUT_VERSION,
        Some(other) => {
            return Err(FormatError::SchemaViolation {
                field: "version".into(),
                message: format!("unsupported version {other}, expected {LAYOUT_VERSION}"),
            })
        }
        None => {
            return Err(FormatError::SchemaViolation {
                field: "version".into(),
                message: "missing field `version`".into(),
            })
        }
    };
    let layout = Layout {
        version,
        frame: doc.frame,
        objects: doc
            .objects
            .into_iter()
            .map(|o| LayoutObject {
                id: o.id,
                rect: Rect::new(o.x, o.y, o.width, o.height),
                kind: o.kind,
                label: o.label,
            })
            .collect(),
        meta: doc.meta,
    };
    Ok(validate_layout(layout)?)
}

/// Canonical document: keys in schema order, objects in input order, two-space
/// indentation and a trailing newline.
pub fn serialize_layout(layout: &Layout) -> Vec<u8> {
    let doc = LayoutDocument {
        version: Some(layout.version),
        frame: layout.frame,
        objects: layout
            .objects
            .iter()
            .map(|o| ObjectDocument {
                id: o.id.clone(),
                x: o.rect.x,
                y: o.rect.y,
                width: o.rect.width,
                height: o.rect.height,
                kind: o.kind,
                label: o.label.clone(),
            })
            .collect(),
        meta: layout.meta.clone(),
    };
    let mut out = serde_json::to_vec_pretty(&doc).expect("layout documents always serialize");
    out.push(b'\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::Violation;

    const MINIMAL: &str = r#"{"version":1,"frame":{"width":100,"height":100},
        "objects":[{"id":"o1","x":10,"y":10,"width":20,"height":20}]}"#;

    fn schema_field_of(doc: &str) -> String {
        match parse_layout(doc.as_bytes()) {
            Err(FormatError::SchemaViolation { field, .. }) => field,
            other => panic!("expected schema violation, got {other:?}"),
        }
    }

    #[test]
    fn minimal_document_defaults_kind() {
        let layout = parse_layout(MINIMAL.as_bytes()).unwrap();
        assert_eq!(layout.objects[0].kind, ObjectKind::Other);
        assert_eq!(layout.objects[0].rect, Rect::new(10.0, 10.0, 20.0, 20.0));
        assert!(layout.meta.is_none());
    }

    #[test]
    fn missing_frame() {
        assert_eq!(schema_field_of(r#"{"version":1,"objects":[]}"#), "frame");
        assert_eq!(schema_field_of("{}"), "frame");
        let no_version = MINIMAL.replace(r#""version":1,"#, "");
        assert_eq!(schema_field_of(&no_version), "version");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let doc = MINIMAL.replace(r#""height":20}"#, r#""height":20,"colour":"red"}"#);
        assert_eq!(schema_field_of(&doc), "objects[0].colour");
        let doc = MINIMAL.replace(r#"{"version":1"#, r#"{"version":1,"extra":true"#);
        assert_eq!(schema_field_of(&doc), "extra");
    }

    #[test]
    fn wrong_types_name_the_field() {
        let doc = MINIMAL.replace(r#""x":10"#, r#""x":"ten""#);
        assert_eq!(schema_field_of(&doc), "objects[0].x");
        let doc = MINIMAL.replace(r#""kind""#, "").replace(r#""height":20}"#, r#""height":20,"kind":"video"}"#);
        assert_eq!(schema_field_of(&doc), "objects[0].kind");
    }

    #[test]
    fn unsupported_version() {
        assert_eq!(schema_field_of(&MINIMAL.replace(r#""version":1"#, r#""version":2"#)), "version");
    }

    #[test]
    fn negative_width_is_a_validation_error() {
        let doc = MINIMAL.replace(r#""width":20"#, r#""width":-5"#);
        assert_eq!(
            parse_layout(doc.as_bytes()),
            Err(FormatError::Invalid(ValidationErrors(vec![Violation::NonPositiveSize("o1".into())])))
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_layout(b"{\n  \"version\": 1,,\n}") {
            Err(FormatError::MalformedSyntax { line, column, .. }) => {
                assert_eq!(line, 2);
                assert!(column > 0);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_layout(format!("{MINIMAL} trailing").as_bytes()),
            Err(FormatError::MalformedSyntax { .. })
        ));
    }

    #[test]
    fn serialize_omits_absent_meta_and_keeps_labels() {
        let mut layout = parse_layout(MINIMAL.as_bytes()).unwrap();
        let text = String::from_utf8(serialize_layout(&layout)).unwrap();
        assert!(!text.contains("meta"));
        assert!(!text.contains("label"));

        layout.objects[0].label = Some("logo".into());
        layout.meta = Some(LayoutMeta {
            title: Some("Main".into()),
            screenshot: None,
        });
        let text = String::from_utf8(serialize_layout(&layout)).unwrap();
        assert!(text.contains(r#""label": "logo""#));
        assert!(text.contains(r#""title": "Main""#));
        assert!(!text.contains("screenshot"));
        assert_eq!(parse_layout(text.as_bytes()).unwrap(), layout);
    }

    #[test]
    fn keys_in_schema_order() {
        let layout = parse_layout(MINIMAL.as_bytes()).unwrap();
        let text = String::from_utf8(serialize_layout(&layout)).unwrap();
        let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("version") < pos("frame") && pos("frame") < pos("objects"));
        assert!(pos("id") < pos("x") && pos("x") < pos("y") && pos("height") < pos("kind"));
        assert!(text.ends_with("}\n"));
    }
}

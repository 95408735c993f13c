//! Per-object geometry behind "Show Detail".

use crate::layout::{check_layout, Layout};
use crate::metrics::{measure, MeasureReport, Result};

/// Geometry of one annotated object relative to the frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectDetail {
    pub id: String,
    pub width: f64,
    pub height: f64,
    pub area: f64,
    pub center_x: f64,
    pub center_y: f64,
    /// Signed offset of the object center from the frame center.
    pub offset_x: f64,
    pub offset_y: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetailReport {
    pub objects: Vec<ObjectDetail>,
    pub measures: MeasureReport,
}

impl DetailReport {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }
}

pub fn detail(layout: &Layout) -> Result<DetailReport> {
    check_layout(layout)?;
    let x_c = layout.frame.center_x();
    let y_c = layout.frame.center_y();
    let objects = layout
        .objects
        .iter()
        .map(|o| {
            let (cx, cy) = o.center();
            ObjectDetail {
                id: o.id.clone(),
                width: o.rect.width,
                height: o.rect.height,
                area: o.area(),
                center_x: cx,
                center_y: cy,
                offset_x: cx - x_c,
                offset_y: cy - y_c,
            }
        })
        .collect();
    Ok(DetailReport {
        objects,
        measures: measure(layout)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{Frame, LayoutObject};

    #[test]
    fn corner_object_row() {
        let layout = Layout::new(
            Frame::new(100.0, 100.0),
            vec![LayoutObject::new("o1", 10.0, 10.0, 20.0, 20.0)],
        );
        let d = detail(&layout).unwrap();
        assert_eq!(d.object_count(), 1);
        let row = &d.objects[0];
        assert_eq!(
            (row.width, row.height, row.area, row.center_x, row.center_y),
            (20.0, 20.0, 400.0, 20.0, 20.0)
        );
        assert_eq!((row.offset_x, row.offset_y), (-30.0, -30.0));
    }

    #[test]
    fn rows_keep_input_order() {
        let layout = Layout::new(
            Frame::new(100.0, 100.0),
            vec![
                LayoutObject::new("b", 60.0, 60.0, 10.0, 10.0),
                LayoutObject::new("a", 10.0, 10.0, 10.0, 10.0),
            ],
        );
        let ids: Vec<_> = detail(&layout).unwrap().objects.into_iter().map(|o| o.id).collect();
        assert_eq!(ids, ["b", "a"]);
    }

    #[test]
    fn centered_object_has_zero_offset() {
        let layout = Layout::new(
            Frame::new(100.0, 100.0),
            vec![LayoutObject::new("o1", 40.0, 40.0, 20.0, 20.0)],
        );
        let row = &detail(&layout).unwrap().objects[0];
        assert_eq!((row.offset_x, row.offset_y), (0.0, 0.0));
    }
}

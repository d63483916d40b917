//! ASCII scatter of one plane: `α^G` across, `|α|` up, two units per cell.

use std::collections::BTreeMap;

use eqproj::grading::Grading;
use eqproj::Element64;

pub fn render(slice: &[(Grading, Element64)]) -> String {
    if slice.is_empty() {
        return String::new();
    }
    let cells: BTreeMap<(i64, i64), String> =
        slice.iter().map(|(g, x)| ((g.total_degree(), g.fixed_degree()), x.to_string())).collect();
    let xs: Vec<i64> = cells.keys().map(|k| k.1).collect();
    let ys: Vec<i64> = cells.keys().map(|k| k.0).collect();
    let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let width = cells.values().map(String::len).max().unwrap_or(1).max(3);
    let label_width = [y0, y1].iter().map(|y| y.to_string().len()).max().unwrap_or(1);

    let mut out = String::new();
    let mut y = y1;
    while y >= y0 {
        out.push_str(&format!("{y:>label_width$} |"));
        let mut x = x0;
        while x <= x1 {
            let cell = cells.get(&(y, x)).map_or(".", String::as_str);
            out.push_str(&format!(" {cell:^width$}"));
            x += 2;
        }
        out.push('\n');
        y -= 2;
    }
    out.push_str(&format!("{:>label_width$} +", ""));
    let mut x = x0;
    while x <= x1 {
        out.push_str(&format!(" {:^width$}", x));
        x += 2;
    }
    out.push('\n');
    out
}

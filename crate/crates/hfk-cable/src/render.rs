//! Plain-text views of tables: aligned grids and CSV.

use crate::cable::{CableTable, ValidRange};
use crate::complex::HFKTable;
use std::io::IsTerminal;

/// Grid with one row per Alexander grading (descending, gaps included) and
/// one column per occurring Maslov grading.
pub fn render_grid(table: &HFKTable) -> String {
    let (a_min, a_max) = match table.alexander_range() {
        Some(r) => r,
        None => return "(empty table)\n".to_string(),
    };
    let maslovs: Vec<i64> = {
        let mut ms: Vec<i64> = table.entries().map(|(_, m, _)| m).collect();
        ms.sort_unstable();
        ms.dedup();
        ms
    };

    let row_labels: Vec<String> = (a_min..=a_max).rev().map(|a| format!("A={a}")).collect();
    let label_width = row_labels.iter().map(String::len).max().unwrap_or(0);
    let mut columns: Vec<Vec<String>> = Vec::new();
    for &m in &maslovs {
        let mut col = vec![format!("M={m}")];
        for a in (a_min..=a_max).rev() {
            col.push(match table.get(a, m) {
                Some(g) => g.to_string(),
                None => ".".to_string(),
            });
        }
        columns.push(col);
    }
    let widths: Vec<usize> =
        columns.iter().map(|col| col.iter().map(String::len).max().unwrap_or(1)).collect();

    let mut out = String::new();
    out.push_str(&" ".repeat(label_width));
    for (col, w) in columns.iter().zip(&widths) {
        out.push_str("  ");
        out.push_str(&format!("{:>w$}", col[0], w = w));
    }
    out.push('\n');
    for (r, label) in row_labels.iter().enumerate() {
        out.push_str(&format!("{label:<label_width$}"));
        for (col, w) in columns.iter().zip(&widths) {
            out.push_str("  ");
            out.push_str(&format!("{:>w$}", col[r + 1], w = w));
        }
        out.push('\n');
    }
    out
}

/// One line per nonzero entry: `alexander,maslov,group`, Alexander descending.
pub fn render_csv(table: &HFKTable) -> String {
    let mut out = String::from("alexander,maslov,group\n");
    let mut entries: Vec<(i64, i64, String)> =
        table.entries().map(|(a, m, g)| (a, m, g.to_string())).collect();
    entries.sort_by_key(|&(a, m, _)| (std::cmp::Reverse(a), m));
    for (a, m, g) in entries {
        out.push_str(&format!("{a},{m},{g}\n"));
    }
    out
}

/// Grid plus the validity and assumption footer of a cable table.
pub fn render_cable_grid(cable: &CableTable) -> String {
    let mut out = render_grid(&cable.table);
    out.push('\n');
    out.push_str(&match cable.valid_range {
        ValidRange::All => "valid: all alexander gradings\n".to_string(),
        ValidRange::Above(c) => format!("valid: alexander gradings above {c} only\n"),
        ValidRange::Below(c) => format!("valid: alexander gradings below {c} only\n"),
    });
    let a = &cable.assumptions;
    let c_prime = a.c_prime.map_or("-".to_string(), |c| c.to_string());
    out.push_str(&format!(
        "assumptions: p={} n={} c'={c_prime} heuristic_bound={}{}{}\n",
        a.p,
        a.n,
        a.heuristic_bound,
        if a.large_n_assumed { " large_n_assumed" } else { "" },
        if a.conjectural { " conjectural" } else { "" },
    ));
    for w in &cable.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

/// ANSI color is used only when stdout is a terminal and the
/// HFK_CABLE_NO_COLOR environment variable is unset.
pub fn color_enabled() -> bool {
    std::env::var_os("HFK_CABLE_NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

pub fn paint(text: &str, code: &str, enabled: bool) -> String {
    if enabled {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cable::cable2_hfk;
    use crate::homalg::AbelianGroup;
    use crate::torus::{hfk_torus_2, staircase_t2, unknot};

    #[test]
    fn grid_of_trefoil_table() {
        let grid = render_grid(&hfk_torus_2(1));
        let lines: Vec<&str> = grid.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].contains("M=-2") && lines[0].contains("M=0"));
        assert!(lines[1].starts_with("A=1"));
        assert!(lines[3].starts_with("A=-1"));
        // each body row has exactly one Z
        for line in &lines[1..] {
            assert_eq!(line.matches('Z').count(), 1, "{line}");
        }
    }

    #[test]
    fn grid_shows_empty_rows() {
        let cable = cable2_hfk(&staircase_t2(1).unwrap(), 5, false).unwrap();
        let grid = render_grid(&cable.table);
        // rows at A=5 and A=4 are zero but still printed
        let row5 = grid.lines().find(|l| l.starts_with("A=5 ")).unwrap();
        assert!(!row5.contains('Z'));
    }

    #[test]
    fn empty_table_grid() {
        assert_eq!(render_grid(&HFKTable::new()), "(empty table)\n");
    }

    #[test]
    fn csv_row_order_and_content() {
        let mut table = HFKTable::new();
        table.insert(1, 0, AbelianGroup::free(1));
        table.insert(-1, -2, AbelianGroup::new(1, vec![2.into()]));
        table.insert(1, -1, AbelianGroup::free(2));
        let csv = render_csv(&table);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "alexander,maslov,group");
        assert_eq!(lines[1], "1,-1,Z^2");
        assert_eq!(lines[2], "1,0,Z");
        assert_eq!(lines[3], "-1,-2,Z + Z/2");
    }

    #[test]
    fn cable_footer_lines() {
        let cable = cable2_hfk(&unknot(), 3, false).unwrap();
        let text = render_cable_grid(&cable);
        assert!(text.contains("valid: all alexander gradings"));
        assert!(text.contains("assumptions: p=2 n=3"));
        assert!(!text.contains("conjectural"));

        let conj = cable2_hfk(&staircase_t2(2).unwrap(), 2, false).unwrap();
        let text = render_cable_grid(&conj);
        assert!(text.contains(" conjectural"));
        assert!(text.contains("warning: conjectural"));
    }

    #[test]
    fn paint_respects_flag()  {
        assert_eq!(paint("ok", "32", false), "ok");
        assert_eq!(paint("ok", "32", true), "\x1b[32mok\x1b[0m");
    }
}

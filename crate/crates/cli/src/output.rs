use crate::CliError;
use frac_solver::Trajectory;
use std::path::Path;

/// Full-precision float formatting: 17 significant digits, stable across
/// runs, so identical inputs give byte-identical files.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Compact label for an order, used in filenames and legends
/// (`1`, `0.99`, `0.9`).
pub fn alpha_label(alpha: f64) -> String {
    format!("{alpha}")
}

/// Trajectory as CSV: header `t,Q_S,Q_I[,Q_R],N`, one newline-terminated
/// row per grid node, full precision.
pub fn trajectory_csv(traj: &Trajectory, components: &[&str]) -> String {
    let mut out = String::with_capacity(traj.len() * (components.len() + 2) * 26);
    out.push('t');
    for c in components {
        out.push(',');
        out.push_str(c);
    }
    out.push_str(",N\n");
    for (t, state) in traj.rows() {
        out.push_str(&format_float(t));
        for v in state {
            out.push(',');
            out.push_str(&format_float(*v));
        }
        out.push(',');
        out.push_str(&format_float(state.iter().sum()));
        out.push('\n');
    }
    out
}

pub fn write_text(path: &Path, content: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|e| CliError::Io(format!("cannot create {}: {e}", parent.display())))?;
        }
    }
    std::fs::write(path, content)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

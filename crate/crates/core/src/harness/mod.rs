//! Entry points shared by the command-line tool and the Python bindings.

mod campaign;
mod commands;
mod table;

pub use campaign::{
    evaluate_graph, run_campaign, verify_graphs, BondageStatus, BoundReport, Campaign,
    CampaignConfig, CheckStatus, Checks, ChiSource, OutputFormat, Summary, CSV_COLUMNS,
};
pub use commands::{
    cmd_bound, cmd_curvature, parse_girth, render_bounds, render_curvature, BoundQuery,
};
pub use table::{cmd_table, render_table, TableRow};

//! Command-line surface: every library operation behind one binary with
//! JSON/CSV/SVG artifacts and reproducible seeds.

use crate::balance::{
    classify_small_radius, contact_graph, is_balanced, search_balanced, SearchSettings,
};
use crate::forests::{enumerate_forests, kernel_ladder_n4, OrderedForest};
use crate::geometry::{
    build_kn, build_qn, diameter_sequence, embed_scaled, pack_disks, segment_length,
};
use crate::io::{self, ConfigJson, ForestJson, MatrixJson};
use crate::pairing::{
    dual_basis_matrix, dual_expansion, numeric_degree_oracle, pairing_forest_qn,
    perms_fixing_first, permuted_family, qn_family,
};
use crate::plane::Point;
use crate::segments::{
    certify_midpoint_box, hourglass_params, max_perpendicular_length, midpoint_box_sets,
    trap_certify_with, PoseGrid,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "confspace",
    about = "Disk and segment configuration spaces: forests, pairings, constructions, balance, traps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write a JSON run report (command, parameters, seed, outputs, wall
    /// time, pass/fail) to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Ordered-forest enumeration and the n = 4 kernel ladder.
    Forests {
        #[command(subcommand)]
        cmd: ForestsCmd,
    },
    /// Pairing matrices, dual expansions, and the numeric degree oracle.
    Pairing {
        #[command(subcommand)]
        cmd: PairingCmd,
    },
    /// Lengths, recursive constructions, packing, and embeddings.
    Geometry {
        #[command(subcommand)]
        cmd: GeometryCmd,
    },
    /// Stress graphs, balance checks, and balanced-configuration search.
    Balance {
        #[command(subcommand)]
        cmd: BalanceCmd,
    },
    /// Segment obstructions: thresholds, hourglass traps, midpoint boxes.
    Segments {
        #[command(subcommand)]
        cmd: SegmentsCmd,
    },
    /// Run the acceptance suite.
    Verify {
        /// `all`, or a single criterion id.
        what: String,
    },
}

#[derive(Subcommand)]
enum ForestsCmd {
    /// List all ordered forests with a given edge count.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-degree kernel dimensions of the n = 4 restriction map.
    Ladder {
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
    },
}

#[derive(Subcommand)]
enum PairingCmd {
    /// The dual-basis pairing matrix.
    Matrix {
        #[arg(long)]
        n: usize,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON output path (row/column labels included).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Dual-basis expansion of a spanning forest.
    Expand {
        #[arg(long)]
        n: usize,
        /// Edge list as JSON, e.g. '[[1,2],[2,3]]'.
        #[arg(long)]
        forest: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the combinatorial pairing against the numeric degree.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 24)]
        grid: usize,
    },
}

#[derive(Args)]
struct AngleArgs {
    /// Comma-separated angles in turns.
    #[arg(long, value_delimiter = ',')]
    angles: Vec<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GeometryCmd {
    /// The diameter sequence d_n and segment length l_n.
    Ell {
        #[arg(long)]
        n: usize,
    },
    /// Build the n-segment spinning configuration k_n.
    Kn {
        #[command(flatten)]
        angles: AngleArgs,
    },
    /// Build the n-disk configuration q_n (n - 1 angles).
    Qn {
        #[command(flatten)]
        angles: AngleArgs,
    },
    /// Greedy packing of disks with given radii.
    Pack {
        /// Comma-separated radii.
        #[arg(long, value_delimiter = ',')]
        radii: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Scale a configuration into a host disk and relabel it.
    Embed {
        /// Input disk configuration (JSON).
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        host_x: f64,
        #[arg(long)]
        host_y: f64,
        #[arg(long)]
        scale: f64,
        /// Comma-separated labels for the embedded disks.
        #[arg(long, value_delimiter = ',')]
        labels: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BalanceCmd {
    /// Contact graph and balance feasibility of a configuration.
    Check {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Multistart search for balanced configurations.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search and classify hits against the small-radius theorem.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum SegmentsCmd {
    /// Bisect for the maximum perpendicular two-segment length.
    Rcrit2 {
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Hourglass trap parameters for a segment of length r.
    Hourglass {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Grid-certify the hourglass trap.
    Trap {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 0.005)]
        xy: f64,
        /// Angular step in degrees.
        #[arg(long, default_value_t = 1.0)]
        theta_deg: f64,
        /// Drop the obstacles (negative control).
        #[arg(long)]
        negative: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Render the reachable pose projection.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// The three-strip midpoint-box construction.
    Midpointbox {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also run the per-strip grid certification.
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = 0.002)]
        xy: f64,
        #[arg(long, default_value_t = 0.25)]
        theta_deg: f64,
    },
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    parameters: Vec<String>,
    seed: u64,
    outputs: Vec<String>,
    wall_seconds: f64,
    pass: bool,
}

struct Run {
    outputs: Vec<String>,
    seed: u64,
    pass: bool,
}

impl Run {
    fn new() -> Self {
        Run {
            outputs: Vec::new(),
            seed: 0,
            pass: true,
        }
    }

    fn write(&mut self, path: &Path, contents: &str) -> Result<(), String> {
        write_atomic(path, contents)?;
        self.outputs.push(path.display().to_string());
        println!("wrote {}", path.display());
        Ok(())
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), String> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents).map_err(|e| format!("write {}: {e}", tmp.display()))?;
    std::fs::rename(&tmp, path).map_err(|e| format!("rename {}: {e}", path.display()))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Entry point: returns the process exit code (0 success, 1 assertion
/// failure, 2 usage error).
pub fn dispatch<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    let started = Instant::now();
    let mut run = Run::new();
    let result = execute(&cli.command, &mut run);
    let code = match result {
        Ok(()) => {
            if run.pass {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    };
    if let Some(path) = &cli.report {
        let report = RunReport {
            command: command_name(&cli.command),
            parameters: std::env::args().skip(1).collect(),
            seed: run.seed,
            outputs: run.outputs.clone(),
            wall_seconds: started.elapsed().as_secs_f64(),
            pass: code == 0,
        };
        if write_atomic(path, &to_json(&report)).is_err() {
            return 1;
        }
    }
    code
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Forests { .. } => "forests",
        Command::Pairing { .. } => "pairing",
        Command::Geometry { .. } => "geometry",
        Command::Balance { .. } => "balance",
        Command::Segments { .. } => "segments",
        Command::Verify { .. } => "verify",
    }
    .to_string()
}

fn execute(cmd: &Command, run: &mut Run) -> Result<(), String> {
    match cmd {
        Command::Forests { cmd } => forests_cmd(cmd, run),
        Command::Pairing { cmd } => pairing_cmd(cmd, run),
        Command::Geometry { cmd } => geometry_cmd(cmd, run),
        Command::Balance { cmd } => balance_cmd(cmd, run),
        Command::Segments { cmd } => segments_cmd(cmd, run),
        Command::Verify { what } => verify_cmd(what, run),
    }
}

fn forests_cmd(cmd: &ForestsCmd, run: &mut Run) -> Result<(), String> {
    match cmd {
        ForestsCmd::Enumerate { n, j, out } => {
            let forests = enumerate_forests(*n, *j).map_err(|e| e.to_string())?;
            println!(
                "{} ordered forests on {n} vertices with {j} edges",
                forests.len()
            );
            for f in &forests {
                println!("  {f}");
            }
            if let Some(path) = out {
                let json: Vec<ForestJson> = forests.iter().map(ForestJson::from).collect();
                run.write(path, &to_json(&json))?;
            }
            Ok(())
        }
        ForestsCmd::Ladder { r } => {
            if *r <= 0.0 {
                return Err("radius must be positive".into());
            }
            let dims = kernel_ladder_n4(*r);
            println!(
                "kernel dimensions at r = {r}: degree 0..3 -> ({}, {}, {}, {})",
                dims[0], dims[1], dims[2], dims[3]
            );
            Ok(())
        }
    }
}

fn pairing_cmd(cmd: &PairingCmd, run: &mut Run) -> Result<(), String> {
    match cmd {
        PairingCmd::Matrix { n, out, json } => {
            let m = dual_basis_matrix(*n).map_err(|e| e.to_string())?;
            let det = m.det();
            println!(
                "dual-basis matrix for n = {n}: size {}x{}, det {det}",
                m.size(),
                m.size()
            );
            if let Some(path) = out {
                run.write(path, &io::matrix_to_csv(&m))?;
            }
            if let Some(path) = json {
                run.write(path, &to_json(&MatrixJson::from(&m)))?;
            }
            Ok(())
        }
        PairingCmd::Expand { n, forest, out } => {
            let edges: Vec<(usize, usize)> =
                serde_json::from_str(forest).map_err(|e| format!("bad edge list: {e}"))?;
            let g = OrderedForest::new(*n, edges).map_err(|e| e.to_string())?;
            let expansion = dual_expansion(&g).map_err(|e| e.to_string())?;
            println!("dual expansion of {g} over the signed basis:");
            let mut entries = Vec::new();
            for (sigma, coeff) in &expansion {
                println!("  {coeff:+} * sign(sigma) sigma.q_n at sigma = {sigma}");
                entries.push((sigma.images().to_vec(), *coeff));
            }
            if let Some(path) = out {
                run.write(path, &to_json(&entries))?;
            }
            Ok(())
        }
        PairingCmd::Oracle { n, grid } => {
            let forests = enumerate_forests(*n, *n - 1).map_err(|e| e.to_string())?;
            let family = qn_family(*n);
            let mut mismatches = 0usize;
            for g in &forests {
                for s in perms_fixing_first(*n) {
                    let expected = pairing_forest_qn(g, &s).map_err(|e| e.to_string())?;
                    let fam = permuted_family(&s, &family);
                    let got = numeric_degree_oracle(&fam, g, *grid)
                        .map_err(|e| format!("G={g} sigma={s}: {e}"))?;
                    let tag = if got == expected { "ok " } else { "BAD" };
                    if got != expected {
                        mismatches += 1;
                    }
                    println!("{tag} <{g}, {s}.q_{n}> = {expected}, oracle {got}");
                }
            }
            run.pass = mismatches == 0;
            println!(
                "{} mismatches over {} cases",
                mismatches,
                forests.len() * forests.len()
            );
            Ok(())
        }
    }
}

fn geometry_cmd(cmd: &GeometryCmd, run: &mut Run) -> Result<(), String> {
    match cmd {
        GeometryCmd::Ell { n } => {
            if *n == 0 {
                return Err("n must be at least 1".into());
            }
            let d = diameter_sequence(*n);
            let l = segment_length(*n);
            println!("d_{n} = {d:.12}");
            println!("l_{n} = {l:.12}");
            Ok(())
        }
        GeometryCmd::Kn { angles } => {
            if angles.angles.is_empty() {
                return Err("need at least one angle".into());
            }
            let cfg = build_kn(&angles.angles);
            println!(
                "k_{} configuration: {} segments of length {:.12}, valid: {}",
                cfg.n(),
                cfg.n(),
                cfg.length,
                cfg.is_valid(1e-9)
            );
            if let Some(path) = &angles.out {
                run.write(path, &to_json(&ConfigJson::from(&cfg)))?;
            }
            if let Some(path) = &angles.svg {
                run.write(path, &crate::svg::seg_config_svg(&cfg))?;
            }
            Ok(())
        }
        GeometryCmd::Qn { angles } => {
            let cfg = build_qn(&angles.angles);
            let t = crate::geometry::tau(&cfg.centers).map_err(|e| e.to_string())?;
            println!(
                "q_{} configuration: radius {:.12}, tau = {:.12}, valid: {}",
                cfg.n(),
                cfg.radius,
                t,
                cfg.is_valid(1e-9)
            );
            if let Some(path) = &angles.out {
                run.write(path, &to_json(&ConfigJson::from(&cfg)))?;
            }
            if let Some(path) = &angles.svg {
                run.write(path, &crate::svg::disk_config_svg(&cfg))?;
            }
            Ok(())
        }
        GeometryCmd::Pack { radii, out, svg } => {
            if radii.is_empty() {
                return Err("need at least one radius".into());
            }
            let mut sorted = radii.clone();
            sorted.sort_by(|a, b| b.total_cmp(a));
            let layout = pack_disks(&sorted);
            layout.validate(1e-9)?;
            println!(
                "packed {} disks into enclosing radius {:.9} (bound {:.9})",
                sorted.len(),
                layout.enclosing_radius,
                (36.0 * sorted.iter().map(|r| r * r).sum::<f64>()).sqrt()
            );
            if let Some(path) = out {
                #[derive(Serialize)]
                struct PackJson {
                    radii: Vec<f64>,
                    centers: Vec<(f64, f64)>,
                    enclosing_radius: f64,
                }
                let json = PackJson {
                    radii: layout.radii.clone(),
                    centers: layout.centers.iter().map(|p| (p.x, p.y)).collect(),
                    enclosing_radius: layout.enclosing_radius,
                };
                run.write(path, &to_json(&json))?;
            }
            if let Some(path) = svg {
                let scale = 1.0 / layout.enclosing_radius;
                let cfg = crate::geometry::DiskConfig::new(
                    layout.centers.iter().map(|&c| c * scale).collect(),
                    layout.radii[0] * scale,
                );
                run.write(path, &crate::svg::disk_config_svg(&cfg))?;
            }
            Ok(())
        }
        GeometryCmd::Embed {
            input,
            host_x,
            host_y,
            scale,
            labels,
            out,
        } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| format!("read {}: {e}", input.display()))?;
            let json: ConfigJson =
                serde_json::from_str(&text).map_err(|e| format!("parse: {e}"))?;
            let cfg = json
                .to_disk_config()
                .ok_or_else(|| "input is not a disk configuration".to_string())?;
            let part = embed_scaled(&cfg, Point::new(*host_x, *host_y), *scale, labels)
                .map_err(|e| e.to_string())?;
            println!(
                "embedded {} disks at radius {:.12}",
                part.items.len(),
                part.radius
            );
            #[derive(Serialize)]
            struct PartJson {
                radius: f64,
                items: Vec<(usize, (f64, f64))>,
            }
            let json = PartJson {
                radius: part.radius,
                items: part.items.iter().map(|&(l, p)| (l, (p.x, p.y))).collect(),
            };
            if let Some(path) = out {
                run.write(path, &to_json(&json))?;
            } else {
                print!("{}", to_json(&json));
            }
            Ok(())
        }
    }
}

fn balance_cmd(cmd: &BalanceCmd, run: &mut Run) -> Result<(), String> {
    match cmd {
        BalanceCmd::Check {
            input,
            tol,
            out,
            svg,
        } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| format!("read {}: {e}", input.display()))?;
            let json: ConfigJson =
                serde_json::from_str(&text).map_err(|e| format!("parse: {e}"))?;
            let cfg = json
                .to_disk_config()
                .ok_or_else(|| "input is not a disk configuration".to_string())?;
            let graph = contact_graph(&cfg, *tol).map_err(|e| e.to_string())?;
            println!(
                "contact graph: {} internal edges, {} boundary vertices",
                graph.edges.len(),
                graph.boundary.len()
            );
            if graph.edge_count() == 0 {
                println!("no contacts: balance question is vacuous");
                return Ok(());
            }
            let result = is_balanced(&graph).map_err(|e| e.to_string())?;
            println!(
                "balanced: {} (residual {:.3e})",
                result.balanced, result.residual
            );
            if let Some(path) = out {
                run.write(path, &to_json(&io::balance_report(&cfg, &graph, &result)))?;
            }
            if let Some(path) = svg {
                run.write(path, &crate::svg::stress_graph_svg(&graph))?;
            }
            Ok(())
        }
        BalanceCmd::Search {
            n,
            r,
            trials,
            seed,
            out,
        } => {
            run.seed = *seed;
            let settings = SearchSettings {
                seed: *seed,
                ..SearchSettings::default()
            };
            let hits = search_balanced(*n, *r, *trials, &settings);
            println!(
                "{} balanced configuration(s) found over {trials} trials at r = {r}",
                hits.len()
            );
            for h in &hits {
                println!("  trial {}: residual {:.3e}", h.trial, h.result.residual);
            }
            if let Some(path) = out {
                let json: Vec<io::BalanceReportJson> = hits
                    .iter()
                    .map(|h| {
                        let g = contact_graph(&h.config, settings.contact_tol).unwrap();
                        io::balance_report(&h.config, &g, &h.result)
                    })
                    .collect();
                run.write(path, &to_json(&json))?;
            }
            Ok(())
        }
        BalanceCmd::Classify { n, r, trials, seed } => {
            run.seed = *seed;
            let settings = SearchSettings {
                seed: *seed,
                ..SearchSettings::default()
            };
            let hits = search_balanced(*n, *r, *trials, &settings);
            let configs: Vec<_> = hits.iter().map(|h| h.config.clone()).collect();
            let classes = classify_small_radius(*n, &configs);
            println!("{} hit(s) classified:", classes.len());
            let mut violations = 0usize;
            for c in &classes {
                println!("  {c:?}");
                if matches!(c, crate::balance::Classification::Violation { .. }) {
                    violations += 1;
                }
            }
            if violations > 0 {
                println!("VIOLATIONS of the small-radius theorem detected: {violations}");
                run.pass = false;
            }
            Ok(())
        }
    }
}

fn segments_cmd(cmd: &SegmentsCmd, run: &mut Run) -> Result<(), String> {
    match cmd {
        SegmentsCmd::Rcrit2 { tol } => {
            let r = max_perpendicular_length(*tol);
            println!("maximum perpendicular two-segment length: {r:.7}");
            Ok(())
        }
        SegmentsCmd::Hourglass { r, delta, out, svg } => {
            let params = hourglass_params(*r, *delta).map_err(|e| e.to_string())?;
            println!(
                "hourglass trap: a = {:.6e}, b = {:.6}, width 2a/b = {:.6}",
                params.a,
                params.b,
                2.0 * params.ratio()
            );
            if let Some(path) = out {
                #[derive(Serialize)]
                struct TrapJson {
                    a: f64,
                    b: f64,
                    r: f64,
                    delta: f64,
                }
                run.write(
                    path,
                    &to_json(&TrapJson {
                        a: params.a,
                        b: params.b,
                        r: params.r,
                        delta: params.delta,
                    }),
                )?;
            }
            if let Some(path) = svg {
                run.write(path, &crate::svg::trap_svg(&params))?;
            }
            Ok(())
        }
        SegmentsCmd::Trap {
            r,
            delta,
            xy,
            theta_deg,
            negative,
            out,
            svg,
        } => {
            let params = hourglass_params(*r, *delta).map_err(|e| e.to_string())?;
            let grid = PoseGrid::new(*xy, theta_deg / 360.0);
            let obstacles = if *negative { Some(vec![]) } else { None };
            let cert = trap_certify_with(&params, &grid, obstacles).map_err(|e| e.to_string())?;
            println!(
                "visited {} poses; x extent [{:.4}, {:.4}]; theta extent ({:.4}, {:.4}) turns",
                cert.visited,
                cert.x_extent.0,
                cert.x_extent.1,
                cert.theta_extent.0,
                cert.theta_extent.1
            );
            println!(
                "stays in delta strip: {}; reached horizontal: {}; clearance slack {:.4e}",
                cert.stays_in_delta_strip, cert.reached_horizontal, cert.clearance_slack
            );
            if !*negative && !cert.confirms_trap() {
                run.pass = false;
            }
            if let Some(path) = svg {
                run.write(path, &crate::svg::trap_reachable_svg(&params, &cert))?;
            }
            if let Some(path) = out {
                #[derive(Serialize)]
                struct CertJson {
                    visited: usize,
                    x_extent: (f64, f64),
                    y_extent: (f64, f64),
                    theta_extent: (f64, f64),
                    stays_in_delta_strip: bool,
                    reached_horizontal: bool,
                    clearance_slack: f64,
                    start_clearance: f64,
                }
                run.write(
                    path,
                    &to_json(&CertJson {
                        visited: cert.visited,
                        x_extent: cert.x_extent,
                        y_extent: cert.y_extent,
                        theta_extent: cert.theta_extent,
                        stays_in_delta_strip: cert.stays_in_delta_strip,
                        reached_horizontal: cert.reached_horizontal,
                        clearance_slack: cert.clearance_slack,
                        start_clearance: cert.start_clearance,
                    }),
                )?;
            }
            Ok(())
        }
        SegmentsCmd::Midpointbox {
            epsilon,
            out,
            certify,
            xy,
            theta_deg,
        } => {
            let c = midpoint_box_sets(*epsilon).map_err(|e| e.to_string())?;
            println!(
                "midpoint box at eps = {epsilon}: r = {:.9} (< 1), |S| = {}",
                c.r,
                c.all_points().len()
            );
            for (name, s) in ["middle", "upper", "lower"].iter().zip(&c.strips) {
                println!(
                    "  {name} strip: center y = {:.4}, half-height {:.6}, delta {:.4}, a = {:.3e}, {} points",
                    s.y_center,
                    s.half_height,
                    s.delta,
                    s.params.a * s.half_height,
                    s.points.len()
                );
            }
            if *certify {
                let grid = PoseGrid::new(*xy, theta_deg / 360.0);
                for (name, res) in ["middle", "upper", "lower"]
                    .iter()
                    .zip(certify_midpoint_box(&c, &grid))
                {
                    match res {
                        Ok(cert) => println!(
                            "  {name}: trap confirmed: {} (visited {})",
                            cert.confirms_trap(),
                            cert.visited
                        ),
                        Err(e) => println!("  {name}: {e}"),
                    }
                }
            }
            if let Some(path) = out {
                #[derive(Serialize)]
                struct BoxJson {
                    eps: f64,
                    eps1: f64,
                    eps2: f64,
                    r: f64,
                    points: Vec<(f64, f64)>,
                }
                run.write(
                    path,
                    &to_json(&BoxJson {
                        eps: c.eps,
                        eps1: c.eps1,
                        eps2: c.eps2,
                        r: c.r,
                        points: c.all_points().iter().map(|p| (p.x, p.y)).collect(),
                    }),
                )?;
            }
            Ok(())
        }
    }
}

fn verify_cmd(what: &str, run: &mut Run) -> Result<(), String> {
    let outcomes = if what == "all" {
        crate::acceptance::run_all()
    } else {
        let id: usize = what
            .parse()
            .map_err(|_| format!("expected 'all' or a criterion id, got '{what}'"))?;
        vec![crate::acceptance::run_criterion(id)]
    };
    let mut all_pass = true;
    for o in &outcomes {
        println!("{}", o.line());
        all_pass &= o.pass;
    }
    run.pass = all_pass;
    Ok(())
}

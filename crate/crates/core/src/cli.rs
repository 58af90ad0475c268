//! Command-line front end. Every rational is read and written as an exact `p/q` token.
//!
//! Exit codes: 0 success or pass, 1 a requested check failed, 2 invalid input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::{chi_p3, spherical_twist_class};
use crate::heartgate::{
    admissible_a_interval, general_condition_check, structural_condition_check, AInterval, CheckReport,
    CollectionSpec,
};
use crate::numclass::NumClass;
use crate::rational::{fmt_q, parse_q, Q};
use crate::scene::{plot_scene, PlotRect};
use crate::tiltcalc::{
    bg_check, central_charge_2, central_charge_3, discriminant, reduce_to_fundamental, slope_mu, tilt_slope_nu,
    twisted_v, ChargeValue, ParamPoint,
};
use crate::walls::{enumerate_candidate_walls, Region};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

fn q_arg(s: &str) -> std::result::Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

fn class_arg(s: &str) -> std::result::Result<NumClass, String> {
    NumClass::parse_any(s).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "tiltwall", version, about = "Exact tilt-stability calculator for P3 and the local P3")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to a file instead of stdout.
    #[arg(short = 'o', long, global = true)]
    out: Option<PathBuf>,
    /// Decimal places for SVG coordinates.
    #[arg(long, global = true, default_value_t = 4)]
    precision: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the class of a name such as "T(-2)" or a literal "v0,v1,v2,v3".
    Class {
        #[arg(allow_hyphen_values = true, value_parser = class_arg)]
        class: NumClass,
    },
    /// Twisted class, slopes and central charges at (beta, alpha).
    Tilt {
        #[arg(allow_hyphen_values = true, value_parser = class_arg)]
        class: NumClass,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        beta: Q,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        alpha: Q,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        a: Option<Q>,
    },
    /// Sign of the Bogomolov-Gieseker margin; fails when it is negative.
    BgCheck {
        #[arg(allow_hyphen_values = true, value_parser = class_arg)]
        class: NumClass,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        beta: Q,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        alpha: Q,
    },
    /// Numerical walls for a class in a rectangle of the (beta, alpha) plane.
    Walls {
        #[arg(allow_hyphen_values = true, value_parser = class_arg)]
        class: NumClass,
        #[command(flatten)]
        rect: RectArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg, default_value = "0")]
        disc_bound: Q,
        /// Only points with 2 alpha - beta^2 at least this value are searched.
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg, default_value = "1/16")]
        min_omega_sq: Q,
    },
    /// Move (beta, alpha) into -1/2 <= beta <= 0 by line-bundle twists and the dual.
    Reduce {
        #[arg(allow_hyphen_values = true, value_parser = q_arg)]
        beta: Q,
        #[arg(allow_hyphen_values = true, value_parser = q_arg)]
        alpha: Q,
    },
    /// Check the condition system of a collection (beilinson4, omega, lines or @file.json).
    CollectionCheck {
        collection: String,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        beta: Q,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        a0: Option<Q>,
    },
    /// Admissible range of a for a collection; fails when it is empty.
    Interval {
        collection: String,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        beta: Q,
    },
    /// Class of the spherical twist of v by s.
    Twist {
        #[arg(allow_hyphen_values = true, value_parser = class_arg)]
        s: NumClass,
        #[arg(allow_hyphen_values = true, value_parser = class_arg)]
        v: NumClass,
    },
    /// SVG (or JSON with --json) of the boundary, C_E, walls and Pi for a class.
    Plot {
        #[arg(allow_hyphen_values = true, value_parser = class_arg)]
        class: NumClass,
        #[command(flatten)]
        rect: RectArgs,
        /// Enumerate walls with this discriminant slack and draw them.
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
        disc_bound: Option<Q>,
        #[arg(long, allow_hyphen_values = true, value_parser = q_arg, default_value = "1/16")]
        min_omega_sq: Q,
    },
}

#[derive(clap::Args, Debug)]
struct RectArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
    beta_min: Q,
    #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
    beta_max: Q,
    #[arg(long, allow_hyphen_values = true, value_parser = q_arg, default_value = "0")]
    alpha_min: Q,
    #[arg(long, allow_hyphen_values = true, value_parser = q_arg)]
    alpha_max: Q,
}

struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn class_strings(v: &NumClass) -> [String; 4] {
    v.components().map(fmt_q)
}

#[derive(Serialize)]
struct ChargeJson {
    re: String,
    im: String,
}

impl From<&ChargeValue> for ChargeJson {
    fn from(z: &ChargeValue) -> Self {
        ChargeJson {
            re: fmt_q(&z.re),
            im: fmt_q(&z.im),
        }
    }
}

fn load_collection(arg: &str) -> Result<CollectionSpec> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
            CollectionSpec::from_json(&text)
        }
        None => CollectionSpec::builtin(arg),
    }
}

fn cmd_class(v: &NumClass, json: bool) -> Outcome {
    if !json {
        return Outcome::ok(format!("{v}\n"));
    }
    #[derive(Serialize)]
    struct Out {
        schema: &'static str,
        class: [String; 4],
        integral: bool,
        chi: String,
        mu: String,
        discriminant: String,
    }
    Outcome::ok(to_json(&Out {
        schema: "tiltwall.class/1",
        class: class_strings(v),
        integral: v.is_integral(),
        chi: fmt_q(&chi_p3(v)),
        mu: slope_mu(v).to_string(),
        discriminant: fmt_q(&discriminant(v)),
    }))
}

fn cmd_tilt(v: &NumClass, p: &ParamPoint, a: Option<&Q>, json: bool) -> Outcome {
    let t = twisted_v(v, p.beta());
    let z2 = central_charge_2(v, p);
    let z3 = a.map(|a| central_charge_3(v, p, a));
    let bg = bg_check(v, p);
    if json {
        #[derive(Serialize)]
        struct Out {
            schema: &'static str,
            class: [String; 4],
            beta: String,
            alpha: String,
            twisted: [String; 4],
            mu: String,
            nu: String,
            discriminant: String,
            z2: ChargeJson,
            a: Option<String>,
            z3: Option<ChargeJson>,
            bg_margin: String,
        }
        return Outcome::ok(to_json(&Out {
            schema: "tiltwall.tilt/1",
            class: class_strings(v),
            beta: fmt_q(p.beta()),
            alpha: fmt_q(p.alpha()),
            twisted: class_strings(&t),
            mu: slope_mu(v).to_string(),
            nu: tilt_slope_nu(v, p).to_string(),
            discriminant: fmt_q(&discriminant(v)),
            z2: (&z2).into(),
            a: a.map(fmt_q),
            z3: z3.as_ref().map(Into::into),
            bg_margin: fmt_q(&bg.margin),
        }));
    }
    let mut s = String::new();
    s += &format!("class: {v}\n");
    s += &format!("point: {p}\n");
    s += &format!("twisted: {t}\n");
    s += &format!("mu: {}\n", slope_mu(v));
    s += &format!("nu: {}\n", tilt_slope_nu(v, p));
    s += &format!("discriminant: {}\n", fmt_q(&discriminant(v)));
    s += &format!("Z2: {z2}\n");
    if let Some(z3) = z3 {
        s += &format!("Z3: {z3}\n");
    }
    s += &format!("bg_margin: {}\n", fmt_q(&bg.margin));
    Outcome::ok(s)
}

fn cmd_bg_check(v: &NumClass, p: &ParamPoint, json: bool) -> Outcome {
    let bg = bg_check(v, p);
    let text = if json {
        #[derive(Serialize)]
        struct Out {
            schema: &'static str,
            class: [String; 4],
            beta: String,
            alpha: String,
            margin: String,
            holds: bool,
            slope_is_beta: bool,
        }
        to_json(&Out {
            schema: "tiltwall.bg-check/1",
            class: class_strings(v),
            beta: fmt_q(p.beta()),
            alpha: fmt_q(p.alpha()),
            margin: fmt_q(&bg.margin),
            holds: bg.holds,
            slope_is_beta: bg.slope_is_beta,
        })
    } else {
        format!(
            "margin: {}\nslope_is_beta: {}\n{}\n",
            fmt_q(&bg.margin),
            bg.slope_is_beta,
            if bg.holds { "holds" } else { "violated" }
        )
    };
    Outcome {
        text,
        passed: bg.holds,
    }
}

fn region_from(rect: &RectArgs, min_omega_sq: &Q) -> Result<Region> {
    Region::new(
        rect.beta_min.clone(),
        rect.beta_max.clone(),
        rect.alpha_min.clone(),
        rect.alpha_max.clone(),
    )?
    .with_min_omega_sq(min_omega_sq.clone())
}

fn cmd_walls(v: &NumClass, region: &Region, disc_bound: &Q, json: bool) -> Result<Outcome> {
    let out = enumerate_candidate_walls(v, region, disc_bound)?;
    let b = &out.search_box;
    if json {
        #[derive(Serialize)]
        struct WallJson {
            wall: [String; 3],
            equation: String,
            witness: [String; 4],
        }
        #[derive(Serialize)]
        struct BoxJson {
            rank_bound: String,
            v1_bound: String,
            twice_v2_bound: String,
            im_max: String,
            mu_bound: String,
            min_omega_sq: String,
            disc_limit: String,
        }
        #[derive(Serialize)]
        struct Out {
            schema: &'static str,
            class: [String; 4],
            region: [String; 4],
            disc_bound: String,
            search_box: BoxJson,
            walls: Vec<WallJson>,
        }
        return Ok(Outcome::ok(to_json(&Out {
            schema: "tiltwall.walls/1",
            class: class_strings(v),
            region: [&region.beta_min, &region.beta_max, &region.alpha_min, &region.alpha_max].map(fmt_q),
            disc_bound: fmt_q(disc_bound),
            search_box: BoxJson {
                rank_bound: b.rank_bound.to_string(),
                v1_bound: b.v1_bound.to_string(),
                twice_v2_bound: b.twice_v2_bound.to_string(),
                im_max: fmt_q(&b.im_max),
                mu_bound: b.mu_bound.to_string(),
                min_omega_sq: fmt_q(&b.min_omega_sq),
                disc_limit: fmt_q(&b.disc_limit),
            },
            walls: out
                .walls
                .iter()
                .map(|cw| WallJson {
                    wall: [fmt_q(cw.wall.a()), fmt_q(cw.wall.b()), fmt_q(cw.wall.c())],
                    equation: cw.wall.to_string(),
                    witness: class_strings(&cw.witness),
                })
                .collect(),
        })));
    }
    let mut s = format!(
        "search box: |v0| <= {}, |v1| <= {}, |2 v2| <= {}\n",
        b.rank_bound, b.v1_bound, b.twice_v2_bound
    );
    if out.walls.is_empty() {
        s += "no walls\n";
    }
    for cw in &out.walls {
        s += &format!("{}    witness {}\n", cw.wall, cw.witness);
    }
    Ok(Outcome::ok(s))
}

fn cmd_reduce(beta: Q, alpha: Q, json: bool) -> Result<Outcome> {
    let p = ParamPoint::new(beta, alpha)?;
    let (r, log) = reduce_to_fundamental(&p);
    if json {
        #[derive(Serialize)]
        struct Out {
            schema: &'static str,
            beta: String,
            alpha: String,
            log: Vec<String>,
        }
        return Ok(Outcome::ok(to_json(&Out {
            schema: "tiltwall.reduce/1",
            beta: fmt_q(r.beta()),
            alpha: fmt_q(r.alpha()),
            log: log.labels(),
        })));
    }
    Ok(Outcome::ok(format!(
        "beta: {}\nalpha: {}\nlog: {}\n",
        fmt_q(r.beta()),
        fmt_q(r.alpha()),
        log.labels().join(" ")
    )))
}

#[derive(Serialize)]
struct IntervalJson {
    lower: Option<String>,
    upper: String,
}

fn interval_json(iv: &Option<AInterval>) -> Option<IntervalJson> {
    iv.as_ref().map(|iv| IntervalJson {
        lower: iv.lower.as_ref().map(fmt_q),
        upper: fmt_q(&iv.upper),
    })
}

fn report_text(rep: &CheckReport) -> String {
    let mut s = String::new();
    for v in &rep.verdicts {
        let residual = v.residual.as_ref().map_or("undefined".to_string(), |r| r.to_string());
        let op = if v.strict { ">" } else { ">=" };
        s += &format!(
            "[{}] {:<5} {}  (residual {residual} {op} 0)\n",
            if v.passed { "pass" } else { "FAIL" },
            v.label,
            v.relation
        );
    }
    for n in &rep.notes {
        s += &format!("note: {n}\n");
    }
    match &rep.interval {
        Some(iv) => s += &format!("interval: {iv}\n"),
        None => s += "interval: empty\n",
    }
    s += if rep.passed { "result: pass\n" } else { "result: fail\n" };
    s
}

fn cmd_collection_check(name: &str, beta: &Q, a0: Option<&Q>, json: bool) -> Result<Outcome> {
    let spec = load_collection(name)?;
    let rep = match a0 {
        Some(a0) => general_condition_check(&spec, beta, a0)?,
        None => structural_condition_check(&spec, beta)?,
    };
    let text = if json {
        #[derive(Serialize)]
        struct VerdictJson {
            label: String,
            relation: String,
            strict: bool,
            residual: Option<String>,
            passed: bool,
        }
        #[derive(Serialize)]
        struct Out {
            schema: &'static str,
            collection: [String; 4],
            beta: String,
            a0: Option<String>,
            verdicts: Vec<VerdictJson>,
            interval: Option<IntervalJson>,
            notes: Vec<String>,
            passed: bool,
        }
        to_json(&Out {
            schema: "tiltwall.collection-check/1",
            collection: spec.names.clone(),
            beta: fmt_q(beta),
            a0: a0.map(fmt_q),
            verdicts: rep
                .verdicts
                .iter()
                .map(|v| VerdictJson {
                    label: v.label.clone(),
                    relation: v.relation.clone(),
                    strict: v.strict,
                    residual: v.residual.as_ref().map(ToString::to_string),
                    passed: v.passed,
                })
                .collect(),
            interval: interval_json(&rep.interval),
            notes: rep.notes.clone(),
            passed: rep.passed,
        })
    } else {
        report_text(&rep)
    };
    Ok(Outcome {
        text,
        passed: rep.passed,
    })
}

fn cmd_interval(name: &str, beta: &Q, json: bool) -> Result<Outcome> {
    let spec = load_collection(name)?;
    let iv = admissible_a_interval(&spec, beta)?;
    let text = if json {
        #[derive(Serialize)]
        struct Out {
            schema: &'static str,
            beta: String,
            interval: Option<IntervalJson>,
        }
        to_json(&Out {
            schema: "tiltwall.interval/1",
            beta: fmt_q(beta),
            interval: interval_json(&iv),
        })
    } else {
        match &iv {
            Some(iv) => format!("{iv}\n"),
            None => "empty\n".to_string(),
        }
    };
    Ok(Outcome {
        text,
        passed: iv.is_some(),
    })
}

fn cmd_twist(s: &NumClass, v: &NumClass, json: bool) -> Result<Outcome> {
    let t = spherical_twist_class(s, v)?;
    if json {
        #[derive(Serialize)]
        struct Out {
            schema: &'static str,
            s: [String; 4],
            v: [String; 4],
            twisted: [String; 4],
        }
        return Ok(Outcome::ok(to_json(&Out {
            schema: "tiltwall.twist/1",
            s: class_strings(s),
            v: class_strings(v),
            twisted: class_strings(&t),
        })));
    }
    Ok(Outcome::ok(format!("{t}\n")))
}

fn cmd_plot(
    v: &NumClass,
    rect: &RectArgs,
    disc_bound: Option<&Q>,
    min_omega_sq: &Q,
    json: bool,
    precision: usize,
) -> Result<Outcome> {
    let region = region_from(rect, min_omega_sq)?;
    let walls = match disc_bound {
        Some(d) => enumerate_candidate_walls(v, &region, d)?
            .walls
            .into_iter()
            .map(|cw| cw.wall)
            .collect(),
        None => Vec::new(),
    };
    let plot = PlotRect {
        beta_min: rect.beta_min.clone(),
        beta_max: rect.beta_max.clone(),
        alpha_min: rect.alpha_min.clone(),
        alpha_max: rect.alpha_max.clone(),
    };
    let scene = plot_scene(v, &plot, &walls);
    Ok(Outcome::ok(if json {
        to_json(&scene.to_json())
    } else {
        scene.to_svg(precision)
    }))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Class { class } => Ok(cmd_class(class, json)),
        Cmd::Tilt { class, beta, alpha, a } => {
            let p = ParamPoint::new(beta.clone(), alpha.clone())?;
            Ok(cmd_tilt(class, &p, a.as_ref(), json))
        }
        Cmd::BgCheck { class, beta, alpha } => {
            let p = ParamPoint::new(beta.clone(), alpha.clone())?;
            Ok(cmd_bg_check(class, &p, json))
        }
        Cmd::Walls {
            class,
            rect,
            disc_bound,
            min_omega_sq,
        } => cmd_walls(class, &region_from(rect, min_omega_sq)?, disc_bound, json),
        Cmd::Reduce { beta, alpha } => cmd_reduce(beta.clone(), alpha.clone(), json),
        Cmd::CollectionCheck { collection, beta, a0 } => cmd_collection_check(collection, beta, a0.as_ref(), json),
        Cmd::Interval { collection, beta } => cmd_interval(collection, beta, json),
        Cmd::Twist { s, v } => cmd_twist(s, v, json),
        Cmd::Plot {
            class,
            rect,
            disc_bound,
            min_omega_sq,
        } => cmd_plot(class, rect, disc_bound.as_ref(), min_omega_sq, json, cli.precision),
    }
}

/// Runs one command with explicit streams and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_INPUT;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => {
            let _ = out.write_all(outcome.text.as_bytes());
        }
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

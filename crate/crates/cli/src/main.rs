//! `toric`: characteristic classes of toric varieties and lattice point counts.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use toric_classes::classes::{compute_class, verify_identities, ClassKind};
use toric_classes::counting::{
    ehrhart_via_classes, hirzebruch_polynomial, hirzebruch_polynomial_combinatorial, pick_report,
    weighted_count_identity, CountMode,
};
use toric_classes::error::ErrorCategory;
use toric_classes::fan::Fan;
use toric_classes::io::{self, CycleReport, JsonInt};
use toric_classes::polytope::{LatticePolytope, PolytopalSubcomplex};
use toric_classes::scalars::{format_rational, parse_rational, Rational};
use toric_classes::Error;

use render::{csv, table, Output};

#[derive(Parser)]
#[command(
    name = "toric",
    version,
    about = "Characteristic classes of simplicial toric varieties and lattice point counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Work with a fan given as JSON.
    #[command(subcommand)]
    Fan(FanVerb),
    /// Work with a lattice polytope given as JSON.
    #[command(subcommand)]
    Polytope(PolytopeVerb),
}

#[derive(Subcommand)]
enum FanVerb {
    /// Cone counts, smoothness, completeness and singular cones.
    Info(Common),
    /// A characteristic class as a combination of orbit closures.
    Class(ClassArgs),
    /// Check the class identities; exits with 2 if one fails.
    Verify(Common),
}

#[derive(Subcommand)]
enum PolytopeVerb {
    /// Facet normals and offsets.
    Facets(Common),
    /// Ehrhart polynomial from the Todd class, checked by counting.
    Ehrhart(EhrhartArgs),
    /// Weighted lattice point count against the class side.
    Weighted(WeightedArgs),
    /// Pick's formula and its y-deformation for a polygon.
    Pick(Common),
    /// Hirzebruch polynomial of the polytope divisor.
    Hirzpoly(HirzpolyArgs),
}

#[derive(Args)]
struct Common {
    /// Input JSON file.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ClassArgs {
    #[command(flatten)]
    common: Common,
    /// todd, todd-omega, hirzebruch, hirzebruch-normalized, mock, chern,
    /// todd-subset, t-class or mock-t-class.
    #[arg(long, value_parser = parse_kind)]
    kind: ClassKind,
    /// Specialize y to this rational number.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Use the normalized Hirzebruch class.
    #[arg(long)]
    normalized: bool,
    /// JSON file with a star-closed set of cones: {"cones": [[0, 1], ...]}.
    #[arg(long)]
    subcomplex: Option<PathBuf>,
}

#[derive(Args)]
struct EhrhartArgs {
    #[command(flatten)]
    common: Common,
    /// Largest dilation checked by counting (default: dimension + 2).
    #[arg(long)]
    max_dilate: Option<u64>,
}

#[derive(Args)]
struct WeightedArgs {
    #[command(flatten)]
    common: Common,
    /// JSON file with faces: {"faces": [[0, 1], ...]} or {"boundary": true}.
    #[arg(long)]
    subcomplex: Option<PathBuf>,
    /// Closed-face counts with weights (-1/2)^codim at y = 1.
    #[arg(long, conflicts_with = "subcomplex")]
    dual: bool,
}

#[derive(Args)]
struct HirzpolyArgs {
    #[command(flatten)]
    common: Common,
    /// JSON file with faces: {"faces": [[0, 1], ...]} or {"boundary": true}.
    #[arg(long)]
    subcomplex: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_kind(s: &str) -> std::result::Result<ClassKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_fan(path: &Path) -> Result<Fan> {
    Ok(io::parse_fan(&read(path)?)?)
}

fn load_polytope(path: &Path) -> Result<LatticePolytope> {
    Ok(io::parse_polytope(&read(path)?)?)
}

fn load_subcomplex(
    path: Option<&Path>,
    p: &LatticePolytope,
) -> Result<Option<PolytopalSubcomplex>> {
    path.map(|f| Ok(io::parse_subcomplex(&read(f)?, p)?))
        .transpose()
}

fn no_csv(format: Format) -> Result<()> {
    if format == Format::Csv {
        return Err(
            Error::InvalidInput("csv output is not available for this command".into()).into(),
        );
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn fan_info(args: &Common) -> Result<Output> {
    no_csv(args.format)?;
    let fan = load_fan(&args.file)?;
    let report = fan.report();
    if args.format == Format::Json {
        let mut value = serde_json::to_value(&report)?;
        value["rays"] = serde_json::to_value(io::FanJson::from_fan(&fan).rays)?;
        return Ok(Output::json(&value));
    }
    let mut s = String::new();
    s += &format!("lattice rank: {}\n", report.lattice_rank);
    s += &format!("rays: {}\n", report.num_rays);
    for (i, r) in fan.rays().iter().enumerate() {
        let coords: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        s += &format!("  {i}: ({})\n", coords.join(", "));
    }
    let counts: Vec<String> = report.cone_counts.iter().map(|c| c.to_string()).collect();
    s += &format!("cones by dimension: {}\n", counts.join(" "));
    s += &format!("simplicial: {}\n", yes_no(report.simplicial));
    s += &format!("smooth: {}\n", yes_no(report.smooth));
    s += &format!("complete: {}\n", yes_no(report.complete));
    s += &format!("torus factor: {}\n", yes_no(report.torus_factor));
    if report.singular_cones.is_empty() {
        s += "singular cones: none\n";
    } else {
        s += "singular cones:\n";
        for c in &report.singular_cones {
            s += &format!("  {:?} multiplicity {}\n", c.rays, c.multiplicity);
        }
    }
    Ok(Output::text(s))
}

fn fan_class(args: &ClassArgs) -> Result<Output> {
    let fan = load_fan(&args.common.file)?;
    let kind = match (args.kind, args.normalized) {
        (ClassKind::HirzebruchUnnormalized, true) => ClassKind::HirzebruchNormalized,
        (k, true) if !k.is_normalized() => {
            return Err(
                Error::InvalidInput(format!("class kind '{k}' has no normalized form")).into(),
            )
        }
        (k, _) => k,
    };
    let y = args.y.as_deref().map(parse_rational).transpose()?;
    let subset = match &args.subcomplex {
        Some(path) => Some(io::parse_cone_subset(&read(path)?, &fan)?),
        None => None,
    };
    let class = compute_class(&fan, kind, y.as_ref(), subset.as_ref())?;
    let report = CycleReport::new(&fan, kind.name(), kind.is_normalized(), y.as_ref(), &class);
    let rows: Vec<Vec<String>> = report
        .cycle
        .iter()
        .map(|e| {
            vec![
                render::cone(&e.cone),
                e.orbit_dim.to_string(),
                e.coefficient.clone(),
            ]
        })
        .collect();
    let headers = ["cone", "orbit_dim", "coefficient"];
    Ok(match args.common.format {
        Format::Json => Output::text(report.to_json()),
        Format::Csv => Output::text(csv(&headers, &rows)),
        Format::Text => {
            let mut s = format!("class: {}", report.kind);
            if let Some(y) = &report.y {
                s += &format!(" at y = {y}");
            }
            s += "\n";
            Output::text(s + &table(&headers, &rows))
        }
    })
}

fn fan_verify(args: &Common) -> Result<Output> {
    no_csv(args.format)?;
    let fan = load_fan(&args.file)?;
    let report = verify_identities(&fan)?;
    let ok = report.all_passed();
    let out = if args.format == Format::Json {
        Output::json(&json!({ "all_passed": ok, "checks": report.checks }))
    } else {
        let mut s = String::new();
        for c in &report.checks {
            s += &format!("{} {}: {}\n", pass_fail(c.passed), c.name, c.statement);
            if let Some(w) = &c.witness {
                s += &format!("  pairing with {:?}: {} vs {}\n", w.cone, w.left, w.right);
            }
        }
        s += &format!(
            "{} of {} identities hold\n",
            report.checks.iter().filter(|c| c.passed).count(),
            report.checks.len()
        );
        Output::text(s)
    };
    Ok(out.with_status(ok))
}

fn polytope_facets(args: &Common) -> Result<Output> {
    let p = load_polytope(&args.file)?;
    if args.format == Format::Json {
        return Ok(Output::json(&json!({ "facets": p.facets() })));
    }
    let rows: Vec<Vec<String>> = p
        .facets()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let normal: Vec<String> = f.normal.iter().map(|x| x.to_string()).collect();
            vec![
                i.to_string(),
                format!("({})", normal.join(", ")),
                f.offset.to_string(),
                render::cone(&f.vertices),
            ]
        })
        .collect();
    let headers = ["facet", "normal", "offset", "vertices"];
    Ok(Output::text(match args.format {
        Format::Csv => csv(&headers, &rows),
        _ => table(&headers, &rows),
    }))
}

fn polytope_ehrhart(args: &EhrhartArgs) -> Result<Output> {
    let p = load_polytope(&args.common.file)?;
    let e = ehrhart_via_classes(&p, args.max_dilate)?;
    let ok = e.residuals_vanish() && e.reciprocity_holds();
    let rows: Vec<Vec<String>> = e
        .rows
        .iter()
        .map(|r| {
            vec![
                r.dilation.to_string(),
                r.count.to_string(),
                format_rational(&r.value),
                format_rational(&r.residual),
            ]
        })
        .collect();
    let headers = ["dilation", "count", "polynomial", "residual"];
    let out = match args.common.format {
        Format::Csv => Output::text(csv(&headers, &rows)),
        Format::Json => Output::json(&json!({
            "coefficients": rats(&e.coefficients),
            "rows": e.rows.iter().map(|r| json!({
                "dilation": r.dilation,
                "count": JsonInt::from(&r.count),
                "polynomial": format_rational(&r.value),
                "residual": format_rational(&r.residual),
            })).collect::<Vec<_>>(),
            "reciprocity": e.reciprocity.iter().enumerate().map(|(i, (v, c))| json!({
                "dilation": i + 1,
                "signed_value": format_rational(v),
                "interior_points": JsonInt::from(c),
            })).collect::<Vec<_>>(),
            "residuals_vanish": e.residuals_vanish(),
            "reciprocity_holds": e.reciprocity_holds(),
        })),
        Format::Text => {
            let mut s = format!("coefficients: {}\n", rats(&e.coefficients).join(" "));
            s += &table(&headers, &rows);
            for (i, (v, c)) in e.reciprocity.iter().enumerate() {
                s += &format!(
                    "reciprocity at -{}: {} interior points, polynomial gives {}\n",
                    i + 1,
                    c,
                    format_rational(v)
                );
            }
            s += &format!("residuals vanish: {}\n", yes_no(e.residuals_vanish()));
            s += &format!("reciprocity holds: {}\n", yes_no(e.reciprocity_holds()));
            Output::text(s)
        }
    };
    Ok(out.with_status(ok))
}

fn polytope_weighted(args: &WeightedArgs) -> Result<Output> {
    no_csv(args.common.format)?;
    let p = load_polytope(&args.common.file)?;
    let s = load_subcomplex(args.subcomplex.as_deref(), &p)?;
    let mode = if args.dual {
        CountMode::Dual
    } else {
        CountMode::Standard
    };
    let r = weighted_count_identity(&p, s.as_ref(), mode)?;
    let mode_name = if args.dual { "dual" } else { "standard" };
    let out = match args.common.format {
        Format::Json => Output::json(&json!({
            "mode": mode_name,
            "lattice_side": r.lhs,
            "class_side": r.rhs,
            "equal": r.equal,
        })),
        _ => Output::text(format!(
            "mode: {mode_name}\nlattice side: {}\nclass side: {}\nequal: {}\n",
            r.lhs,
            r.rhs,
            yes_no(r.equal)
        )),
    };
    Ok(out.with_status(r.equal))
}

fn polytope_pick(args: &Common) -> Result<Output> {
    no_csv(args.format)?;
    let p = load_polytope(&args.file)?;
    let r = pick_report(&p)?;
    let ok = r.classical_holds && r.ypick_holds;
    let out = match args.format {
        Format::Json => Output::json(&json!({
            "area": format_rational(&r.area),
            "lattice_points": JsonInt::from(&r.lattice_points),
            "boundary_points": JsonInt::from(&r.boundary_points),
            "interior_points": JsonInt::from(&r.interior_points),
            "vertices": r.vertices,
            "edges": r.edges,
            "classical_holds": r.classical_holds,
            "chi_y": r.chi_y,
            "ypick_lhs": r.ypick_lhs,
            "ypick_rhs": r.ypick_rhs,
            "class_side": r.class_side,
            "ypick_holds": r.ypick_holds,
        })),
        _ => {
            let mut s = String::new();
            s += &format!("area: {}\n", format_rational(&r.area));
            s += &format!(
                "lattice points: {} ({} boundary, {} interior)\n",
                r.lattice_points, r.boundary_points, r.interior_points
            );
            s += &format!("vertices: {}, edges: {}\n", r.vertices, r.edges);
            s += &format!("classical formula holds: {}\n", yes_no(r.classical_holds));
            s += &format!("chi_y: {}\n", r.chi_y);
            s += &format!("y-deformed lattice side: {}\n", r.ypick_lhs);
            s += &format!("y-deformed formula side: {}\n", r.ypick_rhs);
            s += &format!("class side: {}\n", r.class_side);
            s += &format!("y-deformed formula holds: {}\n", yes_no(r.ypick_holds));
            Output::text(s)
        }
    };
    Ok(out.with_status(ok))
}

fn polytope_hirzpoly(args: &HirzpolyArgs) -> Result<Output> {
    let p = load_polytope(&args.common.file)?;
    let s = load_subcomplex(args.subcomplex.as_deref(), &p)?;
    let class_side = match &s {
        None => {
            let nf = p.normal_fan()?;
            hirzebruch_polynomial(&nf.fan, &p.divisor())?.polynomial
        }
        Some(s) => weighted_count_identity(&p, Some(s), CountMode::Standard)?.rhs,
    };
    let whole = PolytopalSubcomplex::whole(&p);
    let comb = hirzebruch_polynomial_combinatorial(&p, s.as_ref().unwrap_or(&whole));
    let ok = class_side == comb.polynomial;
    let rows: Vec<Vec<String>> = (0..=p.rank())
        .map(|k| {
            vec![
                k.to_string(),
                format_rational(&class_side.coeff(k)),
                format_rational(&comb.per_p[k]),
            ]
        })
        .collect();
    let headers = ["p", "class_side", "face_counts"];
    let out = match args.common.format {
        Format::Csv => Output::text(csv(&headers, &rows)),
        Format::Json => Output::json(&json!({
            "polynomial": class_side,
            "face_counts": comb.polynomial,
            "per_p": rats(&comb.per_p),
            "equal": ok,
        })),
        Format::Text => Output::text(format!(
            "polynomial: {class_side}\nfrom face counts: {}\n{}equal: {}\n",
            comb.polynomial,
            table(&headers, &rows),
            yes_no(ok)
        )),
    };
    Ok(out.with_status(ok))
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Fan(FanVerb::Info(a)) => fan_info(a),
        Command::Fan(FanVerb::Class(a)) => fan_class(a),
        Command::Fan(FanVerb::Verify(a)) => fan_verify(a),
        Command::Polytope(PolytopeVerb::Facets(a)) => polytope_facets(a),
        Command::Polytope(PolytopeVerb::Ehrhart(a)) => polytope_ehrhart(a),
        Command::Polytope(PolytopeVerb::Weighted(a)) => polytope_weighted(a),
        Command::Polytope(PolytopeVerb::Pick(a)) => polytope_pick(a),
        Command::Polytope(PolytopeVerb::Hirzpoly(a)) => polytope_hirzpoly(a),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>().map(Error::category) {
        Some(ErrorCategory::Unsupported) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

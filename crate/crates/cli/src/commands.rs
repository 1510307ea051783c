use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use voxtower::{
    box_counting_dimension, classify_rule, default_max_exponent, elevation_profile, export_obj,
    export_slices, grow_tower, parse_plan_any, parse_slices, ratio_signature,
    render_plan_text, scan_rules_with_threads, segment_profile, write_pbm, ClipMode,
    GrowthConfig, Layer, Metric, ProfileKind, TotalisticRule, Tower,
};

use crate::args::{
    AnalyzeArgs, ClassifyArgs, Clip, ConvertArgs, GrowArgs, GrowthArgs, KindArg, MetricArg,
    PlanFormat, ScanArgs,
};
use crate::manifest::RunManifest;

/// A failed command, carrying its exit code class.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or flag combinations (exit 1).
    Usage(String),
    /// Unreadable or invalid input (exit 2).
    Input(String),
    /// Anything else, e.g. an output that could not be written (exit 3).
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

type CmdResult = Result<(), Failure>;

fn input_err(path: &Path) -> impl Fn(voxtower::Error) -> Failure + '_ {
    move |e| Failure::Input(format!("{}: {e}", path.display()))
}

fn read_input(path: &Path, manifest: &mut RunManifest) -> Result<Vec<u8>, Failure> {
    let bytes = fs::read(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    manifest.input(path, &bytes);
    Ok(bytes)
}

fn read_plan(path: &Path, manifest: &mut RunManifest) -> Result<Layer, Failure> {
    let bytes = read_input(path, manifest)?;
    Ok(parse_plan_any(&bytes).map_err(input_err(path))?.layer)
}

fn read_tower(path: &Path, manifest: &mut RunManifest) -> Result<Tower, Failure> {
    let bytes = read_input(path, manifest)?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| Failure::Input(format!("{}: not UTF-8: {e}", path.display())))?;
    parse_slices(text).map_err(input_err(path))
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents)
        .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))
}

fn sidecar(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

/// Writes `report` to `out` (or stdout) and the manifest beside it.
fn emit(report: &str, out: Option<&Path>, manifest_path: Option<&Path>, manifest: &RunManifest) -> CmdResult {
    match out {
        Some(path) => {
            write_file(path, report)?;
            let m = manifest_path.map_or_else(|| sidecar(path), Path::to_path_buf);
            write_file(&m, &manifest.to_json())
        }
        None => {
            if let Some(m) = manifest_path {
                write_file(m, &manifest.to_json())?;
            }
            print!("{report}");
            Ok(())
        }
    }
}

fn growth_config(args: &GrowthArgs, manifest: &mut RunManifest) -> GrowthConfig {
    let cfg = GrowthConfig {
        max_layers: args.max_layers as usize,
        clip_mode: match args.clip {
            Clip::Bbox => ClipMode::BoundingBox,
            Clip::Mask => ClipMode::Mask,
        },
        halt_on_cycle: !args.no_cycle_halt,
    };
    manifest.param("max_layers", cfg.max_layers);
    manifest.param("clip", if args.clip == Clip::Mask { "mask" } else { "bbox" });
    manifest.param("halt_on_cycle", cfg.halt_on_cycle);
    cfg
}

fn kind(arg: KindArg) -> ProfileKind {
    match arg {
        KindArg::Extent => ProfileKind::Extent,
        KindArg::Population => ProfileKind::Population,
    }
}

fn rule(code: u32) -> Result<TotalisticRule, Failure> {
    TotalisticRule::from_code(code).map_err(|e| Failure::Usage(e.to_string()))
}

pub fn grow(args: GrowArgs) -> CmdResult {
    let mut manifest = RunManifest::new("grow");
    let plan = read_plan(&args.plan, &mut manifest)?;
    let cfg = growth_config(&args.growth, &mut manifest);
    manifest.param("rule", args.rule);
    let tower = grow_tower(&plan, rule(args.rule)?, &cfg).map_err(input_err(&args.plan))?;

    let slices = export_slices(&tower);
    let mesh = match &args.obj {
        Some(_) => Some(export_obj(&tower).map_err(|e| Failure::Internal(e.to_string()))?),
        None => None,
    };
    if let Some(out) = &args.out {
        write_file(out, &slices)?;
        let m = args.manifest.clone().unwrap_or_else(|| sidecar(out));
        write_file(&m, &manifest.to_json())?;
    } else if let Some(m) = &args.manifest {
        write_file(m, &manifest.to_json())?;
    }
    if let (Some(path), Some(mesh)) = (&args.obj, &mesh) {
        write_file(path, mesh)?;
    }
    println!(
        "rule={} height={} termination={} population={}",
        args.rule,
        tower.height(),
        tower.termination(),
        tower.population()
    );
    Ok(())
}

pub fn scan(args: ScanArgs) -> CmdResult {
    let mut manifest = RunManifest::new("scan");
    let plan = read_plan(&args.plan, &mut manifest)?;
    let target = read_tower(&args.target, &mut manifest)?;
    let cfg = growth_config(&args.growth, &mut manifest);
    let metric = match args.metric {
        MetricArg::Iou => Metric::Iou,
        MetricArg::Profile => Metric::Profile(kind(args.profile_kind)),
    };
    manifest.param("metric", format!("{:?}", args.metric).to_lowercase());
    if args.metric == MetricArg::Profile {
        manifest.param("profile_kind", kind(args.profile_kind));
    }
    manifest.param("top", args.top);

    let results = scan_rules_with_threads(
        &plan,
        &target,
        metric,
        &cfg,
        args.top as usize,
        args.threads as usize,
    )
    .map_err(|e| Failure::Input(e.to_string()))?;

    let mut csv = String::from("rank,rule_code,score,height,termination\n");
    for (i, r) in results.iter().enumerate() {
        writeln!(
            csv,
            "{},{},{:.6},{},{}",
            i + 1,
            r.rule_code,
            r.score,
            r.height,
            r.termination
        )
        .expect("write to string");
    }
    emit(&csv, args.out.as_deref(), args.manifest.as_deref(), &manifest)
}

pub fn analyze(args: AnalyzeArgs) -> CmdResult {
    let mut manifest = RunManifest::new("analyze");
    let tower = read_tower(&args.tower, &mut manifest)?;
    if !(0.0..0.5).contains(&args.tolerance) {
        return Err(Failure::Usage(format!(
            "--tolerance {} outside [0, 0.5)",
            args.tolerance
        )));
    }

    let show_profile = args.profile.is_some() || (!args.ratio && !args.boxdim);
    let profile_kind = kind(args.profile.unwrap_or(KindArg::Extent));
    let mut report = String::new();

    if show_profile {
        manifest.param("profile", profile_kind);
        report.push_str("layer,value\n");
        for (k, v) in elevation_profile(&tower, profile_kind).values.iter().enumerate() {
            writeln!(report, "{k},{v}").expect("write to string");
        }
    }
    if args.ratio {
        manifest.param("ratio_profile", profile_kind);
        manifest.param("tolerance", format!("{:.6}", args.tolerance));
        manifest.param("min_plateau", args.min_plateau);
        let profile = elevation_profile(&tower, profile_kind);
        let runs: Vec<u64> = segment_profile(&profile, args.min_plateau as usize)
            .map_err(|e| Failure::Input(e.to_string()))?
            .iter()
            .map(|s| s.run_length as u64)
            .collect();
        let sig = ratio_signature(&runs, args.tolerance).map_err(|e| Failure::Input(e.to_string()))?;
        match sig {
            Some(sig) => writeln!(report, "ratio,{sig}"),
            None => writeln!(report, "ratio,NO_RATIO"),
        }
        .expect("write to string");
    }
    if args.boxdim {
        let max_exp = args.max_exp.unwrap_or_else(|| default_max_exponent(&tower));
        manifest.param("max_exp", max_exp);
        let est = box_counting_dimension(&tower, max_exp).map_err(input_err(&args.tower))?;
        writeln!(report, "boxdim,{:.6},{:.6}", est.slope, est.r_squared).expect("write to string");
    }
    emit(&report, args.out.as_deref(), args.manifest.as_deref(), &manifest)
}

pub fn classify(args: ClassifyArgs) -> CmdResult {
    let mut manifest = RunManifest::new("classify");
    let plan = read_plan(&args.plan, &mut manifest)?;
    manifest.param("horizon", args.horizon);
    let rules: Vec<TotalisticRule> = match (args.rule, args.all) {
        (Some(code), false) => {
            manifest.param("rule", code);
            vec![rule(code)?]
        }
        (None, true) => {
            manifest.param("rule", "all");
            TotalisticRule::all().collect()
        }
        _ => return Err(Failure::Usage("give exactly one of --rule or --all".into())),
    };

    let mut report = String::new();
    for r in rules {
        let rep = classify_rule(&plan, r, args.horizon as usize)
            .map_err(|e| Failure::Internal(e.to_string()))?;
        let period = rep.period.map_or_else(|| "-".to_string(), |p| p.to_string());
        writeln!(report, "{},{},{},{}", r.code(), rep.class, rep.transient, period)
            .expect("write to string");
    }
    emit(&report, args.out.as_deref(), args.manifest.as_deref(), &manifest)
}

fn format_from_extension(path: &Path, flag: &str) -> Result<PlanFormat, Failure> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("pbm") => Ok(PlanFormat::Pbm),
        Some("txt") | Some("plan") => Ok(PlanFormat::Plan),
        _ => Err(Failure::Usage(format!(
            "cannot infer format of {} (use .pbm, .txt or .plan, or pass {flag})",
            path.display()
        ))),
    }
}

pub fn convert(args: ConvertArgs) -> CmdResult {
    let from = match args.from {
        Some(f) => f,
        None => format_from_extension(&args.input, "--from")?,
    };
    let to = match args.to {
        Some(f) => f,
        None => format_from_extension(&args.out, "--to")?,
    };
    let bytes = fs::read(&args.input)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", args.input.display())))?;
    let doc = match from {
        PlanFormat::Pbm => voxtower::parse_pbm(&bytes),
        PlanFormat::Plan => std::str::from_utf8(&bytes)
            .map_err(|e| voxtower::Error::Parse {
                line: 1,
                column: None,
                message: format!("not UTF-8: {e}"),
            })
            .and_then(voxtower::parse_plan_text),
    }
    .map_err(input_err(&args.input))?;
    let text = match to {
        PlanFormat::Pbm => write_pbm(&doc.layer),
        PlanFormat::Plan => render_plan_text(&doc.layer),
    };
    write_file(&args.out, &text)
}

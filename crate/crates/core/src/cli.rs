//! Command-line front end. Each subcommand calls one library operation and
//! prints either `key: value` text or a JSON document with the fields
//! `command`, `inputs`, `results` and `warnings`.
//!
//! Exit status: 0 on success, 1 for a domain error (the library's error
//! message is printed), 2 for unparseable input.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra_core::scalar::parse_rational;
use crate::algebra_core::{expand_rational_series, koszul_pairing, Field, IntPoly, Matrix, Scalar};
use crate::clifford::{build_clifford, ideal_family_map, morita_tensor_dim, FdAlgebra};
use crate::error::Error;
use crate::k3_chern::{self, ElemTransformData, K3ChernData, P2ChernData};
use crate::quadratic_forms::QuadForm;
use crate::quadric_nets::{self, BasePoint, NetOfQuadrics};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "quadbundle", version, about = "Exact computations for nets of quadrics and their Clifford algebras")]
pub struct Cli {
    /// Base field: Q or GF(p) with p an odd prime.
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Truncation order for series.
    #[arg(long, global = true, default_value_t = 50)]
    pub order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized re-checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand num/den as a power series.
    Hilbert(SeriesArgs),
    /// Even-degree part of the expansion of num/den.
    Veronese(SeriesArgs),
    #[command(subcommand)]
    Net(NetCommand),
    #[command(subcommand)]
    Clifford(CliffordCommand),
    #[command(subcommand)]
    Theta(ThetaCommand),
    #[command(subcommand)]
    Chern(ChernCommand),
    #[command(subcommand)]
    Morita(MoritaCommand),
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Numerator, a polynomial in t such as "(1+t)^3".
    #[arg(long)]
    pub num: String,
    #[arg(long)]
    pub den: String,
    /// Optional dual series numerator; with --dual-den reports H(t) H'(-t).
    #[arg(long, requires = "dual_den")]
    pub dual_num: Option<String>,
    #[arg(long, requires = "dual_num")]
    pub dual_den: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum NetCommand {
    /// Discriminant, smoothness probe and base points.
    Analyze {
        #[arg(long)]
        file: PathBuf,
        /// Skip the probe over the quadratic extension.
        #[arg(long)]
        no_extension: bool,
    },
    /// Project a fiber away from a base point.
    Reduce {
        #[arg(long)]
        file: PathBuf,
        /// Base point, six comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Plane point a0,a1,a2.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Fiber and reduced ranks over every plane point.
    Profile {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Args, Debug)]
pub struct GramArgs {
    /// Symmetric Gram matrix, rows separated by ';', entries by ','.
    #[arg(long, allow_hyphen_values = true)]
    pub gram: String,
}

#[derive(Subcommand, Debug)]
pub enum CliffordCommand {
    /// Dimensions and diagonalization of Cl(q).
    Build(GramArgs),
    /// Semisimplicity report of Cl(q) or, with --even, of Cl0(q).
    Report {
        #[command(flatten)]
        gram: GramArgs,
        #[arg(long)]
        even: bool,
    },
    /// Left ideals of Cl0(q) generated by maximal isotropic planes.
    Ideals(GramArgs),
}

#[derive(Subcommand, Debug)]
pub enum ThetaCommand {
    /// Even and odd theta characteristics in genus g, or for a smooth plane
    /// curve of the given degree.
    Count {
        #[arg(long, required_unless_present = "degree", conflicts_with = "degree")]
        genus: Option<u32>,
        #[arg(long)]
        degree: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ChernCommand {
    /// chi(A(n)) on a K3 surface.
    ChiK3 {
        #[arg(long)]
        rho: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        c2: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i64,
    },
    /// chi of a sheaf on the plane from rank, c1 and ch2.
    ChiP2 {
        #[arg(long)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1: i64,
        #[arg(long, allow_hyphen_values = true)]
        ch2: String,
    },
    /// chi of the even Clifford algebra pushed to the plane.
    EvenClifford,
    /// Change of c2 under an elementary transformation.
    ElemTransform {
        #[arg(long)]
        f0: i64,
        #[arg(long, allow_hyphen_values = true)]
        f1: i64,
        #[arg(long)]
        q0: i64,
        #[arg(long, allow_hyphen_values = true)]
        q1: i64,
        #[arg(long, allow_hyphen_values = true)]
        csq: i64,
        /// Defaults to f0 + q0.
        #[arg(long)]
        r: Option<i64>,
        /// Defaults to f1 + q1.
        #[arg(long, allow_hyphen_values = true)]
        v1: Option<i64>,
    },
    /// Whether 2r divides c2(A) - c2(A').
    Divisibility {
        #[arg(long)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2_a: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2_b: i64,
    },
    /// Whether c2 < bound + 2r.
    Minimality {
        #[arg(long)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
        #[arg(long, allow_hyphen_values = true)]
        bound: i64,
    },
    /// Invariants of the Brauer-Severi threefold.
    BsInvariants {
        #[arg(long, allow_hyphen_values = true)]
        chi_top: i64,
        #[arg(long, allow_hyphen_values = true)]
        chi_o: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum MoritaCommand {
    /// Dimension of k^{1xn} tensored over M_n(k) with k^{nx1}.
    Tensor {
        #[arg(long)]
        n: usize,
    },
}

/// Output of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

/// Treats any library error as bad input: used while decoding arguments.
fn input<T>(r: Result<T, Error>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(e.to_string()))
}

struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    results: Map<String, Value>,
    warnings: Vec<String>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self { command, inputs: Map::new(), results: Map::new(), warnings: Vec::new() }
    }

    fn input(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.inputs.insert(k.into(), v.into());
        self
    }

    fn result(&mut self, k: &str, v: impl Into<Value>) {
        self.results.insert(k.into(), v.into());
    }

    fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
        })
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.results {
            out.push_str(&format!("{k}: {}\n", text_value(v)));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(text_value).collect::<Vec<_>>().join(" ")
        }
        Value::Array(items) => {
            items.iter().map(|x| format!("\n  {}", text_value(x))).collect::<String>()
        }
        Value::Object(m) => m.iter().map(|(k, x)| format!("{k}={}", text_value(x))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Parses arguments (the first is the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Text => report.to_text(),
                Format::Structured => {
                    serde_json::to_string_pretty(&report.to_json()).expect("report serializes") + "\n"
                }
            };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(Failure::Input(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(e)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    field_of(cli)?;
    match &cli.command {
        Command::Hilbert(a) => series(cli, a, false),
        Command::Veronese(a) => series(cli, a, true),
        Command::Net(c) => net(cli, c),
        Command::Clifford(c) => clifford(cli, c),
        Command::Theta(ThetaCommand::Count { genus, degree }) => {
            let mut r = Report::new("theta count");
            let g = match (genus, degree) {
                (Some(g), _) => *g,
                (None, Some(d)) => {
                    r = r.input("degree", *d);
                    let g = quadric_nets::plane_curve_genus(*d)?;
                    r.result("genus", g);
                    u32::try_from(g).map_err(|_| Failure::Input("genus too large".into()))?
                }
                (None, None) => unreachable!("clap requires one of genus or degree"),
            };
            r = r.input("genus", g);
            r.result("even", quadric_nets::even_theta_count(g).to_string());
            r.result("odd", quadric_nets::odd_theta_count(g).to_string());
            Ok(r)
        }
        Command::Chern(c) => chern(c),
        Command::Morita(MoritaCommand::Tensor { n }) => {
            if *n == 0 {
                return Err(Failure::Input("n must be positive".into()));
            }
            let mut r = Report::new("morita tensor").input("n", *n);
            r.result("dimension", morita_tensor_dim(*n));
            Ok(r)
        }
    }
}

fn series(cli: &Cli, a: &SeriesArgs, veronese: bool) -> Result<Report, Failure> {
    if cli.order == 0 {
        return Err(Failure::Input(Error::ZeroOrder.to_string()));
    }
    let num = input(IntPoly::parse(&a.num))?;
    let den = input(IntPoly::parse(&a.den))?;
    let h = expand_rational_series(&num, &den, cli.order)?;
    let name = if veronese { "veronese" } else { "hilbert" };
    let mut r = Report::new(name).input("num", num.to_string()).input("den", den.to_string()).input("order", cli.order);
    let shown = if veronese { h.even_veronese() } else { h.clone() };
    r.result("coefficients", shown.coeffs().iter().map(|c| json!(c.to_string())).collect::<Vec<_>>());
    if let (Some(dn), Some(dd)) = (&a.dual_num, &a.dual_den) {
        let dual = expand_rational_series(&input(IntPoly::parse(dn))?, &input(IntPoly::parse(dd))?, cli.order)?;
        let pairing = koszul_pairing(&h, &dual)?;
        let is_one = pairing.coeffs().iter().enumerate().all(|(i, c)| {
            if i == 0 {
                c == &num_rational::BigRational::from_integer(1.into())
            } else {
                c == &num_rational::BigRational::from_integer(0.into())
            }
        });
        r.result("koszul_product_is_one", is_one);
    }
    Ok(r)
}

fn field_of(cli: &Cli) -> Result<Field, Failure> {
    input(Field::parse(&cli.field))
}

fn parse_scalars(field: Field, text: &str) -> Result<Vec<Scalar>, Failure> {
    text.split(',').map(|t| input(Scalar::parse(field, t.trim()))).collect()
}

fn parse_gram(field: Field, text: &str) -> Result<QuadForm, Failure> {
    let rows = text.split(';').map(|row| parse_scalars(field, row)).collect::<Result<Vec<_>, _>>()?;
    let m = input(Matrix::from_rows(field, rows))?;
    if m.rows() != m.cols() {
        return Err(Failure::Input("Gram matrix must be square".into()));
    }
    Ok(QuadForm::new(m)?)
}

/// Loads a net file. A structured `net analyze` report is accepted too: its
/// `inputs` hold the net it was run on.
fn load_net(cli: &Cli, path: &PathBuf) -> Result<NetOfQuadrics, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("parse error: {e}")))?;
    let doc = value.get("inputs").filter(|_| value.get("command").is_some()).unwrap_or(&value);
    let net = NetOfQuadrics::from_json(doc).map_err(|e| match e {
        Error::NotSymmetric => Failure::Domain(e),
        other => Failure::Input(other.to_string()),
    })?;
    let field = field_of(cli)?;
    if field == net.field() || (field == Field::Rational && cli.field == "Q") {
        return Ok(net);
    }
    match net.field() {
        Field::Rational => Ok(net.to_field(field)?),
        _ => Err(Failure::Domain(Error::FieldMismatch)),
    }
}

fn plane_point(field: Field, text: &str) -> Result<[Scalar; 3], Failure> {
    let v = parse_scalars(field, text)?;
    <[Scalar; 3]>::try_from(v).map_err(|_| Failure::Input("plane point needs 3 coordinates".into()))
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(|x| json!(x.to_string())).collect())
}

fn net(cli: &Cli, c: &NetCommand) -> Result<Report, Failure> {
    match c {
        NetCommand::Analyze { file, no_extension } => {
            let net = load_net(cli, file)?;
            let net_json = net.to_json();
            let mut r = Report::new("net analyze")
                .input("field", net_json["field"].clone())
                .input("net", net_json["net"].clone());
            let disc = quadric_nets::discriminant(&net);
            r.result("discriminant", disc.to_string());
            if matches!(net.field(), Field::Prime(_)) {
                match quadric_nets::smoothness_probe(&disc, !no_extension) {
                    Ok(v) => {
                        r.result("smoothness_probe", v.to_string());
                        r.warnings.push("smoothness probe is evidence over the tested fields, not a proof".into());
                    }
                    Err(Error::ExpectedSextic) => {
                        r.result("smoothness_probe", "not applicable: discriminant is not a sextic");
                    }
                    Err(e) => return Err(e.into()),
                }
                let points = quadric_nets::find_base_points(&net)?;
                r.result("base_point_count", points.len());
                r.result("base_points", points.iter().map(|p| json!(p.to_string())).collect::<Vec<_>>());
            } else {
                r.warnings.push("probe and base points need --field GF(p)".into());
            }
            Ok(r)
        }
        NetCommand::Reduce { file, point, at } => {
            let net = load_net(cli, file)?;
            let x = BasePoint::new(&net, parse_scalars(net.field(), point)?)?;
            let a = plane_point(net.field(), at)?;
            let mut r = Report::new("net reduce")
                .input("field", net.field().to_string())
                .input("point", x.to_string())
                .input("at", strings(a.iter()))
                .input("seed", cli.seed);
            let fiber = quadric_nets::fiber_form(&net, &a)?;
            let red = quadric_nets::reduce_at_point(&net, &x, &a)?;
            r.result("fiber_rank", fiber.rank());
            r.result("reduced_rank", red.form.rank());
            r.result("complement", red.complement.row_vecs().iter().map(|row| strings(row)).collect::<Vec<_>>());
            r.result("reduced_gram", red.form.gram().row_vecs().iter().map(|row| strings(row)).collect::<Vec<_>>());
            if matches!(net.field(), Field::Prime(_)) {
                let again = quadric_nets::reduce_at_point_randomized(&net, &x, &a, cli.seed)?;
                r.result("randomized_complement_rank", again.form.rank());
            }
            Ok(r)
        }
        NetCommand::Profile { file, point } => {
            let net = load_net(cli, file)?;
            let x = BasePoint::new(&net, parse_scalars(net.field(), point)?)?;
            let profile = quadric_nets::rank_profile(&net, &x)?;
            let mut r = Report::new("net profile").input("field", net.field().to_string()).input("point", x.to_string());
            r.result("points", profile.rows.len());
            r.result("generic_profile", profile.is_generic());
            r.result("rank_drop_two", profile.rank_drop_holds());
            r.result(
                "histogram",
                profile
                    .histogram
                    .iter()
                    .map(|h| {
                        json!({
                            "on_curve": h.on_curve,
                            "fiber_rank": h.fiber_rank,
                            "reduced_rank": h.reduced_rank.map_or(json!("vertex"), |k| json!(k)),
                            "count": h.count,
                        })
                    })
                    .collect::<Vec<_>>(),
            );
            if cli.format == Format::Structured {
                r.result("rows", serde_json::to_value(&profile.rows).expect("rows serialize"));
            }
            Ok(r)
        }
    }
}

fn report_json(alg: &FdAlgebra, r: &mut Report) -> Result<(), Failure> {
    let rep = alg.semisimplicity_report()?;
    r.result("dimension", rep.dimension);
    r.result("center_dimension", rep.center_dimension);
    r.result("trace_form_rank", rep.trace_form_rank);
    r.result("semisimple", rep.semisimple);
    r.result("center_split", rep.center_split);
    r.result("central_idempotents", rep.central_idempotents.iter().map(|e| json!(alg.format_element(e))).collect::<Vec<_>>());
    r.result("factor_dimensions", rep.factor_dimensions.clone());
    r.result("central_nilpotent", rep.central_nilpotent.as_ref().map_or(Value::Null, |z| json!(alg.format_element(z))));
    Ok(())
}

fn clifford(cli: &Cli, c: &CliffordCommand) -> Result<Report, Failure> {
    let field = field_of(cli)?;
    match c {
        CliffordCommand::Build(g) => {
            let q = parse_gram(field, &g.gram)?;
            let cl = build_clifford(&q);
            let mut r = Report::new("clifford build").input("field", field.to_string()).input("gram", g.gram.clone());
            r.result("generators", cl.generator_count());
            r.result("dimension", cl.dim());
            r.result("even_dimension", cl.even_subalgebra().algebra.dim());
            r.result("diagonal", strings(cl.diagonal_values()));
            r.result("rank", q.rank());
            r.result("center_dimension", cl.algebra().center().len());
            r.result("even_center_dimension", cl.even_subalgebra().algebra.center().len());
            Ok(r)
        }
        CliffordCommand::Report { gram, even } => {
            let q = parse_gram(field, &gram.gram)?;
            let cl = build_clifford(&q);
            let name = if *even { "Cl0" } else { "Cl" };
            let mut r = Report::new("clifford report")
                .input("field", field.to_string())
                .input("gram", gram.gram.clone())
                .input("algebra", name);
            if *even {
                report_json(&cl.even_subalgebra().algebra, &mut r)?;
            } else {
                report_json(cl.algebra(), &mut r)?;
            }
            Ok(r)
        }
        CliffordCommand::Ideals(g) => {
            let q = parse_gram(field, &g.gram)?;
            let map = ideal_family_map(&q)?;
            let alg = &map.even.algebra;
            let mut r = Report::new("clifford ideals").input("field", field.to_string()).input("gram", g.gram.clone());
            r.result("planes", map.planes.len());
            let mut classes = map.component_labels.clone();
            classes.sort();
            classes.dedup();
            r.result("component_classes", classes.len());
            r.result("center_dimension", map.center_dimension);
            r.result("center_split", map.center_split);
            r.result("idempotents", map.idempotents.iter().map(|e| json!(alg.format_element(e))).collect::<Vec<_>>());
            r.result("idempotent_classes", map.idempotent_classes());
            r.result("partitions_agree", map.partitions_agree());
            let rows: Vec<Value> = map
                .planes
                .iter()
                .zip(&map.component_labels)
                .map(|(p, class)| {
                    json!({
                        "plane": p.plane.to_string(),
                        "class": class,
                        "ideal_dimension": p.ideal.dimension,
                        "idempotent": p.idempotent,
                        "support_dimension": p.support_dimension,
                        "rank_over_support": p.rank_over_support(),
                    })
                })
                .collect();
            r.result("ideals", rows);
            r.warnings.push(
                "ideal_dimension is over the base field; rank_over_support divides by the central factor containing the ideal"
                    .into(),
            );
            Ok(r)
        }
    }
}

fn chern(c: &ChernCommand) -> Result<Report, Failure> {
    Ok(match c {
        ChernCommand::ChiK3 { rho, d, c2, n, m } => {
            let data = K3ChernData::new(*rho, *m, *c2, *d)?;
            let mut r = Report::new("chern chi-k3")
                .input("rho", *rho)
                .input("d", *d)
                .input("c2", *c2)
                .input("n", *n)
                .input("m", *m);
            let chi = k3_chern::chi_twisted_k3(&data, *n);
            r.result("chi", chi);
            if !data.is_azumaya_compatible() {
                r.warnings.push("c1 is nonzero, so this is not the Chern data of an Azumaya algebra".into());
            }
            let t = k3_chern::simplicity_consequences(chi);
            r.result("if_simple", json!({ "h0": t.h0, "h1": t.h1, "h2": t.h2 }));
            r.warnings.push(format!("if_simple {}", k3_chern::SIMPLICITY_NOTE));
            r
        }
        ChernCommand::ChiP2 { rank, c1, ch2 } => {
            let ch2 = input(parse_rational(ch2))?;
            let data = P2ChernData::new(*rank, *c1, ch2.clone());
            let mut r = Report::new("chern chi-p2").input("rank", *rank).input("c1", *c1).input("ch2", ch2.to_string());
            r.result("chi", k3_chern::chi_bundle_p2(&data)?);
            r
        }
        ChernCommand::EvenClifford => {
            let e = k3_chern::chi_even_clifford_p2()?;
            let mut r = Report::new("chern even-clifford");
            r.result(
                "components",
                e.components
                    .iter()
                    .map(|c| json!({ "name": c.name, "rank": c.chern.rank, "c1": c.chern.c1, "ch2": c.chern.ch2.to_string(), "chi": c.chi }))
                    .collect::<Vec<_>>(),
            );
            r.result("total_rank", e.total_rank);
            r.result("total_chi", e.total_chi);
            r.result("c2", e.c2);
            r.result("exterior_square_cross_check", e.exterior_square_cross_check);
            r
        }
        ChernCommand::ElemTransform { f0, f1, q0, q1, csq, r: deg, v1 } => {
            let data = ElemTransformData::new(
                *f0,
                *f1,
                *q0,
                *q1,
                *csq,
                deg.unwrap_or(f0 + q0),
                v1.unwrap_or(f1 + q1),
            )?;
            let rep = k3_chern::delta_c2_elementary_transform(&data)?;
            let mut r = Report::new("chern elem-transform")
                .input("f0", data.f0)
                .input("f1", data.f1)
                .input("q0", data.q0)
                .input("q1", data.q1)
                .input("csq", data.csq)
                .input("r", data.r)
                .input("v1", data.v1);
            r.result("delta_c2", rep.delta_c2);
            r.result("expanded", rep.expanded);
            r.result("agrees", rep.agrees);
            r.warnings.push(rep.caveat.into());
            r
        }
        ChernCommand::Divisibility { r: deg, c2_a, c2_b } => {
            let mut r = Report::new("chern divisibility").input("r", *deg).input("c2_a", *c2_a).input("c2_b", *c2_b);
            r.result("divisible", k3_chern::gerbe_divisibility_check(*deg, *c2_a, *c2_b)?);
            r
        }
        ChernCommand::Minimality { r: deg, c2, bound } => {
            let mut r = Report::new("chern minimality").input("r", *deg).input("c2", *c2).input("bound", *bound);
            r.result("minimal", k3_chern::minimality_check(*deg, *c2, *bound)?);
            r
        }
        ChernCommand::BsInvariants { chi_top, chi_o, c2 } => {
            let b = k3_chern::brauer_severi_invariants(*chi_top, *chi_o, *c2);
            let mut r =
                Report::new("chern bs-invariants").input("chi_top", *chi_top).input("chi_o", *chi_o).input("c2", *c2);
            r.result("chi_top", b.chi_top);
            r.result("chi_o", b.chi_o);
            r.result("k_cubed", b.k_cubed);
            r
        }
    })
}

use std::io::{self, Write};
use std::path::PathBuf;

use rotaxis::ff::{self, FpMat3, Prime};
use rotaxis::repr::{exp_so3, AxisAngle, RotationSampler};
use rotaxis::su3::{self, UnitaryMatrix};
use rotaxis::{
    cofactor_identity_residual, degenerate_pairs, extract_axis, laplace_cofactor_residual, lemma3_residuals,
    product_identity_residuals, rotation_angle, EigenReport, Error, Idx, Mat3, Method, OrthogonalMatrix, Sign,
};
use serde::Serialize;

use crate::error::CliError;
use crate::input::{parse_documents, read_source, MatrixDocument};
use crate::output::{complex, nums, Emitter, Num};
use crate::{Cli, Command, FfAction, GenArgs, XvalArgs};

/// Cross-validation fails above this pairwise angle (radians).
pub const XVAL_THRESHOLD: f64 = 1e-8;

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = Emitter::new(io::BufWriter::new(stdout.lock()), cli.pretty);
    let result = dispatch(cli, &mut out);
    out.flush()?;
    result
}

fn dispatch<W: Write>(cli: &Cli, out: &mut Emitter<W>) -> Result<(), CliError> {
    match &cli.command {
        Command::Axis(args) => {
            let docs = load(&args.input.input, false)?;
            match args.modulus {
                Some(p) => ff_axis(out, &docs, Some(p)),
                None => {
                    let method: Method = args.method.parse().map_err(|e: Error| CliError::Parse(e.to_string()))?;
                    for (n, doc) in docs.iter().enumerate() {
                        if doc.modulus.is_some() {
                            ff_axis(out, std::slice::from_ref(doc), None).map_err(|e| e.at(n))?;
                            continue;
                        }
                        let a = orthogonal(doc, cli.tol).map_err(|e| e.at(n))?;
                        let report = extract_axis(&a, method).map_err(|e| CliError::from(e).at(n))?;
                        out.emit(&AxisDoc::new(doc, &report, cli.degrees))?;
                    }
                    Ok(())
                }
            }
        }
        Command::Gen(args) => gen(out, args),
        Command::Xval(args) => xval(out, args, cli.tol),
        Command::Check(args) => check(out, &load(&args.input, false)?, cli),
        Command::Ff(args) => {
            let p = Prime::new(args.modulus)?;
            match &args.action {
                FfAction::Check(input) => ff_check(out, &load(&input.input, false)?, p),
                FfAction::Axis(input) => ff_axis(out, &load(&input.input, false)?, Some(p.get())),
                FfAction::Circle => {
                    let sols = ff::circle_solutions(p)?;
                    out.emit(&CircleDoc {
                        modulus: p.get(),
                        count: sols.len(),
                        solutions: sols.iter().map(|(a, b)| [a.value(), b.value()]).collect(),
                    })
                }
                FfAction::Generate { seed, count, factors } => {
                    let mut sampler = RotationSampler::new(*seed);
                    for n in 0..*count {
                        let m = ff::random_product_fp(p, *factors, &mut sampler)?;
                        out.emit(&FpMatrixDoc { label: format!("ff-{seed}-{n}"), modulus: p.get(), matrix: m.rows() })?;
                    }
                    Ok(())
                }
            }
        }
        Command::Su3(args) => {
            for (n, doc) in load(&args.input.input, true)?.iter().enumerate() {
                let a = UnitaryMatrix::new(doc.complex(), cli.tol).map_err(|e| CliError::from(e).at(n))?;
                let lambda = su3::su3_eigenvalues(&a)[args.lambda_index as usize];
                let (v, row) = su3::su3_eigenvector(&a, lambda).map_err(|e| CliError::from(e).at(n))?;
                let residual = (*a.matrix() * v - v.scale(lambda)).norm_inf();
                out.emit(&Su3Doc {
                    label: doc.label.clone(),
                    lambda_index: args.lambda_index,
                    lambda: complex(lambda),
                    eigenvector: v.0.map(complex),
                    row: row.one_based(),
                    residual: Num(residual),
                    paper_form_discrepancy: Num(su3::su3_paper_form_discrepancy(&a, lambda)),
                })?;
            }
            Ok(())
        }
    }
}

fn load(path: &Option<PathBuf>, pairs: bool) -> Result<Vec<MatrixDocument>, CliError> {
    parse_documents(&read_source(path.as_deref())?, pairs)
}

fn orthogonal(doc: &MatrixDocument, tol: f64) -> Result<OrthogonalMatrix, CliError> {
    Ok(OrthogonalMatrix::new(doc.real()?, tol)?)
}

#[derive(Serialize)]
struct AxisDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    axis: [Num; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    angle_rad: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    angle_deg: Option<Num>,
    eigenvalue: i8,
    method: &'static str,
    residual: Num,
}

impl AxisDoc {
    fn new(doc: &MatrixDocument, r: &EigenReport, degrees: bool) -> AxisDoc {
        let (angle_rad, angle_deg) =
            if degrees { (None, Some(Num(r.angle.to_degrees()))) } else { (Some(Num(r.angle)), None) };
        AxisDoc {
            label: doc.label.clone(),
            axis: nums(r.axis.to_array()),
            angle_rad,
            angle_deg,
            eigenvalue: r.eigenvalue.as_i8(),
            method: r.method.as_str(),
            residual: Num(r.residual),
        }
    }
}

#[derive(Serialize)]
struct MatrixDoc {
    label: String,
    matrix: [[Num; 3]; 3],
}

#[derive(Serialize)]
struct ComplexMatrixDoc {
    label: String,
    matrix: [[[Num; 2]; 3]; 3],
}

#[derive(Serialize)]
struct FpMatrixDoc {
    label: String,
    modulus: u64,
    matrix: [[u64; 3]; 3],
}

fn gen<W: Write>(out: &mut Emitter<W>, args: &GenArgs) -> Result<(), CliError> {
    let mut sampler = RotationSampler::new(args.seed);
    for n in 0..args.count {
        let label = format!("gen-{}-{n}", args.seed);
        if args.su3 {
            let a = su3::random_su3(&mut sampler);
            out.emit(&ComplexMatrixDoc { label, matrix: a.matrix().rows.map(|r| r.map(complex)) })?;
            continue;
        }
        let m = match args.angle {
            Some(t) => *exp_so3(AxisAngle::new(sampler.next_unit_vector(), t)?).matrix(),
            None => *sampler.next_rotation().matrix(),
        };
        out.emit(&MatrixDoc { label, matrix: m.rows.map(nums) })?;
    }
    Ok(())
}

const XVAL_METHODS: [(Method, &str); 8] = [
    (Method::V, "V"),
    (Method::U, "U"),
    (Method::W(Idx::I1), "W1"),
    (Method::W(Idx::I2), "W2"),
    (Method::W(Idx::I3), "W3"),
    (Method::Cofactor, "COFACTOR"),
    (Method::Degenerate, "DEGENERATE"),
    (Method::Resolvent, "RESOLVENT"),
];

#[derive(Serialize)]
struct XvalLine {
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    methods: Vec<&'static str>,
    inapplicable: Vec<&'static str>,
    max_angular_deviation: Num,
    max_residual: Num,
}

#[derive(Serialize)]
struct XvalSummary {
    count: usize,
    max_angular_deviation: Num,
    max_residual: Num,
    threshold: Num,
    over_threshold: usize,
}

fn xval_one(index: usize, label: Option<String>, a: &OrthogonalMatrix) -> Result<XvalLine, CliError> {
    let mut reports = Vec::new();
    let mut inapplicable = Vec::new();
    for (method, name) in XVAL_METHODS {
        match extract_axis(a, method) {
            Ok(r) => reports.push((name, r)),
            Err(Error::IdentityInput) => return Err(CliError::from(Error::IdentityInput)),
            Err(_) => inapplicable.push(name),
        }
    }
    let mut deviation = 0.0_f64;
    for (i, (_, r)) in reports.iter().enumerate() {
        for (_, s) in &reports[i + 1..] {
            deviation = deviation.max(r.axis.line_angle(&s.axis));
        }
    }
    let residual = reports.iter().map(|(_, r)| r.residual).fold(0.0, f64::max);
    Ok(XvalLine {
        index,
        label,
        methods: reports.iter().map(|(n, _)| *n).collect(),
        inapplicable,
        max_angular_deviation: Num(deviation),
        max_residual: Num(residual),
    })
}

fn xval<W: Write>(out: &mut Emitter<W>, args: &XvalArgs, tol: f64) -> Result<(), CliError> {
    let matrices: Vec<(Option<String>, OrthogonalMatrix)> = match args.seed {
        Some(seed) => {
            let mut sampler = RotationSampler::new(seed);
            (0..args.count).map(|n| (Some(format!("gen-{seed}-{n}")), sampler.next_rotation())).collect()
        }
        None => load(&args.input.input, false)?
            .iter()
            .enumerate()
            .map(|(n, d)| orthogonal(d, tol).map(|a| (d.label.clone(), a)).map_err(|e| e.at(n)))
            .collect::<Result<_, _>>()?,
    };
    let (mut worst_dev, mut worst_res, mut over) = (0.0_f64, 0.0_f64, 0usize);
    let processed = matrices.len();
    for (n, (label, a)) in matrices.into_iter().enumerate() {
        let line = xval_one(n, label, &a).map_err(|e| e.at(n))?;
        worst_dev = worst_dev.max(line.max_angular_deviation.0);
        worst_res = worst_res.max(line.max_residual.0);
        if line.max_angular_deviation.0 > XVAL_THRESHOLD {
            over += 1;
        }
        if args.report {
            out.emit(&line)?;
        }
    }
    let summary = XvalSummary {
        count: processed,
        max_angular_deviation: Num(worst_dev),
        max_residual: Num(worst_res),
        threshold: Num(XVAL_THRESHOLD),
        over_threshold: over,
    };
    out.emit(&summary)?;
    if over > 0 {
        return Err(CliError::Deviation(format!(
            "{over} of {processed} matrices deviate by more than {XVAL_THRESHOLD:e} rad"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    orthogonal: bool,
    ortho_residual: Num,
    det: Num,
    trace: Num,
    angle: Option<Num>,
    degenerate_pairs: Vec<String>,
    lemma3_max: Option<Num>,
    cofactor_identity_max: Option<Num>,
    laplace_cofactor_max: Num,
    product_identity_max: Option<Num>,
}

fn check<W: Write>(out: &mut Emitter<W>, docs: &[MatrixDocument], cli: &Cli) -> Result<(), CliError> {
    for (n, doc) in docs.iter().enumerate() {
        let m = doc.real().map_err(|e| e.at(n))?;
        let residual = (m.transpose() * m).max_abs_diff(&Mat3::identity());
        let validated = OrthogonalMatrix::new(m, cli.tol);
        if let Err(Error::InvalidArgument(msg)) = &validated {
            return Err(CliError::Parse(msg.clone()));
        }
        let proper = validated.as_ref().ok().map(OrthogonalMatrix::proper_part);
        let max = |xs: &[f64]| Num(xs.iter().copied().fold(0.0, f64::max));
        let angle = proper.map(|r| {
            let t = rotation_angle(r.matrix());
            Num(if cli.degrees { t.to_degrees() } else { t })
        });
        let doc_out = CheckDoc {
            label: doc.label.clone(),
            orthogonal: validated.is_ok(),
            ortho_residual: Num(residual),
            det: Num(m.det()),
            trace: Num(m.trace()),
            angle,
            degenerate_pairs: proper.map(|r| degenerate_pairs(r.matrix())).unwrap_or_default().iter().map(|p| p.to_string()).collect(),
            lemma3_max: proper.map(|r| max(&lemma3_residuals(&r).expect("proper part"))),
            cofactor_identity_max: proper.map(|r| Num(cofactor_identity_residual(&r).expect("proper part").max_abs())),
            laplace_cofactor_max: Num(laplace_cofactor_residual(&m)),
            product_identity_max: proper.map(|r| max(&product_identity_residuals(r.matrix()))),
        };
        out.emit(&doc_out)?;
        if let Err(e) = validated {
            return Err(CliError::from(e).at(n));
        }
    }
    Ok(())
}

fn fp_matrix(doc: &MatrixDocument, flag: Option<u64>) -> Result<FpMat3, CliError> {
    let p = match (flag, doc.modulus) {
        (Some(a), Some(b)) if a != b => return Err(Error::ModulusMismatch(a, b).into()),
        (Some(p), _) | (None, Some(p)) => p,
        (None, None) => return Err(CliError::Parse("no modulus given".into())),
    };
    Ok(FpMat3::new(doc.integer()?, Prime::new(p)?))
}

#[derive(Serialize)]
struct FfCheckDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    modulus: u64,
    special_orthogonal: bool,
    det: u64,
}

fn ff_check<W: Write>(out: &mut Emitter<W>, docs: &[MatrixDocument], p: Prime) -> Result<(), CliError> {
    for (n, doc) in docs.iter().enumerate() {
        let m = fp_matrix(doc, Some(p.get())).map_err(|e| e.at(n))?;
        let ok = ff::is_special_orthogonal_fp(&m);
        out.emit(&FfCheckDoc { label: doc.label.clone(), modulus: p.get(), special_orthogonal: ok, det: m.det().value() })?;
        if !ok {
            return Err(CliError::from(Error::NotSpecialOrthogonalFp(p.get())).at(n));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FfAxisDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    modulus: u64,
    axis: [u64; 3],
    method: &'static str,
    eigenvalue: i8,
}

fn ff_axis<W: Write>(out: &mut Emitter<W>, docs: &[MatrixDocument], flag: Option<u64>) -> Result<(), CliError> {
    for (n, doc) in docs.iter().enumerate() {
        let m = fp_matrix(doc, flag).map_err(|e| e.at(n))?;
        let (axis, method) = ff::axis_fp(&m).map_err(|e| CliError::from(e).at(n))?;
        out.emit(&FfAxisDoc {
            label: doc.label.clone(),
            modulus: m.modulus().get(),
            axis: axis.values(),
            method: method.as_str(),
            eigenvalue: Sign::Plus.as_i8(),
        })?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CircleDoc {
    modulus: u64,
    count: usize,
    solutions: Vec<[u64; 2]>,
}

#[derive(Serialize)]
struct Su3Doc {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    lambda_index: u8,
    lambda: [Num; 2],
    eigenvector: [[Num; 2]; 3],
    row: usize,
    residual: Num,
    paper_form_discrepancy: Num,
}

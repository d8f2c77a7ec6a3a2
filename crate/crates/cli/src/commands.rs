use std::fmt::Write as _;
use std::path::PathBuf;

use ghk_core::checks::{run_all, Status};
use ghk_core::families::{Family, ToricInstance};
use ghk_core::figure::{region_figure, to_svg, RegionKind};
use ghk_core::geometry::Rat;
use ghk_core::invariants::{
    convergence_constant, eg_hk, eg_hk_parts, epsilon_estimate, epsilon_multiplicity, ghk_function,
    h0_powers, keylem_split, newton_multiplicity, normalized, predicted_leading_coefficient,
    quasi_poly_fit, within_convergence_bound,
};
use ghk_core::reptype::{a_tor_table, eg_hk_a, eg_hk_from_type, SplittingVector, StableCMType, TorTable};
use num_bigint::BigInt;
use num_traits::One;

use crate::error::CliError;
use crate::input::{pair, InputDocument, Integer};
use crate::report::*;

#[derive(Clone, Debug)]
pub enum Command {
    Eghk,
    Function { prime: u64, max_n: u32 },
    Split { q: u64 },
    Powers { max_n: u64, period: Option<usize>, max_order: Option<u64> },
    Reptype,
    Verify,
    Plot { out: PathBuf, q_mark: Option<u64> },
}

pub struct Outcome {
    pub report: ReportDocument,
    /// Human-readable lines for standard error.
    pub summary: String,
    /// Set when the report is complete but the run should still fail.
    pub failure: Option<CliError>,
}

fn describe(inst: &ToricInstance) -> Instance {
    let ideal = &inst.ideal;
    let cone = ideal.cone();
    let th = ideal.thresholds();
    Instance {
        family: inst.family.to_string(),
        rays: [pair(cone.ray1()), pair(cone.ray2())],
        generators: ideal.generators().iter().map(pair).collect(),
        det_abs: cone.det_abs().into(),
        thresholds: [th.c1.into(), th.c2.into()],
        saturated: ideal.is_saturated(),
    }
}

pub fn run(cmd: &Command, input: &InputDocument) -> Result<Outcome, CliError> {
    let mut results = Results::default();
    let mut summary = String::new();
    let mut failure = None;

    let needs_instance = !matches!(cmd, Command::Reptype) || input.has_toric();
    let inst = if needs_instance { Some(input.instance()?) } else { None };
    if let Some(inst) = &inst {
        let _ = writeln!(summary, "instance: {}", inst.family);
    }

    match cmd {
        Command::Eghk => {
            let inst = inst.as_ref().expect("toric input");
            let value = eg_hk(&inst.ideal);
            let (epsilon, remainder) = eg_hk_parts(&inst.ideal);
            let _ = writeln!(summary, "e_gHK = {value}");
            if let Some(cf) = &inst.closed_form {
                let _ = writeln!(summary, "closed form = {cf}");
            }
            results.eghk = Some(EghkResult {
                value: (&value).into(),
                epsilon: (&epsilon).into(),
                remainder: (&remainder).into(),
                closed_form: inst.closed_form.as_ref().map(ExactRational::new),
                gap_length: inst.ideal.gap_length().into(),
            });
        }
        Command::Function { prime, max_n } => {
            let inst = inst.as_ref().expect("toric input");
            let counts = ghk_function(&inst.ideal, *prime, *max_n)?;
            let mut q = BigInt::one();
            let mut ratios = Vec::new();
            let mut within = true;
            for c in &counts {
                ratios.push(ExactRational::new(&normalized(c, &q)));
                within &= within_convergence_bound(&inst.ideal, c, &q);
                q *= *prime;
            }
            let limit = eg_hk(&inst.ideal);
            let _ = writeln!(
                summary,
                "F(n), n = 0..={max_n}, p = {prime}: {}",
                counts.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            );
            let _ = writeln!(summary, "limit e_gHK = {limit}, within bound: {within}");
            results.function = Some(FunctionResult {
                prime: *prime,
                counts: ints(&counts),
                ratios,
                limit: (&limit).into(),
                constant: convergence_constant(&inst.ideal).into(),
                within_bound: within,
            });
        }
        Command::Split { q } => {
            let inst = inst.as_ref().expect("toric input");
            let s = keylem_split(&inst.ideal, *q)?;
            let _ = writeln!(
                summary,
                "q = {q}: total {} = {} (symbolic vs ordinary) + {} (ordinary vs Frobenius)",
                s.total_gap, s.sym_vs_ord, s.ord_vs_frob
            );
            results.split = Some(SplitResult {
                q: *q,
                additive: s.is_additive(),
                total_gap: s.total_gap.into(),
                sym_vs_ord: s.sym_vs_ord.into(),
                ord_vs_frob: s.ord_vs_frob.into(),
            });
        }
        Command::Powers { max_n, period, max_order } => {
            let inst = inst.as_ref().expect("toric input");
            results.powers = Some(powers(inst, *max_n, *period, *max_order, &mut summary)?);
        }
        Command::Reptype => {
            let toric = inst.as_ref().map(|i| eg_hk(&i.ideal));
            let (value, dim) = reptype_value(input, inst.as_ref())?;
            let _ = writeln!(summary, "e_gHK from the stable CM type = {value}");
            if let Some(t) = &toric {
                let _ = writeln!(summary, "toric e_gHK = {t}");
            }
            results.reptype = Some(ReptypeResult {
                value: (&value).into(),
                dim,
                toric_value: toric.as_ref().map(ExactRational::new),
            });
        }
        Command::Verify => {
            let inst = inst.as_ref().expect("toric input");
            let outcomes = run_all(inst);
            let failed = outcomes.iter().filter(|o| o.failed()).count();
            let checks = outcomes
                .iter()
                .map(|o| {
                    let status = match o.status {
                        Status::Passed => "passed",
                        Status::Failed => "failed",
                        Status::Skipped => "skipped",
                    };
                    let _ = writeln!(summary, "{status:>8}  {}: {}", o.name, o.detail);
                    CheckLine {
                        name: o.name.to_string(),
                        status: status.to_string(),
                        detail: o.detail.clone(),
                    }
                })
                .collect();
            if failed > 0 {
                failure = Some(CliError::VerifyFailed {
                    failed,
                    total: outcomes.len(),
                });
            }
            results.verify = Some(VerifyResult {
                checks,
                passed: failed == 0,
            });
        }
        Command::Plot { out, q_mark } => {
            let inst = inst.as_ref().expect("toric input");
            let fig = region_figure(&inst.ideal, *q_mark)?;
            std::fs::write(out, to_svg(&fig)).map_err(|e| CliError::Io(out.display().to_string(), e))?;
            let red = fig.area_of(RegionKind::Red);
            let green = fig.area_of(RegionKind::Green);
            let _ = writeln!(summary, "wrote {} (red area {red}, green area {green})", out.display());
            results.plot = Some(PlotResult {
                path: out.display().to_string(),
                q_mark: *q_mark,
                red_area: (&red).into(),
                green_area: (&green).into(),
            });
        }
    }

    Ok(Outcome {
        report: ReportDocument {
            input: input.clone(),
            instance: inst.as_ref().map(describe),
            results,
        },
        summary,
        failure,
    })
}

fn powers(
    inst: &ToricInstance,
    max_n: u64,
    period: Option<usize>,
    max_order: Option<u64>,
    summary: &mut String,
) -> Result<PowersResult, CliError> {
    let ideal = &inst.ideal;
    if max_n == 0 {
        return Err(CliError::Input("--max-n must be positive".into()));
    }
    let h0 = h0_powers(ideal, max_n);
    let _ = writeln!(
        summary,
        "l(H^0(R/I^n)), n = 1..={max_n}: {}",
        h0.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );
    let epsilon = epsilon_multiplicity(ideal);
    let estimate = if max_n >= 10 { Some(epsilon_estimate(ideal, max_n)?) } else { None };

    let quasi = match period {
        None => None,
        Some(p) => {
            let fit = quasi_poly_fit(&h0, p)?;
            let _ = writeln!(summary, "quasi-polynomial: period {p}, leading {}, onset n = {}", fit.leading(), fit.onset);
            Some(QuasiResult {
                period: fit.period,
                coefficients: fit
                    .coefficients
                    .iter()
                    .map(|c| [(&c[0]).into(), (&c[1]).into(), (&c[2]).into()])
                    .collect(),
                leading: fit.leading().into(),
                onset: fit.onset,
            })
        }
    };

    let torsion = if ideal.is_saturated() {
        let bound = max_order.unwrap_or_else(|| u64::try_from(ideal.cone().det_abs()).unwrap_or(u64::MAX));
        let tf = ideal.torsion_factorization(bound)?;
        let e_j = if tf.cofactor.is_unit() { None } else { Some(newton_multiplicity(&tf.cofactor)?) };
        let predicted = e_j.as_ref().map(|e| predicted_leading_coefficient(tf.order, e));
        let _ = writeln!(
            summary,
            "I^{} = x^{} J, e(J) = {}",
            tf.order,
            tf.principal_part,
            e_j.as_ref().map_or("-".to_string(), ToString::to_string)
        );
        Some(TorsionResult {
            order: tf.order,
            principal_part: pair(&tf.principal_part),
            cofactor_generators: tf.cofactor.generators().iter().map(pair).collect(),
            newton_multiplicity: e_j.map(Integer),
            predicted_leading: predicted.as_ref().map(ExactRational::new),
        })
    } else {
        None
    };

    Ok(PowersResult {
        h0: ints(&h0),
        epsilon: (&epsilon).into(),
        epsilon_estimate: estimate.as_ref().map(ExactRational::new),
        quasi_polynomial: quasi,
        torsion,
    })
}

fn reptype_value(input: &InputDocument, inst: Option<&ToricInstance>) -> Result<(Rat, usize), CliError> {
    let to_big = |v: &[Integer]| v.iter().map(|i| i.0.clone()).collect::<Vec<_>>();
    let Some(spec) = &input.reptype else {
        // `(x, z^m)` over the A_{r-1} singularity has stable CM type e_m.
        return match inst.map(|i| &i.family) {
            Some(Family::ASingularity { r, m }) => {
                let u = StableCMType::unit((*r - 1) as usize, *m as usize)?;
                Ok((eg_hk_a(*r, &u)?, (*r - 1) as usize))
            }
            _ => Err(CliError::Input(
                "reptype needs a `reptype` section, or an `a:r,m` family".into(),
            )),
        };
    };
    let u = StableCMType::new(to_big(&spec.u))?;
    let densities = |len: usize, default: Option<Rat>| -> Result<SplittingVector, CliError> {
        match (&spec.v, default) {
            (Some(v), _) => Ok(SplittingVector::new(v.iter().map(|x| x.value()).collect::<Result<_, _>>()?)?),
            (None, Some(d)) => Ok(SplittingVector::constant(len, d)?),
            (None, None) => Err(CliError::Input("`torTable` needs densities `v`".into())),
        }
    };
    match (spec.r, &spec.tor_table) {
        (Some(r), None) => {
            let table = a_tor_table(r)?;
            let v = densities(table.dim(), Some(Rat::new(BigInt::one(), BigInt::from(r))))?;
            Ok((eg_hk_from_type(&u, &v, &table)?, table.dim()))
        }
        (None, Some(rows)) => {
            let table = TorTable::new(rows.iter().map(|row| to_big(row)).collect())?;
            let v = densities(table.dim(), None)?;
            Ok((eg_hk_from_type(&u, &v, &table)?, table.dim()))
        }
        _ => Err(CliError::Input("`reptype` needs exactly one of `r` or `torTable`".into())),
    }
}

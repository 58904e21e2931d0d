use serde_json::{json, Value};
use vwb_core::chow::{chi_end0_twist, ChernPair};
use vwb_core::cohomology::{euler_blowup7, h_blowup7, h_p1xp1, h_p2, BidegreeLine, BlowupLine};
use vwb_core::fixed_points::enumerate_fixed;
use vwb_core::moduli::{
    euler_consistency, expected_dim, hyper_h1_dim, hyper_h2_dim, in_conflict_regime, spectral_terms, HyperDim,
};
use vwb_core::report::{rational_json, Discrepancy, Report, Status};
use vwb_core::schwarzenberger::{H1Mode, L1Bundle, L2Bundle};
use vwb_core::split::{
    adjoint_rank_oracle, char_poly, conic_is_smooth, h0_end0_split, higgs_param_count, random_stable_higgs,
    stability_bound, tangent_dim_split,
};
use vwb_core::verify::{self, VerifyConfig};

use crate::{BundleKind, CohomKind, FixedArgs, ModeArgs, SplitArgs, VerifyArgs};

pub enum Outcome {
    Report(Report),
    /// bad arguments: exit code 2
    Usage(String),
}

fn done(report: Report) -> Outcome {
    Outcome::Report(report.finish())
}

fn seven(t: &[i64]) -> Result<[i64; 7], String> {
    <[i64; 7]>::try_from(t).map_err(|_| format!("--t needs exactly 7 values, got {}", t.len()))
}

fn chern_json(c: ChernPair) -> Value {
    json!({ "c1": c.c1, "c2": c.c2, "discriminant": c.discriminant() })
}

pub fn chern(kind: BundleKind) -> Outcome {
    let mut report = Report::new("chern");
    match kind {
        BundleKind::L1 { r, s } => {
            let b = L1Bundle::new(r, s);
            report.input("type", "l1").input("r", r).input("s", s);
            report.output("chern", chern_json(b.chern()));
            report.output("homogeneous_form", b.homogeneous_form().map(|h| h.to_string()));
            // the split identifications must reproduce the Chern data directly
            let direct = match b.homogeneous_form() {
                Some(vwb_core::schwarzenberger::HomogeneousForm::Split { a, b: bb }) => Some(ChernPair::split(a, bb)),
                _ => None,
            };
            if let Some(direct) = direct {
                report.output("split_chern", chern_json(direct));
                if direct != b.chern() {
                    report.mark(Status::Fail);
                }
            }
        }
        BundleKind::L2 { p, t } => {
            let t = match seven(&t) {
                Ok(t) => t,
                Err(e) => return Outcome::Usage(e),
            };
            report.input("type", "l2").input("p", p).input("t", t);
            report.output("chern", chern_json(L2Bundle::new(p, t).chern()));
        }
        BundleKind::Split { m1, m2, d } => {
            report.input("type", "split").input("m1", m1).input("m2", m2).input("d", d);
            report.output("chern", chern_json(ChernPair::split(m1, m2)));
        }
    }
    done(report)
}

pub fn cohom(kind: CohomKind) -> Outcome {
    let mut report = Report::new("cohom");
    match kind {
        CohomKind::P2 { k } => {
            report.input("space", "p2").input("k", k);
            for i in 0..=2 {
                report.output(&format!("h{i}"), h_p2(i, k).expect("i <= 2"));
            }
        }
        CohomKind::Quadric { a, b } => {
            report.input("space", "quadric").input("a", a).input("b", b);
            for i in 0..=2 {
                report.output(&format!("h{i}"), h_p1xp1(i, BidegreeLine::new(a, b)).expect("i <= 2"));
            }
        }
        CohomKind::Blowup7 { p, t } => {
            let t = match seven(&t) {
                Ok(t) => t,
                Err(e) => return Outcome::Usage(e),
            };
            report.input("space", "blowup7").input("p", p).input("t", t);
            let line = BlowupLine::new(p, t);
            let counts = match (h_blowup7(0, &line), h_blowup7(1, &line)) {
                (Ok(h0), Ok(h1)) => [h0, h1],
                (Err(e), _) | (_, Err(e)) => return Outcome::Usage(e.to_string()),
            };
            let mut clamped = false;
            for (i, c) in counts.iter().enumerate() {
                report.output(&format!("h{i}"), c.value);
                report.output(&format!("h{i}_raw"), c.raw);
                clamped |= c.clamped();
            }
            report.output("chi", rational_json(&euler_blowup7(&line)));
            report.output("clamped", clamped);
            if clamped {
                report.mark(Status::Unknown);
            }
        }
    }
    done(report)
}

pub fn stability(kind: BundleKind) -> Outcome {
    let mut report = Report::new("stability");
    match kind {
        BundleKind::L1 { r, s } => {
            let b = L1Bundle::new(r, s);
            report.input("type", "l1").input("r", r).input("s", s);
            report.output("stable", b.is_stable()).output("h0_end", b.h0_end());
        }
        BundleKind::L2 { p, t } => {
            let t = match seven(&t) {
                Ok(t) => t,
                Err(e) => return Outcome::Usage(e),
            };
            report.input("type", "l2").input("p", p).input("t", t);
            match L2Bundle::new(p, t).is_stable() {
                Ok(stable) => report.output("stable", stable),
                Err(e) => return Outcome::Usage(e.to_string()),
            };
        }
        BundleKind::Split { m1, m2, d } => {
            report.input("type", "split").input("m1", m1).input("m2", m2).input("d", d);
            report.output("admits_stable_higgs", d >= 1 && stability_bound(m1, m2, d));
        }
    }
    done(report)
}

fn h1_discrepancy(b: &L1Bundle, d: u64) -> Option<Discrepancy> {
    (!b.h1_modes_agree(d)).then(|| {
        Discrepancy::new(
            format!("h1_end0(k={}, d={d})", b.gap()),
            b.h1_end0(d, H1Mode::Paper),
            b.h1_end0(d, H1Mode::Derived),
        )
    })
}

pub fn end0_dims(args: ModeArgs) -> Outcome {
    let b = L1Bundle::new(args.r, args.s);
    let d = args.d;
    let mut report = Report::new("end0-dims");
    report.input("r", args.r).input("s", args.s).input("d", d);
    if let Some(mode) = args.mode {
        report.input("mode", H1Mode::from(mode).as_str());
        report.output("h1", b.h1_end0(d, mode.into()));
    }
    let chi = chi_end0_twist(b.chern(), d as i64).expect("integral Chern data");
    report
        .output("h0", b.h0_end0(d))
        .output("h1_paper", b.h1_end0(d, H1Mode::Paper))
        .output("h1_derived", b.h1_end0(d, H1Mode::Derived))
        .output("h2", b.h2_end0(d))
        .output("chi", chi);
    for mode in H1Mode::ALL {
        report.output(&format!("hrr_{mode}"), euler_consistency(&b, d, mode).pass);
    }
    if let Some(disc) = h1_discrepancy(&b, d) {
        report.discrepancy(disc);
    }
    if !euler_consistency(&b, d, H1Mode::Derived).pass {
        report.mark(Status::Fail);
    }
    done(report)
}

fn hyper_json(h: HyperDim) -> Value {
    match h {
        HyperDim::Known { value } => json!(value),
        _ => Value::Null,
    }
}

pub fn moduli(args: ModeArgs) -> Outcome {
    let b = L1Bundle::new(args.r, args.s);
    let d = args.d;
    if d == 0 {
        return Outcome::Usage("moduli needs d >= 1".into());
    }
    let mut report = Report::new("moduli");
    report.input("r", args.r).input("s", args.s).input("d", d);
    let mode = match args.mode {
        Some(m) => {
            report.input("mode", H1Mode::from(m).as_str());
            H1Mode::from(m)
        }
        None if in_conflict_regime(&b, d) => {
            report.output("reason", "s - r > d + 2 with d >= 2: pass --mode paper or --mode derived");
            if let Some(disc) = h1_discrepancy(&b, d) {
                report.discrepancy(disc);
            }
            report.mark(Status::Unknown);
            return done(report);
        }
        // both sources agree outside the conflict regime
        None => H1Mode::Derived,
    };
    let h1 = hyper_h1_dim(&b, d, mode).expect("d >= 1");
    let h2 = hyper_h2_dim(&b, d, mode).expect("d >= 1");
    report.output("h1_dim", hyper_json(h1)).output("h2_dim", hyper_json(h2));
    if let Ok(terms) = spectral_terms(&b, d, mode) {
        report.output("spectral_terms", terms);
    }
    match h1 {
        HyperDim::Known { value } => {
            let expect = if d == 1 { 6 } else { expected_dim(d) };
            if value != expect || h2 != (HyperDim::Known { value: 0 }) {
                report.mark(Status::Fail);
            }
        }
        HyperDim::Unknown { .. } => {
            report.output("h1", h1);
            report.mark(Status::Unknown);
        }
        HyperDim::Inconsistent { claimed, assembled } => {
            report.output("h1", h1);
            report.discrepancy(Discrepancy::new(format!("hyper_h1(k={}, d={d})", b.gap()), claimed, assembled));
            report.mark(Status::Unknown);
        }
    }
    if let Some(disc) = h1_discrepancy(&b, d) {
        report.discrepancy(disc);
    }
    done(report)
}

pub fn split(args: SplitArgs) -> Outcome {
    let (m, d) = (args.m, args.d);
    let counts = match higgs_param_count(m, d) {
        Ok(c) => c,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let tangent = tangent_dim_split(m, d).expect("range checked");
    let mut report = Report::new("split");
    report.input("m", m).input("d", d);
    report
        .output("higgs_params", counts.total)
        .output("higgs_params_modulo_conj", counts.modulo_conj)
        .output("tangent_dim", tangent)
        .output("h0_end0_twisted", h0_end0_split(m, d));
    if args.oracle {
        report.input("seed", args.seed);
        match random_stable_higgs(m, d, args.seed) {
            Ok(phi) => {
                let ranks = adjoint_rank_oracle(m, d, &phi).expect("sampled with the right shape");
                let [a, b, c, _] = phi.entries();
                report.output(
                    "field",
                    json!({ "a": a.to_string(), "b": b.to_string(), "c": c.to_string() }),
                );
                let cp = char_poly(&phi);
                report.output("det", cp.det.to_string());
                if d == 1 {
                    report.output("det_conic_smooth", conic_is_smooth(&cp.det).expect("degree 2"));
                }
                report.output("oracle", ranks);
                if ranks.quotient_dim != tangent {
                    report.mark(Status::Fail);
                }
            }
            Err(e) => {
                report.output("oracle_error", e.to_string());
                report.mark(Status::Unknown);
            }
        }
    }
    done(report)
}

pub fn fixed_points(args: FixedArgs) -> Outcome {
    let mut report = Report::new("fixed-points");
    report.input("c1", args.c1).input("c2", args.c2).input("d", args.d);
    report.output("components", enumerate_fixed(args.c1, args.c2, args.d));
    done(report)
}

pub fn verify(args: VerifyArgs) -> Outcome {
    let config = VerifyConfig {
        d_max: args.grid_dmax,
        k_max: args.grid_kmax,
        seeds: args.seeds,
    };
    Outcome::Report(verify::run(&config))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Plain `key: value` listing of a report.
pub fn render_table(report: &Report) -> String {
    let mut out = format!("{}  [{}]\n", report.command, report.status.as_str());
    let width = report
        .inputs
        .keys()
        .chain(report.outputs.keys())
        .map(|k| k.len())
        .max()
        .unwrap_or(0);
    for (k, v) in &report.inputs {
        out.push_str(&format!("  {k:>width$}  {}\n", scalar(v)));
    }
    out.push_str(&format!("  {}\n", "-".repeat(width + 8)));
    for (k, v) in &report.outputs {
        out.push_str(&format!("  {k:>width$}  {}\n", scalar(v)));
    }
    if !report.discrepancies.is_empty() {
        out.push_str("discrepancies (published vs derived)\n");
        for d in &report.discrepancies {
            out.push_str(&format!(
                "  {}: {} vs {}\n",
                d.location,
                scalar(&d.paper_value),
                scalar(&d.derived_value)
            ));
        }
    }
    out
}

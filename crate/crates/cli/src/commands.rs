use std::fmt::Write as _;

use eigloc::{
    cvetkovic_disc, disc_union_in_disc, eig_general, eig_symmetric, full_inclusion_region,
    lili_disc, non_perron, normalized_laplacian_bounds, randic_bounds, real_interval_hull,
    regular_graph_bounds, rojo_soto_bound, symmetric_randic, ClassicDisc, Graph,
    InclusionRegion, NonPerron, SolverConfig, Spectrum, StochasticMatrix,
};
use serde_json::json;

use crate::num::{complex6, sig6};
use crate::svg;
use crate::{Failure, Format, RunConfig};

pub const REDUCIBLE_WARNING: &str = "warning: matrix is reducible; the Perron root may not be simple";

/// Output of a command plus anything meant for stderr.
pub struct Output {
    pub body: String,
    pub warnings: Vec<String>,
}

struct MatrixEigs {
    all: Spectrum,
    rest: NonPerron,
}

fn matrix_eigs(s: &StochasticMatrix, cfg: &RunConfig) -> Result<MatrixEigs, Failure> {
    let all = eig_general(s.matrix(), &SolverConfig::default())?;
    let rest = non_perron(&all, cfg.slack.max(1e-8))?;
    Ok(MatrixEigs { all, rest })
}

fn reducible_warnings(s: &StochasticMatrix) -> Vec<String> {
    if s.is_irreducible() {
        Vec::new()
    } else {
        vec![REDUCIBLE_WARNING.to_string()]
    }
}

fn classic_line(out: &mut String, name: &str, symbol: &str, c: &ClassicDisc) {
    let _ = writeln!(
        out,
        "{name}: {symbol} = {}, center = {}, radius = {}",
        sig6(c.gamma),
        sig6(c.disc.center.re),
        sig6(c.disc.radius)
    );
    if c.radius_clamped() {
        let _ = writeln!(
            out,
            "  note: radius formula gave {}, clamped to 0",
            sig6(c.raw_radius)
        );
    }
}

pub fn localize(s: &StochasticMatrix, cfg: &RunConfig) -> Result<Output, Failure> {
    let region = full_inclusion_region(s)?;
    let eigs = if cfg.with_eigs {
        Some(matrix_eigs(s, cfg)?)
    } else {
        None
    };
    let warnings = reducible_warnings(s);
    let body = match cfg.format {
        Format::Json => {
            let mut doc = serde_json::to_value(region.to_json(eigs.as_ref().map(|e| e.all.values())))
                .expect("region serializes");
            doc["valid"] = json!(true);
            doc["row_sum_tolerance"] = json!(s.row_sum_tolerance());
            doc["irreducible"] = json!(warnings.is_empty());
            doc["cvetkovic"] = classic_json(&cvetkovic_disc(s)?);
            doc["lili"] = classic_json(&lili_disc(s)?);
            if let Some(e) = &eigs {
                doc["membership"] = membership_json(s, &region, e, cfg.slack)?;
            }
            serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
        }
        Format::Svg => svg::render(&region, eigs.as_ref().map(|e| e.all.values())),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "matrix order: {} (row-sum tolerance {})",
                s.order(),
                sig6(s.row_sum_tolerance())
            );
            let _ = writeln!(out, "irreducible: {}", yes_no(warnings.is_empty()));
            for w in &warnings {
                let _ = writeln!(out, "{w}");
            }
            let _ = writeln!(out);
            let _ = writeln!(out, "inclusion region: intersection over i of [G_S(i) ∪ {{1}}]");
            write_groups(&mut out, &region);
            let _ = writeln!(out);
            classic_line(&mut out, "cvetkovic disc", "gamma", &cvetkovic_disc(s)?);
            classic_line(&mut out, "li-li disc", "gamma'", &lili_disc(s)?);
            if let Some(e) = &eigs {
                write_membership(&mut out, s, &region, e, cfg.slack)?;
            }
            out
        }
    };
    Ok(Output { body, warnings })
}

fn write_groups(out: &mut String, region: &InclusionRegion) {
    for (g, group) in region.groups().iter().enumerate() {
        let _ = writeln!(out, "group i = {}:", g + 1);
        for (label, d) in group.iter() {
            let _ = writeln!(
                out,
                "  k = {label}: center = {}, radius = {}",
                complex6(d.center),
                sig6(d.radius)
            );
        }
    }
}

fn write_membership(
    out: &mut String,
    s: &StochasticMatrix,
    region: &InclusionRegion,
    e: &MatrixEigs,
    slack: f64,
) -> Result<(), Failure> {
    let cv = cvetkovic_disc(s)?.disc;
    let ll = lili_disc(s)?.disc;
    let _ = writeln!(out);
    let values: Vec<String> = e.all.values().iter().map(|z| complex6(*z)).collect();
    let _ = writeln!(out, "eigenvalues: {}", values.join(", "));
    if e.rest.extra_near_one > 0 {
        let _ = writeln!(
            out,
            "note: {} further eigenvalue(s) within tolerance of 1",
            e.rest.extra_near_one
        );
    }
    let _ = writeln!(out, "membership (slack {}):", sig6(slack));
    let mut header = String::from("  eigenvalue");
    for i in 1..=region.order() {
        let _ = write!(header, "  G{i}");
    }
    header.push_str("  region  cvetkovic  li-li");
    let _ = writeln!(out, "{header}");
    for &z in e.rest.spectrum.values() {
        let mut line = format!("  {}", complex6(z));
        for g in region.groups() {
            let _ = write!(line, "  {}", in_out(g.contains(z, slack)));
        }
        let _ = write!(
            line,
            "  {}  {}  {}",
            in_out(region.contains(z, slack)),
            in_out(cv.contains(z, slack)),
            in_out(ll.contains(z, slack))
        );
        let _ = writeln!(out, "{line}");
    }
    Ok(())
}

fn classic_json(c: &ClassicDisc) -> serde_json::Value {
    json!({
        "gamma": c.gamma,
        "center": c.disc.center.re,
        "radius": c.disc.radius,
        "raw_radius": c.raw_radius,
    })
}

fn membership_json(
    s: &StochasticMatrix,
    region: &InclusionRegion,
    e: &MatrixEigs,
    slack: f64,
) -> Result<serde_json::Value, Failure> {
    let cv = cvetkovic_disc(s)?.disc;
    let ll = lili_disc(s)?.disc;
    let rows: Vec<serde_json::Value> = e
        .rest
        .spectrum
        .values()
        .iter()
        .map(|&z| {
            let groups: Vec<bool> = region.groups().iter().map(|g| g.contains(z, slack)).collect();
            json!({
                "eigenvalue": [z.re, z.im],
                "groups": groups,
                "region": region.contains(z, slack),
                "cvetkovic": cv.contains(z, slack),
                "lili": ll.contains(z, slack),
            })
        })
        .collect();
    Ok(json!({ "slack": slack, "rows": rows }))
}

fn in_out(b: bool) -> &'static str {
    if b {
        "in"
    } else {
        "OUT"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn compare(s: &StochasticMatrix, cfg: &RunConfig) -> Result<Output, Failure> {
    let region = full_inclusion_region(s)?;
    let cv = cvetkovic_disc(s)?;
    let ll = lili_disc(s)?;
    let warnings = reducible_warnings(s);

    struct Row {
        i: usize,
        lo: f64,
        hi: f64,
        in_cv: bool,
        in_ll: bool,
    }
    let rows = region
        .groups()
        .iter()
        .enumerate()
        .map(|(g, u)| {
            let (lo, hi) = real_interval_hull(u)?;
            Ok(Row {
                i: g + 1,
                lo,
                hi,
                in_cv: disc_union_in_disc(u, &cv.disc),
                in_ll: disc_union_in_disc(u, &ll.disc),
            })
        })
        .collect::<Result<Vec<_>, eigloc::Error>>()?;
    let tightest = rows
        .iter()
        .min_by(|a, b| (a.hi - a.lo).total_cmp(&(b.hi - b.lo)))
        .expect("order >= 2");

    let body = match cfg.format {
        Format::Json => {
            let groups: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "i": r.i,
                        "hull": [r.lo, r.hi],
                        "in_cvetkovic": r.in_cv,
                        "in_lili": r.in_ll,
                    })
                })
                .collect();
            let doc = json!({
                "n": s.order(),
                "irreducible": warnings.is_empty(),
                "cvetkovic": classic_json(&cv),
                "lili": classic_json(&ll),
                "groups": groups,
                "tightest": tightest.i,
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            for w in &warnings {
                let _ = writeln!(out, "{w}");
            }
            classic_line(&mut out, "cvetkovic disc", "gamma", &cv);
            classic_line(&mut out, "li-li disc", "gamma'", &ll);
            let _ = writeln!(out);
            let _ = writeln!(out, "group  hull_lo  hull_hi  width  in_cvetkovic  in_lili");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{}  {}  {}  {}  {}  {}",
                    r.i,
                    sig6(r.lo),
                    sig6(r.hi),
                    sig6(r.hi - r.lo),
                    r.in_cv,
                    r.in_ll
                );
            }
            let _ = writeln!(
                out,
                "tightest group: i = {} (hull width {})",
                tightest.i,
                sig6(tightest.hi - tightest.lo)
            );
            out
        }
        Format::Svg => return Err(Failure::Input("compare has no svg output".into())),
    };
    Ok(Output { body, warnings })
}

pub fn plot(s: &StochasticMatrix, cfg: &RunConfig) -> Result<Output, Failure> {
    if cfg.format != Format::Svg {
        return Err(Failure::Input("plot only writes svg".into()));
    }
    let region = full_inclusion_region(s)?;
    let eigs = if cfg.with_eigs {
        Some(matrix_eigs(s, cfg)?)
    } else {
        None
    };
    Ok(Output {
        body: svg::render(&region, eigs.as_ref().map(|e| e.all.values())),
        warnings: reducible_warnings(s),
    })
}

pub fn randic(g: &Graph, cfg: &RunConfig) -> Result<Output, Failure> {
    let bounds = randic_bounds(g)?;
    let lap = normalized_laplacian_bounds(g)?;
    let regular = match regular_graph_bounds(g) {
        Ok(r) => Some(r),
        Err(eigloc::Error::NotRegular { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let rojo = rojo_soto_bound(g)?;

    let eigs = if cfg.with_eigs {
        let ev = eig_symmetric(&symmetric_randic(g)?, &SolverConfig::default())?.real_parts();
        let n = ev.len();
        Some((ev[1], ev[n - 1], ev))
    } else {
        None
    };
    if let Some((l2, ln, _)) = &eigs {
        if *l2 > bounds.upper_bound + cfg.slack || *ln < bounds.lower_bound - cfg.slack {
            return Err(Failure::Numeric(format!(
                "oracle eigenvalues violate the bounds: lambda_2 = {l2}, lambda_n = {ln}"
            )));
        }
    }

    let body = match cfg.format {
        Format::Json => {
            let mut doc = json!({
                "n": g.order(),
                "m": g.edge_count(),
                "alpha": bounds.alpha,
                "beta": bounds.beta,
                "lambda_n_lower": bounds.lower_bound,
                "lambda_2_upper": bounds.upper_bound,
                "rho_2_lower": lap.rho2_lower,
                "rho_n_upper": lap.rhon_upper,
                "rojo_soto": rojo,
                "rojo_soto_lambda_n_lower": -rojo,
            });
            if let Some(r) = &regular {
                doc["regular"] = json!({
                    "degree": r.degree,
                    "gamma": r.gamma,
                    "delta": r.delta,
                    "lambda_n_lower": r.lower_bound,
                    "lambda_2_upper": r.upper_bound,
                    "weaker_than_general": r.is_weaker_than_general(),
                });
            }
            if let Some((l2, ln, ev)) = &eigs {
                doc["eigenvalues"] = json!(ev);
                doc["lambda_2"] = json!(l2);
                doc["lambda_n"] = json!(ln);
            }
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "graph: n = {}, m = {}", g.order(), g.edge_count());
            let _ = writeln!(out, "vertex  degree  alpha_i  beta_i");
            for v in 0..g.order() {
                let _ = writeln!(
                    out,
                    "{}  {}  {}  {}",
                    v + 1,
                    g.degree(v + 1),
                    sig6(bounds.alpha[v]),
                    sig6(bounds.beta[v])
                );
            }
            let _ = writeln!(out);
            let _ = writeln!(out, "lambda_2 <= {}", sig6(bounds.upper_bound));
            let _ = writeln!(out, "lambda_n >= {}", sig6(bounds.lower_bound));
            let _ = writeln!(
                out,
                "normalized laplacian: rho_2 >= {}, rho_n <= {}",
                sig6(lap.rho2_lower),
                sig6(lap.rhon_upper)
            );
            if let Some(r) = &regular {
                let _ = writeln!(
                    out,
                    "regular (r = {}): lambda_n >= {}, lambda_2 <= {}",
                    r.degree,
                    sig6(r.lower_bound),
                    sig6(r.upper_bound)
                );
                if r.is_weaker_than_general() {
                    let _ = writeln!(
                        out,
                        "  note: the regular-graph formula scales the clamp by 1/r and is looser here than the general bounds ({}, {})",
                        sig6(r.general.0),
                        sig6(r.general.1)
                    );
                }
            }
            let _ = writeln!(out, "rojo-soto: |lambda_n| <= {}", sig6(rojo));
            let _ = writeln!(out, "rojo-soto lower bound: {}", sig6(-rojo));
            if let Some((l2, ln, _)) = &eigs {
                let _ = writeln!(out);
                let _ = writeln!(
                    out,
                    "oracle lambda_2 = {} (gap {}){}",
                    sig6(*l2),
                    sig6(bounds.upper_bound - l2),
                    tight(bounds.upper_bound - l2, cfg.slack)
                );
                let _ = writeln!(
                    out,
                    "oracle lambda_n = {} (gap {}){}",
                    sig6(*ln),
                    sig6(ln - bounds.lower_bound),
                    tight(ln - bounds.lower_bound, cfg.slack)
                );
                let _ = writeln!(
                    out,
                    "rojo-soto gap: {}{}",
                    sig6(ln + rojo),
                    tight(ln + rojo, cfg.slack)
                );
            }
            out
        }
        Format::Svg => return Err(Failure::Input("randic has no svg output".into())),
    };
    Ok(Output {
        body,
        warnings: Vec::new(),
    })
}

fn tight(gap: f64, slack: f64) -> &'static str {
    if gap.abs() <= slack {
        " tight"
    } else {
        ""
    }
}

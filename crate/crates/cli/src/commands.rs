//! Subcommand implementations.

use crate::groups::{normal_by, parse_element, parse_group_spec, Model};
use crate::output::Outcome;
use crate::words::{parse_word, AtomKind};
use crate::{
    with_model, Command, ConstructCmd, DessinArgs, DessinCmd, EllRange, Global, PrimeRange, QuotientCmd, Sl2Cmd,
    Triple, UnicellularCmd, VerifyCmd,
};
use dessins::acceptance::{run_criterion, CRITERIA};
use dessins::constructions::{
    a5_with_generators, construct_as, construct_ha, construct_pa, construct_tw, ha_covering, ha_enumerate, HaParams,
};
use dessins::covering::classify_covering;
use dessins::dessin::{make_dessin, RegularDessin};
use dessins::field::FiniteField;
use dessins::group::{Group, Mat2, PermGroup, Sl2};
use dessins::numthy::primes_up_to;
use dessins::poly::psi_star_poly;
use dessins::sl2lab::{
    brute_force_lmn, bw_order, bw_order_bruteforce, fibonacci_smooth_verdicts, lmn_group_criterion, psi_table,
    schur_smooth_exists, smooth_index_count, smooth_index_table, smooth_indices, SmoothIndexRow,
};
use dessins::unicellular::{counting_report, decomposition_identity, enumerate_unicellular};
use dessins::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::sync::Arc;

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize to JSON")
}

/// The subcommand path, e.g. `quotient classify`.
pub fn echo(cmd: &Command) -> String {
    let (top, sub) = match cmd {
        Command::Dessin(DessinCmd::Info(_)) => ("dessin", "info"),
        Command::Quotient(QuotientCmd::Classify { .. }) => ("quotient", "classify"),
        Command::Unicellular(c) => (
            "unicellular",
            match c {
                UnicellularCmd::Enumerate(_) => "enumerate",
                UnicellularCmd::Count(_) => "count",
                UnicellularCmd::Identity(_) => "identity",
            },
        ),
        Command::Construct(c) => (
            "construct",
            match c {
                ConstructCmd::Ha { .. } => "ha",
                ConstructCmd::Tw { .. } => "tw",
                ConstructCmd::Pa { .. } => "pa",
                ConstructCmd::As { .. } => "as",
            },
        ),
        Command::Sl2(c) => (
            "sl2",
            match c {
                Sl2Cmd::Orders { .. } => "orders",
                Sl2Cmd::Smooth(_) => "smooth",
                Sl2Cmd::Psi { .. } => "psi",
                Sl2Cmd::Fibonacci(_) => "fibonacci",
                Sl2Cmd::Criterion { .. } => "criterion",
                Sl2Cmd::Schur { .. } => "schur",
            },
        ),
        Command::Verify(VerifyCmd::All { .. }) => ("verify", "all"),
    };
    format!("{top} {sub}")
}

pub fn run(cmd: &Command, global: &Global) -> Result<Outcome> {
    let cap = global.cap;
    match cmd {
        Command::Dessin(DessinCmd::Info(args)) => dessin_info(args, cap),
        Command::Quotient(QuotientCmd::Classify { dessin, by }) => quotient_classify(dessin, by, cap),
        Command::Unicellular(c) => unicellular(c),
        Command::Construct(c) => construct(c, cap),
        Command::Sl2(c) => sl2(c, cap),
        Command::Verify(VerifyCmd::All { id }) => verify(id),
    }
}

/// Prefix parse errors with the flag they came from; offsets stay relative
/// to that flag's value.
fn in_flag<T>(flag: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { offset, message } => Error::Parse { offset, message: format!("{flag}: {message}") },
        other => other,
    })
}

fn build_dessin<G: Model>(g: &Arc<G>, args: &DessinArgs, cap: usize) -> Result<RegularDessin<G>> {
    let b = in_flag("--b", parse_element(g.as_ref(), &args.b, cap))?;
    let w = in_flag("--w", parse_element(g.as_ref(), &args.w, cap))?;
    make_dessin(Arc::clone(g), b, w, cap)
}

fn dessin_info(args: &DessinArgs, cap: usize) -> Result<Outcome> {
    let spec = in_flag("--group", parse_group_spec(&args.group))?;
    let label = spec.to_string();
    let any = spec.build(cap)?;
    with_model!(&any, g => {
        let d = build_dessin(g, args, cap)?;
        Ok(Outcome::new(value(&d.report(&label))))
    })
}

fn quotient_classify(args: &DessinArgs, by: &str, cap: usize) -> Result<Outcome> {
    let spec = in_flag("--group", parse_group_spec(&args.group))?;
    let label = spec.to_string();
    let any = spec.build(cap)?;
    with_model!(&any, g => {
        let d = build_dessin(g, args, cap)?;
        let n = in_flag("--by", normal_by(&d, by, cap))?;
        let r = classify_covering(&d, &n, cap)?;
        let rh = r.riemann_hurwitz_holds();
        let b = &r.bounds;
        let ok = rh && b.lower_ok && (!b.upper_applicable || b.upper_ok) && b.equality_cases_ok;
        let report = d.report(&label);
        let mut row = Map::new();
        row.insert("group_spec".into(), json!(label));
        row.insert("b".into(), json!(report.b));
        row.insert("w".into(), json!(report.w));
        row.insert("by".into(), json!(by));
        row.insert("normal_order".into(), value(&n.order()));
        row.insert("riemann_hurwitz".into(), json!(rh));
        if let Value::Object(m) = value(&r) {
            row.extend(m);
        }
        let result = json!({
            "group_spec": label,
            "by": by,
            "normal_order": value(&n.order()),
            "dessin": report,
            "covering": r,
            "riemann_hurwitz": rh,
        });
        Ok(Outcome::new(result).rows(vec![Value::Object(row)]).verified(ok))
    })
}

fn ells(r: &EllRange) -> Result<Vec<u64>> {
    match (r.ell, r.ell_max) {
        (Some(l), _) => Ok(vec![l]),
        (None, Some(m)) => Ok((1..=m).collect()),
        (None, None) => Err(Error::Precondition("give --ell or --ell-max".into())),
    }
}

/// A single object for `--ell`, an array for `--ell-max`.
fn one_or_many(single: bool, mut items: Vec<Value>) -> Value {
    if single {
        items.pop().unwrap_or(Value::Null)
    } else {
        Value::Array(items)
    }
}

fn unicellular(c: &UnicellularCmd) -> Result<Outcome> {
    match c {
        UnicellularCmd::Enumerate(r) => {
            let ls = ells(r)?;
            let per: Vec<_> = ls.par_iter().map(|&l| enumerate_unicellular(l)).collect::<Result<_>>()?;
            let ok = ls.iter().zip(&per).all(|(&l, v)| v.len() as u64 == l);
            let rows: Vec<Value> = per.iter().flatten().map(value).collect();
            let items = ls
                .iter()
                .zip(&per)
                .map(|(l, v)| json!({ "ell": l, "count": v.len(), "descriptors": v }))
                .collect();
            Ok(Outcome::new(one_or_many(r.ell.is_some(), items)).rows(rows).verified(ok))
        }
        UnicellularCmd::Count(r) => {
            let ls = ells(r)?;
            let reports: Vec<_> = ls.par_iter().map(|&l| counting_report(l)).collect::<Result<_>>()?;
            let ok = reports.iter().all(|c| c.identity_ok && c.total == c.ell);
            let items: Vec<Value> = reports.iter().map(value).collect();
            Ok(Outcome::new(one_or_many(r.ell.is_some(), items.clone())).rows(items).verified(ok))
        }
        UnicellularCmd::Identity(r) => {
            let ls = ells(r)?;
            let verdicts: Vec<_> = ls.par_iter().map(|&l| decomposition_identity(l)).collect::<Result<_>>()?;
            let ok = verdicts.iter().all(|v| v.holds);
            let items: Vec<Value> = verdicts.iter().map(value).collect();
            Ok(Outcome::new(one_or_many(r.ell.is_some(), items.clone())).rows(items).verified(ok))
        }
    }
}

fn a5_element(src: &str) -> Result<<PermGroup as Group>::Elem> {
    let (a5, s, t) = a5_with_generators();
    let word = in_flag("--a", parse_word(src, 0, &[crate::words::Name::plain("s"), crate::words::Name::plain("t")]))?;
    let mut acc = a5.identity();
    for f in &word {
        let x = match &f.atom.kind {
            AtomKind::One => a5.identity(),
            AtomKind::Name { name, .. } if name == "s" => s.clone(),
            AtomKind::Name { .. } => t.clone(),
            AtomKind::Cycles(c) => {
                let zero: Vec<Vec<usize>> = c.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
                if c.iter().flatten().any(|&x| x > 5) {
                    return Err(Error::Parse { offset: f.atom.offset, message: "--a: points must lie in 1..5".into() });
                }
                PermGroup::from_cycles(5, &zero)
            }
            _ => return Err(Error::Parse { offset: f.atom.offset, message: "--a: expected s, t or cycles".into() }),
        };
        acc = a5.mul(&acc, &a5.pow(&x, f.exp));
    }
    let odd = PermGroup::cycles(&acc).iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1;
    if odd {
        return Err(Error::Precondition(format!("{} is not in A5", a5.fmt_elem(&acc))));
    }
    Ok(acc)
}

fn construct(c: &ConstructCmd, cap: usize) -> Result<Outcome> {
    match *c {
        ConstructCmd::Ha { p, d, ell, i: None, .. } => {
            let e = ha_enumerate(p, d, ell)?;
            let rows = e
                .classes
                .iter()
                .map(|c| {
                    json!({
                        "i": c.i,
                        "j": c.j,
                        "smooth": c.smooth,
                        "black_primitive": c.black_primitive,
                        "white_primitive": c.white_primitive,
                    })
                })
                .collect();
            Ok(Outcome::new(value(&e)).rows(rows).verified(e.holds))
        }
        ConstructCmd::Ha { p, d, ell, i: Some(i), j, x } => {
            let params = HaParams::new(p, d, ell, i, j.expect("--j accompanies --i"), x)?;
            let dessin = construct_ha(&params, cap)?;
            let cov = ha_covering(&dessin, cap)?;
            let ok = cov.smooth == params.smooth() && cov.riemann_hurwitz_holds();
            let result = json!({
                "params": params,
                "predicted_smooth": params.smooth(),
                "dessin": dessin.report(&format!("agl1:{p}^{d}:{ell}")),
                "covering": cov,
            });
            Ok(Outcome::new(result).verified(ok))
        }
        ConstructCmd::Tw { k } => {
            let (a5, s, t) = a5_with_generators();
            let tw = construct_tw(a5, k, s, t, cap)?;
            let cert = &tw.certificate;
            let k64 = k as u64;
            let chi = (3 - k as i128) * 60i128.pow(k);
            let ok = cert.w_product_trivial && cert.b_product_trivial && cert.signature == [k64; 3] && cert.chi == chi;
            let g = tw.dessin.group();
            let result = json!({
                "certificate": cert,
                "x": g.fmt_elem(&tw.x),
                "dessin": tw.dessin.report(&format!("wreath:a5:{k}")),
            });
            Ok(Outcome::new(result).verified(ok))
        }
        ConstructCmd::Pa { k, ref a } => {
            let (a5, s, t) = a5_with_generators();
            let a = a5_element(a)?;
            let pa = construct_pa(a5, k, a, s, t, cap)?;
            let g = pa.dessin.group();
            let result = json!({
                "report": pa.report,
                "g": g.fmt_elem(&pa.g),
                "x": g.fmt_elem(&pa.x),
                "dessin": pa.dessin.report(&format!("wreath:a5:{k}")),
            });
            Ok(Outcome::new(result))
        }
        ConstructCmd::As { r } => {
            let c = construct_as(r, cap)?;
            let r64 = r as u64;
            let ok = c.dessin.signature() == (r64, r64, r64);
            let result = json!({
                "witness": c.witness,
                "dessin": c.dessin.report(&format!("sigmal2:{r}")),
            });
            Ok(Outcome::new(result).verified(ok))
        }
    }
}

fn primes(r: &PrimeRange) -> Result<Vec<u64>> {
    match (r.p, r.p_max) {
        (Some(p), _) => Ok(vec![p]),
        (None, Some(m)) => Ok(primes_up_to(m).into_iter().filter(|&p| p >= 5).collect()),
        (None, None) => Err(Error::Precondition("give --p or --p-max".into())),
    }
}

fn fmt_mat(m: &Mat2) -> String {
    format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])
}

fn sl2(c: &Sl2Cmd, cap: usize) -> Result<Outcome> {
    match c {
        Sl2Cmd::Orders { range, check } => {
            let rows: Vec<SmoothIndexRow> = match (range.p, range.p_max) {
                (Some(p), _) => (1..p.max(2))
                    .map(|i| bw_order(p, i).map(|order| SmoothIndexRow { p, i, order, smooth: order % 2 == 1 }))
                    .collect::<Result<_>>()?,
                (None, Some(m)) => smooth_index_table(m)?,
                (None, None) => return Err(Error::Precondition("give --p or --p-max".into())),
            };
            if !check {
                let items: Vec<Value> = rows.iter().map(value).collect();
                return Ok(Outcome::new(Value::Array(items)));
            }
            let brute: Vec<u64> = rows.par_iter().map(|r| bw_order_bruteforce(r.p, r.i)).collect::<Result<_>>()?;
            let ok = rows.iter().zip(&brute).all(|(r, &b)| r.order == b);
            let items: Vec<Value> = rows
                .iter()
                .zip(&brute)
                .map(|(r, b)| json!({ "p": r.p, "i": r.i, "order": r.order, "smooth": r.smooth, "bruteforce": b }))
                .collect();
            Ok(Outcome::new(Value::Array(items)).verified(ok))
        }
        Sl2Cmd::Smooth(range) => {
            let ps = primes(range)?;
            let sets: Vec<_> = ps.par_iter().map(|&p| smooth_indices(p)).collect::<Result<_>>()?;
            let items: Vec<Value> = ps
                .iter()
                .zip(&sets)
                .map(|(&p, s)| {
                    json!({ "p": p, "count": s.len(), "expected": smooth_index_count(p), "indices": s })
                })
                .collect();
            let ok = ps.iter().zip(&sets).all(|(&p, s)| s.len() as u64 == smooth_index_count(p));
            Ok(Outcome::new(one_or_many(range.p.is_some(), items.clone())).rows(items).verified(ok))
        }
        Sl2Cmd::Psi { n, p_max } => {
            let rows = psi_table(n, *p_max)?;
            let mut items = Vec::new();
            for &k in n {
                let poly = psi_star_poly(k)?;
                let coefficients: Vec<Value> = poly
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string().parse::<i64>().map(Value::from).unwrap_or_else(|_| json!(c.to_string())))
                    .collect();
                let roots: Vec<Value> = rows
                    .iter()
                    .filter(|r| r.n == k)
                    .map(|r| {
                        let idx: Vec<u64> = r.roots.split_whitespace().map(|x| x.parse().expect("integer roots")).collect();
                        json!({ "p": r.p, "indices": idx })
                    })
                    .collect();
                items.push(json!({ "n": k, "polynomial": poly.to_string(), "coefficients": coefficients, "roots": roots }));
            }
            let rows = rows.iter().map(value).collect();
            Ok(Outcome::new(one_or_many(n.len() == 1, items)).rows(rows))
        }
        Sl2Cmd::Fibonacci(sel) => {
            let ps = match &sel.primes {
                Some(list) => list.clone(),
                None => primes(&PrimeRange { p: sel.p, p_max: sel.p_max })?,
            };
            let rows = fibonacci_smooth_verdicts(&ps)?;
            Ok(Outcome::new(Value::Array(rows.iter().map(value).collect())))
        }
        Sl2Cmd::Criterion { triple: Triple { q, l, m, n }, projective, oracle } => {
            let generated = lmn_group_criterion(*q, *l, *m, *n, *projective)?;
            let mut result = json!({
                "q": q, "l": l, "m": m, "n": n, "projective": projective, "generated": generated,
            });
            let mut ok = true;
            if *oracle {
                let w = brute_force_lmn(*q, *l, *m, *n, *projective, cap)?;
                ok = w.is_some() == generated;
                result["oracle"] = json!(w.is_some());
                result["witness"] = match w {
                    Some(w) => json!({ "b": fmt_mat(&w.b), "w": fmt_mat(&w.w), "group_order": value(&w.group_order) }),
                    None => Value::Null,
                };
            }
            Ok(Outcome::new(result).verified(ok))
        }
        Sl2Cmd::Schur { triple: Triple { q, l, m, n }, oracle } => {
            let exists = schur_smooth_exists(*q, *l, *m, *n)?;
            let mut result = json!({ "q": q, "l": l, "m": m, "n": n, "smooth_cover_exists": exists });
            let mut ok = true;
            if *oracle {
                let witness = schur_witness(*q, [*l, *m, *n], cap)?;
                ok = witness.is_some() == exists;
                result["oracle"] = json!(witness.is_some());
                result["witness"] = witness.unwrap_or(Value::Null);
            }
            Ok(Outcome::new(result).verified(ok))
        }
    }
}

/// A smooth central covering `D(SL(2,q), b, w) → D(PSL(2,q), b̄, w̄)` of
/// type `(ℓ, m, n)`, found by exhaustion. Odd orders are necessary: an
/// element of even order in `SL(2,q)` has `−1` among its powers.
fn schur_witness(q: u64, [l, m, n]: [u64; 3], cap: usize) -> Result<Option<Value>> {
    if [l, m, n].iter().any(|x| x % 2 == 0) {
        return Ok(None);
    }
    let Some(w) = brute_force_lmn(q, l, m, n, false, cap)? else {
        return Ok(None);
    };
    let (p, f) = dessins::numthy::prime_power(q).expect("validated by the predicate");
    let sl = Arc::new(Sl2::new(FiniteField::new(p as u32, f)?));
    let d = make_dessin(Arc::clone(&sl), w.b, w.w, cap)?;
    let r = classify_covering(&d, &sl.center(), cap)?;
    if !(r.smooth && r.quotient_signature == [l, m, n]) {
        return Err(Error::SearchExhausted(format!("witness for ({l},{m},{n}) is not a smooth covering")));
    }
    Ok(Some(json!({ "b": fmt_mat(&w.b), "w": fmt_mat(&w.w), "sheets": value(&r.sheets) })))
}

fn verify(ids: &[u32]) -> Result<Outcome> {
    let ids: Vec<u32> = if ids.is_empty() { CRITERIA.iter().map(|c| c.0).collect() } else { ids.to_vec() };
    if let Some(bad) = ids.iter().find(|&&i| !CRITERIA.iter().any(|c| c.0 == i)) {
        return Err(Error::Precondition(format!("no acceptance criterion with id {bad}")));
    }
    let outcomes: Vec<_> = ids.par_iter().map(|&i| run_criterion(i).expect("id checked")).collect();
    let ok = outcomes.iter().all(|o| o.passed);
    let items: Vec<Value> = outcomes.iter().map(value).collect();
    Ok(Outcome::new(json!({ "passed": ok, "criteria": items.clone() })).rows(items).verified(ok))
}

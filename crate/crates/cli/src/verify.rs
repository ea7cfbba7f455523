use std::io::Write;
use std::ops::Not;

use charsum::decomposition::{affine, e_elements, polar, sigma, trace_one_set};
use charsum::kloosterman::{
    kloosterman_lift_direct, kloosterman_lift_recursive, lw_expected, lw_value_set,
};
use charsum::sums::{
    p_brute_all, p_closed, p_closed_paper_literal, q_brute_all, q_closed, qs_brute_all, qs_closed,
    qs_reduced, r_brute, r_closed,
};
use charsum::weil::{counts_closed, counts_direct, weil_c11_closed, weil_c_closed, weil_c_direct};
use charsum::{FieldCtx, FiniteField, Gfm, Gfn, LinearizedPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{Fault, Format, Scope, VerifyArgs};
use crate::common::{check_budget, print_json, usage, CliResult, Failure};

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub sum: &'static str,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    pub param: String,
    pub brute: i64,
    pub closed: i64,
    #[serde(rename = "match")]
    pub matched: bool,
    /// A known, explained disagreement that does not fail the run.
    #[serde(skip_serializing_if = "Not::not")]
    pub documented_discrepancy: bool,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub documented_discrepancies: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_literal_discrepancies: Option<usize>,
    pub verified: bool,
    pub first_mismatch: Option<VerifyRow>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub summary: Summary,
}

struct Plan<'a> {
    args: &'a VerifyArgs,
    rows: Vec<VerifyRow>,
    paper_literal_discrepancies: Option<usize>,
}

impl Plan<'_> {
    fn fault(&self, f: Fault) -> i64 {
        (self.args.inject_fault == Some(f)) as i64
    }

    fn push(
        &mut self,
        sum: &'static str,
        m: u32,
        s: Option<u32>,
        param: String,
        brute: i64,
        closed: i64,
    ) {
        self.rows.push(VerifyRow {
            sum,
            m,
            s,
            param,
            brute,
            closed,
            matched: brute == closed,
            documented_discrepancy: false,
        });
    }

    fn push_documented(&mut self, mut row: VerifyRow) {
        row.documented_discrepancy = !row.matched;
        self.rows.push(row);
    }
}

fn default_range(scope: Scope) -> (u32, u32) {
    match scope {
        Scope::P | Scope::Q => (2, 6),
        Scope::Qs => (2, 5),
        Scope::R => (2, 6),
        Scope::Kloosterman => (2, 10),
        Scope::Weil => (3, 7),
        Scope::Decomp => (1, 5),
        Scope::All => unreachable!(),
    }
}

fn range(args: &VerifyArgs, scope: Scope) -> Vec<u32> {
    let (lo, hi) = default_range(scope);
    let lo = args.m_min.unwrap_or(lo).max(1);
    let hi = args.m_max.unwrap_or(hi);
    let ms = lo..=hi;
    match scope {
        Scope::Weil => ms.filter(|m| m % 2 == 1 && *m >= 3).collect(),
        Scope::P | Scope::Q | Scope::Qs | Scope::R | Scope::Kloosterman => {
            ms.filter(|&m| m >= 2).collect()
        }
        _ => ms.collect(),
    }
}

fn qs_shifts(args: &VerifyArgs) -> Vec<u32> {
    args.s_list.clone().unwrap_or_else(|| vec![1, 2, 3])
}

fn coprime(s: u32, m: u32) -> bool {
    let (mut a, mut b) = (s, m);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a == 1
}

fn closed_shifts(args: &VerifyArgs, m: u32) -> Vec<u32> {
    match &args.s_list {
        Some(list) => list
            .iter()
            .copied()
            .filter(|&s| s >= 1 && coprime(s, m))
            .collect(),
        None => (1..m).filter(|&s| coprime(s, m)).collect(),
    }
}

/// Rough count of enumerated terms for a scope.
fn cost(args: &VerifyArgs, scope: Scope) -> f64 {
    let sq = |m: u32| 2f64.powi(2 * m as i32);
    range(args, scope)
        .into_iter()
        .map(|m| match scope {
            Scope::P | Scope::Q => 3.0 * sq(m),
            Scope::Qs => {
                (qs_shifts(args).len() + closed_shifts(args, m).len()) as f64 * 2.0 * sq(m)
            }
            Scope::R => (m as f64 * 2f64.powi(m as i32) + args.samples as f64) * sq(m),
            Scope::Kloosterman => {
                sq(m)
                    + (2..=12 / m)
                        .map(|s| 2f64.powi((m + m * s) as i32))
                        .sum::<f64>()
            }
            Scope::Weil => (closed_shifts(args, m).len() as f64 + 1.0) * 2.0 * sq(m),
            Scope::Decomp => 4.0 * sq(m) * m as f64,
            Scope::All => unreachable!(),
        })
        .sum()
}

fn ctx(m: u32) -> CliResult<FieldCtx> {
    Ok(FieldCtx::new(m, None)?.allow_large_enumeration())
}

fn verify_p(plan: &mut Plan) -> CliResult {
    let fault = plan.fault(Fault::P);
    let literal = plan.args.paper_literal;
    let mut literal_mismatch = 0;
    for m in range(plan.args, Scope::P) {
        let c = ctx(m)?;
        let brute = p_brute_all(&c)?;
        for mu in c.elements().skip(1) {
            let b = brute[mu.bits() as usize];
            let lit = p_closed_paper_literal(&c, mu)?;
            literal_mismatch += (lit != b) as usize;
            if literal {
                plan.push_documented(VerifyRow {
                    sum: "p",
                    m,
                    s: None,
                    param: c.format_elem(mu),
                    brute: b,
                    closed: lit + fault,
                    matched: lit + fault == b,
                    documented_discrepancy: false,
                });
                if fault != 0 {
                    // a perturbed literal row is still reported, but as a failure
                    plan.rows.last_mut().unwrap().documented_discrepancy = lit != b;
                }
            } else {
                plan.push(
                    "p",
                    m,
                    None,
                    c.format_elem(mu),
                    b,
                    p_closed(&c, mu)? + fault,
                );
            }
        }
    }
    plan.paper_literal_discrepancies = Some(literal_mismatch);
    Ok(())
}

fn verify_q(plan: &mut Plan) -> CliResult {
    let fault = plan.fault(Fault::Q);
    for m in range(plan.args, Scope::Q) {
        let c = ctx(m)?;
        let brute = q_brute_all(&c)?;
        for mu in c.elements().skip(1) {
            let closed = q_closed(&c, mu)? + fault;
            plan.push(
                "q",
                m,
                None,
                c.format_elem(mu),
                brute[mu.bits() as usize],
                closed,
            );
        }
    }
    Ok(())
}

fn verify_qs(plan: &mut Plan) -> CliResult {
    let fault = plan.fault(Fault::Qs);
    for m in range(plan.args, Scope::Qs) {
        let c = ctx(m)?;
        for s in qs_shifts(plan.args) {
            if s == 0 {
                return usage("shifts must be positive");
            }
            let brute = qs_brute_all(&c, s)?;
            for mu in c.elements() {
                let reduced = qs_reduced(&c, mu, s)?;
                plan.push(
                    "qs_reduced",
                    m,
                    Some(s),
                    c.format_elem(mu),
                    brute[mu.bits() as usize],
                    reduced,
                );
            }
        }
        if m % 2 == 0 {
            continue;
        }
        for s in closed_shifts(plan.args, m) {
            let brute = qs_brute_all(&c, s)?;
            for mu in c.elements().skip(1) {
                let b = brute[mu.bits() as usize];
                let closed = qs_closed(&c, mu, s)?;
                let row = VerifyRow {
                    sum: "qs_closed",
                    m,
                    s: Some(s),
                    param: c.format_elem(mu),
                    brute: b,
                    closed: closed + fault,
                    matched: closed + fault == b,
                    documented_discrepancy: false,
                };
                // For s >= 2 the closed form evaluates the Frobenius-twisted
                // sum, not q_s; that disagreement is expected.
                if s >= 2 && closed != b {
                    plan.push_documented(row);
                } else {
                    plan.rows.push(row);
                }
            }
        }
    }
    Ok(())
}

fn random_poly(c: &FieldCtx, rng: &mut ChaCha8Rng) -> LinearizedPoly {
    let m = c.m();
    let k = rng.gen_range(2..=m);
    let mut exps: Vec<u32> = (0..m).collect();
    exps.shuffle(rng);
    let terms = exps[..k as usize]
        .iter()
        .map(|&a| (a, c.elem(rng.gen_range(1..c.order())).unwrap()))
        .collect();
    LinearizedPoly::new(c, terms).expect("distinct exponents, nonzero coefficients")
}

fn verify_r(plan: &mut Plan) -> CliResult {
    let fault = plan.fault(Fault::R);
    for m in range(plan.args, Scope::R) {
        let c = ctx(m)?;
        let mut polys = vec![LinearizedPoly::zero()];
        for a in 0..m {
            for alpha in c.elements().skip(1) {
                polys.push(LinearizedPoly::new(&c, vec![(a, alpha)])?);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(plan.args.seed ^ ((m as u64) << 32));
        polys.extend((0..plan.args.samples).map(|_| random_poly(&c, &mut rng)));
        for l in polys {
            let b = r_brute(&c, &l)?;
            plan.push("r", m, None, l.format(&c), b, r_closed(&c, &l) + fault);
        }
    }
    Ok(())
}

fn verify_kloosterman(plan: &mut Plan) -> CliResult {
    let fault = plan.fault(Fault::Kloosterman);
    for m in range(plan.args, Scope::Kloosterman) {
        let c = ctx(m)?;
        let got = lw_value_set(&c);
        let want = lw_expected(m);
        let mut row = VerifyRow {
            sum: "lw_value_set",
            m,
            s: None,
            param: "size".into(),
            brute: got.len() as i64,
            closed: want.len() as i64 + fault,
            matched: false,
            documented_discrepancy: false,
        };
        row.matched = got == want && row.brute == row.closed;
        plan.rows.push(row);
        for s in 2..=12 / m {
            for a in c.elements() {
                let direct = kloosterman_lift_direct(&c, a, s)?;
                let rec = kloosterman_lift_recursive(&c, a, s) + fault;
                let row = VerifyRow {
                    sum: "kloosterman_lift",
                    m,
                    s: Some(s),
                    param: c.format_elem(a),
                    brute: direct,
                    closed: rec,
                    matched: direct == rec,
                    documented_discrepancy: false,
                };
                // the recursion does not describe the degenerate a = 0 sum
                if a.is_zero() {
                    plan.push_documented(row);
                } else {
                    plan.rows.push(row);
                }
            }
        }
    }
    Ok(())
}

fn verify_weil(plan: &mut Plan) -> CliResult {
    let fault = plan.fault(Fault::Weil);
    for m in range(plan.args, Scope::Weil) {
        let c = ctx(m)?;
        for s in (1..m).filter(|&s| coprime(s, m)) {
            let c11 = weil_c11_closed(m, s)? + fault;
            plan.push(
                "weil_c11",
                m,
                Some(s),
                "01".into(),
                weil_c_direct(&c, Gfm::ONE, Gfm::ONE, s),
                c11,
            );
            for a in c.elements() {
                let direct = weil_c_direct(&c, Gfm::ONE, a, s);
                let closed = weil_c_closed(&c, Gfm::ONE, a, s)? + fault;
                plan.push("weil_c", m, Some(s), c.format_elem(a), direct, closed);
            }
            let d = counts_direct(&c, s)?;
            let f = counts_closed(m, s)?;
            for (name, x, y) in [
                ("m_plus", d.m_plus, f.m_plus),
                ("m_minus", d.m_minus, f.m_minus),
                ("n00", d.n00, f.n00),
                ("n01", d.n01, f.n01),
                ("n10", d.n10, f.n10),
                ("n11", d.n11, f.n11),
            ] {
                plan.push(
                    "weil_counts",
                    m,
                    Some(s),
                    name.into(),
                    x as i64,
                    y as i64 + fault,
                );
            }
        }
    }
    Ok(())
}

fn verify_decomp(plan: &mut Plan) -> CliResult {
    let fault = plan.fault(Fault::Decomp);
    for m in range(plan.args, Scope::Decomp) {
        let c = ctx(m)?;
        let ext = c.ext();
        let nonzero = ext.order() as i64 - 1;
        let polar_ok = ext
            .elements()
            .skip(1)
            .filter(|&x| {
                polar(&c, x).is_ok_and(|p| p.recompose(&c) == x && ext.in_unit_circle(p.z))
            })
            .count() as i64;
        plan.push(
            "polar_roundtrip",
            m,
            None,
            "count".into(),
            nonzero,
            polar_ok + fault,
        );

        let off = ext.order() as i64 - c.order() as i64;
        let affine_ok = ext
            .elements()
            .filter(|x| !x.in_subfield())
            .filter(|&x| affine(&c, x).is_ok_and(|a| a.recompose(&c) == x && a.lambda.in_e()))
            .count() as i64;
        plan.push(
            "affine_roundtrip",
            m,
            None,
            "count".into(),
            off,
            affine_ok + fault,
        );

        let mut fact_i = 0i64;
        for u in c.elements().skip(1) {
            for l in e_elements(&c) {
                let t = ext.trace_by_frobenius(ext.scale(u, l));
                fact_i += ((t == Gfn::ONE) == (c.trace(u) == 1)) as i64;
            }
        }
        plan.push("fact_i", m, None, "count".into(), off, fact_i + fault);

        let mut hits = vec![0u32; c.order() as usize];
        for l in e_elements(&c) {
            hits[sigma(&c, l)?.bits() as usize] += 1;
        }
        let image: Vec<Gfm> = c
            .elements()
            .filter(|v| hits[v.bits() as usize] > 0)
            .collect();
        let two_to_one = image.iter().all(|v| hits[v.bits() as usize] == 2);
        let ok = image == trace_one_set(&c) && two_to_one;
        plan.push(
            "fact_ii",
            m,
            None,
            "image_size".into(),
            image.len() as i64,
            if ok { 1i64 << (m - 1) } else { -1 } + fault,
        );
    }
    Ok(())
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    if let (Some(lo), Some(hi)) = (args.m_min, args.m_max) {
        if lo > hi {
            return usage("--m-min exceeds --m-max");
        }
    }
    let scopes: Vec<Scope> = match args.scope {
        Scope::All => vec![
            Scope::Decomp,
            Scope::Kloosterman,
            Scope::Weil,
            Scope::P,
            Scope::Q,
            Scope::Qs,
            Scope::R,
        ],
        s => vec![s],
    };
    let total: f64 = scopes.iter().map(|&s| cost(args, s)).sum();
    check_budget(total.max(1.0).log2(), args.budget, "verify")?;

    let mut plan = Plan {
        args,
        rows: Vec::new(),
        paper_literal_discrepancies: None,
    };
    for scope in scopes {
        match scope {
            Scope::P => verify_p(&mut plan)?,
            Scope::Q => verify_q(&mut plan)?,
            Scope::Qs => verify_qs(&mut plan)?,
            Scope::R => verify_r(&mut plan)?,
            Scope::Kloosterman => verify_kloosterman(&mut plan)?,
            Scope::Weil => verify_weil(&mut plan)?,
            Scope::Decomp => verify_decomp(&mut plan)?,
            Scope::All => unreachable!(),
        }
    }

    let report = summarize(plan.rows, plan.paper_literal_discrepancies);
    match args.format {
        Format::Json => print_json(out, &report)?,
        Format::Csv => print_csv(&report, out)?,
    }
    if report.summary.verified {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

pub fn summarize(rows: Vec<VerifyRow>, paper_literal: Option<usize>) -> VerifyReport {
    let matched = rows.iter().filter(|r| r.matched).count();
    let documented = rows.iter().filter(|r| r.documented_discrepancy).count();
    let mut failing = rows
        .iter()
        .filter(|r| !r.matched && !r.documented_discrepancy);
    let mismatched = failing.clone().count();
    let summary = Summary {
        rows: rows.len(),
        matched,
        mismatched,
        documented_discrepancies: documented,
        paper_literal_discrepancies: paper_literal,
        verified: mismatched == 0,
        first_mismatch: failing.next().cloned(),
    };
    VerifyReport { rows, summary }
}

fn print_csv(report: &VerifyReport, out: &mut dyn Write) -> CliResult {
    writeln!(
        out,
        "sum,m,s,param,brute,closed,match,documented_discrepancy"
    )?;
    for r in &report.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.sum,
            r.m,
            r.s.map(|s| s.to_string()).unwrap_or_default(),
            // linearized polynomials contain commas
            if r.param.contains(',') {
                format!("\"{}\"", r.param)
            } else {
                r.param.clone()
            },
            r.brute,
            r.closed,
            r.matched,
            r.documented_discrepancy
        )?;
    }
    let s = &report.summary;
    writeln!(
        out,
        "# rows={} matched={} mismatched={} documented_discrepancies={}{} verified={}",
        s.rows,
        s.matched,
        s.mismatched,
        s.documented_discrepancies,
        s.paper_literal_discrepancies
            .map(|n| format!(" paper_literal_discrepancies={n}"))
            .unwrap_or_default(),
        s.verified
    )?;
    Ok(())
}

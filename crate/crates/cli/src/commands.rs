use eiscong::arith::ord_p;
use eiscong::serde_rational::to_json;
use eiscong::siegel::oracle::{cross_multiplied, oracle_bp};
use eiscong::{
    CertifyOptions, EigenBasis, EisensteinContext, PullbackContext, Rational, Strictness, Verdict,
};
use serde_json::{json, Value};

use crate::output::{json, no_csv, rationals, CliError, Output};
use crate::{CertifyArgs, CohenArgs, EisArgs, EpsilonArgs, Format, LvalueArgs, SiegelArgs};

type CmdResult = Result<Output, CliError>;

fn basis(weight: u32, precision: Option<usize>) -> Result<EigenBasis, CliError> {
    Ok(match precision {
        Some(p) => EigenBasis::with_precision(weight, p)?,
        None => EigenBasis::new(weight)?,
    })
}

fn ord_json(x: &Rational, p: u64) -> Value {
    ord_p(x, p).map_or(Value::Null, Value::from)
}

pub fn lvalue(a: &LvalueArgs, format: Format, precision: Option<usize>) -> CmdResult {
    let weight = a.k + a.nu;
    let b = basis(weight, precision)?;
    let mut rows = Vec::new();
    for j in 0..b.dim() {
        let l = eiscong::std_l_value(a.k, a.nu, &b, j)?;
        rows.push((j, l));
    }
    let text = match format {
        Format::Json => {
            let forms: Vec<Value> = rows
                .iter()
                .map(|(j, l)| {
                    let ords: serde_json::Map<String, Value> = a
                        .ords
                        .iter()
                        .map(|&p| (p.to_string(), ord_json(l, p)))
                        .collect();
                    json!({ "form": j, "l_value": to_json(l), "ord": ords })
                })
                .collect();
            json(&json!({ "k": a.k, "nu": a.nu, "weight": weight, "forms": forms }))
        }
        Format::Csv => {
            let mut s = String::from("k,nu,form,l_value");
            for p in &a.ords {
                s.push_str(&format!(",ord_{p}"));
            }
            s.push('\n');
            for (j, l) in &rows {
                s.push_str(&format!("{},{},{j},{l}", a.k, a.nu));
                for &p in &a.ords {
                    s.push(',');
                    if let Some(o) = ord_p(l, p) {
                        s.push_str(&o.to_string());
                    }
                }
                s.push('\n');
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for (j, l) in &rows {
                s.push_str(&format!("L(k-1, f_{j}, St) = {l}"));
                for &p in &a.ords {
                    let o = ord_p(l, p).map_or("inf".to_string(), |o| o.to_string());
                    s.push_str(&format!("  ord_{p} = {o}"));
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Output::ok(text))
}

pub fn epsilon(a: &EpsilonArgs, format: Format) -> CmdResult {
    if !a.big_n.is_pd() || a.big_n.size() != 2 {
        return Err(CliError::Usage(
            "N must be a positive-definite 2x2 matrix".into(),
        ));
    }
    let ctx = PullbackContext::new(a.k, a.nu)?;
    let form = match a.hecke {
        Some(m) => ctx.epsilon_hecke(m, a.n, &a.big_n)?,
        None => ctx.epsilon(a.n, &a.big_n)?,
    };
    let evals: Vec<(String, Rational)> =
        a.at.iter()
            .map(|(x, y)| (format!("{x},{y}"), form.eval(x, y)))
            .collect();
    let text = match format {
        Format::Csv => return Err(no_csv("epsilon")),
        Format::Json => {
            let at: serde_json::Map<String, Value> =
                evals.iter().map(|(k, v)| (k.clone(), to_json(v))).collect();
            json(&json!({
                "k": a.k,
                "nu": a.nu,
                "n": a.n,
                "N": a.big_n.to_string(),
                "hecke": a.hecke,
                "coefficients": rationals(form.coeffs()),
                "at": at,
            }))
        }
        Format::Pretty => {
            let terms: Vec<String> = form.coeffs().iter().map(ToString::to_string).collect();
            let mut s = format!("coefficients (x^nu .. y^nu): [{}]\n", terms.join(", "));
            for (p, v) in &evals {
                s.push_str(&format!("eps({p}) = {v}\n"));
            }
            s
        }
    };
    Ok(Output::ok(text))
}

pub fn certify(a: &CertifyArgs, format: Format, precision: Option<usize>) -> CmdResult {
    let opts = CertifyOptions {
        m_list: a.m_list.clone(),
        slot: a.slot,
        strictness: if a.relaxed {
            Strictness::Relaxed
        } else {
            Strictness::Strict
        },
        form: a.form,
        reference_gamma: a.reference_gamma.clone(),
        precision,
    };
    let cert = eiscong::certify(a.k, a.nu, a.p, &a.a, &opts)?;
    let text = match format {
        Format::Csv => return Err(no_csv("certify")),
        Format::Json => {
            let mut s = cert.to_json();
            s.push('\n');
            s
        }
        Format::Pretty => {
            let c = &cert.condition_status;
            let mut s = format!(
                "verdict: {}\nL = {} (alpha = {})\nconditions: (1) {} (2) {} (3) {} (3') {}\nimplied: {}\n",
                cert.verdict,
                cert.l_value,
                cert.alpha.map_or("inf".to_string(), |x| x.to_string()),
                c.cond1,
                c.cond2,
                c.cond3,
                c.cond3_prime,
                cert.implied_congruence
            );
            for w in &cert.warnings {
                s.push_str(&format!("warning: {w}\n"));
            }
            s
        }
    };
    let code = u8::from(cert.verdict == Verdict::NotEstablished);
    Ok(Output { text, code })
}

pub fn siegel_series(a: &SiegelArgs, format: Format) -> CmdResult {
    let f = eiscong::local_f(a.p, &a.t)?;
    let coeffs: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
    let mut doc =
        json!({ "p": a.p, "T": a.t.to_string(), "coefficients": coeffs, "degree": f.degree() });
    let mut agrees = true;
    if let Some(j) = a.oracle {
        let b = oracle_bp(a.p, &a.t, j, a.budget)?;
        let (lhs, rhs) = cross_multiplied(a.p, &a.t, &b, j)?;
        agrees = lhs == rhs;
        let oracle: Vec<Rational> = (0..=j as i32).map(|e| b.coeff(e)).collect();
        doc["oracle"] = json!({ "through": j, "b_p": rationals(&oracle), "agrees": agrees });
    }
    let text = match format {
        Format::Csv => return Err(no_csv("siegel-series")),
        Format::Json => json(&doc),
        Format::Pretty => {
            let mut s = format!("F_{}(T, X) = [{}]\n", a.p, coeffs.join(", "));
            if a.oracle.is_some() {
                s.push_str(&format!("oracle agrees: {agrees}\n"));
            }
            s
        }
    };
    Ok(Output {
        text,
        code: if agrees { 0 } else { 3 },
    })
}

pub fn eisenstein_coeff(a: &EisArgs, format: Format) -> CmdResult {
    let ctx = EisensteinContext::new(a.degree, a.k)?;
    let v = ctx.coeff(&a.t)?;
    let text = match format {
        Format::Csv => return Err(no_csv("eisenstein-coeff")),
        Format::Json => json(
            &json!({ "degree": a.degree, "k": a.k, "T": a.t.to_string(), "value": to_json(&v) }),
        ),
        Format::Pretty => format!("a(T, E_{},{}) = {v}\n", a.degree, a.k),
    };
    Ok(Output::ok(text))
}

pub fn cohen_series(a: &CohenArgs, format: Format, precision: Option<usize>) -> CmdResult {
    let terms = a
        .terms
        .or(precision)
        .unwrap_or_else(|| eiscong::qexp::default_precision(a.k));
    let c = eiscong::cohen_series(a.k, a.r, terms)?;
    let text = match format {
        Format::Csv => return Err(no_csv("cohen-series")),
        Format::Json => json(&json!({ "k": a.k, "r": a.r, "coefficients": rationals(c.coeffs()) })),
        Format::Pretty => {
            let terms: Vec<String> = c.coeffs().iter().map(ToString::to_string).collect();
            format!("[{}]\n", terms.join(", "))
        }
    };
    Ok(Output::ok(text))
}

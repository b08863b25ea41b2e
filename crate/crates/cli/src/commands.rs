use std::fmt::Write as _;
use std::fs;

use serde::Serialize;
use zassenhaus_core::freealg::{AlgebraCtx, AssocPoly, PolyJson};
use zassenhaus_core::lieform::{render, LieExpr, RenderFormat};
use zassenhaus_core::oracle::{
    exact_identity_check, numeric_order_check_with, oracle_comparison, NumericMatrixSet,
    VerificationReport,
};
use zassenhaus_core::zassenhaus::{
    closed_form, f1k_comm_by_composition, f1k_direct, series, PathChoice, SeriesTerm,
};

use crate::cache::{Cache, CacheEntry, CacheKey};
use crate::{
    CliError, F1kArgs, F1kPath, Form, Format, Mode, Outcome, PathArg, TermsArgs, VerifyArgs,
    SCHEMA_VERSION,
};

impl From<PathArg> for PathChoice {
    fn from(p: PathArg) -> Self {
        match p {
            PathArg::Generic => PathChoice::Generic,
            PathArg::Expanded => PathChoice::Expanded,
            PathArg::Both => PathChoice::Both,
        }
    }
}

fn check_series_args(n: usize, max_degree: usize) -> Result<AlgebraCtx, CliError> {
    if max_degree < 2 {
        return Err(CliError::Usage(format!(
            "--max-degree must be at least 2 (got {max_degree})"
        )));
    }
    AlgebraCtx::new(n, max_degree).map_err(|_| {
        CliError::Usage(format!(
            "need 1 <= --n <= 255 and --max-degree >= 2 (got n = {n}, max degree = {max_degree})"
        ))
    })
}

/// One-line JSON plus a trailing newline.
fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// `W_2..W_K`, from the cache when every entry is present and sound.
/// A damaged entry is reported on stderr and the whole series recomputed.
fn exponents(
    ctx: AlgebraCtx,
    path: PathChoice,
    cache: Option<&Cache>,
) -> Result<Vec<SeriesTerm>, CliError> {
    let (n, max_degree) = (ctx.n(), ctx.max_degree());
    let key = |m| CacheKey::new(n, max_degree, m, path.as_str());
    if let Some(cache) = cache {
        let mut hits = Vec::with_capacity(max_degree - 1);
        for m in 2..=max_degree {
            match cache.load_poly(&key(m)) {
                Ok(Some(poly)) => hits.push(SeriesTerm {
                    m,
                    poly,
                    path,
                    closed_form: closed_form(m, n)?,
                }),
                Ok(None) => break,
                Err(e) => {
                    eprintln!("warning: {e}; recomputing");
                    break;
                }
            }
        }
        if hits.len() == max_degree - 1 {
            return Ok(hits);
        }
    }
    let computed = series(n, max_degree, path)?;
    if let Some(cache) = cache {
        for t in &computed.terms {
            cache.store(&CacheEntry::new(key(t.m), &t.poly))?;
        }
    }
    Ok(computed.terms)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TermsDoc {
    schema_version: u32,
    n: usize,
    max_degree: usize,
    path: &'static str,
    form: &'static str,
    terms: Vec<TermDoc>,
}

#[derive(Serialize)]
struct TermDoc {
    m: usize,
    poly: PolyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    display: Option<String>,
}

pub fn cmd_terms(args: &TermsArgs) -> Result<Outcome, CliError> {
    let ctx = check_series_args(args.n, args.max_degree)?;
    let path = PathChoice::from(args.path);
    let cache = Cache::resolve(args.cache.as_deref());
    let terms = exponents(ctx, path, cache.as_ref())?;

    let comm_forms: Vec<Option<LieExpr>> = match args.form {
        Form::Assoc => vec![None; terms.len()],
        Form::Comm => terms
            .iter()
            .map(|t| t.lie_form().map(Some))
            .collect::<Result<_, _>>()?,
    };

    let text = match args.format {
        Format::Json => json_line(&TermsDoc {
            schema_version: SCHEMA_VERSION,
            n: ctx.n(),
            max_degree: ctx.max_degree(),
            path: path.as_str(),
            form: match args.form {
                Form::Assoc => "assoc",
                Form::Comm => "comm",
            },
            terms: terms
                .iter()
                .zip(&comm_forms)
                .map(|(t, form)| TermDoc {
                    m: t.m,
                    poly: t.poly.to_json(),
                    display: form.as_ref().map(|f| render(f, RenderFormat::Text)),
                })
                .collect(),
        }),
        Format::Text | Format::Latex => {
            let mut out = String::new();
            for (t, form) in terms.iter().zip(&comm_forms) {
                let body = match (form, args.format) {
                    (Some(f), Format::Latex) => render(f, RenderFormat::Latex),
                    (Some(f), _) => render(f, RenderFormat::Text),
                    (None, Format::Latex) => t.poly.to_latex(),
                    (None, _) => t.poly.to_string(),
                };
                match args.format {
                    Format::Latex => writeln!(out, "W_{{{}}} = {body}", t.m).unwrap(),
                    _ => writeln!(out, "W{} = {body}", t.m).unwrap(),
                }
            }
            out
        }
    };

    match &args.out {
        Some(file) => {
            fs::write(file, text).map_err(|source| CliError::Output {
                path: file.clone(),
                source,
            })?;
            Ok(Outcome {
                stdout: String::new(),
                passed: true,
            })
        }
        None => Ok(Outcome {
            stdout: text,
            passed: true,
        }),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerifyDoc {
    schema_version: u32,
    pass: bool,
    reports: Vec<VerificationReport>,
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let ctx = check_series_args(args.n, args.max_degree)?;
    let (n, max_degree) = (ctx.n(), ctx.max_degree());
    let numeric = matches!(args.mode, Mode::Numeric | Mode::All);
    if numeric && args.dim < 2 {
        return Err(CliError::Usage(format!(
            "--dim must be at least 2 (got {})",
            args.dim
        )));
    }
    let ws = series(n, max_degree, PathChoice::Both)?.polys();

    let mut reports = Vec::new();
    if matches!(args.mode, Mode::Exact | Mode::All) {
        reports.push(exact_identity_check(n, max_degree, &ws)?);
    }
    if matches!(args.mode, Mode::Oracle | Mode::All) {
        reports.push(oracle_comparison(n, max_degree, &ws)?);
    }
    if numeric {
        let matrices = NumericMatrixSet::random(n, args.dim, args.seed);
        reports.push(numeric_order_check_with(
            &matrices, max_degree, &ws, &args.t,
        )?);
    }
    let pass = reports.iter().all(|r| r.pass);
    Ok(Outcome {
        stdout: json_line(&VerifyDoc {
            schema_version: SCHEMA_VERSION,
            pass,
            reports,
        }),
        passed: pass,
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct F1kDoc {
    schema_version: u32,
    k: usize,
    n: usize,
    path: &'static str,
    poly: PolyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    compositions: Option<Vec<CompositionDoc>>,
}

#[derive(Serialize)]
struct CompositionDoc {
    parts: Vec<usize>,
    display: String,
}

pub fn cmd_f1k(args: &F1kArgs) -> Result<Outcome, CliError> {
    let (k, n) = (args.k, args.n);
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let ctx = AlgebraCtx::new(n, k + 1)
        .map_err(|_| CliError::Usage(format!("need 1 <= --n <= 255 (got {n})")))?;

    let groups = match args.path {
        F1kPath::Direct => None,
        F1kPath::Comm | F1kPath::Both => Some(f1k_comm_by_composition(k, n)?),
    };
    let from_groups = match &groups {
        Some(groups) => {
            let total = groups
                .iter()
                .fold(LieExpr::new(), |acc, (_, group)| acc.merge(group));
            Some(
                total
                    .expand(ctx)
                    .map_err(zassenhaus_core::zassenhaus::EngineError::from)?,
            )
        }
        None => None,
    };
    let poly: AssocPoly = match (args.path, from_groups) {
        (F1kPath::Comm, Some(p)) => p,
        (_, comm) => {
            let direct = f1k_direct(k, ctx)?;
            if comm.is_some_and(|c| c != direct) {
                return Err(CliError::Invariant(format!(
                    "commutator and direct forms of f_{{1,{k}}} differ"
                )));
            }
            direct
        }
    };

    let path_tag = match args.path {
        F1kPath::Comm => "comm",
        F1kPath::Direct => "direct",
        F1kPath::Both => "both",
    };
    let stdout = match args.format {
        Format::Json => json_line(&F1kDoc {
            schema_version: SCHEMA_VERSION,
            k,
            n,
            path: path_tag,
            poly: poly.to_json(),
            compositions: groups.as_ref().map(|groups| {
                groups
                    .iter()
                    .map(|(c, e)| CompositionDoc {
                        parts: c.parts().to_vec(),
                        display: render(e, RenderFormat::Text),
                    })
                    .collect()
            }),
        }),
        Format::Text | Format::Latex => {
            let render_format = match args.format {
                Format::Latex => RenderFormat::Latex,
                _ => RenderFormat::Text,
            };
            match &groups {
                _ if poly.is_zero() => "0\n".to_string(),
                Some(groups) => groups
                    .iter()
                    .map(|(c, e)| format!("{c}: {}\n", render(e, render_format)))
                    .collect(),
                None if args.format == Format::Latex => format!("{}\n", poly.to_latex()),
                None => format!("{poly}\n"),
            }
        }
    };
    Ok(Outcome {
        stdout,
        passed: true,
    })
}

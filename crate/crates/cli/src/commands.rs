use hookseries::hilbert::{
    verify_intermediate_expression, verify_lemma, verify_qvandermonde, verify_tbinomial_identities,
    verify_theorem_sweep,
};
use hookseries::partitions::enumerate_hook;
use hookseries::{hilbert_series, hook_schur, VerificationReport};
use serde_json::json;

use crate::{CountArgs, HilbertArgs, HookschurArgs, OutputFormat, Suite, VerifyArgs};

/// Rendered stdout plus whether every gating check passed.
pub struct Output {
    pub text: String,
    pub ok: bool,
    pub notes: Vec<String>,
}

impl Output {
    fn done(mut text: String) -> Self {
        text.push('\n');
        Self {
            text,
            ok: true,
            notes: Vec::new(),
        }
    }

    /// One line per report; `ok` only if every report passed.
    pub fn from_reports(reports: &[VerificationReport], format: OutputFormat) -> Self {
        let mut out = Self::done(render_reports(reports, format));
        out.ok = reports.iter().all(|r| r.pass);
        out
    }
}

fn render_reports(reports: &[VerificationReport], format: OutputFormat) -> String {
    join_lines(reports.iter().map(|r| match format {
        OutputFormat::Plain => r.to_string(),
        OutputFormat::Json => r.to_json(),
        OutputFormat::Csv => r.to_csv(),
    }))
}

pub fn hilbert(args: &HilbertArgs) -> Output {
    let series = hilbert_series(args.k, args.l, args.order);
    Output::done(match args.format {
        OutputFormat::Plain => series.to_string(),
        OutputFormat::Json => series.to_json(),
        OutputFormat::Csv => series.to_csv(),
    })
}

pub fn count(args: &CountArgs) -> Output {
    let hook = enumerate_hook(args.n, args.k, args.l);
    let text = match (args.format, args.list) {
        (OutputFormat::Json, list) => {
            let mut value = json!({ "n": args.n, "k": args.k, "l": args.l, "count": hook.len() });
            if list {
                value["partitions"] = json!(hook);
            }
            value.to_string()
        }
        (_, false) => hook.len().to_string(),
        (OutputFormat::Plain, true) => join_lines(hook.iter().map(ToString::to_string)),
        (OutputFormat::Csv, true) => join_lines(hook.iter().map(|p| {
            p.parts()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })),
    };
    Output::done(text)
}

pub fn hookschur(args: &HookschurArgs) -> Output {
    let poly = hook_schur(&args.partition, args.k, args.l);
    Output::done(match args.format {
        OutputFormat::Plain => poly.to_string(),
        OutputFormat::Json => poly.to_json(),
        OutputFormat::Csv => poly.to_csv(),
    })
}

fn join_lines(lines: impl Iterator<Item = String>) -> String {
    lines.collect::<Vec<_>>().join("\n")
}

struct Collected {
    reports: Vec<VerificationReport>,
    ok: bool,
    notes: Vec<String>,
}

impl Collected {
    fn gating(&mut self, reports: impl IntoIterator<Item = VerificationReport>) {
        for r in reports {
            self.ok &= r.pass;
            self.reports.push(r);
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Output, String> {
    let all = args.suite == Suite::All;
    if args.suite == Suite::Tbinomial && args.max_k < 1 {
        return Err("verify tbinomial needs --max-k >= 1".into());
    }
    if args.suite == Suite::Intermediate && args.max_l < 2 {
        return Err("verify intermediate needs --max-l >= 2".into());
    }

    let mut c = Collected {
        reports: Vec::new(),
        ok: true,
        notes: Vec::new(),
    };
    let grid = || (0..=args.max_k).flat_map(|k| (0..=args.max_l).map(move |l| (k, l)));

    if (all || args.suite == Suite::Tbinomial) && args.max_k >= 1 {
        c.gating(verify_tbinomial_identities(args.max_k).map_err(|e| e.to_string())?);
    }
    if all || args.suite == Suite::Vandermonde {
        c.gating(grid().map(|(k, l)| verify_qvandermonde(k, l)));
    }
    if all || args.suite == Suite::Lemma {
        c.gating(grid().map(|(k, l)| verify_lemma(k, l)));
    }
    if all || args.suite == Suite::Intermediate {
        for (k, l) in grid().filter(|&(_, l)| l >= 2) {
            let r = verify_intermediate_expression(k, l).map_err(|e| e.to_string())?;
            if r.expansion_suspect() {
                c.notes.push(format!(
                    "k={k} l={l}: the step identity holds but the written-out expansion differs from it"
                ));
            }
            c.ok &= r.passed();
            let [a, b, d] = r.reports();
            c.reports.extend([a.clone(), b.clone(), d.clone()]);
        }
    }
    if all || args.suite == Suite::Theorem {
        c.gating(verify_theorem_sweep(args.max_k, args.max_l, args.order));
    }

    // expansion-only mismatches are reported but do not fail the run
    let mut out = Output::from_reports(&c.reports, args.format);
    out.ok = c.ok;
    out.notes = c.notes;
    Ok(out)
}

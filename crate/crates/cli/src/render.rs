//! Plain-text rendering. Every number shown here is the same value the JSON
//! output carries, formatted the same way.

use std::io::IsTerminal;

use whideal_core::invariants::{SingularityReport, SingularityType, TrivialityEntry};
use whideal_core::rational::to_pq;

use crate::{BoundsOutput, DimsOutput, SncOutput, VerifyOutput};

#[derive(Clone, Copy, Debug)]
pub struct Style {
    color: bool,
}

impl Style {
    pub fn detect() -> Self {
        let color =
            std::env::var_os("WHIDEAL_NO_COLOR").is_none() && std::io::stdout().is_terminal();
        Style { color }
    }

    fn label(self, s: &str) -> String {
        if self.color {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn verdict(self, ok: bool) -> String {
        let word = if ok { "pass" } else { "FAIL" };
        match (self.color, ok) {
            (false, _) => word.to_string(),
            (true, true) => format!("\x1b[32m{word}\x1b[0m"),
            (true, false) => format!("\x1b[31m{word}\x1b[0m"),
        }
    }
}

struct Lines {
    style: Style,
    out: String,
}

impl Lines {
    fn new(style: Style) -> Self {
        Lines {
            style,
            out: String::new(),
        }
    }

    fn field(&mut self, label: &str, value: impl std::fmt::Display) {
        self.out
            .push_str(&format!("{}: {value}\n", self.style.label(label)));
    }

    fn raw(&mut self, line: &str) {
        self.out.push_str(line);
        self.out.push('\n');
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn types(ts: &[SingularityType]) -> String {
    if ts.is_empty() {
        return "none".to_string();
    }
    ts.iter()
        .map(|t| format!("({},{})", t.p, t.s))
        .collect::<Vec<_>>()
        .join(", ")
}

fn triviality(entries: &[TrivialityEntry]) -> String {
    entries
        .iter()
        .map(|e| {
            format!(
                "p={} {}",
                e.p,
                if e.trivial { "trivial" } else { "nontrivial" }
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn report(r: &SingularityReport, style: Style) -> String {
    let mut w = Lines::new(style);
    w.field("schema", r.schema);
    w.field("polynomial", &r.polynomial);
    w.field("variables", r.variables.join(", "));
    w.field("n", r.n);
    w.field("convenient", yes_no(r.convenient));
    w.field("rho_tilde_one", to_pq(&r.rho_tilde_one));
    match &r.minimal_exponent {
        Some(a) => w.field("minimal_exponent", to_pq(a)),
        None => w.field("minimal_exponent", "unavailable"),
    }
    if let Some(p) = r.p_level {
        w.field("p_level", p);
    }
    w.field("r", r.r);
    if let Some(s) = r.s {
        w.field("s", s);
    }
    w.field("simplicial", yes_no(r.simplicial));
    w.field("weighted_homogeneous", yes_no(r.weighted_homogeneous));
    if !r.hodge_triviality.is_empty() {
        w.field("hodge_triviality", triviality(&r.hodge_triviality));
        w.field("w1_triviality", triviality(&r.w1_triviality));
        w.field("w1_is_maximal_ideal", yes_no(r.w1_is_maximal_ideal));
    }
    if let Some(k) = r.nilpotency_upper {
        w.field("nilpotency_upper", k);
    }
    if let Some(ts) = &r.type_range {
        w.field("type_range", types(ts));
    }
    if let Some(t) = r.exact_type {
        w.field("exact_type", types(&[t]));
    }
    w.raw(&style.label("facets:"));
    for f in &r.facets {
        let b: Vec<String> = f.covector().iter().map(to_pq).collect();
        let pts: Vec<String> = f
            .incident_points()
            .iter()
            .map(|e| e.render(&r.variables, "*"))
            .collect();
        w.raw(&format!("  B = ({})  on {}", b.join(", "), pts.join(", ")));
    }
    if let Some(wit) = &r.witness {
        w.field(
            "witness",
            format!(
                "{} outside_jacobian = {}",
                wit.monomial.render(&r.variables, "*"),
                wit.outside_jacobian
            ),
        );
        if let Some(note) = &wit.annotation {
            w.raw(&format!("  {note}"));
        }
    }
    if !r.notes.is_empty() {
        w.raw(&style.label("notes:"));
        for note in &r.notes {
            w.raw(&format!("  - {note}"));
        }
    }
    w.out
}

pub fn snc(o: &SncOutput, style: Style) -> String {
    let mut w = Lines::new(style);
    w.field("schema", o.schema);
    w.field(
        "model",
        format!("n = {}, r = {}, p = {}, l = {}", o.n, o.r, o.p, o.l),
    );
    w.field("ideal", &o.ideal);
    if let Some(v) = &o.verification {
        let passed = v.checks.iter().filter(|c| c.passed).count();
        w.field(
            "verification",
            format!(
                "{} ({passed}/{} checks)",
                style.verdict(v.all_passed()),
                v.checks.len()
            ),
        );
        for c in v.checks.iter().filter(|c| !c.passed) {
            w.raw(&format!("  failed: {:?} p = {} l = {:?}", c.kind, c.p, c.l));
        }
    }
    w.out
}

pub fn bounds(o: &BoundsOutput, style: Style) -> String {
    let mut w = Lines::new(style);
    w.field("schema", o.schema);
    w.field(
        "hypersurface",
        format!("n = {}, d = {}, p = {}", o.n, o.d, o.p),
    );
    w.field("bound_z2", &o.bound_z2);
    w.field("bound_z", &o.bound_z);
    if let (Some(l), Some(k)) = (o.l, o.surjectivity_threshold) {
        w.field("surjectivity_threshold", format!("{k} (l = {l})"));
    }
    w.out
}

pub fn dims(o: &DimsOutput, style: Style) -> String {
    let mut w = Lines::new(style);
    w.field("schema", o.schema);
    w.field("table", format!("n = {}, l = {}, p = {}", o.n, o.l, o.p));
    w.field("grf", o.grf);
    if let Some(d) = &o.pushforward_fp {
        w.field("pushforward_fp", d);
    }
    w.out
}

pub fn verify(o: &VerifyOutput, style: Style) -> String {
    let mut w = Lines::new(style);
    w.field("schema", o.schema);
    for v in &o.snc {
        let passed = v.checks.iter().filter(|c| c.passed).count();
        w.raw(&format!(
            "snc n = {} r = {} p <= {}: {} ({passed}/{})",
            v.n,
            v.r,
            v.p_max,
            style.verdict(v.all_passed()),
            v.checks.len()
        ));
    }
    w.raw(&format!(
        "hockey stick n, m <= {}: {} ({} failures)",
        o.hockey_max,
        style.verdict(o.hockey_failures.is_empty()),
        o.hockey_failures.len()
    ));
    w.field("passed", o.passed);
    w.out
}

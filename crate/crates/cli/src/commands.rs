use std::fmt::Write as _;
use std::path::Path as FsPath;

use finsgpd_core::constructions::catalog;
use finsgpd_core::green::{green_structure, idempotents, render_eggbox, GreenStructure};
use finsgpd_core::languages::{concat_languages, is_factorial, syntactic_semigroup, Factoriality, PathLanguage};
use finsgpd_core::omega::{check_over_catalog, check_pseudoidentity, parse_identity, PseudoidentityCheck};
use finsgpd_core::path::{format_word, parse_word};
use finsgpd_core::pseudovar::{is_equidivisible, is_local, Equidivisibility, Pseudovariety};
use finsgpd_core::recurrence::{is_recurrent, recurring_images, Recurrence};
use finsgpd_core::semigroupoid::validate_semigroupoid;
use finsgpd_core::stabilizers::{stabilizer, stabilizer_kernel_check};
use finsgpd_core::{Edge, FiniteSemigroupoid, Graph, PeriodicWord};
use serde::Serialize;

use crate::formats::{
    from_value, load_graph, load_label, load_language, load_semigroupoid, read_value, DfaJson, GraphJson, Kind,
    LabelJson, SemigroupoidJson, WordsJson,
};
use crate::report::*;
use crate::{Cli, Command, Failure, KindArg, Output};

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file, kind } => validate(file, *kind, json),
        Command::Green { file } => green(&load_semigroupoid(file)?, json),
        Command::Eggbox { file } => eggbox(&load_semigroupoid(file)?, json),
        Command::Stab { file, edge } => stab(&load_semigroupoid(file)?, edge, json),
        Command::Equidiv { file } => equidiv(&load_semigroupoid(file)?, json),
        Command::Pseudovar { file, pred, all } => {
            let s = load_semigroupoid(file)?;
            let preds: Vec<Pseudovariety> = if *all { Pseudovariety::ALL.to_vec() } else { pred.iter().copied().collect() };
            pseudovar(&s, &preds, json)
        }
        Command::Synt { lang } => synt(&load_language(lang)?, json),
        Command::Concat { left, right } => concat(&load_language(left)?, &load_language(right)?, json),
        Command::Recog { lang, pred } => recog(&load_language(lang)?, *pred, json),
        Command::Factorial { lang, bound } => factorial(&load_language(lang)?, *bound, json),
        Command::Recur {
            p,
            q,
            graph,
            target,
            label,
        } => {
            let g = match graph {
                Some(path) => load_graph(path)?,
                None => letters_graph(p, q)?,
            };
            let target = match (target, label) {
                (Some(t), Some(l)) => Some((load_semigroupoid(t)?, load_label(l)?)),
                _ => None,
            };
            recur(&g, p, q, target.as_ref(), json)
        }
        Command::Pseudoid { identity, file, filter } => pseudoid(identity, file.as_deref(), *filter, json),
        Command::Catalog { show } => catalog_verb(show.as_deref(), json),
    }
}

fn done(text: String) -> Result<Output, Failure> {
    Ok(Output { code: 0, stdout: text })
}

fn emit<T: Serialize>(json: bool, report: &T, text: impl FnOnce() -> String) -> Result<Output, Failure> {
    if json {
        let mut out = serde_json::to_string_pretty(report).map_err(|e| Failure::Internal(e.to_string()))?;
        out.push('\n');
        done(out)
    } else {
        done(text())
    }
}

fn names(s: &FiniteSemigroupoid, xs: &[Edge]) -> Vec<String> {
    xs.iter().map(|&x| s.name(x).to_string()).collect()
}

fn count(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Square table with a header row, cells padded per column.
fn render_table(labels: &[String], cell: impl Fn(usize, usize) -> String) -> String {
    let n = labels.len();
    let mut rows: Vec<Vec<String>> = vec![std::iter::once(String::new()).chain(labels.iter().cloned()).collect()];
    for (i, label) in labels.iter().enumerate() {
        rows.push(std::iter::once(label.clone()).chain((0..n).map(|j| cell(i, j))).collect());
    }
    let widths: Vec<usize> = (0..=n).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap()).collect();
    let mut out = String::new();
    for r in &rows {
        out.push(' ');
        for (c, text) in r.iter().enumerate() {
            let sep = if c == 1 { " |" } else { "" };
            let _ = write!(out, "{sep} {text:<w$}", w = widths[c]);
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    out
}

fn validate(file: &FsPath, kind: KindArg, json: bool) -> Result<Output, Failure> {
    let v = read_value(file)?;
    let kind = match kind {
        KindArg::Auto => Kind::detect(&v)?,
        KindArg::Graph => Kind::Graph,
        KindArg::Semigroupoid => Kind::Semigroupoid,
        KindArg::Dfa => Kind::Dfa,
        KindArg::Words => Kind::Words,
        KindArg::Label => Kind::Label,
    };
    let check = || -> Result<(), Failure> {
        match kind {
            Kind::Graph => {
                let g: GraphJson = from_value(v, file)?;
                finsgpd_core::graph::validate_graph(&g.to_spec())
                    .map_err(|d| Failure::Invalid(d.iter().map(ToString::to_string).collect()))
            }
            Kind::Semigroupoid => {
                let j: SemigroupoidJson = from_value(v, file)?;
                let spec = j.to_spec()?;
                validate_semigroupoid(&spec).map_err(|d| Failure::Invalid(d.iter().map(ToString::to_string).collect()))?;
                FiniteSemigroupoid::from_spec(&spec)?;
                Ok(())
            }
            Kind::Dfa => from_value::<DfaJson>(v, file)?.language().map(drop),
            Kind::Words => from_value::<WordsJson>(v, file)?.language().map(drop),
            Kind::Label => from_value::<LabelJson>(v, file).map(drop),
        }
    };
    let diagnostics = match check() {
        Ok(()) => Vec::new(),
        Err(Failure::Invalid(d)) => d,
        Err(e) => return Err(e),
    };
    let report = ValidateReport {
        kind,
        valid: diagnostics.is_empty(),
        diagnostics,
    };
    let code = if report.valid { 0 } else { 2 };
    let mut out = emit(json, &report, || {
        if report.valid {
            "ok\n".into()
        } else {
            let mut t = format!("invalid {}\n", kind.name());
            for d in &report.diagnostics {
                let _ = writeln!(t, "  {d}");
            }
            t
        }
    })?;
    out.code = code;
    Ok(out)
}

fn classes(s: &FiniteSemigroupoid, cs: &[Vec<Edge>]) -> Vec<Vec<String>> {
    cs.iter().map(|c| names(s, c)).collect()
}

fn green(s: &FiniteSemigroupoid, json: bool) -> Result<Output, Failure> {
    let gs = green_structure(s);
    let report = GreenReport {
        r_classes: classes(s, gs.r_classes()),
        l_classes: classes(s, gs.l_classes()),
        h_classes: classes(s, gs.h_classes()),
        j_classes: classes(s, gs.j_classes()),
        regular_j_classes: (0..gs.j_classes().len()).map(|j| gs.is_regular_class(j)).collect(),
        idempotents: names(s, &idempotents(s)),
    };
    emit(json, &report, || {
        let line = |label: &str, cs: &[Vec<String>]| {
            let parts: Vec<String> = cs.iter().map(|c| format!("{{{}}}", c.join(", "))).collect();
            format!("{label}: {}\n", parts.join(" "))
        };
        let mut t = String::new();
        t += &line("R-classes", &report.r_classes);
        t += &line("L-classes", &report.l_classes);
        t += &line("H-classes", &report.h_classes);
        t += &line("J-classes", &report.j_classes);
        let _ = writeln!(t, "idempotents: {}", report.idempotents.join(" "));
        t
    })
}

fn eggbox_class(s: &FiniteSemigroupoid, gs: &GreenStructure, j: usize) -> EggboxClass {
    let class = &gs.j_classes()[j];
    let mut rows: Vec<usize> = class.iter().map(|&x| gs.r_class_of(x)).collect();
    rows.sort();
    rows.dedup();
    let mut cols: Vec<usize> = class.iter().map(|&x| gs.l_class_of(x)).collect();
    cols.sort();
    cols.dedup();
    EggboxClass {
        regular: gs.is_regular_class(j),
        rows: rows
            .iter()
            .map(|&r| {
                cols.iter()
                    .map(|&c| {
                        class
                            .iter()
                            .filter(|&&x| gs.r_class_of(x) == r && gs.l_class_of(x) == c)
                            .map(|&x| s.name(x).to_string())
                            .collect()
                    })
                    .collect()
            })
            .collect(),
        idempotents: class.iter().filter(|&&x| gs.is_idempotent(x)).map(|&x| s.name(x).to_string()).collect(),
    }
}

fn eggbox(s: &FiniteSemigroupoid, json: bool) -> Result<Output, Failure> {
    let gs = green_structure(s);
    let report = EggboxReport {
        j_classes: (0..gs.j_classes().len()).map(|j| eggbox_class(s, &gs, j)).collect(),
    };
    emit(json, &report, || render_eggbox(s, &gs))
}

fn stab(s: &FiniteSemigroupoid, edge: &str, json: bool) -> Result<Output, Failure> {
    let x = s.element(edge)?;
    let st = stabilizer(s, x);
    let base = st.base();
    let r = stabilizer_kernel_check(s, x)?;
    let elements = names(base, &r.elements);
    let table: Vec<Vec<String>> = r
        .elements
        .iter()
        .map(|&a| r.elements.iter().map(|&b| base.name(base.mul_composable(a, b)).to_string()).collect())
        .collect();
    let report = StabReport {
        edge: edge.to_string(),
        elements,
        table,
        l_chain: r.l_chain_violation.is_none(),
        l_chain_violation: r.l_chain_violation.map(|(a, b)| [base.name(a).to_string(), base.name(b).to_string()]),
        kernel: names(base, &r.kernel),
        kernel_is_left_zero: r.kernel_is_left_zero,
        internally_regular: names(base, &r.internally_regular),
        regulars_are_idempotent: r.regulars_are_idempotent,
    };
    emit(json, &report, || {
        let mut t = format!("Stab({edge}) in S^I: {}\n", report.elements.join(" "));
        t += &render_table(&report.elements, |i, j| report.table[i][j].clone());
        match &report.l_chain_violation {
            None => t += "internal L-chain: yes\n",
            Some([a, b]) => {
                let _ = writeln!(t, "internal L-chain: no ({a} and {b} are L-incomparable)");
            }
        }
        let _ = writeln!(t, "kernel: {}", report.kernel.join(" "));
        let _ = writeln!(t, "kernel left-zero: {}", yes(report.kernel_is_left_zero));
        let _ = writeln!(t, "internally regular: {}", report.internally_regular.join(" "));
        let _ = writeln!(t, "internally regular elements idempotent: {}", yes(report.regulars_are_idempotent));
        t
    })
}

fn equidiv(s: &FiniteSemigroupoid, json: bool) -> Result<Output, Failure> {
    let report = match is_equidivisible(s)? {
        Equidivisibility::Equidivisible => EquidivReport {
            equidivisible: true,
            witness: None,
        },
        Equidivisibility::Fails { u, v, x, y } => EquidivReport {
            equidivisible: false,
            witness: Some(Witness {
                u: s.name(u).into(),
                v: s.name(v).into(),
                x: s.name(x).into(),
                y: s.name(y).into(),
            }),
        },
    };
    emit(json, &report, || match &report.witness {
        None => "equidivisible\n".into(),
        Some(w) => format!("NOT equidivisible; witness u={} v={} x={} y={}\n", w.u, w.v, w.x, w.y),
    })
}

fn pseudovar(s: &FiniteSemigroupoid, preds: &[Pseudovariety], json: bool) -> Result<Output, Failure> {
    let local = !s.is_semigroup();
    let mut results = Vec::new();
    for &v in preds {
        let member = if local { is_local(s, |t| v.contains(t))? } else { v.contains(s)? };
        results.push(Membership {
            pseudovariety: v.to_string(),
            local,
            member,
        });
    }
    let report = PseudovarReport { results };
    emit(json, &report, || {
        let mut t = String::new();
        for m in &report.results {
            let scope = if m.local { " (every local semigroup)" } else { "" };
            let _ = writeln!(t, "{}{scope}: {}", m.pseudovariety, m.member);
        }
        t
    })
}

fn synt(l: &PathLanguage, json: bool) -> Result<Output, Failure> {
    let syn = syntactic_semigroup(l)?;
    let s = syn.semigroup();
    let g = l.base();
    let report = SyntReport {
        semigroup: SemigroupoidJson::from_semigroupoid(s),
        letter_images: g
            .edges()
            .map(|a| [g.edge_id(a).to_string(), s.name(syn.transition.letter_images[a.index()]).to_string()])
            .collect(),
        accepting: names(s, &syn.accepting),
    };
    emit(json, &report, || {
        let elems = names(s, &s.edges().collect::<Vec<_>>());
        let mut t = format!("syntactic semigroup: {} elements\n", elems.len());
        let _ = writeln!(t, "elements: {}", elems.join(" "));
        let _ = writeln!(t, "accepting: {}", report.accepting.join(" "));
        t += &render_table(&elems, |i, j| {
            s.mul(Edge(i as u32), Edge(j as u32)).map_or("-".into(), |e| s.name(e).to_string())
        });
        t
    })
}

fn concat(l: &PathLanguage, k: &PathLanguage, json: bool) -> Result<Output, Failure> {
    let c = concat_languages(l, k)?;
    let report = ConcatReport {
        dfa: DfaJson::from_language(&c),
    };
    emit(json, &report, || {
        let d = &report.dfa;
        let mut t = format!("minimal recognizer: {} states\n", d.states.len());
        let _ = writeln!(t, "init: {}", d.init);
        let _ = writeln!(t, "accept: {}", d.accept.join(" "));
        for (key, to) in &d.delta {
            let _ = writeln!(t, "  {key} -> {to}");
        }
        let g = c.base();
        let sample: Vec<String> = c.accepted_up_to(4).iter().map(|w| format_word(g, w)).collect();
        let _ = writeln!(t, "accepted up to length 4: {}", sample.join(" "));
        t
    })
}

fn recog(l: &PathLanguage, v: Pseudovariety, json: bool) -> Result<Output, Failure> {
    let syn = syntactic_semigroup(l)?;
    let s = syn.semigroup();
    let report = RecogReport {
        pseudovariety: v.to_string(),
        recognizable: v.contains(s)?,
        syntactic_size: s.edge_count(),
    };
    emit(json, &report, || format!("{}-recognizable: {}\n", report.pseudovariety, report.recognizable))
}

fn factorial(l: &PathLanguage, bound: usize, json: bool) -> Result<Output, Failure> {
    let g = l.base();
    let report = match is_factorial(l, bound)? {
        Factoriality::Factorial => FactorialReport {
            factorial: true,
            bound,
            word: None,
            factor: None,
        },
        Factoriality::Violation { word, factor } => FactorialReport {
            factorial: false,
            bound,
            word: Some(format_word(g, &word)),
            factor: Some(format_word(g, &factor)),
        },
    };
    emit(json, &report, || match (&report.word, &report.factor) {
        (Some(w), Some(f)) => format!("NOT factorial; {w} is accepted but its factor {f} is not\n"),
        _ => format!("factorial (words up to length {bound})\n"),
    })
}

fn split_letters(text: &str) -> Vec<String> {
    if text.contains('.') {
        text.split('.').map(String::from).collect()
    } else {
        text.chars().map(String::from).collect()
    }
}

/// One vertex carrying the letters of `p` and `q` as loops.
fn letters_graph(p: &str, q: &str) -> Result<Graph, Failure> {
    let mut letters = split_letters(p);
    letters.extend(split_letters(q));
    letters.sort();
    letters.dedup();
    Ok(Graph::one_vertex(letters)?)
}

fn recur(
    g: &Graph,
    p: &str,
    q: &str,
    target: Option<&(FiniteSemigroupoid, LabelJson)>,
    json: bool,
) -> Result<Output, Failure> {
    let pw = if p.is_empty() { Vec::new() } else { parse_word(g, p)? };
    if q.is_empty() {
        return Err(Failure::invalid("the period q must be nonempty"));
    }
    let w = PeriodicWord::new(g, pw, parse_word(g, q)?)?;
    let (occurrences, prefix) = match is_recurrent(&w) {
        Recurrence::Recurrent { occurrences } => (occurrences.into_iter().map(|(n, m)| [n, m]).collect(), None),
        Recurrence::NotRecurrent { prefix } => (Vec::new(), Some(format_word(g, &prefix))),
    };
    let images = match target {
        Some((s, label)) => {
            let lab = label.morphism(g, s)?;
            let r = recurring_images(&w, g, s, &lab)?;
            Some(RecurringImagesReport {
                recurring: names(s, &r.images),
                cycle_start: r.cycle_start,
                cycle_len: r.cycle_len,
                recurring_idempotent: r.images.iter().any(|&e| s.is_idempotent(e)),
            })
        }
        None => None,
    };
    let report = RecurReport {
        word: w.display(g),
        recurrent: prefix.is_none(),
        occurrences,
        prefix,
        images,
    };
    emit(json, &report, || {
        let mut t = format!("w = {}\n", report.word);
        match &report.prefix {
            None => {
                let occ: Vec<String> = report.occurrences.iter().map(|[n, m]| format!("{n}@{m}")).collect();
                let _ = writeln!(t, "recurrent: yes (prefix length@reoccurrence: {})", occ.join(" "));
            }
            Some(u) => {
                let _ = writeln!(t, "recurrent: no; prefix {u} never reoccurs");
            }
        }
        if let Some(i) = &report.images {
            let _ = writeln!(t, "recurring images: {}", i.recurring.join(" "));
            let _ = writeln!(t, "cycle: from prefix length {}, period {}", i.cycle_start, i.cycle_len);
            let _ = writeln!(t, "recurring idempotent: {}", yes(i.recurring_idempotent));
        }
        t
    })
}

fn pseudoid_result(name: String, s: &FiniteSemigroupoid, r: &PseudoidentityCheck) -> PseudoidResult {
    match r {
        PseudoidentityCheck::Holds { checked } => PseudoidResult {
            name,
            holds: true,
            checked: Some(*checked),
            failure: None,
        },
        PseudoidentityCheck::Fails { assignment, lhs, rhs } => PseudoidResult {
            name,
            holds: false,
            checked: None,
            failure: Some(PseudoidFailure {
                assignment: assignment.iter().map(|&(c, e)| [c.to_string(), s.name(e).to_string()]).collect(),
                lhs: lhs.map(|e| s.name(e).to_string()),
                rhs: rhs.map(|e| s.name(e).to_string()),
            }),
        },
    }
}

fn pseudoid(identity: &str, file: Option<&FsPath>, filter: Option<Pseudovariety>, json: bool) -> Result<Output, Failure> {
    let (lhs, rhs) = parse_identity(identity)?;
    let results = match file {
        Some(path) => {
            let s = load_semigroupoid(path)?;
            let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
            let r = check_pseudoidentity(&lhs, &rhs, &s)?;
            vec![pseudoid_result(name, &s, &r)]
        }
        None => check_over_catalog(&lhs, &rhs, filter)?
            .into_iter()
            .map(|c| pseudoid_result(c.name, &c.semigroupoid, &c.result))
            .collect(),
    };
    let report = PseudoidReport {
        identity: format!("{lhs} = {rhs}"),
        results,
    };
    emit(json, &report, || {
        let mut t = format!("{}\n", report.identity);
        for r in &report.results {
            match &r.failure {
                None => {
                    let n = count(r.checked.unwrap_or(0) as usize, "assignment", "assignments");
                    let _ = writeln!(t, "  {}: holds ({n} with both sides defined)", r.name);
                }
                Some(f) => {
                    let at: Vec<String> = f.assignment.iter().map(|[c, e]| format!("{c}={e}")).collect();
                    let side = |x: &Option<String>| x.clone().unwrap_or_else(|| "undefined".into());
                    let _ = writeln!(
                        t,
                        "  {}: fails at {} (lhs {}, rhs {})",
                        r.name,
                        at.join(", "),
                        side(&f.lhs),
                        side(&f.rhs)
                    );
                }
            }
        }
        t
    })
}

fn catalog_verb(show: Option<&str>, json: bool) -> Result<Output, Failure> {
    let entries = catalog();
    if let Some(name) = show {
        let Some(e) = entries.iter().find(|e| e.name == name) else {
            return Err(Failure::invalid(format!("no catalog member named `{name}`")));
        };
        let mut out = serde_json::to_string_pretty(&SemigroupoidJson::from_semigroupoid(&e.semigroupoid))
            .map_err(|e| Failure::Internal(e.to_string()))?;
        out.push('\n');
        return done(out);
    }
    let report = CatalogReport {
        entries: entries
            .iter()
            .map(|e| CatalogRow {
                name: e.name.clone(),
                vertices: e.semigroupoid.graph().vertex_count(),
                elements: e.semigroupoid.edge_count(),
            })
            .collect(),
    };
    emit(json, &report, || {
        let w = report.entries.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut t = String::new();
        for r in &report.entries {
            let _ = writeln!(
                t,
                "{:<w$}  {}  {}",
                r.name,
                count(r.vertices, "vertex", "vertices"),
                count(r.elements, "element", "elements")
            );
        }
        t
    })
}

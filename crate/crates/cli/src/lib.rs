//! The `twistword` command-line tool.
//!
//! [`run`] executes a parsed [`RunConfig`] and returns the report bytes
//! plus an exit status; `main` only handles process I/O. Exit statuses:
//! 0 when the run completed, 1 for I/O failures, 2 for invalid
//! configuration, 3 when a self-check failed (an emitted result did not
//! re-verify).

pub mod config;
pub mod report;

use std::path::Path;

use serde_json::json;
use thiserror::Error;
use twisted_words::avoidance::{JPolicy, StructureAuditReport};
use twisted_words::morphism::DescentSummary;
use twisted_words::word::{binary, decode_word_file};
use twisted_words::{
    audit_length3_structure, complexity_profile, entropy_estimate, fit_linear, scan_naive,
    theorem_campaign, verify_freeness, Alphabet, CampaignParams, CyclicShiftMorphism,
    FreenessReport, Occurrence, Permutation, RepetitionQuery, ScanAlgorithm, Symbol, Word,
};

pub use config::RunConfig;
use config::*;

/// Words longer than this are written in the binary format.
pub const BINARY_THRESHOLD: usize = 1 << 20;

/// Default lower end of the complexity fit window.
pub const DEFAULT_FIT_LO: usize = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] twisted_words::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Config(_) | CliError::Core(_) => 2,
        }
    }
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub bytes: Vec<u8>,
    pub exit_code: i32,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn ok(bytes: impl Into<Vec<u8>>, warnings: Vec<String>) -> Self {
        Outcome { bytes: bytes.into(), exit_code: 0, warnings }
    }

    fn checked(bytes: impl Into<Vec<u8>>, passed: bool, warnings: Vec<String>) -> Self {
        Outcome { bytes: bytes.into(), exit_code: if passed { 0 } else { 3 }, warnings }
    }
}

/// The alphabet, σ, δ = σ^j and seed of one run.
struct Family {
    alphabet: Alphabet,
    sigma: Permutation,
    j: u64,
    delta: Permutation,
    seed: Symbol,
}

impl Family {
    fn morphism(&self) -> Result<CyclicShiftMorphism, CliError> {
        Ok(CyclicShiftMorphism::new(self.sigma.clone(), self.seed)?)
    }
}

fn parse_seed(text: &str, alphabet: Alphabet) -> Result<Symbol, CliError> {
    let value = match text.parse::<u32>() {
        Ok(v) => v,
        Err(_) => {
            let mut chars = text.chars();
            match (chars.next().and_then(Symbol::from_letter), chars.next()) {
                (Some(s), None) => s.0,
                _ => return Err(config_err(format!("--seed: {text:?} is neither a letter nor an index"))),
            }
        }
    };
    alphabet
        .symbol(value)
        .map_err(|_| config_err(format!("--seed: {text:?} is outside an alphabet of size {}", alphabet.size())))
}

fn resolve_family(
    args: &FamilyArgs,
    inferred_n: Option<usize>,
    warnings: &mut Vec<String>,
) -> Result<Family, CliError> {
    let n = args
        .n
        .or(inferred_n)
        .ok_or_else(|| config_err("--N is required"))?;
    if n < 2 {
        return Err(config_err(format!("--N must be at least 2, got {n}")));
    }
    let alphabet = Alphabet::new(n).map_err(|e| config_err(format!("--N: {e}")))?;
    let sigma = match &args.sigma {
        Some(cycles) => Permutation::from_cycles(alphabet, cycles)
            .map_err(|e| config_err(format!("--sigma: {e}")))?,
        None => Permutation::cyclic_shift(alphabet),
    };
    let j = args.j % n as u64;
    if j == 0 {
        warnings.push(format!(
            "warning: j = {} ≡ 0 (mod {n}), so δ is the identity and repetitions are classical powers",
            args.j
        ));
    }
    let delta = sigma.power(j);
    let seed = parse_seed(&args.seed, alphabet)?;
    Ok(Family { alphabet, sigma, j, delta, seed })
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn read_word(path: &Path, n: Option<usize>) -> Result<Word, CliError> {
    let bytes = read_file(path)?;
    let alphabet = n.map(Alphabet::new).transpose().map_err(|e| config_err(format!("--N: {e}")))?;
    decode_word_file(&bytes, alphabet).map_err(|e| config_err(format!("--input {}: {e}", path.display())))
}

/// A host word: either `--input` or a fixed-point prefix of `length`.
fn host_word(
    family_args: &FamilyArgs,
    input: Option<&Path>,
    length: Option<usize>,
    warnings: &mut Vec<String>,
) -> Result<(Family, Word), CliError> {
    match input {
        Some(path) => {
            let word = read_word(path, family_args.n)?;
            let family = resolve_family(family_args, Some(word.alphabet().size().max(2)), warnings)?;
            let word = if word.alphabet() == family.alphabet {
                word
            } else {
                Word::new(family.alphabet, word.into_symbols())?
            };
            Ok((family, word))
        }
        None => {
            let family = resolve_family(family_args, None, warnings)?;
            let length = length.ok_or_else(|| config_err("--length is required without --input"))?;
            let word = family.morphism()?.generate_prefix(length);
            Ok((family, word))
        }
    }
}

fn render_word(word: &Word) -> Result<Vec<u8>, CliError> {
    if word.len() > BINARY_THRESHOLD || word.alphabet().size() > twisted_words::word::MAX_RENDERABLE {
        return Ok(binary::encode(word)?);
    }
    let mut text = word.render()?;
    text.push('\n');
    Ok(text.into_bytes())
}

fn params_json(config: &RunConfig) -> serde_json::Value {
    let mut params = serde_json::to_value(&config.command).expect("serializable");
    // externally tagged enum: {"scan": {...}} -> {"subcommand": "scan", ...}
    let inner = params
        .as_object_mut()
        .and_then(|o| o.remove(config.command.name()))
        .unwrap_or_else(|| json!({}));
    params = json!({ "subcommand": config.command.name() });
    if let (Some(dst), Some(src)) = (params.as_object_mut(), inner.as_object()) {
        for (k, v) in src {
            dst.insert(k.clone(), v.clone());
        }
    }
    params
}

/// Runs one command. The report is returned, not written.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let mut warnings = Vec::new();
    let json_out = config.format == OutputFormat::Json;
    let wrap = |body: serde_json::Value| {
        report::envelope_json(params_json(config), body, !config.no_timestamp)
    };

    match &config.command {
        Command::Generate(args) => {
            let family = resolve_family(&args.family, None, &mut warnings)?;
            if args.length == 0 {
                return Err(config_err("--length must be at least 1"));
            }
            let word = family.morphism()?.generate_prefix(args.length);
            Ok(Outcome::ok(render_word(&word)?, warnings))
        }

        Command::Twist(args) => {
            let word = match (&args.input_word, &args.input) {
                (Some(text), None) => {
                    let n = args.family.n.ok_or_else(|| config_err("--N is required"))?;
                    let alphabet = Alphabet::new(n).map_err(|e| config_err(format!("--N: {e}")))?;
                    Word::parse(text, alphabet).map_err(|e| config_err(format!("--input-word: {e}")))?
                }
                (None, Some(path)) => read_word(path, args.family.n)?,
                _ => return Err(config_err("exactly one of --input-word or --input is required")),
            };
            let family = resolve_family(&args.family, Some(word.alphabet().size().max(2)), &mut warnings)?;
            let word = Word::new(family.alphabet, word.into_symbols())
                .map_err(|e| config_err(format!("--N: {e}")))?;
            Ok(Outcome::ok(render_word(&word.twist(&family.delta)?)?, warnings))
        }

        Command::Scan(args) => {
            let (family, word) =
                host_word(&args.family, args.input.as_deref(), args.length, &mut warnings)?;
            let q = RepetitionQuery::new(args.k, family.delta.clone(), args.m_min, args.m_max)
                .map_err(|e| config_err(format!("--k/--m-min/--m-max: {e}")))?;
            let report = match args.algorithm {
                Algorithm::Fast => verify_freeness(&word, &q)?,
                Algorithm::Naive => {
                    let hits = scan_naive(&word, &q)?;
                    let total = hits.len();
                    let mut occurrences: Vec<Occurrence> =
                        hits.into_iter().filter(|o| o.verify(&word, q.delta())).collect();
                    occurrences.sort_by_key(|o| (o.m, o.start));
                    FreenessReport {
                        self_check_failures: total - occurrences.len(),
                        query: q,
                        word_length: word.len(),
                        occurrences,
                        scan_algorithm: ScanAlgorithm::Naive,
                    }
                }
            };
            Ok(freeness_outcome(&report, &family, json_out, wrap, warnings))
        }

        Command::Verify(args) => match &args.recheck {
            Some(path) => recheck(args, path, json_out, wrap, warnings),
            None => {
                let (family, word) =
                    host_word(&args.family, args.input.as_deref(), args.length, &mut warnings)?;
                let m_max = args.m_max.ok_or_else(|| config_err("--m-max is required"))?;
                let q = RepetitionQuery::new(args.k, family.delta.clone(), args.m_min, m_max)
                    .map_err(|e| config_err(format!("--k/--m-min/--m-max: {e}")))?;
                let report = verify_freeness(&word, &q)?;
                Ok(freeness_outcome(&report, &family, json_out, wrap, warnings))
            }
        },

        Command::Campaign(args) => {
            let j_policy = match args.j_policy {
                JPolicyArg::TheoremOnly => JPolicy::TheoremOnly,
                JPolicyArg::AllJ => JPolicy::AllJ,
            };
            let seed = parse_seed(&args.seed, Alphabet::new(twisted_words::word::MAX_ALPHABET)?)?;
            let params = CampaignParams::new(args.n.clone(), j_policy, args.length, args.m_max)
                .with_seed(seed.0);
            let report = with_thread_cap(|| theorem_campaign(&params))
                .map_err(|e| config_err(format!("--N/--length/--m-max: {e}")))?;
            let passed = report.self_check_failures() == 0;
            let bytes = if json_out {
                wrap(report::campaign_body(&report))
            } else {
                report::campaign_tsv(&report)
            };
            Ok(Outcome::checked(bytes, passed, warnings))
        }

        Command::Complexity(args) => {
            let (_, word) = host_word(&args.family, args.input.as_deref(), args.length, &mut warnings)?;
            if args.k_max == 0 || args.k_max > word.len() {
                return Err(config_err(format!(
                    "--k-max must be in 1..={}, got {}",
                    word.len(),
                    args.k_max
                )));
            }
            let profile = complexity_profile(&word, args.k_max)?;
            let (lo, hi) = match args.window.as_deref() {
                Some([lo, hi]) => (*lo, *hi),
                Some(_) => return Err(config_err("--window takes exactly two values lo,hi")),
                None => (DEFAULT_FIT_LO, profile.stable_upto),
            };
            let (fit, note) = match fit_linear(&profile, lo, hi) {
                Ok(f) => (Some(f), None),
                Err(e) if args.window.is_some() => return Err(config_err(format!("--window: {e}"))),
                Err(e) => (None, Some(e.to_string())),
            };
            let entropy = entropy_estimate(&profile).ok();
            let bytes = if json_out {
                wrap(report::complexity_body(&profile, fit.as_ref(), note.as_deref(), entropy))
            } else {
                report::complexity_tsv(&profile, fit.as_ref(), note.as_deref(), entropy)
            };
            Ok(Outcome::ok(bytes, warnings))
        }

        Command::Descend(args) => {
            let family = resolve_family(&args.family, None, &mut warnings)?;
            let psi = family.morphism()?;
            let prefix = psi.generate_prefix(args.length);
            let q = RepetitionQuery::new(args.k, family.delta.clone(), 1, args.m_max)
                .map_err(|e| config_err(format!("--k/--m-max: {e}")))?;
            let found = verify_freeness(&prefix, &q)?;
            let take = args.limit.unwrap_or(usize::MAX);
            let summaries = found
                .occurrences
                .iter()
                .take(take)
                .map(|&o| psi.descend_occurrence(&prefix, o, &family.delta).map(|r| DescentSummary::from(&r)))
                .collect::<Result<Vec<_>, _>>()?;
            let passed = found.self_check_failures == 0;
            let bytes = if json_out {
                wrap(json!({
                    "N": family.alphabet.size(),
                    "j": family.j,
                    "word_length": prefix.len(),
                    "occurrences_found": found.occurrences.len(),
                    "reports": summaries,
                }))
            } else {
                descent_tsv(&summaries, found.occurrences.len())
            };
            Ok(Outcome::checked(bytes, passed, warnings))
        }

        Command::Audit3(args) => {
            let family = resolve_family(&args.family, None, &mut warnings)?;
            if args.length < 3 {
                return Err(config_err("--length must be at least 3"));
            }
            let psi = family.morphism()?;
            let audit = audit_length3_structure(&psi, args.length);
            let consistent = audit.recheck(&psi);
            let bytes = if json_out {
                let mut body = serde_json::to_value(&audit).expect("serializable");
                body["self_consistent"] = json!(consistent);
                wrap(body)
            } else {
                audit_tsv(&audit, consistent)
            };
            Ok(Outcome::checked(bytes, consistent, warnings))
        }
    }
}

fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("TW_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    match cap.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn freeness_outcome(
    report: &FreenessReport,
    family: &Family,
    json_out: bool,
    wrap: impl Fn(serde_json::Value) -> String,
    warnings: Vec<String>,
) -> Outcome {
    let n = family.alphabet.size();
    let bytes = if json_out {
        wrap(report::freeness_body(report, family.j, n))
    } else {
        report::freeness_tsv(report, family.j, n)
    };
    Outcome::checked(bytes, report.self_check_failures == 0, warnings)
}

fn recheck(
    args: &VerifyArgs,
    path: &Path,
    json_out: bool,
    wrap: impl Fn(serde_json::Value) -> String,
    mut warnings: Vec<String>,
) -> Result<Outcome, CliError> {
    let text = String::from_utf8(read_file(path)?)
        .map_err(|_| config_err(format!("--recheck {}: not UTF-8", path.display())))?;
    let rows = if text.trim_start().starts_with('{') {
        report::parse_occurrence_json(&text)
    } else {
        report::parse_occurrence_tsv(&text)
    }
    .map_err(|e| config_err(format!("--recheck {}: {e}", path.display())))?;

    let input_word = args.input.as_deref().map(|p| read_word(p, args.family.n)).transpose()?;
    let mut results = Vec::with_capacity(rows.len());
    for (occ, j, n) in rows {
        let family_args = FamilyArgs { n: Some(n), j, ..args.family.clone() };
        let family = resolve_family(&family_args, None, &mut warnings)?;
        let ok = match &input_word {
            Some(w) => Word::new(family.alphabet, w.symbols().to_vec())
                .map(|w| occ.verify(&w, &family.delta))
                .unwrap_or(false),
            None => {
                let psi = family.morphism()?;
                let factor: Vec<Symbol> =
                    (occ.start..occ.end()).map(|i| psi.letter_at(i as u64)).collect();
                let factor = Word::new(family.alphabet, factor)?;
                Occurrence { start: 0, ..occ }.verify(&factor, &family.delta)
            }
        };
        results.push((occ, j, n, ok));
    }
    dedup_warnings(&mut warnings);
    let failures = results.iter().filter(|r| !r.3).count();
    let bytes = if json_out {
        wrap(json!({
            "rows": results.len(),
            "failures": failures,
            "results": results.iter().map(|(o, j, n, ok)| json!({
                "start": o.start, "m": o.m, "k": o.k, "j": j, "N": n, "ok": ok
            })).collect::<Vec<_>>(),
        }))
    } else {
        let mut out = format!("{}\tok\n", report::OCCURRENCE_HEADER);
        for (o, j, n, ok) in &results {
            out.push_str(&format!("{}\t{}\n", report::occurrence_row(o, *j, *n), *ok as u8));
        }
        out.push_str(&format!("# rechecked {} rows, {} failed\n", results.len(), failures));
        out
    };
    Ok(Outcome::checked(bytes, failures == 0, warnings))
}

fn dedup_warnings(warnings: &mut Vec<String>) {
    let mut seen = std::collections::HashSet::new();
    warnings.retain(|w| seen.insert(w.clone()));
}

fn descent_tsv(rows: &[DescentSummary], found: usize) -> String {
    let mut out = String::from("start\tm\tk\tstart_parity\tm_even\tpreimage\tpreimage_is_repetition\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.start,
            r.m,
            r.k,
            r.start_parity,
            r.m_even as u8,
            r.preimage.as_deref().unwrap_or("-"),
            r.preimage_is_repetition.map_or("-".to_string(), |b| (b as u8).to_string()),
        ));
    }
    let descended = rows.iter().filter(|r| r.preimage_is_repetition == Some(true)).count();
    out.push_str(&format!(
        "# occurrences_found={} reported={} descended_to_repetition={}\n",
        found,
        rows.len(),
        descended
    ));
    out
}

fn audit_tsv(audit: &StructureAuditReport, consistent: bool) -> String {
    let alphabet = Alphabet::new(audit.alphabet_size).expect("valid");
    let mut out = String::from("factor\tfirst_position\tconforms\n");
    for f in &audit.factors {
        let word = Word::from_values(alphabet, &f.factor).expect("valid");
        out.push_str(&format!("{}\t{}\t{}\n", word, f.first_position, f.conforms as u8));
    }
    out.push_str(&format!(
        "# prefix_length={} distinct={} conforming={} non_conforming={} self_consistent={}\n",
        audit.prefix_length,
        audit.factors.len(),
        audit.conforming().count(),
        audit.non_conforming().count(),
        consistent
    ));
    out
}

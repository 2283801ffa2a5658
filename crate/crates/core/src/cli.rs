//! Command-line front end. [`run`] takes the argument list and two output
//! streams and returns the process exit code.

use std::collections::BTreeMap;
use std::io::Write;
use std::ops::ControlFlow;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::finder::{
    for_each_model, parse_constraints, search, Constraint, ConstraintSet, Mode, SearchOptions,
    SearchStatus,
};
use crate::harness::{
    check_on_algebra, lookup, report_file, summary_line, summary_text, verify_all, verify_spec,
    AlgebraCheck, Outcome,
};
use crate::identity::{
    canonicalize, class_key, classify_variants, dual, hosszu_variants, parse_identity,
    parse_identity_file, Identity, Op,
};
use crate::magma::{
    check_predicate, left_companion, property_report, read_table_file, right_companion, satisfies,
    write_table, Algebra, Predicate, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FORMAT: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "groupoid-lab",
    version,
    about = "Finite-model workbench for binary groupoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse identities and print canonical form, dual and class key.
    Parse {
        /// Identity text; may be repeated.
        #[arg(long = "id")]
        ids: Vec<String>,
        /// File with one identity per line (`#` comments allowed).
        file: Option<PathBuf>,
    },
    /// Check identities and properties on a table file.
    Check {
        #[arg(long)]
        table: PathBuf,
        #[arg(long = "id")]
        ids: Vec<String>,
        #[arg(long = "prop")]
        props: Vec<String>,
    },
    /// Enumerate models of a constraint list and print their tables.
    Search {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value = "all")]
        mode: Mode,
    },
    /// Count models of a constraint list.
    Count {
        #[command(flatten)]
        search: SearchArgs,
    },
    /// List the 16 factor-swap variants of the associative law.
    Hosszu {
        /// Also group variants by which groupoids of order up to --order satisfy them.
        #[arg(long)]
        semantic: bool,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Verify one catalog claim, or check it on a given table.
    Verify {
        #[arg(long)]
        lemma: String,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Verify every catalog claim.
    VerifyAll {
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Write the block-structured report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    order: usize,
    #[arg(long, default_value = "")]
    constraints: String,
    #[arg(long)]
    up_to_iso: bool,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

/// Largest order accepted by `hosszu --semantic`, which visits every table.
const SEMANTIC_MAX_ORDER: usize = 3;

pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut ctx = Ctx { out, err };
    let result = match cli.command {
        Command::Parse { ids, file } => ctx.parse(&ids, file),
        Command::Check { table, ids, props } => ctx.check(table, &ids, &props),
        Command::Search { search, mode } => ctx.search(&search, mode),
        Command::Count { search } => ctx.search(&search, Mode::Count),
        Command::Hosszu { semantic, order } => ctx.hosszu(semantic, order),
        Command::Verify {
            lemma,
            max_order,
            budget,
            table,
        } => ctx.verify(&lemma, max_order, budget, table),
        Command::VerifyAll {
            max_order,
            budget,
            parallel,
            report,
        } => ctx.verify_all(max_order, budget, parallel, report),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            code
        }
    }
}

struct Failure(i32, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn format_err(msg: impl std::fmt::Display) -> Failure {
    Failure(EXIT_FORMAT, msg.to_string())
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

macro_rules! say {
    ($w:expr, $($arg:tt)*) => {
        let _ = writeln!($w, $($arg)*);
    };
}

impl Ctx<'_> {
    fn parse(&mut self, ids: &[String], file: Option<PathBuf>) -> Result<i32, Failure> {
        let mut all: Vec<Identity> = Vec::new();
        for text in ids {
            all.push(parse_identity(text).map_err(|e| format_err(format!("`{text}`: {e}")))?);
        }
        if let Some(path) = file {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format_err(format!("{}: {e}", path.display())))?;
            all.extend(
                parse_identity_file(&text)
                    .map_err(|e| format_err(format!("{}: {e}", path.display())))?,
            );
        }
        if all.is_empty() {
            return Err(usage("nothing to parse; give --id or a file"));
        }
        for id in &all {
            say!(self.out, "identity  {id}");
            say!(self.out, "canonical {}", canonicalize(id));
            say!(self.out, "dual      {}", dual(id));
            say!(self.out, "class     {}", class_key(id).0);
        }
        Ok(EXIT_OK)
    }

    fn check(&mut self, table: PathBuf, ids: &[String], props: &[String]) -> Result<i32, Failure> {
        let alg = read_table_file(&table).map_err(format_err)?;
        let preds = props
            .iter()
            .map(|p| p.parse::<Predicate>().map_err(usage))
            .collect::<Result<Vec<_>, _>>()?;
        let identities = ids
            .iter()
            .map(|t| parse_identity(t).map_err(|e| format_err(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;

        if preds.is_empty() && identities.is_empty() {
            self.full_report(&alg);
            return Ok(EXIT_OK);
        }

        let mut all_hold = true;
        for p in preds {
            all_hold &= self.verdict(&p.to_string(), check_predicate(&alg, p));
        }
        for id in identities {
            let alg = self.with_needed_tables(&alg, &id.ops())?;
            let v = satisfies(&alg, &id).expect("tables present");
            all_hold &= self.verdict(&id.to_string(), v);
        }
        Ok(if all_hold { EXIT_OK } else { EXIT_FALSE })
    }

    fn verdict(&mut self, subject: &str, v: Verdict) -> bool {
        match v {
            Verdict::Holds => {
                say!(self.out, "holds {subject}");
                true
            }
            Verdict::Fails(w) => {
                let mut line = format!("fails {subject} witness {}", w.values_text());
                if let Some(d) = &w.detail {
                    line.push_str(&format!(" ({d})"));
                }
                say!(self.out, "{line}");
                false
            }
        }
    }

    /// Adds least-preimage division tables for identities that mention a
    /// division the file does not provide.
    fn with_needed_tables(&mut self, alg: &Algebra, ops: &[Op]) -> Result<Algebra, Failure> {
        let mut alg = alg.clone();
        for &op in ops {
            if alg.has_table(op) {
                continue;
            }
            let derived = match op {
                Op::LDiv => left_companion(&alg),
                Op::RDiv => right_companion(&alg),
                Op::Mul => continue,
            };
            alg = derived.map_err(|e| Failure(EXIT_FALSE, format!("cannot derive `{op}`: {e}")))?;
            say!(self.err, "note: `{op}` table derived from `*`");
        }
        Ok(alg)
    }

    fn full_report(&mut self, alg: &Algebra) {
        let r = property_report(alg);
        let list = |v: &[u8]| {
            if v.is_empty() {
                "none".to_string()
            } else {
                v.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        say!(self.out, "order {}", alg.order());
        for p in [
            Predicate::LeftCancellative,
            Predicate::RightCancellative,
            Predicate::LeftDivision,
            Predicate::RightDivision,
            Predicate::Quasigroup,
            Predicate::Commutative,
            Predicate::Associative,
        ] {
            match check_predicate(alg, p) {
                Verdict::Holds => {
                    say!(self.out, "{p} yes");
                }
                Verdict::Fails(w) if !w.assignment.is_empty() => {
                    say!(self.out, "{p} no witness {}", w.values_text());
                }
                Verdict::Fails(_) => {
                    say!(self.out, "{p} no");
                }
            }
        }
        say!(self.out, "left_identities {}", list(&r.left_identities));
        say!(self.out, "right_identities {}", list(&r.right_identities));
        say!(
            self.out,
            "two_sided_identity {}",
            r.two_sided_identity
                .map_or("none".to_string(), |e| e.to_string())
        );
        say!(
            self.out,
            "abelian_group {}",
            if r.abelian_group { "yes" } else { "no" }
        );
    }

    fn constraint_set(&self, args: &SearchArgs) -> Result<ConstraintSet, Failure> {
        let constraints = parse_constraints(&args.constraints).map_err(format_err)?;
        let mut ops = vec![Op::Mul];
        for op in constraints.iter().flat_map(Constraint::ops) {
            if !ops.contains(&op) {
                ops.push(op);
            }
        }
        ops.sort_by_key(|o| o.index());
        ConstraintSet::with_ops(args.order, constraints, &ops).map_err(|e| usage(e.to_string()))
    }

    fn search(&mut self, args: &SearchArgs, mode: Mode) -> Result<i32, Failure> {
        let cs = self.constraint_set(args)?;
        let opts = SearchOptions {
            mode,
            up_to_iso: args.up_to_iso,
            symmetry_breaking: args.up_to_iso,
            budget: args.budget,
            parallel: args.parallel,
        };
        let outcome = search(&cs, &opts);
        if mode == Mode::Count {
            say!(self.out, "{}", outcome.count);
        } else {
            for (i, m) in outcome.models.iter().enumerate() {
                if i > 0 {
                    say!(self.out, "");
                }
                let _ = write!(self.out, "{}", write_table(m));
            }
        }
        say!(
            self.err,
            "models {} nodes {} ms {}",
            outcome.count,
            outcome.stats.nodes,
            outcome.stats.elapsed.as_millis()
        );
        let exhausted = outcome.status == SearchStatus::BudgetExhausted;
        Ok(
            if exhausted && !(mode == Mode::First && outcome.count > 0) {
                say!(self.err, "budget exhausted; result is incomplete");
                EXIT_INCONCLUSIVE
            } else if mode != Mode::Count && outcome.count == 0 {
                EXIT_FALSE
            } else {
                EXIT_OK
            },
        )
    }

    fn hosszu(&mut self, semantic: bool, order: usize) -> Result<i32, Failure> {
        let variants = hosszu_variants();
        let classes = classify_variants(&variants);
        let class_of = |i: usize| classes.iter().position(|c| c.members.contains(&i)).unwrap() + 1;
        for (i, v) in variants.iter().enumerate() {
            say!(
                self.out,
                "{i:04b}  {:<28} canonical {:<28} class {}",
                v.to_string(),
                canonicalize(v).to_string(),
                class_of(i)
            );
        }
        for (k, c) in classes.iter().enumerate() {
            let masks: Vec<String> = c.members.iter().map(|m| format!("{m:04b}")).collect();
            say!(
                self.out,
                "class {} [{}] {}",
                k + 1,
                masks.join(" "),
                c.representative
            );
        }
        if semantic {
            if order == 0 || order > SEMANTIC_MAX_ORDER {
                return Err(usage(format!(
                    "--semantic needs --order between 1 and {SEMANTIC_MAX_ORDER}"
                )));
            }
            let groups = semantic_groups(&variants, order);
            for (k, g) in groups.iter().enumerate() {
                let masks: Vec<String> = g.iter().map(|m| format!("{m:04b}")).collect();
                say!(self.out, "semantic {} [{}]", k + 1, masks.join(" "));
            }
        }
        Ok(EXIT_OK)
    }

    fn verify(
        &mut self,
        id: &str,
        max_order: Option<usize>,
        budget: Option<u64>,
        table: Option<PathBuf>,
    ) -> Result<i32, Failure> {
        let spec = lookup(id).ok_or_else(|| usage(format!("unknown lemma id `{id}`")))?;
        if let Some(path) = table {
            let alg = read_table_file(&path).map_err(format_err)?;
            return Ok(match check_on_algebra(&spec, &alg) {
                AlgebraCheck::Holds => {
                    say!(self.out, "{id} holds on {}", path.display());
                    EXIT_OK
                }
                AlgebraCheck::HypothesisFails(w) => {
                    say!(self.out, "{id} hypothesis-fails {w}");
                    EXIT_FALSE
                }
                AlgebraCheck::ConclusionFails { algebra, witness } => {
                    say!(self.out, "{id} conclusion-fails {witness}");
                    let _ = write!(self.out, "{}", write_table(&algebra));
                    EXIT_FALSE
                }
            });
        }
        let max_order = max_order.unwrap_or_else(|| spec.default_max_order());
        let report = verify_spec(&spec, max_order, budget);
        say!(self.out, "{}", summary_line(&report));
        match &report.outcome {
            Outcome::Counterexample { algebra, .. } | Outcome::WrongWitness(algebra) => {
                let _ = write!(self.out, "{}", write_table(algebra));
            }
            _ => {}
        }
        Ok(outcome_code(&report.outcome))
    }

    fn verify_all(
        &mut self,
        max_order: usize,
        budget: Option<u64>,
        parallel: usize,
        report: Option<PathBuf>,
    ) -> Result<i32, Failure> {
        let summary = verify_all(max_order, budget, parallel);
        let _ = write!(self.out, "{}", summary_text(&summary));
        if let Some(path) = report {
            std::fs::write(&path, report_file(&summary))
                .map_err(|e| Failure(EXIT_FORMAT, format!("{}: {e}", path.display())))?;
        }
        let codes: Vec<i32> = summary
            .reports
            .iter()
            .map(|r| outcome_code(&r.outcome))
            .collect();
        Ok(if codes.contains(&EXIT_FALSE) {
            EXIT_FALSE
        } else if codes.contains(&EXIT_INCONCLUSIVE) {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        })
    }
}

fn outcome_code(o: &Outcome) -> i32 {
    match o {
        Outcome::Verified | Outcome::Witnessed(_) => EXIT_OK,
        Outcome::Counterexample { .. } | Outcome::WrongWitness(_) | Outcome::NoWitness => {
            EXIT_FALSE
        }
        Outcome::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    }
}

/// Groups identities that hold on exactly the same groupoids of order
/// `1..=max_order`. Groups are listed by their least member.
pub fn semantic_groups(identities: &[Identity], max_order: usize) -> Vec<Vec<usize>> {
    let mut bits: Vec<Vec<bool>> = vec![Vec::new(); identities.len()];
    for n in 1..=max_order {
        let cs = ConstraintSet::new(n, Vec::new()).expect("valid order");
        for_each_model(&cs, &SearchOptions::default(), |alg| {
            for (b, id) in bits.iter_mut().zip(identities) {
                b.push(satisfies(alg, id).expect("only `*`").holds());
            }
            ControlFlow::Continue(())
        });
    }
    let mut groups: BTreeMap<&[bool], Vec<usize>> = BTreeMap::new();
    for (i, b) in bits.iter().enumerate() {
        groups.entry(b.as_slice()).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

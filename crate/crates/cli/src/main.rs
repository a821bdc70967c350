//! `ftsys`: load frames, spaces, systems, algebras and theories from files,
//! run the constructions, and report law checks.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (witnesses
//! printed), 2 on input errors.

use clap::{Parser, Subcommand};
use ftsys_core::io::{self, Document};
use ftsys_core::logic::{self, parse_theory};
use ftsys_core::report::Report;
use ftsys_core::truth::{FiniteChain, TruthValue};
use ftsys_core::Error;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

mod proof;

#[derive(Parser)]
#[command(name = "ftsys", version, about = "finite fuzzy topological systems toolkit")]
struct Cli {
    /// Emit machine-readable JSON reports instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of any document (frame, space, system, algebra, …).
    Check { file: PathBuf },
    /// The extent space of a system.
    Ext {
        file: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The membership system of a space.
    J {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The spatial quotient of a system.
    Quotient {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The sum of systems (disjoint points, product frame).
    Sum {
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The product of two systems over the frame coproduct.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The spectrum of a frame (or a system's frame) over a chain.
    Spectrum {
        file: PathBuf,
        /// Comma-separated chain values, e.g. "0,1/2,1"; for a system input
        /// the occurring-values chain is the default.
        #[arg(long)]
        chain: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The grade of a sequent in a theory: `grade <theory> "phi |- psi"`.
    Grade { theory: PathBuf, sequent: String },
    /// Check a derivation tree against a theory: `derive <theory> <proof>`.
    Derive { theory: PathBuf, proof: PathBuf },
    /// Run a named law suite on seeded random instances.
    Laws {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        instances: usize,
    },
    /// Łₙᶜ-algebra subcommands.
    Mvn {
        #[command(subcommand)]
        sub: MvnCommand,
    },
    /// α-cut subsystems of a system over a fuzzy carrier.
    Alpha {
        file: PathBuf,
        /// The cut level, a rational in the system's chain.
        #[arg(long)]
        cut: String,
        /// Strict crisp cut instead of the fuzzy cut.
        #[arg(long)]
        strict: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// DOT rendering of a frame's Hasse diagram.
    ExportDot { file: PathBuf },
}

#[derive(Subcommand)]
enum MvnCommand {
    /// Exhaustive MV/MVₙ/Łₙᶜ axiom check.
    Check { file: PathBuf },
    /// Enumerate the prime n̄-filters.
    Primes { file: PathBuf },
    /// The spectrum system S_B(A) over the prime filters.
    Spec {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Double-dual checks on an n̄-fuzzy Boolean system.
    Dual { file: PathBuf },
}

fn read_document(path: &Path) -> Result<Document, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::structural(format!("{}: {e}", path.display())))?;
    Document::from_json(&text)
}

fn write_output(doc: &Document, output: &Option<PathBuf>) -> Result<(), Error> {
    let text = doc.to_json();
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::structural(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonReport<'a> {
    ok: bool,
    report: &'a Report,
}

/// Prints a report and returns the exit code it implies.
fn finish(report: &Report, json: bool) -> ExitCode {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&JsonReport { ok: report.ok(), report })
                .expect("reports serialize")
        );
    } else {
        print!("{report}");
    }
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn check_document(doc: &Document) -> Result<Report, Error> {
    Ok(match doc {
        Document::Frame(d) => {
            let frame = io::frame_from_doc(d)?;
            ftsys_core::lattice::check_frame(&frame)
        }
        Document::Space(d) => {
            let space = io::space_from_doc(d)?;
            ftsys_core::space::check_space(&space)
        }
        Document::System(d) => {
            let system = io::system_from_doc(d)?;
            ftsys_core::system::check_system(&system)
        }
        Document::Algebra(d) => {
            let algebra = io::algebra_from_doc(d)?;
            ftsys_core::mvn::check_lnc(&ftsys_core::mvn::RawTables::of(&algebra))
        }
        Document::FbSystem(d) => {
            let system = io::fb_system_from_doc(d)?;
            ftsys_core::mvn::check_fbsys(&system)
        }
        Document::LSystem(d) => {
            let system = io::l_system_from_doc(d)?;
            ftsys_core::varbasis::check_l_system(&system)
        }
    })
}

fn parse_chain(text: &str) -> Result<FiniteChain, Error> {
    let values = text
        .split(',')
        .map(|s| s.trim().parse::<TruthValue>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteChain::from_values(values))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Check { file } => {
            let doc = read_document(&file)?;
            let report = check_document(&doc)?;
            Ok(finish(&report, cli.json))
        }
        Command::Ext { file, output } => match read_document(&file)? {
            Document::System(d) => {
                let system = io::system_from_doc(&d)?;
                let out = ftsys_core::system::ext(&system);
                let report = ftsys_core::space::check_space(&out.space);
                write_output(&Document::Space(io::space_to_doc(&out.space)), &output)?;
                Ok(finish(&report, cli.json))
            }
            Document::FbSystem(d) => {
                let system = io::fb_system_from_doc(&d)?;
                let space = ftsys_core::mvn::ext_b(&system)?;
                let report = ftsys_core::space::check_space(&space);
                write_output(&Document::Space(io::space_to_doc(&space)), &output)?;
                Ok(finish(&report, cli.json))
            }
            Document::LSystem(d) => {
                let system = io::l_system_from_doc(&d)?;
                let out = ftsys_core::varbasis::ext_l(&system)?;
                let report = ftsys_core::varbasis::check_l_space(&out.space);
                let back = ftsys_core::varbasis::j_l(&out.space)?;
                write_output(&Document::LSystem(io::l_system_to_doc(&back)), &output)?;
                Ok(finish(&report, cli.json))
            }
            _ => Err(Error::precondition("ext expects a system document")),
        },
        Command::J { file, output } => {
            let Document::Space(d) = read_document(&file)? else {
                return Err(Error::precondition("j expects a space document"));
            };
            let space = io::space_from_doc(&d)?;
            let system = ftsys_core::system::j(&space)?;
            let report = ftsys_core::system::check_system(&system);
            write_output(&Document::System(io::system_to_doc(&system)), &output)?;
            Ok(finish(&report, cli.json))
        }
        Command::Quotient { file, output } => {
            let Document::System(d) = read_document(&file)? else {
                return Err(Error::precondition("quotient expects a system document"));
            };
            let system = io::system_from_doc(&d)?;
            let q = ftsys_core::system::quotient(&system)?;
            let mut report = ftsys_core::system::check_system(&q.system);
            report.record("quotient is spatial", ftsys_core::system::is_spatial(&q.system), || {
                "duplicate columns remain".into()
            });
            write_output(&Document::System(io::system_to_doc(&q.system)), &output)?;
            Ok(finish(&report, cli.json))
        }
        Command::Sum { files, output } => {
            let mut parts = Vec::new();
            for file in &files {
                let Document::System(d) = read_document(file)? else {
                    return Err(Error::precondition("sum expects system documents"));
                };
                parts.push(io::system_from_doc(&d)?);
            }
            let (sum, _) = ftsys_core::system::system_sum(&parts)?;
            let report = ftsys_core::system::check_system(&sum);
            write_output(&Document::System(io::system_to_doc(&sum)), &output)?;
            Ok(finish(&report, cli.json))
        }
        Command::Product { left, right, output } => {
            let (Document::System(a), Document::System(b)) =
                (read_document(&left)?, read_document(&right)?)
            else {
                return Err(Error::precondition("product expects system documents"));
            };
            let d = io::system_from_doc(&a)?;
            let e = io::system_from_doc(&b)?;
            let (prod, cp) = ftsys_core::system::system_product(&d, &e)?;
            let mut report = ftsys_core::system::check_system(&prod);
            report.record(
                "grades are decomposition-independent",
                ftsys_core::system::product_decomposition_independent(&prod, &cp, &d, &e),
                || "a tensor element depends on its decomposition".into(),
            );
            write_output(&Document::System(io::system_to_doc(&prod)), &output)?;
            Ok(finish(&report, cli.json))
        }
        Command::Spectrum { file, chain, output } => {
            let (frame, default_chain) = match read_document(&file)? {
                Document::Frame(d) => (io::frame_from_doc(&d)?, FiniteChain::bool_chain()),
                Document::System(d) => {
                    let system = io::system_from_doc(&d)?;
                    (system.frame().clone(), system.occurring_chain())
                }
                _ => return Err(Error::precondition("spectrum expects a frame or system")),
            };
            let chain = match chain {
                Some(text) => parse_chain(&text)?,
                None => default_chain,
            };
            let spec = ftsys_core::system::spectrum(&frame, &chain)?;
            let report = ftsys_core::system::check_system(&spec.system);
            write_output(&Document::System(io::system_to_doc(&spec.system)), &output)?;
            Ok(finish(&report, cli.json))
        }
        Command::Grade { theory, sequent } => {
            let text = std::fs::read_to_string(&theory)
                .map_err(|e| Error::structural(format!("{}: {e}", theory.display())))?;
            let theory = parse_theory(&text)?;
            let (seq, _) = proof::parse_sequent(&sequent, &theory.signature)?;
            let grade =
                logic::sequent_grade(&seq.lhs, &seq.rhs, &theory.interpretation)?;
            println!("{grade}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Derive { theory, proof } => {
            let text = std::fs::read_to_string(&theory)
                .map_err(|e| Error::structural(format!("{}: {e}", theory.display())))?;
            let theory = parse_theory(&text)?;
            let proof_text = std::fs::read_to_string(&proof)
                .map_err(|e| Error::structural(format!("{}: {e}", proof.display())))?;
            let (premises, tree) = proof::parse_proof(&proof_text, &theory.signature)?;
            let out =
                logic::check_derivation(&premises, &tree, Some(&theory.interpretation))?;
            println!("propagated bound: {}", out.bound);
            Ok(finish(&out.report, cli.json))
        }
        Command::Laws { suite, seed, instances } => {
            let report = ftsys_core::cat::run_suite(&suite, seed, instances)?;
            Ok(finish(&report, cli.json))
        }
        Command::Mvn { sub } => match sub {
            MvnCommand::Check { file } => {
                let Document::Algebra(d) = read_document(&file)? else {
                    return Err(Error::precondition("mvn check expects an algebra document"));
                };
                let algebra = io::algebra_from_doc(&d)?;
                let report = ftsys_core::mvn::check_lnc(&ftsys_core::mvn::RawTables::of(&algebra));
                Ok(finish(&report, cli.json))
            }
            MvnCommand::Primes { file } => {
                let Document::Algebra(d) = read_document(&file)? else {
                    return Err(Error::precondition("mvn primes expects an algebra document"));
                };
                let algebra = io::algebra_from_doc(&d)?;
                for p in ftsys_core::mvn::enumerate_prime_filters(&algebra) {
                    let members: Vec<String> = p
                        .iter()
                        .map(|&a| {
                            let e = &algebra.elements()[a];
                            format!("{e:?}")
                        })
                        .collect();
                    println!("{{{}}}", members.join(", "));
                }
                Ok(ExitCode::SUCCESS)
            }
            MvnCommand::Spec { file, output } => {
                let Document::Algebra(d) = read_document(&file)? else {
                    return Err(Error::precondition("mvn spec expects an algebra document"));
                };
                let algebra = io::algebra_from_doc(&d)?;
                let (system, _) = ftsys_core::mvn::s_b(&algebra)?;
                let report = ftsys_core::mvn::check_fbsys(&system);
                write_output(&Document::FbSystem(io::fb_system_to_doc(&system)), &output)?;
                Ok(finish(&report, cli.json))
            }
            MvnCommand::Dual { file } => {
                let Document::FbSystem(d) = read_document(&file)? else {
                    return Err(Error::precondition("mvn dual expects an fb_system document"));
                };
                let system = io::fb_system_from_doc(&d)?;
                let mut report = ftsys_core::mvn::check_fbsys(&system);
                let (j_ext, counit) = ftsys_core::mvn::counit_ext_b(&system)?;
                report.absorb(
                    "counit (id, ext_B*)",
                    ftsys_core::mvn::check_fbsys_map(&counit, &j_ext, &system),
                );
                let (spec, unit) = ftsys_core::mvn::unit_s_b(&system)?;
                report.absorb(
                    "unit (p*, id)",
                    ftsys_core::mvn::check_fbsys_map(&unit, &system, &spec),
                );
                report.record(
                    "counit algebra map is a bijection",
                    j_ext.algebra().len() == system.algebra().len(),
                    || {
                        format!(
                            "|Cont| = {} vs |A| = {}",
                            j_ext.algebra().len(),
                            system.algebra().len()
                        )
                    },
                );
                report.record(
                    "p* is a bijection onto Hom(A, n̄)",
                    spec.points().len() == system.points().len(),
                    || {
                        format!(
                            "|Hom| = {} vs |X| = {}",
                            spec.points().len(),
                            system.points().len()
                        )
                    },
                );
                Ok(finish(&report, cli.json))
            }
        },
        Command::Alpha { file, cut, strict, output } => {
            let Document::LSystem(d) = read_document(&file)? else {
                return Err(Error::precondition("alpha expects an l_system document"));
            };
            let system = io::l_system_from_doc(&d)?;
            let alpha: TruthValue = cut.parse()?;
            if strict {
                let crisp = ftsys_core::varbasis::alpha_subsystem_strict(&system, alpha)?;
                let report = ftsys_core::system::check_system(&crisp);
                write_output(&Document::System(io::system_to_doc(&crisp)), &output)?;
                Ok(finish(&report, cli.json))
            } else {
                let fuzzy = ftsys_core::varbasis::alpha_subsystem_fuzzy(&system, alpha)?;
                let report = ftsys_core::varbasis::check_l_system(&fuzzy);
                write_output(&Document::LSystem(io::l_system_to_doc(&fuzzy)), &output)?;
                Ok(finish(&report, cli.json))
            }
        }
        Command::ExportDot { file } => {
            let Document::Frame(d) = read_document(&file)? else {
                return Err(Error::precondition("export-dot expects a frame document"));
            };
            let frame = io::frame_from_doc(&d)?;
            print!("{}", frame.poset().to_dot());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

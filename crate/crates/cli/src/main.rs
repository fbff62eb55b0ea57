//! Command line front end: catalog access, exterior-algebra operations,
//! symmetry censuses, exact spectra, invariants, graphs and the
//! verification harness.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use specforms::construct::{catalog, catalog_names, extend, pair_shift, EmbeddingSpec};
use specforms::exterior::Index;
use specforms::invariants::{classify_2form_4d, invariant_i1, invariant_i2};
use specforms::spectral::endomorphism_matrix;
use specforms::symmetry::{expand_presentation, orthogonal_census, permutation_census};
use specforms::{Error, Form};

use specforms_cli::output::{
    orthogonal_report, permutation_report, profile_report, render_form, render_table_text,
    table_rows, InvariantsReport,
};
use specforms_cli::verify::{known_factorizations, run_sections, Section};
use specforms_cli::embed::parse_embedding_spec;

#[derive(Parser)]
#[command(name = "specforms", version, about = "Exact special-form toolkit")]
struct Cli {
    /// Display index 10 as 0 in component subscripts (files are unaffected).
    #[arg(long, global = true)]
    zero_ten: bool,
    /// Emit JSON instead of plain text where applicable.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on group closures generated from presentation generators.
    #[arg(long, global = true, env = "SPECFORMS_GROUP_BOUND", default_value_t = specforms::symmetry::DEFAULT_GROUP_BOUND)]
    group_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog names, or write a named catalog form.
    Catalog {
        name: Option<String>,
        /// Write the form file here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Permutation (and optionally orthogonal) symmetry census of a form.
    Symmetries {
        form: PathBuf,
        #[arg(long)]
        orthogonal: bool,
        #[arg(long)]
        commutator: bool,
        #[arg(long)]
        democracy: bool,
    },
    /// Exact characteristic polynomial of a 2k-form acting on k-forms.
    Charpoly {
        form: PathBuf,
        #[arg(short, long)]
        k: u8,
    },
    /// Build a form by seed expansion (scheme A), embedding (B/C), or the
    /// built-in cyclic lifts (Z5 from eight, Z6 from ten dimensions).
    Construct {
        #[arg(long)]
        scheme: String,
        /// Source form file (seeds for scheme A).
        #[arg(long)]
        source: PathBuf,
        /// Embedding spec file (required for schemes A, B, C).
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Contraction with the oriented plane spanned by two indices.
    Contract {
        form: PathBuf,
        i: Index,
        j: Index,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Hodge dual.
    Hodge {
        form: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Wedge product of two forms.
    Wedge {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Restriction to a strictly increasing index subset.
    Restrict {
        form: PathBuf,
        indices: Vec<Index>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Scalar invariants of a 2-form (classification in four dimensions).
    Invariants { form: PathBuf },
    /// Distance-labelled valence profile of the support graph.
    Graph { form: PathBuf },
    /// The representative table of special 2-forms in four dimensions.
    Table1,
    /// Recompute the recorded reference values and report each claim.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        section: String,
    },
}

fn read_form(path: &PathBuf) -> Result<Form, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    Form::parse_text(&text)
}

fn emit_form(f: &Form, out: Option<PathBuf>, zero_ten: bool) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(&path, f.to_text()).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{}", render_form(f, zero_ten));
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Catalog { name, out } => match name {
            None => {
                for n in catalog_names() {
                    println!("{n}");
                }
                Ok(0)
            }
            Some(n) => {
                let f = catalog(&n)?;
                emit_form(&f, out, cli.zero_ten)?;
                Ok(0)
            }
        },
        Command::Symmetries {
            form,
            orthogonal,
            commutator,
            democracy,
        } => {
            let f = read_form(&form)?;
            let census = permutation_census(&f)?;
            let perm = permutation_report(&census, commutator);
            let orth = orthogonal
                .then(|| orthogonal_census(&f).map(|c| orthogonal_report(&c, commutator)))
                .transpose()?;
            if cli.json {
                let mut doc = serde_json::json!({
                    "dim": f.dim(),
                    "degree": f.degree(),
                    "weight": f.weight(),
                    "permutation": perm,
                });
                if let Some(o) = orth {
                    doc["orthogonal"] = serde_json::to_value(o).expect("serializable");
                }
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                println!(
                    "permutation symmetries: {}  antisymmetries: {}",
                    perm.symmetry_order, perm.antisymmetry_count
                );
                println!("symmetry generators: {}", perm.symmetry_generators.join("  "));
                if let Some(rep) = &perm.antisymmetry_representative {
                    println!("antisymmetry representative: {rep}");
                }
                println!("cycle types: {:?}", perm.cycle_type_histogram);
                if let Some(c) = perm.commutator_order {
                    println!("permutation commutator order: {c}");
                }
                if democracy {
                    println!(
                        "democratic: {} (transitive under {:?})",
                        perm.democratic, perm.transitive_under
                    );
                }
                if let Some(o) = orth {
                    println!(
                        "orthogonal symmetries: {}  antisymmetries: {}",
                        o.symmetry_order, o.antisymmetry_count
                    );
                    if let Some(c) = o.commutator_order {
                        println!("orthogonal commutator order: {c}");
                    }
                }
            }
            Ok(0)
        }
        Command::Charpoly { form, k } => {
            let f = read_form(&form)?;
            let m = endomorphism_matrix(&f, k)?;
            let p = m.map(|v| BigInt::from(*v)).char_poly();
            let factored = known_factorizations().into_iter().find(|f| f.matches(&p));
            if cli.json {
                let doc = serde_json::json!({
                    "dim": f.dim(),
                    "degree": f.degree(),
                    "k": k,
                    "matrix_size": m.n_rows(),
                    "symmetric": m.is_symmetric(),
                    "antisymmetric": m.is_antisymmetric(),
                    "coefficients_ascending": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "factored": factored.as_ref().map(|f| f.to_string()),
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                match factored {
                    Some(fct) => println!("{fct}"),
                    None => println!("{p}"),
                }
            }
            Ok(0)
        }
        Command::Construct {
            scheme,
            source,
            spec,
            out,
        } => {
            let src = read_form(&source)?;
            let read_spec = |path: &PathBuf| -> Result<EmbeddingSpec, Error> {
                let text = fs::read_to_string(path).map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("{}: {e}", path.display()),
                })?;
                let mut espec = parse_embedding_spec(&text)?;
                espec.bound = espec.bound.min(cli.group_bound);
                Ok(espec)
            };
            let result = match scheme.as_str() {
                "Z5" => {
                    let spec = EmbeddingSpec::new(10, vec![9, 10], vec![pair_shift(10)?]);
                    extend(&src, &spec)?
                }
                "Z6" => {
                    let spec = EmbeddingSpec::new(12, vec![11, 12], vec![pair_shift(12)?]);
                    extend(&src, &spec)?
                }
                "A" => {
                    let path = spec.ok_or_else(|| Error::Parse {
                        line: 0,
                        msg: "scheme A needs --spec".into(),
                    })?;
                    let espec = read_spec(&path)?;
                    let seeds: Vec<(Vec<Index>, i64)> = src
                        .components()
                        .map(|(t, c)| (t.indices().to_vec(), *c))
                        .collect();
                    expand_presentation(espec.target_dim, &seeds, &espec.generators, espec.bound)?
                }
                "B" | "C" => {
                    let path = spec.ok_or_else(|| Error::Parse {
                        line: 0,
                        msg: "schemes B and C need --spec".into(),
                    })?;
                    extend(&src, &read_spec(&path)?)?
                }
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("unknown scheme `{other}` (A, B, C, Z5, Z6)"),
                    })
                }
            };
            emit_form(&result, out, cli.zero_ten)?;
            Ok(0)
        }
        Command::Contract { form, i, j, out } => {
            let f = read_form(&form)?;
            emit_form(&f.contract_plane(i, j)?, out, cli.zero_ten)?;
            Ok(0)
        }
        Command::Hodge { form, out } => {
            let f = read_form(&form)?;
            emit_form(&f.hodge_star(), out, cli.zero_ten)?;
            Ok(0)
        }
        Command::Wedge { left, right, out } => {
            let l = read_form(&left)?;
            let r = read_form(&right)?;
            emit_form(&l.wedge(&r)?, out, cli.zero_ten)?;
            Ok(0)
        }
        Command::Restrict { form, indices, out } => {
            let f = read_form(&form)?;
            emit_form(&f.restrict(&indices)?, out, cli.zero_ten)?;
            Ok(0)
        }
        Command::Invariants { form } => {
            let f = read_form(&form)?;
            let i1 = invariant_i1(&f)?;
            let i2 = (f.dim() == 4).then(|| invariant_i2(&f)).transpose()?;
            let class = if f.dim() == 4 {
                classify_2form_4d(&f)?.map(|e| e.label)
            } else {
                None
            };
            let report = InvariantsReport {
                i1,
                i2,
                class,
                weight: f.weight(),
                special: f.is_special(),
            };
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print!("I1 = {i1}");
                if let Some(v) = i2 {
                    print!(", I2 = {v}");
                }
                match class {
                    Some(label) => println!(", class {label}"),
                    None if f.dim() == 4 => println!(", unmatched"),
                    None => println!(),
                }
            }
            Ok(0)
        }
        Command::Graph { form } => {
            let f = read_form(&form)?;
            let report = profile_report(&f);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                println!("{} vertices", report.vertex_count);
                for (profile, count) in &report.classes {
                    let dist: Vec<String> =
                        profile.iter().map(|(d, c)| format!("d{d}:{c}")).collect();
                    println!("  {count} vertices with profile {{{}}}", dist.join(", "));
                }
            }
            Ok(0)
        }
        Command::Table1 => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&table_rows()).expect("serializable")
                );
            } else {
                print!("{}", render_table_text());
            }
            Ok(0)
        }
        Command::VerifyPaper { section } => {
            let Some(sections) = Section::from_flag(&section) else {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("unknown section `{section}` (all, 2, 4, 5, 6, 7, A)"),
                });
            };
            let report = run_sections(&sections);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::SearchBound(_) => 3u8,
                Error::Parse { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

//! `osalg`: Orlik-Solomon algebra computations from the command line.

use clap::{Args, Parser, Subcommand};
use osalg::field::{Field, PrimeField, Rationals};
use osalg::matroid::{
    cone, direct_sum, is_line_closed, parallel_connection, truncation, FlatLattice, Matroid,
    PointedMatroid,
};
use osalg::os::{
    affine_os, is_quadratic, kadic_dims, natural_order, nbb_sets, nbc_sets, os_dims, phi3,
    GradedSets,
};
use osalg::resonance::{
    exceptional_primes, poly1, resonance_fp, resonance_q, ComponentKind, DEFAULT_PARTITION_BUDGET,
    DEFAULT_POINT_BUDGET,
};
use osalg::subsets::elements;
use osalg::{Error, Result};
use osalg_cli::{corpus, iso, report};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "osalg",
    version,
    about = "Orlik-Solomon algebras of simple matroids: graded dimensions, \
             broken-circuit bases, quadraticity, affine quotients, and \
             resonance varieties, over Q and GF(p)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputFlags {
    /// Pretty-printed JSON report (default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Flattened `path = value` lines with the same content.
    #[arg(long)]
    text: bool,
}

#[derive(Args)]
struct FieldFlags {
    /// Coefficient field: `q` (rationals) or `fp` (prime field, requires --p).
    #[arg(long, default_value = "q")]
    field: String,
    /// Prime modulus, only with `--field fp`.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Clone, Copy)]
enum FieldChoice {
    Q,
    Fp(u64),
}

impl FieldFlags {
    fn resolve(&self) -> Result<FieldChoice> {
        match self.field.as_str() {
            "q" => {
                if self.p.is_some() {
                    Err(Error::Parse(
                        "flag conflict: --p requires --field fp".into(),
                    ))
                } else {
                    Ok(FieldChoice::Q)
                }
            }
            "fp" => {
                let p = self
                    .p
                    .ok_or_else(|| Error::Parse("--field fp requires --p <prime>".into()))?;
                Ok(FieldChoice::Fp(p))
            }
            other => Err(Error::Parse(format!(
                "unknown field {other:?}; expected \"q\" or \"fp\""
            ))),
        }
    }
}

/// Runs a closure under the chosen field.  Both arms must produce the same
/// (field-independent) result type.
macro_rules! over_field {
    ($choice:expr, |$f:ident| $body:expr) => {
        match $choice {
            FieldChoice::Q => {
                let $f = Rationals;
                $body
            }
            FieldChoice::Fp(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
        }
    };
}

#[derive(Args)]
struct BudgetFlag {
    /// Enumeration budget (set partitions for rational resonance, lambda
    /// points for GF(p) scans).  Defaults to 10^7; the environment variable
    /// OSALG_BUDGET overrides the default.
    #[arg(long)]
    budget: Option<u64>,
}

impl BudgetFlag {
    fn get(&self, fallback: u64) -> u64 {
        self.budget
            .or_else(|| {
                std::env::var("OSALG_BUDGET")
                    .ok()
                    .and_then(|s| s.parse().ok())
            })
            .unwrap_or(fallback)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant battery for one matroid.
    Info {
        /// Matroid: a JSON file path or `corpus:NAME`.
        input: String,
        #[command(flatten)]
        field: FieldFlags,
        #[command(flatten)]
        budget: BudgetFlag,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Whitney numbers and flat counts of the lattice of flats.
    Whitney {
        input: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Graded dimensions of the OS algebra.
    OsDims {
        input: String,
        #[command(flatten)]
        field: FieldFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Broken-circuit-free subsets under an element order.
    Nbc {
        input: String,
        /// Element order as a comma-separated permutation, e.g. `2,0,1`.
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Line-closure analogue of the nbc sets (spanning-section tuples).
    Nbb {
        input: String,
        /// Element order as a comma-separated permutation, e.g. `2,0,1`.
        #[arg(long)]
        order: Option<String>,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Nullity of the degree-3 multiplication map, with its closed formula.
    Phi3 {
        input: String,
        #[command(flatten)]
        field: FieldFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Graded dimensions of the k-adic closure A_k.
    Kadic {
        input: String,
        /// Level k (2 ≤ k ≤ rank); omit for the full table.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        field: FieldFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Whether the OS ideal is generated in degree ≤ 2.
    Quadratic {
        input: String,
        #[command(flatten)]
        field: FieldFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Whether every line-closed subset is a flat.
    LineClosed {
        input: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Graded dimensions of the affine OS algebra of a pointed matroid.
    Affine {
        input: String,
        /// Base point (default: the input's base, else 0).
        #[arg(long)]
        base: Option<usize>,
        #[command(flatten)]
        field: FieldFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Components of the first resonance variety over Q.
    Resonance {
        input: String,
        #[command(flatten)]
        budget: BudgetFlag,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Stratified point counts of R_{1,q} over GF(p).
    Nu {
        input: String,
        /// Prime modulus.
        #[arg(long)]
        p: u64,
        /// Cohomological degree (default 1).
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[command(flatten)]
        budget: BudgetFlag,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Primes p ≤ max-p where GF(p) resonance departs from the rational picture.
    ExceptionalPrimes {
        input: String,
        /// Largest prime to test.
        #[arg(long, default_value_t = 7)]
        max_p: u64,
        #[command(flatten)]
        budget: BudgetFlag,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Polymatroid of span dimensions over the resonance components.
    Poly1 {
        input: String,
        #[command(flatten)]
        budget: BudgetFlag,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Apply a matroid construction and print the result as matroid JSON.
    Ops {
        /// One of: direct-sum, parallel, truncation, cone.
        op: String,
        /// First operand.
        input0: String,
        /// Second operand (direct-sum and parallel only).
        input1: Option<String>,
        /// Base point of the first operand (parallel; default: its own, else 0).
        #[arg(long)]
        base0: Option<usize>,
        /// Base point of the second operand (parallel; default: its own, else 0).
        #[arg(long)]
        base1: Option<usize>,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Compare G0 ⊕ G1 with {0} ⊕ P(G0, G1): equal OS invariants,
    /// non-isomorphic matroids.
    IsoDemo {
        input0: String,
        input1: String,
        /// Base point of the first factor (default: its own, else 0).
        #[arg(long)]
        base0: Option<usize>,
        /// Base point of the second factor (default: its own, else 0).
        #[arg(long)]
        base1: Option<usize>,
        #[command(flatten)]
        budget: BudgetFlag,
        #[command(flatten)]
        out: OutputFlags,
    },
}

struct Input {
    matroid: Matroid,
    base: Option<usize>,
    descriptor: String,
    note: Option<&'static str>,
}

impl Input {
    fn meta(&self) -> Value {
        let mut meta = report::matroid_meta(&self.matroid, self.base);
        if let Some(note) = self.note {
            meta["note"] = json!(note);
        }
        meta
    }
}

fn resolve_input(arg: &str) -> Result<Input> {
    if let Some(name) = arg.strip_prefix("corpus:") {
        let entry = corpus::lookup(name)?;
        return Ok(Input {
            matroid: entry.matroid,
            base: entry.base,
            descriptor: arg.to_string(),
            note: Some(entry.note),
        });
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?;
    let parsed = osalg::io::parse_matroid_json(&text)?;
    Ok(Input {
        matroid: parsed.matroid,
        base: parsed.base,
        descriptor: arg.to_string(),
        note: None,
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn sets_by_degree(gs: &GradedSets) -> Value {
    const CAP: u64 = 10_000;
    if gs.total() > CAP {
        return json!(null);
    }
    let levels: Vec<Vec<Vec<usize>>> = gs
        .by_degree()
        .iter()
        .map(|level| level.iter().map(|&s| elements(s)).collect())
        .collect();
    json!(levels)
}

fn kadic_table<F: Field>(m: &Matroid, field: &F, only: Option<usize>) -> Result<Value> {
    let mut table = BTreeMap::new();
    match only {
        Some(k) => {
            table.insert(k.to_string(), kadic_dims(m, field, k)?);
        }
        None => {
            for k in 2..=m.rank() {
                table.insert(k.to_string(), kadic_dims(m, field, k)?);
            }
        }
    }
    Ok(json!(table))
}

/// The closed form 2·C(n+1,3) − n·w₂ + dim A₂³, which the direct nullity
/// computation must reproduce whenever n ≥ 3 and rank ≥ 2.
fn phi3_closed_form(m: &Matroid) -> Result<Option<u64>> {
    if m.n() < 3 || m.rank() < 2 {
        return Ok(None);
    }
    let q = Rationals;
    let w2 = FlatLattice::new(m).whitney_unsigned()[2] as i128;
    let a23 = kadic_dims(m, &q, 2)?.get(3).copied().unwrap_or(0) as i128;
    let n = m.n() as i128;
    let value = 2 * binomial(m.n() + 1, 3) as i128 - n * w2 + a23;
    Ok(Some(u64::try_from(value).map_err(|_| {
        Error::DimensionMismatch(format!("negative closed form {value} for phi3"))
    })?))
}

fn resonance_components_value(m: &Matroid, budget: u64) -> Result<Value> {
    let q = Rationals;
    let comps = resonance_q(m, budget)?;
    let local = comps
        .iter()
        .filter(|c| c.kind == ComponentKind::Local)
        .count();
    let rendered: Vec<Value> = comps
        .iter()
        .map(|c| {
            let basis = c.subspace.basis();
            let rows: Vec<Vec<String>> = (0..basis.n_rows())
                .map(|i| basis.row(i).iter().map(|x| q.render(x)).collect())
                .collect();
            json!({
                "kind": match c.kind {
                    ComponentKind::Local => "local",
                    ComponentKind::Nonlocal => "nonlocal",
                },
                "dim": c.dim(),
                "support": elements(c.support()),
                "blocks": c.partition.blocks().iter().map(|&b| elements(b)).collect::<Vec<_>>(),
                "basis": rows,
            })
        })
        .collect();
    Ok(json!({
        "budget": budget,
        "counts": {
            "total": comps.len(),
            "local": local,
            "nonlocal": comps.len() - local,
        },
        "components": rendered,
    }))
}

fn pairs_from_map(map: &BTreeMap<usize, u64>) -> Vec<(usize, u64)> {
    map.iter().map(|(&d, &c)| (d, c)).collect()
}

fn cmd_info(input: &Input, fc: FieldChoice, budget: u64) -> Result<Value> {
    let m = &input.matroid;
    let lattice = FlatLattice::new(m);
    let (field_name, betti, phi, kadic, quad) = over_field!(fc, |f| {
        let betti = os_dims(m, &f)?;
        let phi = phi3(m, &f)?;
        let kadic = kadic_table(m, &f, None)?;
        let quad = is_quadratic(m, &f)?;
        (f.name(), betti, phi, kadic, quad)
    });
    let order = natural_order(m.n());
    let nbc = nbc_sets(m, &order)?;
    let nbb = nbb_sets(m, &order)?;
    let comps = resonance_q(m, budget)?;
    let local = comps
        .iter()
        .filter(|c| c.kind == ComponentKind::Local)
        .count();
    let dims: Vec<usize> = comps.iter().map(|c| c.dim()).collect();
    Ok(json!({
        "field": field_name,
        "betti": betti,
        "whitney_unsigned": lattice.whitney_unsigned(),
        "whitney_signed": lattice.whitney_signed(),
        "flat_counts": lattice.flat_counts(),
        "phi3": phi,
        "kadic": kadic,
        "quadratic": quad,
        "line_closed": is_line_closed(m),
        "nbc_counts": nbc.counts(),
        "nbb_counts": nbb.counts(),
        "resonance": {
            "components": comps.len(),
            "local": local,
            "nonlocal": comps.len() - local,
            "dims": dims,
        },
    }))
}

fn parse_order(n: usize, order: &Option<String>) -> Result<Vec<usize>> {
    match order {
        None => Ok(natural_order(n)),
        Some(text) => text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad order entry {part:?}: {e}")))
            })
            .collect(),
    }
}

fn run(cli: Cli) -> Result<(Value, bool)> {
    match cli.command {
        Command::Info {
            input,
            field,
            budget,
            out,
        } => {
            let inp = resolve_input(&input)?;
            let payload = cmd_info(&inp, field.resolve()?, budget.get(DEFAULT_PARTITION_BUDGET))?;
            let meta = inp.meta();
            Ok((
                report::envelope("info", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Whitney { input, out } => {
            let inp = resolve_input(&input)?;
            let lattice = FlatLattice::new(&inp.matroid);
            let payload = json!({
                "whitney_unsigned": lattice.whitney_unsigned(),
                "whitney_signed": lattice.whitney_signed(),
                "flat_counts": lattice.flat_counts(),
            });
            let meta = inp.meta();
            Ok((
                report::envelope("whitney", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::OsDims { input, field, out } => {
            let inp = resolve_input(&input)?;
            let fc = field.resolve()?;
            let (name, betti) = over_field!(fc, |f| (f.name(), os_dims(&inp.matroid, &f)?));
            let payload = json!({"field": name, "betti": betti});
            let meta = inp.meta();
            Ok((
                report::envelope("os-dims", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Nbc { input, order, out } => {
            let inp = resolve_input(&input)?;
            let ord = parse_order(inp.matroid.n(), &order)?;
            let gs = nbc_sets(&inp.matroid, &ord)?;
            let payload = json!({
                "order": ord,
                "counts": gs.counts(),
                "total": gs.total(),
                "sets": sets_by_degree(&gs),
            });
            let meta = inp.meta();
            Ok((
                report::envelope("nbc", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Nbb { input, order, out } => {
            let inp = resolve_input(&input)?;
            let ord = parse_order(inp.matroid.n(), &order)?;
            let gs = nbb_sets(&inp.matroid, &ord)?;
            let payload = json!({
                "order": ord,
                "counts": gs.counts(),
                "total": gs.total(),
                "sets": sets_by_degree(&gs),
            });
            let meta = inp.meta();
            Ok((
                report::envelope("nbb", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Phi3 { input, field, out } => {
            let inp = resolve_input(&input)?;
            let fc = field.resolve()?;
            let m = &inp.matroid;
            let (name, phi) = over_field!(fc, |f| (f.name(), phi3(m, &f)?));
            let closed = phi3_closed_form(m)?;
            let formula = match closed {
                Some(value) => json!({
                    "applicable": true,
                    "value": value,
                    "agrees": value == phi,
                }),
                None => json!({"applicable": false}),
            };
            let payload = json!({"field": name, "phi3": phi, "closed_formula": formula});
            let meta = report::matroid_meta(m, inp.base);
            Ok((
                report::envelope("phi3", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Kadic {
            input,
            k,
            field,
            out,
        } => {
            let inp = resolve_input(&input)?;
            let fc = field.resolve()?;
            let (name, table) = over_field!(fc, |f| (f.name(), kadic_table(&inp.matroid, &f, k)?));
            let payload = json!({"field": name, "table": table});
            let meta = inp.meta();
            Ok((
                report::envelope("kadic", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Quadratic { input, field, out } => {
            let inp = resolve_input(&input)?;
            let fc = field.resolve()?;
            let (name, quad) = over_field!(fc, |f| (f.name(), is_quadratic(&inp.matroid, &f)?));
            let payload = json!({"field": name, "quadratic": quad});
            let meta = inp.meta();
            Ok((
                report::envelope("quadratic", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::LineClosed { input, out } => {
            let inp = resolve_input(&input)?;
            let payload = json!({"line_closed": is_line_closed(&inp.matroid)});
            let meta = inp.meta();
            Ok((
                report::envelope("line-closed", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Affine {
            input,
            base,
            field,
            out,
        } => {
            let inp = resolve_input(&input)?;
            let fc = field.resolve()?;
            let b = base.or(inp.base).unwrap_or(0);
            let dm = PointedMatroid::new(inp.matroid.clone(), b)?;
            let (name, dims, full) = over_field!(fc, |f| {
                let aff = affine_os(&dm, &f)?;
                (f.name(), aff.dims().to_vec(), os_dims(&inp.matroid, &f)?)
            });
            // (1 + t) · Poin(affine) must equal Poin(full), degree by degree.
            let poincare_ok = (0..full.len()).all(|p| {
                let lower = if p == 0 {
                    0
                } else {
                    *dims.get(p - 1).unwrap_or(&0)
                };
                lower + dims.get(p).copied().unwrap_or(0) == full[p]
            });
            let payload = json!({
                "field": name,
                "base": b,
                "dims": dims,
                "full_betti": full,
                "poincare_factorization": poincare_ok,
            });
            let meta = report::matroid_meta(&inp.matroid, Some(b));
            Ok((
                report::envelope("affine", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Resonance { input, budget, out } => {
            let inp = resolve_input(&input)?;
            let payload =
                resonance_components_value(&inp.matroid, budget.get(DEFAULT_PARTITION_BUDGET))?;
            let meta = inp.meta();
            Ok((
                report::envelope("resonance", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Nu {
            input,
            p,
            q,
            budget,
            out,
        } => {
            let inp = resolve_input(&input)?;
            let profile = resonance_fp(&inp.matroid, p, q, budget.get(DEFAULT_POINT_BUDGET))?;
            let payload = json!({
                "p": p,
                "q": q,
                "nu_affine": pairs_from_map(&profile.nu_affine()),
                "nu_projective": pairs_from_map(&profile.nu_projective()),
            });
            let meta = inp.meta();
            Ok((
                report::envelope("nu", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::ExceptionalPrimes {
            input,
            max_p,
            budget,
            out,
        } => {
            let inp = resolve_input(&input)?;
            let rep = exceptional_primes(&inp.matroid, max_p, budget.get(DEFAULT_POINT_BUDGET))?;
            let payload = json!({
                "max_p": rep.max_p,
                "exceptional": rep.exceptional,
                "denominator_clashes": rep.denominator_clashes,
            });
            let meta = inp.meta();
            Ok((
                report::envelope("exceptional-primes", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Poly1 { input, budget, out } => {
            let inp = resolve_input(&input)?;
            let p1 = poly1(&inp.matroid, budget.get(DEFAULT_PARTITION_BUDGET))?;
            let ranks: Vec<Value> = p1
                .ranks
                .iter()
                .map(|&(mask, rank)| json!([elements(mask), rank]))
                .collect();
            let payload = json!({
                "component_count": p1.component_count,
                "full_table": p1.full_table,
                "ranks": ranks,
            });
            let meta = inp.meta();
            Ok((
                report::envelope("poly1", &inp.descriptor, meta, payload),
                out.text,
            ))
        }
        Command::Ops {
            op,
            input0,
            input1,
            base0,
            base1,
            out,
        } => {
            let a = resolve_input(&input0)?;
            let second = || -> Result<Input> {
                let arg = input1
                    .as_deref()
                    .ok_or_else(|| Error::Parse(format!("operation {op:?} needs two operands")))?;
                resolve_input(arg)
            };
            let (m, base) = match op.as_str() {
                "direct-sum" => {
                    let b = second()?;
                    (direct_sum(&a.matroid, &b.matroid)?, None)
                }
                "parallel" => {
                    let b = second()?;
                    let pa =
                        PointedMatroid::new(a.matroid.clone(), base0.or(a.base).unwrap_or(0))?;
                    let pb =
                        PointedMatroid::new(b.matroid.clone(), base1.or(b.base).unwrap_or(0))?;
                    let p = parallel_connection(&pa, &pb)?;
                    (p.matroid().clone(), Some(p.base()))
                }
                "truncation" => (truncation(&a.matroid)?, None),
                "cone" => {
                    let c = cone(&a.matroid)?;
                    (c.matroid().clone(), Some(c.base()))
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown operation {other:?}; expected direct-sum, parallel, truncation, or cone"
                    )))
                }
            };
            let doc: Value = serde_json::from_str(&osalg::io::matroid_to_json(&m, base))
                .expect("canonical matroid JSON");
            Ok((doc, out.text))
        }
        Command::IsoDemo {
            input0,
            input1,
            base0,
            base1,
            budget,
            out,
        } => {
            let a = resolve_input(&input0)?;
            let b = resolve_input(&input1)?;
            let b0 = base0.or(a.base).unwrap_or(0);
            let b1 = base1.or(b.base).unwrap_or(0);
            let payload = iso::iso_demo(
                &a.matroid,
                &b.matroid,
                b0,
                b1,
                budget.get(DEFAULT_PARTITION_BUDGET),
            )?;
            let mut doc = json!({
                "command": "iso-demo",
                "inputs": {
                    "g0": a.descriptor,
                    "g1": b.descriptor,
                    "base0": b0,
                    "base1": b1,
                },
            });
            let obj = doc.as_object_mut().expect("object literal");
            for (k, v) in payload.as_object().expect("payload object") {
                obj.insert(k.clone(), v.clone());
            }
            Ok((doc, out.text))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli) {
        Ok((value, text_mode)) => {
            let rendered = if text_mode {
                report::render_text(&value)
            } else {
                report::render_json(&value)
            };
            print!("{rendered}");
            eprintln!("# elapsed_ms={}", start.elapsed().as_millis());
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

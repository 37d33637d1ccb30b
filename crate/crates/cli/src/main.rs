use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thompson_core::coeff::{decay_bound, pair_coefficient_exact, phi_alpha, wreath_coefficient, wreath_coefficient_exact};
use thompson_core::group::{parse_pd, Builtin, GroupElem};
use thompson_core::labeled::{LabeledPair, WreathElement};
use thompson_core::literal::{format_rational, parse_rational};
use thompson_core::oracle::{oracle_labeled, oracle_labeled_exact, oracle_pair};
use thompson_core::suites::{random_wreath, run_suite, SUITES};
use thompson_core::sweep::{sweep, to_csv, SweepConfig};
use thompson_core::{ElementClass, ForestPair, FractionV, PLMap};

const THREADS_ENV: &str = "THOMPSON_THREADS";

#[derive(Parser)]
#[command(name = "thompson", version, about = "Thompson-type groups, their coefficients and decay checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct GroupArg {
    /// Label group: Z, Z/n, S<m> or a product such as ZxZ/2.
    #[arg(long, default_value = "Z")]
    group: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a literal and describe it.
    Parse {
        element: String,
        #[command(flatten)]
        g: GroupArg,
    },
    /// Print the canonical (reduced) literal.
    Fmt {
        element: String,
        #[command(flatten)]
        g: GroupArg,
        /// Print wreath elements as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Multiply elements left to right.
    Mul {
        #[arg(required = true, num_args = 2..)]
        elements: Vec<String>,
        #[command(flatten)]
        g: GroupArg,
    },
    Inv {
        element: String,
        #[command(flatten)]
        g: GroupArg,
    },
    Reduce {
        element: String,
        #[command(flatten)]
        g: GroupArg,
    },
    /// Decide equality; exit status 0 either way, answer on stdout.
    Eq {
        left: String,
        right: String,
        #[command(flatten)]
        g: GroupArg,
    },
    /// Apply the piecewise-linear map to a rational point.
    Act {
        element: String,
        #[arg(long)]
        at: String,
        #[command(flatten)]
        g: GroupArg,
    },
    /// Print the domain and range partitions.
    Partition {
        element: String,
        #[command(flatten)]
        g: GroupArg,
    },
    /// Coefficient polynomial in x = α², optionally evaluated.
    Coeff {
        element: String,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Coefficient of a labelled element for a positive definite function on the labels.
    WreathCoeff {
        element: String,
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value = "zgeom:1/2")]
        pd: String,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Coefficient from the dense tensor expansion.
    Oracle {
        element: String,
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        pd: Option<String>,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// CSV of |φ_α| against the decay bound.
    Sweep {
        /// Leaf range `a..b` (inclusive) or a single count.
        #[arg(long, default_value = "2..12")]
        n: String,
        /// Comma-separated α values.
        #[arg(long, default_value = "0.8")]
        alpha: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "V")]
        class: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run a verification suite; nonzero exit on any failure.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// A random reduced element.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "V")]
        class: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Attach random labels from this group.
        #[arg(long)]
        labels: Option<String>,
    },
}

enum Element {
    V(FractionV),
    Pair(ForestPair),
    Wreath(WreathElement<GroupElem>),
}

fn group(g: &GroupArg) -> Result<Builtin> {
    Ok(Builtin::from_spec(&g.group)?)
}

fn parse_element(text: &str, g: &Builtin) -> Result<Element> {
    let text = text.trim();
    if text.starts_with('{') {
        return Ok(Element::Wreath(WreathElement::parse(text, g)?));
    }
    if text.contains('{') {
        let lp = LabeledPair::parse(text, g)?;
        return Ok(Element::Wreath(lp.to_wreath(g)?));
    }
    let pair: ForestPair = text.parse()?;
    if pair.source() == 1 && pair.target() == 1 {
        Ok(Element::V(FractionV::from_pair(pair)?))
    } else {
        Ok(Element::Pair(pair))
    }
}

fn labeled_pair(text: &str, g: &Builtin) -> Result<LabeledPair<GroupElem>> {
    let text = text.trim();
    if text.starts_with('{') {
        Ok(WreathElement::parse(text, g)?.to_labeled_pair(g))
    } else {
        Ok(LabeledPair::parse(text, g)?)
    }
}

fn format_element(e: &Element, g: &Builtin) -> String {
    match e {
        Element::V(v) => v.reduce().to_string(),
        Element::Pair(p) => p.reduce().to_string(),
        Element::Wreath(w) => w.format(g),
    }
}

fn multiply(a: &Element, b: &Element, g: &Builtin) -> Result<Element> {
    Ok(match (a, b) {
        (Element::V(x), Element::V(y)) => Element::V(x.multiply(y)?),
        (Element::Wreath(x), Element::Wreath(y)) => Element::Wreath(WreathElement::multiply(x, y, g)?),
        (Element::Wreath(x), Element::V(y)) => Element::Wreath(WreathElement::multiply(x, &lift(y, g), g)?),
        (Element::V(x), Element::Wreath(y)) => Element::Wreath(WreathElement::multiply(&lift(x, g), y, g)?),
        (x, y) => Element::Pair(ForestPair::multiply(&as_pair(x)?, &as_pair(y)?)?),
    })
}

fn lift(v: &FractionV, g: &Builtin) -> WreathElement<GroupElem> {
    WreathElement::new(Default::default(), v.clone(), g).expect("empty map is always valid")
}

fn as_pair(e: &Element) -> Result<ForestPair> {
    match e {
        Element::V(v) => Ok(v.pair().clone()),
        Element::Pair(p) => Ok(p.clone()),
        Element::Wreath(_) => bail!("cannot mix labelled elements with multi-root forest pairs"),
    }
}

fn pl_map(e: &Element) -> PLMap {
    match e {
        Element::V(v) => v.pl_map(),
        Element::Pair(p) => p.pl_map(),
        Element::Wreath(w) => w.vpart().pl_map(),
    }
}

fn alpha_check(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        bail!("α must lie in (0,1), got {alpha}");
    }
    Ok(())
}

fn parse_leaves(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let bad = || anyhow!("bad leaf range {s:?}; expected a..b or n");
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.parse().with_context(|| format!("{THREADS_ENV} must be a positive integer, got {v:?}"))?;
        if n == 0 {
            bail!("{THREADS_ENV} must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    configure_threads()?;
    match cli.cmd {
        Cmd::Parse { element, g } => {
            let g = group(&g)?;
            match parse_element(&element, &g)? {
                Element::V(v) => {
                    println!("element {v}");
                    println!("reduced {}", v.reduce());
                    println!("class {}", v.classify());
                    println!("leaves {} (reduced {})", v.leaves(), v.reduce().leaves());
                }
                Element::Pair(p) => {
                    println!("forest pair {p}");
                    println!("reduced {}", p.reduce());
                    println!("object {} -> {}", p.source(), p.target());
                }
                Element::Wreath(w) => {
                    println!("wreath {}", w.format(&g));
                    println!("group {}", g.spec());
                    println!("v-part class {}", w.vpart().classify());
                    println!("support {}", w.map().len());
                }
            }
        }
        Cmd::Fmt { element, g, json } => {
            let g = group(&g)?;
            match parse_element(&element, &g)? {
                Element::Wreath(w) if json => println!("{}", w.to_json(&g)),
                e => println!("{}", format_element(&e, &g)),
            }
        }
        Cmd::Mul { elements, g } => {
            let g = group(&g)?;
            let mut acc = parse_element(&elements[0], &g)?;
            for e in &elements[1..] {
                acc = multiply(&acc, &parse_element(e, &g)?, &g)?;
            }
            println!("{}", format_element(&acc, &g));
        }
        Cmd::Inv { element, g } => {
            let g = group(&g)?;
            let inv = match parse_element(&element, &g)? {
                Element::V(v) => Element::V(v.invert()),
                Element::Pair(p) => Element::Pair(p.inverse()),
                Element::Wreath(w) => Element::Wreath(w.invert(&g)),
            };
            println!("{}", format_element(&inv, &g));
        }
        Cmd::Reduce { element, g } => {
            let g = group(&g)?;
            println!("{}", format_element(&parse_element(&element, &g)?, &g));
        }
        Cmd::Eq { left, right, g } => {
            let g = group(&g)?;
            let eq = match (parse_element(&left, &g)?, parse_element(&right, &g)?) {
                (Element::Wreath(a), Element::Wreath(b)) => a == b,
                (Element::Wreath(a), Element::V(b)) | (Element::V(b), Element::Wreath(a)) => a == lift(&b, &g),
                (a, b) => as_pair(&a)?.equals(&as_pair(&b)?),
            };
            println!("{eq}");
        }
        Cmd::Act { element, at, g } => {
            let g = group(&g)?;
            let e = parse_element(&element, &g)?;
            let q = parse_rational(&at)?;
            println!("{}", format_rational(&pl_map(&e).apply(&q)?));
        }
        Cmd::Partition { element, g } => {
            let g = group(&g)?;
            println!("{}", pl_map(&parse_element(&element, &g)?));
        }
        Cmd::Coeff { element, alpha } => match parse_element(&element, &Builtin::Integers)? {
            Element::V(v) => {
                let p = phi_alpha(&v)?;
                println!("x = α^2");
                println!("phi = {p}");
                if let Some((deg, counts)) = p.bernstein() {
                    let cs: Vec<String> = counts.iter().map(u64::to_string).collect();
                    println!("bernstein degree {deg}: [{}]", cs.join(", "));
                }
                if let Some(a) = alpha {
                    alpha_check(a)?;
                    let n = v.reduce().leaves();
                    println!("value {:.17e}", p.eval(a * a));
                    if n >= 2 {
                        println!("bound {:.17e}", decay_bound(a, n)?);
                    }
                }
            }
            Element::Pair(p) => {
                let c = pair_coefficient_exact(&p)?;
                println!("coefficient = {c}");
                if let Some(a) = alpha {
                    alpha_check(a)?;
                    println!("value {:.17e}", c.eval(a));
                }
            }
            Element::Wreath(_) => bail!("labelled element; use wreath-coeff"),
        },
        Cmd::WreathCoeff { element, g, pd, alpha } => {
            let g = group(&g)?;
            let pd = parse_pd(&pd, &g)?;
            let lp = labeled_pair(&element, &g)?;
            if pd.is_exact() {
                let c = wreath_coefficient_exact(&lp, &pd)?;
                println!("coefficient = {c}");
            }
            if let Some(a) = alpha {
                alpha_check(a)?;
                let z = wreath_coefficient(&lp, &pd, a)?;
                println!("value {:.17e} {:+.17e}i", z.re, z.im);
            } else if !pd.is_exact() {
                bail!("{} has no exact form; pass --alpha", pd.name());
            }
        }
        Cmd::Oracle { element, g, pd, alpha } => {
            let g = group(&g)?;
            match pd {
                None => {
                    let pair = as_pair(&parse_element(&element, &g)?)?;
                    let c = oracle_pair(&pair)?;
                    println!("coefficient = {c}");
                    if let Some(a) = alpha {
                        alpha_check(a)?;
                        println!("value {:.17e}", c.eval(a));
                    }
                }
                Some(spec) => {
                    let pd = parse_pd(&spec, &g)?;
                    let lp = labeled_pair(&element, &g)?;
                    if pd.is_exact() {
                        println!("coefficient = {}", oracle_labeled_exact(&lp, &g, &pd)?);
                    }
                    if let Some(a) = alpha {
                        alpha_check(a)?;
                        let z = oracle_labeled(&lp, &g, &pd, a)?;
                        println!("value {:.17e} {:+.17e}i", z.re, z.im);
                    } else if !pd.is_exact() {
                        bail!("{} has no exact form; pass --alpha", pd.name());
                    }
                }
            }
        }
        Cmd::Sweep { n, alpha, count, seed, class, out } => {
            let alphas = alpha
                .split(',')
                .map(|a| a.trim().parse::<f64>().map_err(|_| anyhow!("bad α {a:?}")))
                .collect::<Result<Vec<_>>>()?;
            let cfg = SweepConfig { leaves: parse_leaves(&n)?, alphas, count, seed, class: class.parse()? };
            let rows = sweep(&cfg)?;
            let csv = to_csv(&rows);
            match out {
                Some(path) => fs::write(&path, csv).with_context(|| format!("writing {path}"))?,
                None => std::io::stdout().write_all(csv.as_bytes())?,
            }
            return Ok(rows.iter().all(|r| r.pass));
        }
        Cmd::Verify { suite, seed } => {
            if !SUITES.contains(&suite.as_str()) {
                bail!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "));
            }
            let report = run_suite(&suite, seed)?;
            println!("{report}");
            return Ok(report.passed());
        }
        Cmd::Random { n, class, seed, labels } => {
            let class: ElementClass = class.parse()?;
            match labels {
                None => println!("{}", FractionV::random_reduced(n, class, seed)?),
                Some(spec) => {
                    let g = Builtin::from_spec(&spec)?;
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    println!("{}", random_wreath(&mut rng, n, n, &g)?.format(&g));
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use springweb::classify::{smooth_by_diagram, smooth_by_tableau_general, smooth_by_tableau_rect, smooth_by_web};
use springweb::diagrams::{diagram_from_tableau, matching_from_tableau};
use springweb::geometry::{base_from_diagram, base_from_triple, base_from_web, fmso_triple};
use springweb::qseries::{factored_form, poincare_base};
use springweb::render::{render_diagram, render_matching, render_web};
use springweb::verify::{count_pattern_avoiders, count_smooth, run_suite, smooth_count_formula, Suite};
use springweb::webs::web_from_tableau;
use springweb::{BundleBase, Error, QPolynomial, SmoothnessVerdict, TwoColumnShape, TwoColumnTableau};

#[derive(Parser)]
#[command(name = "springweb", version, about = "Smooth components of two column Springer fibers")]
struct Cli {
    /// Print machine readable JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TableauArgs {
    /// Second column entries, e.g. `2,4,6,8`.
    #[arg(long, value_delimiter = ',', required = true)]
    col2: Vec<usize>,

    /// Number of boxes; defaults to twice the length of the second column.
    #[arg(long)]
    n: Option<usize>,
}

impl TableauArgs {
    fn tableau(&self) -> Result<TwoColumnTableau, Error> {
        let n = self.n.unwrap_or(2 * self.col2.len());
        TwoColumnTableau::new(n, self.col2.clone())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Web,
    Triple,
    Diagram,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Smooth,
    Geometry,
    Poincare,
    Promotion,
    Counts,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Smooth => Suite::Smooth,
            SuiteArg::Geometry => Suite::Geometry,
            SuiteArg::Poincare => Suite::Poincare,
            SuiteArg::Promotion => Suite::Promotion,
            SuiteArg::Counts => Suite::Counts,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Drawing {
    Matching,
    Diagram,
    Web,
}

#[derive(Subcommand)]
enum Command {
    /// Show a tableau and its tau* set.
    Syt(TableauArgs),
    /// The noncrossing matching, or matching-and-ray diagram, of a tableau.
    Matching(TableauArgs),
    /// The hourglass web of a rectangular tableau.
    Web(TableauArgs),
    /// Decide smoothness of the component.
    Classify(TableauArgs),
    /// Iterated fiber bundle base of a smooth component.
    Geometry {
        #[command(flatten)]
        tableau: TableauArgs,
        #[arg(long, value_enum, default_value = "triple")]
        via: Via,
    },
    /// Poincaré polynomial of a smooth component.
    Poincare(TableauArgs),
    /// Dihedral orbit of a forest web.
    Orbit(TableauArgs),
    /// Count smooth components of the (k, k)* rectangle.
    Count {
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive verification up to (k, k)*.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Report elapsed time on stderr.
        #[arg(long)]
        timings: bool,
    },
    /// Draw a matching, ray diagram or web as SVG.
    Render {
        #[command(flatten)]
        tableau: TableauArgs,
        #[arg(long, value_enum, default_value = "web")]
        what: Drawing,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ClassifyOutput {
    smooth: bool,
    tableau: SmoothnessVerdict,
    diagram: SmoothnessVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    rectangle: Option<SmoothnessVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    web: Option<SmoothnessVerdict>,
}

#[derive(Serialize)]
struct GeometryOutput {
    base: BundleBase,
    dimension: usize,
}

#[derive(Serialize)]
struct PoincareOutput {
    coefficients: QPolynomial,
    factored: String,
}

#[derive(Serialize)]
struct CountOutput {
    k: usize,
    total: usize,
    smooth: usize,
    formula: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    avoiders: Option<usize>,
}

enum Failure {
    Domain(String),
    Unverified,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
    if json {
        let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Domain(e.to_string()))?;
        println!("{s}");
    } else {
        println!("{}", text());
    }
    Ok(())
}

fn fmt_list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Syt(args) => {
            let t = args.tableau()?;
            emit(json, &t, || format!("shape {}\n{t}\ntau* = {}", t.shape(), fmt_list(&t.tau_star())))
        }
        Command::Matching(args) => {
            let t = args.tableau()?;
            if t.is_rectangular() {
                let m = matching_from_tableau(&t)?;
                emit(json, &m, || {
                    let edges: Vec<String> = m.edges().iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
                    format!("edges {}", edges.join(" "))
                })
            } else {
                let d = diagram_from_tableau(&t);
                emit(json, &d, || {
                    let edges: Vec<String> = d.edges().iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
                    format!("edges {}\nrays {}", edges.join(" "), fmt_list(d.rays()))
                })
            }
        }
        Command::Web(args) => {
            let w = web_from_tableau(&args.tableau()?)?;
            emit(json, &w, || {
                let mut lines: Vec<String> = w
                    .claws()
                    .iter()
                    .map(|c| format!("claw {} boundary {}", c.vertex, fmt_list(&c.boundary)))
                    .collect();
                lines.extend(w.filled().iter().map(|f| format!("filled {f}")));
                lines.extend(w.edges().iter().map(|e| format!("edge {} {} x{}", e.u, e.v, e.mult)));
                lines.push(format!("forest {}", w.is_forest()));
                lines.join("\n")
            })
        }
        Command::Classify(args) => {
            let t = args.tableau()?;
            let tableau = smooth_by_tableau_general(&t);
            let diagram = smooth_by_diagram(&diagram_from_tableau(&t));
            let (rectangle, web) = if t.is_rectangular() && t.k() >= 2 {
                let w = web_from_tableau(&t)?;
                (Some(smooth_by_tableau_rect(&t)?), Some(smooth_by_web(&w)))
            } else {
                (None, None)
            };
            let out = ClassifyOutput {
                smooth: tableau.smooth,
                tableau,
                diagram,
                rectangle,
                web,
            };
            emit(json, &out, || {
                let mut s = format!("smooth={}", out.smooth);
                if let Some(c) = out.tableau.clause() {
                    s.push_str(&format!(" clause={c:?}"));
                }
                if let Some(w) = &out.web {
                    s.push_str(&format!(" forest={}", w.smooth));
                }
                s
            })
        }
        Command::Geometry { tableau, via } => {
            let t = tableau.tableau()?;
            let base = match via {
                Via::Triple => base_from_triple(&t)?,
                Via::Diagram => base_from_diagram(&diagram_from_tableau(&t))?,
                Via::Web => base_from_web(&web_from_tableau(&t)?)?,
            };
            let out = GeometryOutput {
                dimension: base.dimension(),
                base,
            };
            emit(json, &out, || {
                let mut s = format!("base {}\ndimension {}", out.base, out.dimension);
                if let Ok(x) = fmso_triple(&t) {
                    s.push_str(&format!("\ntriple ({}, {}, {})", x.a, x.b, x.c));
                }
                s
            })
        }
        Command::Poincare(args) => {
            let base = base_from_triple(&args.tableau()?)?;
            let out = PoincareOutput {
                coefficients: poincare_base(&base),
                factored: factored_form(&base),
            };
            emit(json, &out, || {
                let coeffs: Vec<String> = out.coefficients.coefficients().iter().map(ToString::to_string).collect();
                format!("{}\ncoefficients [{}]\n{}", out.factored, coeffs.join(", "), out.coefficients)
            })
        }
        Command::Orbit(args) => {
            let orbit = web_from_tableau(&args.tableau()?)?.dihedral_orbit()?;
            emit(json, &orbit, || {
                format!("canonical breaks {}\norbit size {}", fmt_list(&orbit.canonical_breaks), orbit.size)
            })
        }
        Command::Count { k } => {
            let shape = TwoColumnShape::rectangle(k)?;
            let out = CountOutput {
                k,
                total: springweb::tableaux::enumerate_tableaux(shape).len(),
                smooth: count_smooth(k),
                formula: smooth_count_formula(k),
                avoiders: (k <= 9).then(|| count_pattern_avoiders(k)),
            };
            emit(json, &out, || {
                let mut s = format!("total={} smooth={} formula={}", out.total, out.smooth, out.formula);
                if let Some(a) = out.avoiders {
                    s.push_str(&format!(" avoiders={a}"));
                }
                s
            })
        }
        Command::Verify { max_k, suite, timings } => {
            if max_k > 8 {
                return Err(Failure::Domain(format!("--max-k {max_k} is above the supported limit of 8")));
            }
            let start = Instant::now();
            let report = run_suite(max_k, suite.into());
            if timings {
                eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
            }
            emit(json, &report, || {
                let mut lines: Vec<String> = report
                    .suites
                    .iter()
                    .map(|s| {
                        format!(
                            "{:<10} {} checked={} failures={}",
                            s.suite.name(),
                            if s.passed { "PASS" } else { "FAIL" },
                            s.checked(),
                            s.failures.len()
                        )
                    })
                    .collect();
                lines.push(if report.passed { "all passed".into() } else { "FAILURES".into() });
                lines.join("\n")
            })?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Unverified)
            }
        }
        Command::Render { tableau, what, output } => {
            let t = tableau.tableau()?;
            let svg = match what {
                Drawing::Matching => render_matching(&matching_from_tableau(&t)?),
                Drawing::Diagram => render_diagram(&diagram_from_tableau(&t)),
                Drawing::Web => render_web(&web_from_tableau(&t)?),
            };
            match output {
                Some(path) => std::fs::write(&path, svg).map_err(|e| Failure::Domain(format!("{}: {e}", path.display()))),
                None => std::io::stdout()
                    .write_all(svg.as_bytes())
                    .map_err(|e| Failure::Domain(e.to_string())),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Unverified) => ExitCode::from(1),
    }
}

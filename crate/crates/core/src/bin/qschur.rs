use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use affine_qschur::combinat::{parse_parts, Partition};
use affine_qschur::drinfeld::{central_scalar, q_from_lambda, s_lambda_a};
use affine_qschur::hecke::{ev_a, murphy_l, AffineWord};
use affine_qschur::tensor::Variant;
use affine_qschur::verify::{
    verify_affine_hecke, verify_all, verify_commuting, verify_drinfeld, verify_eval_compat, verify_jm, verify_lemmas,
    verify_qgl, verify_roundtrip, Report, SuiteConfig, Which, Window,
};
use affine_qschur::{Error, Sign};

/// Exact checks for tensor space of quantum affine gl_n and the affine
/// Hecke algebra.
#[derive(Parser)]
#[command(name = "qschur", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Drinfeld polynomials.
    #[command(subcommand)]
    Drinfeld(DrinfeldCmd),
    /// Multisegments.
    #[command(subcommand)]
    Segments(SegmentsCmd),
    /// The scalar c_t^±(λ) by which z_t^± acts.
    CentralScalar {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// plus or minus; both if omitted.
        #[arg(long)]
        sign: Option<Sign>,
    },
    /// Finite Hecke algebra computations.
    #[command(subcommand)]
    Hecke(HeckeCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Qgl,
    Hecke,
    Commuting,
    EvalCompat,
    Lemmas,
    Jm,
    Drinfeld,
    Roundtrip,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Index window LO..HI for the quantified pure tensors [default: -n..2n].
    #[arg(long, allow_hyphen_values = true)]
    window: Option<Window>,
    #[arg(long, default_value_t = 2)]
    t_max: u32,
    /// En or Fn, for eval-compat.
    #[arg(long, default_value = "En")]
    which: Which,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random multisegments, for roundtrip.
    #[arg(long, default_value_t = 200)]
    count: usize,
    /// Deliberately break a convention, to check that the suites notice.
    #[arg(long, value_enum, default_value_t = VariantArg::Faithful)]
    variant: VariantArg,
    /// Report elapsed_ms as 0, so that reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Faithful,
    FlippedMiddleExponent,
    FlippedECoproduct,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Faithful => Variant::Faithful,
            VariantArg::FlippedMiddleExponent => Variant::FlippedMiddleExponent,
            VariantArg::FlippedECoproduct => Variant::FlippedECoproduct,
        }
    }
}

#[derive(Subcommand)]
enum DrinfeldCmd {
    /// Q(λ, a) for a partition λ with at most n parts.
    FromPartition {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum SegmentsCmd {
    /// The multisegment s(λ, a).
    FromPartition {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// The Murphy operators L_j of H(r) in the T-basis.
    Murphy {
        #[arg(long)]
        r: usize,
        /// Only L_j.
        #[arg(long)]
        j: Option<usize>,
    },
    /// ev_a of a word in T_i and X_j^e, e.g. "T1 X2^-1".
    Ev {
        #[arg(long)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: AffineWord,
    },
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    Partition::new(parse_parts(s)?)
}

// A closed pipe (e.g. `| head`) is not an error worth a panic.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

fn print_json(v: &serde_json::Value) {
    say!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn run_verify(a: &VerifyArgs, json: bool) -> Result<bool, Error> {
    let mut cfg = SuiteConfig::new(a.n, a.r).with_t_max(a.t_max).with_seed(a.seed).with_variant(a.variant.into());
    if let Some(w) = a.window {
        cfg = cfg.with_window(w);
    }
    let reports: Vec<Report> = match a.suite {
        Suite::Qgl => vec![verify_qgl(&cfg)?],
        Suite::Hecke => vec![verify_affine_hecke(&cfg)?],
        Suite::Commuting => vec![verify_commuting(&cfg)?],
        Suite::EvalCompat => vec![verify_eval_compat(&cfg, a.which)?],
        Suite::Lemmas => vec![verify_lemmas(&cfg)?],
        Suite::Jm => vec![verify_jm(a.r, a.t_max)?],
        Suite::Drinfeld => vec![verify_drinfeld(a.r, a.n, a.seed)?],
        Suite::Roundtrip => vec![verify_roundtrip(a.count, a.r, a.n, a.seed)?],
        Suite::All => verify_all(&cfg)?,
    };
    let reports: Vec<Report> =
        if a.no_timing { reports.into_iter().map(Report::without_timing).collect() } else { reports };
    let ok = reports.iter().all(Report::ok);
    if json {
        let v = if reports.len() == 1 { json!(reports[0]) } else { json!(reports) };
        print_json(&v);
    } else {
        for rep in &reports {
            say!("{rep}");
        }
        say!("{}", if ok { "all asserted suites pass" } else { "FAILED" });
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool, Error> {
    let json = cli.json;
    match cli.command {
        Command::Verify(a) => return run_verify(&a, json),
        Command::Drinfeld(DrinfeldCmd::FromPartition { lambda, n }) => {
            let q = q_from_lambda(&lambda, n)?;
            if json {
                let lines: Vec<String> = q.to_string().lines().map(str::to_string).collect();
                print_json(&json!({"lambda": lambda, "n": n, "tuple": q, "display": lines}));
            } else {
                say!("{q}");
            }
        }
        Command::Segments(SegmentsCmd::FromPartition { lambda }) => {
            let s = s_lambda_a(&lambda)?;
            if json {
                print_json(&json!({"lambda": lambda, "multisegment": s, "display": s.to_string()}));
            } else {
                say!("{s}");
            }
        }
        Command::CentralScalar { lambda, t, sign } => {
            let signs = sign.map(|s| vec![s]).unwrap_or_else(|| Sign::BOTH.to_vec());
            let vals: Vec<_> = signs.iter().map(|&s| (s, central_scalar(&lambda, t, s))).collect();
            if json {
                let out: Vec<_> = vals
                    .iter()
                    .map(|(s, c)| json!({"lambda": lambda, "t": t, "sign": s, "value": c, "display": c.to_string()}))
                    .collect();
                print_json(&json!(out));
            } else {
                for (s, c) in vals {
                    say!("c_{t}^{s}({lambda}) = {c}");
                }
            }
        }
        Command::Hecke(HeckeCmd::Murphy { r, j }) => {
            let js: Vec<usize> = match j {
                Some(j) => vec![j],
                None => (1..=r).collect(),
            };
            let mut out = Vec::new();
            for j in js {
                let l = murphy_l(j, r)?;
                if json {
                    out.push(json!({"j": j, "r": r, "element": l, "display": l.to_string()}));
                } else {
                    say!("L_{j} = {l}");
                }
            }
            if json {
                print_json(&json!(out));
            }
        }
        Command::Hecke(HeckeCmd::Ev { r, word }) => {
            let h = ev_a(&word, r)?;
            if json {
                print_json(&json!({"word": word.to_string(), "r": r, "element": h, "display": h.to_string()}));
            } else {
                say!("ev_a({word}) = {h}");
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

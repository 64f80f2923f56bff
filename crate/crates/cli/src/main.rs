use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eternal_domination::families::enumerate_trees;
use eternal_domination::harness::{
    cmd_bench, cmd_compute, cmd_generate, cmd_scan_conjectures, cmd_verify, read_graph,
    write_graph, FamilySpec, Format, HarnessError, Method, ResultsCache, Theorem, VerifyOptions,
    EXIT_OK,
};
use eternal_domination::Tree;

#[derive(Parser)]
#[command(name = "edd", version, about = "Eternal distance-k domination on trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Spider,
    Tmk,
    Tmkd,
}

#[derive(Subcommand)]
enum Command {
    /// Eternal domination number of one graph, plus γ, γ₂ and γ_k.
    Compute {
        /// Graph file, or - for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        /// Input format; guessed when omitted.
        #[arg(long)]
        format: Option<FormatArg>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// auto, algorithm1, reduction or oracle.
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reuse and extend the results cache in the working directory.
        #[arg(long)]
        cache: bool,
    },
    /// Check the theorem suite on every tree up to --nmax vertices.
    Verify {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Distance parameters for the game solver (comma separated).
        #[arg(long, value_delimiter = ',', default_value = "2")]
        k: Vec<usize>,
        /// Statements to check (comma separated); all when omitted.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        /// JSON report path; a CSV summary is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cache: bool,
    },
    /// Build a member of one of the extremal families.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Legs of the spider.
        #[arg(long, default_value_t = 3)]
        size: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Maximum degree for tmkd.
        #[arg(long, default_value_t = 3)]
        delta: usize,
        /// Number of units for tmkd.
        #[arg(long, default_value_t = 1)]
        units: usize,
        /// Base tree for tmk.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the linear algorithm on seeded random trees.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "100000,1000000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV table path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for trees where γ_k = γ∞_{all,k} but γ∞_{all,k} ≠ γ_{⌊k/2⌋}.
    ScanConjectures {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, value_delimiter = ',', default_value = "3")]
        k: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print every tree on --nmax vertices, one per line.
    Enumerate {
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_source(source: &str) -> Result<String, HarnessError> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(source)?)
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), HarnessError> {
    match out {
        Some(path) => Ok(fs::write(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn open_cache(enabled: bool) -> Result<Option<ResultsCache>, HarnessError> {
    enabled
        .then(|| ResultsCache::open(ResultsCache::DEFAULT_FILE))
        .transpose()
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<i32, HarnessError> {
    match cli.command {
        Command::Compute {
            input,
            format,
            k,
            method,
            out,
            cache,
        } => {
            let g = read_graph(&read_source(&input)?, format.map(Format::from))?;
            let cache = open_cache(cache)?;
            let report = cmd_compute(&g, k, method.parse::<Method>()?, cache.as_ref())?;
            emit(out.as_ref(), &json(&report))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            nmax,
            k,
            theorems,
            out,
            cache,
        } => {
            let theorems = if theorems.is_empty() {
                Theorem::ALL.to_vec()
            } else {
                theorems
                    .iter()
                    .map(|t| t.parse())
                    .collect::<Result<_, _>>()?
            };
            let opts = VerifyOptions {
                n_max: nmax,
                k_set: k,
                theorems,
                ..VerifyOptions::default()
            };
            let cache = open_cache(cache)?;
            let report = cmd_verify(&opts, cache.as_ref())?;
            let summary = report.summary_csv();
            match &out {
                Some(path) => {
                    fs::write(path, report.to_json())?;
                    fs::write(path.with_extension("csv"), &summary)?;
                    print!("{summary}");
                }
                None => print!("{}", report.to_json()),
            }
            Ok(report.exit_code())
        }
        Command::Generate {
            family,
            size,
            k,
            delta,
            units,
            input,
            format,
            out,
        } => {
            let spec = match family {
                FamilyArg::Spider => FamilySpec::Spider { legs: size },
                FamilyArg::Tmk => {
                    let source = input.ok_or_else(|| {
                        HarnessError::Input("tmk needs the base tree via --input".into())
                    })?;
                    let base = Tree::new(read_graph(&read_source(&source)?, None)?)?;
                    FamilySpec::TMk { base, k }
                }
                FamilyArg::Tmkd => FamilySpec::TmkD { k, delta, units },
            };
            let generated = cmd_generate(&spec)?;
            let text = write_graph(generated.tree.graph(), format.into(), &generated.header);
            emit(out.as_ref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Bench {
            sizes,
            trials,
            seed,
            out,
        } => {
            let table = cmd_bench(&sizes, trials, seed)?;
            emit(out.as_ref(), &table.to_csv())?;
            Ok(EXIT_OK)
        }
        Command::ScanConjectures { nmax, k, out } => {
            let report = cmd_scan_conjectures(nmax, &k)?;
            emit(out.as_ref(), &json(&report))?;
            Ok(report.exit_code())
        }
        Command::Enumerate { nmax, format, out } => {
            let format = Format::from(format);
            let mut text = String::new();
            for t in enumerate_trees(nmax)? {
                text.push_str(&write_graph(t.graph(), format, &[]));
                if format == Format::EdgeList {
                    text.push('\n');
                }
            }
            emit(out.as_ref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("edd: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exit(args: &[&str]) -> i32 {
        let cli = Cli::try_parse_from(std::iter::once("edd").chain(args.iter().copied()));
        match cli {
            Err(e) => e.exit_code(),
            Ok(cli) => run(cli).unwrap_or_else(|e| e.exit_code()),
        }
    }

    fn file(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
        let path = dir.path().join(name);
        fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }

    #[test]
    fn compute_writes_json() {
        let dir = tempfile::tempdir().unwrap();
        let input = file(&dir, "p7.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
        let out = dir.path().join("out.json");
        let out_s = out.to_string_lossy();
        assert_eq!(exit(&["compute", "--input", &input, "--out", &out_s]), 0);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["eternal"], 3);
        assert_eq!(v["method"], "algorithm1");
    }

    #[test]
    fn input_errors_exit_2() {
        let dir = tempfile::tempdir().unwrap();
        let bad = file(&dir, "bad.txt", "0 1\nnot an edge\n");
        assert_eq!(exit(&["compute", "--input", &bad]), 2);
        let cycle = file(&dir, "c4.txt", "0 1\n1 2\n2 3\n3 0\n");
        assert_eq!(exit(&["compute", "--input", &cycle, "--method", "algorithm1"]), 2);
        assert_eq!(exit(&["compute", "--input", &cycle, "--method", "nope"]), 2);
        assert_eq!(exit(&["compute", "--bogus"]), 2);
        assert_eq!(exit(&["scan-conjectures", "--k", "2"]), 2);
    }

    #[test]
    fn guards_exit_3() {
        let dir = tempfile::tempdir().unwrap();
        let long = (0..19).map(|i| format!("{i} {}\n", i + 1)).collect::<String>();
        let p20 = file(&dir, "p20.txt", &long);
        assert_eq!(exit(&["compute", "--input", &p20, "--method", "oracle"]), 3);
        assert_eq!(exit(&["verify", "--nmax", "13"]), 3);
        assert_eq!(exit(&["scan-conjectures", "--nmax", "11"]), 3);
        assert_eq!(exit(&["bench", "--sizes", "20000000", "--trials", "1"]), 3);
        assert_eq!(exit(&["enumerate", "--nmax", "40"]), 3);
    }

    #[test]
    fn verify_outputs_are_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
        for p in [&a, &b] {
            let code = exit(&["verify", "--nmax", "7", "--k", "2,3", "--out", &p.to_string_lossy()]);
            assert_eq!(code, 0);
        }
        let strip = |p: &PathBuf| {
            let mut v: serde_json::Value =
                serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap();
            v.as_object_mut().unwrap().remove("timing");
            v
        };
        assert_eq!(strip(&a), strip(&b));
        assert_eq!(
            fs::read_to_string(a.with_extension("csv")).unwrap(),
            fs::read_to_string(b.with_extension("csv")).unwrap()
        );
    }

    #[test]
    fn critical_theorem_reports_counterexample() {
        // the three-legged spider with legs of length three sits at n = 10
        assert_eq!(exit(&["verify", "--nmax", "10", "--theorems", "critical"]), 1);
        assert_eq!(exit(&["verify", "--nmax", "9", "--theorems", "critical"]), 0);
    }

    #[test]
    fn generate_and_enumerate() {
        let dir = tempfile::tempdir().unwrap();
        let spider = dir.path().join("spider.g6");
        let s = spider.to_string_lossy();
        assert_eq!(exit(&["generate", "--family", "spider", "--size", "4", "--format", "graph6", "--out", &s]), 0);
        let text = fs::read_to_string(&spider).unwrap();
        let g = read_graph(&text, Some(Format::Graph6)).unwrap();
        assert_eq!(g.n(), 13);

        let base = file(&dir, "base.txt", "0 1\n");
        let out = dir.path().join("tmk.txt");
        assert_eq!(exit(&["generate", "--family", "tmk", "--input", &base, "--out", &out.to_string_lossy()]), 0);
        assert_eq!(read_graph(&fs::read_to_string(&out).unwrap(), None).unwrap().n(), 6);
        assert_eq!(exit(&["generate", "--family", "tmk"]), 2);
        assert_eq!(exit(&["generate", "--family", "tmkd", "--k", "2"]), 2);

        let listing = dir.path().join("six.g6");
        assert_eq!(exit(&["enumerate", "--nmax", "6", "--out", &listing.to_string_lossy()]), 0);
        assert_eq!(fs::read_to_string(&listing).unwrap().lines().count(), 6);
    }

    #[test]
    fn bench_and_scan() {
        let dir = tempfile::tempdir().unwrap();
        let csv = dir.path().join("bench.csv");
        assert_eq!(exit(&["bench", "--sizes", "100,200", "--trials", "2", "--seed", "5", "--out", &csv.to_string_lossy()]), 0);
        assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 3);
        let scan = dir.path().join("scan.json");
        // P4 at k = 3: one guard suffices, γ₃ = 1 but γ₁ = 2
        assert_eq!(exit(&["scan-conjectures", "--nmax", "6", "--k", "3", "--out", &scan.to_string_lossy()]), 1);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&scan).unwrap()).unwrap();
        assert_eq!(v["scans"][0]["trees_scanned"], 14);
        let found = v["scans"][0]["counterexamples"].as_array().unwrap();
        assert!(found.iter().any(|c| c == "((())())"));
        assert_eq!(exit(&["scan-conjectures", "--nmax", "3", "--k", "3"]), 0);
    }
}

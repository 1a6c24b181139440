mod render;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hourglass_core::error::{ProjectionError, TripError, WebError};
use hourglass_core::invariants::{count_colorings, invariant_at_q1};
use hourglass_core::projection::{project_plane_partition, project_word, sl2_growth};
use hourglass_core::symmetry_words::{census, count_words_formula, generate_words, validate_word, ClassWordSpec};
use hourglass_core::tableaux::word_to_tableau;
use hourglass_core::trips::{boundary_word, separation_labels, trip_permutation};
use hourglass_core::{enumerate_box, enumerate_class, macmahon_count, Box3, HourglassWeb, LatticeWord, PlanePartition, SymmetryClass};

#[derive(Parser)]
#[command(name = "hourglass", version, about = "Plane partitions, hourglass webs and their lattice words")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate or count plane partitions.
    #[command(subcommand)]
    Pp(PpCmd),
    /// Build webs and read their trips and words.
    #[command(subcommand)]
    Web(WebCmd),
    /// Single-word tools.
    #[command(subcommand)]
    Word(WordCmd),
    /// Class words: generate, validate, count.
    #[command(subcommand)]
    Words(WordsCmd),
    /// Project a class member to a lower-rank word and matching.
    Project(ProjectArgs),
    /// Project a class word.
    ProjectWord(ProjectWordArgs),
    /// Expand the invariant of a web at q = 1.
    Invariant(InvariantArgs),
    /// Run a named verification suite.
    Verify(verify::VerifyArgs),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Tokens,
    Json,
}

#[derive(Subcommand)]
enum PpCmd {
    Enumerate {
        #[arg(long = "box")]
        bx: Box3,
        #[arg(long)]
        class: Option<SymmetryClass>,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Count {
        #[arg(long = "box")]
        bx: Box3,
        /// Use the product formula instead of enumerating.
        #[arg(long)]
        formula: bool,
    },
}

#[derive(Args)]
struct WebInput {
    /// Web JSON or plane partition JSON.
    file: PathBuf,
    /// Restrict a plane partition to the fundamental domain of this class.
    #[arg(long)]
    class: Option<SymmetryClass>,
}

#[derive(Subcommand)]
enum WebCmd {
    /// Print the web JSON.
    Build(WebInput),
    Word {
        #[command(flatten)]
        input: WebInput,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Trips {
        #[command(flatten)]
        input: WebInput,
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Separation label of every edge.
    Labels(WebInput),
    BenzeneClass {
        #[command(flatten)]
        input: WebInput,
        #[arg(long)]
        count: bool,
    },
    Render {
        #[command(flatten)]
        input: WebInput,
        /// Output path; stdout when absent.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        labels: bool,
    },
}

#[derive(Subcommand)]
enum WordCmd {
    Tableau {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 4)]
        rank: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Yamanouchi {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 4)]
        rank: usize,
    },
}

#[derive(Args, Clone)]
struct ClassParams {
    #[arg(long)]
    class: SymmetryClass,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
}

impl ClassParams {
    fn spec(&self) -> Result<ClassWordSpec, CliError> {
        // SPP with only `a` given means a cube.
        let c = if self.class == SymmetryClass::Spp { self.c.or(self.a) } else { self.c };
        ClassWordSpec::new(self.class, self.a, c, self.d).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Subcommand)]
enum WordsCmd {
    Generate {
        #[command(flatten)]
        params: ClassParams,
    },
    Validate {
        #[command(flatten)]
        params: ClassParams,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    Count {
        #[command(flatten)]
        params: ClassParams,
        /// Also count distinct words over every class member.
        #[arg(long)]
        census: bool,
        #[arg(long = "box")]
        bx: Option<Box3>,
    },
}

#[derive(Args)]
struct ProjectArgs {
    #[arg(long)]
    class: SymmetryClass,
    #[arg(long)]
    pp: PathBuf,
    #[arg(long)]
    render_svg: Option<PathBuf>,
}

#[derive(Args)]
struct ProjectWordArgs {
    #[command(flatten)]
    params: ClassParams,
    #[arg(allow_hyphen_values = true)]
    word: String,
}

#[derive(Args)]
struct InvariantArgs {
    #[command(flatten)]
    input: WebInput,
    #[arg(long)]
    count_only: bool,
}

#[derive(Debug)]
pub enum CliError {
    /// Exit 1.
    Verify(String),
    /// Exit 2.
    Usage(String),
    /// Exit 3.
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Verify(m) | CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<WebError> for CliError {
    fn from(e: WebError) -> Self {
        match e {
            WebError::Invariant(_) => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<TripError> for CliError {
    fn from(e: TripError) -> Self {
        match e {
            TripError::Web(w) => w.into(),
            TripError::Runaway(_) | TripError::Improper { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ProjectionError> for CliError {
    fn from(e: ProjectionError) -> Self {
        match e {
            ProjectionError::Trip(t) => t.into(),
            ProjectionError::Web(w) => w.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_pp(path: &Path) -> Result<PlanePartition, CliError> {
    PlanePartition::from_json(&read(path)?).map_err(usage)
}

fn load_web(input: &WebInput) -> Result<HourglassWeb, CliError> {
    let text = read(&input.file)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(usage)?;
    if value.get("vertices").is_some() {
        if input.class.is_some() {
            return Err(CliError::Usage("--class applies to plane partition input".into()));
        }
        return Ok(HourglassWeb::from_json(&text)?);
    }
    let p = PlanePartition::from_json(&text).map_err(usage)?;
    Ok(match input.class {
        None | Some(SymmetryClass::Plain) => HourglassWeb::from_plane_partition(&p)?,
        Some(class) => HourglassWeb::restrict(&p, class)?,
    })
}

fn parse_word(s: &str, rank: usize) -> Result<LatticeWord, CliError> {
    LatticeWord::parse(s, rank).map_err(usage)
}

fn pp_tokens(p: &PlanePartition) -> String {
    p.heights()
        .iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("/")
}

fn word_json(w: &LatticeWord) -> serde_json::Value {
    json!({"rank": w.rank(), "word": w.to_string(), "letters": w.letters(), "pairs": w.pairs()})
}

fn run(cli: Cli) -> Result<String, CliError> {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match cli.cmd {
        Cmd::Pp(PpCmd::Enumerate { bx, class, count_only, format }) => {
            let list = match class {
                None | Some(SymmetryClass::Plain) => {
                    check_box(bx)?;
                    enumerate_box(bx)
                }
                Some(c) => enumerate_class(c, bx).map_err(usage)?,
            };
            if count_only {
                line(list.len().to_string());
            } else {
                for p in &list {
                    line(match format {
                        Format::Tokens => pp_tokens(p),
                        Format::Json => p.to_json(),
                    });
                }
            }
        }
        Cmd::Pp(PpCmd::Count { bx, formula }) => {
            check_box(bx)?;
            let n = if formula { macmahon_count(bx).to_string() } else { enumerate_box(bx).len().to_string() };
            line(n);
        }
        Cmd::Web(cmd) => web(cmd, &mut line)?,
        Cmd::Word(WordCmd::Tableau { word, rank, format }) => {
            let w = parse_word(&word, rank)?;
            let t = word_to_tableau(&w).map_err(usage)?;
            match format {
                Format::Json => line(t.to_json()),
                Format::Tokens => line(t.to_string().trim_end().to_string()),
            }
        }
        Cmd::Word(WordCmd::Yamanouchi { word, rank }) => {
            let w = parse_word(&word, rank)?;
            match w.first_violation() {
                None => line("yamanouchi".into()),
                Some(p) => return Err(CliError::Verify(format!("not yamanouchi at position {}", p + 1))),
            }
        }
        Cmd::Words(WordsCmd::Generate { params }) => {
            for w in generate_words(params.spec()?) {
                line(w.to_string());
            }
        }
        Cmd::Words(WordsCmd::Validate { params, word }) => {
            let spec = params.spec()?;
            let w = parse_word(&word, 4)?;
            if !validate_word(spec, &w) {
                return Err(CliError::Verify(format!("not a word of {spec}")));
            }
            line("valid".into());
        }
        Cmd::Words(WordsCmd::Count { params, census: with_census, bx }) => {
            let spec = params.spec()?;
            line(format!("formula {}", count_words_formula(spec)));
            line(format!("generated {}", generate_words(spec).len()));
            if with_census {
                let bx = bx.unwrap_or(spec.box3());
                let c = census(spec.class(), bx)?;
                line(format!("census {} distinct of {} members", c.distinct_count(), c.total()));
            }
        }
        Cmd::Project(args) => {
            let p = load_pp(&args.pp)?;
            let pr = project_plane_partition(&p, args.class)?;
            if let (Some(path), Some(m)) = (&args.render_svg, &pr.matching) {
                write_out(path, &render::matching_svg(m))?;
            }
            line(
                json!({
                    "source": pr.source.to_string(),
                    "reduced": word_json(&pr.reduced.word),
                    "matching": pr.matching,
                })
                .to_string(),
            );
        }
        Cmd::ProjectWord(args) => {
            let spec = args.params.spec()?;
            let w = parse_word(&args.word, 4)?;
            let r = project_word(spec, &w)?;
            line(r.word.to_string());
            if r.word.rank() == 2 {
                line(sl2_growth(&r.word)?.to_json());
            }
        }
        Cmd::Invariant(args) => {
            let w = load_web(&args.input)?;
            if args.count_only {
                line(count_colorings(&w).to_string());
            } else {
                for m in invariant_at_q1(&w) {
                    line(serde_json::to_string(&m).expect("monomial serializes"));
                }
            }
        }
        Cmd::Verify(args) => return verify::run(args),
    }
    Ok(out)
}

fn check_box(bx: Box3) -> Result<(), CliError> {
    // The enumeration is exhaustive; refuse boxes whose count is absurd.
    if macmahon_count(bx) > 50_000_000u64.into() {
        return Err(CliError::Usage(format!("box {bx} has too many plane partitions to enumerate")));
    }
    Ok(())
}

fn web(cmd: WebCmd, line: &mut impl FnMut(String)) -> Result<(), CliError> {
    match cmd {
        WebCmd::Build(input) => line(load_web(&input)?.to_json()),
        WebCmd::Word { input, format } => {
            let w = boundary_word(&load_web(&input)?)?;
            line(match format {
                Format::Tokens => w.to_string(),
                Format::Json => word_json(&w).to_string(),
            });
        }
        WebCmd::Trips { input, index, format } => {
            let web = load_web(&input)?;
            let perm: Vec<usize> = trip_permutation(&web, index)?.iter().map(|j| j + 1).collect();
            line(match format {
                Format::Tokens => perm.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                Format::Json => json!({"index": index, "perm": perm}).to_string(),
            });
        }
        WebCmd::Labels(input) => {
            let web = load_web(&input)?;
            let lab = separation_labels(&web)?;
            for e in &web.edges {
                line(json!({"edge": e.id, "ends": e.ends, "labels": lab.colors(e.id)}).to_string());
            }
        }
        WebCmd::BenzeneClass { input, count } => {
            let web = load_web(&input)?;
            let class = web.benzene_class()?;
            let word = boundary_word(&web)?;
            for w in &class {
                let other = boundary_word(w)?;
                if other != word {
                    return Err(CliError::Internal(format!("benzene move changed the word to {other}")));
                }
            }
            if count {
                line(class.len().to_string());
            } else {
                for w in &class {
                    line(w.plane_partition()?.to_json());
                }
            }
        }
        WebCmd::Render { input, svg, labels } => {
            let web = load_web(&input)?;
            let lab = if labels { Some(separation_labels(&web)?) } else { None };
            let doc = render::web_svg(&web, lab.as_ref());
            match svg {
                Some(path) => write_out(&path, &doc)?,
                None => line(doc.trim_end().to_string()),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("hourglass: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

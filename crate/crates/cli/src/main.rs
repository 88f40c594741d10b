use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dtreconf_core::dot::{sequence_frames, Elements};
use dtreconf_core::exchange::{shortest_forest_sequence, shortest_spanning_sequence};
use dtreconf_core::families::{
    validate_directed_forest, validate_directed_path, validate_directed_tree,
    validate_rooted_forest, validate_rooted_tree, validate_spanning_tree,
};
use dtreconf_core::feedback::{
    is_feedback_set, reduce_dfvs_to_dfas, FeedbackInstance, FeedbackMode,
};
use dtreconf_core::generate::{generate_instance, GenerateParams};
use dtreconf_core::instance::{Correspondence, InstanceError, InstanceFile, ProblemKind};
use dtreconf_core::oracle::{oracle_distance, Family, FamilySpec};
use dtreconf_core::pathreconf::{
    reduce_reconf_to_slide, reduce_slide_to_reconf, solve_path, to_sequence, PathMode, PathState,
};
use dtreconf_core::reachability::{build_sequence, decide};
use dtreconf_core::rooted::{fixed_root_sequence, rooted_forest_sequence};
use dtreconf_core::sequences::{validate_sequence, ReconfigSequence};
use dtreconf_core::{Digraph, IdSet, TreeView, DEFAULT_STATE_GUARD};
use thiserror::Error;

const GUARD_VAR: &str = "DTRECONF_STATE_GUARD";

/// Reconfiguration of directed trees, forests, paths and feedback sets.
#[derive(Debug, Parser)]
#[command(name = "dtreconf", version)]
struct Cli {
    /// State-space limit for exhaustive searches [env: DTRECONF_STATE_GUARD]
    #[arg(long, global = true)]
    guard: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print YES or NO; exit 0 for YES, 1 for NO.
    Decide { instance: PathBuf },
    /// Print a reconfiguration sequence as a JSON list of id lists.
    Sequence {
        instance: PathBuf,
        /// Also write one DOT file per step into this directory.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Length of the exchange-based shortest sequence (spanning trees, forests).
    Shortest { instance: PathBuf },
    /// Ground truth by exhaustive enumeration.
    Oracle { instance: PathBuf },
    /// Transform an instance and write it with correspondence maps.
    Reduce {
        instance: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a reproducible random instance.
    Generate {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0.3)]
        arc_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Arcs (vertices for paths, set size for feedback sets).
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a sequence file against an instance.
    Verify {
        instance: PathBuf,
        sequence: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Sliding,
    Reconfiguration,
    Dfas,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Tree,
    SpanningTree,
    Forest,
    RootedTree,
    RootedForest,
    PathReconfiguration,
    PathSliding,
    FeedbackVertexSet,
    FeedbackArcSet,
}

impl From<FamilyArg> for ProblemKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Tree => ProblemKind::Tree,
            FamilyArg::SpanningTree => ProblemKind::SpanningTree,
            FamilyArg::Forest => ProblemKind::Forest,
            FamilyArg::RootedTree => ProblemKind::RootedTree,
            FamilyArg::RootedForest => ProblemKind::RootedForest,
            FamilyArg::PathReconfiguration => ProblemKind::PathReconfiguration,
            FamilyArg::PathSliding => ProblemKind::PathSliding,
            FamilyArg::FeedbackVertexSet => ProblemKind::FeedbackVertexSet,
            FamilyArg::FeedbackArcSet => ProblemKind::FeedbackArcSet,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Instance {
        path: PathBuf,
        source: InstanceError,
    },
    #[error("state-space guard of {0} states exceeded; raise it with --guard or {GUARD_VAR}")]
    Guard(usize),
    #[error(transparent)]
    Core(dtreconf_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl From<dtreconf_core::Error> for CliError {
    fn from(e: dtreconf_core::Error) -> Self {
        match e {
            dtreconf_core::Error::GuardExceeded(g) => CliError::Guard(g),
            other => CliError::Core(other),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Loaded {
    inst: InstanceFile,
    graph: Digraph,
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load(path: &Path) -> CliResult<Loaded> {
    let wrap = |source| CliError::Instance {
        path: path.to_owned(),
        source,
    };
    let inst = InstanceFile::parse(&read(path)?).map_err(wrap)?;
    let graph = inst.validate().map_err(wrap)?;
    Ok(Loaded { inst, graph })
}

fn guard(cli: &Cli) -> CliResult<usize> {
    if let Some(g) = cli.guard {
        return Ok(g);
    }
    match std::env::var(GUARD_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("{GUARD_VAR}={v} is not a number"))),
        Err(_) => Ok(DEFAULT_STATE_GUARD),
    }
}

impl Loaded {
    fn tree(&self, ids: &[usize]) -> CliResult<TreeView> {
        let set: IdSet = ids.iter().copied().collect();
        Ok(match (self.inst.problem, self.inst.root) {
            (ProblemKind::RootedTree, Some(r)) | (ProblemKind::Tree, Some(r)) if set.is_empty() => {
                validate_rooted_tree(&self.graph, &set, r)?
            }
            (ProblemKind::RootedTree, Some(r)) => validate_rooted_tree(&self.graph, &set, r)?,
            _ => validate_directed_tree(&self.graph, &set)?,
        })
    }

    fn path(&self, vertices: &[usize]) -> PathState {
        PathState::new(vertices.to_vec())
    }

    fn feedback_mode(&self) -> Option<FeedbackMode> {
        match self.inst.problem {
            ProblemKind::FeedbackVertexSet => Some(FeedbackMode::Vertex),
            ProblemKind::FeedbackArcSet => Some(FeedbackMode::Arc),
            _ => None,
        }
    }

    /// Source and target as element sets (arc ids for paths).
    fn endpoints(&self) -> CliResult<(IdSet, IdSet)> {
        if self.inst.problem.is_path() {
            Ok((
                self.path(&self.inst.source).arcs(&self.graph)?,
                self.path(&self.inst.target).arcs(&self.graph)?,
            ))
        } else {
            Ok((self.inst.source_set(), self.inst.target_set()))
        }
    }

    fn member(&self, s: &IdSet) -> bool {
        let (g, k) = (&self.graph, self.inst.k);
        match self.inst.problem {
            ProblemKind::Tree if k == 0 => s.is_empty(),
            ProblemKind::Tree => s.len() == k && validate_directed_tree(g, s).is_ok(),
            ProblemKind::SpanningTree => validate_spanning_tree(g, s).is_ok(),
            ProblemKind::Forest => s.len() == k && validate_directed_forest(g, s).is_ok(),
            ProblemKind::RootedTree => {
                s.len() == k
                    && self
                        .inst
                        .root
                        .is_some_and(|r| validate_rooted_tree(g, s, r).is_ok())
            }
            ProblemKind::RootedForest => {
                s.len() == k && validate_rooted_forest(g, s, &self.inst.root_set()).is_ok()
            }
            ProblemKind::PathReconfiguration => {
                s.len() + 1 == k && validate_directed_path(g, s).is_ok()
            }
            ProblemKind::PathSliding => false,
            ProblemKind::FeedbackVertexSet => {
                s.len() == k
                    && g.check_vertices(s).is_ok()
                    && is_feedback_set(g, s, FeedbackMode::Vertex)
            }
            ProblemKind::FeedbackArcSet => {
                s.len() == k && g.check_arcs(s).is_ok() && is_feedback_set(g, s, FeedbackMode::Arc)
            }
        }
    }

    /// A reconfiguration sequence, or `None` for a no-instance.
    fn sequence(&self, guard: usize) -> CliResult<Option<ReconfigSequence>> {
        let g = &self.graph;
        let (source, target) = (&self.inst.source, &self.inst.target);
        let result = match self.inst.problem {
            ProblemKind::Tree => {
                let (s, t) = (self.tree(source)?, self.tree(target)?);
                match build_sequence(g, &s, &t) {
                    Err(dtreconf_core::Error::Unreachable) => return Ok(None),
                    other => other?,
                }
            }
            ProblemKind::RootedTree => {
                fixed_root_sequence(g, &self.tree(source)?, &self.tree(target)?)?
            }
            ProblemKind::SpanningTree => {
                let s = validate_spanning_tree(g, &self.inst.source_set())?;
                let t = validate_spanning_tree(g, &self.inst.target_set())?;
                shortest_spanning_sequence(g, &s, &t)?
            }
            ProblemKind::Forest => {
                let s = validate_directed_forest(g, &self.inst.source_set())?;
                let t = validate_directed_forest(g, &self.inst.target_set())?;
                shortest_forest_sequence(g, &s, &t)?
            }
            ProblemKind::RootedForest => {
                let roots = self.inst.root_set();
                let s = validate_rooted_forest(g, &self.inst.source_set(), &roots)?;
                let t = validate_rooted_forest(g, &self.inst.target_set(), &roots)?;
                rooted_forest_sequence(g, &s, &t, &roots)?
            }
            ProblemKind::PathReconfiguration | ProblemKind::PathSliding => {
                let mode = match self.inst.problem {
                    ProblemKind::PathSliding => PathMode::Sliding,
                    _ => PathMode::Reconfiguration,
                };
                match solve_path(g, &self.path(source), &self.path(target), mode, guard)? {
                    Some(paths) => to_sequence(g, &paths)?,
                    None => return Ok(None),
                }
            }
            ProblemKind::FeedbackVertexSet | ProblemKind::FeedbackArcSet => {
                let mode = self.feedback_mode().expect("feedback problem");
                let inst =
                    FeedbackInstance::new(g, self.inst.source_set(), self.inst.target_set(), mode)?;
                match inst.solve(guard)? {
                    Some(seq) => seq,
                    None => return Ok(None),
                }
            }
        };
        Ok(Some(result))
    }

    fn decide(&self, guard: usize) -> CliResult<bool> {
        match self.inst.problem {
            ProblemKind::Tree => Ok(decide(
                &self.graph,
                &self.tree(&self.inst.source)?,
                &self.tree(&self.inst.target)?,
            )?),
            _ => Ok(self.sequence(guard)?.is_some()),
        }
    }

    fn oracle_family(&self) -> CliResult<(Family, usize)> {
        let k = self.inst.k;
        Ok(match self.inst.problem {
            ProblemKind::Tree => (Family::DirectedTree, k),
            ProblemKind::SpanningTree => (Family::SpanningTree, k),
            ProblemKind::Forest => (Family::Forest, k),
            ProblemKind::RootedTree => (Family::RootedTree(self.inst.root.unwrap_or_default()), k),
            ProblemKind::RootedForest => (Family::RootedForest(self.inst.root_set()), k),
            ProblemKind::PathReconfiguration => (Family::Path, k - 1),
            ProblemKind::PathSliding => {
                return Err(CliError::Usage(
                    "path sliding is not a single-exchange family; use `sequence` or `decide`"
                        .into(),
                ))
            }
            ProblemKind::FeedbackVertexSet => (Family::FeedbackVertexSet, k),
            ProblemKind::FeedbackArcSet => (Family::FeedbackArcSet, k),
        })
    }

    fn elements(&self) -> Elements {
        match self.inst.problem {
            ProblemKind::FeedbackVertexSet => Elements::Vertices,
            _ => Elements::Arcs,
        }
    }
}

fn sequence_json(seq: &ReconfigSequence) -> String {
    let mut text = serde_json::to_string(seq).expect("sequence serializes");
    text.push('\n');
    text
}

fn write_dot(dir: &Path, loaded: &Loaded, seq: &ReconfigSequence) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_owned(),
        source,
    })?;
    for (i, frame) in sequence_frames(&loaded.graph, seq, loaded.elements())
        .iter()
        .enumerate()
    {
        write(&dir.join(format!("step-{i:04}.dot")), frame)?;
    }
    Ok(())
}

fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn reduce(loaded: &Loaded, to: Target) -> CliResult<InstanceFile> {
    let inst = &loaded.inst;
    let g = &loaded.graph;
    let expect = |kind: ProblemKind| {
        if inst.problem == kind {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "--to {to:?} needs a {} instance, found {}",
                kind.name(),
                inst.problem.name()
            )))
        }
    };
    let (artifact, problem) = match to {
        Target::Sliding => {
            expect(ProblemKind::PathReconfiguration)?;
            let a =
                reduce_reconf_to_slide(g, &loaded.path(&inst.source), &loaded.path(&inst.target))?;
            (a, ProblemKind::PathSliding)
        }
        Target::Reconfiguration => {
            expect(ProblemKind::PathSliding)?;
            let a =
                reduce_slide_to_reconf(g, &loaded.path(&inst.source), &loaded.path(&inst.target))?;
            (a, ProblemKind::PathReconfiguration)
        }
        Target::Dfas => {
            expect(ProblemKind::FeedbackVertexSet)?;
            let red = reduce_dfvs_to_dfas(g);
            let mut out = InstanceFile::new(
                &red.graph,
                ProblemKind::FeedbackArcSet,
                red.map_vertex_set(&inst.source_set()).to_vec(),
                red.map_vertex_set(&inst.target_set()).to_vec(),
            );
            out.correspondence = Some(Correspondence {
                vertex_map: (0..g.vertex_count()).map(|v| red.in_vertex(v)).collect(),
                arc_map: red.arc_copies.clone(),
            });
            return Ok(out);
        }
    };
    let mut out = InstanceFile::new(
        &artifact.graph,
        problem,
        artifact.source.vertices.clone(),
        artifact.target.vertices.clone(),
    );
    out.correspondence = Some(Correspondence {
        vertex_map: artifact.vertex_map,
        arc_map: artifact.arc_map,
    });
    Ok(out)
}

fn verify(loaded: &Loaded, text: &str, path: &Path) -> CliResult<Result<usize, String>> {
    let seq: ReconfigSequence = serde_json::from_str(text).map_err(|e| {
        CliError::Usage(format!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    if loaded.inst.problem == ProblemKind::PathSliding {
        return Ok(verify_sliding(loaded, &seq));
    }
    let (source, target) = loaded.endpoints()?;
    Ok(
        validate_sequence(&seq, &source, &target, |s| loaded.member(s))
            .map(|()| seq.len())
            .map_err(|v| v.to_string()),
    )
}

/// Sliding sequences must additionally move every step by one slide.
fn verify_sliding(loaded: &Loaded, seq: &ReconfigSequence) -> Result<usize, String> {
    let g = &loaded.graph;
    let paths: Vec<PathState> = seq
        .steps()
        .iter()
        .enumerate()
        .map(|(i, s)| PathState::from_arcs(g, s).map_err(|e| format!("step {i}: {e}")))
        .collect::<Result<_, _>>()?;
    let (source, target) = (
        loaded.path(&loaded.inst.source),
        loaded.path(&loaded.inst.target),
    );
    if paths.first() != Some(&source) {
        return Err("step 0: does not start at the source path".into());
    }
    if paths.last() != Some(&target) {
        return Err(format!(
            "step {}: does not end at the target path",
            paths.len() - 1
        ));
    }
    for (i, w) in paths.windows(2).enumerate() {
        let next = dtreconf_core::pathreconf::path_neighbors(g, &w[0], PathMode::Sliding)
            .map_err(|e| e.to_string())?;
        if !next.contains(&w[1]) {
            return Err(format!("step {}: not a single slide", i + 1));
        }
    }
    Ok(seq.len())
}

fn run(cli: &Cli) -> CliResult<ExitCode> {
    let guard = guard(cli)?;
    match &cli.command {
        Command::Decide { instance } => {
            let yes = load(instance)?.decide(guard)?;
            println!("{}", if yes { "YES" } else { "NO" });
            Ok(ExitCode::from(u8::from(!yes)))
        }
        Command::Sequence { instance, dot } => {
            let loaded = load(instance)?;
            match loaded.sequence(guard)? {
                Some(seq) => {
                    if let Some(dir) = dot {
                        write_dot(dir, &loaded, &seq)?;
                    }
                    print!("{}", sequence_json(&seq));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NO");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Shortest { instance } => {
            let loaded = load(instance)?;
            if !matches!(
                loaded.inst.problem,
                ProblemKind::SpanningTree | ProblemKind::Forest
            ) {
                return Err(CliError::Usage(format!(
                    "`shortest` handles spanning-tree and forest instances, found {}",
                    loaded.inst.problem.name()
                )));
            }
            let seq = loaded
                .sequence(guard)?
                .expect("exchange families always reconfigure");
            println!("{}", seq.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { instance } => {
            let loaded = load(instance)?;
            let (family, k) = loaded.oracle_family()?;
            let (source, target) = loaded.endpoints()?;
            let spec = FamilySpec::new(&loaded.graph, family, k);
            let distance = oracle_distance(&spec, &source, &target, guard)?;
            match distance {
                Some(d) => println!("YES {d}"),
                None => println!("NO"),
            }
            Ok(ExitCode::from(u8::from(distance.is_none())))
        }
        Command::Reduce {
            instance,
            to,
            output,
        } => {
            let out = reduce(&load(instance)?, *to)?;
            emit(output.as_deref(), &out.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            vertices,
            arc_prob,
            seed,
            family,
            k,
            output,
        } => {
            if !(0.0..=1.0).contains(arc_prob) {
                return Err(CliError::Usage(format!(
                    "--arc-prob {arc_prob} is not in [0, 1]"
                )));
            }
            let params = GenerateParams {
                vertices: *vertices,
                arc_probability: *arc_prob,
                seed: *seed,
                problem: (*family).into(),
                k: *k,
            };
            let inst = generate_instance(&params).map_err(|_| {
                CliError::Usage("no instance with these parameters after 1000 attempts".into())
            })?;
            emit(output.as_deref(), &inst.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { instance, sequence } => {
            let loaded = load(instance)?;
            match verify(&loaded, &read(sequence)?, sequence)? {
                Ok(len) => {
                    println!("valid, length {len}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(why) => {
                    println!("invalid: {why}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

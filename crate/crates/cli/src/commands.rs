//! Subcommand implementations; the binary only parses flags and exits
//! with the returned code (0 success, 1 violations/mismatches, 2 errors).

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mbd_core::bitset::VertexSet;
use mbd_core::criticality::classify;
use mbd_core::enumerate::{enumerate_all, enumerate_connected, MAX_ENUMERATION_VERTICES};
use mbd_core::families::{family_membership, FamilySpec};
use mbd_core::graph::Graph;
use mbd_core::graph6::{graph6_decode, graph6_encode};
use mbd_core::solver::{
    game_value, game_value_bruteforce, make_position, optimal_moves, principal_line,
    MoveTranscript, Player, TerminalStatus,
};

use crate::census::{run_census, CensusInput, CONTINUATION_SAMPLES_PER_ORDER};
use crate::checks::{check_lemma_suite, parse_check_list, CheckContext, CheckName};
use crate::ingest::parse_edge_list;
use crate::report::record_json_line;

#[derive(Parser)]
#[command(
    name = "mbd",
    version,
    about = "Maker-Breaker domination game: solve, classify, census, verify, play"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute a game value and one optimal line of play.
    Solve(SolveArgs),
    /// Print one graph's classification record as a JSON line.
    Classify(ClassifyArgs),
    /// Classify a graph stream and run the named checks over it.
    Census(CensusArgs),
    /// Build or recognize members of the named graph families.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Run one named check over every graph up to an order bound.
    Verify(VerifyArgs),
    /// Compare the solver against the brute-force history solver.
    OracleDiff(OracleDiffArgs),
    /// Play the Staller-start game against the optimal engine.
    Play(PlayArgs),
}

/// Exactly one graph source.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph as one graph6 line.
    #[arg(long, value_name = "LINE")]
    pub g6: Option<String>,
    /// Edge-list file: the order on the first line, then "u v" lines.
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph> {
        if let Some(line) = &self.g6 {
            return graph6_decode(line.trim()).map_err(|e| anyhow!("bad graph6 line: {e}"));
        }
        let path = self.edges.as_ref().expect("clap enforces one source");
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        parse_edge_list(&text).map_err(|e| anyhow!("bad edge list {}: {e}", path.display()))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum GameArg {
    /// Dominator moves first.
    D,
    /// Staller moves first.
    S,
}

#[derive(Args)]
pub struct SolveArgs {
    /// Which game to evaluate.
    #[arg(long, value_enum)]
    pub game: GameArg,
    /// Vertices counted as dominated before play starts.
    #[arg(long, value_delimiter = ',', value_name = "V1,V2,...")]
    pub predominated: Vec<usize>,
    #[command(flatten)]
    pub input: GraphInput,
}

#[derive(Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: GraphInput,
}

/// Exactly one census source.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct CensusSource {
    /// All connected graphs of this order (1..=7; 7 needs --slow).
    #[arg(long, value_name = "N")]
    pub builtin: Option<usize>,
    /// File of graph6 lines, one graph per line.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Args)]
pub struct CensusArgs {
    #[command(flatten)]
    pub source: CensusSource,
    /// Comma-separated check names, or "all".
    #[arg(long, default_value = "all", value_name = "LIST")]
    pub checks: String,
    /// Worker threads; 0 means one per CPU.
    #[arg(long, default_value_t = 0, value_name = "K")]
    pub jobs: usize,
    /// Directory that receives report.json and criticals.jsonl.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Permit the expensive builtin order 7.
    #[arg(long)]
    pub slow: bool,
    /// Seed for sampled checks; recorded in the report.
    #[arg(long, default_value_t = 1, value_name = "S")]
    pub seed: u64,
}

#[derive(Subcommand)]
pub enum FamilyCommand {
    /// Build a member from a spec such as H:4, B:2,3, F:2,1,2, Fprime:2,2,2, C5.
    Gen {
        #[arg(value_name = "SPEC")]
        spec: String,
    },
    /// Print which families the graph belongs to.
    Check {
        /// Graph as one graph6 line.
        #[arg(long, value_name = "LINE")]
        g6: String,
    },
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Check name from the fixed vocabulary.
    #[arg(long, value_name = "NAME")]
    pub check: String,
    /// Largest order to enumerate, at most 7.
    #[arg(long, default_value_t = 6, value_name = "N")]
    pub nmax: usize,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 1, value_name = "S")]
    pub seed: u64,
}

#[derive(Args)]
pub struct OracleDiffArgs {
    /// Largest order to compare, at most 7.
    #[arg(long, value_name = "N")]
    pub nmax: usize,
    /// Sampled connected graphs per order above 5.
    #[arg(long, default_value_t = 200, value_name = "K")]
    pub samples: usize,
    /// Sampling seed.
    #[arg(long, default_value_t = 1, value_name = "S")]
    pub seed: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Dominator,
    Staller,
}

#[derive(Args)]
pub struct PlayArgs {
    /// Graph as one graph6 line.
    #[arg(long, value_name = "LINE")]
    pub g6: String,
    /// The side you play; the engine takes the other one.
    #[arg(long = "as", value_enum, value_name = "SIDE")]
    pub side: SideArg,
}

pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Census(args) => cmd_census(&args),
        Command::Family(cmd) => cmd_family(&cmd),
        Command::Verify(args) => cmd_verify(&args),
        Command::OracleDiff(args) => cmd_oracle_diff(&args),
        Command::Play(args) => {
            let g = graph6_decode(args.g6.trim()).map_err(|e| anyhow!("bad graph6 line: {e}"))?;
            let human = match args.side {
                SideArg::Dominator => Player::Dominator,
                SideArg::Staller => Player::Staller,
            };
            let stdin = std::io::stdin();
            let stdout = std::io::stdout();
            play_session(&g, human, stdin.lock(), stdout.lock())
        }
    }
}

fn vertex_set_checked(vertices: &[usize], n: usize) -> Result<VertexSet> {
    for &v in vertices {
        if v >= n {
            bail!("vertex {v} out of range for order {n}");
        }
    }
    Ok(vertices.iter().copied().collect())
}

fn cmd_solve(args: &SolveArgs) -> Result<i32> {
    let g = args.input.load()?;
    let pre = vertex_set_checked(&args.predominated, g.n())?;
    let (name, first) = match args.game {
        GameArg::D => ("gamma_MB", Player::Dominator),
        GameArg::S => ("gamma'_MB", Player::Staller),
    };
    let (value, transcript) = principal_line(&g, pre, first)?;
    println!("{name} = {value}");
    println!("line: {transcript}");
    Ok(0)
}

fn cmd_classify(args: &ClassifyArgs) -> Result<i32> {
    let g = args.input.load()?;
    println!("{}", record_json_line(&classify(&g)));
    Ok(0)
}

fn cmd_census(args: &CensusArgs) -> Result<i32> {
    let checks = parse_check_list(&args.checks).map_err(|e| anyhow!(e))?;
    let input = match (&args.source.builtin, &args.source.file) {
        (Some(n), None) => {
            if !(1..=MAX_ENUMERATION_VERTICES).contains(n) {
                bail!("--builtin supports orders 1..={MAX_ENUMERATION_VERTICES}");
            }
            if *n == MAX_ENUMERATION_VERTICES && !args.slow {
                bail!("--builtin {n} is expensive; pass --slow to run it");
            }
            CensusInput::Builtin(*n)
        }
        (None, Some(path)) => CensusInput::Stream {
            label: path.display().to_string(),
            content: fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
        },
        _ => unreachable!("clap enforces one source"),
    };
    let report = run_census(&input, &checks, args.jobs, args.seed).map_err(|e| anyhow!(e))?;
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        fs::write(dir.join("report.json"), report.to_json() + "\n")?;
        fs::write(dir.join("criticals.jsonl"), report.criticals_jsonl())?;
    }
    println!("{}", report.to_json());
    if report.violations.is_empty() {
        Ok(0)
    } else {
        eprint!("{}", report.violations_table());
        Ok(1)
    }
}

fn cmd_family(cmd: &FamilyCommand) -> Result<i32> {
    match cmd {
        FamilyCommand::Gen { spec } => {
            let spec = FamilySpec::parse(spec)?;
            let (g, roles) = spec.build()?;
            println!("{}", graph6_encode(&g));
            println!("roles: {roles}");
        }
        FamilyCommand::Check { g6 } => {
            let g = graph6_decode(g6.trim()).map_err(|e| anyhow!("bad graph6 line: {e}"))?;
            let flags = family_membership(&g);
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            println!("B: {}", yes_no(flags.b));
            println!("F: {}", yes_no(flags.f));
            println!("F_prime: {}", yes_no(flags.f_prime));
            println!("C5: {}", yes_no(flags.c5));
            println!("H_m: {}", yes_no(flags.h));
        }
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let name: CheckName = args.check.parse().map_err(|e: String| anyhow!(e))?;
    if args.nmax > MAX_ENUMERATION_VERTICES {
        bail!("--nmax supports orders up to {MAX_ENUMERATION_VERTICES}");
    }
    let mut total = 0usize;
    let mut violations = Vec::new();
    let mut index = 0usize;
    println!("check {name} over all graphs with n <= {}", args.nmax);
    for n in 1..=args.nmax {
        let graphs = enumerate_all(n).map_err(|e| anyhow!("{e}"))?;
        let samples = CONTINUATION_SAMPLES_PER_ORDER.div_ceil(graphs.len().max(1));
        let before = violations.len();
        for g in &graphs {
            let ctx = CheckContext {
                seed: args.seed,
                samples,
                index,
            };
            index += 1;
            violations.extend(check_lemma_suite(name, g, &ctx));
        }
        println!(
            "order {n}: {} graphs, {} violations",
            graphs.len(),
            violations.len() - before
        );
        total += graphs.len();
    }
    println!("total: {total} graphs, {} violations", violations.len());
    for v in &violations {
        eprintln!("{}: {}: {}", v.check, v.canonical_id, v.detail);
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

/// Random graph of order `n` with edge probability 1/2, conditioned on
/// connectivity by rejection.
fn random_connected_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen::<bool>() {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("valid random edges");
        if g.components().len() == 1 {
            return g;
        }
    }
}

fn cmd_oracle_diff(args: &OracleDiffArgs) -> Result<i32> {
    if args.nmax > MAX_ENUMERATION_VERTICES {
        bail!("n_max must be at most {MAX_ENUMERATION_VERTICES}, got {}", args.nmax);
    }
    let mut mismatches = Vec::new();
    let compare = |g: &Graph, mismatches: &mut Vec<String>| {
        for first in [Player::Dominator, Player::Staller] {
            let fast = game_value(g, VertexSet::EMPTY, first);
            let slow = game_value_bruteforce(g, VertexSet::EMPTY, first);
            if fast != slow {
                mismatches.push(format!(
                    "g6={} first={first}: solver={fast} oracle={slow}",
                    graph6_encode(g)
                ));
            }
        }
    };
    let exhaustive_max = args.nmax.min(5);
    let mut count = 0usize;
    for n in 1..=exhaustive_max {
        for g in enumerate_connected(n).map_err(|e| anyhow!("{e}"))? {
            compare(&g, &mut mismatches);
            count += 1;
        }
    }
    println!(
        "orders 1..{exhaustive_max} exhaustive: {count} graphs, {} mismatches",
        mismatches.len()
    );
    for n in 6..=args.nmax {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed ^ ((n as u64) << 32));
        let before = mismatches.len();
        for _ in 0..args.samples {
            compare(&random_connected_graph(n, &mut rng), &mut mismatches);
        }
        println!(
            "order {n} sampled: {} graphs, {} mismatches",
            args.samples,
            mismatches.len() - before
        );
    }
    println!("total mismatches: {}", mismatches.len());
    for m in &mismatches {
        eprintln!("mismatch: {m}");
    }
    Ok(if mismatches.is_empty() { 0 } else { 1 })
}

/// Interactive Staller-start game. The engine answers with the
/// lowest-index optimal move; illegal input is re-prompted without
/// consuming the turn.
pub fn play_session<R: BufRead, W: Write>(
    g: &Graph,
    human: Player,
    mut input: R,
    mut out: W,
) -> Result<i32> {
    writeln!(out, "graph: {} ({} vertices)", graph6_encode(g), g.n())?;
    writeln!(
        out,
        "Staller moves first; you play {human}, the engine plays {}",
        human.other()
    )?;
    let mut pos = make_position(g, VertexSet::EMPTY, Player::Staller)?;
    let mut transcript = MoveTranscript { moves: Vec::new() };
    while pos.terminal_status() == TerminalStatus::Ongoing {
        let mover = pos.to_move();
        let v = if mover == human {
            writeln!(
                out,
                "available: {}  undominated: {}",
                pos.available(),
                pos.undominated()
            )?;
            loop {
                write!(out, "your move as {mover}: ")?;
                out.flush()?;
                let mut line = String::new();
                if input.read_line(&mut line)? == 0 {
                    bail!("input ended before the game finished");
                }
                let text = line.trim();
                let Ok(v) = text.parse::<usize>() else {
                    writeln!(out, "illegal move: {text:?} is not a vertex index")?;
                    continue;
                };
                if v >= g.n() {
                    writeln!(out, "illegal move: vertex {v} out of range")?;
                    continue;
                }
                if !pos.available().contains(v) {
                    writeln!(out, "illegal move: vertex {v} already played")?;
                    continue;
                }
                break v;
            }
        } else {
            let v = optimal_moves(&pos)?
                .first()
                .expect("ongoing position has moves");
            writeln!(out, "engine ({mover}) plays {v}")?;
            v
        };
        transcript.moves.push((mover, v));
        pos = pos.apply(v)?;
    }
    let winner = match pos.terminal_status() {
        TerminalStatus::DominatorWon => Player::Dominator,
        TerminalStatus::StallerWon => Player::Staller,
        TerminalStatus::Ongoing => unreachable!("loop ended on a terminal position"),
    };
    writeln!(out, "winner: {winner}")?;
    let moves = if winner == Player::Dominator {
        pos.dominator_claims().len().to_string()
    } else {
        "inf".to_string()
    };
    writeln!(out, "dominator moves: {moves}")?;
    writeln!(out, "transcript: {transcript}")?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbd_core::graph::{cycle, path};

    fn run_play(g: &Graph, human: Player, script: &str) -> String {
        let mut out = Vec::new();
        play_session(g, human, script.as_bytes(), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn engine_dominator_beats_any_staller_on_the_five_cycle() {
        for script in ["0\n1\n2\n3\n4\n", "4\n2\n0\n1\n3\n"] {
            let out = run_play(&cycle(5), Player::Staller, script);
            assert!(out.contains("winner: dominator"), "{out}");
            assert!(out.contains("dominator moves: 2"), "{out}");
        }
    }

    #[test]
    fn engine_staller_beats_any_dominator_on_the_five_path() {
        for script in ["0\n2\n4\n", "2\n0\n4\n", "4\n3\n2\n1\n0\n"] {
            let out = run_play(&path(5), Player::Dominator, script);
            assert!(out.contains("winner: staller"), "{out}");
            assert!(out.contains("dominator moves: inf"), "{out}");
        }
    }

    #[test]
    fn illegal_input_is_reprompted_without_consuming_the_turn() {
        let out = run_play(&cycle(5), Player::Staller, "9\nzap\n0\n0\n1\n2\n3\n4\n");
        assert!(out.contains("illegal move: vertex 9 out of range"), "{out}");
        assert!(out.contains("illegal move: \"zap\" is not a vertex index"), "{out}");
        assert!(out.contains("illegal move: vertex 0 already played"), "{out}");
        assert!(out.contains("winner: dominator"), "{out}");
    }

    #[test]
    fn the_engine_wins_even_from_the_losing_side_of_weak_play() {
        // Engine as Staller on C_5 cannot win against optimal play, but the
        // session still finishes and reports the Dominator's move count.
        let out = run_play(&cycle(5), Player::Dominator, "1\n3\n0\n2\n4\n");
        assert!(out.contains("winner: dominator"), "{out}");
    }

    #[test]
    fn random_connected_graphs_are_connected_and_seed_stable() {
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let g = random_connected_graph(6, &mut a);
            assert_eq!(g.components().len(), 1);
            assert_eq!(g, random_connected_graph(6, &mut b));
        }
    }

    #[test]
    fn flag_shapes_parse() {
        let cli = Cli::try_parse_from([
            "mbd",
            "solve",
            "--game",
            "s",
            "--predominated",
            "0,2",
            "--g6",
            "DQc",
        ])
        .unwrap();
        match cli.command {
            Command::Solve(args) => {
                assert_eq!(args.predominated, vec![0, 2]);
                assert!(matches!(args.game, GameArg::S));
            }
            _ => panic!("wrong subcommand"),
        }
        assert!(Cli::try_parse_from(["mbd", "solve", "--game", "s"]).is_err());
        assert!(Cli::try_parse_from(["mbd", "census"]).is_err());
        let cli =
            Cli::try_parse_from(["mbd", "play", "--g6", "DUW", "--as", "staller"]).unwrap();
        match cli.command {
            Command::Play(args) => assert!(matches!(args.side, SideArg::Staller)),
            _ => panic!("wrong subcommand"),
        }
    }
}

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use moveable_cli::{
    fuzz, parse_scene, parse_trace, render_svg, replay, round_trip, write_trace, Checkpoint, Error, Session,
};
use moveable_core::Scene;

#[derive(Parser)]
#[command(name = "moveable", version, about = "Replay, render and fuzz moveable scenes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a pointer trace to a scene and write a snapshot.
    Replay {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        trace: PathBuf,
        /// Write a checkpoint after every event instead of only at the end.
        #[arg(long)]
        every_event: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a scene as SVG.
    Render {
        #[arg(long)]
        scene: PathBuf,
        /// Outline every cover node.
        #[arg(long)]
        covers: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded random trace and check invariants after every event.
    Fuzz {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        events: u64,
        /// Where to write the generated trace.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Save and reload a scene, failing unless the result is identical.
    Roundtrip {
        #[arg(long)]
        scene: PathBuf,
    },
    /// Line-delimited JSON commands on stdin, one JSON frame per line on stdout.
    Session {
        #[arg(long)]
        scene: Option<PathBuf>,
    },
}

enum Failure {
    Malformed(Error),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Malformed(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Malformed(e.into())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))))
}

fn load_scene(path: &Path) -> Result<Scene, Failure> {
    Ok(parse_scene(&read(path)?)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => match std::io::stdout().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            r => r?,
        },
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Replay { scene, trace, every_event, out } => {
            let scene = load_scene(&scene)?;
            let trace = parse_trace(&read(&trace)?)?;
            let mode = if every_event { Checkpoint::EveryEvent } else { Checkpoint::End };
            let (_, snapshot) = replay(scene, &trace, mode);
            emit(out.as_deref(), &snapshot)
        }
        Command::Render { scene, covers, out } => emit(out.as_deref(), &render_svg(&load_scene(&scene)?, covers)),
        Command::Fuzz { scene, seed, events, out } => {
            let scene = load_scene(&scene)?;
            let events = usize::try_from(events).map_err(|_| Failure::Violation("too many events".into()))?;
            let (trace, report, _) = fuzz(scene, seed, events);
            let text = report.to_text();
            match out {
                Some(p) => {
                    std::fs::write(p, write_trace(&trace))?;
                    emit(None, &text)?;
                }
                None => {
                    emit(None, &write_trace(&trace))?;
                    eprint!("{text}");
                }
            }
            if report.is_clean() {
                Ok(())
            } else {
                Err(Failure::Violation(format!("{} invariant violations", report.violations.len())))
            }
        }
        Command::Roundtrip { scene } => {
            let scene = load_scene(&scene)?;
            let (back, text) = round_trip(&scene)?;
            if back != scene {
                return Err(Failure::Violation("reloaded scene differs from the original".into()));
            }
            emit(None, &text)
        }
        Command::Session { scene } => {
            let scene = match scene {
                Some(p) => load_scene(&p)?,
                None => Scene::new(),
            };
            let mut session = Session::new(scene);
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for line in std::io::stdin().lock().lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                writeln!(out, "{}", session.handle_json(&line))?;
                out.flush()?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("moveable: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Malformed(e)) => {
            eprintln!("moveable: {e}");
            ExitCode::from(2)
        }
    }
}

//! `advisor-match` command line: validate roster files, rank supervisors for
//! a student's ratings, list similar supervisors, and run the JSON service.

pub mod output;

use std::io::Write;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use advisor_match_core::{
    load_roster, recommend, top_peers, AreaSchema, Error, Metric, QueryProfile, Roster, DEFAULT_K,
};
use advisor_match_service::{AppState, CorsPolicy};

pub use output::{render, round_half_up, OutputFormat};

#[derive(Debug, Parser)]
#[command(
    name = "advisor-match",
    version,
    about = "Match students with project supervisors by interest ratings"
)]
pub struct Cli {
    /// Roster CSV file (`name,r1,...,rn` per line, no header).
    #[arg(long, global = true, env = "ADVISOR_MATCH_DATA")]
    pub data: Option<PathBuf>,

    /// Comma-separated interest-area names, in column order.
    #[arg(long, global = true, value_delimiter = ',')]
    pub areas: Option<Vec<String>>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a roster file and print a summary.
    Validate,
    /// Rank supervisors against a student's ratings.
    Recommend {
        /// One rating per area, comma-separated, each in [0, 5].
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            required = true
        )]
        ratings: Vec<f64>,
        #[command(flatten)]
        listing: ListingArgs,
    },
    /// Rank the supervisors most similar to a named supervisor.
    Peers {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        listing: ListingArgs,
    },
    /// Serve the JSON API.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        bind: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Allowed browser origin; repeat for several. Any origin when omitted.
        #[arg(long = "cors-origin")]
        cors_origins: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct ListingArgs {
    #[arg(long, default_value_t = DEFAULT_K, value_parser = parse_k)]
    pub k: usize,
    #[arg(long, default_value = "euclidean-percent")]
    pub metric: Metric,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

fn parse_k(raw: &str) -> Result<usize, String> {
    match raw.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(format!("k must be a positive integer, got {raw:?}")),
    }
}

impl Cli {
    fn schema(&self) -> anyhow::Result<AreaSchema> {
        match &self.areas {
            None => Ok(AreaSchema::default()),
            Some(areas) => Ok(AreaSchema::new(areas.clone())?),
        }
    }

    fn data_path(&self) -> anyhow::Result<&PathBuf> {
        self.data.as_ref().ok_or_else(|| {
            anyhow!("no roster file given; pass --data <path> or set ADVISOR_MATCH_DATA")
        })
    }

    fn roster(&self) -> anyhow::Result<Roster> {
        Ok(load_roster(self.data_path()?, &self.schema()?)?)
    }
}

fn explain(err: Error, schema: &AreaSchema) -> anyhow::Error {
    match err {
        Error::LengthMismatch { .. } | Error::OutOfRange { .. } | Error::NotFinite { .. } => {
            anyhow!(
            "{err}\nusage: --ratings takes {} comma-separated values in [0, 5], one per area: {}",
            schema.len(),
            schema.areas().join(", ")
        )
        }
        Error::UnknownName { ref candidates, .. } if !candidates.is_empty() => {
            anyhow!("{err}\ndid you mean: {}", candidates.join(", "))
        }
        other => other.into(),
    }
}

/// Runs one command, writing its normal output to `out`.
pub fn run(cli: &Cli, out: &mut impl Write) -> anyhow::Result<()> {
    match &cli.command {
        Command::Validate => {
            let roster = cli.roster()?;
            writeln!(
                out,
                "{} profiles, {} areas",
                roster.len(),
                roster.schema().len()
            )?;
        }
        Command::Recommend { ratings, listing } => {
            let roster = cli.roster()?;
            let schema = roster.schema();
            let query = QueryProfile::new(schema, ratings).map_err(|e| explain(e, schema))?;
            let results = recommend(&query, &roster, listing.k, listing.metric)
                .map_err(|e| explain(e, schema))?;
            out.write_all(render(&results, listing.metric, listing.format).as_bytes())?;
        }
        Command::Peers { name, listing } => {
            let roster = cli.roster()?;
            let results = top_peers(&roster, name, listing.k, listing.metric)
                .map_err(|e| explain(e, roster.schema()))?;
            out.write_all(render(&results, listing.metric, listing.format).as_bytes())?;
        }
        Command::Serve {
            bind,
            port,
            cors_origins,
        } => {
            let path = cli.data_path()?;
            let state = AppState::from_file(path, cli.schema()?)?;
            let cors = if cors_origins.is_empty() {
                CorsPolicy::Permissive
            } else {
                CorsPolicy::Origins(cors_origins.clone())
            };
            serve(state, bind, *port, cors)?;
        }
    }
    Ok(())
}

fn serve(state: AppState, bind: &str, port: u16, cors: CorsPolicy) -> anyhow::Result<()> {
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()?;
    runtime.block_on(async move {
        let addr = format!("{bind}:{port}");
        let listener = tokio::net::TcpListener::bind(&addr)
            .await
            .with_context(|| format!("cannot bind {addr}"))?;
        let local: SocketAddr = listener.local_addr()?;
        let snapshot = state.snapshot();
        eprintln!(
            "serving {} profiles on http://{local} (roster {})",
            snapshot.roster.len(),
            snapshot.version
        );
        drop(snapshot);
        let shutdown = async {
            let _ = tokio::signal::ctrl_c().await;
        };
        advisor_match_service::serve(listener, Arc::new(state), cors, shutdown).await?;
        Ok::<_, anyhow::Error>(())
    })?;
    Ok(())
}

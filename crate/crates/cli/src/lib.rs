//! Command line and HTTP front ends for the rumorph engine.
//!
//! [`api`] holds the operations both front ends share; [`cli::run_cli`]
//! and [`service::router`] adapt them to argv and HTTP.

pub mod api;
pub mod cli;
pub mod service;

pub use cli::run_cli;
pub use service::{router, serve, AppState, ServiceConfig};

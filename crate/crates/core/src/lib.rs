pub mod cochain;
pub mod cohomology;
pub mod comp;
pub mod config;
pub mod crosscheck;
pub mod diagram;
pub mod error;
pub mod field;
pub mod group;
pub mod hopf;
pub mod job;
pub mod matrix;
pub mod mutation;
pub mod report;
pub mod vecg;

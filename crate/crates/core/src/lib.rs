//! Exact computation of twisted Lefschetz numbers for self-maps of nil- and
//! solvmanifolds through their Lie-algebra models.

pub mod ratlin;
pub mod liealg;
pub mod repn;
pub mod cecomplex;
pub mod lefschetz;
pub mod nilshadow;
pub mod torus;
pub mod catalog;
pub mod document;
pub mod task;
pub mod samples;

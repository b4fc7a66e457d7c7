pub mod assignments;
pub mod diagrams;
pub mod error;
pub mod paintings;
pub mod symchar;
pub mod coherent;
pub mod charnorm;
pub mod counting;
pub mod selftest;
pub mod cli;

pub mod bench;
pub mod chain;
pub mod complex;
pub mod error;
pub mod field;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod persistence;
pub mod pipeline;
pub mod reduction;
pub mod simplicial;

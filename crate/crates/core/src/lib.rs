pub mod algebra;
pub mod baxterize;
pub mod cli;
pub mod double;
pub mod fixtures;
pub mod hopf;
pub mod io;
pub mod matrix;
pub mod regression;
pub mod scalar;
pub mod taft;
pub mod uqsl2;
pub mod ybe;

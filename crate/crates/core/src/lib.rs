pub mod algebra;
pub mod cli;
pub mod qseries;
pub mod oracle;
pub mod verify;
pub mod zeta;

pub mod builders;
pub mod cli;
mod expr;
pub mod generating;
pub mod incidence;
pub mod poset;
pub mod qsym;
pub mod rank_selection;
pub mod symfunc;
pub mod verify;

pub mod arith;
pub mod asymptotic;
pub mod celltrace;
pub mod cli;
pub mod hecke;
pub mod james;
pub mod linalg;
pub mod preorder;
pub mod report;
pub mod qschur;
pub mod weyl;

pub mod classfile;
pub mod cli;
pub mod error;
pub mod groups;
pub mod hhalgebra;
pub mod linalg;
pub mod multilinear;
pub mod oracle;
pub mod polyring;
pub mod scalars;
pub mod symplectic;
pub mod verify;

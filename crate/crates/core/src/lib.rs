//! Flag systems of maps on surfaces, their automorphism groups, and the
//! consistent flag-walks (holes and Petrie paths) they carry.

#![no_std]

extern crate alloc;

pub mod autgroup;
pub mod classify;
pub mod cyclets;
pub mod families;
pub mod flagmap;
pub mod permgroup;
pub mod walks;

pub use autgroup::{automorphism_group, AutGroup, Automorphism, SubgroupSpec, SymmetryClass};
pub use flagmap::{FaceStructure, FlagSystem, MapError, Surface};
pub use permgroup::{OrbitPartition, Permutation};

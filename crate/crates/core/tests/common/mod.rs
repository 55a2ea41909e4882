#![allow(dead_code)]

use flagwalk_core::families::{
    all_gluings, build_delta, build_h, build_m, cunningham, glue, m12_7, tetrahedron,
};
use flagwalk_core::FlagSystem;
use proptest::prelude::*;

/// Valid one-face maps from the exhaustive gluings of polygons with at most
/// eight sides.
pub fn small_gluing_maps() -> Vec<FlagSystem> {
    (1..=4)
        .flat_map(all_gluings)
        .filter_map(|g| glue(&g).ok())
        .collect()
}

/// Named maps and family members, each with every vertex of the same valence.
pub fn named_maps() -> Vec<FlagSystem> {
    let mut out = vec![tetrahedron(), m12_7(), m12_7().dual(), cunningham()];
    for n in 2..=6 {
        out.push(build_m(n).unwrap());
        out.push(build_m(n).unwrap().dual());
        out.push(build_delta(n).unwrap());
        for a in 0..n {
            out.extend(build_h(n, a).ok());
        }
    }
    out
}

pub fn any_small_map() -> impl Strategy<Value = FlagSystem> {
    let maps = small_gluing_maps();
    (0..maps.len()).prop_map(move |i| maps[i].clone())
}

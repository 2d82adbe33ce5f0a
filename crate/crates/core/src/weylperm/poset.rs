use std::fmt::Write;

use super::{FinitePerm, ParabolicData};
use crate::{Limits, Result};

/// Every relation `u → u t_{ab}` with `a < b` in different blocks and `u(a) < u(b)`.
pub fn single_step_arcs(p: &ParabolicData) -> Vec<(FinitePerm, FinitePerm)> {
    let pairs = p.non_parabolic_pairs();
    let mut arcs = Vec::new();
    for u in FinitePerm::all(p.n()) {
        for &(a, b) in &pairs {
            if u.apply(a) < u.apply(b) {
                arcs.push((u.clone(), u.swap_positions(a, b)));
            }
        }
    }
    arcs.sort();
    arcs
}

/// DOT digraph of [`single_step_arcs`].
pub fn poset_export(p: &ParabolicData, limits: &Limits) -> Result<String> {
    Limits::check("n", p.n(), limits.poset_n)?;
    let set: Vec<String> = p.simple_set().iter().map(|i| i.to_string()).collect();
    let mut out = String::new();
    writeln!(out, "digraph ext_bruhat {{").unwrap();
    writeln!(out, "  // n = {}, simple set = {{{}}}", p.n(), set.join(",")).unwrap();
    for u in FinitePerm::all(p.n()) {
        writeln!(out, "  \"{u}\";").unwrap();
    }
    for (u, w) in single_step_arcs(p) {
        writeln!(out, "  \"{u}\" -> \"{w}\";").unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#![allow(dead_code)]

use kfin_core::{Element, Group};

pub const FAMILIES: &[&str] = &[
    "Z/12", "Z^2", "D6", "Dinf", "S4", "Heis", "Z/2 x D3", "Z/3 x Z", "Z/2 x Z/4 x Z/3",
];

pub const FINITE: &[&str] = &["Z/12", "Z/2 x Z/2 x Z/2", "Z/4 x Z/6", "D4", "D6", "D9", "S3", "S4", "Z/2 x D3"];

pub fn group(spec: &str) -> Group {
    Group::parse(spec).unwrap()
}

/// All elements of a finite group, or the ball of radius 4.
pub fn pool(g: &Group) -> Vec<Element> {
    if g.is_finite() {
        g.enumerate_all().unwrap()
    } else {
        g.enumerate_ball(4).unwrap().iter().map(|(e, _)| e.clone()).collect()
    }
}

pub fn el(g: &Group, s: &str) -> Element {
    g.parse_element(s).unwrap()
}

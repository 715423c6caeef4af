//! Golden tables shared by the integration tests.

#![allow(dead_code)]

use descendent::rational::parse_rational;
use descendent::{DescendentLabel, Rational};
use serde::Deserialize;

#[derive(Deserialize)]
pub struct LinearRow {
    pub key: String,
    pub scale: String,
    pub terms: Vec<LinearTerm>,
}

#[derive(Deserialize)]
pub struct LinearTerm {
    pub label: DescendentLabel,
    pub coeff: String,
}

#[derive(Deserialize)]
pub struct PolynomialRow {
    #[serde(rename = "type")]
    pub triple_type: u32,
    pub terms: Vec<PolynomialTerm>,
}

#[derive(Deserialize)]
pub struct PolynomialTerm {
    pub factors: Vec<DescendentLabel>,
    pub coeff: String,
}

pub fn linear_rows() -> Vec<LinearRow> {
    serde_json::from_str(include_str!("../data/linear_bases.json")).expect("golden linear tables")
}

pub fn polynomial_rows() -> Vec<PolynomialRow> {
    serde_json::from_str(include_str!("../data/polynomial_bases.json"))
        .expect("golden polynomial table")
}

pub fn q(s: &str) -> Rational {
    parse_rational(s).expect("golden rational")
}

pub fn l(v: &[u32]) -> DescendentLabel {
    DescendentLabel::new(v.to_vec())
}

/// Rows of a matrix given as strings.
pub fn matrix(rows: &[&[&str]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()
}

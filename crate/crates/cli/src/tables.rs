//! The four count tables, computed by enumeration, by formula, or both.

use std::collections::HashMap;

use clap::ValueEnum;
use num_bigint::BigUint;
use scottmap::enumerate::{a_n_lambda_formula, a_n_m_formula, generate_all_bounded, lambda_counts, ShapePartition};
use scottmap::flipclasses::{binomial_case, class_counts_by_lambda, class_counts_by_m, reduction_formula_closed};
use scottmap::Error;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    /// Tilings by number of diagonals.
    Anm,
    /// Flip classes by number of diagonals.
    Aen,
    /// Tilings by tile shape.
    AnLambda,
    /// Flip classes by tile shape.
    AenLambda,
}

impl Table {
    pub fn by_shape(self) -> bool {
        matches!(self, Table::AnLambda | Table::AenLambda)
    }

    fn name(self) -> &'static str {
        match self {
            Table::Anm => "anm",
            Table::Aen => "aen",
            Table::AnLambda => "an-lambda",
            Table::AenLambda => "aen-lambda",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enum,
    Formula,
    Both,
}

/// One row of a table: the cells for a single rank, labelled by `m` or by
/// shape.
pub struct Row {
    pub n: u32,
    pub cells: Vec<(String, BigUint)>,
}

impl Row {
    pub fn total(&self) -> BigUint {
        self.cells.iter().map(|(_, c)| c).sum()
    }
}

pub fn rows(table: Table, max_n: u32, method: Method, max_rank: u32) -> Result<Vec<Row>, CliError> {
    if max_n < 3 {
        return Err(Error::InvalidRank(max_n).into());
    }
    let mut out = Vec::new();
    for n in 3..=max_n {
        let row = match method {
            Method::Enum => by_enumeration(table, n, max_rank)?,
            Method::Formula => by_formula(table, n)?,
            Method::Both => {
                let e = by_enumeration(table, n, max_rank)?;
                let f = by_formula(table, n)?;
                for ((label, x), (_, y)) in e.cells.iter().zip(&f.cells) {
                    if x != y {
                        return Err(CliError::Mismatch(format!(
                            "{} at n = {n}, cell {label}: enumeration {x}, formula {y}",
                            table.name()
                        )));
                    }
                }
                e
            }
        };
        out.push(row);
    }
    Ok(out)
}

fn m_label(m: usize) -> String {
    format!("m{m}")
}

fn by_enumeration(table: Table, n: u32, max_rank: u32) -> Result<Row, CliError> {
    let cells = match table {
        Table::Anm => {
            let mut counts = vec![0u64; n as usize - 2];
            for t in generate_all_bounded(n, max_rank)? {
                counts[t.num_diagonals()] += 1;
            }
            counts.into_iter().enumerate().map(|(m, c)| (m_label(m), c.into())).collect()
        }
        Table::Aen => class_counts_by_m(n, max_rank)?
            .into_iter()
            .enumerate()
            .map(|(m, c)| (m_label(m), c.into()))
            .collect(),
        Table::AnLambda => shape_cells(n, &lambda_counts(n, max_rank)?),
        Table::AenLambda => {
            let counts: HashMap<ShapePartition, u64> = class_counts_by_lambda(n, max_rank)?
                .into_iter()
                .map(|(k, v)| (k, v as u64))
                .collect();
            shape_cells(n, &counts)
        }
    };
    Ok(Row { n, cells })
}

fn shape_cells(n: u32, counts: &HashMap<ShapePartition, u64>) -> Vec<(String, BigUint)> {
    ShapePartition::all_of_size(n - 2)
        .into_iter()
        .map(|l| {
            let c = counts.get(&l).copied().unwrap_or(0);
            (l.to_string(), c.into())
        })
        .collect()
}

fn by_formula(table: Table, n: u32) -> Result<Row, CliError> {
    let cells = match table {
        Table::Anm => (0..=n - 3)
            .map(|m| Ok((m_label(m as usize), a_n_m_formula(n, m)?)))
            .collect::<Result<_, Error>>()?,
        Table::Aen => {
            let mut by_m = vec![BigUint::default(); n as usize - 2];
            for l in ShapePartition::all_of_size(n - 2) {
                by_m[l.num_diagonals() as usize] += class_formula(n, &l)?;
            }
            by_m.into_iter().enumerate().map(|(m, c)| (m_label(m), c)).collect()
        }
        Table::AnLambda => ShapePartition::all_of_size(n - 2)
            .into_iter()
            .map(|l| Ok((l.to_string(), a_n_lambda_formula(n, &l)?)))
            .collect::<Result<_, Error>>()?,
        Table::AenLambda => ShapePartition::all_of_size(n - 2)
            .into_iter()
            .map(|l| Ok((l.to_string(), class_formula(n, &l)?)))
            .collect::<Result<_, Error>>()?,
    };
    Ok(Row { n, cells })
}

/// Class count from the reduction formula, falling back to the binomial
/// count for one big tile plus triangles when there are more than four
/// triangles.
fn class_formula(n: u32, l: &ShapePartition) -> Result<BigUint, Error> {
    match reduction_formula_closed(n, l) {
        Err(Error::UnsupportedAlphaOne(k)) => {
            let parts = l.parts();
            if parts[1..].iter().all(|&p| p == 1) {
                binomial_case(n, parts[0] + 2)
            } else {
                Err(Error::UnsupportedAlphaOne(k))
            }
        }
        other => other,
    }
}

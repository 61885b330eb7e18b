//! Verdict report and table rendering.

use std::fmt;

use serde::Serialize;

use crate::{ObstructionRow, Result};

/// Which conclusion the fixed factor selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionBranch {
    /// phi_m of the fixed factor is nonzero: the product invariants must be
    /// pairwise distinct.
    PairwiseDistinct,
    /// phi_m vanishes: the top-phi column must be constant.
    ConstantColumn,
}

/// One assertion outcome, with the offending row pair on failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchCheck {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<(u32, u32)>,
}

impl BranchCheck {
    fn pass() -> Self {
        Self {
            ok: true,
            counterexample: None,
        }
    }

    fn fail(a: u32, b: u32) -> Self {
        Self {
            ok: false,
            counterexample: Some((a, b)),
        }
    }
}

/// The full verification verdict over an obstruction table.
#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    /// phi_m of the fixed factor; selects the branch.
    pub phi_m: i64,
    pub branch: ObstructionBranch,
    /// All family invariants agree with row 0.
    pub family_constant: BranchCheck,
    /// The branch assertion: pairwise-distinct product invariants, or a
    /// constant top-phi column.
    pub branch_check: BranchCheck,
    pub pass: bool,
    pub rows: Vec<ObstructionRow>,
}

impl ObstructionReport {
    pub(crate) fn from_rows(phi_m: i64, rows: Vec<ObstructionRow>) -> Self {
        let family_constant = check_family_constant(&rows);
        let (branch, branch_check) = if phi_m != 0 {
            (
                ObstructionBranch::PairwiseDistinct,
                check_pairwise_distinct(&rows),
            )
        } else {
            (ObstructionBranch::ConstantColumn, check_constant_column(&rows))
        };
        let pass = family_constant.ok && branch_check.ok;
        Self {
            phi_m,
            branch,
            family_constant,
            branch_check,
            pass,
            rows,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization");
        text.push('\n');
        text
    }

    pub fn to_csv(&self) -> Result<String> {
        render_rows_csv(&self.rows)
    }
}

fn check_family_constant(rows: &[ObstructionRow]) -> BranchCheck {
    let Some(first) = rows.first() else {
        return BranchCheck::pass();
    };
    for row in &rows[1..] {
        if row.family_invariant != first.family_invariant {
            return BranchCheck::fail(first.k, row.k);
        }
    }
    BranchCheck::pass()
}

fn check_pairwise_distinct(rows: &[ObstructionRow]) -> BranchCheck {
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            if a.product_invariant == b.product_invariant {
                return BranchCheck::fail(a.k, b.k);
            }
        }
    }
    BranchCheck::pass()
}

fn check_constant_column(rows: &[ObstructionRow]) -> BranchCheck {
    let Some(first) = rows.first() else {
        return BranchCheck::pass();
    };
    for row in &rows[1..] {
        if row.product_phi_top != first.product_phi_top {
            return BranchCheck::fail(first.k, row.k);
        }
    }
    BranchCheck::pass()
}

/// CSV rendering of the table, one row per family member, ordered by k.
pub fn render_rows_csv(rows: &[ObstructionRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "k",
            "family_invariant",
            "product_phi_top",
            "product_invariant_phis",
            "family_constant",
            "two_way_phi_agreement",
        ])
        .map_err(|e| crate::DemoError::Render(e.to_string()))?;
    let first = rows.first();
    for row in rows {
        let family_constant =
            first.map_or(true, |f| f.family_invariant == row.family_invariant);
        let phis = row
            .product_invariant
            .phis
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        writer
            .write_record([
                row.k.to_string(),
                row.family_invariant.to_string(),
                row.product_phi_top.to_string(),
                phis,
                family_constant.to_string(),
                // Rows only exist when both phi routes agreed.
                "true".to_string(),
            ])
            .map_err(|e| crate::DemoError::Render(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| crate::DemoError::Render(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| crate::DemoError::Render(e.to_string()))
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "obstruction table ({} rows)", self.rows.len())?;
        writeln!(
            f,
            "{:>4}  {:>13}  {:<32}  {}",
            "k", "phi_top", "family invariant", "product invariant"
        )?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>4}  {:>13}  {:<32}  {}",
                row.k,
                row.product_phi_top,
                row.family_invariant.to_string(),
                row.product_invariant
            )?;
        }
        writeln!(f, "phi_m(f) = {}", self.phi_m)?;
        writeln!(
            f,
            "family invariant constant: {}",
            verdict_word(self.family_constant)
        )?;
        match self.branch {
            ObstructionBranch::PairwiseDistinct => writeln!(
                f,
                "product invariants pairwise distinct: {}",
                verdict_word(self.branch_check)
            )?,
            ObstructionBranch::ConstantColumn => writeln!(
                f,
                "top phi column constant: {}",
                verdict_word(self.branch_check)
            )?,
        }
        write!(f, "verdict: {}", if self.pass { "PASS" } else { "FAIL" })
    }
}

fn verdict_word(check: BranchCheck) -> String {
    match check.counterexample {
        None if check.ok => "pass".to_string(),
        None => "fail".to_string(),
        Some((a, b)) => format!("fail (rows {a} and {b})"),
    }
}

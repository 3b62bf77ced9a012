//! The reference tables: estimator values, adjoints, chain values and
//! generating-set sizes, rendered as plain text or CSV.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::bigcomb::{fsb, left_adjoint, parse_bignat, BigNat, DEFAULT_ADJOINT_EVALS};
use crate::decimal::{grouped, ratio, scientific};
use crate::error::{Error, Result};
use crate::estimates::Pattern;
use crate::genset::gmin_power;
use crate::poset::{down_set_lattice, DistLattice, Poset, DEFAULT_LATTICE_CAP};

/// Integers with more digits than this are shown in scientific form.
const PLAIN_DIGITS: usize = 15;
const RATIO_PLACES: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    /// `loS(W,n)`, `upS(W,n)` for `n = 3..30`.
    T1,
    /// `upS*(W,k)`, `loS*(W,k)` for `k = 1..15`.
    Adjoints,
    /// `Sp(C_4, n)` for `n` in {17, 18, 2024, 2025, 2026}.
    Chain4,
    /// `loS(V,n)`, `upS(V,n)` for `n = 2..15`.
    VSmall,
    /// `V` estimators at `n` = 2022, 2023.
    VBig,
    /// `W` estimators at `n` = 2022, 2023, 2024.
    WBig,
    /// `gmin` of powers of the 5-element chain, `Dn(V)` and `Dn(W)`.
    Gmin,
}

impl TableId {
    pub const ALL: [TableId; 7] =
        [TableId::T1, TableId::Adjoints, TableId::Chain4, TableId::VSmall, TableId::VBig, TableId::WBig, TableId::Gmin];

    pub fn name(self) -> &'static str {
        match self {
            TableId::T1 => "t1",
            TableId::Adjoints => "adjoints",
            TableId::Chain4 => "chain4",
            TableId::VSmall => "v-small",
            TableId::VBig => "v-big",
            TableId::WBig => "w-big",
            TableId::Gmin => "gmin",
        }
    }

    fn default_range(self) -> Vec<u64> {
        match self {
            TableId::T1 => (3..=30).collect(),
            TableId::Adjoints => (1..=15).collect(),
            TableId::Chain4 => vec![17, 18, 2024, 2025, 2026],
            TableId::VSmall => (2..=15).collect(),
            TableId::VBig => vec![2022, 2023],
            TableId::WBig => vec![2022, 2023, 2024],
            TableId::Gmin => vec![],
        }
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::BadInput(format!("unknown table {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct TableSpec {
    pub id: TableId,
    /// Inclusive `(from, to)` override of the row index (`n` or `k`).
    pub range: Option<(u64, u64)>,
}

impl TableSpec {
    pub fn new(id: TableId) -> Self {
        TableSpec { id, range: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(BigNat),
    /// Already rounded ratio, or `None` when undefined.
    Ratio(Option<String>),
    Text(String),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Int(v) => {
                let digits = v.to_string().len();
                if digits > PLAIN_DIGITS {
                    scientific(v, 7)
                } else {
                    grouped(v)
                }
            }
            Cell::Ratio(r) => r.clone().unwrap_or_else(|| "undefined".into()),
            Cell::Text(t) => t.clone(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Ratio(r) => r.clone().unwrap_or_else(|| "undefined".into()),
            Cell::Text(t) => t.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn render_plain(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::plain).collect()).collect();
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &cells {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = format!("{}\n", self.title);
        let line = |out: &mut String, r: &[String]| {
            let parts: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&mut out, &self.header);
        for r in &cells {
            line(&mut out, r);
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = format!("{}\n", self.header.join(","));
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn rows_for(spec: &TableSpec) -> Vec<u64> {
    let all = spec.id.default_range();
    match spec.range {
        Some((a, b)) => (a..=b).collect(),
        None => all,
    }
}

fn estimator_table(title: &str, pattern: Pattern, ns: &[u64]) -> Table {
    let name = pattern.name();
    let rows = ns
        .iter()
        .map(|&n| {
            let lo = pattern.lower(n);
            let hi = pattern.upper(n);
            let r = ratio(&hi, &lo, RATIO_PLACES);
            vec![Cell::Text(n.to_string()), Cell::Int(lo), Cell::Int(hi), Cell::Ratio(r)]
        })
        .collect();
    Table {
        title: title.into(),
        header: vec!["n".into(), format!("loS({name},n)"), format!("upS({name},n)"), "ratio".into()],
        rows,
    }
}

pub fn build(spec: &TableSpec) -> Result<Table> {
    let ns = rows_for(spec);
    Ok(match spec.id {
        TableId::T1 => estimator_table("Estimators of Sp(W,n)", Pattern::W, &ns),
        TableId::VSmall => estimator_table("Estimators of Sp(V,n)", Pattern::V, &ns),
        TableId::VBig => estimator_table("Estimators of Sp(V,n), large n", Pattern::V, &ns),
        TableId::WBig => estimator_table("Estimators of Sp(W,n), large n", Pattern::W, &ns),
        TableId::Adjoints => {
            if ns.contains(&0) {
                return Err(Error::BadInput("adjoints are tabulated for k >= 1".into()));
            }
            let rows = ns
                .iter()
                .map(|&k| {
                    let kb = BigNat::from(k);
                    let up = left_adjoint(&Pattern::W.upper_fn(), &kb, DEFAULT_ADJOINT_EVALS)?;
                    let lo = left_adjoint(&Pattern::W.lower_fn(), &kb, DEFAULT_ADJOINT_EVALS)?;
                    Ok(vec![Cell::Text(k.to_string()), Cell::Int(up.into()), Cell::Int(lo.into())])
                })
                .collect::<Result<_>>()?;
            Table {
                title: "Left adjoints of the W estimators".into(),
                header: vec!["k".into(), "upS*(W,k)".into(), "loS*(W,k)".into()],
                rows,
            }
        }
        TableId::Chain4 => Table {
            title: "Sp(C4,n) = fsb(n-4)".into(),
            header: vec!["n".into(), "Sp(C4,n)".into()],
            rows: ns.iter().map(|&n| vec![Cell::Text(n.to_string()), Cell::Int(fsb(n as i64 - 4))]).collect(),
        },
        TableId::Gmin => gmin_table()?,
    })
}

/// Exponents of the generating-set table.
pub fn gmin_exponents() -> Vec<(String, BigNat)> {
    ["2022", "2023", "3e606", "5e606"]
        .into_iter()
        .map(|s| (s.replace("e606", "*10^606"), parse_bignat(s).expect("valid literal")))
        .collect()
}

/// The lattices of the generating-set table.
pub fn gmin_lattices() -> Result<Vec<(&'static str, DistLattice)>> {
    Ok(vec![
        ("5-element chain", DistLattice::chain(5)?),
        ("Dn(V)", down_set_lattice(&Poset::v(), DEFAULT_LATTICE_CAP)?),
        ("Dn(W)", down_set_lattice(&Poset::w(), DEFAULT_LATTICE_CAP)?),
    ])
}

fn gmin_table() -> Result<Table> {
    let mut rows = Vec::new();
    for (name, d) in gmin_lattices()? {
        for (label, k) in gmin_exponents() {
            let r = gmin_power(&d, &k)?;
            let value = if r.lo == r.hi { r.lo.to_string() } else { format!("{}..{}", r.lo, r.hi) };
            let mut route = r.route.to_string();
            if r.collapsed {
                route.push_str(" (collapsed)");
            }
            rows.push(vec![Cell::Text(name.into()), Cell::Text(label), Cell::Text(value), Cell::Text(route)]);
        }
    }
    Ok(Table {
        title: "Minimum generating-set sizes of direct powers".into(),
        header: vec!["lattice".into(), "k".into(), "gmin".into(), "route".into()],
        rows,
    })
}

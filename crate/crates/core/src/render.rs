//! Report documents and their plain-text, JSON and LaTeX renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harrison::{
    center_isomorphism_check, cubic_form, harrison_center, hessian, IsomorphismReport, LinearFormMatrix,
};
use crate::linalg::Rational;
use crate::ring::{CasimirReport, IdempotentSet, Relation, UnitGroupReport};
use crate::serde_util::{self, rational_to_string};
use crate::strategy::Registry;
use crate::sym::{CharacterTable, Partition, TableOrder};
use crate::tensor::{ClosedFormPower, RepElement, StructureTensor};

pub const SCHEMA_VERSION: u32 = 1;

/// Irreducible basis a report is expressed in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    pub n: usize,
    pub order: TableOrder,
    pub irreps: Vec<Partition>,
}

impl Basis {
    pub fn of(t: &StructureTensor) -> Self {
        Basis {
            n: t.n(),
            order: t.order(),
            irreps: t.irreps().to_vec(),
        }
    }

    pub fn of_table(table: &CharacterTable) -> Self {
        Basis {
            n: table.n(),
            order: table.order(),
            irreps: table.irreps().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    /// `V3` in published order, `V(3+2+1)` otherwise.
    pub fn label(&self, i: usize) -> String {
        match self.order {
            TableOrder::Paper => format!("V{}", i + 1),
            TableOrder::Canonical => format!("V({})", self.irreps[i]),
        }
    }

    pub fn latex_label(&self, i: usize) -> String {
        match self.order {
            TableOrder::Paper => format!("V_{{{}}}", i + 1),
            TableOrder::Canonical => format!(
                "V_{{({})}}",
                self.irreps[i]
                    .parts()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarrisonReport {
    pub basis: Basis,
    /// `(i, j, k, coeff)` over sorted monomials `x_i x_j x_k`.
    pub cubic: Vec<(usize, usize, usize, u64)>,
    pub hessian: LinearFormMatrix,
    pub dimension: usize,
    #[serde(with = "serde_util::bigint_matrices")]
    pub center_basis: Vec<Vec<Vec<BigInt>>>,
    /// Matrix positions whose entries parametrize the generic element.
    pub parameters: Vec<(usize, usize)>,
    /// `generic[p]` is the center element equal to 1 at parameter `p` and 0
    /// at the others.
    #[serde(with = "serde_util::rational_matrices")]
    pub generic: Vec<Vec<Vec<Rational>>>,
    pub isomorphism: IsomorphismReport,
}

impl HarrisonReport {
    pub fn build(t: &StructureTensor) -> Result<Self> {
        let f = cubic_form(t);
        let center = harrison_center(&f);
        let (parameters, generic) = center.parametrization();
        let cubic = f
            .terms()
            .map(|(&(i, j, k), c)| {
                let c = c
                    .to_u64()
                    .ok_or_else(|| Error::Consistency(format!("cubic coefficient {c} overflows")))?;
                Ok((i, j, k, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HarrisonReport {
            basis: Basis::of(t),
            cubic,
            hessian: hessian(&f),
            dimension: center.dimension(),
            center_basis: center.matrices.iter().map(|m| m.to_rows()).collect(),
            parameters,
            generic: generic.iter().map(|m| m.to_rows()).collect(),
            isomorphism: center_isomorphism_check(t, &center)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Report {
    CharacterTable {
        table: CharacterTable,
    },
    Kronecker {
        basis: Basis,
        indices: [usize; 3],
        value: u64,
    },
    Decomposition {
        basis: Basis,
        left: usize,
        right: usize,
        element: RepElement,
    },
    Power {
        basis: Basis,
        base: usize,
        exponent: usize,
        method: String,
        element: RepElement,
    },
    ClosedForm {
        basis: Basis,
        form: ClosedFormPower,
    },
    Relations {
        basis: Basis,
        relations: Vec<Relation>,
    },
    Idempotents {
        basis: Basis,
        classes: Vec<Partition>,
        set: IdempotentSet,
    },
    Units {
        basis: Basis,
        report: UnitGroupReport,
    },
    Casimir {
        basis: Basis,
        report: CasimirReport,
    },
    Matrices {
        basis: Basis,
        #[serde(with = "serde_util::bigint_matrices")]
        matrices: Vec<Vec<Vec<BigInt>>>,
    },
    Harrison(Box<HarrisonReport>),
}

/// Top-level JSON document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    #[serde(flatten)]
    pub report: Report,
}

pub fn parse_json(text: &str) -> Result<Report> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| Error::Serialization(e.to_string()))?;
    if env.schema_version != SCHEMA_VERSION {
        return Err(Error::Serialization(format!(
            "unsupported schema version {}",
            env.schema_version
        )));
    }
    Ok(env.report)
}

pub trait Renderer {
    fn render(&self, report: &Report) -> Result<String>;
}

pub fn renderers() -> Registry<dyn Renderer> {
    let mut r: Registry<dyn Renderer> = Registry::new("output format");
    r.register("plain", Box::new(Plain));
    r.register("json", Box::new(Json));
    r.register("latex", Box::new(Latex));
    r
}

pub struct Json;

impl Renderer for Json {
    fn render(&self, report: &Report) -> Result<String> {
        let env = Envelope {
            schema_version: SCHEMA_VERSION,
            report: report.clone(),
        };
        let mut text = serde_json::to_string_pretty(&env).map_err(|e| Error::Serialization(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }
}

/// Prime factorization by trial division, e.g. `2^6 * 3^3 * 5^2`.
pub fn factor_string(x: &BigInt) -> String {
    if x.is_zero() || x.abs().is_one() {
        return x.to_string();
    }
    let mut rest = x.abs();
    let mut parts = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            parts.push(if e == 1 { p.to_string() } else { format!("{p}^{e}") });
        }
        p += 1;
        if p > BigInt::from(1_000_000) {
            break;
        }
    }
    if !rest.is_one() {
        parts.push(rest.to_string());
    }
    let sign = if x.is_negative() { "-" } else { "" };
    format!("{sign}{}", parts.join(" * "))
}

fn coeff_prefix(c: &BigInt) -> String {
    if c.abs().is_one() {
        String::new()
    } else {
        c.abs().to_string()
    }
}

/// `V1 + 2V5 - V3` over the basis; `0` when empty.
pub fn element_string(basis: &Basis, mults: &[BigInt]) -> String {
    signed_sum(mults.iter().enumerate().map(|(i, c)| (c.clone(), basis.label(i))))
}

fn signed_sum(terms: impl Iterator<Item = (BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms.filter(|(c, _)| !c.is_zero()) {
        let body = if name.is_empty() {
            c.abs().to_string()
        } else {
            format!("{}{name}", coeff_prefix(&c))
        };
        let neg = c.is_negative();
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn x_name(k: usize, latex: bool) -> String {
    match (k, latex) {
        (0, _) => String::new(),
        (_, false) => format!("x{k}"),
        (_, true) => format!("x_{{{k}}}"),
    }
}

/// `1 + x1 + 5x2 ...` with `x_0 = 1`, ascending index.
fn x_polynomial(coeffs: &[BigInt], latex: bool) -> String {
    signed_sum(coeffs.iter().enumerate().map(|(k, c)| (c.clone(), x_name(k, latex))))
}

fn relation_latex(r: &Relation) -> String {
    let mut out = if r.i == r.j {
        format!("x_{{{}}}^2", r.i)
    } else {
        format!("x_{{{}}}x_{{{}}}", r.j, r.i)
    };
    for (k, c) in r.terms() {
        let name = x_name(k, true);
        let body = if name.is_empty() {
            c.abs().to_string()
        } else {
            format!("{}{name}", coeff_prefix(&c))
        };
        out.push_str(if c.is_negative() { "-" } else { "+" });
        out.push_str(&body);
    }
    out
}

fn base_plain(b: i64) -> String {
    match b {
        1 => "1".into(),
        b if b < 0 => format!("({b})^k"),
        b => format!("{b}^k"),
    }
}

fn base_latex(b: i64) -> String {
    match b {
        1 => "1".into(),
        b if b < 0 => format!("({b})^n"),
        b => format!("{b}^n"),
    }
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn int_rows(m: &[Vec<BigInt>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

pub struct Plain;

impl Renderer for Plain {
    fn render(&self, report: &Report) -> Result<String> {
        let mut out = String::new();
        match report {
            Report::CharacterTable { table } => {
                let basis = Basis::of_table(table);
                writeln!(out, "Character table of S_{} ({} classes)", table.n(), table.s()).unwrap();
                let mut rows = vec![
                    std::iter::once("class".to_string())
                        .chain(table.classes().iter().map(|c| c.cycle_type.to_string()))
                        .collect(),
                    std::iter::once("size".to_string())
                        .chain(table.classes().iter().map(|c| c.size.to_string()))
                        .collect(),
                ];
                for i in 0..table.s() {
                    let mut row = vec![basis.label(i)];
                    row.extend(table.row(i).iter().map(ToString::to_string));
                    rows.push(row);
                }
                out.push_str(&pad_table(&rows));
                if table.order() == TableOrder::Paper {
                    out.push_str("irreps:");
                    for i in 0..table.s() {
                        write!(out, " {}={}", basis.label(i), table.irreps()[i]).unwrap();
                    }
                    out.push('\n');
                }
            }
            Report::Kronecker { value, .. } => writeln!(out, "{value}").unwrap(),
            Report::Decomposition {
                basis,
                left,
                right,
                element,
            } => {
                writeln!(
                    out,
                    "{} x {} = {}",
                    basis.label(*left),
                    basis.label(*right),
                    element_string(basis, &element.mults)
                )
                .unwrap();
                writeln!(out, "multiplicities: {}", join_ints(&element.mults)).unwrap();
            }
            Report::Power {
                basis,
                base,
                exponent,
                element,
                ..
            } => {
                writeln!(
                    out,
                    "{}^{exponent} = {}",
                    basis.label(*base),
                    element_string(basis, &element.mults)
                )
                .unwrap();
                writeln!(out, "multiplicities: {}", join_ints(&element.mults)).unwrap();
            }
            Report::ClosedForm { basis, form } => {
                writeln!(
                    out,
                    "{}^k = sum over targets of (sum_b c_b * b^k) / d",
                    basis.label(form.base_irrep)
                )
                .unwrap();
                let mut rows = vec![std::iter::once("target".to_string())
                    .chain(form.bases.iter().map(|&b| base_plain(b)))
                    .chain(std::iter::once("d".to_string()))
                    .collect::<Vec<_>>()];
                for k in 0..form.coeffs.len() {
                    let mut row = vec![basis.label(k)];
                    row.extend(form.numerators(k).iter().map(ToString::to_string));
                    row.push(form.denominators[k].to_string());
                    rows.push(row);
                }
                out.push_str(&pad_table(&rows));
            }
            Report::Relations { basis, relations } => {
                writeln!(
                    out,
                    "{} relations; x_i = [{}] (x_0 = 1)",
                    relations.len(),
                    label_range(basis)
                )
                .unwrap();
                for (idx, r) in relations.iter().enumerate() {
                    writeln!(out, "y{} = {r}", idx + 1).unwrap();
                }
            }
            Report::Idempotents { classes, set, .. } => {
                for (t, class) in classes.iter().enumerate() {
                    writeln!(
                        out,
                        "e{} [{}] = ({})/{}",
                        t + 1,
                        class,
                        x_polynomial(&set.numerators(t), false),
                        set.denominators[t]
                    )
                    .unwrap();
                }
            }
            Report::Units { report, .. } => {
                writeln!(out, "{} units, {}", report.units.len(), report.group.name()).unwrap();
                for u in &report.units {
                    writeln!(out, "  {}", x_polynomial(&u.mults, false)).unwrap();
                }
            }
            Report::Casimir { report, .. } => {
                writeln!(out, "X = sum of X_i^2:").unwrap();
                out.push_str(&pad_table(&int_rows(&report.gram)));
                writeln!(out, "det X = {} = {}", report.det, factor_string(&report.det)).unwrap();
                writeln!(
                    out,
                    "Casimir number = {} = {}",
                    report.casimir,
                    factor_string(&report.casimir)
                )
                .unwrap();
                writeln!(out, "X^-1(1,1) = {}", rational_to_string(&report.gram_inverse[0][0])).unwrap();
            }
            Report::Matrices { matrices, .. } => {
                for (i, m) in matrices.iter().enumerate() {
                    writeln!(out, "X{}:", i + 1).unwrap();
                    out.push_str(&pad_table(&int_rows(m)));
                }
            }
            Report::Harrison(h) => {
                let iso = &h.isomorphism;
                writeln!(out, "Harrison center of the cubic form of R(S_{})", h.basis.n).unwrap();
                writeln!(out, "cubic form: {}", cubic_string(&h.cubic, false)).unwrap();
                writeln!(out, "dimension: {}", h.dimension).unwrap();
                writeln!(
                    out,
                    "dimension matches s = {}: {}",
                    iso.s,
                    yes_no(iso.dimension_matches)
                )
                .unwrap();
                writeln!(
                    out,
                    "multiplication matrices in center: {}",
                    yes_no(iso.matrices_in_center)
                )
                .unwrap();
                writeln!(
                    out,
                    "multiplication matrices independent: {}",
                    yes_no(iso.matrices_independent)
                )
                .unwrap();
                writeln!(out, "multiplicative: {}", yes_no(iso.multiplicative)).unwrap();
                writeln!(out, "isomorphic: {}", yes_no(iso.is_isomorphism())).unwrap();
                writeln!(out, "generic element:").unwrap();
                out.push_str(&pad_table(&generic_cells(h, false)));
            }
        }
        Ok(out)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join_ints(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn label_range(basis: &Basis) -> String {
    match basis.order {
        TableOrder::Paper => "V_{i+1}".into(),
        TableOrder::Canonical => "i-th irrep in reverse-lex order".into(),
    }
}

fn param_name(p: usize, count: usize, latex: bool) -> String {
    if count <= 26 {
        ((b'a' + p as u8) as char).to_string()
    } else if latex {
        format!("p_{{{}}}", p + 1)
    } else {
        format!("p{}", p + 1)
    }
}

fn generic_cells(h: &HarrisonReport, latex: bool) -> Vec<Vec<String>> {
    let s = h.basis.len();
    let count = h.generic.len();
    (0..s)
        .map(|r| {
            (0..s)
                .map(|c| {
                    let mut out = String::new();
                    for (p, m) in h.generic.iter().enumerate() {
                        let v = &m[r][c];
                        if v.is_zero() {
                            continue;
                        }
                        let name = param_name(p, count, latex);
                        let mag = v.abs();
                        let body = if mag.is_one() {
                            name
                        } else if latex && !mag.is_integer() {
                            format!("\\frac{{{}}}{{{}}}{name}", mag.numer(), mag.denom())
                        } else {
                            format!("{}{name}", rational_to_string(&mag))
                        };
                        if out.is_empty() {
                            if v.is_negative() {
                                out.push('-');
                            }
                        } else {
                            out.push_str(if v.is_negative() { "-" } else { "+" });
                        }
                        out.push_str(&body);
                    }
                    if out.is_empty() {
                        out.push('0');
                    }
                    out
                })
                .collect()
        })
        .collect()
}

fn cubic_string(terms: &[(usize, usize, usize, u64)], latex: bool) -> String {
    let mut parts = Vec::new();
    for &(i, j, k, c) in terms {
        let mut mono = String::new();
        let idx = [i, j, k];
        let mut a = 0;
        while a < 3 {
            let mut e = 1;
            while a + e < 3 && idx[a + e] == idx[a] {
                e += 1;
            }
            let v = idx[a] + 1;
            match (latex, e) {
                (true, 1) => write!(mono, "x_{{{v}}}").unwrap(),
                (true, e) => write!(mono, "x_{{{v}}}^{e}").unwrap(),
                (false, 1) => write!(mono, "x{v}").unwrap(),
                (false, e) => write!(mono, "x{v}^{e}").unwrap(),
            }
            a += e;
        }
        parts.push(if c == 1 { mono } else { format!("{c}{mono}") });
    }
    parts.join(if latex { "+" } else { " + " })
}

pub struct Latex;

fn longtable_header(out: &mut String, cols: usize, header: &[String]) {
    writeln!(out, "\\begin{{longtable}}{{|{}|}}", vec!["c"; cols].join("|")).unwrap();
    out.push_str("\\hline\n");
    writeln!(out, "{} \\\\", header.join(" & ")).unwrap();
    out.push_str("\\hline\n\\endfirsthead\n\\hline\n");
    writeln!(out, "{} \\\\", header.join(" & ")).unwrap();
    out.push_str("\\hline\n\\endhead\n");
}

fn pmatrix<T: ToString>(rows: &[Vec<T>]) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for r in rows {
        let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
        writeln!(out, "{} \\\\", cells.join(" & ")).unwrap();
    }
    out.push_str("\\end{pmatrix}");
    out
}

fn latex_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        let sign = if x.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", x.numer().abs(), x.denom())
    }
}

impl Renderer for Latex {
    fn render(&self, report: &Report) -> Result<String> {
        let mut out = String::new();
        match report {
            Report::CharacterTable { table } => {
                let basis = Basis::of_table(table);
                let mut header = vec![format!("$Irr_{{\\mathbb C}}S_{{{}}}$", table.n())];
                header.extend(
                    table
                        .classes()
                        .iter()
                        .enumerate()
                        .map(|(t, c)| format!("$g_{{{}}}$ ({})", t + 1, c.size)),
                );
                longtable_header(&mut out, table.s() + 1, &header);
                for i in 0..table.s() {
                    let mut row = vec![format!("$\\chi_{{{}}}$", i + 1)];
                    row.extend(table.row(i).iter().map(|v| format!("${v}$")));
                    writeln!(out, "{} \\\\", row.join(" & ")).unwrap();
                }
                out.push_str("\\hline\n");
                writeln!(
                    out,
                    "\\caption{{The complex irreducible characters of $S_{{{}}}$}}",
                    table.n()
                )
                .unwrap();
                out.push_str("\\end{longtable}\n");
                out.push_str("% classes:");
                for (t, c) in table.classes().iter().enumerate() {
                    write!(out, " g_{}={}", t + 1, c.cycle_type).unwrap();
                }
                out.push_str("\n% irreps:");
                for i in 0..table.s() {
                    write!(out, " {}={}", basis.label(i), table.irreps()[i]).unwrap();
                }
                out.push('\n');
            }
            Report::Kronecker { basis, indices, value } => {
                let [i, j, k] = *indices;
                writeln!(
                    out,
                    "$g_{{{} {} {}}} = {value}$ \\quad (multiplicity of ${}$ in ${}\\otimes {}$)",
                    i + 1,
                    j + 1,
                    k + 1,
                    basis.latex_label(k),
                    basis.latex_label(i),
                    basis.latex_label(j)
                )
                .unwrap();
            }
            Report::Decomposition {
                basis,
                left,
                right,
                element,
            } => {
                writeln!(
                    out,
                    "$${}\\otimes {}\\cong {}$$",
                    basis.latex_label(*left),
                    basis.latex_label(*right),
                    latex_direct_sum(basis, &element.mults)
                )
                .unwrap();
            }
            Report::Power {
                basis,
                base,
                exponent,
                element,
                ..
            } => {
                writeln!(
                    out,
                    "$${}^{{\\otimes {exponent}}}\\cong {}$$",
                    basis.latex_label(*base),
                    latex_direct_sum(basis, &element.mults)
                )
                .unwrap();
            }
            Report::ClosedForm { basis, form } => {
                let m = form.bases.len();
                let numer: Vec<String> = form
                    .bases
                    .iter()
                    .enumerate()
                    .map(|(c, &b)| match b {
                        1 => format!("c_{{i{}}}", c + 1),
                        _ => format!("c_{{i{}}}\\cdot {}", c + 1, base_latex(b)),
                    })
                    .collect();
                writeln!(
                    out,
                    "$$ {}^{{\\otimes n}}= \\oplus_{{i=1}}^{{{}}}{{\\frac{{{}}}{{c_{{i{}}}}}V_i}} $$",
                    basis.latex_label(form.base_irrep),
                    form.coeffs.len(),
                    numer.join("+"),
                    m + 1
                )
                .unwrap();
                let mut header = vec!["Bas.".to_string()];
                header.extend((1..=m + 1).map(|c| format!("$c_{{i{c}}}$")));
                longtable_header(&mut out, m + 2, &header);
                for k in 0..form.coeffs.len() {
                    let mut row = vec![format!("${}$", basis.latex_label(k))];
                    row.extend(form.numerators(k).iter().map(|v| format!("${v}$")));
                    row.push(format!("${}$", form.denominators[k]));
                    writeln!(out, "{} \\\\", row.join(" & ")).unwrap();
                    out.push_str("\\hline\n");
                }
                writeln!(
                    out,
                    "\\caption{{Coefficients of the power formula of ${}$}}",
                    basis.latex_label(form.base_irrep)
                )
                .unwrap();
                out.push_str("\\end{longtable}\n");
            }
            Report::Relations { relations, .. } => {
                out.push_str("\\begin{align*}\n");
                let lines: Vec<String> = relations
                    .iter()
                    .enumerate()
                    .map(|(idx, r)| format!("&y_{{{}}}={}", idx + 1, relation_latex(r)))
                    .collect();
                out.push_str(&lines.join(",\\\\\n"));
                out.push_str(".\n\\end{align*}\n");
            }
            Report::Idempotents { set, .. } => {
                out.push_str("\\begin{align*}\n");
                let lines: Vec<String> = (0..set.len())
                    .map(|t| {
                        format!(
                            "e_{{{}}}&=\\frac{{1}}{{{}}}\\left({}\\right)",
                            t + 1,
                            set.denominators[t],
                            x_polynomial(&set.numerators(t), true)
                        )
                    })
                    .collect();
                out.push_str(&lines.join(",\\\\\n"));
                out.push_str(".\n\\end{align*}\n");
            }
            Report::Units { report, .. } => {
                let units: Vec<String> = report.units.iter().map(|u| x_polynomial(&u.mults, true)).collect();
                writeln!(out, "$\\{{{}\\}}$ ({})", units.join(", "), report.group.name()).unwrap();
            }
            Report::Casimir { report, .. } => {
                writeln!(out, "$$X=\\sum_i X_i^2={}$$", pmatrix(&report.gram)).unwrap();
                let inv: Vec<Vec<String>> = report
                    .gram_inverse
                    .iter()
                    .map(|r| r.iter().map(latex_rational).collect())
                    .collect();
                writeln!(out, "$$X^{{-1}}={}$$", pmatrix(&inv)).unwrap();
                writeln!(
                    out,
                    "Casimir number ${}={}$, $\\det X={}$.",
                    report.casimir,
                    factor_string(&report.casimir).replace(" * ", "\\cdot "),
                    factor_string(&report.det).replace(" * ", "\\cdot ")
                )
                .unwrap();
            }
            Report::Matrices { matrices, .. } => {
                for (i, m) in matrices.iter().enumerate() {
                    writeln!(out, "$$X_{{{}}}={}$$", i + 1, pmatrix(m)).unwrap();
                }
            }
            Report::Harrison(h) => {
                writeln!(out, "$$f_{{S_{{{}}}}}={}$$", h.basis.n, cubic_string(&h.cubic, true)).unwrap();
                let s = h.basis.len();
                let hess: Vec<Vec<String>> = (0..s)
                    .map(|a| {
                        (0..s)
                            .map(|b| {
                                let row = h.hessian.entry(a, b);
                                signed_sum(
                                    row.iter()
                                        .enumerate()
                                        .map(|(k, c)| (c.clone(), format!("x_{{{}}}", k + 1))),
                                )
                                .replace(' ', "")
                            })
                            .collect()
                    })
                    .collect();
                writeln!(out, "$$H_f={}$$", pmatrix(&hess)).unwrap();
                writeln!(out, "$$X={}$$", pmatrix(&generic_cells(h, true))).unwrap();
                writeln!(
                    out,
                    "$\\dim Z(f)={}$, isomorphic to $\\mathcal{{R}}(S_{{{}}})$: {}.",
                    h.dimension,
                    h.basis.n,
                    yes_no(h.isomorphism.is_isomorphism())
                )
                .unwrap();
            }
        }
        Ok(out)
    }
}

fn latex_direct_sum(basis: &Basis, mults: &[BigInt]) -> String {
    let parts: Vec<String> = mults
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let label = basis.latex_label(i);
            match c.to_i64() {
                Some(1) => label,
                _ => format!("{c}{label}"),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("\\oplus ")
    }
}

/// Largest `k` such that `p^k` divides `x`.
pub fn valuation(x: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut e = 0;
    while !x.is_zero() && x.is_multiple_of(&p) {
        x /= &p;
        e += 1;
    }
    e
}

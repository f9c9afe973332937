use anyhow::{bail, Result};
use clap::{Args, Subcommand, ValueEnum};
use onebranch_core::closed_forms::{chi_ext_report, chi_nakayama_report, chi_rectangle_report};
use onebranch_core::poset::{chain_name, grid_name};
use onebranch_core::{
    auslander_euler, coxeter_polynomial, default_flip_order, flip_cartan, solve_shift_equation, FormulaReport,
    Target,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::family::{need, FamilyArgs, FamilyKind};
use crate::report::{matrix, object, poly, Status};

pub struct Outcome {
    pub results: Value,
    pub status: Status,
}

impl Outcome {
    fn pass(results: Value) -> Self {
        Outcome { results, status: Status::Pass }
    }
}

pub fn cartan(args: &FamilyArgs) -> Result<Outcome> {
    let fam = args.build()?;
    Ok(Outcome::pass(object([
        ("vertices", json!(fam.names)),
        ("cartan", matrix(&fam.cartan)),
    ])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Matrix,
    Formula,
    Both,
}

#[derive(Clone, Debug, Args, Serialize)]
pub struct CoxeterArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Method::Matrix)]
    pub method: Method,
}

fn formula_for(args: &FamilyArgs) -> Result<FormulaReport> {
    Ok(match args.kind()? {
        FamilyKind::Rect => chi_rectangle_report(need(args.u, "u")?)?,
        FamilyKind::Ext => {
            args.variant()?;
            chi_ext_report(need(args.u, "u")?, need(args.v, "v")?)?
        }
        FamilyKind::Nakayama => chi_nakayama_report(need(args.n, "n")?, need(args.r, "r")?)?,
        FamilyKind::Poset => bail!("no closed form for an arbitrary poset; use --method matrix"),
    })
}

pub fn coxeter(args: &CoxeterArgs) -> Result<Outcome> {
    let mut results = serde_json::Map::new();
    let from_matrix = match args.method {
        Method::Matrix | Method::Both => {
            let p = coxeter_polynomial(&args.family.build()?.cartan)?;
            results.insert("matrix".into(), poly(&p));
            results.insert("palindromic".into(), json!(p.is_palindromic()));
            Some(p)
        }
        Method::Formula => None,
    };
    let from_formula = match args.method {
        Method::Formula | Method::Both => {
            let rep = formula_for(&args.family)?;
            results.insert("formula".into(), poly(&rep.result));
            results.insert("case".into(), json!(rep.case));
            results.insert("numerator".into(), poly(&rep.numerator));
            results.insert("denominator".into(), poly(&rep.denominator));
            Some(rep.result)
        }
        Method::Matrix => None,
    };
    let status = match (from_matrix, from_formula) {
        (Some(a), Some(b)) => {
            results.insert("equal".into(), json!(a == b));
            Status::from_ok(a == b)
        }
        _ => Status::Pass,
    };
    Ok(Outcome { results: Value::Object(results), status })
}

#[derive(Clone, Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LgroupAction {
    /// Solve a·x1 − b·ω = target in L(2,3,u+1) for 1 ≤ b ≤ 2u+1
    Solve {
        #[arg(long)]
        u: usize,
        /// zero, x1, x2 or x3
        #[arg(long)]
        target: String,
    },
    /// Euler form between an Auslander bundle and its j-th Serre twist, 1 ≤ j ≤ 2u+1
    Euler {
        #[arg(long)]
        u: usize,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
    },
}

pub fn lgroup(action: &LgroupAction) -> Result<Outcome> {
    Ok(match action {
        LgroupAction::Solve { u, target } => {
            let t: Target = target.parse()?;
            let sols = solve_shift_equation(*u, t)?;
            Outcome::pass(object([("solutions", json!(sols))]))
        }
        LgroupAction::Euler { u, j } => Outcome::pass(object([("value", json!(auslander_euler(*u, *j)?))])),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// The chain c1..cv
    Chain,
    /// The chain together with row 1 of the rectangle
    ChainRow1,
    /// Row 1 of the rectangle
    Row1,
}

#[derive(Clone, Debug, Args, Serialize)]
pub struct FlipArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Elements of the down-set Y
    #[arg(long, num_args = 1.., conflicts_with = "preset")]
    pub y: Vec<String>,
    /// Named down-set for the rect family and the ext family with --variant upper_in
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Vertex order for the flip Cartan matrix (default: Y first, then the rest)
    #[arg(long, num_args = 1..)]
    pub order: Vec<String>,
}

pub fn flip(args: &FlipArgs) -> Result<Outcome> {
    let x = args.family.build_poset()?;
    let y: Vec<String> = match args.preset {
        None => args.y.clone(),
        Some(p) => {
            let u = need(args.family.u, "u")?;
            let chain = || (1..=args.family.v.unwrap_or(0)).map(chain_name);
            let row = || (1..=u).map(|j| grid_name(1, j));
            match p {
                Preset::Chain => chain().collect(),
                Preset::ChainRow1 => chain().chain(row()).collect(),
                Preset::Row1 => row().collect(),
            }
        }
    };
    let order = if args.order.is_empty() { default_flip_order(&x, &y)? } else { args.order.clone() };
    let f = flip_cartan(&x, &y, &order)?;
    let chi_flip = coxeter_polynomial(&f)?;
    let chi_x = coxeter_polynomial(&x.cartan()?)?;
    let equal = chi_flip == chi_x;
    Ok(Outcome {
        results: object([
            ("y", json!(y)),
            ("order", json!(order)),
            ("flip_cartan", matrix(&f)),
            ("coxeter_flip", poly(&chi_flip)),
            ("coxeter_poset", poly(&chi_x)),
            ("equal", json!(equal)),
        ]),
        status: Status::from_ok(equal),
    })
}

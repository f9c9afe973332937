use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use onebranch_core::{extension_poset, nakayama_cartan, rectangle_poset, ExtensionVariant, IntMatrix, Poset};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// Rectangle poset A(u)
    Rect,
    /// One-branch extension of A(u) by a v-chain
    Ext,
    /// Nakayama algebra N(n,r)
    Nakayama,
    /// Poset read from --poset
    Poset,
}

#[derive(Clone, Debug, Args, Serialize)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub u: Option<usize>,
    #[arg(long)]
    pub v: Option<usize>,
    /// lower_out, upper_out, lower_in or upper_in
    #[arg(long, default_value = "lower_out")]
    pub variant: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Poset file: `elem NAME` lines and `A < B` relations, `#` comments
    #[arg(long)]
    pub poset: Option<PathBuf>,
}

pub struct Family {
    pub names: Vec<String>,
    pub cartan: IntMatrix,
}

pub fn need(value: Option<usize>, flag: &str) -> Result<usize> {
    value.with_context(|| format!("--{flag} is required"))
}

impl FamilyArgs {
    pub fn kind(&self) -> Result<FamilyKind> {
        match (self.family, &self.poset) {
            (Some(k), _) => Ok(k),
            (None, Some(_)) => Ok(FamilyKind::Poset),
            (None, None) => bail!("--family or --poset is required"),
        }
    }

    pub fn variant(&self) -> Result<ExtensionVariant> {
        Ok(self.variant.parse()?)
    }

    pub fn build_poset(&self) -> Result<Poset> {
        Ok(match self.kind()? {
            FamilyKind::Rect => rectangle_poset(need(self.u, "u")?)?,
            FamilyKind::Ext => extension_poset(need(self.u, "u")?, need(self.v, "v")?, self.variant()?)?,
            FamilyKind::Poset => {
                let path = self.poset.as_ref().context("--poset FILE is required")?;
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Poset::parse(&text)?
            }
            FamilyKind::Nakayama => bail!("the nakayama family is not a poset"),
        })
    }

    pub fn build(&self) -> Result<Family> {
        if self.kind()? == FamilyKind::Nakayama {
            let (n, r) = (need(self.n, "n")?, need(self.r, "r")?);
            return Ok(Family { names: (1..=n).map(|i| i.to_string()).collect(), cartan: nakayama_cartan(n, r)? });
        }
        let poset = self.build_poset()?;
        Ok(Family { names: poset.linear_extension(), cartan: poset.cartan()? })
    }
}

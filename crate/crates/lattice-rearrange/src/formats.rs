//! JSON file formats for instances, plans, and errors.
//!
//! Cells, labels, and types are 1-based on disk and 0-based in memory.

use lattice_rearrange_core::{
    Action, Cell, Instance, InstanceError, LabeledInstance, LatticeDims, Plan, PlanCost, PlanStep, TypedInstance,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

fn current_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0}")]
    Version(u32),
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("field `{field}` must not be used with kind `{kind}`")]
    Unexpected { field: &'static str, kind: &'static str },
    #[error("indices are 1-based; found 0 in `{0}`")]
    ZeroIndex(&'static str),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Labeled,
    Typed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default = "current_version")]
    pub format_version: u32,
    pub dims: [u32; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<InstanceKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start_types: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goal_types: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rest: Option<u32>,
}

fn check_version(v: u32) -> Result<(), FormatError> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(FormatError::Version(v))
    }
}

fn to_zero_based(values: Vec<u32>, field: &'static str) -> Result<Vec<u32>, FormatError> {
    values
        .into_iter()
        .map(|v| v.checked_sub(1).ok_or(FormatError::ZeroIndex(field)))
        .collect()
}

fn one_based(values: &[u32]) -> Vec<u32> {
    values.iter().map(|v| v + 1).collect()
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<Instance, FormatError> {
        check_version(self.format_version)?;
        let dims = LatticeDims::new(self.dims[0], self.dims[1])?;
        let kind = match self.kind {
            Some(kind) => kind,
            None if self.pi.is_some() => InstanceKind::Labeled,
            None => InstanceKind::Typed,
        };
        let rest = match self.rest {
            Some(r) => Some(Cell::from_one_based(r).ok_or(FormatError::ZeroIndex("rest"))?),
            None => None,
        };
        let instance: Instance = match kind {
            InstanceKind::Labeled => {
                for (field, present) in [
                    ("start_types", self.start_types.is_some()),
                    ("goal_types", self.goal_types.is_some()),
                    ("k", self.k.is_some()),
                ] {
                    if present {
                        return Err(FormatError::Unexpected { field, kind: "labeled" });
                    }
                }
                let pi = to_zero_based(self.pi.ok_or(FormatError::Missing("pi"))?, "pi")?;
                let li = LabeledInstance::new(dims, pi)?;
                match rest {
                    Some(r) => li.with_rest(r)?.into(),
                    None => li.into(),
                }
            }
            InstanceKind::Typed => {
                if self.pi.is_some() {
                    return Err(FormatError::Unexpected {
                        field: "pi",
                        kind: "typed",
                    });
                }
                let start = to_zero_based(
                    self.start_types.ok_or(FormatError::Missing("start_types"))?,
                    "start_types",
                )?;
                let goal = to_zero_based(self.goal_types.ok_or(FormatError::Missing("goal_types"))?, "goal_types")?;
                let k = self.k.ok_or(FormatError::Missing("k"))?;
                let ti = TypedInstance::new(dims, k, start, goal)?;
                match rest {
                    Some(r) => ti.with_rest(r)?.into(),
                    None => ti.into(),
                }
            }
        };
        Ok(instance)
    }

    pub fn from_instance(instance: &Instance) -> Self {
        let dims = instance.dims();
        let rest = (instance.rest() != Cell::new(0)).then(|| instance.rest().one_based());
        let mut file = Self {
            format_version: FORMAT_VERSION,
            dims: [dims.rows(), dims.cols()],
            kind: None,
            pi: None,
            start_types: None,
            goal_types: None,
            k: None,
            rest,
        };
        match instance {
            Instance::Labeled(li) => {
                file.kind = Some(InstanceKind::Labeled);
                file.pi = Some(one_based(li.pi()));
            }
            Instance::Typed(ti) => {
                file.kind = Some(InstanceKind::Typed);
                file.start_types = Some(one_based(ti.start()));
                file.goal_types = Some(one_based(ti.goal()));
                file.k = Some(ti.k());
            }
        }
        file
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionName {
    Pick,
    Swap,
    Place,
}

impl From<Action> for ActionName {
    fn from(a: Action) -> Self {
        match a {
            Action::Pick => Self::Pick,
            Action::Swap => Self::Swap,
            Action::Place => Self::Place,
        }
    }
}

impl From<ActionName> for Action {
    fn from(a: ActionName) -> Self {
        match a {
            ActionName::Pick => Self::Pick,
            ActionName::Swap => Self::Swap,
            ActionName::Place => Self::Place,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepEntry {
    pub cell: u32,
    pub action: ActionName,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostEntry {
    pub picks: usize,
    pub travel: f64,
    pub total: f64,
}

impl From<PlanCost> for CostEntry {
    fn from(c: PlanCost) -> Self {
        Self {
            picks: c.picks,
            travel: c.travel,
            total: c.total,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanFile {
    #[serde(default = "current_version")]
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver: Option<String>,
    pub steps: Vec<StepEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cost: Option<CostEntry>,
}

impl PlanFile {
    pub fn new(plan: &Plan, solver: Option<&str>, cost: Option<PlanCost>) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            solver: solver.map(str::to_owned),
            steps: plan
                .steps()
                .iter()
                .map(|s| StepEntry {
                    cell: s.cell.one_based(),
                    action: s.action.into(),
                })
                .collect(),
            cost: cost.map(CostEntry::from),
        }
    }

    pub fn to_plan(&self) -> Result<Plan, FormatError> {
        check_version(self.format_version)?;
        self.steps
            .iter()
            .map(|s| {
                let cell = Cell::from_one_based(s.cell).ok_or(FormatError::ZeroIndex("steps.cell"))?;
                Ok(PlanStep::new(cell, s.action.into()))
            })
            .collect()
    }
}

/// Machine-readable error record written to stderr by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorFile {
    pub error: String,
    pub message: String,
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    serde_json::from_str::<InstanceFile>(text)?.into_instance()
}

pub fn parse_plan(text: &str) -> Result<Plan, FormatError> {
    serde_json::from_str::<PlanFile>(text)?.to_plan()
}

pub fn instance_to_json(instance: &Instance) -> String {
    to_json(&InstanceFile::from_instance(instance))
}

pub fn plan_to_json(plan: &Plan, solver: Option<&str>, cost: Option<PlanCost>) -> String {
    to_json(&PlanFile::new(plan, solver, cost))
}

/// Compact JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

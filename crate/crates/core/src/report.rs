//! Pass/fail reports produced by every checker.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::linalg::{is_zero_vec, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub equation: String,
    /// Basis indices the equation was evaluated on.
    pub witness: Vec<usize>,
    /// Left-hand side minus right-hand side.
    pub residual: Vector,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquationStatus {
    pub id: String,
    pub checked: usize,
    pub failures: usize,
    /// Checking of this equation stopped at the witness cap.
    pub truncated: bool,
}

impl EquationStatus {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Witnesses kept per equation; `None` records every violation.
    pub max_witnesses: Option<usize>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_witnesses: Some(10),
        }
    }
}

impl CheckOptions {
    pub fn all_violations() -> Self {
        CheckOptions {
            max_witnesses: None,
        }
    }

    /// Stop each equation at its first violation.
    pub fn first_only() -> Self {
        CheckOptions {
            max_witnesses: Some(1),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub subject: String,
    pub verdict: Verdict,
    pub equations: Vec<EquationStatus>,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub data: Map<String, Value>,
    #[serde(skip)]
    opts: CheckOptions,
}

impl Report {
    pub fn new(subject: impl Into<String>, opts: CheckOptions) -> Self {
        Report {
            subject: subject.into(),
            verdict: Verdict::Pass,
            equations: Vec::new(),
            violations: Vec::new(),
            notes: Vec::new(),
            data: Map::new(),
            opts,
        }
    }

    pub fn options(&self) -> CheckOptions {
        self.opts
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.data.insert(
            key.to_string(),
            serde_json::to_value(v).unwrap_or(Value::Null),
        );
    }

    pub fn equation_passed(&self, id: &str) -> Option<bool> {
        self.equations.iter().find(|e| e.id == id).map(|e| e.passed())
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// Evaluates `residual` on every index tuple of the box `ranges[0] × … ×
    /// ranges[k-1]` and records nonzero results under equation `id`.
    pub fn check_tuples(
        &mut self,
        id: &str,
        ranges: &[usize],
        mut residual: impl FnMut(&[usize]) -> Vector,
    ) {
        let mut st = EquationStatus {
            id: id.to_string(),
            checked: 0,
            failures: 0,
            truncated: false,
        };
        if ranges.iter().all(|&r| r > 0) {
            let mut idx = vec![0usize; ranges.len()];
            'outer: loop {
                st.checked += 1;
                let r = residual(&idx);
                if !is_zero_vec(&r) {
                    st.failures += 1;
                    self.violations.push(Violation {
                        equation: id.to_string(),
                        witness: idx.clone(),
                        residual: r,
                    });
                    if self.opts.max_witnesses.is_some_and(|m| st.failures >= m) {
                        st.truncated = true;
                        break;
                    }
                }
                // odometer, last index fastest
                for pos in (0..idx.len()).rev() {
                    idx[pos] += 1;
                    if idx[pos] < ranges[pos] {
                        continue 'outer;
                    }
                    idx[pos] = 0;
                }
                break;
            }
        }
        if st.failures > 0 {
            self.verdict = Verdict::Fail;
        }
        self.equations.push(st);
    }

    /// Records a single residual (no tuple loop).
    pub fn check_one(&mut self, id: &str, witness: &[usize], residual: Vector) {
        let failed = !is_zero_vec(&residual);
        if failed {
            self.violations.push(Violation {
                equation: id.to_string(),
                witness: witness.to_vec(),
                residual,
            });
            self.verdict = Verdict::Fail;
        }
        if let Some(st) = self.equations.iter_mut().find(|e| e.id == id) {
            st.checked += 1;
            st.failures += failed as usize;
        } else {
            self.equations.push(EquationStatus {
                id: id.to_string(),
                checked: 1,
                failures: failed as usize,
                truncated: false,
            });
        }
    }

    /// Records a boolean condition as an equation with an empty residual.
    pub fn check_flag(&mut self, id: &str, ok: bool) {
        let residual = if ok {
            Vec::new()
        } else {
            vec![crate::Rational::one()]
        };
        self.check_one(id, &[], residual);
    }

    /// Folds another report in, prefixing its equation ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        let p = |id: &str| {
            if prefix.is_empty() {
                id.to_string()
            } else {
                format!("{prefix}/{id}")
            }
        };
        if other.verdict != Verdict::Pass {
            self.verdict = Verdict::Fail;
        }
        for mut e in other.equations {
            e.id = p(&e.id);
            self.equations.push(e);
        }
        for mut v in other.violations {
            v.equation = p(&v.equation);
            self.violations.push(v);
        }
        self.notes.extend(other.notes);
    }

    pub fn failing_equations(&self) -> Vec<&str> {
        self.equations
            .iter()
            .filter(|e| !e.passed())
            .map(|e| e.id.as_str())
            .collect()
    }

    /// One line per equation followed by witnesses, for terminal output.
    pub fn to_pretty(&self) -> String {
        let mut s = format!(
            "{}: {}\n",
            self.subject,
            match self.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Error => "ERROR",
            }
        );
        for e in &self.equations {
            s.push_str(&format!(
                "  {:<40} {} ({} checked{})\n",
                e.id,
                if e.passed() { "ok" } else { "FAILED" },
                e.checked,
                if e.failures > 0 {
                    format!(
                        ", {} failing{}",
                        e.failures,
                        if e.truncated { "+" } else { "" }
                    )
                } else {
                    String::new()
                }
            ));
        }
        for v in &self.violations {
            let r: Vec<String> = v.residual.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!(
                "  witness {} at {:?}: residual [{}]\n",
                v.equation,
                v.witness,
                r.join(", ")
            ));
        }
        for n in &self.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        for (k, v) in &self.data {
            s.push_str(&format!("  {k}: {v}\n"));
        }
        s
    }
}

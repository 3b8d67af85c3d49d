//! Sure Thing Principle: if every cell of a partition prescribes the same
//! act, the unconditional prescription must be that act. The rounding rule
//! breaks this; expected-value maximization cannot.

use rayon::prelude::*;

use crate::engine::{choose, Act, ChoiceRule, DecisionProblem, Outcome, State};
use crate::lab::LabError;
use crate::scalar::Scalar;

/// What a rule prescribed unconditionally and on each cell of a partition.
#[derive(Debug, Clone, PartialEq)]
pub struct StpReport {
    pub unconditional_choice: String,
    /// One entry per partition cell, in the order the cells were given.
    pub conditional_choices: Vec<(Vec<String>, String)>,
    pub violated: bool,
    pub witness: Option<StpWitness>,
}

/// The triple demonstrating a violation.
#[derive(Debug, Clone, PartialEq)]
pub struct StpWitness {
    /// The act every conditional prescription agreed on.
    pub agreed_act: String,
    /// The differing unconditional prescription.
    pub unconditional: String,
}

/// Run `rule` unconditionally and conditioned on each cell of `partition`.
///
/// The partition must carve the state space exactly: nonempty disjoint
/// cells, every state covered, every cell with positive prior.
pub fn check_stp<S: Scalar>(
    problem: &DecisionProblem<S>,
    rule: &ChoiceRule<S>,
    partition: &[Vec<String>],
) -> Result<StpReport, LabError> {
    validate_partition(problem, partition)?;
    let unconditional = choose(problem, rule)?.best;
    let mut conditional = Vec::with_capacity(partition.len());
    for cell in partition {
        let labels: Vec<&str> = cell.iter().map(String::as_str).collect();
        let conditioned = problem
            .condition(&labels)
            .map_err(|e| LabError::InvalidPartition(e.to_string()))?;
        conditional.push((cell.clone(), choose(&conditioned, rule)?.best));
    }
    let first = conditional[0].1.clone();
    let agreed = conditional
        .iter()
        .all(|(_, act)| *act == first)
        .then_some(first);
    let violated = matches!(&agreed, Some(a) if *a != unconditional);
    let witness = if violated {
        Some(StpWitness {
            agreed_act: agreed.unwrap(),
            unconditional: unconditional.clone(),
        })
    } else {
        None
    };
    Ok(StpReport {
        unconditional_choice: unconditional,
        conditional_choices: conditional,
        violated,
        witness,
    })
}

fn validate_partition<S: Scalar>(
    problem: &DecisionProblem<S>,
    partition: &[Vec<String>],
) -> Result<(), LabError> {
    if partition.is_empty() {
        return Err(LabError::InvalidPartition("no cells".into()));
    }
    let mut seen = Vec::new();
    for cell in partition {
        if cell.is_empty() {
            return Err(LabError::InvalidPartition("empty cell".into()));
        }
        for label in cell {
            if problem.states().iter().all(|s| s.label != *label) {
                return Err(LabError::InvalidPartition(format!("unknown state {label:?}")));
            }
            if seen.contains(label) {
                return Err(LabError::InvalidPartition(format!(
                    "state {label:?} appears in two cells"
                )));
            }
            seen.push(label.clone());
        }
        let mass = problem
            .states()
            .iter()
            .filter(|s| cell.contains(&s.label))
            .fold(S::zero(), |acc, s| acc + s.prior.clone());
        if mass.is_zero() {
            return Err(LabError::InvalidPartition(format!(
                "cell {cell:?} has zero prior"
            )));
        }
    }
    if seen.len() != problem.states().len() {
        return Err(LabError::InvalidPartition("cells do not cover the state space".into()));
    }
    Ok(())
}

/// Rational lattice defining an exhaustive family of 2-act, 2-state
/// problems: one prior per entry of `priors` (the second state gets the
/// complement), and one outcome per (deontic weight, value) pair in each
/// matrix cell.
#[derive(Debug, Clone, PartialEq)]
pub struct GridBounds<S> {
    pub priors: Vec<S>,
    pub deontic_weights: Vec<S>,
    pub values: Vec<S>,
}

impl<S: Scalar> GridBounds<S> {
    /// Number of problems the bounds enumerate.
    pub fn problem_count(&self) -> u128 {
        let menu = (self.deontic_weights.len() * self.values.len()) as u128;
        self.priors.len() as u128 * menu.pow(4)
    }
}

/// A problem on which `check_stp` reported a violation.
#[derive(Debug, Clone, PartialEq)]
pub struct StpViolation<S> {
    pub problem: DecisionProblem<S>,
    pub report: StpReport,
}

/// Exhaustively enumerate the grid and collect every problem where `rule`
/// violates the principle. Enumeration order is fixed (priors outermost,
/// then the four cells in row-major order), so results are reproducible;
/// the walk itself is parallel.
pub fn search_stp_violations<S: Scalar + Send + Sync>(
    rule: &ChoiceRule<S>,
    bounds: &GridBounds<S>,
) -> Result<Vec<StpViolation<S>>, LabError> {
    if bounds.priors.is_empty() {
        return Err(LabError::EmptyBounds("priors".into()));
    }
    if bounds.deontic_weights.is_empty() {
        return Err(LabError::EmptyBounds("deontic weights".into()));
    }
    if bounds.values.is_empty() {
        return Err(LabError::EmptyBounds("values".into()));
    }
    for p in &bounds.priors {
        if *p <= S::zero() || *p >= S::one() {
            return Err(LabError::PriorOutOfRange(p.to_string()));
        }
    }

    for d in &bounds.deontic_weights {
        if *d > S::zero() {
            return Err(LabError::Engine(
                crate::engine::EngineError::PositiveDeonticWeight(d.to_string()),
            ));
        }
    }
    let menu: Vec<Outcome<S>> = bounds
        .deontic_weights
        .iter()
        .flat_map(|d| {
            bounds.values.iter().map(move |v| {
                Outcome::new(format!("d{d}v{v}"), d.clone(), v.clone())
                    .expect("grid weights are validated non-positive")
            })
        })
        .collect();

    let m = menu.len();
    let mut indices = Vec::with_capacity(bounds.priors.len() * m * m * m * m);
    for pi in 0..bounds.priors.len() {
        for c00 in 0..m {
            for c01 in 0..m {
                for c10 in 0..m {
                    for c11 in 0..m {
                        indices.push((pi, c00, c01, c10, c11));
                    }
                }
            }
        }
    }

    let partition = vec![vec!["s0".to_string()], vec!["s1".to_string()]];
    let violations: Vec<Option<StpViolation<S>>> = indices
        .par_iter()
        .map(|&(pi, c00, c01, c10, c11)| {
            let problem = grid_problem(&bounds.priors[pi], &menu, [c00, c01, c10, c11]);
            let report = check_stp(&problem, rule, &partition)
                .expect("grid problems are valid by construction");
            report.violated.then_some(StpViolation { problem, report })
        })
        .collect();
    Ok(violations.into_iter().flatten().collect())
}

/// Canonical form of one grid instance; exposed so callers can locate a
/// specific parameter combination inside search results.
pub(crate) fn grid_problem<S: Scalar>(
    prior: &S,
    menu: &[Outcome<S>],
    cells: [usize; 4],
) -> DecisionProblem<S> {
    let states = vec![
        State { label: "s0".into(), prior: prior.clone() },
        State { label: "s1".into(), prior: S::one() - prior.clone() },
    ];
    let acts = vec![
        Act {
            label: "a0".into(),
            outcomes: vec![menu[cells[0]].clone(), menu[cells[1]].clone()],
        },
        Act {
            label: "a1".into(),
            outcomes: vec![menu[cells[2]].clone(), menu[cells[3]].clone()],
        },
    ];
    DecisionProblem::new(states, acts).expect("grid problem construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Rational};

    fn revolver() -> DecisionProblem<Rational> {
        let states = vec![
            State { label: "chamber1".into(), prior: rat(1, 100) },
            State { label: "other".into(), prior: rat(99, 100) },
        ];
        let acts = vec![
            Act {
                label: "Pull".into(),
                outcomes: vec![
                    Outcome::new("kill", rat(-100, 1), rat(-1, 1)).unwrap(),
                    Outcome::new("scare", rat(0, 1), rat(-1, 100)).unwrap(),
                ],
            },
            Act {
                label: "NotPull".into(),
                outcomes: vec![
                    Outcome::harmless("deaths", rat(-1000, 1)),
                    Outcome::harmless("nothing", rat(0, 1)),
                ],
            },
        ];
        DecisionProblem::new(states, acts).unwrap()
    }

    fn chambers() -> Vec<Vec<String>> {
        vec![vec!["chamber1".into()], vec!["other".into()]]
    }

    #[test]
    fn rounding_rule_violates_stp_on_the_revolver() {
        let rule = ChoiceRule::relv(rat(10, 1)).unwrap();
        let report = check_stp(&revolver(), &rule, &chambers()).unwrap();
        assert_eq!(report.unconditional_choice, "Pull");
        assert_eq!(report.conditional_choices[0].1, "NotPull");
        assert_eq!(report.conditional_choices[1].1, "NotPull");
        assert!(report.violated);
        assert_eq!(report.witness.as_ref().unwrap().agreed_act, "NotPull");
    }

    #[test]
    fn ev_rule_satisfies_stp_on_the_revolver() {
        let report = check_stp(&revolver(), &ChoiceRule::Ev, &chambers()).unwrap();
        assert!(!report.violated);
        assert!(report.witness.is_none());
    }

    #[test]
    fn single_state_problem_cannot_violate() {
        let states = vec![State { label: "only".into(), prior: rat(1, 1) }];
        let acts = vec![
            Act { label: "a".into(), outcomes: vec![Outcome::harmless("x", rat(1, 1))] },
            Act { label: "b".into(), outcomes: vec![Outcome::harmless("y", rat(0, 1))] },
        ];
        let problem = DecisionProblem::new(states, acts).unwrap();
        let partition = vec![vec!["only".to_string()]];
        for rule in [
            ChoiceRule::relv(rat(10, 1)).unwrap(),
            ChoiceRule::Ev,
            ChoiceRule::discount(rat(1, 100)).unwrap(),
        ] {
            assert!(!check_stp(&problem, &rule, &partition).unwrap().violated);
        }
    }

    #[test]
    fn partition_validation_catches_bad_cells() {
        let p = revolver();
        let rule = ChoiceRule::Ev;
        assert!(matches!(
            check_stp(&p, &rule, &[]).unwrap_err(),
            LabError::InvalidPartition(_)
        ));
        let overlapping = vec![
            vec!["chamber1".to_string()],
            vec!["chamber1".to_string(), "other".to_string()],
        ];
        assert!(matches!(
            check_stp(&p, &rule, &overlapping).unwrap_err(),
            LabError::InvalidPartition(_)
        ));
        let partial = vec![vec!["chamber1".to_string()]];
        assert!(matches!(
            check_stp(&p, &rule, &partial).unwrap_err(),
            LabError::InvalidPartition(_)
        ));
    }

    fn small_bounds() -> GridBounds<Rational> {
        GridBounds {
            priors: vec![rat(1, 100), rat(1, 2)],
            deontic_weights: vec![rat(0, 1), rat(-100, 1)],
            values: vec![rat(0, 1), rat(-1, 1), rat(-1, 100), rat(-1000, 1)],
        }
    }

    #[test]
    fn search_finds_the_revolver_instance_for_the_rounding_rule() {
        let rule = ChoiceRule::relv(rat(10, 1)).unwrap();
        let found = search_stp_violations(&rule, &small_bounds()).unwrap();
        assert!(!found.is_empty());

        // The revolver parameters live in this grid: prior 1/100 with cells
        // (kill, scare / deaths, nothing). Locate that exact instance.
        let bounds = small_bounds();
        let menu: Vec<Outcome<Rational>> = bounds
            .deontic_weights
            .iter()
            .flat_map(|d| {
                bounds
                    .values
                    .iter()
                    .map(move |v| Outcome::new(format!("d{d}v{v}"), d.clone(), v.clone()).unwrap())
            })
            .collect();
        let kill = menu.iter().position(|o| *o.deontic() == rat(-100, 1) && *o.value() == rat(-1, 1)).unwrap();
        let scare = menu.iter().position(|o| *o.deontic() == rat(0, 1) && *o.value() == rat(-1, 100)).unwrap();
        let deaths = menu.iter().position(|o| *o.deontic() == rat(0, 1) && *o.value() == rat(-1000, 1)).unwrap();
        let nothing = menu.iter().position(|o| *o.deontic() == rat(0, 1) && *o.value() == rat(0, 1)).unwrap();
        let revolver_instance = grid_problem(&rat(1, 100), &menu, [kill, scare, deaths, nothing]);
        assert!(found.iter().any(|v| v.problem == revolver_instance));
    }

    #[test]
    fn search_finds_nothing_for_ev() {
        let found = search_stp_violations(&ChoiceRule::Ev, &small_bounds()).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn search_finds_nothing_without_duties() {
        let rule = ChoiceRule::relv(rat(10, 1)).unwrap();
        let bounds = GridBounds {
            priors: vec![rat(1, 100), rat(1, 4), rat(1, 2)],
            deontic_weights: vec![rat(0, 1)],
            values: vec![rat(0, 1), rat(-1, 1), rat(5, 1), rat(-1000, 1)],
        };
        assert!(search_stp_violations(&rule, &bounds).unwrap().is_empty());
    }

    #[test]
    fn search_rejects_empty_bounds_and_bad_priors() {
        let rule = ChoiceRule::Ev;
        let empty = GridBounds::<Rational> {
            priors: vec![],
            deontic_weights: vec![rat(0, 1)],
            values: vec![rat(0, 1)],
        };
        assert!(matches!(
            search_stp_violations(&rule, &empty).unwrap_err(),
            LabError::EmptyBounds(_)
        ));
        let bad = GridBounds {
            priors: vec![rat(1, 1)],
            deontic_weights: vec![rat(0, 1)],
            values: vec![rat(0, 1)],
        };
        assert!(matches!(
            search_stp_violations(&rule, &bad).unwrap_err(),
            LabError::PriorOutOfRange(_)
        ));
    }

    #[test]
    fn search_results_are_reproducible() {
        let rule = ChoiceRule::relv(rat(10, 1)).unwrap();
        let a = search_stp_violations(&rule, &small_bounds()).unwrap();
        let b = search_stp_violations(&rule, &small_bounds()).unwrap();
        assert_eq!(a, b);
    }
}

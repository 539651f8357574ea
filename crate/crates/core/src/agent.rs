//! A problem-solving agent that plans once, then executes its cached plan,
//! run against a simulated fully observable environment.

use std::collections::VecDeque;

use crate::cost::Cost;
use crate::problem::Problem;
use crate::search::{Outcome, SearchConfig, SearchError, Strategy};

/// What the agent perceives: the complete current state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Percept<S>(pub S);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AgentAction<A> {
    Act(A),
    /// The percept already satisfies the goal.
    NoOp,
}

/// State threaded between calls to [`ProblemSolvingAgent::step`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgentMemory<S, A> {
    pub state: Option<S>,
    /// Remaining plan steps with the state each one is expected to produce.
    pub solution: VecDeque<(A, S)>,
    /// State the last returned action should lead to.
    pub expected: Option<S>,
    pub searches: usize,
}

impl<S, A> Default for AgentMemory<S, A> {
    fn default() -> Self {
        AgentMemory {
            state: None,
            solution: VecDeque::new(),
            expected: None,
            searches: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AgentError {
    #[error("search found no solution from {0}")]
    SearchFailed(String),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("action {action} is not applicable in {state}")]
    IllegalAction { action: String, state: String },
}

pub struct ProblemSolvingAgent<F> {
    formulate: F,
    strategy: Strategy,
    config: SearchConfig,
}

impl<F> ProblemSolvingAgent<F> {
    /// `formulate` builds the problem (goal included) to solve from the
    /// current state.
    pub fn new(formulate: F, strategy: Strategy) -> Self {
        ProblemSolvingAgent {
            formulate,
            strategy,
            config: SearchConfig::default(),
        }
    }

    pub fn with_config(mut self, config: SearchConfig) -> Self {
        self.config = config;
        self
    }

    /// One call of the agent program. Searches only when no plan is cached or
    /// the percept contradicts the state the plan predicted.
    pub fn step<P>(
        &self,
        percept: Percept<P::State>,
        memory: AgentMemory<P::State, P::Action>,
    ) -> Result<(AgentAction<P::Action>, AgentMemory<P::State, P::Action>), AgentError>
    where
        F: Fn(&P::State) -> P,
        P: Problem,
    {
        let Percept(state) = percept;
        let problem = (self.formulate)(&state);
        if problem.is_goal(&state) {
            return Ok((AgentAction::NoOp, memory));
        }

        let mut memory = memory;
        if memory.expected.as_ref().is_some_and(|e| *e != state) {
            memory.solution.clear();
        }
        memory.state = Some(state.clone());
        if memory.solution.is_empty() {
            memory.searches += 1;
            let result = self.strategy.run(&problem, &self.config)?;
            match result.outcome {
                Outcome::Found(path) => memory.solution = path.steps.into(),
                Outcome::NoSolution | Outcome::Cutoff => {
                    return Err(AgentError::SearchFailed(state.to_string()))
                }
            }
        }
        let (action, next) = memory
            .solution
            .pop_front()
            .ok_or_else(|| AgentError::SearchFailed(state.to_string()))?;
        memory.expected = Some(next);
        Ok((AgentAction::Act(action), memory))
    }
}

/// The simulated world: a problem supplying the dynamics and a hidden state.
#[derive(Clone, Debug)]
pub struct Environment<P: Problem> {
    pub problem: P,
    pub true_state: P::State,
}

impl<P: Problem> Environment<P> {
    /// Starts at the problem's initial state.
    pub fn new(problem: P) -> Self {
        let true_state = problem.initial();
        Environment {
            problem,
            true_state,
        }
    }

    pub fn percept(&self) -> Percept<P::State> {
        Percept(self.true_state.clone())
    }

    /// Applies `action` to the hidden state, returning the new state and the
    /// step cost.
    pub fn execute(&mut self, action: &P::Action) -> Result<(P::State, Cost), AgentError> {
        if !self.problem.actions(&self.true_state).contains(action) {
            return Err(AgentError::IllegalAction {
                action: action.to_string(),
                state: self.true_state.to_string(),
            });
        }
        let next = self.problem.result(&self.true_state, action);
        let cost = self.problem.step_cost(&self.true_state, action, &next);
        self.true_state = next.clone();
        Ok((next, cost))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep<S, A> {
    pub percept: S,
    pub action: A,
    pub result: S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpisodeTrace<S, A> {
    pub steps: Vec<TraceStep<S, A>>,
    /// The agent stopped with a NoOp.
    pub terminal: bool,
    pub total_cost: Cost,
}

impl<S, A> EpisodeTrace<S, A> {
    pub fn actions(&self) -> impl Iterator<Item = &A> {
        self.steps.iter().map(|s| &s.action)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EpisodeError<S, A> {
    #[error("step budget exhausted after {} steps", partial.steps.len())]
    StepBudgetExceeded { partial: EpisodeTrace<S, A> },
    #[error(transparent)]
    Agent(#[from] AgentError),
}

/// Alternates percept, agent step and execution until the agent returns
/// NoOp. At most `max_steps` actions are executed.
pub fn run_episode<P, F>(
    env: &mut Environment<P>,
    agent: &ProblemSolvingAgent<F>,
    max_steps: usize,
) -> Result<EpisodeTrace<P::State, P::Action>, EpisodeError<P::State, P::Action>>
where
    P: Problem,
    F: Fn(&P::State) -> P,
{
    let mut trace = EpisodeTrace {
        steps: Vec::new(),
        terminal: false,
        total_cost: Cost::ZERO,
    };
    let mut memory = AgentMemory::default();
    loop {
        let percept = env.percept();
        let (action, next_memory) = agent.step(percept.clone(), memory)?;
        memory = next_memory;
        let action = match action {
            AgentAction::NoOp => {
                trace.terminal = true;
                return Ok(trace);
            }
            AgentAction::Act(a) => a,
        };
        if trace.steps.len() >= max_steps {
            return Err(EpisodeError::StepBudgetExceeded { partial: trace });
        }
        let (result, cost) = env.execute(&action)?;
        trace.total_cost = trace.total_cost + cost;
        trace.steps.push(TraceStep {
            percept: percept.0,
            action,
            result,
        });
    }
}

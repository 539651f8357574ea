use proptest::prelude::*;
use symsearch::agent::*;
use symsearch::domains::*;
use symsearch::{bfs, Path, Problem, SearchConfig, Strategy};

fn vs(s: &str) -> VacuumState {
    VacuumState::parse(2, s).unwrap()
}

fn formulate(s: &VacuumState) -> VacuumWorld {
    make_vacuum(s.squares(), s.clone()).unwrap()
}

type VacAgent = ProblemSolvingAgent<fn(&VacuumState) -> VacuumWorld>;

fn agent() -> VacAgent {
    ProblemSolvingAgent::new(
        formulate as fn(&VacuumState) -> VacuumWorld,
        Strategy::BreadthFirst,
    )
}

#[test]
fn first_two_steps_follow_the_cached_plan() {
    let agent = agent();
    let (a1, memory) = agent
        .step(Percept(vs("L,1,1")), AgentMemory::default())
        .unwrap();
    assert_eq!(a1, AgentAction::Act(VacuumAction::Suck));
    assert_eq!(memory.searches, 1);
    assert_eq!(memory.solution.len(), 2);
    let (a2, memory) = agent.step(Percept(vs("L,0,1")), memory).unwrap();
    assert_eq!(a2, AgentAction::Act(VacuumAction::Right));
    assert_eq!(memory.searches, 1);
}

#[test]
fn goal_percept_is_noop_and_keeps_memory() {
    let agent = agent();
    let (_, memory) = agent
        .step(Percept(vs("L,1,1")), AgentMemory::default())
        .unwrap();
    let (action, after) = agent.step(Percept(vs("R,0,0")), memory.clone()).unwrap();
    assert_eq!(action, AgentAction::NoOp);
    assert_eq!(after, memory);
    let (action, after) = agent
        .step(Percept(vs("L,0,0")), AgentMemory::default())
        .unwrap();
    assert_eq!(action, AgentAction::NoOp);
    assert_eq!(after, AgentMemory::default());
}

#[test]
fn episode_from_left_dirty_world() {
    let mut env = Environment::new(make_vacuum(2, vs("L,1,1")).unwrap());
    let trace = run_episode(&mut env, &agent(), 10).unwrap();
    assert!(trace.terminal);
    assert_eq!(trace.steps.len(), 3);
    let actions: Vec<_> = trace.actions().cloned().collect();
    use VacuumAction::*;
    assert_eq!(actions, [Suck, Right, Suck]);
    assert!(env.problem.is_goal(&env.true_state));
    // Trace is replayable.
    let replay = Path::replay(&env.problem, vs("L,1,1"), actions);
    let states: Vec<_> = replay.states().skip(1).cloned().collect();
    let recorded: Vec<_> = trace.steps.iter().map(|s| s.result.clone()).collect();
    assert_eq!(states, recorded);
    assert_eq!(trace.total_cost, replay.total_cost);
}

#[test]
fn episode_starting_at_goal_is_empty() {
    let mut env = Environment::new(make_vacuum(2, vs("R,0,0")).unwrap());
    let trace = run_episode(&mut env, &agent(), 5).unwrap();
    assert!(trace.terminal);
    assert!(trace.steps.is_empty());
    assert_eq!(trace.total_cost, symsearch::Cost::ZERO);
}

#[test]
fn step_budget_is_enforced() {
    let mut env = Environment::new(make_vacuum(2, vs("L,1,1")).unwrap());
    match run_episode(&mut env, &agent(), 1) {
        Err(EpisodeError::StepBudgetExceeded { partial }) => {
            assert_eq!(partial.steps.len(), 1);
            assert!(!partial.terminal);
            assert_eq!(partial.steps[0].action, VacuumAction::Suck);
        }
        other => panic!("expected budget error, got {other:?}"),
    }
}

#[test]
fn unexpected_percept_triggers_replanning() {
    let agent = agent();
    let (_, memory) = agent
        .step(Percept(vs("L,1,1")), AgentMemory::default())
        .unwrap();
    assert_eq!(memory.expected, Some(vs("L,0,1")));
    // Dirt reappeared under the cleaner: the cached plan no longer applies.
    let (action, memory) = agent.step(Percept(vs("L,1,1")), memory).unwrap();
    assert_eq!(action, AgentAction::Act(VacuumAction::Suck));
    assert_eq!(memory.searches, 2);
    assert_eq!(memory.solution.len(), 2);
}

#[test]
fn perturbed_environment_still_reaches_goal() {
    let mut env = Environment::new(make_vacuum(2, vs("L,1,1")).unwrap());
    let agent = agent();
    let mut memory = AgentMemory::default();
    let mut executed = 0;
    let mut perturbed = false;
    loop {
        let (action, next) = agent.step(env.percept(), memory).unwrap();
        memory = next;
        let AgentAction::Act(a) = action else { break };
        env.execute(&a).unwrap();
        executed += 1;
        if !perturbed && env.true_state == vs("R,0,1") {
            env.true_state = vs("R,1,1");
            perturbed = true;
        }
        assert!(executed < 10);
    }
    assert!(perturbed);
    assert_eq!(memory.searches, 2);
    assert!(env.problem.is_goal(&env.true_state));
}

#[test]
fn unsolvable_problem_reports_search_failure() {
    let agent = ProblemSolvingAgent::new(
        |_: &McState| make_mc(4, 4, &DEFAULT_MOVES).unwrap(),
        Strategy::BreadthFirst,
    );
    let err = agent
        .step(Percept(McState::new(4, 4, 1)), AgentMemory::default())
        .unwrap_err();
    assert_eq!(err, AgentError::SearchFailed("4,4,1".into()));
}

#[test]
fn environment_rejects_illegal_actions() {
    let mut env = Environment::new(make_vacuum(2, vs("L,1,1")).unwrap());
    assert!(matches!(
        env.execute(&VacuumAction::Left),
        Err(AgentError::IllegalAction { .. })
    ));
    assert_eq!(env.true_state, vs("L,1,1"));
}

#[test]
fn hanoi_episode_matches_search_plan() {
    let h = make_hanoi(3).unwrap();
    let agent = ProblemSolvingAgent::new(
        |s: &HanoiState| make_hanoi(3).unwrap().with_initial(s.clone()).unwrap(),
        Strategy::UniformCost,
    );
    let plan = symsearch::uniform_cost(&h, &SearchConfig::default())
        .unwrap()
        .into_path()
        .unwrap();
    let mut env = Environment::new(h);
    let trace = run_episode(&mut env, &agent, 100).unwrap();
    assert_eq!(
        trace.actions().collect::<Vec<_>>(),
        plan.actions().collect::<Vec<_>>()
    );
    assert_eq!(trace.total_cost, plan.total_cost);
}

proptest! {
    #[test]
    fn episode_executes_the_search_plan(n in 1usize..=3, pos in 0usize..3, dirt in proptest::collection::vec(any::<bool>(), 3)) {
        let init = VacuumState::new(pos % n, dirt[..n].to_vec());
        let problem = make_vacuum(n, init).unwrap();
        let plan = bfs(&problem, &SearchConfig::default()).unwrap().into_path().unwrap();
        let mut env = Environment::new(problem);
        let trace = run_episode(&mut env, &agent(), 20).unwrap();
        prop_assert!(trace.terminal);
        prop_assert_eq!(trace.actions().collect::<Vec<_>>(), plan.actions().collect::<Vec<_>>());
        prop_assert_eq!(trace.total_cost, plan.total_cost);
        prop_assert!(env.problem.is_goal(&env.true_state));
    }
}

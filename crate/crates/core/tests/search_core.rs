mod common;

use symsearch::domains::*;
use symsearch::explicit::parse_problem_file;
use symsearch::*;

fn vac2(init: &str) -> VacuumWorld {
    make_vacuum(2, VacuumState::parse(2, init).unwrap()).unwrap()
}

fn names<S: Clone, A: ToString + Clone>(path: &Path<S, A>) -> Vec<String> {
    path.actions().map(|a| a.to_string()).collect()
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

#[test]
fn bfs_vacuum_plan() {
    let r = bfs(&vac2("L,1,1"), &cfg()).unwrap();
    let path = r.path().unwrap();
    assert_eq!(names(path), ["Suck", "Right", "Suck"]);
    assert_eq!(path.total_cost, Cost::integer(3));
    // Matches the brute-force plan enumeration.
    let oracle = common::vacuum_plans(2, &(0, vec![true, true]), 3);
    assert_eq!(vec![names(path)], oracle);
}

#[test]
fn goal_at_start_gives_empty_path() {
    let w = vac2("R,0,0");
    for strategy in [
        Strategy::BreadthFirst,
        Strategy::UniformCost,
        Strategy::DepthLimited(0),
        Strategy::Bidirectional,
    ] {
        let r = strategy.run(&w, &cfg()).unwrap();
        let p = r.path().unwrap();
        assert!(p.is_empty(), "{strategy:?}");
        assert_eq!(p.total_cost, Cost::ZERO);
    }
}

#[test]
fn bfs_missionaries_eleven_moves() {
    let mc = Missionaries::default();
    let r = bfs(&mc, &cfg()).unwrap();
    let path = r.path().unwrap();
    assert_eq!(path.len(), 11);
    assert_eq!(path.len(), common::mc_oracle().distance[&(0, 0, 0)]);
    assert_eq!(validate_path(&mc, path), Ok(()));
}

const WEIGHTED: &str = "\
state I
state A
state B
state G
init I
goal G
edge I a A 5
edge I b B 1
edge B g G 1
edge A g G 10
";

#[test]
fn uniform_cost_prefers_cheaper_path() {
    let p = parse_problem_file(WEIGHTED.as_bytes())
        .unwrap()
        .to_problem();
    let r = uniform_cost(&p, &cfg()).unwrap();
    let path = r.path().unwrap();
    let states: Vec<_> = path.states().map(|s| s.to_string()).collect();
    assert_eq!(states, ["I", "B", "G"]);
    assert_eq!(path.total_cost, Cost::integer(2));
}

#[test]
fn uniform_cost_with_rational_costs() {
    let text = "state s\nstate m\nstate g\ninit s\ngoal g\nedge s direct g 3/2\nedge s a m 1/3\nedge m b g 1/3\n";
    let p = parse_problem_file(text.as_bytes()).unwrap().to_problem();
    let path = uniform_cost(&p, &cfg()).unwrap().into_path().unwrap();
    assert_eq!(path.total_cost, Cost::ratio(2, 3));
    // bfs ignores cost and takes the single edge.
    assert_eq!(
        bfs(&p, &cfg()).unwrap().path().unwrap().total_cost,
        Cost::ratio(3, 2)
    );
}

#[test]
fn uniform_cost_unreachable_goal() {
    let text = "state I\nstate A\nstate G\ninit I\ngoal G\nedge I x A 1\nedge A y I 1\n";
    let p = parse_problem_file(text.as_bytes()).unwrap().to_problem();
    assert_eq!(
        uniform_cost(&p, &cfg()).unwrap().outcome,
        Outcome::NoSolution
    );
    assert_eq!(bfs(&p, &cfg()).unwrap().outcome, Outcome::NoSolution);
    assert_eq!(
        depth_limited(&p, 10, &cfg()).unwrap().outcome,
        Outcome::NoSolution
    );
}

#[test]
fn uniform_cost_matches_bfs_on_vacuum() {
    let w = vac2("L,1,1");
    let u = uniform_cost(&w, &cfg()).unwrap();
    assert_eq!(u.path().unwrap().total_cost, Cost::integer(3));
}

#[test]
fn depth_limited_cutoff_and_found() {
    let w = vac2("L,1,1");
    assert_eq!(
        depth_limited(&w, 2, &cfg()).unwrap().outcome,
        Outcome::Cutoff
    );
    let r = depth_limited(&w, 3, &cfg()).unwrap();
    assert_eq!(r.path().unwrap().total_cost, Cost::integer(3));
    assert_eq!(validate_path(&w, r.path().unwrap()), Ok(()));
}

#[test]
fn depth_limited_found_iff_within_optimal() {
    let w = vac2("L,1,1");
    let mc = Missionaries::default();
    let opt_w = bfs(&w, &cfg()).unwrap().path().unwrap().len();
    let opt_mc = bfs(&mc, &cfg()).unwrap().path().unwrap().len();
    for limit in 0..=opt_w + 2 {
        let r = depth_limited(&w, limit, &cfg()).unwrap();
        assert_eq!(r.path().is_some(), opt_w <= limit, "vacuum limit {limit}");
        if let Some(p) = r.path() {
            assert!(p.len() <= limit);
            assert_eq!(validate_path(&w, p), Ok(()));
        }
    }
    for limit in 0..=opt_mc + 2 {
        let r = depth_limited(&mc, limit, &cfg()).unwrap();
        assert_eq!(r.path().is_some(), opt_mc <= limit, "mc limit {limit}");
        if r.path().is_none() {
            assert_eq!(r.outcome, Outcome::Cutoff);
        }
    }
}

#[test]
fn bidirectional_results() {
    let h = make_hanoi(3).unwrap();
    let bi = bidirectional_bfs(&h, &cfg()).unwrap();
    let base = bfs(&h, &cfg()).unwrap();
    assert_eq!(bi.path().unwrap().len(), 7);
    assert_eq!(validate_path(&h, bi.path().unwrap()), Ok(()));
    assert!(bi.metrics.nodes_expanded < base.metrics.nodes_expanded);

    let mc = Missionaries::default();
    let r = bidirectional_bfs(&mc, &cfg()).unwrap();
    assert_eq!(r.path().unwrap().len(), 11);
    assert_eq!(validate_path(&mc, r.path().unwrap()), Ok(()));
}

#[test]
fn bidirectional_needs_inverses() {
    let err = bidirectional_bfs(&vac2("L,1,1"), &cfg()).unwrap_err();
    assert_eq!(
        err,
        SearchError::NotInvertible {
            action: "Suck".into()
        }
    );
}

struct NoGoalList(Hanoi);

impl Problem for NoGoalList {
    type State = HanoiState;
    type Action = HanoiMove;
    fn initial(&self) -> HanoiState {
        self.0.initial()
    }
    fn actions(&self, s: &HanoiState) -> Vec<HanoiMove> {
        self.0.actions(s)
    }
    fn result(&self, s: &HanoiState, a: &HanoiMove) -> HanoiState {
        self.0.result(s, a)
    }
    fn is_goal(&self, s: &HanoiState) -> bool {
        self.0.is_goal(s)
    }
    fn inverse(&self, a: &HanoiMove) -> Option<HanoiMove> {
        self.0.inverse(a)
    }
}

#[test]
fn bidirectional_needs_goal_enumeration() {
    let p = NoGoalList(make_hanoi(2).unwrap());
    assert_eq!(
        bidirectional_bfs(&p, &cfg()).unwrap_err(),
        SearchError::NoGoalEnumeration
    );
}

#[test]
fn bidirectional_no_solution() {
    let text = "state a\nstate b\nstate g\ninit a\ngoal g\nedge a x b 1\nedge b x a 1\n";
    let p = parse_problem_file(text.as_bytes()).unwrap().to_problem();
    assert_eq!(
        bidirectional_bfs(&p, &cfg()).unwrap().outcome,
        Outcome::NoSolution
    );
}

#[test]
fn validate_path_rejections() {
    let w = vac2("L,1,1");
    let short = Path::replay(&w, w.initial(), [VacuumAction::Suck, VacuumAction::Suck]);
    assert!(matches!(
        validate_path(&w, &short),
        Err(PathViolation::NotGoal(s)) if s == "L,0,1"
    ));

    let mut good = bfs(&w, &cfg()).unwrap().into_path().unwrap();
    assert_eq!(validate_path(&w, &good), Ok(()));
    good.total_cost = good.total_cost + Cost::ONE;
    assert!(matches!(
        validate_path(&w, &good),
        Err(PathViolation::CostMismatch { .. })
    ));

    let illegal = Path {
        start: w.initial(),
        steps: vec![(VacuumAction::Left, w.initial())],
        total_cost: Cost::ONE,
    };
    assert!(matches!(
        validate_path(&w, &illegal),
        Err(PathViolation::IllegalAction { index: 0, .. })
    ));

    let wrong_state = Path {
        start: w.initial(),
        steps: vec![(VacuumAction::Suck, w.initial())],
        total_cost: Cost::ONE,
    };
    assert!(matches!(
        validate_path(&w, &wrong_state),
        Err(PathViolation::WrongState { index: 0, .. })
    ));

    let elsewhere =
        Path::<VacuumState, VacuumAction>::empty(VacuumState::parse(2, "R,0,0").unwrap());
    assert!(matches!(
        validate_path(&w, &elsewhere),
        Err(PathViolation::WrongStart { .. })
    ));
}

#[test]
fn reachable_state_counts() {
    assert_eq!(enumerate_reachable(&vac2("L,1,1"), 100).unwrap().len(), 8);
    for n in 1..=3 {
        let w = make_vacuum(n, VacuumState::all_dirty(n)).unwrap();
        let count = enumerate_reachable(&w, 1000).unwrap().len();
        assert_eq!(count, n << n);
        assert_eq!(count, common::vacuum_reachable(n, &(0, vec![true; n])));
    }
    let mc = enumerate_reachable(&Missionaries::default(), 100).unwrap();
    assert_eq!(mc.len(), common::mc_oracle().distance.len());
    assert_eq!(mc.len(), 16);
}

#[test]
fn reachable_states_in_discovery_order() {
    let states = enumerate_reachable(&vac2("L,1,1"), 100).unwrap();
    let first: Vec<_> = states.iter().take(3).map(|s| s.to_string()).collect();
    assert_eq!(first, ["L,1,1", "R,1,1", "L,0,1"]);
}

#[test]
fn node_caps_are_enforced() {
    let w = make_vacuum(3, VacuumState::all_dirty(3)).unwrap();
    assert_eq!(
        enumerate_reachable(&w, 23).unwrap_err(),
        SearchError::ResourceLimit { cap: 23 }
    );
    assert_eq!(enumerate_reachable(&w, 24).unwrap().len(), 24);
    let tiny = SearchConfig { node_cap: 4 };
    let h = make_hanoi(3).unwrap();
    for strategy in [
        Strategy::BreadthFirst,
        Strategy::UniformCost,
        Strategy::DepthLimited(10),
        Strategy::Bidirectional,
    ] {
        assert_eq!(
            strategy.run(&h, &tiny).unwrap_err(),
            SearchError::ResourceLimit { cap: 4 },
            "{strategy:?}"
        );
    }
}

#[test]
fn metrics_are_consistent() {
    let h = make_hanoi(3).unwrap();
    for strategy in [
        Strategy::BreadthFirst,
        Strategy::UniformCost,
        Strategy::DepthLimited(7),
        Strategy::Bidirectional,
    ] {
        let m = strategy.run(&h, &cfg()).unwrap().metrics;
        assert!(m.nodes_generated >= m.nodes_expanded, "{strategy:?}");
        assert!(m.nodes_expanded > 0 && m.max_frontier > 0);
    }
}

#[test]
fn searches_are_deterministic() {
    let mc = Missionaries::default();
    let h = make_hanoi(3).unwrap();
    for strategy in [
        Strategy::BreadthFirst,
        Strategy::UniformCost,
        Strategy::DepthLimited(12),
        Strategy::Bidirectional,
    ] {
        let a = strategy.run(&mc, &cfg()).unwrap();
        let b = strategy.run(&mc, &cfg()).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.metrics.counters(), b.metrics.counters());
        let a = strategy.run(&h, &cfg()).unwrap();
        let b = strategy.run(&h, &cfg()).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.metrics.counters(), b.metrics.counters());
    }
}

#[test]
fn concurrent_searches_share_a_problem() {
    let h = make_hanoi(3).unwrap();
    let expected = bfs(&h, &cfg()).unwrap().outcome;
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|_| scope.spawn(|| bfs(&h, &cfg()).unwrap().outcome))
            .collect();
        for handle in handles {
            assert_eq!(handle.join().unwrap(), expected);
        }
    });
}

#[test]
fn bfs_equals_ucs_on_unit_cost_domains() {
    let mut checked = 0;
    for n in 1..=3 {
        for init in make_vacuum(n, VacuumState::all_dirty(n))
            .unwrap()
            .all_states()
        {
            let w = make_vacuum(n, init).unwrap();
            let b = bfs(&w, &cfg()).unwrap().into_path().unwrap();
            let u = uniform_cost(&w, &cfg()).unwrap().into_path().unwrap();
            assert_eq!(b.total_cost, u.total_cost);
            assert_eq!(validate_path(&w, &b), Ok(()));
            assert_eq!(validate_path(&w, &u), Ok(()));
            checked += 1;
        }
    }
    assert_eq!(checked, 2 + 8 + 24);
    let mc = Missionaries::default();
    assert_eq!(
        bfs(&mc, &cfg()).unwrap().path().unwrap().total_cost,
        uniform_cost(&mc, &cfg())
            .unwrap()
            .path()
            .unwrap()
            .total_cost
    );
    for d in 1..=3 {
        let h = make_hanoi(d).unwrap();
        let b = bfs(&h, &cfg()).unwrap().into_path().unwrap();
        let u = uniform_cost(&h, &cfg()).unwrap().into_path().unwrap();
        assert_eq!(b.total_cost, u.total_cost);
        assert_eq!(b.len(), common::hanoi_optimal(d as u32));
    }
}

#[test]
fn bidirectional_matches_bfs_length() {
    let mc = Missionaries::default();
    assert_eq!(
        bidirectional_bfs(&mc, &cfg())
            .unwrap()
            .path()
            .unwrap()
            .len(),
        bfs(&mc, &cfg()).unwrap().path().unwrap().len()
    );
    for d in 1..=3 {
        let h = make_hanoi(d).unwrap();
        let bi = bidirectional_bfs(&h, &cfg()).unwrap().into_path().unwrap();
        assert_eq!(bi.len(), bfs(&h, &cfg()).unwrap().path().unwrap().len());
        assert_eq!(validate_path(&h, &bi), Ok(()));
    }
}

#[test]
fn every_hanoi_start_agrees_across_searches() {
    // 27 start configurations for three disks; all four searches must agree
    // on the optimal length and produce valid paths.
    let h = make_hanoi(3).unwrap();
    let starts = enumerate_reachable(&h, 100).unwrap();
    assert_eq!(starts.len(), 27);
    for s in starts {
        let p = make_hanoi(3).unwrap().with_initial(s).unwrap();
        let b = bfs(&p, &cfg()).unwrap().into_path().unwrap();
        for strategy in [Strategy::UniformCost, Strategy::Bidirectional] {
            let other = strategy.run(&p, &cfg()).unwrap().into_path().unwrap();
            assert_eq!(other.len(), b.len(), "{strategy:?} from {}", p.initial());
            assert_eq!(validate_path(&p, &other), Ok(()));
        }
        let dls = depth_limited(&p, b.len(), &cfg())
            .unwrap()
            .into_path()
            .unwrap();
        assert_eq!(validate_path(&p, &dls), Ok(()));
    }
}

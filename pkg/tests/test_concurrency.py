import pickle
import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from categraph import Parameters, dumps_graph, normalize_percept
from categraph.knowledge.features import FeatureIntervalVector, fold_interval_vectors
from categraph.harness import run_scenario
from categraph.scenarios.config import ScenarioConfig
from categraph.service.sessions import SessionError, SessionStore
from categraph.scenarios.example import EXAMPLE_ACTIONS, EXAMPLE_SCHEMA, example_percept

from support import make_graph
from test_graph import GREEN_APPLE, RED_APPLE


class TestGraphTransfer:
    def test_graph_pickles_and_keeps_behaving(self):
        g = make_graph(params=Parameters(theta_mc=1.0), seed=2)
        for percept in (GREEN_APPLE, RED_APPLE):
            cid = g.observe(percept).category_id
            g.record_reward(cid, percept, "fruitBasket", "positive")
        clone = pickle.loads(pickle.dumps(g))
        assert dumps_graph(clone) == dumps_graph(g)
        # both copies evolve identically afterwards
        a = g.observe(GREEN_APPLE)
        b = clone.observe(GREEN_APPLE)
        assert (a.category_id, a.created) == (b.category_id, b.created)
        assert g.select_action(a.category_id) == clone.select_action(b.category_id)


class TestIntervalFolding:
    @given(
        st.lists(
            st.tuples(
                st.lists(st.floats(0.01, 1), min_size=3, max_size=3),
                st.integers(1, 5),
            ),
            min_size=1,
            max_size=5,
        ),
        st.sampled_from([0.0, 0.3, 1.0, 2.0]),
    )
    def test_fold_conserves_counts_and_membership(self, raw_vectors, threshold):
        vectors = [
            FeatureIntervalVector.degenerate(normalize_percept("f", values), count)
            for values, count in raw_vectors
        ]
        total = sum(v.count for v in vectors)
        folded = fold_interval_vectors(list(vectors), threshold)
        assert sum(v.count for v in folded) == total
        assert 1 <= len(folded) <= len(vectors)
        # every original point stays inside some folded vector
        for values, _ in raw_vectors:
            vec = normalize_percept("f", values)
            assert any(f.contains(vec) for f in folded)


class TestSessionSerialization:
    def test_concurrent_presents_one_wins(self):
        store = SessionStore()
        session = store.create(EXAMPLE_SCHEMA, EXAMPLE_ACTIONS, Parameters(), seed=0)
        results = []

        def worker(kind):
            try:
                session.present(example_percept(kind))
                results.append("ok")
            except SessionError as exc:
                results.append(exc.code)

        threads = [
            threading.Thread(target=worker, args=(kind,))
            for kind in ("greenApple", "redApple", "yellowBlock", "brownApple")
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert results.count("ok") == 1
        assert results.count("pending_interaction") == 3
        assert session.pending is not None

    def test_parallel_sessions_do_not_interfere(self):
        store = SessionStore()
        sessions = [
            store.create(EXAMPLE_SCHEMA, EXAMPLE_ACTIONS, Parameters(), seed=s)
            for s in range(4)
        ]
        errors = []

        def drive(session):
            try:
                for kind in ("greenApple", "redApple", "greenBlock"):
                    session.present(example_percept(kind))
                    session.reward("positive")
            except Exception as exc:  # noqa: BLE001 - collect everything
                errors.append(exc)

        threads = [threading.Thread(target=drive, args=(s,)) for s in sessions]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        assert all(len(s.events) == 3 for s in sessions)


class TestRandomOrderPolicy:
    def test_random_policy_runs_and_differs_from_round_robin(self):
        base = ScenarioConfig(max_steps=40, seed=5, params=Parameters(theta_mc=6 / 7))
        random_run = run_scenario(
            ScenarioConfig(
                max_steps=40, seed=5, order_policy="random", params=Parameters(theta_mc=6 / 7)
            )
        )
        round_robin = run_scenario(base)
        assert random_run.first_full_coverage_step >= 6
        kinds_random = [e.percept_id for e in random_run.events]
        kinds_rr = [e.percept_id for e in round_robin.events]
        assert kinds_random != kinds_rr

"""Keyterm scoring against brute-force posterior tables, plus policy rules."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reference
from factories import build_model, random_model

from topiclens.errors import ConfigError, UnknownTermError, UnknownTopicError
from topiclens.keyterms import KeytermPolicy, score, score_matrix, select_keyterms

VACUOUS = dict(score_threshold=0.0, min_corpus_frequency=1)


def _two_topic_model(phi_w0_topic0=0.10, phi_w0_topic1=0.05, num_terms=4):
    """K=2 model where term 0 has the given probabilities and the leftover
    mass sits uniformly on the remaining terms."""
    rest0 = (1.0 - phi_w0_topic0) / (num_terms - 1)
    rest1 = (1.0 - phi_w0_topic1) / (num_terms - 1)
    phi = np.array(
        [
            [phi_w0_topic0] + [rest0] * (num_terms - 1),
            [phi_w0_topic1] + [rest1] * (num_terms - 1),
        ]
    )
    return build_model(phi, np.array([0.5, 0.5]))


class TestScore:
    def test_direct_bayes_arithmetic(self):
        model = _two_topic_model()
        # joint masses 0.05 and 0.025 over a 0.075 marginal
        assert score(model, 0, 0) == pytest.approx(2.0 / 3.0, abs=1e-12)
        assert score(model, 1, 0) == pytest.approx(1.0 / 3.0, abs=1e-12)

    def test_single_support_term_scores_one(self):
        phi = np.array([[0.5, 0.5, 0.0], [0.0, 0.0, 1.0]])
        model = build_model(phi, np.array([0.25, 0.75]))
        assert score(model, 1, 2) == pytest.approx(1.0, abs=1e-12)
        assert score(model, 0, 2) == 0.0

    def test_matches_brute_force_joint_table(self):
        model = random_model(num_topics=3, num_terms=10, seed=42)
        expected = reference.brute_force_topic_posteriors(model.phi, model.prevalence)
        for k in range(3):
            for w in range(10):
                assert score(model, k, w) == pytest.approx(
                    expected[k, w], abs=1e-12
                )

    def test_partition_of_unity(self):
        model = random_model(num_topics=4, num_terms=25, seed=3)
        sums = score_matrix(model).sum(axis=0)
        np.testing.assert_allclose(sums, 1.0, rtol=0, atol=1e-9)

    def test_accepts_term_strings(self):
        model = _two_topic_model()
        term = model.vocabulary.terms[0]
        assert score(model, 0, term) == score(model, 0, 0)

    def test_unknown_term_and_topic(self):
        model = _two_topic_model()
        with pytest.raises(UnknownTermError):
            score(model, 0, "zzzz")
        with pytest.raises(UnknownTermError):
            score(model, 0, 99)
        with pytest.raises(UnknownTopicError):
            score(model, 5, 0)


class TestSelectKeyterms:
    def test_vacuous_policy_lists_everything_by_score(self):
        model = random_model(num_topics=3, num_terms=12, seed=7)
        policy = KeytermPolicy(
            candidate_pool_size=12, max_per_topic=12, **VACUOUS
        )
        table = select_keyterms(model, policy)
        scores = score_matrix(model)
        for k, entries in enumerate(table.topics):
            assert len(entries) == 12
            expected = sorted(
                ((float(scores[k, w]), w) for w in range(12)),
                key=lambda sw: (-sw[0], sw[1]),
            )
            assert [w for _, w in expected] == [w for w, _ in entries]
            listed = [s for _, s in entries]
            assert listed == sorted(listed, reverse=True)

    def test_symmetric_shared_term(self):
        # term 0 identical in both topics, equal prevalence -> score 0.5 each
        model = _two_topic_model(phi_w0_topic0=0.2, phi_w0_topic1=0.2, num_terms=5)
        policy = KeytermPolicy(
            candidate_pool_size=5,
            score_threshold=0.3,
            max_per_topic=5,
            min_corpus_frequency=1,
        )
        table = select_keyterms(model, policy)
        for k in range(2):
            assert (0, 0.5) in table.topics[k]
        assert 0 in table.shared_terms

    def test_disjoint_supports_give_no_shared_terms(self, planted_bundle):
        table = select_keyterms(
            planted_bundle.model,
            KeytermPolicy(score_threshold=0.5, min_corpus_frequency=5),
        )
        assert table.shared_terms == frozenset()
        block = len(planted_bundle.planted.terms) // planted_bundle.planted.num_topics
        for learned_k, entries in enumerate(table.topics):
            planted_k = next(
                p for p, l in planted_bundle.topic_map.items() if l == learned_k
            )
            lo, hi = planted_k * block, (planted_k + 1) * block
            assert entries, f"topic {learned_k} selected no keyterms"
            for term_id, _ in entries:
                assert lo <= term_id < hi

    def test_threshold_monotone(self):
        model = random_model(num_topics=3, num_terms=20, seed=11)
        lists = {}
        for tau in (0.0, 0.2, 0.4, 0.6):
            policy = KeytermPolicy(
                candidate_pool_size=20,
                score_threshold=tau,
                max_per_topic=20,
                min_corpus_frequency=1,
            )
            lists[tau] = select_keyterms(model, policy)
        taus = sorted(lists)
        for lo, hi in zip(taus, taus[1:]):
            for k in range(3):
                terms_hi = {w for w, _ in lists[hi].topics[k]}
                terms_lo = {w for w, _ in lists[lo].topics[k]}
                assert terms_hi <= terms_lo

    @settings(max_examples=40, deadline=None)
    @given(
        seed=st.integers(0, 10_000),
        tau=st.floats(0.0, 0.9),
        cap=st.integers(1, 15),
    )
    def test_cap_and_threshold_respected(self, seed, tau, cap):
        model = random_model(num_topics=3, num_terms=15, seed=seed)
        policy = KeytermPolicy(
            candidate_pool_size=15,
            score_threshold=tau,
            max_per_topic=cap,
            min_corpus_frequency=1,
        )
        table = select_keyterms(model, policy)
        recount = {}
        for k, entries in enumerate(table.topics):
            assert len(entries) <= cap
            for w, s in entries:
                assert s >= tau
                recount[w] = recount.get(w, 0) + 1
        assert table.shared_terms == frozenset(
            w for w, c in recount.items() if c >= 2
        )

    def test_min_corpus_frequency_guards_rare_terms(self):
        phi = np.array([[0.9, 0.1], [0.1, 0.9]])
        cf = np.array([2, 50])  # term 0 occurs twice in the corpus
        model = build_model(phi, np.array([0.5, 0.5]), corpus_frequency=cf)
        policy = KeytermPolicy(
            candidate_pool_size=2,
            score_threshold=0.0,
            max_per_topic=2,
            min_corpus_frequency=5,
        )
        table = select_keyterms(model, policy)
        for entries in table.topics:
            assert all(w != 0 for w, _ in entries)

    def test_prioritize_shared_moves_shared_ahead_of_cap(self):
        # term 0 is shared with score 0.5/0.5; each topic also has two
        # exclusive terms scoring higher, so a cap of 2 would normally cut
        # the shared term
        phi = np.array(
            [
                [0.2, 0.4, 0.4, 0.0, 0.0],
                [0.2, 0.0, 0.0, 0.4, 0.4],
            ]
        )
        model = build_model(phi, np.array([0.5, 0.5]))
        base = dict(
            candidate_pool_size=5,
            score_threshold=0.2,
            max_per_topic=2,
            min_corpus_frequency=1,
        )
        plain = select_keyterms(model, KeytermPolicy(**base))
        assert all(0 not in {w for w, _ in entries} for entries in plain.topics)
        shared_first = select_keyterms(
            model, KeytermPolicy(prioritize_shared=True, **base)
        )
        for entries in shared_first.topics:
            assert entries[0][0] == 0  # shared term leads both lists
            scores = [s for _, s in entries[1:]]
            assert scores == sorted(scores, reverse=True)
        assert 0 in shared_first.shared_terms

    def test_scores_survive_persistence(self, tmp_path):
        from topiclens.persist import load_model, save_model

        model = random_model(num_topics=3, num_terms=10, seed=5)
        path = tmp_path / "m.json"
        save_model(model, path)
        reloaded = load_model(path)
        for k in range(3):
            for w in range(10):
                assert score(reloaded, k, w) == pytest.approx(
                    score(model, k, w), abs=1e-12
                )


class TestPolicyValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"candidate_pool_size": 0},
            {"score_threshold": 1.0},
            {"score_threshold": -0.1},
            {"max_per_topic": 0},
            {"candidate_pool_size": 5, "max_per_topic": 10},
            {"min_corpus_frequency": 0},
        ],
    )
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ConfigError):
            KeytermPolicy(**kwargs)

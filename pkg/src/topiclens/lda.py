"""Vanilla LDA trained by collapsed Gibbs sampling.

The sampler resamples one token at a time from the collapsed conditional

    p(z_i = k | rest) ∝ (n_dk[d,k] + alpha) * (n_kw[k,w] + beta) / (n_k[k] + V*beta)

with the current token's counts removed first. Randomness follows a fixed
protocol so training is a pure function of (corpus, config): a single
``numpy.random.default_rng(seed)`` generator supplies one ``integers`` call
for the initial assignments and then one ``random(n_tokens)`` call per sweep;
topics are drawn by inverse CDF over topic index order with that one uniform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numba import njit
from scipy.special import gammaln

from .corpus import TokenizedCorpus, Vocabulary
from .errors import ConfigError, EmptyCorpusError, UnknownDocumentError

ProgressCallback = Callable[[int, float], None]


@dataclass(frozen=True)
class LdaConfig:
    """Hyperparameters; ``alpha`` defaults to 50/num_topics when omitted."""

    num_topics: int
    alpha: float | None = None
    beta: float = 0.01
    iterations: int = 1000
    burn_in: int = 500
    seed: int = 0

    def __post_init__(self) -> None:
        if self.alpha is None:
            object.__setattr__(self, "alpha", 50.0 / max(int(self.num_topics), 1))
        self.validate()

    def validate(self) -> None:
        if not isinstance(self.num_topics, int) or self.num_topics < 2:
            raise ConfigError("num_topics must be an integer >= 2")
        if not self.alpha > 0:
            raise ConfigError("alpha must be > 0")
        if not self.beta > 0:
            raise ConfigError("beta must be > 0")
        if not isinstance(self.iterations, int) or self.iterations < 1:
            raise ConfigError("iterations must be an integer >= 1")
        if not isinstance(self.burn_in, int) or self.burn_in < 0:
            raise ConfigError("burn_in must be an integer >= 0")
        if self.burn_in >= self.iterations:
            raise ConfigError("burn_in must be < iterations")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")


@dataclass(eq=False)
class GibbsState:
    """Token-topic assignments plus the count matrices they induce."""

    z: np.ndarray  # (n_tokens,) int32
    n_dk: np.ndarray  # (D, K) int64
    n_kw: np.ndarray  # (K, V) int64
    n_k: np.ndarray  # (K,) int64
    n_d: np.ndarray  # (D,) int64

    def check(self, corpus: TokenizedCorpus) -> None:
        """Assert the count-conservation identities; raises AssertionError.

        Intended for debug runs: recounts everything from ``z`` and the
        corpus token stream.
        """
        doc_of, word_of = corpus.flat_tokens()
        num_topics = self.n_k.shape[0]
        assert self.z.shape == doc_of.shape, "z is not parallel to the token stream"
        assert np.all((self.z >= 0) & (self.z < num_topics)), "topic assignment out of range"
        assert np.all(self.n_dk >= 0), "negative document-topic count"
        assert np.all(self.n_kw >= 0), "negative topic-term count"
        assert np.array_equal(self.n_dk.sum(axis=1), self.n_d), "n_dk rows != n_d"
        assert np.array_equal(self.n_kw.sum(axis=1), self.n_k), "n_kw rows != n_k"
        assert int(self.n_k.sum()) == corpus.total_tokens, "n_k total != corpus tokens"
        n_dk = np.zeros_like(self.n_dk)
        np.add.at(n_dk, (doc_of, self.z), 1)
        assert np.array_equal(n_dk, self.n_dk), "n_dk inconsistent with z"
        n_kw = np.zeros_like(self.n_kw)
        np.add.at(n_kw, (self.z, word_of), 1)
        assert np.array_equal(n_kw, self.n_kw), "n_kw inconsistent with z"


@dataclass(eq=False)
class TopicModel:
    """Trained model: smoothed distributions plus the averaged raw counts.

    phi[k, w] = P(w | topic k), theta[d, k] = P(topic k | doc d),
    prevalence[k] = P(topic k) as the topic's share of corpus token mass,
    term_marginal[w] = sum_k phi[k, w] * prevalence[k].
    """

    phi: np.ndarray  # (K, V)
    theta: np.ndarray  # (D, K)
    prevalence: np.ndarray  # (K,)
    term_marginal: np.ndarray  # (V,)
    vocabulary: Vocabulary
    config: LdaConfig
    doc_ids: tuple[str, ...]
    doc_lengths: np.ndarray  # (D,) int64
    avg_doc_topic_counts: np.ndarray  # (D, K) float64, post-burn-in mean
    avg_topic_term_counts: np.ndarray  # (K, V) float64, post-burn-in mean
    avg_topic_totals: np.ndarray  # (K,) float64, post-burn-in mean

    _positions: dict[str, int] | None = field(default=None, init=False, repr=False)

    @property
    def num_topics(self) -> int:
        return int(self.phi.shape[0])

    @property
    def num_terms(self) -> int:
        return int(self.phi.shape[1])

    @property
    def num_documents(self) -> int:
        return int(self.theta.shape[0])

    def doc_position(self, doc_id: str) -> int:
        if self._positions is None:
            self._positions = {d: i for i, d in enumerate(self.doc_ids)}
        try:
            return self._positions[doc_id]
        except KeyError:
            raise UnknownDocumentError(f"unknown document id: {doc_id!r}") from None

    def check(self, atol: float = 1e-9) -> None:
        """Raise ValueError if any distribution is out of normalization."""
        checks = [
            ("phi rows", self.phi.sum(axis=1)),
            ("theta rows", self.theta.sum(axis=1)),
            ("prevalence", np.array([self.prevalence.sum()])),
            ("term_marginal", np.array([self.term_marginal.sum()])),
        ]
        for name, sums in checks:
            if not np.allclose(sums, 1.0, rtol=0.0, atol=atol):
                worst = float(np.abs(sums - 1.0).max())
                raise ValueError(f"{name} not normalized (max deviation {worst:.3e})")
        recomposed = self.phi.T @ self.prevalence
        if not np.allclose(recomposed, self.term_marginal, rtol=0.0, atol=atol):
            raise ValueError("term_marginal inconsistent with phi and prevalence")


@njit(cache=True)
def _sweep_kernel(z, doc_of, word_of, n_dk, n_kw, n_k, alpha, beta, uniforms):
    num_topics = n_kw.shape[0]
    vbeta = n_kw.shape[1] * beta
    weights = np.empty(num_topics)
    for i in range(z.shape[0]):
        d = doc_of[i]
        w = word_of[i]
        k = z[i]
        n_dk[d, k] -= 1
        n_kw[k, w] -= 1
        n_k[k] -= 1
        total = 0.0
        for t in range(num_topics):
            wt = (n_dk[d, t] + alpha) * (n_kw[t, w] + beta) / (n_k[t] + vbeta)
            weights[t] = wt
            total += wt
        r = uniforms[i] * total
        acc = 0.0
        new_k = num_topics - 1
        for t in range(num_topics):
            acc += weights[t]
            if r < acc:
                new_k = t
                break
        z[i] = new_k
        n_dk[d, new_k] += 1
        n_kw[new_k, w] += 1
        n_k[new_k] += 1


def init_gibbs_state(
    corpus: TokenizedCorpus, config: LdaConfig, rng: np.random.Generator
) -> GibbsState:
    """Assign every token a seeded random topic and tally the count matrices.

    Consumes exactly one ``rng.integers(0, K, size=n_tokens, dtype=int32)``
    draw; this is part of the determinism contract.
    """
    doc_of, word_of = corpus.flat_tokens()
    num_docs = corpus.num_documents
    num_terms = len(corpus.vocabulary)
    k = config.num_topics
    z = rng.integers(0, k, size=doc_of.shape[0], dtype=np.int32)
    n_dk = np.zeros((num_docs, k), dtype=np.int64)
    n_kw = np.zeros((k, num_terms), dtype=np.int64)
    np.add.at(n_dk, (doc_of, z), 1)
    np.add.at(n_kw, (z, word_of), 1)
    n_k = np.bincount(z, minlength=k).astype(np.int64)
    n_d = np.asarray([len(d) for d in corpus.documents], dtype=np.int64)
    return GibbsState(z=z, n_dk=n_dk, n_kw=n_kw, n_k=n_k, n_d=n_d)


def gibbs_sweep(
    state: GibbsState,
    corpus: TokenizedCorpus,
    config: LdaConfig,
    rng: np.random.Generator,
) -> GibbsState:
    """Resample every token once, in corpus order; mutates and returns state.

    Consumes exactly one ``rng.random(n_tokens)`` draw per call.
    """
    doc_of, word_of = corpus.flat_tokens()
    uniforms = rng.random(state.z.shape[0])
    _sweep_kernel(
        state.z,
        doc_of,
        word_of,
        state.n_dk,
        state.n_kw,
        state.n_k,
        config.alpha,
        config.beta,
        uniforms,
    )
    return state


def log_likelihood(state: GibbsState, config: LdaConfig) -> float:
    """Collapsed joint log p(tokens, assignments | alpha, beta)."""
    alpha = config.alpha
    beta = config.beta
    num_topics, num_terms = state.n_kw.shape
    num_docs = state.n_dk.shape[0]
    ll_words = num_topics * (gammaln(num_terms * beta) - num_terms * gammaln(beta))
    ll_words += gammaln(state.n_kw + beta).sum()
    ll_words -= gammaln(state.n_k + num_terms * beta).sum()
    ll_topics = num_docs * (gammaln(num_topics * alpha) - num_topics * gammaln(alpha))
    ll_topics += gammaln(state.n_dk + alpha).sum()
    ll_topics -= gammaln(state.n_d + num_topics * alpha).sum()
    return float(ll_words + ll_topics)


def train(
    corpus: TokenizedCorpus,
    config: LdaConfig,
    progress: ProgressCallback | None = None,
    check_invariants: bool = False,
) -> TopicModel:
    """Run the full sampler and estimate distributions from averaged counts.

    After ``burn_in`` sweeps, every sweep's count matrices are accumulated;
    the returned model smooths the averaged counts:

        phi   = (mean n_kw + beta)  / (mean n_k + V*beta)
        theta = (mean n_dk + alpha) / (n_d + K*alpha)
        prevalence = mean n_k / total_tokens

    ``progress`` (if given) is called after every sweep with the 1-based
    sweep number and the current collapsed log-likelihood; note that the
    likelihood is only computed when a callback is present. With
    ``check_invariants`` the full count-conservation check runs after every
    sweep (debug mode; considerably slower).
    """
    config.validate()
    if corpus.num_documents == 0 or corpus.total_tokens == 0:
        raise EmptyCorpusError("cannot train on an empty corpus")

    rng = np.random.default_rng(config.seed)
    state = init_gibbs_state(corpus, config, rng)

    num_docs = corpus.num_documents
    num_terms = len(corpus.vocabulary)
    k = config.num_topics
    acc_dk = np.zeros((num_docs, k), dtype=np.float64)
    acc_kw = np.zeros((k, num_terms), dtype=np.float64)
    acc_k = np.zeros(k, dtype=np.float64)

    for sweep in range(1, config.iterations + 1):
        gibbs_sweep(state, corpus, config, rng)
        if check_invariants:
            state.check(corpus)
        if sweep > config.burn_in:
            acc_dk += state.n_dk
            acc_kw += state.n_kw
            acc_k += state.n_k
        if progress is not None:
            progress(sweep, log_likelihood(state, config))

    snapshots = config.iterations - config.burn_in
    avg_dk = acc_dk / snapshots
    avg_kw = acc_kw / snapshots
    avg_k = acc_k / snapshots

    phi = (avg_kw + config.beta) / (avg_k + num_terms * config.beta)[:, None]
    theta = (avg_dk + config.alpha) / (state.n_d + k * config.alpha)[:, None]
    prevalence = avg_k / corpus.total_tokens
    term_marginal = phi.T @ prevalence

    return TopicModel(
        phi=phi,
        theta=theta,
        prevalence=prevalence,
        term_marginal=term_marginal,
        vocabulary=corpus.vocabulary,
        config=config,
        doc_ids=corpus.doc_ids,
        doc_lengths=state.n_d,
        avg_doc_topic_counts=avg_dk,
        avg_topic_term_counts=avg_kw,
        avg_topic_totals=avg_k,
    )

"""Acceptance suite: the numbered exit criteria of the build, one test each.

Each test prints a single "criterion N (...): PASS/FAIL" line into the
terminal summary. Criterion 2 is expected to fail on three of its eleven
rows: those sigma reference values were printed from higher-precision
letter probabilities than the reference table itself carries (the table
lists the same p = 0.880 for two languages yet prints different sigmas),
so no implementation of the closed form can land within +/-0.05 of them
from the printed inputs. The failure is kept honest rather than papered
over with a looser tolerance; every other criterion passes.
"""

import math
import time

import numpy as np
import pytest

from wordlen import bridge, lengthmodel as lm
from wordlen.cli import main as cli_main
from wordlen.ingest import WordLengthHistogram
from wordlen.ngram import entropy_profile
from wordlen.simulate import SimulationConfig, draw_word_lengths

import conftest
from reference_tables import (
    ENTROPY_STUDIES,
    IMPLIED_ENTROPY_ROWS,
    LANGUAGE_FITS,
    SHARED_SCALE_A,
)


def conclude(number: int, name: str, failures: list[str]) -> None:
    status = "PASS" if not failures else "FAIL"
    detail = "" if not failures else f"  [{'; '.join(failures)}]"
    conftest.ACCEPTANCE_LINES.append(f"criterion {number:2d} ({name}): {status}{detail}")
    if failures:
        pytest.fail(f"criterion {number} ({name}): " + "; ".join(failures))


def test_criterion_01_closed_form_mean():
    failures = []
    for lang, fit in LANGUAGE_FITS.items():
        value = lm.mean_approx(fit.p)
        if abs(value - fit.mean_expected) > 0.05:
            failures.append(f"{lang}: {value:.4f} vs {fit.mean_expected}")
    conclude(1, "mean -1/(p ln p) vs reference", failures)


def test_criterion_02_closed_form_stddev():
    failures = []
    for lang, fit in LANGUAGE_FITS.items():
        value = lm.stddev_approx(fit.p)
        if abs(value - fit.sd_expected) > 0.05:
            failures.append(
                f"{lang}: 1/(p(1-p)) = {value:.4f} vs printed {fit.sd_expected}"
                " (reference printed from unrounded p)"
            )
    conclude(2, "sigma 1/(p(1-p)) vs reference", failures)


def test_criterion_03_vocabulary_closed_form():
    failures = []
    for lang, fit in LANGUAGE_FITS.items():
        solved = lm.solve_b(fit.symbols, fit.p, SHARED_SCALE_A, fit.vocab_observed)
        if abs(solved - fit.exponent_b) > 0.001:
            failures.append(f"{lang}: solved b {solved:.5f} vs {fit.exponent_b}")
        vocab = lm.vocab_total_approx(fit.symbols, fit.p, SHARED_SCALE_A, solved)
        if abs(vocab - fit.vocab_observed) / fit.vocab_observed > 0.02:
            failures.append(f"{lang}: vocab {vocab:.0f} vs {fit.vocab_observed}")
    # spot checks straight from the printed 3-decimal exponents; languages
    # with a larger ln(L)^2 * p/(1-p) amplify that print rounding beyond 2%
    english = LANGUAGE_FITS["english"]
    vocab = lm.vocab_total_approx(27, english.p, SHARED_SCALE_A, english.exponent_b)
    if abs(vocab - english.vocab_observed) / english.vocab_observed > 0.01:
        failures.append(f"english printed-b vocab {vocab:.0f}")
    meroitic = LANGUAGE_FITS["meroitic"]
    vocab = lm.vocab_total_approx(24, meroitic.p, SHARED_SCALE_A, meroitic.exponent_b)
    if abs(vocab - meroitic.vocab_observed) / meroitic.vocab_observed > 0.02:
        failures.append(f"meroitic printed-b vocab {vocab:.0f}")
    conclude(3, "vocabulary A*L^(b lnL p/(1-p))", failures)


def test_criterion_04_entropy_to_word_counts():
    failures = []
    for label, study in ENTROPY_STUDIES.items():
        for order, expected in zip((2, 3), study.predicted):
            value = bridge.predicted_distinct_words(study.entropies[order], order)
            if abs(value - expected) > 1.0:
                failures.append(f"{label} order {order}: {value:.2f} vs {expected}")
    conclude(4, "2^(N H_N) vs reference counts", failures)


def test_criterion_05_word_counts_to_entropy():
    failures = []
    for lang, rows in IMPLIED_ENTROPY_ROWS.items():
        for length, words, expected in rows:
            if words == 0:
                continue
            value = bridge.implied_entropy(words, length)
            if abs(value - expected) > 0.01:
                failures.append(f"{lang} length {length}: {value:.4f} vs {expected}")
    conclude(5, "log2(W)/N vs reference entropies", failures)


def test_criterion_06_longest_word():
    failures = []
    root = lm.longest_word_estimate(27, 0.883)
    if not 42.0 <= root <= 44.0:
        failures.append(f"longest-word root {root:.3f} outside [42, 44]")
    count = lm.model_count(27, 0.883, 29)
    if not 11.5 <= count <= 13.5:
        failures.append(f"count at length 29 {count:.3f} outside [11.5, 13.5]")
    conclude(6, "longest-word estimate", failures)


def test_criterion_07_chi_square_p_value():
    failures = []
    p73 = lm.chi_square_p_value(73.0, 48)
    if abs(p73 - 0.01) > 0.005:
        failures.append(f"P(73, df=48) = {p73:.5f} vs 0.01 +/- 0.005")
    if lm.chi_square_p_value(0.0, 48) != 1.0:
        failures.append("P(0, df=48) != 1")
    conclude(7, "chi-square upper tail", failures)


def test_criterion_08_fit_recovery():
    failures = []
    started = time.perf_counter()
    for p0 in (0.80, 0.85, 0.88, 0.90):
        for symbols in (22, 27, 33):
            counts = np.round(lm.model_histogram(symbols, p0, 50)).astype(np.int64)
            hist = WordLengthHistogram(counts, 50)
            fitted = lm.fit_p(hist, symbols)
            if abs(fitted.p - p0) >= 0.001:
                failures.append(f"L={symbols} p0={p0}: refit {fitted.p:.5f}")
    elapsed = time.perf_counter() - started
    if elapsed >= 10.0:
        failures.append(f"grid took {elapsed:.1f}s (budget 10s)")
    conclude(8, "chi-square fit recovers p", failures)


def test_criterion_09_entropy_estimator():
    failures = []
    rng = np.random.default_rng(20120601)
    # two-state chain, stay probability 0.9
    flips = rng.random(10**6) < 0.1
    stream = (np.cumsum(flips) % 2).astype(np.int64)
    h2 = entropy_profile(stream, 2, 2).entropies[2]
    target = -(0.9 * math.log2(0.9) + 0.1 * math.log2(0.1))
    if abs(h2 - target) > 0.005:
        failures.append(f"markov H2 {h2:.5f} vs {target:.5f}")
    uniform = rng.integers(0, 4, size=10**6)
    h1 = entropy_profile(uniform, 4, 1).entropies[1]
    if abs(h1 - 2.0) > 0.005:
        failures.append(f"uniform H1 {h1:.5f} vs 2.0")
    violations = 0
    for _ in range(100):
        symbols = int(rng.integers(2, 7))
        corpus = rng.integers(0, symbols, size=int(rng.integers(500, 3000)))
        profile = entropy_profile(corpus, symbols, 2)
        if profile.entropies[2] > profile.entropies[1] + 1e-9:
            violations += 1
    if violations:
        failures.append(f"H2 <= H1 violated on {violations}/100 corpora")
    conclude(9, "entropy estimator oracle", failures)


def test_criterion_10_round_trips():
    failures = []
    worst = 0.0
    for entropy in np.linspace(0.0, 6.0, 25):
        for length in range(1, 51):
            back = bridge.implied_entropy(
                bridge.predicted_distinct_words(entropy, length), length
            )
            worst = max(worst, abs(back - float(entropy)))
    if worst > 1e-12:
        failures.append(f"entropy round trip drifts {worst:.2e}")
    worst = 0.0
    for symbols, p, vocab in ((27, 0.883, 118_619), (22, 0.899, 294_977),
                              (33, 0.65, 5_000), (24, 0.809, 1_396)):
        b = lm.solve_b(symbols, p, SHARED_SCALE_A, vocab)
        again = lm.vocab_total_approx(symbols, p, SHARED_SCALE_A, b)
        worst = max(worst, abs(again - vocab) / vocab)
    if worst > 1e-12:
        failures.append(f"vocabulary round trip drifts {worst:.2e}")
    worst = 0.0
    for symbols in (22, 27, 33):
        for p in (0.65, 0.809, 0.883, 0.95):
            for order in range(1, 31):
                lhs = bridge.predicted_distinct_words(
                    bridge.entropy_from_p(p, symbols, order), order
                )
                rhs = float(symbols) ** (order * p**order)
                worst = max(worst, abs(lhs - rhs) / rhs)
    if worst > 1e-12:
        failures.append(f"two-class identity drifts {worst:.2e}")
    conclude(10, "algebraic round trips", failures)


def test_criterion_11_simulator(tmp_path):
    from test_simulate import geometric_gof_p_value

    failures = []
    lengths = draw_word_lengths(SimulationConfig(0.883, 27, 10**6, 42))
    mean = float(lengths.mean())
    if abs(mean - 1.0 / 0.117) > 0.03:
        failures.append(f"mean {mean:.4f} vs {1/0.117:.4f} +/- 0.03")
    p_value = geometric_gof_p_value(lengths, 0.883)
    if p_value < 0.001:
        failures.append(f"geometric GOF rejected (p={p_value:.5f})")
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["simulate", "--p", "0.883", "--symbols", "27", "--words", "50000",
            "--seed", "42"]
    cli_main(args + ["--out", str(first)])
    cli_main(args + ["--out", str(second)])
    if first.read_bytes() != second.read_bytes():
        failures.append("same seed produced different bytes")
    conclude(11, "bag-model simulator", failures)

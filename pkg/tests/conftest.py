import itertools
import string

import numpy as np
import pytest

from wordlen.lengthmodel import model_histogram

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def distinct_words_of_length(length, count):
    """First ``count`` words of a given length, in lexical order."""
    out = []
    for combo in itertools.product(string.ascii_lowercase, repeat=length):
        out.append("".join(combo))
        if len(out) == count:
            return out
    raise ValueError(f"cannot build {count} distinct words of length {length}")


@pytest.fixture(scope="session")
def reference_style_wordlist(tmp_path_factory):
    """Word list with the English reference counts at lengths 2 and 3."""
    lines = distinct_words_of_length(2, 93) + distinct_words_of_length(3, 754)
    path = tmp_path_factory.mktemp("data") / "reference_style.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def model_wordlist(tmp_path_factory):
    """Word list whose length histogram equals the rounded model at p=0.85."""
    counts = np.round(model_histogram(27, 0.85, 50)).astype(int)
    lines = []
    for length, count in enumerate(counts, start=1):
        if count:
            lines.extend(distinct_words_of_length(length, int(count)))
    path = tmp_path_factory.mktemp("data") / "model_p085.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path

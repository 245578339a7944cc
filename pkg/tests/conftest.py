import itertools
import random

import pytest

from z2z4cyclic import _kernel_py
from z2z4cyclic.linalg import MixedMatrix
from z2z4cyclic.words import MixedWord

try:
    from z2z4cyclic import _ckernel
except ImportError:  # extension not built
    _ckernel = None


BACKENDS = [_kernel_py] + ([_ckernel] if _ckernel is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def kernel(request):
    return request.param


def random_word(rng, alpha, beta):
    return MixedWord([rng.randrange(2) for _ in range(alpha)],
                     [rng.randrange(4) for _ in range(beta)])


def random_matrix(rng, alpha, beta, nrows):
    return MixedMatrix(alpha, beta, [random_word(rng, alpha, beta) for _ in range(nrows)])


def random_sparse_matrix(rng, alpha, beta, nrows):
    """Rows biased towards even entries so order-two structure shows up."""
    rows = []
    for _ in range(nrows):
        w = random_word(rng, alpha, beta)
        if rng.random() < 0.5:
            w = MixedWord(w.x, [2 * (v % 2) for v in w.y])
        rows.append(w)
    return MixedMatrix(alpha, beta, rows)


def cyclic_matrix(rng, alpha, beta, nwords=1):
    """Generators closed under shifts: every shift of a few random words."""
    from z2z4cyclic.codes import shift_period

    rows = []
    for _ in range(nwords):
        w = random_word(rng, alpha, beta)
        rows += [w.shift(i) for i in range(shift_period(alpha, beta))]
    return MixedMatrix(alpha, beta, rows)


def binary_span(vectors, n):
    """Brute-force Z2 span of 0/1 tuples."""
    span = {(0,) * n}
    for v in vectors:
        span |= {tuple((a + b) % 2 for a, b in zip(s, v)) for s in span}
    return span


def quaternary_span(vectors, n):
    span = {(0,) * n}
    for v in vectors:
        span = {tuple((a + k * b) % 4 for a, b in zip(s, v)) for s in span for k in range(4)}
    return span


def all_words(alpha, beta):
    for x in itertools.product(range(2), repeat=alpha):
        for y in itertools.product(range(4), repeat=beta):
            yield MixedWord(x, y)


@pytest.fixture
def rng():
    return random.Random(20240615)


# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = marker.args
        detail = getattr(item, "criterion_detail", "")
        _ACCEPTANCE.append((number, title, rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  {detail}".rstrip())

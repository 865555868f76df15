import sys

import pytest

from hodgeideals.poly import parse

# Plane curves with rational singular points that resolve over Q.
CORPUS = {
    "node": "x*y",
    "node_rotated": "x^2-y^2",
    "cusp": "x^2+y^3",
    "tacnode": "x^2+y^4",
    "ramphoid_cusp": "x^2+y^5",
    "A5": "x^2+y^6",
    "triple_lines": "x*y*(x+y)",
    "quadruple_lines": "x*y*(x+y)*(x-y)",
    "E6": "x^3+y^4",
    "E7": "x^3+x*y^3",
    "D5": "x^2*y+y^4",
    "shifted_cusp": "(x-1)^2+(y+2)^3",
}

CENTERS = {"shifted_cusp": (1, -2)}


def P(text, names=("x", "y")):
    return parse(text, list(names))


@pytest.fixture(params=sorted(CORPUS))
def corpus_curve(request):
    name = request.param
    return name, P(CORPUS[name]), CENTERS.get(name, (0, 0))


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance-criterion PASS/FAIL lines (captured during the tests)."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])

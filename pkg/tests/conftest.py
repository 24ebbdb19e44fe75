import pytest

from d0lgrowth import D0LSystem


def cube_system():
    """Hand-written system for x^3 + 1 with letters 0..3, axiom 3."""
    return D0LSystem.from_names(
        ["0", "1", "2", "3"],
        {
            "0": ["0"],
            "1": ["1"] + ["0"] * 6,
            "2": ["2"] + ["0"] * 5 + ["1"],
            "3": ["3", "2"],
        },
        ["3"],
    )


def parabola_system():
    """Hand-written system for (x - 2)^2 + 2 with the chain e, b1, b2."""
    return D0LSystem.from_names(
        ["e", "b1", "b2", "0", "1", "2"],
        {
            "e": [],
            "b1": ["e", "e", "b2"],
            "b2": ["0", "2"],
            "0": ["0"],
            "1": ["1", "0", "0"],
            "2": ["2", "1"],
        },
        ["e"] * 5 + ["b1"],
    )


def identity_system(c=5):
    return D0LSystem.from_names(["a"], {"a": ["a"]}, ["a"] * c)


@pytest.fixture
def cube():
    return cube_system()


@pytest.fixture
def parabola():
    return parabola_system()


@pytest.fixture
def identity():
    return identity_system()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if report.when != "call":
                continue
            props = dict(report.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for text, status in sorted(lines, key=lambda item: int(item[0].split(".")[0])):
            terminalreporter.write_line(f"[{status}] criterion {text}")

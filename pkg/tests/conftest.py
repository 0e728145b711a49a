import pytest

from midarc.analysis import random_triangles

SEED = 42
N_SAMPLES = 1000

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def samples():
    return random_triangles(SEED, N_SAMPLES)


@pytest.fixture(scope="session")
def few_samples(samples):
    return samples[:50]


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion for the summary."""

    def report(label: str, ok: bool, detail: str) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

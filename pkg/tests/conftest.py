import numpy as np
import pytest

from wsnga import Deployment, NetworkConfig, RadioModel, generate_deployment


def line_deployment(points, sink=(0.0, 0.0), energies=None, packet_bits=2000):
    """Hand-placed nodes inside a field large enough to hold them."""
    pts = np.asarray(points, dtype=float)
    span = float(np.abs(np.vstack([pts, [sink]])).max()) * 2 + 2
    cfg = NetworkConfig(
        node_count=len(pts), field_width=span, field_height=span, sink_position=sink, packet_bits=packet_bits
    )
    return Deployment(cfg, pts, energies)


@pytest.fixture
def radio():
    return RadioModel()


@pytest.fixture(scope="session")
def field200():
    return generate_deployment(NetworkConfig(seed=11))


@pytest.fixture(scope="session")
def field12():
    return generate_deployment(NetworkConfig(node_count=12, field_width=100, field_height=100, seed=5))


ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record a one-line verdict for the acceptance summary."""

    def _report(criterion, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

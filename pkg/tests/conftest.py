import pytest

from bpaction import kernels
from bpaction.f2poly import F2Poly

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def warm_kernels():
    """Trigger JIT compilation once so timed sections measure computation only."""
    bits = kernels.field_bits(3)
    a = F2Poly.from_terms(3, [(2, 1, 0), (1, 0, 3)]).keys
    kernels.parity_reduce(a)
    kernels.divide_keys(kernels.mul_keys(a, a), a, 3, bits)
    kernels.transvect_keys(a, 3, bits, 2, 1)
    kernels.sq_keys(a, 3, bits, 1)
    kernels.total_square_keys(a, 3, bits)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section(f"acceptance criteria (kernels: {kernels.BACKEND})")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

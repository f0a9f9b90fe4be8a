import pytest
from hypothesis import HealthCheck, settings

from ncfusion import partition as pc
from ncfusion.category import CategorySpec, closure, family_table, generated_table

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def tables():
    out = {name: family_table(name, 8) for name in ("allnc", "pairs", "unitary", "cs:1", "cs:2", "cs:3", "cinf")}
    out["c0plus"] = family_table("c0plus", 8)
    out["thetasq"] = generated_table([pc.tensor(pc.theta(1), pc.theta(1))], 8)
    return out


@pytest.fixture(scope="session")
def c0plus12():
    """The category generated by the mixed four-block, complete up to 12 points."""
    return closure(CategorySpec((pc.pi0("+"),), bound=12, hard_limit=12))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {text}")

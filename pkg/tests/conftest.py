import pytest

from soficlab import presets


@pytest.fixture
def even():
    return presets.even_shift()


@pytest.fixture
def golden():
    return presets.golden_mean_shift()


@pytest.fixture
def full2():
    return presets.full_shift_2()


@pytest.fixture
def period2():
    return presets.period_2_shift()


@pytest.fixture
def fibonacci():
    return presets.fibonacci_substitution()


# Expose each test's outcome to its fixtures; the acceptance module uses
# this to print a PASS/FAIL line per criterion.
@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    setattr(item, "outcome_" + report.when, report)

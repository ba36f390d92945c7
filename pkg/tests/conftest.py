import pytest

from builders import SCIENTISTS
from centerorder.ingest import read_document
from centerorder.ordering import plan_orders
from centerorder.scoring import score_document


@pytest.fixture(scope='session')
def scientists():
    return read_document(SCIENTISTS)


@pytest.fixture(scope='session')
def scored(scientists):
    return score_document(scientists)


@pytest.fixture(scope='session')
def plans(scored):
    return plan_orders(scored)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section('acceptance criteria')
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)

import pytest

from copsrobber.corpus import connected_atlas, interval_corpus, named_instances, random_interval_representation
from copsrobber.interval import intersection_graph
from copsrobber.verify import SUITES, run_suite


def test_corpus_sizes():
    assert len(connected_atlas(7)) == 996
    assert len(connected_atlas(4)) == 1 + 1 + 2 + 6
    assert all(g.n <= 9 and g.is_connected() for _, g in named_instances(9))
    assert len(interval_corpus(12)) == 3 + 11 * 12


def test_random_representations_are_deterministic():
    assert random_interval_representation(9, 3) == random_interval_representation(9, 3)
    assert intersection_graph(random_interval_representation(9, 3)).is_connected()


@pytest.mark.parametrize("suite", ["chordal", "products"])
def test_quick_suites_pass(suite):
    checks = run_suite(suite)
    assert checks and all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


def test_suite_names():
    assert set(SUITES) == {"interval", "chordal", "treewidth", "helicopter", "products", "contraction", "all"}

"""Connected-permutation counts by enumeration and by series inversion."""

import pytest

from descon.series import (
    ConnectedCountTable,
    connected_counts_enumerated,
    connected_counts_series,
)

from golden_tables import CONNECTED_COUNTS


def test_enumerated_examples():
    table = connected_counts_enumerated(5)
    assert table.source == "enumeration"
    assert table.count(1) == 1
    assert table.count(3) == 3
    assert table.count(5) == 71


def test_series_examples():
    table = connected_counts_series(6)
    assert table.source == "series"
    assert table.count(1) == 1
    assert table.counts == (1, 1, 3, 13, 71, 461)


@pytest.mark.parametrize("max_n", (1, 4, 7))
def test_routes_agree(max_n):
    assert connected_counts_enumerated(max_n).counts == connected_counts_series(max_n).counts


def test_series_matches_pinned_values():
    assert connected_counts_series(9).counts == CONNECTED_COUNTS


def test_table_validation():
    with pytest.raises(ValueError):
        ConnectedCountTable(2, (1,), "series")
    with pytest.raises(ValueError):
        ConnectedCountTable(2, (2, 1), "series")
    with pytest.raises(IndexError):
        connected_counts_series(3).count(4)
    with pytest.raises(ValueError):
        connected_counts_series(0)

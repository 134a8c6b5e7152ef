import pandas as pd
import pytest

from specocc.api.errors import IncompleteGridError
from specocc.metrics import average_rank_table
from specocc.metrics import rank_table
from specocc.metrics.ranking import check_grid


def frame(rows):
    return pd.DataFrame(rows, columns=['dataset', 'method', 'metric',
                                       'value'])


GRID = frame([
    ('a', 'occlusion', 'auc', 0.2), ('a', 'frequency', 'auc', 0.3),
    ('a', 'random', 'auc', 0.6),
    ('b', 'occlusion', 'auc', 0.4), ('b', 'frequency', 'auc', 0.1),
    ('b', 'random', 'auc', 0.5),
    ('a', 'occlusion', 'continuity', 1.0),
    ('a', 'frequency', 'continuity', 1.0),
    ('a', 'random', 'continuity', 9.0),
    ('b', 'occlusion', 'continuity', 2.0),
    ('b', 'frequency', 'continuity', 3.0),
    ('b', 'random', 'continuity', 9.0),
])


def test_rank_table():
    ranks = rank_table(GRID, 'auc')
    assert ranks.loc['a', 'occlusion'] == 1
    assert ranks.loc['b', 'frequency'] == 1
    assert ranks.loc['a', 'random'] == 3


def test_ties_share_ranks():
    ranks = rank_table(GRID, 'continuity')
    assert ranks.loc['a', 'occlusion'] == 1.5
    assert ranks.loc['a', 'frequency'] == 1.5


def test_average_rank_table():
    table = average_rank_table(GRID)
    assert list(table.columns) == ['auc', 'continuity']
    assert table.loc['occlusion', 'auc'] == pytest.approx(1.5)
    assert table.loc['random', 'auc'] == pytest.approx(3.0)
    assert table.loc['frequency', 'continuity'] == pytest.approx(1.75)


def test_samples_are_averaged_before_ranking():
    rows = frame([('a', 'x', 'auc', 0.1), ('a', 'x', 'auc', 0.9),
                  ('a', 'y', 'auc', 0.4)])
    ranks = rank_table(rows, 'auc')
    assert ranks.loc['a', 'y'] == 1


def test_incomplete_grid():
    incomplete = GRID[~((GRID['dataset'] == 'b') &
                        (GRID['method'] == 'random') &
                        (GRID['metric'] == 'auc'))]
    check_grid(incomplete, 'continuity')
    with pytest.raises(IncompleteGridError):
        check_grid(incomplete, 'auc')
    with pytest.raises(IncompleteGridError):
        average_rank_table(incomplete)

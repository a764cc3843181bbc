"""Shared fixtures: the fixed pool of reduced forbidden lists."""

import pytest

from runcomp import Word, make_forbidden_list

# Reduced lists over letters <= 3 with words of length <= 3.  The last four
# have a nonzero cross-correlation (a suffix of one word is a prefix of
# another), so they exercise the general solver rather than the closed form.
POOL_SPECS = [
    [(1, 1)],
    [(2, 2)],
    [(3,)],
    [(1, 1), (2, 2)],
    [(1, 1), (2, 2), (3, 3)],
    [(1,), (2, 2)],
    [(1, 1, 2)],
    [(2, 1, 2)],
    [(1, 2), (2, 1)],
    [(1, 2), (2, 3)],
    [(1, 3), (3, 1)],
    [(1, 2), (2, 1), (3, 3)],
]


@pytest.fixture(scope="session")
def list_pool():
    return [make_forbidden_list([Word(w) for w in spec]) for spec in POOL_SPECS]

import pytest

from revstack.enumeration import DescentTable, descent_table


@pytest.fixture(scope="session")
def get_table():
    """Memoised access to descent tables; the big enumerations run once."""
    cache: dict[tuple[int, str], DescentTable] = {}

    def _get(n: int, sorter: str = "revstack") -> DescentTable:
        key = (n, sorter)
        if key not in cache:
            cache[key] = descent_table(n, sorter)
        return cache[key]

    return _get

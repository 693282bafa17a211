import pytest

from commsyz.fields import GF
from commsyz.verify import DeskContext


@pytest.fixture(scope="session")
def ctx():
    """One shared cache of systems, bases, colon ideals, and syzygy runs."""
    return DeskContext(field=GF(32003))

import os

import pytest

EXTENDED = os.environ.get("PRM_EXTENDED") == "1"


@pytest.fixture(params=[(2, 2), (2, 3), (3, 2)], ids=lambda qs: "F%d^%d" % qs)
def small_ext(request):
    return request.param

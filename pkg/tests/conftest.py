import json

import pytest

from tork import SimplicialComplex,monomial_quotient


SQUARE_FACETS = [[1,2],[2,3],[3,4],[1,4]]
PENTAGON_FACETS = [[1,2],[2,3],[3,4],[4,5],[1,5]]



@pytest.fixture
def square():
    return SimplicialComplex.from_facets(4, SQUARE_FACETS)


@pytest.fixture
def pentagon():
    return SimplicialComplex.from_facets(5, PENTAGON_FACETS)


@pytest.fixture
def three_generators():
    """`Q[v1,v2]/(v1², v1v2, v2²)`, levels [1, 2]."""
    return monomial_quotient(2, [[2,0],[1,1],[0,2]], 2)


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


@pytest.fixture
def square_file(write_json):
    return write_json("square.json", {"m": 4, "facets": SQUARE_FACETS})


@pytest.fixture
def point_module_file(write_json):
    return write_json("point-module.json", {"m": 3, "levels": [1], "mult": []})

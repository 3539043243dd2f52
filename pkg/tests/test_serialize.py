from fractions import Fraction

import pytest

from semimatroids import serialize as ser
from semimatroids.arrangement import Arrangement
from semimatroids.assigning import u24_assigning
from semimatroids.graph import MultiGraph
from semimatroids.linalg import GF
from semimatroids.matroid import CapError, Matroid
from semimatroids.semimatroid import Semimatroid


def test_dumps_is_canonical():
    assert ser.dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


def test_loads_reports_position():
    with pytest.raises(ser.ParseError, match="line 2 column"):
        ser.loads('{\n  "a": }', "x.json")


def test_matroid_forms():
    assert ser.matroid_from_json({"uniform": [2, 4]}) == Matroid.uniform(2, 4)
    M = ser.matroid_from_json({"matrix": {"field": "Q", "columns": [[1, 0], [0, 1], [1, 1]]}})
    assert M == Matroid.uniform(2, 3)
    M = ser.matroid_from_json({"matrix": {"field": "Fp", "p": 2, "columns": [[1, 1], [1, -1]]}})
    assert M.rank() == 1
    M = ser.matroid_from_json({"graph": {"vertices": 3, "edges": [[1, 2], [2, 3], [1, 3]]}})
    assert M == Matroid.uniform(2, 3)
    U = Matroid.uniform(2, 4)
    assert ser.matroid_from_json(ser.matroid_to_json(U)) == U
    with pytest.raises(ser.ParseError):
        ser.matroid_from_json({"ground_size": 2, "rank": {"0": 0, "x": 1}})


def test_semimatroid_round_trip_and_forms():
    S = Semimatroid(0b11, [0, 1, 2], {0: 0, 1: 1, 2: 1})
    assert ser.semimatroid_from_json(ser.semimatroid_to_json(S)) == S
    P = ser.semimatroid_from_json({"pointed": {"matroid": {"uniform": [2, 3]}, "p": 2}})
    assert P.central == {0, 1, 2}
    assert ser.semimatroid_from_json({"uniform": [2, 4]}) == Semimatroid.from_matroid(Matroid.uniform(2, 4))
    with pytest.raises(ser.ParseError):
        ser.semimatroid_from_json({"ground_size": 2, "central": ["0", "3"], "rank": {"0": 0, "3": 2}})


def test_assigning_round_trip():
    A = u24_assigning((1, 3))
    assert ser.assigning_from_json(ser.assigning_to_json(A)) == A
    with pytest.raises(ser.ParseError):
        ser.assigning_from_json({"matroid": {"uniform": [2, 4]}, "assigning": {"7": 1}})


def test_arrangement_round_trip():
    A = Arrangement(2, [([1, Fraction(1, 2)], Fraction(-1, 3)), ([0, 1], 0)])
    data = ser.arrangement_to_json(A)
    assert data["hyperplanes"][0]["normal"] == ["1", "1/2"]
    assert data["hyperplanes"][0]["offset"] == "-1/3"
    back = ser.arrangement_from_json(data)
    assert back.normals == A.normals and back.offsets == A.offsets
    B = Arrangement(1, [([1], 2)], GF(5))
    assert ser.arrangement_from_json(ser.arrangement_to_json(B)).field == GF(5)
    with pytest.raises(ser.ParseError, match="expected 2 entries"):
        ser.arrangement_from_json({"field": "Q", "dim": 2, "hyperplanes": [{"normal": [1], "offset": 0}]})
    with pytest.raises(ser.ParseError, match="characteristic"):
        ser.arrangement_from_json({"field": "Fp", "dim": 1, "hyperplanes": []})
    with pytest.raises(ser.ParseError):
        ser.arrangement_from_json({"field": {"Fp": 6}, "dim": 1, "hyperplanes": []})
    big = {"field": "Q", "dim": 1, "hyperplanes": [{"normal": [1], "offset": k} for k in range(21)]}
    with pytest.raises(CapError):
        ser.arrangement_from_json(big)


def test_graph_round_trip():
    G = MultiGraph(2, [(1, 2), (1, 1)])
    data = ser.graph_to_json(G, [(2, 1), (1, 1)], [Fraction(1, 2), 0])
    G2, D, gains = ser.graph_from_json(data)
    assert G2 == G and D == [(2, 1), (1, 1)] and gains == [Fraction(1, 2), 0]
    G3, D3, g3 = ser.graph_from_json({"vertices": 2, "edges": [[1, 2]]})
    assert D3 == [(1, 2)] and g3 == [0]
    with pytest.raises(ser.ParseError):
        ser.graph_from_json({"vertices": 2, "edges": [[1, 3]]})
    with pytest.raises(ser.ParseError):
        ser.graph_from_json({"vertices": 2, "edges": [[1, 2]], "orientation": [[1, 1]]})
    with pytest.raises(ser.ParseError):
        ser.graph_from_json({"vertices": 2, "edges": [[1, 2]], "gains": [1, 2]})

"""Smoke test for the pyheisid extension module.

Build and install first:
    pip install --no-build-isolation ./crates/python
or
    maturin develop -m crates/python/Cargo.toml
"""

import json
from fractions import Fraction

import pyheisid as h


def main():
    gens = [
        h.Triple(["2"], ["7"], "20"),
        h.Triple([3], [-2], 20),
        h.Triple(["-4"], ["-6"], "20"),
        h.Triple(["-1"], ["1"], "20"),
    ]

    n1 = gens[0] * gens[1] * gens[2] * gens[3]
    assert (n1.a, n1.b, n1.c) == (["0"], ["0"], "47"), n1
    n2 = gens[0].power(4) * gens[1].power(4) * gens[2].power(4) * gens[3].power(4)
    assert n2.c == "-22", n2
    assert (n1.power(22) * n2.power(47)).is_identity()
    assert not gens[0].commutes(gens[1])
    assert gens[0].compose(gens[0].inverse()).is_identity()
    assert h.Triple.from_matrix(gens[0].to_matrix()) == gens[0]
    assert h.Triple([Fraction(1, 2)], [0], 0).a == ["1/2"]

    v = h.decide(gens, jobs=2)
    assert v.is_yes() and v.route == ("pair", [0, 1]), v
    assert h.verify_witness(gens, v.witness_json)
    tampered = json.loads(v.witness_json)
    tampered[0]["repeat"] = str(int(tampered[0]["repeat"]) + 1)
    assert not h.verify_witness(gens, json.dumps(tampered))

    assert h.decide([h.Triple([1], [0], 0)]).answer == "no"
    assert json.loads(h.decide_json('{"n":3,"generators":[{"a":["1"],"b":["0"],"c":"0"}]}')) == {"answer": "no"}

    assert h.oracle(gens, 4) is None
    assert h.oracle([h.Triple([1], [0], 0), h.Triple([-1], [0], 0)], 3) == [0, 1]

    y = h.solve_homogeneous([["2", "3", "-4", "-1"]], forced=[0, 2])
    assert 2 * y[0] + 3 * y[1] - 4 * y[2] - y[3] == 0 and y[0] > 0 and y[2] > 0
    assert h.solve_homogeneous([[1, 1]]) is None

    checks = h.verify_embedding()
    assert len(checks) == 11 and all(ok for _, ok, _ in checks)

    mats = h.pcp_generators(["a1", "a2"], ["ab", "b"], ["a", "bb"])
    assert len(mats) == 5 and mats[-1][0] == "B"
    labels = h.pcp_witness(["a1", "a2"], ["ab", "b"], ["a", "bb"], ["a1", "a2"])
    assert labels[-1] == "B" and len(labels) == 12

    try:
        h.Triple(["1"], ["1", "2"], "0")
    except ValueError:
        pass
    else:
        raise AssertionError("dimension mismatch must raise ValueError")

    print("pyheisid smoke test: OK")


if __name__ == "__main__":
    main()

"""Smoke test for the `elc` Python module.

Build and install first:
    pip install --no-build-isolation -e crates/py
"""

import elc


def main():
    p4 = elc.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.graph6() == "Ch"
    assert elc.Graph.from_graph6("Ch") == p4
    assert p4.order() == 4 and len(p4.edges()) == 3
    assert elc.orbit_size(p4) == 2
    assert elc.preserved_witness(p4) == (1, 2)
    assert not elc.is_elc_preserved(p4)

    # ELC is an involution on the edge it acts on.
    assert p4.elc(1, 2).elc(1, 2) == p4
    assert p4.lc(1).lc(1) == p4

    he4 = elc.Graph.construct("he4")
    assert he4.order() == 16 and elc.is_elc_preserved(he4)
    assert elc.orbit_size(elc.Graph.construct("s5"), kind="lc") == 2
    assert elc.orbit_size(elc.Graph.construct("circ(3)")) == 2

    h3 = elc.Graph.construct("h3")
    big, small = sorted(h3.bipartition(), key=len, reverse=True)
    r = elc.code_params(h3, big)
    assert (r["params"], r["dual_params"]) == ("[7,4,3]", "[7,3,4]")
    he3 = elc.code_params(elc.Graph.construct("he3"))
    assert he3["params"] == "[8,4,4]" and he3["self_dual"] and he3["isodual"]

    relabeled = elc.Graph(4, [(3, 1), (1, 0), (0, 2)])
    assert relabeled.canonical_key() == p4.canonical_key()
    assert relabeled.is_isomorphic(p4)

    assert len(elc.connected_graphs(5)) == 21
    assert [elc.count_orbits(n, True) for n in range(2, 8)] == [1, 1, 2, 3, 8, 15]
    assert [elc.census("bp_n", n) for n in range(2, 9)] == [1, 1, 1, 1, 2, 2, 3]
    assert elc.census("size_two_lc", 6) == 2

    try:
        elc.census("b_n", 13)
    except MemoryError:
        pass
    else:
        raise AssertionError("order above the census limit was accepted")
    try:
        elc.Graph.construct("nonsense(")
    except ValueError:
        pass
    else:
        raise AssertionError("bad expression was accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()

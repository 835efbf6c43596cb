"""Smoke test for the cintervals extension module.

Build and install first:
    pip install --no-build-isolation ./crates/python
"""

import json

import cintervals as ci


def main():
    p = ci.Structure.permutation([3, 8, 1, 5, 7, 4, 6, 2])
    g = ci.family_generator("A", p)
    assert g.is_member(4, 7)
    assert not ci.is_simple(p)
    x, y = ci.nontrivial_common_interval(p)
    assert (x, y) in ci.brute_force_family("A", p)

    fig1 = ci.Generator([9, 4, 4, 7, 7, 7, 9, 9, 9], [1, 1, 1, 3, 4, 1, 6, 7, 1])
    assert fig1.is_member(1, 6) and not fig1.is_member(2, 5)

    for kind in "ABCDEFGH":
        s = ci.random_instance(kind, 12, 7)
        members = ci.enumerate(kind, s)
        assert members == ci.family_generator(kind, s).materialize()
        assert members == ci.brute_force_family(kind, s), kind

    dag = ci.Structure.dag(3, [(2, 1)])
    assert sorted(ci.enumerate("H", dag)) == [(1, 1), (1, 2), (1, 3), (2, 2), (3, 3)]
    star = ci.Structure.tree(4, [(1, 2), (1, 3), (1, 4)])
    assert len(ci.enumerate("E", star)) == 7

    fig4 = ci.Structure.permutation([6, 7, 8, 9, 3, 5, 1, 4, 2, 14, 16, 15, 17, 18, 12, 10, 13, 11])
    tree = ci.decompose(fig4)
    assert tree == ci.brute_force_decomposition(fig4)
    assert json.loads(tree.to_json())["label"] == tree.root_label == "Increasing"
    assert sorted(tree.expand_family()) == sorted(ci.enumerate("A", fig4))

    try:
        ci.Structure.permutation([1, 1])
    except ValueError as e:
        assert "bijection" in str(e)
    else:
        raise AssertionError("invalid permutation accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()

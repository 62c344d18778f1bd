import math

import symchar


def test_basic_combinatorics():
    assert symchar.sort_desc([1, 3, 2]) == [3, 2, 1]
    assert symchar.cycle_type([2, 1, 4, 3]) == [2, 2]
    assert symchar.z_factor([2, 2]) == 8
    assert len(symchar.partitions_of(8)) == 22


def test_characters():
    assert symchar.char_mn([2, 2], [2, 2]) == 2
    assert symchar.char_jt([2, 2], [2, 2]) == 2
    assert symchar.char_mn([2, 1], [3]) == -1
    assert symchar.dimension([2, 1]) == 2
    # Squared dimensions sum to n!.
    for n in range(1, 7):
        total = sum(symchar.dimension(p) ** 2 for p in symchar.partitions_of(n))
        assert total == math.factorial(n)


def test_set_partitions():
    assert symchar.count_ordered_partitions([1, 1, 1, 1], [2, 2]) == 6
    same = symchar.count_with_fixed_pair([1, 1], [2, 0], 0, 1, True)
    assert same == 1
    assert symchar.phi_induced([2, 1], [1, 1, 1]) == 3


def test_matchings_and_sat():
    assert symchar.count_3dm(1, [[1, 1, 1]]) == 1
    assert symchar.count_4dm(2, [[1, 1, 1, 1], [2, 2, 2, 2]]) == 1
    circuit = "input x1\ninput x2\ngate g1 = OR x1 x2\noutput g1\n"
    assert symchar.count_circuit_text(circuit) == 3
    assert symchar.count_dimacs(symchar.tseytin_dimacs(circuit)) == 3


def test_pipeline():
    enc = symchar.parsimonious_encode([1, 1], [1, 1])
    assert enc["lambda"] == [3, 3]
    assert symchar.char_mn(enc["lambda"], enc["alpha"]) == 2

    diff = symchar.char_instance_diff([2, 4], [])
    assert diff["lambda"] == [36, 27]
    assert symchar.char_jt(diff["lambda"], diff["alpha"]) == 1

    res = symchar.reduce_matching_pair(1, [[1, 1, 1]], 1, [])
    chi = symchar.char_jt(res["lambda"], res["alpha"], 8)
    assert chi == res["delta"] * (1 - 0)

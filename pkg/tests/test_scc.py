import random

from zdclean.scc import can_reach, strongly_connected_components


def closure(succ):
    n = len(succ)
    reach = [set(s) for s in succ]
    for k in range(n):
        for i in range(n):
            if k in reach[i]:
                reach[i] |= reach[k]
    return reach


def test_small_graph():
    succ = [[1], [2], [0], [3, 4], []]
    assert sorted(strongly_connected_components(succ)) == [[0, 1, 2], [3], [4]]
    assert can_reach(succ, [4]) == [False, False, False, True, True]


def test_deep_chain_no_recursion_limit():
    n = 20000
    succ = [[i + 1] for i in range(n - 1)] + [[0]]
    assert strongly_connected_components(succ) == [list(range(n))]


def test_random_against_closure():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 14)
        succ = [sorted(rng.sample(range(n), rng.randint(0, min(3, n)))) for _ in range(n)]
        reach = closure(succ)
        comps = strongly_connected_components(succ)
        assert sorted(x for c in comps for x in c) == list(range(n))
        for c in comps:
            for a in c:
                for b in c:
                    assert a == b or (b in reach[a] and a in reach[b])
        targets = [x for x in range(n) if x % 3 == 0]
        expect = [x in targets or bool(reach[x] & set(targets)) for x in range(n)]
        assert can_reach(succ, targets) == expect

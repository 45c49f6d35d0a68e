import random
import threading

import pytest

from mincut.errors import ContractError
from mincut.union_find import ConcurrentUnionFind, UnionFind


@pytest.mark.parametrize("cls", [UnionFind, ConcurrentUnionFind])
def test_basics(cls):
    uf = cls(5)
    assert uf.find(3) == 3
    assert uf.union(0, 1)
    assert uf.n_sets == 4
    assert not uf.union(0, 1)
    assert not uf.union(1, 0)
    uf.union(3, 4)
    uf.union(1, 4)
    assert uf.blocks() == [[0, 1, 3, 4], [2]]
    with pytest.raises(ContractError):
        uf.find(5)


def test_concurrent_links_to_smaller_root():
    uf = ConcurrentUnionFind(4)
    uf.union(3, 2)
    uf.union(2, 1)
    assert uf.find(3) == 1
    assert uf.same(3, 1)
    assert not uf.same(0, 3)


def test_union_order_irrelevant():
    rng = random.Random(1)
    pairs = [(rng.randrange(50), rng.randrange(50)) for _ in range(40)]
    base = UnionFind(50)
    for a, b in pairs:
        base.union(a, b)
    for _ in range(5):
        rng.shuffle(pairs)
        uf = ConcurrentUnionFind(50)
        for a, b in pairs:
            uf.union(b, a)
        assert uf.blocks() == base.blocks()


def test_threads_match_sequential_replay():
    n, per_worker, workers = 2000, 5000, 4
    rng = random.Random(5)
    scripts = [[(rng.randrange(n), rng.randrange(n)) for _ in range(per_worker)]
               for _ in range(workers)]
    uf = ConcurrentUnionFind(n)
    wins = [0] * workers

    def work(i):
        wins[i] = sum(uf.union(a, b) for a, b in scripts[i])

    threads = [threading.Thread(target=work, args=(i,)) for i in range(workers)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    ref = UnionFind(n)
    for script in scripts:
        for a, b in script:
            ref.union(a, b)
    assert uf.blocks() == ref.blocks()
    # each successful union merged exactly two sets
    assert sum(wins) == n - ref.n_sets == n - uf.n_sets

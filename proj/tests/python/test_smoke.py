import pytest

import decisum


EXAMPLE = [(1, 5), (2, 3), (0, 4)]


def test_top_k_min_and_max():
    ranked = decisum.top_k(EXAMPLE, 4)
    assert [r[1] for r in ranked] == [3, 4, 7, 7]
    assert ranked[1] == (2, 4.0, [0, 1, 0])
    best = decisum.top_k(EXAMPLE, 1, "max")
    assert best[0][1] == 12.0


def test_matches_oracle():
    pairs = [(0.3, 0.1), (0.7, 0.2), (0.5, 0.55), (0.9, 0.05), (0.4, 0.41)]
    fast = [r[1] for r in decisum.top_k(pairs, 32)]
    slow = [r[1] for r in decisum.brute_force_top_k(pairs, 32)]
    assert fast == pytest.approx(slow, rel=1e-12)


def test_instance_and_enumerator():
    inst = decisum.ProblemInstance.normalize(EXAMPLE)
    assert inst.delta == [1, 4, 4]
    assert inst.perm == [1, 0, 2]
    assert inst.score("111") == 12
    it = decisum.Enumerator(inst)
    assert it.pending_size == 1
    sums = []
    while (step := it.advance()) is not None:
        sums.append(step[1])
    assert sums == [3, 4, 7, 7, 8, 8, 11, 12]
    assert it.exhausted


def test_shift_and_successors():
    assert decisum.shift("110", 2) == "101"
    assert sorted(decisum.successors("010")) == ["001", "110"]


def test_decode_and_crc():
    assert decisum.crc8_bytes(b"123456789") == 0xF4
    result = decisum.decode([(0.1, 0.9), (0.8, 0.2), (0.6, 0.4)], "parity")
    assert result["found"]
    assert result["rank"] == 2
    assert result["bits"] == [1, 0, 1]


def test_errors():
    with pytest.raises(decisum.NonFiniteInput):
        decisum.top_k([(float("nan"), 1.0)], 1)
    with pytest.raises(decisum.InvalidK):
        decisum.top_k(EXAMPLE, 0)
    with pytest.raises(ValueError):
        decisum.top_k(EXAMPLE, 1, "sideways")


def test_bench_and_fit():
    rows = decisum.run_bench([10], 200, samples=5)
    assert rows[-1]["k"] == 200
    coeffs, r2 = decisum.fit_polynomial([1, 2, 3, 4], [1, 4, 9, 16], 2)
    assert coeffs[2] == pytest.approx(1.0)
    assert r2 == pytest.approx(1.0)

from hypothesis import given
from hypothesis import strategies as st

from surfcalc import perms

from strategies import permutations_of


@st.composite
def blocks(draw, max_k=4, max_size=3):
    k = draw(st.integers(0, max_k))
    sigma = draw(permutations_of(k))
    taus = [draw(permutations_of(draw(st.integers(0, max_size)))) for _ in range(k)]
    return sigma, taus


def test_examples():
    assert perms.block_permutation((2, 1), [1, 2]) == (3, 1, 2)
    assert perms.direct_sum((2, 1), (1,)) == (2, 1, 3)
    assert perms.operad_compose((2, 1), [(1,), (2, 1)]) == (3, 2, 1)
    assert perms.delete_letter((3, 1, 2), 1) == (2, 1)


@given(st.data())
def test_group_laws(data):
    n = data.draw(st.integers(0, 6))
    a, b, c = (data.draw(permutations_of(n)) for _ in range(3))
    assert perms.compose(a, perms.compose(b, c)) == perms.compose(perms.compose(a, b), c)
    assert perms.compose(a, perms.inverse(a)) == perms.identity(n)


@given(blocks())
def test_block_permutation_moves_whole_blocks(case):
    sigma, taus = case
    sizes = [len(t) for t in taus]
    moved = perms.block_permutation(sigma, sizes)
    # slot-chasing: element q of block i lands at q inside target block sigma(i)
    targets = [0] * len(sigma)
    for i, s in enumerate(sizes):
        targets[sigma[i] - 1] = s
    start = perms.offsets(targets)
    src = perms.offsets(sizes)
    for i, s in enumerate(sizes):
        for q in range(s):
            assert moved[src[i] + q] == start[sigma[i] - 1] + q + 1


@given(blocks(), st.data())
def test_block_permutations_compose(case, data):
    sigma, taus = case
    tau = data.draw(permutations_of(len(sigma)))
    sizes = [len(t) for t in taus]
    moved = [0] * len(sigma)
    for i, s in enumerate(sizes):
        moved[sigma[i] - 1] = s
    lhs = perms.compose(perms.block_permutation(tau, moved), perms.block_permutation(sigma, sizes))
    assert lhs == perms.block_permutation(perms.compose(tau, sigma), sizes)


@given(blocks())
def test_operad_compose_reads_as_orderings(case):
    sigma, taus = case
    out = perms.operad_compose(sigma, taus)
    assert perms.is_perm(out) and len(out) == sum(len(t) for t in taus)
    # with identity blocks of size one, composition is sigma itself
    assert perms.operad_compose(sigma, [(1,)] * len(sigma)) == sigma

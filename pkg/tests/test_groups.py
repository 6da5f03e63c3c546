import pytest

from amalgrowth.groups import (
    EmbeddingError,
    GroupValidationError,
    build_group,
    coset_transversal,
    cyclic,
    dihedral,
    direct_product,
    from_table,
    verify_embedding,
)


def test_cyclic_basic():
    g = cyclic(5)
    assert g.order == 5
    assert g.identity == 0
    assert g.mul[2][4] == 1
    assert g.inv[2] == 3
    assert g.element_order(1) == 5
    assert g.is_abelian()


def test_cyclic_trivial():
    g = cyclic(1)
    assert g.order == 1
    assert g.identity == 0


def test_dihedral_relations():
    # b a = a^-1 b, with a = index 1 and b = index n
    for order in (4, 6, 8, 12):
        g = dihedral(order)
        n = order // 2
        a, b = 1, n
        assert g.mul[b][a] == g.mul[g.inv[a]][b]
        assert g.element_order(b) == 2
        assert g.element_order(a) == n
        assert g.mul[b][b] == g.identity


def test_dihedral_rejects_odd():
    with pytest.raises(ValueError):
        dihedral(5)


def test_direct_product_klein():
    v = direct_product(cyclic(2), cyclic(2))
    assert v.order == 4
    assert all(v.element_order(x) <= 2 for x in range(4))
    assert v.is_abelian()


def test_from_table_rejects_bad_tables():
    with pytest.raises(GroupValidationError):
        from_table([[0, 0], [0, 0]])  # rows not permutations
    with pytest.raises(GroupValidationError):
        from_table([[1, 0], [1, 0]])  # columns not permutations


def test_from_table_rejects_nonassociative():
    # A quasigroup of order 5 (rows/columns are permutations, identity at 0)
    # that is not associative.
    mul = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupValidationError):
        from_table(mul)


def test_build_group_families():
    assert build_group({"family": "cyclic", "n": 3}).order == 3
    assert build_group({"family": "dihedral", "order": 6}).order == 6
    p = build_group({"family": "product",
                     "left": {"family": "cyclic", "n": 2},
                     "right": {"family": "cyclic", "n": 3}})
    assert p.order == 6
    with pytest.raises(ValueError):
        build_group({"family": "nope"})


def test_verify_embedding_accepts_c2_in_d6():
    c2 = cyclic(2)
    d6 = dihedral(6)
    emb = verify_embedding(c2, d6, [0, 3])  # 1 -> 1, t -> b
    assert emb.image == (0, 3)


def test_verify_embedding_rejects_bad_maps():
    c2 = cyclic(2)
    d6 = dihedral(6)
    with pytest.raises(EmbeddingError):
        verify_embedding(c2, d6, [0, 0])  # not injective
    with pytest.raises(EmbeddingError):
        verify_embedding(c2, d6, [0, 1])  # image of t has order 3
    with pytest.raises(EmbeddingError):
        verify_embedding(c2, d6, [0])  # wrong length


def test_transversal_partitions_group():
    c2 = cyclic(2)
    d6 = dihedral(6)
    emb = verify_embedding(c2, d6, [0, 3])
    t = coset_transversal(d6, emb)
    assert t.reps[0] == d6.identity
    assert len(t.reps) == 3
    covered = set()
    for g in range(d6.order):
        rep, ci = t.factorization[g]
        assert rep in t.reps
        assert d6.mul[rep][emb.image[ci]] == g
        covered.add(g)
    assert len(covered) == d6.order

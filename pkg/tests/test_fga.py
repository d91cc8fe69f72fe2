import random

import pytest

from homlab.fga import (
    CanonicalForm,
    FgAbGroup,
    GroupHom,
    IllDefinedHomError,
    IntMatrix,
    composite_is_zero,
    direct_sum,
    hnf_rows,
    hom_cokernel,
    hom_image,
    hom_kernel,
    is_exact_at,
    is_isomorphism,
    hstack,
    kernel,
    lattice_basis,
    preimage_lattice,
    present_subquotient,
    rank,
    same_lattice,
    smith,
    solve,
    unimodular_inverse,
)

from oracles import frac_nullity, minor_gcd_invariants, quotient_invariants


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    return IntMatrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)],
                     rows, cols)


def check_smith_contract(A, s):
    assert s.U @ A @ s.V == s.D
    assert abs(s.U.det()) == 1
    assert abs(s.V.det()) == 1
    diag = s.diagonal()
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if b:
            assert a != 0 and b % a == 0
    for i in range(s.D.rows):
        for j in range(s.D.cols):
            if i != j:
                assert s.D.data[i][j] == 0


def test_smith_documented_example():
    # gcd of entries is 2 and |det| = 8, so the invariant chain is (2, 4)
    A = IntMatrix([[2, 4], [6, 8]])
    s = smith(A)
    check_smith_contract(A, s)
    assert s.diagonal() == (2, 4)


def test_smith_zero_matrix():
    A = IntMatrix.zeros(2, 3)
    s = smith(A)
    assert s.D == IntMatrix.zeros(2, 3)
    assert s.U == IntMatrix.identity(2)
    assert s.V == IntMatrix.identity(3)


def test_smith_identity():
    A = IntMatrix.identity(3)
    s = smith(A)
    assert s.D == IntMatrix.identity(3)
    check_smith_contract(A, s)


def test_smith_empty_shapes():
    for r, c in [(0, 0), (0, 3), (3, 0)]:
        A = IntMatrix.zeros(r, c)
        s = smith(A)
        check_smith_contract(A, s)
        assert s.D == IntMatrix.zeros(r, c)


def test_smith_random_against_minor_oracle():
    rng = random.Random(7)
    for _ in range(60):
        A = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), -6, 6)
        s = smith(A)
        check_smith_contract(A, s)
        expected = minor_gcd_invariants([list(r) for r in A.data])
        got = [d for d in s.diagonal() if d != 0]
        assert got == expected


def test_smith_random_contract_medium():
    rng = random.Random(11)
    for _ in range(30):
        A = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        check_smith_contract(A, smith(A))


def test_kernel_and_solve():
    rng = random.Random(23)
    for _ in range(40):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        A = random_matrix(rng, m, n, -5, 5)
        K = kernel(A)
        assert (A @ K).is_zero()
        assert K.cols == frac_nullity([list(r) for r in A.data], n)
        x0 = [rng.randint(-4, 4) for _ in range(n)]
        b = A.apply(x0)
        x = solve(A, b)
        assert x is not None
        assert A.apply(x) == tuple(b)
    assert solve(IntMatrix([[2]]), [1]) is None


def test_hnf_canonical_for_lattice():
    rng = random.Random(5)
    for _ in range(25):
        n, k = rng.randint(1, 4), rng.randint(1, 4)
        G = random_matrix(rng, n, k, -5, 5)
        B = lattice_basis(G)
        assert same_lattice(G, B)
        # shuffling and recombining generators must not move the basis
        cols = G.columns()
        rng.shuffle(cols)
        if len(cols) >= 2:
            cols[0] = tuple(a + 3 * b for a, b in zip(cols[0], cols[1]))
        G2 = IntMatrix.from_cols(cols, n)
        assert lattice_basis(G2) == B or not same_lattice(G, G2)


def test_unimodular_inverse():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randint(1, 4)
        M = IntMatrix.identity(n)
        for _ in range(8):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            q = rng.randint(-3, 3)
            add = [[(1 if a == b else 0) + (q if (a, b) == (i, j) else 0)
                    for b in range(n)] for a in range(n)]
            M = M @ IntMatrix(add)
        Minv = unimodular_inverse(M)
        assert M @ Minv == IntMatrix.identity(n)
        assert Minv @ M == IntMatrix.identity(n)


def test_iso_invariants_examples():
    assert FgAbGroup(2, IntMatrix([[2, 0], [0, 3]])).iso_invariants() == (0, (6,))
    assert FgAbGroup(2).iso_invariants() == (2, ())
    assert FgAbGroup(0).iso_invariants() == (0, ())
    assert FgAbGroup.cyclic(1).is_trivial()
    assert FgAbGroup.cyclic(4).order() == 4
    assert FgAbGroup.free(1).order() is None


def test_iso_invariants_presentation_invariance():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(1, 4)
        r = rng.randint(0, 4)
        R = random_matrix(rng, r, n, -4, 4)
        G = FgAbGroup(n, R)
        base = G.iso_invariants()
        assert base == tuple(quotient_invariants(n, [list(x) for x in R.data])[:1]) + \
            (tuple(quotient_invariants(n, [list(x) for x in R.data])[1]),)
        # redundant relations change nothing
        extra = [list(R.data[rng.randrange(r)]) for _ in range(2)] if r else []
        R2 = IntMatrix([list(x) for x in R.data] + extra, r + len(extra), n)
        assert FgAbGroup(n, R2).iso_invariants() == base
        # unimodular change of generating set changes nothing
        Q = IntMatrix.identity(n)
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            q = rng.randint(-2, 2)
            add = [[(1 if a == b else 0) + (q if (a, b) == (i, j) else 0)
                    for b in range(n)] for a in range(n)]
            Q = Q @ IntMatrix(add)
        assert FgAbGroup(n, R @ Q).iso_invariants() == base


def test_hom_well_definedness():
    z = FgAbGroup.free(1)
    z2 = FgAbGroup.cyclic(2)
    proj = GroupHom(z, z2, IntMatrix([[1]]))
    assert proj.well_defined_violation() is None
    bad = GroupHom(z2, z, IntMatrix([[1]]))
    assert bad.well_defined_violation() == 0
    with pytest.raises(IllDefinedHomError):
        bad.require_well_defined()


def test_hom_kernel_of_projection_onto_z2():
    # the kernel of Z -> Z/2 is 2Z: rank one, included by multiplication by 2
    z = FgAbGroup.free(1)
    z2 = FgAbGroup.cyclic(2)
    proj = GroupHom(z, z2, IntMatrix([[1]]))
    ker, incl = hom_kernel(proj)
    assert ker.iso_invariants() == (1, ())
    assert same_lattice(incl.matrix, IntMatrix([[2]]))
    assert incl.well_defined_violation() is None


def test_hom_cokernel_of_doubling():
    z = FgAbGroup.free(1)
    dbl = GroupHom(z, z, IntMatrix([[2]]))
    cok, proj = hom_cokernel(dbl)
    assert cok.iso_invariants() == (0, (2,))
    assert proj.well_defined_violation() is None
    assert composite_is_zero(dbl, proj) is None


def test_hom_image_of_doubling():
    z = FgAbGroup.free(1)
    dbl = GroupHom(z, z, IntMatrix([[2]]))
    img, incl = hom_image(dbl)
    assert img.iso_invariants() == (1, ())
    assert same_lattice(incl.matrix, IntMatrix([[2]]))


def test_exactness_documented_examples():
    z = FgAbGroup.free(1)
    z2 = FgAbGroup.cyclic(2)
    dbl = GroupHom(z, z, IntMatrix([[2]]))
    proj = GroupHom(z, z2, IntMatrix([[1]]))
    ident = GroupHom.identity(z)
    assert is_exact_at(dbl, proj).exact
    res = is_exact_at(dbl, ident)
    assert not res.exact
    assert res.reason == "composite is not zero"
    assert res.witness == (2,)


def random_diagonal_group(rng, maxgens=3):
    n = rng.randint(1, maxgens)
    diag = [rng.choice([0, 0, 2, 3, 4, 6]) for _ in range(n)]
    rows = [[diag[i] if j == i else 0 for j in range(n)] for i in range(n)
            if diag[i] != 0]
    return FgAbGroup(n, IntMatrix(rows, len(rows), n)), diag


def random_well_defined_hom(rng, src, src_diag, tgt, tgt_diag):
    # entry (j, i) must satisfy a_i * M_ji = 0 modulo b_j
    mat = []
    for j, b in enumerate(tgt_diag):
        row = []
        for i, a in enumerate(src_diag):
            if a == 0:
                row.append(rng.randint(-3, 3))
            elif b == 0:
                row.append(0)
            else:
                step = b // __import__("math").gcd(a, b)
                row.append(step * rng.randint(-2, 2))
        mat.append(row)
    return GroupHom(src, tgt, IntMatrix(mat, len(tgt_diag), len(src_diag)))


def test_kernel_image_cokernel_random_exactness():
    rng = random.Random(41)
    for _ in range(25):
        src, sd = random_diagonal_group(rng)
        tgt, td = random_diagonal_group(rng)
        f = random_well_defined_hom(rng, src, sd, tgt, td)
        assert f.well_defined_violation() is None
        ker, incl = hom_kernel(f)
        img, img_incl = hom_image(f)
        cok, proj = hom_cokernel(f)
        assert incl.well_defined_violation() is None
        assert img_incl.well_defined_violation() is None
        assert is_exact_at(incl, f).exact
        assert is_exact_at(f, proj).exact
        assert is_exact_at(img_incl, proj).exact
        # first isomorphism: source/kernel and image agree
        q, _ = hom_cokernel(incl)
        assert q.iso_invariants() == img.iso_invariants()


def test_direct_sum_invariants():
    g = direct_sum([FgAbGroup.cyclic(2), FgAbGroup.cyclic(3), FgAbGroup.free(1)])
    assert g.iso_invariants() == (1, (6,))


def test_present_subquotient():
    num = IntMatrix.identity(2)
    den = IntMatrix([[2, 0], [0, 3]])
    g, basis = present_subquotient(2, num, den)
    assert g.iso_invariants() == (0, (6,))
    assert basis.cols == 2
    with pytest.raises(ValueError):
        present_subquotient(2, IntMatrix([[2, 0], [0, 2]]), IntMatrix([[1], [0]]))


def test_preimage_lattice():
    # {x in Z^2 : M x in 3Z^2} for M = [[1,0],[0,2]]
    M = IntMatrix([[1, 0], [0, 2]])
    L = IntMatrix.identity(2).scaled(3)
    P = preimage_lattice(M, L)
    assert same_lattice(P, IntMatrix([[3, 0], [0, 3]]))


def test_canonical_form_enumeration():
    # messy presentation of Z/2 + Z/4
    g = FgAbGroup(3, IntMatrix([[2, 0, 4], [0, 4, 4], [2, 4, 8]]))
    assert g.iso_invariants() == (1, (2, 4)) or g.iso_invariants()[1] == (2, 4)
    cf = CanonicalForm(FgAbGroup(2, IntMatrix([[2, 2], [0, 4]])))
    assert cf.size() == 8
    elems = cf.elements()
    assert len(elems) == 8
    assert len(set(elems)) == 8
    for e in elems:
        lifted = cf.lift(e)
        assert cf.coords(lifted) == e
    # group law in coordinates matches the lattice addition
    a, b = elems[3], elems[5]
    sa = cf.coords(tuple(x + y for x, y in zip(cf.lift(a), cf.lift(b))))
    assert sa == tuple((x + y) % t for x, y, t in zip(a, b, cf.torsion))


def test_is_isomorphism():
    z = FgAbGroup.free(1)
    assert is_isomorphism(GroupHom.identity(z))
    assert not is_isomorphism(GroupHom(z, z, IntMatrix([[2]])))
    z6 = FgAbGroup.cyclic(6)
    tw = GroupHom(z6, z6, IntMatrix([[5]]))
    assert is_isomorphism(tw)


def test_rank_helper():
    assert rank(IntMatrix([[2, 4], [6, 8]])) == 2
    assert rank(IntMatrix.zeros(3, 2)) == 0


def test_hnf_rows_shape():
    H = hnf_rows(IntMatrix([[0, 0], [4, 2]]))
    assert H.rows == 1
    got = hstack([H, H])
    assert got.rows == 1

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from omegaenv.linalg import Matrix, bareiss_rank, nullspace, rank, row_reduce, solve
from omegaenv.scalars import CycField

K = CycField(1)
K3 = CycField(3)

small = st.integers(min_value=-3, max_value=3)


@st.composite
def dense(draw):
    r = draw(st.integers(1, 5))
    c = draw(st.integers(1, 5))
    return [[draw(small) for _ in range(c)] for _ in range(r)]


def sparse_rows(d, fld=K):
    return [{j: fld(v) for j, v in enumerate(row) if v} for row in d]


@settings(max_examples=200, deadline=None)
@given(dense())
def test_rank_three_routes(d):
    ref = sympy.Matrix(d).rank()
    assert rank(sparse_rows(d)) == ref
    assert bareiss_rank([[K(v) for v in row] for row in d]) == ref
    assert Matrix.from_dense([[K(v) for v in row] for row in d], len(d[0])).rank() == ref


@settings(max_examples=150, deadline=None)
@given(dense())
def test_nullspace_is_kernel(d):
    ncols = len(d[0])
    rows = sparse_rows(d)
    ker = nullspace(rows, ncols, K.one)
    assert len(ker) == ncols - sympy.Matrix(d).rank()
    for v in ker:
        for row in rows:
            s = K.zero
            for j, a in row.items():
                if j in v:
                    s = s + a * v[j]
            assert s == 0


@settings(max_examples=150, deadline=None)
@given(dense(), st.lists(small, min_size=5, max_size=5))
def test_solve(d, x):
    ncols = len(d[0])
    x = x[:ncols]
    rows = sparse_rows(d)
    rhs = [K(sum(a * b for a, b in zip(row, x))) for row in d]
    sol = solve(rows, rhs, ncols)
    assert sol is not None
    for row, target in zip(rows, rhs):
        s = K.zero
        for j, a in row.items():
            s = s + a * sol.get(j, K.zero)
        assert s == target


def test_inconsistent_system():
    assert solve([{0: K(1)}, {0: K(1)}], [K(1), K(2)], 1) is None


def test_cyclotomic_rank():
    z = K3.zeta()
    # rows (1, z) and (z^2, 1) are proportional since z^3 = 1
    assert rank([{0: K3.one, 1: z}, {0: z * z, 1: K3.one}]) == 1
    echelon, pivots = row_reduce([{0: K3.one, 1: z}, {0: z, 1: K3.one}])
    assert pivots == [0, 1]


def test_matrix_ops():
    A = Matrix.from_dense([[K(1), K(2)], [K(0), K(1)]])
    B = A @ A
    assert B.to_dense(K.zero) == [[1, 4], [0, 1]]
    assert (A - A).is_zero()
    assert A.transpose()[1, 0] == 2
    assert A[1, 0] is None

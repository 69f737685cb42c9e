import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colornet import _pykernel, kernel

ckernel = pytest.importorskip("colornet._ckernel")


@st.composite
def instances(draw):
    n = draw(st.integers(1, 9))
    m = draw(st.integers(1, 6))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    cs = [draw(st.integers(0, m - 1)) for _ in chosen]
    masks = draw(st.lists(st.integers(0, (1 << m) - 1), min_size=1, max_size=20))
    scope = draw(st.one_of(st.just((-1, -1)), st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    return n, [u for u, _ in chosen], [v for _, v in chosen], cs, masks, scope


@settings(max_examples=300)
@given(instances())
def test_backends_agree(case):
    n, us, vs, cs, masks, (a, b) = case
    packed = kernel.pack_edges(us, vs, cs)
    expected = _pykernel.first_cut(n, us, vs, cs, masks, a, b)
    assert ckernel.first_cut(n, *packed, kernel.pack_masks(masks), a, b) == expected


def test_empty_mask_list():
    us, vs, cs = kernel.pack_edges([0], [1], [0])
    assert ckernel.first_cut(2, us, vs, cs, kernel.pack_masks([])) == -1
    assert _pykernel.first_cut(2, [0], [1], [0], []) == -1


def test_pair_scope():
    # path 0 -c0- 1 -c1- 2; removing c1 keeps 0 and 1 together
    args = ([0, 1], [1, 2], [0, 1])
    assert _pykernel.first_cut(3, *args, [0b10], 0, 1) == -1
    assert _pykernel.first_cut(3, *args, [0b10], 0, 2) == 0


def test_backend_is_reported():
    assert kernel.BACKEND in ("cython", "python")

import math
import random

from hypothesis import given, settings, strategies as st

from iwagrowth.polyres import resultant, resultant_bareiss


def ref_resultant(f, g):
    """Res(f, g) = lc(f)^deg g * prod g(root_i) via the product formula over
    the roots of f, computed symbolically through sympy for small cases."""
    import sympy

    x = sympy.symbols("x")
    fp = sympy.Poly(list(reversed(f)), x)
    gp = sympy.Poly(list(reversed(g)), x)
    # sympy's convention can differ in sign; compare absolute values
    return int(sympy.resultant(fp, gp))


def test_constants():
    assert resultant([5], [0, 0, 1]) == 25
    assert resultant([0, 1], [3]) == 3
    assert resultant([], [1, 1]) == 0


def test_common_root_gives_zero():
    # x - 2 divides both
    f = [-2, 1]
    g = [2, -3, 1]  # (x-1)(x-2)
    assert resultant(f, g) == 0
    assert resultant_bareiss(f, g) == 0


def test_known_value():
    # Res(x^2+1, x^2-1) = 4
    assert resultant([1, 0, 1], [-1, 0, 1]) == 4


def test_product_formula_linear():
    # Res(x-a, g) = g(a) for monic linear f
    g = [7, -2, 0, 5]
    for a in range(-3, 4):
        gval = sum(c * a**i for i, c in enumerate(g))
        assert resultant([-a, 1], g) == gval


coeffs = st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=7)


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs)
def test_prs_equals_bareiss(f, g):
    assert resultant(f, g) == resultant_bareiss(f, g)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_swap_symmetry(f, g):
    df = len([c for c in f])
    r1 = resultant(f, g)
    r2 = resultant(g, f)
    assert abs(r1) == abs(r2)
    assert r1 in (r2, -r2)


def test_matches_sympy_up_to_sign():
    rng = random.Random(11)
    for _ in range(25):
        f = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
        g = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
        ours = resultant(f, g)
        assert abs(ours) == abs(ref_resultant(f, g))


def test_multiplicativity():
    rng = random.Random(3)
    for _ in range(10):
        f = [rng.randint(-5, 5) for _ in range(4)] + [1]
        g = [rng.randint(-5, 5) for _ in range(3)] + [1]
        h = [rng.randint(-5, 5) for _ in range(3)] + [1]
        gh = [0] * (len(g) + len(h) - 1)
        for i, a in enumerate(g):
            for j, b in enumerate(h):
                gh[i + j] += a * b
        # f monic: Res(f, gh) = Res(f, g) Res(f, h)
        assert resultant(f, gh) == resultant(f, g) * resultant(f, h)


def test_large_degree_runs():
    rng = random.Random(5)
    f = [rng.randint(-100, 100) for _ in range(80)] + [1]
    g = [rng.randint(-100, 100) for _ in range(60)] + [1]
    r = resultant(f, g)
    assert isinstance(r, int) and math.gcd(r, 1) == 1

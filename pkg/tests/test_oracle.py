import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrap.oracle import HeightBound, brute_force_ap
from mrap.qfield import QQ, AlgInt, Field
from mrap.solver import APTriple, MRInstance, solve_ap, verify_triple


def Q(x, y, z):
    return APTriple(QQ.elt(x), QQ.elt(y - x))


def naive(inst, H):
    """Enumerate first term and difference directly."""
    f = inst.field
    vs = range(-H, H + 1) if f.D != 1 else (0,)
    box = [AlgInt(u, v, f) for u in range(-H, H + 1) for v in vs]
    return {APTriple(x, e) for x in box for e in box if verify_triple(inst, APTriple(x, e))}


class TestExamples:
    def test_d3(self):
        got = brute_force_ap(MRInstance.of(1, 1, 1, 3), HeightBound(20))
        assert got == {Q(0, 0, 0), Q(1, 1, 1), Q(-5, -2, 1), Q(1, -2, -5)}

    def test_d5(self):
        assert brute_force_ap(MRInstance.of(1, 1, 1, 5), HeightBound(50)) == {Q(0, 0, 0)}

    def test_height_zero_rejected(self):
        with pytest.raises(ValueError):
            HeightBound(0)

    @pytest.mark.parametrize("D", [1, -1, 2, 5])
    def test_height_one_has_zero(self, D):
        f = Field(D) if D != 1 else QQ
        assert APTriple(f.zero, f.zero) in brute_force_ap(MRInstance.of(2, 3, 1, 7, f), HeightBound(1))

    def test_whole_line(self):
        # a = b = c = 0 is a degenerate case where every progression solves
        inst = MRInstance.of(0, 0, 0, 1)
        got = brute_force_ap(inst, HeightBound(3))
        assert all(verify_triple(inst, t) for t in got)
        assert Q(0, 0, 0) in got


FIELDS = [QQ, Field(-1), Field(2), Field(5)]


def instances(bound=3):
    def build(f):
        v = st.integers(-bound, bound) if f.D != 1 else st.just(0)
        el = st.builds(lambda u, v: AlgInt(u, v, f), st.integers(-bound, bound), v)
        return st.builds(lambda a, b, c, d: MRInstance(a, b, c, d, f), el, el, el, el).filter(lambda i: i.d)

    return st.sampled_from(FIELDS).flatmap(build)


class TestProperties:
    @given(instances(), st.integers(1, 4), st.integers(5, 9))
    @settings(max_examples=40)
    def test_monotone(self, inst, h1, h2):
        small = brute_force_ap(inst, HeightBound(h1))
        big = brute_force_ap(inst, HeightBound(h2))
        assert small <= big
        assert {t for t in big if t.height() <= h1} == small

    @given(instances(bound=2))
    @settings(max_examples=25)
    def test_against_naive(self, inst):
        assert brute_force_ap(inst, HeightBound(3)) == naive(inst, 3)

    @given(
        st.sampled_from(FIELDS),
        st.lists(st.integers(-4, 4), min_size=7, max_size=7),
        st.integers(-3, 3),
        st.integers(-3, 3),
    )
    @settings(max_examples=150)
    def test_planted_progression(self, f, xs, ev, xv):
        # pick (a, b, c) and a progression, derive d, and look for the progression
        vv = (lambda t: t) if f.D != 1 else (lambda t: 0)
        a, b, c = (AlgInt(xs[i], vv(xs[i + 3]), f) for i in range(3))
        x = AlgInt(xs[6], vv(xv), f)
        e = AlgInt(xs[0] + 1, vv(ev), f)
        t = APTriple(x, e)
        p = t.terms[0] * t.terms[1] * t.terms[2]
        if not p:
            return
        s = a * t.terms[0] ** 2 + b * t.terms[1] ** 2 + c * t.terms[2] ** 2
        d = s.exact_div(p)
        if d is None or not d:
            return
        inst = MRInstance(a, b, c, d, f)
        assert t in brute_force_ap(inst, HeightBound(max(5, t.height())))
        if not inst.is_degenerate:
            assert t in solve_ap(inst).triples

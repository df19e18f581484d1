import pytest
from hypothesis import given

from conftest import SPACES3, small_space
from topolab.errors import NotContinuous, NotOpen
from topolab.function_spaces import (
    characteristic_graph,
    evaluation,
    evaluation_graph,
    exponential,
    sierpinski_exponential_as_opens,
    subbasic_open,
    transpose,
    universal_quantifier,
    universal_quantifier_graph,
)
from topolab.maps import continuous_maps, is_continuous, make_map
from topolab.space import BOT, TOP, discrete, indiscrete, one_point, product, sierpinski


class TestSierpinski:
    def test_opens(self, S):
        assert S.opens == (0, 0b10, 0b11)
        assert S.nbhds[BOT] >> TOP & 1 and not S.nbhds[TOP] >> BOT & 1

    def test_opens_are_characteristic_maps(self):
        s = sierpinski()
        for x in SPACES3:
            for a in range(1 << x.n):
                assert is_continuous(x, s, characteristic_graph(x, a)) == x.is_open(a)

    def test_non_open_witness(self, S):
        with pytest.raises(NotContinuous) as info:
            make_map(indiscrete(2), S, characteristic_graph(indiscrete(2), 0b01))
        assert info.value.witness == 0b10


class TestExponential:
    def test_sierpinski_square(self, S):
        fs = exponential(S, S)
        assert fs.maps == ((0, 0), (0, 1), (1, 1))
        assert fs.space.opens == (0, 0b100, 0b110, 0b111)

    def test_into_one_point(self, standard_spaces):
        for x in standard_spaces:
            fs = exponential(x, one_point())
            assert fs.maps == ((0,) * x.n,) and fs.space == one_point()

    def test_maps_are_lexicographic(self):
        for x in SPACES3[::3]:
            for y in SPACES3[::4]:
                fs = exponential(x, y)
                assert list(fs.maps) == sorted(set(fs.maps))
                assert all(fs.index(g) == i for i, g in enumerate(fs.maps))

    @pytest.mark.parametrize("i", range(0, len(SPACES3), 3))
    def test_topology_is_pointwise_order(self, i):
        # f <= g pointwise in the specialization order iff g is near f
        x = SPACES3[i]
        for y in SPACES3:
            fs = exponential(x, y)
            for k, f in enumerate(fs.maps):
                near = sum(
                    1 << j for j, g in enumerate(fs.maps)
                    if all(y.nbhds[f[a]] >> g[a] & 1 for a in range(x.n))
                )
                assert fs.space.nbhds[k] == near

    @given(small_space, small_space)
    def test_evaluation_continuous(self, x, y):
        fs = exponential(x, y)
        assert is_continuous(product(fs.space, x), y, evaluation_graph(fs))
        assert evaluation(fs).graph == evaluation_graph(fs)

    def test_transpose_continuous(self, S):
        fs = exponential(S, S)
        for z in (one_point(), S, discrete(2)):
            for h in continuous_maps(product(z, S), S):
                assert is_continuous(z, fs.space, transpose(fs, z, h))


class TestSubbasic:
    def test_examples(self, S):
        fs = exponential(S, S)
        assert subbasic_open(fs, 0, 0b10) == 0b111
        assert subbasic_open(fs, 0b11, 0b11) == 0b111
        assert subbasic_open(fs, 0b01, 0b10) == 0b100

    def test_not_open(self, S):
        with pytest.raises(NotOpen):
            subbasic_open(exponential(S, S), 0b01, 0b01)


class TestOpensSpace:
    def test_one_point(self):
        os_ = sierpinski_exponential_as_opens(one_point())
        assert os_.opens == (0, 1) and os_.space == sierpinski()

    def test_sierpinski(self, S):
        os_ = sierpinski_exponential_as_opens(S)
        assert os_.opens == (0, 0b10, 0b11)
        assert os_.space.opens == (0, 0b100, 0b110, 0b111)


class TestUniversalQuantifier:
    def test_empty_q(self, S):
        fs = exponential(S, S)
        assert universal_quantifier(S, 0).graph == (TOP,) * len(fs.maps)

    def test_full_q(self, S):
        # maps are const bottom, identity, const top
        assert universal_quantifier_graph(S, 0b11) == (BOT, BOT, TOP)

    def test_preimage_matches_opens_containing_q(self):
        for x in SPACES3:
            os_ = sierpinski_exponential_as_opens(x)
            for q in range(1 << x.n):
                a = universal_quantifier_graph(x, q)
                via_chi = {i for i, c in enumerate(os_.chi) if a[c] == TOP}
                assert via_chi == {i for i, u in enumerate(os_.opens) if q & ~u == 0}

    def test_continuous_everywhere(self):
        for x in SPACES3:
            for q in range(1 << x.n):
                universal_quantifier(x, q)

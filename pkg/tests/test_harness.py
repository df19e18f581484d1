import itertools
import json

import numpy as np
import pytest

from topolab import formats
from topolab.compactness import interior_containment, quantified_open, way_below
from topolab.errors import BoundExceeded, InvariantViolation, UnknownTheorem
from topolab.function_spaces import exponential, transpose
from topolab.harness import (
    MAX_REPORTED,
    THEOREMS,
    Bounds,
    JobResult,
    get,
    replay,
    reports_json,
    spaces,
    theorem_ids,
    verify,
)
from topolab.harness import claims_compact, fast, registry
from topolab.maps import continuous_maps, is_continuous
from topolab.space import diagonal_class, interior, product

EXPECTED_IDS = [
    "compact-intersection",
    "compact-universal",
    "closed-projection-equiv",
    "sierpinski-quantifier",
    "indexed-compact-family",
    "witness-space",
    "compact-set-equiv",
    "hausdorff-compact-closed",
    "closed-in-compact",
    "image-compact",
    "product-compact",
    "exponential-hausdorff",
    "exponential-discrete",
    "subbasic-open",
    "proper-equiv",
    "closed-map-reform",
    "compact-hausdorff-proper",
    "way-below-closed-form",
    "way-below-equiv",
    "way-below-hausdorff-closure",
    "way-below-closed-compact",
    "way-below-image",
    "way-below-product",
    "product-charac",
    "c-compact-equiv",
    "c-compact-projection",
    "c-compact-coincide",
    "opens-space-scott",
    "sigma-products",
    "exponential-universal",
]


class TestRegistry:
    def test_every_claim_has_one_checker(self):
        assert theorem_ids() == EXPECTED_IDS

    def test_defaults_within_limits(self):
        for tid in theorem_ids():
            t = get(tid)
            b = t.resolve()
            for axis in "xyz":
                key = f"max_{axis}"
                if axis in t.axes:
                    assert 1 <= getattr(b, key) <= getattr(t.limits, key)
                else:
                    assert getattr(b, key) == 0

    def test_unknown(self):
        with pytest.raises(UnknownTheorem):
            verify("no-such-claim")

    def test_bounds(self):
        with pytest.raises(BoundExceeded):
            verify("product-compact", max_y=3)
        with pytest.raises(ValueError):
            verify("product-compact", max_x=0)

    def test_unused_axes_reported_as_zero(self):
        assert verify("opens-space-scott", max_x=2).bounds == Bounds(2, 0, 0)


class TestExamples:
    def test_product_compact(self):
        r = verify("product-compact", 2, 2, 2)
        assert r.passed and r.instances_checked > 0

    def test_projection_equiv_one_point(self):
        r = verify("closed-projection-equiv", max_x=1, max_z=1)
        assert r.passed and r.instances_checked >= 1

    def test_sigma_products(self):
        assert verify("sigma-products", 3, 3).passed

    def test_report_json(self):
        r = verify("proper-equiv", 2, 2, 2)
        data = json.loads(reports_json([r]))
        assert data["verdict"] == "pass" and data["counterexamples"] == []
        assert data["bounds"] == {"max_x": 2, "max_y": 2, "max_z": 2}
        assert "wall_time" not in data
        assert "wall_time" in json.loads(reports_json([r], timing=True))


@pytest.fixture
def false_claim():
    """Temporarily register the false claim that every space is Hausdorff."""

    def check(job, b):
        x = spaces(b.max_x)[job[0]]
        res = JobResult(instances=1)
        if not diagonal_class(x).hausdorff:
            res.fail(job, "not Hausdorff", X=formats.space_to_json(x))
        return res

    registry.register("test-all-hausdorff", "Every space is Hausdorff.", axes="x",
                      jobs=registry.space_jobs("x"), defaults=(3,), limits=(3,))(check)
    yield "test-all-hausdorff"
    del THEOREMS["test-all-hausdorff"]


class TestCounterexamples:
    def test_false_claim_fails(self, false_claim):
        r = verify(false_claim, max_x=3)
        assert not r.passed and r.verdict == "fail"
        assert r.instances_checked == 34
        assert r.counterexample_count == 34 - 3  # only the discrete spaces pass
        assert len(r.counterexamples) == MAX_REPORTED
        first_bad = next(i for i, x in enumerate(spaces(3)) if not diagonal_class(x).hausdorff)
        assert r.counterexamples[0]["job"] == [first_bad]

    def test_counterexamples_replay(self, false_claim):
        r = verify(false_claim, max_x=3)
        decoded = json.loads(reports_json([r]))
        for cx in decoded["counterexamples"]:
            assert replay(false_claim, cx, r.bounds)
            x = formats.space_from_json(cx["instance"]["X"])
            assert not diagonal_class(x).hausdorff

    def test_replay_rejects_tampered(self, false_claim):
        r = verify(false_claim, max_x=3)
        cx = dict(r.counterexamples[0], job=[0])
        assert not replay(false_claim, cx, r.bounds)

    def test_broken_library_is_caught(self, monkeypatch):
        monkeypatch.setattr(claims_compact, "is_closed_map", lambda f: False)
        r = verify("closed-projection-equiv", max_x=2, max_z=2)
        assert not r.passed
        assert r.counterexamples[0]["instance"]["conditions"] == [True, True, False]

    def test_invariant_violation_becomes_counterexample(self, monkeypatch):
        def boom(*args):
            raise InvariantViolation("forced")

        monkeypatch.setattr(claims_compact, "witness_space", boom)
        r = verify("witness-space", max_x=1)
        assert r.counterexample_count == 1
        assert r.counterexamples[0]["reason"] == "InvariantViolation: forced"

    def test_canonical_order(self, false_claim):
        r = verify(false_claim, max_x=3)
        jobs = [cx["job"] for cx in r.counterexamples]
        assert jobs == sorted(jobs)


class TestDeterminism:
    @pytest.mark.parametrize("tid", ["proper-equiv", "product-charac", "way-below-equiv"])
    def test_workers_do_not_change_output(self, tid):
        one = reports_json([verify(tid, 2, 2, 2)])
        two = reports_json([verify(tid, 2, 2, 2, workers=2)])
        assert one == two == reports_json([verify(tid, 2, 2, 2)])

    def test_failing_report_is_deterministic(self, false_claim):
        assert reports_json([verify(false_claim, 3)]) == reports_json([verify(false_claim, 3, workers=2)])


def pick(bound, step):
    return spaces(bound)[::step]


class TestFastTables:
    """Each vectorized table against the direct route."""

    def test_interior_table(self):
        for x in spaces(3):
            t = fast.interior_table(x)
            assert [int(v) for v in t] == [interior(x, a) for a in range(1 << x.n)]

    def test_quantified_rows(self):
        for z in pick(2, 1):
            for x in pick(3, 4):
                ws, q = fast.open_quantified(z, x)
                for i, w in enumerate(ws):
                    for a in range(1 << x.n):
                        assert q[i, a] == quantified_open(z, x, int(w), a)

    def test_family_failures(self):
        for z in pick(3, 5):
            for x in pick(2, 1):
                zx = product(z, x)
                table = fast.family_failures(z, x)
                for a, b in itertools.product(range(1 << x.n), repeat=2):
                    first = next((k for k, w in enumerate(zx.opens)
                                  if quantified_open(z, x, w, a) & ~interior(z, quantified_open(z, x, w, b))), -1)
                    assert table[a, b] == first

    def test_family_failures_decide_openness(self):
        # the set {(z, y) | {z} x Q_y inside W} is open iff no neighbour pair fails
        for z in pick(2, 1):
            for x in pick(2, 1):
                zx = product(z, x)
                table = fast.family_failures(z, x)
                for y in pick(2, 1):
                    zy = product(z, y)
                    for assign in itertools.product(range(1 << x.n), repeat=y.n):
                        near = [(p, r) for p in range(y.n) for r in range(y.n) if y.nbhds[p] >> r & 1]
                        fast_ok = all(table[assign[p], assign[r]] < 0 for p, r in near)
                        direct = all(
                            zy.is_open(sum(
                                1 << (p * y.n + j) for p in range(z.n) for j in range(y.n)
                                if quantified_open(z, x, w, assign[j]) >> p & 1))
                            for w in zx.opens
                        )
                        assert fast_ok == direct

    def test_way_below_tables(self):
        for z in pick(2, 1):
            for x in pick(2, 1) + pick(3, 9):
                c2, c3, c4 = fast.way_below_tables(z, x)
                zx = product(z, x)
                for s, t in itertools.product(range(1 << x.n), repeat=2):
                    d2 = all(interior_containment(z, quantified_open(z, x, w, t), quantified_open(z, x, w, s))
                             for w in zx.opens)
                    d3 = all(
                        any(v >> p & 1 and all(quantified_open(z, x, w, s) >> r & 1 for r in range(z.n) if v >> r & 1)
                            for v in z.opens)
                        for w in zx.opens for p in range(z.n) if quantified_open(z, x, w, t) >> p & 1
                    )
                    d4 = all(
                        interior_containment(z, quantified_open(z, x, m, t), quantified_open(z, x, n, s))
                        for n in range(1 << zx.n) for m in range(1 << zx.n)
                        if interior_containment(zx, m, n)
                    )
                    assert (bool(c2[s, t]), bool(c3[s, t]), bool(c4[s, t])) == (d2, d3, d4)

    def test_way_below_tables_decide_relation(self):
        for x in pick(3, 3):
            tables = [fast.way_below_tables(z, x) for z in spaces(2)]
            for s, t in itertools.product(range(1 << x.n), repeat=2):
                wb = way_below(x, s, t)
                assert all(bool(tb[k][s, t]) for tb in tables for k in range(3)) == wb

    def test_transpose_verdicts(self):
        for z in pick(2, 1):
            for x in pick(2, 1):
                for y in pick(2, 1):
                    fs = exponential(x, y)
                    h_ok, t_ok = fast.transpose_verdicts(z, x, y, fs.maps, fs.space)
                    k = len(fs.maps)
                    for n, tup in enumerate(itertools.product(range(k), repeat=z.n)):
                        graph = [g for i in tup for g in fs.maps[i]]
                        assert bool(h_ok[n]) == is_continuous(product(z, x), y, graph)
                        assert transpose(fs, z, graph) == tup
                        assert bool(t_ok[n]) == is_continuous(z, fs.space, tup)
                    assert int(h_ok.sum()) == len(continuous_maps(product(z, x), y))

    def test_word_width_guard(self):
        with pytest.raises(ValueError):
            fast.quantified_rows(np.zeros(1, dtype=np.int64), 8, 8)

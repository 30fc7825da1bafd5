import numpy as np
import pytest

from chebdyn.ffield import make_field
from chebdyn.graph import (build_graph, export_dot, orbit_stats_order,
                           summarize, verify_structure)
from chebdyn.predict import predict_summary


def rows_tuple(summary):
    return [(r.divisor_value, r.branch, r.points, r.period, r.preperiod,
             r.weight, r.cycles) for r in summary.rows]


def test_build_graph_g_3_53_1():
    g = build_graph(3, make_field(53, 1))
    assert g.succ[2] == 2 and g.pper[2] == 0 and g.per[2] == 1
    # tree over the fixed point 2: 1 vertex at height 1, 3 at 2, 9 at 3
    comp2 = g.comp == g.comp[2]
    for height, count in ((1, 1), (2, 3), (3, 9)):
        assert int(((g.pper == height) & comp2).sum()) == count


def test_build_graph_g_2_3_1():
    ctx = make_field(3, 1)
    g = build_graph(2, ctx)
    zero, mtwo, two = 0, ctx.from_int(-2).index, 2
    assert g.succ[zero] == mtwo and g.succ[mtwo] == two and g.succ[two] == two
    assert g.pper[zero] == 2


def test_build_graph_errors():
    with pytest.raises(ValueError):
        build_graph(3, make_field(3, 1))
    with pytest.raises(ValueError):
        build_graph(4, make_field(5, 1))
    with pytest.raises(ValueError):
        build_graph(2, make_field(5, 3), cap=100)


def test_orbit_stats_order_examples():
    ctx = make_field(53, 1)
    assert orbit_stats_order(ctx.from_int(2), 3) == (0, 1)
    ctx3 = make_field(3, 1)
    assert orbit_stats_order(ctx3.from_int(0), 2) == (2, 1)
    g = build_graph(3, ctx)
    for i in range(53):
        if g.divisor[i] == 52:
            assert orbit_stats_order(ctx.decode(i), 3) == (0, 6)


def test_summarize_matches_figure_g_3_53_1():
    s = summarize(build_graph(3, make_field(53, 1)))
    assert rows_tuple(s) == [
        (4, "minus", 1, 1, 0, 1, 1), (13, "minus", 6, 3, 0, 1, 2),
        (26, "minus", 6, 3, 0, 1, 2), (52, "minus", 12, 6, 0, 1, 2),
        (1, "plus", 1, 1, 0, 1, 1), (3, "plus", 1, None, 1, 1, None),
        (9, "plus", 3, None, 2, 1, None), (27, "plus", 9, None, 3, 1, None),
        (2, "plus", 1, 1, 0, 1, 1), (6, "plus", 1, None, 1, 1, None),
        (18, "plus", 3, None, 2, 1, None), (54, "plus", 9, None, 3, 1, None),
    ]


def test_summarize_matches_figure_g_2_3_4():
    s = summarize(build_graph(2, make_field(3, 4)))
    assert rows_tuple(s) == [
        (1, "minus", 1, 1, 0, 1, 1), (2, "minus", 1, None, 1, 1, None),
        (4, "minus", 1, None, 2, 1, None), (8, "minus", 2, None, 3, 2, None),
        (16, "minus", 4, None, 4, 4, None),
        (5, "minus", 2, 2, 0, 2, 1), (10, "minus", 2, None, 1, 2, None),
        (20, "minus", 4, None, 2, 4, None), (40, "minus", 8, None, 3, 4, None),
        (80, "minus", 16, None, 4, 4, None),
        (41, "plus", 20, 10, 0, 4, 2), (82, "plus", 20, None, 1, 4, None),
    ]


def test_summarize_equals_predict_on_grid():
    for (ell, p, n) in ((2, 5, 2), (2, 7, 2), (3, 7, 2), (5, 3, 2),
                        (7, 3, 2), (3, 11, 1), (2, 31, 1), (5, 13, 1)):
        s = summarize(build_graph(ell, make_field(p, n)))
        ps = predict_summary(ell, p, n)
        assert s.rows == ps.rows, (ell, p, n)


def test_pper_per_minimality():
    # (pper, per) is the least pair with succ^(rho+pi) = succ^rho
    for (ell, p, n) in ((3, 53, 1), (2, 3, 4), (5, 7, 2)):
        g = build_graph(ell, make_field(p, n))
        succ = g.succ.tolist()
        for i in range(g.q):
            rho, pi = int(g.pper[i]), int(g.per[i])
            v = i
            for _ in range(rho):
                v = succ[v]
            w = v
            for _ in range(pi):
                w = succ[w]
            assert w == v
            if rho > 0:
                # one step earlier must not be on the cycle yet
                u = i
                for _ in range(rho - 1):
                    u = succ[u]
                w = u
                for _ in range(pi):
                    w = succ[w]
                assert w != u
            if pi > 1:
                w = v
                for _ in range(pi - 1):
                    w = succ[w]
                assert w != v


def test_summarize_equals_predict_full_sweep():
    # ell in {2,3,5}, p <= 50, n <= 3, p^n <= 2^14
    primes = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    for ell in (2, 3, 5):
        for p in primes:
            if p == ell:
                continue
            for n in (1, 2, 3):
                if p ** n > 2 ** 14:
                    continue
                s = summarize(build_graph(ell, make_field(p, n)))
                assert s.rows == predict_summary(ell, p, n).rows, (ell, p, n)


def test_medium_scale_field():
    # 59049 vertices: exercises degree-10 reduction rows and long walks
    g = build_graph(2, make_field(3, 10))
    s = summarize(g)
    assert s.total_points() == 3 ** 10
    assert s.rows == predict_summary(2, 3, 10).rows
    assert verify_structure(g).ok


def test_periodic_count_law():
    for (ell, p, n) in ((2, 3, 4), (3, 53, 1), (5, 7, 2), (7, 11, 1)):
        g = build_graph(ell, make_field(p, n))
        q = g.q
        om, op_ = q - 1, q + 1
        while om % ell == 0:
            om //= ell
        while op_ % ell == 0:
            op_ //= ell
        assert g.periodic_count() == (om + op_) // 2


def test_indegree_law():
    # in-degree is 0 or ell away from the special vertices; cycle vertices
    # without trees have in-degree 1
    for (ell, p, n) in ((3, 53, 1), (2, 3, 4), (5, 7, 2)):
        ctx = make_field(p, n)
        g = build_graph(ell, ctx)
        indeg = np.bincount(g.succ, minlength=g.q)
        two, mtwo = ctx.from_int(2).index, ctx.from_int(-2).index
        lam = {0: 0, 1: 0}
        qm, qp = g.q - 1, g.q + 1
        while qm % ell == 0:
            qm //= ell
            lam[0] += 1
        while qp % ell == 0:
            qp //= ell
            lam[1] += 1
        lam_m = max(lam.values())
        for i in range(g.q):
            d = int(indeg[i])
            if ell % 2 and i in (two, mtwo):
                assert d == 1 + (ell - 1) // 2 * (1 if lam_m >= 1 else 0)
            elif ell == 2 and i == two:
                assert d == 2
            elif ell == 2 and i == mtwo:
                assert d == 1
            elif g.pper[i] == 0:
                side = int(g.branch[i])
                assert d == (ell if lam[side] >= 1 else 1)
            else:
                assert d in (0, ell), (ell, p, n, i, d)


def test_verify_structure_passes():
    for (ell, p, n) in ((3, 53, 1), (2, 3, 4), (2, 3, 1), (5, 7, 2),
                        (3, 5, 2), (2, 29, 1), (7, 3, 2)):
        rep = verify_structure(build_graph(ell, make_field(p, n)))
        assert rep.ok, (ell, p, n, rep.first_failure)


def test_verify_structure_catches_corruption():
    ctx = make_field(53, 1)
    g = build_graph(3, ctx)
    g.succ = g.succ.copy()
    g.succ[10] = g.succ[10 - 1]  # break one edge
    rep = verify_structure(g)
    assert not rep.ok and rep.first_failure


def test_export_dot_f3():
    g = build_graph(2, make_field(3, 1))
    dot = export_dot(g)
    assert dot.count("label=") == 3
    for edge in ('"0" -> "1"', '"1" -> "2"', '"2" -> "2"'):
        assert edge in dot


def test_export_dot_component_filter():
    # the divisor-15 component of G(2,29,1): a 4-cycle with one leaf each
    g = build_graph(2, make_field(29, 1))
    dot = export_dot(g, 15)
    nodes = [ln for ln in dot.splitlines() if "label=" in ln]
    edges = [ln for ln in dot.splitlines() if "->" in ln]
    assert len(nodes) == 8 and len(edges) == 8
    with pytest.raises(ValueError):
        export_dot(g, 999)


def test_export_dot_node_count_unfiltered():
    g = build_graph(2, make_field(7, 2))
    dot = export_dot(g)
    assert dot.count("label=") == 49


def test_export_dot_deterministic():
    g = build_graph(2, make_field(13, 1))
    assert export_dot(g) == export_dot(g)

import json

import pytest

from maghom.corpus import decomposition, edge_glued, sq1, sq2
from maghom.graph import SubgraphRef, build_graph, complete, cycle, path, wheel
from maghom.homology import HomologyGroup
from maghom.verify import (
    CONJECTURE,
    FORMS,
    VerificationReport,
    check_closed_form,
    check_euler,
    check_gu_recursion,
    check_kunneth,
    check_mayer_vietoris,
    embeds,
    gu_diagonal_rank,
    gu_rank,
    projecting_decomposition,
)


def test_report_verdicts():
    r = VerificationReport("x")
    r.add((0, 0), 1, 1)
    assert r.verdict == "pass"
    r.skip((1, 1))
    assert r.verdict == "fail"
    r2 = VerificationReport("y")
    r2.add((0, 0), 1, 2)
    assert r2.verdict == "fail" and "expected 1, got 2" in r2.format()
    r2.hypotheses_met = False
    assert r2.verdict == "hypotheses-not-met"
    json.dumps(r2.to_json())


def test_euler_single_vertex_and_random():
    assert check_euler(build_graph(1, []), 5).passed
    assert check_euler(build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3), (1, 4)]), 5).passed


def test_simple_forms():
    assert check_closed_form(cycle(3), "cycle3", 5).passed
    assert check_closed_form(cycle(4), "cycle4", 5).passed
    assert check_closed_form(path(5), "tree", 5).passed
    assert check_closed_form(cycle(7), "girth5-diagonal", 5).passed


def test_form_predicate_rejects():
    rep = check_closed_form(cycle(4), "girth5-diagonal", 3)
    assert rep.verdict == "hypotheses-not-met"
    assert check_closed_form(cycle(5), "tree", 3).verdict == "hypotheses-not-met"


def test_wrong_prediction_is_a_failure():
    # the C3 form applied to C3 with a deliberately wrong table entry
    form = FORMS["cycle3"]
    bad = type(form)("bad", form.label, form.predicate, lambda g, c, k, l: 1 if k == l else 0)
    rep = check_closed_form(cycle(3), bad, 2)
    assert rep.verdict == "fail"
    assert {o.cell for o in rep.mismatches} == {(0, 0), (1, 1), (2, 2)}


def test_outerplanar_printed_form_defect():
    g, spec, _ = edge_glued(6, 6)
    derived = check_closed_form(g, "outerplanar-even-cycles", 6, glue=spec)
    assert derived.passed
    printed = check_closed_form(g, "outerplanar-even-cycles-printed", 6, glue=spec)
    bad = {o.cell: (o.expected, o.actual) for o in printed.mismatches}
    assert bad[(2, 3)] == (10, 12)
    assert not any(k == l for k, l in bad)  # the main diagonal agrees


def test_gu_small():
    assert gu_rank(3, 0, 0) == 6
    assert gu_rank(3, 1, 1) == 12
    assert all(gu_rank(4, k, l) == gu_diagonal_rank(4, k, l) for l in range(10) for k in range(l + 1))
    assert check_gu_recursion(3, 6).passed
    with pytest.raises(ValueError):
        check_gu_recursion(2, 4)


def test_mayer_vietoris():
    g, _, maps = edge_glued(6, 6)
    assert check_mayer_vietoris(g, *decomposition(maps, g), 4).passed
    # H1 = G, H2 = one edge
    full = SubgraphRef(g, range(g.n))
    assert check_mayer_vietoris(g, full, SubgraphRef(g, [0, 1]), 4).passed
    g5, _, m5 = edge_glued(5, 5)
    rep = check_mayer_vietoris(g5, *decomposition(m5, g5), 3)
    assert rep.verdict == "hypotheses-not-met"
    ok, why = projecting_decomposition(g5, *decomposition(m5, g5))
    assert not ok and "project" in why


def test_mayer_vietoris_cover_required():
    g = cycle(6)
    ok, why = projecting_decomposition(g, SubgraphRef(g, [0, 1, 2]), SubgraphRef(g, [3, 4]))
    assert not ok


def test_kunneth():
    assert check_kunneth(complete(2), complete(2), 5).passed
    assert check_kunneth(complete(2), path(3), 4).passed


def test_embeds():
    z2 = HomologyGroup(0, (2,))
    assert embeds(z2, HomologyGroup(450, (2, 2)))
    assert not embeds(z2, HomologyGroup(450, (3,)))
    assert embeds(HomologyGroup(0, (2,)), HomologyGroup(0, (4,)))
    assert not embeds(HomologyGroup(0, (4,)), HomologyGroup(0, (2, 2)))
    assert not embeds(HomologyGroup(2), HomologyGroup(1))


def test_conjecture_labels_and_triangles():
    s1, sp1 = sq1()
    rep = check_closed_form(s1, "triangles-on-square", 5, glue=sp1)
    assert rep.label == CONJECTURE and rep.passed
    s2, sp2 = sq2()
    assert check_closed_form(s2, "triangles-on-square", 5, glue=sp2).verdict == "hypotheses-not-met"
    assert check_closed_form(wheel(5), "wheel", 4).passed

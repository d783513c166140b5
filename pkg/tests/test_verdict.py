import json

import pytest

from helpline.verdict import (
    EDGE_EXISTS,
    EXCLUDED_BY_CRITERION,
    EXCLUDED_BY_HELP,
    PQ_AFFIRMED,
    PQ_OPEN_EDGES,
    UNDECIDED,
    edge_verdict,
    pq_report,
)

from conftest import cyclic_table


def statuses(report):
    return {e.pair: e.unit_status for e in report.edges}


def test_s7_with_lines(tables, blocks):
    r = pq_report(tables["s7"], blocks["s7"])
    assert statuses(r) == {
        (2, 3): EDGE_EXISTS, (2, 5): EDGE_EXISTS,
        (2, 7): EXCLUDED_BY_CRITERION, (3, 7): EXCLUDED_BY_CRITERION,
        (3, 5): EXCLUDED_BY_CRITERION, (5, 7): EXCLUDED_BY_CRITERION,
    }
    assert r.overall == PQ_AFFIRMED


def test_a6_stays_open(tables):
    r = pq_report(tables["a6"])
    s = statuses(r)
    assert s[(2, 3)] == UNDECIDED
    assert s[(2, 5)] == s[(3, 5)] == EXCLUDED_BY_HELP
    assert r.overall == PQ_OPEN_EDGES
    edge = next(e for e in r.edges if e.pair == (2, 3))
    assert len(edge.witness["surviving"]) == 2


def test_a5_by_help_alone(tables):
    r = pq_report(tables["a5"])
    assert set(statuses(r).values()) == {EXCLUDED_BY_HELP}
    assert r.overall == PQ_AFFIRMED
    for e in r.edges:
        assert e.witness["certificate"] == "exhaustive"
        for s in e.witness["provenance"]:
            assert s["decisive"] is not None


def test_a7_mixed(tables, blocks):
    r = pq_report(tables["a7"], blocks["a7"])
    s = statuses(r)
    assert s[(2, 3)] == EDGE_EXISTS
    assert s[(2, 5)] == EXCLUDED_BY_CRITERION
    assert s[(2, 7)] in (EXCLUDED_BY_HELP, EXCLUDED_BY_CRITERION)
    assert r.overall == PQ_AFFIRMED


def test_symmetric(tables, blocks):
    t = tables["s7"]
    for p, q in [(2, 7), (5, 7), (2, 3)]:
        a = edge_verdict(t, p, q, blocks["s7"])
        b = edge_verdict(t, q, p, blocks["s7"])
        assert a.to_json() == b.to_json()


def test_cyclic_group_of_order_6():
    r = pq_report(cyclic_table(6))
    assert statuses(r) == {(2, 3): EDGE_EXISTS}
    assert r.edges[0].in_group


@pytest.mark.parametrize("name", ["a5", "a7", "s5", "s7"])
def test_lines_never_lose_exclusions(tables, blocks, name):
    plain = statuses(pq_report(tables[name]))
    with_lines = statuses(pq_report(tables[name], blocks[name]))
    for pair, status in plain.items():
        if status.startswith("excluded"):
            assert with_lines[pair].startswith("excluded")
        if status == EDGE_EXISTS:
            assert with_lines[pair] == EDGE_EXISTS


def test_workers_do_not_change_output(tables, blocks):
    one = pq_report(tables["a7"], blocks["a7"], workers=1).to_json()
    two = pq_report(tables["a7"], blocks["a7"], workers=2).to_json()
    assert json.dumps(one, sort_keys=True) == json.dumps(two, sort_keys=True)


def test_text_report(tables, blocks):
    text = pq_report(tables["s7"], blocks["s7"]).to_text()
    assert "(2,7): excluded_by_criterion via p=7" in text
    assert text.endswith("overall: PQ_affirmed")

import pytest

from orbitposet import (CartanDatum, group_model, loads, verify_poset,
                        verify_suite)
from orbitposet.poset import OrbitPoset
from orbitposet.verify import (CheckResult, VerifyReport, check_criteria_agreement,
                               check_poset_axioms, check_unique_maximum,
                               check_v_monotonicity, ALL_CHECKS)

CHECK_NAMES = [
    "partial-order-axioms",
    "unique-maximum",
    "v-monotonicity",
    "fixed-v-containment",
    "maximal-rep-inclusion",
    "components-bruhat-pairs",
    "components-boundary-mix",
    "components-minrep-top",
    "components-minrep-general",
    "divisorial-classification",
    "criteria-agreement",
]


@pytest.mark.parametrize("type_string", ["A1", "A2", "B2"])
def test_suite_passes_on_wonderful_models(make_poset, type_string):
    report = verify_poset(make_poset(type_string))
    assert [c.name for c in report.checks] == CHECK_NAMES
    assert report.passed, report.to_text()
    # non-vacuous sweeps everywhere except tiny A1 corner cases
    for check in report.checks:
        if type_string != "A1" or check.name != "components-bruhat-pairs":
            assert check.cases > 0, check.name


@pytest.mark.parametrize("type_string", ["A1", "A2"])
def test_suite_passes_on_group_models(type_string):
    report = verify_suite(group_model(CartanDatum.from_type(type_string)))
    assert report.passed, report.to_text()


def test_chain_family_fails_only_divisorial_classification():
    # {2} is missing, so the deepest stratum cannot be a component of an
    # intersection of two strictly larger closures; every purely
    # order-theoretic check still holds.
    text = """cartan: A2
divisors: 2
K = {} ; p = {}
K = {1} ; p = {1}
K = {1,2} ; p = {1,2}
"""
    report = verify_suite(loads(text, label="chain"))
    by_name = {c.name: c for c in report.checks}
    assert not by_name["divisorial-classification"].passed
    assert "[K={1,2}" in by_name["divisorial-classification"].counterexample
    for name in CHECK_NAMES:
        if name != "divisorial-classification":
            assert by_name[name].passed, name
    assert not report.passed


def _tampered(poset, mutate):
    leq = poset.leq.copy()
    mutate(leq)
    return OrbitPoset(poset.model, poset.group, poset.orbits, leq,
                      poset.kernel_inputs, poset.backend, poset.threads)


def test_axiom_check_reports_reflexivity_break(make_poset):
    p = _tampered(make_poset("A1"), lambda leq: leq.__setitem__((0, 0), 0))
    result = check_poset_axioms(p)
    assert not result.passed
    assert "reflexive" in result.counterexample


def test_axiom_check_reports_antisymmetry_break(make_poset):
    base = make_poset("A1")
    a, b = 1, 0  # maximum strictly contains orbit 0
    assert base.leq[a, b] and not base.leq[b, a]
    p = _tampered(base, lambda leq: leq.__setitem__((b, a), 1))
    result = check_poset_axioms(p)
    assert not result.passed
    assert "antisymmetry" in result.counterexample


def test_unique_maximum_check_detects_loss(make_poset):
    base = make_poset("A1")
    m = base.index[base.maximum()]
    p = _tampered(base, lambda leq: leq.__setitem__((m, 0), 0))
    result = check_unique_maximum(p)
    assert not result.passed
    assert "maxima found" in result.counterexample


def test_v_monotonicity_check_detects_forged_edge(make_poset):
    base = make_poset("A1")
    T = base.group.tables()
    orb_v = base.kernel_inputs.orb_v
    forged = None
    for a in range(len(base)):
        for b in range(len(base)):
            if not base.leq[a, b] and not T.bruhat[orb_v[a], orb_v[b]]:
                forged = (a, b)
                break
        if forged:
            break
    p = _tampered(base, lambda leq: leq.__setitem__(forged, 1))
    result = check_v_monotonicity(p)
    assert not result.passed


def test_criteria_agreement_detects_tampering(make_poset):
    base = make_poset("A1")
    p = _tampered(base, lambda leq: leq.__setitem__((0, 1), 1))
    result = check_criteria_agreement(p)
    assert not result.passed
    assert "one-witness holds" in result.counterexample


def test_report_rendering():
    report = VerifyReport(model_label="wonderful", cartan_label="A1",
                          orbit_count=6, backend="python")
    report.checks.append(CheckResult("demo-pass", True, 10))
    report.checks.append(CheckResult("demo-fail", False, 3, "[K={}; v=e; w=e]"))
    text = report.to_text()
    assert "PASS demo-pass (10 cases)" in text
    assert "FAIL demo-fail (3 cases) counterexample: [K={}; v=e; w=e]" in text
    assert text.rstrip().endswith("result: FAIL")
    doc = report.to_json_dict()
    assert doc["schema_version"] == 1
    assert doc["passed"] is False
    assert doc["checks"][1]["counterexample"] == "[K={}; v=e; w=e]"


def test_all_checks_registry_matches_names():
    assert len(ALL_CHECKS) == len(CHECK_NAMES)

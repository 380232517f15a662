import pytest

from errors import InvalidInputError
from executors import CheckExecutor
from sat import CnfFormula, unsatisfiable_3sat
from verifiers import DEFAULT_FORMULA, CheckStatus, ScenarioId, ScenarioKind, ScenarioVerifier, run_scenario

UNSAT = unsatisfiable_3sat(5)

KINDS = [
    ScenarioId(ScenarioKind.GROUP1),
    ScenarioId(ScenarioKind.GROUP2),
    ScenarioId(ScenarioKind.GROUP3),
    ScenarioId(ScenarioKind.GROUP4, 1),
    ScenarioId(ScenarioKind.GROUP4, 3),
    ScenarioId(ScenarioKind.SYMMETRIC_WITNESS),
    ScenarioId(ScenarioKind.RATIONAL_WITNESS),
]


@pytest.mark.parametrize(
    "text, k, expected",
    [
        ("group1", None, ScenarioId(ScenarioKind.GROUP1)),
        ("group4:3", None, ScenarioId(ScenarioKind.GROUP4, 3)),
        ("Group4(2)", None, ScenarioId(ScenarioKind.GROUP4, 2)),
        ("group4", 5, ScenarioId(ScenarioKind.GROUP4, 5)),
        ("rational_nash_witness", None, ScenarioId(ScenarioKind.RATIONAL_WITNESS)),
    ],
)
def test_parse_scenario_id(text, k, expected):
    assert ScenarioId.parse(text, k=k) == expected


def test_scenario_id_text():
    assert str(ScenarioId(ScenarioKind.GROUP4, 3)) == "group4(3)"
    assert str(ScenarioId(ScenarioKind.GROUP2)) == "group2"


@pytest.mark.parametrize("text", ["group5", "group1:2", "group4:0", "group4", ""])
def test_parse_rejects(text):
    with pytest.raises(InvalidInputError):
        ScenarioId.parse(text)


def test_formula_size_cap():
    with pytest.raises(InvalidInputError):
        ScenarioVerifier(ScenarioId(ScenarioKind.GROUP1), CnfFormula.of(15, [(1, 2, 3)]))


@pytest.mark.slow
@pytest.mark.parametrize("scenario", KINDS, ids=str)
@pytest.mark.parametrize("formula", [DEFAULT_FORMULA, UNSAT], ids=["satisfiable", "unsatisfiable"])
def test_scenario_passes(scenario, formula):
    verifier = run_scenario(scenario, formula)
    assert verifier.passed, verifier.summary()
    assert any(entry.status is CheckStatus.PASSED for entry in verifier.entries)


@pytest.mark.slow
def test_unsatisfiable_group1_has_only_gadget_mixtures():
    verifier = run_scenario(ScenarioId(ScenarioKind.GROUP1), UNSAT)
    names = {entry.name: entry for entry in verifier.entries}
    assert names["only gadget mixtures when unsatisfiable"].status is CheckStatus.PASSED
    assert "literal x literal pays 1/5" not in names


@pytest.mark.slow
def test_group4_counts_on_default_formula():
    verifier = run_scenario(ScenarioId(ScenarioKind.GROUP4, 2))
    details = {entry.name: entry.detail for entry in verifier.entries}
    assert details["#phi=10 symmetric literal equilibria"] == "10 symmetric"
    assert details["#phi(#phi+1)=110 non-symmetric literal equilibria"] == "110 non-symmetric"


@pytest.mark.slow
def test_report_is_deterministic(tmp_path):
    reports = []
    for run in ("first", "second"):
        executor = CheckExecutor(ScenarioVerifier(ScenarioId(ScenarioKind.GROUP2)), tmp_path / run)
        assert executor.execute()
        reports.append((tmp_path / run / "scenario-group2_report.xml").read_bytes())
    assert reports[0] == reports[1]

"""Direction catalog: structure, attained maxima, anomaly reporting."""

import json
import math

import numpy as np
import pytest

from shimony.catalog import (
    SUPPORTED_SETTINGS,
    catalog_directions,
    directions_from_dict,
    entry_to_dict,
    load_directions_file,
    unified_direction_set,
    verify_directions,
)
from shimony.matrices import build_as_matrix, lhv_bound_closed_form
from shimony.quantum import bell_quantum_value, max_quantum_closed_form
from shimony.seesaw import alice_best_response


def test_supported_orders():
    assert SUPPORTED_SETTINGS == (2, 4, 6, 8, 10)
    with pytest.raises(ValueError, match="supported"):
        catalog_directions(12)
    with pytest.raises(ValueError):
        catalog_directions(3)


@pytest.mark.parametrize("n", SUPPORTED_SETTINGS)
def test_entry_shapes_and_norms(n):
    entry = catalog_directions(n)
    assert entry.n == n
    assert entry.bob_directions.shape == (n, 3)
    assert np.allclose(np.linalg.norm(entry.bob_directions, axis=1), 1.0, atol=1e-12)
    if entry.alice_directions is not None:
        assert entry.alice_directions.shape == (n, 3)
        assert np.allclose(np.linalg.norm(entry.alice_directions, axis=1), 1.0, atol=1e-12)
    # Alice is fully tabulated only at n=4; the degenerate n=2 pairs are kept
    # separately for diagnostics.
    assert (entry.alice_directions is not None) == (n == 4)
    assert (entry.tabulated_bob is not None) == (n == 2)
    assert entry.notes


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_unified_structure(n):
    bob = catalog_directions(n).bob_directions
    y = 1.0 / math.sqrt(lhv_bound_closed_form(n))
    assert bob[0, 0] == pytest.approx(y, abs=1e-15)
    assert bob[1, 0] == pytest.approx(-y, abs=1e-15)
    assert np.allclose(bob[0, 1:], bob[1, 1:], atol=1e-15)
    assert np.all(bob[2 : n - 1, 0] == 0.0)
    assert np.allclose(bob[n - 1], [1.0, 0.0, 0.0], atol=1e-15)


def test_unified_direction_set_angle_count():
    with pytest.raises(ValueError, match="expected 2 angles"):
        unified_direction_set(4, [0.1])


def test_frozen_vectors_n4():
    entry = catalog_directions(4)
    expected_bob = np.array(
        [
            [0.4082482904638631, -0.20600744422178593, 0.8893223635209794],
            [-0.4082482904638631, -0.20600744422178593, 0.8893223635209794],
            [0.0, 0.9166280100018142, 0.3997412804303731],
            [1.0, 0.0, 0.0],
        ]
    )
    assert np.allclose(entry.bob_directions, expected_bob, atol=1e-12)
    # The tabulated Alice set mirrors the best response except for the sign
    # of the x components (see verify_directions).
    m = build_as_matrix(4)
    best = alice_best_response(m, entry.bob_directions)
    assert np.allclose(entry.alice_directions[:, 1:], best[:, 1:], atol=1e-12)
    assert np.allclose(entry.alice_directions[:, 0], -best[:, 0], atol=1e-12)


def test_frozen_vectors_n10():
    bob = catalog_directions(10).bob_directions
    assert np.allclose(
        bob[0], [0.18257418583505536, -0.5486366111750072, -0.8158826726589251], atol=1e-12
    )
    assert np.allclose(
        bob[2], [0.0, -0.03260156848343253, -0.999468427581592], atol=1e-12
    )


def test_n2_tabulated_pairs_are_degenerate():
    entry = catalog_directions(2)
    assert np.allclose(entry.bob_directions, [[0, 0, 1], [1, 0, 0]], atol=1e-15)
    assert entry.tabulated_bob[0] @ entry.tabulated_bob[1] == pytest.approx(-1.0, abs=1e-12)
    assert entry.tabulated_alice[0] @ entry.tabulated_alice[1] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("n,tol", [(4, 1e-9), (6, 1e-9), (8, 1e-9), (10, 1e-6)])
def test_bob_catalogs_attain_quantum_maximum(n, tol):
    m = build_as_matrix(n)
    bob = catalog_directions(n).bob_directions
    value = bell_quantum_value(m, alice_best_response(m, bob), bob)
    assert value == pytest.approx(max_quantum_closed_form(n), abs=tol)


def test_verify_4_reports_sign_anomaly():
    report = verify_directions(4)
    assert not report.passed
    given = report.evaluations[0]
    assert given.alice_source == "tabulated"
    assert given.value == pytest.approx(2 * math.sqrt(6), abs=1e-12)
    assert not given.passed
    best = report.evaluations[1]
    assert best.alice_source == "best-response"
    assert best.passed
    assert any("negating" in a for a in report.anomalies)
    assert report.witness_value == pytest.approx(report.target, abs=1e-9)
    assert report.witness_alice.shape == (4, 3)


def test_verify_2_flags_collinearity():
    report = verify_directions(2)
    assert not report.passed
    assert any("antiparallel" in a for a in report.anomalies)
    canonical = report.evaluations[0]
    assert canonical.value == pytest.approx(2 * math.sqrt(2), abs=1e-12)
    assert canonical.passed
    # Tabulated pairs: given Alice reaches sqrt(2), best response caps at 2.
    values = sorted(e.value for e in report.evaluations[1:])
    assert values == pytest.approx([math.sqrt(2), 2.0], abs=1e-9)
    assert report.witness_value == pytest.approx(2 * math.sqrt(2), abs=1e-9)


@pytest.mark.parametrize("n", [6, 8, 10])
def test_verify_passes_for_consistent_entries(n):
    report = verify_directions(n)
    assert report.passed
    assert report.anomalies == ()
    assert all(e.passed for e in report.evaluations)
    assert report.evaluations[0].deviation <= report.tolerance


def test_entry_to_dict_schema():
    for n in SUPPORTED_SETTINGS:
        data = entry_to_dict(catalog_directions(n))
        assert set(data) == {"n", "bob", "alice", "notes"}
        assert data["n"] == n
        assert len(data["bob"]) == n
        assert all(len(row) == 3 for row in data["bob"])
        if n == 4:
            assert len(data["alice"]) == n
        else:
            assert data["alice"] is None
        assert isinstance(data["notes"], str)
        # Round-trips through the validator.
        parsed = directions_from_dict(data)
        assert np.allclose(parsed["bob"], catalog_directions(n).bob_directions, atol=1e-12)


@pytest.mark.parametrize(
    "data,fragment",
    [
        ([1, 2], "top-level"),
        ({"bob": []}, "n must be"),
        ({"n": 3, "bob": []}, "n must be"),
        ({"n": 2}, "bob is required"),
        ({"n": 2, "bob": [[0, 0, 1]]}, "bob must be a list of 2"),
        ({"n": 2, "bob": [[0, 0, 1], [1, 0]]}, "bob[1] must be a 3-component"),
        ({"n": 2, "bob": [[0, 0, 1], [1, 0, "x"]]}, "bob[1][2] must be a number"),
        ({"n": 2, "bob": [[0, 0, 1], [1, 0, 1]]}, "bob[1] must be unit length"),
        ({"n": 2, "bob": [[0, 0, 1], [1, 0, 0]], "alice": [[0, 0, 2], [1, 0, 0]]},
         "alice[0] must be unit length"),
        ({"n": 2, "bob": [[0, 0, 1], [1, 0, 0]], "notes": 5}, "notes must be a string"),
    ],
)
def test_directions_from_dict_errors(data, fragment):
    with pytest.raises(ValueError) as err:
        directions_from_dict(data)
    assert fragment in str(err.value)


def test_load_directions_file(tmp_path):
    path = tmp_path / "dirs.json"
    path.write_text(json.dumps(entry_to_dict(catalog_directions(4))))
    parsed = load_directions_file(path)
    assert parsed["n"] == 4
    assert np.allclose(parsed["alice"], catalog_directions(4).alice_directions, atol=1e-12)

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValueError, match="invalid JSON"):
        load_directions_file(bad)

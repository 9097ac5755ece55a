import json

import pytest

from latticelab import zoo
from latticelab.atlas import (
    AtlasEntry,
    build_atlas,
    check_implications,
    entry_lattice,
    enumerate_lattices,
    enumerate_lattices_naive,
    hunt_questions,
    read_atlas,
    write_atlas,
    write_csv,
)
from latticelab.classify import classify
from latticelab.errors import AtlasParseError, BoundExceededError
from latticelab.poset import canonical_form

EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}


def test_class_counts_up_to_six_match_the_oracle():
    for n in range(1, 7):
        generated = enumerate_lattices(n)
        oracle = enumerate_lattices_naive(n)
        assert len(generated) == len(oracle) == EXPECTED_COUNTS[n]
        assert [canonical_form(L.poset) for L in generated] == [
            canonical_form(L.poset) for L in oracle
        ]


def test_class_counts_seven_and_eight():
    assert len(enumerate_lattices(7)) == EXPECTED_COUNTS[7]
    assert len(enumerate_lattices(8)) == EXPECTED_COUNTS[8]


def test_enumeration_is_deterministic():
    first = [canonical_form(L.poset) for L in enumerate_lattices(6)]
    second = [canonical_form(L.poset) for L in enumerate_lattices(6)]
    assert first == second
    assert first == sorted(first)


def test_enumerated_lattices_are_canonical_and_distinct():
    from latticelab.poset import canonicalize

    for n in range(1, 7):
        forms = set()
        for L in enumerate_lattices(n):
            assert canonicalize(L.poset) == L.poset
            forms.add(canonical_form(L.poset))
        assert len(forms) == EXPECTED_COUNTS[n]


def test_fixtures_appear_in_the_atlas():
    by_size = {
        5: zoo.m3(),
        6: zoo.hexagon(),
        7: zoo.left_modular_not_semidistributive(),
        8: zoo.jsd_not_left_modular(),
        9: zoo.extremal_not_left_modular(),
    }
    for n, L in by_size.items():
        forms = {canonical_form(q.poset) for q in enumerate_lattices(n)}
        assert canonical_form(L.poset) in forms


def test_enumeration_bounds():
    with pytest.raises(BoundExceededError):
        enumerate_lattices(0)
    with pytest.raises(BoundExceededError):
        enumerate_lattices(11)
    with pytest.raises(BoundExceededError):
        enumerate_lattices_naive(7)


def test_atlas_roundtrip(tmp_path):
    path = tmp_path / "atlas.jsonl"
    entries = build_atlas(5, out_path=str(path))
    assert len(entries) == 1 + 1 + 1 + 2 + 5
    header, back = read_atlas(str(path))
    assert header["max_n"] == 5 and header["schema"] == 1
    assert back == entries


def test_atlas_files_are_byte_identical_across_runs(tmp_path):
    p1, p2 = tmp_path / "a1.jsonl", tmp_path / "a2.jsonl"
    build_atlas(5, out_path=str(p1))
    build_atlas(5, out_path=str(p2))
    assert p1.read_bytes() == p2.read_bytes()


def test_reclassifying_an_entry_reproduces_its_record():
    entries = build_atlas(5)
    for entry in entries:
        L = entry_lattice(entry)
        assert classify(L) == entry.record


def test_append_skips_existing_entries(tmp_path):
    path = tmp_path / "atlas.jsonl"
    entries = build_atlas(4)
    write_atlas(str(path), entries)
    more = build_atlas(5)
    merged = write_atlas(str(path), more, append=True)
    assert len(merged) == len(build_atlas(5))
    header, back = read_atlas(str(path))
    assert [e.canonical for e in back] == sorted(
        {e.canonical for e in merged}
    )


def test_corrupt_line_reports_line_number(tmp_path):
    path = tmp_path / "broken.jsonl"
    entries = build_atlas(3)
    write_atlas(str(path), entries)
    lines = path.read_text().splitlines()
    lines[2] = "{not json"
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(AtlasParseError) as err:
        read_atlas(str(path))
    assert err.value.lineno == 3


def test_missing_header_is_an_error(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("")
    with pytest.raises(AtlasParseError):
        read_atlas(str(path))


def test_csv_summary(tmp_path):
    path = tmp_path / "atlas.csv"
    entries = build_atlas(4)
    write_csv(str(path), entries)
    lines = path.read_text().splitlines()
    assert lines[0].startswith("n,canonical,distributive")
    assert len(lines) == 1 + len(entries)


def test_implication_grid_holds_up_to_six():
    entries = build_atlas(6)
    report = check_implications(entries)
    assert report.ok
    by_id = {r.arrow.arrow_id: r for r in report.results}
    # the two small designated witnesses are in range and refute their arrows
    assert by_id["left_modular=>join_extremal"].designated_found is True
    assert by_id["el_shellable=>jsd"].designated_found is True
    # the larger designated witnesses are out of range at n <= 6
    assert by_id["jsd&join_extremal=>extremal"].designated_found is None
    # green arrows scanned clean
    for r in report.results:
        if r.arrow.expected == "holds":
            assert r.violations == 0, r.arrow.arrow_id


def test_implication_grid_holds_up_to_seven_with_larger_witnesses():
    entries = build_atlas(7)
    report = check_implications(entries)
    assert report.ok
    by_id = {r.arrow.arrow_id: r for r in report.results}
    # the 7-element designated witness enters range at n=7
    assert by_id["jsd&join_extremal=>extremal"].designated_found is True
    assert by_id["join_extremal=>extremal"].designated_found is True
    assert by_id["jsd&left_modular=>sd"].designated_found is True


def test_implication_report_summary_mentions_every_arrow():
    entries = build_atlas(5)
    report = check_implications(entries)
    lines = report.summary_lines()
    assert len(lines) == len(report.results)


def test_implication_scan_catches_a_violation():
    entries = build_atlas(5)
    bad = []
    for entry in entries:
        record = entry.record
        if record.left_modular and record.el_shellable == "yes":
            # forge a record claiming a left-modular lattice is not shellable
            obj = record.as_json()
            obj["el_shellable"] = "no"
            from latticelab.classify import ClassificationRecord

            bad.append(
                AtlasEntry(entry.n, entry.canonical,
                           ClassificationRecord.from_json(obj))
            )
        else:
            bad.append(entry)
    report = check_implications(bad)
    assert not report.ok


def test_hunt_reports_are_empty_on_small_lattices():
    entries = build_atlas(6)
    report = hunt_questions(entries)
    assert report.not_left_modular == ()
    assert report.not_extremal == ()
    assert report.unknown_el == ()
    assert sum(report.scanned.values()) == len(entries)
    assert report.summary_lines()


def test_hunt_keeps_unknown_el_entries_separate():
    entries = build_atlas(6, el_budget=0)
    report = hunt_questions(entries)
    # semidistributive non-left-modular lattices cannot certify via the
    # left-modular labeling, so a zero budget leaves them undecided
    for entry in report.unknown_el:
        assert entry.record.semidistributive
        assert entry.record.el_shellable == "unknown"
    assert not report.not_left_modular


def test_atlas_entry_json_is_sorted_and_stable():
    entry = build_atlas(3)[-1]
    line = entry.as_json_line()
    obj = json.loads(line)
    assert list(obj) == sorted(obj)
    assert AtlasEntry.from_json_obj(obj) == entry

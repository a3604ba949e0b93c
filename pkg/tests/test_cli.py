"""End-to-end runs of every subcommand through run(argv)."""

import json

import pytest

from aqlam.cli import run

DOC_A = {
    "components": [{"a": 12, "m": 3}, {"a": 10, "m": 5}, {"a": 7, "m": 6}],
    "p": [2, 2, 2],
    "p_rank": 6,
}
DOC_B = {
    "components": [{"a": 12, "m": 3}, {"a": 8, "m": 5}, {"a": 7, "m": 6}],
    "p": [2, 2, 2],
}
DOC_HALF = {
    "segments": [
        {"b": "7/2", "e": "5/2"},
        {"b": "7/2", "e": "5/2"},
        {"b": "5/2", "e": "3/2"},
    ],
    "p": [2, 1, 0],
    "p_rank": 3,
}


def write_doc(tmp_path, doc, name="doc.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCheck:
    def test_nonzero_exits_zero(self, tmp_path, capsys):
        code, payload = run_json(
            capsys, ["check", write_doc(tmp_path, DOC_A), "--verify"]
        )
        assert code == 0
        assert payload == {"nonzero": True, "witness": None}

    def test_zero_exits_one_with_witness(self, tmp_path, capsys):
        code, payload = run_json(capsys, ["check", write_doc(tmp_path, DOC_B)])
        assert code == 1
        assert payload["nonzero"] is False
        witness = payload["witness"]
        assert witness["kind"] == "C"
        assert witness["indices"] == [2, 3]
        assert witness["values"][-2:] == [4, 5]

    def test_stdin(self, tmp_path, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(DOC_A)))
        code, payload = run_json(capsys, ["check", "-"])
        assert code == 0 and payload["nonzero"] is True


class TestTableau:
    def test_fixture_antitableau(self, tmp_path, capsys):
        code, payload = run_json(capsys, ["tableau", write_doc(tmp_path, DOC_A)])
        assert code == 0
        assert payload["zero"] is False
        assert payload["antitableau"] == [
            ["7", "7", "6"], ["6", "6", "5"], ["5", "5", "4"],
            ["4", "3"], ["3"], ["2"], ["1"],
        ]
        assert payload["rows"][:3] == [[3, "+"], [3, "+"], [3, "-"]]

    def test_text_format(self, tmp_path, capsys):
        code = run(["tableau", write_doc(tmp_path, DOC_A), "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "antitableau:" in out
        assert "7 7 6" in out

    def test_zero_reports_overlap(self, tmp_path, capsys):
        code, payload = run_json(capsys, ["tableau", write_doc(tmp_path, DOC_B)])
        assert code == 0
        assert payload["zero"] is True


class TestPadic:
    def test_half_integer_document(self, tmp_path, capsys):
        code, payload = run_json(capsys, ["padic", write_doc(tmp_path, DOC_HALF)])
        assert code == 0
        assert payload["l_eta"]["l"] == [0, 1, 0]
        assert payload["l_eta"]["eta"] == ["-", "+", "+"]
        assert "EF_image" in payload


class TestPacket:
    def test_fixture_counts(self, tmp_path, capsys):
        code, payload = run_json(
            capsys, ["packet", write_doc(tmp_path, DOC_A), "--verify"]
        )
        assert code == 0
        assert payload["scanned"] == 21
        assert len(payload["entries"]) == 9
        assert any(e["p"] == [2, 2, 2] for e in payload["entries"])

    def test_missing_rank_is_input_error(self, tmp_path, capsys):
        code = run(["packet", write_doc(tmp_path, DOC_B)])
        assert code == 2
        assert "p_rank" in capsys.readouterr().err


class TestArrangementsAndTransition:
    def test_arrangements(self, tmp_path, capsys):
        code, payload = run_json(
            capsys, ["arrangements", write_doc(tmp_path, DOC_A)]
        )
        assert code == 0
        assert payload["count"] == 2
        assert payload["sigmas"] == [[1, 2, 3], [2, 1, 3]]

    def test_transition(self, tmp_path, capsys):
        code, payload = run_json(
            capsys,
            ["transition", write_doc(tmp_path, DOC_A), "--sigma", "2,1,3"],
        )
        assert code == 0
        assert payload == {"sigma": [2, 1, 3], "entries": [3, 1, 2]}

    def test_transition_needs_sigma(self, tmp_path, capsys):
        assert run(["transition", write_doc(tmp_path, DOC_A)]) == 2


class TestAV:
    def test_even_fixture_audit(self, tmp_path, capsys):
        code, payload = run_json(
            capsys, ["av", write_doc(tmp_path, DOC_HALF), "--verify"]
        )
        assert code == 0
        assert payload["fibers_ok"] is True
        assert payload["total"] == len(payload["fiber_sizes"])


class TestInputHandling:
    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert run(["check", str(path)]) == 2
        assert "malformed JSON" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert run(["check", "/nonexistent.json"]) == 2

    def test_both_segment_forms_rejected(self, tmp_path, capsys):
        doc = dict(DOC_A)
        doc["segments"] = DOC_HALF["segments"]
        assert run(["check", write_doc(tmp_path, doc)]) == 2

    def test_wrong_p_length(self, tmp_path, capsys):
        doc = dict(DOC_A)
        doc["p"] = [2, 2]
        assert run(["check", write_doc(tmp_path, doc)]) == 2

    def test_strict_parity_flag(self, tmp_path, capsys):
        # one even-length integer segment: fails the parity congruence
        doc = {"components": [{"a": 5, "m": 2}], "p": [1]}
        path = write_doc(tmp_path, doc)
        assert run(["check", path]) in (0, 1)
        capsys.readouterr()
        assert run(["check", path, "--strict-parity"]) == 2

    def test_json_round_trip(self, tmp_path, capsys):
        path = write_doc(tmp_path, DOC_A)
        code, payload = run_json(capsys, ["packet", path, "--verify"])
        again_code, again = run_json(capsys, ["packet", path, "--verify"])
        assert (code, payload) == (again_code, again)

import json

from knotalg.cli import EXIT_CAPACITY, EXIT_PARSE, run


def ok(argv):
    result = run(argv)
    assert result.code == 0, result.payload
    return result.payload


def err(argv, code):
    result = run(argv)
    assert result.code == code, (result.code, result.payload)
    return json.loads(result.payload)["error"]


def test_components():
    assert ok(["components", "<<2> <-2>> <2> <-2>"]) == "3"


def test_components_verify():
    payload = ok(["components", "2 <2> <-2>", "--verify", "--format", "json"])
    assert json.loads(payload) == {"expr": "2 <2> <-2>", "components": 2, "verified": True}


def test_eval_payload():
    payload = json.loads(ok(["eval", "<<<<O>O>O>O>O", "--format", "json"]))
    assert payload["class"] == "E"
    assert payload["marks"] == ["o", "m", "u", "o"]
    assert payload["final"] == "u"
    assert payload["components"] == 2


def test_eval_text_contains_trace():
    text = ok(["eval", "<O>O"])
    assert "class: E" in text
    assert "<O>_o O |_u" in text


def test_fraction():
    assert ok(["fraction", "355/113"]) == "knot (O)"
    assert ok(["fraction", "355/22"]) == "knot (V)"
    assert ok(["fraction", "2/1"]) == "link (E)"


def test_cf_and_cfval():
    assert ok(["cf", "355/113"]) == "3,7,16"
    assert ok(["cfval", "16,7,3"]) == "355/22"
    assert json.loads(ok(["cf", "355/113", "--format", "json"])) == [3, 7, 16]


def test_enumerate_json():
    data = json.loads(ok(["enumerate", "7", "--format", "json"]))
    knots = [tuple(entry["parts"]) for entry in data if entry["class"] != "E"]
    links = [tuple(entry["parts"]) for entry in data if entry["class"] == "E"]
    assert len(knots) == 7 and len(links) == 3
    assert (2, 3, 2) in links


def test_bracket():
    assert ok(["bracket", "O O"]) == "-A^4 - A^-4"
    assert json.loads(ok(["bracket", "O O", "--format", "json"])) == [[4, -1], [-4, -1]]


def test_opacity():
    text = ok(["opacity", "<<<<O>O>O>O>O"])
    assert "components: 2" in text
    assert text.count("opaque") - text.count("transparent") == 1 - 4
    data = json.loads(ok(["opacity", "O", "--format", "json"]))
    assert data["leaves"] == [{"index": 1, "leaf": "O", "status": "transparent"}]


def test_cube():
    data = json.loads(ok(["cube", "O O"]))
    assert data["n"] == 2
    assert len(data["vertices"]) == 4
    assert len(data["edges"]) == 4


def test_nullity_expression():
    assert ok(["nullity", "<<2> <-2>> <2> <-2>"]) == "3"


def test_nullity_graph_file(tmp_path):
    path = tmp_path / "graph.json"
    path.write_text(json.dumps({"nodes": 3, "edges": [[0, 1], [1, 2], [2, 0]]}))
    assert ok(["nullity", "--graph", str(path)]) == "1"


def test_parse_error_exit_code():
    error = err(["components", "<O"], EXIT_PARSE)
    assert error["kind"] == "parse"
    assert "offset" in error


def test_input_error_exit_code():
    assert err(["cfval", "1,spam"], EXIT_PARSE)["kind"] == "input"
    assert err(["fraction", "0/1"], EXIT_PARSE)["kind"] == "input"
    assert err(["nullity"], EXIT_PARSE)["kind"] == "input"


def test_capacity_exit_code(monkeypatch):
    monkeypatch.setenv("KNOTALG_MAX_CROSSINGS", "4")
    assert err(["bracket", "6"], EXIT_CAPACITY)["kind"] == "capacity"
    assert err(["cube", "6"], EXIT_CAPACITY)["kind"] == "capacity"


def test_missing_graph_file():
    assert err(["nullity", "--graph", "/nonexistent.json"], EXIT_PARSE)["kind"] == "input"


def test_verify_never_disagrees_on_corpus():
    from knotalg import to_text
    from corpus import component_corpus

    for e in component_corpus()[::5]:
        result = run(["components", to_text(e), "--verify"])
        assert result.code == 0, result.payload

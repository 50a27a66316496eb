import json

import numpy as np
import pytest

from inkmatch import (
    Dataset,
    InkParseError,
    InkSymbol,
    Stroke,
    load_dataset,
    save_dataset,
    symbol_from_json,
    symbol_to_json,
)


def tiny_symbol(label=0, writer=0, offset=0.0):
    pts = np.array([[0.0 + offset, 0.0], [1.0 + offset, 1.0], [2.0 + offset, 0.5]])
    return InkSymbol((Stroke(pts),), label=label, writer=writer)


def test_stroke_validation():
    with pytest.raises(ValueError):
        Stroke(np.array([[0.0, 0.0]]))
    with pytest.raises(ValueError):
        Stroke(np.array([[0.0, np.nan], [1.0, 1.0]]))
    with pytest.raises(ValueError):
        Stroke(np.array([[0.0, 0.0], [1.0, 1.0]]), times=np.array([0.0, -1.0]))


def test_stroke_points_are_read_only():
    s = Stroke(np.array([[0.0, 0.0], [1.0, 1.0]]))
    with pytest.raises(ValueError):
        s.points[0, 0] = 5.0


def test_symbol_needs_strokes():
    with pytest.raises(ValueError):
        InkSymbol(())


def test_symbol_json_round_trip():
    sym = InkSymbol(
        (
            Stroke(np.array([[0.0, 0.0], [0.5, 0.25]]), times=np.array([0.0, 0.05])),
            Stroke(np.array([[1.0, 1.0], [2.0, 2.0], [3.0, 1.0]])),
        ),
        label=3,
        writer=7,
    )
    assert symbol_from_json(symbol_to_json(sym)) == sym


def test_dataset_file_round_trip(tmp_path):
    symbols = tuple(tiny_symbol(label=i % 3, writer=i, offset=i) for i in range(6))
    ds = Dataset(symbols, class_count=3, writer_ids=frozenset(range(6)))
    path = tmp_path / "ink.jsonl"
    save_dataset(ds, path)
    loaded = load_dataset(path, expected_classes=3)
    assert loaded == ds


def test_load_dataset_paper_shape(tmp_path):
    # 25 writers x 36 classes x 2 repeats
    path = tmp_path / "full.jsonl"
    with path.open("w") as fh:
        for writer in range(25):
            for label in range(36):
                for _ in range(2):
                    fh.write(json.dumps(symbol_to_json(tiny_symbol(label, writer))) + "\n")
    ds = load_dataset(path)
    assert len(ds) == 1800
    assert ds.class_count == 36
    assert len(ds.writer_ids) == 25


def test_load_dataset_empty_file(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("")
    with pytest.raises(InkParseError, match="empty dataset"):
        load_dataset(path)


def test_load_dataset_label_out_of_inventory(tmp_path):
    path = tmp_path / "bad.jsonl"
    lines = [symbol_to_json(tiny_symbol(label=0, writer=0)),
             symbol_to_json(tiny_symbol(label=40, writer=1))]
    path.write_text("\n".join(json.dumps(l) for l in lines))
    with pytest.raises(InkParseError, match="symbol 1 has label 40"):
        load_dataset(path, expected_classes=36)


def test_load_dataset_requires_writer(tmp_path):
    path = tmp_path / "nowriter.jsonl"
    obj = symbol_to_json(tiny_symbol())
    obj["writer"] = None
    path.write_text(json.dumps(obj))
    with pytest.raises(InkParseError, match="no writer id"):
        load_dataset(path, expected_classes=1)


def test_load_dataset_reports_line_numbers(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text(json.dumps(symbol_to_json(tiny_symbol())) + "\nnot json\n")
    with pytest.raises(InkParseError, match="line 2"):
        load_dataset(path, expected_classes=1)


def test_malformed_symbols_rejected():
    with pytest.raises(ValueError, match="at least 2 points"):
        symbol_from_json({"label": None, "writer": None, "strokes": [[[0, 0]]]})
    with pytest.raises(ValueError, match="strokes"):
        symbol_from_json({"label": None, "writer": None, "strokes": []})
    with pytest.raises(ValueError, match="malformed point"):
        symbol_from_json({"label": None, "writer": None, "strokes": [[[0, 0], "x"]]})

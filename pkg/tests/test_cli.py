import json

from inkmatch.cli import main


def test_synth_train_recognize_eval_round_trip(tmp_path, capsys):
    data = tmp_path / "data.jsonl"
    model = tmp_path / "model.json"
    report = tmp_path / "report.json"

    assert main(["synth", "--out", str(data), "--classes", "3", "--writers", "4",
                 "--repeats", "1", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert "12 symbols" in out

    assert main(["train", "--data", str(data), "--out", str(model)]) == 0
    out = capsys.readouterr().out
    assert "templates" in out
    assert model.exists()

    ink = tmp_path / "one.jsonl"
    ink.write_text(data.read_text().splitlines()[0])
    assert main(["recognize", "--model", str(model), "--ink", str(ink), "--topk", "2"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["ranked"][0]["label"] == 0
    assert len(result["ranked"]) <= 2

    assert main(["eval", "--data", str(data), "--protocol", "kfold", "--k", "2",
                 "--seed", "1", "--report", str(report)]) == 0
    out = capsys.readouterr().out
    assert "error" in out
    doc = json.loads(report.read_text())
    assert doc["total"] == 12
    assert doc["misrecognized"] + doc["rejected"] == doc["total"] - doc["correct"]


def test_eval_dichotomous_cli(tmp_path, capsys):
    data = tmp_path / "data.jsonl"
    main(["synth", "--out", str(data), "--classes", "2", "--writers", "5",
          "--repeats", "1", "--seed", "2"])
    capsys.readouterr()
    assert main(["eval", "--data", str(data), "--protocol", "dichotomous",
                 "--train-writers", "3", "--seed", "4", "--no-lb"]) == 0
    assert "dichotomous" in capsys.readouterr().out

"""Golden files in tests/data, checked against fresh computation and independent models."""

from __future__ import annotations

import io
import json
from fractions import Fraction
from pathlib import Path

from twisted_hurwitz.cli import fraction_from_json, main
from twisted_hurwitz.hurwitz import enumerate_hurwitz
from twisted_hurwitz.jack import zonal
from twisted_hurwitz.partitions import hook_products, parse_partition
from twisted_hurwitz.symfunc import parse_series

DATA = Path(__file__).parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_zonal_golden_file():
    rows = [line for line in (DATA / "zonal_small.txt").read_text().splitlines() if not line.startswith("#")]
    assert len(rows) == 6
    for line in rows:
        lam_text, hooks, series = (part.strip() for part in line.split("|"))
        lam = parse_partition(lam_text)
        assert zonal(lam).expansion == parse_series(series)
        h, hp = hook_products(lam, 2)
        assert h * hp == int(hooks)


def test_hurwitz_table_golden_file_is_current():
    golden = (DATA / "hurwitz_table_n4_m3.jsonl").read_text()
    code, text = run("table", "--n", "4", "--m", "3", "--format", "json")
    assert code == 0 and text == golden


def test_hurwitz_table_golden_values_match_enumeration():
    rows = [json.loads(line) for line in (DATA / "hurwitz_table_n4_m3.jsonl").read_text().splitlines()]
    for row in rows:
        values = enumerate_hurwitz(row["n"], row["m"]).values
        assert fraction_from_json(row["value"]) == values[tuple(row["lambda"])]
    assert {(r["n"], r["m"]) for r in rows} == {(n, m) for n in range(1, 5) for m in range(4)}
    published = {(2, (1, 1)): 4, (2, (2,)): 4, (2, (1, 1, 1)): 4, (2, (2, 1)): 4, (2, (3,)): 16, (1, (2,)): 2}
    for r in rows:
        key = (r["m"], tuple(r["lambda"]))
        if key in published:
            assert fraction_from_json(r["value"]) == Fraction(published[key])


def test_moebius_golden_report():
    golden = json.loads((DATA / "moebius_report.json").read_text())
    code, text = run("surface", "--word", "G[1,2]^{++};G[2,3]^{++};G[1,3]^{+-}", "--format", "json")
    assert code == 0 and json.loads(text) == golden
    assert golden["boundary_type"] == [3] and golden["euler_characteristic"] == 0
    assert golden["components"][0]["orientable"] is False

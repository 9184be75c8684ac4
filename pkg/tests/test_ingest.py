import pytest
from gmpy2 import mpq

from frechet1d.core import TimeSeries
from frechet1d.ingest import InputError, ingest, parse_text


def test_csv_basic():
    assert parse_text("0\n2\n") == TimeSeries([0, 2])


def test_csv_comments_and_blank_lines():
    assert parse_text("# header\n1.5 # first\n\n-2,\n") == TimeSeries([mpq(3, 2), -2])


def test_json_decimal_is_exact():
    assert parse_text("[1, 1.5]", "json") == TimeSeries([1, mpq(3, 2)])


def test_bad_token_reports_line():
    with pytest.raises(InputError) as exc:
        parse_text("0\nx\n", source="a.csv")
    assert exc.value.line == 2
    assert "a.csv:2" in str(exc.value)


@pytest.mark.parametrize(
    "text, fmt",
    [("5\n", "csv"), ("# only\n", "csv"), ("[1]", "json"), ('{"a": 1}', "json"), ("[1, true]", "json"), ("[1,", "json")],
)
def test_rejects(text, fmt):
    with pytest.raises(InputError):
        parse_text(text, fmt)


def test_float_mode():
    P = parse_text("0.1\n0.2\n", as_float=True)
    assert P.is_float and P[0] == 0.1


def test_ingest_sniffs_extension(tmp_path):
    (tmp_path / "a.json").write_text("[0, 2]")
    (tmp_path / "b.txt").write_text("0\n2\n")
    assert ingest(str(tmp_path / "a.json")) == TimeSeries([0, 2])
    assert ingest(str(tmp_path / "b.txt")) == TimeSeries([0, 2])
    (tmp_path / "c.json").write_text("0\n2\n")
    assert ingest(str(tmp_path / "c.json"), "csv") == TimeSeries([0, 2])


def test_ingest_empty_and_missing(tmp_path):
    (tmp_path / "e.csv").write_text("")
    with pytest.raises(InputError) as exc:
        ingest(str(tmp_path / "e.csv"))
    assert exc.value.line == 1
    with pytest.raises(InputError):
        ingest(str(tmp_path / "missing.csv"))

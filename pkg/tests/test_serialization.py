import math

import numpy as np
import pytest

from isorkhs import serialization as ser
from isorkhs.errors import DomainError, InputError
from isorkhs.funcspace import DiangleSpan, TrigPoly, diangle_span


def test_format_float_basic():
    assert ser.format_float(1.0) == "1.0"
    assert ser.format_float(1.0, bare=True) == "1"
    assert ser.format_float(0.5) == "0.5"
    assert ser.format_float(-0.0) == "-0.0"
    assert "e" in ser.format_float(1e300)
    with pytest.raises(InputError):
        ser.format_float(float("nan"))
    with pytest.raises(InputError):
        ser.format_float(float("inf"))


@pytest.mark.parametrize("x", [math.pi, 1.0 / 3.0, 1e300, -2.5e-17, 4.0])
def test_format_float_round_trips(x):
    assert float(ser.format_float(x)) == x
    assert float(ser.format_float(x, bare=True)) == x


def test_dumps_is_deterministic_and_sorted():
    doc = {"b": 1.5, "a": [1.0, 2.0], "c": {"z": True, "y": None}}
    text = ser.dumps(doc)
    assert text == ser.dumps(doc)
    assert text.index('"a"') < text.index('"b"') < text.index('"c"')
    parsed = ser.loads(text)
    assert parsed == {"a": [1.0, 2.0], "b": 1.5, "c": {"y": None, "z": True}}


def test_dumps_accepts_numpy_scalars_and_arrays():
    doc = {"v": np.array([1.0, 0.25]), "n": np.float64(2.0), "k": np.int64(3), "b": np.bool_(True)}
    parsed = ser.loads(ser.dumps(doc))
    assert parsed == {"b": True, "k": 3, "n": 2.0, "v": [1.0, 0.25]}


def test_dumps_csv_layout():
    text = ser.dumps_csv([(0.0, 1.0, 0.5)])
    assert text == "x,f,fprime\n0,1,0.5\n"
    assert ser.dumps_csv([(1.0, 2.0)], header=("a", "b")) == "a,b\n1,2\n"


def test_loads_rejects_malformed_text():
    with pytest.raises(InputError):
        ser.loads("{")
    with pytest.raises(InputError):
        ser.loads("")


def test_as_float_guards():
    assert ser.as_float(2, "x") == 2.0
    with pytest.raises(InputError):
        ser.as_float(True, "x")
    with pytest.raises(InputError):
        ser.as_float("1", "x")
    with pytest.raises(InputError):
        ser.as_float(float("inf"), "x")
    with pytest.raises(InputError):
        ser.as_float_list([1.0, "2"], "xs")


def test_trig_poly_round_trip():
    f = TrigPoly((1.0, 0.5, -0.25), (0.0, 0.125))
    record = ser.write_function(f)
    assert record["type"] == "trigpoly"
    g = ser.read_function(record)
    assert isinstance(g, TrigPoly)
    assert g.cos_coeffs == f.cos_coeffs
    assert g.sin_coeffs == f.sin_coeffs


def test_diangle_span_round_trip():
    f = diangle_span(0.5, [(-0.8, 1.0), (0.3, -2.0)])
    record = ser.loads(ser.dumps(ser.write_function(f)))
    assert record["type"] == "dianglespan"
    g = ser.read_function(record)
    assert isinstance(g, DiangleSpan)
    grid = np.linspace(-1.5, 1.5, 31)
    np.testing.assert_allclose(g.value(grid), f.value(grid), atol=0.0)


def test_read_function_interpolant_record():
    record = {
        "type": "interpolant",
        "theta": 2.0,
        "ridge": 0.0,
        "nodes": [-0.25 * math.pi, 0.25 * math.pi],
        "coeffs": [0.5, 0.5],
        "fallback": None,
    }
    f = ser.read_function(record)
    assert isinstance(f, DiangleSpan)
    expected = 2.0 - 0.5 * math.pi * math.sin(0.25 * math.pi)
    assert math.isclose(f.value(0.0), expected, rel_tol=1e-14)


def test_read_function_errors():
    with pytest.raises(InputError):
        ser.read_function({"cos": [1.0]})
    with pytest.raises(InputError):
        ser.read_function({"type": "mystery"})
    with pytest.raises(InputError):
        ser.read_function({"type": "trigpoly", "cos": "nope"})
    with pytest.raises(DomainError):
        ser.read_function({"type": "trigpoly", "sin": [1.0]})


def test_read_expansion():
    exp = ser.read_expansion(
        {"x0": 0.0, "terms": [{"angle": 0.5, "coeff": 2.0}, {"angle": -0.5, "coeff": 1.0}]}
    )
    assert exp.x0 == 0.0
    assert exp.terms == ((-0.5, 1.0), (0.5, 2.0))
    # both fields are optional; a bare record is the zero expansion
    empty = ser.read_expansion({})
    assert empty.x0 == 0.0 and empty.terms == ()
    with pytest.raises(InputError):
        ser.read_expansion({"terms": 3})
    with pytest.raises(InputError):
        ser.read_expansion({"x0": 0.0, "terms": [{"angle": 0.5}]})


def test_body_round_trip_from_vertices():
    record = {"vertices": [[1.0, 1.0], [-1.0, -1.0], [1.0, -1.0], [-1.0, 1.0]]}
    body = ser.read_body(record)
    again = ser.read_body(ser.write_body(body))
    assert again.vertices == body.vertices


def test_body_from_generators():
    body = ser.read_body({"generators": [{"angle": 0.0, "length": 2.0}]})
    assert body.is_segment


@pytest.mark.parametrize(
    "record",
    [
        {},
        {"vertices": [[1.0, 0.0]], "generators": []},
        {"vertices": [[1.0]]},
        {"vertices": "square"},
        {"generators": [{"angle": 0.0}]},
    ],
)
def test_read_body_rejects_bad_records(record):
    with pytest.raises(InputError):
        ser.read_body(record)


def test_read_pair():
    pair = ser.read_pair(
        {
            "U": {"generators": [{"angle": 0.0, "length": 2.0}]},
            "V": {"vertices": [[0.0, 0.0]]},
        }
    )
    assert pair.U.is_segment
    assert pair.V.is_point
    with pytest.raises(InputError):
        ser.read_pair({"U": {"vertices": [[0.0, 0.0]]}})


def test_interpolant_record_validation():
    with pytest.raises(InputError):
        ser.read_interpolant({"nodes": [0.0, 1.0], "coeffs": [1.0]})
    with pytest.raises(InputError):
        ser.read_interpolant({"nodes": [0.0], "coeffs": [1.0], "fallback": "retry"})

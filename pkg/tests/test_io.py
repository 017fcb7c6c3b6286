import struct
import warnings

import numpy as np
import pytest

from qconv import io, sampling
from qconv.errors import (BadMagic, FieldFormatError, ParseError, TruncatedPayload,
                          UnsupportedFormat, ZeroVector)
from qconv.field import QField


def test_qf01_round_trip_is_bit_exact(rng, tmp_path):
    f = sampling.random_field(rng, 3, 5)
    path = tmp_path / "f.qf"
    io.write_field(path, f)
    assert io.read_field(path).bit_equal(f)
    raw = path.read_bytes()
    assert raw[:4] == b"QF01" and struct.unpack("<II", raw[4:12]) == (3, 5)
    assert len(raw) == 12 + 3 * 5 * 32


def test_qf01_errors(rng):
    buf = io.field_to_bytes(sampling.random_field(rng, 2, 2))
    with pytest.raises(BadMagic):
        io.field_from_bytes(b"QF02" + buf[4:])
    with pytest.raises(BadMagic):
        io.field_from_bytes(b"XY")
    with pytest.raises(TruncatedPayload):
        io.field_from_bytes(buf[:-1])
    with pytest.raises(TruncatedPayload):
        io.field_from_bytes(buf[:6])
    with pytest.raises(FieldFormatError):
        io.field_from_bytes(buf + b"\0")
    with pytest.raises(FieldFormatError):
        io.field_from_bytes(struct.pack("<4sII", b"QF01", 0, 3))


def _ppm(width, height, pixels, header=None):
    header = header or f"P6\n{width} {height}\n255\n".encode()
    return header + bytes(pixels)


def test_ppm_read_maps_rgb_to_pure_quaternions(tmp_path):
    path = tmp_path / "a.ppm"
    path.write_bytes(_ppm(2, 1, [255, 0, 51, 0, 255, 0]))
    f = io.read_ppm(path)
    assert f.shape == (1, 2)
    assert np.allclose(f.data[0, 0], [0, 1, 0, 0.2])
    assert np.allclose(f.data[0, 1], [0, 0, 1, 0])


def test_ppm_header_comments(tmp_path):
    path = tmp_path / "c.ppm"
    path.write_bytes(_ppm(1, 1, [1, 2, 3], header=b"P6\n# made by hand\n1 1\n# max\n255\n"))
    assert np.allclose(io.read_ppm(path).data[0, 0, 1:], np.array([1, 2, 3]) / 255)


@pytest.mark.parametrize("content", [
    b"P3\n1 1\n255\n1 2 3\n",
    b"P6\n1 1\n65535\n" + bytes(6),
    b"P6\n2 2\n255\n" + bytes(5),
    b"P6\n2",
    b"P6\nx 2\n255\n",
])
def test_ppm_unsupported(tmp_path, content):
    path = tmp_path / "bad.ppm"
    path.write_bytes(content)
    with pytest.raises(UnsupportedFormat):
        io.read_ppm(path)


def test_ppm_round_trip(rng, tmp_path):
    pixels = rng.integers(0, 256, 4 * 3 * 3, dtype=np.uint8)
    src = tmp_path / "in.ppm"
    src.write_bytes(_ppm(3, 4, pixels))
    out = tmp_path / "out.ppm"
    io.write_ppm(out, io.read_ppm(src))
    assert out.read_bytes() == src.read_bytes()


def test_quantize_clamps_and_rounds_half_up():
    f = QField(np.array([[[0, -0.5, 0.5 / 255, 2.0]]]))
    assert io.quantize(f).tolist() == [[[0, 1, 255]]]


def test_scalar_part_warning():
    f = QField(np.array([[[0.5, 0.1, 0.2, 0.3]]]))
    with pytest.warns(io.ScalarPartWarning):
        io.ppm_bytes(f)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        io.ppm_bytes(QField(np.array([[[1e-9, 0.1, 0.2, 0.3]]])))


def test_read_any_and_write_any(rng, tmp_path):
    f = sampling.random_field(rng, 2, 2, pure=True)
    io.write_any(tmp_path / "x.bin", f)
    assert io.read_any(tmp_path / "x.bin").bit_equal(f)
    io.write_any(tmp_path / "x.PPM", f * 0.0)
    assert (tmp_path / "x.PPM").read_bytes().startswith(b"P6")
    assert io.read_any(tmp_path / "x.PPM").shape == (2, 2)


def test_parse_roots():
    r = io.parse_roots("perp-ij")
    assert r.a == pytest.approx(0.0)
    assert io.parse_roots("equal-i").is_single()
    g = io.parse_roots("gray-line")
    assert g.mu.vector() == pytest.approx((3 ** -0.5,) * 3)
    r = io.parse_roots(" 0, 0, 2 ; 1,0,0 ")
    assert r.mu.vector() == (0, 0, 1.0) and r.nu.vector() == (1.0, 0, 0)
    assert io.parse_roots("0,3,4").is_single()


@pytest.mark.parametrize("text", ["", "1,2", "1,2,x", "1,0,0;0,1,0;0,0,1", "nan,1,0", "bogus"])
def test_parse_roots_errors(text):
    with pytest.raises(ParseError):
        io.parse_roots(text)


def test_parse_roots_zero_vector():
    with pytest.raises(ZeroVector):
        io.parse_roots("0,0,0")


def test_single_quaternion_file_is_44_bytes(tmp_path):
    path = tmp_path / "one.qf"
    io.write_field(path, QField(np.array([[[1.0, 2.0, 3.0, 4.0]]])))
    assert path.stat().st_size == 44
    assert io.read_field(path)[0, 0].to_array().tolist() == [1.0, 2.0, 3.0, 4.0]


def test_red_is_i_and_black_is_zero(tmp_path):
    path = tmp_path / "p.ppm"
    path.write_bytes(_ppm(2, 1, [255, 0, 0, 0, 0, 0]))
    f = io.read_ppm(path)
    assert f.data[0, 0].tolist() == [0, 1, 0, 0] and f.data[0, 1].tolist() == [0, 0, 0, 0]


def test_gray_line_is_a_root():
    mu = io.parse_roots("gray-line").mu
    assert abs(mu * mu + 1) <= 1e-14

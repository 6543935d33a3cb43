"""File formats: PPM (P3/P6), PNG, JSON lattices, and JSON state dumps.

2D images map axis 1 to rows and axis 2 to columns.  Lattices with three or
more axes travel as JSON: ``{"geometry": [...], "palette_id": ...,
"pixels": [...]}`` with 1-based palette indices in basis-index order.
State dumps are ``{"geometry": [...], "S": ..., "amplitudes": [...]}`` with
real amplitudes in basis-index order; states carrying non-negligible
imaginary parts are refused rather than truncated.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .geometry import ImageGeometry
from .image import ClassicalImage
from .palette import ColorPalette
from .state import NassState

PPM_MAXVAL = 255


# ---------------------------------------------------------------------------
# PPM
# ---------------------------------------------------------------------------


def _ppm_tokens(data: bytes):
    pos = 0
    while pos < len(data):
        ch = data[pos : pos + 1]
        if ch.isspace():
            pos += 1
        elif ch == b"#":
            while pos < len(data) and data[pos : pos + 1] != b"\n":
                pos += 1
        else:
            start = pos
            while pos < len(data) and not data[pos : pos + 1].isspace():
                pos += 1
            yield data[start:pos], pos
    yield None, pos


def read_ppm(path) -> np.ndarray:
    """Read a P3 or P6 PPM file into a (height, width, 3) uint8 array."""
    data = Path(path).read_bytes()
    tokens = _ppm_tokens(data)
    header = []
    pos = 0
    while len(header) < 4:
        token, pos = next(tokens)
        if token is None:
            raise ValueError(f"truncated PPM header in {path}")
        header.append(token)
    magic = header[0].decode("ascii", "replace")
    try:
        width, height, maxval = (int(v) for v in header[1:])
    except ValueError:
        raise ValueError(f"bad PPM header in {path}") from None
    if maxval != PPM_MAXVAL:
        raise ValueError(f"only maxval {PPM_MAXVAL} PPM files are supported")
    count = width * height * 3
    if magic == "P6":
        raster = data[pos + 1 : pos + 1 + count]
        if len(raster) != count:
            raise ValueError(f"truncated P6 raster in {path}")
        arr = np.frombuffer(raster, dtype=np.uint8)
    elif magic == "P3":
        values = []
        while len(values) < count:
            token, pos = next(tokens)
            if token is None:
                raise ValueError(f"truncated P3 raster in {path}")
            values.append(int(token))
        arr = np.array(values, dtype=np.uint8)
    else:
        raise ValueError(f"not a PPM file (magic {magic!r})")
    return arr.reshape(height, width, 3)


def write_ppm(path, rgb: np.ndarray, binary: bool = True) -> None:
    """Write a (height, width, 3) uint8 array as P6 (default) or P3."""
    arr = np.ascontiguousarray(rgb, dtype=np.uint8)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected (h, w, 3) array, got shape {arr.shape}")
    height, width = arr.shape[:2]
    header = f"{'P6' if binary else 'P3'}\n{width} {height}\n{PPM_MAXVAL}\n"
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        if binary:
            fh.write(arr.tobytes())
        else:
            rows = (" ".join(str(v) for v in row.reshape(-1)) for row in arr)
            fh.write(("\n".join(rows) + "\n").encode("ascii"))


# ---------------------------------------------------------------------------
# PNG (via Pillow)
# ---------------------------------------------------------------------------


def read_png(path) -> np.ndarray:
    from PIL import Image

    with Image.open(path) as img:
        rgb = img.convert("RGB")
        return np.asarray(rgb, dtype=np.uint8).copy()


def write_png(path, rgb: np.ndarray) -> None:
    from PIL import Image

    arr = np.ascontiguousarray(rgb, dtype=np.uint8)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected (h, w, 3) array, got shape {arr.shape}")
    Image.fromarray(arr, mode="RGB").save(path, format="PNG")


# ---------------------------------------------------------------------------
# raster <-> lattice image
# ---------------------------------------------------------------------------


def raster_to_image(rgb: np.ndarray, palette: ColorPalette, geometry: ImageGeometry) -> ClassicalImage:
    """Convert an RGB raster to palette indices under a 2D geometry."""
    if geometry.k != 2:
        raise ValueError("raster files carry 2D geometries only")
    height, width = geometry.shape
    if rgb.shape[:2] != (height, width):
        raise ValueError(
            f"image is {rgb.shape[1]}x{rgb.shape[0]} but geometry {geometry} "
            f"wants {width}x{height}"
        )
    r = rgb[:, :, 0].astype(np.int64)
    g = rgb[:, :, 1].astype(np.int64)
    b = rgb[:, :, 2].astype(np.int64)
    if palette.palette_id == "rgb24":
        pixels = r * 65536 + g * 256 + b + 1
    elif palette.palette_id == "gray256":
        if not (np.array_equal(r, g) and np.array_equal(g, b)):
            raise ValueError("image has non-gray pixels; use the rgb24 palette")
        pixels = r + 1
    else:
        pixels = np.empty((height, width), dtype=np.int64)
        flat = pixels.reshape(-1)
        for i, (cr, cg, cb) in enumerate(
            zip(r.reshape(-1), g.reshape(-1), b.reshape(-1))
        ):
            flat[i] = palette.index_of_color((int(cr), int(cg), int(cb)))
    return ClassicalImage(geometry, pixels)


def image_to_raster(image: ClassicalImage, palette: ColorPalette) -> np.ndarray:
    """Convert a 2D lattice image back to an RGB raster."""
    if image.geometry.k != 2:
        raise ValueError("raster files carry 2D geometries only")
    image.validate_against(palette)
    pixels = image.pixels
    if palette.palette_id == "rgb24":
        v = pixels - 1
        rgb = np.stack([(v >> 16) & 0xFF, (v >> 8) & 0xFF, v & 0xFF], axis=-1)
    elif palette.palette_id == "gray256":
        level = pixels - 1
        rgb = np.stack([level, level, level], axis=-1)
    else:
        rgb = np.empty(pixels.shape + (3,), dtype=np.int64)
        for index in np.unique(pixels):
            color = palette.color_of(int(index))
            if not isinstance(color, tuple):
                color = (color, color, color)
            rgb[pixels == index] = color
    return rgb.astype(np.uint8)


# ---------------------------------------------------------------------------
# JSON lattice
# ---------------------------------------------------------------------------


def write_lattice(path, image: ClassicalImage, palette: ColorPalette) -> None:
    payload = {
        "geometry": list(image.geometry.axis_widths),
        "palette_id": palette.palette_id,
        "pixels": [int(v) for v in image.flat()],
    }
    Path(path).write_text(json.dumps(payload) + "\n")


def read_lattice(path, palette: ColorPalette | None = None) -> ClassicalImage:
    payload = json.loads(Path(path).read_text())
    geometry = ImageGeometry(tuple(int(m) for m in payload["geometry"]))
    if palette is not None and payload.get("palette_id") not in (None, palette.palette_id):
        raise ValueError(
            f"lattice was written for palette {payload['palette_id']!r}, "
            f"not {palette.palette_id!r}"
        )
    return ClassicalImage.from_flat(geometry, payload["pixels"])


# ---------------------------------------------------------------------------
# JSON state dump
# ---------------------------------------------------------------------------


def write_state(path, state: NassState) -> None:
    if np.max(np.abs(state.amplitudes.imag)) > 1e-12:
        raise ValueError("state has complex amplitudes; the dump format is real-valued")
    payload = {
        "geometry": list(state.geometry.axis_widths),
        "S": state.magnitude,
        "amplitudes": [float(a) for a in state.amplitudes.real],
    }
    Path(path).write_text(json.dumps(payload) + "\n")


def read_state(path) -> NassState:
    payload = json.loads(Path(path).read_text())
    geometry = ImageGeometry(tuple(int(m) for m in payload["geometry"]))
    magnitude = payload.get("S")
    amps = np.array(payload["amplitudes"], dtype=np.float64)
    return NassState(
        geometry,
        amps.astype(np.complex128),
        None if magnitude is None else float(magnitude),
    )


# ---------------------------------------------------------------------------
# extension dispatch
# ---------------------------------------------------------------------------


def read_image(path, palette: ColorPalette, geometry: ImageGeometry | None = None) -> ClassicalImage:
    """Read PPM/PNG (2D, geometry inferred when omitted) or a JSON lattice."""
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        image = read_lattice(path, palette)
        if geometry is not None and image.geometry != geometry:
            raise ValueError(
                f"lattice geometry {image.geometry} != requested {geometry}"
            )
        return image
    rgb = read_ppm(path) if suffix in (".ppm", ".pnm") else read_png(path)
    if geometry is None:
        height, width = rgb.shape[:2]
        mh, mw = height.bit_length() - 1, width.bit_length() - 1
        if (1 << mh, 1 << mw) != (height, width):
            raise ValueError(f"image is {width}x{height}; sides must be powers of 2")
        geometry = ImageGeometry((mh, mw))
    return raster_to_image(rgb, palette, geometry)


def write_image(path, image: ClassicalImage, palette: ColorPalette) -> None:
    """Write PPM/PNG for 2D geometries, JSON lattice otherwise."""
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        write_lattice(path, image, palette)
    elif suffix in (".ppm", ".pnm"):
        write_ppm(path, image_to_raster(image, palette))
    elif suffix == ".png":
        write_png(path, image_to_raster(image, palette))
    else:
        raise ValueError(f"unsupported image extension {suffix!r}")

"""Axis-aligned boxes, overlap measures and quadrant-rotation transforms.

Boxes use continuous corner coordinates: (x1, y1) is the top-left corner,
(x2, y2) the bottom-right, no pixel-center offsets. Image rotations are
clockwise and restricted to 0/90/180/270 degrees; the 90-degree map sends
a point (x, y) of a width*height image to (height - y, x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError

ROTATIONS = (0, 90, 180, 270)


@dataclass(frozen=True, slots=True)
class BoxXYXY:
    """Axis-aligned box in pixel corner coordinates, x1 <= x2 and y1 <= y2."""

    x1: float
    y1: float
    x2: float
    y2: float

    def __post_init__(self):
        for name in ("x1", "y1", "x2", "y2"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValidationError(f"box coordinate {name}={v!r} is not finite")
        if self.x1 > self.x2 or self.y1 > self.y2:
            raise ValidationError(
                f"box corners out of order: ({self.x1}, {self.y1}, {self.x2}, {self.y2})"
            )

    @property
    def width(self) -> float:
        return self.x2 - self.x1

    @property
    def height(self) -> float:
        return self.y2 - self.y1

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def center(self) -> tuple[float, float]:
        return (self.x1 + self.x2) / 2.0, (self.y1 + self.y2) / 2.0

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x1, self.y1, self.x2, self.y2)


@dataclass(frozen=True, slots=True)
class ImageDims:
    """Positive integer image size in pixels."""

    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValidationError(f"image dims must be >= 1, got {self.width}x{self.height}")

    def rotated(self, rot: int) -> "ImageDims":
        """Size of the image after a clockwise quadrant rotation."""
        check_rotation(rot)
        if rot in (90, 270):
            return ImageDims(self.height, self.width)
        return self


def check_rotation(rot: int) -> None:
    if rot not in ROTATIONS:
        raise ValidationError(f"rotation must be one of {ROTATIONS}, got {rot!r}")


def iou(a: BoxXYXY, b: BoxXYXY) -> float:
    """Intersection over union of two boxes; 0 when the union has zero area."""
    ix = min(a.x2, b.x2) - max(a.x1, b.x1)
    iy = min(a.y2, b.y2) - max(a.y1, b.y1)
    if ix <= 0.0 or iy <= 0.0:
        return 0.0
    inter = ix * iy
    union = a.area + b.area - inter
    if union <= 0.0:
        return 0.0
    return inter / union


def ciou(a: BoxXYXY, b: BoxXYXY) -> float:
    """Complete IoU: IoU minus center-distance and aspect-ratio penalties.

    The center penalty is the squared center distance over the squared
    diagonal of the smallest enclosing box; the aspect penalty is alpha*v
    with v = (4/pi^2) (atan(wa/ha) - atan(wb/hb))^2 and alpha = v/(1-IoU+v).
    Both boxes must have positive area.
    """
    if a.area <= 0.0 or b.area <= 0.0:
        raise ValidationError("ciou requires boxes with positive area")
    overlap = iou(a, b)
    (acx, acy), (bcx, bcy) = a.center, b.center
    rho2 = (acx - bcx) ** 2 + (acy - bcy) ** 2
    cw = max(a.x2, b.x2) - min(a.x1, b.x1)
    ch = max(a.y2, b.y2) - min(a.y1, b.y1)
    c2 = cw**2 + ch**2
    v = (4.0 / math.pi**2) * (math.atan(a.width / a.height) - math.atan(b.width / b.height)) ** 2
    if v > 0.0:
        alpha = v / ((1.0 - overlap) + v)
    else:
        alpha = 0.0
    return overlap - rho2 / c2 - alpha * v


def _check_in_bounds(b: BoxXYXY, dims: ImageDims) -> None:
    if b.x1 < 0 or b.y1 < 0 or b.x2 > dims.width or b.y2 > dims.height:
        raise ValidationError(
            f"box {b.as_tuple()} outside image bounds {dims.width}x{dims.height}"
        )


def rotate_box(b: BoxXYXY, rot: int, dims: ImageDims) -> BoxXYXY:
    """Coordinates of `b` in the frame of the image rotated clockwise by `rot`.

    Args:
        b: box inside a `dims.width` x `dims.height` image.
        rot: clockwise rotation, one of 0/90/180/270.
        dims: size of the unrotated image; the output frame is `dims.rotated(rot)`.
    """
    check_rotation(rot)
    _check_in_bounds(b, dims)
    w, h = dims.width, dims.height
    if rot == 0:
        return b
    if rot == 90:
        # (x, y) -> (h - y, x); corners re-sorted
        return BoxXYXY(h - b.y2, b.x1, h - b.y1, b.x2)
    if rot == 180:
        return BoxXYXY(w - b.x2, h - b.y2, w - b.x1, h - b.y1)
    # 270
    return BoxXYXY(b.y1, w - b.x2, b.y2, w - b.x1)


def unrotate_box(b: BoxXYXY, rot: int, original_dims: ImageDims) -> BoxXYXY:
    """Inverse of `rotate_box`: map a box from the rotated frame back.

    `b` must lie within `original_dims.rotated(rot)`; the result is expressed
    in the original `original_dims` frame, and round-trips with `rotate_box`
    exactly whenever the coordinate subtractions are exact (integer or other
    binary-representable pixel coordinates).
    """
    check_rotation(rot)
    _check_in_bounds(b, original_dims.rotated(rot))
    w, h = original_dims.width, original_dims.height
    if rot == 0:
        return b
    if rot == 90:
        # inverse of (x, y) -> (h - y, x) is (u, v) -> (v, h - u)
        return BoxXYXY(b.y1, h - b.x2, b.y2, h - b.x1)
    if rot == 180:
        return BoxXYXY(w - b.x2, h - b.y2, w - b.x1, h - b.y1)
    # inverse of 270: (u, v) -> (w - v, u)
    return BoxXYXY(w - b.y2, b.x1, w - b.y1, b.x2)

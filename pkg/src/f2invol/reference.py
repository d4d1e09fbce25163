"""Published values used as fixed expectations by the verification suites."""

from __future__ import annotations

from .gf2 import BitMatrix

# involution of TO(6) and its mirror, as printed
INTRO_A = BitMatrix.parse("001110\n000001\n101100\n101010\n100110\n010000")
INTRO_MIRROR_A = BitMatrix.parse("110001\n111110\n010011\n010101\n011001\n101111")

# DD invariants of the 11 involution classes of TO(6)
TO6_DD_CODES = ("1121", "2111", "2131", "3121", "1001", "0110", "2021", "2120", "3021", "2130", "3131")

# DD code -> (I1, ..., I8) for the 16 involution classes of TO(8)
TO8_TABLE = {
    "0110": (128, 0, 0, 0, 128, 0, 0, 0),
    "1001": (128, 0, 0, 128, 0, 0, 0, 128),
    "1121": (64, 0, 64, 64, 64, 0, 0, 0),
    "2111": (64, 0, 64, 64, 0, 64, 0, 64),
    "2021": (64, 64, 0, 128, 0, 0, 64, 0),
    "2120": (64, 64, 0, 0, 0, 128, 64, 0),
    "2130": (32, 96, 0, 0, 32, 96, 0, 0),
    "3021": (32, 96, 0, 128, 0, 0, 0, 32),
    "2131": (32, 32, 64, 64, 32, 32, 0, 0),
    "3121": (32, 32, 64, 64, 0, 64, 0, 32),
    "3131": (32, 32, 64, 64, 0, 64, 32, 0),
    "3141": (16, 48, 64, 64, 16, 48, 0, 0),
    "4131": (16, 48, 64, 64, 0, 64, 0, 16),
    "4041": (16, 112, 0, 128, 0, 0, 16, 0),
    "4140": (16, 112, 0, 0, 0, 128, 16, 0),
    "4141": (16, 48, 64, 64, 0, 64, 16, 0),
}

TO6_ORDER = 23_040
TO6_INVOLUTIONS = 752

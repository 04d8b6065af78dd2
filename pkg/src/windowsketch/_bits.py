"""Little-endian bit packing for sketch serialization."""

from __future__ import annotations


class BitWriter:
    def __init__(self):
        self.value = 0
        self.nbits = 0

    def write(self, value: int, width: int) -> None:
        if value < 0 or value >> width:
            raise ValueError(f"value {value} does not fit in {width} bits")
        self.value |= value << self.nbits
        self.nbits += width

    def to_bytes(self) -> bytes:
        return self.value.to_bytes((self.nbits + 7) // 8, "little")


class BitReader:
    def __init__(self, data: bytes, nbits: int):
        if len(data) != (nbits + 7) // 8:
            raise ValueError(f"expected {(nbits + 7) // 8} bytes, got {len(data)}")
        self.value = int.from_bytes(data, "little")
        if self.value >> nbits:
            raise ValueError("trailing bits set beyond the declared layout")
        self.pos = 0

    def read(self, width: int) -> int:
        out = (self.value >> self.pos) & ((1 << width) - 1)
        self.pos += width
        return out

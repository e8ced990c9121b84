# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bit-impairment kernel; must agree bit-for-bit with
bcp._chanfallback.corrupt_bits (same splitmix-style stream)."""

from libc.stdint cimport uint8_t, uint64_t

cdef uint64_t GAMMA = 0x9E3779B97F4A7C15UL


cdef inline uint64_t _mix(uint64_t z) noexcept nogil:
    z ^= z >> 30
    z *= 0xBF58476D1CE4E5B9UL
    z ^= z >> 27
    z *= 0x94D049BB133111EBUL
    z ^= z >> 31
    return z


def corrupt_bits(bytes data, object s0, object ber_threshold, bint flip_all):
    cdef Py_ssize_t n = len(data)
    cdef bytearray out = bytearray(data)
    cdef uint8_t[:] buf = out
    cdef uint64_t base = <uint64_t> (s0 & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t thr = 0
    cdef Py_ssize_t i, bit
    cdef uint64_t j, u
    if flip_all:
        for i in range(n):
            buf[i] = <uint8_t> (buf[i] ^ 0xFF)
        return bytes(out)
    thr = <uint64_t> ber_threshold
    if thr == 0:
        return bytes(out)
    with nogil:
        j = 2  # draw index argument offset for bit 0
        for i in range(n):
            for bit in range(8):
                u = _mix(base + GAMMA * j)
                if u < thr:
                    buf[i] = <uint8_t> (buf[i] ^ (0x80 >> bit))
                j += 1
    return bytes(out)

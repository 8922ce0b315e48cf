# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled machine kernels: drop-in fast twin of reachcalc._core_py.

Outputs are tracked as unsigned 64-bit integers, so these kernels only
accept output caps up to 64 bits (the frontend routes larger caps to the
pure kernel).  Results are bit-for-bit identical to the pure versions.
"""

OK = 0
STEP_CAP = 1
OUTPUT_CAP = 2


def run_bits(str bits, long max_steps, long max_output_bits):
    """Execute a validated program; (status, output) with status 0 on success."""
    cdef Py_ssize_t n = len(bits)
    cdef unsigned long long out = 0
    cdef int outlen = 0
    cdef long steps = 0
    cdef Py_ssize_t i
    cdef Py_UCS4 c1, c2
    cdef int op
    for i in range(0, n, 2):
        steps += 1
        if steps > max_steps:
            return STEP_CAP, None
        c1 = bits[i]
        c2 = bits[i + 1]
        op = ((c1 == u'1') << 1) | (c2 == u'1')
        if op == 0 or op == 1:
            if outlen + 1 > max_output_bits:
                return OUTPUT_CAP, None
            out = (out << 1) | <unsigned long long> op
            outlen += 1
        elif op == 2:
            if outlen:
                if 2 * outlen > max_output_bits:
                    return OUTPUT_CAP, None
                out = (out << outlen) | out
                outlen *= 2
        else:
            break
    return OK, _render_output(out, outlen)


cdef str _render_output(unsigned long long out, int outlen):
    cdef list chars = []
    cdef int j
    for j in range(outlen - 1, -1, -1):
        chars.append(u'1' if (out >> j) & 1 else u'0')
    return u''.join(chars)


def scan_length_class(int n_opcodes, str target, long max_output_bits):
    """All valid programs of exactly n_opcodes opcodes printing `target`.

    Same contract and ordering as the pure kernel; internally prunes a
    candidate as soon as its (append-only) output stops being a prefix of
    the target, which cannot change the hit set.
    """
    cdef int tlen = len(target)
    if tlen > max_output_bits or tlen > 64 or n_opcodes < 1 or n_opcodes > 33:
        # 33 free-opcode limit keeps the counter in a fixed array; the
        # frontend never asks for more (caps are far smaller).
        return scan_oversized(n_opcodes, target, max_output_bits)
    cdef unsigned long long tval = 0
    cdef int j
    for j in range(tlen):
        tval = (tval << 1) | <unsigned long long> (target[j] == u'1')

    cdef int k = n_opcodes - 1
    cdef int ops[33]
    for j in range(k):
        ops[j] = 0
    cdef list hits = []
    cdef unsigned long long out
    cdef int outlen, op, ok
    while True:
        out = 0
        outlen = 0
        ok = 1
        for j in range(k):
            op = ops[j]
            if op == 0:
                if outlen + 1 > tlen:
                    ok = 0
                    break
                out = out << 1
                outlen += 1
            elif op == 1:
                if outlen + 1 > tlen:
                    ok = 0
                    break
                out = (out << 1) | 1ULL
                outlen += 1
            else:
                if outlen:
                    if 2 * outlen > tlen:
                        ok = 0
                        break
                    out = (out << outlen) | out
                    outlen *= 2
            if outlen and out != (tval >> (tlen - outlen)):
                ok = 0
                break
        if ok and outlen == tlen and out == tval:
            hits.append(_render_program(ops, k))
        # base-3 increment of the free opcodes, least significant last
        j = k - 1
        while j >= 0 and ops[j] == 2:
            ops[j] = 0
            j -= 1
        if j < 0:
            break
        ops[j] += 1
    return hits


cdef str _render_program(int *ops, int k):
    cdef list parts = []
    cdef int j
    for j in range(k):
        if ops[j] == 0:
            parts.append(u'00')
        elif ops[j] == 1:
            parts.append(u'01')
        else:
            parts.append(u'10')
    parts.append(u'11')
    return u''.join(parts)


def scan_oversized(int n_opcodes, str target, long max_output_bits):
    # Inputs the u64 fast path cannot hold; mirrors the pure kernel.
    from . import _core_py
    return _core_py.scan_length_class(n_opcodes, target, max_output_bits)

# cython: boundscheck=False, wraparound=False, nonecheck=False
"""Compiled kernels for the orbit-closure pair sweeps.

Mirrors ``_pykernels`` exactly; see ``__init__`` for the input layout.
Both kernels release the GIL, so callers may fan row blocks out across
threads.
"""


def closure_rows(unsigned char[:, ::1] out,
                 Py_ssize_t row_start, Py_ssize_t row_stop,
                 const int[::1] orb_k, const int[::1] orb_v,
                 const int[::1] orb_w,
                 const unsigned char[:, ::1] ksub,
                 const int[::1] par_off, const int[::1] par_elem,
                 const int[:, ::1] mult,
                 const unsigned char[:, ::1] bru):
    cdef Py_ssize_t n = out.shape[1]
    cdef Py_ssize_t a, b, t, p0, p1
    cdef int ka, va, wa, vb, wb, u
    cdef unsigned char hit
    with nogil:
        for a in range(row_start, row_stop):
            ka = orb_k[a]
            va = orb_v[a]
            wa = orb_w[a]
            p0 = par_off[ka]
            p1 = par_off[ka + 1]
            for b in range(n):
                if not ksub[ka, orb_k[b]]:
                    continue
                vb = orb_v[b]
                wb = orb_w[b]
                hit = 0
                for t in range(p0, p1):
                    u = par_elem[t]
                    if bru[mult[va, u], vb] and bru[wb, mult[wa, u]]:
                        hit = 1
                        break
                out[a, b] = hit
    return out


def bclosure_rows(unsigned char[:, ::1] out,
                  Py_ssize_t row_start, Py_ssize_t row_stop,
                  const int[::1] orb_k, const int[::1] orb_v,
                  const int[::1] orb_w,
                  const unsigned char[:, ::1] ksub,
                  const int[::1] par_off, const int[::1] par_elem,
                  const unsigned char[:, ::1] minrep,
                  const int[:, ::1] mult, const int[::1] inv,
                  const unsigned char[:, ::1] bru):
    cdef Py_ssize_t n = out.shape[1]
    cdef Py_ssize_t a, b, t, s, p0, p1, q0, q1
    cdef int ka, kb, va, wa, vb, wb, up, u, x, y
    cdef unsigned char hit
    with nogil:
        for a in range(row_start, row_stop):
            ka = orb_k[a]
            va = orb_v[a]
            wa = orb_w[a]
            p0 = par_off[ka]
            p1 = par_off[ka + 1]
            for b in range(n):
                kb = orb_k[b]
                if not ksub[ka, kb]:
                    continue
                vb = orb_v[b]
                wb = orb_w[b]
                q0 = par_off[kb]
                q1 = par_off[kb + 1]
                hit = 0
                for t in range(p0, p1):
                    up = par_elem[t]
                    if not minrep[kb, up]:
                        continue
                    x = mult[va, up]
                    y = mult[wa, up]
                    for s in range(q0, q1):
                        u = par_elem[s]
                        if bru[mult[x, inv[u]], vb] and bru[mult[wb, u], y]:
                            hit = 1
                            break
                    if hit:
                        break
                out[a, b] = hit
    return out

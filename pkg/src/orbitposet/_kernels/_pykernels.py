"""Pure-Python kernels; the reference implementation of the pair sweeps.

Same semantics as ``_ckernels.pyx``, loop for loop.  Arrays are copied
into plain lists up front: at desk scale the conversion is negligible and
the inner loops run several times faster than through numpy indexing.
"""

from __future__ import annotations


def closure_rows(out, row_start, row_stop, orb_k, orb_v, orb_w,
                 ksub, par_off, par_elem, mult, bru):
    n = out.shape[1]
    k_of = orb_k.tolist()
    v_of = orb_v.tolist()
    w_of = orb_w.tolist()
    ksub_l = ksub.tolist()
    off = par_off.tolist()
    elem = par_elem.tolist()
    mult_l = mult.tolist()
    bru_l = bru.tolist()
    for a in range(row_start, row_stop):
        ka = k_of[a]
        krow = ksub_l[ka]
        mva = mult_l[v_of[a]]
        mwa = mult_l[w_of[a]]
        us = elem[off[ka]:off[ka + 1]]
        # products v_a * u and w_a * u do not depend on b
        vu = [bru_l[mva[u]] for u in us]   # rows of bru at index v_a*u
        wu = [mwa[u] for u in us]
        row = out[a]
        for b in range(n):
            if not krow[k_of[b]]:
                continue
            vb = v_of[b]
            bwb = bru_l[w_of[b]]
            for t in range(len(us)):
                if vu[t][vb] and bwb[wu[t]]:
                    row[b] = 1
                    break
    return out


def bclosure_rows(out, row_start, row_stop, orb_k, orb_v, orb_w,
                  ksub, par_off, par_elem, minrep, mult, inv, bru):
    n = out.shape[1]
    k_of = orb_k.tolist()
    v_of = orb_v.tolist()
    w_of = orb_w.tolist()
    ksub_l = ksub.tolist()
    off = par_off.tolist()
    elem = par_elem.tolist()
    minrep_l = minrep.tolist()
    mult_l = mult.tolist()
    inv_l = inv.tolist()
    bru_l = bru.tolist()
    for a in range(row_start, row_stop):
        ka = k_of[a]
        krow = ksub_l[ka]
        mva = mult_l[v_of[a]]
        mwa = mult_l[w_of[a]]
        ups = elem[off[ka]:off[ka + 1]]
        va_up = [mva[up] for up in ups]
        wa_up = [mwa[up] for up in ups]
        row = out[a]
        for b in range(n):
            kb = k_of[b]
            if not krow[kb]:
                continue
            vb = v_of[b]
            minrow = minrep_l[kb]
            mwb = mult_l[w_of[b]]
            us = elem[off[kb]:off[kb + 1]]
            uinv = [inv_l[u] for u in us]
            wbu = [mwb[u] for u in us]
            hit = 0
            for t in range(len(ups)):
                if not minrow[ups[t]]:
                    continue
                bvx = mult_l[va_up[t]]
                bwy = wa_up[t]
                for s in range(len(us)):
                    if bru_l[bvx[uinv[s]]][vb] and bru_l[wbu[s]][bwy]:
                        hit = 1
                        break
                if hit:
                    break
            if hit:
                row[b] = 1
    return out

#!/usr/bin/env python3
"""Convert a drawn knot diagram into a PD code.

The drawing is given as polylines, one per under-arc: each polyline starts
and ends next to the crossing it passes under (a small gap on either side of
the crossing centre).  Crossing centres are recovered as the midpoints of
paired gap endpoints, over-passes as the polyline points lying on them.

Output follows the library convention: every crossing is listed
counterclockwise starting from the incoming under-strand end, edges are
numbered 1..2n along the traversal.

    python3 tools/polyline_pd.py drawing.json

where drawing.json is {"arcs": [[[x, y], ...], ...]}.
"""
import json
import math
import sys

EPS = 1e-6


def on_segment(p, a, b):
    ax, ay = a
    bx, by = b
    px, py = p
    cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
    if abs(cross) > 1e-6:
        return None
    dot = (px - ax) * (bx - ax) + (py - ay) * (by - ay)
    length2 = (bx - ax) ** 2 + (by - ay) ** 2
    if dot < -EPS or dot > length2 + EPS:
        return None
    return dot / length2


def transcribe(arcs, gap=0.65):
    ends = []
    for i, arc in enumerate(arcs):
        ends.append((i, 0, tuple(arc[0])))
        ends.append((i, 1, tuple(arc[-1])))
    # Pair gap endpoints whose midpoint lies on some other arc.
    centres = []
    used = set()
    for a in range(len(ends)):
        if a in used:
            continue
        best = None
        for b in range(len(ends)):
            if b == a or b in used:
                continue
            pa, pb = ends[a][2], ends[b][2]
            d = math.dist(pa, pb)
            if d > gap:
                continue
            mid = ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)
            hit = any(on_segment(mid, arc[k], arc[k + 1]) is not None
                      for arc in arcs for k in range(len(arc) - 1))
            if hit and (best is None or d < best[0]):
                best = (d, b, mid)
        if best is None:
            raise SystemExit(f"unpaired arc end {ends[a]}")
        used.add(a)
        used.add(best[1])
        centres.append((ends[a], ends[best[1]], best[2]))

    joint = {}
    for ea, eb, mid in centres:
        joint[(ea[0], ea[1])] = ((eb[0], eb[1]), mid)
        joint[(eb[0], eb[1])] = ((ea[0], ea[1]), mid)
    centre_index = {}
    for idx, (_, _, mid) in enumerate(centres):
        centre_index[(round(mid[0], 6), round(mid[1], 6))] = idx

    # Walk the components; record every passage through a centre.
    visited = set()
    passages = []  # per component: list of (centre, kind, direction)
    for start in range(len(arcs)):
        if start in visited:
            continue
        comp = []
        arc, forward = start, True
        while arc not in visited:
            visited.add(arc)
            pts = arcs[arc] if forward else list(reversed(arcs[arc]))
            for k in range(len(pts) - 1):
                a, b = pts[k], pts[k + 1]
                hits = []
                for key, idx in centre_index.items():
                    t = on_segment(key, a, b)
                    if t is not None and EPS < t < 1 - EPS:
                        hits.append((t, idx))
                for t, idx in sorted(hits):
                    comp.append((idx, "over", (b[0] - a[0], b[1] - a[1])))
            end_key = (arc, 1 if forward else 0)
            (other, mid) = joint[end_key]
            last = pts[-1]
            direction = (mid[0] - last[0], mid[1] - last[1])
            idx = centre_index[(round(mid[0], 6), round(mid[1], 6))]
            comp.append((idx, "under", direction))
            arc, forward = other[0], other[1] == 0
        passages.append(comp)

    # Edges run between consecutive passages.
    label = 0
    slots = {}  # centre -> list of (angle, label, kind, incoming)
    for comp in passages:
        n = len(comp)
        base = label
        label += n
        for k, (idx, kind, d) in enumerate(comp):
            incoming_edge = base + k if k > 0 else base + n
            outgoing_edge = base + k + 1
            ang_in = math.atan2(-d[1], -d[0])
            ang_out = math.atan2(d[1], d[0])
            slots.setdefault(idx, []).append((ang_in, incoming_edge, kind, True))
            slots.setdefault(idx, []).append((ang_out, outgoing_edge, kind, False))

    pd = []
    for idx in range(len(centres)):
        ends4 = sorted(slots[idx], key=lambda s: s[0])
        start = next(i for i, s in enumerate(ends4) if s[2] == "under" and s[3])
        ordered = ends4[start:] + ends4[:start]
        pd.append([s[1] for s in ordered])
    return pd


def main():
    with open(sys.argv[1]) as fh:
        drawing = json.load(fh)
    pd = transcribe(drawing["arcs"])
    print(" ".join("X[" + ",".join(map(str, x)) + "]" for x in pd))


if __name__ == "__main__":
    main()

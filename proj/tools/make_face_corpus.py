#!/usr/bin/env python3
"""Writes the bundled 20-landmark face corpus (BioID point ordering) to data/faces/.

The shapes are synthetic: a fixed template deformed by head yaw, mouth opening,
smile, brow raise, scale/translation and per-point jitter, all drawn from a
seeded Python PRNG so the corpus is reproducible.
"""
import argparse
import math
import pathlib
import random

# x, y in a 384 x 286 image
TEMPLATE = [
    (160.0, 120.0),  # 0 right pupil
    (225.0, 120.0),  # 1 left pupil
    (170.0, 200.0),  # 2 right mouth corner
    (215.0, 200.0),  # 3 left mouth corner
    (140.0, 105.0),  # 4 right brow outer
    (175.0, 102.0),  # 5 right brow inner
    (210.0, 102.0),  # 6 left brow inner
    (245.0, 105.0),  # 7 left brow outer
    (125.0, 125.0),  # 8 right temple
    (148.0, 121.0),  # 9 right eye outer
    (172.0, 121.0),  # 10 right eye inner
    (213.0, 121.0),  # 11 left eye inner
    (237.0, 121.0),  # 12 left eye outer
    (260.0, 125.0),  # 13 left temple
    (192.0, 165.0),  # 14 nose tip
    (182.0, 172.0),  # 15 right nostril
    (203.0, 172.0),  # 16 left nostril
    (192.0, 193.0),  # 17 upper lip
    (192.0, 210.0),  # 18 lower lip
    (192.0, 240.0),  # 19 chin
]

BROWS = (4, 5, 6, 7)
CENTRAL_DEPTH = {14: 1.0, 15: 0.8, 16: 0.8, 17: 0.7, 18: 0.7, 19: 0.6, 0: 0.3, 1: 0.3}


def make_shape(rng):
    yaw = rng.uniform(-0.5, 0.5)
    mouth_open = max(0.0, rng.gauss(4.0, 5.0))
    smile = rng.gauss(0.0, 4.0)
    brow = rng.gauss(0.0, 3.0)
    scale = rng.uniform(0.85, 1.15)
    tx, ty = rng.uniform(-25, 25), rng.uniform(-15, 15)
    cx = 192.0
    pts = []
    for j, (x, y) in enumerate(TEMPLATE):
        # rotation about a vertical axis: lateral points foreshorten, protruding points shift
        dx = x - cx
        x = cx + dx * math.cos(yaw) + 40.0 * CENTRAL_DEPTH.get(j, 0.0) * math.sin(yaw)
        if j in BROWS:
            y -= brow
        if j in (2, 3):
            x += (-1 if j == 2 else 1) * smile
            y -= 0.6 * abs(smile)
        if j == 18:
            y += mouth_open
        if j == 19:
            y += 0.6 * mouth_open
        x += rng.gauss(0.0, 1.2)
        y += rng.gauss(0.0, 1.2)
        pts.append((cx + (x - cx) * scale + tx, 150.0 + (y - 150.0) * scale + ty))
    return pts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "faces"))
    ap.add_argument("--count", type=int, default=48)
    ap.add_argument("--seed", type=int, default=20140101)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    for i in range(args.count):
        pts = make_shape(rng)
        lines = ["version: 1", f"n_points: {len(pts)}", "{"]
        lines += [f"{x:.3f} {y:.3f}" for x, y in pts]
        lines.append("}")
        (out / f"face_{i:03d}.pts").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

"""Line-oriented text format for two-layer networks.

Records, one per line, `#` starting a comment:

    NX <count>        X-layer node count (required before any X/H lines)
    NY <count>        Y-layer node count (required before any Y/H lines)
    X <u> <v>         X-layer edge
    Y <u> <v>         Y-layer edge
    H <x> <y>         heterogeneous edge
    TX <node> <community>   optional X-layer ground truth
    TY <node> <community>   optional Y-layer ground truth

Indices are zero-based decimal. Truth lines, when present, must cover every
node of their layer. The writer emits a canonically ordered file; planted
bicliques are recorded as `# biclique` comment lines.
"""

from __future__ import annotations

import numpy as np

from .biclique import Biclique
from .graph import HMRNet, build_hetero, build_layer


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _dense_truth(raw: dict[int, int], n: int, tag: str) -> np.ndarray:
    missing = [i for i in range(n) if i not in raw]
    if missing:
        raise ValueError(
            f"{tag} truth lines incomplete: node {missing[0]} has no label"
        )
    ids: dict[int, int] = {}
    out = np.empty(n, dtype=int)
    for i in range(n):
        out[i] = ids.setdefault(raw[i], len(ids))
    return out


def parse_network(lines) -> tuple[HMRNet, np.ndarray | None, np.ndarray | None]:
    nx = ny = None
    edges_x: list[tuple[int, int]] = []
    edges_y: list[tuple[int, int]] = []
    edges_h: list[tuple[int, int]] = []
    truth_x: dict[int, int] = {}
    truth_y: dict[int, int] = {}

    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag, args = parts[0], parts[1:]
        try:
            vals = [int(a) for a in args]
        except ValueError:
            raise ParseError(line_no, f"non-integer field in {line!r}") from None
        if tag == "NX":
            if nx is not None:
                raise ParseError(line_no, "duplicate NX declaration")
            if len(vals) != 1:
                raise ParseError(line_no, "NX takes one count")
            nx = vals[0]
        elif tag == "NY":
            if ny is not None:
                raise ParseError(line_no, "duplicate NY declaration")
            if len(vals) != 1:
                raise ParseError(line_no, "NY takes one count")
            ny = vals[0]
        elif tag in ("X", "Y", "H", "TX", "TY"):
            if len(vals) != 2:
                raise ParseError(line_no, f"{tag} takes two fields")
            needs = {"X": "NX", "Y": "NY", "H": "NX", "TX": "NX", "TY": "NY"}[tag]
            if (nx if needs == "NX" else ny) is None or (tag == "H" and ny is None):
                raise ParseError(line_no, f"{tag} line before its layer's count")
            if tag == "X":
                edges_x.append((vals[0], vals[1]))
            elif tag == "Y":
                edges_y.append((vals[0], vals[1]))
            elif tag == "H":
                edges_h.append((vals[0], vals[1]))
            elif tag == "TX":
                truth_x[vals[0]] = vals[1]
            else:
                truth_y[vals[0]] = vals[1]
        else:
            raise ParseError(line_no, f"unknown record tag {tag!r}")

    if nx is None or ny is None:
        raise ParseError(0, "missing NX or NY declaration")
    try:
        net = HMRNet(
            build_layer(nx, edges_x), build_layer(ny, edges_y), build_hetero(edges_h)
        )
    except ValueError as exc:
        raise ParseError(0, str(exc)) from exc
    tx = _dense_truth(truth_x, nx, "TX") if truth_x else None
    ty = _dense_truth(truth_y, ny, "TY") if truth_y else None
    return net, tx, ty


def parse_network_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh)


def format_network(
    net: HMRNet,
    truth_x=None,
    truth_y=None,
    bicliques: list[Biclique] | None = None,
) -> str:
    out = [f"NX {net.layer_x.node_count}", f"NY {net.layer_y.node_count}"]
    out += [f"X {u} {v}" for u, v in net.layer_x.edges]
    out += [f"Y {u} {v}" for u, v in net.layer_y.edges]
    out += [f"H {x} {y}" for x, y in net.hetero.edges]
    if truth_x is not None:
        out += [f"TX {i} {int(c)}" for i, c in enumerate(truth_x)]
    if truth_y is not None:
        out += [f"TY {i} {int(c)}" for i, c in enumerate(truth_y)]
    for bc in bicliques or []:
        xs = ",".join(map(str, bc.x_members))
        ys = ",".join(map(str, bc.y_members))
        out.append(f"# biclique x={xs} y={ys}")
    return "\n".join(out) + "\n"


def write_network_file(path, net, truth_x=None, truth_y=None, bicliques=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_network(net, truth_x, truth_y, bicliques))

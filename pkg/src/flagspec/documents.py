"""Result documents: lossless JSON and plain-text tables.

Rationals and anything that can outgrow a machine integer (multiplicities,
dimensions, indices, ``2^m``) are written as decimal strings.  Keys are sorted
and the layout is fixed, so the same document always serialises to the same
bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .flag_variety import PiScalar
from .spectral import Spectrum

SCHEMA_VERSION = "1"


def rational_str(x) -> str:
    return str(Fraction(x))


def parse_rational(text) -> Fraction:
    return Fraction(str(text).strip())


def value_json(x: PiScalar) -> dict:
    return {"rational": rational_str(x.value), "pi_power": x.pi_power}


def value_from_json(d: dict) -> PiScalar:
    return PiScalar(parse_rational(d["rational"]), int(d["pi_power"]))


def spectrum_json(s: Spectrum) -> dict:
    return {
        "entries": [
            {"value": value_json(PiScalar(v, s.pi_power)), "multiplicity": str(k)}
            for v, k in s.entries
        ],
        "imaginary": s.imaginary,
        "max": value_json(s.max_eigenvalue),
        "min": value_json(s.min_eigenvalue),
        "total": str(s.total),
        "truncated": s.truncated,
    }


def spectrum_from_json(d: dict) -> Spectrum:
    lo = value_from_json(d["min"])
    hi = value_from_json(d["max"])
    return Spectrum(
        entries=tuple((value_from_json(e["value"]).value, int(e["multiplicity"]))
                      for e in d["entries"]),
        total=int(d["total"]),
        minimum=lo.value,
        maximum=hi.value,
        pi_power=lo.pi_power,
        imaginary=bool(d["imaginary"]),
        truncated=bool(d["truncated"]),
    )


def make_document(command: str, job: dict, result: dict) -> dict:
    return {
        "artifact_version": __version__,
        "command": command,
        "job": job,
        "result": result,
        "schema_version": SCHEMA_VERSION,
    }


def emit(doc: dict, fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt != "table":
        raise ValueError(f"unknown output format {fmt!r}")
    return _render_table(doc)


def parse_document(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {doc.get('schema_version')!r}")
    return doc


# plain-text rendering

def _fmt_value(d: dict, imaginary: bool = False) -> str:
    s = str(value_from_json(d))
    if imaginary:
        s = "0" if s == "0" else f"{s}i"
    return s


def _spectrum_lines(spec: dict) -> list:
    imag = spec["imaginary"]
    lines = [f"total multiplicity: {spec['total']}"]
    if spec["truncated"]:
        lines.append("spectrum truncated (too many distinct values); summary only")
        lines.append(f"  min: {_fmt_value(spec['min'], imag)}")
        lines.append(f"  max: {_fmt_value(spec['max'], imag)}")
        return lines
    rows = [(_fmt_value(e["value"], imag), e["multiplicity"]) for e in spec["entries"]]
    width = max(len("eigenvalue"), *(len(r[0]) for r in rows))
    lines.append(f"  {'eigenvalue'.ljust(width)}  multiplicity")
    lines.extend(f"  {v.ljust(width)}  {k}" for v, k in rows)
    return lines


def _render_table(doc: dict) -> str:
    job = doc["job"]
    res = doc["result"]
    cmd = doc["command"]
    head = f"{job['type']}{job['rank']} / painted {{{','.join(map(str, job['nodes']))}}}"
    lines = [f"{cmd}: {head}"]
    if cmd == "describe":
        lines.append(f"complex dimension m: {res['dim_c']}")
        lines.append(f"delta_P: {res['delta_p']}")
        lines.append(f"Fano index: {res['fano_index']}")
        lines.append(f"Spin^c parity (w2): {res['spinc_parity']}")
        lines.append("radical roots (simple-root coords) and <varpi_a, beta^vee>:")
        for r in res["radical_roots"]:
            pairs = ", ".join(f"a{k}: {v}" for k, v in sorted(r["pairings"].items(),
                                                             key=lambda kv: int(kv[0])))
            lines.append(f"  {r['root']}  {pairs}")
    elif cmd == "spinc-check":
        lines.append(f"line bundle: {res['line_bundle']}")
        lines.append(f"parity required: {res['parity']}")
        lines.append(f"Spin^c: {'yes' if res['spinc'] else 'no'}")
        if res["twist_weight"] is not None:
            lines.append(f"twist weight phi(E): {res['twist_weight']}")
    elif cmd in ("spectrum", "theta-spectrum"):
        if "scalar_curvature" in res:
            lines.append(f"scalar curvature: {_fmt_value(res['scalar_curvature'])}")
        lines.extend(_spectrum_lines(res["spectrum"]))
    elif cmd == "min":
        lines.append(f"smallest Weitzenböck eigenvalue: {_fmt_value(res['min'])}")
    elif cmd == "bound":
        tag = " (vacuous)" if res["vacuous"] else ""
        lines.append(f"lambda^2 >= {_fmt_value(res['bound'])}{tag}")
    elif cmd == "harmonic":
        lines.append(f"twist weight phi(E): {res['twist_weight']}")
        if res["outcome"] == "none":
            lines.append("no harmonic spinors (phi(E) is singular); index 0")
        else:
            lines.append(f"harmonic spinors: kernel dimension {res['kernel_dimension']}"
                         f" in degree {res['degree']}")
            lines.append(f"Weyl word: {res['weyl_word']}  dominant weight: "
                         f"{res['dominant_weight']}")
            lines.append(f"index: {res['index']}")
    elif cmd == "scan":
        lines.append(f"m = {res['dim_c']}, Fano index p = {res['fano_index']}, "
                     f"scalar curvature {_fmt_value(res['scalar_target'])}")
        header = ("q", "L", "Spin^c", "bound", "harmonic", "index")
        rows = [header]
        for r in res["rows"]:
            rows.append((str(r["q"]), str(r["line_bundle"]), "yes" if r["spinc"] else "no",
                         _fmt_value(r["bound"]), r["harmonic"], r["index"]))
        widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
        for row in rows:
            lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"

"""JSON file formats, canonical serialization, text rendering and DOT output.

Three file kinds share one layout idiom:

* algebra (``.alg``): ``elements``, ``covers`` and optional ``neg``
* triple (``.trp``): ``M``, ``D`` (algebra objects) and ``phi``
* pair set (``.prs``): ``M``, ``D`` and ``pairs``, each pair two partitions
  written as lists of blocks of element names
"""

import json
from importlib import resources
from pathlib import Path

from .congruence import Congruence, is_congruence
from .errors import InputError, ParseError
from .lattice import from_covers
from .ms import MSAlgebra, make_ms, substructures

__all__ = [
    "parse_algebra",
    "parse_triple",
    "parse_pairset",
    "serialize_algebra",
    "serialize_triple",
    "serialize_pairset",
    "load_algebra",
    "load_triple",
    "load_pairset",
    "bundled",
    "resolve",
    "format_congruence",
    "partition_names",
    "emit_dot",
]

ALGEBRA_KEYS = {"elements", "covers", "neg"}
TRIPLE_KEYS = {"M", "D", "phi"}
PAIRSET_KEYS = {"M", "D", "pairs"}


def _load_json(text, source):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _expect_keys(obj, required, allowed, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected a JSON object")
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise ParseError(f"{where}: unknown key(s) {unknown}")
    missing = sorted(required - set(obj))
    if missing:
        raise ParseError(f"{where}: missing key(s) {missing}")


def _expect_name_map(obj, where):
    if not isinstance(obj, dict) or not all(isinstance(v, str) for v in obj.values()):
        raise ParseError(f"{where}: expected an object mapping names to names")
    return obj


def algebra_from_obj(obj, where="algebra", require_neg=None):
    _expect_keys(obj, {"elements", "covers"}, ALGEBRA_KEYS, where)
    elements, covers = obj["elements"], obj["covers"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ParseError(f"{where}.elements: expected an array of strings")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c) for c in covers
    ):
        raise ParseError(f"{where}.covers: expected an array of [lower, upper] name pairs")
    if require_neg is True and "neg" not in obj:
        raise ParseError(f"{where}: missing key 'neg'")
    if require_neg is False and "neg" in obj:
        raise ParseError(f"{where}: a plain lattice must not carry 'neg'")
    lattice = from_covers(elements, covers)
    if "neg" not in obj:
        return lattice
    return make_ms(lattice, _expect_name_map(obj["neg"], f"{where}.neg"))


def parse_algebra(text, source="<string>"):
    return algebra_from_obj(_load_json(text, source), source)


def parse_triple(text, source="<string>"):
    from .triple import validate_triple

    obj = _load_json(text, source)
    _expect_keys(obj, TRIPLE_KEYS, TRIPLE_KEYS, source)
    M = algebra_from_obj(obj["M"], f"{source}.M", require_neg=True)
    D = algebra_from_obj(obj["D"], f"{source}.D", require_neg=False)
    return validate_triple(M, D, _expect_name_map(obj["phi"], f"{source}.phi"))


def _partition(A, blocks, where):
    if not isinstance(blocks, list) or not all(
        isinstance(b, list) and all(isinstance(x, str) for x in b) for b in blocks
    ):
        raise ParseError(f"{where}: expected an array of arrays of names")
    try:
        theta = Congruence.from_blocks(A.n, [[A.index(x) for x in b] for b in blocks])
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None
    if not is_congruence(A, theta):
        raise InputError(f"{where}: partition is not a congruence")
    return theta


def parse_pairset(text, source="<string>"):
    from .extension import PairSublattice

    obj = _load_json(text, source)
    _expect_keys(obj, PAIRSET_KEYS, PAIRSET_KEYS, source)
    M = algebra_from_obj(obj["M"], f"{source}.M", require_neg=True)
    D = algebra_from_obj(obj["D"], f"{source}.D", require_neg=False)
    if not isinstance(obj["pairs"], list):
        raise ParseError(f"{source}.pairs: expected an array")
    pairs = []
    for k, item in enumerate(obj["pairs"]):
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"{source}.pairs[{k}]: expected [partition of M, partition of D]")
        pairs.append(
            (
                _partition(M, item[0], f"{source}.pairs[{k}][0]"),
                _partition(D, item[1], f"{source}.pairs[{k}][1]"),
            )
        )
    return PairSublattice(M, D, pairs)


def _compact(value):
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def _algebra_lines(A, indent):
    pad = " " * indent
    lat = A.lattice
    fields = [
        ("elements", list(lat.names)),
        ("covers", [list(c) for c in lat.cover_names()]),
    ]
    if isinstance(A, MSAlgebra):
        fields.append(("neg", {A.names[i]: A.names[v] for i, v in enumerate(A.neg)}))
    body = [f'{pad}  "{k}": {_compact(v)}' for k, v in fields]
    return ["{", ",\n".join(body), pad + "}"]


def _render_algebra(A, indent=0):
    head, body, tail = _algebra_lines(A, indent)
    return f"{head}\n{body}\n{tail}"


def serialize_algebra(A):
    return _render_algebra(A) + "\n"


def serialize_triple(t):
    phi = {t.M.names[i]: t.D.names[v] for i, v in enumerate(t.phi)}
    return (
        "{\n"
        f'  "M": {_render_algebra(t.M, 2)},\n'
        f'  "D": {_render_algebra(t.D, 2)},\n'
        f'  "phi": {_compact(phi)}\n'
        "}\n"
    )


def partition_names(A, theta):
    return [[A.names[x] for x in block] for block in theta.blocks()]


def serialize_pairset(P):
    rows = [
        "    " + _compact([partition_names(P.M, t1), partition_names(P.D, t2)])
        for t1, t2 in P.sorted_pairs()
    ]
    pairs = "[\n" + ",\n".join(rows) + "\n  ]" if rows else "[]"
    return (
        "{\n"
        f'  "M": {_render_algebra(P.M, 2)},\n'
        f'  "D": {_render_algebra(P.D, 2)},\n'
        f'  "pairs": {pairs}\n'
        "}\n"
    )


def bundled(name):
    """Path of a golden file shipped with the package (``m1.alg``, ``l2_triple.trp``, ...)."""
    return Path(str(resources.files("msalg") / "data" / name))


def resolve(path):
    """``path`` itself if it exists, else the bundled golden file of that name."""
    p = Path(path)
    if p.exists():
        return p
    b = bundled(p.name)
    if b.exists():
        return b
    raise InputError(f"no such file: {path}")


def _read(path):
    p = resolve(path)
    try:
        return p.read_text(encoding="utf-8"), str(p)
    except UnicodeDecodeError as exc:
        raise ParseError(f"{p}: not UTF-8 ({exc})") from None


def load_algebra(path):
    text, src = _read(path)
    return parse_algebra(text, src)


def load_triple(path):
    text, src = _read(path)
    return parse_triple(text, src)


def load_pairset(path):
    text, src = _read(path)
    return parse_pairset(text, src)


def format_congruence(A, theta, full=False):
    """Blocks as ``{{x,y},{z,w}}``, names sorted; singletons only when ``full``."""
    blocks = theta.blocks() if full else theta.nontrivial_blocks()
    named = sorted(sorted(A.names[x] for x in b) for b in blocks)
    return "{" + ",".join("{" + ",".join(b) + "}" for b in named) + "}"


def _q(name):
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(A, marks=None, name="L"):
    """Hasse diagram as a DOT digraph, bottom to top.

    Complemented elements are filled, closed-but-not-complemented ones get a
    double border, and each nontrivial block of ``marks`` becomes a cluster.
    """
    filled, doubled = set(), set()
    if isinstance(A, MSAlgebra):
        s = substructures(A)
        filled = set(s.boolean_center)
        doubled = set(s.closed) - filled
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=ellipse];"]

    def node(i, pad="  "):
        attrs = []
        if i in filled:
            attrs.append("style=filled")
            attrs.append('fillcolor="gray80"')
        elif i in doubled:
            attrs.append("peripheries=2")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        return f"{pad}{_q(A.names[i])}{suffix};"

    clustered = set()
    if marks is not None:
        for k, block in enumerate(marks.nontrivial_blocks()):
            lines.append(f"  subgraph cluster_{k} {{")
            lines.append("    style=dashed;")
            for i in block:
                lines.append(node(i, "    "))
                clustered.add(i)
            lines.append("  }")
    for i in range(A.n):
        if i not in clustered:
            lines.append(node(i))
    for lo, hi in A.lattice.covers:
        lines.append(f"  {_q(A.names[lo])} -> {_q(A.names[hi])};")
    lines.append("}")
    return "\n".join(lines) + "\n"

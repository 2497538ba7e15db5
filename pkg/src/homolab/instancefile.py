"""Plain-text instance files: a ring and a few named graded modules.

Grammar (line oriented, ``#`` starts a comment)::

    field 7
    ring x y
    ideal x*y
    module M
      gens e0:0, e1:1
      rels x*e0, y*e0 - x*e1

``ideal`` is optional and may repeat. Module bodies are indented; ``rels``
may repeat or be absent. Errors carry 1-based line and column numbers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .modules import GradedModule, ModuleError
from .polynomials import ParseError, PolyRing, parse_polynomial, parse_vector, v_degree
from .rings import QuotientRing

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


@dataclass
class Instance:
    """A ring with named modules over it."""
    name: str
    ring: QuotientRing
    modules: dict
    provenance: str = "user"
    focus: tuple = ()
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        for M in self.modules.values():
            if M.ring is not self.ring:
                raise ModuleError(f"module {M.name!r} is not over the instance ring")
        if not self.focus:
            self.focus = tuple(self.modules)

    def module(self, name: str) -> GradedModule:
        try:
            return self.modules[name]
        except KeyError:
            raise KeyError(f"instance {self.name!r} has no module {name!r}") from None

    def same_as(self, other: "Instance") -> bool:
        """Equality of ring data and module presentations (names included)."""
        if not self.ring.same_as(other.ring) or list(self.modules) != list(other.modules):
            return False
        for k, M in self.modules.items():
            N = other.modules[k]
            if M.gen_degrees != N.gen_degrees or M.relations != N.relations:
                return False
        return True

    def to_text(self) -> str:
        return serialize_instance(self)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _split_top(text: str, col0: int):
    """Split on commas outside parentheses, yielding (piece, column offset)."""
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[start:i], col0 + start
            start = i + 1
    yield text[start:], col0 + start


def _strip(piece: str, col: int):
    lead = len(piece) - len(piece.lstrip())
    return piece.strip(), col + lead


def parse_instance(text: str, name: str = "instance", provenance: str = "user") -> Instance:
    p = None
    names = None
    ideal_src: list = []
    modules: list = []           # [name, line, gens, rels]
    current = None
    first_stmt = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indented = line[0].isspace()
        body, col = _strip(line, 0)
        word, _, rest = body.partition(" ")
        rest_col = col + len(word) + 1
        if first_stmt is None:
            first_stmt = ln
            if word != "field":
                raise ParseError("the first statement must be 'field <p>'", ln, col + 1)
        if indented:
            if current is None:
                raise ParseError("indented line outside a module block", ln, col + 1)
            if word == "gens":
                if current[2] is not None:
                    raise ParseError("duplicate 'gens' line", ln, col + 1)
                current[2] = (rest, ln, rest_col)
            elif word == "rels":
                current[3].append((rest, ln, rest_col))
            else:
                raise ParseError(f"expected 'gens' or 'rels', found {word!r}", ln, col + 1)
            continue
        current = None
        if word == "field":
            if p is not None:
                raise ParseError("duplicate 'field' line", ln, col + 1)
            tok, tcol = _strip(rest, rest_col)
            if not tok.isdigit():
                raise ParseError("field characteristic must be a positive integer", ln, tcol + 1)
            p = int(tok)
            if not _is_prime(p):
                raise ParseError(f"characteristic {p} is not prime", ln, tcol + 1)
        elif word == "ring":
            if names is not None:
                raise ParseError("duplicate 'ring' line", ln, col + 1)
            names = rest.split()
            if not names:
                raise ParseError("ring needs at least one variable", ln, rest_col + 1)
            for v in names:
                if not _NAME.match(v):
                    raise ParseError(f"bad variable name {v!r}", ln, rest_col + rest.find(v) + 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name", ln, rest_col + 1)
        elif word == "ideal":
            if names is None:
                raise ParseError("'ideal' before 'ring'", ln, col + 1)
            ideal_src.append((rest, ln, rest_col))
        elif word == "module":
            mname, mcol = _strip(rest, rest_col)
            if not _NAME.match(mname):
                raise ParseError(f"bad module name {mname!r}", ln, mcol + 1)
            if any(m[0] == mname for m in modules):
                raise ParseError(f"duplicate module {mname!r}", ln, mcol + 1)
            current = [mname, ln, None, []]
            modules.append(current)
        else:
            raise ParseError(f"unknown statement {word!r}", ln, col + 1)
    if first_stmt is None or p is None:
        raise ParseError("missing 'field' line", first_stmt or 1, 1)
    if names is None:
        raise ParseError("missing 'ring' line", 1, 1)
    cover = PolyRing(p, names)
    ideal = []
    for src, ln, c0 in ideal_src:
        for piece, pc in _split_top(src, c0):
            s, sc = _strip(piece, pc)
            f = parse_polynomial(s, cover, ln, sc)
            if f and len({sum(m) for m in f}) != 1:
                raise ParseError("inhomogeneous ideal generator", ln, sc + 1)
            if f:
                ideal.append(f)
    try:
        ring = QuotientRing(cover, ideal)
    except ValueError as e:
        ln = ideal_src[0][1] if ideal_src else 1
        raise ParseError(str(e), ln, 1) from None
    out = {}
    for mname, ln, gens, rels in modules:
        if gens is None:
            raise ParseError(f"module {mname!r} has no 'gens' line", ln, 1)
        gsrc, gln, gc0 = gens
        gnames = {}
        degs = []
        for piece, pc in (_split_top(gsrc, gc0) if gsrc.strip() else ()):
            s, sc = _strip(piece, pc)
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(-?\d+)", s)
            if not m:
                raise ParseError("expected '<name>:<degree>'", gln, sc + 1)
            g = m.group(1)
            if g in gnames or g in cover.names:
                raise ParseError(f"generator name {g!r} clashes", gln, sc + 1)
            gnames[g] = len(degs)
            degs.append(int(m.group(2)))
        vecs = []
        for rsrc, rln, rc0 in rels:
            for piece, pc in _split_top(rsrc, rc0):
                s, sc = _strip(piece, pc)
                v = parse_vector(s, cover, gnames, rln, sc)
                if v and v_degree(v, degs) is None:
                    raise ParseError("inhomogeneous relation", rln, sc + 1)
                vecs.append(v)
        out[mname] = GradedModule(ring, degs, vecs, name=mname)
    return Instance(name, ring, out, provenance)


def _format_vector(ring: QuotientRing, v: dict) -> str:
    cover = ring.cover
    comps: dict = {}
    for (i, m), c in v.items():
        comps.setdefault(i, {})[m] = c
    parts = []
    for i in sorted(comps):
        f = cover.format_raw(comps[i])
        g = f"e{i}"
        if f == "1":
            parts.append(g)
        elif f == "-1":
            parts.append(f"-{g}")
        elif " " in f:
            parts.append(f"({f})*{g}")
        else:
            parts.append(f"{f}*{g}")
    text = parts[0]
    for s in parts[1:]:
        text += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return text


def serialize_instance(inst: Instance) -> str:
    ring = inst.ring
    lines = [f"field {ring.p}", "ring " + " ".join(ring.names)]
    if ring.ideal_gens:
        lines.append("ideal " + ", ".join(ring.cover.format_raw(f) for f in ring.ideal_gens))
    for name, M in inst.modules.items():
        lines.append(f"module {name}")
        gens = ", ".join(f"e{i}:{d}" for i, d in enumerate(M.gen_degrees))
        lines.append(f"  gens {gens}" if gens else "  gens")
        if M.relations:
            lines.append("  rels " + ", ".join(_format_vector(ring, r) for r in M.relations))
    return "\n".join(lines) + "\n"


def load_instance(path) -> Instance:
    from pathlib import Path
    path = Path(path)
    return parse_instance(path.read_text(encoding="utf-8"), name=path.stem)

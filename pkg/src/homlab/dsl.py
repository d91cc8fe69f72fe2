"""Workbench description language: tokenizer, parser, canonical printer.

One statement per line, comments from `#` to the end of the line.
Declarations build complexes, vertex maps, diagram parts, filtrations and
named sequents; exactly one command statement picks what to run.  Cross
references resolve while parsing, so every error carries the line and
column it came from.

    complex S1 = {01, 12, 02}
    filtration F on S1 = skeletal
    cellular F

Vertex labels inside simplex literals and map entries are single
characters; `0` names the empty complex and cannot be redeclared.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .logic import (
    Add,
    And,
    App,
    Eq,
    Exists,
    Neg,
    Sequent,
    Top,
    Var,
    Zero,
)
from .simp import (
    EMPTY_NAME,
    Filtration,
    PairMorphism,
    SimpPair,
    SimplicialComplex,
    subcomplex_union,
)


class DslError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


_IDENT_RE = re.compile(r"[A-Za-z0-9_]+(?:\.[A-Za-z0-9_]+)*")
_TOKEN_RE = re.compile(
    r"""(?P<WS>[ \t]+)
      | (?P<COMMENT>\#.*)
      | (?P<ARROW>->)
      | (?P<TURNSTILE>\|-)
      | (?P<IDENT>[A-Za-z0-9_]+(?:\.[A-Za-z0-9_]+)*)
      | (?P<QUOTED>"[^"\n]*")
      | (?P<OP>[{}()\[\],:/=.&+\-@])
    """,
    re.VERBOSE,
)

_SORT_RE = re.compile(r"h(\d+)")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[List[Token]]:
    """Token rows, one per nonempty statement line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        pos = 0
        row: List[Token] = []
        while pos < len(raw):
            m = _TOKEN_RE.match(raw, pos)
            if m is None:
                raise DslError(lineno, pos + 1,
                               f"unexpected character {raw[pos]!r}")
            kind = m.lastgroup
            if kind not in ("WS", "COMMENT"):
                row.append(Token(kind, m.group(), lineno, pos + 1))
            pos = m.end()
        if row:
            rows.append(row)
    return rows


@dataclass
class WorkbenchSpec:
    """Everything a run needs, fully cross-checked at parse time.

    Declaration lists keep file order; the dicts are keyed by name.  The
    command is a tuple like ("cellular", "F") or ("validate",).
    """

    complexes: Dict[str, SimplicialComplex] = field(default_factory=dict)
    maps: Dict[str, Dict[str, str]] = field(default_factory=dict)
    pairs: List[Tuple[str, str]] = field(default_factory=list)
    edges: List[tuple] = field(default_factory=list)
    triples: List[tuple] = field(default_factory=list)
    squares: List[tuple] = field(default_factory=list)
    square_maps: List[tuple] = field(default_factory=list)
    prisms: List[Tuple[str, str]] = field(default_factory=list)
    cubes: List[tuple] = field(default_factory=list)
    filtrations: Dict[str, tuple] = field(default_factory=dict)
    sequents: Dict[str, Sequent] = field(default_factory=dict)
    command: Optional[tuple] = None


class _Parser:
    """Cursor over one statement's tokens."""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def peek(self) -> Optional[Token]:
        return None if self.at_end() else self.tokens[self.pos]

    def error(self, message: str, tok: Optional[Token] = None):
        if tok is None:
            last = self.tokens[-1]
            raise DslError(last.line, last.col + len(last.text), message)
        raise DslError(tok.line, tok.col, f"{message} at token {tok.text!r}")

    def next(self, message="unexpected end of statement") -> Token:
        if self.at_end():
            self.error(message)
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next(f"expected {text!r}")
        if tok.text != text:
            self.error(f"expected {text!r}", tok)
        return tok

    def ident(self, what="a name") -> Token:
        tok = self.next(f"expected {what}")
        if tok.kind != "IDENT":
            self.error(f"expected {what}", tok)
        return tok

    def done(self):
        if not self.at_end():
            self.error("trailing input", self.peek())


def parse(text: str) -> WorkbenchSpec:
    ws = WorkbenchSpec()
    rows = tokenize(text)
    # names already claimed: complexes on one side, diagram parts (edges,
    # triples, squares, square maps, cubes) share the other
    ns = {"complex": {EMPTY_NAME}, "diagram": set()}
    for row in rows:
        _parse_statement(_Parser(row), ws, ns)
    if ws.command is None:
        last = rows[-1][-1].line if rows else 1
        raise DslError(last, 1, "no command statement")
    return ws


def _claim_complex(ns, tok):
    if tok.text in ns["complex"]:
        if tok.text == EMPTY_NAME:
            msg = "0 names the empty complex and cannot be redeclared"
        else:
            msg = f"name {tok.text!r} already declared"
        raise DslError(tok.line, tok.col, msg)
    ns["complex"].add(tok.text)


def _claim_diagram(ns, tok):
    if tok.text in ns["diagram"]:
        raise DslError(tok.line, tok.col,
                       f"name {tok.text!r} already declared")
    ns["diagram"].add(tok.text)


def _cx(ws, name: str) -> SimplicialComplex:
    if name == EMPTY_NAME:
        return SimplicialComplex.empty()
    return ws.complexes[name]


def _get_complex(ws, tok) -> SimplicialComplex:
    if tok.text == EMPTY_NAME:
        return SimplicialComplex.empty()
    if tok.text not in ws.complexes:
        raise DslError(tok.line, tok.col, f"unknown complex {tok.text!r}")
    return ws.complexes[tok.text]


def _get_map(ws, tok) -> Dict[str, str]:
    if tok.text not in ws.maps:
        raise DslError(tok.line, tok.col, f"unknown map {tok.text!r}")
    return ws.maps[tok.text]


def _pair_ref(p: _Parser, ws) -> Tuple[str, str]:
    """total or total / sub, both resolved; the pair itself is validated."""
    total = p.ident("a complex name")
    _get_complex(ws, total)
    sub = Token("IDENT", EMPTY_NAME, total.line, total.col)
    if not p.at_end() and p.peek().text == "/":
        p.expect("/")
        sub = p.ident("a complex name")
        _get_complex(ws, sub)
    try:
        SimpPair(_get_complex(ws, total), _get_complex(ws, sub))
    except ValueError as exc:
        raise DslError(sub.line, sub.col, str(exc))
    return total.text, sub.text


def _vertex(p: _Parser) -> Token:
    tok = p.next("expected a vertex")
    if tok.kind != "IDENT" or len(tok.text) != 1:
        p.error("vertex labels are single characters", tok)
    return tok


def _parse_statement(p: _Parser, ws: WorkbenchSpec, ns):
    head = p.ident("a statement keyword")
    word = head.text

    if word == "complex":
        name = p.ident("a complex name")
        _claim_complex(ns, name)
        p.expect("=")
        p.expect("{")
        simplices = []
        while True:
            tok = p.next("expected a simplex literal or '}'")
            if tok.text == "}" and not simplices:
                break
            if tok.kind != "IDENT" or "." in tok.text:
                p.error("expected a simplex literal", tok)
            labels = tuple(tok.text)
            if len(set(labels)) != len(labels):
                p.error("repeated vertex in simplex literal", tok)
            simplices.append(labels)
            tok = p.next("expected ',' or '}'")
            if tok.text == "}":
                break
            if tok.text != ",":
                p.error("expected ',' or '}'", tok)
        p.done()
        ws.complexes[name.text] = \
            SimplicialComplex.from_maximal_simplices(simplices)
        return

    if word == "map":
        name = p.ident("a map name")
        if name.text in ws.maps:
            p.error("map name already declared", name)
        p.expect("=")
        p.expect("{")
        vmap: Dict[str, str] = {}
        while True:
            tok = p.next("expected a vertex or '}'")
            if tok.text == "}" and not vmap:
                break
            if tok.kind != "IDENT" or len(tok.text) != 1:
                p.error("vertex labels are single characters", tok)
            if tok.text in vmap:
                p.error("vertex mapped twice", tok)
            p.expect(":")
            img = _vertex(p)
            vmap[tok.text] = img.text
            tok = p.next("expected ',' or '}'")
            if tok.text == "}":
                break
            if tok.text != ",":
                p.error("expected ',' or '}'", tok)
        p.done()
        ws.maps[name.text] = vmap
        return

    if word == "pair":
        ws.pairs.append(_pair_ref(p, ws))
        p.done()
        return

    if word == "prism":
        ws.prisms.append(_pair_ref(p, ws))
        p.done()
        return

    if word == "edge":
        name = p.ident("an edge name")
        _claim_diagram(ns, name)
        p.expect(":")
        src = _pair_ref(p, ws)
        p.expect("->")
        tgt = _pair_ref(p, ws)
        p.expect("by")
        mtok = p.ident("a map name")
        vmap = _get_map(ws, mtok)
        p.done()
        try:
            PairMorphism(name.text,
                         SimpPair(_cx(ws, src[0]), _cx(ws, src[1])),
                         SimpPair(_cx(ws, tgt[0]), _cx(ws, tgt[1])),
                         vmap)
        except ValueError as exc:
            raise DslError(mtok.line, mtok.col, str(exc))
        ws.edges.append((name.text, src, tgt, mtok.text))
        return

    if word == "triple":
        name = p.ident("a triple name")
        _claim_diagram(ns, name)
        p.expect(":")
        x = p.ident("a complex name")
        p.expect("/")
        y = p.ident("a complex name")
        z = Token("IDENT", EMPTY_NAME, y.line, y.col)
        if not p.at_end():
            p.expect("/")
            z = p.ident("a complex name")
        p.done()
        xc = _get_complex(ws, x)
        yc = _get_complex(ws, y)
        zc = _get_complex(ws, z)
        if not (zc.is_subcomplex_of(yc) and yc.is_subcomplex_of(xc)):
            raise DslError(name.line, name.col,
                           f"triple {name.text!r} is not a chain of "
                           "subcomplexes")
        ws.triples.append((name.text, x.text, y.text, z.text))
        return

    if word == "square":
        name = p.ident("a square name")
        _claim_diagram(ns, name)
        p.expect(":")
        u = p.ident("a complex name")
        p.expect("+")
        v = p.ident("a complex name")
        p.expect("in")
        x = p.ident("a complex name")
        p.done()
        try:
            subcomplex_union(_get_complex(ws, u), _get_complex(ws, v),
                             ambient=_get_complex(ws, x))
        except ValueError as exc:
            raise DslError(name.line, name.col, str(exc))
        ws.squares.append((name.text, x.text, u.text, v.text))
        return

    if word == "squaremap":
        name = p.ident("a square map name")
        _claim_diagram(ns, name)
        p.expect(":")
        src = p.ident("a square name")
        p.expect("->")
        tgt = p.ident("a square name")
        p.expect("by")
        mtok = p.ident("a map name")
        p.done()
        known = {q[0] for q in ws.squares}
        for t in (src, tgt):
            if t.text not in known:
                raise DslError(t.line, t.col, f"unknown square {t.text!r}")
        _get_map(ws, mtok)
        ws.square_maps.append((name.text, src.text, tgt.text, mtok.text))
        return

    if word == "cube":
        name = p.ident("a cube name")
        _claim_diagram(ns, name)
        p.expect(":")
        src = p.ident("a triple name")
        p.expect("->")
        tgt = p.ident("a triple name")
        p.expect("by")
        mtok = p.ident("a map name")
        p.done()
        known = {t[0] for t in ws.triples}
        for t in (src, tgt):
            if t.text not in known:
                raise DslError(t.line, t.col, f"unknown triple {t.text!r}")
        _get_map(ws, mtok)
        ws.cubes.append((name.text, src.text, tgt.text, mtok.text))
        return

    if word == "filtration":
        name = p.ident("a filtration name")
        if name.text in ws.filtrations:
            p.error("filtration name already declared", name)
        p.expect("on")
        base = p.ident("a complex name")
        basec = _get_complex(ws, base)
        p.expect("=")
        tok = p.next("expected 'skeletal' or '['")
        if tok.text == "skeletal":
            p.done()
            ws.filtrations[name.text] = (base.text, "skeletal")
            return
        if tok.text != "[":
            p.error("expected 'skeletal' or '['", tok)
        steps = []
        while True:
            t = p.ident("a complex name")
            steps.append(t)
            t2 = p.next("expected ',' or ']'")
            if t2.text == "]":
                break
            if t2.text != ",":
                p.error("expected ',' or ']'", t2)
        p.done()
        try:
            Filtration(basec, [_get_complex(ws, t) for t in steps])
        except ValueError as exc:
            raise DslError(name.line, name.col, str(exc))
        ws.filtrations[name.text] = (base.text, tuple(t.text for t in steps))
        return

    if word == "sequent" and p.pos + 1 < len(p.tokens) \
            and p.tokens[p.pos + 1].text == "=":
        name = p.ident("a sequent name")
        if name.text in ws.sequents:
            p.error("sequent name already declared", name)
        p.expect("=")
        seq = _parse_sequent_body(p, ws)
        p.done()
        ws.sequents[name.text] = seq
        return

    # what is left must be a command statement
    if word in ("validate", "cellular", "spectral", "sequent", "end"):
        if ws.command is not None:
            p.error("a command was already given", head)
    if word == "validate":
        p.done()
        ws.command = ("validate",)
        return
    if word in ("cellular", "spectral"):
        f = p.ident("a filtration name")
        if f.text not in ws.filtrations:
            raise DslError(f.line, f.col, f"unknown filtration {f.text!r}")
        p.done()
        ws.command = (word, f.text)
        return
    if word == "sequent":
        p.done()
        if not ws.sequents:
            p.error("no sequents declared", head)
        ws.command = ("sequent",)
        return
    if word == "end":
        p.expect("-")
        tok = p.ident("'algebra'")
        if tok.text != "algebra":
            p.error("expected 'algebra'", tok)
        p.done()
        ws.command = ("end-algebra",)
        return

    p.error("unknown statement", head)


# -- sequents -----------------------------------------------------------------


def _known_totals(ws) -> set:
    """Complex names a sort may mention, including the ones the diagram
    will synthesize for squares and prisms."""
    known = set(ws.complexes) | {EMPTY_NAME}
    for name, _x, _u, _v in ws.squares:
        known.add(f"{name}.b")
        known.add(f"{name}.d")
    for total, sub in ws.prisms:
        known.add(f"{total}xI")
        if sub != EMPTY_NAME:
            known.add(f"{sub}xI")
    return known


def _parse_sort(p: _Parser, ws) -> str:
    tok = p.ident("a sort like h1(X,Y)")
    m = _SORT_RE.fullmatch(tok.text)
    if m is None:
        p.error("expected a sort like h1(X,Y)", tok)
    degree = int(m.group(1))
    known = _known_totals(ws)
    p.expect("(")
    total = p.ident("a complex name")
    if total.text not in known:
        p.error("unknown complex", total)
    sub = EMPTY_NAME
    nxt = p.next("expected ',' or ')'")
    if nxt.text == ",":
        t = p.ident("a complex name")
        if t.text not in known:
            p.error("unknown complex", t)
        sub = t.text
        p.expect(")")
    elif nxt.text != ")":
        p.error("expected ',' or ')'", nxt)
    if sub == EMPTY_NAME:
        return f"h{degree}({total.text})"
    return f"h{degree}({total.text},{sub})"


def _parse_sequent_body(p: _Parser, ws) -> Sequent:
    p.expect("[")
    context = []
    bound = set()
    if p.peek() is not None and p.peek().text == "]":
        p.next()
    else:
        while True:
            var = p.ident("a variable name")
            if var.text == "0":
                p.error("0 is not a variable name", var)
            if var.text in bound:
                p.error("duplicate context variable", var)
            p.expect(":")
            sort = _parse_sort(p, ws)
            context.append((var.text, sort))
            bound.add(var.text)
            tok = p.next("expected ',' or ']'")
            if tok.text == "]":
                break
            if tok.text != ",":
                p.error("expected ',' or ']'", tok)
    ante = _parse_formula(p, ws, set(bound))
    p.expect("|-")
    cons = _parse_formula(p, ws, set(bound))
    return Sequent(tuple(context), ante, cons)


def _parse_formula(p: _Parser, ws, bound: set):
    left = _parse_atom(p, ws, bound)
    while not p.at_end() and p.peek().text == "&":
        p.next()
        left = And(left, _parse_atom(p, ws, bound))
    return left


def _parse_atom(p: _Parser, ws, bound: set):
    tok = p.peek()
    if tok is None:
        p.error("expected a formula")
    if tok.text == "top":
        p.next()
        return Top()
    if tok.text == "exists":
        p.next()
        var = p.ident("a variable name")
        if var.text == "0":
            p.error("0 is not a variable name", var)
        if var.text in bound:
            p.error("variable shadows an outer binding", var)
        p.expect(":")
        sort = _parse_sort(p, ws)
        p.expect(".")
        body = _parse_formula(p, ws, bound | {var.text})
        return Exists(var.text, sort, body)
    if tok.text == "(":
        p.next()
        inner = _parse_formula(p, ws, bound)
        p.expect(")")
        return inner
    lhs = _parse_term(p, ws, bound)
    p.expect("=")
    rhs = _parse_term(p, ws, bound)
    return Eq(lhs, rhs)


def _parse_term(p: _Parser, ws, bound: set):
    left = _parse_factor(p, ws, bound)
    while not p.at_end() and p.peek().text == "+":
        p.next()
        left = Add(left, _parse_factor(p, ws, bound))
    return left


def _parse_factor(p: _Parser, ws, bound: set):
    tok = p.next("expected a term")
    if tok.text == "-" and tok.kind == "OP":
        return Neg(_parse_factor(p, ws, bound))
    if tok.text == "(":
        inner = _parse_term(p, ws, bound)
        p.expect(")")
        return inner
    if tok.kind == "QUOTED" or (tok.kind == "IDENT"
                                and not p.at_end()
                                and p.peek().text == "@"):
        name = tok.text[1:-1] if tok.kind == "QUOTED" else tok.text
        p.expect("@")
        deg = p.ident("a degree")
        if not deg.text.isdigit():
            p.error("expected a degree", deg)
        p.expect("(")
        arg = _parse_term(p, ws, bound)
        p.expect(")")
        return App(f"{name}@{int(deg.text)}", arg)
    if tok.kind != "IDENT":
        p.error("expected a term", tok)
    if tok.text == "0":
        # sort filled in against the signature by resolve_zeros
        return Zero(None)
    if tok.text not in bound:
        p.error("unbound variable", tok)
    return Var(tok.text)


def resolve_zeros(seq: Sequent, sig) -> Sequent:
    """Give every bare zero literal the sort its equation forces.

    The parser leaves Zero(None) since sorts of applied symbols are only
    known once the signature exists.  Raises ValueError when an equation
    has zeros on both sides and no symbol to pin them down.
    """
    def sort_of(t, env):
        if isinstance(t, Var):
            return env.get(t.name)
        if isinstance(t, Zero):
            return t.sort
        if isinstance(t, Neg):
            return sort_of(t.arg, env)
        if isinstance(t, Add):
            return sort_of(t.left, env) or sort_of(t.right, env)
        if isinstance(t, App):
            info = sig.funcs.get(t.func)
            return None if info is None else info.target
        return None

    def fill(t, sort, env):
        if isinstance(t, Zero) and t.sort is None:
            if sort is None:
                raise ValueError("cannot infer the sort of a zero literal")
            return Zero(sort)
        if isinstance(t, Neg):
            return Neg(fill(t.arg, sort, env))
        if isinstance(t, Add):
            s = sort or sort_of(t, env)
            return Add(fill(t.left, s, env), fill(t.right, s, env))
        if isinstance(t, App):
            info = sig.funcs.get(t.func)
            return App(t.func,
                       fill(t.arg, None if info is None else info.source,
                            env))
        return t

    def walk(f, env):
        if isinstance(f, Eq):
            s = sort_of(f.left, env) or sort_of(f.right, env)
            return Eq(fill(f.left, s, env), fill(f.right, s, env))
        if isinstance(f, And):
            return And(walk(f.left, env), walk(f.right, env))
        if isinstance(f, Exists):
            inner = dict(env)
            inner[f.var] = f.sort
            return Exists(f.var, f.sort, walk(f.body, inner))
        return f

    env = dict(seq.context)
    return Sequent(seq.context, walk(seq.antecedent, env),
                   walk(seq.consequent, env))


# -- canonical printing -------------------------------------------------------


def _print_simplices(cx: SimplicialComplex) -> str:
    maximal = [s for s in cx.simplices
               if not any(set(s) < set(t) for t in cx.simplices)]
    maximal.sort(key=lambda s: (len(s), tuple(cx.position(v) for v in s)))
    return "{" + ", ".join("".join(s) for s in maximal) + "}"


def _print_symbol(func: str) -> str:
    base, _, deg = func.rpartition("@")
    if _IDENT_RE.fullmatch(base):
        return f"{base}@{deg}"
    return f'"{base}"@{deg}'


def _print_term(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Neg):
        inner = _print_term(t.arg)
        if isinstance(t.arg, Add):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(t, Add):
        left = _print_term(t.left)
        right = _print_term(t.right)
        if isinstance(t.right, Add):
            right = f"({right})"
        return f"{left} + {right}"
    if isinstance(t, App):
        return f"{_print_symbol(t.func)}({_print_term(t.arg)})"
    raise TypeError(f"not a term: {t!r}")


def _print_formula(f) -> str:
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Eq):
        return f"{_print_term(f.left)} = {_print_term(f.right)}"
    if isinstance(f, And):
        left = _print_formula(f.left)
        if isinstance(f.left, Exists):
            left = f"({left})"
        right = _print_formula(f.right)
        if isinstance(f.right, (And, Exists)):
            right = f"({right})"
        return f"{left} & {right}"
    if isinstance(f, Exists):
        return f"exists {f.var}:{f.sort}. {_print_formula(f.body)}"
    raise TypeError(f"not a formula: {f!r}")


def print_spec(ws: WorkbenchSpec) -> str:
    """Canonical text; parsing it reproduces the WorkbenchSpec.

    Named declarations come out sorted by name, positional ones in file
    order, the command last.  Bare zeros print as plain 0 whatever sort
    resolution later gives them.
    """
    lines = []
    for name in sorted(ws.complexes):
        lines.append(f"complex {name} = "
                     f"{_print_simplices(ws.complexes[name])}")
    for name in sorted(ws.maps):
        inner = ", ".join(f"{k}:{v}"
                          for k, v in sorted(ws.maps[name].items()))
        lines.append(f"map {name} = {{{inner}}}")
    for total, sub in ws.pairs:
        lines.append(f"pair {total} / {sub}")
    for name, src, tgt, vmap in ws.edges:
        lines.append(f"edge {name} : {src[0]} / {src[1]} -> "
                     f"{tgt[0]} / {tgt[1]} by {vmap}")
    for name, x, y, z in ws.triples:
        lines.append(f"triple {name} : {x} / {y} / {z}")
    for name, x, u, v in ws.squares:
        lines.append(f"square {name} : {u} + {v} in {x}")
    for name, src, tgt, vmap in ws.square_maps:
        lines.append(f"squaremap {name} : {src} -> {tgt} by {vmap}")
    for total, sub in ws.prisms:
        lines.append(f"prism {total} / {sub}")
    for name, src, tgt, vmap in ws.cubes:
        lines.append(f"cube {name} : {src} -> {tgt} by {vmap}")
    for name in sorted(ws.filtrations):
        base, steps = ws.filtrations[name]
        if steps == "skeletal":
            lines.append(f"filtration {name} on {base} = skeletal")
        else:
            lines.append(f"filtration {name} on {base} = "
                         f"[{', '.join(steps)}]")
    for name in sorted(ws.sequents):
        seq = ws.sequents[name]
        ctx = ", ".join(f"{v}:{s}" for v, s in seq.context)
        lines.append(f"sequent {name} = [{ctx}] "
                     f"{_print_formula(seq.antecedent)} |- "
                     f"{_print_formula(seq.consequent)}")
    lines.append(" ".join(ws.command))
    return "\n".join(lines) + "\n"

"""Many-sorted equational sequents over a homology model.

A diagram plus a degree window determines a signature: one sort per
(node, degree) with abelian-group syntax, one function symbol per
degree-preserving edge map, one per triple connecting morphism, one per
distinguished-square connecting morphism.  The axiom generator emits the
group laws, additivity, compositions, identities, naturality, exactness of
every triple, interval invariance, and the six-part exactness of every
distinguished square, each as a tagged sequent instance.

Sequents can be checked two ways: semantically against the model's
presented groups (kernel/image lattice arithmetic) or by brute-force
enumeration over an exported finite structure.  The tags line the two
routes up instance by instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .fga import CanonicalForm, GroupHom, composite_is_zero, hom_concat, hom_stack, kernel_in_image

# -- terms and formulas ------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    sort: str


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class App:
    func: str
    arg: object


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Eq:
    left: object
    right: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Exists:
    var: str
    sort: str
    body: object


@dataclass(frozen=True)
class Sequent:
    """forall context: antecedent entails consequent."""
    context: Tuple[Tuple[str, str], ...]
    antecedent: object
    consequent: object


def conjoin(formulas):
    out = formulas[0]
    for f in formulas[1:]:
        out = And(out, f)
    return out


# -- signatures --------------------------------------------------------------


def sort_name(key: Tuple[str, str], n: int) -> str:
    total, sub = key
    if sub == "0":
        return f"h{n}({total})"
    return f"h{n}({total},{sub})"


@dataclass(frozen=True)
class FuncInfo:
    name: str
    kind: str          # "edge" | "connecting" | "mv"
    source: str
    target: str
    ref: str           # edge / triple / square name in the diagram
    degree: int


class Signature:
    def __init__(self, sorts: Dict[str, Tuple[Tuple[str, str], int]],
                 funcs: Dict[str, FuncInfo], window: Tuple[int, int]):
        self.sorts = sorts
        self.funcs = funcs
        self.window = window

    def sort_of(self, key, n) -> str:
        name = sort_name(key, n)
        if name not in self.sorts:
            raise ValueError(f"sort {name} outside the signature")
        return name


def generate_signature(diagram, window: Tuple[int, int]) -> Signature:
    lo, hi = window
    sorts = {}
    for key in diagram.node_keys():
        for n in range(lo, hi + 1):
            sorts[sort_name(key, n)] = (key, n)
    funcs: Dict[str, FuncInfo] = {}

    def declare(info: FuncInfo):
        if info.name in funcs:
            raise ValueError(f"symbol name clash at {info.name!r}")
        funcs[info.name] = info

    for name in diagram.edge_names():
        edge = diagram.edges[name]
        if edge.kind == "partial":
            continue  # its content is the connecting symbol of the triple
        for n in range(lo, hi + 1):
            declare(FuncInfo(f"{name}@{n}", "edge",
                             sort_name(edge.src, n), sort_name(edge.tgt, n),
                             name, n))
    for tname in sorted(diagram.triples):
        t = diagram.triples[tname]
        for n in range(lo + 1, hi + 1):
            declare(FuncInfo(f"{tname}@{n}", "connecting",
                             sort_name(t.nxy, n), sort_name(t.nyz, n - 1),
                             tname, n))
    for qname in sorted(diagram.squares):
        q = diagram.squares[qname]
        for n in range(lo + 1, hi + 1):
            declare(FuncInfo(f"{qname}@{n}", "mv",
                             sort_name((q.d, "0"), n), sort_name((q.b, "0"), n - 1),
                             qname, n))
    return Signature(sorts, funcs, window)


# -- axiom generation --------------------------------------------------------


@dataclass(frozen=True)
class AxiomInstance:
    name: str
    tag: tuple
    sequent: Sequent


def _group_axioms(sig: Signature) -> List[AxiomInstance]:
    out = []
    for s in sorted(sig.sorts):
        x, y, z = Var("x"), Var("y"), Var("z")
        laws = [
            ("assoc", (("x", s), ("y", s), ("z", s)),
             Eq(Add(Add(x, y), z), Add(x, Add(y, z)))),
            ("unit", (("x", s),), Eq(Add(x, Zero(s)), x)),
            ("inverse", (("x", s),), Eq(Add(x, Neg(x)), Zero(s))),
            ("comm", (("x", s), ("y", s)), Eq(Add(x, y), Add(y, x))),
        ]
        for law, ctx, eq in laws:
            out.append(AxiomInstance(f"group/{s}/{law}", ("group", s, law),
                                     Sequent(ctx, Top(), eq)))
    return out


def _additivity_axioms(sig: Signature) -> List[AxiomInstance]:
    out = []
    for fname in sorted(sig.funcs):
        info = sig.funcs[fname]
        x, y = Var("x"), Var("y")
        seq = Sequent((("x", info.source), ("y", info.source)), Top(),
                      Eq(App(fname, Add(x, y)),
                         Add(App(fname, x), App(fname, y))))
        out.append(AxiomInstance(f"add/{fname}", ("additivity", fname), seq))
    return out


def _identity_axioms(sig: Signature, diagram) -> List[AxiomInstance]:
    out = []
    lo, hi = sig.window
    for key in diagram.node_keys():
        name = diagram.identity_name(key)
        for n in range(lo, hi + 1):
            s = sort_name(key, n)
            seq = Sequent((("x", s),), Top(),
                          Eq(App(f"{name}@{n}", Var("x")), Var("x")))
            out.append(AxiomInstance(f"ident/{key[0]}/{key[1]}/{n}",
                                     ("identity", name, n), seq))
    return out


def composition_triangles(diagram) -> List[Tuple[str, str, str]]:
    """Edge triangles h = g after f, detected from the vertex maps.

    The two factors are proper non-identity maps; the composite may be an
    identity edge (that is how retractions show up).
    """
    triangles = []
    names = diagram.edge_names()
    for fn in names:
        f = diagram.edges[fn]
        if f.kind in ("partial", "identity"):
            continue
        for gn in names:
            g = diagram.edges[gn]
            if g.kind in ("partial", "identity") or f.tgt != g.src:
                continue
            composed = {v: g.morphism.vertex_map[w]
                        for v, w in f.morphism.vertex_map.items()}
            for hn in names:
                h = diagram.edges[hn]
                if (h.kind != "partial" and h.src == f.src and h.tgt == g.tgt
                        and h.morphism.vertex_map == composed):
                    triangles.append((fn, gn, hn))
    return triangles


def _composition_axioms(sig: Signature, diagram) -> List[AxiomInstance]:
    out = []
    lo, hi = sig.window
    for fn, gn, hn in composition_triangles(diagram):
        for n in range(lo, hi + 1):
            s = sort_name(diagram.edges[fn].src, n)
            seq = Sequent((("x", s),), Top(),
                          Eq(App(f"{hn}@{n}", Var("x")),
                             App(f"{gn}@{n}", App(f"{fn}@{n}", Var("x")))))
            out.append(AxiomInstance(f"comp/{fn};{gn};{hn}/{n}",
                                     ("composition", fn, gn, hn, n), seq))
    return out


def _naturality_axioms(sig: Signature, diagram) -> List[AxiomInstance]:
    out = []
    lo, hi = sig.window
    for cname in sorted(diagram.cubes):
        cube = diagram.cubes[cname]
        for n in range(lo + 1, hi + 1):
            s = sort_name(diagram.triples[cube.src].nxy, n)
            lhs = App(f"{cube.tgt}@{n}", App(f"{cube.box}@{n}", Var("x")))
            rhs = App(f"{cube.dia}@{n-1}", App(f"{cube.src}@{n}", Var("x")))
            seq = Sequent((("x", s),), Top(), Eq(lhs, rhs))
            out.append(AxiomInstance(f"nat/{cname}/{n}",
                                     ("naturality", cname, n), seq))
    return out


def _exactness_axioms(sig: Signature, diagram) -> List[AxiomInstance]:
    out = []
    lo, hi = sig.window
    for tname in sorted(diagram.triples):
        t = diagram.triples[tname]
        for n in range(lo, hi + 1):
            syz = sort_name(t.nyz, n)
            sxz = sort_name(t.nxz, n)
            sxy = sort_name(t.nxy, n)
            bt, bp = f"{t.bt}@{n}", f"{t.bp}@{n}"

            def emit(which, ctx, ante, cons):
                out.append(AxiomInstance(
                    f"exact/{tname}/{n}/{which}",
                    ("exactness", tname, n, which),
                    Sequent(ctx, ante, cons)))

            emit("comp_bt_bp", (("x", syz),), Top(),
                 Eq(App(bp, App(bt, Var("x"))), Zero(sxy)))
            emit("onto_bt", (("y", sxz),),
                 Eq(App(bp, Var("y")), Zero(sxy)),
                 Exists("x", syz, Eq(App(bt, Var("x")), Var("y"))))
            if n - 1 < lo:
                continue
            con = f"{tname}@{n}"
            syz1 = sort_name(t.nyz, n - 1)
            sxz1 = sort_name(t.nxz, n - 1)
            bt1 = f"{t.bt}@{n-1}"
            emit("comp_bp_bd", (("x", sxz),), Top(),
                 Eq(App(con, App(bp, Var("x"))), Zero(syz1)))
            emit("comp_bd_bt", (("x", sxy),), Top(),
                 Eq(App(bt1, App(con, Var("x"))), Zero(sxz1)))
            emit("onto_bp", (("y", sxy),),
                 Eq(App(con, Var("y")), Zero(syz1)),
                 Exists("x", sxz, Eq(App(bp, Var("x")), Var("y"))))
            emit("onto_bd", (("y", syz1),),
                 Eq(App(bt1, Var("y")), Zero(sxz1)),
                 Exists("x", sxy, Eq(App(con, Var("x")), Var("y"))))
    return out


def _interval_axioms(sig: Signature, diagram) -> List[AxiomInstance]:
    out = []
    lo, hi = sig.window
    for key in sorted(diagram.prisms):
        pe = diagram.prisms[key]
        for n in range(lo, hi + 1):
            s = sort_name(key, n)
            seq = Sequent((("x", s),), Top(),
                          Eq(App(f"{pe.i0}@{n}", Var("x")),
                             App(f"{pe.i1}@{n}", Var("x"))))
            out.append(AxiomInstance(f"interval/{key[0]}/{key[1]}/{n}",
                                     ("interval", key[0], key[1], n), seq))
    return out


def _mv_axioms(sig: Signature, diagram) -> List[AxiomInstance]:
    out = []
    lo, hi = sig.window
    for qname in sorted(diagram.squares):
        q = diagram.squares[qname]
        for n in range(lo, hi + 1):
            sb = sort_name((q.b, "0"), n)
            su = sort_name((q.u, "0"), n)
            sv = sort_name((q.v, "0"), n)
            sd = sort_name((q.d, "0"), n)
            ia, ic = f"{q.ia}@{n}", f"{q.ic}@{n}"
            ja, jc = f"{q.ja}@{n}", f"{q.jc}@{n}"

            def emit(which, ctx, ante, cons):
                out.append(AxiomInstance(
                    f"mv/{qname}/{n}/{which}",
                    ("mv", qname, n, which),
                    Sequent(ctx, ante, cons)))

            # pieces map in by (restrict, minus restrict), out by the sum
            emit("comp_pieces", (("b", sb),), Top(),
                 Eq(Add(App(ja, App(ia, Var("b"))),
                        Neg(App(jc, App(ic, Var("b"))))), Zero(sd)))
            emit("onto_pieces", (("u", su), ("v", sv)),
                 Eq(Add(App(ja, Var("u")), App(jc, Var("v"))), Zero(sd)),
                 Exists("b", sb, And(Eq(App(ia, Var("b")), Var("u")),
                                     Eq(Add(App(ic, Var("b")), Var("v")),
                                        Zero(sv)))))
            if n - 1 < lo:
                continue
            mv = f"{qname}@{n}"
            sb1 = sort_name((q.b, "0"), n - 1)
            su1 = sort_name((q.u, "0"), n - 1)
            sv1 = sort_name((q.v, "0"), n - 1)
            ia1, ic1 = f"{q.ia}@{n-1}", f"{q.ic}@{n-1}"
            emit("comp_union", (("u", su), ("v", sv)), Top(),
                 Eq(App(mv, Add(App(ja, Var("u")), App(jc, Var("v")))),
                    Zero(sb1)))
            emit("comp_inter", (("z", sd),), Top(),
                 And(Eq(App(ia1, App(mv, Var("z"))), Zero(su1)),
                     Eq(App(ic1, App(mv, Var("z"))), Zero(sv1))))
            emit("onto_union", (("z", sd),),
                 Eq(App(mv, Var("z")), Zero(sb1)),
                 Exists("u", su, Exists("v", sv,
                        Eq(Add(App(ja, Var("u")), App(jc, Var("v"))),
                           Var("z")))))
            emit("onto_inter", (("b", sb1),),
                 And(Eq(App(ia1, Var("b")), Zero(su1)),
                     Eq(App(ic1, Var("b")), Zero(sv1))),
                 Exists("z", sd, Eq(App(mv, Var("z")), Var("b"))))
    return out


def _mv_naturality_axioms(sig: Signature, diagram) -> List[AxiomInstance]:
    out = []
    lo, hi = sig.window
    for mname in sorted(diagram.square_maps):
        sm = diagram.square_maps[mname]
        for n in range(lo + 1, hi + 1):
            src_q = diagram.squares[sm.src]
            s = sort_name((src_q.d, "0"), n)
            lhs = App(f"{sm.tgt}@{n}", App(f"{sm.ed}@{n}", Var("z")))
            rhs = App(f"{sm.eb}@{n-1}", App(f"{sm.src}@{n}", Var("z")))
            seq = Sequent((("z", s),), Top(), Eq(lhs, rhs))
            out.append(AxiomInstance(f"mvnat/{mname}/{n}",
                                     ("mv_naturality", mname, n), seq))
    return out


FLAVORS = ("core", "homotopy", "cd")


def generate_axioms(sig: Signature, diagram,
                    flavors=("core",)) -> List[AxiomInstance]:
    for fl in flavors:
        if fl not in FLAVORS:
            raise ValueError(f"unknown flavor {fl!r}")
    out: List[AxiomInstance] = []
    if "core" in flavors:
        out += _group_axioms(sig)
        out += _identity_axioms(sig, diagram)
        out += _additivity_axioms(sig)
        out += _composition_axioms(sig, diagram)
        out += _naturality_axioms(sig, diagram)
        out += _exactness_axioms(sig, diagram)
    if "homotopy" in flavors:
        out += _interval_axioms(sig, diagram)
    if "cd" in flavors:
        out += _mv_axioms(sig, diagram)
        out += _mv_naturality_axioms(sig, diagram)
    return out


# -- sequent type checking ---------------------------------------------------


def _infer_term(sig: Signature, term, env: Dict[str, str]) -> str:
    if isinstance(term, Var):
        if term.name not in env:
            raise ValueError(f"unbound variable {term.name!r}")
        return env[term.name]
    if isinstance(term, Zero):
        if term.sort not in sig.sorts:
            raise ValueError(f"unknown sort {term.sort!r}")
        return term.sort
    if isinstance(term, Add):
        a = _infer_term(sig, term.left, env)
        b = _infer_term(sig, term.right, env)
        if a != b:
            raise ValueError(f"sum mixes sorts {a} and {b}")
        return a
    if isinstance(term, Neg):
        return _infer_term(sig, term.arg, env)
    if isinstance(term, App):
        if term.func not in sig.funcs:
            raise ValueError(f"unknown symbol {term.func!r}")
        info = sig.funcs[term.func]
        a = _infer_term(sig, term.arg, env)
        if a != info.source:
            raise ValueError(
                f"{term.func!r} expects {info.source}, got {a}")
        return info.target
    raise TypeError(f"not a term: {term!r}")


def _check_formula(sig: Signature, formula, env: Dict[str, str],
                   allow_exists: bool):
    if isinstance(formula, Top):
        return
    if isinstance(formula, Eq):
        a = _infer_term(sig, formula.left, env)
        b = _infer_term(sig, formula.right, env)
        if a != b:
            raise ValueError(f"equation mixes sorts {a} and {b}")
        return
    if isinstance(formula, And):
        _check_formula(sig, formula.left, env, allow_exists)
        _check_formula(sig, formula.right, env, allow_exists)
        return
    if isinstance(formula, Exists):
        if not allow_exists:
            raise ValueError("existential not allowed left of the turnstile")
        if formula.var in env:
            raise ValueError(f"variable {formula.var!r} shadows a binding")
        if formula.sort not in sig.sorts:
            raise ValueError(f"unknown sort {formula.sort!r}")
        inner = dict(env)
        inner[formula.var] = formula.sort
        _check_formula(sig, formula.body, inner, allow_exists)
        return
    raise TypeError(f"not a formula: {formula!r}")


def check_sequent(sig: Signature, seq: Sequent) -> None:
    env: Dict[str, str] = {}
    for v, s in seq.context:
        if v in env:
            raise ValueError(f"duplicate context variable {v!r}")
        if s not in sig.sorts:
            raise ValueError(f"unknown sort {s!r}")
        env[v] = s
    _check_formula(sig, seq.antecedent, env, allow_exists=False)
    _check_formula(sig, seq.consequent, env, allow_exists=True)


# -- finite structures and enumeration ---------------------------------------


class FiniteStructure:
    """Carriers and operation tables for brute-force sequent checking."""

    def __init__(self):
        self.moduli: Dict[str, tuple] = {}
        self.carriers: Dict[str, list] = {}
        self.func_sorts: Dict[str, Tuple[str, str]] = {}
        self.tables: Dict[str, dict] = {}

    def add_sort(self, name: str, moduli: tuple, carrier: list):
        self.moduli[name] = moduli
        self.carriers[name] = carrier

    def add_function(self, name: str, source: str, target: str, table: dict):
        self.func_sorts[name] = (source, target)
        self.tables[name] = table

    def zero(self, sort: str) -> tuple:
        return (0,) * len(self.moduli[sort])

    def add(self, sort: str, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli[sort]))

    def neg(self, sort: str, a: tuple) -> tuple:
        return tuple((-x) % m for x, m in zip(a, self.moduli[sort]))

    def app(self, func: str, a: tuple) -> tuple:
        return self.tables[func][a]


def export_finite_structure(model, sig: Signature) -> FiniteStructure:
    """Tabulate every sort and symbol of the signature over the model.

    Needs finite carriers, so the model must use Z/m coefficients or have
    all groups in the window finite.
    """
    st = FiniteStructure()
    forms: Dict[str, CanonicalForm] = {}
    for name, (key, n) in sorted(sig.sorts.items()):
        cf = CanonicalForm(model.group(key, n))
        if cf.free_rank:
            raise ValueError(
                f"sort {name} has an infinite carrier; "
                "enumerate with finite coefficients")
        forms[name] = cf
        st.add_sort(name, cf.torsion, cf.elements())
    for fname, info in sorted(sig.funcs.items()):
        if info.kind == "edge":
            hom = model.induced(info.ref, info.degree)
        elif info.kind == "connecting":
            hom = model.connecting(info.ref, info.degree)
        else:
            hom = model.mv_connecting(info.ref, info.degree)
        src_cf, tgt_cf = forms[info.source], forms[info.target]
        table = {}
        for e in st.carriers[info.source]:
            table[e] = tgt_cf.coords(hom.matrix.apply(src_cf.lift(e)))
        st.add_function(fname, info.source, info.target, table)
    return st


@dataclass
class EvalResult:
    valid: bool
    counterexample: Optional[dict] = None

    def __bool__(self):
        return self.valid


def _eval_term(st: FiniteStructure, term, env) -> Tuple[tuple, str]:
    if isinstance(term, Var):
        return env[term.name]
    if isinstance(term, Zero):
        return st.zero(term.sort), term.sort
    if isinstance(term, Add):
        va, sa = _eval_term(st, term.left, env)
        vb, sb = _eval_term(st, term.right, env)
        return st.add(sa, va, vb), sa
    if isinstance(term, Neg):
        v, s = _eval_term(st, term.arg, env)
        return st.neg(s, v), s
    if isinstance(term, App):
        v, _ = _eval_term(st, term.arg, env)
        return st.app(term.func, v), st.func_sorts[term.func][1]
    raise TypeError(f"not a term: {term!r}")


def _eval_formula(st: FiniteStructure, formula, env) -> bool:
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Eq):
        return _eval_term(st, formula.left, env)[0] == \
            _eval_term(st, formula.right, env)[0]
    if isinstance(formula, And):
        return _eval_formula(st, formula.left, env) and \
            _eval_formula(st, formula.right, env)
    if isinstance(formula, Exists):
        for e in st.carriers[formula.sort]:
            inner = dict(env)
            inner[formula.var] = (e, formula.sort)
            if _eval_formula(st, formula.body, inner):
                return True
        return False
    raise TypeError(f"not a formula: {formula!r}")


def eval_sequent(st: FiniteStructure, seq: Sequent) -> EvalResult:
    """Exhaustive check; on failure the first counterexample in carrier
    order, as {variable: element}."""
    names = [v for v, _ in seq.context]
    spaces = [st.carriers[s] for _, s in seq.context]
    for values in itertools.product(*spaces):
        env = {v: (e, s) for (v, s), e in zip(seq.context, values)}
        if not _eval_formula(st, seq.antecedent, env):
            continue
        if not _eval_formula(st, seq.consequent, env):
            return EvalResult(False, dict(zip(names, values)))
    return EvalResult(True)


# -- semantic validation (group arithmetic, no enumeration) ------------------


def _mv_alpha(model, q, n) -> GroupHom:
    ia = model.induced(q.ia, n)
    ic = model.induced(q.ic, n)
    neg_ic = GroupHom(ic.source, ic.target, ic.matrix.scaled(-1))
    return hom_stack([ia, neg_ic])


def _mv_beta(model, q, n) -> GroupHom:
    return hom_concat([model.induced(q.ja, n), model.induced(q.jc, n)])


def _check_axiom(model, axiom: AxiomInstance):
    diagram = model.diagram
    tag = axiom.tag
    family = tag[0]
    if family in ("group", "additivity"):
        return True, "holds by construction of the presented groups"
    if family == "identity":
        _, edge, n = tag
        hom = model.induced(edge, n)
        ok = hom.equal_to(GroupHom.identity(hom.source))
        return ok, "" if ok else "identity edge acts nontrivially"
    if family == "composition":
        _, fn, gn, hn, n = tag
        lhs = model.induced(hn, n)
        rhs = model.induced(gn, n) @ model.induced(fn, n)
        ok = lhs.equal_to(rhs)
        return ok, "" if ok else "composite disagrees with its factors"
    if family == "naturality":
        _, cname, n = tag
        cube = diagram.cubes[cname]
        lhs = model.connecting(cube.tgt, n) @ model.induced(cube.box, n)
        rhs = model.induced(cube.dia, n - 1) @ model.connecting(cube.src, n)
        ok = lhs.equal_to(rhs)
        return ok, "" if ok else "connecting square does not commute"
    if family == "interval":
        _, total, sub, n = tag
        pe = diagram.prisms[(total, sub)]
        ok = model.induced(pe.i0, n).equal_to(model.induced(pe.i1, n))
        return ok, "" if ok else "the two end maps differ"
    if family == "exactness":
        _, tname, n, which = tag
        t = diagram.triples[tname]
        bt = model.induced(t.bt, n)
        bp = model.induced(t.bp, n)
        if which == "comp_bt_bp":
            w = composite_is_zero(bt, bp)
        elif which == "onto_bt":
            w = kernel_in_image(bt, bp)
        else:
            con = model.connecting(tname, n)
            bt1 = model.induced(t.bt, n - 1)
            if which == "comp_bp_bd":
                w = composite_is_zero(bp, con)
            elif which == "comp_bd_bt":
                w = composite_is_zero(con, bt1)
            elif which == "onto_bp":
                w = kernel_in_image(bp, con)
            elif which == "onto_bd":
                w = kernel_in_image(con, bt1)
            else:
                raise ValueError(f"unknown exactness part {which!r}")
        return w is None, "" if w is None else f"witness {w}"
    if family == "mv":
        _, qname, n, which = tag
        q = diagram.squares[qname]
        if which == "comp_pieces":
            w = composite_is_zero(_mv_alpha(model, q, n), _mv_beta(model, q, n))
        elif which == "onto_pieces":
            w = kernel_in_image(_mv_alpha(model, q, n), _mv_beta(model, q, n))
        else:
            mv = model.mv_connecting(qname, n)
            if which == "comp_union":
                w = composite_is_zero(_mv_beta(model, q, n), mv)
            elif which == "comp_inter":
                w = composite_is_zero(mv, _mv_alpha(model, q, n - 1))
            elif which == "onto_union":
                w = kernel_in_image(_mv_beta(model, q, n), mv)
            elif which == "onto_inter":
                w = kernel_in_image(mv, _mv_alpha(model, q, n - 1))
            else:
                raise ValueError(f"unknown square part {which!r}")
        return w is None, "" if w is None else f"witness {w}"
    if family == "mv_naturality":
        _, mname, n = tag
        sm = diagram.square_maps[mname]
        lhs = model.mv_connecting(sm.tgt, n) @ model.induced(sm.ed, n)
        rhs = model.induced(sm.eb, n - 1) @ model.mv_connecting(sm.src, n)
        ok = lhs.equal_to(rhs)
        return ok, "" if ok else "square of connecting maps does not commute"
    raise ValueError(f"unknown axiom family {family!r}")


def validate_semantic(model, axioms) -> list:
    """[(axiom, ok, detail)] via lattice arithmetic on the presented groups."""
    out = []
    for axiom in axioms:
        ok, detail = _check_axiom(model, axiom)
        out.append((axiom, ok, detail))
    return out

"""Homology of a diagram of pairs, with explicit chain-level witnesses.

Every node of the diagram gets relative simplicial chains (coefficients in
the integers or in Z/m via relation rows m*I), homology groups presented as
cokernels, and stored generator representatives.  Edges get induced maps,
triples get connecting morphisms, and distinguished squares get the
union-to-intersection connecting morphism, all as GroupHom values between
the presented groups.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .fga import (
    FgAbGroup,
    GroupHom,
    IntMatrix,
    QuotientExpresser,
    hstack,
    preimage_lattice,
    present_subquotient,
)
from .complexes import ChainComplex
from .simp import PairDiagram, SimpPair

Key = Tuple[str, str]


def _chain_group(n: int, modulus: int) -> FgAbGroup:
    if modulus:
        return FgAbGroup(n, IntMatrix.identity(n).scaled(modulus))
    return FgAbGroup(n)


def relative_chain_bases(pair: SimpPair, lo: int, hi: int) -> Dict[int, list]:
    """Ordered bases of the relative chains: simplices of the total complex
    that are not in the subcomplex, degree by degree."""
    sub = pair.sub.simplices
    return {n: [s for s in pair.total.simplices_of_dim(n) if s not in sub]
            for n in range(lo, hi + 1)}


def relative_chain_complex(pair: SimpPair, modulus: int, lo: int, hi: int
                           ) -> Tuple[ChainComplex, Dict[int, list]]:
    bases = relative_chain_bases(pair, lo, hi)
    index = {n: {s: i for i, s in enumerate(bases[n])} for n in bases}
    groups = {n: _chain_group(len(bases[n]), modulus) for n in bases}
    diffs = {}
    for n in range(lo + 1, hi + 1):
        rows = len(bases[n - 1])
        cols = []
        for s in bases[n]:
            col = [0] * rows
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                j = index[n - 1].get(face)
                if j is not None:
                    col[j] += -1 if i % 2 else 1
            cols.append(col)
        diffs[n] = GroupHom(groups[n], groups[n - 1],
                            IntMatrix.from_cols(cols, rows))
    return ChainComplex(lo, hi, groups, diffs), bases


class _NodeData:
    __slots__ = ("chains", "bases", "index", "groups", "reps", "expressers")

    def __init__(self, chains, bases):
        self.chains = chains
        self.bases = bases
        self.index = {n: {s: i for i, s in enumerate(bs)}
                      for n, bs in bases.items()}
        self.groups = {}
        self.reps = {}
        self.expressers = {}


def _permutation_sign(positions: List[int]) -> int:
    sign = 1
    for i in range(len(positions)):
        for j in range(i + 1, len(positions)):
            if positions[i] > positions[j]:
                sign = -sign
    return sign


class HomologyModel:
    """All homology data of a pair diagram in a fixed degree window."""

    def __init__(self, diagram: PairDiagram, modulus: int = 0,
                 window: Optional[Tuple[int, int]] = None):
        if modulus < 0:
            raise ValueError("modulus must be 0 (integers) or positive")
        if window is None:
            top = max((cx.dim() for cx in diagram.complexes.values()), default=0)
            window = (0, max(top, 0))
        if window[0] > window[1]:
            raise ValueError("empty degree window")
        self.diagram = diagram
        self.modulus = modulus
        self.window = window
        self._nodes: Dict[Key, _NodeData] = {}
        lo, hi = window[0] - 1, window[1] + 1
        for key in diagram.node_keys():
            chains, bases = relative_chain_complex(diagram.nodes[key],
                                                   modulus, lo, hi)
            data = _NodeData(chains, bases)
            for n in range(window[0], window[1] + 1):
                d_n = chains.differential(n)
                cycles = preimage_lattice(d_n.matrix,
                                          d_n.target.relation_cols())
                boundaries = hstack([chains.differential(n + 1).matrix,
                                     chains.group(n).relation_cols()])
                group, reps = present_subquotient(chains.group(n).ngens,
                                                  cycles, boundaries)
                data.groups[n] = group
                data.reps[n] = reps
                data.expressers[n] = QuotientExpresser(reps, boundaries)
            self._nodes[key] = data
        self._induced: Dict[Tuple[str, int], GroupHom] = {}
        self._connecting: Dict[Tuple[str, int], GroupHom] = {}
        self._mv: Dict[Tuple[str, int], GroupHom] = {}

    # -- plumbing ----------------------------------------------------------

    def degrees(self):
        return range(self.window[0], self.window[1] + 1)

    def _check_degree(self, n: int):
        if not self.window[0] <= n <= self.window[1]:
            raise ValueError(f"degree {n} outside window {self.window}")

    def node(self, key: Key) -> _NodeData:
        if key not in self._nodes:
            raise ValueError(f"unknown node {key}")
        return self._nodes[key]

    def group(self, key: Key, n: int) -> FgAbGroup:
        self._check_degree(n)
        return self.node(key).groups[n]

    def generator_reps(self, key: Key, n: int) -> IntMatrix:
        """Columns: chain representatives of the homology generators."""
        self._check_degree(n)
        return self.node(key).reps[n]

    def chain_basis(self, key: Key, n: int) -> list:
        return self.node(key).bases[n]

    def express(self, key: Key, n: int, chain) -> tuple:
        """Homology class of a cycle, in generator coordinates."""
        self._check_degree(n)
        coords = self.node(key).expressers[n].express(chain)
        if coords is None:
            raise ValueError("chain is not a cycle of this node")
        return coords

    def homology_table(self, key: Key) -> list:
        return [(n, self.group(key, n).iso_invariants()) for n in self.degrees()]

    # -- induced maps ------------------------------------------------------

    def chain_map(self, edge_name: str, n: int) -> IntMatrix:
        """Matrix of the relative chain map of an edge in degree n."""
        edge = self.diagram.edges[edge_name]
        vm = edge.morphism.vertex_map
        src = self.node(edge.src)
        tgt = self.node(edge.tgt)
        tgt_total = self.diagram.nodes[edge.tgt].total
        tgt_sub = self.diagram.nodes[edge.tgt].sub
        rows = len(tgt.bases[n])
        cols = []
        for s in src.bases[n]:
            col = [0] * rows
            images = [vm[v] for v in s]
            if len(set(images)) == len(images):
                t = tgt_total.sort_simplex(images)
                if not tgt_sub.has_simplex(t):
                    positions = [tgt_total.position(w) for w in images]
                    col[tgt.index[n][t]] = _permutation_sign(positions)
            cols.append(col)
        return IntMatrix.from_cols(cols, rows)

    def induced(self, edge_name: str, n: int) -> GroupHom:
        """Map on homology induced by a diagram edge."""
        self._check_degree(n)
        cached = self._induced.get((edge_name, n))
        if cached is not None:
            return cached
        edge = self.diagram.edges[edge_name]
        if edge.kind == "partial":
            raise ValueError(
                f"edge {edge_name!r} is a connecting morphism; "
                "use connecting() on its triple")
        F = self.chain_map(edge_name, n)
        src = self.node(edge.src)
        tgt = self.node(edge.tgt)
        cols = []
        for j in range(src.reps[n].cols):
            pushed = F.apply(src.reps[n].col(j))
            coords = tgt.expressers[n].express(pushed)
            if coords is None:
                raise RuntimeError(
                    f"image of a cycle under {edge_name!r} is not a cycle")
            cols.append(list(coords))
        hom = GroupHom(src.groups[n], tgt.groups[n],
                       IntMatrix.from_cols(cols, tgt.groups[n].ngens))
        hom.require_well_defined()
        self._induced[(edge_name, n)] = hom
        return hom

    # -- connecting morphisms ----------------------------------------------

    def connecting(self, triple_name: str, n: int) -> GroupHom:
        """H_n(total, middle) -> H_{n-1}(middle, small) of a triple."""
        self._check_degree(n)
        self._check_degree(n - 1)
        cached = self._connecting.get((triple_name, n))
        if cached is not None:
            return cached
        t = self.diagram.triples[triple_name]
        src = self.node(t.nxy)
        mid = self.node(t.nxz)
        tgt = self.node(t.nyz)
        middle = self.diagram.complexes[t.y].simplices
        d = mid.chains.differential(n).matrix
        cols = []
        for j in range(src.reps[n].cols):
            chain = src.reps[n].col(j)
            # the (X,Y)-basis sits inside the (X,Z)-basis
            lifted = [0] * len(mid.bases[n])
            for i, s in enumerate(src.bases[n]):
                lifted[mid.index[n][s]] = chain[i]
            bdry = d.apply(lifted)
            restricted = [0] * len(tgt.bases[n - 1])
            for i, s in enumerate(mid.bases[n - 1]):
                if s in middle:
                    restricted[tgt.index[n - 1][s]] = bdry[i]
                elif (self.modulus == 0 and bdry[i] != 0) or \
                        (self.modulus and bdry[i] % self.modulus):
                    raise RuntimeError(
                        f"boundary of a relative cycle leaks outside {t.y!r}")
            coords = tgt.expressers[n - 1].express(restricted)
            if coords is None:
                raise RuntimeError("connecting image is not a cycle")
            cols.append(list(coords))
        hom = GroupHom(src.groups[n], tgt.groups[n - 1],
                       IntMatrix.from_cols(cols, tgt.groups[n - 1].ngens))
        hom.require_well_defined()
        self._connecting[(triple_name, n)] = hom
        return hom

    def mv_connecting(self, square_name: str, n: int) -> GroupHom:
        """H_n(union) -> H_{n-1}(intersection) of a distinguished square.

        Convention: the pieces map in by (restrict to left, minus restrict
        to right) and out by the plain sum, so the value on a cycle z is the
        boundary of the part of z carried by the left piece.
        """
        self._check_degree(n)
        self._check_degree(n - 1)
        cached = self._mv.get((square_name, n))
        if cached is not None:
            return cached
        sq = self.diagram.squares[square_name]
        src = self.node((sq.d, "0"))
        tgt = self.node((sq.b, "0"))
        left = self.diagram.complexes[sq.u].simplices
        inter = self.diagram.complexes[sq.b].simplices
        d = src.chains.differential(n).matrix
        cols = []
        for j in range(src.reps[n].cols):
            chain = src.reps[n].col(j)
            part = [c if s in left else 0
                    for c, s in zip(chain, src.bases[n])]
            bdry = d.apply(part)
            restricted = [0] * len(tgt.bases[n - 1])
            for i, s in enumerate(src.bases[n - 1]):
                if s in inter:
                    restricted[tgt.index[n - 1][s]] = bdry[i]
                elif (self.modulus == 0 and bdry[i] != 0) or \
                        (self.modulus and bdry[i] % self.modulus):
                    raise RuntimeError(
                        "boundary of the left part leaks outside the intersection")
            coords = tgt.expressers[n - 1].express(restricted)
            if coords is None:
                raise RuntimeError("union connecting image is not a cycle")
            cols.append(list(coords))
        hom = GroupHom(src.groups[n], tgt.groups[n - 1],
                       IntMatrix.from_cols(cols, tgt.groups[n - 1].ngens))
        hom.require_well_defined()
        self._mv[(square_name, n)] = hom
        return hom

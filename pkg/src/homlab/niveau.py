"""Spectral pages of a filtered complex and recovery of the abutment.

A filtration X_0 <= ... <= X_d = X (with dim X_p <= p) induces lattices
L_p in each chain group.  Approximate-cycle lattices

    Z^r_{p,q} = {x in L_p : dx in L_{p-r}}

present every page as a subquotient with chain-level generator
representatives, so differentials and the comparison with the graded
pieces of homology are all computed by lattice arithmetic.  Coefficients
in Z/m are handled by padding every lattice with m times the ambient
basis; modulus 0 means integer coefficients.

The first page of the skeletal-style filtration is the cellular chain
complex (all entries off the q = 0 row vanish); when that holds, the
zig-zag in recover_homology rebuilds an honest cycle of X from each
cellular class and the induced map is an isomorphism degree by degree.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .fga import (
    FgAbGroup,
    GroupHom,
    IntMatrix,
    QuotientExpresser,
    hstack,
    modulus_columns,
    preimage_lattice,
    present_subquotient,
)
from .complexes import Bicomplex, ChainComplex, total_complex
from .model import HomologyModel, relative_chain_complex
from .simp import (
    EMPTY_NAME,
    DiagramBuilder,
    Filtration,
    SimpPair,
    SimplicialComplex,
)


class PageEntry:
    __slots__ = ("group", "reps", "expresser")

    def __init__(self, group, reps, expresser):
        self.group = group
        self.reps = reps
        self.expresser = expresser


_TRIVIAL = FgAbGroup(0)


class SpectralSequence:
    """All pages E^1 .. E^{d+1} of the filtration, with differentials."""

    def __init__(self, filtration: Filtration, modulus: int = 0):
        if modulus < 0:
            raise ValueError("modulus must be 0 (integers) or positive")
        self.filtration = filtration
        self.modulus = modulus
        base = filtration.base
        self.top = max(base.dim(), 0)
        self.d_len = filtration.length()
        pair = SimpPair(base, SimplicialComplex.empty())
        self.chains, self.bases = relative_chain_complex(
            pair, modulus, -1, self.top + 1)
        self._dim = {n: len(b) for n, b in self.bases.items()}
        self._lattices: Dict[Tuple[int, int], IntMatrix] = {}
        self._zcache: Dict[Tuple[int, int, int], IntMatrix] = {}
        self._hx: Dict[int, tuple] = {}

        self.grid: List[Tuple[int, int]] = []
        for p in range(self.d_len + 1):
            for n in range(0, min(p, self.top) + 1):
                self.grid.append((p, n - p))
        self.grid.sort()

        self.pages: Dict[int, Dict[Tuple[int, int], PageEntry]] = {}
        self.diffs: Dict[int, Dict[Tuple[int, int], GroupHom]] = {}
        for r in range(1, self.d_len + 2):
            entries = {}
            for (p, q) in self.grid:
                n = p + q
                num = self._z(r, p, q)
                den = hstack([
                    self.chains.differential(n + 1).matrix
                    @ self._z(r - 1, p + r - 1, q - r + 2),
                    self._z(r - 1, p - 1, q + 1)])
                group, reps = present_subquotient(self._dim[n], num, den)
                entries[(p, q)] = PageEntry(group, reps,
                                            QuotientExpresser(reps, den))
            self.pages[r] = entries
            diffs = {}
            for (p, q) in self.grid:
                tgt = (p - r, q + r - 1)
                if tgt not in entries:
                    continue
                src_e, tgt_e = entries[(p, q)], entries[tgt]
                d = self.chains.differential(p + q).matrix
                cols = []
                for j in range(src_e.reps.cols):
                    coords = tgt_e.expresser.express(d.apply(src_e.reps.col(j)))
                    if coords is None:
                        raise RuntimeError(
                            f"page {r} differential leaves its target at {(p, q)}")
                    cols.append(list(coords))
                hom = GroupHom(src_e.group, tgt_e.group,
                               IntMatrix.from_cols(cols, tgt_e.group.ngens))
                hom.require_well_defined()
                diffs[(p, q)] = hom
            self.diffs[r] = diffs

    # -- lattices ------------------------------------------------------------

    def dim(self, n: int) -> int:
        return self._dim.get(n, 0)

    def lattice(self, p: int, n: int) -> IntMatrix:
        """Columns spanning the F_p chains in C_n, with modulus padding."""
        key = (p, n)
        cached = self._lattices.get(key)
        if cached is not None:
            return cached
        dim = self.dim(n)
        step = self.filtration.step(p).simplices
        cols = []
        for i, s in enumerate(self.bases.get(n, [])):
            if s in step:
                col = [0] * dim
                col[i] = 1
                cols.append(col)
        L = hstack([IntMatrix.from_cols(cols, dim),
                    modulus_columns(self.modulus, dim)])
        self._lattices[key] = L
        return L

    def _z(self, r: int, p: int, q: int) -> IntMatrix:
        """Z^r_{p,q}: chains of F_p whose boundary drops r filtration steps."""
        n = p + q
        if n < -1 or n > self.top + 1:
            return IntMatrix.zeros(0, 0)
        if r <= 0:
            return self.lattice(p, n)
        key = (r, p, q)
        cached = self._zcache.get(key)
        if cached is not None:
            return cached
        L = self.lattice(p, n)
        pre = preimage_lattice(self.chains.differential(n).matrix @ L,
                               self.lattice(p - r, n - 1))
        Z = L @ pre
        self._zcache[key] = Z
        return Z

    # -- page access ----------------------------------------------------------

    def stable_index(self) -> int:
        """Differentials out of the grid vanish from here on."""
        return self.d_len + 1

    def entry(self, r: int, p: int, q: int) -> PageEntry:
        if r not in self.pages:
            raise ValueError(f"page {r} not computed (1..{self.d_len + 1})")
        if (p, q) not in self.pages[r]:
            raise ValueError(f"({p}, {q}) outside the support grid")
        return self.pages[r][(p, q)]

    def group(self, r: int, p: int, q: int) -> FgAbGroup:
        if r not in self.pages:
            raise ValueError(f"page {r} not computed (1..{self.d_len + 1})")
        e = self.pages[r].get((p, q))
        return e.group if e is not None else _TRIVIAL

    def differential(self, r: int, p: int, q: int) -> Optional[GroupHom]:
        """d^r out of (p, q); None when source or target is off the grid."""
        return self.diffs.get(r, {}).get((p, q))

    def infinity(self, p: int, q: int) -> FgAbGroup:
        return self.group(self.stable_index(), p, q)

    # -- abutment --------------------------------------------------------------

    def base_homology(self, n: int):
        """(group, reps, expresser) for H_n of the whole complex."""
        cached = self._hx.get(n)
        if cached is not None:
            return cached
        d_n = self.chains.differential(n)
        cycles = preimage_lattice(d_n.matrix, d_n.target.relation_cols())
        den = hstack([self.chains.differential(n + 1).matrix,
                      self.chains.group(n).relation_cols()])
        group, reps = present_subquotient(self.dim(n), cycles, den)
        data = (group, reps, QuotientExpresser(reps, den))
        self._hx[n] = data
        return data


def run_pages(filtration: Filtration, modulus: int = 0) -> SpectralSequence:
    return SpectralSequence(filtration, modulus)


# -- abutment filtration -------------------------------------------------------


class NiveauData:
    """Filtration of homology by the coverage level of its cycles.

    graded[(p, n)] are the invariants of (cycles from F_p)/(cycles from
    F_{p-1}), both taken inside H_n; subgroup[(p, n)] the invariants of the
    p-th filtration subgroup itself; homology[n] those of H_n.
    """

    def __init__(self, homology, subgroup, graded):
        self.homology = homology
        self.subgroup = subgroup
        self.graded = graded


def niveau_filtration(spec: SpectralSequence) -> NiveauData:
    homology = {}
    subgroup = {}
    graded = {}
    for n in range(spec.top + 1):
        dim = spec.dim(n)
        den = hstack([spec.chains.differential(n + 1).matrix,
                      spec.chains.group(n).relation_cols()])
        d_n = spec.chains.differential(n)
        cycles = preimage_lattice(d_n.matrix, d_n.target.relation_cols())
        homology[n] = present_subquotient(dim, cycles, den)[0].iso_invariants()
        prev = den
        for p in range(spec.d_len + 1):
            zp = hstack([spec._z(p + 1, p, n - p), den])
            subgroup[(p, n)] = present_subquotient(
                dim, zp, den)[0].iso_invariants()
            graded[(p, n)] = present_subquotient(
                dim, zp, prev)[0].iso_invariants()
            prev = zp
    return NiveauData(homology, subgroup, graded)


def check_convergence(spec: SpectralSequence,
                      niv: Optional[NiveauData] = None) -> list:
    """Mismatches between stable-page entries and the graded pieces of the
    homology filtration; empty means the sequence converges on the nose."""
    if niv is None:
        niv = niveau_filtration(spec)
    bad = []
    for n in range(spec.top + 1):
        for p in range(spec.d_len + 1):
            got = spec.infinity(p, n - p).iso_invariants()
            want = niv.graded.get((p, n), (0, ()))
            if got != want:
                bad.append((p, n, got, want))
    return bad


# -- the first page via relative pairs ------------------------------------------


def filtration_diagram(filtration: Filtration, prefix: str = "F"):
    """Diagram with one pair per filtration step and the triples that
    produce the first-page differentials.

    Returns (diagram, pair keys by p, triple names by p).
    """
    b = DiagramBuilder()
    names = []
    for p in range(len(filtration.steps)):
        name = f"{prefix}{p}"
        b.add_complex(name, filtration.steps[p])
        names.append(name)
    pair_keys = []
    for p, name in enumerate(names):
        below = names[p - 1] if p else EMPTY_NAME
        b.add_pair(name, below)
        pair_keys.append((name, below))
    triple_names = {}
    for p in range(1, len(names)):
        small = names[p - 2] if p >= 2 else EMPTY_NAME
        tname = f"{prefix}t{p}"
        b.add_triple(tname, names[p], names[p - 1], small)
        triple_names[p] = tname
    return b.build(), pair_keys, triple_names


def compare_first_page(spec: SpectralSequence) -> list:
    """Cross-check E^1 and d^1 against the relative-homology route.

    The first page must match H_{p+q}(F_p, F_{p-1}) and the differential
    the connecting morphism of (F_p, F_{p-1}, F_{p-2}); we compare group
    invariants and the homology of each row complex.  Returns a list of
    discrepancy strings, empty when the two constructions agree.
    """
    diagram, pair_keys, triple_names = filtration_diagram(spec.filtration)
    model = HomologyModel(diagram, spec.modulus, (0, spec.top))
    bad = []
    for (p, q) in spec.grid:
        n = p + q
        mine = spec.group(1, p, q).iso_invariants()
        other = model.group(pair_keys[p], n).iso_invariants()
        if mine != other:
            bad.append(f"E1({p},{q}): {mine} != pair homology {other}")
    # homology of the q = 0 row, both routes
    for p in range(min(spec.d_len, spec.top) + 1):
        into = spec.differential(1, p + 1, 0)
        out = spec.differential(1, p, 0)
        mine = _middle_homology(spec.group(1, p, 0), into, out)
        m_into = (model.connecting(triple_names[p + 1], p + 1)
                  if p + 1 in triple_names and p + 1 <= spec.top else None)
        m_out = (model.connecting(triple_names[p], p)
                 if p in triple_names and p >= 1 else None)
        other = _middle_homology(model.group(pair_keys[p], p), m_into, m_out)
        if mine != other:
            bad.append(f"row homology at p={p}: {mine} != {other}")
    return bad


def _middle_homology(group: FgAbGroup, into: Optional[GroupHom],
                     out: Optional[GroupHom]) -> tuple:
    if into is None:
        into = GroupHom.zero_map(_TRIVIAL, group)
    if out is None:
        out = GroupHom.zero_map(group, _TRIVIAL)
    cx = ChainComplex(0, 2, {0: out.target, 1: group, 2: into.source},
                      {1: out, 2: into})
    return cx.homology(1).iso_invariants()


def page_turn_mismatches(spec: SpectralSequence) -> list:
    """E^{r+1} must be the homology of (E^r, d^r) at every spot."""
    bad = []
    for r in range(1, spec.d_len + 1):
        for (p, q) in spec.grid:
            into = spec.differential(r, p + r, q - r + 1)
            out = spec.differential(r, p, q)
            if into is not None and out is not None:
                comp = out @ into
                if not comp.is_zero():
                    bad.append((r, p, q, "d∘d not zero"))
            got = _middle_homology(spec.group(r, p, q), into, out)
            want = spec.group(r + 1, p, q).iso_invariants()
            if got != want:
                bad.append((r, p, q, f"homology {got} next page {want}"))
    return bad


# -- cellular complex and recovery ----------------------------------------------


class CellularComplex:
    """Total complex of the first page with its block layout."""

    def __init__(self, total: ChainComplex, blocks: Dict[int, list],
                 offenders: list):
        self.total = total
        self.blocks = blocks
        self.offenders = offenders

    def is_cellular(self) -> bool:
        return not self.offenders

    def homology_table(self):
        return self.total.homology_table()


def check_cellularity(spec: SpectralSequence) -> list:
    """Nontrivial first-page entries off the q = 0 row."""
    return [(p, q) for (p, q) in spec.grid
            if q != 0 and not spec.group(1, p, q).is_trivial()]


def cellular_complex(spec: SpectralSequence) -> CellularComplex:
    groups = {cell: spec.group(1, *cell) for cell in spec.grid}
    horizontal = {cell: hom for cell, hom in spec.diffs[1].items()}
    bi = Bicomplex(groups, horizontal, {})
    total, blocks = total_complex(bi)
    return CellularComplex(total, blocks, check_cellularity(spec))


def recover_homology(spec: SpectralSequence, cell: CellularComplex,
                     n: int) -> GroupHom:
    """The comparison map H_n(cellular) -> H_n(X) as an explicit hom.

    A degree-n class of the total complex is restricted to its (n, 0)
    block and lifted through that entry's chain representatives.  Because
    every filtration level satisfies dim X_p <= p, the levels below n
    carry no n-chains at all, so the lifted chain is already a cycle: the
    usual staircase of corrections collapses to this single step.  The
    class of the lift is independent of all choices (boundaries out of
    the (n+1, 0) block and first-page relations both die in H_n), which
    require_well_defined re-checks at runtime.
    """
    if cell.offenders:
        raise ValueError(
            f"filtration is not cellular; offending entries {cell.offenders}")
    h_cell, reps = cell.total.homology_with_reps(n)
    group_x, _, expresser = spec.base_homology(n)
    d_n = spec.chains.differential(n).matrix
    m = spec.modulus
    start = 0
    top_entry = None
    for (p, q) in cell.blocks.get(n, []):
        if (p, q) == (n, 0):
            top_entry = spec.entry(1, p, q)
            break
        start += spec.entry(1, p, q).group.ngens
    cols = []
    for j in range(reps.cols):
        if top_entry is None:
            z = [0] * spec.dim(n)
        else:
            seg = reps.col(j)[start: start + top_entry.group.ngens]
            z = list(top_entry.reps.apply(seg))
        bdry = d_n.apply(z)
        if any(b if m == 0 else b % m for b in bdry):
            raise RuntimeError("restricted chain is not a cycle")
        coords = expresser.express(z)
        if coords is None:
            raise RuntimeError("recovered cycle escapes the cycle lattice")
        cols.append(list(coords))
    hom = GroupHom(h_cell, group_x, IntMatrix.from_cols(cols, group_x.ngens))
    hom.require_well_defined()
    return hom


# -- comparisons and reports -----------------------------------------------------


def compare_filtrations(a: SpectralSequence, b: SpectralSequence) -> dict:
    """Degreewise comparison of two filtrations of the same complex."""
    if a.filtration.base != b.filtration.base:
        raise ValueError("filtrations live on different complexes")
    if a.modulus != b.modulus:
        raise ValueError("filtrations use different coefficients")
    niv_a = niveau_filtration(a)
    niv_b = niveau_filtration(b)
    out = {}
    for n in range(max(a.top, b.top) + 1):
        ha = niv_a.homology.get(n, (0, ()))
        hb = niv_b.homology.get(n, (0, ()))
        out[n] = {
            "same_homology": ha == hb,
            "graded_a": [niv_a.graded.get((p, n), (0, ()))
                         for p in range(a.d_len + 1)],
            "graded_b": [niv_b.graded.get((p, n), (0, ()))
                         for p in range(b.d_len + 1)],
        }
    return out


def _invariants_json(inv: tuple) -> list:
    free, torsion = inv
    return [free, list(torsion)]


def spectral_summary(spec: SpectralSequence, include_niveau: bool = True) -> dict:
    """JSON-ready (stringified keys, no tuples) description of the pages."""
    pages = {}
    for r in sorted(spec.pages):
        pages[str(r)] = {
            f"{p},{q}": _invariants_json(e.group.iso_invariants())
            for (p, q), e in sorted(spec.pages[r].items())}
    out = {
        "modulus": spec.modulus,
        "filtration_length": spec.d_len,
        "stable_page": spec.stable_index(),
        "pages": pages,
    }
    if include_niveau:
        niv = niveau_filtration(spec)
        out["homology"] = {str(n): _invariants_json(v)
                           for n, v in sorted(niv.homology.items())}
        out["graded"] = {f"{p},{n}": _invariants_json(v)
                         for (p, n), v in sorted(niv.graded.items())
                         if v != (0, ())}
        out["converges"] = not check_convergence(spec, niv)
    return out

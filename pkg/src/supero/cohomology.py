"""Relative cochain complexes, their signed differential, and cohomology.

The cochain space in degree p consists of the h-equivariant linear maps
from the super p-th exterior power of g/h to the coefficient module M,

    C^p = { phi : L^p_s(g/h) -> M  with  phi(x.w) = (-1)^{|x||phi|} x.phi(w) }.

The differential evaluates on monomials w = x_1 ^ ... ^ x_{p+1} as

    (d phi)(w) = sum_{i<j} (-1)^{s(i,j)} phi(pi[x_i, x_j] ^ ... ^x_i .. ^x_j ..)
               + sum_i    (-1)^{g(i)}   x_i . phi(... ^x_i ...),

    s(i,j) = i + j + |x_i|(|x_1|+..+|x_{i-1}|) + |x_j|(|x_1|+..+|x_{j-1}|+|x_i|),
    g(i)   = i + 1 + |x_i|(|x_1|+..+|x_{i-1}| + |phi|),

with 1-based positions, pi the projection onto the coordinate complement of
h, and lifts of quotient vectors given by that complement.  The complex
splits into even and odd map parities, which the differential preserves.

Cochain bases are found as simultaneous kernels of the equivariance
constraints.  Two exact reductions keep this affordable at scale:
elements acting diagonally on both the monomial basis and M filter
coordinates directly, and when the non-diagonal even part of h is spanned
by paired root vectors (a reductive situation), a weight-zero map killed by
the simple positive root vectors is automatically killed by all of h's even
part.  Every returned basis vector is re-verified against every constraint
exactly; on any failure the full kernel is recomputed without shortcuts.

Images of the differential are expanded in the equivariant basis of the
next degree with an exact consistency assertion; a mismatch raises
ConventionError instead of silently projecting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebras import EVEN, ODD, LieSuperalgebra, SubalgebraSpan, quotient_action
from .errors import AlgebraMismatch, ConventionError, NotASubalgebra
from .linalg import SparseMatrix, kernel_basis_with_free
from .reps import Representation, dual, super_exterior_power, tensor, wedge_insert

Coord = tuple[int, int]  # (module basis index, monomial index)
Cochain = dict[Coord, Fraction]


@dataclass
class CochainSpace:
    """Equivariant cochains in one degree, split by map parity."""

    degree: int
    monomials: tuple[tuple[int, ...], ...]
    monomial_parities: tuple[int, ...]
    basis: tuple[list[Cochain], list[Cochain]]  # index 0: even maps, 1: odd maps
    free_coords: tuple[list[Coord], list[Coord]]

    @property
    def dim_even(self) -> int:
        return len(self.basis[EVEN])

    @property
    def dim_odd(self) -> int:
        return len(self.basis[ODD])

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    def free_map(self, sector: int) -> dict[Coord, int]:
        maps = getattr(self, "_free_maps", None)
        if maps is None:
            maps = [None, None]
            self._free_maps = maps
        if maps[sector] is None:
            maps[sector] = {coord: k for k, coord in enumerate(self.free_coords[sector])}
        return maps[sector]


@dataclass
class CohomologyRow:
    degree: int
    dim_cochains_even: int
    dim_cochains_odd: int
    rank_differential: int
    dim_cohomology_even: int
    dim_cohomology_odd: int

    @property
    def dim_cohomology(self) -> int:
        return self.dim_cohomology_even + self.dim_cohomology_odd

    def to_json_dict(self) -> dict:
        return {
            "p": self.degree,
            "dimC_even": self.dim_cochains_even,
            "dimC_odd": self.dim_cochains_odd,
            "rank_d": self.rank_differential,
            "dimH_even": self.dim_cohomology_even,
            "dimH_odd": self.dim_cohomology_odd,
        }


@dataclass
class CohomologyReport:
    algebra: str
    subalgebra: str
    module: str
    max_degree: int
    rows: list[CohomologyRow]
    all_differentials_zero: bool

    def dims(self) -> list[int]:
        return [r.dim_cohomology for r in self.rows]

    def to_json_dict(self) -> dict:
        return {
            "schema": "superO/1",
            "kind": "cohomology_report",
            "algebra": self.algebra,
            "subalgebra_spec": self.subalgebra,
            "module": self.module,
            "N": self.max_degree,
            "rows": [r.to_json_dict() for r in self.rows],
            "all_differentials_zero": self.all_differentials_zero,
        }


def _apply_sparse_cols(cols: list[dict[int, Fraction]], phi: Cochain, sign: Fraction) -> Cochain:
    """sign * (matrix o phi) acting on the module index of a cochain."""
    out: Cochain = {}
    for (v, w), c in phi.items():
        for v2, a in cols[v].items():
            key = (v2, w)
            s = out.get(key, Fraction(0)) + sign * c * a
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


class RelativeComplex:
    """Cochain complex of a pair (g, h) with coefficients in a g-module."""

    def __init__(self, g: LieSuperalgebra, h: SubalgebraSpan, m: Representation):
        if h.parent is not g:
            raise AlgebraMismatch("subalgebra span does not belong to g")
        if m.algebra is not g:
            raise AlgebraMismatch("coefficient module does not belong to g")
        witness = h.closure_witness()
        if witness is not None:
            raise NotASubalgebra(f"{h.label}: not closed at pair {witness}")
        self.g = g
        self.h = h
        self.m = m

        pivots = set(h.solver.pivot_cols)
        self.complement = [i for i in range(g.dim) if i not in pivots]
        self.complement_pos = {c: t for t, c in enumerate(self.complement)}
        self.quotient_parities = tuple(g.parities[c] for c in self.complement)
        self.quotient_rep = quotient_action(g, h)

        # h acting on M (one matrix per span vector)
        self.m_actions = [m.action_of_vector(vec) for vec in h.vectors]
        self.m_action_cols = [a.col_dicts() for a in self.m_actions]

        # diagonal h vectors filter coordinates; the rest become constraints
        self.diag_idx: list[int] = []
        self.nondiag_idx: list[int] = []
        for i in range(h.dim):
            if self.quotient_rep.actions[i].is_diagonal() and self.m_actions[i].is_diagonal():
                self.diag_idx.append(i)
            else:
                self.nondiag_idx.append(i)
        self.m_eigen = {
            i: [self.m_actions[i].entry(v, v) for v in range(m.dim)] for i in self.diag_idx
        }
        self.q_eigen = {
            i: [self.quotient_rep.actions[i].entry(t, t) for t in range(len(self.complement))]
            for i in self.diag_idx
        }

        self._plan_reduction()
        self._spaces: dict[int, CochainSpace] = {}
        self._lambda: dict[int, Representation] = {}
        self._monos: dict[int, tuple] = {}
        self._diffs: dict[int, tuple[SparseMatrix, SparseMatrix, SparseMatrix]] = {}
        self._proj_brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
        self._smaps: dict[int, tuple] = {}

    def _projected_bracket(self, qa: int, qb: int) -> dict[int, Fraction]:
        """pi[lift(q_a), lift(q_b)] in quotient coordinates, cached."""
        key = (qa, qb)
        hit = self._proj_brackets.get(key)
        if hit is not None:
            return hit
        br = self.g.bracket_sparse(
            {self.complement[qa]: Fraction(1)}, {self.complement[qb]: Fraction(1)}
        )
        out: dict[int, Fraction] = {}
        if br:
            vec = [Fraction(0)] * self.g.dim
            for kk, v in br.items():
                vec[kk] = v
            residual, _ = self.h.solver.reduce(vec)
            out = {self.complement_pos[kk]: v for kk, v in residual.items()}
        self._proj_brackets[key] = out
        return out

    # -- constraint reduction plan -------------------------------------------

    def _plan_reduction(self) -> None:
        """Detect the reductive shortcut for the even non-diagonal part of h.

        Requires every even non-diagonal span vector to be a simultaneous
        ad-eigenvector of the diagonal ones, with nonzero weight, and the
        weight multiset to be symmetric.  Then the simple positive vectors
        suffice as even constraints (weight-zero highest-weight maps are
        invariant); odd constraints are always kept in full.
        """
        h_alg = self.quotient_rep.algebra
        self.reduced_even_idx: list[int] | None = None
        self.odd_nondiag_idx = [i for i in self.nondiag_idx if h_alg.parities[i] == ODD]
        even_nondiag = [i for i in self.nondiag_idx if h_alg.parities[i] == EVEN]
        if not even_nondiag:
            self.reduced_even_idx = []
            return
        roots: dict[int, tuple[Fraction, ...]] = {}
        for x in even_nondiag:
            wt = []
            for t in self.diag_idx:
                terms = h_alg.bracket_basis(t, x)
                if not terms:
                    wt.append(Fraction(0))
                elif len(terms) == 1 and terms[0][0] == x:
                    wt.append(terms[0][1])
                else:
                    return  # not an eigenvector: no shortcut
            wt_t = tuple(wt)
            if not any(wt_t):
                return  # zero weight but non-diagonal action: no shortcut
            roots[x] = wt_t
        values = sorted(roots.values())
        negated = sorted(tuple(-c for c in w) for w in roots.values())
        if values != negated:
            return  # asymmetric (e.g. a Borel): no shortcut
        positive = {w for w in roots.values() if w > tuple(Fraction(0) for _ in w)}
        sums = {tuple(a + b for a, b in zip(u, v)) for u in positive for v in positive}
        simple = positive - sums
        self.reduced_even_idx = [x for x in even_nondiag if roots[x] in simple]

    # -- cochain spaces --------------------------------------------------------

    def lambda_rep(self, p: int) -> Representation:
        """Exterior power with its full action matrices (constraint path only)."""
        if p not in self._lambda:
            self._lambda[p] = super_exterior_power(self.quotient_rep, p)
        return self._lambda[p]

    def monomials(self, p: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """Monomial basis of L^p_s(g/h) with parities (no action matrices)."""
        if p not in self._monos:
            from .reps import super_monomials

            monos = tuple(super_monomials(self.quotient_parities, p))
            pars = tuple(sum(self.quotient_parities[y] for y in mo) % 2 for mo in monos)
            self._monos[p] = (monos, pars)
        return self._monos[p]

    def _constraint_apply(self, i: int, sector: int, lam_rows: list[dict[int, Fraction]], phi: Cochain) -> Cochain:
        """Equivariance defect of phi for the i-th span vector of h."""
        h_alg = self.quotient_rep.algebra
        sign = Fraction(-1) if (h_alg.parities[i] * sector) % 2 else Fraction(1)
        out = _apply_sparse_cols(self.m_action_cols[i], phi, sign)
        for (v, w), c in phi.items():
            for w2, a in lam_rows[w].items():
                key = (v, w2)
                s = out.get(key, Fraction(0)) - c * a
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return out

    def _impose(
        self,
        constraint_ids: list[int],
        sector: int,
        lam_rows_by_id: dict[int, list[dict[int, Fraction]]],
        candidates: list[Cochain],
        free: list[Coord],
    ) -> tuple[list[Cochain], list[Coord]]:
        """Cut the span of candidates by the listed equivariance constraints."""
        if not constraint_ids or not candidates:
            return candidates, free
        row_ids: dict[tuple[int, Coord], int] = {}
        entries = []
        for k, phi in enumerate(candidates):
            for ci in constraint_ids:
                defect = self._constraint_apply(ci, sector, lam_rows_by_id[ci], phi)
                for coord, val in defect.items():
                    rid = row_ids.setdefault((ci, coord), len(row_ids))
                    entries.append((rid, k, val))
        mat = SparseMatrix(len(row_ids), len(candidates), entries)
        combos, free_cols = kernel_basis_with_free(mat)
        out: list[Cochain] = []
        for combo in combos:
            vec: Cochain = {}
            for k, c in enumerate(combo):
                if not c:
                    continue
                for coord, val in candidates[k].items():
                    s = vec.get(coord, Fraction(0)) + c * val
                    if s:
                        vec[coord] = s
                    elif coord in vec:
                        del vec[coord]
            out.append(vec)
        # candidate k carries 1 at its own anchor coordinate and 0 at the other
        # anchors, so anchors of the free candidate columns anchor the output
        return out, [free[k] for k in free_cols]

    def space(self, p: int) -> CochainSpace:
        if p in self._spaces:
            return self._spaces[p]
        monos, mono_par = self.monomials(p)
        lam_rows_by_id: dict[int, list[dict[int, Fraction]]] = {}
        if self.nondiag_idx:
            lam = self.lambda_rep(p)
            lam_rows_by_id = {i: lam.actions[i].row_dicts() for i in self.nondiag_idx}
        # joint eigenvalue keys for bucket matching: a coordinate map E_{vw}
        # commutes with every diagonal element iff the keys agree
        m_buckets: dict[tuple, list[int]] = {}
        for v in range(self.m.dim):
            key = tuple(self.m_eigen[i][v] for i in self.diag_idx)
            m_buckets.setdefault(key, []).append(v)
        mono_keys = []
        for mo in monos:
            mono_keys.append(
                tuple(sum((self.q_eigen[i][y] for y in mo), Fraction(0)) for i in self.diag_idx)
            )
        basis_pair: list[list[Cochain]] = [[], []]
        free_pair: list[list[Coord]] = [[], []]
        for sector in (EVEN, ODD):
            kept: list[Coord] = []
            for w in range(len(monos)):
                for v in m_buckets.get(mono_keys[w], ()):
                    if (self.m.parities[v] + mono_par[w]) % 2 == sector:
                        kept.append((v, w))
            candidates: list[Cochain] = [{coord: Fraction(1)} for coord in kept]
            free: list[Coord] = list(kept)
            if self.reduced_even_idx is not None:
                candidates, free = self._impose(
                    self.reduced_even_idx, sector, lam_rows_by_id, candidates, free
                )
                candidates, free = self._impose(
                    self.odd_nondiag_idx, sector, lam_rows_by_id, candidates, free
                )
            else:
                candidates, free = self._impose(
                    self.nondiag_idx, sector, lam_rows_by_id, candidates, free
                )
            # exact re-verification of every constraint on every basis vector
            bad = False
            for phi in candidates:
                for i in self.nondiag_idx:
                    if self._constraint_apply(i, sector, lam_rows_by_id[i], phi):
                        bad = True
                        break
                if bad:
                    break
            if bad:
                candidates = [{coord: Fraction(1)} for coord in kept]
                free = list(kept)
                candidates, free = self._impose(
                    self.nondiag_idx, sector, lam_rows_by_id, candidates, free
                )
            basis_pair[sector] = candidates
            free_pair[sector] = free
        space = CochainSpace(
            p, tuple(monos), tuple(mono_par), (basis_pair[0], basis_pair[1]),
            (free_pair[0], free_pair[1]),
        )
        self._spaces[p] = space
        return space

    # -- differential ----------------------------------------------------------

    def _structure_maps(self, p: int):
        """Adjacency of the two sums of the differential from C^p to C^{p+1}.

        bracket_adj[w] lists (w1, coeff): contributions phi(...)(w1) taking
        the value phi at monomial w of L^p, via the projected bracket.
        action_adj[w] lists (x, w1, sign): apply the lift of quotient basis
        vector x to phi(monomial w), landing at monomial w1 of L^{p+1}.
        """
        if p in self._smaps:
            return self._smaps[p]
        monos_hi, _ = self.monomials(p + 1)
        monos_lo, _ = self.monomials(p)
        lo_index = {mo: t for t, mo in enumerate(monos_lo)}
        qpar = self.quotient_parities
        bracket_adj: dict[int, list[tuple[int, Fraction]]] = {}
        action_adj: dict[int, list[tuple[int, int, int]]] = {}
        for t1, mo in enumerate(monos_hi):
            pref = [0] * (len(mo) + 1)
            for a, y in enumerate(mo):
                pref[a + 1] = pref[a] + qpar[y]
            for i in range(len(mo)):
                yi = mo[i]
                # second sum: gamma base sign (1-based position i+1)
                base = (i + (qpar[yi] * pref[i])) % 2
                rest_i = mo[:i] + mo[i + 1 :]
                w_lo = lo_index[rest_i]
                action_adj.setdefault(w_lo, []).append((yi, t1, -1 if base else 1))
                for j in range(i + 1, len(mo)):
                    yj = mo[j]
                    proj = self._projected_bracket(yi, yj)
                    if not proj:
                        continue
                    # sigma sign, 1-based positions
                    sig = (
                        (i + 1)
                        + (j + 1)
                        + qpar[yi] * pref[i]
                        + qpar[yj] * (pref[j] + qpar[yi])
                    ) % 2
                    ssign = Fraction(-1) if sig else Fraction(1)
                    rest = mo[:i] + mo[i + 1 : j] + mo[j + 1 :]
                    for q, v in proj.items():
                        ins = wedge_insert(q, rest, qpar)
                        if ins is None:
                            continue
                        sgn, mo2 = ins
                        bracket_adj.setdefault(lo_index[mo2], []).append(
                            (t1, ssign * sgn * v)
                        )
        self._smaps[p] = (bracket_adj, action_adj)
        return self._smaps[p]

    def apply_differential(self, p: int, sector: int, phi: Cochain, maps=None) -> Cochain:
        bracket_adj, action_adj = maps if maps is not None else self._structure_maps(p)
        out: Cochain = {}
        for (v, w), c in phi.items():
            for t1, coeff in bracket_adj.get(w, ()):
                key = (v, t1)
                s = out.get(key, Fraction(0)) + c * coeff
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
            for (x, t1, base) in action_adj.get(w, ()):
                sgn = base
                if (self.quotient_parities[x] * sector) % 2:
                    sgn = -sgn
                cols = self._m_cols_by_complement(x)
                for v2, a in cols[v].items():
                    key = (v2, t1)
                    s = out.get(key, Fraction(0)) + sgn * c * a
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
        return out

    def _m_cols_by_complement(self, q: int) -> list[dict[int, Fraction]]:
        cache = getattr(self, "_mc_cache", None)
        if cache is None:
            cache = {}
            self._mc_cache = cache
        if q not in cache:
            cache[q] = self.m.actions[self.complement[q]].col_dicts()
        return cache[q]

    def _expand(self, target: Cochain, space: CochainSpace, sector: int) -> list[tuple[int, Fraction]]:
        """Coordinates of a cochain in the equivariant basis, verified exactly.

        Candidate coefficients are read off at the anchor coordinates; the
        expansion is then checked against every coordinate of the target,
        so any image outside the span aborts the computation.
        """
        fmap = space.free_map(sector)
        coeffs = []
        residual = dict(target)
        for coord, c in target.items():
            k = fmap.get(coord)
            if k is not None and c:
                coeffs.append((k, c))
                for cc, val in space.basis[sector][k].items():
                    s = residual.get(cc, Fraction(0)) - c * val
                    if s:
                        residual[cc] = s
                    elif cc in residual:
                        del residual[cc]
        if residual:
            raise ConventionError(
                "differential image escapes the equivariant span "
                f"(degree {space.degree}, sector {sector})"
            )
        return coeffs

    def differential(self, p: int) -> SparseMatrix:
        return self._differential_blocks(p)[0]

    def ddzero(self, p: int) -> bool:
        """Exact check that d(d(phi)) = 0 for every basis cochain of C^p.

        Applies the differential twice as raw cochain maps, so degree p+2
        only contributes its monomial combinatorics (no equivariant basis
        is needed there).  Equivalent to the vanishing of the composite
        matrix, since expansion in an equivariant basis is injective.
        """
        src = self.space(p)
        dst = self.space(p + 1)
        maps_lo = self._structure_maps(p)
        maps_hi = self._structure_maps(p + 1)
        for sector in (EVEN, ODD):
            for phi in src.basis[sector]:
                image = self.apply_differential(p, sector, phi, maps_lo)
                self._expand(image, dst, sector)  # consistency: image lies in C^{p+1}
                if self.apply_differential(p + 1, sector, image, maps_hi):
                    return False
        return True

    def _differential_blocks(self, p: int) -> tuple[SparseMatrix, SparseMatrix, SparseMatrix]:
        """(full matrix, even block, odd block) of d^p: C^p -> C^{p+1}."""
        if p in self._diffs:
            return self._diffs[p]
        src = self.space(p)
        dst = self.space(p + 1)
        maps = self._structure_maps(p)
        blocks = []
        entries_full = []
        col_off = 0
        row_off = 0
        for sector in (EVEN, ODD):
            entries = []
            for k, phi in enumerate(src.basis[sector]):
                image = self.apply_differential(p, sector, phi, maps)
                for r, c in self._expand(image, dst, sector):
                    entries.append((r, k, c))
            block = SparseMatrix(len(dst.basis[sector]), len(src.basis[sector]), entries)
            blocks.append(block)
            for r, c, v in block.entries():
                entries_full.append((row_off + r, col_off + c, v))
            col_off = len(src.basis[EVEN])
            row_off = len(dst.basis[EVEN])
        full = SparseMatrix(dst.dim, src.dim, entries_full)
        result = (full, blocks[0], blocks[1])
        self._diffs[p] = result
        return result

    def report(self, max_degree: int) -> CohomologyReport:
        from .linalg import rank as mat_rank

        ranks_even = []
        ranks_odd = []
        all_zero = True
        for p in range(max_degree + 1):
            full, be, bo = self._differential_blocks(p)
            if not full.is_zero():
                all_zero = False
            ranks_even.append(mat_rank(be))
            ranks_odd.append(mat_rank(bo))
        rows = []
        for p in range(max_degree + 1):
            sp = self.space(p)
            prev_e = ranks_even[p - 1] if p > 0 else 0
            prev_o = ranks_odd[p - 1] if p > 0 else 0
            he = sp.dim_even - ranks_even[p] - prev_e
            ho = sp.dim_odd - ranks_odd[p] - prev_o
            rows.append(
                CohomologyRow(p, sp.dim_even, sp.dim_odd, ranks_even[p] + ranks_odd[p], he, ho)
            )
        return CohomologyReport(
            self.g.name,
            self.h.label,
            self.m.name,
            max_degree,
            rows,
            all_zero,
        )


# ---------------------------------------------------------------------------
# module-level operations


def relative_cochains(
    g: LieSuperalgebra, h: SubalgebraSpan, m: Representation, p: int
) -> CochainSpace:
    return RelativeComplex(g, h, m).space(p)


def differential(g: LieSuperalgebra, h: SubalgebraSpan, m: Representation, p: int) -> SparseMatrix:
    return RelativeComplex(g, h, m).differential(p)


def cohomology(
    g: LieSuperalgebra, h: SubalgebraSpan, m: Representation, max_degree: int
) -> CohomologyReport:
    return RelativeComplex(g, h, m).report(max_degree)


def relative_ext(
    g: LieSuperalgebra,
    h: SubalgebraSpan,
    m: Representation,
    n: Representation,
    max_degree: int,
) -> CohomologyReport:
    """Ext between modules as cohomology with coefficients in dual(m) (x) n."""
    coeff = tensor(dual(m), n)
    report = cohomology(g, h, coeff, max_degree)
    report.module = f"Ext({m.name},{n.name})"
    return report

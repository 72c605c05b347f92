"""Exact finite root systems of types B_l, C_l, F4, G2.

Each type is realized in a fixed ambient Q^m with an overall rational form
scale c, so that (x|y) = c * sum_i x_i y_i and the highest root has squared
length 2.  All roots, lattices and Weyl group elements carry exact rational
coordinates; the full Weyl group is materialized once (at most 1152 elements
for F4 at the supported ranks).

Realizations:
    B_l: m = l, c = 1;    long +-e_i+-e_j, short +-e_i
    C_l: m = l, c = 1/2;  long +-2e_i,    short +-e_i+-e_j
    F_4: m = 4, c = 1;    long +-e_i+-e_j, short +-e_i, (+-e1+-e2+-e3+-e4)/2
    G_2: m = 3 (sum-zero plane), c = 1/3
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache

from .errors import NotASublattice, UnsupportedType
from .exactlin import (
    Matrix,
    Vector,
    det,
    from_columns,
    identity,
    invert,
    is_integral,
    mat_mul,
    mat_vec,
    smith_normal_form,
    solve,
    vec,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vec,
)

MAX_BC_RANK = 6  # desk-scale cap; |W| = 2^l l! grows fast beyond this

# A# = X_N^(r) data per family: (N, twisted label pattern)
_TWIST = {
    "B": lambda l: (l + 1, f"D_{l + 1}^(2)"),
    "C": lambda l: (2 * l - 1, f"A_{2 * l - 1}^(2)"),
    "F": lambda l: (6, "E_6^(2)"),
    "G": lambda l: (4, "D_4^(3)"),
}


@dataclass(frozen=True)
class LieType:
    """One of the non-simply-laced families, with rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("B", "C", "F", "G"):
            raise UnsupportedType(f"family {self.family!r} is not one of B, C, F, G")
        if self.family in ("B", "C") and not 2 <= self.rank <= MAX_BC_RANK:
            raise UnsupportedType(f"{self.family}_{self.rank}: rank must be in [2, {MAX_BC_RANK}]")
        if self.family == "F" and self.rank != 4:
            raise UnsupportedType("F family has rank 4 only")
        if self.family == "G" and self.rank != 2:
            raise UnsupportedType("G family has rank 2 only")

    @property
    def r_v(self) -> int:
        """Lacety: ratio of long to short squared root lengths."""
        return 3 if self.family == "G" else 2

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"


def _roots_bcfg(lt: LieType) -> tuple[int, Q, list[tuple[Vector, bool]], list[Vector]]:
    """Ambient dim, form scale, roots tagged (vector, is_long), simple roots."""
    l = lt.rank
    if lt.family == "B":
        m, c = l, Q(1)
        roots = []
        for i, j in itertools.combinations(range(l), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [Q(0)] * l
                    v[i], v[j] = Q(si), Q(sj)
                    roots.append((tuple(v), True))
        for i in range(l):
            for s in (1, -1):
                v = [Q(0)] * l
                v[i] = Q(s)
                roots.append((tuple(v), False))
        simple = [tuple(Q(1) if k == i else Q(-1) if k == i + 1 else Q(0) for k in range(l)) for i in range(l - 1)]
        simple.append(tuple(Q(1) if k == l - 1 else Q(0) for k in range(l)))
        return m, c, roots, simple
    if lt.family == "C":
        m, c = l, Q(1, 2)
        roots = []
        for i in range(l):
            for s in (1, -1):
                v = [Q(0)] * l
                v[i] = Q(2 * s)
                roots.append((tuple(v), True))
        for i, j in itertools.combinations(range(l), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [Q(0)] * l
                    v[i], v[j] = Q(si), Q(sj)
                    roots.append((tuple(v), False))
        simple = [tuple(Q(1) if k == i else Q(-1) if k == i + 1 else Q(0) for k in range(l)) for i in range(l - 1)]
        simple.append(tuple(Q(2) if k == l - 1 else Q(0) for k in range(l)))
        return m, c, roots, simple
    if lt.family == "F":
        m, c = 4, Q(1)
        roots = []
        for i, j in itertools.combinations(range(4), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [Q(0)] * 4
                    v[i], v[j] = Q(si), Q(sj)
                    roots.append((tuple(v), True))
        for i in range(4):
            for s in (1, -1):
                v = [Q(0)] * 4
                v[i] = Q(s)
                roots.append((tuple(v), False))
        for signs in itertools.product((1, -1), repeat=4):
            roots.append((tuple(Q(s, 2) for s in signs), False))
        simple = [
            vec([0, 1, -1, 0]),
            vec([0, 0, 1, -1]),
            vec([0, 0, 0, 1]),
            (Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)),
        ]
        return m, c, roots, simple
    # G2 in the sum-zero plane of Q^3.
    m, c = 3, Q(1, 3)
    short = [vec([1, -1, 0]), vec([0, 1, -1]), vec([1, 0, -1])]
    long = [vec([2, -1, -1]), vec([-1, 2, -1]), vec([-1, -1, 2])]
    roots = [(v, False) for v in short] + [(vec_scale(-1, v), False) for v in short]
    roots += [(v, True) for v in long] + [(vec_scale(-1, v), True) for v in long]
    simple = [vec([1, -1, 0]), vec([-2, 1, 1])]
    return m, c, roots, simple


@dataclass(frozen=True)
class RootSystem:
    """Immutable exact datum of one finite root system (safe to share)."""

    lie_type: LieType
    ambient_dim: int
    form_scale: Q
    roots: tuple[Vector, ...]
    long_flags: tuple[bool, ...]
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    theta: Vector
    theta_s: Vector
    rho: Vector
    rho_v: Vector
    fundamental_weights: tuple[Vector, ...]
    fundamental_coweights: tuple[Vector, ...]
    coxeter: int
    dual_coxeter: int
    dim_g: int
    twist_n: int
    twisted_label: str
    weyl: tuple[Matrix, ...]
    weyl_signs: tuple[int, ...]
    lattice_q: Matrix        # columns: simple roots
    lattice_qv: Matrix       # columns: simple coroots
    lattice_p: Matrix        # columns: fundamental weights
    lattice_pv: Matrix       # columns: fundamental coweights
    lattice_rq: Matrix       # columns: r_v * simple roots
    _weyl_index: dict = field(repr=False, hash=False, compare=False, default_factory=dict)

    # -- bilinear form -------------------------------------------------------

    def pairing(self, x: Vector, y: Vector) -> Q:
        """Invariant form (x|y) = c * standard dot product, exact."""
        if len(x) != len(y) or len(x) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return self.form_scale * sum((a * b for a, b in zip(x, y)), Q(0))

    def pairing_c(self, x: Vector, z) -> complex:
        """Form against a complex vector (floats); used by evaluators only."""
        return float(self.form_scale) * sum(float(a) * b for a, b in zip(x, z))

    def coroot(self, alpha: Vector) -> Vector:
        n2 = self.pairing(alpha, alpha)
        return vec_scale(Q(2) / n2, alpha)

    def norm2(self, x: Vector) -> Q:
        return self.pairing(x, x)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def r_v(self) -> int:
        return self.lie_type.r_v

    @property
    def simple_coroots(self) -> tuple[Vector, ...]:
        return tuple(self.coroot(a) for a in self.simple_roots)

    @property
    def theta_s_v(self) -> Vector:
        return self.coroot(self.theta_s)

    @property
    def weyl_order(self) -> int:
        return len(self.weyl)

    # -- Weyl group ----------------------------------------------------------

    def reflect(self, x: Vector, alpha: Vector) -> Vector:
        return vec_sub(x, vec_scale(self.pairing(x, self.coroot(alpha)), alpha))

    def weyl_index(self, w: Matrix) -> int:
        return self._weyl_index[w]

    def weyl_sign(self, w: Matrix) -> int:
        return self.weyl_signs[self._weyl_index[w]]

    def weyl_orbit(self, v: Vector) -> set[Vector]:
        """Orbit of an exact vector under the full Weyl group."""
        seen = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for a in self.simple_roots:
                y = self.reflect(x, a)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    # -- root bookkeeping ----------------------------------------------------

    def root_coords(self, alpha: Vector) -> Vector | None:
        """Coordinates of alpha in the simple-root basis, exact (None if outside the span)."""
        return solve(self.lattice_q, alpha)

    def is_positive_root_vector(self, alpha: Vector) -> bool:
        coords = self.root_coords(alpha)
        return coords is not None and all(cc >= 0 for cc in coords)

    def is_positive_coroot(self, cv: Vector) -> bool:
        coords = solve(self.lattice_qv, cv)
        return coords is not None and all(cc >= 0 for cc in coords)

    def is_long(self, alpha: Vector) -> bool:
        return self.norm2(alpha) == 2

    # -- lattices ------------------------------------------------------------

    def lattice_coords(self, basis: Matrix, v: Vector) -> Vector | None:
        return solve(basis, v)

    def in_lattice(self, basis: Matrix, v: Vector) -> bool:
        x = solve(basis, v)
        return x is not None and is_integral(x)

    def lattice_index(self, l1: Matrix, l2: Matrix) -> int:
        """Index [l1 : l2] for a sublattice l2 of l1 (basis-column matrices)."""
        cols = []
        for b in columns_of(l2):
            x = solve(l1, b)
            if x is None or not is_integral(x):
                raise NotASublattice("second lattice is not contained in the first")
            cols.append(x)
        d = det(from_columns(cols))
        if d == 0:
            raise NotASublattice("degenerate change of basis")
        return abs(int(d))

    def coset_data(self, l1: Matrix, l2: Matrix):
        """Smith-style coset structure of l1/l2: (new basis C, diagonal d).

        Representatives are C @ r for r in prod(range(d_i)); canonical
        reduction of any v in l1 is componentwise r_i = y_i mod d_i
        with y the C-coordinates of v.
        """
        cols = []
        for b in columns_of(l2):
            x = solve(l1, b)
            if x is None or not is_integral(x):
                raise NotASublattice("second lattice is not contained in the first")
            cols.append(tuple(int(e) for e in x))
        x_mat = [list(row) for row in zip(*cols)]  # columns -> integer matrix
        u, d, _v = smith_normal_form(x_mat)
        u_inv = invert(mat_of_int(u))
        c_basis = mat_mul(l1, u_inv)
        diag = [int(d[i][i]) for i in range(len(d))]
        return c_basis, diag

    def coset_representatives(self, l1: Matrix, l2: Matrix) -> list[Vector]:
        """Deterministic canonical representatives of l1/l2."""
        c_basis, diag = self.coset_data(l1, l2)
        reps = []
        for r in itertools.product(*(range(di) for di in diag)):
            reps.append(mat_vec(c_basis, vec(r)))
        return reps

    def coset_canonical(self, l1: Matrix, l2: Matrix, v: Vector) -> Vector:
        """Canonical representative of v + l2 inside l1 (v must lie in l1)."""
        c_basis, diag = self.coset_data(l1, l2)
        y = solve(c_basis, v)
        if y is None or not is_integral(y):
            raise NotASublattice("vector not in the ambient lattice")
        r = vec(int(e) % di for e, di in zip(y, diag))
        return mat_vec(c_basis, r)

    # -- serialization -------------------------------------------------------

    def datum(self) -> dict:
        return {
            "type": self.lie_type.label,
            "r_v": self.r_v,
            "h": self.coxeter,
            "h_dual": self.dual_coxeter,
            "dim": self.dim_g,
            "form_scale": str(self.form_scale),
            "simple_roots": [[str(e) for e in a] for a in self.simple_roots],
            "theta": [str(e) for e in self.theta],
            "theta_s": [str(e) for e in self.theta_s],
            "rho": [str(e) for e in self.rho],
            "rho_v": [str(e) for e in self.rho_v],
            "weyl_order": self.weyl_order,
            "twisted_label": self.twisted_label,
        }


def columns_of(a: Matrix) -> tuple[Vector, ...]:
    return tuple(zip(*a))


def mat_of_int(rows) -> Matrix:
    return tuple(tuple(Q(e) for e in row) for row in rows)


def _reflection_matrix(m: int, c: Q, alpha: Vector) -> Matrix:
    alpha_v = vec_scale(Q(2) / (c * sum((a * a for a in alpha), Q(0))), alpha)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            e = Q(1) if i == j else Q(0)
            row.append(e - c * alpha[i] * alpha_v[j])
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def build_root_system(lt: LieType) -> RootSystem:
    """Construct the full exact datum for a supported type (cached)."""
    m, c, tagged, simple = _roots_bcfg(lt)
    l = lt.rank
    roots = tuple(r for r, _ in tagged)
    long_flags = tuple(flag for _, flag in tagged)

    q_basis = from_columns(tuple(simple))

    def pair(x, y):
        return c * sum((a * b for a, b in zip(x, y)), Q(0))

    def coroot(a):
        return vec_scale(Q(2) / pair(a, a), a)

    # Positivity via simple-root coordinates.
    pos = []
    for r in roots:
        coords = solve(q_basis, r)
        assert coords is not None, "root outside simple-root span"
        if all(e >= 0 for e in coords):
            pos.append(r)
    positive = tuple(sorted(pos))

    def height(a):
        return sum(solve(q_basis, a))

    longs = [r for r, f in tagged if f and r in set(positive)]
    shorts = [r for r, f in tagged if not f and r in set(positive)]
    theta = max(longs, key=height)
    theta_s = max(shorts, key=height)

    rho = vec_scale(Q(1, 2), _vec_sum(positive, m))
    rho_v = vec_scale(Q(1, 2), _vec_sum([coroot(a) for a in positive], m))

    h = 1 + int(height(theta))
    # Dual Coxeter number: 1 + height of theta-dual in the simple-coroot basis.
    qv_basis = from_columns(tuple(coroot(a) for a in simple))
    theta_v_coords = solve(qv_basis, coroot(theta))
    h_dual = 1 + int(sum(theta_v_coords))

    # Fundamental (co)weights: duals to simple coroots (resp. roots) in the root span.
    span = tuple(simple)
    gram_v = tuple(tuple(pair(si, coroot(sj)) for sj in simple) for si in span)
    gram_r = tuple(tuple(pair(si, sj) for sj in simple) for si in span)
    fw = []
    fcw = []
    for i in range(l):
        e_i = tuple(Q(1) if j == i else Q(0) for j in range(l))
        x = solve(gram_v, e_i)
        fw.append(_vec_comb(span, x, m))
        y = solve(gram_r, e_i)
        fcw.append(_vec_comb(span, y, m))

    # Full Weyl group by closure of simple reflections, with det signs.
    gens = [_reflection_matrix(m, c, a) for a in simple]
    ident = identity(m)
    weyl_list = [ident]
    signs = [1]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for w in frontier:
            s_w = signs[index[w]]
            for g in gens:
                wg = mat_mul(g, w)
                if wg not in index:
                    index[wg] = len(weyl_list)
                    weyl_list.append(wg)
                    signs.append(-s_w)
                    new_frontier.append(wg)
        frontier = new_frontier

    n_twist, label = _TWIST[lt.family](l)

    rs = RootSystem(
        lie_type=lt,
        ambient_dim=m,
        form_scale=c,
        roots=roots,
        long_flags=long_flags,
        simple_roots=tuple(simple),
        positive_roots=positive,
        theta=theta,
        theta_s=theta_s,
        rho=rho,
        rho_v=rho_v,
        fundamental_weights=tuple(fw),
        fundamental_coweights=tuple(fcw),
        coxeter=h,
        dual_coxeter=h_dual,
        dim_g=l + len(roots),
        twist_n=n_twist,
        twisted_label=label,
        weyl=tuple(weyl_list),
        weyl_signs=tuple(signs),
        lattice_q=q_basis,
        lattice_qv=from_columns(tuple(coroot(a) for a in simple)),
        lattice_p=from_columns(tuple(fw)),
        lattice_pv=from_columns(tuple(fcw)),
        lattice_rq=from_columns(tuple(vec_scale(lt.r_v, a) for a in simple)),
        _weyl_index=index,
    )
    _check_invariants(rs)
    return rs


def _vec_sum(vs, m: int) -> Vector:
    total = zero_vec(m)
    for v in vs:
        total = vec_add(total, v)
    return total


def _vec_comb(basis, coeffs, m: int) -> Vector:
    total = zero_vec(m)
    for b, cc in zip(basis, coeffs):
        total = vec_add(total, vec_scale(cc, b))
    return total


def _check_invariants(rs: RootSystem) -> None:
    assert rs.pairing(rs.theta, rs.theta) == 2
    assert rs.pairing(rs.theta_s, rs.theta_s) == Q(2, rs.r_v)
    for a, flag in zip(rs.roots, rs.long_flags):
        assert rs.pairing(a, a) == (2 if flag else Q(2, rs.r_v))
    for a in rs.simple_roots:
        assert rs.pairing(rs.rho, rs.coroot(a)) == 1
        assert rs.pairing(rs.rho_v, a) == 1
    # r_v Q inside P-dual, r_v rho inside P-dual
    for col in columns_of(rs.lattice_rq):
        assert rs.in_lattice(rs.lattice_pv, col)
    assert rs.in_lattice(rs.lattice_pv, vec_scale(rs.r_v, rs.rho))
    assert 2 * len(rs.positive_roots) == len(rs.roots)

"""Exact complex character tables and class-function arithmetic.

Tables are computed by Dixon's method: the class-algebra structure constants
are simultaneously diagonalised over a prime field F_p with p = 1 (mod e),
e the group exponent and p > 2|G|, and the mod-p character values are lifted
to exact eigenvalue multisets of e-th roots of unity by a discrete Fourier
inversion over F_p.  No floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .cyclo import Cyclotomic
from .errors import GroupMismatch, NotASubgroup
from .groups import Group, power_map
from .perms import Permutation


# -- values ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CyclotomicValue:
    """A character value stored as the eigenvalue multiset of a group element:
    ``multiplicities`` records, for each residue a mod ``order``, how many
    eigenvalues zeta_order^a occur.  Two values compare equal when they agree
    as cyclotomic numbers (i.e. after reduction by the cyclotomic relations).
    """

    order: int
    multiplicities: tuple[tuple[int, int], ...]

    def __post_init__(self):
        total = Cyclotomic.zero(self.order)
        for exp, count in self.multiplicities:
            if count < 0:
                raise ValueError("negative eigenvalue multiplicity")
            total = total + Cyclotomic.root(self.order, exp).scale(count)
        object.__setattr__(self, "_number", total)

    @classmethod
    def from_dict(cls, order: int, mapping) -> "CyclotomicValue":
        items = tuple(sorted((int(a) % order, int(m)) for a, m in mapping.items() if m))
        return cls(order, items)

    def as_cyclotomic(self) -> Cyclotomic:
        return self._number

    def as_rational(self) -> Fraction | None:
        return self._number.as_rational()

    def degree(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def sort_key(self):
        return self.multiplicities

    def restricted(self, n: int) -> dict[int, int]:
        """Relabel the eigenvalue exponents modulo n for an element of order n."""
        step = self.order // n
        if self.order % n:
            raise ValueError("n must divide the ambient order")
        out: dict[int, int] = {}
        for exp, count in self.multiplicities:
            if exp % step:
                raise ValueError("value is not supported on n-th roots of unity")
            out[exp // step] = out.get(exp // step, 0) + count
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicValue):
            return self._number == other._number
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self._number == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._number)

    def __repr__(self) -> str:
        body = ",".join(f"{a}:{m}" for a, m in self.multiplicities)
        return f"CyclotomicValue(e={self.order}, {{{body}}})"


def _as_cyclotomic(value, order: int) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, CyclotomicValue):
        return value.as_cyclotomic()
    return Cyclotomic.from_rational(order, value)


# -- class functions -----------------------------------------------------------

@dataclass(frozen=True)
class ClassFunction:
    """Values indexed by conjugacy class, in the group's canonical class order.

    Values may be ints, Fractions, Cyclotomic numbers, or CyclotomicValue
    eigenvalue multisets; arithmetic promotes as needed.
    """

    group: Group
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.group.classes):
            raise ValueError("one value per conjugacy class required")

    def value_cyc(self, class_index: int) -> Cyclotomic:
        return _as_cyclotomic(self.values[class_index], self.group.exponent)

    def rational_values(self) -> tuple[Fraction, ...]:
        out = []
        for i in range(len(self.values)):
            q = self.value_cyc(i).as_rational()
            if q is None:
                raise ValueError("class function is not rational-valued")
            out.append(q)
        return tuple(out)

    def at(self, g: Permutation):
        return self.values[self.group.class_index(g)]


@dataclass(frozen=True)
class CharacterTable:
    group: Group
    irreducibles: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class RationalCharacter:
    """A Galois orbit of complex irreducibles: psi = m * (sum of the orbit)."""

    psi: ClassFunction
    orbit: tuple[int, ...]
    schur_index: int
    multiplicity_n: int
    schur_index_unverified: bool = False

    @property
    def constituent_degree(self) -> int:
        return self.schur_index * self.multiplicity_n


# -- linear algebra over F_p ------------------------------------------------

def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _kernel(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat[0])
    red, pivots = _rref(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-red[r][f]) % p
        basis.append(v)
    return basis


def _det(mat: list[list[int]], p: int) -> int:
    m = [list(r) for r in mat]
    n = len(m)
    det = 1
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if m[i][c] % p:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = det * m[c][c] % p
        inv = pow(m[c][c], -1, p)
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[c])]
    return det % p


def _poly_from_points(xs: list[int], ys: list[int], p: int) -> list[int]:
    """Lagrange interpolation; coefficients lowest degree first."""
    n = len(xs)
    coeffs = [0] * n
    for i in range(n):
        num = [1]  # prod_{j != i} (x - x_j)
        denom = 1
        for j in range(n):
            if j == i:
                continue
            new = [0] * (len(num) + 1)
            for k, a in enumerate(num):
                new[k] = (new[k] - xs[j] * a) % p
                new[k + 1] = (new[k + 1] + a) % p
            num = new
            denom = denom * (xs[i] - xs[j]) % p
        scale = ys[i] * pow(denom, -1, p) % p
        for k, a in enumerate(num):
            coeffs[k] = (coeffs[k] + scale * a) % p
    return coeffs


def _eigenvalues(mat: list[list[int]], p: int) -> list[int]:
    """All eigenvalues in F_p of a square matrix, ascending."""
    m = len(mat)
    xs = list(range(m + 1))
    ys = []
    for c in xs:
        shifted = [[(c * (i == j) - mat[i][j]) % p for j in range(m)] for i in range(m)]
        ys.append(_det(shifted, p))
    poly = _poly_from_points(xs, ys, p)
    roots = []
    for lam in range(p):
        acc = 0
        for a in reversed(poly):
            acc = (acc * lam + a) % p
        if acc == 0:
            roots.append(lam)
    return roots


def _matvec(mat: list[list[int]], vec, p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) % p for row in mat]


def _coords_in_basis(basis: list, targets: list, p: int) -> list[list[int]]:
    """Coordinates of each target vector in the span of ``basis``."""
    k = len(basis[0])
    m = len(basis)
    rows = [[basis[s][i] for s in range(m)] + [t[i] for t in targets] for i in range(k)]
    red, pivots = _rref(rows, p)
    assert pivots[:m] == list(range(m)), "basis vectors are dependent"
    coords = []
    for t in range(len(targets)):
        coords.append([red[r][m + t] for r in range(m)])
    return coords


# -- Dixon's method ------------------------------------------------------------

def _dixon_prime(order: int, exponent: int) -> int:
    p = 2 * order + 1
    while True:
        if p % exponent == 1 and _is_prime(p):
            return p
        p += 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _primitive_root(p: int) -> int:
    factors = set()
    m = p - 1
    q = 2
    while q * q <= m:
        while m % q == 0:
            factors.add(q)
            m //= q
        q += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError("no primitive root found")  # pragma: no cover


def _class_constants(group: Group) -> list[list[list[int]]]:
    k = len(group.classes)
    mats = [[[0] * k for _ in range(k)] for _ in range(k)]
    for l, z in enumerate(group.class_reps):
        for i in range(k):
            row = mats[i]
            for x in group.classes[i]:
                j = group.class_index(x.inverse() * z)
                row[j][l] += 1
    return mats


def _central_characters(group: Group, p: int) -> list[list[int]]:
    """Common eigenvectors of the class-algebra matrices, normalised so the
    identity-class coordinate is 1; these are the central characters mod p."""
    k = len(group.classes)
    mats = _class_constants(group)
    spaces: list[list[list[int]]] = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for A in mats[1:]:
        if all(len(s) == 1 for s in spaces):
            break
        Amod = [[v % p for v in row] for row in A]
        refined: list[list[list[int]]] = []
        for basis in spaces:
            if len(basis) == 1:
                refined.append(basis)
                continue
            images = [_matvec(Amod, v, p) for v in basis]
            coords = _coords_in_basis(basis, images, p)
            m = len(basis)
            # restriction matrix: column t = coords of A * basis[t]
            R = [[coords[t][s] for t in range(m)] for s in range(m)]
            lams = _eigenvalues(R, p)
            covered = 0
            for lam in lams:
                shifted = [[(R[i][j] - (lam if i == j else 0)) % p for j in range(m)] for i in range(m)]
                kern_basis = _kernel(shifted, p)
                if not kern_basis:
                    continue
                covered += len(kern_basis)
                ambient = []
                for coeffs in kern_basis:
                    v = [0] * k
                    for t, c in enumerate(coeffs):
                        if c:
                            for idx in range(k):
                                v[idx] = (v[idx] + c * basis[t][idx]) % p
                    ambient.append(v)
                refined.append(ambient)
            assert covered == m, "class matrix failed to diagonalise"
        spaces = refined
    assert all(len(s) == 1 for s in spaces), "central characters not separated"
    omegas = []
    for basis in spaces:
        v = basis[0]
        assert v[0] % p, "eigenvector vanishes on the identity class"
        inv = pow(v[0], -1, p)
        omegas.append([x * inv % p for x in v])
    return omegas


@lru_cache(maxsize=None)
def character_table(group: Group) -> CharacterTable:
    """Complete exact character table, canonically ordered.

    Rows are sorted by degree, then lexicographically by the eigenvalue
    multisets of their values under the canonical class order.
    """
    k = len(group.classes)
    e = group.exponent
    n_g = group.order
    p = _dixon_prime(n_g, e)
    omegas = _central_characters(group, p)
    inverse_class = power_map(group, -1)
    size_inv = [pow(s, -1, p) for s in group.class_sizes]

    rows = []
    for omega in omegas:
        s = sum(omega[i] * omega[inverse_class[i]] % p * size_inv[i] for i in range(k)) % p
        d_sq = n_g * pow(s, -1, p) % p
        d = isqrt(d_sq)
        assert d * d == d_sq and 1 <= d <= isqrt(n_g), "degree recovery failed"
        chibar = [d * omega[i] % p * size_inv[i] % p for i in range(k)]
        rows.append((d, chibar))

    assert sum(d * d for d, _ in rows) == n_g, "degrees violate sum of squares"

    z = pow(_primitive_root(p), (p - 1) // e, p)
    # class-power tables: class index of rep^t
    power_classes = []
    for rep in group.class_reps:
        n = rep.order()
        power_classes.append([group.class_index(rep ** t) for t in range(n)])

    characters = []
    for d, chibar in rows:
        values = []
        for c, rep in enumerate(group.class_reps):
            n = rep.order()
            zn = pow(z, e // n, p)
            n_inv = pow(n, -1, p)
            mult: dict[int, int] = {}
            for alpha in range(n):
                total = 0
                for t in range(n):
                    total += chibar[power_classes[c][t]] * pow(zn, (-alpha * t) % n, p)
                m_alpha = total % p * n_inv % p
                assert m_alpha <= d, "eigenvalue multiplicity failed to lift"
                if m_alpha:
                    mult[alpha * (e // n) % e] = m_alpha
            assert sum(mult.values()) == d, "eigenvalue multiplicities do not sum to degree"
            values.append(CyclotomicValue.from_dict(e, mult))
        characters.append(ClassFunction(group, tuple(values)))

    characters.sort(key=lambda cf: (cf.values[0].degree(), tuple(v.sort_key() for v in cf.values)))
    degrees = tuple(cf.values[0].degree() for cf in characters)
    return CharacterTable(group, tuple(characters), degrees)


# -- operations on class functions ---------------------------------------------

def inner_product(a: ClassFunction, b: ClassFunction) -> Fraction:
    """<a, b> = (1/|G|) sum over classes of size * a * conj(b); exact rational."""
    if a.group != b.group:
        raise GroupMismatch("class functions live over different groups")
    group = a.group
    total = Cyclotomic.zero(group.exponent)
    for c in range(len(group.classes)):
        term = a.value_cyc(c) * b.value_cyc(c).conjugate()
        total = total + term.scale(group.class_sizes[c])
    q = total.scale(Fraction(1, group.order)).as_rational()
    if q is None:
        raise ValueError("inner product is not rational")
    return q


def induced_trivial(group: Group, subgroup) -> ClassFunction:
    """Character of G induced from the trivial character of a subgroup."""
    sub = frozenset(subgroup)
    if not sub or any(h not in group for h in sub):
        raise NotASubgroup("subgroup elements must belong to the group")
    for a in sub:
        if a.inverse() not in sub:
            raise NotASubgroup("set is not closed under inversion")
        for b in sub:
            if a * b not in sub:
                raise NotASubgroup("set is not closed under composition")
    h = len(sub)
    values = []
    for rep in group.class_reps:
        count = sum(1 for x in group.elements if x.inverse() * rep * x in sub)
        assert count % h == 0
        values.append(count // h)
    return ClassFunction(group, tuple(values))


def frobenius_schur(table: CharacterTable, index: int) -> int:
    """(1/|G|) sum of chi(g^2); -1, 0 or 1."""
    group = table.group
    squares = power_map(group, 2)
    total = Cyclotomic.zero(group.exponent)
    chi = table.irreducibles[index]
    for c in range(len(group.classes)):
        total = total + chi.value_cyc(squares[c]).scale(group.class_sizes[c])
    q = total.scale(Fraction(1, group.order)).as_rational()
    assert q is not None and q.denominator == 1
    fs = int(q)
    assert fs in (-1, 0, 1)
    return fs


@lru_cache(maxsize=None)
def rational_characters(table: CharacterTable) -> tuple[RationalCharacter, ...]:
    """Galois orbits of the complex irreducibles, one rational character each.

    The Schur index is set to 2 exactly for real-valued orbits with
    Frobenius-Schur indicator -1 (the quaternionic case); non-real orbits of
    degree > 1 are flagged ``schur_index_unverified`` since the heuristic does
    not certify their index.
    """
    group = table.group
    e = group.exponent
    k = len(group.classes)
    units = [u for u in range(1, e + 1) if gcd(u, e) == 1]
    key_to_index = {
        tuple(cf.value_cyc(c) for c in range(k)): i
        for i, cf in enumerate(table.irreducibles)
    }
    power_maps = {u: power_map(group, u) for u in units}

    seen: set[int] = set()
    out = []
    for i, cf in enumerate(table.irreducibles):
        if i in seen:
            continue
        orbit = set()
        for u in units:
            pm = power_maps[u]
            twisted = tuple(cf.value_cyc(pm[c]) for c in range(k))
            j = key_to_index[twisted]
            orbit.add(j)
        orbit_t = tuple(sorted(orbit))
        seen.update(orbit_t)
        fs = frobenius_schur(table, i)
        schur = 2 if fs == -1 else 1
        degree = table.degrees[i]
        unverified = fs == 0 and degree > 1
        values = []
        for c in range(k):
            total = Cyclotomic.zero(e)
            for j in orbit_t:
                total = total + table.irreducibles[j].value_cyc(c)
            q = total.scale(schur).as_rational()
            assert q is not None and q.denominator == 1, "orbit sum must be integral"
            values.append(int(q))
        assert degree % schur == 0
        out.append(
            RationalCharacter(
                psi=ClassFunction(group, tuple(values)),
                orbit=orbit_t,
                schur_index=schur,
                multiplicity_n=degree // schur,
                schur_index_unverified=unverified,
            )
        )
    out.sort(key=lambda rc: rc.orbit[0])
    return tuple(out)


def eigenvalue_multiplicities(table: CharacterTable, index: int, g: Permutation) -> dict[int, int]:
    """Multiplicities of the eigenvalues zeta_n^a of the index-th irreducible
    at g, n = ord(g); recovered exactly from the stored eigenvalue multisets."""
    group = table.group
    c = group.class_index(g)
    value = table.irreducibles[index].values[c]
    return value.restricted(g.order())

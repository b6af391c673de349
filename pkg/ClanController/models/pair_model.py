"""Exact matrix models of the symmetric pairs, representative flags and orbit identification."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np
from sympy import QQ

from ClanController.models.clan import MINUS, PLUS, Clan, PairKind, enumerate_clans
from ClanController.models.flag import (
    FlagRep, combine, identity, matrix_from_rows, matrix_to_rows, rank,
)
from Service.utils.errors import ConsistencyError, FlagValidationError, InvalidInputError

logger = logging.getLogger(__name__)


def _unit(dim, index):
    """e_index (1-based) of Q^dim."""
    return tuple(Fraction(int(k == index - 1)) for k in range(dim))


def symplectic_form(n):
    """J with J[i][2n+1-i] = +1 for i <= n and -1 for i > n (1-based)."""
    dim = 2 * n
    form = [[0] * dim for _ in range(dim)]
    for i in range(1, dim + 1):
        form[i - 1][dim - i] = 1 if i <= n else -1
    return tuple(tuple(row) for row in form)


@dataclass(frozen=True)
class SymmetricPairModel:
    """
    Concrete model of (G, K) with theta = Ad(diag(+1, -1, +1, ...))

    Attributes:
        kind (PairKind): A(p,q) or C(n)
        theta (tuple): Diagonal entries of the sign matrix
        form (tuple): Symplectic form for family C, None for family A
    """

    kind: PairKind
    theta: tuple
    form: tuple = None

    @property
    def family(self):
        return self.kind.family

    @property
    def dim(self):
        return len(self.theta)

    @property
    def rank(self):
        return self.kind.rank

    @cached_property
    def v_plus(self):
        return [_unit(self.dim, i) for i in range(1, self.dim + 1) if self.theta[i - 1] == 1]

    @cached_property
    def v_minus(self):
        return [_unit(self.dim, i) for i in range(1, self.dim + 1) if self.theta[i - 1] == -1]

    @cached_property
    def base_flag(self):
        return FlagRep(tuple(_unit(self.dim, i) for i in range(1, self.dim + 1)), self.form)

    def apply_theta(self, vec):
        return tuple(s * x for s, x in zip(self.theta, vec))

    def mirror(self, position):
        return self.dim + 1 - position

    # -- root vectors ---------------------------------------------------------

    def root_vector_entries(self, s, negative=True):
        """
        Nonzero entries {(row, col): value} (1-based) of the simple root vector e_{-alpha_s}

        Args:
            s (int): Simple root index
            negative (bool): Negative root vector if True, positive otherwise

        Returns:
            dict: Matrix entries
        """
        if not 1 <= s <= self.rank:
            raise InvalidInputError(f"Simple root {s} outside 1..{self.rank}")
        if self.family == 'A':
            return {(s + 1, s): 1} if negative else {(s, s + 1): 1}
        n = self.kind.n
        if s == n:
            return {(n + 1, n): 1} if negative else {(n, n + 1): 1}
        # E_ab + c E_b'a' with c = -J[a][a'] / J[b][b'] stays in sp(2n)
        a, b = (s + 1, s) if negative else (s, s + 1)
        a_bar, b_bar = self.mirror(a), self.mirror(b)
        c = Fraction(-self.form[a - 1][a_bar - 1], self.form[b - 1][b_bar - 1])
        return {(a, b): 1, (b_bar, a_bar): c}

    def root_matrix(self, s, coefficient=1, negative=True):
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (i, j), value in self.root_vector_entries(s, negative).items():
            rows[i - 1][j - 1] = Fraction(coefficient) * Fraction(value)
        return tuple(tuple(r) for r in rows)

    def check_theta(self):
        """
        Assert theta negates every simple root vector and, for family C, that they lie in sp(2n)

        Raises:
            ConsistencyError: The model is not the quasisplit form
        """
        for s in range(1, self.rank + 1):
            for negative in (True, False):
                for (i, j), value in self.root_vector_entries(s, negative).items():
                    if self.theta[i - 1] * self.theta[j - 1] != -1:
                        raise ConsistencyError(f"theta does not negate the root vector of {s}")
                if self.form is not None:
                    x = matrix_from_rows(self.root_matrix(s, negative=negative))
                    j = matrix_from_rows(self.form)
                    product = j * x
                    if product.to_list() != product.transpose().to_list():
                        raise ConsistencyError(f"Root vector of {s} is not in sp(2n)")
        for column in self.base_flag.columns:
            # coordinate lines are theta-eigenlines, so theta fixes the base flag
            if rank([column, self.apply_theta(column)], self.dim) != 1:
                raise ConsistencyError("Base flag is not theta-stable")
        return True

    # -- orbit catalog --------------------------------------------------------

    @cached_property
    def clans(self):
        return enumerate_clans(self.kind)

    @cached_property
    def representatives(self):
        reps = {}
        for clan in self.clans:
            flag = build_representative(self, clan)
            flag.validate()
            reps[clan] = flag
        return reps

    @cached_property
    def invariant_index(self):
        """Invariant table -> clan, with a collision check over all enumerated clans."""
        index = {}
        for clan, flag in self.representatives.items():
            key = invariant_table(self, flag)
            if key in index:
                raise ConsistencyError(
                    f"Clans {index[key]} and {clan} share an invariant table",
                    {'kind': str(self.kind)},
                )
            index[key] = clan
        logger.info("Orbit catalog for %s: %d clans with distinct invariants", self.kind, len(index))
        return index

    @cached_property
    def base_clan(self):
        """Clan of the orbit through the base flag."""
        return identify_orbit(self, self.base_flag)


@lru_cache(maxsize=None)
def build_pair_model(kind):
    """
    Build the matrix model of a symmetric pair

    Args:
        kind (PairKind): A(p,q) with p = ceil(n/2), or C(n)

    Returns:
        SymmetricPairModel: Model with its theta-check already run
    """
    dim = kind.ambient_dim
    theta = tuple(1 if i % 2 else -1 for i in range(1, dim + 1))
    form = symplectic_form(kind.n) if kind.family == 'C' else None
    model = SymmetricPairModel(kind, theta, form)
    model.check_theta()
    logger.debug("Built pair model %s in dimension %d", kind, dim)
    return model


def check_clan(model, clan):
    if isinstance(clan, str):
        clan = Clan.parse(clan, model.family)
    if clan.family != model.family or len(clan) != model.dim:
        raise InvalidInputError(f"Clan '{clan}' does not belong to {model.kind}")
    if model.family == 'A' and clan.signature() != (model.kind.p, model.kind.q):
        raise InvalidInputError(f"Clan '{clan}' has signature {clan.signature()}, expected {(model.kind.p, model.kind.q)}")
    if model.family == 'C' and clan.signature() != (model.kind.n, model.kind.n):
        raise InvalidInputError(f"Clan '{clan}' has the wrong signature for {model.kind}")
    return clan


def build_representative(model, clan):
    """
    Representative flag of a clan

    '+' takes the next V+ basis vector, '-' the next V- vector, a pair i < j gives
    e + f at i and e - f at j. Family C fills mirror positions together using hyperbolic
    slots (u_k, w_k) = (e_j, e_{2n+1-j}), so that F_{2n-i} = F_i^perp.

    Args:
        model (SymmetricPairModel): The pair
        clan (Clan): The orbit label

    Returns:
        FlagRep: The flag (not yet validated)
    """
    dim = model.dim
    if model.family == 'A':
        plus = iter(model.v_plus)
        minus = iter(model.v_minus)
        columns = [None] * dim
        for position, symbol in enumerate(clan.symbols, start=1):
            if columns[position - 1] is not None:
                continue
            if symbol == PLUS:
                columns[position - 1] = next(plus)
            elif symbol == MINUS:
                columns[position - 1] = next(minus)
            else:
                other = clan.partner(position)
                e, f = next(plus), next(minus)
                columns[position - 1] = combine((1, 1), (e, f))
                columns[other - 1] = combine((1, -1), (e, f))
        return FlagRep(tuple(columns), None)

    n = model.kind.n
    form = model.form
    slots = iter(
        (_unit(dim, j), _unit(dim, dim + 1 - j), form[j - 1][dim - j])
        for j in range(1, dim + 1, 2)
    )
    columns = [None] * dim
    for i in range(1, n + 1):
        if columns[i - 1] is not None:
            continue
        i_bar = model.mirror(i)
        symbol = clan.symbols[i - 1]
        if symbol == PLUS:
            u, w, _ = next(slots)
            columns[i - 1], columns[i_bar - 1] = u, w
        elif symbol == MINUS:
            u, w, _ = next(slots)
            columns[i - 1], columns[i_bar - 1] = w, u
        else:
            j = clan.partner(i)
            if j == i_bar:
                u, w, c = next(slots)
                # J(v, theta v) for v = u + lam w has the sign of (-1)^i
                lam = Fraction((-1) ** i * c)
                columns[i - 1] = combine((1, lam), (u, w))
                columns[i_bar - 1] = combine((1, -lam), (u, w))
            else:
                u_k, w_k, c_k = next(slots)
                u_l, w_l, c_l = next(slots)
                sigma = Fraction(c_l, c_k)
                j_bar = model.mirror(j)
                columns[i - 1] = combine((1, 1), (u_k, w_l))
                columns[j - 1] = combine((1, -1), (u_k, w_l))
                columns[j_bar - 1] = combine((1, sigma), (u_l, w_k))
                columns[i_bar - 1] = combine((1, -sigma), (u_l, w_k))
    return FlagRep(tuple(columns), form)


def representative_flag(model, clan):
    """
    The cached representative flag of a clan

    Args:
        model (SymmetricPairModel): The pair
        clan (Clan or str): Orbit label

    Returns:
        FlagRep: Flag with identify_orbit(model, flag) == clan
    """
    clan = check_clan(model, clan)
    try:
        return model.representatives[clan]
    except KeyError:
        raise InvalidInputError(f"Clan '{clan}' is not an orbit of {model.kind}")


def invariant_table(model, flag):
    """
    Complete orbit invariants of a flag, as a hashable tuple

    For 1 <= i < N: rank[V+ | F_i], rank[V- | F_i]; for i < j: rank[theta F_i | F_j];
    and dim(F_i cap (V+ + F_j)) for j < i.
    """
    dim = model.dim
    columns = flag.columns
    plus = [rank(model.v_plus + list(columns[:i]), dim) for i in range(1, dim)]
    minus = [rank(model.v_minus + list(columns[:i]), dim) for i in range(1, dim)]
    twisted = [model.apply_theta(c) for c in columns]
    mixed = [
        rank(twisted[:i] + list(columns[:j]), dim)
        for i in range(1, dim) for j in range(i + 1, dim)
    ]
    rank_plus = [len(model.v_plus)] + plus
    # dim(F_i cap (V+ + F_j)) = i + rank[V+|F_j] - rank[V+|F_i] for j < i
    nested = [
        i + rank_plus[j] - rank_plus[i]
        for i in range(1, dim) for j in range(1, i)
    ]
    return tuple(plus), tuple(minus), tuple(mixed), tuple(nested)


def identify_orbit(model, flag):
    """
    The clan of the K-orbit through a flag

    Args:
        model (SymmetricPairModel): The pair
        flag (FlagRep): A point of the flag variety

    Returns:
        Clan: The orbit label

    Raises:
        FlagValidationError: Dependent or non-isotropic columns
        ConsistencyError: Invariants match no enumerated clan
    """
    if flag.ambient_dim != model.dim:
        raise FlagValidationError(f"Flag has dimension {flag.ambient_dim}, model needs {model.dim}")
    if model.form is not None and flag.form is None:
        flag = FlagRep(flag.columns, model.form)
    flag.validate()
    key = invariant_table(model, flag)
    try:
        return model.invariant_index[key]
    except KeyError:
        raise ConsistencyError("Flag invariants match no enumerated clan", {'kind': str(model.kind)})


def exponential(rows):
    """exp of a nilpotent matrix by its finite series, exactly."""
    dim = len(rows)
    x = matrix_from_rows(rows)
    term = matrix_from_rows(identity(dim))
    total = term
    for k in range(1, dim + 1):
        term = (term * x) * QQ(1, k)
        if term.is_zero_matrix:
            break
        total = total + term
    else:
        if not (term * x).is_zero_matrix:
            raise ConsistencyError("Matrix passed to exponential is not nilpotent")
    return matrix_to_rows(total)


def random_coefficients(members, rng):
    """
    Nonzero rational coefficients for x_S = sum c_alpha e_{-alpha}

    Args:
        members (iterable): Simple root indices
        rng (numpy.random.Generator): Seeded generator

    Returns:
        dict: index -> Fraction
    """
    result = {}
    for s in sorted(members):
        numerator = int(rng.integers(1, 10)) * (1 if rng.integers(0, 2) else -1)
        denominator = int(rng.integers(1, 6))
        result[s] = Fraction(numerator, denominator)
    return result


def epsilon_matrix(model, subset, coefficients=None):
    """g = exp(z_{j_1}) ... exp(z_{j_s}): the first root of S in the ordering is the outermost factor."""
    coefficients = coefficients or {}
    g = matrix_from_rows(identity(model.dim))
    for s in subset.ordered_members:
        z = model.root_matrix(s, coefficients.get(s, 1))
        g = g * matrix_from_rows(exponential(z))
    return matrix_to_rows(g)


def epsilon_flag(model, subset, coefficients=None):
    """
    The flag epsilon(x_S) = exp(z_{j_1}) ... exp(z_{j_s}) . b

    Args:
        model (SymmetricPairModel): The pair
        subset (SimpleSubset): S with its ordering
        coefficients (dict): Optional nonzero coefficient per root of S (default 1)

    Returns:
        FlagRep: Columns g.e_i
    """
    if any(not 1 <= s <= model.rank for s in subset.members):
        raise InvalidInputError(f"Subset {sorted(subset.members)} outside 1..{model.rank}")
    if coefficients and any(Fraction(c) == 0 for c in coefficients.values()):
        raise InvalidInputError("Coefficients of x_S must be nonzero")
    g = epsilon_matrix(model, subset, coefficients)
    return model.base_flag.transformed(g)


def default_rng(seed):
    return np.random.default_rng(seed)

"""Clans: signed involutions labelling K-orbits on the flag variety."""
import logging
from dataclasses import dataclass
from functools import lru_cache

from RootDatumController.models.root_datum import GroupKind
from Service.utils.errors import InvalidInputError, UnsupportedKindError

logger = logging.getLogger(__name__)

PLUS, MINUS = '+', '-'
# accepted spellings of the minus sign
MINUS_ALIASES = ('-', '−', '–')


@dataclass(frozen=True)
class PairKind:
    """
    A symmetric pair: A(p,q) is GL(p) x GL(q) in GL(p+q), C(n) is GL(n) in Sp(2n)

    Only the quasisplit pairs with p = ceil((p+q)/2) are modelled.
    """

    family: str
    p: int
    q: int = 0

    def __post_init__(self):
        if self.family == 'A':
            n = self.p + self.q
            if self.p < 0 or self.q < 0 or n < 1:
                raise UnsupportedKindError(f"A({self.p},{self.q}) is not a valid signature")
            if self.p != (n + 1) // 2:
                raise UnsupportedKindError(
                    f"A({self.p},{self.q}) is not the quasisplit pair with p = ceil(n/2)",
                    {'hint': f'use A:{(n + 1) // 2},{n // 2}'},
                )
        elif self.family == 'C':
            if self.p < 1 or self.q:
                raise UnsupportedKindError(f"C({self.p}) is not a valid pair")
        else:
            raise UnsupportedKindError(f"Unsupported pair family '{self.family}'")

    @property
    def n(self):
        return self.p + self.q if self.family == 'A' else self.p

    @property
    def ambient_dim(self):
        return self.n if self.family == 'A' else 2 * self.n

    @property
    def rank(self):
        return self.n - 1 if self.family == 'A' else self.n

    @property
    def group_kind(self):
        return GroupKind('GL', self.n) if self.family == 'A' else GroupKind('Sp', self.n)

    @property
    def cartan_type(self):
        return self.group_kind.cartan_type

    def __str__(self):
        return f'A:{self.p},{self.q}' if self.family == 'A' else f'C:{self.n}'


def canonical_symbols(symbols):
    """Relabel number pairs so that first occurrences read 1, 2, 3, ..."""
    relabel = {}
    result = []
    for symbol in symbols:
        if symbol in (PLUS, MINUS):
            result.append(symbol)
            continue
        if symbol not in relabel:
            relabel[symbol] = len(relabel) + 1
        result.append(relabel[symbol])
    return tuple(result)


@dataclass(frozen=True)
class Clan:
    """
    A clan: a string over {+, -, 1, 2, ...} where every number occurs exactly twice

    Attributes:
        family (str): 'A' or 'C'
        symbols (tuple): '+', '-' or positive int labels, in canonical form
    """

    family: str
    symbols: tuple

    def __post_init__(self):
        if self.family not in ('A', 'C'):
            raise InvalidInputError(f"Unknown clan family '{self.family}'")
        symbols = canonical_symbols(self.symbols)
        counts = {}
        for symbol in symbols:
            if symbol not in (PLUS, MINUS):
                counts[symbol] = counts.get(symbol, 0) + 1
        if any(c != 2 for c in counts.values()):
            raise InvalidInputError(f"Every number in a clan must occur exactly twice: {symbols}")
        object.__setattr__(self, 'symbols', symbols)
        if self.family == 'C' and not self.is_symmetric():
            raise InvalidInputError(f"'{self}' is not a symmetric clan")

    @staticmethod
    def parse(text, family='A'):
        """
        Parse '+-+-', '1+−1', ... into a clan

        Args:
            text (str): Clan string; digits label pairs, both minus signs accepted
            family (str): 'A' or 'C'

        Returns:
            Clan: Canonical clan
        """
        symbols = []
        for ch in str(text).strip():
            if ch == PLUS:
                symbols.append(PLUS)
            elif ch in MINUS_ALIASES:
                symbols.append(MINUS)
            elif ch.isdigit() and ch != '0':
                symbols.append(int(ch))
            else:
                raise InvalidInputError(f"Invalid clan symbol '{ch}' in '{text}'")
        if not symbols:
            raise InvalidInputError("Empty clan")
        return Clan(family, tuple(symbols))

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return ''.join(str(s) for s in self.symbols)

    def pairs(self):
        """Number pairs as 1-based position tuples (i, j), i < j, by first occurrence."""
        first = {}
        result = []
        for position, symbol in enumerate(self.symbols, start=1):
            if symbol in (PLUS, MINUS):
                continue
            if symbol in first:
                result.append((first[symbol], position))
            else:
                first[symbol] = position
        return sorted(result)

    def partner(self, position):
        """The other end of the pair through position, or None for a sign."""
        for i, j in self.pairs():
            if position == i:
                return j
            if position == j:
                return i
        return None

    def signature(self):
        plus = self.symbols.count(PLUS)
        minus = self.symbols.count(MINUS)
        pairs = len(self.pairs())
        return plus + pairs, minus + pairs

    def mirror(self, position):
        return len(self.symbols) + 1 - position

    def is_symmetric(self):
        """Stable under i -> 2n+1-i with signs flipped and pairs mapped to pairs."""
        length = len(self.symbols)
        if length % 2:
            return False
        for position, symbol in enumerate(self.symbols, start=1):
            image = self.symbols[self.mirror(position) - 1]
            if symbol == PLUS and image != MINUS:
                return False
            if symbol == MINUS and image != PLUS:
                return False
        pairs = set(self.pairs())
        for i, j in pairs:
            if tuple(sorted((self.mirror(i), self.mirror(j)))) not in pairs:
                return False
        return True

    def has_pair_at(self, i, j):
        return self.partner(i) == j


def _signed_involutions(length):
    """Every clan string of the given length, as canonical symbol tuples."""
    results = []

    def extend(prefix, open_labels, next_label):
        position = len(prefix)
        remaining = length - position
        if remaining < len(open_labels):
            return
        if position == length:
            results.append(tuple(prefix))
            return
        for sign in (PLUS, MINUS):
            extend(prefix + [sign], open_labels, next_label)
        extend(prefix + [next_label], open_labels + [next_label], next_label + 1)
        for label in open_labels:
            rest = [o for o in open_labels if o != label]
            extend(prefix + [label], rest, next_label)

    extend([], [], 1)
    return results


@lru_cache(maxsize=None)
def enumerate_clans(kind):
    """
    All clans of a symmetric pair

    Args:
        kind (PairKind): A(p,q) or C(n)

    Returns:
        tuple: Distinct canonical clans sorted by their strings
    """
    if kind.family == 'A':
        clans = [Clan('A', s) for s in _signed_involutions(kind.n)]
        clans = [c for c in clans if c.signature() == (kind.p, kind.q)]
    else:
        clans = []
        for symbols in _signed_involutions(2 * kind.n):
            candidate = Clan('A', symbols)
            if candidate.signature() == (kind.n, kind.n) and candidate.is_symmetric():
                clans.append(Clan('C', symbols))
    result = tuple(sorted(set(clans), key=str))
    logger.debug("Enumerated %d clans for %s", len(result), kind)
    return result

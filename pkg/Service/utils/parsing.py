"""Parsers for the pair, kind, ordering and subset spellings shared by the CLI and the routes."""
import re

from ClanController.models.clan import PairKind
from RootDatumController.models.root_datum import GroupKind, resolve_root_token
from Service.utils.errors import InvalidInputError, UnsupportedKindError

_PAIR = re.compile(r'^\s*([AaCc])\s*[:(]?\s*(\d+)\s*(?:,\s*(\d+))?\s*\)?\s*$')
_KIND = re.compile(r'^\s*([A-Za-z]+)\s*[:(]\s*(\d+)\s*\)?\s*$')


def parse_pair(text, settings=None):
    """
    Read 'A:2,2' or 'C:2' into a PairKind

    Args:
        text (str): Pair spelling
        settings (Settings): Optional rank limits

    Returns:
        PairKind: The pair

    Raises:
        InvalidInputError: Unreadable spelling
        UnsupportedKindError: Non-quasisplit signature or rank above the configured limit
    """
    match = _PAIR.match(str(text or ''))
    if not match:
        raise InvalidInputError(f"Cannot read pair '{text}'; expected A:p,q or C:n")
    family, first, second = match.groups()
    family = family.upper()
    if family == 'A':
        if second is None:
            raise InvalidInputError(f"Pair '{text}' needs both p and q")
        kind = PairKind('A', int(first), int(second))
    else:
        if second is not None:
            raise InvalidInputError(f"Pair '{text}' takes a single rank")
        kind = PairKind('C', int(first))
    if settings is not None:
        limit = settings.max_rank_a if family == 'A' else settings.max_rank_c
        if kind.n > limit:
            raise UnsupportedKindError(
                f"{kind} is above the configured limit n <= {limit}", {'limit': limit}
            )
    return kind


def parse_kind(text):
    """Read 'GL:4', 'SL:4', 'Sp:2', 'SpinB:3', ... into a GroupKind."""
    match = _KIND.match(str(text or ''))
    if not match:
        raise InvalidInputError(f"Cannot read group kind '{text}'; expected e.g. SL:4")
    family, n = match.groups()
    spelled = {name.lower(): name for name in ('GL', 'SL', 'Sp', 'SpinB', 'SpinD', 'SOB', 'SOD')}
    return GroupKind(spelled.get(family.lower(), family), int(n))


def _tokens(text):
    return [t for t in re.split(r'[,\s]+', str(text).strip().strip('{}()[]')) if t]


def parse_ordering(text, cartan_type, rank):
    """
    Read an ordering such as '2,1,3' or 'β,α'; empty means 1..rank

    Returns:
        tuple: Permutation of 1..rank
    """
    if text is None or not str(text).strip():
        return tuple(range(1, rank + 1))
    ordering = tuple(resolve_root_token(cartan_type, rank, t) for t in _tokens(text))
    if sorted(ordering) != list(range(1, rank + 1)):
        raise InvalidInputError(f"Ordering '{text}' is not a permutation of the {rank} simple roots")
    return ordering


def parse_subset(text, cartan_type, rank):
    """Read 'all', '1,3', '{α,β}' or '' (the empty subset) into a frozenset."""
    if text is None or not str(text).strip() or str(text).strip() in ('{}', 'empty'):
        return frozenset()
    if str(text).strip().lower() in ('all', 'pi', 'π'):
        return frozenset(range(1, rank + 1))
    return frozenset(resolve_root_token(cartan_type, rank, t) for t in _tokens(text))

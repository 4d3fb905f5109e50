"""Non-containment certificates between Brill-Noether loci.

Distinct loci at the same genus may or may not contain one another.  Four
computational rules can rule containment out, plus one ledger of citations
to published facts:

* KAPPA_GAP            kappa(source) > kappa(target): the general curve of
                       gonality kappa(source) lies in source but not target.
* DIMENSION            -rho(source) < -rho(target) <= 3: for -3 <= rho <= -1
                       codimension is known to equal -rho exactly, and every
                       component of source has codimension at most
                       -rho(source), so source is too big to fit in target.
* DIVISOR_CRITERION    a Clifford-index gap: gamma(target) >
                       gamma(source) + ceil(2*sqrt(-rho(source))) - 2, valid
                       when rho(target) = -1, source rank >= 2 and
                       g + 1 <= floor(d/r) + d for the source.
* EQUIDIMENSIONAL_FLIP both loci have rho = -1 (hence are irreducible of
                       equal dimension), so a containment either way would
                       force equality; once the reverse direction is
                       established, this direction follows.
* EXTERNAL             the pair appears in a user-supplied ledger of
                       published non-containments, each entry with its
                       citation.

Certificates are tried in exactly that order, so reports are deterministic.
Absence of a certificate never asserts containment: the pair is Open.

Every certificate carries a witness and can be re-verified from scratch via
NonContainmentCertificate.verify().
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Mapping, Optional, Union

from . import bn_core
from .bn_core import BNLocus
from .errors import DomainError, InternalError
from .exact_arith import ceil_2sqrt
from .maximal_loci import MaximalLocusRecord, enumerate_expected_maximal

__all__ = [
    "Rule",
    "NumericType",
    "StatusKind",
    "NonContainmentCertificate",
    "PairStatus",
    "PairVerdict",
    "GenusReport",
    "Ledger",
    "LedgerError",
    "load_ledger",
    "trivial_closure",
    "noncontainment_by_kappa",
    "noncontainment_by_dimension",
    "divisor_noncontainment",
    "classify_numeric_type",
    "pair_status",
    "genus_report",
]


class Rule(Enum):
    KAPPA_GAP = "kappa-gap"
    DIMENSION = "dimension"
    DIVISOR_CRITERION = "divisor-criterion"
    EQUIDIMENSIONAL_FLIP = "equidimensional-flip"
    EXTERNAL = "external"


class NumericType(Enum):
    IDENTICAL = "identical"
    SERRE_DUAL = "serre-dual"
    DISTINCT_INVARIANTS = "distinct-invariants"


class StatusKind(Enum):
    ESTABLISHED = "established"
    TRIVIAL_CONTAINMENT = "trivial-containment"
    OPEN = "open"


class LedgerError(Exception):
    """The external ledger file is malformed."""


@dataclass(frozen=True)
class NonContainmentCertificate:
    """Witnessed claim that source is not contained in target."""

    source: BNLocus
    target: BNLocus
    rule: Rule
    witness: Mapping[str, object] = field(default_factory=dict)

    def verify(self, ledger: Optional["Ledger"] = None) -> bool:
        """Recompute the claim from the witness fields alone."""
        try:
            return self._verify(ledger)
        except (DomainError, KeyError, TypeError):
            return False

    def _verify(self, ledger: Optional["Ledger"]) -> bool:
        s, t = self.source, self.target
        if s.g != t.g:
            return False
        w = self.witness
        if self.rule is Rule.KAPPA_GAP:
            ks = bn_core.kappa(s.g, s.r, s.d).value
            kt = bn_core.kappa(t.g, t.r, t.d).value
            return ks == w["kappa_source"] and kt == w["kappa_target"] and ks > kt
        if self.rule is Rule.DIMENSION:
            rs, rt = s.rho(), t.rho()
            return (
                rs == w["rho_source"]
                and rt == w["rho_target"]
                and -rs < -rt <= 3
                and rs < 0
            )
        if self.rule is Rule.DIVISOR_CRITERION:
            gap = ceil_2sqrt(-s.rho()) - 2
            return (
                t.rho() == -1
                and s.rho() < 0
                and s.r >= 2
                and s.g + 1 <= s.d // s.r + s.d
                and t.gamma() == w["gamma_target"]
                and s.gamma() == w["gamma_source"]
                and t.gamma() > s.gamma() + gap
            )
        if self.rule is Rule.EQUIDIMENSIONAL_FLIP:
            if s.rho() != -1 or t.rho() != -1 or s == t:
                return False
            reverse = _derive_certificate(t, s, ledger, allow_flip=False)
            return reverse is not None and reverse.rule.value == w["reverse_rule"]
        if self.rule is Rule.EXTERNAL:
            if ledger is None:
                return False
            cite = ledger.lookup(s, t)
            return cite is not None and cite == w["cite"]
        return False


@dataclass(frozen=True)
class PairStatus:
    kind: StatusKind
    certificate: Optional[NonContainmentCertificate] = None


@dataclass(frozen=True)
class PairVerdict:
    source: BNLocus
    target: BNLocus
    status: PairStatus


@dataclass(frozen=True)
class GenusReport:
    """All expected maximal loci at one genus and every ordered pair's status."""

    g: int
    loci: tuple[MaximalLocusRecord, ...]
    pairs: tuple[PairVerdict, ...]

    @property
    def open_pairs(self) -> tuple[PairVerdict, ...]:
        return tuple(p for p in self.pairs if p.status.kind is StatusKind.OPEN)

    @property
    def verified(self) -> bool:
        return not self.open_pairs


@dataclass(frozen=True)
class LedgerEntry:
    g: int
    source: tuple[int, int]  # (rank, degree)
    target: tuple[int, int]
    cite: str


class Ledger:
    """Published non-containment facts, keyed by (g, source, target)."""

    def __init__(self, entries: list[LedgerEntry]):
        self._by_key: dict[tuple, str] = {}
        self.entries = entries
        for e in entries:
            key = (e.g, e.source, e.target)
            if key in self._by_key:
                raise LedgerError(f"duplicate ledger entry for {key}")
            self._by_key[key] = e.cite

    def lookup(self, source: BNLocus, target: BNLocus) -> Optional[str]:
        if source.g != target.g:
            return None
        return self._by_key.get((source.g, (source.r, source.d), (target.r, target.d)))


_ENTRY_FIELDS = {"g", "source", "target", "cite"}


def _parse_entry(obj: object, where: str) -> LedgerEntry:
    if not isinstance(obj, dict):
        raise LedgerError(f"{where}: expected an object, got {type(obj).__name__}")
    unknown = set(obj) - _ENTRY_FIELDS
    if unknown:
        raise LedgerError(f"{where}: unknown fields {sorted(unknown)}")
    missing = _ENTRY_FIELDS - set(obj)
    if missing:
        raise LedgerError(f"{where}: missing fields {sorted(missing)}")
    g, source, target, cite = obj["g"], obj["source"], obj["target"], obj["cite"]
    if not isinstance(g, int) or isinstance(g, bool):
        raise LedgerError(f"{where}: g must be an integer")
    for name, pair in (("source", source), ("target", target)):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise LedgerError(f"{where}: {name} must be a [rank, degree] pair of integers")
    if not isinstance(cite, str) or not cite:
        raise LedgerError(f"{where}: cite must be a non-empty string")
    return LedgerEntry(g, (source[0], source[1]), (target[0], target[1]), cite)


def load_ledger(path: Union[str, Path]) -> Ledger:
    """Load a ledger from JSON: either one array, or one object per line."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise LedgerError(f"cannot read ledger {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LedgerError(f"invalid JSON in ledger {path}: {exc}") from exc
        return Ledger([_parse_entry(obj, f"entry {i}") for i, obj in enumerate(data)])
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise LedgerError(f"invalid JSON on ledger line {lineno}: {exc}") from exc
        entries.append(_parse_entry(obj, f"line {lineno}"))
    return Ledger(entries)


def trivial_closure(g: int, r: int, d: int) -> set[BNLocus]:
    """All loci reachable from (g, r, d) by one or more trivial steps.

    Bounded by degree <= 2g - 2; the step relation strictly increases degree
    or decreases rank, so the walk terminates.
    """
    start = BNLocus(g, r, d)
    seen: set[BNLocus] = set()
    frontier = [start]
    while frontier:
        node = frontier.pop()
        if node.r < 1 or node.d >= 2 * node.g - 2:
            continue
        for nxt in bn_core.trivial_specializations(node.g, node.r, node.d):
            if nxt.d <= 2 * nxt.g - 2 and nxt not in seen and nxt != start:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def _require_admissible_pair(source: BNLocus, target: BNLocus, op: str) -> None:
    if source.g != target.g:
        raise DomainError(f"{op} requires equal genus, got {source.g} and {target.g}")
    if source.rho() >= 0 or target.rho() >= 0:
        raise DomainError(f"{op} requires both loci to have rho < 0")


def noncontainment_by_kappa(
    source: BNLocus, target: BNLocus
) -> Optional[NonContainmentCertificate]:
    """KAPPA_GAP certificate when kappa(source) > kappa(target), else None."""
    _require_admissible_pair(source, target, "noncontainment_by_kappa")
    try:
        ks = bn_core.kappa(source.g, source.r, source.d).value
        kt = bn_core.kappa(target.g, target.r, target.d).value
    except DomainError:
        return None  # kappa undefined for one side; the rule cannot apply
    if ks > kt:
        return NonContainmentCertificate(
            source, target, Rule.KAPPA_GAP, {"kappa_source": ks, "kappa_target": kt}
        )
    return None


def noncontainment_by_dimension(
    source: BNLocus, target: BNLocus
) -> Optional[NonContainmentCertificate]:
    """DIMENSION certificate when -rho(source) < -rho(target) <= 3, else None.

    Exact codimension is only known for -3 <= rho <= -1, hence the cap on
    the target side; the source side needs only the general upper bound.
    """
    _require_admissible_pair(source, target, "noncontainment_by_dimension")
    rs, rt = source.rho(), target.rho()
    if -rs < -rt <= 3:
        return NonContainmentCertificate(
            source, target, Rule.DIMENSION, {"rho_source": rs, "rho_target": rt}
        )
    return None


def divisor_noncontainment(
    source: BNLocus, target: BNLocus
) -> Optional[NonContainmentCertificate]:
    """DIVISOR_CRITERION certificate for a target with rho = -1, else None.

    Requires gamma(target) > gamma(source) + ceil(2*sqrt(-rho(source))) - 2
    together with g + 1 <= floor(d/r) + d for the source and source rank
    >= 2 (rank-1 sources are instead handled by the kappa rule).
    """
    _require_admissible_pair(source, target, "divisor_noncontainment")
    if target.rho() != -1:
        raise DomainError(
            f"divisor_noncontainment requires rho(target) = -1, got {target.rho()}"
        )
    if source.r < 2:
        return None
    if source.g + 1 > source.d // source.r + source.d:
        return None
    gap = ceil_2sqrt(-source.rho()) - 2
    if target.gamma() > source.gamma() + gap:
        return NonContainmentCertificate(
            source,
            target,
            Rule.DIVISOR_CRITERION,
            {
                "gamma_source": source.gamma(),
                "gamma_target": target.gamma(),
                "clifford_gap": gap,
            },
        )
    return None


def classify_numeric_type(a: BNLocus, b: BNLocus) -> NumericType:
    """Identical, Serre-dual, or genuinely distinct numerics.

    Whenever rho and gamma both agree the answer is never
    DISTINCT_INVARIANTS; that case is enforced with an internal check.
    """
    if a.g != b.g:
        raise DomainError(f"classify_numeric_type requires equal genus, got {a.g}, {b.g}")
    if a == b:
        return NumericType.IDENTICAL
    try:
        if bn_core.serre_dual(a.g, a.r, a.d) == b:
            return NumericType.SERRE_DUAL
    except DomainError:
        pass
    if a.rho() == b.rho() and a.gamma() == b.gamma():
        raise InternalError(
            f"{a} and {b} share rho and gamma but are neither identical nor Serre dual"
        )
    return NumericType.DISTINCT_INVARIANTS


def _derive_certificate(
    source: BNLocus,
    target: BNLocus,
    ledger: Optional[Ledger],
    allow_flip: bool = True,
) -> Optional[NonContainmentCertificate]:
    cert = noncontainment_by_kappa(source, target)
    if cert is None:
        cert = noncontainment_by_dimension(source, target)
    if cert is None and target.rho() == -1:
        cert = divisor_noncontainment(source, target)
    if (
        cert is None
        and allow_flip
        and source.rho() == -1
        and target.rho() == -1
        and source != target
    ):
        reverse = _derive_certificate(target, source, ledger, allow_flip=False)
        if reverse is not None:
            cert = NonContainmentCertificate(
                source,
                target,
                Rule.EQUIDIMENSIONAL_FLIP,
                {"reverse_rule": reverse.rule.value, "rho": -1},
            )
    if cert is None and ledger is not None:
        cite = ledger.lookup(source, target)
        if cite is not None:
            cert = NonContainmentCertificate(source, target, Rule.EXTERNAL, {"cite": cite})
    return cert


def pair_status(
    source: BNLocus, target: BNLocus, ledger: Optional[Ledger] = None
) -> PairStatus:
    """Status of the ordered pair: is source known not to lie inside target?

    TRIVIAL_CONTAINMENT if target is a trivial specialization of source
    (containment holds, so non-containment is settled negatively); otherwise
    ESTABLISHED with the first applicable certificate in the fixed rule
    order, or OPEN when no rule applies.  OPEN never asserts containment.
    """
    if source == target:
        raise DomainError("pair_status requires distinct loci")
    _require_admissible_pair(source, target, "pair_status")
    if target in trivial_closure(source.g, source.r, source.d):
        return PairStatus(StatusKind.TRIVIAL_CONTAINMENT)
    cert = _derive_certificate(source, target, ledger)
    if cert is not None:
        return PairStatus(StatusKind.ESTABLISHED, cert)
    return PairStatus(StatusKind.OPEN)


def genus_report(g: int, ledger: Optional[Ledger] = None) -> GenusReport:
    """Pair-by-pair non-containment report over all expected maximal loci."""
    records = enumerate_expected_maximal(g)
    verdicts = []
    for a in records:
        for b in records:
            if a.locus == b.locus:
                continue
            verdicts.append(
                PairVerdict(a.locus, b.locus, pair_status(a.locus, b.locus, ledger))
            )
    return GenusReport(g=g, loci=tuple(records), pairs=tuple(verdicts))

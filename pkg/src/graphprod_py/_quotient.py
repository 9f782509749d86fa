"""Finitely generated normal subgroups: character, quotient shape, membership.

N is the subgroup generated by the given words. Normality is an input
assertion that ``verify_normality`` can certify or refute; every report states
which it relied on.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, replace
from itertools import combinations, product
from typing import Any

from loguru import logger

from graphprod_py._bnsr import Character, kernel_finiteness
from graphprod_py._types import errors
from graphprod_py._types.graph import (
    INFINITE,
    GroupKind,
    JoinDecomposition,
    SimplicialGraph,
    join_factors,
)
from graphprod_py._types.lattice import LatticeQuotient, Vector, quotient_structure
from graphprod_py._types.records import (
    Answer,
    Centrality,
    Fullness,
    FullnessBudget,
    Membership,
    Normality,
    SearchBudget,
    TietzeBudget,
)
from graphprod_py._types.word import (
    NormalForm,
    Word,
    abelianize,
    commutator,
    conjugate_by,
    multiply,
    normal_form,
    project,
)

Letter = tuple[int, int]
"""A generator of N by index, with sign +1 or -1."""

_ACCEPTED = (Normality.ASSERTED, Normality.VERIFIED)


@dataclass(slots=True, frozen=True)
class NormalSubgroupGens:
    """Generators of N < 𝒢(Γ), in normal form, identity dropped."""

    graph: SimplicialGraph
    gens: tuple[NormalForm, ...]
    normality: Normality = Normality.ASSERTED
    witness: NormalForm | None = None
    """A conjugate outside N when ``normality`` is FAILED."""

    def __post_init__(self) -> None:
        if not self.gens:
            raise errors.PreconditionError("N needs at least one nontrivial generator")
        for gen in self.gens:
            if gen.graph != self.graph:
                raise errors.ContextMismatchError("generator over another graph")
            if not isinstance(gen, NormalForm) or gen.is_identity:
                msg = "generators must be nontrivial normal forms"
                raise errors.PreconditionError(msg)

    @classmethod
    def of(
        cls,
        graph: SimplicialGraph,
        words: Iterable[Word],
        normality: Normality = Normality.ASSERTED,
    ) -> "NormalSubgroupGens":
        gens = tuple(nf for nf in map(normal_form, words) if not nf.is_identity)
        return cls(graph, gens, normality)

    @property
    def images(self) -> tuple[Vector, ...]:
        return tuple(abelianize(g) for g in self.gens)

    def with_normality(
        self, normality: Normality, witness: NormalForm | None = None
    ) -> "NormalSubgroupGens":
        return replace(self, normality=normality, witness=witness)


@dataclass(slots=True, frozen=True)
class InducedCharacter:
    character: Character
    quotient: LatticeQuotient

    @property
    def rank(self) -> int:
        return self.quotient.rank

    @property
    def torsion(self) -> Vector:
        return self.quotient.torsion


@dataclass(slots=True, frozen=True)
class FullnessEntry:
    factor: frozenset[str]
    central: bool
    status: Fullness
    certificate: NormalForm | None = None
    """An element of N (FULL, central) or a generator projection (FULL)."""


@dataclass(slots=True, frozen=True)
class MembershipResult:
    """A membership verdict with an independently re-checkable certificate."""

    verdict: Membership
    product: tuple[Letter, ...] | None = None
    """For IN: the target as a product of generators of N."""
    image: Vector | None = None
    """For NOT_IN: the abelianized target, outside the image lattice of N."""
    states: int = 0

    def recheck(self, N: NormalSubgroupGens, w: Word) -> bool:
        """Re-verify the certificate; UNKNOWN has none and rechecks False."""
        match self.verdict:
            case Membership.IN:
                return evaluate(N, self.product or ()) == normal_form(w)
            case Membership.NOT_IN:
                lattice = quotient_structure(N.graph.moduli, N.images)
                return self.image == abelianize(w) and not lattice.contains(self.image)
            case _:
                return False

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "product": [list(x) for x in self.product] if self.product is not None else None,
            "image": list(self.image) if self.image is not None else None,
            "states": self.states,
        }


@dataclass(slots=True, frozen=True)
class VerificationResult:
    """Outcome of a batch of membership checks (normality, co-abelianness)."""

    status: Normality
    witness: NormalForm | None = None
    checks: int = 0
    unknown: int = 0


@dataclass(slots=True, frozen=True)
class CentralityResult:
    status: Centrality
    witness: NormalForm | None = None
    """A commutator [h, g_v] outside N when ``status`` is NOT."""


@dataclass(slots=True, frozen=True)
class SplitForm:
    """G/N ≅ B/(B∩N) × 𝒢(Γ∖Z(Γ))/p(N), with B the central vertex groups."""

    central: tuple[str, ...]
    central_quotient: LatticeQuotient
    exact: bool
    """False when B∩N may be larger than the generators lying in B."""
    non_central: tuple[str, ...]
    projected_gens: tuple[NormalForm, ...]
    rendered: str


@dataclass(slots=True, frozen=True)
class QuotientReport:
    graph: SimplicialGraph
    normality: Normality
    decomposition: JoinDecomposition
    fullness: tuple[FullnessEntry, ...]
    character: Character
    rank: int
    torsion: Vector
    guarantees: tuple[str, ...]
    central_hypothesis: tuple[str, ...]
    """Central vertices; cyclic vertex groups have only finite-by-abelian quotients."""
    split_form: SplitForm | None
    fullness_budget: FullnessBudget

    @property
    def all_full(self) -> bool:
        return all(e.status is Fullness.FULL for e in self.fullness)

    def to_dict(self) -> dict[str, Any]:
        g = self.graph
        split = self.split_form
        return {
            "normality": self.normality.value,
            "decomposition": {
                "factors": [list(g.ordered(f)) for f in self.decomposition.factors],
                "central": list(g.ordered(self.decomposition.central)),
            },
            "fullness": [
                {
                    "factor": list(g.ordered(e.factor)),
                    "central": e.central,
                    "status": e.status.value,
                    "certificate": str(e.certificate) if e.certificate else None,
                }
                for e in self.fullness
            ],
            "character": self.character.to_dict(),
            "rank": self.rank,
            "torsion": list(self.torsion),
            "guarantees": list(self.guarantees),
            "central_hypothesis": list(self.central_hypothesis),
            "split_form": None
            if split is None
            else {
                "central": list(split.central),
                "central_quotient": split.central_quotient.describe(),
                "exact": split.exact,
                "non_central": list(split.non_central),
                "projected_gens": [str(p) for p in split.projected_gens],
                "rendered": split.rendered,
            },
            "budgets": {"fullness": self.fullness_budget.to_dict()},
        }


@dataclass(slots=True, frozen=True)
class SubgroupFiniteness:
    n: int
    fp: Answer
    f: Answer
    conditional: bool
    """Whether the verdict rests on asserted (not verified) normality."""
    note: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "FP": self.fp.value,
            "F": self.f.value,
            "conditional": self.conditional,
            "note": self.note,
        }


def evaluate(N: NormalSubgroupGens, letters: Sequence[Letter]) -> NormalForm:
    """The product of generators of N spelled by ``letters``."""
    words: list[Word] = [Word(N.graph)]
    for index, sign in letters:
        gen = N.gens[index]
        words.append(gen if sign > 0 else gen.inverse())
    return multiply(*words)


def induced_character(N: NormalSubgroupGens) -> InducedCharacter:
    """χ: 𝒢 → ℤ^rank, the free part of 𝒢 / N[𝒢,𝒢]; checked to vanish on N."""
    g = N.graph
    quotient = quotient_structure(g.moduli, N.images)
    projection = quotient.free_projection.entries
    values = tuple(
        tuple(row[j] for row in projection) for j in range(len(g.vertices))
    )
    chi = Character(g, values, quotient.rank)
    for gen, image in zip(N.gens, N.images):
        if any(chi(image)):
            raise errors.InvariantViolationError(f"χ does not vanish on {gen}")
    logger.info("induced character of rank {} with torsion {}", quotient.rank, quotient.torsion)
    return InducedCharacter(chi, quotient)


def _letters(N: NormalSubgroupGens) -> list[tuple[Letter, NormalForm]]:
    letters = []
    for i, gen in enumerate(N.gens):
        letters.append(((i, 1), gen))
        letters.append(((i, -1), normal_form(gen.inverse())))
    return letters


def fullness_check(
    N: NormalSubgroupGens, budget: FullnessBudget | None = None
) -> tuple[FullnessEntry, ...]:
    """Whether N meets each direct factor of 𝒢 nontrivially.

    Non-central factors are decided exactly from the generators' projections.
    A central factor is FULL once a product of at most ``1 + extra_length``
    generators lands nontrivially inside it, NOT_FULL when every generator
    projects trivially onto it, and UNKNOWN otherwise.
    """
    budget = budget or FullnessBudget()
    decomposition = join_factors(N.graph)
    entries = []
    for factor in decomposition.factors:
        projections = [project(gen, factor) for gen in N.gens]
        witness = next((p for p in projections if not p.is_identity), None)
        central = factor <= decomposition.central
        if witness is None:
            entries.append(FullnessEntry(factor, central, Fullness.NOT_FULL))
        elif not central:
            entries.append(FullnessEntry(factor, central, Fullness.FULL, witness))
        else:
            found = _element_in_factor(N, factor, 1 + budget.extra_length)
            status = Fullness.FULL if found is not None else Fullness.UNKNOWN
            entries.append(FullnessEntry(factor, central, status, found))
    return tuple(entries)


def _element_in_factor(
    N: NormalSubgroupGens, factor: frozenset[str], max_length: int
) -> NormalForm | None:
    letters = [nf for _, nf in _letters(N)]
    for length in range(1, max_length + 1):
        for choice in product(letters, repeat=length):
            element = multiply(*choice)
            if not element.is_identity and element.support <= factor:
                return element
    return None


def membership(
    N: NormalSubgroupGens, w: Word, budget: SearchBudget | None = None
) -> MembershipResult:
    """Three-valued membership of ``w`` in N with certificates.

    NOT_IN when the abelianization of ``w`` leaves the image lattice of N;
    IN when a bounded breadth-first search spells ``w`` as a product of
    generators; UNKNOWN when the budget runs out.
    """
    budget = budget or SearchBudget()
    if w.graph != N.graph:
        raise errors.ContextMismatchError("word and subgroup use different graphs")
    target = normal_form(w)
    if target.is_identity:
        return MembershipResult(Membership.IN, product=())
    image = abelianize(target)
    if not quotient_structure(N.graph.moduli, N.images).contains(image):
        return MembershipResult(Membership.NOT_IN, image=image)

    letters = _letters(N)
    limit = len(target) + budget.slack
    identity = normal_form(Word(N.graph))
    seen = {identity}
    frontier: dict[NormalForm, tuple[Letter, ...]] = {identity: ()}
    states = 0
    for depth in range(1, budget.depth + 1):
        layer: dict[NormalForm, tuple[Letter, ...]] = {}
        for state, path in frontier.items():
            for letter, gen in letters:
                reached = multiply(state, gen)
                if reached in seen or len(reached) > limit:
                    continue
                if reached == target:
                    return MembershipResult(
                        Membership.IN, product=path + (letter,), states=states
                    )
                seen.add(reached)
                layer[reached] = path + (letter,)
                states += 1
                if states >= budget.max_states:
                    logger.warning("membership search hit the state cap at depth {}", depth)
                    return MembershipResult(Membership.UNKNOWN, states=states)
        logger.debug("membership depth {}: {} new states", depth, len(layer))
        if not layer:
            break
        frontier = layer
    return MembershipResult(Membership.UNKNOWN, states=states)


def _vertex_generators(g: SimplicialGraph) -> list[NormalForm]:
    """Every g_v and g_v⁻¹, without repeats (g_v = g_v⁻¹ at order 2)."""
    found: list[NormalForm] = []
    for v in g.vertices:
        for sign in (1, -1):
            nf = normal_form(Word.generator(g, v, sign))
            if nf not in found:
                found.append(nf)
    return found


def _verify_all(
    N: NormalSubgroupGens, elements: Iterable[NormalForm], budget: SearchBudget
) -> VerificationResult:
    checks = unknown = 0
    for element in elements:
        checks += 1
        result = membership(N, element, budget)
        if result.verdict is Membership.NOT_IN:
            return VerificationResult(Normality.FAILED, element, checks, unknown)
        if result.verdict is Membership.UNKNOWN:
            unknown += 1
    status = Normality.VERIFIED if unknown == 0 else Normality.UNKNOWN
    return VerificationResult(status, None, checks, unknown)


def verify_normality(
    N: NormalSubgroupGens, budget: SearchBudget | None = None
) -> VerificationResult:
    """Check g n g⁻¹ ∈ N for every vertex generator g^±1 and generator n."""
    budget = budget or SearchBudget()
    conjugates = (
        conjugate_by(n, g) for g in _vertex_generators(N.graph) for n in N.gens
    )
    result = _verify_all(N, conjugates, budget)
    logger.info("normality: {} after {} checks", result.status.value, result.checks)
    return result


def verify_abelian_quotient(
    N: NormalSubgroupGens, budget: SearchBudget | None = None
) -> VerificationResult:
    """Check [g_u, g_v] ∈ N for all non-adjacent u, v.

    For normal N, VERIFIED means [𝒢,𝒢] ≤ N, so 𝒢/N is the abelian group
    described by ``induced_character``'s quotient.
    """
    budget = budget or SearchBudget()
    g = N.graph
    commutators = (
        commutator(Word.generator(g, u), Word.generator(g, v))
        for u, v in combinations(g.vertices, 2)
        if not g.adjacent(u, v)
    )
    return _verify_all(N, commutators, budget)


def verify_central(
    N: NormalSubgroupGens, h: Word, budget: SearchBudget | None = None
) -> CentralityResult:
    """Whether hN is central in 𝒢/N, via [h, g_v] ∈ N for every vertex v."""
    budget = budget or SearchBudget()
    unknown = False
    for v in N.graph.vertices:
        c = commutator(h, Word.generator(N.graph, v))
        match membership(N, c, budget).verdict:
            case Membership.NOT_IN:
                return CentralityResult(Centrality.NOT, c)
            case Membership.UNKNOWN:
                unknown = True
    return CentralityResult(Centrality.UNKNOWN if unknown else Centrality.CENTRAL_MOD_N)


def _group_name(g: SimplicialGraph, vertices: tuple[str, ...]) -> str:
    if not vertices:
        return "1"
    sub = g.induced_subgraph(vertices)
    names = ",".join(vertices)
    complete = len(sub.edges) == len(vertices) * (len(vertices) - 1) // 2
    if sub.kind is GroupKind.RAAG and complete:
        return "Z" if len(vertices) == 1 else f"Z^{len(vertices)}"
    if sub.kind is GroupKind.RAAG and not sub.edges:
        return f"F({names})"
    return f"G({names})"


def _split_form(N: NormalSubgroupGens, decomposition: JoinDecomposition) -> SplitForm:
    g = N.graph
    central = g.ordered(decomposition.central)
    rest = g.ordered(v for factor in decomposition.non_central for v in factor)
    positions = [g.index(v) for v in central]
    inside = [gen for gen in N.gens if gen.support <= decomposition.central]
    central_quotient = quotient_structure(
        tuple(g.moduli[i] for i in positions),
        [tuple(abelianize(gen)[i] for i in positions) for gen in inside],
    )
    projected = tuple(
        p for p in (project(gen, rest) for gen in N.gens) if not p.is_identity
    )
    exact = len(inside) == len(N.gens)

    parts = []
    if central:
        described = central_quotient.describe()
        parts.append(described if exact else f"quotient of {described}")
    non_central = _group_name(g, rest)
    if projected and rest:
        non_central += "/<<p(N)>>"
    if rest or not parts:
        parts.append(non_central)
    return SplitForm(
        central, central_quotient, exact, rest, projected, " x ".join(parts)
    )


def quotient_report(
    N: NormalSubgroupGens, budget: FullnessBudget | None = None
) -> QuotientReport:
    """Fullness, induced character and the guaranteed shape of 𝒢/N."""
    budget = budget or FullnessBudget()
    g = N.graph
    decomposition = join_factors(g)
    fullness = fullness_check(N, budget)
    induced = induced_character(N)
    normal = N.normality in _ACCEPTED
    all_full = all(e.status is Fullness.FULL for e in fullness)

    guarantees = ["N <= ker chi (verified on every generator)"]
    if not normal:
        guarantees.append(
            f"normality {N.normality.value}: structural guarantees withheld"
        )
    if all_full and normal:
        guarantees.append("G/N is abelian-by-finite and finite-by-abelian")
        guarantees.append("N has finite index in ker chi (N commensurable with ker chi)")
        if induced.rank == 0:
            guarantees.append("finite quotient (guaranteed if N full and normal)")
        else:
            virt = "Z" if induced.rank == 1 else f"Z^{induced.rank}"
            guarantees.append(f"G/N is virtually {virt}")
        if not g.edges and len(g) >= 2:
            guarantees.append("N has finite index in G (free product of cyclic groups)")
    for entry in fullness:
        if entry.status is Fullness.UNKNOWN:
            guarantees.append(
                f"fullness undecided for {g.render_subset(entry.factor)}: "
                "guarantees conditional on fullness"
            )
    not_full = any(e.status is Fullness.NOT_FULL for e in fullness)
    split = None
    if not_full or decomposition.central:
        split = _split_form(N, decomposition)
    if not_full and normal:
        guarantees.append(f"G/N = {split.rendered} (split over the central factor)")
        if g.kind in (GroupKind.RAAG, GroupKind.RACG):
            guarantees.append(f"G/N is virtually a {g.kind.value}")

    hypothesis = tuple(
        f"{v}: cyclic of order {'inf' if g.order(v) == INFINITE else g.order(v)}"
        for v in g.ordered(decomposition.central)
    )
    logger.info("quotient report assembled: rank {}, torsion {}", induced.rank, induced.torsion)
    return QuotientReport(
        graph=g,
        normality=N.normality,
        decomposition=decomposition,
        fullness=fullness,
        character=induced.character,
        rank=induced.rank,
        torsion=induced.torsion,
        guarantees=tuple(guarantees),
        central_hypothesis=hypothesis,
        split_form=split,
        fullness_budget=budget,
    )


def finiteness_of_N(
    N: NormalSubgroupGens,
    n: int,
    budget: FullnessBudget | None = None,
    tietze: TietzeBudget | None = None,
) -> SubgroupFiniteness:
    """FP_n / F_n of N through ker χ, which contains N with finite index.

    Raises:
        NotNormalInputError: If normality is FAILED or UNKNOWN.
        NotFullInputError: If some factor is not certified FULL.
    """
    if N.normality not in _ACCEPTED:
        msg = f"normality is {N.normality.value}; ASSERTED or VERIFIED is required"
        raise errors.NotNormalInputError(msg)
    fullness = fullness_check(N, budget)
    failing = [e for e in fullness if e.status is not Fullness.FULL]
    if failing:
        names = ", ".join(
            f"{N.graph.render_subset(e.factor)} {e.status.value}" for e in failing
        )
        raise errors.NotFullInputError(f"N is not certified full: {names}")
    conditional = N.normality is not Normality.VERIFIED
    induced = induced_character(N)
    if induced.rank == 0:
        note = "G/N is finite: N has finite index in G and is of type F_infinity"
        return SubgroupFiniteness(n, Answer.YES, Answer.YES, conditional, note)
    verdict = kernel_finiteness(induced.character, n, tietze)
    note = "conditional on N full and normal: N has finite index in ker chi"
    return SubgroupFiniteness(n, verdict.fp, verdict.f, conditional, note)

"""Graph products of cyclic groups: words, normal subgroups and finiteness."""

__all__ = (
    "Answer",
    "Centrality",
    "Character",
    "CommandRequest",
    "DeadSetFamily",
    "FinitenessVerdict",
    "Fullness",
    "FullnessBudget",
    "HomologyProfile",
    "IntMatrix",
    "JoinDecomposition",
    "LatticeQuotient",
    "Membership",
    "MembershipResult",
    "NormalForm",
    "NormalSubgroupGens",
    "Normality",
    "QuotientReport",
    "SearchBudget",
    "SimplicialComplex",
    "SimplicialGraph",
    "SmithForm",
    "TietzeBudget",
    "Word",
    "abelianize",
    "commutator",
    "complement",
    "conjugate_by",
    "cyclic_reduce",
    "equal",
    "errors",
    "finiteness_of_N",
    "flag_complex",
    "fullness_check",
    "induced_character",
    "is_acyclic_dominating",
    "is_conjugate",
    "is_connected",
    "is_connected_dominating",
    "is_k_acyclic",
    "is_simply_connected",
    "join_factors",
    "kernel_finiteness",
    "lattice_member",
    "link",
    "living_subcomplex",
    "main",
    "membership",
    "multiply",
    "normal_form",
    "parse_graph",
    "project",
    "quotient_report",
    "quotient_structure",
    "read_graph",
    "realizable_dead_sets",
    "records",
    "reduced_homology",
    "run",
    "sigma1_contains",
    "smith_normal_form",
    "star",
    "verify_abelian_quotient",
    "verify_central",
    "verify_normality",
)

from loguru import logger

from graphprod_py._types import errors, records
from graphprod_py._types.complex import SimplicialComplex
from graphprod_py._types.graph import (
    JoinDecomposition,
    SimplicialGraph,
    complement,
    flag_complex,
    join_factors,
    link,
    star,
)
from graphprod_py._types.lattice import (
    IntMatrix,
    LatticeQuotient,
    SmithForm,
    lattice_member,
    quotient_structure,
    smith_normal_form,
)
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
    cyclic_reduce,
    equal,
    is_conjugate,
    multiply,
    normal_form,
    project,
)
from graphprod_py._homology import (
    HomologyProfile,
    is_connected,
    is_k_acyclic,
    is_simply_connected,
    reduced_homology,
)
from graphprod_py._bnsr import (
    Character,
    DeadSetFamily,
    FinitenessVerdict,
    is_acyclic_dominating,
    is_connected_dominating,
    kernel_finiteness,
    living_subcomplex,
    realizable_dead_sets,
    sigma1_contains,
)
from graphprod_py._quotient import (
    MembershipResult,
    NormalSubgroupGens,
    QuotientReport,
    finiteness_of_N,
    fullness_check,
    induced_character,
    membership,
    quotient_report,
    verify_abelian_quotient,
    verify_central,
    verify_normality,
)
from graphprod_py._parse import parse_graph, read_graph
from graphprod_py._cli import CommandRequest, main, run

logger.disable("graphprod_py")

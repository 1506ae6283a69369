"""Hopf algebras from combinatorial composition and decomposition rules."""

from .errors import (
    BudgetExceeded,
    ConditionNotDeclared,
    EmptyAlphabet,
    HopfForgeError,
    MalformedObject,
    NonTermination,
    NotAMonoid,
    ParseError,
    RecursionBudgetExceeded,
    UnknownInstance,
)
from .freevec import Element, TensorElement, from_multiset, tensor
from .hopfcore import (
    antipode,
    antipode_rec,
    antipode_sum,
    coproduct,
    counit,
    mul,
    project_grade,
)
from .instances import enumerate_basis, make_rule, monoid_rule_from_generators, parse_object
from .multiset import Multiset, mprod, msubset, msum, multiplicity
from .ruledef import CONDITIONS, Rule

__version__ = "0.1.0"

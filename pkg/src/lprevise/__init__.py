"""Answer sets of extended logic programs and revision of program sequences."""

from ._kernel import COMPILED
from .revision import (
    RemainderResult,
    RevisionOutcome,
    RevisionTrace,
    merged_program,
    remainders,
    revise,
    revise_pair,
    revise_sequence,
)
from .semantics import (
    AnswerSetResult,
    AnswerStatus,
    ClosureResult,
    ClosureStatus,
    SEModel,
    answer_sets,
    consequences,
    equivalent,
    is_consistent,
    reduct,
    se_models,
    strongly_equivalent,
)
from .syntax import (
    Literal,
    ParseError,
    Program,
    Rule,
    atoms_of,
    parse_program,
    render_program,
)
from .threeval import (
    ThreeValuedInterpretation,
    canonical_program,
    is_three_valued_answer_set,
    min_reduct,
    three_valued_answer_sets,
)

__version__ = "0.1.0"

"""Plausibility-model abduction toolkit: epistemic model checking, epistemic
actions (observation, conjecture), abductive problem detection and
complexity-based hypothesis ranking."""

from ._core import (  # noqa: F401
    AbducerError,
    AbductiveProblem,
    Formula,
    Model,
    atom,
    belief,
    believes,
    check_solution,
    classify_problem,
    clausal_bits,
    conditional_complexity,
    conjecture,
    detect,
    entails,
    eval,
    f_and,
    f_not,
    f_or,
    generate_candidates,
    implies,
    integrate,
    is_solution,
    knowledge,
    knows,
    lz76_phrases,
    observe,
    parse,
    plain_complexity,
    rank,
    to_minimal_clausal,
    valid_in_model,
)

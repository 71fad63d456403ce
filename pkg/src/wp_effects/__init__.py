"""Programs as free-monad trees for the exception and reader-writer-state
effects, with an operational interpreter, a weakest-precondition obligation
transformer, a contract checker, lenses, and an s-expression front end."""

from .effect_ast import (
    Ask,
    Bail,
    Bind,
    CaseEither,
    CaseMaybe,
    EitherProg,
    Gets,
    IfGuards,
    Put,
    Return,
    RwsProg,
    Tell,
    ap,
    fmap,
    get,
    modify,
)
from .optics import Lens, assign, compose, field, field_path, identity_lens, mk_lens, modifying, use
from .prelude import (
    EQ,
    GT,
    LT,
    CompareEvidence,
    DecEqResult,
    GuardChain,
    Just,
    Left,
    No,
    Nothing,
    Right,
    Yes,
    compare_ev,
    dec_eq,
    eq,
    eval_guards,
    identity,
    list_bind,
    list_return,
    neq,
)
from .semantics import EitherOutcome, RwsOutcome, run_either, run_rws
from .sweep import (
    Predicate,
    SweepResult,
    SweepViolation,
    either_predicate_pool,
    either_programs,
    rws_predicate_pool,
    rws_programs,
    sweep_either_contract,
    sweep_rws_contract,
)
from .wp import (
    Atom,
    Conj,
    ContractReport,
    EvalResult,
    ForallAlias,
    Implies,
    LeafReport,
    Obligation,
    Postcondition,
    check_contract_either,
    check_contract_rws,
    eval_obligation,
    wp_either,
    wp_rws,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""
Procedures Package
Every command-line decision procedure, registered by subcommand name
"""
from .base import BaseProcedure, LOADERS, Outcome, ProcedureRegistry
from .conditions import CombineProcedure, QnuProcedure, SigmaProcedure, TrivialProcedure
from .graphs import Color3Procedure, CriticalProcedure, CssProcedure, HomProcedure
from .indicator import FGraphProcedure, MinionProcedure, QnuCheckProcedure, SatisfiesProcedure
from .chains import (
    ChainGlueProcedure,
    ChainTensorProcedure,
    GadgetSearchProcedure,
    GadgetVerifyProcedure,
    GlueProcedure,
    GrowthProcedure,
    SigmaPermProcedure,
)


def default_registry() -> ProcedureRegistry:
    registry = ProcedureRegistry()
    for procedure in (
        SigmaProcedure(),
        QnuProcedure(),
        TrivialProcedure(),
        CombineProcedure(),
        HomProcedure(),
        Color3Procedure(),
        SatisfiesProcedure(),
        FGraphProcedure(),
        MinionProcedure(),
        QnuCheckProcedure(),
        ChainTensorProcedure(),
        ChainGlueProcedure(),
        CriticalProcedure(),
        GadgetVerifyProcedure(),
        GadgetSearchProcedure(),
        GlueProcedure(),
        SigmaPermProcedure(),
        CssProcedure(),
        GrowthProcedure(),
    ):
        registry.register(procedure)
    return registry


__all__ = [
    "BaseProcedure",
    "LOADERS",
    "Outcome",
    "ProcedureRegistry",
    "default_registry",
]

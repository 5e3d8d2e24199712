from dataclasses import asdict, dataclass

from app.modules.basis1d import check_criteria_1d
from app.modules.basis2d import check_commutativity, check_injectivity_2d, check_intersection_condition
from app.modules.criteria import CriteriaReport
from app.modules.pmod import Module1D
from app.schemas import modules as schemas
from app.services.base import PersistenceModuleBase


@dataclass
class ModuleCheck(PersistenceModuleBase):
    """
    A class for running the freeness criteria on a module and reporting every cell verdict.

    Args:
        document (Text): The module document.
    """

    def run_checks(self) -> list[CriteriaReport]:
        """
        Run the criteria in their fixed order: injectivity for Z; commutativity, injectivity, intersection for Z^2.

        Returns:
            list[CriteriaReport]: One report per check.
        """
        if isinstance(self.module, Module1D):
            return [check_criteria_1d(self.module)]
        return [
            check_commutativity(self.module),
            check_injectivity_2d(self.module),
            check_intersection_condition(self.module),
        ]

    def get_check(self) -> dict:
        """
        Retrieve the criteria report of the module.

        Returns:
            dict: The verdicts per check, whether all passed, and the first failure in check order.
        """
        reports = self.run_checks()
        failing = next((report for report in reports if not report.passed), None)

        self.response["index"] = self.index
        self.response["passed"] = failing is None
        self.response["failure"] = str(failing.as_error()) if failing else None
        self.response["checks"] = [
            {
                "check": report.check.value,
                "passed": report.passed,
                "reliable": report.reliable,
                "cells": [asdict(verdict) for verdict in report.verdicts],
                "notes": list(report.notes),
            }
            for report in reports
        ]
        return self.validated(schemas.ModuleCheck)

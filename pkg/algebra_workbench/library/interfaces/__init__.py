from .IDeductionFamily import IDeductionFamily
from .ITranslation import ITranslation

__all__ = ["IDeductionFamily", "ITranslation"]

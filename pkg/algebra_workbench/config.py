import os
from dataclasses import dataclass, replace
from typing import Mapping

from . import constants as const
from .errors import CapExceeded, InvalidParameter

POLICIES = ("least", "all", "file")
OUTPUT_FORMATS = ("text", "records")


@dataclass(frozen=True)
class RunConfig:
    """Settings of one workbench run: built-in defaults, then the environment, then flags."""
    catalog: str = const.DEFAULT_CATALOG_DIR
    policy: str = "least"
    output: str = "text"
    congruence_cap: int = const.DEFAULT_CONGRUENCE_CAP
    lattice_cap: int = const.MAX_LATTICE_SIZE
    fl_cap: int = const.DEFAULT_FL_CAP
    modal_cap: int = const.DEFAULT_MODAL_CAP
    seed: int = const.DEFAULT_SEED
    jobs: int = 1
    verbose: bool = False

    def __post_init__(self) -> None:
        self._check_caps()
        if self.policy not in POLICIES:
            raise InvalidParameter(f"designation policy must be one of {POLICIES}, got {self.policy!r}")
        if self.output not in OUTPUT_FORMATS:
            raise InvalidParameter(f"output format must be one of {OUTPUT_FORMATS}, got {self.output!r}")
        if self.jobs < 1:
            raise InvalidParameter("jobs must be at least 1")

    def _check_caps(self) -> None:
        if not 1 <= self.congruence_cap <= const.MAX_CONGRUENCE_CAP:
            raise CapExceeded(f"congruence cap must lie in 1..{const.MAX_CONGRUENCE_CAP}, got {self.congruence_cap}")
        if not 1 <= self.lattice_cap <= const.MAX_LATTICE_SIZE:
            raise CapExceeded(f"lattice cap must lie in 1..{const.MAX_LATTICE_SIZE}, got {self.lattice_cap}")
        if not 1 <= self.fl_cap <= const.MAX_LATTICE_SIZE:
            raise CapExceeded(f"FL search cap must lie in 1..{const.MAX_LATTICE_SIZE}, got {self.fl_cap}")
        if not 1 <= self.modal_cap <= const.DEFAULT_MODAL_CAP:
            raise CapExceeded(f"modal search cap must lie in 1..{const.DEFAULT_MODAL_CAP}, got {self.modal_cap}")

    @classmethod
    def from_environment(cls, environ: Mapping[str, str] | None = None) -> "RunConfig":
        environ = os.environ if environ is None else environ
        config = cls()
        if environ.get(const.CATALOG_ENV):
            config = replace(config, catalog=environ[const.CATALOG_ENV])
        if environ.get(const.SEED_ENV):
            try:
                config = replace(config, seed=int(environ[const.SEED_ENV]))
            except ValueError:
                raise InvalidParameter(f"{const.SEED_ENV} must be an integer") from None
        return config

    def with_flags(self, **flags: object) -> "RunConfig":
        """Override with every flag that was given; None means the flag was absent."""
        given = {key: value for key, value in flags.items() if value is not None}
        return replace(self, **given)


def resolve(environ: Mapping[str, str] | None = None, **flags: object) -> RunConfig:
    return RunConfig.from_environment(environ).with_flags(**flags)

"""Application controller - dispatches one command request to the engines."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

from ..catalog.builtins import covering_bound
from ..config import AppConfig
from ..repcore.algebra import AlgebraSpec, load_algebra, parse_dimension_vector
from ..repcore.homs import is_brick
from ..repcore.limits import Limits
from ..rendering import reports
from ..rendering.pdf_renderer import PDFRenderer
from ..rendering.scene import plane_scene, slice_scene
from ..rendering.svg_renderer import SVGRenderer
from ..stability.functions import StabilityFunction
from ..stability.parser import parse_stability
from ..stability.phase import format_rational, parse_phase, parse_rational
from ..stability.semistability import hn_filtration, king_semistable
from ..torsion.classes import torsion_pair_at
from ..torsion.sequences import chain_of_torsion_classes, verify_mgs
from ..torsion.universe import ModuleUniverse
from ..wallchamber.chambers import chamber_torsion_classes, chambers_rank2
from ..wallchamber.cones import enumerate_walls, sample_cone_agreement
from ..wallchamber.paths import (induced_stability, load_path, validate_red_path)
from .error_handler import EXIT_OK, ErrorHandler, error_payload
from .exceptions import RankUnsupported, ValidationError
from .validation import InputValidator

if TYPE_CHECKING:
    from ..config import ConfigurationManager


@dataclass
class CommandRequest:
    """One batch invocation: a subcommand and its inputs."""

    subcommand: str
    algebra: Optional[str] = None
    bound: Optional[str] = None
    stability: Optional[str] = None
    path: Optional[str] = None
    theta: Optional[str] = None
    phase: Optional[str] = None
    module: Optional[str] = None
    out: Optional[str] = None
    format: str = "json"
    seed: int = 0
    prime: Optional[int] = None


@dataclass
class CommandResult:
    """Exit status, the JSON document (or SVG text) and any files written."""

    exit_status: int
    document: Dict[str, Any] = field(default_factory=dict)
    svg: Optional[str] = None
    artifacts: List[str] = field(default_factory=list)

    @property
    def succeeded(self) -> bool:
        return self.exit_status == EXIT_OK

    def output_text(self) -> str:
        return self.svg if self.svg is not None else reports.to_json(self.document)


class ApplicationController:
    """Runs command requests against the computation engines."""

    def __init__(self, config_manager: "ConfigurationManager",
                 error_handler: Optional[ErrorHandler] = None,
                 validator: Optional[InputValidator] = None):
        """Initialize application controller.

        Args:
            config_manager: Configuration manager instance
            error_handler: Error handler instance (optional)
            validator: Request validator (optional)
        """
        self.logger = logging.getLogger(__name__)
        self.config_manager = config_manager
        self.error_handler = error_handler
        self.validator = validator or InputValidator()

    def run(self, request: CommandRequest) -> CommandResult:
        """Validate, compute and serialize one request.

        Output files named by ``request.out`` are written here; the caller
        prints ``output_text()`` when no ``--out`` was given.

        Returns:
            CommandResult: exit status 0 on success, 1 on domain errors and
            2 on malformed input, with an ``error`` document on failure.
        """
        try:
            self.validator.validate_request(request).raise_for_errors()
            config = self.config_manager.get_config()
            limits = config.to_limits()
            algebra = load_algebra(request.algebra,
                                   p=request.prime if request.prime is not None else config.prime)
            handler = getattr(self, f"_run_{request.subcommand}")
            self.logger.info(f"Running {request.subcommand} on {algebra.name or request.algebra}")
            result = handler(request, algebra, config, limits)
            self._write_output(request, result)
            return result
        except Exception as e:
            if self.error_handler is not None:
                payload = self.error_handler.handle_error(e, context=request.subcommand)
            else:
                self.logger.exception(f"{request.subcommand} failed")
                payload = error_payload(e)
            return CommandResult(ErrorHandler.exit_status(e), reports.error_document(payload))

    def _write_output(self, request: CommandRequest, result: CommandResult) -> None:
        if not request.out or request.format == "pdf":
            return
        out = Path(request.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(result.output_text(), encoding="utf-8")
        result.artifacts.append(str(out))
        self.logger.info(f"Wrote {out}")

    # Inputs

    def _bound(self, request: CommandRequest, algebra: AlgebraSpec) -> Tuple[int, ...]:
        if request.bound:
            bound = parse_dimension_vector(request.bound)
        else:
            bound = covering_bound(algebra)
            if bound is None:
                raise ValidationError(f"'{request.subcommand}' needs --bound for this algebra",
                                      field="bound")
            self.logger.debug(f"Using covering bound {bound}")
        self.validator.validate_bound(bound, algebra.n).raise_for_errors()
        return tuple(bound)

    def _universe(self, request: CommandRequest, algebra: AlgebraSpec,
                  limits: Limits) -> ModuleUniverse:
        return ModuleUniverse(algebra, self._bound(request, algebra), limits)

    def _stability(self, request: CommandRequest, algebra: AlgebraSpec,
                   U: ModuleUniverse, limits: Limits) -> StabilityFunction:
        if request.stability:
            return parse_stability(request.stability, algebra, universe=U, limits=limits)
        return induced_stability(load_path(request.path, algebra.n), U)

    def _theta(self, request: CommandRequest, algebra: AlgebraSpec) -> Tuple:
        theta = tuple(parse_rational(part) for part in request.theta.split(","))
        if len(theta) != algebra.n:
            raise ValidationError(f"theta needs {algebra.n} entries, got {len(theta)}",
                                  field="theta", value=request.theta)
        return theta

    # Subcommands

    def _run_indec(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        U = self._universe(request, algebra, limits)
        bricks = [is_brick(M, limits) for M in U.indecomposables]
        return CommandResult(EXIT_OK, reports.indec_document(U, bricks))

    def _run_king(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        U = self._universe(request, algebra, limits)
        theta = self._theta(request, algebra)
        statuses = [king_semistable(theta, M, limits) for M in U.indecomposables]
        return CommandResult(EXIT_OK, reports.king_document(U, theta, statuses))

    def _run_hn(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        U = self._universe(request, algebra, limits)
        sf = self._stability(request, algebra, U, limits)
        try:
            M = U.representative(request.module)
        except KeyError:
            raise ValidationError(f"Unknown module id {request.module!r}", field="module",
                                  value=request.module)
        filtration = hn_filtration(sf, M, limits)
        return CommandResult(EXIT_OK, reports.hn_document(U, sf, request.module, filtration))

    def _run_torsion(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        U = self._universe(request, algebra, limits)
        sf = self._stability(request, algebra, U, limits)
        phase = parse_phase(request.phase)
        torsion, torsion_free = torsion_pair_at(sf, phase, U)
        return CommandResult(EXIT_OK,
                             reports.torsion_document(U, sf, phase, torsion, torsion_free))

    def _run_chain(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        U = self._universe(request, algebra, limits)
        sf = self._stability(request, algebra, U, limits)
        chain = chain_of_torsion_classes(sf, U, config.max_workers)
        return CommandResult(EXIT_OK, reports.chain_document(U, sf, chain))

    def _run_mgs(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        U = self._universe(request, algebra, limits)
        sf = self._stability(request, algebra, U, limits)
        report = verify_mgs(chain_of_torsion_classes(sf, U, config.max_workers), sf, U)
        return CommandResult(EXIT_OK, reports.mgs_document(U, sf, report))

    def _run_walls(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        U = self._universe(request, algebra, limits)
        walls = enumerate_walls(algebra, U.bound, limits, U.indecomposables)
        document = reports.walls_document(U, walls)
        if config.random_theta_samples:
            disagreements = {}
            for name, M in zip(U.ids, U.indecomposables):
                found = sample_cone_agreement(M, config.random_theta_samples, request.seed,
                                              limits)
                if found:
                    disagreements[name] = [[format_rational(v) for v in t] for t in found]
            document["seed"] = request.seed
            document["sampled_disagreements"] = disagreements
        return CommandResult(EXIT_OK, document)

    def _run_chambers(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        if algebra.n != 2:
            raise RankUnsupported("Chamber enumeration is exact only for two vertices",
                                  rank=algebra.n)
        U = self._universe(request, algebra, limits)
        walls = enumerate_walls(algebra, U.bound, limits, U.indecomposables)
        chambers = chambers_rank2(walls)
        labels = chamber_torsion_classes(chambers, U)
        return CommandResult(EXIT_OK, reports.chambers_document(U, chambers, labels))

    def _run_path(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        U = self._universe(request, algebra, limits)
        path = load_path(request.path, algebra.n)
        report = validate_red_path(path, U)
        mgs = None
        if report.valid:
            sf = induced_stability(path, U)
            mgs = verify_mgs(chain_of_torsion_classes(sf, U, config.max_workers), sf, U)
        return CommandResult(EXIT_OK, reports.path_document(U, path, report, mgs))

    def _run_render(self, request, algebra, config: AppConfig, limits) -> CommandResult:
        if algebra.n not in (2, 3):
            raise RankUnsupported("Rendering needs two or three vertices", rank=algebra.n)
        U = self._universe(request, algebra, limits)
        walls = enumerate_walls(algebra, U.bound, limits, U.indecomposables)
        if algebra.n == 2:
            path = report = None
            if request.path:
                path = load_path(request.path, algebra.n)
                report = validate_red_path(path, U)
            scene = plane_scene(walls, chambers_rank2(walls), path, report)
        else:
            scene = slice_scene(walls)

        if request.format == "pdf":
            written = PDFRenderer(config.svg_size).render(scene, request.out)
            document = {"command": "render", "format": "pdf", "output": str(written),
                        "exact": scene.exact, "walls": len(walls)}
            return CommandResult(EXIT_OK, document, artifacts=[str(written)])
        svg = SVGRenderer(config.svg_size, config.decimal_places).render(scene)
        document = {"command": "render", "format": "svg", "exact": scene.exact,
                    "walls": len(walls)}
        return CommandResult(EXIT_OK, document, svg=svg)

"""Property probes evaluated on generated and user-supplied instances."""
from .core import INCONCLUSIVE, OUTCOMES, PREMISE_FAILED, REFUTED, VERIFIED, Case, Context
from .instances import RandomParams, catalog_instances, catalog_ring, random_instance
from .probes import Probe, get_probe, probe_catalog
from .runner import Bounds, Report, run_suite

__all__ = ["INCONCLUSIVE", "OUTCOMES", "PREMISE_FAILED", "REFUTED", "VERIFIED", "Case", "Context",
           "RandomParams", "catalog_instances", "catalog_ring", "random_instance", "Probe",
           "get_probe", "probe_catalog", "Bounds", "Report", "run_suite"]

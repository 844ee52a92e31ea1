
from neurotrade.controllers.pipeline_controller import PipelineController, RunSummary


__all__ = [
    'PipelineController',
    'RunSummary',
]

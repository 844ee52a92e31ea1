"""Service layer for the trading-signal pipeline."""

from neurotrade.services.pipeline_service_base import PipelineServiceBase
from neurotrade.services.pipeline_service_ingest import PipelineServiceIngestMixin
from neurotrade.services.pipeline_service_prepare import PipelineServicePrepareMixin
from neurotrade.services.pipeline_service_training import PipelineServiceTrainingMixin
from neurotrade.services.pipeline_service_backtest import PipelineServiceBacktestMixin
from neurotrade.services.pipeline_service_evaluate import PipelineServiceEvaluateMixin, PipelineServiceReportMixin


class PipelineService(
    PipelineServiceBase,
    PipelineServiceIngestMixin,
    PipelineServicePrepareMixin,
    PipelineServiceTrainingMixin,
    PipelineServiceBacktestMixin,
    PipelineServiceEvaluateMixin,
    PipelineServiceReportMixin,
):
    pass

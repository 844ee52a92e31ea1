"""Pure domain operations (one module per pipeline phase) and the stage
orchestration built on them. `PipelineService` lives in
`neurotrade.services.pipeline_service`; it is not re-exported here because the
repositories import the pure modules of this package."""

"""Repository layer for pipeline artifacts (one directory per ticker under the output root)."""

from neurotrade.repositories.artifact_repo_base import ArtifactRepositoryBase
from neurotrade.repositories.artifact_repo_market import ArtifactRepositoryMarketMixin
from neurotrade.repositories.artifact_repo_dataset import ArtifactRepositoryDatasetMixin
from neurotrade.repositories.artifact_repo_model import ArtifactRepositoryModelMixin
from neurotrade.repositories.artifact_repo_results import ArtifactRepositoryResultsMixin


class ArtifactRepository(
    ArtifactRepositoryBase,
    ArtifactRepositoryMarketMixin,
    ArtifactRepositoryDatasetMixin,
    ArtifactRepositoryModelMixin,
    ArtifactRepositoryResultsMixin,
):
    pass

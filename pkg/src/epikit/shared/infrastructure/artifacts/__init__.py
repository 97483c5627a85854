from epikit.shared.infrastructure.artifacts.artifact_writer import ArtifactWriter

__all__ = ["ArtifactWriter"]

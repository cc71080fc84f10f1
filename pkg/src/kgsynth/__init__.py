"""kgsynth: build an API knowledge graph from documentation and synthesize
question-code fine-tuning data guided by uncertainty-driven tree search."""

__version__ = "0.1.0"

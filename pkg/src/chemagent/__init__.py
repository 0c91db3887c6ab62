"""chemagent: cheminformatics tools behind a ReAct-style LLM agent.

Layers, bottom up: ``molkit`` (SMILES/SMARTS kernel), ``descriptors``
(property calculators and filters), ``toolbox`` (the named agent tools),
``agent`` (prompting, parsing, and the tool-use loop), ``benchmark``
(question generation, scoring, reports), and ``app`` (CLI + HTTP service).
"""

__version__ = "0.1.0"

from .molkit import parse_smiles, write_smiles  # noqa: F401

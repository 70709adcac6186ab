"""Path contractions of H-free graphs: exact oracles, class solvers, gadgets and classifiers."""

from .graph import Graph, GraphError, NotConnected, NotInClass
from .witness import oracle_contracts_to, oracle_longest_path_contraction, oracle_suitable_pair, verify_witness
from .contract import longest_path_contractibility, suitability

__version__ = "0.1.0"

"""Exact minimum cuts via bounded-priority CAPFOREST scans and graph contraction."""
from .bound import BoundResult, LabelPropagationConfig, inexact_bound, label_propagation, min_degree_bound
from .capforest import ScanResult, capforest, q_lower_bounds
from .contraction import ContractionResult, contract, heavy_pair_accumulate
from .driver import CutResult, DriverConfig, exact_mincut, recover_partition
from .errors import ContractError, InputError, WeightOverflowError
from .graph import (Graph, VertexMap, build_graph, build_graph_arrays, connected_components,
                    cut_weight, k_core, largest_connected_component, min_degree_vertex)
from .io import load_graph, read_edge_list, read_metis, write_edge_list, write_metis
from .parallel_scan import DeterministicScheduler, lambda_from_alpha, parallel_capforest
from .pqueues import QUEUE_KINDS, BottomUpHeap, BQueue, BStack, make_queue
from .union_find import ConcurrentUnionFind, UnionFind

__version__ = "0.1.0"

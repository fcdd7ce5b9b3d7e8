"""Lights-out games on graphs: the neighbourhood (N,m) game and the Z_m group-labeling game."""

from .graph import Graph, GraphError, build_family, complete_bipartite, cycle, enumerate_connected_graphs, parse_edge_list, path
from .group import (
    StateCapExceeded,
    WinnableSet,
    halve_even,
    is_aw_group,
    is_winnable_group,
    parity_projection,
    replay,
    toggle_group,
    win_sequence_bfs,
    winnable_set,
)
from .labeling import Labeling, LabelingError
from .nbd import (
    apply_counts,
    cycle_aw_n2,
    is_aw_nbd,
    is_winnable_nbd,
    knp_aw_formula,
    neighborhood_matrix,
    path_aw_n2,
    solve_nbd,
    toggle_nbd,
)
from .strategies import (
    StrategyError,
    StrategyResult,
    clear_tail_cycle,
    clear_tail_path,
    lift_strategy_2k,
    standard_form_bipartite,
    win_bipartite_z2,
    win_cycle_z2,
    win_path_z2,
)

__version__ = "0.1.0"

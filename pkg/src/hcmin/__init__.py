"""Local harmonic centrality minimization on directed graphs.

Given a digraph, a target vertex and a budget b, pick at most b of the
target's incoming edges whose removal minimizes the target's harmonic
centrality. The package provides exact, greedy, ranking-based and
relaxation-based solvers plus an experiment harness and CLI.
"""

from .baselines import (clamped_budget, degree_baseline, empty_baseline,
                        greedy, random_baseline)
from .centrality import (UNREACHABLE, distances_to, harmonic, objective,
                         residual_scores)
from .digraph import (DiGraph, EdgeSubset, GraphView, ParseError, ParseStats,
                      as_view, load_edge_list, parse_edge_list, restrict,
                      to_edge_list_text)
from .harness import (ALGORITHMS, KUnionInstance, ResultRecord, RESULTS_FIELDS,
                      WorkCapExceeded, brute_force_opt,
                      gadget_greedy_adversarial, gadget_kunion,
                      gadget_topb_adversarial, run_experiment, select_targets,
                      write_results_csv)
from .relaxation import (BudgetedBox, PsmConfig, PsmTrace, RATE_CONSTANT,
                         bicriteria_solve, iterations_for_error,
                         lovasz_subgradient, lovasz_value, project_box,
                         project_budgeted_box, psm_minimize, round_solution,
                         suboptimality_bound)
from .scalable import rank_neighbors, top_b_cut

__version__ = "0.1.0"

#ifndef TREESQ_REPORT_HPP
#define TREESQ_REPORT_HPP

#include "treesq/graph.hpp"
#include "treesq/invariants.hpp"

namespace treesq {

// Invariants via the Betti oracle: depth/pd/reg from the graded table,
// dim/bight/indmat/d' from exact search. Works for any connected graph with
// at least one edge within the oracle cap.
InvariantReport oracle_report(const Graph& g);

// chordal_report when the graph is chordal, oracle_report otherwise.
InvariantReport auto_report(const Graph& g);

} // namespace treesq

#endif

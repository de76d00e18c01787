#include "treesq/report.hpp"

#include "treesq/chordal.hpp"
#include "treesq/errors.hpp"
#include "treesq/hochster.hpp"

namespace treesq {

InvariantReport oracle_report(const Graph& g) {
    if (g.edge_count() == 0) throw InvalidInputError("oracle_report: edgeless graph (zero ideal)");
    BettiTable table = hochster_betti(g);
    RegPdDepth rpd = reg_pd_depth(table, g.vertex_count());
    InvariantReport rep;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.dim = max_independent_set(g).size;
    rep.dim_src = Provenance::search;
    rep.indmat = induced_matching_number(g).size;
    rep.indmat_src = Provenance::search;
    rep.d_prime = d_prime(g).size;
    rep.dprime_src = Provenance::search;
    rep.bight = bight(g);
    rep.bight_src = Provenance::search;
    rep.reg = rpd.reg;
    rep.reg_src = Provenance::oracle;
    rep.projdim_si = rpd.projdim;
    rep.pd_src = Provenance::oracle;
    rep.depth = rpd.depth;
    rep.depth_src = Provenance::oracle;
    rep.linear_resolution = (rep.reg == 1);
    if (rep.reg < rep.indmat)
        throw std::logic_error("oracle_report: reg below induced matching number");
    return rep;
}

InvariantReport auto_report(const Graph& g) {
    if (is_chordal(g) && is_connected(g) && g.edge_count() > 0) return chordal_report(g);
    return oracle_report(g);
}

} // namespace treesq

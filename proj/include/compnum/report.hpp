#pragma once

// JSON views of covers, realizations, certificates, bounds and sweeps.

#include <compnum/bounds.hpp>
#include <compnum/constructions.hpp>
#include <compnum/ecc.hpp>
#include <compnum/realizer.hpp>
#include <compnum/sweep.hpp>

#include <nlohmann/json.hpp>

namespace compnum {

using nlohmann::json;

inline json clique_json(Clique c) { return c.members(); }

inline json cliques_json(const std::vector<Clique> & cs)
{
    json out = json::array();
    for (Clique c : cs)
        out.push_back(clique_json(c));
    return out;
}

inline json arcs_json(const std::vector<Arc> & arcs)
{
    json out = json::array();
    for (auto [u, v] : arcs)
        out.push_back({u, v});
    return out;
}

inline json cover_json(const CliqueCover & c)
{
    return {{"theta_e", c.size()}, {"cliques", cliques_json(c.cliques)}, {"maximal", c.all_maximal}};
}

/// Reads the "cliques" array of a cover report.
inline std::vector<Clique> cliques_from_json(const json & j)
{
    const json & arr = j.is_object() ? j.at("cliques") : j;
    std::vector<Clique> out;
    for (const auto & c : arr) {
        Clique k;
        for (int v : c) {
            if (v < 0 || v >= kMaxVertices)
                throw ParseError("cover: vertex index out of range");
            k.insert(v);
        }
        out.push_back(k);
    }
    return out;
}

inline json sink_map_json(const std::vector<SinkAssignment> & sinks)
{
    json out = json::array();
    for (const auto & s : sinks)
        out.push_back({{"clique", clique_json(s.clique)}, {"sink", s.sink}});
    return out;
}

inline json realization_json(const Realization & r)
{
    return {{"k", r.k},
            {"prey", r.prey_count},
            {"predators", r.predator_count},
            {"witness_arcs", arcs_json(r.digraph.arcs())},
            {"labeling", r.labeling.labels()},
            {"sink_map", sink_map_json(r.sink_map)}};
}

inline json indices_json(const ExactIndices & ex, bool witness)
{
    json out{{"k", ex.k}, {"p", ex.p}, {"prey", ex.min_prey}};
    if (witness)
        out["witness_arcs"] = arcs_json(ex.witness.digraph.arcs());
    return out;
}

inline json checks_json(const std::vector<NamedCheck> & checks)
{
    json out = json::object();
    for (const auto & c : checks)
        out[c.name] = c.passed;
    return out;
}

inline json certificate_json(const EffectiveCoverCertificate & cert)
{
    json out{{"valid", cert.valid()}, {"checks", checks_json(cert.checks)}, {"cover", cover_json(cert.cover)}};
    if (auto f = cert.failure())
        out["failure"] = *f;
    if (!cert.sinks.empty())
        out["sinks"] = cert.sinks;
    return out;
}

inline json hall_json(const HallCertificate & h)
{
    json sets = json::array();
    for (auto s : h.sets)
        sets.push_back(s.members());
    return {{"sets", sets}, {"matching", h.matched}};
}

inline json bounds_json(const BoundsReport & r)
{
    json out{{"n", r.n},
             {"edges", r.edges},
             {"theta_e", r.theta_e},
             {"opsut", r.opsut},
             {"opsut_usable", std::max(0, r.opsut)},
             {"occupied_condition", r.occupied_condition}};
    if (r.exact_k)
        out["k"] = *r.exact_k;
    if (r.exact_p)
        out["p"] = *r.exact_p;
    if (r.predator_bound) {
        out["predator_bound"] = *r.predator_bound;
        out["predator_bound_usable"] = std::max(0, *r.predator_bound);
    }
    if (r.occupied_equality)
        out["occupied_equality"] = *r.occupied_equality;
    if (r.union_tail) {
        out["union_tail"] = {{"variant", "subset-min"},
                             {"per_k", r.union_tail->per_k},
                             {"best_k", r.union_tail->k},
                             {"best", r.union_tail->value}};
    }
    if (r.census)
        out["census"] = {{"c2", (*r.census)[0]}, {"c3", (*r.census)[1]}, {"c4", (*r.census)[2]}};
    if (r.planar) {
        json pf{{"faces", r.planar->faces},
                {"k_formula", r.planar->k_formula},
                {"theta_identity", r.planar->theta_identity}};
        if (r.planar->consistent)
            pf["consistent"] = *r.planar->consistent;
        out["planar"] = pf;
    }
    return out;
}

inline json record_json(const SweepRecord & rec)
{
    json checks = json::object();
    for (const auto & [name, ok] : rec.checks)
        checks[name] = ok;
    json out{{"graph6", rec.graph6},
             {"n", rec.n},
             {"edges", rec.edges},
             {"theta_e", rec.theta_e},
             {"k", rec.k},
             {"p", rec.p},
             {"min_prey", rec.min_prey},
             {"opsut", rec.opsut},
             {"predator_bound", rec.predator_bound},
             {"chordal", rec.chordal},
             {"diamond_free", rec.diamond_free},
             {"occupied_condition", rec.occupied_condition},
             {"effective_status", rec.effective_status},
             {"checks", checks}};
    if (rec.conjecture_equality)
        out["conjecture_equality"] = *rec.conjecture_equality;
    if (!rec.error.empty())
        out["error"] = rec.error;
    return out;
}

inline json sweep_json(const SweepReport & report)
{
    json records = json::array();
    for (const auto & rec : report.records)
        records.push_back(record_json(rec));
    json counts = json::object();
    for (const auto & [name, pf] : report.summary.check_counts)
        counts[name] = {{"passed", pf.first}, {"failed", pf.second}};
    json violations = json::array(), counterexamples = json::array();
    for (int i : report.summary.violations)
        violations.push_back(record_json(report.records[static_cast<std::size_t>(i)]));
    for (int i : report.summary.counterexamples) {
        auto full = record_json(report.records[static_cast<std::size_t>(i)]);
        full["witness_arcs"] = arcs_json(report.records[static_cast<std::size_t>(i)].witness_arcs);
        counterexamples.push_back(full);
    }
    return {{"summary",
             {{"graphs", report.summary.graphs},
              {"checks", counts},
              {"conjecture_tested", report.summary.conjecture_tested},
              {"conjecture_equal", report.summary.conjecture_equal},
              {"violations", violations},
              {"counterexamples", counterexamples}}},
            {"records", records}};
}

} // namespace compnum
